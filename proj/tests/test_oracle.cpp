#include <doctest.h>

#include "deborder/oracle.hpp"
#include "helpers.hpp"

using namespace testing;

namespace {

SylvesterRanks ranks(const RationalPoly& f) { return sylvester_rank(BinaryForm::from_poly(f)); }

}  // namespace

TEST_CASE("sylvester_rank examples") {
  auto a = ranks(poly(2, 3, {{{3, 0}, 1}}));
  CHECK(a.wr == 1);
  CHECK(a.bwr == 1);
  auto b = ranks(poly(2, 3, {{{2, 1}, 1}}));
  CHECK(b.wr == 3);
  CHECK(b.bwr == 2);
  auto c = ranks(poly(2, 3, {{{3, 0}, 1}, {{0, 3}, 1}}));
  CHECK(c.wr == 2);
  CHECK(c.bwr == 2);
  auto xy = ranks(poly(2, 2, {{{1, 1}, 1}}));
  CHECK(xy.wr == 2);
  CHECK(xy.bwr == 2);
  // x^2 + y^2 factors only over the complex numbers; still rank 2
  auto sq = ranks(poly(2, 2, {{{2, 0}, 1}, {{0, 2}, 1}}));
  CHECK(sq.wr == 2);
  CHECK_THROWS(BinaryForm::from_poly(poly(3, 2, {{{2, 0, 0}, 1}})));
}

TEST_CASE("sylvester ranks of monomials") {
  for (unsigned a = 1; a <= 9; ++a)
    for (unsigned b = 1; a + b <= 10; ++b) {
      const auto r = ranks(poly(2, a + b, {{{a, b}, 1}}));
      CHECK(r.wr == std::max(a, b) + 1);
      CHECK(r.bwr == std::min(a, b) + 1);
    }
}

TEST_CASE("sylvester ranks are invariant under coordinate changes") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 15; ++trial) {
    const unsigned d = 2 + rng() % 5;
    const RationalPoly f = random_poly(rng, 2, d, 2);
    if (f.is_zero()) continue;
    RationalMatrix m(2, 2);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) m(i, j) = random_rational(rng, 4);
    if (rank(m) < 2) continue;
    const auto r1 = ranks(f);
    const auto r2 = ranks(substitute_linear(f, m));
    CHECK(r1.wr == r2.wr);
    CHECK(r1.bwr == r2.bwr);
    CHECK(r1.wr >= r1.bwr);
  }
}

TEST_CASE("catalecticant_bound") {
  for (unsigned s = 0; s <= 4; ++s) CHECK(catalecticant_bound(poly(2, 4, {{{4, 0}, 1}}), s) == 1);
  CHECK(catalecticant_bound(poly(2, 3, {{{2, 1}, 1}}), 1) == 2);
  CHECK(catalecticant_bound(poly(3, 2, {{{1, 1, 0}, 1}, {{0, 0, 2}, 1}}), 1) == 3);
  CHECK_THROWS_AS(catalecticant_bound(poly(2, 2, {{{1, 1}, 1}}), 3), PreconditionViolated);
}

TEST_CASE("families verify by construction") {
  for (unsigned d = 3; d <= 10; ++d) {
    const auto t = gen_family({Family::Tangent, d});
    CHECK(verify_border(t.border, t.f));
    CHECK(t.f == poly(2, d, {{{d - 1, 1}, 1}}));
    const auto r = ranks(t.f);
    CHECK(r.wr == d);
    CHECK(r.bwr == 2);
  }
  const auto o = gen_family({Family::Osculating, 4, 1});
  CHECK(o.f == gen_family({Family::Tangent, 4}).f);
  CHECK(o.border == gen_family({Family::Tangent, 4}).border);
  const auto o2 = gen_family({Family::Osculating, 5, 2});
  CHECK(o2.border.rank() == 3);
  CHECK(o2.f == poly(2, 5, {{{3, 2}, 1}}));
  CHECK(verify_border(o2.border, o2.f));
  const auto m = gen_family({Family::Multibase, 5});
  CHECK(m.border.rank() == 4);
  CHECK(m.f == poly(4, 5, {{{4, 0, 1, 0}, 5}, {{0, 4, 0, 1}, 5}}));
  CHECK(verify_border(m.border, m.f));
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto r = gen_family({Family::Random, 4, 1, seed, 0, 1 + static_cast<unsigned>(seed % 5)});
    CHECK(verify_border(r.border, r.f));
    CHECK(gen_family({Family::Random, 4, 1, seed, 0, 1 + static_cast<unsigned>(seed % 5)}).border == r.border);
  }
  CHECK_THROWS_AS(gen_family({Family::Osculating, 3, 3}), PreconditionViolated);
  CHECK_THROWS_AS(gen_family({Family::Tangent, 1}), PreconditionViolated);
  CHECK_THROWS_AS(gen_family({Family::Multibase, 4, 1, 1, 3}), PreconditionViolated);
}

TEST_CASE("monomial_upper") {
  const auto a = monomial_upper(Monomial({3, 0}));
  CHECK(a.rank() == 1);
  CHECK(a.summands()[0].form == form({1, 0}));
  const auto b = monomial_upper(Monomial({1, 0, 2}));
  CHECK(b.rank() == 3);
  CHECK(naive_expand(b) == poly(3, 3, {{{1, 0, 2}, 1}}));
  const auto c = monomial_upper(Monomial({2, 2}));
  CHECK(c.rank() <= 5);
  CHECK(verify_waring(c, poly(2, 4, {{{2, 2}, 1}})));
}
