#include <doctest.h>

#include "deborder/oracle.hpp"
#include "helpers.hpp"

using namespace testing;

namespace {

BorderDecomposition tangent(unsigned d) {
  return gen_family({Family::Tangent, d}).border;
}

unsigned count(const std::vector<TraceRecord>& trace, CaseTag tag) {
  unsigned n = 0;
  for (const auto& t : trace) n += t.tag == tag;
  return n;
}

}  // namespace

TEST_CASE("rank_bound") {
  CHECK(rank_bound(3, 1) == 3);
  CHECK(rank_bound(1, 1) == 1);
  // 3 * 2^(10 sqrt 2) = 54241.07...
  CHECK(rank_bound(3, 2) == 54242);
  CHECK(rank_bound(1, 4) == Integer(1) << 40);  // 4^20 exactly, ceiling is itself
  CHECK(rank_bound(2, 4) == Integer(2) << 40);
  CHECK(default_y_size(1) == 10);
  CHECK(default_y_size(2) == 14);
  CHECK(default_y_size(100) == 100);
}

TEST_CASE("partition_into_local") {
  const FamilyInstance mb = gen_family({Family::Multibase, 5});
  const auto parts = partition_into_local(mb.border, mb.f);
  REQUIRE(parts.size() == 2);
  RationalPoly total(4, 5);
  for (const auto& p : parts) {
    CHECK(verify_border(p.border, p.limit));
    CHECK(is_local(p.border));
    total += p.limit;
  }
  CHECK(total == mb.f);

  CHECK(partition_into_local(tangent(3), poly(2, 3, {{{2, 1}, 1}})).size() == 1);
  BorderDecomposition single(2, 3);
  single.add(1, eform({1, 1}));
  CHECK(partition_into_local(single, poly(2, 3, {{{3, 0}, 1}, {{2, 1}, 3}, {{1, 2}, 3}, {{0, 3}, 1}})).size() == 1);

  // (x+eps y)^2 - x^2 and (y+eps x)^2 - y^2 over eps^2: each group has a pole,
  // their difference converges; d = 2 < r - 1 keeps this outside the lemma
  BorderDecomposition crossed(2, 2);
  crossed.add(eps(-2), eform({1, eps(1)}));
  crossed.add(-eps(-2), eform({1, 0}));
  crossed.add(-eps(-2), eform({eps(1), 1}));
  crossed.add(eps(-2), eform({0, 1}));
  const RationalPoly lim = border_limit(crossed);
  CHECK(lim == poly(2, 2, {{{2, 0}, -1}, {{0, 2}, 1}}));
  CHECK_THROWS_AS(partition_into_local(crossed, lim), PreconditionViolated);
}

TEST_CASE("extract_local_structure") {
  CHECK(extract_local_structure(poly(2, 3, {{{2, 1}, 1}}), 0, 2, 3) == poly(2, 1, {{{0, 1}, 1}}));
  CHECK(extract_local_structure(poly(2, 3, {{{3, 0}, 1}}), 0, 1, 3) == poly(2, 0, {{{0, 0}, 1}}));
  try {
    extract_local_structure(poly(2, 3, {{{0, 3}, 1}}), 0, 2, 3);
    FAIL("expected a lemma failure");
  } catch (const LemmaCheckFailed& e) {
    CHECK(e.lemma() == "local-divisibility");
  }
}

TEST_CASE("split_and_group") {
  // variables: y = x0, z1 = x1, z2 = x2 with |Y| = 1
  const auto a = split_and_group(poly(3, 1, {{{1, 0, 0}, 1}}), 1);
  CHECK(a.f0 == poly(3, 1, {{{1, 0, 0}, 1}}));
  CHECK(a.cells.empty());

  const RationalPoly g = poly(3, 3, {{{1, 2, 0}, 1}, {{1, 1, 1}, 1}});
  const auto b = split_and_group(g, 1);
  CHECK(b.f0.is_zero());
  REQUIRE(b.cells.size() == 2);
  CHECK(b.cells.at({1, 2}) == poly(3, 1, {{{1, 0, 0}, 1}}));
  CHECK(b.cells.at({1, 1}) == poly(3, 2, {{{1, 0, 1}, 1}}));

  const auto c = split_and_group(poly(3, 3, {{{0, 0, 3}, 1}}), 1);
  CHECK(c.cells.at({2, 3}) == poly(3, 0, {{{0, 0, 0}, 1}}));

  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const RationalPoly h = random_poly(rng, 4, 3, 6);
    const std::size_t ys = 1 + rng() % 3;
    const auto s = split_and_group(h, ys);
    RationalPoly back = s.f0;
    for (const auto& [cell, gik] : s.cells) {
      const std::size_t z = ys + cell.first - 1;
      for (std::size_t v = ys; v <= z; ++v)
        for (const auto& [m, coef] : gik.terms()) CHECK(m[v] == 0);
      back += poly(4, cell.second, {{Monomial::unit(4, z, cell.second).exps(), 1}}) * gik;
    }
    CHECK(back == h);
  }
}

TEST_CASE("dense_decompose") {
  const RationalPoly xy = poly(2, 2, {{{1, 1}, 1}});
  const auto w = dense_decompose(xy);
  CHECK(naive_expand(w) == xy);
  CHECK(w.rank() <= 3);
  const auto lin = dense_decompose(poly(3, 1, {{{1, 0, 0}, 2}, {{0, 0, 1}, -1}}));
  CHECK(lin.rank() == 1);
  CHECK(verify_waring(lin, poly(3, 1, {{{1, 0, 0}, 2}, {{0, 0, 1}, -1}})));
  const RationalPoly x2y = poly(2, 3, {{{2, 1}, 1}});
  const auto c = dense_decompose(x2y);
  CHECK(c.rank() <= 4);
  CHECK(naive_expand(c) == x2y);
  CHECK(dense_decompose(x2y, 7) == dense_decompose(x2y, 7));
  CHECK_THROWS_AS(dense_decompose(RationalPoly(2, 3)), ZeroInput);
}

TEST_CASE("multiply_by_power") {
  WaringDecomposition x(3, 1);
  x.add(1, form({1, 0, 0}));
  const auto w = multiply_by_power(x, form({0, 0, 1}), 2);
  WaringDecomposition expect(3, 3);
  expect.add(q(1, 6), form({1, 0, 1}));
  expect.add(q(1, 6), form({1, 0, -1}));
  expect.add(q(-1, 3), form({1, 0, 0}));
  CHECK(w.rank() == 3);
  auto sorted_summands = [](const WaringDecomposition& x) {
    std::vector<std::string> out;
    const WaringDecomposition c = compress(x);
    for (const auto& s : c.summands()) {
      std::string t = to_string(s.weight);
      for (const auto& c : s.form.coefs()) t += " " + to_string(c);
      out.push_back(t);
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  CHECK(sorted_summands(w) == sorted_summands(expect));
  CHECK(naive_expand(w) == poly(3, 3, {{{1, 0, 2}, 1}}));

  WaringDecomposition z(2, 1);
  z.add(1, form({0, 1}));
  const auto bump = multiply_by_power(z, form({0, 1}), 1);
  CHECK(bump.rank() == 1);
  CHECK(bump.summands()[0].form == form({0, 1}));

  WaringDecomposition x2(2, 2);
  x2.add(1, form({1, 0}));
  const auto m = multiply_by_power(x2, form({0, 1}), 1);
  CHECK(m.rank() <= 4);
  CHECK(naive_expand(m) == poly(2, 3, {{{2, 1}, 1}}));
  CHECK_THROWS_AS(multiply_by_power(x2, form({0, 1}), 0), PreconditionViolated);
}

TEST_CASE("deborder examples") {
  const RationalPoly x2y = poly(2, 3, {{{2, 1}, 1}});
  auto [w, rep] = deborder::deborder(x2y, tangent(3));
  CHECK(verify_waring(w, x2y));
  CHECK(naive_expand(w) == x2y);
  CHECK(w.rank() == 3);
  CHECK(rep.achieved_rank == 3);
  CHECK(rep.verified);
  CHECK(rep.rank_bound == 54242);

  for (unsigned d = 1; d <= 6; ++d) {
    BorderDecomposition one(2, d);
    one.add(1, eform({1, 0}));
    auto [p, r] = deborder::deborder(poly(2, d, {{{d, 0}, 1}}), one);
    CHECK(p.rank() == 1);
    CHECK(p.summands()[0].form == form({1, 0}));
  }

  const FamilyInstance mb = gen_family({Family::Multibase, 5});
  auto [wm, rm] = deborder::deborder(mb.f, mb.border);
  CHECK(verify_waring(wm, mb.f));
  CHECK(count(rm.trace, CaseTag::Local) == 2);
  CHECK(rm.achieved_rank <= rm.rank_bound);

  BorderDecomposition pole(2, 3);
  pole.add(eps(-1), eform({1, 0}));
  CHECK_THROWS_AS(deborder::deborder(x2y, pole), VerificationFailed);
  CHECK_THROWS_AS(deborder::deborder(RationalPoly(2, 3), tangent(3)), ZeroInput);
}

TEST_CASE("deborder on the nonlocal low-degree path") {
  // d = 2 < r - 1 with r = 4: four distinct bases
  BorderDecomposition b(4, 2);
  for (std::size_t i = 0; i < 4; ++i) {
    std::vector<EpsScalar> c(4);
    c[i] = 1;
    b.add(1, LinearForm<EpsScalar>(c));
  }
  const RationalPoly f = border_limit(b);
  DeborderConfig cfg;
  cfg.base_threshold = 1;
  cfg.y_size = 1;
  auto [w, rep] = deborder::deborder(f, b, cfg);
  CHECK(verify_waring(w, f));
  CHECK(count(rep.trace, CaseTag::Nonlocal) >= 1);
}

TEST_CASE("Z-descent, strengthened mode and parallel branches agree") {
  const FamilyInstance inst = gen_family({Family::Random, 5, 1, 3, 0, 4});
  DeborderConfig base;
  base.base_threshold = 1;
  base.y_size = 1;
  auto [w1, r1] = deborder::deborder(inst.f, inst.border, base);
  CHECK(verify_waring(w1, inst.f));
  CHECK(r1.trace.size() > 2);

  DeborderConfig strong = base;
  strong.strengthened = true;
  auto [w2, r2] = deborder::deborder(inst.f, inst.border, strong);
  CHECK(verify_waring(w2, inst.f));

  DeborderConfig par = base;
  par.jobs = 4;
  auto [w3, r3] = deborder::deborder(inst.f, inst.border, par);
  CHECK(w3 == w1);
  CHECK(r3.trace == r1.trace);

  auto [w4, r4] = deborder::deborder(inst.f, inst.border, base);
  CHECK(w4 == w1);
}
