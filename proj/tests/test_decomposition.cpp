#include <doctest.h>

#include "helpers.hpp"

using namespace testing;

namespace {

// x^2 y certificate: (1/(3 eps)) (x + eps y)^3 - (1/(3 eps)) x^3
BorderDecomposition tangent3() {
  BorderDecomposition b(2, 3);
  b.add(EpsScalar(q(1, 3)) * eps(-1), eform({1, eps(1)}));
  b.add(EpsScalar(q(-1, 3)) * eps(-1), eform({1, 0}));
  return b;
}

const RationalPoly x2y = poly(2, 3, {{{2, 1}, 1}});

}  // namespace

TEST_CASE("verify_waring") {
  WaringDecomposition w(2, 3);
  w.add(1, form({1, 0}));
  CHECK(verify_waring(w, poly(2, 3, {{{3, 0}, 1}})));
  const auto miss = verify_waring(w, x2y);
  CHECK_FALSE(miss);
  CHECK(miss.witness == "[3,0]");
  WaringDecomposition v(2, 3);
  v.add(q(1, 6), form({1, 1}));
  v.add(q(-1, 6), form({1, -1}));
  v.add(q(-1, 3), form({0, 1}));
  CHECK(verify_waring(v, x2y));
  CHECK(naive_expand(v) == x2y);
  CHECK_THROWS_AS(verify_waring(v, poly(2, 2, {{{2, 0}, 1}})), DimensionMismatch);
  CHECK_THROWS_AS(verify_waring(v, poly(3, 3, {{{3, 0, 0}, 1}})), DimensionMismatch);
}

TEST_CASE("verify_border") {
  const BorderDecomposition b = tangent3();
  const auto r = verify_border(b, x2y);
  CHECK(r);
  REQUIRE(r.order);
  CHECK(*r.order == 1);
  // the expansion is x^2 y + eps x y^2 + eps^2/3 y^3
  EpsScalarPoly expect(2, 3);
  expect.add_term(Monomial({2, 1}), 1);
  expect.add_term(Monomial({1, 2}), eps(1));
  expect.add_term(Monomial({0, 3}), EpsScalar(q(1, 3)) * eps(2));
  CHECK(naive_expand(b) == expect);
  CHECK(expand(b).to_poly() == expect);

  BorderDecomposition one(2, 3);
  one.add(1, eform({1, 0}));
  const auto exact = verify_border(one, poly(2, 3, {{{3, 0}, 1}}));
  CHECK(exact);
  CHECK_FALSE(exact.order);

  BorderDecomposition pole(2, 3);
  pole.add(eps(-1), eform({1, 0}));
  const auto bad = verify_border(pole, poly(2, 3, {{{3, 0}, 1}}));
  CHECK_FALSE(bad);
  CHECK(bad.witness == "[3,0]");

  CHECK_FALSE(verify_border(b, poly(2, 3, {{{1, 2}, 1}})));

  BorderDecomposition cancel(2, 3);
  cancel.add(1, eform({1, 0}));
  cancel.add(-1, eform({1, 0}));
  CHECK_THROWS_AS(verify_border(cancel, x2y), DegenerateInput);
}

TEST_CASE("extract_content and normalize_border") {
  BorderDecomposition b(2, 2);
  b.add(1, eform({eps(1), 0}));
  const BorderDecomposition c = extract_content(b);
  CHECK(c.summands()[0].form == eform({1, 0}));
  CHECK(c.summands()[0].weight == eps(2));

  const BorderDecomposition n = normalize_border(tangent3());
  CHECK(n == tangent3());
  CHECK(is_normalized(n));
  CHECK(verify_border(n, x2y));

  // a summand that only contributes O(eps) disappears
  BorderDecomposition extra = tangent3();
  extra.add(eps(1), eform({0, 1}));
  const BorderDecomposition m = normalize_border(extra);
  CHECK(m.rank() == 2);
  CHECK(verify_border(m, x2y));

  // high-order tails are cut at eps^{-val(w)}
  BorderDecomposition tail(2, 3);
  tail.add(EpsScalar(q(1, 3)) * eps(-1), eform({ep({1, 0, 5}), ep({0, 1, 7})}));
  tail.add(EpsScalar(q(-1, 3)) * eps(-1), eform({1, 0}));
  const BorderDecomposition t = normalize_border(tail);
  CHECK(t == tangent3());
  CHECK(border_limit(tail) == border_limit(t));
}

TEST_CASE("base_of_form and is_local") {
  CHECK(base_of_form(eform({eps(1), eps(2)})) == form({1, 0}));
  CHECK(base_of_form(eform({1, eps(1)})) == form({1, 0}));
  CHECK(base_of_form(eform({0, EpsScalar(2) * eps(1)})) == form({0, 1}));
  // invariant under eps-scaling
  const EpsScalar s = ep({3, 1}) * eps(-2);
  CHECK(base_of_form(eform({s * ep({2, 1}), s * eps(1)})) == base_of_form(eform({ep({2, 1}), eps(1)})));

  CHECK(is_local(tangent3()) == form({1, 0}));
  BorderDecomposition two(2, 3);
  two.add(1, eform({1, 0}));
  two.add(1, eform({0, 1}));
  CHECK_FALSE(is_local(two));
  BorderDecomposition single(2, 3);
  single.add(1, eform({1, eps(1)}));
  CHECK(is_local(single) == form({1, 0}));
}

TEST_CASE("essential_reduce") {
  const RationalPoly cube = poly(2, 3, {{{3, 0}, 1}, {{2, 1}, 3}, {{1, 2}, 3}, {{0, 3}, 1}});
  BorderDecomposition b(2, 3);
  b.add(1, eform({1, 1}));
  const auto e1 = essential_reduce(cube, b);
  CHECK(e1.essential == 1);
  CHECK(e1.f.support() == std::vector<std::size_t>{0});
  CHECK(e1.f.size() == 1);
  CHECK(substitute_linear(e1.f, e1.inverse) == cube);
  CHECK(verify_border(e1.border, e1.f));

  const auto e2 = essential_reduce(x2y, tangent3());
  CHECK(e2.essential == 2);
  CHECK(e2.f == x2y);

  const RationalPoly quad = poly(3, 2, {{{2, 0, 0}, 1}, {{1, 1, 0}, 1}, {{0, 2, 0}, 1}});
  BorderDecomposition bq(3, 2);
  // x^2 + xy + y^2 = 3/4 (x+y)^2 + 1/4 (x-y)^2
  bq.add(q(3, 4), eform({1, 1, 0}));
  bq.add(q(1, 4), eform({1, -1, 0}));
  const auto e3 = essential_reduce(quad, bq);
  CHECK(e3.essential == 2);
  for (const auto& v : e3.f.support()) CHECK(v < 2);
  CHECK(substitute_linear(e3.f, e3.inverse) == quad);

  // more essential variables than summands cannot come from a valid certificate
  BorderDecomposition short_cert(3, 2);
  short_cert.add(1, eform({1, 0, 0}));
  CHECK_THROWS(essential_reduce(quad, short_cert));
}

TEST_CASE("transformations preserve verification") {
  std::mt19937_64 rng(17);
  const BorderDecomposition b = tangent3();
  for (int trial = 0; trial < 8; ++trial) {
    RationalMatrix m(2, 2);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) m(i, j) = random_rational(rng, 4);
    if (rank(m) < 2) continue;
    const BorderDecomposition t = transform(b, lift(m));
    CHECK(verify_border(t, substitute_linear(x2y, m)));
  }
}

TEST_CASE("compress merges proportional forms") {
  WaringDecomposition w(2, 2);
  w.add(1, form({2, 0}));
  w.add(-3, form({1, 0}));
  w.add(1, form({0, 1}));
  w.add(-1, form({0, -1}));
  const WaringDecomposition c = compress(w);
  CHECK(c.rank() == 1);
  CHECK(expand(c) == expand(w));
  CHECK(c.summands()[0].form == form({1, 0}));
  CHECK(c.summands()[0].weight == 1);
}
