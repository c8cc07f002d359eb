#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "skewrank/harness.hpp"
#include "skewrank/series.hpp"

using namespace skewrank;

namespace {

CtxPtr swap_ctx() {
  AlgebraPtr P = direct_product(field_algebra(2), field_algebra(2));
  return make_context(P, swap_automorphism(P, 1));
}

CtxPtr dual_ctx() {
  AlgebraPtr D = dual_numbers(2);
  return make_context(D, Automorphism::identity(D));
}

}  // namespace

TEST_CASE("defining relation y*(1,0) = (0,1)*y under swap") {
  CtxPtr c = swap_ctx();
  SkewSeries y = series_monomial(c, c->algebra->unit(), 1, 4);
  SkewSeries a = series_constant(c, Vec{1, 0}, 4);
  SkewSeries lhs = series_mul(y, a);
  SkewSeries rhs = series_mul(series_constant(c, Vec{0, 1}, 4), y);
  CHECK(series_equal(lhs, rhs));
  CHECK(lhs.coeffs[1] == Vec{0, 1});
}

TEST_CASE("((1,0)y)^2 = 0 under swap") {
  CtxPtr c = swap_ctx();
  SkewSeries f = series_monomial(c, Vec{1, 0}, 1, 4);
  CHECK(series_mul(f, f).is_zero());
}

TEST_CASE("additive structure and shifts") {
  CtxPtr c = dual_ctx();
  Sampler s(11);
  for (int t = 0; t < 50; ++t) {
    SkewSeries f = s.series(c, 6);
    CHECK(series_add(f, series_neg(f)).is_zero());
    CHECK(series_equal(series_mul(f, series_one(c, 6)), f));
    CHECK(series_equal(series_mul(series_one(c, 6), f), f));
    // y*f two ways: twist-shift vs multiplication by the series y.
    SkewSeries y = series_monomial(c, c->algebra->unit(), 1, 6);
    CHECK(series_equal(mul_by_y_power(f, 1), series_mul(y, f)));
    CHECK(series_equal(times_y_power(f, 1), series_mul(f, y)));
  }
  CHECK(series_equal(mul_by_y_power(series_one(c, 5), 2),
                     series_monomial(c, c->algebra->unit(), 2, 5)));
}

TEST_CASE("right coefficients") {
  CtxPtr c = swap_ctx();
  SkewSeries f = series_monomial(c, Vec{1, 0}, 1, 3);
  auto right = to_right_coefficients(f);
  CHECK(right[1] == Vec{0, 1});

  SkewSeries k = series_constant(c, Vec{1, 1}, 3);
  CHECK(to_right_coefficients(k)[0] == Vec{1, 1});

  Sampler s(12);
  for (int t = 0; t < 50; ++t) {
    SkewSeries g = s.series(c, 5);
    CHECK(series_equal(from_right_coefficients(c, to_right_coefficients(g), 5), g));
  }
}

TEST_CASE("reduction mod y is a ring map onto A") {
  CtxPtr c = dual_ctx();
  SkewSeries f = series_add(series_one(c, 4), series_monomial(c, Vec{0, 1}, 1, 4));
  CHECK(reduce_mod_y(f) == c->algebra->unit());
  CHECK(is_zero_vec(reduce_mod_y(series_monomial(c, c->algebra->unit(), 1, 4))));
  Sampler s(13);
  for (int t = 0; t < 50; ++t) {
    SkewSeries a = s.series(c, 4), b = s.series(c, 4);
    CHECK(reduce_mod_y(series_mul(a, b)) ==
          c->algebra->mul(reduce_mod_y(a), reduce_mod_y(b)));
  }
}

TEST_CASE("valuation") {
  CtxPtr c = dual_ctx();
  SkewSeries f = series_add(series_monomial(c, c->algebra->unit(), 2, 5),
                            series_monomial(c, c->algebra->unit(), 3, 5));
  CHECK(valuation(f) == 2);
  CHECK_THROWS_AS(valuation(series_zero(c, 5)), skew_error);

  SkewLaurent g = laurent_add(laurent_monomial(c, Vec{1, 0}, -1, 6),
                              laurent_monomial(c, c->algebra->unit(), 0, 6));
  CHECK(valuation(g) == -1);
}

TEST_CASE("inversion closed forms") {
  CtxPtr cs = swap_ctx();
  SkewSeries one = series_one(cs, 5);
  CHECK(series_equal(invert_unit(one), one));

  // (1 + (1,0)y)^{-1} = 1 + (1,0)y since (1,0)*swap((1,0)) = 0.
  SkewSeries f = series_add(one, series_monomial(cs, Vec{1, 0}, 1, 5));
  CHECK(series_equal(invert_unit(f), f));

  CtxPtr cd = dual_ctx();
  SkewSeries g = series_add(series_one(cd, 5), series_monomial(cd, Vec{0, 1}, 1, 5));
  CHECK(series_equal(invert_unit(g), g));

  CHECK_THROWS_AS(invert_unit(series_monomial(cd, Vec{0, 1}, 0, 4)), skew_error);
}

TEST_CASE("extend_alpha") {
  CtxPtr c = swap_ctx();
  SkewSeries f = series_add(series_constant(c, Vec{1, 0}, 3),
                            series_monomial(c, Vec{1, 0}, 1, 3));
  SkewSeries img = extend_alpha(f);
  CHECK(img.coeffs[0] == Vec{0, 1});
  CHECK(img.coeffs[1] == Vec{0, 1});

  SkewSeries y = series_monomial(c, c->algebra->unit(), 1, 3);
  CHECK(series_equal(extend_alpha(y), y));

  Sampler s(14);
  for (int t = 0; t < 50; ++t) {
    SkewSeries a = s.series(c, 5), b = s.series(c, 5);
    CHECK(series_equal(extend_alpha(series_mul(a, b)),
                       series_mul(extend_alpha(a), extend_alpha(b))));
  }
}

TEST_CASE("laurent conjugation by y realizes alpha") {
  CtxPtr c = swap_ctx();
  SkewLaurent a = laurent_monomial(c, Vec{1, 0}, 0, 6);
  SkewLaurent conj = conjugate_by_y(a);
  CHECK(!conj.zero);
  CHECK(conj.valuation == 0);
  CHECK(conj.coeffs[0] == Vec{0, 1});

  // y^{-1}*(1,0) = (0,1)*y^{-1}
  SkewLaurent lhs = laurent_mul(laurent_y_power(c, -1, 6), a);
  SkewLaurent rhs = laurent_mul(laurent_monomial(c, Vec{0, 1}, 0, 6),
                                laurent_y_power(c, -1, 6));
  CHECK(laurent_equal(lhs, rhs));

  CHECK(laurent_equal(laurent_mul(laurent_y_power(c, 1, 6), laurent_y_power(c, -1, 6)),
                      laurent_y_power(c, 0, 6)));
}

TEST_CASE("laurent inversion") {
  CtxPtr c = swap_ctx();
  Sampler s(15);
  for (int t = 0; t < 100; ++t) {
    SkewLaurent f = s.laurent(c, -3, 6);
    if (f.zero || !c->algebra->is_unit_elem(f.coeffs[0])) continue;
    SkewLaurent g = laurent_invert(f);
    SkewLaurent one = laurent_y_power(c, 0, 6);
    CHECK(laurent_equal(laurent_mul(f, g), one));
    CHECK(laurent_equal(laurent_mul(g, f), one));
  }
}

TEST_CASE("semiprime witness construction") {
  AlgebraPtr F2 = field_algebra(2);
  CtxPtr cf = make_context(F2, Automorphism::identity(F2));
  SkewSeries f = series_monomial(cf, F2->unit(), 1, 3);
  SkewSeries g = semiprime_witness(f);
  CHECK(valuation(g) == 0);
  CHECK(valuation(series_mul(series_mul(f, g), f)) == 2);

  CtxPtr cs = swap_ctx();
  SkewSeries h = series_monomial(cs, Vec{1, 0}, 1, 4);
  SkewSeries w = semiprime_witness(h);
  CHECK(valuation(w) == 1);  // k = (-1) mod 2 = 1
  SkewSeries prod = series_mul(series_mul(h, w), h);
  CHECK(valuation(prod) == 3);
  CHECK(prod.coeffs[3] == Vec{1, 0});

  SkewSeries tight = series_monomial(cs, Vec{1, 0}, 1, 3);
  CHECK_THROWS_AS(semiprime_witness(tight), skew_error);
}

TEST_CASE("induced ideal membership and rewriting over the dual numbers") {
  CtxPtr c = dual_ctx();
  AlgebraPtr D = c->algebra;
  Ideal I = ideal_closure(D, {D->basis_vec(1)});
  InducedIdealView view(c, I);

  SkewSeries t_plus_ty = series_add(series_constant(c, Vec{0, 1}, 4),
                                    series_monomial(c, Vec{0, 1}, 1, 4));
  CHECK(induced_membership(view, t_plus_ty));
  SkewSeries one_plus_ty = series_add(series_one(c, 4),
                                      series_monomial(c, Vec{0, 1}, 1, 4));
  CHECK(!induced_membership(view, one_plus_ty));

  InducedIdealView full(c, ideal_closure(D, {D->unit()}));
  CHECK(induced_membership(full, one_plus_ty));

  auto parts = rewrite_in_generators(view, t_plus_ty);
  REQUIRE(parts.size() == 1);
  SkewSeries back = series_mul(series_constant(c, view.generators()[0], 4), parts[0]);
  CHECK(series_equal(back, t_plus_ty));

  auto fparts = rewrite_in_generators(full, one_plus_ty);
  SkewSeries fback = series_zero(c, 4);
  for (size_t j = 0; j < fparts.size(); ++j)
    fback = series_add(fback, series_mul(series_constant(c, full.generators()[j], 4), fparts[j]));
  CHECK(series_equal(fback, one_plus_ty));

  CHECK_THROWS_AS(rewrite_in_generators(view, series_one(c, 4)), skew_error);
}

TEST_CASE("coefficientwise reduction mod an induced ideal") {
  CtxPtr c = dual_ctx();
  AlgebraPtr D = c->algebra;
  InducedIdealView view(c, ideal_closure(D, {D->basis_vec(1)}));

  SkewSeries one_plus_ty = series_add(series_one(c, 4),
                                      series_monomial(c, Vec{0, 1}, 1, 4));
  SkewSeries img = reduce_mod_induced(view, one_plus_ty);
  CHECK(img.coeffs[0] == Vec{1});
  CHECK(is_zero_vec(img.coeffs[1]));

  SkewSeries t_plus_ty = series_add(series_constant(c, Vec{0, 1}, 4),
                                    series_monomial(c, Vec{0, 1}, 1, 4));
  CHECK(reduce_mod_induced(view, t_plus_ty).is_zero());

  Sampler s(16);
  for (int t = 0; t < 50; ++t) {
    SkewSeries a = s.series(c, 4), b = s.series(c, 4);
    CHECK(series_equal(reduce_mod_induced(view, series_mul(a, b)),
                       series_mul(reduce_mod_induced(view, a), reduce_mod_induced(view, b))));
  }
}

TEST_CASE("swap-moved ideals cannot be induced") {
  CtxPtr c = swap_ctx();
  Ideal L = ideal_closure(c->algebra, {Vec{1, 0}});
  CHECK_THROWS_AS(InducedIdealView(c, L), skew_error);
}

TEST_CASE("product of induced ideals lands in the induced product ideal") {
  AlgebraPtr A = direct_product(matrix_algebra(2, 2), dual_numbers(2));
  CtxPtr c = make_context(A, Automorphism::identity(A));
  Ideal I = ideal_closure(A, {A->basis_vec(0)});  // M_2(F_2) x 0
  Ideal J = ideal_closure(A, {A->basis_vec(5)});  // 0 x (t)
  InducedIdealView vi(c, I), vj(c, J), vij(c, ideal_product(I, J));

  Sampler s(17);
  for (int t = 0; t < 50; ++t) {
    SkewSeries f = s.series(c, 4), g = s.series(c, 4);
    // Project random series into IB and JB coefficientwise.
    for (auto& x : f.coeffs)
      if (!I.contains(x)) x = A->mul(A->basis_vec(0), x);
    for (auto& x : g.coeffs)
      if (!J.contains(x)) x = A->mul(A->basis_vec(5), x);
    if (!induced_membership(vi, f) || !induced_membership(vj, g)) continue;
    CHECK(induced_membership(vij, series_mul(f, g)));
  }
}
