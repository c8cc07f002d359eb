#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "skewrank/module.hpp"

using namespace skewrank;

namespace {

Ideal zero_ideal(const AlgebraPtr& A) { return ideal_closure(A, {}); }

// Transport the structure constants of A along a random invertible basis
// change and rebuild the algebra.
AlgebraPtr base_change(const AlgebraPtr& A, std::mt19937& rng) {
  const PrimeField& F = A->field();
  int n = A->dim();
  Mat P(n, n);
  std::optional<Mat> Pinv;
  std::uniform_int_distribution<int> d(0, F.p() - 1);
  do {
    for (auto& x : P.d) x = static_cast<std::uint8_t>(d(rng));
    Pinv = mat_inverse(F, P);
  } while (!Pinv);

  // New basis f_i = sum_j P[j][i] e_j (columns of P); f_i f_j expressed in
  // the f-basis through P^{-1}.
  auto col = [&](const Mat& m, int i) {
    Vec v(n, 0);
    for (int r = 0; r < n; ++r) v[r] = m.at(r, i);
    return v;
  };
  std::vector<Vec> sc(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      sc[static_cast<size_t>(i) * n + j] = apply(F, *Pinv, A->mul(col(P, i), col(P, j)));
  Vec unit = apply(F, *Pinv, A->unit());
  return Algebra::make(F, n, std::move(sc), std::move(unit), {});
}

}  // namespace

TEST_CASE("regular module uniform dimensions") {
  CHECK(uniform_dimension(regular_module(field_algebra(2)),
                          jacobson_radical(field_algebra(2))) == 1);
  CHECK(uniform_dimension(regular_module(field_algebra(3)),
                          jacobson_radical(field_algebra(3))) == 1);

  AlgebraPtr M = matrix_algebra(2, 2);
  CHECK(uniform_dimension(regular_module(M), jacobson_radical(M)) == 2);

  AlgebraPtr big = direct_product(matrix_algebra(2, 3), field_algebra(3));
  CHECK(uniform_dimension(regular_module(big), jacobson_radical(big)) == 3);

  AlgebraPtr D = dual_numbers(2);
  CHECK(uniform_dimension(regular_module(D), jacobson_radical(D)) == 1);

  AlgebraPtr P = direct_product(field_algebra(2), field_algebra(2));
  CHECK(uniform_dimension(regular_module(P), jacobson_radical(P)) == 2);
}

TEST_CASE("socle and oracle agree where both run") {
  for (AlgebraPtr A : {matrix_algebra(2, 2), dual_numbers(2),
                       direct_product(field_algebra(2), field_algebra(2)),
                       direct_product(matrix_algebra(2, 2), dual_numbers(2))}) {
    FiniteModule R = regular_module(A);
    CHECK(udim_socle(R, jacobson_radical(A)) == udim_oracle(R));
  }
}

TEST_CASE("all submodules of a simple module: exactly two") {
  AlgebraPtr M = matrix_algebra(2, 2);
  for (const auto& V : simple_right_ideal_decomposition(M)) {
    FiniteModule sub = submodule_as_module(regular_module(M), V.space());
    CHECK(all_submodules(sub).size() == 2);
  }
}

TEST_CASE("socle of the dual numbers is (t)") {
  AlgebraPtr D = dual_numbers(2);
  RowSpace soc = socle(regular_module(D), jacobson_radical(D));
  CHECK(soc.dim() == 1);
  CHECK(soc.contains(D->basis_vec(1)));
}

TEST_CASE("cyclic submodule closure") {
  AlgebraPtr M = matrix_algebra(2, 2);
  FiniteModule R = regular_module(M);
  CHECK(cyclic_submodule(R, M->basis_vec(0)).dim() == 2);  // e11*A
  CHECK(cyclic_submodule(R, M->unit()).dim() == 4);
  CHECK(cyclic_submodule(R, M->zero()).dim() == 0);
}

TEST_CASE("goldie rank of the standard examples") {
  CHECK(goldie_rank(field_algebra(3)) == 1);
  CHECK(goldie_rank(matrix_algebra(2, 2)) == 2);
  CHECK(goldie_rank(matrix_algebra(2, 3)) == 2);
  CHECK(goldie_rank(direct_product(field_algebra(2), field_algebra(2))) == 2);
  CHECK(goldie_rank(direct_product(matrix_algebra(2, 2), field_algebra(2))) == 3);
}

TEST_CASE("goldie rank is invariant under base change") {
  std::mt19937 rng(7);
  for (AlgebraPtr A : {matrix_algebra(2, 2),
                       direct_product(field_algebra(2), field_algebra(2)),
                       direct_product(matrix_algebra(2, 3), field_algebra(3))}) {
    int r = goldie_rank(A);
    for (int t = 0; t < 5; ++t) CHECK(goldie_rank(base_change(A, rng)) == r);
  }
}

TEST_CASE("oracle toggle") {
  CHECK(oracle_enabled());
  set_oracle_enabled(false);
  CHECK(!oracle_enabled());
  AlgebraPtr M = matrix_algebra(2, 2);
  CHECK(uniform_dimension(regular_module(M), jacobson_radical(M)) == 2);
  set_oracle_enabled(true);
}
