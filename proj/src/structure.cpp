#include "skewrank/structure.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <utility>

namespace skewrank {

namespace {

long long g_enum_cap = 0;

constexpr long long kElementwiseCap = 1 << 20;
constexpr long long kCenterCap = 1 << 16;

long long element_index(const PrimeField& F, const Vec& v) {
  long long idx = 0;
  for (size_t i = v.size(); i-- > 0;) idx = idx * F.p() + v[i];
  return idx;
}

}  // namespace

long long enum_cap() {
  if (g_enum_cap == 0) {
    g_enum_cap = 1 << 12;
    if (const char* env = std::getenv("SKEWRANK_MAX_ENUM")) {
      long long v = std::atoll(env);
      if (v > 0) g_enum_cap = v;
    }
  }
  return g_enum_cap;
}

void set_enum_cap(long long cap) { g_enum_cap = cap; }

Ideal jacobson_radical(const AlgebraPtr& A) {
  const PrimeField& F = A->field();
  long long size = A->size_capped(kElementwiseCap);
  if (size > kElementwiseCap)
    throw skew_error(errc::too_large, "elementwise radical needs |A| <= 2^20");

  // Quasi-regular elements: x with 1 - x a unit.
  std::vector<bool> qr(static_cast<size_t>(size), false);
  VecRange(F, A->dim()).for_each([&](const Vec& x) {
    Vec one_minus = vec_sub(F, A->unit(), x);
    if (A->is_unit_elem(one_minus)) qr[element_index(F, x)] = true;
  });

  // x lies in the radical iff every element of the right ideal x*A is
  // quasi-regular (x*A is the column space of left multiplication by x).
  RowSpace J(F, A->dim());
  VecRange(F, A->dim()).for_each([&](const Vec& x) {
    if (is_zero_vec(x) || J.contains(x)) return;
    Mat span(A->dim(), A->dim());
    for (int j = 0; j < A->dim(); ++j) span.set_row(j, A->mul(x, A->basis_vec(j)));
    RowSpace xA(F, A->dim(), span);
    bool all_qr = true;
    for_each_in_space(xA, [&](const Vec& z) {
      if (all_qr && !qr[element_index(F, z)]) all_qr = false;
    });
    if (all_qr) J.grow(x);
  });

  Ideal rad(A, J);  // construction verifies two-sidedness
  if (!ideal_is_nilpotent(rad))
    throw std::logic_error("radical is not nilpotent");
  if (!rad.is_zero()) {
    QuotientAlgebra Q = quotient_algebra(A, rad);
    if (!jacobson_radical(Q.alg).is_zero())
      throw std::logic_error("radical quotient is not semisimple");
  }
  return rad;
}

Ideal radical_via_nilpotent(const AlgebraPtr& A, const Ideal& nil) {
  if (!ideal_is_nilpotent(nil))
    throw skew_error(errc::bad_input, "hint ideal is not nilpotent");
  if (nil.is_full()) throw skew_error(errc::not_proper, "hint ideal is the whole algebra");
  QuotientAlgebra Q = quotient_algebra(A, nil);
  Ideal jbar = jacobson_radical(Q.alg);
  // Preimage of J(A/N) under the projection.
  Mat perp = kernel(A->field(), jbar.space().basis());
  Mat pre = kernel(A->field(), mat_mul(A->field(), perp, Q.proj));
  return Ideal(A, RowSpace(A->field(), A->dim(), pre));
}

bool is_semiprime(const AlgebraPtr& A) {
  bool radical_zero = jacobson_radical(A).is_zero();
  // Definitional cross-check: no nonzero x with x*A*x = 0 (linear in the
  // middle argument, so basis elements suffice).
  bool witness_free = true;
  if (A->size_capped(kElementwiseCap) <= kElementwiseCap) {
    VecRange(A->field(), A->dim()).for_each([&](const Vec& x) {
      if (!witness_free || is_zero_vec(x)) return;
      bool all_zero = true;
      for (int j = 0; j < A->dim() && all_zero; ++j)
        if (!is_zero_vec(A->mul(A->mul(x, A->basis_vec(j)), x))) all_zero = false;
      if (all_zero) witness_free = false;
    });
    if (radical_zero != witness_free)
      throw std::logic_error("semiprimeness cross-check disagrees with the radical");
  }
  return radical_zero;
}

RowSpace center(const AlgebraPtr& A) {
  const PrimeField& F = A->field();
  Mat stacked(0, A->dim());
  for (int i = 0; i < A->dim(); ++i) {
    Vec e = A->basis_vec(i);
    stacked = stack_rows(stacked, mat_sub(F, A->left_mul_matrix(e), A->right_mul_matrix(e)));
  }
  return RowSpace(F, A->dim(), kernel(F, stacked));
}

std::vector<Ideal> enumerate_prime_ideals(const AlgebraPtr& A) {
  const PrimeField& F = A->field();
  Ideal J = jacobson_radical(A);
  QuotientAlgebra Q = quotient_algebra(A, J);
  RowSpace Z = center(Q.alg);
  if (pow_cap(F.p(), Z.dim(), kCenterCap) > kCenterCap)
    throw skew_error(errc::too_large, "center too large for idempotent search");

  std::vector<Vec> idempotents;
  for_each_in_space(Z, [&](const Vec& z) {
    if (!is_zero_vec(z) && Q.alg->mul(z, z) == z) idempotents.push_back(z);
  });
  std::vector<Vec> primitive;
  for (const auto& e : idempotents) {
    bool minimal = true;
    for (const auto& f : idempotents) {
      if (f == e) continue;
      if (Q.alg->mul(f, e) == f) { minimal = false; break; }
    }
    if (minimal) primitive.push_back(e);
  }

  std::map<std::string, Ideal> primes;
  for (const auto& e : primitive) {
    Vec co = vec_sub(F, Q.alg->unit(), e);
    Mat span(Q.alg->dim(), Q.alg->dim());
    for (int j = 0; j < Q.alg->dim(); ++j) span.set_row(j, Q.alg->mul(Q.alg->basis_vec(j), co));
    RowSpace block(F, Q.alg->dim(), span);
    Mat perp = kernel(F, block.basis());
    Mat pre = kernel(F, mat_mul(F, perp, Q.proj));
    Ideal P(A, RowSpace(F, A->dim(), pre));
    primes.emplace(P.space().key(), P);
  }
  std::vector<Ideal> out;
  for (auto& [k, v] : primes) out.push_back(v);
  return out;
}

namespace {

RowSpace cyclic_right_ideal(const AlgebraPtr& A, const Vec& x) {
  Mat span(A->dim(), A->dim());
  for (int j = 0; j < A->dim(); ++j) span.set_row(j, A->mul(x, A->basis_vec(j)));
  return RowSpace(A->field(), A->dim(), span);
}

}  // namespace

std::vector<RightIdeal> simple_right_ideal_decomposition(const AlgebraPtr& A) {
  if (!is_semiprime(A)) throw skew_error(errc::not_semiprime, "decomposition needs a semiprime algebra");
  const PrimeField& F = A->field();
  if (A->size_capped(kElementwiseCap) > kElementwiseCap)
    throw skew_error(errc::too_large, "decomposition element scan exceeds cap");

  std::vector<RightIdeal> parts;
  RowSpace sum(F, A->dim());
  while (sum.dim() < A->dim()) {
    bool found = false;
    int best_dim = A->dim() + 1;
    Vec best_gen;
    RowSpace best(F, A->dim());
    VecRange(F, A->dim()).for_each([&](const Vec& x) {
      if (is_zero_vec(x)) return;
      RowSpace xA = cyclic_right_ideal(A, x);
      if (xA.dim() > best_dim) return;
      if (xA.intersect(sum).dim() != 0) return;
      // Deterministic tie-break: lexicographically smallest generator.
      if (xA.dim() < best_dim ||
          (xA.dim() == best_dim &&
           std::lexicographical_compare(x.begin(), x.end(), best_gen.begin(), best_gen.end()))) {
        best_dim = xA.dim();
        best_gen = x;
        best = xA;
        found = true;
      }
    });
    if (!found) throw std::logic_error("semisimple decomposition stalled");
    // Minimality check: every nonzero element generates the whole ideal.
    for_each_in_space(best, [&](const Vec& v) {
      if (is_zero_vec(v)) return;
      if (cyclic_right_ideal(A, v) != best)
        throw std::logic_error("peeled right ideal is not simple");
    });
    parts.emplace_back(A, best);
    sum = sum.sum(best);
  }
  int total = 0;
  for (const auto& p : parts) total += p.dim();
  if (total != A->dim()) throw std::logic_error("decomposition dimensions do not sum");
  return parts;
}

std::vector<Ideal> enumerate_ideals(const AlgebraPtr& A) {
  const PrimeField& F = A->field();
  if (A->size_capped(enum_cap()) > enum_cap())
    throw skew_error(errc::too_large, "ideal lattice enumeration exceeds cap");

  // Principal ideals, deduplicated.
  std::map<std::string, RowSpace> principal;
  VecRange(F, A->dim()).for_each([&](const Vec& x) {
    Ideal I = ideal_closure(A, {x});
    principal.emplace(I.space().key(), I.space());
  });

  // Every ideal is a finite sum of principal ideals: close under sums.
  std::map<std::string, RowSpace> all = principal;
  std::vector<RowSpace> queue;
  for (auto& [k, s] : all) queue.push_back(s);
  while (!queue.empty()) {
    RowSpace S = queue.back();
    queue.pop_back();
    for (auto& [k, P] : principal) {
      RowSpace T = S.sum(P);
      if (all.emplace(T.key(), T).second) queue.push_back(T);
    }
  }
  std::vector<Ideal> out;
  for (auto& [k, s] : all) out.emplace_back(A, s);
  return out;
}

RowSpace apply_to_space(const Automorphism& alpha, const RowSpace& S, long long k) {
  Mat img(S.dim(), S.ambient());
  for (int r = 0; r < S.dim(); ++r) img.set_row(r, alpha.apply(S.basis().row(r), k));
  return RowSpace(S.field(), S.ambient(), img);
}

bool is_alpha_ideal(const Ideal& I, const Automorphism& alpha) {
  return apply_to_space(alpha, I.space(), 1) == I.space();
}

std::vector<Ideal> alpha_orbit(const Ideal& I, const Automorphism& alpha) {
  std::vector<Ideal> orbit;
  RowSpace cur = I.space();
  do {
    orbit.emplace_back(I.algebra(), cur);
    cur = apply_to_space(alpha, cur, 1);
  } while (cur != I.space());
  return orbit;
}

namespace {

std::vector<Ideal> alpha_ideals(const AlgebraPtr& A, const Automorphism& alpha) {
  std::vector<Ideal> out;
  for (auto& I : enumerate_ideals(A))
    if (is_alpha_ideal(I, alpha)) out.push_back(I);
  return out;
}

void require_alpha_ideal(const Ideal& I, const Automorphism& alpha) {
  if (!is_alpha_ideal(I, alpha))
    throw skew_error(errc::not_alpha_ideal, "ideal is not alpha-stable");
  if (I.is_full()) throw skew_error(errc::not_proper, "alpha-primeness is for proper ideals");
}

}  // namespace

bool is_alpha_prime_definitional(const Ideal& I, const Automorphism& alpha) {
  require_alpha_ideal(I, alpha);
  auto lattice = alpha_ideals(I.algebra(), alpha);
  for (const auto& X : lattice) {
    if (I.space().contains(X.space())) continue;
    for (const auto& Y : lattice) {
      if (I.space().contains(Y.space())) continue;
      if (I.space().contains(ideal_product(X, Y).space())) return false;
    }
  }
  return true;
}

bool is_alpha_prime_orbit(const Ideal& I, const Automorphism& alpha) {
  require_alpha_ideal(I, alpha);
  for (const auto& P : enumerate_prime_ideals(I.algebra())) {
    RowSpace inter = P.space();
    for (const auto& Q : alpha_orbit(P, alpha)) inter = inter.intersect(Q.space());
    if (inter == I.space()) return true;
  }
  return false;
}

bool is_alpha_prime(const Ideal& I, const Automorphism& alpha) {
  bool by_def = is_alpha_prime_definitional(I, alpha);
  bool by_orbit = is_alpha_prime_orbit(I, alpha);
  if (by_def != by_orbit)
    throw std::logic_error("alpha-prime methods disagree");
  return by_def;
}

std::optional<std::pair<Ideal, Ideal>> alpha_prime_counterexample(const AlgebraPtr& A,
                                                                  const Automorphism& alpha) {
  auto lattice = alpha_ideals(A, alpha);
  for (const auto& X : lattice) {
    if (X.is_zero()) continue;
    for (const auto& Y : lattice) {
      if (Y.is_zero()) continue;
      if (ideal_product(X, Y).is_zero()) return std::make_pair(X, Y);
    }
  }
  return std::nullopt;
}

QuotientAlgebra quotient_algebra(const AlgebraPtr& A, const Ideal& I) {
  if (I.algebra() != A) throw skew_error(errc::algebra_mismatch, "ideal of a different algebra");
  if (I.is_full()) throw skew_error(errc::not_proper, "cannot quotient by the whole algebra");
  const PrimeField& F = A->field();
  int n = A->dim();
  int q = n - I.dim();

  // Complement coordinates: non-pivot columns of the ideal's reduced basis.
  std::vector<bool> is_pivot(n, false);
  for (int r = 0; r < I.dim(); ++r)
    for (int c = 0; c < n; ++c)
      if (I.space().basis().at(r, c) != 0) { is_pivot[c] = true; break; }
  std::vector<int> compl_cols;
  for (int c = 0; c < n; ++c)
    if (!is_pivot[c]) compl_cols.push_back(c);

  Mat proj(q, n);
  for (int j = 0; j < n; ++j) {
    Vec res = I.space().reduce(A->basis_vec(j));
    for (int r = 0; r < q; ++r) proj.at(r, j) = res[compl_cols[r]];
  }
  Mat lift(n, q);
  for (int r = 0; r < q; ++r) lift.at(compl_cols[r], r) = 1;

  auto project = [&](const Vec& v) { return apply(F, proj, v); };
  auto lift_vec = [&](const Vec& v) { return apply(F, lift, v); };

  std::vector<Vec> sc(static_cast<size_t>(q) * q);
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) {
      Vec ei(q, 0), ej(q, 0);
      ei[i] = 1;
      ej[j] = 1;
      sc[static_cast<size_t>(i) * q + j] = project(A->mul(lift_vec(ei), lift_vec(ej)));
    }
  std::vector<std::string> names;
  for (int r = 0; r < q; ++r) names.push_back("[" + A->basis_names()[compl_cols[r]] + "]");
  AlgebraPtr Qalg = Algebra::make(F, q, std::move(sc), project(A->unit()), std::move(names));

  QuotientAlgebra Q{Qalg, proj, lift};

  // The projection must be a surjective homomorphism with kernel exactly I.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (project(A->sc(i, j)) != Qalg->mul(project(A->basis_vec(i)), project(A->basis_vec(j))))
        throw std::logic_error("quotient projection is not multiplicative");
  if (RowSpace(F, n, kernel(F, proj)) != I.space())
    throw std::logic_error("quotient projection kernel differs from the ideal");
  return Q;
}

Automorphism induced_automorphism(const QuotientAlgebra& Q, const Automorphism& alpha,
                                  const Ideal& I) {
  if (!is_alpha_ideal(I, alpha))
    throw skew_error(errc::not_alpha_ideal, "automorphism does not stabilize the ideal");
  const PrimeField& F = Q.alg->field();
  Mat m = mat_mul(F, Q.proj, mat_mul(F, alpha.matrix(), Q.lift));
  return Automorphism(Q.alg, m);
}

}  // namespace skewrank
