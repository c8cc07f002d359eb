#pragma once

#include <vector>

#include "skewrank/algebra.hpp"

namespace skewrank {

/// Enumeration cap used by the brute-force oracles (default 2^12,
/// overridable through SKEWRANK_MAX_ENUM).
long long enum_cap();
void set_enum_cap(long long cap);

/// Jacobson radical by the elementwise quasi-regularity test:
/// J = { x : 1 - x*y is a unit for all y }, computed as the set of x whose
/// right ideal x*A consists of quasi-regular elements.  Requires |A| within
/// the elementwise cap; the result is verified nilpotent with semisimple
/// quotient.
Ideal jacobson_radical(const AlgebraPtr& A);

/// Radical through a known nilpotent ideal N: J(A) is the preimage of
/// J(A/N).  Lets large truncation rings avoid the element scan.
Ideal radical_via_nilpotent(const AlgebraPtr& A, const Ideal& nil);

bool is_semiprime(const AlgebraPtr& A);

/// Center of A as a subspace.
RowSpace center(const AlgebraPtr& A);

/// All prime ideals (= preimages of the maximal ideals of A/J(A)),
/// complete and duplicate-free.
std::vector<Ideal> enumerate_prime_ideals(const AlgebraPtr& A);

/// A = V_1 + ... + V_d (direct) with each V_i a simple right ideal.
/// Requires A semiprime (hence semisimple).
std::vector<RightIdeal> simple_right_ideal_decomposition(const AlgebraPtr& A);

/// All two-sided ideals of A (closure of sums of principal ideals);
/// requires |A| within the enumeration cap.
std::vector<Ideal> enumerate_ideals(const AlgebraPtr& A);

RowSpace apply_to_space(const Automorphism& alpha, const RowSpace& S, long long k = 1);
bool is_alpha_ideal(const Ideal& I, const Automorphism& alpha);
std::vector<Ideal> alpha_orbit(const Ideal& I, const Automorphism& alpha);

/// Definitional test: no pair of alpha-ideals I', J' with I'J' <= I and
/// neither contained in I.  Enumerates the alpha-ideal lattice.
bool is_alpha_prime_definitional(const Ideal& I, const Automorphism& alpha);
/// Characterization: I is the intersection of the alpha-orbit of some
/// prime ideal of A.
bool is_alpha_prime_orbit(const Ideal& I, const Automorphism& alpha);
/// Runs both methods and insists they agree.
bool is_alpha_prime(const Ideal& I, const Automorphism& alpha);

/// Finds nonzero alpha-ideals I, J with I*J = 0 when A is not alpha-prime
/// at zero (a falsification witness); nullopt when alpha-prime.
std::optional<std::pair<Ideal, Ideal>> alpha_prime_counterexample(const AlgebraPtr& A,
                                                                  const Automorphism& alpha);

/// A/I with the projection (and section) as linear maps.  If alpha is
/// given and alpha(I) = I, carries the induced automorphism.
struct QuotientAlgebra {
  AlgebraPtr alg;
  Mat proj;  // dim(A/I) x dim(A)
  Mat lift;  // dim(A) x dim(A/I); proj * lift = id
  Vec project(const Vec& v) const { return apply(alg->field(), proj, v); }
};

QuotientAlgebra quotient_algebra(const AlgebraPtr& A, const Ideal& I);
Automorphism induced_automorphism(const QuotientAlgebra& Q, const Automorphism& alpha,
                                  const Ideal& I);

}  // namespace skewrank
