#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "skewrank/mat.hpp"

namespace skewrank {

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

/// Finite-dimensional associative unital algebra over F_p, given by
/// structure constants on a fixed basis e_0, ..., e_{n-1}.
class Algebra {
 public:
  /// Validates associativity and the unit axiom on all basis triples/pairs.
  static AlgebraPtr make(PrimeField field, int dim, std::vector<Vec> structure_constants,
                         Vec unit, std::vector<std::string> basis_names);

  const PrimeField& field() const { return field_; }
  int dim() const { return dim_; }
  const Vec& unit() const { return unit_; }
  const std::vector<std::string>& basis_names() const { return names_; }

  /// Coefficient vector of e_i * e_j.
  const Vec& sc(int i, int j) const { return sc_[static_cast<size_t>(i) * dim_ + j]; }

  Vec zero() const { return Vec(dim_, 0); }
  Vec basis_vec(int i) const {
    Vec v(dim_, 0);
    v[i] = 1;
    return v;
  }

  /// Bilinear extension of the structure constants.
  Vec mul(const Vec& x, const Vec& y) const;

  /// Matrix of v -> x * v (column convention).
  Mat left_mul_matrix(const Vec& x) const;
  /// Matrix of v -> v * x.
  Mat right_mul_matrix(const Vec& x) const;

  /// Two-sided inverse of x, if x is a unit.
  std::optional<Vec> inverse(const Vec& x) const;

  bool is_unit_elem(const Vec& x) const { return inverse(x).has_value(); }

  /// Number of elements p^dim, saturating at cap+1.
  long long size_capped(long long cap) const { return pow_cap(field_.p(), dim_, cap); }

 private:
  Algebra(PrimeField f, int dim, std::vector<Vec> sc, Vec unit, std::vector<std::string> names)
      : field_(f), dim_(dim), sc_(std::move(sc)), unit_(std::move(unit)), names_(std::move(names)) {}

  PrimeField field_;
  int dim_;
  std::vector<Vec> sc_;  // sc_[i*dim+j] = coefficients of e_i * e_j
  Vec unit_;
  std::vector<std::string> names_;
};

/// An element of a specific algebra.
struct Element {
  AlgebraPtr alg;
  Vec v;

  bool is_zero() const { return is_zero_vec(v); }
  bool operator==(const Element& o) const { return alg == o.alg && v == o.v; }
};

Element elem(AlgebraPtr a, Vec v);
Element multiply(const Element& x, const Element& y);
Element add(const Element& x, const Element& y);
Element negate(const Element& x);
std::optional<Element> is_unit(const Element& x);

/// Algebra automorphism, stored as its matrix (column k = image of e_k).
/// The order in GL is computed eagerly; negative powers go through it.
class Automorphism {
 public:
  Automorphism(AlgebraPtr alg, Mat matrix);

  const AlgebraPtr& algebra() const { return alg_; }
  const Mat& matrix() const { return powers_[1 % order_]; }
  int order() const { return order_; }

  /// alpha^k(v), any integer k.
  Vec apply(const Vec& v, long long k = 1) const;
  Element apply(const Element& x, long long k = 1) const;

  const Mat& power_matrix(long long k) const {
    return powers_[static_cast<size_t>(((k % order_) + order_) % order_)];
  }

  bool operator==(const Automorphism& o) const {
    return alg_ == o.alg_ && powers_[1 % order_] == o.powers_[1 % order_];
  }

  static Automorphism identity(AlgebraPtr alg);

 private:
  AlgebraPtr alg_;
  int order_;
  std::vector<Mat> powers_;  // powers_[k] = matrix of alpha^k, k in [0, order)
};

/// Subspace of an algebra in canonical reduced-basis form.
struct Subspace {
  AlgebraPtr alg;
  RowSpace space;
};

/// Two-sided ideal; closure under left and right multiplication is
/// verified at construction.
class Ideal {
 public:
  Ideal(AlgebraPtr alg, RowSpace space);

  const AlgebraPtr& algebra() const { return alg_; }
  const RowSpace& space() const { return space_; }
  int dim() const { return space_.dim(); }
  bool is_zero() const { return space_.dim() == 0; }
  bool is_full() const { return space_.dim() == alg_->dim(); }
  bool contains(const Vec& v) const { return space_.contains(v); }

  bool operator==(const Ideal& o) const { return alg_ == o.alg_ && space_ == o.space_; }
  bool operator!=(const Ideal& o) const { return !(*this == o); }

 private:
  AlgebraPtr alg_;
  RowSpace space_;
};

class RightIdeal {
 public:
  RightIdeal(AlgebraPtr alg, RowSpace space);

  const AlgebraPtr& algebra() const { return alg_; }
  const RowSpace& space() const { return space_; }
  int dim() const { return space_.dim(); }

  bool operator==(const RightIdeal& o) const { return alg_ == o.alg_ && space_ == o.space_; }

 private:
  AlgebraPtr alg_;
  RowSpace space_;
};

/// Smallest two-sided ideal containing the given vectors.
Ideal ideal_closure(AlgebraPtr alg, const std::vector<Vec>& gens);
RightIdeal right_ideal_closure(AlgebraPtr alg, const std::vector<Vec>& gens);

Ideal ideal_sum(const Ideal& I, const Ideal& J);
Ideal ideal_intersect(const Ideal& I, const Ideal& J);
Ideal ideal_product(const Ideal& I, const Ideal& J);
bool membership(const Vec& x, const Ideal& I);

/// I^k as a subspace chain; used for nilpotency checks.
bool ideal_is_nilpotent(const Ideal& I, int* steps = nullptr);

/// Constructors used across the test zoo.
AlgebraPtr matrix_algebra(int k, int p);
AlgebraPtr field_algebra(int p);
AlgebraPtr direct_product(const AlgebraPtr& a, const AlgebraPtr& b);
/// F_p[t]/(t^2).
AlgebraPtr dual_numbers(int p);

/// Swap automorphism of A x A (requires both factors equal).
Automorphism swap_automorphism(const AlgebraPtr& product_alg, int half_dim);
/// Conjugation x -> u x u^{-1} by a unit u.
Automorphism inner_automorphism(const AlgebraPtr& alg, const Vec& u);
/// Block-diagonal automorphism of a direct product.
Automorphism product_automorphism(const AlgebraPtr& product_alg, const Automorphism& f,
                                  const Automorphism& g);

}  // namespace skewrank
