#pragma once

#include <vector>

#include "skewrank/structure.hpp"

namespace skewrank {

/// Finite right module over an Algebra, given by one action matrix per
/// ring basis element (column convention: v * e_k = apply(action[k], v)).
class FiniteModule {
 public:
  /// Validates the module axioms on basis pairs and the unit action.
  FiniteModule(AlgebraPtr ring, int dim, std::vector<Mat> action);

  const AlgebraPtr& ring() const { return ring_; }
  int dim() const { return dim_; }
  const Mat& action_of_basis(int k) const { return action_[k]; }

  /// v * r for a ring element r.
  Vec act(const Vec& v, const Vec& r) const;

  long long size_capped(long long cap) const {
    return pow_cap(ring_->field().p(), dim_, cap);
  }

 private:
  AlgebraPtr ring_;
  int dim_;
  std::vector<Mat> action_;
};

FiniteModule regular_module(const AlgebraPtr& A);

/// Module structure on a subspace of an existing module (the subspace must
/// be invariant); vectors are re-coordinatized in the subspace basis.
FiniteModule submodule_as_module(const FiniteModule& M, const RowSpace& S);

/// Smallest submodule containing v.
RowSpace cyclic_submodule(const FiniteModule& M, const Vec& v);
RowSpace submodule_closure(const FiniteModule& M, const std::vector<Vec>& gens);

/// All submodules (BFS over sums of cyclic submodules); |M| must be within
/// the enumeration cap.
std::vector<RowSpace> all_submodules(const FiniteModule& M);

/// soc(M) = { m : m * J = 0 } for J the ring's radical.
RowSpace socle(const FiniteModule& M, const Ideal& ring_radical);

/// Uniform dimension as the composition length of the socle, peeling
/// minimal cyclic submodules.
int udim_socle(const FiniteModule& M, const Ideal& ring_radical);

/// Brute-force oracle: maximum number of distinct cyclic submodules with a
/// direct sum, by backtracking.  Requires |M| within the enumeration cap.
int udim_oracle(const FiniteModule& M);

/// Socle method, cross-checked against the oracle whenever the oracle can
/// run (the two must agree).
int uniform_dimension(const FiniteModule& M, const Ideal& ring_radical);

/// Toggle for the brute-force cross-checks (the CLI's --oracle flag);
/// enabled by default.
bool oracle_enabled();
void set_oracle_enabled(bool on);

/// Number of simple summands of A; cross-checked against the uniform
/// dimension of the regular module.
int goldie_rank(const AlgebraPtr& A);

}  // namespace skewrank
