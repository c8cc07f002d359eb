#pragma once

#include <vector>

#include "skewrank/module.hpp"
#include "skewrank/report.hpp"
#include "skewrank/series.hpp"

namespace skewrank {

/// The finite truncation B_N = A[y;alpha]/<y^N> as an Algebra of dimension
/// dim(A)*N, basis e_s y^i ordered by degree.
struct TruncationRing {
  CtxPtr ctx;
  int trunc = 0;          // N
  AlgebraPtr ring;        // B_N
  Mat embed;              // A -> B_N, degree-0 block
  Vec y_elem;             // the normal element y
  Ideal y_ideal;          // <y> = everything of positive degree
  Ideal radical;          // J(B_N), preimage of J(A) under reduction mod y

  int coeff_dim() const { return ctx->algebra->dim(); }
  int index(int s, int i) const { return i * coeff_dim() + s; }

  Vec embed_elem(const Vec& a) const { return apply(ring->field(), embed, a); }
  /// Flatten a series (precision >= N required) into B_N coordinates.
  Vec from_series(const SkewSeries& f) const;
  SkewSeries to_series(const Vec& v) const;
};

/// Dimension cap: dim(A)*N <= 64 keeps every linear-algebra path tractable.
TruncationRing build_truncation(const CtxPtr& ctx, int N);

/// The right submodule V*B_N of the regular module, as a subspace of B_N
/// together with its abstract module structure.
struct InducedModule {
  RowSpace span;       // inside B_N
  FiniteModule module;  // re-coordinatized on the span
};

InducedModule induced_module(const RightIdeal& V, const TruncationRing& T);

/// Exhaustive check that V*B_N has exactly the N+1 submodules
/// V*B_N*y^k, totally ordered.
Report verify_uniserial_chain(const RightIdeal& V, const TruncationRing& T);

/// rank A = udim B_N, each V_i*B_N uniform, B_N the direct sum of them.
Report verify_rank_theorem(const CtxPtr& ctx, int N);

/// Independent right ideals of A stay independent after inducing to B_N
/// (no semiprimeness assumed).
Report verify_uniform_lower_bound(const CtxPtr& ctx, int N, const std::vector<RightIdeal>& ideals);

struct InducedTruncation {
  Ideal ideal;                 // IB_N inside B_N
  TruncationRing quotient_trunc;  // the truncation of (A/I, induced alpha)
  Mat iso;                     // B_N -> quotient truncation, coefficientwise
  Report report;
};

/// IB_N: checks that the coefficientwise, left-induced and right-induced
/// descriptions agree, and that B_N/IB_N is isomorphic to the truncation
/// of A/I via the coefficientwise map.
InducedTruncation induced_ideal_truncated(const Ideal& I, const TruncationRing& T);

/// Decides alpha-primeness of A and applies the transfer results:
/// certificates for B/B' when alpha-prime, an explicit zero-product pair
/// of induced ideals when not, contraction checks for every alpha-prime
/// ideal of A, and the semiprimeness transfer in both directions.
Report alpha_prime_transfer(const CtxPtr& ctx, int N = 3);

/// rank(A/I) = udim(B_N / IB_N) plus the alpha-prime biconditional for I,
/// for a semiprime alpha-ideal I.
Report verify_induced_corollary(const CtxPtr& ctx, const Ideal& I, int N);

}  // namespace skewrank
