#pragma once

#include <random>

#include "skewrank/builtin.hpp"
#include "skewrank/report.hpp"
#include "skewrank/truncation.hpp"

namespace skewrank {

/// Deterministic random elements/series for sampling-based checks.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  Vec element(const AlgebraPtr& A);
  Vec nonzero_element(const AlgebraPtr& A);
  SkewSeries series(const CtxPtr& ctx, int precision);
  SkewSeries unit_constant_series(const CtxPtr& ctx, int precision);
  SkewLaurent laurent(const CtxPtr& ctx, int min_val, int relprec);

  std::mt19937_64& rng() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// Options for the sampling-based parts of a verification run.
struct VerifyOptions {
  int precision = 8;
  int samples = 200;       // random triples/pairs per law
  std::uint64_t seed = 20260824;
};

/// Full verification scenario for one (A, alpha): arithmetic laws,
/// inversion, rank theorem, uniserial chains, alpha-prime transfer,
/// induced corollary, semiprime witnesses, conjugation.
Report run_verify(const CtxPtr& ctx, const VerifyOptions& opt = {});

/// Every built-in context through run_verify; claims are prefixed with the
/// context name.
Report run_selftest(const VerifyOptions& opt = {});

}  // namespace skewrank
