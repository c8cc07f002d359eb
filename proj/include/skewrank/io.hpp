#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "skewrank/series.hpp"

namespace skewrank {

/// Parsed ring-spec document: the algebra and, when given, the automorphism
/// (identity otherwise).
struct RingSpec {
  AlgebraPtr algebra;
  Automorphism alpha;
};

/// Accepts the full structure-constant form
///   { "field": {"p": 2}, "dim": n, "basis": [...], "unit": [...],
///     "mul": [[i, j, [c_0, ..., c_{n-1}]], ...], "automorphism": [[...]] }
/// and the shorthands {"matrix": {"k": 2, "p": 2}} and
/// {"product": [spec, spec]}.
RingSpec parse_ring_spec(const nlohmann::json& j);
RingSpec load_ring_spec(const std::string& path);

CtxPtr context_from_spec(const RingSpec& spec);

/// Series documents: {"precision": N, "coeffs": [[...], ...]}; Laurent
/// series add "valuation".  Round-trips are bit-exact.
SkewSeries parse_series(const nlohmann::json& j, const CtxPtr& ctx);
SkewSeries load_series(const std::string& path, const CtxPtr& ctx);
nlohmann::json series_to_json(const SkewSeries& f);

SkewLaurent parse_laurent(const nlohmann::json& j, const CtxPtr& ctx);
nlohmann::json laurent_to_json(const SkewLaurent& f);

/// Ideal generators in CLI form "c,c,...;c,c,..." (one generator per ';').
Ideal parse_ideal_generators(const std::string& text, const AlgebraPtr& A);

}  // namespace skewrank
