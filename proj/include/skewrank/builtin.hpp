#pragma once

#include <string>
#include <vector>

#include "skewrank/series.hpp"

namespace skewrank {

/// Named (A, alpha) pair from the built-in zoo.
struct NamedContext {
  std::string name;
  CtxPtr ctx;
};

/// The self-test zoo: F_p, F_2 x F_2 with swap and identity, matrix
/// algebras with identity and an inner automorphism, the dual numbers, and
/// mixed products.
std::vector<NamedContext> builtin_contexts();

/// The semiprime subset used by the rank-theorem scenarios.
std::vector<NamedContext> semiprime_contexts();

}  // namespace skewrank
