#pragma once

#include <memory>
#include <vector>

#include "skewrank/structure.hpp"

namespace skewrank {

/// Coefficient ring plus twisting automorphism: the data defining
/// B = A[[y;alpha]] and B' = A[[y^{±1};alpha]].
struct SkewContext {
  AlgebraPtr algebra;
  Automorphism alpha;

  SkewContext(AlgebraPtr a, Automorphism al) : algebra(std::move(a)), alpha(std::move(al)) {
    if (alpha.algebra() != algebra)
      throw skew_error(errc::bad_input, "automorphism acts on a different algebra");
  }
};

using CtxPtr = std::shared_ptr<const SkewContext>;

CtxPtr make_context(AlgebraPtr a, Automorphism alpha);

/// Truncated skew power series f = sum a_i y^i, exact modulo y^precision.
/// Coefficients are stored on the left (the right-coefficient view is
/// derived through alpha).
struct SkewSeries {
  CtxPtr ctx;
  int precision = 0;
  std::vector<Vec> coeffs;  // coeffs[i] = a_i, size == precision

  bool is_zero() const {
    for (const auto& c : coeffs)
      if (!is_zero_vec(c)) return false;
    return true;
  }
};

SkewSeries series_zero(CtxPtr ctx, int precision);
SkewSeries series_one(CtxPtr ctx, int precision);
SkewSeries series_constant(CtxPtr ctx, const Vec& a, int precision);
/// a * y^k as a series.
SkewSeries series_monomial(CtxPtr ctx, const Vec& a, int k, int precision);

SkewSeries series_add(const SkewSeries& f, const SkewSeries& g);
SkewSeries series_neg(const SkewSeries& f);
/// Product coefficient k is sum_{i+j=k} a_i * alpha^i(b_j); precision is
/// the minimum of the operands'.
SkewSeries series_mul(const SkewSeries& f, const SkewSeries& g);
/// y^k * f (alpha-twists the coefficients) and f * y^k (plain shift).
SkewSeries mul_by_y_power(const SkewSeries& f, int k);
SkewSeries times_y_power(const SkewSeries& f, int k);

bool series_equal(const SkewSeries& f, const SkewSeries& g);
bool congruent_mod_y(const SkewSeries& f, const SkewSeries& g, int k);

/// Right-coefficient view: f = sum y^i b_i with b_i = alpha^{-i}(a_i).
std::vector<Vec> to_right_coefficients(const SkewSeries& f);
SkewSeries from_right_coefficients(CtxPtr ctx, const std::vector<Vec>& b, int precision);

/// Constant term; the reduction B -> B/<y> = A.
Vec reduce_mod_y(const SkewSeries& f);

int valuation(const SkewSeries& f);

/// Inverse modulo y^precision of a series with unit constant term, via the
/// recursion u_k = -(a_1 alpha(u_{k-1}) + ... + a_k) on the normalized
/// series; both one-sided identities are verified before returning.
SkewSeries invert_unit(const SkewSeries& f);

/// Coefficientwise alpha; the extension of alpha to B fixing y.
SkewSeries extend_alpha(const SkewSeries& f);

/// Witness g with f*g*f != 0 mod y^N over a semiprime coefficient ring;
/// g = alpha^{-i}(c) y^k with i = val(f), k = (-i) mod ord(alpha).
SkewSeries semiprime_witness(const SkewSeries& f);

/// Truncated skew Laurent series.  Nonzero values keep a nonzero leading
/// coefficient at degree `valuation`; values that vanish to their precision
/// carry the explicit zero flag plus the degree bound below which they are
/// known to vanish.
struct SkewLaurent {
  CtxPtr ctx;
  bool zero = true;
  int valuation = 0;           // degree of the leading coefficient
  std::vector<Vec> coeffs;     // coeffs[t] = coefficient of y^{valuation+t}
  int zero_below = 0;          // zero case: no nonzero terms below this degree

  int relprec() const { return static_cast<int>(coeffs.size()); }
};

SkewLaurent laurent_zero(CtxPtr ctx, int known_to);
SkewLaurent laurent_from_series(const SkewSeries& f);
SkewLaurent laurent_monomial(CtxPtr ctx, const Vec& a, int degree, int relprec);
/// y^k (exact monomial, any integer k).
SkewLaurent laurent_y_power(CtxPtr ctx, int k, int relprec);

SkewLaurent laurent_add(const SkewLaurent& f, const SkewLaurent& g);
SkewLaurent laurent_mul(const SkewLaurent& f, const SkewLaurent& g);
bool laurent_equal(const SkewLaurent& f, const SkewLaurent& g);

int valuation(const SkewLaurent& f);

/// y * f * y^{-1}; must equal extend_alpha(f).
SkewLaurent conjugate_by_y(const SkewLaurent& f);
SkewLaurent extend_alpha(const SkewLaurent& f);

/// Inverse of a Laurent series with unit leading coefficient (valuation
/// shift composed with power series inversion).
SkewLaurent laurent_invert(const SkewLaurent& f);

/// The induced ideal I[[y;alpha]] = IB for an alpha-ideal I, carried by a
/// finite right-generator list.
class InducedIdealView {
 public:
  InducedIdealView(CtxPtr ctx, Ideal base);

  const CtxPtr& context() const { return ctx_; }
  const Ideal& base_ideal() const { return base_; }
  const std::vector<Vec>& generators() const { return gens_; }

  /// Quotient data for B/IB = (A/I)[[y;alpha]]; only available for proper
  /// ideals (throws NotProper for I = A).
  const QuotientAlgebra& quotient() const;
  const CtxPtr& quotient_context() const;

 private:
  CtxPtr ctx_;
  Ideal base_;
  std::vector<Vec> gens_;
  std::optional<QuotientAlgebra> quot_;
  CtxPtr qctx_;
};

/// True iff every left coefficient lies in the base ideal (equivalently
/// every right coefficient; both are checked).
bool induced_membership(const InducedIdealView& view, const SkewSeries& f);

/// Series s_1, ..., s_n with f = sum g_j s_j mod y^N, solved degreewise
/// and verified by multiplication.
std::vector<SkewSeries> rewrite_in_generators(const InducedIdealView& view, const SkewSeries& f);

/// Coefficientwise projection B -> (A/I)[[y;alpha]].
SkewSeries reduce_mod_induced(const InducedIdealView& view, const SkewSeries& f);

}  // namespace skewrank
