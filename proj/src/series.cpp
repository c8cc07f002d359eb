#include "skewrank/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace skewrank {

namespace {

// Window size granted to exact monomials like y^k, so they never limit the
// precision of whatever they multiply at desk scale.  The window is
// materialized, so it must stay small.
constexpr int kExactWindow = 1 << 12;

void check_ctx(const CtxPtr& a, const CtxPtr& b) {
  if (a != b) throw skew_error(errc::context_mismatch, "series from different skew contexts");
}

void check_precision(int n) {
  if (n < 1) throw skew_error(errc::bad_input, "precision must be >= 1");
}

}  // namespace

CtxPtr make_context(AlgebraPtr a, Automorphism alpha) {
  return std::make_shared<const SkewContext>(std::move(a), std::move(alpha));
}

SkewSeries series_zero(CtxPtr ctx, int precision) {
  check_precision(precision);
  SkewSeries f{ctx, precision, std::vector<Vec>(precision, ctx->algebra->zero())};
  return f;
}

SkewSeries series_one(CtxPtr ctx, int precision) {
  Vec one = ctx->algebra->unit();
  return series_constant(std::move(ctx), one, precision);
}

SkewSeries series_constant(CtxPtr ctx, const Vec& a, int precision) {
  SkewSeries f = series_zero(ctx, precision);
  f.coeffs[0] = a;
  return f;
}

SkewSeries series_monomial(CtxPtr ctx, const Vec& a, int k, int precision) {
  if (k < 0) throw skew_error(errc::bad_input, "power series need k >= 0");
  SkewSeries f = series_zero(ctx, precision);
  if (k < precision) f.coeffs[k] = a;
  return f;
}

SkewSeries series_add(const SkewSeries& f, const SkewSeries& g) {
  check_ctx(f.ctx, g.ctx);
  const PrimeField& F = f.ctx->algebra->field();
  int n = std::min(f.precision, g.precision);
  SkewSeries r = series_zero(f.ctx, n);
  for (int i = 0; i < n; ++i) r.coeffs[i] = vec_add(F, f.coeffs[i], g.coeffs[i]);
  return r;
}

SkewSeries series_neg(const SkewSeries& f) {
  const PrimeField& F = f.ctx->algebra->field();
  SkewSeries r = f;
  for (auto& c : r.coeffs) c = vec_scale(F, F.neg(1), c);
  return r;
}

SkewSeries series_mul(const SkewSeries& f, const SkewSeries& g) {
  check_ctx(f.ctx, g.ctx);
  const auto& A = f.ctx->algebra;
  const auto& alpha = f.ctx->alpha;
  int n = std::min(f.precision, g.precision);
  SkewSeries r = series_zero(f.ctx, n);
  for (int i = 0; i < n; ++i) {
    if (is_zero_vec(f.coeffs[i])) continue;
    for (int j = 0; i + j < n; ++j) {
      if (is_zero_vec(g.coeffs[j])) continue;
      Vec term = A->mul(f.coeffs[i], alpha.apply(g.coeffs[j], i));
      r.coeffs[i + j] = vec_add(A->field(), r.coeffs[i + j], term);
    }
  }
  return r;
}

SkewSeries mul_by_y_power(const SkewSeries& f, int k) {
  if (k < 0) throw skew_error(errc::bad_input, "y-power must be >= 0");
  SkewSeries r = series_zero(f.ctx, f.precision);
  for (int i = 0; i + k < f.precision; ++i)
    r.coeffs[i + k] = f.ctx->alpha.apply(f.coeffs[i], k);
  return r;
}

SkewSeries times_y_power(const SkewSeries& f, int k) {
  if (k < 0) throw skew_error(errc::bad_input, "y-power must be >= 0");
  SkewSeries r = series_zero(f.ctx, f.precision);
  for (int i = 0; i + k < f.precision; ++i) r.coeffs[i + k] = f.coeffs[i];
  return r;
}

bool series_equal(const SkewSeries& f, const SkewSeries& g) {
  check_ctx(f.ctx, g.ctx);
  if (f.precision != g.precision)
    throw skew_error(errc::bad_input, "equality is defined only at equal precision");
  return f.coeffs == g.coeffs;
}

bool congruent_mod_y(const SkewSeries& f, const SkewSeries& g, int k) {
  check_ctx(f.ctx, g.ctx);
  if (k > f.precision || k > g.precision)
    throw skew_error(errc::bad_input, "congruence modulus exceeds precision");
  for (int i = 0; i < k; ++i)
    if (f.coeffs[i] != g.coeffs[i]) return false;
  return true;
}

std::vector<Vec> to_right_coefficients(const SkewSeries& f) {
  std::vector<Vec> b(f.precision);
  for (int i = 0; i < f.precision; ++i) b[i] = f.ctx->alpha.apply(f.coeffs[i], -i);
  return b;
}

SkewSeries from_right_coefficients(CtxPtr ctx, const std::vector<Vec>& b, int precision) {
  check_precision(precision);
  SkewSeries f = series_zero(std::move(ctx), precision);
  for (int i = 0; i < precision && i < static_cast<int>(b.size()); ++i)
    f.coeffs[i] = f.ctx->alpha.apply(b[i], i);
  return f;
}

Vec reduce_mod_y(const SkewSeries& f) { return f.coeffs[0]; }

int valuation(const SkewSeries& f) {
  for (int i = 0; i < f.precision; ++i)
    if (!is_zero_vec(f.coeffs[i])) return i;
  throw skew_error(errc::zero_to_precision, "series vanishes modulo y^N");
}

SkewSeries invert_unit(const SkewSeries& f) {
  const auto& A = f.ctx->algebra;
  const auto& alpha = f.ctx->alpha;
  auto a0_inv = A->inverse(f.coeffs[0]);
  if (!a0_inv) throw skew_error(errc::non_unit_constant_term, "constant term is not a unit");

  // Normalize to constant term 1: ft = a_0^{-1} f.
  std::vector<Vec> ft(f.precision);
  for (int i = 0; i < f.precision; ++i) ft[i] = A->mul(*a0_inv, f.coeffs[i]);

  // u_k = -(ft_1 alpha(u_{k-1}) + ft_2 alpha^2(u_{k-2}) + ... + ft_k), u_0 = 1.
  std::vector<Vec> u(f.precision, A->zero());
  u[0] = A->unit();
  for (int k = 1; k < f.precision; ++k) {
    Vec acc = A->zero();
    for (int i = 1; i <= k; ++i)
      acc = vec_add(A->field(), acc, A->mul(ft[i], alpha.apply(u[k - i], i)));
    u[k] = vec_scale(A->field(), A->field().neg(1), acc);
  }

  // f^{-1} = (sum u_i y^i) * a_0^{-1}, the right factor twisted through alpha.
  SkewSeries g = series_zero(f.ctx, f.precision);
  for (int i = 0; i < f.precision; ++i) g.coeffs[i] = A->mul(u[i], alpha.apply(*a0_inv, i));

  SkewSeries one = series_one(f.ctx, f.precision);
  if (!series_equal(series_mul(f, g), one) || !series_equal(series_mul(g, f), one))
    throw std::logic_error("inversion recursion failed to verify");
  return g;
}

SkewSeries extend_alpha(const SkewSeries& f) {
  SkewSeries r = f;
  for (auto& c : r.coeffs) c = f.ctx->alpha.apply(c);
  return r;
}

SkewSeries semiprime_witness(const SkewSeries& f) {
  const auto& A = f.ctx->algebra;
  const auto& alpha = f.ctx->alpha;
  int i = valuation(f);
  int k = ((-i) % alpha.order() + alpha.order()) % alpha.order();
  if (f.precision <= 2 * i + k)
    throw skew_error(errc::precision_too_small,
                     "need precision > 2*val(f) + k to see the witness coefficient");
  const Vec& a = f.coeffs[i];

  // a*c*a is linear in c, so it is nonzero for some c iff nonzero on a
  // basis element.
  Vec c;
  for (int j = 0; j < A->dim(); ++j) {
    Vec cand = A->basis_vec(j);
    if (!is_zero_vec(A->mul(A->mul(a, cand), a))) { c = cand; break; }
  }
  if (c.empty())
    throw skew_error(errc::not_semiprime, "leading coefficient a has aAa = 0");

  SkewSeries g = series_monomial(f.ctx, alpha.apply(c, -i), k, f.precision);
  if (series_mul(series_mul(f, g), f).is_zero())
    throw std::logic_error("semiprime witness failed to verify");
  return g;
}

namespace {

SkewLaurent normalize_laurent(CtxPtr ctx, int start_degree, std::vector<Vec> coeffs,
                              int known_to) {
  size_t lead = 0;
  while (lead < coeffs.size() && is_zero_vec(coeffs[lead])) ++lead;
  if (lead == coeffs.size()) {
    SkewLaurent z;
    z.ctx = std::move(ctx);
    z.zero = true;
    z.zero_below = known_to;
    return z;
  }
  SkewLaurent f;
  f.ctx = std::move(ctx);
  f.zero = false;
  f.valuation = start_degree + static_cast<int>(lead);
  f.coeffs.assign(coeffs.begin() + static_cast<long>(lead), coeffs.end());
  return f;
}

int known_to(const SkewLaurent& f) {
  return f.zero ? f.zero_below : f.valuation + f.relprec();
}

}  // namespace

SkewLaurent laurent_zero(CtxPtr ctx, int known) {
  SkewLaurent z;
  z.ctx = std::move(ctx);
  z.zero = true;
  z.zero_below = known;
  return z;
}

SkewLaurent laurent_from_series(const SkewSeries& f) {
  return normalize_laurent(f.ctx, 0, f.coeffs, f.precision);
}

SkewLaurent laurent_monomial(CtxPtr ctx, const Vec& a, int degree, int relprec) {
  check_precision(relprec);
  std::vector<Vec> coeffs(static_cast<size_t>(relprec), ctx->algebra->zero());
  coeffs[0] = a;
  return normalize_laurent(std::move(ctx), degree, std::move(coeffs), degree + relprec);
}

SkewLaurent laurent_y_power(CtxPtr ctx, int k, int relprec) {
  Vec one = ctx->algebra->unit();
  return laurent_monomial(std::move(ctx), one, k, relprec <= 0 ? kExactWindow : relprec);
}

SkewLaurent laurent_add(const SkewLaurent& f, const SkewLaurent& g) {
  check_ctx(f.ctx, g.ctx);
  const PrimeField& F = f.ctx->algebra->field();
  int upper = std::min(known_to(f), known_to(g));
  int lower = upper;
  if (!f.zero) lower = std::min(lower, f.valuation);
  if (!g.zero) lower = std::min(lower, g.valuation);
  std::vector<Vec> coeffs(static_cast<size_t>(std::max(0, upper - lower)),
                          f.ctx->algebra->zero());
  auto accumulate = [&](const SkewLaurent& h) {
    if (h.zero) return;
    for (int t = 0; t < h.relprec(); ++t) {
      int d = h.valuation + t;
      if (d >= upper) break;
      coeffs[d - lower] = vec_add(F, coeffs[d - lower], h.coeffs[t]);
    }
  };
  accumulate(f);
  accumulate(g);
  return normalize_laurent(f.ctx, lower, std::move(coeffs), upper);
}

SkewLaurent laurent_mul(const SkewLaurent& f, const SkewLaurent& g) {
  check_ctx(f.ctx, g.ctx);
  const auto& A = f.ctx->algebra;
  const auto& alpha = f.ctx->alpha;
  if (f.zero || g.zero) {
    // The product is known to vanish wherever every contributing term has a
    // known-zero factor.
    int bound = (f.zero ? f.zero_below + (g.zero ? g.zero_below : g.valuation)
                        : f.valuation + g.zero_below);
    return laurent_zero(f.ctx, bound);
  }
  int val = f.valuation + g.valuation;
  int upper = std::min(f.valuation + known_to(g), g.valuation + known_to(f));
  std::vector<Vec> coeffs(static_cast<size_t>(upper - val), A->zero());
  for (int s = 0; s < f.relprec(); ++s) {
    int i = f.valuation + s;
    if (is_zero_vec(f.coeffs[s])) continue;
    for (int t = 0; t < g.relprec(); ++t) {
      int d = i + g.valuation + t;
      if (d >= upper) break;
      if (is_zero_vec(g.coeffs[t])) continue;
      // (a y^i)(b y^j) = a alpha^i(b) y^{i+j}
      Vec term = A->mul(f.coeffs[s], alpha.apply(g.coeffs[t], i));
      coeffs[d - val] = vec_add(A->field(), coeffs[d - val], term);
    }
  }
  return normalize_laurent(f.ctx, val, std::move(coeffs), upper);
}

bool laurent_equal(const SkewLaurent& f, const SkewLaurent& g) {
  check_ctx(f.ctx, g.ctx);
  // Equality as far as both values are known: compare every degree below
  // the smaller known-to bound.
  int upper = std::min(known_to(f), known_to(g));
  auto coeff_at = [](const SkewLaurent& h, int d) -> Vec {
    if (h.zero || d < h.valuation || d >= h.valuation + h.relprec())
      return Vec(h.ctx->algebra->dim(), 0);
    return h.coeffs[static_cast<size_t>(d - h.valuation)];
  };
  int lower = upper;
  if (!f.zero) lower = std::min(lower, f.valuation);
  if (!g.zero) lower = std::min(lower, g.valuation);
  for (int d = lower; d < upper; ++d)
    if (coeff_at(f, d) != coeff_at(g, d)) return false;
  return true;
}

int valuation(const SkewLaurent& f) {
  if (f.zero)
    throw skew_error(errc::zero_to_precision, "Laurent series vanishes to its precision");
  return f.valuation;
}

SkewLaurent conjugate_by_y(const SkewLaurent& f) {
  SkewLaurent y = laurent_y_power(f.ctx, 1, 0);
  SkewLaurent yinv = laurent_y_power(f.ctx, -1, 0);
  return laurent_mul(y, laurent_mul(f, yinv));
}

SkewLaurent extend_alpha(const SkewLaurent& f) {
  SkewLaurent r = f;
  for (auto& c : r.coeffs) c = f.ctx->alpha.apply(c);
  return r;
}

SkewLaurent laurent_invert(const SkewLaurent& f) {
  if (f.zero) throw skew_error(errc::zero_to_precision, "cannot invert a zero series");
  // f = h * y^v with h a power series whose constant term is the leading
  // coefficient of f.
  SkewSeries h = series_zero(f.ctx, f.relprec());
  for (int t = 0; t < f.relprec(); ++t) h.coeffs[t] = f.coeffs[t];
  SkewSeries hinv = invert_unit(h);  // throws NonUnitConstantTerm as needed
  SkewLaurent out = laurent_mul(laurent_y_power(f.ctx, -f.valuation, 0),
                                laurent_from_series(hinv));
  SkewLaurent prod = laurent_mul(f, out);
  if (prod.zero || prod.valuation != 0 || prod.coeffs[0] != f.ctx->algebra->unit())
    throw std::logic_error("laurent inversion failed to verify");
  return out;
}

InducedIdealView::InducedIdealView(CtxPtr ctx, Ideal base)
    : ctx_(std::move(ctx)), base_(std::move(base)) {
  if (base_.algebra() != ctx_->algebra)
    throw skew_error(errc::algebra_mismatch, "ideal of a different coefficient algebra");
  if (!is_alpha_ideal(base_, ctx_->alpha))
    throw skew_error(errc::not_alpha_ideal, "induced ideals need alpha(I) = I");
  for (int r = 0; r < base_.dim(); ++r) gens_.push_back(base_.space().basis().row(r));
  if (!base_.is_full()) {
    quot_ = quotient_algebra(ctx_->algebra, base_);
    qctx_ = make_context(quot_->alg, induced_automorphism(*quot_, ctx_->alpha, base_));
  }
}

const QuotientAlgebra& InducedIdealView::quotient() const {
  if (!quot_) throw skew_error(errc::not_proper, "the full ideal has no quotient ring");
  return *quot_;
}

const CtxPtr& InducedIdealView::quotient_context() const {
  if (!qctx_) throw skew_error(errc::not_proper, "the full ideal has no quotient ring");
  return qctx_;
}

bool induced_membership(const InducedIdealView& view, const SkewSeries& f) {
  check_ctx(view.context(), f.ctx);
  bool left = true;
  for (const auto& c : f.coeffs)
    if (!view.base_ideal().contains(c)) { left = false; break; }
  bool right = true;
  for (const auto& c : to_right_coefficients(f))
    if (!view.base_ideal().contains(c)) { right = false; break; }
  if (left != right)
    throw std::logic_error("left/right coefficient membership disagree for an alpha-ideal");
  return left;
}

std::vector<SkewSeries> rewrite_in_generators(const InducedIdealView& view, const SkewSeries& f) {
  if (!induced_membership(view, f))
    throw skew_error(errc::not_in_ideal, "series has a coefficient outside the ideal");
  const auto& A = f.ctx->algebra;
  const PrimeField& F = A->field();
  int n = A->dim();
  int m = static_cast<int>(view.generators().size());

  // h_i = sum_j g_j r_{ji}: one linear system per degree, unknowns the
  // concatenated r_{ji}.
  Mat stacked(n, n * m);
  for (int j = 0; j < m; ++j) {
    Mat L = A->left_mul_matrix(view.generators()[j]);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) stacked.at(r, j * n + c) = L.at(r, c);
  }

  std::vector<SkewSeries> out(static_cast<size_t>(m), series_zero(f.ctx, f.precision));
  for (int i = 0; i < f.precision; ++i) {
    auto sol = solve(F, stacked, f.coeffs[i]);
    if (!sol) throw std::logic_error("degreewise rewrite system is inconsistent");
    for (int j = 0; j < m; ++j)
      out[j].coeffs[i] = Vec(sol->begin() + static_cast<long>(j) * n,
                             sol->begin() + static_cast<long>(j + 1) * n);
  }

  SkewSeries check = series_zero(f.ctx, f.precision);
  for (int j = 0; j < m; ++j)
    check = series_add(check, series_mul(series_constant(f.ctx, view.generators()[j], f.precision),
                                         out[j]));
  if (!series_equal(check, f)) throw std::logic_error("generator rewrite failed to verify");
  return out;
}

SkewSeries reduce_mod_induced(const InducedIdealView& view, const SkewSeries& f) {
  check_ctx(view.context(), f.ctx);
  SkewSeries r = series_zero(view.quotient_context(), f.precision);
  for (int i = 0; i < f.precision; ++i) r.coeffs[i] = view.quotient().project(f.coeffs[i]);
  return r;
}

}  // namespace skewrank
