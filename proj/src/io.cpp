#include "skewrank/io.hpp"

#include <fstream>
#include <sstream>

namespace skewrank {

namespace {

using nlohmann::json;

Vec parse_vec(const json& j, int dim, int p, const char* what) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim)
    throw skew_error(errc::bad_input, std::string(what) + " must be an array of length dim");
  Vec v(dim, 0);
  for (int i = 0; i < dim; ++i) {
    long long x = j[i].get<long long>();
    v[i] = static_cast<std::uint8_t>(((x % p) + p) % p);
  }
  return v;
}

Mat parse_matrix(const json& j, int dim, int p) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim)
    throw skew_error(errc::bad_input, "automorphism must be a dim x dim array");
  Mat m(dim, dim);
  for (int r = 0; r < dim; ++r) {
    Vec row = parse_vec(j[r], dim, p, "automorphism row");
    m.set_row(r, row);
  }
  return m;
}

RingSpec spec_from_parts(AlgebraPtr A, const json& j) {
  if (j.is_object() && j.contains("automorphism")) {
    Mat m = parse_matrix(j.at("automorphism"), A->dim(), A->field().p());
    return RingSpec{A, Automorphism(A, m)};
  }
  return RingSpec{A, Automorphism::identity(A)};
}

}  // namespace

RingSpec parse_ring_spec(const json& j) {
  if (!j.is_object()) throw skew_error(errc::bad_input, "ring spec must be a JSON object");

  if (j.contains("matrix")) {
    const auto& m = j.at("matrix");
    AlgebraPtr A = matrix_algebra(m.at("k").get<int>(), m.at("p").get<int>());
    return spec_from_parts(A, j);
  }
  if (j.contains("product")) {
    const auto& p = j.at("product");
    if (!p.is_array() || p.size() != 2)
      throw skew_error(errc::bad_input, "product shorthand takes exactly two specs");
    RingSpec a = parse_ring_spec(p[0]);
    RingSpec b = parse_ring_spec(p[1]);
    AlgebraPtr P = direct_product(a.algebra, b.algebra);
    if (j.contains("automorphism")) return spec_from_parts(P, j);
    return RingSpec{P, product_automorphism(P, a.alpha, b.alpha)};
  }

  int p = j.at("field").at("p").get<int>();
  PrimeField F(p);
  int dim = j.at("dim").get<int>();
  if (dim <= 0) throw skew_error(errc::bad_input, "dim must be positive");

  std::vector<std::string> names;
  if (j.contains("basis"))
    for (const auto& s : j.at("basis")) names.push_back(s.get<std::string>());

  Vec unit = parse_vec(j.at("unit"), dim, p, "unit");

  std::vector<Vec> sc(static_cast<size_t>(dim) * dim, Vec(dim, 0));
  for (const auto& entry : j.at("mul")) {
    if (!entry.is_array() || entry.size() != 3)
      throw skew_error(errc::bad_input, "mul entries are [i, j, coeffs]");
    int i = entry[0].get<int>();
    int k = entry[1].get<int>();
    if (i < 0 || i >= dim || k < 0 || k >= dim)
      throw skew_error(errc::bad_input, "mul entry index out of range");
    sc[static_cast<size_t>(i) * dim + k] = parse_vec(entry[2], dim, p, "mul coefficients");
  }

  AlgebraPtr A = Algebra::make(F, dim, std::move(sc), unit, names);
  return spec_from_parts(A, j);
}

RingSpec load_ring_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw skew_error(errc::bad_input, "cannot open spec file " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw skew_error(errc::bad_input, std::string("spec file is not valid JSON: ") + e.what());
  }
  return parse_ring_spec(j);
}

CtxPtr context_from_spec(const RingSpec& spec) {
  return make_context(spec.algebra, spec.alpha);
}

SkewSeries parse_series(const json& j, const CtxPtr& ctx) {
  int prec = j.at("precision").get<int>();
  SkewSeries f = series_zero(ctx, prec);
  const auto& coeffs = j.at("coeffs");
  if (static_cast<int>(coeffs.size()) > prec)
    throw skew_error(errc::bad_input, "more coefficients than the precision allows");
  for (size_t i = 0; i < coeffs.size(); ++i)
    f.coeffs[i] = parse_vec(coeffs[i], ctx->algebra->dim(), ctx->algebra->field().p(), "coefficient");
  return f;
}

SkewSeries load_series(const std::string& path, const CtxPtr& ctx) {
  std::ifstream in(path);
  if (!in) throw skew_error(errc::bad_input, "cannot open series file " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw skew_error(errc::bad_input, std::string("series file is not valid JSON: ") + e.what());
  }
  return parse_series(j, ctx);
}

json series_to_json(const SkewSeries& f) {
  json coeffs = json::array();
  for (const auto& c : f.coeffs) {
    json row = json::array();
    for (auto x : c) row.push_back(static_cast<int>(x));
    coeffs.push_back(row);
  }
  return json{{"precision", f.precision}, {"coeffs", coeffs}};
}

SkewLaurent parse_laurent(const json& j, const CtxPtr& ctx) {
  int val = j.value("valuation", 0);
  int prec = j.at("precision").get<int>();
  const auto& coeffs = j.at("coeffs");
  std::vector<Vec> c;
  for (const auto& entry : coeffs)
    c.push_back(parse_vec(entry, ctx->algebra->dim(), ctx->algebra->field().p(), "coefficient"));
  while (static_cast<int>(c.size()) < prec) c.push_back(ctx->algebra->zero());
  SkewSeries tmp{ctx, static_cast<int>(c.size()), c};
  SkewLaurent f = laurent_from_series(tmp);
  if (!f.zero) f.valuation += val;
  else f.zero_below += val;
  return f;
}

json laurent_to_json(const SkewLaurent& f) {
  json coeffs = json::array();
  for (const auto& c : f.coeffs) {
    json row = json::array();
    for (auto x : c) row.push_back(static_cast<int>(x));
    coeffs.push_back(row);
  }
  int val = f.zero ? f.zero_below : f.valuation;
  return json{{"precision", f.zero ? 0 : f.relprec()}, {"valuation", val}, {"coeffs", coeffs}};
}

Ideal parse_ideal_generators(const std::string& text, const AlgebraPtr& A) {
  std::vector<Vec> gens;
  std::stringstream ss(text);
  std::string gen;
  while (std::getline(ss, gen, ';')) {
    if (gen.empty()) continue;
    Vec v(A->dim(), 0);
    std::stringstream gs(gen);
    std::string tok;
    int i = 0;
    while (std::getline(gs, tok, ',')) {
      if (i >= A->dim()) throw skew_error(errc::bad_input, "generator has too many coordinates");
      long long x = std::stoll(tok);
      int p = A->field().p();
      v[i++] = static_cast<std::uint8_t>(((x % p) + p) % p);
    }
    if (i != A->dim()) throw skew_error(errc::bad_input, "generator has too few coordinates");
    gens.push_back(v);
  }
  return ideal_closure(A, gens);
}

}  // namespace skewrank
