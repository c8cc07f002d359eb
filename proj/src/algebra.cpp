#include "skewrank/algebra.hpp"

#include <algorithm>

namespace skewrank {

AlgebraPtr Algebra::make(PrimeField field, int dim, std::vector<Vec> structure_constants,
                         Vec unit, std::vector<std::string> basis_names) {
  if (dim <= 0) throw skew_error(errc::bad_input, "algebra dimension must be positive");
  if (static_cast<int>(structure_constants.size()) != dim * dim)
    throw skew_error(errc::bad_input, "structure constant table has wrong size");
  for (auto& v : structure_constants) {
    if (static_cast<int>(v.size()) != dim)
      throw skew_error(errc::bad_input, "structure constant vector has wrong length");
    for (auto& x : v) x = static_cast<std::uint8_t>(x % field.p());
  }
  if (static_cast<int>(unit.size()) != dim)
    throw skew_error(errc::bad_input, "unit vector has wrong length");
  for (auto& x : unit) x = static_cast<std::uint8_t>(x % field.p());
  if (basis_names.empty()) {
    for (int i = 0; i < dim; ++i) basis_names.push_back("e" + std::to_string(i));
  }
  if (static_cast<int>(basis_names.size()) != dim)
    throw skew_error(errc::bad_input, "basis name list has wrong length");

  AlgebraPtr A(new Algebra(field, dim, std::move(structure_constants), std::move(unit),
                           std::move(basis_names)));

  // Unit axiom on every basis element.
  for (int i = 0; i < dim; ++i) {
    Vec e = A->basis_vec(i);
    if (A->mul(A->unit(), e) != e || A->mul(e, A->unit()) != e)
      throw skew_error(errc::no_unit,
                       "unit fails on basis element " + A->basis_names()[i]);
  }
  // Associativity on every basis triple.
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      Vec ij = A->sc(i, j);
      for (int k = 0; k < dim; ++k) {
        Vec lhs = A->mul(ij, A->basis_vec(k));
        Vec rhs = A->mul(A->basis_vec(i), A->sc(j, k));
        if (lhs != rhs)
          throw skew_error(errc::not_associative,
                           "witness triple (" + A->basis_names()[i] + ", " + A->basis_names()[j] +
                               ", " + A->basis_names()[k] + ")");
      }
    }
  return A;
}

Vec Algebra::mul(const Vec& x, const Vec& y) const {
  Vec r(dim_, 0);
  for (int i = 0; i < dim_; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < dim_; ++j) {
      if (y[j] == 0) continue;
      int c = field_.mul(x[i], y[j]);
      vec_add_scaled(field_, r, c, sc(i, j));
    }
  }
  return r;
}

Mat Algebra::left_mul_matrix(const Vec& x) const {
  Mat m(dim_, dim_);
  for (int j = 0; j < dim_; ++j) {
    Vec col = mul(x, basis_vec(j));
    for (int i = 0; i < dim_; ++i) m.at(i, j) = col[i];
  }
  return m;
}

Mat Algebra::right_mul_matrix(const Vec& x) const {
  Mat m(dim_, dim_);
  for (int j = 0; j < dim_; ++j) {
    Vec col = mul(basis_vec(j), x);
    for (int i = 0; i < dim_; ++i) m.at(i, j) = col[i];
  }
  return m;
}

std::optional<Vec> Algebra::inverse(const Vec& x) const {
  auto g = solve(field_, left_mul_matrix(x), unit_);
  if (!g) return std::nullopt;
  if (mul(*g, x) != unit_) return std::nullopt;
  return g;
}

Element elem(AlgebraPtr a, Vec v) {
  if (static_cast<int>(v.size()) != a->dim())
    throw skew_error(errc::bad_input, "coordinate vector has wrong length");
  for (auto& x : v) x = static_cast<std::uint8_t>(x % a->field().p());
  return Element{std::move(a), std::move(v)};
}

static void check_same_algebra(const Element& x, const Element& y) {
  if (x.alg != y.alg) throw skew_error(errc::algebra_mismatch, "elements of different algebras");
}

Element multiply(const Element& x, const Element& y) {
  check_same_algebra(x, y);
  return Element{x.alg, x.alg->mul(x.v, y.v)};
}

Element add(const Element& x, const Element& y) {
  check_same_algebra(x, y);
  return Element{x.alg, vec_add(x.alg->field(), x.v, y.v)};
}

Element negate(const Element& x) {
  return Element{x.alg, vec_scale(x.alg->field(), x.alg->field().neg(1), x.v)};
}

std::optional<Element> is_unit(const Element& x) {
  auto inv = x.alg->inverse(x.v);
  if (!inv) return std::nullopt;
  return Element{x.alg, *inv};
}

static Vec apply_matrix(const PrimeField& F, const Mat& m, const Vec& v) {
  return apply(F, m, v);
}

Automorphism::Automorphism(AlgebraPtr alg, Mat matrix) : alg_(std::move(alg)) {
  const PrimeField& F = alg_->field();
  int n = alg_->dim();
  if (matrix.rows != n || matrix.cols != n)
    throw skew_error(errc::bad_input, "automorphism matrix has wrong shape");
  if (!mat_inverse(F, matrix))
    throw skew_error(errc::bad_input, "automorphism matrix is singular");
  if (apply_matrix(F, matrix, alg_->unit()) != alg_->unit())
    throw skew_error(errc::bad_input, "automorphism does not fix the unit");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Vec lhs = apply_matrix(F, matrix, alg_->sc(i, j));
      Vec rhs = alg_->mul(apply_matrix(F, matrix, alg_->basis_vec(i)),
                          apply_matrix(F, matrix, alg_->basis_vec(j)));
      if (lhs != rhs)
        throw skew_error(errc::bad_input, "automorphism is not multiplicative on basis pair (" +
                                              alg_->basis_names()[i] + ", " + alg_->basis_names()[j] + ")");
    }

  // Order in GL_n(F_p); always finite.
  Mat id = identity_mat(n);
  powers_.push_back(id);
  Mat cur = matrix;
  const long long kOrderCap = 1 << 20;
  long long ord = 1;
  while (!(cur == id)) {
    powers_.push_back(cur);
    cur = mat_mul(F, matrix, cur);
    if (++ord > kOrderCap) throw skew_error(errc::too_large, "automorphism order exceeds cap");
  }
  order_ = static_cast<int>(ord);
  if (order_ == 1) powers_.assign(1, id);
}

Vec Automorphism::apply(const Vec& v, long long k) const {
  return skewrank::apply(alg_->field(), power_matrix(k), v);
}

Element Automorphism::apply(const Element& x, long long k) const {
  if (x.alg != alg_) throw skew_error(errc::algebra_mismatch, "element not in automorphism domain");
  return Element{x.alg, apply(x.v, k)};
}

Automorphism Automorphism::identity(AlgebraPtr alg) {
  int n = alg->dim();
  return Automorphism(std::move(alg), identity_mat(n));
}

namespace {

RowSpace multiplicative_closure(const AlgebraPtr& alg, const std::vector<Vec>& gens, bool left,
                                bool right) {
  RowSpace S(alg->field(), alg->dim());
  std::vector<Vec> queue;
  for (const auto& g : gens)
    if (S.grow(g)) queue.push_back(g);
  while (!queue.empty()) {
    Vec v = queue.back();
    queue.pop_back();
    for (int i = 0; i < alg->dim(); ++i) {
      if (right) {
        Vec w = alg->mul(v, alg->basis_vec(i));
        if (S.grow(w)) queue.push_back(w);
      }
      if (left) {
        Vec w = alg->mul(alg->basis_vec(i), v);
        if (S.grow(w)) queue.push_back(w);
      }
    }
  }
  return S;
}

void check_closed(const AlgebraPtr& alg, const RowSpace& S, bool left, bool right,
                  const char* what) {
  for (int r = 0; r < S.dim(); ++r) {
    Vec v = S.basis().row(r);
    for (int i = 0; i < alg->dim(); ++i) {
      if (right && !S.contains(alg->mul(v, alg->basis_vec(i))))
        throw skew_error(errc::bad_input, std::string(what) + " is not closed under right multiplication");
      if (left && !S.contains(alg->mul(alg->basis_vec(i), v)))
        throw skew_error(errc::bad_input, std::string(what) + " is not closed under left multiplication");
    }
  }
}

}  // namespace

Ideal::Ideal(AlgebraPtr alg, RowSpace space) : alg_(std::move(alg)), space_(std::move(space)) {
  check_closed(alg_, space_, true, true, "ideal");
}

RightIdeal::RightIdeal(AlgebraPtr alg, RowSpace space)
    : alg_(std::move(alg)), space_(std::move(space)) {
  check_closed(alg_, space_, false, true, "right ideal");
}

Ideal ideal_closure(AlgebraPtr alg, const std::vector<Vec>& gens) {
  RowSpace S = multiplicative_closure(alg, gens, true, true);
  return Ideal(std::move(alg), std::move(S));
}

RightIdeal right_ideal_closure(AlgebraPtr alg, const std::vector<Vec>& gens) {
  RowSpace S = multiplicative_closure(alg, gens, false, true);
  return RightIdeal(std::move(alg), std::move(S));
}

static void check_same_algebra(const Ideal& I, const Ideal& J) {
  if (I.algebra() != J.algebra())
    throw skew_error(errc::algebra_mismatch, "ideals of different algebras");
}

Ideal ideal_sum(const Ideal& I, const Ideal& J) {
  check_same_algebra(I, J);
  return Ideal(I.algebra(), I.space().sum(J.space()));
}

Ideal ideal_intersect(const Ideal& I, const Ideal& J) {
  check_same_algebra(I, J);
  return Ideal(I.algebra(), I.space().intersect(J.space()));
}

Ideal ideal_product(const Ideal& I, const Ideal& J) {
  check_same_algebra(I, J);
  const auto& alg = I.algebra();
  std::vector<Vec> prods;
  for (int a = 0; a < I.dim(); ++a)
    for (int b = 0; b < J.dim(); ++b)
      prods.push_back(alg->mul(I.space().basis().row(a), J.space().basis().row(b)));
  // The span of pairwise products is already two-sided; closing keeps it robust.
  return ideal_closure(alg, prods);
}

bool membership(const Vec& x, const Ideal& I) { return I.contains(x); }

bool ideal_is_nilpotent(const Ideal& I, int* steps) {
  Ideal power = I;
  for (int k = 1; k <= I.algebra()->dim() + 1; ++k) {
    if (power.is_zero()) {
      if (steps) *steps = k;
      return true;
    }
    power = ideal_product(power, I);
  }
  return false;
}

AlgebraPtr matrix_algebra(int k, int p) {
  if (k < 1) throw skew_error(errc::bad_input, "matrix algebra size must be >= 1");
  PrimeField F(p);
  int n = k * k;
  auto idx = [k](int r, int c) { return r * k + c; };
  std::vector<Vec> sc(static_cast<size_t>(n) * n, Vec(n, 0));
  std::vector<std::string> names;
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < k; ++c)
      names.push_back("e" + std::to_string(r + 1) + std::to_string(c + 1));
  for (int r = 0; r < k; ++r)
    for (int s = 0; s < k; ++s)
      for (int t = 0; t < k; ++t)
        for (int u = 0; u < k; ++u)
          if (s == t) sc[static_cast<size_t>(idx(r, s)) * n + idx(t, u)][idx(r, u)] = 1;
  Vec unit(n, 0);
  for (int r = 0; r < k; ++r) unit[idx(r, r)] = 1;
  return Algebra::make(F, n, std::move(sc), std::move(unit), std::move(names));
}

AlgebraPtr field_algebra(int p) { return matrix_algebra(1, p); }

AlgebraPtr direct_product(const AlgebraPtr& a, const AlgebraPtr& b) {
  if (a->field() != b->field())
    throw skew_error(errc::bad_field, "direct product factors over different fields");
  int n = a->dim() + b->dim();
  std::vector<Vec> sc(static_cast<size_t>(n) * n, Vec(n, 0));
  for (int i = 0; i < a->dim(); ++i)
    for (int j = 0; j < a->dim(); ++j) {
      const Vec& p = a->sc(i, j);
      for (int t = 0; t < a->dim(); ++t) sc[static_cast<size_t>(i) * n + j][t] = p[t];
    }
  for (int i = 0; i < b->dim(); ++i)
    for (int j = 0; j < b->dim(); ++j) {
      const Vec& p = b->sc(i, j);
      for (int t = 0; t < b->dim(); ++t)
        sc[static_cast<size_t>(a->dim() + i) * n + (a->dim() + j)][a->dim() + t] = p[t];
    }
  Vec unit(n, 0);
  for (int t = 0; t < a->dim(); ++t) unit[t] = a->unit()[t];
  for (int t = 0; t < b->dim(); ++t) unit[a->dim() + t] = b->unit()[t];
  std::vector<std::string> names;
  for (const auto& s : a->basis_names()) names.push_back("l." + s);
  for (const auto& s : b->basis_names()) names.push_back("r." + s);
  return Algebra::make(a->field(), n, std::move(sc), std::move(unit), std::move(names));
}

AlgebraPtr dual_numbers(int p) {
  PrimeField F(p);
  std::vector<Vec> sc(4, Vec(2, 0));
  sc[0] = {1, 0};  // 1*1
  sc[1] = {0, 1};  // 1*t
  sc[2] = {0, 1};  // t*1
  sc[3] = {0, 0};  // t*t
  return Algebra::make(F, 2, std::move(sc), Vec{1, 0}, {"1", "t"});
}

Automorphism swap_automorphism(const AlgebraPtr& product_alg, int half_dim) {
  int n = product_alg->dim();
  if (n != 2 * half_dim) throw skew_error(errc::bad_input, "swap needs equal halves");
  Mat m(n, n);
  for (int i = 0; i < half_dim; ++i) {
    m.at(half_dim + i, i) = 1;
    m.at(i, half_dim + i) = 1;
  }
  return Automorphism(product_alg, m);
}

Automorphism inner_automorphism(const AlgebraPtr& alg, const Vec& u) {
  auto uinv = alg->inverse(u);
  if (!uinv) throw skew_error(errc::bad_input, "inner automorphism needs a unit");
  Mat m(alg->dim(), alg->dim());
  for (int j = 0; j < alg->dim(); ++j) {
    Vec col = alg->mul(alg->mul(u, alg->basis_vec(j)), *uinv);
    for (int i = 0; i < alg->dim(); ++i) m.at(i, j) = col[i];
  }
  return Automorphism(alg, m);
}

Automorphism product_automorphism(const AlgebraPtr& product_alg, const Automorphism& f,
                                  const Automorphism& g) {
  int da = f.algebra()->dim();
  int db = g.algebra()->dim();
  if (product_alg->dim() != da + db)
    throw skew_error(errc::bad_input, "product automorphism dimension mismatch");
  Mat m(da + db, da + db);
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < da; ++j) m.at(i, j) = f.matrix().at(i, j);
  for (int i = 0; i < db; ++i)
    for (int j = 0; j < db; ++j) m.at(da + i, da + j) = g.matrix().at(i, j);
  return Automorphism(product_alg, m);
}

}  // namespace skewrank
