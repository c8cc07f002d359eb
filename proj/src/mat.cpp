#include "skewrank/mat.hpp"

#include <algorithm>

namespace skewrank {

Mat identity_mat(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Mat mat_mul(const PrimeField& F, const Mat& a, const Mat& b) {
  Mat r(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      int aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols; ++j)
        r.at(i, j) = static_cast<std::uint8_t>(F.add(r.at(i, j), F.mul(aik, b.at(k, j))));
    }
  return r;
}

Mat mat_add(const PrimeField& F, const Mat& a, const Mat& b) {
  Mat r(a.rows, a.cols);
  for (size_t i = 0; i < r.d.size(); ++i) r.d[i] = static_cast<std::uint8_t>(F.add(a.d[i], b.d[i]));
  return r;
}

Mat mat_sub(const PrimeField& F, const Mat& a, const Mat& b) {
  Mat r(a.rows, a.cols);
  for (size_t i = 0; i < r.d.size(); ++i) r.d[i] = static_cast<std::uint8_t>(F.sub(a.d[i], b.d[i]));
  return r;
}

Mat transpose(const Mat& m) {
  Mat r(m.cols, m.rows);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) r.at(j, i) = m.at(i, j);
  return r;
}

Mat stack_rows(const Mat& a, const Mat& b) {
  Mat r(a.rows + b.rows, a.cols);
  std::copy(a.d.begin(), a.d.end(), r.d.begin());
  std::copy(b.d.begin(), b.d.end(), r.d.begin() + a.d.size());
  return r;
}

Vec apply(const PrimeField& F, const Mat& m, const Vec& v) {
  Vec r(m.rows, 0);
  for (int i = 0; i < m.rows; ++i) {
    int acc = 0;
    for (int j = 0; j < m.cols; ++j) acc = F.add(acc, F.mul(m.at(i, j), v[j]));
    r[i] = static_cast<std::uint8_t>(acc);
  }
  return r;
}

Vec vec_add(const PrimeField& F, const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = static_cast<std::uint8_t>(F.add(a[i], b[i]));
  return r;
}

Vec vec_sub(const PrimeField& F, const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = static_cast<std::uint8_t>(F.sub(a[i], b[i]));
  return r;
}

Vec vec_scale(const PrimeField& F, int c, const Vec& a) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = static_cast<std::uint8_t>(F.mul(c, a[i]));
  return r;
}

void vec_add_scaled(const PrimeField& F, Vec& acc, int c, const Vec& a) {
  for (size_t i = 0; i < a.size(); ++i) acc[i] = static_cast<std::uint8_t>(F.add(acc[i], F.mul(c, a[i])));
}

namespace {

// In-place elimination; returns pivot columns.  When reduce_up is set the
// result is fully reduced (RREF).
std::vector<int> eliminate(const PrimeField& F, Mat& m, bool reduce_up) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols && row < m.rows; ++col) {
    int piv = -1;
    for (int r = row; r < m.rows; ++r)
      if (m.at(r, col) != 0) { piv = r; break; }
    if (piv < 0) continue;
    if (piv != row)
      for (int c = 0; c < m.cols; ++c) std::swap(m.at(piv, c), m.at(row, c));
    int inv = F.inv(m.at(row, col));
    for (int c = 0; c < m.cols; ++c) m.at(row, c) = static_cast<std::uint8_t>(F.mul(inv, m.at(row, c)));
    int lo = reduce_up ? 0 : row + 1;
    for (int r = lo; r < m.rows; ++r) {
      if (r == row) continue;
      int f = m.at(r, col);
      if (f == 0) continue;
      for (int c = 0; c < m.cols; ++c)
        m.at(r, c) = static_cast<std::uint8_t>(F.sub(m.at(r, c), F.mul(f, m.at(row, c))));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

Mat rref(const PrimeField& F, Mat m) {
  auto pivots = eliminate(F, m, true);
  Mat out(static_cast<int>(pivots.size()), m.cols);
  for (int r = 0; r < out.rows; ++r)
    for (int c = 0; c < m.cols; ++c) out.at(r, c) = m.at(r, c);
  return out;
}

int mat_rank(const PrimeField& F, Mat m) { return static_cast<int>(eliminate(F, m, false).size()); }

std::optional<Vec> solve(const PrimeField& F, const Mat& m, const Vec& b) {
  Mat aug(m.rows, m.cols + 1);
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols) = b[i];
  }
  auto pivots = eliminate(F, aug, true);
  Vec x(m.cols, 0);
  for (size_t k = 0; k < pivots.size(); ++k) {
    if (pivots[k] == m.cols) return std::nullopt;  // pivot in the augmented column
    x[pivots[k]] = aug.at(static_cast<int>(k), m.cols);
  }
  return x;
}

Mat kernel(const PrimeField& F, const Mat& m) {
  Mat r = m;
  auto pivots = eliminate(F, r, true);
  std::vector<bool> is_pivot(m.cols, false);
  for (int c : pivots) is_pivot[c] = true;
  int nullity = m.cols - static_cast<int>(pivots.size());
  Mat out(nullity, m.cols);
  int row = 0;
  for (int free_col = 0; free_col < m.cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    out.at(row, free_col) = 1;
    for (size_t k = 0; k < pivots.size(); ++k)
      out.at(row, pivots[k]) = static_cast<std::uint8_t>(F.neg(r.at(static_cast<int>(k), free_col)));
    ++row;
  }
  return out;
}

std::optional<Mat> mat_inverse(const PrimeField& F, const Mat& m) {
  if (m.rows != m.cols) return std::nullopt;
  int n = m.rows;
  Mat aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = 1;
  }
  auto pivots = eliminate(F, aug, true);
  if (static_cast<int>(pivots.size()) != n || pivots[n - 1] != n - 1) return std::nullopt;
  Mat inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

bool mat_is_zero(const Mat& m) {
  for (auto x : m.d)
    if (x != 0) return false;
  return true;
}

bool RowSpace::contains(const Vec& v) const { return is_zero_vec(reduce(v)); }

bool RowSpace::contains(const RowSpace& other) const {
  for (int r = 0; r < other.dim(); ++r)
    if (!contains(other.basis().row(r))) return false;
  return true;
}

Vec RowSpace::reduce(const Vec& v) const {
  Vec r = v;
  for (int row = 0; row < basis_.rows; ++row) {
    int piv = -1;
    for (int c = 0; c < ambient_; ++c)
      if (basis_.at(row, c) != 0) { piv = c; break; }
    int f = r[piv];
    if (f == 0) continue;
    for (int c = 0; c < ambient_; ++c)
      r[c] = static_cast<std::uint8_t>(F_.sub(r[c], F_.mul(f, basis_.at(row, c))));
  }
  return r;
}

std::optional<Vec> RowSpace::coordinates(const Vec& v) const {
  if (!contains(v)) return std::nullopt;
  return solve(F_, transpose(basis_), v);
}

RowSpace RowSpace::sum(const RowSpace& other) const {
  return RowSpace(F_, ambient_, stack_rows(basis_, other.basis_));
}

RowSpace RowSpace::intersect(const RowSpace& other) const {
  // Zassenhaus: row reduce [U | U; W | 0]; rows with zero left block carry
  // a basis of the intersection in the right block.
  int n = ambient_;
  Mat big(basis_.rows + other.basis_.rows, 2 * n);
  for (int r = 0; r < basis_.rows; ++r)
    for (int c = 0; c < n; ++c) {
      big.at(r, c) = basis_.at(r, c);
      big.at(r, n + c) = basis_.at(r, c);
    }
  for (int r = 0; r < other.basis_.rows; ++r)
    for (int c = 0; c < n; ++c) big.at(basis_.rows + r, c) = other.basis_.at(r, c);
  Mat red = rref(F_, big);
  Mat inter(0, n);
  for (int r = 0; r < red.rows; ++r) {
    bool left_zero = true;
    for (int c = 0; c < n; ++c)
      if (red.at(r, c) != 0) { left_zero = false; break; }
    if (!left_zero) continue;
    Mat row1(1, n);
    for (int c = 0; c < n; ++c) row1.at(0, c) = red.at(r, n + c);
    inter = stack_rows(inter, row1);
  }
  return RowSpace(F_, n, inter);
}

bool RowSpace::grow(const Vec& v) {
  if (contains(v)) return false;
  Mat m(1, ambient_);
  m.set_row(0, v);
  basis_ = rref(F_, stack_rows(basis_, m));
  return true;
}

std::string RowSpace::key() const {
  std::string k;
  k.reserve(basis_.d.size() + 8);
  k += static_cast<char>(basis_.rows);
  for (auto x : basis_.d) k += static_cast<char>(x);
  return k;
}

RowSpace RowSpace::full(PrimeField F, int ambient) {
  return RowSpace(F, ambient, identity_mat(ambient));
}

long long pow_cap(int p, int k, long long cap) {
  long long r = 1;
  for (int i = 0; i < k; ++i) {
    r *= p;
    if (r > cap) return cap + 1;
  }
  return r;
}

}  // namespace skewrank
