#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "skewrank/fp.hpp"

namespace skewrank {

/// Dense matrix over F_p, row major.  Linear maps use the column
/// convention: the image of a row vector v under M is apply(F, M, v),
/// i.e. M * v^T read back as a row.
struct Mat {
  int rows = 0;
  int cols = 0;
  std::vector<std::uint8_t> d;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), d(static_cast<size_t>(r) * c, 0) {}

  std::uint8_t& at(int r, int c) { return d[static_cast<size_t>(r) * cols + c]; }
  std::uint8_t at(int r, int c) const { return d[static_cast<size_t>(r) * cols + c]; }

  Vec row(int r) const { return Vec(d.begin() + static_cast<size_t>(r) * cols,
                                    d.begin() + static_cast<size_t>(r + 1) * cols); }
  void set_row(int r, const Vec& v) {
    for (int c = 0; c < cols; ++c) at(r, c) = v[c];
  }

  bool operator==(const Mat& o) const { return rows == o.rows && cols == o.cols && d == o.d; }
};

Mat identity_mat(int n);
Mat mat_mul(const PrimeField& F, const Mat& a, const Mat& b);
Mat mat_add(const PrimeField& F, const Mat& a, const Mat& b);
Mat mat_sub(const PrimeField& F, const Mat& a, const Mat& b);
Mat transpose(const Mat& m);
Mat stack_rows(const Mat& a, const Mat& b);

/// M * v^T as a row vector.
Vec apply(const PrimeField& F, const Mat& m, const Vec& v);

Vec vec_add(const PrimeField& F, const Vec& a, const Vec& b);
Vec vec_sub(const PrimeField& F, const Vec& a, const Vec& b);
Vec vec_scale(const PrimeField& F, int c, const Vec& a);
void vec_add_scaled(const PrimeField& F, Vec& acc, int c, const Vec& a);

/// Reduced row echelon form with zero rows stripped and rows ordered by
/// pivot column.  Canonical: equal row spaces give equal matrices.
Mat rref(const PrimeField& F, Mat m);

int mat_rank(const PrimeField& F, Mat m);

/// Solve M * x^T = b^T; free variables are set to zero.
std::optional<Vec> solve(const PrimeField& F, const Mat& m, const Vec& b);

/// Basis (as rows) of { x : M * x^T = 0 }.
Mat kernel(const PrimeField& F, const Mat& m);

std::optional<Mat> mat_inverse(const PrimeField& F, const Mat& m);

bool mat_is_zero(const Mat& m);

/// Canonical subspace of F_p^n given by a row-reduced basis.
class RowSpace {
 public:
  RowSpace(PrimeField F, int ambient) : F_(F), ambient_(ambient), basis_(0, ambient) {}
  RowSpace(PrimeField F, int ambient, const Mat& spanning)
      : F_(F), ambient_(ambient), basis_(rref(F, spanning)) {}

  const PrimeField& field() const { return F_; }
  int ambient() const { return ambient_; }
  int dim() const { return basis_.rows; }
  const Mat& basis() const { return basis_; }

  bool contains(const Vec& v) const;
  bool contains(const RowSpace& other) const;
  /// Residual of v after elimination against the basis (zero iff contained).
  Vec reduce(const Vec& v) const;
  /// Coordinates of v in the basis rows, when contained.
  std::optional<Vec> coordinates(const Vec& v) const;

  RowSpace sum(const RowSpace& other) const;
  RowSpace intersect(const RowSpace& other) const;

  /// Adds one vector to the span; returns true if the dimension grew.
  bool grow(const Vec& v);

  bool operator==(const RowSpace& o) const { return basis_ == o.basis_; }
  bool operator!=(const RowSpace& o) const { return !(*this == o); }

  /// Byte key for hashing / dedup (canonical since the basis is canonical).
  std::string key() const;

  static RowSpace full(PrimeField F, int ambient);

 private:
  PrimeField F_;
  int ambient_;
  Mat basis_;
};

/// Enumerates all p^k coefficient vectors of length k (odometer order).
class VecRange {
 public:
  VecRange(PrimeField F, int len) : F_(F), len_(len) {}

  template <typename Fn>
  void for_each(Fn&& fn) const {
    Vec v(len_, 0);
    while (true) {
      fn(const_cast<const Vec&>(v));
      int i = 0;
      while (i < len_) {
        if (++v[i] < F_.p()) break;
        v[i] = 0;
        ++i;
      }
      if (i == len_) return;
    }
  }

 private:
  PrimeField F_;
  int len_;
};

/// p^k as long long with an overflow guard (returns cap+1 when exceeding cap).
long long pow_cap(int p, int k, long long cap);

/// Iterates over every element of a row space (all coefficient combinations).
template <typename Fn>
void for_each_in_space(const RowSpace& S, Fn&& fn) {
  const PrimeField& F = S.field();
  VecRange(F, S.dim()).for_each([&](const Vec& coeffs) {
    Vec v(S.ambient(), 0);
    for (int i = 0; i < S.dim(); ++i)
      vec_add_scaled(F, v, coeffs[i], S.basis().row(i));
    fn(const_cast<const Vec&>(v));
  });
}

}  // namespace skewrank
