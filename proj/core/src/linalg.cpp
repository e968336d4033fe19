#include "heckevert/linalg.hpp"

#include <stdexcept>

namespace hv {

Mat::Mat(const FieldSpec& fs, int rows, int cols)
    : r_(rows), c_(cols), fs_(fs), a_(static_cast<size_t>(rows) * cols) {}

Mat Mat::identity(const FieldSpec& fs, int n) {
  Mat m(fs, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = fs.one();
  return m;
}

Mat Mat::operator*(const Mat& o) const {
  if (c_ != o.r_) throw std::invalid_argument("Mat: dimension mismatch");
  Mat out(fs_, r_, o.c_);
  for (int i = 0; i < r_; ++i)
    for (int k = 0; k < c_; ++k) {
      const FieldElement& x = at(i, k);
      if (fs_.is_zero(x)) continue;
      for (int j = 0; j < o.c_; ++j)
        out.at(i, j) = fs_.add(out.at(i, j), fs_.mul(x, o.at(k, j)));
    }
  return out;
}

Mat Mat::operator+(const Mat& o) const {
  Mat out(fs_, r_, c_);
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = fs_.add(a_[i], o.a_[i]);
  return out;
}

Mat Mat::operator-(const Mat& o) const {
  Mat out(fs_, r_, c_);
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = fs_.sub(a_[i], o.a_[i]);
  return out;
}

Mat Mat::scaled(const FieldElement& c) const {
  Mat out(fs_, r_, c_);
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = fs_.mul(a_[i], c);
  return out;
}

Mat Mat::transposed() const {
  Mat out(fs_, c_, r_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) out.at(j, i) = at(i, j);
  return out;
}

bool Mat::operator==(const Mat& o) const {
  return r_ == o.r_ && c_ == o.c_ && a_ == o.a_;
}

bool Mat::is_zero() const {
  for (const auto& x : a_)
    if (!fs_.is_zero(x)) return false;
  return true;
}

Vec Mat::row(int i) const {
  return Vec(a_.begin() + static_cast<size_t>(i) * c_,
             a_.begin() + static_cast<size_t>(i + 1) * c_);
}

Mat Mat::kronecker(const Mat& A, const Mat& B) {
  const FieldSpec& fs = A.field();
  Mat out(fs, A.rows() * B.rows(), A.cols() * B.cols());
  for (int i = 0; i < A.rows(); ++i)
    for (int j = 0; j < A.cols(); ++j) {
      const FieldElement& a = A.at(i, j);
      if (fs.is_zero(a)) continue;
      for (int k = 0; k < B.rows(); ++k)
        for (int l = 0; l < B.cols(); ++l)
          out.at(i * B.rows() + k, j * B.cols() + l) = fs.mul(a, B.at(k, l));
    }
  return out;
}

// ---------------------------------------------------------------------------

void Echelon::reduce(Vec& v) const {
  for (size_t r = 0; r < rows_.size(); ++r) {
    const FieldElement& c = v[pivots_[r]];
    if (fs_.is_zero(c)) continue;
    const Vec& piv = rows_[r];
    FieldElement m = c;  // pivot rows have leading coefficient 1
    for (int j = pivots_[r]; j < cols_; ++j) {
      if (fs_.is_zero(piv[j])) continue;
      v[j] = fs_.sub(v[j], fs_.mul(m, piv[j]));
    }
  }
}

bool Echelon::insert(Vec v) {
  if (static_cast<int>(v.size()) != cols_)
    throw std::invalid_argument("Echelon: wrong vector length");
  reduce(v);
  int piv = -1;
  for (int j = 0; j < cols_; ++j)
    if (!fs_.is_zero(v[j])) {
      piv = j;
      break;
    }
  if (piv < 0) return false;
  FieldElement inv = fs_.inv(v[piv]);
  for (int j = piv; j < cols_; ++j) v[j] = fs_.mul(v[j], inv);
  // back-substitute into existing rows to keep the basis reduced
  for (size_t r = 0; r < rows_.size(); ++r) {
    FieldElement c = rows_[r][piv];
    if (fs_.is_zero(c)) continue;
    for (int j = piv; j < cols_; ++j)
      rows_[r][j] = fs_.sub(rows_[r][j], fs_.mul(c, v[j]));
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(piv);
  return true;
}

bool Echelon::contains(Vec v) const {
  reduce(v);
  for (const auto& x : v)
    if (!fs_.is_zero(x)) return false;
  return true;
}

long rank_of(const Mat& m) {
  Echelon e(m.field(), m.cols());
  for (int i = 0; i < m.rows(); ++i) e.insert(m.row(i));
  return e.rank();
}

std::vector<Vec> nullspace(const Mat& A) {
  const FieldSpec& fs = A.field();
  int n = A.cols();
  // echelonize rows, tracking pivot columns
  Echelon e(fs, n);
  for (int i = 0; i < A.rows(); ++i) e.insert(A.row(i));
  std::vector<char> is_pivot(n, 0);
  for (int p : e.pivots()) is_pivot[p] = 1;
  std::vector<Vec> basis;
  for (int j = 0; j < n; ++j) {
    if (is_pivot[j]) continue;
    Vec x(n, fs.zero());
    x[j] = fs.one();
    // for each pivot row: x[pivot] = -row[j]
    for (size_t r = 0; r < e.rows().size(); ++r)
      x[e.pivots()[r]] = fs.neg(e.rows()[r][j]);
    basis.push_back(std::move(x));
  }
  return basis;
}

std::optional<Vec> solve(const Mat& A, const Vec& b) {
  const FieldSpec& fs = A.field();
  int n = A.cols();
  // echelonize the augmented rows
  Echelon e(fs, n + 1);
  for (int i = 0; i < A.rows(); ++i) {
    Vec row = A.row(i);
    row.push_back(b[i]);
    e.insert(std::move(row));
  }
  // inconsistent iff a pivot lands in the last column
  for (int p : e.pivots())
    if (p == n) return std::nullopt;
  // rows are fully reduced: with free variables at zero, x[pivot] = rhs
  Vec x(n, fs.zero());
  for (size_t r = 0; r < e.rows().size(); ++r)
    x[e.pivots()[r]] = e.rows()[r][n];
  return x;
}

std::optional<Mat> inverse(const Mat& A) {
  if (A.rows() != A.cols()) return std::nullopt;
  const FieldSpec& fs = A.field();
  int n = A.rows();
  Echelon e(fs, 2 * n);
  for (int i = 0; i < n; ++i) {
    Vec row(2 * n, fs.zero());
    for (int j = 0; j < n; ++j) row[j] = A.at(i, j);
    row[n + i] = fs.one();
    e.insert(std::move(row));
  }
  // need pivots exactly 0..n-1
  if (e.rank() != n) return std::nullopt;
  Mat inv(fs, n, n);
  for (int r = 0; r < n; ++r) {
    int p = e.pivots()[r];
    if (p >= n) return std::nullopt;
    for (int j = 0; j < n; ++j) inv.at(p, j) = e.rows()[r][n + j];
  }
  return inv;
}

}  // namespace hv
