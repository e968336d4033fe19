#pragma once

// Dense exact linear algebra over a FieldSpec: matrices, Gaussian
// elimination, incremental row echelon bases, nullspaces and linear solves.

#include <optional>
#include <vector>

#include "heckevert/field.hpp"

namespace hv {

using Vec = std::vector<FieldElement>;

class Mat {
 public:
  Mat() = default;
  Mat(const FieldSpec& fs, int rows, int cols);
  static Mat identity(const FieldSpec& fs, int n);

  int rows() const { return r_; }
  int cols() const { return c_; }
  const FieldSpec& field() const { return fs_; }

  FieldElement& at(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
  const FieldElement& at(int i, int j) const {
    return a_[static_cast<size_t>(i) * c_ + j];
  }

  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat scaled(const FieldElement& c) const;
  Mat transposed() const;
  bool operator==(const Mat& o) const;
  bool is_zero() const;

  Vec row(int i) const;
  Vec vectorized() const { return a_; }  // row-major

  // Kronecker product: (A (x) B) acting on row vectors of length
  // rows(A)*rows(B), index (i,j) -> i*rows(B)+j.
  static Mat kronecker(const Mat& A, const Mat& B);

 private:
  int r_ = 0, c_ = 0;
  FieldSpec fs_;
  std::vector<FieldElement> a_;
};

// Incremental reduced row echelon basis.
class Echelon {
 public:
  Echelon(const FieldSpec& fs, int cols) : fs_(fs), cols_(cols) {}

  // Reduces v against the current basis in place.
  void reduce(Vec& v) const;
  // Reduces and inserts if independent; returns true when the rank grew.
  bool insert(Vec v);
  int rank() const { return static_cast<int>(rows_.size()); }
  int cols() const { return cols_; }
  const std::vector<Vec>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }
  bool contains(Vec v) const;

 private:
  FieldSpec fs_;
  int cols_;
  std::vector<Vec> rows_;   // each has leading 1 at its pivot column
  std::vector<int> pivots_;
};

long rank_of(const Mat& m);
// Basis of {x : A x = 0} (column vectors returned as Vecs of length cols).
std::vector<Vec> nullspace(const Mat& A);
// One solution of A x = b, if consistent.
std::optional<Vec> solve(const Mat& A, const Vec& b);
std::optional<Mat> inverse(const Mat& A);

}  // namespace hv
