#pragma once

// Permutations of {1..n}, Coxeter length, reduced words, parabolic subgroups
// of consecutive intervals, and minimal (double) coset representatives.
//
// Conventions, used consistently everywhere:
//   * (u * v)(i) = v(u(i)) -- apply u first, then v (words read left to
//     right, matching T_w = T_{i_1} ... T_{i_t} for w = s_{i_1} ... s_{i_t});
//   * one-line notation W[i] = w(i);
//   * right multiplication by s_i swaps the values i, i+1 in the one-line;
//     left multiplication swaps the entries at positions i, i+1;
//   * right cosets of S_lambda are S_lambda * d; the minimal representative
//     has its one-line increasing on every lambda block.

#include <string>
#include <vector>

#include "heckevert/combinat.hpp"

namespace hv {

class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);  // 1-based images
  static Permutation identity(int n);
  // transposition (a b) in S_n
  static Permutation transposition(int n, int a, int b);
  static Permutation elementary(int n, int i);  // s_i = (i, i+1)

  int n() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[i - 1]; }  // 1-based
  const std::vector<int>& one_line() const { return img_; }

  Permutation operator*(const Permutation& o) const;  // this first, then o
  Permutation inverse() const;
  bool is_identity() const;

  bool operator==(const Permutation& o) const { return img_ == o.img_; }
  bool operator!=(const Permutation& o) const { return img_ != o.img_; }
  bool operator<(const Permutation& o) const { return img_ < o.img_; }

 private:
  std::vector<int> img_;
};

int length(const Permutation& w);  // inversion count

// Deterministic reduced word (leftmost-descent bubble strategy):
// w = s_{i_1} * s_{i_2} * ... * s_{i_t} with t = length(w).
std::vector<int> reduced_word(const Permutation& w);
Permutation from_word(int n, const std::vector<int>& word);

std::string one_line_string(const Permutation& w);
std::string cycle_string(const Permutation& w);

// ---------------------------------------------------------------------------
// Parabolic subgroups S_lambda (products of symmetric groups on consecutive
// intervals given by a composition).

// Indices j such that s_j lies in S_lambda.
std::vector<int> parabolic_generators(const Composition& lambda);
bool in_parabolic(const Permutation& w, const Composition& lambda);
// S_lambda <= S_sigma, i.e. lambda refines sigma blockwise.
bool refines(const Composition& lambda, const Composition& sigma);
// All elements of S_lambda.
std::vector<Permutation> enumerate_parabolic(const Composition& lambda);

enum class Side { Left, Right };

// Minimal coset representatives of S_lambda in S_sigma; exactly one per
// coset, each of minimal length.  Throws if lambda does not refine sigma.
std::vector<Permutation> min_coset_reps(const Composition& lambda,
                                        const Composition& sigma, Side side);

// Minimal-length representative of the coset S_lambda * w (blockwise sort).
Permutation min_right_rep(const Composition& lambda, const Permutation& w);

// One minimal-length element per (S_lambda, S_nu) double coset in S_sigma.
std::vector<Permutation> min_double_coset_reps(const Composition& lambda,
                                               const Composition& nu,
                                               const Composition& sigma);

// The closed-form minimal (S_(a,b), S_(a,b)) double coset representatives
// d_0, ..., d_min(a,b) in S_{a+b}; d_k is the product of the disjoint
// transpositions (a-k+i, a+i) for i = 1..k.
std::vector<Permutation> two_row_double_cosets(int a, int b);

// Whether some conjugate of S_lambda is contained in S_mu (part packing).
// Throws if |lambda| != |mu|.
bool parabolic_conj_contained(const Composition& lambda,
                              const Composition& mu);

// lambda = (1^a, lambda_1, ..., lambda_s): true iff every part beyond the
// prefix of a ones exceeds 1.  Throws if the prefix is not all ones.
bool is_fixed_point_free(const Composition& lambda, int a);

// d(t): the permutation whose one-line notation is the row-reading word of t
// (the minimal coset representative with t^shape * d = t).
Permutation tableau_rep(const Tableau& t);

// Composition of the standard parabolic d^{-1} S_lambda d  intersect  S_mu,
// for d a minimal double coset representative.
Composition conj_intersection(const Composition& lambda, const Permutation& d,
                              const Composition& mu);

}  // namespace hv
