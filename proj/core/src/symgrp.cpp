#include "heckevert/symgrp.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hv {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

// Half-open block boundaries [starts[k], starts[k+1]) of a composition,
// 1-based positions.
std::vector<int> block_starts(const Composition& c) {
  std::vector<int> s = {1};
  for (int p : c.parts) s.push_back(s.back() + p);
  return s;
}

}  // namespace

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
  std::vector<char> seen(img_.size() + 1, 0);
  for (int v : img_) {
    require(v >= 1 && v <= static_cast<int>(img_.size()),
            "Permutation: image out of range");
    require(!seen[v], "Permutation: not a bijection");
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  Permutation w;
  w.img_ = std::move(v);
  return w;
}

Permutation Permutation::transposition(int n, int a, int b) {
  require(1 <= a && a <= n && 1 <= b && b <= n && a != b,
          "transposition: bad arguments");
  Permutation w = identity(n);
  std::swap(w.img_[a - 1], w.img_[b - 1]);
  return w;
}

Permutation Permutation::elementary(int n, int i) {
  return transposition(n, i, i + 1);
}

Permutation Permutation::operator*(const Permutation& o) const {
  require(n() == o.n(), "Permutation: size mismatch");
  Permutation r;
  r.img_.resize(img_.size());
  for (size_t i = 0; i < img_.size(); ++i) r.img_[i] = o.img_[img_[i] - 1];
  return r;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.img_.resize(img_.size());
  for (size_t i = 0; i < img_.size(); ++i)
    r.img_[img_[i] - 1] = static_cast<int>(i) + 1;
  return r;
}

bool Permutation::is_identity() const {
  for (size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != static_cast<int>(i) + 1) return false;
  return true;
}

int length(const Permutation& w) {
  const auto& v = w.one_line();
  int inv = 0;
  for (size_t i = 0; i < v.size(); ++i)
    for (size_t j = i + 1; j < v.size(); ++j)
      if (v[i] > v[j]) ++inv;
  return inv;
}

std::vector<int> reduced_word(const Permutation& w) {
  std::vector<int> line = w.one_line();
  std::vector<int> word;
  int n = static_cast<int>(line.size());
  bool progress = true;
  while (progress) {
    progress = false;
    for (int i = 0; i + 1 < n; ++i) {
      if (line[i] > line[i + 1]) {
        // w = s_{i+1} * w' strips a left factor
        word.push_back(i + 1);
        std::swap(line[i], line[i + 1]);
        progress = true;
        break;
      }
    }
  }
  return word;
}

Permutation from_word(int n, const std::vector<int>& word) {
  Permutation w = Permutation::identity(n);
  for (int i : word) w = w * Permutation::elementary(n, i);
  return w;
}

std::string one_line_string(const Permutation& w) {
  std::ostringstream out;
  out << "[";
  for (int i = 1; i <= w.n(); ++i) {
    if (i > 1) out << ",";
    out << w(i);
  }
  out << "]";
  return out.str();
}

std::string cycle_string(const Permutation& w) {
  std::ostringstream out;
  std::vector<char> seen(w.n() + 1, 0);
  bool any = false;
  for (int i = 1; i <= w.n(); ++i) {
    if (seen[i] || w(i) == i) continue;
    out << "(";
    int j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = 1;
      if (!first) out << ",";
      first = false;
      out << j;
      j = w(j);
    }
    out << ")";
    any = true;
  }
  if (!any) out << "()";
  return out.str();
}

// ---------------------------------------------------------------------------
// Parabolic subgroups.

std::vector<int> parabolic_generators(const Composition& lambda) {
  std::vector<int> gens;
  int pos = 1;
  for (int part : lambda.parts) {
    for (int j = pos; j < pos + part - 1; ++j) gens.push_back(j);
    pos += part;
  }
  return gens;
}

bool in_parabolic(const Permutation& w, const Composition& lambda) {
  require(w.n() == lambda.size(), "in_parabolic: size mismatch");
  auto starts = block_starts(lambda);
  for (size_t b = 0; b + 1 < starts.size(); ++b) {
    for (int i = starts[b]; i < starts[b + 1]; ++i)
      if (w(i) < starts[b] || w(i) >= starts[b + 1]) return false;
  }
  return true;
}

bool refines(const Composition& lambda, const Composition& sigma) {
  if (lambda.size() != sigma.size()) return false;
  auto ls = block_starts(lambda), ss = block_starts(sigma);
  // every sigma boundary must be a lambda boundary
  size_t i = 0;
  for (int b : ss) {
    while (i < ls.size() && ls[i] < b) ++i;
    if (i == ls.size() || ls[i] != b) return false;
  }
  return true;
}

std::vector<Permutation> enumerate_parabolic(const Composition& lambda) {
  int n = lambda.size();
  std::vector<Permutation> out = {Permutation::identity(n)};
  auto starts = block_starts(lambda);
  for (size_t b = 0; b + 1 < starts.size(); ++b) {
    int lo = starts[b], hi = starts[b + 1];  // [lo, hi)
    if (hi - lo <= 1) continue;
    std::vector<int> seg(hi - lo);
    std::iota(seg.begin(), seg.end(), lo);
    std::vector<Permutation> next;
    do {
      for (const auto& w : out) {
        std::vector<int> line = w.one_line();
        for (int i = lo; i < hi; ++i) line[i - 1] = seg[i - lo];
        next.push_back(Permutation(std::move(line)));
      }
    } while (std::next_permutation(seg.begin(), seg.end()));
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// All ways to write the sorted value range [lo, hi) as a concatenation of
// increasing runs with the given sizes: these are exactly the one-line
// segments of minimal right coset representatives.
void segment_arrangements(int lo, int hi, const std::vector<int>& sizes,
                          size_t idx, std::vector<int>& avail,
                          std::vector<int>& acc,
                          std::vector<std::vector<int>>& out) {
  if (idx == sizes.size()) {
    out.push_back(acc);
    return;
  }
  int k = sizes[idx];
  // choose k of the available values, in increasing order
  int m = static_cast<int>(avail.size());
  std::vector<int> pick(k);
  auto rec = [&](auto&& self, int start, int depth) -> void {
    if (depth == k) {
      std::vector<int> rest;
      rest.reserve(m - k);
      {
        size_t pi = 0;
        for (int i = 0; i < m; ++i) {
          if (pi < pick.size() && avail[i] == pick[pi]) {
            ++pi;
            continue;
          }
          rest.push_back(avail[i]);
        }
      }
      for (int v : pick) acc.push_back(v);
      std::vector<int> saved = std::move(avail);
      avail = std::move(rest);
      segment_arrangements(lo, hi, sizes, idx + 1, avail, acc, out);
      avail = std::move(saved);
      for (int i = 0; i < k; ++i) acc.pop_back();
    } else {
      for (int i = start; i < m; ++i) {
        pick[depth] = avail[i];
        self(self, i + 1, depth + 1);
      }
    }
  };
  rec(rec, 0, 0);
}

}  // namespace

std::vector<Permutation> min_coset_reps(const Composition& lambda,
                                        const Composition& sigma, Side side) {
  require(refines(lambda, sigma),
          "min_coset_reps: lambda must refine sigma blockwise");
  int n = sigma.size();
  // Per sigma block, enumerate the lambda-blockwise-increasing segments.
  auto ss = block_starts(sigma);
  auto ls = block_starts(lambda);
  std::vector<std::vector<std::vector<int>>> per_block;
  size_t li = 0;
  for (size_t b = 0; b + 1 < ss.size(); ++b) {
    int lo = ss[b], hi = ss[b + 1];
    std::vector<int> sizes;
    while (li + 1 < ls.size() && ls[li] < hi) {
      sizes.push_back(ls[li + 1] - ls[li]);
      ++li;
    }
    std::vector<int> avail(hi - lo);
    std::iota(avail.begin(), avail.end(), lo);
    std::vector<int> acc;
    std::vector<std::vector<int>> arrs;
    segment_arrangements(lo, hi, sizes, 0, avail, acc, arrs);
    per_block.push_back(std::move(arrs));
  }
  // cartesian product across sigma blocks
  std::vector<std::vector<int>> lines = {{}};
  for (const auto& arrs : per_block) {
    std::vector<std::vector<int>> next;
    for (const auto& prefix : lines)
      for (const auto& seg : arrs) {
        std::vector<int> line = prefix;
        line.insert(line.end(), seg.begin(), seg.end());
        next.push_back(std::move(line));
      }
    lines = std::move(next);
  }
  std::vector<Permutation> out;
  out.reserve(lines.size());
  for (auto& line : lines) out.push_back(Permutation(std::move(line)));
  std::sort(out.begin(), out.end());
  if (side == Side::Left) {
    for (auto& w : out) w = w.inverse();
    std::sort(out.begin(), out.end());
  }
  (void)n;
  return out;
}

Permutation min_right_rep(const Composition& lambda, const Permutation& w) {
  require(lambda.size() == w.n(), "min_right_rep: size mismatch");
  std::vector<int> line = w.one_line();
  auto starts = block_starts(lambda);
  for (size_t b = 0; b + 1 < starts.size(); ++b)
    std::sort(line.begin() + (starts[b] - 1), line.begin() + (starts[b + 1] - 1));
  return Permutation(std::move(line));
}

std::vector<Permutation> min_double_coset_reps(const Composition& lambda,
                                               const Composition& nu,
                                               const Composition& sigma) {
  require(refines(lambda, sigma) && refines(nu, sigma),
          "min_double_coset_reps: containment violated");
  auto reps = min_coset_reps(lambda, sigma, Side::Right);
  std::vector<Permutation> out;
  auto nu_gens = parabolic_generators(nu);
  for (const auto& d : reps) {
    bool ok = true;
    // also minimal in d * S_nu: no right descent at nu generators
    Permutation dinv = d.inverse();
    for (int j : nu_gens)
      if (dinv(j) > dinv(j + 1)) {
        ok = false;
        break;
      }
    if (ok) out.push_back(d);
  }
  return out;
}

std::vector<Permutation> two_row_double_cosets(int a, int b) {
  require(a >= 0 && b >= 0 && a + b >= 1, "two_row_double_cosets: bad sizes");
  int n = a + b;
  std::vector<Permutation> out;
  int kmax = std::min(a, b);
  for (int k = 0; k <= kmax; ++k) {
    Permutation d = Permutation::identity(n);
    for (int i = 1; i <= k; ++i)
      d = d * Permutation::transposition(n, a - k + i, a + i);
    out.push_back(d);
  }
  return out;
}

bool parabolic_conj_contained(const Composition& lambda,
                              const Composition& mu) {
  require(lambda.size() == mu.size(), "parabolic_conj_contained: sums differ");
  // pack the parts of lambda into bins of capacity mu_j
  std::vector<int> parts = lambda.parts;
  std::sort(parts.rbegin(), parts.rend());
  std::vector<int> cap = mu.parts;
  std::sort(cap.rbegin(), cap.rend());
  auto rec = [&](auto&& self, size_t idx) -> bool {
    if (idx == parts.size()) return true;
    int seen_cap = -1;
    for (size_t b = 0; b < cap.size(); ++b) {
      if (cap[b] < parts[idx]) continue;
      if (cap[b] == seen_cap) continue;  // symmetric bin, skip duplicates
      seen_cap = cap[b];
      cap[b] -= parts[idx];
      if (self(self, idx + 1)) {
        cap[b] += parts[idx];
        return true;
      }
      cap[b] += parts[idx];
    }
    return false;
  };
  return rec(rec, 0);
}

bool is_fixed_point_free(const Composition& lambda, int a) {
  require(a >= 0 && a <= static_cast<int>(lambda.parts.size()),
          "is_fixed_point_free: bad prefix length");
  for (int i = 0; i < a; ++i)
    require(lambda.parts[i] == 1,
            "is_fixed_point_free: prefix is not all ones");
  for (size_t i = a; i < lambda.parts.size(); ++i)
    if (lambda.parts[i] <= 1) return false;
  return true;
}

Permutation tableau_rep(const Tableau& t) {
  return Permutation(t.row_word());
}

Composition conj_intersection(const Composition& lambda, const Permutation& d,
                              const Composition& mu) {
  require(lambda.size() == mu.size() && lambda.size() == d.n(),
          "conj_intersection: size mismatch");
  int n = lambda.size();
  Permutation dinv = d.inverse();
  std::vector<char> gen(n, 0);  // gen[j] = 1 iff s_j in the intersection
  auto mu_gens = parabolic_generators(mu);
  for (int j : mu_gens) {
    Permutation y = d * Permutation::elementary(n, j) * dinv;
    if (in_parabolic(y, lambda)) gen[j] = 1;
  }
  std::vector<int> parts;
  int run = 1;
  for (int j = 1; j < n; ++j) {
    if (gen[j]) {
      ++run;
    } else {
      parts.push_back(run);
      run = 1;
    }
  }
  parts.push_back(run);
  return composition(std::move(parts));
}

}  // namespace hv
