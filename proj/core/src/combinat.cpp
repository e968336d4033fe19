#include "heckevert/combinat.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hv {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

int Partition::size() const {
  return std::accumulate(parts.begin(), parts.end(), 0);
}

int Composition::size() const {
  return std::accumulate(parts.begin(), parts.end(), 0);
}

Partition partition(std::vector<int> parts) {
  for (size_t i = 0; i < parts.size(); ++i) {
    require(parts[i] > 0, "partition: parts must be positive");
    if (i > 0) require(parts[i - 1] >= parts[i], "partition: not decreasing");
  }
  return Partition{std::move(parts)};
}

Composition composition(std::vector<int> parts) {
  for (int p : parts) require(p >= 1, "composition: parts must be >= 1");
  return Composition{std::move(parts)};
}

Composition to_composition(const Partition& p) { return Composition{p.parts}; }

Partition sorted_partition(const Composition& c) {
  std::vector<int> v = c.parts;
  std::sort(v.rbegin(), v.rend());
  return Partition{std::move(v)};
}

namespace {

std::vector<int> parse_int_list(const std::string& s, const char* what) {
  std::vector<int> out;
  if (s.empty()) return out;
  std::istringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string(what) + ": bad integer '" + tok +
                                  "'");
    }
    if (pos != tok.size())
      throw std::invalid_argument(std::string(what) + ": bad integer '" + tok +
                                  "'");
    out.push_back(v);
  }
  return out;
}

}  // namespace

Partition parse_partition(const std::string& s) {
  return partition(parse_int_list(s, "parse_partition"));
}

Composition parse_composition(const std::string& s) {
  return composition(parse_int_list(s, "parse_composition"));
}

std::string to_string(const Partition& p) {
  std::ostringstream out;
  for (size_t i = 0; i < p.parts.size(); ++i) {
    if (i) out << ",";
    out << p.parts[i];
  }
  return out.str();
}

std::string to_string(const Composition& c) {
  std::ostringstream out;
  for (size_t i = 0; i < c.parts.size(); ++i) {
    if (i) out << ",";
    out << c.parts[i];
  }
  return out.str();
}

std::vector<Partition> partitions_of(int n) {
  require(n >= 0, "partitions_of: n must be >= 0");
  std::vector<Partition> out;
  std::vector<int> cur;
  // descending lexicographic enumeration
  auto rec = [&](auto&& self, int rem, int maxpart) -> void {
    if (rem == 0) {
      out.push_back(Partition{cur});
      return;
    }
    for (int p = std::min(rem, maxpart); p >= 1; --p) {
      cur.push_back(p);
      self(self, rem - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

bool dominates(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) return false;
  long sa = 0, sb = 0;
  size_t rows = std::max(a.parts.size(), b.parts.size());
  for (size_t i = 0; i < rows; ++i) {
    sa += i < a.parts.size() ? a.parts[i] : 0;
    sb += i < b.parts.size() ? b.parts[i] : 0;
    if (sa < sb) return false;
  }
  return true;
}

Partition conjugate(const Partition& p) {
  std::vector<int> out;
  if (p.parts.empty()) return Partition{};
  out.resize(p.parts[0], 0);
  for (int part : p.parts)
    for (int c = 0; c < part; ++c) ++out[c];
  return Partition{std::move(out)};
}

// ---------------------------------------------------------------------------
// Abacus.

std::vector<int> beta_numbers(const Partition& p, int beads) {
  require(beads >= static_cast<int>(p.parts.size()),
          "beta_numbers: not enough beads");
  std::vector<int> beta(beads);
  for (int i = 0; i < beads; ++i) {
    int part = i < static_cast<int>(p.parts.size()) ? p.parts[i] : 0;
    beta[i] = part + (beads - 1 - i);
  }
  return beta;
}

namespace {

Partition from_beta(std::vector<int> beta) {
  std::sort(beta.rbegin(), beta.rend());
  int beads = static_cast<int>(beta.size());
  std::vector<int> parts;
  for (int i = 0; i < beads; ++i) {
    int part = beta[i] - (beads - 1 - i);
    if (part > 0) parts.push_back(part);
  }
  return Partition{std::move(parts)};
}

}  // namespace

Partition e_core(const Partition& p, int e) {
  require(e >= 2, "e_core: e must be >= 2");
  if (p.parts.empty()) return Partition{};
  // bead count padded to a multiple of e, so runner contents are canonical
  int beads = static_cast<int>(p.parts.size());
  beads = ((beads + e - 1) / e) * e;
  std::vector<int> beta = beta_numbers(p, beads);
  // slide every bead as far up its runner as possible: on runner r the
  // occupied positions become r, r+e, ..., r+(count-1)e
  std::vector<int> runner_count(e, 0);
  for (int b : beta) ++runner_count[b % e];
  std::vector<int> out;
  for (int r = 0; r < e; ++r)
    for (int j = 0; j < runner_count[r]; ++j) out.push_back(r + j * e);
  return from_beta(std::move(out));
}

int e_weight(const Partition& p, int e) {
  Partition core = e_core(p, e);
  return (p.size() - core.size()) / e;
}

bool is_e_core(const Partition& p, int e) { return e_core(p, e) == p; }

bool is_e_restricted(const Partition& p, int e) {
  require(e >= 2, "is_e_restricted: e must be >= 2");
  for (size_t i = 0; i < p.parts.size(); ++i) {
    int next = i + 1 < p.parts.size() ? p.parts[i + 1] : 0;
    if (p.parts[i] - next >= e) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Tableaux.

bool Tableau::is_standard() const {
  for (size_t r = 0; r < rows.size(); ++r) {
    for (size_t c = 0; c < rows[r].size(); ++c) {
      if (c + 1 < rows[r].size() && rows[r][c] >= rows[r][c + 1]) return false;
      if (r + 1 < rows.size() && c < rows[r + 1].size() &&
          rows[r][c] >= rows[r + 1][c])
        return false;
    }
  }
  return true;
}

std::vector<int> Tableau::row_word() const {
  std::vector<int> w;
  w.reserve(size());
  for (const auto& row : rows) w.insert(w.end(), row.begin(), row.end());
  return w;
}

std::pair<int, int> Tableau::cell_of(int value) const {
  for (size_t r = 0; r < rows.size(); ++r)
    for (size_t c = 0; c < rows[r].size(); ++c)
      if (rows[r][c] == value) return {static_cast<int>(r), static_cast<int>(c)};
  throw std::invalid_argument("Tableau::cell_of: value not present");
}

Tableau top_tableau(const Partition& shape) {
  Tableau t;
  t.shape = shape;
  int next = 1;
  for (int part : shape.parts) {
    std::vector<int> row(part);
    std::iota(row.begin(), row.end(), next);
    next += part;
    t.rows.push_back(std::move(row));
  }
  return t;
}

std::vector<Tableau> standard_tableaux(const Partition& shape, int bound) {
  require(shape.size() <= bound,
          "standard_tableaux: enumeration bound exceeded");
  int n = shape.size();
  std::vector<Tableau> out;
  Tableau work;
  work.shape = shape;
  work.rows.resize(shape.rows());
  std::vector<int> filled(shape.rows(), 0);  // cells used per row
  auto rec = [&](auto&& self, int next) -> void {
    if (next > n) {
      out.push_back(work);
      return;
    }
    for (int r = 0; r < shape.rows(); ++r) {
      int c = filled[r];
      if (c >= shape.parts[r]) continue;
      // column-strictness: cell above must be filled already
      if (r > 0 && filled[r - 1] <= c) continue;
      work.rows[r].push_back(next);
      ++filled[r];
      self(self, next + 1);
      --filled[r];
      work.rows[r].pop_back();
    }
  };
  rec(rec, 1);
  std::sort(out.begin(), out.end(), [](const Tableau& a, const Tableau& b) {
    return a.row_word() < b.row_word();
  });
  return out;
}

long hook_length_count(const Partition& shape) {
  Partition conj = conjugate(shape);
  long n = shape.size();
  // f = n! / prod(hooks); compute by incremental division to stay in range
  long num = 1;
  std::vector<long> hooks;
  for (int r = 0; r < shape.rows(); ++r)
    for (int c = 0; c < shape.parts[r]; ++c) {
      long arm = shape.parts[r] - 1 - c;
      long leg = conj.parts[c] - 1 - r;
      hooks.push_back(arm + leg + 1);
    }
  // multiply 1..n, divide hooks greedily (exact overall)
  long result = 1;
  size_t hi = 0;
  for (long i = 1; i <= n; ++i) {
    result *= i;
    while (hi < hooks.size() && result % hooks[hi] == 0) {
      result /= hooks[hi];
      ++hi;
    }
  }
  while (hi < hooks.size()) {
    if (result % hooks[hi] != 0)
      throw std::logic_error("hook_length_count: non-exact division");
    result /= hooks[hi];
    ++hi;
  }
  (void)num;
  return result;
}

bool tableau_dominates(const Tableau& s, const Tableau& t) {
  require(s.shape == t.shape, "tableau_dominates: shapes differ");
  int n = s.size();
  std::vector<int> srow(n + 1), trow(n + 1);
  for (size_t r = 0; r < s.rows.size(); ++r)
    for (int v : s.rows[r]) srow[v] = static_cast<int>(r);
  for (size_t r = 0; r < t.rows.size(); ++r)
    for (int v : t.rows[r]) trow[v] = static_cast<int>(r);
  std::vector<int> scount(s.rows.size(), 0), tcount(t.rows.size(), 0);
  for (int k = 1; k <= n; ++k) {
    ++scount[srow[k]];
    ++tcount[trow[k]];
    // partial shapes are partitions; compare dominance via prefix sums
    long ps = 0, pt = 0;
    for (size_t r = 0; r < std::max(scount.size(), tcount.size()); ++r) {
      ps += r < scount.size() ? scount[r] : 0;
      pt += r < tcount.size() ? tcount[r] : 0;
      if (ps < pt) return false;
    }
  }
  return true;
}

long lr_coefficient(const Partition& pi, const Partition& lambda,
                    const Partition& nu) {
  require(pi.size() == lambda.size() + nu.size(),
          "lr_coefficient: sizes must satisfy |pi| = |lambda| + |nu|");
  // lambda must fit inside pi
  if (lambda.rows() > pi.rows()) return 0;
  for (int r = 0; r < lambda.rows(); ++r)
    if (lambda.parts[r] > pi.parts[r]) return 0;
  if (nu.size() == 0) return 1;
  int m = static_cast<int>(nu.parts.size());

  // Skew cells of pi/lambda, processed row by row, right to left within a
  // row.  That order makes the prefix of placements equal to a prefix of the
  // reverse reading word, so the lattice condition can be enforced greedily.
  struct Cell {
    int r, c;
  };
  std::vector<Cell> cells;
  for (int r = 0; r < pi.rows(); ++r) {
    int lo = r < lambda.rows() ? lambda.parts[r] : 0;
    for (int c = pi.parts[r] - 1; c >= lo; --c) cells.push_back({r, c});
  }
  std::vector<std::vector<int>> fill(pi.rows());
  for (int r = 0; r < pi.rows(); ++r) fill[r].assign(pi.parts[r], 0);
  std::vector<int> count(m + 1, 0);
  long total = 0;
  auto rec = [&](auto&& self, size_t idx) -> void {
    if (idx == cells.size()) {
      ++total;
      return;
    }
    auto [r, c] = cells[idx];
    for (int v = 1; v <= m; ++v) {
      if (count[v] >= nu.parts[v - 1]) continue;
      if (v > 1 && count[v] + 1 > count[v - 1]) continue;  // lattice word
      // weakly increasing along the row (right neighbour already placed)
      if (c + 1 < pi.parts[r] && fill[r][c + 1] != 0 && v > fill[r][c + 1])
        continue;
      // strictly increasing down the column (cell above, if a skew cell,
      // was already placed; if it is a lambda cell there is no constraint)
      if (r > 0) {
        int above_lo = r - 1 < lambda.rows() ? lambda.parts[r - 1] : 0;
        if (c >= above_lo && c < pi.parts[r - 1]) {
          if (fill[r - 1][c] == 0) continue;  // cannot happen by row order
          if (v <= fill[r - 1][c]) continue;
        }
      }
      fill[r][c] = v;
      ++count[v];
      self(self, idx + 1);
      --count[v];
      fill[r][c] = 0;
    }
  };
  rec(rec, 0);
  return total;
}

Partition extend_partition(const Partition& tau, int m) {
  require(m >= 0, "extend_partition: m must be >= 0");
  std::vector<int> parts = tau.parts;
  for (int i = 0; i < m; ++i) parts.push_back(1);
  return Partition{std::move(parts)};
}

bool has_m_tail(const Tableau& t, int tau_rows, int a, int m) {
  // entries a+1..a+m must all sit in rows below tau_rows
  for (size_t r = 0; r < t.rows.size(); ++r)
    for (int v : t.rows[r])
      if (v > a && static_cast<int>(r) < tau_rows) return false;
  (void)m;
  return true;
}

std::vector<Tableau> m_tail_tableaux(const Partition& tau, int m, int bound) {
  require(tau.size() + m <= bound,
          "m_tail_tableaux: enumeration bound exceeded");
  Partition ext = extend_partition(tau, m);
  int a = tau.size();
  std::vector<Tableau> out;
  for (auto& t : standard_tableaux(ext, bound))
    if (has_m_tail(t, tau.rows(), a, m)) out.push_back(t);
  return out;
}

}  // namespace hv
