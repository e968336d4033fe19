#pragma once

// Partitions, compositions, Young tableaux, abacus e-core/e-weight machinery,
// dominance order and Littlewood-Richardson coefficients.
//
// Partitions parse and print as comma-separated weakly decreasing integers
// ("3,1"); the empty string denotes the empty partition.  All values are
// immutable after construction.

#include <string>
#include <vector>

namespace hv {

struct Partition {
  std::vector<int> parts;  // weakly decreasing, all > 0

  int size() const;  // |lambda|
  int rows() const { return static_cast<int>(parts.size()); }
  bool operator==(const Partition& o) const { return parts == o.parts; }
  bool operator!=(const Partition& o) const { return parts != o.parts; }
  bool operator<(const Partition& o) const { return parts < o.parts; }
};

struct Composition {
  std::vector<int> parts;  // all >= 1

  int size() const;
  bool operator==(const Composition& o) const { return parts == o.parts; }
  bool operator!=(const Composition& o) const { return parts != o.parts; }
  bool operator<(const Composition& o) const { return parts < o.parts; }
};

// Validating constructors; throw std::invalid_argument on bad input.
Partition partition(std::vector<int> parts);
Composition composition(std::vector<int> parts);
Composition to_composition(const Partition& p);
// Sorted-descending partition with the same part multiset.
Partition sorted_partition(const Composition& c);

Partition parse_partition(const std::string& s);
Composition parse_composition(const std::string& s);
std::string to_string(const Partition& p);
std::string to_string(const Composition& c);

// All partitions of n, in the usual lexicographic-descending order,
// (n) first and (1^n) last.
std::vector<Partition> partitions_of(int n);

bool dominates(const Partition& a, const Partition& b);  // a >= b
Partition conjugate(const Partition& p);

// ---------------------------------------------------------------------------
// Abacus: e-cores and e-weights.

// Beta-numbers of lambda on `beads` beads: beta_i = lambda_i + beads - i.
std::vector<int> beta_numbers(const Partition& p, int beads);

Partition e_core(const Partition& p, int e);
int e_weight(const Partition& p, int e);
bool is_e_core(const Partition& p, int e);
bool is_e_restricted(const Partition& p, int e);

// Label of the block containing S^lambda: (e-core, e-weight, e).
struct BlockDescriptor {
  Partition core;
  int weight = 0;
  int e = 2;

  bool operator==(const BlockDescriptor& o) const {
    return core == o.core && weight == o.weight && e == o.e;
  }
};

// ---------------------------------------------------------------------------
// Tableaux.

struct Tableau {
  Partition shape;
  std::vector<std::vector<int>> rows;  // entries 1..n, each exactly once

  int size() const { return shape.size(); }
  bool is_standard() const;
  std::vector<int> row_word() const;            // row-reading word
  std::pair<int, int> cell_of(int value) const;  // (row, col), 0-based
};

// The superstandard tableau t^lambda: 1..n filled along rows.
Tableau top_tableau(const Partition& shape);

// All standard tableaux of the given shape, ordered by lexicographic
// row-reading word (so top_tableau comes first).  Throws when
// |shape| exceeds the enumeration bound.
std::vector<Tableau> standard_tableaux(const Partition& shape, int bound = 10);

// Hook length formula; oracle for |standard_tableaux|.
long hook_length_count(const Partition& shape);

// Dominance on standard tableaux of the same shape: s >= t iff for every k
// the shape of the first k entries of s dominates that of t.
bool tableau_dominates(const Tableau& s, const Tableau& t);

// Littlewood-Richardson coefficient c^pi_{lambda nu} (lattice-word rule).
// Requires |pi| = |lambda| + |nu|.
long lr_coefficient(const Partition& pi, const Partition& lambda,
                    const Partition& nu);

// tau with m trailing parts equal to 1.
Partition extend_partition(const Partition& tau, int m);

// Whether all of a+1..a+m sit in the last m rows of t (shape tau~, m-tail).
bool has_m_tail(const Tableau& t, int tau_rows, int a, int m);

// The tableaux in Std(tau~) with an m-tail; in bijection with Std(tau).
std::vector<Tableau> m_tail_tableaux(const Partition& tau, int m,
                                     int bound = 10);

}  // namespace hv
