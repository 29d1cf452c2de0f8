#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "hilb/basics.hpp"

namespace hilb {

// Integer partition, parts weakly decreasing and > 0.  The empty partition
// is the unique partition of 0.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const;        // |lambda|
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int part(int i) const { return parts_[i]; }  // 0-based

  int n_stat() const;      // sum (i-1) lambda_i = sum of leg lengths
  Rat z() const;           // prod i^{m_i} m_i!
  Partition conjugate() const;
  std::map<int, int> multiplicities() const;

  auto operator<=>(const Partition&) const = default;

  std::string str() const;                      // "5,5,5,2,1"
  static Partition parse(const std::string&);   // inverse of str()

 private:
  std::vector<int> parts_;
};

// Cell (row i, column j), 0-based, row i of the English-convention diagram
// has lambda_{i+1} boxes.
struct Cell {
  int row = 0, col = 0;
};

struct CellStats {
  int arm, arm_co, leg, leg_co, hook, content;
};

// arm/leg (co)lengths, hook and content of a cell; the cell must lie in the
// diagram.
CellStats cell_stats(const Partition& la, const Cell& c);
std::vector<Cell> cells_of(const Partition& la);

// Finitely supported multiplicity vector on nonzero integers.
class GenPartition {
 public:
  GenPartition() = default;
  explicit GenPartition(std::map<int, int> mult);
  static GenPartition of_parts(const std::vector<int>& parts);
  static GenPartition creation_of(const Partition& la);  // all parts negated

  const std::map<int, int>& mult() const { return mult_; }
  int multiplicity(int part) const;
  int length() const;   // sum of multiplicities
  long long weight() const;  // sum i * m_i (conformal weight of a_lambda)
  Rat mult_factorial() const;  // prod m_i!
  GenPartition positive_part() const;
  GenPartition negative_part() const;
  GenPartition negated() const;  // part i -> -i
  int delta() const;    // l(lambda^-) - l(lambda^+)
  long long weight_plus() const;  // |lambda^+|
  long long s_stat() const;       // sum i^2 m_i
  bool empty() const { return mult_.empty(); }

  // positive (resp. negated negative) parts as ordinary partitions
  Partition positive_partition() const;
  Partition negative_partition_negated() const;

  GenPartition with_part(int part, int delta_mult) const;

  auto operator<=>(const GenPartition&) const = default;

  std::string str() const;                     // "(-2)^1 (1)^2"
  static GenPartition parse(const std::string&);

 private:
  std::map<int, int> mult_;  // part -> multiplicity > 0
};

// Complete deterministic enumerations (lexicographically descending parts).
std::vector<Partition> partitions_of(int n);
int partition_count(int n);
// Index of la among partitions_of(|la|) in enumeration order.
int partition_index(const Partition& la);

// All generalized partitions with given weight, length exactly len, and
// 0 < |part| <= part_bound.
std::vector<GenPartition> gen_partitions(long long weight, int len, int part_bound);
// Union over lengths 0..max_len.
std::vector<GenPartition> gen_partitions_up_to(long long weight, int max_len, int part_bound);

enum class DomRel { less, greater, equal, incomparable };
// Dominance partial order via partial sums; requires |a| = |b|.
DomRel dominance_compare(const Partition& a, const Partition& b);

}  // namespace hilb
