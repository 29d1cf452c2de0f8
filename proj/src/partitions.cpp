#include "hilb/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hilb {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw domain_error("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw domain_error("partition parts must be weakly decreasing");
  }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::n_stat() const {
  int n = 0;
  for (size_t i = 0; i < parts_.size(); ++i) n += static_cast<int>(i) * parts_[i];
  return n;
}

Rat Partition::z() const {
  Rat z = 1;
  for (const auto& [part, m] : multiplicities()) {
    for (int j = 0; j < m; ++j) z *= part;
    z *= factorial(m);
  }
  return z;
}

std::map<int, int> Partition::multiplicities() const {
  std::map<int, int> m;
  for (int p : parts_) ++m[p];
  return m;
}

Partition Partition::conjugate() const {
  std::vector<int> cols;
  if (!parts_.empty()) {
    cols.resize(parts_[0], 0);
    for (int p : parts_)
      for (int j = 0; j < p; ++j) ++cols[j];
  }
  return Partition(std::move(cols));
}

std::string Partition::str() const {
  std::ostringstream os;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ",";
    os << parts_[i];
  }
  return os.str();
}

Partition Partition::parse(const std::string& s) {
  std::vector<int> parts;
  std::istringstream is(s);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    if (tok.empty()) continue;
    parts.push_back(std::stoi(tok));
  }
  return Partition(std::move(parts));
}

CellStats cell_stats(const Partition& la, const Cell& c) {
  if (c.row < 0 || c.row >= la.length() || c.col < 0 || c.col >= la.part(c.row))
    throw domain_error("cell (" + std::to_string(c.row) + "," + std::to_string(c.col) +
                       ") outside diagram " + la.str());
  CellStats s{};
  s.arm = la.part(c.row) - c.col - 1;
  s.arm_co = c.col;
  s.leg = 0;
  for (int i = c.row + 1; i < la.length(); ++i)
    if (la.part(i) > c.col) ++s.leg;
  s.leg_co = c.row;
  s.hook = s.arm + s.leg + 1;
  s.content = s.arm_co - s.leg_co;
  return s;
}

std::vector<Cell> cells_of(const Partition& la) {
  std::vector<Cell> cs;
  for (int i = 0; i < la.length(); ++i)
    for (int j = 0; j < la.part(i); ++j) cs.push_back(Cell{i, j});
  return cs;
}

GenPartition::GenPartition(std::map<int, int> mult) : mult_(std::move(mult)) {
  for (auto it = mult_.begin(); it != mult_.end();) {
    if (it->first == 0) throw domain_error("generalized partition with zero part");
    if (it->second < 0) throw domain_error("negative multiplicity");
    if (it->second == 0)
      it = mult_.erase(it);
    else
      ++it;
  }
}

GenPartition GenPartition::of_parts(const std::vector<int>& parts) {
  std::map<int, int> m;
  for (int p : parts) ++m[p];
  return GenPartition(std::move(m));
}

GenPartition GenPartition::creation_of(const Partition& la) {
  std::map<int, int> m;
  for (int p : la.parts()) ++m[-p];
  return GenPartition(std::move(m));
}

int GenPartition::multiplicity(int part) const {
  auto it = mult_.find(part);
  return it == mult_.end() ? 0 : it->second;
}

int GenPartition::length() const {
  int l = 0;
  for (const auto& [p, m] : mult_) l += m;
  return l;
}

long long GenPartition::weight() const {
  long long w = 0;
  for (const auto& [p, m] : mult_) w += static_cast<long long>(p) * m;
  return w;
}

Rat GenPartition::mult_factorial() const {
  Rat f = 1;
  for (const auto& [p, m] : mult_) f *= factorial(m);
  return f;
}

GenPartition GenPartition::positive_part() const {
  std::map<int, int> m;
  for (const auto& [p, k] : mult_)
    if (p > 0) m[p] = k;
  return GenPartition(std::move(m));
}

GenPartition GenPartition::negative_part() const {
  std::map<int, int> m;
  for (const auto& [p, k] : mult_)
    if (p < 0) m[p] = k;
  return GenPartition(std::move(m));
}

GenPartition GenPartition::negated() const {
  std::map<int, int> m;
  for (const auto& [p, k] : mult_) m[-p] = k;
  return GenPartition(std::move(m));
}

int GenPartition::delta() const { return negative_part().length() - positive_part().length(); }

long long GenPartition::weight_plus() const { return positive_part().weight(); }

long long GenPartition::s_stat() const {
  long long s = 0;
  for (const auto& [p, m] : mult_) s += static_cast<long long>(p) * p * m;
  return s;
}

Partition GenPartition::positive_partition() const {
  std::vector<int> parts;
  for (auto it = mult_.rbegin(); it != mult_.rend(); ++it)
    if (it->first > 0)
      for (int j = 0; j < it->second; ++j) parts.push_back(it->first);
  return Partition(std::move(parts));
}

Partition GenPartition::negative_partition_negated() const {
  std::vector<int> parts;
  for (const auto& [p, m] : mult_)
    if (p < 0)
      for (int j = 0; j < m; ++j) parts.push_back(-p);
  std::sort(parts.begin(), parts.end(), std::greater<int>());
  return Partition(std::move(parts));
}

GenPartition GenPartition::with_part(int part, int delta_mult) const {
  std::map<int, int> m = mult_;
  m[part] += delta_mult;
  if (m[part] < 0) throw domain_error("multiplicity went negative");
  if (m[part] == 0) m.erase(part);
  return GenPartition(std::move(m));
}

std::string GenPartition::str() const {
  if (mult_.empty()) return "()";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, m] : mult_) {
    if (!first) os << " ";
    first = false;
    os << "(" << p << ")^" << m;
  }
  return os.str();
}

GenPartition GenPartition::parse(const std::string& s) {
  std::map<int, int> m;
  size_t i = 0;
  while (i < s.size()) {
    if (std::isspace(static_cast<unsigned char>(s[i]))) {
      ++i;
      continue;
    }
    if (s[i] != '(') throw domain_error("bad generalized partition: " + s);
    size_t close = s.find(')', i);
    if (close == std::string::npos) throw domain_error("bad generalized partition: " + s);
    int part = std::stoi(s.substr(i + 1, close - i - 1));
    i = close + 1;
    int count = 1;
    if (i < s.size() && s[i] == '^') {
      size_t j = i + 1;
      while (j < s.size() && (std::isdigit(static_cast<unsigned char>(s[j])))) ++j;
      count = std::stoi(s.substr(i + 1, j - i - 1));
      i = j;
    }
    if (part == 0 && count > 0) throw domain_error("zero part in generalized partition");
    m[part] += count;
  }
  return GenPartition(std::move(m));
}

namespace {

void enum_partitions(int n, int max_part, std::vector<int>& acc, std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(Partition(acc));
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    acc.push_back(p);
    enum_partitions(n - p, p, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw domain_error("partitions of negative integer");
  std::vector<Partition> out;
  std::vector<int> acc;
  enum_partitions(n, n, acc, out);
  return out;
}

int partition_count(int n) { return static_cast<int>(partitions_of(n).size()); }

int partition_index(const Partition& la) {
  auto all = partitions_of(la.size());
  for (size_t i = 0; i < all.size(); ++i)
    if (all[i] == la) return static_cast<int>(i);
  throw domain_error("partition not found in enumeration");
}

namespace {

// parts chosen from {-part_bound..-1, 1..part_bound}, descending, weight fixed
void enum_gp(long long weight, int len, int part_bound, int max_part, std::vector<int>& acc,
             std::vector<GenPartition>& out) {
  if (len == 0) {
    if (weight == 0) out.push_back(GenPartition::of_parts(acc));
    return;
  }
  // remaining weight bound: len parts each in [-B, B]
  long long span = static_cast<long long>(len) * part_bound;
  if (weight > span || weight < -span) return;
  for (int p = std::min(max_part, part_bound); p >= -part_bound; --p) {
    if (p == 0) continue;
    acc.push_back(p);
    enum_gp(weight - p, len - 1, part_bound, p, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<GenPartition> gen_partitions(long long weight, int len, int part_bound) {
  if (part_bound < 0) throw domain_error("generalized partition enumeration needs a part bound");
  if (len < 0) throw domain_error("negative length");
  std::vector<GenPartition> out;
  std::vector<int> acc;
  enum_gp(weight, len, part_bound, part_bound, acc, out);
  return out;
}

std::vector<GenPartition> gen_partitions_up_to(long long weight, int max_len, int part_bound) {
  std::vector<GenPartition> out;
  for (int len = 0; len <= max_len; ++len) {
    auto part = gen_partitions(weight, len, part_bound);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

DomRel dominance_compare(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) throw domain_error("dominance needs equal sizes");
  int len = std::max(a.length(), b.length());
  bool a_ge = true, b_ge = true;
  int sa = 0, sb = 0;
  for (int i = 0; i < len; ++i) {
    sa += i < a.length() ? a.part(i) : 0;
    sb += i < b.length() ? b.part(i) : 0;
    if (sa < sb) a_ge = false;
    if (sb < sa) b_ge = false;
  }
  if (a_ge && b_ge) return DomRel::equal;
  if (a_ge) return DomRel::greater;
  if (b_ge) return DomRel::less;
  return DomRel::incomparable;
}

}  // namespace hilb
