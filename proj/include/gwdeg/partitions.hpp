#ifndef GWDEG_PARTITIONS_HPP
#define GWDEG_PARTITIONS_HPP

#include <map>
#include <vector>

#include "gwdeg/rational.hpp"

namespace gwdeg {

/// Integer partition with parts in weakly decreasing order. The empty
/// partition is the unique partition of 0.
struct Partition {
  std::vector<int> parts;

  int length() const { return static_cast<int>(parts.size()); }
  int weight() const;
  /// part value -> number of occurrences
  std::map<int, int> multiplicities() const;

  friend bool operator==(const Partition&, const Partition&) = default;
};

/// All partitions of h in lexicographically decreasing order.
/// Throws std::invalid_argument for h < 0.
std::vector<Partition> enumerate_partitions(int h);

/// |Aut| of the tuple of parts: product over distinct values of m_v!.
Integer aut_order(const Partition& tau);

}  // namespace gwdeg

#endif  // GWDEG_PARTITIONS_HPP
