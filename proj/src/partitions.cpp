#include "gwdeg/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "gwdeg/number_theory.hpp"

namespace gwdeg {

namespace {

void extend(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition{prefix});
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    extend(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

int Partition::weight() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::map<int, int> Partition::multiplicities() const {
  std::map<int, int> out;
  for (int p : parts) {
    ++out[p];
  }
  return out;
}

std::vector<Partition> enumerate_partitions(int h) {
  if (h < 0) {
    throw std::invalid_argument("partitions: negative weight " + std::to_string(h));
  }
  std::vector<Partition> out;
  std::vector<int> prefix;
  extend(h, h, prefix, out);
  return out;
}

Integer aut_order(const Partition& tau) {
  Integer out = 1;
  for (const auto& [value, count] : tau.multiplicities()) {
    out *= factorial(count);
  }
  return out;
}

}  // namespace gwdeg
