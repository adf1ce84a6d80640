#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "symcone/rational.hpp"

namespace symcone {

class Partition {
 public:
  Partition() = default;
  // Sorts the parts into descending order; throws on a nonpositive part.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int weight() const;
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int operator[](std::size_t i) const { return parts_[i]; }

  // Multiplicity of each distinct part, in descending part order.
  std::vector<int> multiplicities() const;

  // Comma-joined parts, "" for the empty partition.
  std::string to_string() const;
  static Partition parse(std::string_view text);

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
  // Reverse-lexicographic within a weight; lighter partitions first.
  friend bool operator<(const Partition& a, const Partition& b);

 private:
  std::vector<int> parts_;
};

// Reverse-lexicographic order: (4),(3,1),(2,2),(2,1,1),(1,1,1,1).
std::vector<Partition> partitions_of(int k);

// Position of lambda in partitions_of(lambda.weight()).
std::size_t partition_index(const Partition& lambda);

bool contains_subpartition(const Partition& lambda, int m);

struct GridPoint {
  std::vector<Rational> weights;
};

std::vector<GridPoint> w_grid(int n, int d);

}  // namespace symcone
