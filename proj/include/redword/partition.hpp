#pragma once

#include <compare>
#include <string>
#include <vector>

namespace redword {

/// Integer partition stored without trailing zeros.
class Partition {
 public:
  Partition() = default;
  /// Trailing zeros are dropped; throws unless the parts weakly decrease.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  /// Part k (0-based), zero past the end.
  int operator[](std::size_t k) const { return k < parts_.size() ? parts_[k] : 0; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const;
  bool empty() const { return parts_.empty(); }

  Partition transpose() const;

  /// Staircase (n-1, n-2, ..., 1).
  static Partition staircase(int n);

  auto operator<=>(const Partition&) const = default;
  bool operator==(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

/// True when the (zero-padded) sequence weakly decreases.
bool is_partition_shaped(const std::vector<int>& weights);

/// Dominance order on partitions of the same size: a <= b iff every partial
/// sum of a is at most the corresponding partial sum of b.
bool dominance_leq(const Partition& a, const Partition& b);

/// All partitions of n with at most max_parts parts, in lexicographically
/// decreasing order (a linear extension of dominance, largest first).
std::vector<Partition> partitions_of(int n, int max_parts);
std::vector<Partition> partitions_of(int n);

std::string format_partition(const Partition& p);  // "[2,1]"
Partition parse_partition(const std::string& text);  // "3,2,1" or "[3,2,1]"

}  // namespace redword
