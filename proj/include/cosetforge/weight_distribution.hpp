#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cosetforge {

/// Number of words of each weight 0..max_weight.
class WeightDistribution {
 public:
  WeightDistribution() = default;
  explicit WeightDistribution(std::size_t max_weight) : counts_(max_weight + 1, 0) {}
  explicit WeightDistribution(std::vector<std::uint64_t> counts) : counts_(std::move(counts)) {}
  /// Builds from sparse (weight, count) pairs.
  static WeightDistribution from_entries(std::size_t max_weight,
                                         const std::vector<std::pair<std::size_t, std::uint64_t>>& entries);

  std::size_t max_weight() const { return counts_.empty() ? 0 : counts_.size() - 1; }
  std::uint64_t operator[](std::size_t weight) const {
    return weight < counts_.size() ? counts_[weight] : 0;
  }
  void add(std::size_t weight, std::uint64_t count = 1);
  const std::vector<std::uint64_t>& counts() const { return counts_; }

  std::uint64_t total() const;
  /// Smallest nonzero weight with a nonzero count.
  std::optional<std::size_t> min_nonzero_weight() const;
  /// Smallest weight with a nonzero count.
  std::optional<std::size_t> min_weight() const;
  std::vector<std::size_t> nonzero_weights() const;
  /// (weight, count) pairs with count > 0, ascending weight.
  std::vector<std::pair<std::size_t, std::uint64_t>> entries() const;

  /// "[<0,1>,<5,198>,...]"
  std::string to_string() const;

  friend bool operator==(const WeightDistribution& x, const WeightDistribution& y) {
    return x.entries() == y.entries();
  }

 private:
  std::vector<std::uint64_t> counts_;
};

}  // namespace cosetforge
