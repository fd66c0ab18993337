#include "cosetforge/weight_distribution.hpp"

namespace cosetforge {

WeightDistribution WeightDistribution::from_entries(
    std::size_t max_weight, const std::vector<std::pair<std::size_t, std::uint64_t>>& entries) {
  WeightDistribution wd(max_weight);
  for (const auto& [weight, count] : entries) wd.add(weight, count);
  return wd;
}

void WeightDistribution::add(std::size_t weight, std::uint64_t count) {
  if (weight >= counts_.size()) counts_.resize(weight + 1, 0);
  counts_[weight] += count;
}

std::uint64_t WeightDistribution::total() const {
  std::uint64_t sum = 0;
  for (auto c : counts_) sum += c;
  return sum;
}

std::optional<std::size_t> WeightDistribution::min_nonzero_weight() const {
  for (std::size_t w = 1; w < counts_.size(); ++w) {
    if (counts_[w] != 0) return w;
  }
  return std::nullopt;
}

std::optional<std::size_t> WeightDistribution::min_weight() const {
  for (std::size_t w = 0; w < counts_.size(); ++w) {
    if (counts_[w] != 0) return w;
  }
  return std::nullopt;
}

std::vector<std::size_t> WeightDistribution::nonzero_weights() const {
  std::vector<std::size_t> out;
  for (std::size_t w = 1; w < counts_.size(); ++w) {
    if (counts_[w] != 0) out.push_back(w);
  }
  return out;
}

std::vector<std::pair<std::size_t, std::uint64_t>> WeightDistribution::entries() const {
  std::vector<std::pair<std::size_t, std::uint64_t>> out;
  for (std::size_t w = 0; w < counts_.size(); ++w) {
    if (counts_[w] != 0) out.emplace_back(w, counts_[w]);
  }
  return out;
}

std::string WeightDistribution::to_string() const {
  std::string s = "[";
  bool first = true;
  for (const auto& [w, c] : entries()) {
    if (!first) s += ",";
    first = false;
    s += "<" + std::to_string(w) + "," + std::to_string(c) + ">";
  }
  return s + "]";
}

}  // namespace cosetforge
