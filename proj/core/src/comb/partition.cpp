#include "partid/comb/partition.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace partid {
namespace {

std::string join_parts(std::span<const int> parts) {
  std::string out = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(parts[i]);
  }
  out += ")";
  return out;
}

// Appends to `out` every partition of `remaining` whose parts are at most
// `max_part`, prefixed by `prefix`, largest leading part first.
void extend_partition(std::vector<int>& prefix, int remaining, int max_part,
                      std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    extend_partition(prefix, remaining - part, part, out);
    prefix.pop_back();
  }
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) {
      throw std::invalid_argument("Partition: parts must be positive");
    }
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
  }
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::multiplicity(int part) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), part));
}

std::string Partition::to_string() const { return join_parts(parts_); }

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (std::any_of(parts_.begin(), parts_.end(), [](int p) { return p < 1; })) {
    throw std::invalid_argument("Composition: parts must be positive");
  }
  total_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string Composition::to_string() const { return join_parts(parts_); }

std::ostream& operator<<(std::ostream& os, const Partition& mu) {
  return os << mu.to_string();
}

std::ostream& operator<<(std::ostream& os, const Composition& c) {
  return os << c.to_string();
}

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: n must be >= 0");
  std::vector<Partition> out;
  std::vector<int> prefix;
  extend_partition(prefix, n, n, out);
  return out;
}

std::vector<Composition> compositions_of(int total, int num_parts) {
  if (total < 1 || num_parts < 1) {
    throw std::invalid_argument(
        "compositions_of: total and num_parts must be >= 1");
  }
  std::vector<Composition> out;
  for_each_composition(total, num_parts, [&](std::span<const int> parts) {
    out.emplace_back(std::vector<int>(parts.begin(), parts.end()));
  });
  return out;
}

}  // namespace partid
