#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace partid {

// Integer partition: positive parts in weakly decreasing order.  The empty
// partition is the unique partition of 0.
class Partition {
 public:
  Partition() = default;
  // Throws std::invalid_argument if a part is < 1 or the parts increase.
  explicit Partition(std::vector<int> parts);

  std::span<const int> parts() const { return parts_; }
  // l(mu), the number of rows of the diagram.
  std::size_t length() const { return parts_.size(); }
  // |mu|.
  int weight() const { return weight_; }
  // m_i(mu), the number of parts equal to i.
  int multiplicity(int part) const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

  // "(3,1,1)"; the empty partition renders as "()".
  std::string to_string() const;

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

// Ordered sequence of positive integers.
class Composition {
 public:
  Composition() = default;
  // Throws std::invalid_argument if a part is < 1.
  explicit Composition(std::vector<int> parts);

  std::span<const int> parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  int total() const { return total_; }

  friend bool operator==(const Composition&, const Composition&) = default;
  friend auto operator<=>(const Composition& a, const Composition& b) {
    return a.parts_ <=> b.parts_;
  }

  std::string to_string() const;

 private:
  std::vector<int> parts_;
  int total_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Partition& mu);
std::ostream& operator<<(std::ostream& os, const Composition& c);

// All partitions of n in reverse-lexicographic order, largest first part
// first: 4 -> (4), (3,1), (2,2), (2,1,1), (1,1,1,1).  Throws
// std::invalid_argument when n < 0.
std::vector<Partition> partitions_of(int n);

// All compositions of `total` into exactly `num_parts` positive parts, in
// lexicographic order.  Empty when num_parts > total.  Throws
// std::invalid_argument unless total >= 1 and num_parts >= 1.
std::vector<Composition> compositions_of(int total, int num_parts);

namespace detail {

template <typename Visit>
void extend_composition(std::vector<int>& parts, std::size_t index,
                        int remaining, Visit& visit) {
  if (index + 1 == parts.size()) {
    parts[index] = remaining;
    visit(std::span<const int>(parts));
    return;
  }
  const int slots_after = static_cast<int>(parts.size() - index - 1);
  for (int part = 1; part <= remaining - slots_after; ++part) {
    parts[index] = part;
    extend_composition(parts, index + 1, remaining - part, visit);
  }
}

}  // namespace detail

// Visits the same sequence as compositions_of without materializing it.  The
// span is only valid for the duration of the callback.
template <typename Visit>
void for_each_composition(int total, int num_parts, Visit&& visit) {
  if (total < 1 || num_parts < 1 || num_parts > total) return;
  std::vector<int> parts(static_cast<std::size_t>(num_parts));
  detail::extend_composition(parts, 0, total, visit);
}

}  // namespace partid
