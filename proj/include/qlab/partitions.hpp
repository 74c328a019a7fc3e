#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace qlab {

// Nonincreasing sequence of positive parts; never empty.
class Partition {
 public:
  explicit Partition(std::vector<int> parts);

  std::span<const int> parts() const noexcept { return parts_; }
  int weight() const noexcept { return weight_; }
  int smallest() const noexcept { return parts_.back(); }
  int largest() const noexcept { return parts_.front(); }
  std::size_t num_parts() const noexcept { return parts_.size(); }

  // "3+2+2"
  std::string to_string() const;

  bool operator==(const Partition& other) const { return parts_ == other.parts_; }
  auto operator<=>(const Partition& other) const { return parts_ <=> other.parts_; }

 private:
  friend class PartitionWalker;
  Partition() = default;

  std::vector<int> parts_;
  int weight_ = 0;
};

// Brute-force enumeration is exponential in n; these caps stop accidental
// blowups. Distinct partitions are far sparser, hence the larger default.
struct EnumerationLimits {
  int all_parts = 60;
  int distinct_parts = 120;
};

class EnumerationCapExceeded : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

using PartitionVisitor = std::function<void(const Partition&)>;

// Every partition of n exactly once, in reverse-lexicographic order of part
// sequences: (n), (n-1,1), (n-2,2), (n-2,1,1), ...
void for_each_partition(int n, const PartitionVisitor& visit, const EnumerationLimits& limits = {});
std::vector<Partition> enumerate(int n, const EnumerationLimits& limits = {});

// Partitions of n into distinct parts, same ordering.
void for_each_distinct_partition(int n, const PartitionVisitor& visit,
                                 const EnumerationLimits& limits = {});
std::vector<Partition> enumerate_distinct(int n, const EnumerationLimits& limits = {});

bool is_gap_free(const Partition& p);
bool is_distinct(const Partition& p);
bool only_largest_repeats(const Partition& p);

// Ferrers-diagram transpose: part j of the result is #{i : p_i >= j}.
Partition conjugate(const Partition& p);

// Number of gap-free partitions of n.
std::int64_t a_direct(int n, const EnumerationLimits& limits = {});

// Sum of smallest parts over distinct partitions of n with an odd number of parts.
std::int64_t b_direct(int n, const EnumerationLimits& limits = {});

// True iff conjugation maps the gap-free partitions of n onto exactly the
// partitions of n in which only the largest part repeats, injectively.
bool conjugation_maps_gap_free_onto_largest_repeats(int n, const EnumerationLimits& limits = {});

}  // namespace qlab
