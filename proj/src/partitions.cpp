#include "qlab/partitions.hpp"

#include <algorithm>
#include <set>

namespace qlab {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("Partition: at least one part required");
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw std::invalid_argument("Partition: parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("Partition: parts must be nonincreasing");
    weight_ += parts_[i];
  }
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out += '+';
    out += std::to_string(parts_[i]);
  }
  return out;
}

// Depth-first walk choosing parts in decreasing order. The visited Partition is
// reused between callbacks.
class PartitionWalker {
 public:
  PartitionWalker(const PartitionVisitor& visit, bool distinct) : visit_(visit), distinct_(distinct) {}

  void run(int n) {
    current_.parts_.clear();
    current_.weight_ = 0;
    walk(n, n);
  }

 private:
  void walk(int remaining, int max_part) {
    if (remaining == 0) {
      visit_(current_);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      // distinct parts below p+1 sum to at most p(p+1)/2
      if (distinct_ && p * (p + 1) / 2 < remaining) break;
      current_.parts_.push_back(p);
      current_.weight_ += p;
      walk(remaining - p, distinct_ ? p - 1 : p);
      current_.weight_ -= p;
      current_.parts_.pop_back();
    }
  }

  const PartitionVisitor& visit_;
  bool distinct_;
  Partition current_;
};

namespace {

void require_in_range(int n, int cap, const char* what) {
  if (n < 1) throw std::invalid_argument(std::string(what) + ": n must be at least 1");
  if (n > cap)
    throw EnumerationCapExceeded(std::string(what) + ": n = " + std::to_string(n) +
                                 " exceeds the enumeration cap " + std::to_string(cap) +
                                 "; use the series-based generating functions instead");
}

}  // namespace

void for_each_partition(int n, const PartitionVisitor& visit, const EnumerationLimits& limits) {
  require_in_range(n, limits.all_parts, "for_each_partition");
  PartitionWalker(visit, false).run(n);
}

std::vector<Partition> enumerate(int n, const EnumerationLimits& limits) {
  std::vector<Partition> out;
  for_each_partition(n, [&](const Partition& p) { out.push_back(p); }, limits);
  return out;
}

void for_each_distinct_partition(int n, const PartitionVisitor& visit,
                                 const EnumerationLimits& limits) {
  require_in_range(n, limits.distinct_parts, "for_each_distinct_partition");
  PartitionWalker(visit, true).run(n);
}

std::vector<Partition> enumerate_distinct(int n, const EnumerationLimits& limits) {
  std::vector<Partition> out;
  for_each_distinct_partition(n, [&](const Partition& p) { out.push_back(p); }, limits);
  return out;
}

bool is_gap_free(const Partition& p) {
  auto parts = p.parts();
  for (std::size_t i = 1; i < parts.size(); ++i)
    if (parts[i - 1] - parts[i] > 1) return false;
  return true;
}

bool is_distinct(const Partition& p) {
  auto parts = p.parts();
  for (std::size_t i = 1; i < parts.size(); ++i)
    if (parts[i - 1] == parts[i]) return false;
  return true;
}

bool only_largest_repeats(const Partition& p) {
  auto parts = p.parts();
  for (std::size_t i = 1; i < parts.size(); ++i)
    if (parts[i - 1] == parts[i] && parts[i] != parts.front()) return false;
  return true;
}

Partition conjugate(const Partition& p) {
  auto parts = p.parts();
  std::vector<int> out(static_cast<std::size_t>(p.largest()), 0);
  for (int part : parts)
    for (int j = 0; j < part; ++j) ++out[static_cast<std::size_t>(j)];
  return Partition(std::move(out));
}

std::int64_t a_direct(int n, const EnumerationLimits& limits) {
  std::int64_t count = 0;
  for_each_partition(n, [&](const Partition& p) { count += is_gap_free(p) ? 1 : 0; }, limits);
  return count;
}

std::int64_t b_direct(int n, const EnumerationLimits& limits) {
  std::int64_t total = 0;
  for_each_distinct_partition(
      n,
      [&](const Partition& p) {
        if (p.num_parts() % 2 == 1) total += p.smallest();
      },
      limits);
  return total;
}

bool conjugation_maps_gap_free_onto_largest_repeats(int n, const EnumerationLimits& limits) {
  std::set<Partition> image;
  std::set<Partition> target;
  std::size_t gap_free = 0;
  for_each_partition(
      n,
      [&](const Partition& p) {
        if (is_gap_free(p)) {
          ++gap_free;
          image.insert(conjugate(p));
        }
        if (only_largest_repeats(p)) target.insert(p);
      },
      limits);
  return image.size() == gap_free && image == target;
}

}  // namespace qlab
