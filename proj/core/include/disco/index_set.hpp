#pragma once

#include <cstdint>
#include <cstddef>
#include <string>
#include <vector>

namespace disco {

// Set of 1-based token indexes, the yield of a constituent or stack item.
// Stored as a bitset with cached min/max so that the boundary lookups used
// by the feature templates are O(1) and unions cost one pass over the words.
class IndexSet {
 public:
  IndexSet() = default;

  static IndexSet singleton(int index);
  static IndexSet range(int lo, int hi);  // inclusive [lo, hi]
  static IndexSet of(const std::vector<int>& indexes);

  void add(int index);
  void unite(const IndexSet& other);
  void subtract(const IndexSet& other);

  bool contains(int index) const;
  bool intersects(const IndexSet& other) const;
  bool contains_all(const IndexSet& other) const;

  bool empty() const { return count_ == 0; }
  int size() const { return count_; }
  int min() const { return min_; }  // 0 when empty
  int max() const { return max_; }  // 0 when empty

  // true iff the set equals the full range [min, max]; empty sets count as
  // contiguous, so "discontinuous" is exactly !contiguous()
  bool contiguous() const { return count_ == 0 || count_ == max_ - min_ + 1; }

  std::vector<int> to_vector() const;

  bool operator==(const IndexSet& other) const { return bits_ == other.bits_; }
  bool operator<(const IndexSet& other) const;

  size_t hash() const;

  // compact display form, e.g. "{1-4,6}"
  std::string to_string() const;

 private:
  void recount();

  std::vector<uint64_t> bits_;  // bit (i-1) set iff i in the set; no trailing zero words
  int min_ = 0;
  int max_ = 0;
  int count_ = 0;
};

struct IndexSetHash {
  size_t operator()(const IndexSet& s) const { return s.hash(); }
};

}  // namespace disco
