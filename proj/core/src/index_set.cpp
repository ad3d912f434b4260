#include "disco/index_set.hpp"

#include <bit>
#include <stdexcept>

namespace disco {

IndexSet IndexSet::singleton(int index) {
  IndexSet s;
  s.add(index);
  return s;
}

IndexSet IndexSet::range(int lo, int hi) {
  IndexSet s;
  for (int i = lo; i <= hi; ++i) s.add(i);
  return s;
}

IndexSet IndexSet::of(const std::vector<int>& indexes) {
  IndexSet s;
  for (int i : indexes) s.add(i);
  return s;
}

void IndexSet::add(int index) {
  if (index < 1) throw std::invalid_argument("IndexSet: indexes are 1-based");
  size_t word = static_cast<size_t>(index - 1) / 64;
  uint64_t mask = uint64_t{1} << ((index - 1) % 64);
  if (word >= bits_.size()) bits_.resize(word + 1, 0);
  if (bits_[word] & mask) return;
  bits_[word] |= mask;
  ++count_;
  if (min_ == 0 || index < min_) min_ = index;
  if (index > max_) max_ = index;
}

void IndexSet::unite(const IndexSet& other) {
  if (other.bits_.size() > bits_.size()) bits_.resize(other.bits_.size(), 0);
  for (size_t w = 0; w < other.bits_.size(); ++w) bits_[w] |= other.bits_[w];
  recount();
}

void IndexSet::subtract(const IndexSet& other) {
  size_t n = std::min(bits_.size(), other.bits_.size());
  for (size_t w = 0; w < n; ++w) bits_[w] &= ~other.bits_[w];
  while (!bits_.empty() && bits_.back() == 0) bits_.pop_back();
  recount();
}

bool IndexSet::contains(int index) const {
  if (index < 1) return false;
  size_t word = static_cast<size_t>(index - 1) / 64;
  if (word >= bits_.size()) return false;
  return (bits_[word] >> ((index - 1) % 64)) & 1;
}

bool IndexSet::intersects(const IndexSet& other) const {
  size_t n = std::min(bits_.size(), other.bits_.size());
  for (size_t w = 0; w < n; ++w)
    if (bits_[w] & other.bits_[w]) return true;
  return false;
}

bool IndexSet::contains_all(const IndexSet& other) const {
  if (other.bits_.size() > bits_.size()) return false;
  for (size_t w = 0; w < other.bits_.size(); ++w)
    if ((bits_[w] & other.bits_[w]) != other.bits_[w]) return false;
  return true;
}

std::vector<int> IndexSet::to_vector() const {
  std::vector<int> out;
  out.reserve(count_);
  for (size_t w = 0; w < bits_.size(); ++w) {
    uint64_t word = bits_[w];
    while (word) {
      int b = std::countr_zero(word);
      out.push_back(static_cast<int>(w * 64 + b + 1));
      word &= word - 1;
    }
  }
  return out;
}

bool IndexSet::operator<(const IndexSet& other) const {
  return bits_ < other.bits_;
}

size_t IndexSet::hash() const {
  size_t h = 0xcbf29ce484222325ull;
  for (uint64_t w : bits_) {
    h ^= w;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string IndexSet::to_string() const {
  std::string out = "{";
  auto v = to_vector();
  for (size_t i = 0; i < v.size();) {
    size_t j = i;
    while (j + 1 < v.size() && v[j + 1] == v[j] + 1) ++j;
    if (i > 0) out += ",";
    out += std::to_string(v[i]);
    if (j > i) out += "-" + std::to_string(v[j]);
    i = j + 1;
  }
  out += "}";
  return out;
}

void IndexSet::recount() {
  count_ = 0;
  min_ = max_ = 0;
  for (size_t w = 0; w < bits_.size(); ++w) {
    if (!bits_[w]) continue;
    count_ += std::popcount(bits_[w]);
    if (min_ == 0) min_ = static_cast<int>(w * 64 + std::countr_zero(bits_[w]) + 1);
    max_ = static_cast<int>(w * 64 + 63 - std::countl_zero(bits_[w]) + 1);
  }
}

}  // namespace disco
