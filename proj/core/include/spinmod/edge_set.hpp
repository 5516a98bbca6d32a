#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace spinmod {

inline constexpr int kMaxEdges = 64;

// Element of the F2-vector space spanned by the edges of a fixed graph,
// stored as a bitmask over that graph's edge indexing. The length is part
// of the value; operations between sets of different lengths throw.
class EdgeSet {
 public:
  EdgeSet() = default;
  explicit EdgeSet(int size, std::uint64_t bits = 0);

  static EdgeSet none(int size) { return EdgeSet(size); }
  static EdgeSet all(int size);
  static EdgeSet of(int size, std::initializer_list<int> edges);
  static EdgeSet of(int size, const std::vector<int>& edges);

  int size() const { return size_; }
  std::uint64_t bits() const { return bits_; }

  bool contains(int e) const;
  void insert(int e);
  void erase(int e);
  int count() const;
  bool empty() const { return bits_ == 0; }
  bool is_subset_of(const EdgeSet& other) const;

  std::vector<int> indices() const;

  EdgeSet complement() const;
  EdgeSet operator^(const EdgeSet& o) const;
  EdgeSet operator&(const EdgeSet& o) const;
  EdgeSet operator|(const EdgeSet& o) const;
  EdgeSet operator-(const EdgeSet& o) const;

  // Lowercase hex of the mask, no prefix; "0" for the empty set.
  std::string to_hex() const;
  static EdgeSet from_hex(int size, std::string_view hex);

  friend bool operator==(const EdgeSet&, const EdgeSet&) = default;
  friend auto operator<=>(const EdgeSet&, const EdgeSet&) = default;

 private:
  void check_same(const EdgeSet& o) const;
  void check_index(int e) const;

  int size_ = 0;
  std::uint64_t bits_ = 0;
};

}  // namespace spinmod
