#include "spinmod/edge_set.hpp"

#include <bit>
#include <charconv>

#include "spinmod/error.hpp"

namespace spinmod {

namespace {

std::uint64_t full_mask(int size) {
  return size == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << size) - 1;
}

}  // namespace

EdgeSet::EdgeSet(int size, std::uint64_t bits) : size_(size), bits_(bits) {
  if (size < 0 || size > kMaxEdges) {
    throw ResourceError("edge set length " + std::to_string(size) +
                        " exceeds the supported maximum of 64 edges");
  }
  if ((bits & ~full_mask(size)) != 0) {
    throw InputError("edge set mask has bits beyond length " +
                     std::to_string(size));
  }
}

EdgeSet EdgeSet::all(int size) { return EdgeSet(size, full_mask(size)); }

EdgeSet EdgeSet::of(int size, std::initializer_list<int> edges) {
  EdgeSet s(size);
  for (int e : edges) s.insert(e);
  return s;
}

EdgeSet EdgeSet::of(int size, const std::vector<int>& edges) {
  EdgeSet s(size);
  for (int e : edges) s.insert(e);
  return s;
}

void EdgeSet::check_index(int e) const {
  if (e < 0 || e >= size_) {
    throw InputError("edge index " + std::to_string(e) +
                     " out of range for a graph with " +
                     std::to_string(size_) + " edges");
  }
}

void EdgeSet::check_same(const EdgeSet& o) const {
  if (o.size_ != size_) {
    throw InputError("edge sets over different graphs (" +
                     std::to_string(size_) + " vs " +
                     std::to_string(o.size_) + " edges)");
  }
}

bool EdgeSet::contains(int e) const {
  check_index(e);
  return (bits_ >> e) & 1U;
}

void EdgeSet::insert(int e) {
  check_index(e);
  bits_ |= std::uint64_t{1} << e;
}

void EdgeSet::erase(int e) {
  check_index(e);
  bits_ &= ~(std::uint64_t{1} << e);
}

int EdgeSet::count() const { return std::popcount(bits_); }

bool EdgeSet::is_subset_of(const EdgeSet& other) const {
  check_same(other);
  return (bits_ & ~other.bits_) == 0;
}

std::vector<int> EdgeSet::indices() const {
  std::vector<int> out;
  out.reserve(count());
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
    out.push_back(std::countr_zero(b));
  }
  return out;
}

EdgeSet EdgeSet::complement() const {
  return EdgeSet(size_, ~bits_ & full_mask(size_));
}

EdgeSet EdgeSet::operator^(const EdgeSet& o) const {
  check_same(o);
  return EdgeSet(size_, bits_ ^ o.bits_);
}

EdgeSet EdgeSet::operator&(const EdgeSet& o) const {
  check_same(o);
  return EdgeSet(size_, bits_ & o.bits_);
}

EdgeSet EdgeSet::operator|(const EdgeSet& o) const {
  check_same(o);
  return EdgeSet(size_, bits_ | o.bits_);
}

EdgeSet EdgeSet::operator-(const EdgeSet& o) const {
  check_same(o);
  return EdgeSet(size_, bits_ & ~o.bits_);
}

std::string EdgeSet::to_hex() const {
  char buf[17];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), bits_, 16);
  return std::string(buf, end);
}

EdgeSet EdgeSet::from_hex(int size, std::string_view hex) {
  if (hex.starts_with("0x") || hex.starts_with("0X")) hex.remove_prefix(2);
  std::uint64_t bits = 0;
  auto [ptr, ec] =
      std::from_chars(hex.data(), hex.data() + hex.size(), bits, 16);
  if (ec != std::errc{} || ptr != hex.data() + hex.size() || hex.empty()) {
    throw InputError("malformed edge mask '" + std::string(hex) + "'");
  }
  return EdgeSet(size, bits);
}

}  // namespace spinmod
