#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace declat {

/// Fixed-width set of indices backed by a dynamic bitset.
///
/// The tag parameter keeps object sets and attribute sets from being mixed
/// up at compile time. Binary operations require equal widths and throw
/// std::invalid_argument otherwise.
template <typename Tag>
class IndexSet {
 public:
  using Bits = boost::dynamic_bitset<std::uint64_t>;
  static constexpr std::size_t npos = Bits::npos;

  IndexSet() = default;
  explicit IndexSet(std::size_t width) : bits_(width) {}
  IndexSet(std::size_t width, std::initializer_list<std::size_t> members) : bits_(width) {
    for (auto i : members) set(i);
  }

  static IndexSet full(std::size_t width) {
    IndexSet s(width);
    s.bits_.set();
    return s;
  }

  template <typename Range>
  static IndexSet of(std::size_t width, const Range& members) {
    IndexSet s(width);
    for (auto i : members) s.set(static_cast<std::size_t>(i));
    return s;
  }

  std::size_t width() const noexcept { return bits_.size(); }
  std::size_t count() const noexcept { return bits_.count(); }
  bool empty() const noexcept { return bits_.none(); }

  bool test(std::size_t i) const {
    check_index(i);
    return bits_.test(i);
  }
  bool contains(std::size_t i) const { return test(i); }

  IndexSet& set(std::size_t i) {
    check_index(i);
    bits_.set(i);
    return *this;
  }
  IndexSet& reset(std::size_t i) {
    check_index(i);
    bits_.reset(i);
    return *this;
  }

  std::size_t first() const noexcept { return bits_.find_first(); }
  std::size_t next(std::size_t i) const noexcept { return bits_.find_next(i); }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (auto i = bits_.find_first(); i != Bits::npos; i = bits_.find_next(i)) fn(i);
  }

  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  bool is_subset_of(const IndexSet& other) const {
    check_width(other);
    return bits_.is_subset_of(other.bits_);
  }
  bool is_proper_subset_of(const IndexSet& other) const {
    check_width(other);
    return bits_.is_proper_subset_of(other.bits_);
  }
  bool intersects(const IndexSet& other) const {
    check_width(other);
    return bits_.intersects(other.bits_);
  }

  IndexSet& operator&=(const IndexSet& other) {
    check_width(other);
    bits_ &= other.bits_;
    return *this;
  }
  IndexSet& operator|=(const IndexSet& other) {
    check_width(other);
    bits_ |= other.bits_;
    return *this;
  }
  IndexSet& operator-=(const IndexSet& other) {
    check_width(other);
    bits_ -= other.bits_;
    return *this;
  }
  friend IndexSet operator&(IndexSet a, const IndexSet& b) { return a &= b; }
  friend IndexSet operator|(IndexSet a, const IndexSet& b) { return a |= b; }
  friend IndexSet operator-(IndexSet a, const IndexSet& b) { return a -= b; }

  IndexSet complement() const {
    IndexSet s = *this;
    s.bits_.flip();
    return s;
  }

  friend bool operator==(const IndexSet& a, const IndexSet& b) { return a.bits_ == b.bits_; }
  // Lexicographic on (width, bits); only used for ordered containers.
  friend bool operator<(const IndexSet& a, const IndexSet& b) {
    if (a.width() != b.width()) return a.width() < b.width();
    return a.bits_ < b.bits_;
  }

  std::size_t hash() const noexcept { return boost::hash_value(bits_); }

  /// "0110..." with index 0 first.
  std::string to_string() const {
    std::string s(width(), '0');
    for_each([&](std::size_t i) { s[i] = '1'; });
    return s;
  }

  const Bits& bits() const noexcept { return bits_; }

 private:
  void check_index(std::size_t i) const {
    if (i >= bits_.size())
      throw std::out_of_range("index " + std::to_string(i) + " outside set of width " +
                              std::to_string(bits_.size()));
  }
  void check_width(const IndexSet& other) const {
    if (other.width() != width())
      throw std::invalid_argument("set width mismatch: " + std::to_string(width()) + " vs " +
                                  std::to_string(other.width()));
  }

  Bits bits_;
};

struct ObjectTag {};
struct AttributeTag {};

using ObjectSet = IndexSet<ObjectTag>;
using AttributeSet = IndexSet<AttributeTag>;

}  // namespace declat

template <typename Tag>
struct std::hash<declat::IndexSet<Tag>> {
  std::size_t operator()(const declat::IndexSet<Tag>& s) const noexcept { return s.hash(); }
};
