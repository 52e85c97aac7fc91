#ifndef HESSPAVE_ROOT_SET_HPP
#define HESSPAVE_ROOT_SET_HPP

#include <cstdint>
#include <vector>

namespace hesspave {

/**
 * Dense membership set over an indexed root list.
 *
 * Indices refer to positions in a RootSystem's root list; the universe
 * size is fixed at construction.
 */
class RootSet {
public:
  RootSet() = default;
  explicit RootSet(int universe)
      : n_(universe), bits_((universe + 63) / 64, 0) {}

  int universe() const { return n_; }

  bool test(int i) const { return (bits_[i >> 6] >> (i & 63)) & 1; }
  void set(int i) { bits_[i >> 6] |= std::uint64_t(1) << (i & 63); }
  void reset(int i) { bits_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }

  int count() const;
  bool empty() const;

  bool contains(const RootSet& other) const;  // other subseteq *this
  bool intersects(const RootSet& other) const;

  RootSet& operator|=(const RootSet& o);
  RootSet& operator&=(const RootSet& o);
  RootSet& subtract(const RootSet& o);  // *this \= o

  friend RootSet operator|(RootSet a, const RootSet& b) { return a |= b; }
  friend RootSet operator&(RootSet a, const RootSet& b) { return a &= b; }
  friend RootSet difference(RootSet a, const RootSet& b) { return a.subtract(b); }

  bool operator==(const RootSet& o) const { return n_ == o.n_ && bits_ == o.bits_; }
  bool operator!=(const RootSet& o) const { return !(*this == o); }
  bool operator<(const RootSet& o) const { return bits_ < o.bits_; }

  std::vector<int> indices() const;

private:
  int n_ = 0;
  std::vector<std::uint64_t> bits_;
};

}  // namespace hesspave

#endif
