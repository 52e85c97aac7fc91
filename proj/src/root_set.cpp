#include "hesspave/root_set.hpp"

#include <bit>

namespace hesspave {

int RootSet::count() const {
  int c = 0;
  for (auto b : bits_) c += std::popcount(b);
  return c;
}

bool RootSet::empty() const {
  for (auto b : bits_)
    if (b) return false;
  return true;
}

bool RootSet::contains(const RootSet& other) const {
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (other.bits_[i] & ~bits_[i]) return false;
  return true;
}

bool RootSet::intersects(const RootSet& other) const {
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i] & other.bits_[i]) return true;
  return false;
}

RootSet& RootSet::operator|=(const RootSet& o) {
  for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] |= o.bits_[i];
  return *this;
}

RootSet& RootSet::operator&=(const RootSet& o) {
  for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] &= o.bits_[i];
  return *this;
}

RootSet& RootSet::subtract(const RootSet& o) {
  for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] &= ~o.bits_[i];
  return *this;
}

std::vector<int> RootSet::indices() const {
  std::vector<int> out;
  for (int i = 0; i < n_; ++i)
    if (test(i)) out.push_back(i);
  return out;
}

}  // namespace hesspave
