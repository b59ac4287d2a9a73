// Copyright 2026 The fairdiv Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FAIRDIV_OBJECT_SET_HPP_
#define FAIRDIV_OBJECT_SET_HPP_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace fairdiv {

/// Hard cap on the number of objects in a universe.
inline constexpr std::size_t kMaxObjects = 24;

/// A subset of an indexed object universe, stored as a characteristic
/// bit vector. Bit i is set iff object i is a member.
class ObjectSet {
 public:
  using Bits = std::uint32_t;

  constexpr ObjectSet() = default;
  constexpr explicit ObjectSet(Bits bits) : bits_(bits) {}

  /// The set {0, ..., n-1}.
  static constexpr ObjectSet Full(std::size_t n) {
    return ObjectSet(n >= 32 ? ~Bits{0} : ((Bits{1} << n) - 1));
  }
  static constexpr ObjectSet Singleton(std::size_t i) {
    return ObjectSet(Bits{1} << i);
  }

  constexpr Bits bits() const { return bits_; }
  constexpr bool contains(std::size_t i) const { return (bits_ >> i) & 1u; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const {
    return static_cast<std::size_t>(std::popcount(bits_));
  }

  constexpr ObjectSet with(std::size_t i) const {
    return ObjectSet(bits_ | (Bits{1} << i));
  }
  constexpr ObjectSet without(std::size_t i) const {
    return ObjectSet(bits_ & ~(Bits{1} << i));
  }

  constexpr bool is_subset_of(ObjectSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool is_proper_subset_of(ObjectSet other) const {
    return is_subset_of(other) && bits_ != other.bits_;
  }

  /// Complement relative to `ground`. Requires *this to be a subset of it.
  constexpr ObjectSet complement_in(ObjectSet ground) const {
    return ObjectSet(ground.bits_ & ~bits_);
  }

  /// Member indices in increasing order.
  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    out.reserve(size());
    for (Bits b = bits_; b != 0; b &= b - 1) {
      out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
    }
    return out;
  }

  friend constexpr ObjectSet operator|(ObjectSet a, ObjectSet b) {
    return ObjectSet(a.bits_ | b.bits_);
  }
  friend constexpr ObjectSet operator&(ObjectSet a, ObjectSet b) {
    return ObjectSet(a.bits_ & b.bits_);
  }
  friend constexpr ObjectSet operator-(ObjectSet a, ObjectSet b) {
    return ObjectSet(a.bits_ & ~b.bits_);
  }
  friend constexpr bool operator==(ObjectSet, ObjectSet) = default;

 private:
  Bits bits_ = 0;
};

/// Canonical order: increasing size, then lexicographic by membership
/// vector (the set holding the lowest differing index comes first).
constexpr bool CanonicalLess(ObjectSet a, ObjectSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  const ObjectSet::Bits diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  return (a.bits() & (diff & (~diff + 1))) != 0;
}

struct CanonicalOrder {
  constexpr bool operator()(ObjectSet a, ObjectSet b) const {
    return CanonicalLess(a, b);
  }
};

/// Maps a dense index in [0, 2^|ground|) to the subset of `ground` whose
/// k-th smallest member is present iff bit k of the index is set.
class SubsetIndexer {
 public:
  explicit SubsetIndexer(ObjectSet ground) : positions_(ground.members()) {}

  std::size_t rank() const { return positions_.size(); }
  std::uint64_t count() const { return std::uint64_t{1} << positions_.size(); }

  ObjectSet Deposit(std::uint64_t index) const {
    ObjectSet::Bits bits = 0;
    for (std::size_t k = 0; index != 0; ++k, index >>= 1) {
      if (index & 1u) bits |= ObjectSet::Bits{1} << positions_[k];
    }
    return ObjectSet(bits);
  }

  std::uint64_t Extract(ObjectSet s) const {
    std::uint64_t index = 0;
    for (std::size_t k = 0; k < positions_.size(); ++k) {
      if (s.contains(positions_[k])) index |= std::uint64_t{1} << k;
    }
    return index;
  }

 private:
  std::vector<std::size_t> positions_;
};

/// Calls f(T) for every subset T of `s`, including the empty set and s.
template <typename F>
void ForEachSubset(ObjectSet s, F&& f) {
  const ObjectSet::Bits full = s.bits();
  ObjectSet::Bits sub = full;
  while (true) {
    f(ObjectSet(sub));
    if (sub == 0) break;
    sub = (sub - 1) & full;
  }
}

}  // namespace fairdiv

template <>
struct std::hash<fairdiv::ObjectSet> {
  std::size_t operator()(fairdiv::ObjectSet s) const noexcept {
    return std::hash<std::uint32_t>{}(s.bits());
  }
};

#endif  // FAIRDIV_OBJECT_SET_HPP_
