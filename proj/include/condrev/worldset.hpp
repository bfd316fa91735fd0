// condrev/worldset.hpp — sets of worlds as bitmasks.
//
// A WorldSet indexes into a scenario's world list: bit i set means the
// world with index i is a member. All set algebra is plain bit twiddling;
// complements are always taken relative to an explicit domain.

#ifndef CONDREV_WORLDSET_HPP
#define CONDREV_WORLDSET_HPP

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>

namespace condrev {

inline constexpr int kMaxWorlds = 64;

class WorldSet {
 public:
  constexpr WorldSet() = default;
  constexpr explicit WorldSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr WorldSet full(int n_worlds) {
    return WorldSet(n_worlds >= kMaxWorlds ? ~std::uint64_t{0}
                                           : (std::uint64_t{1} << n_worlds) - 1);
  }
  static constexpr WorldSet single(int world) {
    return WorldSet(std::uint64_t{1} << world);
  }
  static WorldSet of(std::initializer_list<int> worlds) {
    WorldSet s;
    for (int w : worlds) s.bits_ |= std::uint64_t{1} << w;
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int world) const {
    return (bits_ >> world) & std::uint64_t{1};
  }
  constexpr int lowest() const { return std::countr_zero(bits_); }

  constexpr WorldSet with(int world) const {
    return WorldSet(bits_ | (std::uint64_t{1} << world));
  }
  constexpr WorldSet without(int world) const {
    return WorldSet(bits_ & ~(std::uint64_t{1} << world));
  }

  constexpr bool subset_of(WorldSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool intersects(WorldSet other) const {
    return (bits_ & other.bits_) != 0;
  }
  constexpr WorldSet complement_within(WorldSet domain) const {
    return WorldSet(domain.bits_ & ~bits_);
  }

  friend constexpr WorldSet operator&(WorldSet a, WorldSet b) {
    return WorldSet(a.bits_ & b.bits_);
  }
  friend constexpr WorldSet operator|(WorldSet a, WorldSet b) {
    return WorldSet(a.bits_ | b.bits_);
  }
  friend constexpr WorldSet operator-(WorldSet a, WorldSet b) {
    return WorldSet(a.bits_ & ~b.bits_);
  }
  friend constexpr bool operator==(WorldSet a, WorldSet b) = default;

  template <class F>
  void for_each(F&& fn) const {
    for (std::uint64_t rest = bits_; rest != 0; rest &= rest - 1) {
      fn(std::countr_zero(rest));
    }
  }

  // Debug rendering by raw index, e.g. "{0,3,4}". Id-based rendering lives
  // with the scenario serialization.
  std::string debug_string() const {
    std::string out = "{";
    bool first = true;
    for_each([&](int w) {
      if (!first) out += ',';
      out += std::to_string(w);
      first = false;
    });
    out += '}';
    return out;
  }

 private:
  std::uint64_t bits_ = 0;
};

// Visits every nonempty subset of `domain` in ascending bitmask order.
template <class F>
inline void for_each_nonempty_subset(WorldSet domain, F&& fn) {
  const std::uint64_t dom = domain.bits();
  std::uint64_t sub = 0;
  while (true) {
    sub = (sub - dom) & dom;  // next subset of dom, ascending, wraps to 0
    if (sub == 0) break;
    fn(WorldSet(sub));
  }
}

}  // namespace condrev

#endif  // CONDREV_WORLDSET_HPP
