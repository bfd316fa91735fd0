// condrev/tpo.hpp — total preorders over a finite world set.
//
// A TPO is stored canonically as an ordered partition of its domain, most
// plausible cell first, with a derived rank table for O(1) comparisons.
// x ≼ y iff rank(x) <= rank(y). The pair-set view of the relation is only
// materialized inside the Kemeny distance and conflict computations.
//
// Everything here is a pure function over immutable values.

#ifndef CONDREV_TPO_HPP
#define CONDREV_TPO_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "condrev/worldset.hpp"

namespace condrev {

namespace detail {
struct TpoAccess;
}

class Tpo {
 public:
  Tpo(WorldSet domain, std::vector<WorldSet> cells)
      : domain_(domain), cells_(std::move(cells)) {
    if (domain_.empty()) throw std::invalid_argument("tpo: empty domain");
    WorldSet seen;
    for (const WorldSet& cell : cells_) {
      if (cell.empty()) throw std::invalid_argument("tpo: empty cell");
      if (!cell.subset_of(domain_))
        throw std::invalid_argument("tpo: cell outside domain");
      if (cell.intersects(seen))
        throw std::invalid_argument("tpo: overlapping cells");
      seen = seen | cell;
    }
    if (!(seen == domain_))
      throw std::invalid_argument("tpo: missing world");
    rebuild_ranks();
  }

  const WorldSet& domain() const { return domain_; }
  int cell_count() const { return static_cast<int>(cells_.size()); }
  const WorldSet& cell(int i) const { return cells_[i]; }
  const std::vector<WorldSet>& cells() const { return cells_; }
  WorldSet first_cell() const { return cells_.front(); }

  int rank(int world) const { return rank_[world]; }
  bool leq(int x, int y) const { return rank_[x] <= rank_[y]; }
  bool lt(int x, int y) const { return rank_[x] < rank_[y]; }
  bool same_rank(int x, int y) const { return rank_[x] == rank_[y]; }

  friend bool operator==(const Tpo& a, const Tpo& b) {
    return a.domain_ == b.domain_ && a.cells_ == b.cells_;
  }

 private:
  Tpo() = default;
  friend struct detail::TpoAccess;

  void rebuild_ranks() {
    rank_.fill(kNoRank);
    for (std::size_t i = 0; i < cells_.size(); ++i)
      cells_[i].for_each(
          [&](int w) { rank_[w] = static_cast<std::uint8_t>(i); });
  }

  static constexpr std::uint8_t kNoRank = 0xFF;

  WorldSet domain_;
  std::vector<WorldSet> cells_;
  std::array<std::uint8_t, kMaxWorlds> rank_{};
};

// --- order-theoretic primitives -------------------------------------------

inline WorldSet min_worlds(const Tpo& t, WorldSet s) {
  WorldSet within = s & t.domain();
  if (within.empty())
    throw std::invalid_argument("min_worlds: empty selection");
  for (int i = 0; i < t.cell_count(); ++i) {
    WorldSet hit = t.cell(i) & within;
    if (!hit.empty()) return hit;
  }
  throw std::logic_error("min_worlds: unreachable");
}

inline bool believes(const Tpo& t, WorldSet f_models) {
  return t.first_cell().subset_of(f_models);
}

// min(≼, A) ⊆ B — acceptance of the conditional A => B.
inline bool accepts_conditional(const Tpo& t, WorldSet a_models,
                                WorldSet b_models) {
  return min_worlds(t, a_models).subset_of(b_models);
}

// All worlds weakly below some minimal s-world.
inline WorldSet down_set(const Tpo& t, WorldSet s) {
  WorldSet m = min_worlds(t, s);
  const int cutoff = t.rank(m.lowest());
  WorldSet out;
  for (int i = 0; i <= cutoff; ++i) out = out | t.cell(i);
  return out;
}

inline void require_same_domain(const Tpo& a, const Tpo& b) {
  if (!(a.domain() == b.domain()))
    throw std::invalid_argument("mismatched world sets");
}

// Cardinality of the symmetric difference of the two weak-pair sets.
inline int kemeny_distance(const Tpo& t1, const Tpo& t2) {
  require_same_domain(t1, t2);
  int d = 0;
  t1.domain().for_each([&](int x) {
    t1.domain().for_each([&](int y) {
      if (x == y) return;
      if (t1.leq(x, y) != t2.leq(x, y)) ++d;
    });
  });
  return d;
}

// Hard conflict: the pair is strictly ordered opposite ways.
// Soft conflict: tied in exactly one of the two TPOs.
struct ConflictReport {
  std::vector<std::pair<int, int>> hard;  // unordered pairs, x < y
  std::vector<std::pair<int, int>> soft;
};

inline ConflictReport conflicts(const Tpo& t1, const Tpo& t2) {
  require_same_domain(t1, t2);
  ConflictReport out;
  t1.domain().for_each([&](int x) {
    t1.domain().for_each([&](int y) {
      if (x >= y) return;
      const bool tie1 = t1.same_rank(x, y), tie2 = t2.same_rank(x, y);
      if (tie1 && tie2) return;
      if (!tie1 && !tie2) {
        if (t1.lt(x, y) != t2.lt(x, y)) out.hard.emplace_back(x, y);
      } else {
        out.soft.emplace_back(x, y);
      }
    });
  });
  return out;
}

// x ≼ y iff x ≺₁ y, or x ∼₁ y and x ≼₂ y.
inline Tpo lex_combination(const Tpo& t1, const Tpo& t2) {
  require_same_domain(t1, t2);
  // one bucket per (rank1, rank2) key, in lexicographic key order
  std::vector<std::pair<int, WorldSet>> buckets;  // key = r1 * 64 + r2
  t1.domain().for_each([&](int w) {
    const int key = t1.rank(w) * kMaxWorlds + t2.rank(w);
    for (auto& [k, cell] : buckets)
      if (k == key) {
        cell = cell.with(w);
        return;
      }
    buckets.emplace_back(key, WorldSet::single(w));
  });
  std::sort(buckets.begin(), buckets.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<WorldSet> cells;
  cells.reserve(buckets.size());
  for (auto& [k, cell] : buckets) cells.push_back(cell);
  return Tpo(t1.domain(), std::move(cells));
}

// All s-worlds strictly first, both blocks keeping their internal order.
// Empty or full s leaves the tpo unchanged.
inline Tpo lex_revise_by_set(const Tpo& t, WorldSet s) {
  const WorldSet inside = s & t.domain();
  std::vector<WorldSet> cells;
  for (int i = 0; i < t.cell_count(); ++i) {
    WorldSet c = t.cell(i) & inside;
    if (!c.empty()) cells.push_back(c);
  }
  for (int i = 0; i < t.cell_count(); ++i) {
    WorldSet c = t.cell(i) - inside;
    if (!c.empty()) cells.push_back(c);
  }
  return Tpo(t.domain(), std::move(cells));
}

// ≼ ∩ (s × s), as a TPO over s.
inline Tpo restrict_to(const Tpo& t, WorldSet s) {
  const WorldSet inside = s & t.domain();
  if (inside.empty()) throw std::invalid_argument("restrict_to: empty set");
  std::vector<WorldSet> cells;
  for (int i = 0; i < t.cell_count(); ++i) {
    WorldSet c = t.cell(i) & inside;
    if (!c.empty()) cells.push_back(c);
  }
  return Tpo(inside, std::move(cells));
}

// Comparative flatness: t1 ⊒ t2 iff the partitions agree, or at the first
// index where they differ t1's cell strictly contains t2's. Shorter
// partitions are padded with empty cells.
inline bool flatness_at_least(const Tpo& t1, const Tpo& t2) {
  require_same_domain(t1, t2);
  const int n = std::max(t1.cell_count(), t2.cell_count());
  for (int i = 0; i < n; ++i) {
    WorldSet c1 = i < t1.cell_count() ? t1.cell(i) : WorldSet{};
    WorldSet c2 = i < t2.cell_count() ? t2.cell(i) : WorldSet{};
    if (c1 == c2) continue;
    return c2.subset_of(c1);
  }
  return true;
}

inline bool agree_on_antecedent(const Tpo& t1, const Tpo& t2, WorldSet s) {
  require_same_domain(t1, t2);
  return min_worlds(t1, s) == min_worlds(t2, s);
}

// --- conditional belief sets -----------------------------------------------

// Extensional view of the conditionals accepted by one or more TPOs: for an
// antecedent set S, required(S) is the union over the generating TPOs of
// min(≼ᵢ, S), and S => T is accepted iff required(S) ⊆ T. With a single
// generator this is the Grove semantics; with several it realizes the
// intersection of their conditional belief sets.
class ConditionalBeliefSet {
 public:
  explicit ConditionalBeliefSet(std::vector<Tpo> generators)
      : generators_(std::move(generators)) {
    if (generators_.empty())
      throw std::invalid_argument("conditional belief set: no generators");
    for (const Tpo& t : generators_) require_same_domain(t, generators_[0]);
  }

  const WorldSet& domain() const { return generators_[0].domain(); }
  const std::vector<Tpo>& generators() const { return generators_; }

  WorldSet required(WorldSet antecedent) const {
    WorldSet u;
    for (const Tpo& t : generators_) u = u | min_worlds(t, antecedent);
    return u;
  }

  bool accepts(WorldSet a_models, WorldSet b_models) const {
    return required(a_models).subset_of(b_models);
  }

 private:
  std::vector<Tpo> generators_;
};

inline ConditionalBeliefSet conditional_belief_set(const Tpo& t) {
  return ConditionalBeliefSet({t});
}

inline bool same_conditional_beliefs(const ConditionalBeliefSet& x,
                                     const ConditionalBeliefSet& y) {
  if (!(x.domain() == y.domain())) return false;
  bool same = true;
  for_each_nonempty_subset(x.domain(), [&](WorldSet s) {
    if (!(x.required(s) == y.required(s))) same = false;
  });
  return same;
}

// --- exhaustive enumeration -------------------------------------------------

struct EnumerationBoundExceeded : std::runtime_error {
  explicit EnumerationBoundExceeded(int n, int bound)
      : std::runtime_error("enumeration bound exceeded: " +
                           std::to_string(n) + " worlds > bound " +
                           std::to_string(bound)) {}
};

inline constexpr int kDefaultEnumerationBound = 8;

namespace detail {

struct TpoAccess {
  static Tpo scratch(WorldSet domain) {
    Tpo t;
    t.domain_ = domain;
    t.rank_.fill(Tpo::kNoRank);
    return t;
  }
  static void push_cell(Tpo& t, WorldSet cell) {
    const auto r = static_cast<std::uint8_t>(t.cells_.size());
    t.cells_.push_back(cell);
    cell.for_each([&](int w) { t.rank_[w] = r; });
  }
  static void pop_cell(Tpo& t) { t.cells_.pop_back(); }
};

template <class F>
void enumerate_partitions(WorldSet remaining, Tpo& scratch, F& fn) {
  if (remaining.empty()) {
    fn(static_cast<const Tpo&>(scratch));
    return;
  }
  for_each_nonempty_subset(remaining, [&](WorldSet cell) {
    TpoAccess::push_cell(scratch, cell);
    enumerate_partitions(remaining - cell, scratch, fn);
    TpoAccess::pop_cell(scratch);
  });
}

}  // namespace detail

// Visits every ordered partition of `domain` exactly once, in a canonical
// deterministic order (first cell ascending by bitmask, recursively). The
// visited Tpo is a reused scratch value: copy it if it must outlive the call.
template <class F>
void for_each_tpo(WorldSet domain, F&& fn,
                  int bound = kDefaultEnumerationBound) {
  if (domain.empty()) throw std::invalid_argument("for_each_tpo: empty domain");
  if (domain.size() > bound)
    throw EnumerationBoundExceeded(domain.size(), bound);
  Tpo scratch = detail::TpoAccess::scratch(domain);
  detail::enumerate_partitions(domain, scratch, fn);
}

inline std::vector<Tpo> all_tpos(WorldSet domain,
                                 int bound = kDefaultEnumerationBound) {
  std::vector<Tpo> out;
  for_each_tpo(domain, [&](const Tpo& t) { out.push_back(t); }, bound);
  return out;
}

// Ordered Bell number: a(n) = sum_k C(n,k) a(n-k).
inline std::uint64_t ordered_partition_count(int n) {
  std::vector<std::uint64_t> a(static_cast<std::size_t>(n) + 1, 0);
  a[0] = 1;
  for (int m = 1; m <= n; ++m) {
    std::uint64_t binom = 1;  // C(m, k), updated incrementally
    std::uint64_t total = 0;
    for (int k = 1; k <= m; ++k) {
      binom = binom * static_cast<std::uint64_t>(m - k + 1) /
              static_cast<std::uint64_t>(k);
      total += binom * a[static_cast<std::size_t>(m - k)];
    }
    a[static_cast<std::size_t>(m)] = total;
  }
  return a[static_cast<std::size_t>(n)];
}

}  // namespace condrev

#endif  // CONDREV_TPO_HPP
