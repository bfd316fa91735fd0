// condrev/conditional.hpp — revision by Ramsey Test conditionals.
//
// The main construction extends any base revision operator to conditional
// inputs in two steps: revise by the material conditional, then
// lexicographically promote the part of the down-set of min(≼, A∧B) that
// lies inside ⟦A⊃B⟧. The full trace of that pipeline is returned, since
// every property of interest relates its stages.
//
// Also here: Hansson-style revision (intersection of the Kemeny-closest
// conditional-accepting TPOs) and the two-stage ranked contraction/expansion
// operators it is contrasted with. The latter are implemented clause by
// clause from their printed definitions; when the clauses conflict or fail
// to define a total preorder, the operation reports a definitional failure
// instead of repairing it.

#ifndef CONDREV_CONDITIONAL_HPP
#define CONDREV_CONDITIONAL_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "condrev/revision.hpp"
#include "condrev/tpo.hpp"

namespace condrev {

inline WorldSet material_models(WorldSet domain, WorldSet a, WorldSet b) {
  return (domain - a) | (b & domain);
}

inline void require_consistent_conditional(const Tpo& prior, WorldSet a,
                                           WorldSet b) {
  if (((a & b) & prior.domain()).empty())
    throw std::invalid_argument("inconsistent conditional");
}

struct CircledastTrace {
  Tpo prior;
  WorldSet a, b;       // models of antecedent and consequent
  WorldSet material;   // ⟦A⊃B⟧
  Tpo step1;           // prior revised by the material conditional
  WorldSet promote;    // D(step1, A∧B) ∩ ⟦A⊃B⟧
  Tpo result;          // step1 lexicographically revised by promote
};

inline CircledastTrace circledast(Op op, const Tpo& prior, WorldSet a,
                                  WorldSet b) {
  require_consistent_conditional(prior, a, b);
  const WorldSet dom = prior.domain();
  const WorldSet mat = material_models(dom, a, b);
  Tpo step1 = revise(op, prior, mat);
  const WorldSet promote = down_set(step1, a & b & dom) & mat;
  Tpo result = lex_revise_by_set(step1, promote);
  return {prior, a & dom, b & dom, mat, std::move(step1), promote,
          std::move(result)};
}

// The two-cell order [promote, rest]: x ≼ y iff x ∈ promote or y ∉ promote.
// The trace result equals lex_combination(d_relation, step1).
inline Tpo d_relation(const Tpo& step1, WorldSet a, WorldSet b) {
  require_consistent_conditional(step1, a, b);
  const WorldSet dom = step1.domain();
  const WorldSet mat = material_models(dom, a, b);
  const WorldSet promote = down_set(step1, a & b & dom) & mat;
  std::vector<WorldSet> cells;
  cells.push_back(promote);
  const WorldSet rest = dom - promote;
  if (!rest.empty()) cells.push_back(rest);
  return Tpo(dom, std::move(cells));
}

// --- distance-minimizing revision over all states ---------------------------

struct HanssonResult {
  std::vector<Tpo> minimizers;  // in canonical enumeration order
  ConditionalBeliefSet intersection;
};

// All TPOs accepting A => B at minimal Kemeny distance to the prior, plus
// the intersection of their conditional belief sets.
inline HanssonResult hansson_revise(const Tpo& prior, WorldSet a, WorldSet b,
                                    int bound = kDefaultEnumerationBound) {
  require_consistent_conditional(prior, a, b);
  const WorldSet dom = prior.domain();
  const WorldSet an = a & dom, bn = b & dom;
  std::vector<Tpo> best;
  int best_d = -1;
  for_each_tpo(
      dom,
      [&](const Tpo& t) {
        if (!accepts_conditional(t, an, bn)) return;
        const int d = kemeny_distance(t, prior);
        if (best_d < 0 || d < best_d) {
          best_d = d;
          best.clear();
          best.push_back(t);
        } else if (d == best_d) {
          best.push_back(t);
        }
      },
      bound);
  ConditionalBeliefSet intersection(best);
  return {std::move(best), std::move(intersection)};
}

// --- ranked contraction / expansion / revision -------------------------------

struct BgResult {
  std::optional<Tpo> tpo;
  std::string error;

  bool ok() const { return tpo.has_value(); }
  const Tpo& value() const {
    if (!tpo) throw std::logic_error("BgResult: " + error);
    return *tpo;
  }
};

namespace detail {

// Rebuilds an ordered partition from an explicit ≼ matrix (row x = the set
// of y with x ≼ y) by repeatedly extracting minimal elements, then checks
// that the partition reproduces the matrix exactly. Any mismatch means the
// clause-built relation was not a total preorder.
inline BgResult tpo_from_relation(WorldSet domain,
                                  const std::vector<WorldSet>& leq_row,
                                  const char* who) {
  std::vector<WorldSet> cells;
  WorldSet remaining = domain;
  while (!remaining.empty()) {
    WorldSet level;
    remaining.for_each([&](int x) {
      bool minimal = true;
      remaining.for_each([&](int y) {
        if (!leq_row[x].contains(y)) minimal = false;
      });
      if (minimal) level = level.with(x);
    });
    if (level.empty())
      return {std::nullopt,
              std::string(who) + ": definitional failure (relation has no "
                                 "minimal element among remaining worlds)"};
    cells.push_back(level);
    remaining = remaining - level;
  }
  Tpo candidate(domain, std::move(cells));
  bool faithful = true;
  domain.for_each([&](int x) {
    domain.for_each([&](int y) {
      if (candidate.leq(x, y) != leq_row[x].contains(y)) faithful = false;
    });
  });
  if (!faithful)
    return {std::nullopt,
            std::string(who) +
                ": definitional failure (relation is not a total preorder)"};
  return {std::move(candidate), ""};
}

struct PairVote {
  bool defined = false;
  bool value = false;
  bool conflict = false;

  void cast(bool v) {
    if (!defined) {
      defined = true;
      value = v;
    } else if (value != v) {
      conflict = true;
    }
  }
};

}  // namespace detail

// Contraction by A => !B, clause by clause:
//   (1) pairs outside min(≼, A∧B) keep their prior order;
//   (2) for x in that minimum, x ≼' y iff z ≼ y for some z in min(≼, A),
//       and y ≼' x iff y ≼ z for some such z.
// Clauses are applied to distinct pairs only; where several clauses apply
// and disagree, that is reported as a definitional failure.
inline BgResult bg_contract(const Tpo& prior, WorldSet a, WorldSet b) {
  const WorldSet dom = prior.domain();
  const WorldSet an = a & dom;
  const WorldSet ab = an & b;
  if (an.empty() || ab.empty())
    return {std::nullopt, "bg_contract: empty required sets"};
  const WorldSet m = min_worlds(prior, ab);
  const int rstar = prior.rank(min_worlds(prior, an).lowest());

  std::vector<WorldSet> leq_row(kMaxWorlds);
  bool conflict = false;
  int cx = -1, cy = -1;
  dom.for_each([&](int x) {
    leq_row[x] = leq_row[x].with(x);
    dom.for_each([&](int y) {
      if (x == y) return;
      detail::PairVote vote;
      if (m.contains(x)) vote.cast(prior.rank(y) >= rstar);       // (2a)
      if (m.contains(y)) vote.cast(prior.rank(x) <= rstar);       // (2b)
      if (!m.contains(x) && !m.contains(y)) vote.cast(prior.leq(x, y));
      if (vote.conflict && !conflict) {
        conflict = true;
        cx = x;
        cy = y;
      }
      if (vote.defined && vote.value && !vote.conflict)
        leq_row[x] = leq_row[x].with(y);
    });
  });
  if (conflict)
    return {std::nullopt,
            "bg_contract: definitional failure (clauses conflict on pair " +
                std::to_string(cx) + "," + std::to_string(cy) + ")"};
  return detail::tpo_from_relation(dom, leq_row, "bg_contract");
}

// Expansion by A => B:
//   (1) rows of worlds outside min(≼, A∧¬B) keep the prior relation;
//   (2) members of that minimum tie with each other, and sit below y iff
//       they did before and no minimal A∧B-world lies weakly above y.
// Empty ⟦A∧¬B⟧ makes the expansion the identity.
inline BgResult bg_expand(const Tpo& prior, WorldSet a, WorldSet b) {
  const WorldSet dom = prior.domain();
  const WorldSet anb = (a & dom) - b;
  if (anb.empty()) return {prior, ""};
  const WorldSet ab = a & b & dom;
  const WorldSet n = min_worlds(prior, anb);
  const std::optional<WorldSet> min_ab =
      ab.empty() ? std::nullopt : std::optional<WorldSet>(min_worlds(prior, ab));

  std::vector<WorldSet> leq_row(kMaxWorlds);
  dom.for_each([&](int x) {
    leq_row[x] = leq_row[x].with(x);
    dom.for_each([&](int y) {
      if (x == y) return;
      bool holds;
      if (!n.contains(x)) {
        holds = prior.leq(x, y);                                   // (1)
      } else if (n.contains(y)) {
        holds = true;                                              // (2a)
      } else {
        bool blocked = false;                                      // (2b)
        if (min_ab)
          min_ab->for_each([&](int z) {
            if (prior.leq(y, z)) blocked = true;
          });
        holds = prior.leq(x, y) && !blocked;
      }
      if (holds) leq_row[x] = leq_row[x].with(y);
    });
  });
  return detail::tpo_from_relation(dom, leq_row, "bg_expand");
}

// Contraction by A => !B followed by expansion by A => B.
inline BgResult bg_revise(const Tpo& prior, WorldSet a, WorldSet b) {
  require_consistent_conditional(prior, a, b);
  BgResult contracted = bg_contract(prior, a, b);
  if (!contracted.ok()) return contracted;
  return bg_expand(*contracted.tpo, a, b);
}

}  // namespace condrev

#endif  // CONDREV_CONDITIONAL_HPP
