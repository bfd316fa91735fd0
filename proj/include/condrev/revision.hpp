// condrev/revision.hpp — the three elementary revision operators.
//
// Each operator maps a TPO over some domain and a nonempty subset of that
// domain to a TPO over the same domain; the minimal input worlds always end
// up as the new minimum (AGM at the semantic level). Operators see the
// input only as a world set, so syntax-insensitivity holds by construction.
// They work on restrictions just as well as on full world sets.

#ifndef CONDREV_REVISION_HPP
#define CONDREV_REVISION_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "condrev/tpo.hpp"

namespace condrev {

enum class Op { natural, restrained, lexicographic };

inline std::string_view to_string(Op op) {
  switch (op) {
    case Op::natural: return "natural";
    case Op::restrained: return "restrained";
    case Op::lexicographic: return "lexicographic";
  }
  return "?";
}

inline std::optional<Op> parse_op(std::string_view name) {
  if (name == "natural") return Op::natural;
  if (name == "restrained") return Op::restrained;
  if (name == "lexicographic") return Op::lexicographic;
  return std::nullopt;
}

inline WorldSet checked_input(const Tpo& t, WorldSet s) {
  WorldSet inside = s & t.domain();
  if (inside.empty())
    throw std::invalid_argument("revision by an inconsistent input");
  return inside;
}

// min(≼, s) becomes the unique first cell; everything else keeps its
// prior mutual order.
inline Tpo natural_revise(const Tpo& t, WorldSet s) {
  const WorldSet m = min_worlds(t, checked_input(t, s));
  std::vector<WorldSet> cells;
  cells.push_back(m);
  for (int i = 0; i < t.cell_count(); ++i) {
    WorldSet c = t.cell(i) - m;
    if (!c.empty()) cells.push_back(c);
  }
  return Tpo(t.domain(), std::move(cells));
}

// min(≼, s) first; prior ties among the rest are broken in favour of
// s-members, prior strict order is kept.
inline Tpo restrained_revise(const Tpo& t, WorldSet s) {
  const WorldSet inside = checked_input(t, s);
  const WorldSet m = min_worlds(t, inside);
  std::vector<WorldSet> cells;
  cells.push_back(m);
  for (int i = 0; i < t.cell_count(); ++i) {
    WorldSet rest = t.cell(i) - m;
    WorldSet in_s = rest & inside;
    WorldSet out_s = rest - inside;
    if (!in_s.empty()) cells.push_back(in_s);
    if (!out_s.empty()) cells.push_back(out_s);
  }
  return Tpo(t.domain(), std::move(cells));
}

// Every s-world below every non-s-world, both blocks keeping prior order.
inline Tpo lexicographic_revise(const Tpo& t, WorldSet s) {
  return lex_revise_by_set(t, checked_input(t, s));
}

inline Tpo revise(Op op, const Tpo& t, WorldSet s) {
  switch (op) {
    case Op::natural: return natural_revise(t, s);
    case Op::restrained: return restrained_revise(t, s);
    case Op::lexicographic: return lexicographic_revise(t, s);
  }
  throw std::logic_error("revise: bad operator");
}

inline const Op kAllOps[] = {Op::natural, Op::restrained, Op::lexicographic};

}  // namespace condrev

#endif  // CONDREV_REVISION_HPP
