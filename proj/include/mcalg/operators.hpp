#ifndef MCALG_OPERATORS_HPP
#define MCALG_OPERATORS_HPP

#include <array>
#include <functional>
#include <optional>
#include <string_view>

#include "mcalg/syntax.hpp"

namespace mcalg {

/// m1 followed by the constraints of m2 not already present in m1.
Model union_merge(const Model& m1, const Model& m2);

/// union_merge plus, for every class mentioned by both inputs whose combined
/// attribute pairs are conflict-free, a completeness constraint over them.
Model strict_merge(const Model& m1, const Model& m2);

/// m2 wins attribute-type conflicts: AttrTyped entries of m1 retyped by m2
/// are dropped before the union.
Model override_merge(const Model& m1, const Model& m2);

/// Constraints of m1 that also occur in m2, first occurrence kept.
Model intersect_merge(const Model& m1, const Model& m2);

/// union_merge plus, for every class mentioned by both inputs, a
/// completeness constraint built from m1's attributes alone.
Model paranoid_merge(const Model& m1, const Model& m2);

enum class OperatorId { union_, strict, override_, intersect, paranoid };

inline constexpr std::array<OperatorId, 5> kAllOperators = {
    OperatorId::union_, OperatorId::strict, OperatorId::override_,
    OperatorId::intersect, OperatorId::paranoid};

using ComposeFn = std::function<Model(const Model&, const Model&)>;

/// A named composition operator. Held by value so that operators other
/// than the built-in ones can be passed to the checker.
struct Operator {
  std::string_view name;
  ComposeFn compose;

  Model operator()(const Model& a, const Model& b) const { return compose(a, b); }
};

std::string_view operator_name(OperatorId id);
std::optional<OperatorId> parse_operator_id(std::string_view name);
const Operator& lookup(OperatorId id);

}  // namespace mcalg

#endif  // MCALG_OPERATORS_HPP
