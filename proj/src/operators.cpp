#include "mcalg/operators.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace mcalg {

namespace {

bool contains(std::span<const Constraint> list, const Constraint& c) {
  return std::find(list.begin(), list.end(), c) != list.end();
}

std::vector<Constraint> to_vector(const Model& m) {
  return {m.constraints().begin(), m.constraints().end()};
}

void push_unique(std::vector<std::string>& v, const std::string& s) {
  if (std::find(v.begin(), v.end(), s) == v.end()) v.push_back(s);
}

// Classes named by both models, in first-mention order of m1.
std::vector<std::string> shared_classes(const Model& m1, const Model& m2) {
  std::vector<std::string> in1, out;
  for (const auto& c : m1.constraints()) push_unique(in1, constrained_class(c));
  for (const auto& cls : in1) {
    bool in2 = std::any_of(m2.constraints().begin(), m2.constraints().end(),
                           [&](const Constraint& c) { return constrained_class(c) == cls; });
    if (in2) out.push_back(cls);
  }
  return out;
}

// (attr, type) pairs the model states for `cls`, deduplicated, in order.
AttrMap attribute_pairs(const Model& m, const std::string& cls) {
  AttrMap pairs;
  auto add = [&](const std::string& a, const std::string& t) {
    std::pair<std::string, std::string> p{a, t};
    if (std::find(pairs.begin(), pairs.end(), p) == pairs.end()) pairs.push_back(std::move(p));
  };
  for (const auto& c : m.constraints()) {
    if (const auto* at = std::get_if<AttrTyped>(&c); at && at->cls == cls) {
      add(at->attr, at->type);
    } else if (const auto* ac = std::get_if<AttrComplete>(&c); ac && ac->cls == cls) {
      for (const auto& [a, t] : ac->attrs) add(a, t);
    }
  }
  return pairs;
}

bool has_conflict(const AttrMap& pairs) {
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (std::size_t j = i + 1; j < pairs.size(); ++j) {
      if (pairs[i].first == pairs[j].first) return true;
    }
  }
  return false;
}

// First type per attribute, so the result is a valid AttrComplete map.
AttrMap first_type_per_attr(const AttrMap& pairs) {
  AttrMap out;
  for (const auto& p : pairs) {
    bool seen = std::any_of(out.begin(), out.end(),
                            [&](const auto& q) { return q.first == p.first; });
    if (!seen) out.push_back(p);
  }
  return out;
}

void append_unique(std::vector<Constraint>& out, Constraint c) {
  if (!contains(out, c)) out.push_back(std::move(c));
}

}  // namespace

Model union_merge(const Model& m1, const Model& m2) {
  std::vector<Constraint> out = to_vector(m1);
  for (const auto& c : m2.constraints()) {
    if (!contains(m1.constraints(), c)) out.push_back(c);
  }
  return Model(std::move(out));
}

Model strict_merge(const Model& m1, const Model& m2) {
  std::vector<Constraint> out = to_vector(union_merge(m1, m2));
  for (const auto& cls : shared_classes(m1, m2)) {
    AttrMap pairs = attribute_pairs(m1, cls);
    for (auto& p : attribute_pairs(m2, cls)) {
      if (std::find(pairs.begin(), pairs.end(), p) == pairs.end()) pairs.push_back(std::move(p));
    }
    if (has_conflict(pairs)) continue;
    append_unique(out, AttrComplete{cls, std::move(pairs)});
  }
  return Model(std::move(out));
}

Model override_merge(const Model& m1, const Model& m2) {
  auto retyped = [&](const AttrTyped& at) {
    return std::any_of(m2.constraints().begin(), m2.constraints().end(),
                       [&](const Constraint& c) {
                         const auto* other = std::get_if<AttrTyped>(&c);
                         return other && other->cls == at.cls && other->attr == at.attr &&
                                other->type != at.type;
                       });
  };
  std::vector<Constraint> residue;
  for (const auto& c : m1.constraints()) {
    if (const auto* at = std::get_if<AttrTyped>(&c); at && retyped(*at)) continue;
    residue.push_back(c);
  }
  return union_merge(Model(std::move(residue)), m2);
}

Model intersect_merge(const Model& m1, const Model& m2) {
  std::vector<Constraint> out;
  for (const auto& c : m1.constraints()) {
    if (contains(m2.constraints(), c)) append_unique(out, c);
  }
  return Model(std::move(out));
}

Model paranoid_merge(const Model& m1, const Model& m2) {
  std::vector<Constraint> out = to_vector(union_merge(m1, m2));
  for (const auto& cls : shared_classes(m1, m2)) {
    append_unique(out, AttrComplete{cls, first_type_per_attr(attribute_pairs(m1, cls))});
  }
  return Model(std::move(out));
}

std::string_view operator_name(OperatorId id) {
  switch (id) {
    case OperatorId::union_: return "union";
    case OperatorId::strict: return "strict";
    case OperatorId::override_: return "override";
    case OperatorId::intersect: return "intersect";
    case OperatorId::paranoid: return "paranoid";
  }
  return "?";
}

std::optional<OperatorId> parse_operator_id(std::string_view name) {
  for (auto id : kAllOperators) {
    if (operator_name(id) == name) return id;
  }
  return std::nullopt;
}

const Operator& lookup(OperatorId id) {
  static const std::array<Operator, 5> registry = {
      Operator{"union", union_merge},       Operator{"strict", strict_merge},
      Operator{"override", override_merge}, Operator{"intersect", intersect_merge},
      Operator{"paranoid", paranoid_merge},
  };
  return registry[static_cast<std::size_t>(id)];
}

}  // namespace mcalg
