#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "generators.hpp"
#include "mcalg/operators.hpp"
#include "mcalg/semantics.hpp"

using namespace mcalg;

namespace {

Model person(std::initializer_list<std::pair<const char*, const char*>> attrs) {
  std::vector<Constraint> cs{ClassExists{"Person"}};
  for (auto [a, t] : attrs) cs.push_back(AttrTyped{"Person", a, t});
  return Model(std::move(cs));
}

const Model pn = person({{"name", "String"}});
const Model pa = person({{"age", "Int"}});
const Model pi = person({{"name", "Int"}});
const Model account({ClassExists{"Account"}, AttrTyped{"Account", "id", "Int"}});

SemanticEngine engine_for(std::vector<Model> ms) { return SemanticEngine(build_universe(ms)); }

std::set<Constraint> as_set(const Model& m) { return {m.constraints().begin(), m.constraints().end()}; }

}  // namespace

TEST_CASE("registry") {
  for (OperatorId id : kAllOperators) {
    CHECK(parse_operator_id(operator_name(id)) == id);
    CHECK(lookup(id).name == operator_name(id));
  }
  CHECK(operator_name(OperatorId::union_) == "union");
  CHECK_FALSE(parse_operator_id("merge").has_value());

  // Custom operators go through the same interface.
  Operator left{"left", [](const Model& a, const Model&) { return a; }};
  CHECK(left(pn, pa) == pn);
}

TEST_CASE("union_merge") {
  Model u = union_merge(pn, pa);
  CHECK(u == Model({ClassExists{"Person"}, AttrTyped{"Person", "name", "String"},
                    AttrTyped{"Person", "age", "Int"}}));
  CHECK(union_merge(Model(), pn) == pn);
  CHECK(union_merge(pn, Model()) == pn);
  CHECK(union_merge(pn, pn) == pn);

  // Same constraints, different order.
  Model ab = union_merge(Model({ClassExists{"A"}}), Model({ClassExists{"B"}}));
  Model ba = union_merge(Model({ClassExists{"B"}}), Model({ClassExists{"A"}}));
  CHECK_FALSE(syntactic_eq(ab, ba));
  CHECK(engine_for({ab}).semantically_eq(ab, ba));
}

TEST_CASE("strict_merge") {
  Model s = strict_merge(pn, pa);
  CHECK(s == Model({ClassExists{"Person"}, AttrTyped{"Person", "name", "String"},
                    AttrTyped{"Person", "age", "Int"},
                    AttrComplete{"Person", {{"name", "String"}, {"age", "Int"}}}}));
  SemanticEngine e = engine_for({pn, pa});
  Denotation meet = e.denotation(pn).intersect(e.denotation(pa));
  CHECK(e.denotation(s).subset_of(meet));
  CHECK_FALSE(e.denotation(s) == meet);

  CHECK(strict_merge(pn, account) == union_merge(pn, account));
  Model conflict = strict_merge(pn, pi);
  CHECK(conflict == union_merge(pn, pi));
  CHECK(engine_for({pn, pi}).denotation(conflict).empty());
}

TEST_CASE("override_merge") {
  Model o = override_merge(pn, pi);
  CHECK(o == pi);
  SemanticEngine e = engine_for({pn, pi});
  CHECK(e.refines(o, pi));
  CHECK_FALSE(e.refines(o, pn));

  CHECK(override_merge(pn, pa) == union_merge(pn, pa));
  CHECK(override_merge(Model(), pn) == pn);
}

TEST_CASE("intersect_merge") {
  Model i = intersect_merge(pn, pa);
  CHECK(i == Model({ClassExists{"Person"}}));
  SemanticEngine e = engine_for({pn, pa});
  CHECK(e.denotation(pn).subset_of(e.denotation(i)));
  CHECK_FALSE(e.denotation(i) == e.denotation(pn));
  CHECK_FALSE(e.denotation(i) == e.denotation(pa));

  Model dup({ClassExists{"A"}, ClassExists{"A"}, AttrTyped{"A", "x", "T"}});
  CHECK(intersect_merge(dup, dup) == Model({ClassExists{"A"}, AttrTyped{"A", "x", "T"}}));
  CHECK(engine_for({dup}).semantically_eq(intersect_merge(dup, dup), dup));
  CHECK(intersect_merge(pn, account).empty());
}

TEST_CASE("paranoid_merge") {
  Model p = paranoid_merge(pn, pa);
  CHECK(p == Model({ClassExists{"Person"}, AttrTyped{"Person", "name", "String"},
                    AttrTyped{"Person", "age", "Int"},
                    AttrComplete{"Person", {{"name", "String"}}}}));
  SemanticEngine e = engine_for({pn, pa});
  CHECK(e.denotation(p).empty());
  CHECK_FALSE(e.denotation(pn).intersect(e.denotation(pa)).empty());

  CHECK(paranoid_merge(pn, account) == union_merge(pn, account));
  CHECK(e.is_consistent(paranoid_merge(pn, pn)));
}

TEST_CASE("operator invariants over generated models") {
  gen::ModelGen g(17);
  std::vector<Model> anchor{Model({ClassExists{"A"}, ClassExists{"B"}, AttrTyped{"A", "x", "Int"},
                                   AttrTyped{"A", "y", "Str"}})};
  SemanticEngine e(build_universe(anchor));
  for (int i = 0; i < 1000; ++i) {
    Model m1 = g.model(5);
    Model m2 = g.model(5);
    for (OperatorId id : kAllOperators) {
      const Operator& op = lookup(id);
      Model c = op(m1, m2);
      REQUIRE_MESSAGE(well_formed(c).ok, operator_name(id));
      REQUIRE(syntactic_eq(op(m1, m2), c));
    }
    Model u = union_merge(m1, m2);
    std::set<Constraint> both = as_set(m1);
    both.merge(as_set(m2));
    REQUIRE(as_set(u) == both);
    REQUIRE(e.refines(strict_merge(m1, m2), u));
    Model x = intersect_merge(m1, m2);
    REQUIRE(e.refines(m1, x));
    REQUIRE(e.refines(m2, x));
  }
}
