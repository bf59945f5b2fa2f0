#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "generators.hpp"
#include "mcalg/operators.hpp"
#include "mcalg/syntax.hpp"

using namespace mcalg;

namespace {

Model parsed(std::string_view text) {
  auto r = parse(text);
  REQUIRE_MESSAGE(r.ok(), (r.diagnostics.empty() ? "" : format_diagnostic(r.diagnostics[0])));
  return *r.model;
}

Model person_name() { return Model({ClassExists{"Person"}, AttrTyped{"Person", "name", "String"}}); }

}  // namespace

TEST_CASE("parse expands declarations in written order") {
  CHECK(parsed("class Person { name: String }") == person_name());
  CHECK(parsed("").empty());
  CHECK(parsed("  // only a comment\n").empty());

  Model point = parsed("complete class Point { x: Int, y: Int }");
  CHECK(point == Model({ClassExists{"Point"}, AttrTyped{"Point", "x", "Int"},
                        AttrTyped{"Point", "y", "Int"},
                        AttrComplete{"Point", {{"x", "Int"}, {"y", "Int"}}}}));

  Model two = parsed("class A { }\n// comment\nclass B { b: T } // trailing\n");
  CHECK(two == Model({ClassExists{"A"}, ClassExists{"B"}, AttrTyped{"B", "b", "T"}}));
}

TEST_CASE("keywords are contextual") {
  Model m = parsed("class complete { class: complete }");
  CHECK(m == Model({ClassExists{"complete"}, AttrTyped{"complete", "class", "complete"}}));
  CHECK(render(m) == "class complete { class: complete }\n");
}

TEST_CASE("parse reports located diagnostics") {
  SUBCASE("duplicate attribute in one declaration") {
    auto r = parse("class P { n: String, n: Int }");
    REQUIRE_FALSE(r.ok());
    REQUIRE(r.diagnostics.size() == 1);
    CHECK(format_diagnostic(r.diagnostics[0]) == "error: duplicate attribute 'n' in class P at 1:22");
  }
  SUBCASE("missing closing brace") {
    auto r = parse("class P { n: String\n");
    REQUIRE_FALSE(r.ok());
    CHECK(format_diagnostic(r.diagnostics[0]) == "error: expected ',' or '}', found end of input at 2:1");
  }
  SUBCASE("bad identifier and bad character") {
    auto r = parse("class _P { }\nclass Q { a: 9x }\nclass R { # }");
    REQUIRE_FALSE(r.ok());
    REQUIRE(r.diagnostics.size() >= 3);
    CHECK(format_diagnostic(r.diagnostics[0]) == "error: invalid identifier '_P' at 1:7");
    CHECK(format_diagnostic(r.diagnostics[1]) == "error: invalid identifier '9x' at 2:14");
    CHECK(format_diagnostic(r.diagnostics[2]) == "error: unexpected character '#' at 3:11");
  }
  SUBCASE("recovery continues after a broken declaration") {
    auto r = parse("class A { x Int }\nclass B { y: }\nclass C { }");
    REQUIRE_FALSE(r.ok());
    CHECK(r.diagnostics.size() == 2);
    CHECK(r.diagnostics[1].location->line == 2);
  }
  SUBCASE("stray tokens") {
    auto r = parse("klass A { }");
    REQUIRE_FALSE(r.ok());
    CHECK(r.diagnostics[0].message == "expected 'class' or 'complete', found 'klass'");
  }
}

TEST_CASE("render produces canonical text") {
  CHECK(render(Model({ClassExists{"A"}})) == "class A { }\n");
  CHECK(render(person_name()) == "class Person { name: String }\n");
  CHECK(render(Model()) == "");
  CHECK(render(parsed("complete class Point { x: Int, y: Int }")) ==
        "complete class Point { x: Int, y: Int }\n");
}

TEST_CASE("normalize inserts implied constraints") {
  // A bare AttrTyped gets its ClassExists.
  Model bare({AttrTyped{"P", "n", "S"}});
  CHECK(normalize(bare) == Model({ClassExists{"P"}, AttrTyped{"P", "n", "S"}}));

  // A contradiction cannot sit in one declaration; the second attribute opens a new one.
  Model contra({ClassExists{"P"}, AttrTyped{"P", "n", "S"}, AttrTyped{"P", "n", "I"}});
  CHECK(render(contra) == "class P { n: S }\nclass P { n: I }\n");

  // A detached completeness constraint renders as its own complete declaration.
  Model detached({ClassExists{"P"}, ClassExists{"Q"}, AttrComplete{"P", {{"a", "T"}}}});
  CHECK(render(detached) == "class P { }\nclass Q { }\ncomplete class P { a: T }\n");
  CHECK(parsed(render(detached)) == normalize(detached));
}

TEST_CASE("round trip: parse(render(m)) == normalize(m)") {
  gen::ModelGen g(7);
  for (int i = 0; i < 2000; ++i) {
    Model m = g.model(8);
    REQUIRE(well_formed(m).ok);
    Model back = parsed(render(m));
    REQUIRE_MESSAGE(back == normalize(m), render(m));
    CHECK(normalize(back) == back);
    // Parsing is deterministic.
    CHECK(parsed(render(m)) == back);
  }
}

TEST_CASE("well_formed is lexical and structural") {
  CHECK(well_formed(Model({AttrTyped{"P", "n", "String"}, AttrTyped{"P", "n", "Int"}})).ok);
  CHECK(well_formed(Model()).ok);

  auto dup = well_formed(Model({AttrComplete{"P", {{"n", "String"}, {"n", "Int"}}}}));
  CHECK_FALSE(dup.ok);
  REQUIRE(dup.diagnostics.size() == 1);
  CHECK(dup.diagnostics[0].message == "constraint 1: duplicate attribute 'n' in complete class P");

  auto names = well_formed(Model({ClassExists{"1P"}, AttrTyped{"P", "", "T"}}));
  CHECK_FALSE(names.ok);
  CHECK(names.diagnostics.size() == 2);
  CHECK_THROWS_AS(render(Model({ClassExists{"_x"}})), std::invalid_argument);
}

TEST_CASE("syntactic equality is order sensitive") {
  Model ab({ClassExists{"A"}, ClassExists{"B"}});
  Model ba({ClassExists{"B"}, ClassExists{"A"}});
  CHECK_FALSE(syntactic_eq(ab, ba));
  CHECK(syntactic_eq(ab, ab));
  CHECK(canonical_form(ab) == canonical_form(ba));

  Model a({ClassExists{"A"}});
  Model b({ClassExists{"B"}, AttrTyped{"B", "x", "T"}});
  CHECK_FALSE(syntactic_eq(union_merge(a, b), union_merge(b, a)));
}

TEST_CASE("syntactic equality is an equivalence relation") {
  gen::ModelGen g(11, gen::Pools{{"A"}, {"x"}, {"T"}});
  std::vector<Model> ms;
  for (int i = 0; i < 60; ++i) ms.push_back(g.model(3));
  for (const auto& x : ms) {
    CHECK(syntactic_eq(x, x));
    for (const auto& y : ms) {
      CHECK(syntactic_eq(x, y) == syntactic_eq(y, x));
      if (!syntactic_eq(x, y)) continue;
      for (const auto& z : ms) {
        if (syntactic_eq(y, z)) CHECK(syntactic_eq(x, z));
      }
    }
  }
}
