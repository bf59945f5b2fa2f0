#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "mcalg/algebra.hpp"
#include "mcalg/report.hpp"
#include "oracle.hpp"
#include "revalidate.hpp"

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

// A checker over its own corpus and universe.
struct Fixture {
  std::vector<Model> models;
  SemanticEngine engine;
  CheckContext ctx;

  Fixture(OperatorId id, std::vector<Model> ms, CheckOptions opts = {})
      : models(std::move(ms)), engine(build_universe(models)), ctx(lookup(id), models, engine, opts) {}
};

bool has_witness(const Verdict& v, std::vector<std::size_t> tuple) {
  return std::any_of(v.witnesses.begin(), v.witnesses.end(),
                     [&](const Witness& w) { return w.models == tuple; });
}

CorpusBounds small_bounds() {
  CorpusBounds b;
  b.class_pool = {"P", "Q"};
  b.attr_pool = {"n"};
  b.type_pool = {"S", "I"};
  b.max_classes = 2;
  b.max_attrs_per_class = 1;
  b.inject_variants = true;
  b.exhaustive_limit = 100;
  return b;
}

}  // namespace

TEST_CASE("pairwise checks on the Person models") {
  std::vector<Model> ms{Model(), pn, pa, pi};
  SUBCASE("union is fully property preserving") {
    Fixture f(OperatorId::union_, ms);
    auto pp = check_pp(f.ctx);
    REQUIRE(pp.size() == 3);
    for (const auto& v : pp) CHECK(v.holds);
    CHECK(check_fpp(f.ctx).holds);
    CHECK(check_cp(f.ctx).holds);
    auto com = check_commutativity(f.ctx);
    CHECK_FALSE(com[0].holds);
    CHECK(com[1].holds);
    CHECK(has_witness(com[0], {1, 2}));
  }
  SUBCASE("strict adds information") {
    Fixture f(OperatorId::strict, ms);
    CHECK(check_pp(f.ctx)[2].holds);
    Verdict fpp = check_fpp(f.ctx);
    CHECK_FALSE(fpp.holds);
    CHECK(has_witness(fpp, {1, 2}));
    CHECK(fpp.witnesses.front().relation == "sm(m1 ⊗ m2) = sm(m1) ∩ sm(m2)");
  }
  SUBCASE("override is only right preserving") {
    Fixture f(OperatorId::override_, ms);
    auto pp = check_pp(f.ctx);
    CHECK(pp[0].property == "PP_l");
    CHECK_FALSE(pp[0].holds);
    CHECK(has_witness(pp[0], {1, 3}));
    CHECK(pp[1].holds);
    CHECK_FALSE(check_fpp(f.ctx).holds);
    CHECK(has_witness(check_commutativity(f.ctx)[1], {1, 3}));
  }
  SUBCASE("intersect loses information") {
    Fixture f(OperatorId::intersect, ms);
    auto pp = check_pp(f.ctx);
    CHECK_FALSE(pp[0].holds);
    CHECK_FALSE(pp[1].holds);
    CHECK_FALSE(pp[2].holds);
    CHECK(has_witness(pp[2], {1, 2}));
    CHECK(check_cp(f.ctx).holds);
  }
  SUBCASE("paranoid breaks consistency") {
    Fixture f(OperatorId::paranoid, ms);
    Verdict cp = check_cp(f.ctx);
    CHECK_FALSE(cp.holds);
    CHECK(has_witness(cp, {1, 2}));
    CHECK(cp.witnesses.size() <= kMaxWitnesses);
  }
}

TEST_CASE("a corpus of one empty model") {
  for (OperatorId id : kAllOperators) {
    Fixture f(id, {Model()});
    for (const auto& v : check_pp(f.ctx)) CHECK(v.holds);
    CHECK(check_commutativity(f.ctx)[0].holds);
    OperatorReport r = classify(f.ctx);
    CHECK(r.implication_audit.empty());
    CHECK(r.partition.classes.size() == 1);
    CHECK(r.congruence.holds);
  }
  Corpus c;
  c.models = {Model()};
  c.labels = {"empty"};
  for (OperatorId id : kAllOperators) CHECK(stability_check(lookup(id), c).verdict.holds);
}

TEST_CASE("associativity sampling") {
  CheckOptions o;
  auto all = associativity_triples(3, o);
  CHECK(all.size() == 27);
  CHECK(all.front() == std::array<std::size_t, 3>{0, 0, 0});
  auto sampled = associativity_triples(30, o);
  CHECK(sampled.size() == 10000);
  CHECK(sampled == associativity_triples(30, o));
  o.seed = 43;
  CHECK(sampled != associativity_triples(30, o));

  Fixture f(OperatorId::union_, {Model(), pn, pa});
  auto ass = check_associativity(f.ctx);
  CHECK(ass[0].holds);
  CHECK(ass[1].holds);
  CHECK(ass[0].sampling.exhaustive);
  CHECK(ass[0].sampling.checked == 27);
}

TEST_CASE("special elements for union") {
  Model contra({AttrTyped{"Person", "name", "String"}, AttrTyped{"Person", "name", "Int"}});
  Fixture f(OperatorId::union_, {Model(), pn, pa, contra});
  ElementReport empty = check_element(f.ctx, f.models[0], 0);
  CHECK(empty.row("Rn").holds);
  CHECK(empty.row("Ln").holds);
  CHECK(empty.row("N").holds);
  CHECK(empty.row("N_comp").holds);
  CHECK_FALSE(empty.row("Ra_comp").holds);

  ElementReport c = check_element(f.ctx, contra, 3);
  CHECK(c.row("Ra_comp").holds);
  CHECK(c.row("La_comp").holds);
  CHECK(c.row("A_comp").holds);
  CHECK_FALSE(c.row("Ra").holds);
  CHECK(c.verdicts.size() == std::size(kTable2Rows));
  for (std::size_t i = 0; i < f.models.size(); ++i) {
    CHECK(check_element(f.ctx, f.models[i], i).row("I_comp").holds);
  }
}

TEST_CASE("symmetric Li rows are opt-in") {
  CheckOptions o;
  o.symmetric_li = true;
  Fixture f(OperatorId::override_, {Model(), pn, pi}, o);
  ElementReport r = check_element(f.ctx, pn, 1);
  CHECK(r.verdicts.size() == std::size(kTable2Rows) + 2);
  CHECK(r.row("Li_sym").property == "Li_sym");
  Fixture plain(OperatorId::override_, {Model(), pn, pi});
  CHECK_THROWS(check_element(plain.ctx, pn, 1).row("Li_sym"));
}

TEST_CASE("quotient and congruence") {
  Model ab({ClassExists{"A"}, ClassExists{"B"}});
  Model ba({ClassExists{"B"}, ClassExists{"A"}});
  Model aab({ClassExists{"A"}, ClassExists{"A"}, ClassExists{"B"}});
  Model a({ClassExists{"A"}});
  std::vector<Model> ms{ab, a, ba, aab};
  SemanticEngine e(build_universe(ms));
  Partition p = quotient(ms, e);
  REQUIRE(p.classes.size() == 2);
  CHECK(p.classes[0] == std::vector<std::size_t>{0, 2, 3});
  CHECK(p.classes[1] == std::vector<std::size_t>{1});
  CHECK(p.class_of(3) == 0);
  CHECK(p.representative(1) == 1);

  std::vector<Model> distinct{Model(), pn, pa};
  SemanticEngine e2(build_universe(distinct));
  CHECK(quotient(distinct, e2).classes.size() == 3);

  Fixture u(OperatorId::union_, ms);
  CHECK(congruence_check(u.ctx, p).holds);
}

TEST_CASE("corpus generation") {
  CorpusBounds b;
  b.class_pool = {"P"};
  b.attr_pool = {"n"};
  b.type_pool = {"String"};
  b.include_complete = false;
  Corpus c = generate_corpus(b, 1);
  REQUIRE(c.size() == 3);
  CHECK(c.models[0].empty());
  CHECK(c.models[1] == Model({ClassExists{"P"}}));
  CHECK(c.models[2] == Model({ClassExists{"P"}, AttrTyped{"P", "n", "String"}}));
  CHECK(c.labels.size() == 3);

  Corpus d1 = generate_corpus(default_bounds(), 42);
  Corpus d2 = generate_corpus(default_bounds(), 42);
  CHECK(d1.models == d2.models);
  CHECK(d1.labels == d2.labels);
  CHECK(d1.size() >= 30);
  CHECK(d1.models[0].empty());
  CHECK(std::find(d1.labels.begin(), d1.labels.end(), "contradiction") != d1.labels.end());
  for (const auto& m : d1.models) CHECK(well_formed(m).ok);

  b.exhaustive_limit = 0;
  b.sample_size = 1;
  Corpus s = generate_corpus(b, 3);
  CHECK(s.sampled);
  CHECK(s.models[0].empty());
}

TEST_CASE("checker agrees with the oracle on every row") {
  Corpus corpus = generate_corpus(small_bounds(), 7);
  REQUIRE(corpus.size() >= 10);
  std::vector<Model> ms = corpus.models;
  SemanticEngine engine(build_universe(ms));
  oracle::Semantics sem(oracle::auto_universe(ms));
  auto triples = associativity_triples(ms.size(), CheckOptions{});

  for (OperatorId id : kAllOperators) {
    CAPTURE(operator_name(id));
    const Operator& op = lookup(id);
    oracle::Op fn = op.compose;
    CheckContext ctx(op, ms, engine);
    OperatorReport r = classify(ctx);
    CHECK(r.implication_audit.empty());

    auto t1 = oracle::table1(sem, fn, ms, triples);
    REQUIRE(r.table1.size() == std::size(kTable1Rows));
    for (const auto& v : r.table1) {
      CAPTURE(v.property);
      CHECK(v.holds == t1.at(v.property));
      CHECK(v.holds == v.witnesses.empty());
      for (const auto& w : v.witnesses) CHECK(oracle::refutes_table1(sem, fn, ms, v.property, w));
    }
    REQUIRE(r.table2.size() == ms.size());
    for (const auto& el : r.table2) {
      auto t2 = oracle::table2(sem, fn, ms[el.model], ms);
      for (const auto& v : el.verdicts) {
        CAPTURE(v.property);
        CHECK(v.holds == t2.at(v.property));
        for (const auto& w : v.witnesses) {
          CHECK(oracle::refutes_table2(sem, fn, ms, ms[el.model], v.property, w));
        }
      }
    }
    auto cls = oracle::classes(sem, ms);
    for (std::size_t i = 0; i < ms.size(); ++i) CHECK(r.partition.representative(r.partition.class_of(i)) == cls[i]);
    CHECK(r.congruence.holds == oracle::congruent(sem, fn, ms));
    for (const auto& w : r.congruence.witnesses) CHECK(oracle::refutes_congruence(sem, fn, ms, w));

    CHECK(r.fpp_laws.holds());
    CHECK(r.fpp_congruence.holds());
  }
}

TEST_CASE("audit catches tampered verdicts") {
  Fixture f(OperatorId::union_, {Model(), pn, pa});
  OperatorReport r = classify(f.ctx);
  REQUIRE(r.implication_audit.empty());

  auto t1 = r.table1;
  for (auto& v : t1) {
    if (v.property == "PP_l") v.holds = false;
  }
  CHECK_FALSE(audit_implications(t1, r.table2).empty());

  auto t2 = r.table2;
  for (auto& v : t2[0].verdicts) {
    if (v.property == "N_comp") v.holds = false;
  }
  CHECK_FALSE(audit_implications(r.table1, t2).empty());
}

TEST_CASE("flattened verdict paths") {
  Fixture f(OperatorId::union_, {Model(), pn});
  auto flat = flatten_verdicts(classify(f.ctx));
  auto has = [&](const std::string& k) {
    return std::any_of(flat.begin(), flat.end(), [&](const auto& p) { return p.first == k; });
  };
  CHECK(has("table1.FPP"));
  CHECK(has("table2[1].I_comp"));
  CHECK(has("congruence"));
  CHECK(has("fpp_laws"));
  CHECK(flat.size() == std::size(kTable1Rows) + 2 * std::size(kTable2Rows) + 4);
}

TEST_CASE("stability on a small corpus") {
  Corpus c = generate_corpus(small_bounds(), 7);
  for (OperatorId id : kAllOperators) {
    StabilityResult s = stability_check(lookup(id), c);
    CAPTURE(operator_name(id));
    CHECK(s.verdict.holds);
    CHECK(s.differences.empty());
  }
}

TEST_CASE("reports are deterministic") {
  Corpus c = generate_corpus(small_bounds(), 7);
  Universe u = build_universe(c.models);
  auto once = [&](unsigned jobs) {
    SemanticEngine e(u);
    CheckOptions o;
    o.jobs = jobs;
    CheckContext ctx(lookup(OperatorId::strict), c.models, e, o);
    OperatorReport r = classify(ctx);
    return std::pair{report_json(r, {c, u}).dump(2), report_text(r, {c, u})};
  };
  auto a = once(1);
  auto b = once(4);
  CHECK(a.first == b.first);
  CHECK(a.second == b.second);

  auto j = nlohmann::ordered_json::parse(a.first);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"operator", "universe", "corpus", "table1", "table2",
                                         "implication_audit", "theorems"});
  CHECK(j["table1"]["FPP"]["holds"] == false);
  CHECK_FALSE(j["table1"]["FPP"]["witnesses"].empty());
  CHECK(j["table2"].size() == c.size());
}
