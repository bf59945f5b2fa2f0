#include "mcalg/algebra.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>
#include <thread>

namespace mcalg {

namespace {

// Runs f(i) for i in [0, n) on up to `jobs` threads. Callers write results
// into per-index slots, so merge order never depends on scheduling.
template <class F>
void parallel_for(std::size_t n, unsigned jobs, F&& f) {
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  if (jobs == 1) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::vector<std::jthread> workers;
  for (unsigned w = 0; w < jobs; ++w) {
    workers.emplace_back([&, w] {
      for (std::size_t i = w; i < n; i += jobs) f(i);
    });
  }
}

std::string card(std::string_view name, const Denotation& d) {
  return "|" + std::string(name) + "|=" + std::to_string(d.size());
}

std::string cards(std::initializer_list<std::pair<std::string_view, const Denotation*>> sets) {
  std::string s;
  for (const auto& [name, d] : sets) s += (s.empty() ? "" : ", ") + card(name, *d);
  return s;
}

class Row {
 public:
  explicit Row(std::string_view id) { v_.property = std::string(id); }

  void fail(Witness w) {
    v_.holds = false;
    if (v_.witnesses.size() < kMaxWitnesses) v_.witnesses.push_back(std::move(w));
  }
  void sampled(Sampling s) { v_.sampling = s; }
  Verdict done() && { return std::move(v_); }

 private:
  Verdict v_;
};

Sampling all_pairs(std::size_t n) {
  return Sampling{true, static_cast<std::uint64_t>(n) * n, static_cast<std::uint64_t>(n) * n,
                  std::nullopt};
}

const Verdict& find_row(const std::vector<Verdict>& rows, std::string_view id) {
  for (const auto& v : rows) {
    if (v.property == id) return v;
  }
  throw std::out_of_range("no verdict row " + std::string(id));
}

}  // namespace

// ------------------------------------------------------------ CheckContext

CheckContext::CheckContext(const Operator& op, std::span<const Model> corpus,
                           const SemanticEngine& engine, CheckOptions options)
    : op_(op), corpus_(corpus), engine_(engine), options_(options) {
  if (corpus.empty()) throw std::invalid_argument("check: corpus is empty");
  const std::size_t n = corpus.size();
  for (const auto& m : corpus) sm_.push_back(engine.denotation(m));

  std::vector<std::optional<Model>> models(n * n);
  std::vector<std::optional<Denotation>> dens(n * n);
  parallel_for(n, options.jobs, [&](std::size_t i) {
    for (std::size_t j = 0; j < n; ++j) {
      Model c = op(corpus[i], corpus[j]);
      dens[i * n + j] = engine.denotation(c);
      models[i * n + j] = std::move(c);
    }
  });
  pairs_.reserve(n * n);
  pair_sm_.reserve(n * n);
  for (std::size_t k = 0; k < n * n; ++k) {
    pairs_.push_back(std::move(*models[k]));
    pair_sm_.push_back(std::move(*dens[k]));
  }
}

// ------------------------------------------- Composition property checks

std::vector<Verdict> check_pp(const CheckContext& ctx) {
  Row left("PP_l"), right("PP_r"), both("PP");
  const std::size_t n = ctx.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Denotation& c = ctx.sm_composed(i, j);
      const Denotation& a = ctx.sm(i);
      const Denotation& b = ctx.sm(j);
      if (!c.subset_of(a)) {
        left.fail({{i, j}, "sm(m1 ⊗ m2) ⊆ sm(m1)",
                   cards({{"sm(m1 ⊗ m2)", &c}, {"sm(m1)", &a}}) +
                       ", |sm(m1 ⊗ m2) \\ sm(m1)|=" + std::to_string(c.difference_size(a))});
      }
      if (!c.subset_of(b)) {
        right.fail({{i, j}, "sm(m1 ⊗ m2) ⊆ sm(m2)",
                    cards({{"sm(m1 ⊗ m2)", &c}, {"sm(m2)", &b}}) +
                        ", |sm(m1 ⊗ m2) \\ sm(m2)|=" + std::to_string(c.difference_size(b))});
      }
      Denotation meet = a.intersect(b);
      if (!c.subset_of(meet)) {
        both.fail({{i, j}, "sm(m1 ⊗ m2) ⊆ sm(m1) ∩ sm(m2)",
                   cards({{"sm(m1 ⊗ m2)", &c}, {"sm(m1) ∩ sm(m2)", &meet}}) +
                       ", |sm(m1 ⊗ m2) \\ (sm(m1) ∩ sm(m2))|=" +
                       std::to_string(c.difference_size(meet))});
      }
    }
  }
  for (auto* r : {&left, &right, &both}) r->sampled(all_pairs(n));
  std::vector<Verdict> out;
  out.push_back(std::move(left).done());
  out.push_back(std::move(right).done());
  out.push_back(std::move(both).done());
  return out;
}

Verdict check_fpp(const CheckContext& ctx) {
  Row row("FPP");
  const std::size_t n = ctx.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Denotation& c = ctx.sm_composed(i, j);
      Denotation meet = ctx.sm(i).intersect(ctx.sm(j));
      if (!(c == meet)) {
        row.fail({{i, j}, "sm(m1 ⊗ m2) = sm(m1) ∩ sm(m2)",
                  cards({{"sm(m1 ⊗ m2)", &c}, {"sm(m1) ∩ sm(m2)", &meet}}) +
                      ", |sm(m1 ⊗ m2) \\ (sm(m1) ∩ sm(m2))|=" +
                      std::to_string(c.difference_size(meet)) +
                      ", |(sm(m1) ∩ sm(m2)) \\ sm(m1 ⊗ m2)|=" +
                      std::to_string(meet.difference_size(c))});
      }
    }
  }
  row.sampled(all_pairs(n));
  return std::move(row).done();
}

Verdict check_cp(const CheckContext& ctx) {
  Row row("CP");
  const std::size_t n = ctx.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Denotation meet = ctx.sm(i).intersect(ctx.sm(j));
      const Denotation& c = ctx.sm_composed(i, j);
      if (!meet.empty() && c.empty()) {
        row.fail({{i, j}, "sm(m1) ∩ sm(m2) ≠ ∅ ⇒ sm(m1 ⊗ m2) ≠ ∅",
                  cards({{"sm(m1) ∩ sm(m2)", &meet}, {"sm(m1 ⊗ m2)", &c}})});
      }
    }
  }
  row.sampled(all_pairs(n));
  return std::move(row).done();
}

std::vector<Verdict> check_commutativity(const CheckContext& ctx) {
  Row syn("Com"), sem("Com_sm");
  const std::size_t n = ctx.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!(ctx.composed(i, j) == ctx.composed(j, i))) {
        syn.fail({{i, j}, "m1 ⊗ m2 = m2 ⊗ m1",
                  std::to_string(ctx.composed(i, j).size()) + " vs " +
                      std::to_string(ctx.composed(j, i).size()) + " constraints"});
      }
      const Denotation& a = ctx.sm_composed(i, j);
      const Denotation& b = ctx.sm_composed(j, i);
      if (!(a == b)) {
        sem.fail({{i, j}, "sm(m1 ⊗ m2) = sm(m2 ⊗ m1)",
                  cards({{"sm(m1 ⊗ m2)", &a}, {"sm(m2 ⊗ m1)", &b}}) +
                      ", |sm(m1 ⊗ m2) ∩ sm(m2 ⊗ m1)|=" + std::to_string(a.intersect(b).size())});
      }
    }
  }
  syn.sampled(all_pairs(n));
  sem.sampled(all_pairs(n));
  std::vector<Verdict> out;
  out.push_back(std::move(syn).done());
  out.push_back(std::move(sem).done());
  return out;
}

std::vector<std::array<std::size_t, 3>> associativity_triples(std::size_t n,
                                                              const CheckOptions& options) {
  std::vector<std::array<std::size_t, 3>> out;
  if (n <= options.exhaustive_triple_limit) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c) out.push_back({a, b, c});
    return out;
  }
  std::mt19937_64 rng(options.seed);
  out.reserve(options.sampled_triples);
  for (std::size_t k = 0; k < options.sampled_triples; ++k) {
    std::size_t a = rng() % n;
    std::size_t b = rng() % n;
    std::size_t c = rng() % n;
    out.push_back({a, b, c});
  }
  return out;
}

std::vector<Verdict> check_associativity(const CheckContext& ctx) {
  const auto triples = associativity_triples(ctx.size(), ctx.options());
  struct Outcome {
    bool syn = true, sem = true;
    std::string syn_obs, sem_obs;
  };
  std::vector<Outcome> outcomes(triples.size());
  parallel_for(triples.size(), ctx.options().jobs, [&](std::size_t k) {
    const auto [a, b, c] = triples[k];
    Model left = ctx.op()(ctx.composed(a, b), ctx.model(c));
    Model right = ctx.op()(ctx.model(a), ctx.composed(b, c));
    Outcome& o = outcomes[k];
    if (!(left == right)) {
      o.syn = false;
      o.syn_obs = std::to_string(left.size()) + " vs " + std::to_string(right.size()) +
                  " constraints";
    }
    Denotation dl = ctx.engine().denotation(left);
    Denotation dr = ctx.engine().denotation(right);
    if (!(dl == dr)) {
      o.sem = false;
      o.sem_obs = cards({{"sm((m1 ⊗ m2) ⊗ m3)", &dl}, {"sm(m1 ⊗ (m2 ⊗ m3))", &dr}});
    }
  });

  Row syn("Ass"), sem("Ass_sm");
  for (std::size_t k = 0; k < triples.size(); ++k) {
    const auto& t = triples[k];
    std::vector<std::size_t> ids(t.begin(), t.end());
    if (!outcomes[k].syn) {
      syn.fail({ids, "(m1 ⊗ m2) ⊗ m3 = m1 ⊗ (m2 ⊗ m3)", outcomes[k].syn_obs});
    }
    if (!outcomes[k].sem) {
      sem.fail({ids, "sm((m1 ⊗ m2) ⊗ m3) = sm(m1 ⊗ (m2 ⊗ m3))", outcomes[k].sem_obs});
    }
  }
  const std::uint64_t n = ctx.size();
  const bool exhaustive = ctx.size() <= ctx.options().exhaustive_triple_limit;
  Sampling s{exhaustive, triples.size(), n * n * n,
             exhaustive ? std::nullopt : std::optional<std::uint64_t>(ctx.options().seed)};
  syn.sampled(s);
  sem.sampled(s);
  std::vector<Verdict> out;
  out.push_back(std::move(syn).done());
  out.push_back(std::move(sem).done());
  return out;
}

// ---------------------------------------------- Special element checks

const Verdict& ElementReport::row(std::string_view id) const { return find_row(verdicts, id); }

ElementReport check_element(const CheckContext& ctx, const Model& m, std::size_t index) {
  const auto& op = ctx.op();
  const auto& engine = ctx.engine();
  const Denotation sm_m = engine.denotation(m);
  const bool sym = ctx.options().symmetric_li;

  std::map<std::string_view, Row> rows;
  for (auto id : kTable2Rows) rows.emplace(id, Row(id));
  if (sym) {
    for (auto id : kSymmetricLiRows) rows.emplace(id, Row(id));
  }

  for (std::size_t j = 0; j < ctx.size(); ++j) {
    const Model& m1 = ctx.model(j);
    const Model right = op(m1, m);                // m1 ⊗ m
    const Model left = op(m, m1);                 // m ⊗ m1
    const Model right_twice = op(right, m);       // (m1 ⊗ m) ⊗ m
    const Model left_twice = op(m, left);         // m ⊗ (m ⊗ m1)
    const Denotation& s1 = ctx.sm(j);
    const Denotation sr = engine.denotation(right);
    const Denotation sl = engine.denotation(left);
    const Denotation srr = engine.denotation(right_twice);
    const Denotation sll = engine.denotation(left_twice);

    auto syn = [&](std::string_view id, bool ok, const char* relation, const Model& x,
                   const Model& y) {
      if (!ok) {
        rows.at(id).fail({{j}, relation,
                          std::to_string(x.size()) + " vs " + std::to_string(y.size()) +
                              " constraints"});
      }
    };
    auto sem = [&](std::string_view id, bool ok, const char* relation,
                   std::initializer_list<std::pair<std::string_view, const Denotation*>> sets) {
      if (!ok) rows.at(id).fail({{j}, relation, cards(sets)});
    };

    syn("Rn", right == m1, "m1 ⊗ m = m1", right, m1);
    syn("Ln", left == m1, "m ⊗ m1 = m1", left, m1);
    syn("N", right == left && left == m1, "m1 ⊗ m = m ⊗ m1 = m1", right, left);
    syn("Ra", right == m, "m1 ⊗ m = m", right, m);
    syn("La", left == m, "m ⊗ m1 = m", left, m);
    syn("A", right == left && left == m, "m1 ⊗ m = m ⊗ m1 = m", right, left);
    syn("Ri", right_twice == right, "(m1 ⊗ m) ⊗ m = m1 ⊗ m", right_twice, right);
    syn("Li", left_twice == right, "m ⊗ (m ⊗ m1) = m1 ⊗ m", left_twice, right);
    syn("I", left_twice == right_twice && right_twice == right,
        "m ⊗ (m ⊗ m1) = (m1 ⊗ m) ⊗ m = m1 ⊗ m", left_twice, right_twice);

    sem("Rn_comp", sr == s1, "sm(m1 ⊗ m) = sm(m1)", {{"sm(m1 ⊗ m)", &sr}, {"sm(m1)", &s1}});
    sem("Ln_comp", sl == s1, "sm(m ⊗ m1) = sm(m1)", {{"sm(m ⊗ m1)", &sl}, {"sm(m1)", &s1}});
    sem("N_comp", sr == sl && sl == s1, "sm(m1 ⊗ m) = sm(m ⊗ m1) = sm(m1)",
        {{"sm(m1 ⊗ m)", &sr}, {"sm(m ⊗ m1)", &sl}, {"sm(m1)", &s1}});
    sem("Ra_comp", sr == sm_m, "sm(m1 ⊗ m) = sm(m)", {{"sm(m1 ⊗ m)", &sr}, {"sm(m)", &sm_m}});
    sem("La_comp", sl == sm_m, "sm(m ⊗ m1) = sm(m)", {{"sm(m ⊗ m1)", &sl}, {"sm(m)", &sm_m}});
    sem("A_comp", sr == sl && sl == sm_m, "sm(m1 ⊗ m) = sm(m ⊗ m1) = sm(m)",
        {{"sm(m1 ⊗ m)", &sr}, {"sm(m ⊗ m1)", &sl}, {"sm(m)", &sm_m}});
    sem("Ri_comp", srr == sr, "sm((m1 ⊗ m) ⊗ m) = sm(m1 ⊗ m)",
        {{"sm((m1 ⊗ m) ⊗ m)", &srr}, {"sm(m1 ⊗ m)", &sr}});
    sem("Li_comp", sll == sr, "sm(m ⊗ (m ⊗ m1)) = sm(m1 ⊗ m)",
        {{"sm(m ⊗ (m ⊗ m1))", &sll}, {"sm(m1 ⊗ m)", &sr}});
    sem("I_comp", sll == srr && srr == sr, "sm(m ⊗ (m ⊗ m1)) = sm((m1 ⊗ m) ⊗ m) = sm(m1 ⊗ m)",
        {{"sm(m ⊗ (m ⊗ m1))", &sll}, {"sm((m1 ⊗ m) ⊗ m)", &srr}, {"sm(m1 ⊗ m)", &sr}});

    if (sym) {
      syn("Li_sym", left_twice == left, "m ⊗ (m ⊗ m1) = m ⊗ m1", left_twice, left);
      sem("Li_sym_comp", sll == sl, "sm(m ⊗ (m ⊗ m1)) = sm(m ⊗ m1)",
          {{"sm(m ⊗ (m ⊗ m1))", &sll}, {"sm(m ⊗ m1)", &sl}});
    }
  }

  ElementReport report;
  report.model = index;
  auto take = [&](std::string_view id) {
    Row& r = rows.at(id);
    r.sampled(Sampling{true, ctx.size(), ctx.size(), std::nullopt});
    report.verdicts.push_back(std::move(r).done());
  };
  for (auto id : kTable2Rows) take(id);
  if (sym) {
    for (auto id : kSymmetricLiRows) take(id);
  }
  return report;
}

// ------------------------------------------------------ Quotient algebra

std::size_t Partition::class_of(std::size_t i) const {
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (std::find(classes[c].begin(), classes[c].end(), i) != classes[c].end()) return c;
  }
  throw std::out_of_range("model not in partition");
}

Partition quotient(std::span<const Model> corpus, const SemanticEngine& engine) {
  Partition p;
  std::vector<Denotation> reps;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    Denotation d = engine.denotation(corpus[i]);
    auto it = std::find(reps.begin(), reps.end(), d);
    if (it == reps.end()) {
      reps.push_back(std::move(d));
      p.classes.push_back({i});
    } else {
      p.classes[static_cast<std::size_t>(it - reps.begin())].push_back(i);
    }
  }
  return p;
}

Verdict congruence_check(const CheckContext& ctx, const Partition& partition) {
  Row row("congruence");
  std::uint64_t checked = 0;
  for (std::size_t x = 0; x < partition.classes.size(); ++x) {
    for (std::size_t y = 0; y < partition.classes.size(); ++y) {
      const std::size_t rx = partition.representative(x);
      const std::size_t ry = partition.representative(y);
      const Denotation& expected = ctx.sm_composed(rx, ry);
      for (std::size_t a : partition.classes[x]) {
        for (std::size_t b : partition.classes[y]) {
          ++checked;
          const Denotation& got = ctx.sm_composed(a, b);
          if (!(got == expected)) {
            row.fail({{a, b, rx, ry}, "sm(ma ⊗ mb) = sm(m1 ⊗ m2) for ma ≅ m1, mb ≅ m2",
                      cards({{"sm(ma ⊗ mb)", &got}, {"sm(m1 ⊗ m2)", &expected}})});
          }
        }
      }
    }
  }
  row.sampled(Sampling{true, checked, checked, std::nullopt});
  return std::move(row).done();
}

// --------------------------------------------------------------- Reports

const Verdict& OperatorReport::row(std::string_view id) const { return find_row(table1, id); }

std::vector<std::string> audit_implications(const std::vector<Verdict>& table1,
                                            const std::vector<ElementReport>& table2) {
  std::vector<std::string> violations;
  auto val = [](const std::vector<Verdict>& rows, std::string_view id) {
    return find_row(rows, id).holds;
  };
  auto fmt = [](bool b) { return b ? "true" : "false"; };

  auto implies = [&](const std::string& where, const std::vector<Verdict>& rows,
                     std::string_view a, std::string_view b) {
    if (val(rows, a) && !val(rows, b)) {
      violations.push_back(where + std::string(a) + " ⇒ " + std::string(b) + " violated (" +
                           std::string(a) + "=true, " + std::string(b) + "=false)");
    }
  };
  auto conj = [&](const std::string& where, const std::vector<Verdict>& rows, std::string_view a,
                  std::string_view b, std::string_view both) {
    bool lhs = val(rows, a) && val(rows, b);
    if (lhs != val(rows, both)) {
      violations.push_back(where + std::string(a) + " ∧ " + std::string(b) + " ⇔ " +
                           std::string(both) + " violated (" + std::string(a) + "=" +
                           fmt(val(rows, a)) + ", " + std::string(b) + "=" + fmt(val(rows, b)) +
                           ", " + std::string(both) + "=" + fmt(val(rows, both)) + ")");
    }
  };

  const std::string t1 = "table1: ";
  conj(t1, table1, "PP_l", "PP_r", "PP");
  implies(t1, table1, "FPP", "PP");
  implies(t1, table1, "FPP", "CP");
  implies(t1, table1, "Com", "Com_sm");
  implies(t1, table1, "Ass", "Ass_sm");

  for (const auto& e : table2) {
    const std::string w = "table2[" + std::to_string(e.model) + "]: ";
    const auto& rows = e.verdicts;
    conj(w, rows, "Rn", "Ln", "N");
    conj(w, rows, "Ra", "La", "A");
    conj(w, rows, "Ri", "Li", "I");
    implies(w, rows, "Rn", "Rn_comp");
    implies(w, rows, "Ln", "Ln_comp");
    conj(w, rows, "Rn_comp", "Ln_comp", "N_comp");
    implies(w, rows, "N", "N_comp");
    implies(w, rows, "Ra", "Ra_comp");
    implies(w, rows, "La", "La_comp");
    conj(w, rows, "Ra_comp", "La_comp", "A_comp");
    implies(w, rows, "A", "A_comp");
    implies(w, rows, "Ri", "Ri_comp");
    implies(w, rows, "Li", "Li_comp");
    conj(w, rows, "Ri_comp", "Li_comp", "I_comp");
    implies(w, rows, "I", "I_comp");
  }
  return violations;
}

OperatorReport classify(const CheckContext& ctx) {
  OperatorReport r;
  r.op = std::string(ctx.op().name);
  for (auto& v : check_pp(ctx)) r.table1.push_back(std::move(v));
  r.table1.push_back(check_fpp(ctx));
  r.table1.push_back(check_cp(ctx));
  auto com = check_commutativity(ctx);
  auto ass = check_associativity(ctx);
  r.table1.push_back(std::move(com[0]));
  r.table1.push_back(std::move(ass[0]));
  r.table1.push_back(std::move(com[1]));
  r.table1.push_back(std::move(ass[1]));

  std::vector<std::optional<ElementReport>> elements(ctx.size());
  parallel_for(ctx.size(), ctx.options().jobs,
               [&](std::size_t i) { elements[i] = check_element(ctx, ctx.model(i), i); });
  for (auto& e : elements) r.table2.push_back(std::move(*e));

  r.implication_audit = audit_implications(r.table1, r.table2);
  r.partition = quotient(ctx.corpus(), ctx.engine());
  r.congruence = congruence_check(ctx, r.partition);

  const bool fpp = r.row("FPP").holds;
  bool all_idempotent = std::all_of(r.table2.begin(), r.table2.end(),
                                    [](const ElementReport& e) { return e.row("I_comp").holds; });
  r.fpp_laws = {fpp, r.row("Com_sm").holds && r.row("Ass_sm").holds && all_idempotent};
  r.fpp_congruence = {fpp, r.congruence.holds};
  return r;
}

std::vector<std::pair<std::string, bool>> flatten_verdicts(const OperatorReport& report) {
  std::vector<std::pair<std::string, bool>> out;
  for (const auto& v : report.table1) out.emplace_back("table1." + v.property, v.holds);
  for (const auto& e : report.table2) {
    for (const auto& v : e.verdicts) {
      out.emplace_back("table2[" + std::to_string(e.model) + "]." + v.property, v.holds);
    }
  }
  out.emplace_back("congruence", report.congruence.holds);
  out.emplace_back("fpp_laws", report.fpp_laws.holds());
  out.emplace_back("fpp_congruence", report.fpp_congruence.holds());
  out.emplace_back("implication_audit.empty", report.implication_audit.empty());
  return out;
}

StabilityResult stability_check(const Operator& op, const Corpus& corpus, CheckOptions options) {
  auto run = [&](Padding padding) {
    SemanticEngine engine(build_universe(corpus.models, padding, UniverseLimits::unbounded()));
    CheckContext ctx(op, corpus.models, engine, options);
    return flatten_verdicts(classify(ctx));
  };
  const auto base = run(Padding{1, 1, 1});
  const auto wide = run(Padding{2, 2, 2});

  StabilityResult result;
  Row row("stability");
  for (std::size_t k = 0; k < base.size(); ++k) {
    if (base[k].second != wide[k].second) {
      result.differences.push_back(base[k].first);
      row.fail({{}, base[k].first,
                std::string("padding 1/1/1: ") + (base[k].second ? "true" : "false") +
                    ", padding 2/2/2: " + (wide[k].second ? "true" : "false")});
    }
  }
  row.sampled(Sampling{true, base.size(), base.size(), std::nullopt});
  result.verdict = std::move(row).done();
  return result;
}

}  // namespace mcalg
