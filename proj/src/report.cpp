#include "mcalg/report.hpp"

#include <iomanip>
#include <sstream>

namespace mcalg {

using nlohmann::ordered_json;

namespace {

std::string join(const std::vector<std::string>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i];
  return s + "]";
}

std::string model_ref(const Corpus& corpus, std::size_t i) {
  return "#" + std::to_string(i) + " " + model_summary(corpus.models[i]);
}

ordered_json sampling_json(const Sampling& s) {
  ordered_json j;
  j["exhaustive"] = s.exhaustive;
  j["checked"] = s.checked;
  j["population"] = s.population;
  if (s.seed) j["seed"] = *s.seed;
  return j;
}

ordered_json consequence_json(const Consequence& t) {
  ordered_json j;
  j["premise_fpp"] = t.premise;
  j["conclusion"] = t.conclusion;
  j["holds"] = t.holds();
  return j;
}

}  // namespace

std::string model_summary(const Model& m) {
  if (m.empty()) return "(empty)";
  std::string text = render(m);
  std::string out;
  for (char ch : text) {
    if (ch == '\n') {
      if (!out.empty() && out.back() != ' ') out += ' ';
    } else {
      out += ch;
    }
  }
  while (!out.empty() && out.back() == ' ') out.pop_back();
  return out;
}

ordered_json verdict_json(const Verdict& v, const Corpus& corpus) {
  ordered_json j;
  j["holds"] = v.holds;
  ordered_json ws = ordered_json::array();
  for (const auto& w : v.witnesses) {
    ordered_json wj;
    wj["models"] = w.models;
    ordered_json texts = ordered_json::array();
    for (auto i : w.models) texts.push_back(model_summary(corpus.models[i]));
    wj["texts"] = std::move(texts);
    wj["relation"] = w.relation;
    wj["observed"] = w.observed;
    ws.push_back(std::move(wj));
  }
  j["witnesses"] = std::move(ws);
  j["sampling"] = sampling_json(v.sampling);
  return j;
}

ordered_json universe_json(const Universe& u) {
  ordered_json j;
  j["classes"] = u.classes();
  j["attrs"] = u.attrs();
  j["types"] = u.types();
  j["system_count"] = u.system_count();
  return j;
}

ordered_json partition_json(const Partition& p, const Corpus& corpus) {
  ordered_json classes = ordered_json::array();
  for (const auto& members : p.classes) {
    ordered_json c;
    c["representative"] = members.front();
    c["members"] = members;
    ordered_json labels = ordered_json::array();
    for (auto i : members) labels.push_back(corpus.labels[i]);
    c["labels"] = std::move(labels);
    classes.push_back(std::move(c));
  }
  return classes;
}

ordered_json report_json(const OperatorReport& report, const ReportScope& scope) {
  ordered_json j;
  j["operator"] = report.op;
  j["universe"] = universe_json(scope.universe);

  ordered_json corpus;
  corpus["origin"] = scope.corpus.origin == Corpus::Origin::files ? "files" : "generated";
  corpus["description"] = scope.corpus.description;
  corpus["size"] = scope.corpus.size();
  ordered_json models = ordered_json::array();
  for (std::size_t i = 0; i < scope.corpus.size(); ++i) {
    ordered_json m;
    m["index"] = i;
    m["label"] = scope.corpus.labels[i];
    m["text"] = model_summary(scope.corpus.models[i]);
    models.push_back(std::move(m));
  }
  corpus["models"] = std::move(models);
  j["corpus"] = std::move(corpus);

  ordered_json t1;
  for (const auto& v : report.table1) t1[v.property] = verdict_json(v, scope.corpus);
  j["table1"] = std::move(t1);

  ordered_json t2 = ordered_json::array();
  for (const auto& e : report.table2) {
    ordered_json ej;
    ej["model"] = e.model;
    ej["text"] = model_summary(scope.corpus.models[e.model]);
    ordered_json props;
    for (const auto& v : e.verdicts) props[v.property] = verdict_json(v, scope.corpus);
    ej["props"] = std::move(props);
    t2.push_back(std::move(ej));
  }
  j["table2"] = std::move(t2);
  j["implication_audit"] = report.implication_audit;

  ordered_json theorems;
  theorems["t1"] = consequence_json(report.fpp_laws);
  ordered_json t2j = consequence_json(report.fpp_congruence);
  t2j["congruence"] = verdict_json(report.congruence, scope.corpus);
  t2j["classes"] = partition_json(report.partition, scope.corpus);
  theorems["t2"] = std::move(t2j);
  j["theorems"] = std::move(theorems);
  return j;
}

std::string report_text(const OperatorReport& report, const ReportScope& scope) {
  std::ostringstream os;
  const auto& corpus = scope.corpus;
  const auto& u = scope.universe;
  os << "operator: " << report.op << "\n";
  os << "universe: classes=" << join(u.classes()) << " attrs=" << join(u.attrs())
     << " types=" << join(u.types()) << " systems=" << u.system_count() << "\n";
  os << "corpus:   " << corpus.size() << " models (" << corpus.description << ")\n";
  os << "verdicts are relative to this corpus and universe\n\n";

  auto print_witnesses = [&](const Verdict& v) {
    for (const auto& w : v.witnesses) {
      os << "      witness:";
      for (std::size_t k = 0; k < w.models.size(); ++k) {
        os << (k ? " |" : "") << " m" << k + 1 << "=" << model_ref(corpus, w.models[k]);
      }
      os << "\n        fails " << w.relation << "; " << w.observed << "\n";
    }
  };

  os << "Composition properties\n";
  for (const auto& v : report.table1) {
    os << "  " << std::left << std::setw(8) << v.property << (v.holds ? "true " : "false");
    if (!v.sampling.exhaustive) {
      os << "  (sampled " << v.sampling.checked << " of " << v.sampling.population
         << " triples, seed " << v.sampling.seed.value_or(0) << ")";
    }
    os << "\n";
    print_witnesses(v);
  }

  os << "\nSpecial elements (T = holds, . = refuted)\n";
  os << "  " << std::setw(6) << "model";
  const auto& first = report.table2.front().verdicts;
  for (const auto& v : first) os << " " << v.property;
  os << "\n";
  for (const auto& e : report.table2) {
    os << "  " << std::setw(6) << ("#" + std::to_string(e.model));
    for (const auto& v : e.verdicts) {
      std::string cell(v.property.size(), ' ');
      cell[v.property.size() / 2] = v.holds ? 'T' : '.';
      os << " " << cell;
    }
    os << "  " << model_summary(corpus.models[e.model]) << "\n";
  }

  os << "\nQuotient: " << report.partition.classes.size() << " classes over " << corpus.size()
     << " models\n";
  os << "Congruence: " << (report.congruence.holds ? "true" : "false") << "\n";
  print_witnesses(report.congruence);
  auto consequence = [&](const char* name, const Consequence& t) {
    os << name << ": FPP=" << (t.premise ? "true" : "false")
       << " consequence=" << (t.conclusion ? "true" : "false")
       << (t.holds() ? " (consistent)" : " (VIOLATED)") << "\n";
  };
  consequence("FPP ⇒ Com_sm, Ass_sm, I_comp", report.fpp_laws);
  consequence("FPP ⇒ congruence", report.fpp_congruence);

  os << "\nImplication audit: ";
  if (report.implication_audit.empty()) {
    os << "all dependencies hold\n";
  } else {
    os << report.implication_audit.size() << " violation(s)\n";
    for (const auto& line : report.implication_audit) os << "  " << line << "\n";
  }
  return os.str();
}

}  // namespace mcalg
