#include "mcalg/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "mcalg/algebra.hpp"
#include "mcalg/corpus.hpp"
#include "mcalg/operators.hpp"
#include "mcalg/report.hpp"
#include "mcalg/semantics.hpp"
#include "mcalg/syntax.hpp"

namespace mcalg::cli {

namespace {

namespace fs = std::filesystem;

/// Input problem that maps to exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parsed command line, validated before any work starts.
struct InvocationConfig {
  std::string command;
  std::string operator_name;
  std::vector<std::string> inputs;
  std::string universe = "auto";
  std::vector<std::size_t> padding = {1, 1, 1};
  std::uint64_t seed = 42;
  std::string format = "text";
  std::string output;
  unsigned jobs = 1;
  std::string corpus = "default";
  std::string predicate;
  bool list = false;
  bool symmetric_li = false;
  std::string write_dir;
};

const Operator& require_operator(const InvocationConfig& cfg) {
  auto id = parse_operator_id(cfg.operator_name);
  if (!id) throw InputError("unknown operator '" + cfg.operator_name + "'");
  return lookup(*id);
}

Padding padding_of(const InvocationConfig& cfg) {
  return Padding{cfg.padding[0], cfg.padding[1], cfg.padding[2]};
}

CheckOptions options_of(const InvocationConfig& cfg) {
  CheckOptions o;
  o.seed = cfg.seed;
  o.jobs = cfg.jobs;
  o.symmetric_li = cfg.symmetric_li;
  return o;
}

Model read_model(const std::string& path) {
  try {
    return load_model(path);
  } catch (const std::runtime_error& e) {
    throw InputError(e.what());
  }
}

Corpus read_corpus(const InvocationConfig& cfg) {
  if (cfg.corpus == "default") return generate_corpus(default_bounds(), cfg.seed);
  try {
    return load_corpus(cfg.corpus);
  } catch (const std::runtime_error& e) {
    throw InputError(e.what());
  }
}

Universe universe_from_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read universe spec " + path);
  nlohmann::json j;
  try {
    in >> j;
    return Universe::from_pools(j.at("classes").get<std::vector<std::string>>(),
                                j.at("attrs").get<std::vector<std::string>>(),
                                j.at("types").get<std::vector<std::string>>());
  } catch (const nlohmann::json::exception& e) {
    throw InputError("universe spec " + path + ": " + e.what());
  }
}

Universe make_universe(const InvocationConfig& cfg, std::span<const Model> models) {
  Universe u = cfg.universe == "auto" ? build_universe(models, padding_of(cfg))
                                      : universe_from_spec(cfg.universe);
  for (const auto& m : models) u.require_names(m);
  return u;
}

// Writes to --output when given, else to `out`.
void emit(const InvocationConfig& cfg, std::ostream& out, const std::string& text) {
  if (cfg.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.output, std::ios::binary);
  if (!file) throw InputError("cannot write " + cfg.output);
  file << text;
}

}  // namespace

int classify_exit_code(const OperatorReport& report) {
  return report.implication_audit.empty() ? kOk : kSelfAuditFailure;
}

namespace {

int cmd_compose(const InvocationConfig& cfg, std::ostream& out) {
  const Operator& op = require_operator(cfg);
  if (cfg.inputs.size() != 2) throw InputError("compose needs exactly two model files");
  Model a = read_model(cfg.inputs[0]);
  Model b = read_model(cfg.inputs[1]);
  emit(cfg, out, render(op(a, b)));
  return kOk;
}

int cmd_sm(const InvocationConfig& cfg, std::ostream& out) {
  if (cfg.inputs.size() != 1) throw InputError("sm needs exactly one model file");
  Model m = read_model(cfg.inputs[0]);
  SemanticEngine engine(make_universe(cfg, std::span<const Model>(&m, 1)));
  Denotation d = engine.denotation(m);
  const Universe& u = engine.universe();

  std::ostringstream os;
  if (cfg.format == "json") {
    nlohmann::ordered_json j;
    j["universe"] = universe_json(u);
    j["size"] = d.size();
    j["system_count"] = u.system_count();
    j["consistent"] = !d.empty();
    j["no_information"] = d.is_full();
    if (cfg.list) {
      nlohmann::ordered_json members = nlohmann::ordered_json::array();
      for (auto i : d.members()) members.push_back(describe_system(u, decode_system(u, i)));
      j["members"] = std::move(members);
    }
    os << j.dump(2) << "\n";
  } else {
    os << d.size() << " of " << u.system_count() << ", "
       << (d.empty() ? "inconsistent" : "consistent") << (d.is_full() ? ", no information" : "")
       << "\n";
    if (cfg.list) {
      for (auto i : d.members()) os << "  " << i << " " << describe_system(u, decode_system(u, i)) << "\n";
    }
  }
  emit(cfg, out, os.str());
  return kOk;
}

int cmd_check(const InvocationConfig& cfg, std::ostream& out) {
  const std::string& p = cfg.predicate;
  const bool unary = p == "consistent" || p == "uninformative";
  const bool binary = p == "refines" || p == "eq";
  if (!unary && !binary) throw InputError("unknown predicate '" + p + "'");
  if (cfg.inputs.size() != (unary ? 1u : 2u)) {
    throw InputError("check " + p + " needs " + (unary ? "one model file" : "two model files"));
  }
  std::vector<Model> models;
  for (const auto& f : cfg.inputs) models.push_back(read_model(f));
  SemanticEngine engine(make_universe(cfg, models));
  bool verdict = false;
  if (p == "consistent") verdict = engine.is_consistent(models[0]);
  if (p == "uninformative") verdict = engine.is_uninformative(models[0]);
  if (p == "refines") verdict = engine.refines(models[0], models[1]);
  if (p == "eq") verdict = engine.semantically_eq(models[0], models[1]);
  emit(cfg, out, verdict ? "true\n" : "false\n");
  return kOk;
}

int cmd_classify(const InvocationConfig& cfg, std::ostream& out) {
  const Operator& op = require_operator(cfg);
  Corpus corpus = read_corpus(cfg);
  SemanticEngine engine(make_universe(cfg, corpus.models));
  CheckContext ctx(op, corpus.models, engine, options_of(cfg));
  OperatorReport report = classify(ctx);
  ReportScope scope{corpus, engine.universe()};
  if (cfg.format == "json") {
    emit(cfg, out, report_json(report, scope).dump(2) + "\n");
  } else {
    emit(cfg, out, report_text(report, scope));
  }
  return classify_exit_code(report);
}

int cmd_quotient(const InvocationConfig& cfg, std::ostream& out) {
  InvocationConfig c = cfg;
  if (!cfg.inputs.empty()) c.corpus = cfg.inputs.front();
  Corpus corpus = read_corpus(c);
  SemanticEngine engine(make_universe(c, corpus.models));
  Partition p = quotient(corpus.models, engine);
  std::ostringstream os;
  if (cfg.format == "json") {
    nlohmann::ordered_json j;
    j["universe"] = universe_json(engine.universe());
    j["corpus_size"] = corpus.size();
    j["classes"] = partition_json(p, corpus);
    os << j.dump(2) << "\n";
  } else {
    os << p.classes.size() << " classes over " << corpus.size() << " models\n";
    for (std::size_t k = 0; k < p.classes.size(); ++k) {
      os << "class " << k << " (|sm| = " << engine.denotation(corpus.models[p.representative(k)]).size()
         << ")\n";
      for (auto i : p.classes[k]) {
        os << "  #" << i << " " << corpus.labels[i] << ": " << model_summary(corpus.models[i]) << "\n";
      }
    }
  }
  emit(cfg, out, os.str());
  return kOk;
}

int cmd_corpus(const InvocationConfig& cfg, std::ostream& out) {
  Corpus corpus = read_corpus(cfg);
  if (!cfg.write_dir.empty()) {
    fs::create_directories(cfg.write_dir);
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      char name[32];
      std::snprintf(name, sizeof name, "%03zu.mcd", i);
      std::ofstream f(fs::path(cfg.write_dir) / name, std::ios::binary);
      if (!f) throw InputError("cannot write into " + cfg.write_dir);
      f << "// " << corpus.labels[i] << "\n" << render(corpus.models[i]);
    }
  }
  std::ostringstream os;
  if (cfg.format == "json") {
    nlohmann::ordered_json j;
    j["description"] = corpus.description;
    j["space_size"] = corpus.space_size;
    j["sampled"] = corpus.sampled;
    nlohmann::ordered_json models = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      models.push_back({{"index", i}, {"label", corpus.labels[i]}, {"text", render(corpus.models[i])}});
    }
    j["models"] = std::move(models);
    os << j.dump(2) << "\n";
  } else {
    os << "// " << corpus.size() << " models: " << corpus.description << "\n";
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      os << "// #" << i << " " << corpus.labels[i] << "\n" << render(corpus.models[i]);
    }
  }
  emit(cfg, out, os.str());
  return kOk;
}

int cmd_stability(const InvocationConfig& cfg, std::ostream& out) {
  const Operator& op = require_operator(cfg);
  Corpus corpus = read_corpus(cfg);
  StabilityResult result = stability_check(op, corpus, options_of(cfg));
  std::ostringstream os;
  if (cfg.format == "json") {
    nlohmann::ordered_json j;
    j["operator"] = std::string(op.name);
    j["stable"] = result.verdict.holds;
    j["differences"] = result.differences;
    os << j.dump(2) << "\n";
  } else {
    os << (result.verdict.holds ? "stable" : "unstable") << "\n";
    for (const auto& d : result.differences) os << "  differs: " << d << "\n";
  }
  emit(cfg, out, os.str());
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  InvocationConfig cfg;
  CLI::App app{"Model composition algebra checker"};
  app.require_subcommand(1);

  const std::vector<std::string> operators = {"union", "strict", "override", "intersect",
                                              "paranoid"};
  auto add_operator = [&](CLI::App* sub, bool required) {
    auto* o = sub->add_option("--operator", cfg.operator_name, "Composition operator")
                  ->check(CLI::IsMember(operators));
    if (required) o->required();
  };
  auto add_universe = [&](CLI::App* sub) {
    sub->add_option("--universe", cfg.universe, "'auto' or a JSON universe spec file");
    sub->add_option("--padding", cfg.padding, "Fresh class,attribute,type names for 'auto'")
        ->expected(3)
        ->delimiter(',');
  };
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--output,-o", cfg.output, "Write to a file instead of standard output");
  };
  auto add_corpus = [&](CLI::App* sub) {
    sub->add_option("--corpus", cfg.corpus, "'default' or a directory of .mcd files");
    sub->add_option("--seed", cfg.seed, "Seed for corpus generation and sampling");
    sub->add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::Range(1u, 256u));
  };

  auto* compose = app.add_subcommand("compose", "Compose two models");
  add_operator(compose, true);
  compose->add_option("inputs", cfg.inputs, "Two .mcd files")->required()->expected(2);
  compose->add_option("--output,-o", cfg.output, "Write to a file instead of standard output");

  auto* sm = app.add_subcommand("sm", "Denotation summary of one model");
  sm->add_option("input", cfg.inputs, "A .mcd file")->required()->expected(1);
  sm->add_flag("--list", cfg.list, "List every member system");
  add_universe(sm);
  add_output(sm);

  auto* check = app.add_subcommand("check", "Semantic predicates: refines, consistent, uninformative, eq");
  check->add_option("predicate", cfg.predicate, "Predicate")
      ->required()
      ->check(CLI::IsMember({"refines", "consistent", "uninformative", "eq"}));
  check->add_option("inputs", cfg.inputs, "Model files")->required()->expected(1, 2);
  add_universe(check);

  auto* classify_cmd = app.add_subcommand("classify", "Classify an operator over a corpus");
  add_operator(classify_cmd, true);
  add_universe(classify_cmd);
  add_output(classify_cmd);
  add_corpus(classify_cmd);
  classify_cmd->add_flag("--symmetric-li", cfg.symmetric_li,
                         "Also report left-idempotence against m ⊗ m1");

  auto* quotient_cmd = app.add_subcommand("quotient", "Semantic equivalence classes of a corpus");
  quotient_cmd->add_option("dir", cfg.inputs, "Corpus directory")->expected(0, 1);
  add_universe(quotient_cmd);
  add_output(quotient_cmd);
  add_corpus(quotient_cmd);

  auto* corpus_cmd = app.add_subcommand("corpus", "Print or write the corpus");
  add_output(corpus_cmd);
  add_corpus(corpus_cmd);
  corpus_cmd->add_option("--write", cfg.write_dir, "Write one .mcd file per model here");

  auto* stability = app.add_subcommand("stability", "Compare verdicts under 1/1/1 and 2/2/2 padding");
  add_operator(stability, true);
  add_output(stability);
  add_corpus(stability);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  for (auto* sub : app.get_subcommands()) cfg.command = sub->get_name();

  try {
    if (cfg.command == "compose") return cmd_compose(cfg, out);
    if (cfg.command == "sm") return cmd_sm(cfg, out);
    if (cfg.command == "check") return cmd_check(cfg, out);
    if (cfg.command == "classify") return cmd_classify(cfg, out);
    if (cfg.command == "quotient") return cmd_quotient(cfg, out);
    if (cfg.command == "corpus") return cmd_corpus(cfg, out);
    if (cfg.command == "stability") return cmd_stability(cfg, out);
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kResourceCap;
  } catch (const UniverseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const InputError& e) {
    std::string_view msg = e.what();
    err << (msg.find("error: ") == std::string_view::npos ? "error: " : "") << msg << "\n";
    return kInputError;
  }
  err << "error: a subcommand is required\n" << app.help();
  return kInputError;
}

}  // namespace mcalg::cli
