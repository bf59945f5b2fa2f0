#ifndef MCALG_ALGEBRA_HPP
#define MCALG_ALGEBRA_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mcalg/corpus.hpp"
#include "mcalg/operators.hpp"
#include "mcalg/semantics.hpp"

namespace mcalg {

inline constexpr std::size_t kMaxWitnesses = 10;

/// Composition-property rows, in report order.
inline constexpr std::string_view kTable1Rows[] = {"PP_l", "PP_r", "PP",     "FPP",   "CP",
                                                   "Com",  "Ass",  "Com_sm", "Ass_sm"};

/// Special-element rows, in report order.
inline constexpr std::string_view kTable2Rows[] = {
    "Rn",      "Ln",      "N",      "Ra",      "La",      "A",      "Ri",      "Li",      "I",
    "Rn_comp", "Ln_comp", "N_comp", "Ra_comp", "La_comp", "A_comp", "Ri_comp", "Li_comp", "I_comp"};

/// Extra rows reported with CheckOptions::symmetric_li: left-idempotence
/// with m ⊗ m1 on the right-hand side instead of m1 ⊗ m.
inline constexpr std::string_view kSymmetricLiRows[] = {"Li_sym", "Li_sym_comp"};

/// A concrete tuple of corpus models refuting a quantified property.
struct Witness {
  std::vector<std::size_t> models;
  std::string relation;  // the relation that failed, e.g. "sm(m1 ⊗ m2) ⊆ sm(m1)"
  std::string observed;  // cardinalities of the sets involved
};

struct Sampling {
  bool exhaustive = true;
  std::uint64_t checked = 0;
  std::uint64_t population = 0;
  std::optional<std::uint64_t> seed;
};

/// One row of a property table. A false verdict is definitive and carries
/// witnesses; a true verdict holds on the checked corpus and universe.
struct Verdict {
  std::string property;
  bool holds = true;
  std::vector<Witness> witnesses;
  Sampling sampling;
};

struct CheckOptions {
  std::uint64_t seed = 42;
  unsigned jobs = 1;
  bool symmetric_li = false;
  /// Associativity is exhaustive up to this corpus size, sampled beyond.
  std::size_t exhaustive_triple_limit = 20;
  std::size_t sampled_triples = 10000;
};

/// Operator, corpus and semantics bundled together, with the n x n table
/// of pairwise compositions precomputed.
class CheckContext {
 public:
  CheckContext(const Operator& op, std::span<const Model> corpus,
               const SemanticEngine& engine, CheckOptions options = {});

  const Operator& op() const { return op_; }
  std::span<const Model> corpus() const { return corpus_; }
  const SemanticEngine& engine() const { return engine_; }
  const CheckOptions& options() const { return options_; }
  std::size_t size() const { return corpus_.size(); }

  const Model& model(std::size_t i) const { return corpus_[i]; }
  const Denotation& sm(std::size_t i) const { return sm_[i]; }
  /// corpus[i] ⊗ corpus[j]
  const Model& composed(std::size_t i, std::size_t j) const { return pairs_[i * size() + j]; }
  const Denotation& sm_composed(std::size_t i, std::size_t j) const {
    return pair_sm_[i * size() + j];
  }

 private:
  const Operator& op_;
  std::span<const Model> corpus_;
  const SemanticEngine& engine_;
  CheckOptions options_;
  std::vector<Denotation> sm_;
  std::vector<Model> pairs_;
  std::vector<Denotation> pair_sm_;
};

/// Triples checked for associativity: all of corpus^3 when the corpus is
/// small, otherwise `count` seeded draws.
std::vector<std::array<std::size_t, 3>> associativity_triples(std::size_t n,
                                                              const CheckOptions& options);

/// PP_l, PP_r, PP
std::vector<Verdict> check_pp(const CheckContext& ctx);
Verdict check_fpp(const CheckContext& ctx);
Verdict check_cp(const CheckContext& ctx);
/// Com, Com_sm
std::vector<Verdict> check_commutativity(const CheckContext& ctx);
/// Ass, Ass_sm
std::vector<Verdict> check_associativity(const CheckContext& ctx);

struct ElementReport {
  std::size_t model = 0;  // corpus index of the candidate
  std::vector<Verdict> verdicts;

  const Verdict& row(std::string_view id) const;
};

/// Evaluates every special-element row for candidate `m` against each
/// corpus model. `index` labels the candidate in the report.
ElementReport check_element(const CheckContext& ctx, const Model& m, std::size_t index);

/// Equivalence classes of corpus models under semantic equality. Classes
/// are ordered by first member; members keep corpus order.
struct Partition {
  std::vector<std::vector<std::size_t>> classes;

  std::size_t representative(std::size_t cls) const { return classes[cls].front(); }
  /// Index of the class containing corpus model i.
  std::size_t class_of(std::size_t i) const;
};

Partition quotient(std::span<const Model> corpus, const SemanticEngine& engine);

/// Composition is well defined on classes: for every pair of classes,
/// every choice of representatives composes to the same denotation as the
/// class representatives do.
Verdict congruence_check(const CheckContext& ctx, const Partition& partition);

struct Consequence {
  bool premise = false;     // FPP on this corpus
  bool conclusion = false;  // the consequence, checked independently
  bool holds() const { return !premise || conclusion; }
};

struct OperatorReport {
  std::string op;
  std::vector<Verdict> table1;
  std::vector<ElementReport> table2;
  /// Violated table dependencies. Non-empty means the checker is wrong.
  std::vector<std::string> implication_audit;
  Partition partition;
  Verdict congruence;
  /// FPP implies Com_sm, Ass_sm and I_comp for every candidate.
  Consequence fpp_laws;
  /// FPP implies the quotient is a congruence.
  Consequence fpp_congruence;

  const Verdict& row(std::string_view id) const;
};

/// Runs every check, the quotient and congruence check, and audits the
/// dependency columns.
OperatorReport classify(const CheckContext& ctx);

/// Audit of the dependency columns against primitive verdicts.
std::vector<std::string> audit_implications(const std::vector<Verdict>& table1,
                                            const std::vector<ElementReport>& table2);

/// Every boolean of a report keyed by a stable path, e.g. `table1.FPP`,
/// `table2[3].Rn`, `congruence`.
std::vector<std::pair<std::string, bool>> flatten_verdicts(const OperatorReport& report);

struct StabilityResult {
  Verdict verdict;
  std::vector<std::string> differences;
};

/// Classifies under 1/1/1 and 2/2/2 fresh-name padding and compares every
/// verdict. The padded universes are built without the flat system cap;
/// denotations are per-class, so their size stays small.
StabilityResult stability_check(const Operator& op, const Corpus& corpus,
                                CheckOptions options = {});

}  // namespace mcalg

#endif  // MCALG_ALGEBRA_HPP
