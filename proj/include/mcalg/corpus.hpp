#ifndef MCALG_CORPUS_HPP
#define MCALG_CORPUS_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "mcalg/syntax.hpp"

namespace mcalg {

/// Bounds for the generated model space. A generated model declares each
/// present class once, in class-pool order, either as `class C {..}` or
/// (when enabled) `complete class C {..}`, with attributes drawn from the
/// pool in pool order.
struct CorpusBounds {
  std::vector<std::string> class_pool;
  std::vector<std::string> attr_pool;
  std::vector<std::string> type_pool;
  std::size_t max_classes = 2;
  std::size_t max_attrs_per_class = 2;
  bool include_complete = true;
  /// Add decl-reordered and decl-duplicated copies of some models so the
  /// quotient has non-trivial classes.
  bool inject_variants = false;
  /// Spaces up to this size are enumerated in full.
  std::size_t exhaustive_limit = 64;
  /// Number of models sampled from the space beyond the anchors.
  std::size_t sample_size = 24;
};

/// 2 classes, 2 attributes, 2 types, completeness on, variants on.
CorpusBounds default_bounds();

struct Corpus {
  enum class Origin { files, generated };

  std::vector<Model> models;
  /// One label per model: a file name or `gen:<n>`.
  std::vector<std::string> labels;
  Origin origin = Origin::generated;
  /// Human-readable provenance (directory, or bounds + seed).
  std::string description;
  /// Size of the bounded space when generated.
  std::uint64_t space_size = 0;
  bool sampled = false;

  std::size_t size() const { return models.size(); }
};

/// Number of models in the bounded space (before anchors/variants).
std::uint64_t space_size(const CorpusBounds& bounds);

/// Deterministic: the full space when it has at most `exhaustive_limit`
/// models, otherwise the anchors (empty model, every single-class model
/// with at most one attribute) plus `sample_size` seeded draws from the
/// rest. A contradictory model is appended whenever the pools can express
/// one; variants follow when requested.
Corpus generate_corpus(const CorpusBounds& bounds, std::uint64_t seed);

/// Every `*.mcd` file in `dir`, sorted by file name. Throws
/// std::runtime_error carrying the formatted diagnostics on parse errors.
Corpus load_corpus(const std::filesystem::path& dir);

/// Parses one file; throws std::runtime_error with diagnostics on failure.
Model load_model(const std::filesystem::path& file);

}  // namespace mcalg

#endif  // MCALG_CORPUS_HPP
