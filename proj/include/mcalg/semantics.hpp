#ifndef MCALG_SEMANTICS_HPP
#define MCALG_SEMANTICS_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "mcalg/syntax.hpp"

namespace mcalg {

/// Raised when a constraint names something outside the universe pools, or
/// the pools themselves are malformed.
class UniverseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a universe (or a flat enumeration of it) would exceed the
/// configured size cap.
class CapExceeded : public UniverseError {
 public:
  CapExceeded(const std::string& what, std::uint64_t count, std::uint64_t cap)
      : UniverseError(what), count_(count), cap_(cap) {}
  std::uint64_t count() const { return count_; }
  std::uint64_t cap() const { return cap_; }

 private:
  std::uint64_t count_;
  std::uint64_t cap_;
};

inline constexpr std::uint64_t kDefaultSystemCap = std::uint64_t{1} << 20;
/// Hard bound on the per-class state space; denotations store one bit per
/// class state.
inline constexpr std::uint64_t kMaxClassStates = std::uint64_t{1} << 24;
/// system_count value used when the true count does not fit in 64 bits.
inline constexpr std::uint64_t kCountOverflow = UINT64_MAX;

struct UniverseLimits {
  /// Upper bound on system_count. Universes for the factorized checker may
  /// lift it (see `unbounded`); flat enumeration always honours
  /// kDefaultSystemCap-style caps passed to enumerate_systems.
  std::uint64_t max_systems = kDefaultSystemCap;

  static UniverseLimits unbounded() { return UniverseLimits{kCountOverflow}; }
};

/// Number of synthetic names appended to each pool.
struct Padding {
  std::size_t classes = 1;
  std::size_t attrs = 1;
  std::size_t types = 1;

  friend bool operator==(const Padding&, const Padding&) = default;
};

/// Finite vocabularies bounding the system space.
///
/// A system assigns every pool class a local state: 0 = absent, otherwise
/// 1 + r where r is a mixed-radix number with one digit per pool attribute
/// (first attribute least significant); digit 0 means "attribute absent",
/// digit k means "attribute carries type_pool[k-1]". The flat system index
/// is the mixed-radix number of class states, first class least
/// significant, so index 0 is "all classes absent".
class Universe {
 public:
  static Universe from_pools(std::vector<std::string> classes,
                             std::vector<std::string> attrs,
                             std::vector<std::string> types,
                             UniverseLimits limits = {});

  const std::vector<std::string>& classes() const { return classes_; }
  const std::vector<std::string>& attrs() const { return attrs_; }
  const std::vector<std::string>& types() const { return types_; }

  /// (1 + (|types| + 1)^|attrs|)^|classes|, or kCountOverflow.
  std::uint64_t system_count() const { return system_count_; }
  /// 1 + (|types| + 1)^|attrs|
  std::uint64_t class_state_count() const { return class_states_; }

  std::optional<std::size_t> class_index(std::string_view name) const;
  std::optional<std::size_t> attr_index(std::string_view name) const;
  std::optional<std::size_t> type_index(std::string_view name) const;

  /// Throws UniverseError naming the first out-of-pool name.
  void require_names(const Model& m) const;
  void require_names(const Constraint& c) const;

  friend bool operator==(const Universe& a, const Universe& b) {
    return a.classes_ == b.classes_ && a.attrs_ == b.attrs_ &&
           a.types_ == b.types_;
  }

 private:
  Universe() = default;

  std::vector<std::string> classes_;
  std::vector<std::string> attrs_;
  std::vector<std::string> types_;
  std::uint64_t class_states_ = 0;
  std::uint64_t system_count_ = 0;
};

/// Pools = names of each kind in first-occurrence order over `models`,
/// followed by synthetic `_C1.. / _a1.. / _T1..` names.
Universe build_universe(std::span<const Model> models, Padding padding = {},
                        UniverseLimits limits = {});

/// Per-class view of one system. `attr_types[k]` is the type-pool index of
/// pool attribute k, or empty when the attribute is absent.
struct ClassState {
  bool present = false;
  std::vector<std::optional<std::size_t>> attr_types;

  friend bool operator==(const ClassState&, const ClassState&) = default;
};

struct System {
  std::vector<ClassState> classes;

  friend bool operator==(const System&, const System&) = default;
};

ClassState decode_class_state(const Universe& u, std::uint64_t state);
std::uint64_t encode_class_state(const Universe& u, const ClassState& s);
System decode_system(const Universe& u, std::uint64_t index);
std::uint64_t encode_system(const Universe& u, const System& s);

/// `{Person: {name: String}, X: absent}`
std::string describe_system(const Universe& u, const System& s);

/// Calls `visit` for every system in canonical order. Throws CapExceeded
/// when system_count exceeds `cap`.
void enumerate_systems(const Universe& u,
                       const std::function<void(std::uint64_t, const System&)>& visit,
                       std::uint64_t cap = kDefaultSystemCap);
std::vector<System> enumerate_systems(const Universe& u,
                                      std::uint64_t cap = kDefaultSystemCap);

bool satisfies(const Universe& u, const ClassState& state, std::size_t cls,
               const Constraint& c);
bool satisfies(const Universe& u, const System& s, const Constraint& c);

/// The exact set of universe systems satisfying a model.
///
/// Every constraint restricts a single class, so the set is a product of
/// per-class state sets. It is stored in that form: one bitset over class
/// states per pool class. An empty product is stored with every factor
/// cleared, which makes equality structural.
class Denotation {
 public:
  using Bits = boost::dynamic_bitset<std::uint64_t>;

  /// The whole universe.
  static Denotation full(std::shared_ptr<const Universe> u);

  const Universe& universe() const { return *universe_; }
  const std::vector<Bits>& factors() const { return factors_; }

  bool empty() const;
  bool is_full() const;
  /// Cardinality, or kCountOverflow when it does not fit.
  std::uint64_t size() const;
  bool contains(const System& s) const;
  bool contains(std::uint64_t flat_index) const;
  bool subset_of(const Denotation& other) const;

  Denotation intersect(const Denotation& other) const;
  /// |this \ other|
  std::uint64_t difference_size(const Denotation& other) const;

  /// Flat member indices in canonical order. Throws CapExceeded when the
  /// universe is larger than `cap`.
  std::vector<std::uint64_t> members(std::uint64_t cap = kDefaultSystemCap) const;

  friend bool operator==(const Denotation& a, const Denotation& b) {
    return a.factors_ == b.factors_;
  }

 private:
  friend class SemanticEngine;
  Denotation(std::shared_ptr<const Universe> u, std::vector<Bits> factors);
  void canonicalize();

  std::shared_ptr<const Universe> universe_;
  std::vector<Bits> factors_;
};

/// Computes denotations for one universe and memoizes them by canonical
/// form. Safe for concurrent use; a key may be computed twice under a race
/// but is stored once.
class SemanticEngine {
 public:
  explicit SemanticEngine(Universe u);

  const Universe& universe() const { return *universe_; }
  std::shared_ptr<const Universe> universe_ptr() const { return universe_; }

  Denotation denotation(const Model& m) const;

  bool is_consistent(const Model& m) const;
  bool is_uninformative(const Model& m) const;
  /// sm(m2) ⊆ sm(m1)
  bool refines(const Model& m2, const Model& m1) const;
  bool semantically_eq(const Model& m1, const Model& m2) const;

  std::size_t cache_size() const;

 private:
  const Denotation::Bits& local(const Constraint& c) const;

  std::shared_ptr<const Universe> universe_;
  mutable std::shared_mutex mutex_;
  mutable std::map<std::vector<Constraint>, Denotation> cache_;
  mutable std::map<Constraint, Denotation::Bits> local_;
};

}  // namespace mcalg

#endif  // MCALG_SEMANTICS_HPP
