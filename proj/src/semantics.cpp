#include "mcalg/semantics.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <sstream>

namespace mcalg {

namespace {

// a * b, or nullopt on overflow past `limit`.
std::optional<std::uint64_t> mul_bounded(std::uint64_t a, std::uint64_t b,
                                         std::uint64_t limit) {
  if (a != 0 && b > limit / a) return std::nullopt;
  return a * b;
}

std::optional<std::uint64_t> pow_bounded(std::uint64_t base, std::size_t exp,
                                         std::uint64_t limit) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    auto next = mul_bounded(r, base, limit);
    if (!next) return std::nullopt;
    r = *next;
  }
  return r;
}

void require_pool(const std::vector<std::string>& pool, const char* kind) {
  if (pool.empty()) {
    throw UniverseError(std::string("universe: empty ") + kind + " pool");
  }
  std::set<std::string> seen;
  for (const auto& n : pool) {
    if (n.empty()) throw UniverseError(std::string("universe: empty ") + kind + " name");
    if (!seen.insert(n).second) {
      throw UniverseError(std::string("universe: duplicate ") + kind + " name '" + n + "'");
    }
  }
}

std::optional<std::size_t> index_of(const std::vector<std::string>& pool,
                                    std::string_view name) {
  auto it = std::find(pool.begin(), pool.end(), name);
  if (it == pool.end()) return std::nullopt;
  return static_cast<std::size_t>(it - pool.begin());
}

void push_unique(std::vector<std::string>& pool, const std::string& name) {
  if (std::find(pool.begin(), pool.end(), name) == pool.end()) pool.push_back(name);
}

}  // namespace

// ---------------------------------------------------------------- Universe

Universe Universe::from_pools(std::vector<std::string> classes,
                              std::vector<std::string> attrs,
                              std::vector<std::string> types,
                              UniverseLimits limits) {
  require_pool(classes, "class");
  require_pool(attrs, "attribute");
  require_pool(types, "type");

  Universe u;
  u.classes_ = std::move(classes);
  u.attrs_ = std::move(attrs);
  u.types_ = std::move(types);

  auto radix = pow_bounded(u.types_.size() + 1, u.attrs_.size(), kMaxClassStates);
  if (!radix || *radix + 1 > kMaxClassStates) {
    throw CapExceeded("universe: per-class state count exceeds " +
                          std::to_string(kMaxClassStates),
                      radix ? *radix + 1 : kCountOverflow, kMaxClassStates);
  }
  u.class_states_ = *radix + 1;
  u.system_count_ = pow_bounded(u.class_states_, u.classes_.size(), kCountOverflow - 1)
                        .value_or(kCountOverflow);

  if (u.system_count_ > limits.max_systems) {
    std::string count = u.system_count_ == kCountOverflow
                            ? std::string("more than 2^64")
                            : std::to_string(u.system_count_);
    throw CapExceeded("universe: system count " + count + " = (1 + (" +
                          std::to_string(u.types_.size()) + " + 1)^" +
                          std::to_string(u.attrs_.size()) + ")^" +
                          std::to_string(u.classes_.size()) + " exceeds cap " +
                          std::to_string(limits.max_systems),
                      u.system_count_, limits.max_systems);
  }
  return u;
}

std::optional<std::size_t> Universe::class_index(std::string_view name) const {
  return index_of(classes_, name);
}
std::optional<std::size_t> Universe::attr_index(std::string_view name) const {
  return index_of(attrs_, name);
}
std::optional<std::size_t> Universe::type_index(std::string_view name) const {
  return index_of(types_, name);
}

void Universe::require_names(const Constraint& c) const {
  auto need = [](std::optional<std::size_t> idx, const char* kind,
                 const std::string& name) {
    if (!idx) {
      throw UniverseError(std::string("universe has no ") + kind + " '" + name + "'");
    }
  };
  need(class_index(constrained_class(c)), "class", constrained_class(c));
  if (const auto* at = std::get_if<AttrTyped>(&c)) {
    need(attr_index(at->attr), "attribute", at->attr);
    need(type_index(at->type), "type", at->type);
  } else if (const auto* ac = std::get_if<AttrComplete>(&c)) {
    for (const auto& [a, t] : ac->attrs) {
      need(attr_index(a), "attribute", a);
      need(type_index(t), "type", t);
    }
  }
}

void Universe::require_names(const Model& m) const {
  for (const auto& c : m.constraints()) require_names(c);
}

Universe build_universe(std::span<const Model> models, Padding padding,
                        UniverseLimits limits) {
  std::vector<std::string> classes, attrs, types;
  for (const auto& m : models) {
    for (const auto& c : m.constraints()) {
      push_unique(classes, constrained_class(c));
      if (const auto* at = std::get_if<AttrTyped>(&c)) {
        push_unique(attrs, at->attr);
        push_unique(types, at->type);
      } else if (const auto* ac = std::get_if<AttrComplete>(&c)) {
        for (const auto& [a, t] : ac->attrs) {
          push_unique(attrs, a);
          push_unique(types, t);
        }
      }
    }
  }
  for (std::size_t i = 1; i <= padding.classes; ++i) classes.push_back("_C" + std::to_string(i));
  for (std::size_t i = 1; i <= padding.attrs; ++i) attrs.push_back("_a" + std::to_string(i));
  for (std::size_t i = 1; i <= padding.types; ++i) types.push_back("_T" + std::to_string(i));
  return Universe::from_pools(std::move(classes), std::move(attrs), std::move(types), limits);
}

// ----------------------------------------------------------------- Systems

ClassState decode_class_state(const Universe& u, std::uint64_t state) {
  ClassState s;
  s.attr_types.assign(u.attrs().size(), std::nullopt);
  if (state == 0) return s;
  s.present = true;
  std::uint64_t r = state - 1;
  const std::uint64_t base = u.types().size() + 1;
  for (auto& slot : s.attr_types) {
    std::uint64_t digit = r % base;
    r /= base;
    if (digit != 0) slot = static_cast<std::size_t>(digit - 1);
  }
  return s;
}

std::uint64_t encode_class_state(const Universe& u, const ClassState& s) {
  if (!s.present) return 0;
  const std::uint64_t base = u.types().size() + 1;
  std::uint64_t r = 0;
  for (std::size_t k = s.attr_types.size(); k-- > 0;) {
    r = r * base + (s.attr_types[k] ? *s.attr_types[k] + 1 : 0);
  }
  return r + 1;
}

System decode_system(const Universe& u, std::uint64_t index) {
  System s;
  s.classes.reserve(u.classes().size());
  for (std::size_t c = 0; c < u.classes().size(); ++c) {
    s.classes.push_back(decode_class_state(u, index % u.class_state_count()));
    index /= u.class_state_count();
  }
  return s;
}

std::uint64_t encode_system(const Universe& u, const System& s) {
  std::uint64_t index = 0;
  for (std::size_t c = s.classes.size(); c-- > 0;) {
    index = index * u.class_state_count() + encode_class_state(u, s.classes[c]);
  }
  return index;
}

std::string describe_system(const Universe& u, const System& s) {
  std::ostringstream os;
  os << "{";
  for (std::size_t c = 0; c < s.classes.size(); ++c) {
    if (c > 0) os << ", ";
    os << u.classes()[c] << ": ";
    const auto& cs = s.classes[c];
    if (!cs.present) {
      os << "absent";
      continue;
    }
    os << "{";
    bool first = true;
    for (std::size_t a = 0; a < cs.attr_types.size(); ++a) {
      if (!cs.attr_types[a]) continue;
      os << (first ? "" : ", ") << u.attrs()[a] << ": " << u.types()[*cs.attr_types[a]];
      first = false;
    }
    os << "}";
  }
  os << "}";
  return os.str();
}

void enumerate_systems(const Universe& u,
                       const std::function<void(std::uint64_t, const System&)>& visit,
                       std::uint64_t cap) {
  if (u.system_count() > cap) {
    throw CapExceeded("enumeration: system count " + std::to_string(u.system_count()) +
                          " exceeds cap " + std::to_string(cap),
                      u.system_count(), cap);
  }
  for (std::uint64_t i = 0; i < u.system_count(); ++i) visit(i, decode_system(u, i));
}

std::vector<System> enumerate_systems(const Universe& u, std::uint64_t cap) {
  std::vector<System> out;
  enumerate_systems(u, [&](std::uint64_t, const System& s) { out.push_back(s); }, cap);
  return out;
}

bool satisfies(const Universe& u, const ClassState& state, std::size_t cls,
               const Constraint& c) {
  u.require_names(c);
  if (*u.class_index(constrained_class(c)) != cls) return true;
  if (!state.present) return false;
  if (std::holds_alternative<ClassExists>(c)) return true;
  if (const auto* at = std::get_if<AttrTyped>(&c)) {
    const auto& slot = state.attr_types[*u.attr_index(at->attr)];
    return slot && *slot == *u.type_index(at->type);
  }
  const auto& ac = std::get<AttrComplete>(c);
  std::vector<std::optional<std::size_t>> want(u.attrs().size());
  for (const auto& [a, t] : ac.attrs) want[*u.attr_index(a)] = *u.type_index(t);
  return want == state.attr_types;
}

bool satisfies(const Universe& u, const System& s, const Constraint& c) {
  u.require_names(c);
  std::size_t cls = *u.class_index(constrained_class(c));
  return satisfies(u, s.classes[cls], cls, c);
}

// -------------------------------------------------------------- Denotation

Denotation::Denotation(std::shared_ptr<const Universe> u, std::vector<Bits> factors)
    : universe_(std::move(u)), factors_(std::move(factors)) {
  canonicalize();
}

Denotation Denotation::full(std::shared_ptr<const Universe> u) {
  std::vector<Bits> factors(u->classes().size(), Bits(u->class_state_count()));
  for (auto& f : factors) f.set();
  return Denotation(std::move(u), std::move(factors));
}

void Denotation::canonicalize() {
  if (std::any_of(factors_.begin(), factors_.end(), [](const Bits& b) { return b.none(); })) {
    for (auto& f : factors_) f.reset();
  }
}

bool Denotation::empty() const {
  return factors_.empty() ? false : factors_.front().none();
}

bool Denotation::is_full() const {
  return std::all_of(factors_.begin(), factors_.end(), [](const Bits& b) { return b.all(); });
}

std::uint64_t Denotation::size() const {
  std::uint64_t n = 1;
  for (const auto& f : factors_) {
    auto next = mul_bounded(n, f.count(), kCountOverflow - 1);
    if (!next) return kCountOverflow;
    n = *next;
  }
  return n;
}

bool Denotation::contains(const System& s) const {
  for (std::size_t c = 0; c < factors_.size(); ++c) {
    if (!factors_[c].test(encode_class_state(*universe_, s.classes[c]))) return false;
  }
  return true;
}

bool Denotation::contains(std::uint64_t flat_index) const {
  const std::uint64_t k = universe_->class_state_count();
  for (const auto& f : factors_) {
    if (!f.test(flat_index % k)) return false;
    flat_index /= k;
  }
  return true;
}

bool Denotation::subset_of(const Denotation& other) const {
  if (empty()) return true;
  if (other.empty()) return false;
  for (std::size_t c = 0; c < factors_.size(); ++c) {
    if (!factors_[c].is_subset_of(other.factors_[c])) return false;
  }
  return true;
}

Denotation Denotation::intersect(const Denotation& other) const {
  std::vector<Bits> out = factors_;
  for (std::size_t c = 0; c < out.size(); ++c) out[c] &= other.factors_[c];
  return Denotation(universe_, std::move(out));
}

std::uint64_t Denotation::difference_size(const Denotation& other) const {
  return size() - intersect(other).size();
}

std::vector<std::uint64_t> Denotation::members(std::uint64_t cap) const {
  std::vector<std::uint64_t> out;
  enumerate_systems(
      *universe_,
      [&](std::uint64_t i, const System&) {
        if (contains(i)) out.push_back(i);
      },
      cap);
  return out;
}

// ---------------------------------------------------------- SemanticEngine

SemanticEngine::SemanticEngine(Universe u)
    : universe_(std::make_shared<const Universe>(std::move(u))) {}

const Denotation::Bits& SemanticEngine::local(const Constraint& c) const {
  {
    std::shared_lock lock(mutex_);
    if (auto it = local_.find(c); it != local_.end()) return it->second;
  }
  const Universe& u = *universe_;
  std::size_t cls = *u.class_index(constrained_class(c));
  Denotation::Bits bits(u.class_state_count());
  for (std::uint64_t s = 0; s < u.class_state_count(); ++s) {
    if (satisfies(u, decode_class_state(u, s), cls, c)) bits.set(s);
  }
  std::unique_lock lock(mutex_);
  return local_.try_emplace(c, std::move(bits)).first->second;
}

Denotation SemanticEngine::denotation(const Model& m) const {
  universe_->require_names(m);
  auto key = canonical_form(m);
  {
    std::shared_lock lock(mutex_);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  }
  Denotation d = Denotation::full(universe_);
  for (const auto& c : key) {
    std::size_t cls = *universe_->class_index(constrained_class(c));
    d.factors_[cls] &= local(c);
  }
  d.canonicalize();
  std::unique_lock lock(mutex_);
  return cache_.try_emplace(std::move(key), std::move(d)).first->second;
}

bool SemanticEngine::is_consistent(const Model& m) const { return !denotation(m).empty(); }

bool SemanticEngine::is_uninformative(const Model& m) const {
  return denotation(m).is_full();
}

bool SemanticEngine::refines(const Model& m2, const Model& m1) const {
  return denotation(m2).subset_of(denotation(m1));
}

bool SemanticEngine::semantically_eq(const Model& m1, const Model& m2) const {
  return denotation(m1) == denotation(m2);
}

std::size_t SemanticEngine::cache_size() const {
  std::shared_lock lock(mutex_);
  return cache_.size();
}

}  // namespace mcalg
