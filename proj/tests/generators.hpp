// Seeded random models for property tests.
#ifndef MCALG_TESTS_GENERATORS_HPP
#define MCALG_TESTS_GENERATORS_HPP

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "mcalg/syntax.hpp"

namespace gen {

struct Pools {
  std::vector<std::string> classes{"A", "B"};
  std::vector<std::string> attrs{"x", "y"};
  std::vector<std::string> types{"Int", "Str"};
};

class ModelGen {
 public:
  explicit ModelGen(std::uint64_t seed, Pools pools = {}) : rng_(seed), pools_(std::move(pools)) {}

  const Pools& pools() const { return pools_; }

  std::size_t below(std::size_t n) { return static_cast<std::size_t>(rng_() % n); }

  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[below(v.size())];
  }

  mcalg::Constraint constraint() {
    switch (below(3)) {
      case 0: return mcalg::ClassExists{pick(pools_.classes)};
      case 1: return mcalg::AttrTyped{pick(pools_.classes), pick(pools_.attrs), pick(pools_.types)};
      default: {
        mcalg::AttrComplete ac{pick(pools_.classes), {}};
        for (const auto& a : pools_.attrs) {
          if (below(2)) ac.attrs.emplace_back(a, pick(pools_.types));
        }
        if (below(2)) std::reverse(ac.attrs.begin(), ac.attrs.end());
        return ac;
      }
    }
  }

  /// Arbitrary constraint list, not necessarily in declaration form.
  mcalg::Model model(std::size_t max_len = 6) {
    std::vector<mcalg::Constraint> cs;
    std::size_t n = below(max_len + 1);
    for (std::size_t i = 0; i < n; ++i) cs.push_back(constraint());
    return mcalg::Model(std::move(cs));
  }

  std::mt19937_64& rng() { return rng_; }

 private:
  std::mt19937_64 rng_;
  Pools pools_;
};

inline std::vector<mcalg::Constraint> list(const mcalg::Model& m) {
  return {m.constraints().begin(), m.constraints().end()};
}

}  // namespace gen

#endif  // MCALG_TESTS_GENERATORS_HPP
