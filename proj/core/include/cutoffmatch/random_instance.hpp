#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "cutoffmatch/instance.hpp"
#include "cutoffmatch/matching.hpp"
#include "cutoffmatch/rational.hpp"

namespace cutoffmatch {

// Draws that give the same sequence on every platform (the std
// distributions are implementation-defined).
class PortableRng {
 public:
  explicit PortableRng(std::uint64_t seed) : engine_(seed) {}
  // Uniform in [0, n), n > 0.
  std::uint64_t below(std::uint64_t n);
  // Uniform in [lo, hi].
  long between(long lo, long hi);
  // True with probability p, p in [0, 1].
  bool chance(const Rational& p);
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

struct RandomInstanceParams {
  int applicants = 5;
  int projects = 3;
  int supervisors = 2;
  Rational density{1, 2};  // probability that a pair is mutually acceptable
  Rational min_budget{1, 2};
  Rational max_budget{5, 2};
  bool integer_budgets = false;
  int min_capacity = 1;
  int max_capacity = 2;
  int max_supervisors_per_project = 3;
};

// Throws std::invalid_argument for density outside (0, 1], empty ranges or
// negative sizes. Budgets are multiples of 1/100 (integers when requested).
InstanceSpec random_instance_spec(const RandomInstanceParams& params, std::uint64_t seed);
Instance random_instance(const RandomInstanceParams& params, std::uint64_t seed);

// Each applicant independently picks "unmatched" or one of her mutually
// acceptable projects; then seats beyond capacity are dropped. The result is
// valid but not necessarily feasible.
Matching random_valid_matching(const Instance& inst, PortableRng& rng);

}  // namespace cutoffmatch
