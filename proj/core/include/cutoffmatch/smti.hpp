#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cutoffmatch/instance.hpp"

namespace cutoffmatch {

// Stable marriage with incomplete lists where every woman's list is either
// strict or a single tie of exactly two men. Men and women are indices.
struct SmtiInstance {
  int num_men = 0;
  std::vector<std::vector<int>> men_prefs;  // strict, best first
  // For strict women the order matters; for tied women the list holds the two
  // tied men (first, second) and `tied` is set.
  std::vector<std::vector<int>> women_prefs;
  std::vector<bool> tied;

  int num_women() const { return static_cast<int>(women_prefs.size()); }
};

// Empty iff the instance is in restricted form with mutual acceptability.
std::vector<std::string> smti_problems(const SmtiInstance& smti);

// Applicants, projects and supervisors realise strong stability of the
// reduced instance iff the SMTI instance has a complete weakly stable
// matching. Throws std::invalid_argument for malformed input.
Instance reduce_smti_strong(const SmtiInstance& smti);

struct MaxsizeReduction {
  Instance instance;
  int size_offset = 0;
};

// Max cutoff stable size of the result equals the max weakly stable size.
MaxsizeReduction reduce_smti_maxsize(const SmtiInstance& smti);

struct SmtiBruteforce {
  std::size_t max_size = 0;
  bool has_complete = false;  // every man and every woman matched
  std::size_t weakly_stable_count = 0;
};

// Throws std::invalid_argument above `max_men` men or for malformed input.
SmtiBruteforce smti_weakly_stable_bruteforce(const SmtiInstance& smti, int max_men = 3);

// n men and n women. Each woman is tied with probability 1/2 when n >= 2;
// a strict woman accepts each man with probability 1/2.
SmtiInstance random_smti(int n, std::uint64_t seed);

}  // namespace cutoffmatch
