#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cutoffmatch/feasibility.hpp"
#include "cutoffmatch/instance.hpp"
#include "cutoffmatch/matching.hpp"
#include "cutoffmatch/stability.hpp"

namespace cutoffmatch {

// Largest applicant count the brute-force routines accept: 10, or the
// integer in CUTOFFMATCH_GUARD when set.
int applicant_guard();

class GuardExceeded : public std::runtime_error {
 public:
  GuardExceeded(int size, int limit);
  int size() const { return size_; }
  int limit() const { return limit_; }

 private:
  int size_;
  int limit_;
};

struct OracleOptions {
  int max_applicants = -1;  // -1: applicant_guard()
  // Skip partial matchings with justified envy. Every stable notion implies
  // fairness, so this loses nothing when only stable matchings are wanted.
  bool fair_only = false;
};

// Visits every valid, feasible matching exactly once. Applicants are assigned
// in index order, each trying her acceptable projects in preference order and
// then staying unmatched. Partial assignments over capacity or failing `f`
// are cut (f is hereditary, so no completion can recover).
void for_each_matching(const Instance& inst, const FeasibilityFunction& f,
                       const std::function<void(const Matching&)>& visit,
                       const OracleOptions& options = {});
std::vector<Matching> enumerate_matchings(const Instance& inst, const OracleOptions& options = {});
std::vector<Matching> enumerate_matchings(const Instance& inst, const FeasibilityFunction& f,
                                          const OracleOptions& options = {});

struct Classified {
  Matching matching;
  StabilityVerdict verdict;
};

std::vector<Classified> classify_all(const Instance& inst, const OracleOptions& options = {});

struct MaxCutoffWitnesses {
  std::size_t size = 0;
  std::vector<Matching> witnesses;  // all cutoff stable matchings of that size
};

MaxCutoffWitnesses max_cutoff_stable_bruteforce(const Instance& inst,
                                                OracleOptions options = {});

// First strongly stable matching in enumeration order.
std::optional<Matching> find_strongly_stable(const Instance& inst, OracleOptions options = {});

// Matchings at the given level or above (kWeak collects weakly stable ones).
std::vector<Matching> stable_set(const Instance& inst, StabilityLevel at_least,
                                 OracleOptions options = {});

}  // namespace cutoffmatch
