#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cutoffmatch/instance.hpp"

namespace cutoffmatch {

// Applicant -> project assignment. Each applicant holds at most one project
// by construction; acceptability and capacities are checked separately
// (see validity_issues()).
class Matching {
 public:
  Matching() = default;
  explicit Matching(int num_applicants) : assignment_(num_applicants, kUnmatched) {}

  // Throws std::invalid_argument if an applicant appears twice or an index is
  // out of range.
  static Matching from_pairs(int num_applicants, int num_projects,
                             std::span<const std::pair<int, int>> pairs);

  int num_applicants() const { return static_cast<int>(assignment_.size()); }
  int project_of(int a) const { return assignment_.at(a); }
  bool is_matched(int a) const { return assignment_.at(a) != kUnmatched; }

  void assign(int a, int p) { assignment_.at(a) = p; }
  void unassign(int a) { assignment_.at(a) = kUnmatched; }

  std::size_t size() const;
  bool empty() const { return size() == 0; }

  // |M(p)| for every project.
  std::vector<int> counts(int num_projects) const;
  // M(p), ascending applicant index.
  std::vector<int> members(int p) const;
  // (applicant, project) pairs, ascending applicant index.
  std::vector<std::pair<int, int>> pairs() const;

  std::span<const int> assignment() const { return assignment_; }

  bool operator==(const Matching&) const = default;
  auto operator<=>(const Matching&) const = default;

 private:
  std::vector<int> assignment_;
};

// Cutoff score per project, each in [0, |A|+1].
struct CutoffVector {
  std::vector<int> values;

  int operator[](int p) const { return values.at(p); }
  int& operator[](int p) { return values.at(p); }
  bool operator==(const CutoffVector&) const = default;
};

struct ValidityIssue {
  int applicant = kUnmatched;
  int project = kUnmatched;
  std::string rule;  // "not_acceptable_to_applicant", "not_acceptable_to_project", "over_capacity"
};

// Empty iff every pair is mutually acceptable and no capacity is exceeded.
std::vector<ValidityIssue> validity_issues(const Instance& inst, const Matching& m);
bool is_valid_matching(const Instance& inst, const Matching& m);

// "{(a1,p2), (a2,p1)}" using instance ids.
std::string describe(const Instance& inst, const Matching& m);

}  // namespace cutoffmatch
