#include "cutoffmatch/matching.hpp"

#include <algorithm>
#include <stdexcept>

namespace cutoffmatch {

Matching Matching::from_pairs(int num_applicants, int num_projects,
                              std::span<const std::pair<int, int>> pairs) {
  Matching m(num_applicants);
  for (const auto& [a, p] : pairs) {
    if (a < 0 || a >= num_applicants || p < 0 || p >= num_projects) {
      throw std::invalid_argument("matching pair out of range");
    }
    if (m.assignment_[a] != kUnmatched) {
      throw std::invalid_argument("applicant " + std::to_string(a) + " matched twice");
    }
    m.assignment_[a] = p;
  }
  return m;
}

std::size_t Matching::size() const {
  return static_cast<std::size_t>(
      std::count_if(assignment_.begin(), assignment_.end(), [](int p) { return p != kUnmatched; }));
}

std::vector<int> Matching::counts(int num_projects) const {
  std::vector<int> out(num_projects, 0);
  for (int p : assignment_) {
    if (p != kUnmatched) ++out.at(p);
  }
  return out;
}

std::vector<int> Matching::members(int p) const {
  std::vector<int> out;
  for (int a = 0; a < num_applicants(); ++a) {
    if (assignment_[a] == p) out.push_back(a);
  }
  return out;
}

std::vector<std::pair<int, int>> Matching::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < num_applicants(); ++a) {
    if (assignment_[a] != kUnmatched) out.emplace_back(a, assignment_[a]);
  }
  return out;
}

std::vector<ValidityIssue> validity_issues(const Instance& inst, const Matching& m) {
  std::vector<ValidityIssue> issues;
  if (m.num_applicants() != inst.num_applicants()) {
    issues.push_back({kUnmatched, kUnmatched, "size_mismatch"});
    return issues;
  }
  for (const auto& [a, p] : m.pairs()) {
    if (p < 0 || p >= inst.num_projects()) {
      issues.push_back({a, p, "unknown_project"});
      continue;
    }
    if (!inst.acceptable_to_applicant(a, p)) {
      issues.push_back({a, p, "not_acceptable_to_applicant"});
    }
    if (!inst.acceptable_to_project(p, a)) {
      issues.push_back({a, p, "not_acceptable_to_project"});
    }
  }
  if (!issues.empty()) return issues;
  const auto counts = m.counts(inst.num_projects());
  for (int p = 0; p < inst.num_projects(); ++p) {
    if (counts[p] > inst.capacity(p)) issues.push_back({kUnmatched, p, "over_capacity"});
  }
  return issues;
}

bool is_valid_matching(const Instance& inst, const Matching& m) {
  return validity_issues(inst, m).empty();
}

std::string describe(const Instance& inst, const Matching& m) {
  std::string out = "{";
  bool first = true;
  for (const auto& [a, p] : m.pairs()) {
    if (!first) out += ", ";
    first = false;
    out += "(" + inst.applicant_id(a) + "," + inst.project(p).id + ")";
  }
  return out + "}";
}

}  // namespace cutoffmatch
