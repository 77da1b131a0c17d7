#pragma once

#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "cutoffmatch/rational.hpp"

namespace cutoffmatch {

inline constexpr int kUnmatched = -1;

// Raw, identifier-based description of an internship instance as it appears
// in the JSON document. Nothing here is checked; see validate_instance().
struct ProjectSpec {
  std::string id;
  long capacity = 0;
  std::vector<std::string> prefs;  // acceptable applicants, best first
};

struct SupervisorSpec {
  std::string id;
  Rational budget;
  std::vector<std::string> projects;
};

struct InstanceSpec {
  std::vector<std::string> applicants;
  std::vector<ProjectSpec> projects;
  std::vector<SupervisorSpec> supervisors;
  // Applicants without an entry have an empty list.
  std::map<std::string, std::vector<std::string>> applicant_prefs;
};

struct Violation {
  std::string entity;  // offending id
  std::string rule;    // e.g. "dangling_project", "negative_budget"
  std::string message;
};

struct ValidationResult;

class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(std::vector<Violation> violations);
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

// A validated instance. Agents are addressed by dense indices in the order of
// the originating spec; string ids are kept for reporting.
//
// Immutable after construction and safe to share across threads.
class Instance {
 public:
  struct Project {
    std::string id;
    int capacity = 0;
    std::vector<int> prefs;
  };
  struct Supervisor {
    std::string id;
    Rational budget;
    std::vector<int> projects;
  };

  // Throws ValidationError if the spec has errors (warnings are dropped).
  static Instance from_spec(const InstanceSpec& spec);

  int num_applicants() const { return static_cast<int>(applicant_ids_.size()); }
  int num_projects() const { return static_cast<int>(projects_.size()); }
  int num_supervisors() const { return static_cast<int>(supervisors_.size()); }

  const std::string& applicant_id(int a) const { return applicant_ids_.at(a); }
  const Project& project(int p) const { return projects_.at(p); }
  const Supervisor& supervisor(int s) const { return supervisors_.at(s); }
  int capacity(int p) const { return projects_[p].capacity; }

  std::span<const int> applicant_prefs(int a) const { return applicant_prefs_.at(a); }
  std::span<const int> project_prefs(int p) const { return projects_.at(p).prefs; }
  // S_p, ascending supervisor index.
  std::span<const int> supervisors_of(int p) const { return supervisors_of_.at(p); }

  // 0-based position in the respective list, or -1 if not acceptable.
  int applicant_rank(int a, int p) const { return applicant_rank_[index(a, p)]; }
  int project_rank(int p, int a) const { return project_rank_[index(a, p)]; }

  bool acceptable_to_applicant(int a, int p) const { return applicant_rank(a, p) >= 0; }
  bool acceptable_to_project(int p, int a) const { return project_rank(p, a) >= 0; }
  bool mutually_acceptable(int a, int p) const {
    return acceptable_to_applicant(a, p) && acceptable_to_project(p, a);
  }

  // Score |A| - k + 1 of the applicant ranked k-th (1-based) by p.
  std::optional<int> score(int a, int p) const;
  // The applicant p scores exactly `value`, or kUnmatched.
  int applicant_with_score(int p, int value) const;

  // True iff a strictly prefers p to q; q may be kUnmatched (always worse
  // than an acceptable project).
  bool applicant_prefers(int a, int p, int q) const;
  // True iff p ranks a strictly above b (b may be kUnmatched).
  bool project_prefers(int p, int a, int b) const;

  Rational total_budget() const;

  std::optional<int> find_applicant(std::string_view id) const;
  std::optional<int> find_project(std::string_view id) const;
  std::optional<int> find_supervisor(std::string_view id) const;

  InstanceSpec to_spec() const;

  bool operator==(const Instance& other) const;

 private:
  friend ValidationResult validate_instance(const InstanceSpec& spec);
  Instance() = default;
  void build_tables();
  std::size_t index(int a, int p) const {
    return static_cast<std::size_t>(a) * projects_.size() + static_cast<std::size_t>(p);
  }

  std::vector<std::string> applicant_ids_;
  std::vector<Project> projects_;
  std::vector<Supervisor> supervisors_;
  std::vector<std::vector<int>> applicant_prefs_;

  std::vector<std::vector<int>> supervisors_of_;
  std::vector<int> applicant_rank_;
  std::vector<int> project_rank_;
  std::unordered_map<std::string, int> applicant_index_;
  std::unordered_map<std::string, int> project_index_;
  std::unordered_map<std::string, int> supervisor_index_;
};

struct ValidationResult {
  std::optional<Instance> instance;
  std::vector<Violation> errors;
  std::vector<Violation> warnings;

  bool ok() const { return instance.has_value(); }
};

// Checks ids, references, duplicates and signs. A project nobody supervises
// is reported as a warning only: it is legal but can never be funded.
ValidationResult validate_instance(const InstanceSpec& spec);

struct Region {
  std::string id;
  std::vector<std::string> hospitals;
  long quota = 0;
};

// Hospital-residents data with disjoint regional caps. Hospitals are given as
// ProjectSpec (capacity and preference list), residents as applicants.
struct RegionalInstance {
  std::vector<std::string> residents;
  std::vector<ProjectSpec> hospitals;
  std::map<std::string, std::vector<std::string>> resident_prefs;
  std::vector<Region> regions;
};

// One supervisor per region with budget equal to the regional quota.
// Throws ValidationError when the regions do not partition the hospitals.
Instance embed_reg(const RegionalInstance& reg);

}  // namespace cutoffmatch
