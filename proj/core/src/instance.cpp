#include "cutoffmatch/instance.hpp"

#include <algorithm>
#include <set>

namespace cutoffmatch {
namespace {

std::string summarize(const std::vector<Violation>& violations) {
  std::string out = "invalid instance:";
  for (const auto& v : violations) {
    out += " [" + v.rule + " @ " + v.entity + "] " + v.message + ";";
  }
  return out;
}

}  // namespace

ValidationError::ValidationError(std::vector<Violation> violations)
    : std::runtime_error(summarize(violations)), violations_(std::move(violations)) {}

Instance Instance::from_spec(const InstanceSpec& spec) {
  auto result = validate_instance(spec);
  if (!result.ok()) throw ValidationError(std::move(result.errors));
  return std::move(*result.instance);
}

std::optional<int> Instance::score(int a, int p) const {
  const int rank = project_rank(p, a);
  if (rank < 0) return std::nullopt;
  return num_applicants() - rank;
}

int Instance::applicant_with_score(int p, int value) const {
  const int rank = num_applicants() - value;
  const auto& prefs = projects_.at(p).prefs;
  if (rank < 0 || rank >= static_cast<int>(prefs.size())) return kUnmatched;
  return prefs[rank];
}

bool Instance::applicant_prefers(int a, int p, int q) const {
  if (p == kUnmatched) return false;
  const int rp = applicant_rank(a, p);
  if (rp < 0) return false;
  if (q == kUnmatched) return true;
  const int rq = applicant_rank(a, q);
  return rq < 0 || rp < rq;
}

bool Instance::project_prefers(int p, int a, int b) const {
  if (a == kUnmatched) return false;
  const int ra = project_rank(p, a);
  if (ra < 0) return false;
  if (b == kUnmatched) return true;
  const int rb = project_rank(p, b);
  return rb < 0 || ra < rb;
}

Rational Instance::total_budget() const {
  Rational total = 0;
  for (const auto& s : supervisors_) total += s.budget;
  return total;
}

std::optional<int> Instance::find_applicant(std::string_view id) const {
  auto it = applicant_index_.find(std::string(id));
  if (it == applicant_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> Instance::find_project(std::string_view id) const {
  auto it = project_index_.find(std::string(id));
  if (it == project_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> Instance::find_supervisor(std::string_view id) const {
  auto it = supervisor_index_.find(std::string(id));
  if (it == supervisor_index_.end()) return std::nullopt;
  return it->second;
}

InstanceSpec Instance::to_spec() const {
  InstanceSpec spec;
  spec.applicants = applicant_ids_;
  for (const auto& p : projects_) {
    ProjectSpec ps{p.id, p.capacity, {}};
    for (int a : p.prefs) ps.prefs.push_back(applicant_ids_[a]);
    spec.projects.push_back(std::move(ps));
  }
  for (const auto& s : supervisors_) {
    SupervisorSpec ss{s.id, s.budget, {}};
    for (int p : s.projects) ss.projects.push_back(projects_[p].id);
    spec.supervisors.push_back(std::move(ss));
  }
  for (int a = 0; a < num_applicants(); ++a) {
    auto& list = spec.applicant_prefs[applicant_ids_[a]];
    for (int p : applicant_prefs_[a]) list.push_back(projects_[p].id);
  }
  return spec;
}

bool Instance::operator==(const Instance& other) const {
  if (applicant_ids_ != other.applicant_ids_ || applicant_prefs_ != other.applicant_prefs_) {
    return false;
  }
  if (projects_.size() != other.projects_.size() ||
      supervisors_.size() != other.supervisors_.size()) {
    return false;
  }
  for (std::size_t i = 0; i < projects_.size(); ++i) {
    const auto& x = projects_[i];
    const auto& y = other.projects_[i];
    if (x.id != y.id || x.capacity != y.capacity || x.prefs != y.prefs) return false;
  }
  for (std::size_t i = 0; i < supervisors_.size(); ++i) {
    const auto& x = supervisors_[i];
    const auto& y = other.supervisors_[i];
    if (x.id != y.id || x.budget != y.budget || x.projects != y.projects) return false;
  }
  return true;
}

void Instance::build_tables() {
  const auto na = applicant_ids_.size();
  const auto np = projects_.size();
  applicant_rank_.assign(na * np, -1);
  project_rank_.assign(na * np, -1);
  for (std::size_t a = 0; a < na; ++a) {
    const auto& prefs = applicant_prefs_[a];
    for (std::size_t k = 0; k < prefs.size(); ++k) {
      applicant_rank_[index(static_cast<int>(a), prefs[k])] = static_cast<int>(k);
    }
  }
  for (std::size_t p = 0; p < np; ++p) {
    const auto& prefs = projects_[p].prefs;
    for (std::size_t k = 0; k < prefs.size(); ++k) {
      project_rank_[index(prefs[k], static_cast<int>(p))] = static_cast<int>(k);
    }
  }
  supervisors_of_.assign(np, {});
  for (std::size_t s = 0; s < supervisors_.size(); ++s) {
    for (int p : supervisors_[s].projects) supervisors_of_[p].push_back(static_cast<int>(s));
  }
  applicant_index_.clear();
  project_index_.clear();
  supervisor_index_.clear();
  for (std::size_t i = 0; i < na; ++i) applicant_index_[applicant_ids_[i]] = static_cast<int>(i);
  for (std::size_t i = 0; i < np; ++i) project_index_[projects_[i].id] = static_cast<int>(i);
  for (std::size_t i = 0; i < supervisors_.size(); ++i) {
    supervisor_index_[supervisors_[i].id] = static_cast<int>(i);
  }
}

ValidationResult validate_instance(const InstanceSpec& spec) {
  ValidationResult result;
  auto error = [&](const std::string& entity, const char* rule, std::string message) {
    result.errors.push_back({entity, rule, std::move(message)});
  };

  std::unordered_map<std::string, int> applicant_index;
  std::unordered_map<std::string, int> project_index;
  std::unordered_map<std::string, int> supervisor_index;

  for (std::size_t i = 0; i < spec.applicants.size(); ++i) {
    const auto& id = spec.applicants[i];
    if (id.empty()) error(id, "empty_id", "applicant id is empty");
    if (!applicant_index.emplace(id, static_cast<int>(i)).second) {
      error(id, "duplicate_id", "applicant listed twice");
    }
  }
  for (std::size_t i = 0; i < spec.projects.size(); ++i) {
    const auto& id = spec.projects[i].id;
    if (id.empty()) error(id, "empty_id", "project id is empty");
    if (!project_index.emplace(id, static_cast<int>(i)).second) {
      error(id, "duplicate_id", "project listed twice");
    }
  }
  for (std::size_t i = 0; i < spec.supervisors.size(); ++i) {
    const auto& id = spec.supervisors[i].id;
    if (id.empty()) error(id, "empty_id", "supervisor id is empty");
    if (!supervisor_index.emplace(id, static_cast<int>(i)).second) {
      error(id, "duplicate_id", "supervisor listed twice");
    }
  }

  Instance inst;
  inst.applicant_ids_ = spec.applicants;
  inst.applicant_prefs_.assign(spec.applicants.size(), {});

  for (const auto& [applicant, prefs] : spec.applicant_prefs) {
    auto it = applicant_index.find(applicant);
    if (it == applicant_index.end()) {
      error(applicant, "dangling_applicant", "preference list for unknown applicant");
      continue;
    }
    std::set<std::string> seen;
    auto& out = inst.applicant_prefs_[it->second];
    for (const auto& pid : prefs) {
      if (!seen.insert(pid).second) {
        error(applicant, "duplicate_preference", "project '" + pid + "' listed twice");
        continue;
      }
      auto pit = project_index.find(pid);
      if (pit == project_index.end()) {
        error(applicant, "dangling_project", "unknown project '" + pid + "'");
        continue;
      }
      out.push_back(pit->second);
    }
  }

  for (const auto& ps : spec.projects) {
    Instance::Project project{ps.id, 0, {}};
    if (ps.capacity < 0) {
      error(ps.id, "negative_capacity", "capacity " + std::to_string(ps.capacity));
    } else {
      project.capacity = static_cast<int>(ps.capacity);
    }
    std::set<std::string> seen;
    for (const auto& aid : ps.prefs) {
      if (!seen.insert(aid).second) {
        error(ps.id, "duplicate_preference", "applicant '" + aid + "' listed twice");
        continue;
      }
      auto ait = applicant_index.find(aid);
      if (ait == applicant_index.end()) {
        error(ps.id, "dangling_applicant", "unknown applicant '" + aid + "'");
        continue;
      }
      project.prefs.push_back(ait->second);
    }
    inst.projects_.push_back(std::move(project));
  }

  std::vector<bool> supervised(spec.projects.size(), false);
  for (const auto& ss : spec.supervisors) {
    Instance::Supervisor sup{ss.id, ss.budget, {}};
    if (ss.budget < 0) error(ss.id, "negative_budget", "budget " + to_string(ss.budget));
    std::set<std::string> seen;
    for (const auto& pid : ss.projects) {
      if (!seen.insert(pid).second) {
        error(ss.id, "duplicate_supervised_project", "project '" + pid + "' listed twice");
        continue;
      }
      auto pit = project_index.find(pid);
      if (pit == project_index.end()) {
        error(ss.id, "dangling_project", "unknown project '" + pid + "'");
        continue;
      }
      sup.projects.push_back(pit->second);
      supervised[pit->second] = true;
    }
    inst.supervisors_.push_back(std::move(sup));
  }

  for (std::size_t p = 0; p < spec.projects.size(); ++p) {
    if (!supervised[p]) {
      result.warnings.push_back(
          {spec.projects[p].id, "unsupervised_project", "project has no supervisor"});
    }
  }

  if (result.errors.empty()) {
    inst.build_tables();
    result.instance = std::move(inst);
  }
  return result;
}

Instance embed_reg(const RegionalInstance& reg) {
  std::vector<Violation> errors;
  std::map<std::string, std::string> owner;
  std::set<std::string> hospital_ids;
  for (const auto& h : reg.hospitals) hospital_ids.insert(h.id);

  for (const auto& region : reg.regions) {
    if (region.quota < 0) {
      errors.push_back({region.id, "negative_budget", "quota " + std::to_string(region.quota)});
    }
    for (const auto& h : region.hospitals) {
      if (!hospital_ids.count(h)) {
        errors.push_back({region.id, "dangling_project", "unknown hospital '" + h + "'"});
        continue;
      }
      auto [it, inserted] = owner.emplace(h, region.id);
      if (!inserted) {
        errors.push_back({h, "overlapping_regions",
                          "hospital in regions '" + it->second + "' and '" + region.id + "'"});
      }
    }
  }
  for (const auto& h : reg.hospitals) {
    if (!owner.count(h.id)) {
      errors.push_back({h.id, "uncovered_hospital", "hospital belongs to no region"});
    }
  }
  if (!errors.empty()) throw ValidationError(std::move(errors));

  InstanceSpec spec;
  spec.applicants = reg.residents;
  spec.projects = reg.hospitals;
  spec.applicant_prefs = reg.resident_prefs;
  for (const auto& region : reg.regions) {
    spec.supervisors.push_back({region.id, Rational(region.quota), region.hospitals});
  }
  return Instance::from_spec(spec);
}

}  // namespace cutoffmatch
