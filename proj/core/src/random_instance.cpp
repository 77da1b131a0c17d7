#include "cutoffmatch/random_instance.hpp"

#include <algorithm>
#include <stdexcept>

namespace cutoffmatch {

std::uint64_t PortableRng::below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("empty range");
  const std::uint64_t limit = engine_.max() - engine_.max() % n;
  for (;;) {
    const std::uint64_t v = engine_();
    if (v < limit) return v % n;
  }
}

long PortableRng::between(long lo, long hi) {
  if (hi < lo) throw std::invalid_argument("empty range");
  return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

bool PortableRng::chance(const Rational& p) {
  const mpz_class& den = p.get_den();
  const mpz_class& num = p.get_num();
  if (!den.fits_ulong_p()) throw std::invalid_argument("probability denominator too large");
  return mpz_class(below(den.get_ui())) < num;
}

InstanceSpec random_instance_spec(const RandomInstanceParams& params, std::uint64_t seed) {
  if (params.density <= 0 || params.density > 1) {
    throw std::invalid_argument("density must lie in (0, 1]");
  }
  if (params.applicants < 0 || params.projects < 0 || params.supervisors < 0) {
    throw std::invalid_argument("sizes must be non-negative");
  }
  if (params.min_budget < 0 || params.max_budget < params.min_budget) {
    throw std::invalid_argument("bad budget range");
  }
  if (params.min_capacity < 0 || params.max_capacity < params.min_capacity) {
    throw std::invalid_argument("bad capacity range");
  }

  PortableRng rng(seed);
  InstanceSpec spec;
  for (int a = 0; a < params.applicants; ++a) spec.applicants.push_back("a" + std::to_string(a + 1));

  std::vector<std::vector<int>> accepted_by(params.projects);  // applicants per project
  std::vector<std::vector<int>> accepts(params.applicants);    // projects per applicant
  for (int a = 0; a < params.applicants; ++a) {
    for (int p = 0; p < params.projects; ++p) {
      if (rng.chance(params.density)) {
        accepted_by[p].push_back(a);
        accepts[a].push_back(p);
      }
    }
  }

  for (int p = 0; p < params.projects; ++p) {
    ProjectSpec project;
    project.id = "p" + std::to_string(p + 1);
    project.capacity = rng.between(params.min_capacity, params.max_capacity);
    rng.shuffle(accepted_by[p]);
    for (int a : accepted_by[p]) project.prefs.push_back(spec.applicants[a]);
    spec.projects.push_back(std::move(project));
  }
  for (int a = 0; a < params.applicants; ++a) {
    rng.shuffle(accepts[a]);
    auto& list = spec.applicant_prefs[spec.applicants[a]];
    for (int p : accepts[a]) list.push_back(spec.projects[p].id);
  }

  Rational scale = params.integer_budgets ? Rational(1) : Rational(100);
  const long lo = ceil(Rational(params.min_budget * scale)).get_num().get_si();
  const long hi = floor(Rational(params.max_budget * scale)).get_num().get_si();
  if (hi < lo) throw std::invalid_argument("budget range contains no admissible value");
  for (int s = 0; s < params.supervisors; ++s) {
    SupervisorSpec sup;
    sup.id = "s" + std::to_string(s + 1);
    sup.budget = Rational(rng.between(lo, hi)) / scale;
    spec.supervisors.push_back(std::move(sup));
  }
  if (params.supervisors > 0) {
    const int most = std::max(1, std::min(params.max_supervisors_per_project, params.supervisors));
    std::vector<int> pool(params.supervisors);
    for (int s = 0; s < params.supervisors; ++s) pool[s] = s;
    for (int p = 0; p < params.projects; ++p) {
      const int k = static_cast<int>(rng.between(1, most));
      rng.shuffle(pool);
      std::vector<int> chosen(pool.begin(), pool.begin() + k);
      std::sort(chosen.begin(), chosen.end());
      for (int s : chosen) spec.supervisors[s].projects.push_back(spec.projects[p].id);
    }
  }
  return spec;
}

Instance random_instance(const RandomInstanceParams& params, std::uint64_t seed) {
  return Instance::from_spec(random_instance_spec(params, seed));
}

Matching random_valid_matching(const Instance& inst, PortableRng& rng) {
  Matching m(inst.num_applicants());
  std::vector<int> load(inst.num_projects(), 0);
  for (int a = 0; a < inst.num_applicants(); ++a) {
    std::vector<int> options;
    for (int p : inst.applicant_prefs(a)) {
      if (inst.acceptable_to_project(p, a)) options.push_back(p);
    }
    const auto pick = rng.below(options.size() + 1);
    if (pick == options.size()) continue;
    const int p = options[pick];
    if (load[p] < inst.capacity(p)) {
      m.assign(a, p);
      ++load[p];
    }
  }
  return m;
}

}  // namespace cutoffmatch
