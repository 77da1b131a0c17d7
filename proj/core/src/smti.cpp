#include "cutoffmatch/smti.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "cutoffmatch/random_instance.hpp"

namespace cutoffmatch {

std::vector<std::string> smti_problems(const SmtiInstance& smti) {
  std::vector<std::string> problems;
  const int n_men = smti.num_men;
  const int n_women = smti.num_women();
  if (static_cast<int>(smti.men_prefs.size()) != n_men) problems.push_back("men_prefs size != num_men");
  if (static_cast<int>(smti.tied.size()) != n_women) problems.push_back("tied size != number of women");
  if (!problems.empty()) return problems;

  std::set<std::pair<int, int>> from_men;
  std::set<std::pair<int, int>> from_women;
  for (int u = 0; u < n_men; ++u) {
    std::set<int> seen;
    for (int w : smti.men_prefs[u]) {
      if (w < 0 || w >= n_women) {
        problems.push_back("man " + std::to_string(u) + " lists unknown woman");
      } else if (!seen.insert(w).second) {
        problems.push_back("man " + std::to_string(u) + " lists a woman twice");
      } else {
        from_men.insert({u, w});
      }
    }
  }
  for (int w = 0; w < n_women; ++w) {
    std::set<int> seen;
    for (int u : smti.women_prefs[w]) {
      if (u < 0 || u >= n_men) {
        problems.push_back("woman " + std::to_string(w) + " lists unknown man");
      } else if (!seen.insert(u).second) {
        problems.push_back("woman " + std::to_string(w) + " lists a man twice");
      } else {
        from_women.insert({u, w});
      }
    }
    if (smti.tied[w] && smti.women_prefs[w].size() != 2) {
      problems.push_back("tied woman " + std::to_string(w) + " must list exactly two men");
    }
  }
  if (from_men != from_women) problems.push_back("acceptability is not mutual");
  return problems;
}

namespace {

void require_valid(const SmtiInstance& smti) {
  const auto problems = smti_problems(smti);
  if (!problems.empty()) throw std::invalid_argument("malformed SMTI instance: " + problems.front());
}

std::string num(int i) { return std::to_string(i + 1); }

}  // namespace

Instance reduce_smti_strong(const SmtiInstance& smti) {
  require_valid(smti);
  InstanceSpec spec;
  const std::string star = "a_star";
  const std::string star_project = "gs_p1";

  // Applicant standing for woman w towards man u.
  auto applicant_for = [&](int w, int u) {
    if (!smti.tied[w]) return "aw" + num(w);
    return "g" + num(w) + (smti.women_prefs[w][0] == u ? "_a1" : "_a3");
  };

  for (int u = 0; u < smti.num_men; ++u) {
    ProjectSpec p{"pu" + num(u), 1, {}};
    for (int w : smti.men_prefs[u]) p.prefs.push_back(applicant_for(w, u));
    p.prefs.push_back(star);
    spec.projects.push_back(std::move(p));
    spec.supervisors.push_back({"su" + num(u), Rational(1), {"pu" + num(u)}});
  }

  for (int w = 0; w < smti.num_women(); ++w) {
    if (!smti.tied[w]) {
      const std::string a = "aw" + num(w);
      spec.applicants.push_back(a);
      auto& list = spec.applicant_prefs[a];
      for (int u : smti.women_prefs[w]) list.push_back("pu" + num(u));
      continue;
    }
    // Copy of the four-cycle gadget, hooked to the two tied men.
    const std::string g = "g" + num(w);
    const auto A = [&](int k) { return g + "_a" + std::to_string(k); };
    const auto P = [&](int k) { return g + "_p" + std::to_string(k); };
    for (int k = 1; k <= 4; ++k) spec.applicants.push_back(A(k));
    spec.applicant_prefs[A(1)] = {P(2), P(1), "pu" + num(smti.women_prefs[w][0])};
    spec.applicant_prefs[A(2)] = {P(3), P(2)};
    spec.applicant_prefs[A(3)] = {P(4), P(3), "pu" + num(smti.women_prefs[w][1])};
    spec.applicant_prefs[A(4)] = {P(1), P(4)};
    spec.projects.push_back({P(1), 1, {A(1), A(4)}});
    spec.projects.push_back({P(2), 1, {A(2), A(1)}});
    spec.projects.push_back({P(3), 1, {A(3), A(2)}});
    spec.projects.push_back({P(4), 1, {A(4), A(3)}});
    spec.supervisors.push_back({g + "_s1", Rational(1), {P(1), P(3)}});
    spec.supervisors.push_back({g + "_s2", Rational(1), {P(2)}});
    spec.supervisors.push_back({g + "_s3", Rational(1), {P(4)}});
  }

  // Unsolvable two-applicant block, rescued by a_star taking gs_p1.
  spec.applicants.insert(spec.applicants.end(), {"gs_a1", "gs_a2", star});
  spec.applicant_prefs["gs_a1"] = {"gs_p2", "gs_p1"};
  spec.applicant_prefs["gs_a2"] = {"gs_p1", "gs_p2"};
  spec.projects.push_back({star_project, 1, {star, "gs_a1", "gs_a2"}});
  spec.projects.push_back({"gs_p2", 1, {"gs_a2", "gs_a1"}});
  spec.supervisors.push_back({"gs_s", Rational(1), {star_project, "gs_p2"}});
  auto& star_list = spec.applicant_prefs[star];
  for (int u = 0; u < smti.num_men; ++u) star_list.push_back("pu" + num(u));
  star_list.push_back(star_project);

  return Instance::from_spec(spec);
}

MaxsizeReduction reduce_smti_maxsize(const SmtiInstance& smti) {
  require_valid(smti);
  InstanceSpec spec;
  for (int u = 0; u < smti.num_men; ++u) spec.applicants.push_back("a" + num(u));

  for (int w = 0; w < smti.num_women(); ++w) {
    const auto& list = smti.women_prefs[w];
    if (!smti.tied[w]) {
      ProjectSpec p{"pw" + num(w), 1, {}};
      for (int u : list) p.prefs.push_back("a" + num(u));
      spec.projects.push_back(std::move(p));
      spec.supervisors.push_back({"sw" + num(w), Rational(1), {"pw" + num(w)}});
      continue;
    }
    const std::string first = "a" + num(list[0]);
    const std::string second = "a" + num(list[1]);
    spec.projects.push_back({"pw" + num(w) + "_1", 1, {first, second}});
    spec.projects.push_back({"pw" + num(w) + "_2", 1, {second, first}});
    spec.supervisors.push_back({"sw" + num(w), Rational(1), {"pw" + num(w) + "_1", "pw" + num(w) + "_2"}});
  }

  for (int u = 0; u < smti.num_men; ++u) {
    auto& out = spec.applicant_prefs["a" + num(u)];
    for (int w : smti.men_prefs[u]) {
      if (!smti.tied[w]) {
        out.push_back("pw" + num(w));
      } else if (smti.women_prefs[w][0] == u) {
        out.push_back("pw" + num(w) + "_2");
        out.push_back("pw" + num(w) + "_1");
      } else {
        out.push_back("pw" + num(w) + "_1");
        out.push_back("pw" + num(w) + "_2");
      }
    }
  }
  return {Instance::from_spec(spec), 0};
}

namespace {

struct SmtiSearch {
  const SmtiInstance& smti;
  std::vector<int> wife;     // per man, -1 if single
  std::vector<int> husband;  // per woman
  SmtiBruteforce result;

  int woman_rank(int w, int u) const {
    const auto& list = smti.women_prefs[w];
    auto it = std::find(list.begin(), list.end(), u);
    return it == list.end() ? -1 : static_cast<int>(it - list.begin());
  }

  bool man_prefers(int u, int w, int current) const {
    if (current < 0) return true;
    const auto& list = smti.men_prefs[u];
    return std::find(list.begin(), list.end(), w) < std::find(list.begin(), list.end(), current);
  }

  bool woman_prefers(int w, int u) const {
    const int current = husband[w];
    if (current < 0) return true;
    if (smti.tied[w]) return false;
    return woman_rank(w, u) < woman_rank(w, current);
  }

  bool weakly_stable() const {
    for (int u = 0; u < smti.num_men; ++u) {
      for (int w : smti.men_prefs[u]) {
        if (w == wife[u]) break;
        if (man_prefers(u, w, wife[u]) && woman_prefers(w, u)) return false;
      }
    }
    return true;
  }

  void extend(int u) {
    if (u == smti.num_men) {
      if (!weakly_stable()) return;
      ++result.weakly_stable_count;
      std::size_t size = 0;
      for (int w : wife) size += w >= 0 ? 1 : 0;
      result.max_size = std::max(result.max_size, size);
      if (size == static_cast<std::size_t>(smti.num_men) &&
          size == static_cast<std::size_t>(smti.num_women())) {
        result.has_complete = true;
      }
      return;
    }
    for (int w : smti.men_prefs[u]) {
      if (husband[w] >= 0) continue;
      wife[u] = w;
      husband[w] = u;
      extend(u + 1);
      wife[u] = -1;
      husband[w] = -1;
    }
    extend(u + 1);
  }
};

}  // namespace

SmtiBruteforce smti_weakly_stable_bruteforce(const SmtiInstance& smti, int max_men) {
  require_valid(smti);
  if (smti.num_men > max_men) {
    throw std::invalid_argument("SMTI brute force limited to " + std::to_string(max_men) + " men");
  }
  SmtiSearch search{smti, std::vector<int>(smti.num_men, -1),
                    std::vector<int>(smti.num_women(), -1), {}};
  search.extend(0);
  return search.result;
}

SmtiInstance random_smti(int n, std::uint64_t seed) {
  if (n < 0) throw std::invalid_argument("negative size");
  PortableRng rng(seed);
  SmtiInstance smti;
  smti.num_men = n;
  smti.men_prefs.assign(n, {});
  smti.women_prefs.assign(n, {});
  smti.tied.assign(n, false);
  for (int w = 0; w < n; ++w) {
    if (n >= 2 && rng.chance(Rational(1, 2))) {
      smti.tied[w] = true;
      const int first = static_cast<int>(rng.below(n));
      int second = static_cast<int>(rng.below(n - 1));
      if (second >= first) ++second;
      smti.women_prefs[w] = {first, second};
    } else {
      for (int u = 0; u < n; ++u) {
        if (rng.chance(Rational(1, 2))) smti.women_prefs[w].push_back(u);
      }
      rng.shuffle(smti.women_prefs[w]);
    }
    for (int u : smti.women_prefs[w]) smti.men_prefs[u].push_back(w);
  }
  for (auto& list : smti.men_prefs) rng.shuffle(list);
  return smti;
}

}  // namespace cutoffmatch
