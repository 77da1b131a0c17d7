#pragma once

#include <algorithm>
#include <functional>
#include <initializer_list>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cutoffmatch/instance.hpp"
#include "cutoffmatch/matching.hpp"
#include "cutoffmatch/smti.hpp"

namespace cutoffmatch::testing {

inline Matching by_ids(const Instance& inst,
                       std::initializer_list<std::pair<const char*, const char*>> pairs) {
  Matching m(inst.num_applicants());
  for (const auto& [a, p] : pairs) m.assign(*inst.find_applicant(a), *inst.find_project(p));
  return m;
}

inline std::set<std::string> described(const Instance& inst, const std::vector<Matching>& ms) {
  std::set<std::string> out;
  for (const auto& m : ms) out.insert(describe(inst, m));
  return out;
}

// Exhaustive restricted SMTI instances with n men and n women: every woman is
// strict or ties two men; men's orders follow from a permutation choice.
inline void for_each_smti(int n, const std::function<void(const SmtiInstance&)>& visit) {
  // woman lists: subsets (strict, any order) or a tied pair
  std::vector<std::vector<std::pair<std::vector<int>, bool>>> options(n);
  for (int w = 0; w < n; ++w) {
    for (int mask = 0; mask < (1 << n); ++mask) {
      std::vector<int> list;
      for (int u = 0; u < n; ++u) if (mask & (1 << u)) list.push_back(u);
      do {
        options[w].push_back({list, false});
      } while (std::next_permutation(list.begin(), list.end()));
      if (list.size() == 2) options[w].push_back({list, true});
    }
  }
  std::vector<std::size_t> pick(n, 0);
  while (true) {
    SmtiInstance base;
    base.num_men = n;
    base.men_prefs.assign(n, {});
    for (int w = 0; w < n; ++w) {
      base.women_prefs.push_back(options[w][pick[w]].first);
      base.tied.push_back(options[w][pick[w]].second);
      for (int u : base.women_prefs.back()) base.men_prefs[u].push_back(w);
    }
    // every ordering of every man's list
    std::function<void(int, SmtiInstance&)> orders = [&](int u, SmtiInstance& s) {
      if (u == n) {
        visit(s);
        return;
      }
      auto& list = s.men_prefs[u];
      std::sort(list.begin(), list.end());
      do {
        orders(u + 1, s);
      } while (std::next_permutation(list.begin(), list.end()));
    };
    orders(0, base);
    int w = 0;
    while (w < n && ++pick[w] == options[w].size()) pick[w++] = 0;
    if (w == n) break;
  }
}

}  // namespace cutoffmatch::testing
