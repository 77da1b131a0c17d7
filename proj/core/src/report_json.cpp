#include "cutoffmatch/report_json.hpp"

#include <cstdio>

#include "cutoffmatch/instance_json.hpp"

namespace cutoffmatch {

Json rational_json(const Rational& value) { return to_string(value); }

Json matching_json(const Instance& inst, const Matching& m) {
  Json pairs = Json::array();
  for (const auto& [a, p] : m.pairs()) {
    pairs.push_back({{"applicant", inst.applicant_id(a)}, {"project", inst.project(p).id}});
  }
  return {{"size", m.size()}, {"pairs", std::move(pairs)}};
}

Json cutoffs_json(const Instance& inst, const CutoffVector& d) {
  Json out = Json::object();
  for (int p = 0; p < inst.num_projects(); ++p) out[inst.project(p).id] = d[p];
  return out;
}

Json allocation_json(const Instance& inst, const FundingAllocation& allocation) {
  Json out = Json::array();
  for (const auto& [sp, x] : allocation) {
    out.push_back({{"supervisor", inst.supervisor(sp.first).id},
                   {"project", inst.project(sp.second).id},
                   {"x", rational_json(x)}});
  }
  return out;
}

Json verdict_json(const Instance& inst, const StabilityVerdict& verdict) {
  Json witnesses = Json::array();
  for (const auto& w : verdict.witnesses) {
    witnesses.push_back(
        {{"applicant", w.applicant == kUnmatched ? Json(nullptr) : Json(inst.applicant_id(w.applicant))},
         {"project", w.project == kUnmatched ? Json(nullptr) : Json(inst.project(w.project).id)},
         {"reason", w.reason}});
  }
  return {{"level", std::string(to_string(verdict.level))},
          {"feasible", verdict.feasible},
          {"fair", verdict.fair},
          {"weakly_stable", verdict.weakly_stable},
          {"cutoff_stable", verdict.cutoff_stable},
          {"strongly_stable", verdict.strongly_stable},
          {"witnesses", std::move(witnesses)},
          {"feasibility_calls", verdict.feasibility_calls}};
}

Json allocation_report_json(const Instance& inst, const EgalitarianResult& result) {
  Json pairs = Json::array();
  for (const auto& e : result.pairs) {
    pairs.push_back({{"supervisor", inst.supervisor(e.supervisor).id},
                     {"project", inst.project(e.project).id},
                     {"x", rational_json(e.x)},
                     {"target", rational_json(e.target)},
                     {"ratio", rational_json(e.ratio)},
                     {"round_fixed", e.round_fixed}});
  }
  Json ratios = Json::array();
  for (const auto& r : result.ratios) ratios.push_back(rational_json(r));
  Json lambdas = Json::array();
  for (const auto& l : result.round_lambda) lambdas.push_back(rational_json(l));
  return {{"pairs", std::move(pairs)},
          {"ratios", std::move(ratios)},
          {"round_lambda", std::move(lambdas)},
          {"tight_sizes", result.tight_sizes},
          {"lp_solves", result.lp_solves}};
}

std::string instance_digest(const Instance& inst) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : instance_to_json(inst)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace cutoffmatch
