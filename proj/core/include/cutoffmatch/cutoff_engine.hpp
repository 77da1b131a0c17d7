#pragma once

#include <span>
#include <string>
#include <vector>

#include "cutoffmatch/feasibility.hpp"
#include "cutoffmatch/instance.hpp"
#include "cutoffmatch/matching.hpp"

namespace cutoffmatch {

// One applied cutoff decrement.
struct TraceStep {
  int project = kUnmatched;
  int new_cutoff = 0;
  int admitted = kUnmatched;  // applicant whose score equals the new cutoff
  bool moved = false;         // admitted applicant switched to `project`
  std::size_t matching_size = 0;
  std::size_t feasibility_calls = 0;  // cumulative
};

struct EngineTrace {
  std::vector<TraceStep> steps;
  std::size_t feasibility_calls = 0;
};

struct EngineOptions {
  // Re-induce the full matching from the cutoffs after every step and compare
  // with the incrementally maintained one. Throws std::logic_error on mismatch.
  bool cross_check = false;
};

struct EngineResult {
  Matching matching;
  CutoffVector cutoffs;
  EngineTrace trace;
};

// Cutoff-decreasing algorithm. Starts from cutoffs |A|+1 (empty matching)
// and repeatedly lowers the cutoff of the first project in `order` whose
// decrement keeps the induced matching valid and feasible, until no project
// can be lowered. The result is cutoff stable and its cutoffs are minimal.
//
// `order` must be a permutation of the projects; empty means index order.
// Throws std::invalid_argument otherwise.
EngineResult solve_cutoff_stable(const Instance& inst, const FeasibilityFunction& f,
                                 std::span<const int> order = {}, EngineOptions options = {});
EngineResult solve_cutoff_stable(const Instance& inst, std::span<const int> order = {},
                                 EngineOptions options = {});

std::size_t count_feasibility_calls(const EngineTrace& trace);

// (|A|+1) * |P|^2: at most (|A|+1)|P| decrements, each preceded by at most
// |P| probes.
std::size_t feasibility_call_bound(const Instance& inst);

// One JSON object per line.
std::string trace_to_jsonl(const Instance& inst, const EngineTrace& trace);

}  // namespace cutoffmatch
