#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cutoffmatch/instance.hpp"
#include "cutoffmatch/matching.hpp"
#include "cutoffmatch/rational.hpp"

namespace cutoffmatch {

struct FlowArc {
  int from = 0;
  int to = 0;
  Rational capacity;
};

// Funding flow graph of a matching. Node layout: source 0, supervisors
// 1..|S|, projects |S|+1..|S|+|P|, sink |S|+|P|+1. Supervisor->project arcs
// are uncapacitated in principle; they carry the total budget, which no
// feasible flow can exceed.
struct FundingFlowGraph {
  int num_supervisors = 0;
  int num_projects = 0;
  std::vector<FlowArc> arcs;
  // For each arc of kind supervisor->project, the (s, p) it represents.
  std::vector<std::pair<int, int>> supervision_of_arc;

  int source() const { return 0; }
  int sink() const { return num_supervisors + num_projects + 1; }
  int supervisor_node(int s) const { return 1 + s; }
  int project_node(int p) const { return 1 + num_supervisors + p; }
  int num_nodes() const { return num_supervisors + num_projects + 2; }
};

// Graph for the given per-project matched counts.
FundingFlowGraph build_flow_graph(const Instance& inst, std::span<const int> counts);
// Throws std::invalid_argument if `m` is not a valid matching of `inst`.
FundingFlowGraph build_flow_graph(const Instance& inst, const Matching& m);

struct MaxFlowResult {
  Rational value;
  std::vector<Rational> arc_flow;  // parallel to graph.arcs
};

// Shortest augmenting paths (Edmonds-Karp) over exact rationals. With
// integral capacities the returned flow is integral.
MaxFlowResult max_flow(const FundingFlowGraph& graph);

// Capacity of the cut separating nodes reachable from the source in the
// residual graph of `flow`. Equals flow.value iff the flow is maximum.
Rational residual_cut_capacity(const FundingFlowGraph& graph, const MaxFlowResult& flow);

// x_{s,p} keyed by (supervisor, project); absent keys mean 0.
using FundingAllocation = std::map<std::pair<int, int>, Rational>;

struct FeasibilityCheck {
  bool feasible = false;
  std::optional<FundingAllocation> allocation;  // positive entries only
};

// Feasible iff the max flow saturates all sink arcs.
// Invalid matchings (acceptability, capacity) are reported infeasible.
FeasibilityCheck check_feasibility(const Instance& inst, const Matching& m);
FeasibilityCheck check_counts_feasibility(const Instance& inst, std::span<const int> counts);

// Direct check of the three allocation conditions (non-negativity, exact
// project funding, supervisor budgets).
bool is_feasible_allocation(const Instance& inst, std::span<const int> counts,
                            const FundingAllocation& allocation);

// Graphviz rendering, optionally annotated with flow values.
std::string to_dot(const Instance& inst, const FundingFlowGraph& graph,
                   const MaxFlowResult* flow = nullptr);

}  // namespace cutoffmatch
