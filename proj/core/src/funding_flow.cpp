#include "cutoffmatch/funding_flow.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace cutoffmatch {
namespace {

// Residual adjacency: for each node, (arc index, forward?) entries.
struct ResidualEdge {
  int arc;
  bool forward;
};

std::vector<std::vector<ResidualEdge>> residual_adjacency(const FundingFlowGraph& g) {
  std::vector<std::vector<ResidualEdge>> adj(g.num_nodes());
  for (int i = 0; i < static_cast<int>(g.arcs.size()); ++i) {
    adj[g.arcs[i].from].push_back({i, true});
    adj[g.arcs[i].to].push_back({i, false});
  }
  return adj;
}

Rational residual(const FundingFlowGraph& g, const std::vector<Rational>& flow, ResidualEdge e) {
  return e.forward ? Rational(g.arcs[e.arc].capacity - flow[e.arc]) : flow[e.arc];
}

int other_end(const FundingFlowGraph& g, ResidualEdge e) {
  return e.forward ? g.arcs[e.arc].to : g.arcs[e.arc].from;
}

}  // namespace

FundingFlowGraph build_flow_graph(const Instance& inst, std::span<const int> counts) {
  if (static_cast<int>(counts.size()) != inst.num_projects()) {
    throw std::invalid_argument("count vector size does not match project count");
  }
  FundingFlowGraph g;
  g.num_supervisors = inst.num_supervisors();
  g.num_projects = inst.num_projects();
  const Rational unbounded = inst.total_budget();

  for (int s = 0; s < inst.num_supervisors(); ++s) {
    g.arcs.push_back({g.source(), g.supervisor_node(s), inst.supervisor(s).budget});
    g.supervision_of_arc.emplace_back(-1, -1);
  }
  for (int s = 0; s < inst.num_supervisors(); ++s) {
    for (int p : inst.supervisor(s).projects) {
      g.arcs.push_back({g.supervisor_node(s), g.project_node(p), unbounded});
      g.supervision_of_arc.emplace_back(s, p);
    }
  }
  for (int p = 0; p < inst.num_projects(); ++p) {
    g.arcs.push_back({g.project_node(p), g.sink(), Rational(counts[p])});
    g.supervision_of_arc.emplace_back(-1, -1);
  }
  return g;
}

FundingFlowGraph build_flow_graph(const Instance& inst, const Matching& m) {
  if (!is_valid_matching(inst, m)) throw std::invalid_argument("invalid matching");
  const auto counts = m.counts(inst.num_projects());
  return build_flow_graph(inst, counts);
}

MaxFlowResult max_flow(const FundingFlowGraph& g) {
  MaxFlowResult result{Rational(0), std::vector<Rational>(g.arcs.size(), Rational(0))};
  const auto adj = residual_adjacency(g);
  const int n = g.num_nodes();

  for (;;) {
    std::vector<int> parent_edge(n, -1);
    std::vector<ResidualEdge> via(n, {-1, true});
    std::vector<bool> seen(n, false);
    std::deque<int> queue{g.source()};
    seen[g.source()] = true;
    while (!queue.empty() && !seen[g.sink()]) {
      const int u = queue.front();
      queue.pop_front();
      for (const auto& e : adj[u]) {
        const int v = other_end(g, e);
        if (seen[v] || residual(g, result.arc_flow, e) <= 0) continue;
        seen[v] = true;
        via[v] = e;
        parent_edge[v] = u;
        queue.push_back(v);
      }
    }
    if (!seen[g.sink()]) break;

    Rational bottleneck = residual(g, result.arc_flow, via[g.sink()]);
    for (int v = g.sink(); v != g.source(); v = parent_edge[v]) {
      const Rational r = residual(g, result.arc_flow, via[v]);
      if (r < bottleneck) bottleneck = r;
    }
    for (int v = g.sink(); v != g.source(); v = parent_edge[v]) {
      const auto e = via[v];
      if (e.forward) {
        result.arc_flow[e.arc] += bottleneck;
      } else {
        result.arc_flow[e.arc] -= bottleneck;
      }
    }
    result.value += bottleneck;
  }
  return result;
}

Rational residual_cut_capacity(const FundingFlowGraph& g, const MaxFlowResult& flow) {
  const auto adj = residual_adjacency(g);
  std::vector<bool> reach(g.num_nodes(), false);
  std::deque<int> queue{g.source()};
  reach[g.source()] = true;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (const auto& e : adj[u]) {
      const int v = other_end(g, e);
      if (!reach[v] && residual(g, flow.arc_flow, e) > 0) {
        reach[v] = true;
        queue.push_back(v);
      }
    }
  }
  Rational cut = 0;
  for (const auto& arc : g.arcs) {
    if (reach[arc.from] && !reach[arc.to]) cut += arc.capacity;
  }
  return cut;
}

FeasibilityCheck check_counts_feasibility(const Instance& inst, std::span<const int> counts) {
  const auto graph = build_flow_graph(inst, counts);
  long demand = 0;
  for (int c : counts) demand += c;
  if (demand == 0) return {true, FundingAllocation{}};

  const auto flow = max_flow(graph);
  if (flow.value != demand) return {false, std::nullopt};

  FundingAllocation allocation;
  for (std::size_t i = 0; i < graph.arcs.size(); ++i) {
    const auto [s, p] = graph.supervision_of_arc[i];
    if (s >= 0 && flow.arc_flow[i] > 0) allocation[{s, p}] = flow.arc_flow[i];
  }
  return {true, std::move(allocation)};
}

FeasibilityCheck check_feasibility(const Instance& inst, const Matching& m) {
  if (!is_valid_matching(inst, m)) return {false, std::nullopt};
  const auto counts = m.counts(inst.num_projects());
  return check_counts_feasibility(inst, counts);
}

bool is_feasible_allocation(const Instance& inst, std::span<const int> counts,
                            const FundingAllocation& allocation) {
  std::vector<Rational> funded(inst.num_projects(), Rational(0));
  std::vector<Rational> spent(inst.num_supervisors(), Rational(0));
  for (const auto& [key, amount] : allocation) {
    const auto [s, p] = key;
    if (s < 0 || s >= inst.num_supervisors() || p < 0 || p >= inst.num_projects()) return false;
    const auto& supervised = inst.supervisor(s).projects;
    if (std::find(supervised.begin(), supervised.end(), p) == supervised.end()) return false;
    if (amount < 0) return false;
    funded[p] += amount;
    spent[s] += amount;
  }
  for (int p = 0; p < inst.num_projects(); ++p) {
    if (funded[p] != counts[p]) return false;
  }
  for (int s = 0; s < inst.num_supervisors(); ++s) {
    if (spent[s] > inst.supervisor(s).budget) return false;
  }
  return true;
}

std::string to_dot(const Instance& inst, const FundingFlowGraph& g, const MaxFlowResult* flow) {
  auto name = [&](int node) -> std::string {
    if (node == g.source()) return "\"s*\"";
    if (node == g.sink()) return "\"t*\"";
    if (node <= g.num_supervisors) return "\"" + inst.supervisor(node - 1).id + "\"";
    return "\"" + inst.project(node - 1 - g.num_supervisors).id + "\"";
  };
  std::string out = "digraph funding_flow {\n  rankdir=LR;\n";
  for (std::size_t i = 0; i < g.arcs.size(); ++i) {
    const auto& arc = g.arcs[i];
    const bool uncapped = g.supervision_of_arc[i].first >= 0;
    std::string label = uncapped ? "inf" : to_string(arc.capacity);
    if (flow != nullptr) label = to_string(flow->arc_flow[i]) + " / " + label;
    out += "  " + name(arc.from) + " -> " + name(arc.to) + " [label=\"" + label + "\"];\n";
  }
  return out + "}\n";
}

}  // namespace cutoffmatch
