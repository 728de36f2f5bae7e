#include "twoclub/edit.hpp"

#include <algorithm>
#include <set>

namespace twoclub {

std::string to_string(Problem p) {
  return p == Problem::kSplitsOnly ? "2ccvs" : "2ccedvs";
}

namespace {

std::vector<int> sorted_unique(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

Graph apply_split(const Graph& g, const SplitOp& op, bool exclusive,
                  int* new_id) {
  const int n = g.n();
  if (op.v < 0 || op.v >= n) throw std::invalid_argument("split: vertex out of range");
  std::vector<int> keep = sorted_unique(op.keep);
  std::vector<int> off = sorted_unique(op.off);
  std::vector<int> uni;
  std::set_union(keep.begin(), keep.end(), off.begin(), off.end(),
                 std::back_inserter(uni));
  if (uni != g.adj[op.v])
    throw std::invalid_argument("split: keep and off do not cover N(v) exactly");
  if (exclusive) {
    std::vector<int> inter;
    std::set_intersection(keep.begin(), keep.end(), off.begin(), off.end(),
                          std::back_inserter(inter));
    if (!inter.empty())
      throw std::invalid_argument("split: overlapping sides in exclusive mode");
  }

  Graph h = g;
  const int copy = n;
  h.adj.emplace_back();
  h.label.push_back(g.label[op.v]);
  // rewire v to keep, attach the copy to off
  for (int w : g.adj[op.v]) {
    bool in_keep = std::binary_search(keep.begin(), keep.end(), w);
    if (!in_keep) remove_edge(h, op.v, w);
  }
  for (int w : off) add_edge(h, copy, w);
  if (new_id) *new_id = copy;
  return h;
}

}  // namespace

Graph apply_op(const Graph& g, const EditOp& op, bool exclusive, int* new_id) {
  if (new_id) *new_id = -1;
  if (const auto* del = std::get_if<DeleteEdgeOp>(&op)) {
    if (del->u < 0 || del->u >= g.n() || del->v < 0 || del->v >= g.n())
      throw std::invalid_argument("delete: vertex out of range");
    if (!has_edge(g, del->u, del->v))
      throw std::invalid_argument("delete: edge not present");
    Graph h = g;
    remove_edge(h, del->u, del->v);
    return h;
  }
  return apply_split(g, std::get<SplitOp>(op), exclusive, new_id);
}

Graph apply_script(const Graph& g, const EditScript& script, bool exclusive) {
  Graph h = g;
  for (std::size_t i = 0; i < script.ops.size(); ++i) {
    try {
      h = apply_op(h, script.ops[i], exclusive);
    } catch (const std::invalid_argument& e) {
      throw ApplyError(static_cast<int>(i), e.what());
    }
  }
  return h;
}

VerifyReport verify_script(const Graph& g, const EditScript& script,
                           int budget, bool exclusive) {
  VerifyReport report;
  report.cost = script.cost();
  report.within_budget = report.cost <= budget;
  report.splits_only_ok = true;
  if (script.problem == Problem::kSplitsOnly) {
    for (const auto& op : script.ops)
      if (std::holds_alternative<DeleteEdgeOp>(op)) report.splits_only_ok = false;
  }
  Graph h = g;
  report.ops_valid = true;
  for (std::size_t i = 0; i < script.ops.size(); ++i) {
    int copy = -1;
    try {
      h = apply_op(h, script.ops[i], exclusive, &copy);
    } catch (const std::invalid_argument& e) {
      report.ops_valid = false;
      report.fail_index = static_cast<int>(i);
      report.fail_reason = e.what();
      break;
    }
    report.new_ids.push_back(copy);
  }
  if (report.ops_valid) {
    report.final_graph = h;
    report.two_club_graph = is_two_club_graph(h);
  }
  report.pass = report.ops_valid && report.within_budget &&
                report.splits_only_ok && report.two_club_graph;
  return report;
}

std::vector<std::vector<int>> label_components(const Graph& final_graph) {
  std::vector<std::vector<int>> out;
  for (const auto& comp : connected_components(final_graph)) {
    std::vector<int> labels;
    labels.reserve(comp.size());
    for (int v : comp) labels.push_back(final_graph.label[v]);
    out.push_back(sorted_unique(std::move(labels)));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace twoclub
