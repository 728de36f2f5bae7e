#pragma once

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "twoclub/graph.hpp"

namespace twoclub {

// 2ccvs allows vertex splits only; 2ccedvs allows edge deletions as well.
enum class Problem { kSplitsOnly, kDeletionsAndSplits };

std::string to_string(Problem p);

struct DeleteEdgeOp {
  int u, v;
};

// Replaces v by two copies: v keeps `keep`, the fresh vertex (id = vertex
// count at application time) gets `off`. keep and off must cover N(v); they
// may overlap unless the split is exclusive.
struct SplitOp {
  int v;
  std::vector<int> keep;
  std::vector<int> off;
};

using EditOp = std::variant<DeleteEdgeOp, SplitOp>;

struct EditScript {
  std::vector<EditOp> ops;
  Problem problem = Problem::kDeletionsAndSplits;

  int cost() const { return static_cast<int>(ops.size()); }
};

struct ApplyError : std::runtime_error {
  int op_index;
  ApplyError(int index, const std::string& what)
      : std::runtime_error(what), op_index(index) {}
};

// Applies one op; `new_id` (when non-null) receives the id of the copy
// created by a split, or -1 for a deletion.
Graph apply_op(const Graph& g, const EditOp& op, bool exclusive = false,
               int* new_id = nullptr);

// Left-to-right fold of apply_op; throws ApplyError with the index of the
// first failing op.
Graph apply_script(const Graph& g, const EditScript& script,
                   bool exclusive = false);

struct VerifyReport {
  bool ops_valid = false;
  int fail_index = -1;          // index of first failing op when !ops_valid
  std::string fail_reason;
  int cost = 0;
  bool within_budget = false;
  bool splits_only_ok = false;  // no deletions when the problem forbids them
  bool two_club_graph = false;
  bool pass = false;
  std::vector<int> new_ids;     // copy id assigned to each split, -1 otherwise
  Graph final_graph;
};

// Failures are report fields, never exceptions.
VerifyReport verify_script(const Graph& g, const EditScript& script,
                           int budget, bool exclusive = false);

// Label sets of the components of apply_script(g, script), deduplicated and
// sorted. Used to read solved graphs back in terms of original vertices.
std::vector<std::vector<int>> label_components(const Graph& final_graph);

}  // namespace twoclub
