#pragma once

// Incremental maintenance of the Top-k set under edge deletions.
//
// After a deletion only nodes that share a component with an endpoint can
// change score. When a bridge (a, b) splits a component into sides A and B,
// every node v in A loses exactly |B| * h(v) pairs, where h(v) counts the
// nodes of A cut off from a by removing v (v included), and symmetrically
// for B; one low-link DFS per side gives all the new scores. When the
// component survives intact only the cut vertices separating a deleted pair
// change, and just those are rescored from scratch. In literal mode every
// node sharing a component with an endpoint is rescored from scratch
// instead. The set is then repaired by an
// interchange loop that repeatedly takes the highest-scoring node w of a
// working residual graph: it stops once c(w) <= the lowest score among
// members the loop has not yet masked, otherwise it swaps w in for that
// member (unless w is a member already), masks w out of the residual and
// rescores w's old component. The residual is discarded afterwards; only the
// edge deletion persists.

#include <algorithm>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "shs/cut_vertices.hpp"
#include "shs/greedy.hpp"
#include "shs/score_index.hpp"

namespace shs {

struct AffectedSet {
  EdgeKind kind = EdgeKind::NonBridge;
  std::vector<NodeId> nodes;   // side_a followed by side_b
  std::vector<NodeId> side_a;  // reachable from a after the deletion
  std::vector<NodeId> side_b;  // reachable from b; empty unless kind is Bridge
};

/// Nodes whose score may change, computed on the graph *after* deleting
/// (a, b); `kind` is the classification from before the deletion.
inline AffectedSet affected_nodes(const Graph& g, NodeId a, NodeId b, EdgeKind kind, Workspace& ws) {
  AffectedSet out;
  out.kind = kind;
  out.side_a = reachable_from(g, a, ws);
  if (kind == EdgeKind::Bridge) out.side_b = reachable_from(g, b, ws);
  out.nodes = out.side_a;
  out.nodes.insert(out.nodes.end(), out.side_b.begin(), out.side_b.end());
  return out;
}

inline AffectedSet affected_nodes(const Graph& g, NodeId a, NodeId b, EdgeKind kind) {
  Workspace ws;
  return affected_nodes(g, a, b, kind, ws);
}

struct TrackerOptions {
  // rescore every node reachable from a deleted endpoint from scratch
  bool literal_rescoring = false;
};

/// Bookkeeping from the most recent update, for tests and reports.
struct UpdateStats {
  bool batch = false;
  EdgeKind kind = EdgeKind::NonBridge;  // single deletions only
  std::size_t affected = 0;
  std::size_t rescored = 0;       // from-scratch score computations
  std::size_t delta_updates = 0;  // closed-form bridge updates
  std::size_t unaffected_members = 0;  // k' : members outside the affected set
  std::size_t interchange_steps = 0;
  std::size_t evictions = 0;
  std::vector<NodeId> evicted;
};

class Tracker {
 public:
  /// Seeds the set with the greedy selection and scores every node.
  Tracker(Graph g, std::size_t k, TrackerOptions options = {}) : graph_(std::move(g)), options_(options) {
    topk_ = greedy_topk(graph_, k, ws_);
    components_ = connected_components(graph_, ws_);
    scores_.assign(graph_.node_count(), 0);
    for (NodeId v = 0; v < graph_.node_count(); ++v) {
      scores_[v] = pc_score_fast(graph_, components_, v, ws_);
    }
    index_.rebuild(scores_);
  }

  const Graph& graph() const { return graph_; }
  const TopKSet& topk() const { return topk_; }
  const ScoreTable& scores() const { return scores_; }
  const ComponentLabeling& components() const { return components_; }
  const UpdateStats& last_update() const { return stats_; }

  /// Current maximum of the score index (full graph, no residual masking).
  std::optional<Selection> score_max() {
    return index_.top([&](NodeId v, PairCount s) { return scores_[v] == s; });
  }

  /// Deletes (a, b) and repairs the set. Throws UpdateError, leaving the
  /// state untouched, when the edge does not exist.
  const TopKSet& delete_edge(NodeId a, NodeId b) {
    if (!graph_.has_edge(a, b)) {
      throw UpdateError("cannot delete " + to_string(Edge{a, b}) + ": edge does not exist");
    }
    stats_ = UpdateStats{};
    const EdgeKind kind = classify_edge(graph_, a, b, ws_);
    graph_.delete_edge(a, b);
    const AffectedSet affected = affected_nodes(graph_, a, b, kind, ws_);
    stats_.kind = kind;
    stats_.affected = affected.nodes.size();
    stats_.unaffected_members = count_unaffected_members(affected.nodes);

    if (kind == EdgeKind::Bridge) split_component(affected.side_a, affected.side_b);
    if (options_.literal_rescoring) {
      rescore(affected.nodes);
    } else if (kind == EdgeKind::Bridge) {
      apply_bridge_loss(a, affected.side_b.size());
      apply_bridge_loss(b, affected.side_a.size());
    } else {
      const Edge pair{a, b};
      rescore(separating_vertices(graph_, a, std::span<const Edge>(&pair, 1), ws_));
    }
    refresh_member_scores();
    interchange();
    return topk_;
  }

  /// Deletes every edge of `batch` at once: one components pass, one rescore
  /// over the union of the affected components (each node at most once), one
  /// interchange. All-or-nothing: a missing or repeated edge throws before
  /// anything is modified.
  const TopKSet& delete_edges(std::span<const Edge> batch) {
    std::set<Edge> seen;
    for (const Edge& e : batch) {
      const Edge key{std::min(e.u, e.v), std::max(e.u, e.v)};
      if (!graph_.has_edge(e.u, e.v)) {
        throw UpdateError("batch rejected: edge " + to_string(e) + " does not exist");
      }
      if (!seen.insert(key).second) {
        throw UpdateError("batch rejected: edge " + to_string(e) + " listed twice");
      }
    }
    stats_ = UpdateStats{};
    stats_.batch = true;
    for (const Edge& e : batch) graph_.delete_edge(e.u, e.v);
    const ComponentLabeling before = std::move(components_);
    components_ = connected_components(graph_, ws_);

    // a hit component is intact when it kept every node of its old component
    const std::size_t count = components_.component_sizes.size();
    std::vector<std::uint8_t> hit(count, 0), intact(count, 0);
    std::vector<std::vector<Edge>> pairs_in(count);
    for (const Edge& e : batch) {
      for (NodeId end : {e.u, e.v}) {
        const auto id = components_.component_of[end];
        hit[id] = 1;
        intact[id] = components_.component_sizes[id] == before.size_of(end);
      }
      const auto id = components_.component_of[e.u];
      if (id == components_.component_of[e.v]) pairs_in[id].push_back(e);
    }
    std::vector<NodeId> affected, to_rescore;
    for (NodeId v = 0; v < graph_.node_count(); ++v) {
      const auto id = components_.component_of[v];
      if (!hit[id]) continue;
      affected.push_back(v);
      if (!intact[id] || options_.literal_rescoring) to_rescore.push_back(v);
    }
    for (std::uint32_t id = 0; id < count; ++id) {
      if (!hit[id] || !intact[id] || options_.literal_rescoring) continue;
      const auto cut = separating_vertices(graph_, pairs_in[id].front().u, pairs_in[id], ws_);
      to_rescore.insert(to_rescore.end(), cut.begin(), cut.end());
    }
    stats_.affected = affected.size();
    stats_.unaffected_members = count_unaffected_members(affected);

    rescore(to_rescore);
    refresh_member_scores();
    interchange();
    return topk_;
  }

 private:
  std::size_t count_unaffected_members(std::span<const NodeId> affected) {
    ws_.begin(graph_.node_count());
    for (NodeId v : affected) ws_.visit(v);
    std::size_t count = 0;
    for (const auto& s : topk_.selections()) {
      if (!ws_.visited(s.node)) ++count;
    }
    return count;
  }

  void split_component(std::span<const NodeId> side_a, std::span<const NodeId> side_b) {
    const auto old_id = components_.component_of[side_a.front()];
    const auto new_id = static_cast<std::uint32_t>(components_.component_sizes.size());
    components_.component_sizes[old_id] = side_a.size();
    components_.component_sizes.push_back(side_b.size());
    for (NodeId v : side_b) components_.component_of[v] = new_id;
  }

  void rescore(std::span<const NodeId> nodes) {
    stats_.rescored += nodes.size();
    for (NodeId v : nodes) {
      const PairCount s = pc_score_fast(graph_, components_, v, ws_);
      if (s != scores_[v]) {
        scores_[v] = s;
        index_.push(v, s);
      }
    }
  }

  // scores on the side of `end` after losing a bridge to `other_side` nodes
  void apply_bridge_loss(NodeId end, std::size_t other_side) {
    for (const auto& [v, detached] : detached_counts(graph_, end, ws_)) {
      scores_[v] -= static_cast<PairCount>(other_side) * detached;
      index_.push(v, scores_[v]);
      ++stats_.delta_updates;
    }
  }

  void refresh_member_scores() {
    for (NodeId v : topk_.nodes()) topk_.set_score(v, scores_[v]);
  }

  // A node is confirmed once the loop has masked it; confirmed members are
  // never evicted and do not count towards the minimum, since later residual
  // scores are conditional on them being removed.
  void interchange() {
    if (topk_.empty()) return;
    Residual work(graph_);
    work_scores_ = scores_;
    work_labels_ = components_;
    bool masked_any = false;
    auto unconfirmed = [&](NodeId v) { return work.is_active(v); };

    while (true) {
      const auto weakest = topk_.min_where(unconfirmed);
      if (!weakest) break;
      auto top = index_.top([&](NodeId v, PairCount s) { return work.is_active(v) && work_scores_[v] == s; });
      if (!top || top->score <= weakest->score) break;
      const NodeId w = top->node;
      ++stats_.interchange_steps;
      if (topk_.contains(w)) {
        topk_.set_score(w, top->score);
      } else {
        topk_.erase(weakest->node);
        stats_.evicted.push_back(weakest->node);
        ++stats_.evictions;
        topk_.insert(w, top->score);
      }
      mask_and_rescore(work, w);
      masked_any = true;
    }

    if (masked_any) {
      index_.rebuild(scores_);
    } else {
      index_.compact_if_bloated(scores_);
    }
  }

  // Masks w in the working residual and rescores the pieces its component
  // falls into.
  void mask_and_rescore(Residual& work, NodeId w) {
    work.remove(w);
    work_labels_.component_of[w] = kNoComponent;
    work_scores_[w] = 0;

    std::vector<NodeId>& touched = touched_;
    touched.clear();
    ws_.begin(graph_.node_count());
    ws_.visit(w);
    for (NodeId u : graph_.neighbors(w)) {
      if (!work.is_active(u) || !ws_.visit(u)) continue;
      const auto id = static_cast<std::uint32_t>(work_labels_.component_sizes.size());
      const std::size_t first = touched.size();
      touched.push_back(u);
      expand_from(work, u, ws_, [&](NodeId x) {
        touched.push_back(x);
        return false;
      });
      for (std::size_t i = first; i < touched.size(); ++i) work_labels_.component_of[touched[i]] = id;
      work_labels_.component_sizes.push_back(touched.size() - first);
    }
    for (NodeId v : touched) {
      const PairCount s = pc_score_fast(work, work_labels_, v, ws_);
      if (s != work_scores_[v]) {
        work_scores_[v] = s;
        index_.push(v, s);
        topk_.set_score(v, s);
      }
    }
  }

  Graph graph_;
  TrackerOptions options_;
  TopKSet topk_;
  ScoreTable scores_;
  ComponentLabeling components_;
  ScoreIndex index_;
  Workspace ws_;
  UpdateStats stats_;

  ScoreTable work_scores_;
  ComponentLabeling work_labels_;
  std::vector<NodeId> touched_;
};

}  // namespace shs
