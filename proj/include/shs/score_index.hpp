#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "shs/topk.hpp"

namespace shs {

/// Max-priority index over node scores with lazy invalidation: updating a
/// key pushes a fresh entry and stale ones are dropped when they surface.
/// Ties go to the smallest node id.
class ScoreIndex {
 public:
  void rebuild(const ScoreTable& scores) {
    heap_.clear();
    heap_.reserve(scores.size());
    for (NodeId v = 0; v < scores.size(); ++v) heap_.push_back({v, scores[v]});
    std::make_heap(heap_.begin(), heap_.end(), lower_priority);
    node_count_ = scores.size();
  }

  void push(NodeId node, PairCount score) {
    heap_.push_back({node, score});
    std::push_heap(heap_.begin(), heap_.end(), lower_priority);
  }

  /// Highest valid entry, where `is_current(node, score)` decides validity.
  /// Invalid entries above it are discarded for good.
  template <class IsCurrent>
  std::optional<Selection> top(IsCurrent&& is_current) {
    while (!heap_.empty()) {
      const Selection& front = heap_.front();
      if (is_current(front.node, front.score)) return front;
      std::pop_heap(heap_.begin(), heap_.end(), lower_priority);
      heap_.pop_back();
    }
    return std::nullopt;
  }

  std::size_t entry_count() const { return heap_.size(); }

  /// Rebuilds from `scores` once stale entries outnumber live ones 4:1.
  void compact_if_bloated(const ScoreTable& scores) {
    if (heap_.size() > 4 * node_count_ + 64) rebuild(scores);
  }

 private:
  static bool lower_priority(const Selection& a, const Selection& b) {
    return a.score != b.score ? a.score < b.score : a.node > b.node;
  }

  std::vector<Selection> heap_;
  std::size_t node_count_ = 0;
};

}  // namespace shs
