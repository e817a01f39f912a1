#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "shs/connectivity.hpp"

namespace shs {

struct Selection {
  NodeId node;
  PairCount score;

  friend bool operator==(const Selection&, const Selection&) = default;
};

/// The maintained answer: up to k (node, score) selections in the order they
/// entered the set. k stays small (tens), so min lookup is a linear scan.
class TopKSet {
 public:
  TopKSet() = default;
  explicit TopKSet(std::size_t k) : k_(k) { selections_.reserve(k); }

  std::size_t k() const { return k_; }
  std::size_t size() const { return selections_.size(); }
  bool empty() const { return selections_.empty(); }
  bool full() const { return selections_.size() >= k_; }
  const std::vector<Selection>& selections() const { return selections_; }

  bool contains(NodeId v) const { return find(v) != selections_.end(); }

  std::optional<PairCount> score_of(NodeId v) const {
    auto it = find(v);
    if (it == selections_.end()) return std::nullopt;
    return it->score;
  }

  void insert(NodeId node, PairCount score) { selections_.push_back({node, score}); }

  void set_score(NodeId node, PairCount score) {
    auto it = std::find_if(selections_.begin(), selections_.end(),
                           [&](const Selection& s) { return s.node == node; });
    if (it != selections_.end()) it->score = score;
  }

  /// Smallest score; among equal scores the largest node id goes first, the
  /// mirror of the smallest-id rule used when selecting.
  const Selection& min() const { return *min_position(); }

  Selection remove_min() {
    auto it = min_position();
    Selection out = *it;
    selections_.erase(it);
    return out;
  }

  /// min() restricted to members accepted by `pred`.
  template <class Pred>
  std::optional<Selection> min_where(Pred&& pred) const {
    std::optional<Selection> best;
    for (const auto& s : selections_) {
      if (pred(s.node) && (!best || lower_priority(s, *best))) best = s;
    }
    return best;
  }

  bool erase(NodeId node) {
    auto it = std::find_if(selections_.begin(), selections_.end(),
                           [&](const Selection& s) { return s.node == node; });
    if (it == selections_.end()) return false;
    selections_.erase(it);
    return true;
  }

  std::vector<NodeId> nodes() const {
    std::vector<NodeId> out;
    out.reserve(selections_.size());
    for (const auto& s : selections_) out.push_back(s.node);
    return out;
  }

  friend bool operator==(const TopKSet&, const TopKSet&) = default;

 private:
  std::vector<Selection>::const_iterator find(NodeId v) const {
    return std::find_if(selections_.begin(), selections_.end(),
                        [&](const Selection& s) { return s.node == v; });
  }
  std::vector<Selection>::iterator min_position() {
    return std::min_element(selections_.begin(), selections_.end(), lower_priority);
  }
  std::vector<Selection>::const_iterator min_position() const {
    return std::min_element(selections_.begin(), selections_.end(), lower_priority);
  }
  static bool lower_priority(const Selection& a, const Selection& b) {
    return a.score != b.score ? a.score < b.score : a.node > b.node;
  }

  std::size_t k_ = 0;
  std::vector<Selection> selections_;
};

}  // namespace shs
