#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "girthkit/graph.hpp"

namespace girthkit::detail {

// Per-vertex BFS state that is reset in O(1) by bumping an epoch, so a
// search only pays for the vertices it touches. One instance per thread;
// searches using it must not nest.
class SearchScratch {
 public:
  void begin(std::size_t n) {
    if (stamp_.size() < n) {
      stamp_.resize(n, 0);
      done_.resize(n, 0);
      dist_.resize(n, 0);
      parent_.resize(n, 0);
    }
    if (++epoch_ == 0) {
      std::fill(stamp_.begin(), stamp_.end(), 0);
      std::fill(done_.begin(), done_.end(), 0);
      epoch_ = 1;
    }
  }

  bool seen(VertexId v) const { return stamp_[v] == epoch_; }
  void visit(VertexId v, int dist, VertexId parent) {
    stamp_[v] = epoch_;
    dist_[v] = dist;
    parent_[v] = parent;
  }
  int dist(VertexId v) const { return dist_[v]; }
  VertexId parent(VertexId v) const { return parent_[v]; }

  bool done(VertexId v) const { return done_[v] == epoch_; }
  void mark_done(VertexId v) { done_[v] = epoch_; }

  static SearchScratch& local() {
    thread_local SearchScratch scratch;
    return scratch;
  }

 private:
  std::uint32_t epoch_ = 0;
  std::vector<std::uint32_t> stamp_;
  std::vector<std::uint32_t> done_;
  std::vector<int> dist_;
  std::vector<VertexId> parent_;
};

}  // namespace girthkit::detail
