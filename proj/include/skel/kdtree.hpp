#pragma once

#include <algorithm>
#include <numeric>
#include <queue>
#include <utility>
#include <vector>

#include "skel/core.hpp"

namespace skel {

// Static 3D kd-tree over a point set. Queries are deterministic: ties in
// distance resolve toward the lower point index.
class KdTree {
 public:
  explicit KdTree(const std::vector<Vec3>& points) : pts_(points) {
    idx_.resize(pts_.size());
    std::iota(idx_.begin(), idx_.end(), 0);
    if (!pts_.empty()) root_ = build(0, static_cast<int>(pts_.size()));
  }

  int nearest(const Vec3& q) const {
    std::pair<double, int> best{kInf, -1};
    nearestRec(root_, q, best);
    return best.second;
  }

  // k nearest indices, ascending by (distance, index). Includes the query
  // point itself if it is part of the set.
  std::vector<int> knn(const Vec3& q, int k) const {
    if (k <= 0 || pts_.empty()) return {};
    k = std::min<int>(k, static_cast<int>(pts_.size()));
    std::priority_queue<std::pair<double, int>> heap; // max-heap on (d2, idx)
    knnRec(root_, q, k, heap);
    std::vector<std::pair<double, int>> out;
    while (!heap.empty()) { out.push_back(heap.top()); heap.pop(); }
    std::sort(out.begin(), out.end());
    std::vector<int> result(out.size());
    for (std::size_t i = 0; i < out.size(); ++i) result[i] = out[i].second;
    return result;
  }

  std::vector<int> radius(const Vec3& q, double r) const {
    std::vector<int> out;
    radiusRec(root_, q, r * r, out);
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  struct Node {
    int axis = -1;           // -1 marks a leaf
    double split = 0;
    int left = -1, right = -1;
    int begin = 0, end = 0;  // leaf range into idx_
  };

  int build(int begin, int end) {
    Node node;
    if (end - begin <= 8) {
      node.begin = begin;
      node.end = end;
      nodes_.push_back(node);
      return static_cast<int>(nodes_.size()) - 1;
    }
    Vec3 lo = pts_[idx_[begin]], hi = lo;
    for (int i = begin; i < end; ++i) {
      lo = lo.cwiseMin(pts_[idx_[i]]);
      hi = hi.cwiseMax(pts_[idx_[i]]);
    }
    int axis;
    (hi - lo).maxCoeff(&axis);
    int mid = (begin + end) / 2;
    std::nth_element(idx_.begin() + begin, idx_.begin() + mid, idx_.begin() + end,
                     [&](int a, int b) {
                       double pa = pts_[a][axis], pb = pts_[b][axis];
                       return pa < pb || (pa == pb && a < b);
                     });
    node.axis = axis;
    node.split = pts_[idx_[mid]][axis];
    int self = static_cast<int>(nodes_.size());
    nodes_.push_back(node);
    int l = build(begin, mid);
    int r = build(mid, end);
    nodes_[self].left = l;
    nodes_[self].right = r;
    return self;
  }

  void nearestRec(int ni, const Vec3& q, std::pair<double, int>& best) const {
    const Node& n = nodes_[ni];
    if (n.axis < 0) {
      for (int i = n.begin; i < n.end; ++i) {
        int p = idx_[i];
        double d2 = (pts_[p] - q).squaredNorm();
        if (d2 < best.first || (d2 == best.first && p < best.second))
          best = {d2, p};
      }
      return;
    }
    double delta = q[n.axis] - n.split;
    int near = delta < 0 ? n.left : n.right;
    int far = delta < 0 ? n.right : n.left;
    nearestRec(near, q, best);
    if (delta * delta <= best.first) nearestRec(far, q, best);
  }

  void knnRec(int ni, const Vec3& q, int k,
              std::priority_queue<std::pair<double, int>>& heap) const {
    const Node& n = nodes_[ni];
    if (n.axis < 0) {
      for (int i = n.begin; i < n.end; ++i) {
        int p = idx_[i];
        double d2 = (pts_[p] - q).squaredNorm();
        // Max-heap on (d2, idx): equal distances evict the larger index.
        std::pair<double, int> cand{d2, p};
        if (static_cast<int>(heap.size()) < k) {
          heap.push(cand);
        } else if (cand < heap.top()) {
          heap.pop();
          heap.push(cand);
        }
      }
      return;
    }
    double delta = q[n.axis] - n.split;
    int near = delta < 0 ? n.left : n.right;
    int far = delta < 0 ? n.right : n.left;
    knnRec(near, q, k, heap);
    if (static_cast<int>(heap.size()) < k || delta * delta <= heap.top().first)
      knnRec(far, q, k, heap);
  }

  void radiusRec(int ni, const Vec3& q, double r2, std::vector<int>& out) const {
    const Node& n = nodes_[ni];
    if (n.axis < 0) {
      for (int i = n.begin; i < n.end; ++i)
        if ((pts_[idx_[i]] - q).squaredNorm() <= r2) out.push_back(idx_[i]);
      return;
    }
    double delta = q[n.axis] - n.split;
    int near = delta < 0 ? n.left : n.right;
    int far = delta < 0 ? n.right : n.left;
    radiusRec(near, q, r2, out);
    if (delta * delta <= r2) radiusRec(far, q, r2, out);
  }

  std::vector<Vec3> pts_;
  std::vector<int> idx_;
  std::vector<Node> nodes_;
  int root_ = -1;
};

}  // namespace skel
