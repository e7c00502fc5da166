#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "ebem/types.hpp"

namespace ebem {

// Closed star-shaped boundary curve
//   x(theta) = (r + a cos(b theta)) cos(theta) / (1 + a)
//   y(theta) = (r + a cos(b theta)) sin(theta) / (1 + a)
// traversed counter-clockwise for increasing theta.
struct StarShape {
  double r = 1.0;
  double a = 0.3;
  int b = 3;

  Vec2 point(double theta) const;
};

// Piecewise linear closed boundary mesh.  Element e is the segment from
// node e to node (e+1) mod N; the two elements adjacent to node i are
// (i-1+N) mod N and i.  The unit normal points into the cavity (i.e. it is
// the outward normal of the exterior computational domain), which for the
// counter-clockwise orientation used here is the +90 degree rotation of the
// tangent.
class Mesh {
 public:
  explicit Mesh(std::vector<Vec2> nodes);

  static Mesh star(int n_elements, const StarShape& shape = StarShape{});
  static Mesh from_text_file(const std::string& path);
  void save_text_file(const std::string& path) const;

  int size() const { return static_cast<int>(nodes_.size()); }
  const Vec2& node(int i) const { return nodes_[i]; }
  const Vec2& tangent(int e) const { return tangent_[e]; }
  const Vec2& normal(int e) const { return normal_[e]; }
  double length(int e) const { return length_[e]; }
  const Vec2& midpoint(int e) const { return midpoint_[e]; }
  int next(int e) const { return e + 1 == size() ? 0 : e + 1; }
  int prev(int e) const { return e == 0 ? size() - 1 : e - 1; }

  // Point on element e at local coordinate s in [0,1].
  Vec2 point_on(int e, double s) const {
    const Vec2& p = nodes_[e];
    const Vec2& q = nodes_[next(e)];
    return {p.x + s * (q.x - p.x), p.y + s * (q.y - p.y)};
  }

  double min_length() const { return min_length_; }
  double max_length() const { return max_length_; }

  // Exact distance between the closed segments of two elements.
  double element_distance(int ea, int eb) const;

 private:
  std::vector<Vec2> nodes_;
  std::vector<Vec2> tangent_;
  std::vector<Vec2> normal_;
  std::vector<Vec2> midpoint_;
  std::vector<double> length_;
  double min_length_ = 0.0;
  double max_length_ = 0.0;
};

// How two elements of the closed curve touch each other.  For adjacent
// pairs the shared node is either (end of a == start of b) or the other way
// around; both cases are recorded explicitly.
enum class PairRelation : std::uint8_t {
  kCoincident,
  kAdjacentEndStart,  // node next(a) == node b
  kAdjacentStartEnd,  // node a == node next(b)
  kSeparated,
};

PairRelation classify_pair(const Mesh& mesh, int ea, int eb);

// Uniform binary tree over the node indices.  Cell 0 is the root, the
// children of cell i are 2i+1 and 2i+2, and the cells of level l are
// 2^l - 1 ... 2^(l+1) - 2.  Leaf cells receive contiguous node ranges of
// equal size, so the node count must be divisible by 2^depth.
class ClusterTree {
 public:
  ClusterTree(int n_nodes, int depth);

  int depth() const { return depth_; }
  int n_nodes() const { return n_nodes_; }
  int n_cells() const { return (2 << depth_) - 1; }
  static int first_cell(int level) { return (1 << level) - 1; }
  static int last_cell(int level) { return (2 << level) - 2; }
  static int child1(int cell) { return 2 * cell + 1; }
  static int child2(int cell) { return 2 * cell + 2; }
  static int parent(int cell) { return (cell - 1) / 2; }
  // Smallest depth at which leaves hold at most max_leaf nodes.
  static int depth_for(int n_nodes, int max_leaf);
  int level_of(int cell) const;

  bool is_leaf(int cell) const { return cell >= first_cell(depth_); }
  // Node range [begin, end) owned by a leaf cell.
  int leaf_begin(int cell) const;
  int leaf_end(int cell) const;
  int leaf_size() const { return n_nodes_ >> depth_; }
  // Node range [begin, end) covered by any cell (its descendant leaves).
  int cell_begin(int cell) const;
  int cell_end(int cell) const;

 private:
  int n_nodes_;
  int depth_;
};

}  // namespace ebem
