#include "ebem/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace ebem {

Vec2 StarShape::point(double theta) const {
  const double rad = (r + a * std::cos(b * theta)) / (1.0 + a);
  return {rad * std::cos(theta), rad * std::sin(theta)};
}

Mesh::Mesh(std::vector<Vec2> nodes) : nodes_(std::move(nodes)) {
  const int n = size();
  if (n < 4) throw std::invalid_argument("Mesh: needs at least 4 nodes");
  tangent_.resize(n);
  normal_.resize(n);
  midpoint_.resize(n);
  length_.resize(n);
  min_length_ = 1e300;
  max_length_ = 0.0;
  for (int e = 0; e < n; ++e) {
    const Vec2& p = nodes_[e];
    const Vec2& q = nodes_[next(e)];
    const Vec2 d = q - p;
    const double h = d.norm();
    if (!(h > 0.0)) throw std::invalid_argument("Mesh: zero-length element");
    length_[e] = h;
    tangent_[e] = {d.x / h, d.y / h};
    normal_[e] = {-tangent_[e].y, tangent_[e].x};  // +90 deg: into the cavity
    midpoint_[e] = {p.x + 0.5 * d.x, p.y + 0.5 * d.y};
    min_length_ = std::min(min_length_, h);
    max_length_ = std::max(max_length_, h);
  }
}

Mesh Mesh::star(int n_elements, const StarShape& shape) {
  if (n_elements < 4) throw std::invalid_argument("Mesh::star: n too small");
  std::vector<Vec2> nodes(n_elements);
  for (int t = 0; t < n_elements; ++t) {
    nodes[t] = shape.point(2.0 * kPi * t / n_elements);
  }
  return Mesh(std::move(nodes));
}

Mesh Mesh::from_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("Mesh: cannot open " + path);
  int n = 0;
  in >> n;
  if (!in || n < 4) throw std::runtime_error("Mesh: bad node count in " + path);
  std::vector<Vec2> nodes(n);
  for (int i = 0; i < n; ++i) {
    in >> nodes[i].x >> nodes[i].y;
    if (!in) throw std::runtime_error("Mesh: truncated file " + path);
  }
  return Mesh(std::move(nodes));
}

void Mesh::save_text_file(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("Mesh: cannot write " + path);
  out.precision(17);
  out << size() << "\n";
  for (const Vec2& p : nodes_) out << p.x << " " << p.y << "\n";
}

namespace {

// Distance from point p to segment [a, b].
double point_segment_distance(const Vec2& p, const Vec2& a, const Vec2& b) {
  const Vec2 ab = b - a;
  const double len2 = ab.squaredNorm();
  double t = len2 > 0.0 ? (p - a).dot(ab) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return (p - (a + t * ab)).norm();
}

}  // namespace

double Mesh::element_distance(int ea, int eb) const {
  if (ea == eb) return 0.0;
  const Vec2& a0 = nodes_[ea];
  const Vec2& a1 = nodes_[next(ea)];
  const Vec2& b0 = nodes_[eb];
  const Vec2& b1 = nodes_[next(eb)];
  // Closed boundary elements never cross, so the minimum is attained on an
  // endpoint of one of the two segments.
  double d = point_segment_distance(a0, b0, b1);
  d = std::min(d, point_segment_distance(a1, b0, b1));
  d = std::min(d, point_segment_distance(b0, a0, a1));
  d = std::min(d, point_segment_distance(b1, a0, a1));
  return d;
}

PairRelation classify_pair(const Mesh& mesh, int ea, int eb) {
  if (ea == eb) return PairRelation::kCoincident;
  if (mesh.next(ea) == eb) return PairRelation::kAdjacentEndStart;
  if (mesh.next(eb) == ea) return PairRelation::kAdjacentStartEnd;
  return PairRelation::kSeparated;
}

ClusterTree::ClusterTree(int n_nodes, int depth)
    : n_nodes_(n_nodes), depth_(depth) {
  if (depth < 0) throw std::invalid_argument("ClusterTree: negative depth");
  const int leaves = 1 << depth;
  if (n_nodes <= 0 || n_nodes % leaves != 0) {
    throw std::invalid_argument(
        "ClusterTree: node count must be divisible by 2^depth (got " +
        std::to_string(n_nodes) + " nodes, depth " + std::to_string(depth) +
        ")");
  }
}

int ClusterTree::depth_for(int n_nodes, int max_leaf) {
  if (n_nodes <= 0 || max_leaf <= 0)
    throw std::invalid_argument("ClusterTree: sizes must be positive");
  int depth = 0;
  while ((n_nodes >> depth) > max_leaf && n_nodes % (2 << depth) == 0)
    ++depth;
  return depth;
}

int ClusterTree::level_of(int cell) const {
  int level = 0;
  while (cell > last_cell(level)) ++level;
  return level;
}

int ClusterTree::leaf_begin(int cell) const {
  return (cell - first_cell(depth_)) * leaf_size();
}

int ClusterTree::leaf_end(int cell) const {
  return leaf_begin(cell) + leaf_size();
}

int ClusterTree::cell_begin(int cell) const {
  const int level = level_of(cell);
  return (cell - first_cell(level)) * (n_nodes_ >> level);
}

int ClusterTree::cell_end(int cell) const {
  const int level = level_of(cell);
  return cell_begin(cell) + (n_nodes_ >> level);
}

}  // namespace ebem
