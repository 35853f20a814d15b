#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <unordered_map>
#include <vector>

#include "perco/exact.hpp"

namespace perco {

enum class Family { square, triangular, hexagonal, mixed };

// Edge direction families. Classes 1 and 2 on the triangular/mixed lattices
// are the edges parallel to the right ("\") and left ("/") edge of an
// upwards pointing triangle. Hexagonal edges carry the index of the
// triangular class they are dual to.
enum class Orientation { horizontal, vertical, tri_right, tri_left, hex_right, hex_left };

const char* family_name(Family f);
const char* orientation_name(Orientation o);
Family family_from_name(const std::string& s);

struct EdgeClass {
  Family family;
  int index;  // 0, 1 or 2; parameter slot of the edge
  Orientation orientation;
};

struct Vertex {
  HalfPoint pos;
};

struct Edge {
  int v1, v2;
  EdgeClass cls;
};

// A finite planar lattice window, embedded with straight edges. Vertices sit
// on the half-unit grid x = ux*sqrt(3)/2, y = uy/2; all edges have length at
// most sqrt(3). Immutable after construction.
struct EmbeddedGraph {
  Family family = Family::triangular;
  int m = 0;               // square strip half-height (mixed; 0 = triangular)
  double window_radius = 0;  // declared query window [-r, r]^2

  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  std::vector<std::vector<std::pair<int, int>>> adj;  // vertex -> (neighbor, edge id)

  std::unordered_map<std::uint64_t, int> pos_index;
  std::vector<int> axis_ids;  // ids of x_i = (i*sqrt(3), 0), i = -imax..imax
  int axis_imax = 0;

  int vertex_at(int ux, int uy) const;
  // x_i = (i*sqrt(3), 0); throws if outside the built axis range.
  int axis_vertex(int i) const;
  int origin() const { return axis_vertex(0); }
  int edge_between(int v1, int v2) const;  // -1 if absent

  XPoint xpos(int v) const { return vertices[v].pos.xpoint(); }
  XPoint edge_p(int e) const { return xpos(edges[e].v1); }
  XPoint edge_q(int e) const { return xpos(edges[e].v2); }

  std::uint64_t content_hash() const;
  void dump(std::ostream& os) const;
};

std::uint64_t pos_key(int ux, int uy);
Orientation classify_direction(int dux, int duy);

// Builds the window [-r, r]^2 plus a margin layer of the given lattice.
// The origin is a vertex; square cells are sqrt(3) x 1 and triangles are
// equilateral with side sqrt(3).
EmbeddedGraph build_lattice(Family family, double window_radius);

// Mixed lattice L^m: square strip |y| <= m, triangular beyond. m = 0 gives
// the plain triangular lattice.
EmbeddedGraph build_mixed(int m, double window_radius);

// Ids of the edges whose closed segment meets the closed box. The box must
// lie at least two layers inside the window.
std::vector<int> edges_intersecting(const EmbeddedGraph& g, const Box& box);
// Same but with distance slack: edges within distance d of the box (R + dD).
std::vector<int> edges_within_distance(const EmbeddedGraph& g, const Box& box, const Real3& d);

void require_box_in_window(const EmbeddedGraph& g, const Box& box);

}  // namespace perco
