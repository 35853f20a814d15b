#include "perco/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace perco {

const char* family_name(Family f) {
  switch (f) {
    case Family::square: return "square";
    case Family::triangular: return "triangular";
    case Family::hexagonal: return "hexagonal";
    case Family::mixed: return "mixed";
  }
  return "?";
}

const char* orientation_name(Orientation o) {
  switch (o) {
    case Orientation::horizontal: return "horizontal";
    case Orientation::vertical: return "vertical";
    case Orientation::tri_right: return "tri-right";
    case Orientation::tri_left: return "tri-left";
    case Orientation::hex_right: return "hex-right";
    case Orientation::hex_left: return "hex-left";
  }
  return "?";
}

Family family_from_name(const std::string& s) {
  if (s == "square") return Family::square;
  if (s == "triangular") return Family::triangular;
  if (s == "hexagonal") return Family::hexagonal;
  if (s == "mixed") return Family::mixed;
  throw std::invalid_argument("unsupported lattice family: " + s);
}

std::uint64_t pos_key(int ux, int uy) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(ux)) << 32) |
         static_cast<std::uint32_t>(uy);
}

Orientation classify_direction(int dux, int duy) {
  if (duy < 0 || (duy == 0 && dux < 0)) { dux = -dux; duy = -duy; }
  if (duy == 0) return Orientation::horizontal;
  if (dux == 0) return Orientation::vertical;
  if (duy == 3) return dux > 0 ? Orientation::tri_left : Orientation::tri_right;
  if (duy == 1) return dux > 0 ? Orientation::hex_right : Orientation::hex_left;
  throw std::logic_error("unrecognized edge direction");
}

int EmbeddedGraph::vertex_at(int ux, int uy) const {
  auto it = pos_index.find(pos_key(ux, uy));
  return it == pos_index.end() ? -1 : it->second;
}

int EmbeddedGraph::axis_vertex(int i) const {
  if (i < -axis_imax || i > axis_imax) throw std::out_of_range("axis vertex outside window");
  return axis_ids[i + axis_imax];
}

int EmbeddedGraph::edge_between(int v1, int v2) const {
  for (auto [w, e] : adj[v1])
    if (w == v2) return e;
  return -1;
}

std::uint64_t EmbeddedGraph::content_hash() const {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  mix(static_cast<std::uint64_t>(family));
  mix(static_cast<std::uint64_t>(m));
  for (const auto& v : vertices) {
    mix(static_cast<std::uint32_t>(v.pos.ux));
    mix(static_cast<std::uint32_t>(v.pos.uy));
  }
  for (const auto& e : edges) {
    mix(static_cast<std::uint64_t>(e.v1));
    mix(static_cast<std::uint64_t>(e.v2));
    mix(static_cast<std::uint64_t>(e.cls.index));
  }
  return h;
}

void EmbeddedGraph::dump(std::ostream& os) const {
  char buf[128];
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    std::snprintf(buf, sizeof buf, "V %zu %.17g %.17g\n", i, vertices[i].pos.x(), vertices[i].pos.y());
    os << buf;
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    std::snprintf(buf, sizeof buf, "E %zu %d %d %d\n", i, edges[i].v1, edges[i].v2, edges[i].cls.index);
    os << buf;
  }
}

namespace {

struct Builder {
  EmbeddedGraph g;

  int add_vertex(int ux, int uy) {
    int id = static_cast<int>(g.vertices.size());
    g.vertices.push_back({HalfPoint{ux, uy}});
    g.pos_index.emplace(pos_key(ux, uy), id);
    return id;
  }

  void add_edge(int v1, int v2, int index, Orientation o) {
    g.edges.push_back({v1, v2, EdgeClass{g.family, index, o}});
  }

  // Connects v to the vertex at (ux, uy) if present; the caller proposes
  // only "forward" offsets so every edge is created once.
  void link(int v, int ux, int uy, int index, Orientation o) {
    int w = g.vertex_at(ux, uy);
    if (w >= 0) add_edge(v, w, index, o);
  }

  void finish() {
    g.adj.assign(g.vertices.size(), {});
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
      g.adj[g.edges[e].v1].push_back({g.edges[e].v2, static_cast<int>(e)});
      g.adj[g.edges[e].v2].push_back({g.edges[e].v1, static_cast<int>(e)});
    }
    int imax = 0;
    while (g.vertex_at(2 * (imax + 1), 0) >= 0 && g.vertex_at(-2 * (imax + 1), 0) >= 0) ++imax;
    g.axis_imax = imax;
    g.axis_ids.resize(2 * imax + 1);
    for (int i = -imax; i <= imax; ++i) g.axis_ids[i + imax] = g.vertex_at(2 * i, 0);
  }
};

// Margin: two extra columns / rows beyond the declared window.
int ux_limit(double r) { return static_cast<int>(std::floor((r + 2 * 1.7320508075688772) / 0.8660254037844386 + 1e-9)); }
int uy_limit(double r) { return static_cast<int>(std::floor((r + 3.0) / 0.5 + 1e-9)); }

bool mixed_row_parity(int m, int uy, int* parity) {
  int a = std::abs(uy);
  if (a <= 2 * m) {
    if (uy % 2 != 0) return false;
    *parity = 0;
    return true;
  }
  int k = a - 2 * m;
  if (k % 3 != 0) return false;
  *parity = (k / 3) % 2;
  return true;
}

EmbeddedGraph build_mixed_core(int m, double r) {
  if (m < 0) throw std::invalid_argument("mixed lattice requires m >= 0");
  Builder b;
  b.g.family = m == 0 ? Family::triangular : Family::mixed;
  b.g.m = m;
  b.g.window_radius = r;
  int uxl = ux_limit(r), uyl = uy_limit(r);

  for (int uy = -uyl; uy <= uyl; ++uy) {
    int parity;
    if (!mixed_row_parity(m, uy, &parity)) continue;
    for (int ux = -uxl; ux <= uxl; ++ux)
      if (((ux % 2) + 2) % 2 == parity) b.add_vertex(ux, uy);
  }
  for (std::size_t v = 0; v < b.g.vertices.size(); ++v) {
    auto [ux, uy] = b.g.vertices[v].pos;
    b.link(static_cast<int>(v), ux + 2, uy, 0, Orientation::horizontal);
    if (uy >= -2 * m && uy + 2 <= 2 * m)
      b.link(static_cast<int>(v), ux, uy + 2, 0, Orientation::vertical);
    if (uy >= 2 * m || uy + 3 <= -2 * m) {  // triangular strips
      b.link(static_cast<int>(v), ux - 1, uy + 3, 1, Orientation::tri_right);
      b.link(static_cast<int>(v), ux + 1, uy + 3, 2, Orientation::tri_left);
    }
  }
  b.finish();
  return std::move(b.g);
}

EmbeddedGraph build_square(double r) {
  Builder b;
  b.g.family = Family::square;
  b.g.window_radius = r;
  int uxl = ux_limit(r), uyl = uy_limit(r);
  for (int uy = -uyl; uy <= uyl; ++uy) {
    if (uy % 2 != 0) continue;
    for (int ux = -uxl; ux <= uxl; ++ux)
      if (ux % 2 == 0) b.add_vertex(ux, uy);
  }
  for (std::size_t v = 0; v < b.g.vertices.size(); ++v) {
    auto [ux, uy] = b.g.vertices[v].pos;
    b.link(static_cast<int>(v), ux + 2, uy, 0, Orientation::horizontal);
    b.link(static_cast<int>(v), ux, uy + 2, 1, Orientation::vertical);
  }
  b.finish();
  return std::move(b.g);
}

// Honeycomb with a vertex at the origin: rows uy = 3k (ux parity k) and
// uy = 3k+1 (ux parity k+1). This is the dual of the triangular lattice
// shifted by (-sqrt(3)/2, -1/2) so that the axis points x_i are vertices.
EmbeddedGraph build_hexagonal(double r) {
  Builder b;
  b.g.family = Family::hexagonal;
  b.g.window_radius = r;
  int uxl = ux_limit(r), uyl = uy_limit(r);
  auto row_parity = [](int uy, int* parity) {
    int q = uy >= 0 ? uy / 3 : -((-uy + 2) / 3);
    int rmod = uy - 3 * q;
    if (rmod == 2) return false;
    int k = ((q % 2) + 2) % 2;
    *parity = rmod == 0 ? k : 1 - k;
    return true;
  };
  for (int uy = -uyl; uy <= uyl; ++uy) {
    int parity;
    if (!row_parity(uy, &parity)) continue;
    for (int ux = -uxl; ux <= uxl; ++ux)
      if (((ux % 2) + 2) % 2 == parity) b.add_vertex(ux, uy);
  }
  for (std::size_t v = 0; v < b.g.vertices.size(); ++v) {
    auto [ux, uy] = b.g.vertices[v].pos;
    int q = uy >= 0 ? uy / 3 : -((-uy + 2) / 3);
    int rmod = uy - 3 * q;
    if (rmod == 0) {
      b.link(static_cast<int>(v), ux + 1, uy + 1, 1, Orientation::hex_right);
      b.link(static_cast<int>(v), ux - 1, uy + 1, 2, Orientation::hex_left);
    } else {
      b.link(static_cast<int>(v), ux, uy + 2, 0, Orientation::vertical);
    }
  }
  b.finish();
  return std::move(b.g);
}

}  // namespace

EmbeddedGraph build_lattice(Family family, double window_radius) {
  if (window_radius < 3) throw std::invalid_argument("window_radius must be >= 3");
  switch (family) {
    case Family::square: return build_square(window_radius);
    case Family::triangular: return build_mixed_core(0, window_radius);
    case Family::hexagonal: return build_hexagonal(window_radius);
    case Family::mixed: throw std::invalid_argument("use build_mixed for mixed lattices");
  }
  throw std::invalid_argument("unsupported family");
}

EmbeddedGraph build_mixed(int m, double window_radius) {
  if (window_radius < 3) throw std::invalid_argument("window_radius must be >= 3");
  return build_mixed_core(m, window_radius);
}

void require_box_in_window(const EmbeddedGraph& g, const Box& box) {
  Real3 lim = Real3::of_int(2 * static_cast<long long>(std::floor(g.window_radius + 1e-9)));
  if (box.xlo < -lim || box.xhi > lim || box.ylo < -lim || box.yhi > lim)
    throw std::invalid_argument("query box exceeds the graph window");
}

std::vector<int> edges_intersecting(const EmbeddedGraph& g, const Box& box) {
  require_box_in_window(g, box);
  std::vector<int> out;
  for (std::size_t e = 0; e < g.edges.size(); ++e)
    if (segment_intersects_box(g.edge_p(e), g.edge_q(e), box)) out.push_back(static_cast<int>(e));
  return out;
}

std::vector<int> edges_within_distance(const EmbeddedGraph& g, const Box& box, const Real3& d) {
  std::vector<int> out;
  for (std::size_t e = 0; e < g.edges.size(); ++e)
    if (segment_box_dist_le(g.edge_p(e), g.edge_q(e), box, d)) out.push_back(static_cast<int>(e));
  return out;
}

}  // namespace perco
