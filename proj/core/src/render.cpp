#include "trimat/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

namespace trimat {
namespace {

// Vertices live on a doubled integer grid: x2 = 2x, and the second component
// is the row index c (true y is c * sqrt(3)/2). Triangles are listed
// counter-clockwise with the y axis pointing up.
using Vx = std::pair<int, int>;

std::vector<Vx> up_verts(const UpCell& u) {
  int x = 2 * u.b + u.c;
  return {{x, u.c}, {x + 2, u.c}, {x + 1, u.c + 1}};
}

std::vector<Vx> down_verts(const DownCell& d) {
  int x = 2 * d.b + d.c;
  return {{x + 2, d.c}, {x + 3, d.c + 1}, {x + 1, d.c + 1}};
}

// Union of the tile's triangles: shared edges cancel, the boundary loop
// survives. Collinear run-ons are dropped so a t1 base is one edge.
std::vector<Vx> tile_outline(const Tile& tile) {
  std::set<std::pair<Vx, Vx>> edges;
  auto add_tri = [&](const std::vector<Vx>& v) {
    for (int i = 0; i < 3; ++i) {
      Vx p = v[i], q = v[(i + 1) % 3];
      if (auto it = edges.find({q, p}); it != edges.end())
        edges.erase(it);
      else
        edges.insert({p, q});
    }
  };
  for (const UpCell& u : tile.ups) add_tri(up_verts(u));
  for (const DownCell& d : tile.downs) add_tri(down_verts(d));

  std::map<Vx, Vx> next;
  for (const auto& [p, q] : edges) next[p] = q;
  std::vector<Vx> loop;
  Vx start = edges.begin()->first;
  for (Vx cur = start;;) {
    loop.push_back(cur);
    cur = next.at(cur);
    if (cur == start) break;
  }
  std::vector<Vx> out;
  int m = static_cast<int>(loop.size());
  for (int i = 0; i < m; ++i) {
    Vx p = loop[(i + m - 1) % m], v = loop[i], q = loop[(i + 1) % m];
    long cross = static_cast<long>(v.first - p.first) * (q.second - v.second) -
                 static_cast<long>(v.second - p.second) * (q.first - v.first);
    if (cross != 0) out.push_back(v);
  }
  return out;
}

const char* svg_class(TileKind k) {
  switch (k) {
    case TileKind::Rhombus: return "rhombus";
    case TileKind::Trap1: return "t1";
    case TileKind::Trap2: return "t2";
    case TileKind::UnitUp: return "unit-up";
    case TileKind::UnitDown: return "unit-down";
  }
  return "";
}

constexpr int kScale = 48;   // pixels per unit edge
constexpr int kMargin = 8;
const double kRow = kScale * 0.8660254037844386;  // sqrt(3)/2

void emit_polygon(std::ostream& os, const char* cls, const std::vector<Vx>& verts, int n) {
  os << "  <polygon class=\"" << cls << "\" points=\"";
  char buf[64];
  for (std::size_t i = 0; i < verts.size(); ++i) {
    double y = (n - verts[i].second) * kRow + kMargin;
    std::snprintf(buf, sizeof buf, "%s%d,%.2f", i ? " " : "", verts[i].first * (kScale / 2) + kMargin, y);
    os << buf;
  }
  os << "\"/>\n";
}

}  // namespace

std::string render_svg(const Tiling& t) {
  int n = t.region.n;
  int width = kScale * n + 2 * kMargin;
  int height = static_cast<int>(std::ceil(kRow * n)) + 2 * kMargin;
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  os << "<style>\n"
        ".hole{fill:#3b3b3b}\n"
        ".rhombus{fill:#cfe0f5}\n"
        ".t1{fill:#f5d6cf}\n"
        ".t2{fill:#d2f0d4}\n"
        ".unit-up{fill:#f3ecc9}\n"
        ".unit-down{fill:#e2d4f0}\n"
        "polygon{stroke:#222;stroke-width:1.5;stroke-linejoin:round}\n"
        "</style>\n";

  std::vector<UpCell> holes = t.region.holes.cells();
  std::sort(holes.begin(), holes.end(), [](const UpCell& x, const UpCell& y) { return canon_less(x, y); });
  for (const UpCell& u : holes) emit_polygon(os, "hole", up_verts(u), n);

  std::vector<DownCell> excl = t.excluded_downs;
  std::sort(excl.begin(), excl.end(), [](const DownCell& x, const DownCell& y) { return canon_less(x, y); });
  for (const DownCell& d : excl) emit_polygon(os, "hole", down_verts(d), n);

  std::vector<Tile> tiles = t.tiles;
  std::sort(tiles.begin(), tiles.end(), tile_less);
  for (const Tile& tile : tiles) emit_polygon(os, svg_class(tile.kind), tile_outline(tile), n);

  os << "</svg>\n";
  return os.str();
}

std::string render_ascii(const Tiling& t) {
  int n = t.region.n;
  std::vector<char> up(up_cell_count(n), '.');
  std::vector<char> down(down_cell_count(n), '.');
  t.region.holes.for_each_index([&](int i) { up[i] = '#'; });
  for (const DownCell& d : t.excluded_downs) down[down_index(n, d)] = '#';
  auto glyph = [](TileKind k) {
    switch (k) {
      case TileKind::Rhombus: return 'r';
      case TileKind::Trap1: return '1';
      case TileKind::Trap2: return '2';
      case TileKind::UnitUp: return 'u';
      case TileKind::UnitDown: return 'v';
    }
    return '?';
  };
  for (const Tile& tile : t.tiles) {
    for (const UpCell& u : tile.ups) up[up_index(n, u)] = glyph(tile.kind);
    for (const DownCell& d : tile.downs) down[down_index(n, d)] = glyph(tile.kind);
  }

  std::ostringstream os;
  for (int c = n - 1; c >= 0; --c) {
    os << std::string(c, ' ');
    for (int b = 0; b + c <= n - 1; ++b) {
      if (b > 0) os << down[down_index(n, DownCell{n - 2 - (b - 1) - c, b - 1, c})];
      os << up[up_index(n, UpCell{n - 1 - b - c, b, c})];
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace trimat
