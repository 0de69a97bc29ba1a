#include "trimat/tiler.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace trimat {
namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

bool adjacent(const UpCell& u, const DownCell& d) {
  auto nb = up_neighbors(d);
  return u == nb[0] || u == nb[1] || u == nb[2];
}

}  // namespace

const char* tile_kind_name(TileKind k) {
  switch (k) {
    case TileKind::Rhombus: return "rhombus";
    case TileKind::Trap1: return "t1";
    case TileKind::Trap2: return "t2";
    case TileKind::UnitUp: return "up";
    case TileKind::UnitDown: return "down";
  }
  return "?";
}

std::optional<TileKind> tile_kind_from_name(const std::string& name) {
  for (TileKind k : {TileKind::Rhombus, TileKind::Trap1, TileKind::Trap2, TileKind::UnitUp,
                     TileKind::UnitDown})
    if (name == tile_kind_name(k)) return k;
  return std::nullopt;
}

Tile Tile::rhombus(const UpCell& u, const DownCell& d) {
  require(adjacent(u, d), "rhombus cells not adjacent: " + to_string(u) + " / " + to_string(d));
  return {TileKind::Rhombus, {u}, {d}};
}

Tile Tile::trap1(const DownCell& d, const UpCell& u1, const UpCell& u2) {
  require(u1 != u2, "trapezoid1 needs two distinct up cells");
  require(adjacent(u1, d) && adjacent(u2, d),
          "trapezoid1 cells not adjacent to " + to_string(d));
  Tile t{TileKind::Trap1, {u1, u2}, {d}};
  if (canon_less(t.ups[1], t.ups[0])) std::swap(t.ups[0], t.ups[1]);
  return t;
}

Tile Tile::trap2(const UpCell& u, const DownCell& d1, const DownCell& d2) {
  require(d1 != d2, "trapezoid2 needs two distinct down cells");
  require(adjacent(u, d1) && adjacent(u, d2),
          "trapezoid2 cells not adjacent to " + to_string(u));
  Tile t{TileKind::Trap2, {u}, {d1, d2}};
  if (canon_less(t.downs[1], t.downs[0])) std::swap(t.downs[0], t.downs[1]);
  return t;
}

Tile Tile::unit_up(const UpCell& u) { return {TileKind::UnitUp, {u}, {}}; }

Tile Tile::unit_down(const DownCell& d) { return {TileKind::UnitDown, {}, {d}}; }

bool tile_less(const Tile& x, const Tile& y) {
  if (x.kind != y.kind) return static_cast<int>(x.kind) < static_cast<int>(y.kind);
  for (std::size_t i = 0; i < std::min(x.ups.size(), y.ups.size()); ++i)
    if (x.ups[i] != y.ups[i]) return canon_less(x.ups[i], y.ups[i]);
  for (std::size_t i = 0; i < std::min(x.downs.size(), y.downs.size()); ++i)
    if (x.downs[i] != y.downs[i]) return canon_less(x.downs[i], y.downs[i]);
  return false;
}

HoleyRegion::HoleyRegion(int n) : n(n), holes(n) {}

HoleyRegion::HoleyRegion(int n, CellSet holes_) : n(n), holes(std::move(holes_)) {
  require(holes.ambient_n() == n, "holes ambient grid mismatch");
}

int HoleyRegion::up_count() const { return up_cell_count(n) - holes.size(); }

int HoleyRegion::down_count() const { return down_cell_count(n); }

int TileCounts::of(TileKind k) const {
  switch (k) {
    case TileKind::Rhombus: return rhombus;
    case TileKind::Trap1: return trap1;
    case TileKind::Trap2: return trap2;
    case TileKind::UnitUp: return unit_up;
    case TileKind::UnitDown: return unit_down;
  }
  return 0;
}

TileCounts Tiling::counts() const {
  TileCounts c;
  for (const Tile& t : tiles) switch (t.kind) {
      case TileKind::Rhombus: ++c.rhombus; break;
      case TileKind::Trap1: ++c.trap1; break;
      case TileKind::Trap2: ++c.trap2; break;
      case TileKind::UnitUp: ++c.unit_up; break;
      case TileKind::UnitDown: ++c.unit_down; break;
    }
  return c;
}

TilingCheck validate_tiling(const Tiling& t) {
  TilingCheck out;
  auto problem = [&](const std::string& msg) {
    out.ok = false;
    out.problems.push_back(msg);
  };
  int n = t.region.n;
  if (n < 1) {
    problem("region order must be >= 1");
    return out;
  }
  if (t.region.holes.ambient_n() != n) {
    problem("holes ambient grid mismatch");
    return out;
  }
  int m = up_cell_count(n), dm = down_cell_count(n);
  std::vector<int> up_cover(m, 0), down_cover(dm, 0), down_excluded(dm, 0);

  for (const DownCell& d : t.excluded_downs) {
    if (!valid_down(n, d)) {
      problem("excluded down cell outside T_" + std::to_string(n) + ": " + to_string(d));
      continue;
    }
    int j = down_index(n, d);
    if (down_excluded[j]) problem("duplicate excluded down cell " + to_string(d));
    down_excluded[j] = 1;
  }

  for (std::size_t ti = 0; ti < t.tiles.size(); ++ti) {
    const Tile& tile = t.tiles[ti];
    std::string where = "tile #" + std::to_string(ti) + " (" + tile_kind_name(tile.kind) + ")";
    std::size_t want_up = 0, want_down = 0;
    switch (tile.kind) {
      case TileKind::Rhombus: want_up = 1; want_down = 1; break;
      case TileKind::Trap1: want_up = 2; want_down = 1; break;
      case TileKind::Trap2: want_up = 1; want_down = 2; break;
      case TileKind::UnitUp: want_up = 1; want_down = 0; break;
      case TileKind::UnitDown: want_up = 0; want_down = 1; break;
    }
    if (tile.ups.size() != want_up || tile.downs.size() != want_down) {
      problem(where + ": wrong cell arity");
      continue;
    }
    bool in_grid = true;
    for (const UpCell& u : tile.ups)
      if (!valid_up(n, u)) {
        problem(where + ": up cell outside grid " + to_string(u));
        in_grid = false;
      }
    for (const DownCell& d : tile.downs)
      if (!valid_down(n, d)) {
        problem(where + ": down cell outside grid " + to_string(d));
        in_grid = false;
      }
    if (!in_grid) continue;
    bool shape_ok = true;
    switch (tile.kind) {
      case TileKind::Rhombus:
        shape_ok = adjacent(tile.ups[0], tile.downs[0]);
        break;
      case TileKind::Trap1:
        shape_ok = tile.ups[0] != tile.ups[1] && adjacent(tile.ups[0], tile.downs[0]) &&
                   adjacent(tile.ups[1], tile.downs[0]);
        break;
      case TileKind::Trap2:
        shape_ok = tile.downs[0] != tile.downs[1] && adjacent(tile.ups[0], tile.downs[0]) &&
                   adjacent(tile.ups[0], tile.downs[1]);
        break;
      default:
        break;
    }
    if (!shape_ok) {
      problem(where + ": cells do not form the claimed shape");
      continue;
    }
    for (const UpCell& u : tile.ups) ++up_cover[up_index(n, u)];
    for (const DownCell& d : tile.downs) ++down_cover[down_index(n, d)];
  }

  for (int i = 0; i < m; ++i) {
    int want = t.region.holes.contains_index(i) ? 0 : 1;
    if (up_cover[i] != want)
      problem("up cell " + to_string(up_at(n, i)) + " covered " + std::to_string(up_cover[i]) +
              " times, expected " + std::to_string(want));
  }
  for (int j = 0; j < dm; ++j) {
    int want = down_excluded[j] ? 0 : 1;
    if (down_cover[j] != want)
      problem("down cell " + to_string(down_at(n, j)) + " covered " + std::to_string(down_cover[j]) +
              " times, expected " + std::to_string(want));
  }

  TileCounts c = t.counts();
  if (c.unit_up == 0 && c.unit_down == 0 && !t.tiles.empty()) {
    int region_ups = t.region.up_count();
    int region_downs = dm - static_cast<int>(t.excluded_downs.size());
    if (c.trap1 - c.trap2 != region_ups - region_downs)
      problem("count identity violated: t1 - t2 = " + std::to_string(c.trap1 - c.trap2) +
              " but region has up excess " + std::to_string(region_ups - region_downs));
  }
  return out;
}

namespace {

// Kuhn augmenting-path matching between down cells and their up-neighbours,
// holes removed. Deterministic: downs and neighbour slots in canonical order.
struct RhombusMatcher {
  int n, m, dm;
  std::vector<std::array<int, 3>> adj;  // up index per neighbour slot, -1 if hole
  std::vector<int> match_up, match_down;
  std::vector<unsigned> seen;
  unsigned stamp = 0;

  explicit RhombusMatcher(const HoleyRegion& region)
      : n(region.n),
        m(up_cell_count(n)),
        dm(down_cell_count(n)),
        adj(dm),
        match_up(m, -1),
        match_down(dm, -1),
        seen(m, 0) {
    for (int j = 0; j < dm; ++j) {
      auto nb = up_neighbors(down_at(n, j));
      for (int s = 0; s < 3; ++s) {
        int ui = up_index(n, nb[s]);
        adj[j][s] = region.holes.contains_index(ui) ? -1 : ui;
      }
    }
  }

  bool augment(int j) {
    for (int ui : adj[j]) {
      if (ui < 0 || seen[ui] == stamp) continue;
      seen[ui] = stamp;
      if (match_up[ui] < 0 || augment(match_up[ui])) {
        match_up[ui] = j;
        match_down[j] = ui;
        return true;
      }
    }
    return false;
  }

  int solve() {
    int total = 0;
    for (int j = 0; j < dm; ++j) {
      ++stamp;
      if (augment(j)) ++total;
    }
    return total;
  }
};

}  // namespace

std::optional<Tiling> lozenge_tiling(const HoleyRegion& region) {
  if (region.up_count() != region.down_count()) return std::nullopt;
  RhombusMatcher matcher(region);
  if (matcher.solve() != matcher.dm) return std::nullopt;
  Tiling out{region, {}, {}};
  for (int j = 0; j < matcher.dm; ++j)
    out.tiles.push_back(Tile::rhombus(up_at(region.n, matcher.match_down[j]), down_at(region.n, j)));
  std::sort(out.tiles.begin(), out.tiles.end(), tile_less);
  return out;
}

Tiling max_rhombi_tiling(const HoleyRegion& region) {
  RhombusMatcher matcher(region);
  matcher.solve();
  Tiling out{region, {}, {}};
  for (int j = 0; j < matcher.dm; ++j) {
    if (matcher.match_down[j] >= 0)
      out.tiles.push_back(Tile::rhombus(up_at(region.n, matcher.match_down[j]), down_at(region.n, j)));
    else
      out.tiles.push_back(Tile::unit_down(down_at(region.n, j)));
  }
  for (int i = 0; i < matcher.m; ++i)
    if (matcher.match_up[i] < 0 && !region.holes.contains_index(i))
      out.tiles.push_back(Tile::unit_up(up_at(region.n, i)));
  std::sort(out.tiles.begin(), out.tiles.end(), tile_less);
  return out;
}

int max_rhombi_count(const HoleyRegion& region) {
  RhombusMatcher matcher(region);
  return matcher.solve();
}

TileKindSet::TileKindSet(std::initializer_list<TileKind> kinds) {
  for (TileKind k : kinds) add(k);
}

TileKindSet& TileKindSet::add(TileKind k) {
  mask |= 1u << static_cast<unsigned>(k);
  return *this;
}

int TileKindSet::count() const { return std::popcount(mask); }

namespace {

// Exact per-kind counts (rhombi, t1, t2) for one search level. Any single
// known value pins the other two through the cell-count identities
// r + 2*t1 + t2 = U and r + t1 + 2*t2 = D.
struct Trio {
  int r = 0, t1 = 0, t2 = 0;
};

std::optional<Trio> trio_from_t2(int U, int D, int t2) {
  Trio t;
  t.t2 = t2;
  t.t1 = U - D + t2;
  t.r = U - 2 * t.t1 - t.t2;
  if (t.t1 < 0 || t.r < 0 || t.t2 < 0) return std::nullopt;
  return t;
}

struct TrioPlan {
  std::vector<Trio> levels;  // tried in order
  bool truncated = false;    // minimize cutoff hid larger t2 values
};

TrioPlan plan_levels(const HoleyRegion& region, TileKindSet allowed,
                     const TileConstraints& constraints, const TileObjective& objective,
                     const SearchLimits& limits) {
  require(!allowed.contains(TileKind::UnitUp) && !allowed.contains(TileKind::UnitDown),
          "tile_exact supports rhombus, t1 and t2 tiles only");
  int U = region.up_count(), D = region.down_count();

  std::optional<int> want_r = constraints.rhombi, want_t1 = constraints.trap1,
                     want_t2 = constraints.trap2;
  if (objective.kind == TileObjective::Kind::RequireExact) {
    std::optional<int>* slot = nullptr;
    switch (objective.target) {
      case TileKind::Rhombus: slot = &want_r; break;
      case TileKind::Trap1: slot = &want_t1; break;
      case TileKind::Trap2: slot = &want_t2; break;
      default: throw std::invalid_argument("require_exact objective needs rhombus, t1 or t2");
    }
    if (*slot && **slot != objective.value) return {};  // contradictory request
    *slot = objective.value;
  } else if (objective.kind == TileObjective::Kind::Minimize) {
    require(objective.target == TileKind::Trap2, "only minimize(t2) is supported");
  }
  if (!allowed.contains(TileKind::Rhombus)) {
    if (want_r.value_or(0) != 0) return {};
    want_r = 0;
  }
  if (!allowed.contains(TileKind::Trap1)) {
    if (want_t1.value_or(0) != 0) return {};
    want_t1 = 0;
  }
  if (!allowed.contains(TileKind::Trap2)) {
    if (want_t2.value_or(0) != 0) return {};
    want_t2 = 0;
  }

  auto finish = [&](std::optional<Trio> t) {
    TrioPlan plan;
    if (!t) return plan;
    if (want_r && t->r != *want_r) return plan;
    if (want_t1 && t->t1 != *want_t1) return plan;
    if (want_t2 && t->t2 != *want_t2) return plan;
    plan.levels.push_back(*t);
    return plan;
  };

  if (want_t2) return finish(trio_from_t2(U, D, *want_t2));
  if (want_t1) return finish(trio_from_t2(U, D, *want_t1 - (U - D)));
  if (want_r) {
    // r + 2*t1 + t2 = U and r + t1 + 2*t2 = D give t1 + t2 and t1 - t2
    int s = U + D - 2 * *want_r;  // 3*(t1 + t2)
    if (s < 0 || s % 3 != 0) return {};
    int twice_t2 = s / 3 - (U - D);
    if (twice_t2 < 0 || twice_t2 % 2 != 0) return {};
    return finish(trio_from_t2(U, D, twice_t2 / 2));
  }

  // Nothing pinned: iterate t2 levels, smallest first. r >= 0 caps t2 at
  // (2D - U) / 3, which proves infeasibility once every level fails; the
  // minimize cutoff may stop the climb earlier, leaving it unproven.
  TrioPlan plan;
  int lo = std::max(0, D - U);
  int hi = 2 * D - U >= 0 ? (2 * D - U) / 3 : -1;
  if (objective.kind == TileObjective::Kind::Minimize) {
    int bound = limits.t2_bound < 0 ? region.n : limits.t2_bound;
    if (hi >= lo && bound < hi) {
      plan.truncated = true;
      hi = bound;
    }
  }
  for (int t2 = lo; t2 <= hi; ++t2)
    if (auto t = trio_from_t2(U, D, t2)) plan.levels.push_back(*t);
  return plan;
}

// Backtracking exact cover over tile placements. Cells are indexed ups
// first, then downs; branching picks the free cell with fewest usable
// placements, lowest index on ties.
struct CoverSolver {
  struct Placement {
    TileKind kind;
    std::array<int, 2> ups{{-1, -1}};
    std::array<int, 2> downs{{-1, -1}};
  };

  int n, m, dm;
  const HoleyRegion& region;
  std::vector<Placement> placements;
  std::vector<std::vector<int>> by_cell;  // cell -> placement ids, generation order
  std::vector<char> covered;              // per cell
  std::array<int, 3> used{{0, 0, 0}};     // rhombus, t1, t2
  std::array<int, 3> cap{{-1, -1, -1}};
  int free_cells = 0;
  std::uint64_t nodes = 0, max_nodes = 0;
  std::vector<int> chosen;

  CoverSolver(const HoleyRegion& region_, TileKindSet allowed)
      : n(region_.n), m(up_cell_count(n)), dm(down_cell_count(n)), region(region_) {
    covered.assign(m + dm, 0);
    for (int i = 0; i < m; ++i)
      if (region.holes.contains_index(i)) covered[i] = 1;
    for (char c : covered)
      if (!c) ++free_cells;

    by_cell.assign(m + dm, {});
    auto open_up = [&](int ui) { return !covered[ui]; };
    auto emit = [&](Placement p) {
      int id = static_cast<int>(placements.size());
      placements.push_back(p);
      for (int u : p.ups)
        if (u >= 0) by_cell[u].push_back(id);
      for (int d : p.downs)
        if (d >= 0) by_cell[m + d].push_back(id);
    };
    for (int j = 0; j < dm; ++j) {
      DownCell d = down_at(n, j);
      auto nb = up_neighbors(d);
      std::array<int, 3> ui;
      for (int s = 0; s < 3; ++s) ui[s] = up_index(n, nb[s]);
      if (allowed.contains(TileKind::Rhombus))
        for (int s = 0; s < 3; ++s)
          if (open_up(ui[s])) emit({TileKind::Rhombus, {ui[s], -1}, {j, -1}});
      if (allowed.contains(TileKind::Trap1))
        for (auto [x, y] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}})
          if (open_up(ui[x]) && open_up(ui[y])) emit({TileKind::Trap1, {ui[x], ui[y]}, {j, -1}});
    }
    if (allowed.contains(TileKind::Trap2))
      for (int i = 0; i < m; ++i) {
        if (!open_up(i)) continue;
        auto nbs = down_neighbors(up_at(n, i));
        std::sort(nbs.begin(), nbs.end(), [](const DownCell& x, const DownCell& y) {
          return canon_less(x, y);
        });
        for (std::size_t x = 0; x < nbs.size(); ++x)
          for (std::size_t y = x + 1; y < nbs.size(); ++y)
            emit({TileKind::Trap2, {i, -1}, {down_index(n, nbs[x]), down_index(n, nbs[y])}});
      }
  }

  static int kind_slot(TileKind k) {
    switch (k) {
      case TileKind::Rhombus: return 0;
      case TileKind::Trap1: return 1;
      default: return 2;
    }
  }

  bool usable(const Placement& p) const {
    int ks = kind_slot(p.kind);
    if (cap[ks] >= 0 && used[ks] >= cap[ks]) return false;
    for (int u : p.ups)
      if (u >= 0 && covered[u]) return false;
    for (int d : p.downs)
      if (d >= 0 && covered[m + d]) return false;
    return true;
  }

  void place(const Placement& p, int dir) {
    for (int u : p.ups)
      if (u >= 0) {
        covered[u] += dir;
        free_cells -= dir;
      }
    for (int d : p.downs)
      if (d >= 0) {
        covered[m + d] += dir;
        free_cells -= dir;
      }
    used[kind_slot(p.kind)] += dir;
  }

  bool solve() {
    if (++nodes > max_nodes)
      throw BudgetError("tile search exceeded its node budget of " + std::to_string(max_nodes));
    if (free_cells == 0) return true;
    int best_cell = -1, best_count = -1;
    for (int cell = 0; cell < m + dm; ++cell) {
      if (covered[cell]) continue;
      int count = 0;
      for (int id : by_cell[cell])
        if (usable(placements[id])) ++count;
      if (best_count < 0 || count < best_count) {
        best_cell = cell;
        best_count = count;
        if (count == 0) break;
      }
    }
    if (best_count == 0) return false;
    for (int id : by_cell[best_cell]) {
      const Placement& p = placements[id];
      if (!usable(p)) continue;
      place(p, +1);
      chosen.push_back(id);
      if (solve()) return true;
      chosen.pop_back();
      place(p, -1);
    }
    return false;
  }

  Tiling extract() const {
    Tiling out{region, {}, {}};
    for (int id : chosen) {
      const Placement& p = placements[id];
      switch (p.kind) {
        case TileKind::Rhombus:
          out.tiles.push_back(Tile::rhombus(up_at(n, p.ups[0]), down_at(n, p.downs[0])));
          break;
        case TileKind::Trap1:
          out.tiles.push_back(
              Tile::trap1(down_at(n, p.downs[0]), up_at(n, p.ups[0]), up_at(n, p.ups[1])));
          break;
        default:
          out.tiles.push_back(
              Tile::trap2(up_at(n, p.ups[0]), down_at(n, p.downs[0]), down_at(n, p.downs[1])));
          break;
      }
    }
    std::sort(out.tiles.begin(), out.tiles.end(), tile_less);
    return out;
  }
};

}  // namespace

std::optional<Tiling> tile_exact(const HoleyRegion& region, TileKindSet allowed,
                                 const TileConstraints& constraints, const TileObjective& objective,
                                 const SearchLimits& limits) {
  TrioPlan plan = plan_levels(region, allowed, constraints, objective, limits);
  CoverSolver solver(region, allowed);
  solver.max_nodes = limits.max_nodes;
  for (const Trio& level : plan.levels) {
    solver.cap = {level.r, level.t1, level.t2};
    solver.used = {0, 0, 0};
    std::fill(solver.covered.begin(), solver.covered.end(), 0);
    solver.free_cells = solver.dm;
    for (int i = 0; i < solver.m; ++i) {
      if (region.holes.contains_index(i))
        solver.covered[i] = 1;
      else
        ++solver.free_cells;
    }
    solver.chosen.clear();
    if (solver.solve()) return solver.extract();
  }
  if (plan.truncated)
    throw BudgetError("no tiling with t2 <= " +
                      std::to_string(limits.t2_bound < 0 ? region.n : limits.t2_bound) +
                      "; larger values unexplored");
  return std::nullopt;
}

std::optional<int> min_type2(const HoleyRegion& region, const SearchLimits& limits) {
  auto tiling = tile_exact(region, {TileKind::Rhombus, TileKind::Trap1, TileKind::Trap2}, {},
                           TileObjective::minimize(TileKind::Trap2), limits);
  if (!tiling) return std::nullopt;
  return tiling->counts().trap2;
}

namespace {

// Tile the bottom h rows of a size-m lattice triangle with one t1 per row
// plus rhombi, rotating each cell back into place rot times.
void append_bottom_strip(int n, const LatticeTri& tri, int h, int rot, std::vector<Tile>& out) {
  auto rot_up = [&](UpCell u) {
    for (int i = 0; i < rot; ++i) u = rotate(u);
    return u;
  };
  auto rot_down = [&](DownCell d) {
    for (int i = 0; i < rot; ++i) d = rotate(d);
    return d;
  };
  for (int j = 0; j < h; ++j) {
    int c = tri.r + j;
    auto up = [&](int b) { return UpCell{n - 1 - b - c, b, c}; };
    auto dn = [&](int b) { return DownCell{n - 2 - b - c, b, c}; };
    out.push_back(Tile::trap1(rot_down(dn(tri.q)), rot_up(up(tri.q)), rot_up(up(tri.q + 1))));
    for (int b = tri.q + 1; b <= tri.q + tri.k - 2 - j; ++b)
      out.push_back(Tile::rhombus(rot_up(up(b + 1)), rot_down(dn(b))));
  }
}

}  // namespace

Tiling annulus_tiling(int n, const LatticeTri& inner) {
  require(valid_tri(n, inner), "not a lattice triangle of T_" + std::to_string(n) + ": " + to_string(inner));
  Tiling out{HoleyRegion(n, tri_up_cells(n, inner)), tri_down_cells(n, inner), {}};

  // Peel the r bottom rows of T_n, then the q-side strip of what remains,
  // then the p-side strip; the leftover is exactly the inner triangle.
  append_bottom_strip(n, {0, 0, 0, n}, inner.r, 0, out.tiles);
  LatticeTri t1{0, 0, inner.r, n - inner.r};
  append_bottom_strip(n, rotate(rotate(t1)), inner.q, 1, out.tiles);
  LatticeTri t2{0, inner.q, inner.r, n - inner.r - inner.q};
  append_bottom_strip(n, rotate(t2), inner.p, 2, out.tiles);

  std::sort(out.tiles.begin(), out.tiles.end(), tile_less);
  return out;
}

Tiling reconfigure_up(const Tiling& t) {
  TilingCheck check = validate_tiling(t);
  if (!check.ok)
    throw std::invalid_argument("reconfigure_up: input tiling invalid: " + check.problems.front());
  for (const Tile& tile : t.tiles)
    require(tile.kind == TileKind::Rhombus || tile.kind == TileKind::UnitUp ||
                tile.kind == TileKind::UnitDown,
            "reconfigure_up expects rhombi and unit triangles only");

  int n = t.region.n;
  Tiling cur = t;
  bool moved = true;
  while (moved) {
    moved = false;
    // index tiles by covered up cell
    std::vector<int> up_owner(up_cell_count(n), -1);
    for (std::size_t i = 0; i < cur.tiles.size(); ++i)
      for (const UpCell& u : cur.tiles[i].ups) up_owner[up_index(n, u)] = static_cast<int>(i);
    for (std::size_t i = 0; i < cur.tiles.size() && !moved; ++i) {
      if (cur.tiles[i].kind != TileKind::UnitDown) continue;
      DownCell d = cur.tiles[i].downs[0];
      UpCell above = d.above();
      if (cur.region.holes.contains(above)) continue;
      int oi = up_owner[up_index(n, above)];
      if (cur.tiles[oi].kind == TileKind::UnitUp) continue;
      // horizontal rhombus through the cell above: swap it below, push the
      // unit down one row up through its other down cell
      DownCell other = cur.tiles[oi].downs[0];
      cur.tiles[oi] = Tile::rhombus(above, d);
      cur.tiles[i] = Tile::unit_down(other);
      moved = true;
      TilingCheck step = validate_tiling(cur);
      if (!step.ok)
        throw std::logic_error("reconfigure_up: move broke the tiling: " + step.problems.front());
    }
  }
  std::sort(cur.tiles.begin(), cur.tiles.end(), tile_less);
  return cur;
}

bool tile_border_check(int n, const LatticeTri& t, const Tile& tile) {
  require(tile.kind == TileKind::Rhombus || tile.kind == TileKind::Trap1,
          "border check applies to rhombus and t1 tiles");
  int ups = 0, downs = 0;
  for (const UpCell& u : tile.ups)
    if (tri_contains(n, t, u)) ++ups;
  for (const DownCell& d : tile.downs)
    if (tri_contains(n, t, d)) ++downs;
  return downs <= ups;
}

}  // namespace trimat
