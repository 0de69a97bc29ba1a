#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "trimat/trigrid.hpp"

namespace trimat {

enum class TileKind { Rhombus, Trap1, Trap2, UnitUp, UnitDown };

const char* tile_kind_name(TileKind k);  // rhombus, t1, t2, up, down
std::optional<TileKind> tile_kind_from_name(const std::string& name);

// One placed tile. A rhombus covers an adjacent up/down pair; a type-1
// trapezoid covers a down cell with two of its up-neighbours; a type-2
// trapezoid covers an up cell with two of its down-neighbours; unit tiles
// cover a single cell. Cells are kept in canonical order.
struct Tile {
  TileKind kind = TileKind::UnitUp;
  std::vector<UpCell> ups;
  std::vector<DownCell> downs;

  static Tile rhombus(const UpCell& u, const DownCell& d);
  static Tile trap1(const DownCell& d, const UpCell& u1, const UpCell& u2);
  static Tile trap2(const UpCell& u, const DownCell& d1, const DownCell& d2);
  static Tile unit_up(const UpCell& u);
  static Tile unit_down(const DownCell& d);

  friend bool operator==(const Tile&, const Tile&) = default;
};

bool tile_less(const Tile& x, const Tile& y);  // canonical output order

// T_n with a set of upward cells removed. Down cells all remain.
struct HoleyRegion {
  int n = 0;
  CellSet holes;

  HoleyRegion() = default;
  explicit HoleyRegion(int n);
  HoleyRegion(int n, CellSet holes);

  int up_count() const;    // n(n+1)/2 - |holes|
  int down_count() const;  // n(n-1)/2
};

struct TileCounts {
  int rhombus = 0, trap1 = 0, trap2 = 0, unit_up = 0, unit_down = 0;
  int total() const { return rhombus + trap1 + trap2 + unit_up + unit_down; }
  int of(TileKind k) const;
  friend bool operator==(const TileCounts&, const TileCounts&) = default;
};

// excluded_downs lists down cells that are not part of the region either;
// only annulus tilings use it (the inner triangle removes its down cells).
struct Tiling {
  HoleyRegion region;
  std::vector<DownCell> excluded_downs;
  std::vector<Tile> tiles;

  TileCounts counts() const;
};

struct TilingCheck {
  bool ok = true;
  std::vector<std::string> problems;
};

// Full audit: tile shapes, bounds, holes untouched, exact disjoint cover,
// and the count identity t1 - t2 = (region ups) - (region downs) for pure
// rhombus/trapezoid tilings.
TilingCheck validate_tiling(const Tiling& t);

// Rhombi only; feasible exactly when the down/up adjacency graph minus the
// holes has a perfect matching.
std::optional<Tiling> lozenge_tiling(const HoleyRegion& region);

// Rhombi plus unit triangles, maximizing the rhombus count; unmatched cells
// become unit tiles.
Tiling max_rhombi_tiling(const HoleyRegion& region);
int max_rhombi_count(const HoleyRegion& region);  // just the matching number

struct TileKindSet {
  unsigned mask = 0;
  TileKindSet() = default;
  TileKindSet(std::initializer_list<TileKind> kinds);
  bool contains(TileKind k) const { return mask >> static_cast<unsigned>(k) & 1u; }
  TileKindSet& add(TileKind k);
  int count() const;
  friend bool operator==(const TileKindSet&, const TileKindSet&) = default;
};

// Exact per-kind tile-count targets; unset means unconstrained.
struct TileConstraints {
  std::optional<int> rhombi;
  std::optional<int> trap1;
  std::optional<int> trap2;
};

struct TileObjective {
  enum class Kind { None, Minimize, RequireExact };
  Kind kind = Kind::None;
  TileKind target = TileKind::Trap2;
  int value = 0;

  static TileObjective none() { return {}; }
  static TileObjective minimize(TileKind k) { return {Kind::Minimize, k, 0}; }
  static TileObjective require_exact(TileKind k, int v) { return {Kind::RequireExact, k, v}; }
};

struct SearchLimits {
  std::uint64_t max_nodes = 50'000'000;  // backtracking nodes per solve
  int t2_bound = -1;                     // minimize cutoff; -1 means n
};

// Exact-cover backtracking over tile placements, fail-first on the cell
// with fewest candidates, canonical tie-break. allowed must be a subset of
// {rhombus, t1, t2}. Infeasible is a value; exceeding limits throws
// BudgetError.
std::optional<Tiling> tile_exact(const HoleyRegion& region, TileKindSet allowed,
                                 const TileConstraints& constraints = {},
                                 const TileObjective& objective = TileObjective::none(),
                                 const SearchLimits& limits = {});

// Minimum type-2 trapezoid count over {rhombus, t1, t2} tilings, trying
// t2 = 0, 1, ... in turn. nullopt means proven infeasible at every level;
// BudgetError means the cutoff stopped the climb first.
std::optional<int> min_type2(const HoleyRegion& region, const SearchLimits& limits = {});

// Constructive tiling of the annulus T_n minus an inner lattice triangle of
// size k: at most three lattice trapezoids, each tiled row by row with one
// t1 tile and rhombi. Uses exactly n - k t1 tiles, no search.
Tiling annulus_tiling(int n, const LatticeTri& inner);

// Repeatedly push unit-down tiles one row up through horizontal rhombi until
// each sits directly below a hole or a unit-up tile. Counts are preserved.
Tiling reconfigure_up(const Tiling& t);

// |d(tile ∩ T)| <= |u(tile ∩ T)| for rhombi and t1 tiles; the border
// inequality behind the annulus argument.
bool tile_border_check(int n, const LatticeTri& t, const Tile& tile);

}  // namespace trimat
