#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "trimat/matroid.hpp"
#include "trimat/tiler.hpp"

using namespace trimat;

namespace {

HoleyRegion region_of(int n, std::uint64_t mask) {
  return HoleyRegion(n, CellSet::from_mask(n, mask));
}

// Every down cell of every tile must sit below a hole or a unit-up tile
// once the upward reconfiguration has finished.
bool downs_pushed_up(const Tiling& t) {
  std::set<UpCell> unit_ups;
  for (const Tile& tile : t.tiles)
    if (tile.kind == TileKind::UnitUp) unit_ups.insert(tile.ups[0]);
  for (const Tile& tile : t.tiles) {
    if (tile.kind != TileKind::UnitDown) continue;
    UpCell above = tile.downs[0].above();
    if (!t.region.holes.contains(above) && !unit_ups.count(above)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("tile factories build canonical tiles and reject non-adjacent cells") {
  Tile r = Tile::rhombus({1, 0, 1}, {1, 0, 0});
  CHECK(r.kind == TileKind::Rhombus);
  CHECK(r.ups.size() == 1);
  CHECK(r.downs.size() == 1);
  CHECK_THROWS_AS(Tile::rhombus({2, 0, 0}, {0, 0, 1}), std::invalid_argument);

  Tile t1 = Tile::trap1({1, 0, 0}, {1, 1, 0}, {2, 0, 0});
  CHECK(t1.ups == std::vector<UpCell>{{2, 0, 0}, {1, 1, 0}});
  CHECK_THROWS_AS(Tile::trap1({1, 0, 0}, {2, 0, 0}, {0, 0, 2}), std::invalid_argument);

  Tile t2 = Tile::trap2({1, 0, 1}, {1, 0, 0}, {0, 0, 1});
  CHECK(t2.downs == std::vector<DownCell>{{1, 0, 0}, {0, 0, 1}});
  CHECK_THROWS_AS(Tile::trap2({2, 0, 0}, {1, 0, 0}, {0, 1, 0}), std::invalid_argument);

  for (TileKind k : {TileKind::Rhombus, TileKind::Trap1, TileKind::Trap2, TileKind::UnitUp,
                     TileKind::UnitDown})
    CHECK(tile_kind_from_name(tile_kind_name(k)) == k);
  CHECK_FALSE(tile_kind_from_name("hexagon").has_value());
}

TEST_CASE("tiling validation flags broken covers") {
  HoleyRegion r(2);
  r.holes.insert({1, 0, 0});
  r.holes.insert({0, 0, 1});
  Tiling good{r, {}, {Tile::rhombus({0, 1, 0}, {0, 0, 0})}};
  CHECK(validate_tiling(good).ok);

  Tiling covers_hole{r, {}, {Tile::rhombus({1, 0, 0}, {0, 0, 0})}};
  CHECK_FALSE(validate_tiling(covers_hole).ok);

  Tiling leaves_gap{r, {}, {}};
  CHECK_FALSE(validate_tiling(leaves_gap).ok);

  Tiling doubled{r, {}, {Tile::rhombus({0, 1, 0}, {0, 0, 0}), Tile::unit_up({0, 1, 0})}};
  CHECK_FALSE(validate_tiling(doubled).ok);

  Tiling out_of_bounds{r, {}, {Tile::rhombus({0, 1, 0}, {0, 0, 0}), Tile::unit_up({2, 2, 2})}};
  CHECK_FALSE(validate_tiling(out_of_bounds).ok);
}

TEST_CASE("lozenge tilings exist exactly at the bases") {
  for (int n = 2; n <= 4; ++n) {
    TilingMatroid m(n);
    int cells = m.ground_size();
    // walk all n-subsets via a simple odometer
    std::vector<int> combo(n);
    for (int i = 0; i < n; ++i) combo[i] = i;
    for (;;) {
      CellSet s(n);
      for (int i : combo) s.insert_index(i);
      auto t = lozenge_tiling(HoleyRegion(n, s));
      CHECK(t.has_value() == m.is_basis(s));
      if (t) {
        CHECK(validate_tiling(*t).ok);
        CHECK(t->counts() == TileCounts{n * (n - 1) / 2, 0, 0, 0, 0});
      }
      int i = n - 1;
      while (i >= 0 && combo[i] == cells - n + i) --i;
      if (i < 0) break;
      ++combo[i];
      for (int j = i + 1; j < n; ++j) combo[j] = combo[j - 1] + 1;
    }
  }
}

TEST_CASE("bottom-row holes force the unique all-vertical tiling") {
  HoleyRegion r(3, CellSet(3, {{2, 0, 0}, {1, 1, 0}, {0, 2, 0}}));
  auto t = lozenge_tiling(r);
  REQUIRE(t.has_value());
  std::vector<Tile> want{
      Tile::rhombus({1, 0, 1}, {1, 0, 0}),
      Tile::rhombus({0, 1, 1}, {0, 1, 0}),
      Tile::rhombus({0, 0, 2}, {0, 0, 1}),
  };
  std::sort(want.begin(), want.end(), tile_less);
  CHECK(t->tiles == want);
}

TEST_CASE("maximum-rhombi tilings recover the rank on every subset") {
  for (int n = 2; n <= 4; ++n) {
    TilingMatroid m(n);
    for (std::uint64_t mask = 0; mask < (1ull << m.ground_size()); ++mask) {
      CellSet s = CellSet::from_mask(n, mask);
      HoleyRegion reg(n, s);
      Tiling t = max_rhombi_tiling(reg);
      CHECK(validate_tiling(t).ok);
      int r = m.rank(s);
      TileCounts c = t.counts();
      CHECK(c.rhombus == n * (n - 1) / 2 - (s.size() - r));
      CHECK(c.unit_down == s.size() - r);
      CHECK(c.unit_up == n - r);
      CHECK(c.rhombus == max_rhombi_count(reg));
    }
  }
}

TEST_CASE("exact cover with rhombi and type-1 trapezoids detects independence") {
  for (int n = 2; n <= 4; ++n) {
    TilingMatroid m(n);
    TileKindSet kinds{TileKind::Rhombus, TileKind::Trap1};
    for (std::uint64_t mask = 0; mask < (1ull << m.ground_size()); ++mask) {
      if (n == 2 && mask == 0) continue;  // see the degenerate case below
      CellSet s = CellSet::from_mask(n, mask);
      auto t = tile_exact(HoleyRegion(n, s), kinds);
      CHECK(t.has_value() == m.is_independent(s));
      if (t) {
        CHECK(validate_tiling(*t).ok);
        CHECK(t->counts().trap1 == n - s.size());
        CHECK(t->counts().trap2 == 0);
      }
    }
  }
}

TEST_CASE("the whole of T_2 defeats the trapezoid equivalence by a cell count") {
  // the empty set is independent, yet two type-1 trapezoids would need two
  // down cells and T_2 has only one; the equivalence starts at n = 3 for
  // the empty set
  TilingMatroid m(2);
  CHECK(m.is_independent(CellSet(2)));
  CHECK_FALSE(tile_exact(HoleyRegion(2), {TileKind::Rhombus, TileKind::Trap1}).has_value());
  CHECK(tile_exact(HoleyRegion(3), {TileKind::Rhombus, TileKind::Trap1}).has_value());
}

TEST_CASE("count constraints and objectives steer the search") {
  HoleyRegion empty3(3);
  // T_3 with no holes: 6 ups vs 3 downs, so three more tiles must eat the
  // excess, and only t1 does; rhombi fill nothing else
  TileKindSet all{TileKind::Rhombus, TileKind::Trap1, TileKind::Trap2};
  auto t = tile_exact(empty3, all);
  REQUIRE(t.has_value());
  CHECK(validate_tiling(*t).ok);

  TileConstraints want_two_rhombi;
  want_two_rhombi.rhombi = 2;
  auto constrained = tile_exact(empty3, all, want_two_rhombi);
  if (constrained) CHECK(constrained->counts().rhombus == 2);

  auto exact1 = tile_exact(empty3, all, {}, TileObjective::require_exact(TileKind::Trap1, 3));
  REQUIRE(exact1.has_value());
  CHECK(exact1->counts().trap1 == 3);

  auto none = tile_exact(empty3, all, {}, TileObjective::require_exact(TileKind::Trap1, 1));
  CHECK_FALSE(none.has_value());

  auto minimized = tile_exact(empty3, all, {}, TileObjective::minimize(TileKind::Trap2));
  REQUIRE(minimized.has_value());
  CHECK(minimized->counts().trap2 == 0);
}

TEST_CASE("minimum type-2 counts on landmark regions") {
  // independent holes: no type-2 needed
  CHECK(min_type2(HoleyRegion(4, CellSet(4, {{3, 0, 0}}))) == 0);
  // a size-3 circuit: no rhombus/trapezoid tiling at all
  CHECK_FALSE(min_type2(HoleyRegion(3, CellSet(3, {{2, 0, 0}, {1, 1, 0}, {1, 0, 1}}))).has_value());
  // a size-4 circuit needs exactly one type-2 trapezoid
  CHECK(min_type2(HoleyRegion(4, CellSet(4, {{3, 0, 0}, {2, 1, 0}, {1, 2, 0}, {1, 0, 2}}))) == 1);
}

TEST_CASE("search budgets trip a budget error") {
  SearchLimits tiny;
  tiny.max_nodes = 1;
  TileKindSet all{TileKind::Rhombus, TileKind::Trap1, TileKind::Trap2};
  CHECK_THROWS_AS(tile_exact(HoleyRegion(5), all, {}, TileObjective::none(), tiny), BudgetError);
}

TEST_CASE("annulus construction tiles every ring with n-k type-1 trapezoids") {
  for (int n = 1; n <= 8; ++n) {
    for (const LatticeTri& inner : lattice_triangles(n)) {
      Tiling t = annulus_tiling(n, inner);
      CHECK(validate_tiling(t).ok);
      TileCounts c = t.counts();
      CHECK(c.trap1 == n - inner.k);
      CHECK(c.trap2 == 0);
      CHECK(c.unit_up == 0);
      CHECK(c.unit_down == 0);
      CHECK(t.region.holes == tri_up_cells(n, inner));
      CHECK(static_cast<int>(t.excluded_downs.size()) == inner.k * (inner.k - 1) / 2);
    }
  }
  CHECK_THROWS_AS(annulus_tiling(4, LatticeTri{0, 0, 0, 5}), std::invalid_argument);
}

TEST_CASE("upward reconfiguration keeps counts and pushes every down cell up") {
  for (int n = 2; n <= 4; ++n) {
    for (std::uint64_t mask = 0; mask < (1ull << up_cell_count(n)); ++mask) {
      Tiling t = max_rhombi_tiling(region_of(n, mask));
      Tiling moved = reconfigure_up(t);
      CHECK(validate_tiling(moved).ok);
      CHECK(moved.counts() == t.counts());
      CHECK(downs_pushed_up(moved));
    }
  }
}

TEST_CASE("border inequality holds for every tile against every triangle") {
  int n = 4;
  auto tris = lattice_triangles(n);
  std::vector<Tile> tiles;
  for (const DownCell& d : down_cells(n)) {
    auto ups = up_neighbors(d);
    for (const UpCell& u : ups) tiles.push_back(Tile::rhombus(u, d));
    tiles.push_back(Tile::trap1(d, ups[0], ups[1]));
    tiles.push_back(Tile::trap1(d, ups[0], ups[2]));
    tiles.push_back(Tile::trap1(d, ups[1], ups[2]));
  }
  for (const Tile& tile : tiles)
    for (const LatticeTri& t : tris) CHECK(tile_border_check(n, t, tile));
}
