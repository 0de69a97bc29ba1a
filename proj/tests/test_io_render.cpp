#include <algorithm>
#include <random>
#include <string>

#include "doctest.h"
#include "trimat/cellset_io.hpp"
#include "trimat/render.hpp"
#include "trimat/tiler.hpp"

using namespace trimat;

namespace {

std::size_t count_polygons(const std::string& svg, const std::string& cls) {
  std::string needle = "class=\"" + cls + "\"";
  std::size_t pos = 0, hits = 0;
  while ((pos = svg.find(needle, pos)) != std::string::npos) {
    ++hits;
    pos += needle.size();
  }
  return hits;
}

std::string diagnostic_of(const std::string& input) {
  try {
    parse_cellset(input);
  } catch (const std::invalid_argument& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("structured documents parse and round-trip") {
  CellSetDocument doc = parse_cellset(R"({"n": 4, "cells": [[3,0,0]]})");
  CHECK(doc.n == 4);
  CHECK(doc.cells == std::vector<UpCell>{{3, 0, 0}});
  CHECK(doc.label.empty());

  doc.label = "corner";
  doc.cells.push_back({0, 2, 1});
  CHECK(parse_cellset(serialize_cellset(doc)) == doc);

  CellSetDocument plain = doc;
  plain.label.clear();
  CHECK(parse_cellset(serialize_cellset_plain(plain)) == plain);
}

TEST_CASE("plain documents accept comments and blank lines") {
  CellSetDocument doc = parse_cellset("# holes for the demo\n\n3\n2 0 0  # corner\n0 1 1\n");
  CHECK(doc.n == 3);
  CHECK(doc.cells == std::vector<UpCell>{{2, 0, 0}, {0, 1, 1}});
}

TEST_CASE("each malformed input earns its own diagnostic") {
  CHECK(diagnostic_of("").find("missing n") != std::string::npos);
  CHECK(diagnostic_of(R"({"cells": []})").find("missing n") != std::string::npos);
  CHECK(diagnostic_of(R"({"n": 4, "cells": [[2,2]]})").find("integer triple") != std::string::npos);
  std::string sum = diagnostic_of(R"({"n": 4, "cells": [[2,2,0]]})");
  CHECK(sum.find("coordinate sum 4 != n-1 = 3") != std::string::npos);
  CHECK(sum.find("cells[0]") != std::string::npos);
  std::string dup = diagnostic_of(R"({"n": 4, "cells": [[1,1,1],[3,0,0],[1,1,1]]})");
  CHECK(dup.find("duplicate cell (1,1,1)") != std::string::npos);
  CHECK(dup.find("cells[2]") != std::string::npos);
  CHECK(diagnostic_of(R"({"n": 3, "cells": [[-1,2,1]]})").find("negative") != std::string::npos);
  CHECK(diagnostic_of("3\n1 1\n").find("line 2") != std::string::npos);
  CHECK(diagnostic_of("3\nx y z\n").find("line 2") != std::string::npos);
  CHECK(diagnostic_of("{\"n\": 3, \"cells\": [[1,1").find("not valid") != std::string::npos);
}

TEST_CASE("documents convert to cell sets and back") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 2 + static_cast<int>(rng() % 5);
    CellSet s(n);
    for (int i = 0; i < up_cell_count(n); ++i)
      if (rng() & 1) s.insert_index(i);
    CellSetDocument doc = CellSetDocument::from_cellset(s, trial % 2 ? "t" : "");
    CHECK(doc.to_cellset() == s);
    CHECK(parse_cellset(serialize_cellset(doc)) == doc);
  }
}

TEST_CASE("a single rhombus in T_2 renders as one tile and two holes") {
  HoleyRegion r(2, CellSet(2, {{1, 0, 0}, {0, 0, 1}}));
  auto t = lozenge_tiling(r);
  REQUIRE(t.has_value());
  std::string svg = render_svg(*t);
  CHECK(count_polygons(svg, "rhombus") == 1);
  CHECK(count_polygons(svg, "hole") == 2);
  CHECK(count_polygons(svg, "t1") == 0);
  CHECK(svg.find("<svg xmlns=") == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(svg == render_svg(*t));
}

TEST_CASE("an empty tiling of an empty region is still a valid document") {
  Tiling none;
  std::string svg = render_svg(none);
  CHECK(svg.find("<svg xmlns=") == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(svg.find("<polygon") == std::string::npos);
}

TEST_CASE("merged tile outlines and per-cell holes add up") {
  Tiling t = annulus_tiling(5, {1, 1, 1, 2});
  std::string svg = render_svg(t);
  std::size_t total = count_polygons(svg, "rhombus") + count_polygons(svg, "t1") +
                      count_polygons(svg, "hole");
  CHECK(count_polygons(svg, "t1") == 3);
  CHECK(count_polygons(svg, "hole") == 3 + 1);  // 3 up cells + 1 down cell of the core
  CHECK(total == t.tiles.size() + 4);
  // a type-1 trapezoid outline has 4 corners after collinear merging
  std::size_t pos = svg.find("class=\"t1\" points=\"");
  REQUIRE(pos != std::string::npos);
  std::size_t end = svg.find('"', pos + 19);
  std::string pts = svg.substr(pos + 19, end - pos - 19);
  CHECK(std::count(pts.begin(), pts.end(), ',') == 4);
}

TEST_CASE("ascii renderings show one row per grid level") {
  Tiling whole = max_rhombi_tiling(HoleyRegion(3));
  std::string art = render_ascii(whole);
  CHECK(std::count(art.begin(), art.end(), '\n') == 3);

  Tiling ringed = annulus_tiling(4, {1, 1, 1, 1});
  std::string ring = render_ascii(ringed);
  CHECK(std::count(ring.begin(), ring.end(), '\n') == 4);
  CHECK(ring.find('#') != std::string::npos);
  CHECK(ring.find('1') != std::string::npos);
  CHECK(ring.find('r') != std::string::npos);
}

TEST_CASE("uncovered cells show as dots, holes as hashes, apex on top") {
  Tiling bare;
  bare.region = HoleyRegion(2, CellSet(2, {{1, 0, 0}}));
  CHECK(render_ascii(bare) == " .\n#..\n");

  Tiling full{HoleyRegion(2), {}, {Tile::trap1({0, 0, 0}, {1, 0, 0}, {0, 1, 0}),
                                   Tile::unit_up({0, 0, 1})}};
  REQUIRE(validate_tiling(full).ok);
  CHECK(render_ascii(full) == " u\n111\n");
}
