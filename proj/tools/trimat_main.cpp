// trimat: oracles, tiling solvers, and verification for the tiling matroids
// on the triangular grid T_n.
//
// Exit codes: 0 predicate true / success, 1 predicate false / infeasible,
// 2 usage or input error, 3 resource budget exhausted.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "trimat/cellset_io.hpp"
#include "trimat/matroid.hpp"
#include "trimat/render.hpp"
#include "trimat/tiler.hpp"
#include "trimat/trigrid.hpp"
#include "trimat/verify.hpp"

namespace {

using namespace trimat;

std::string read_text(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write " + out_path);
  out << text;
}

// The working cell set: --cells names a document (path or "-" for stdin),
// a bare --n means all of u(T_n). When both appear they must agree on n.
struct SetArgs {
  std::string cells_path;
  int n = 0;

  CellSet load() const {
    if (!cells_path.empty()) {
      CellSetDocument doc = parse_cellset(read_text(cells_path));
      if (n != 0 && n != doc.n)
        throw std::invalid_argument("--n " + std::to_string(n) + " conflicts with document n = " +
                                    std::to_string(doc.n));
      return doc.to_cellset();
    }
    if (n == 0) throw std::invalid_argument("need --cells or --n");
    return CellSet::full(n);
  }
};

std::uint64_t parse_budget(const std::string& text, std::uint64_t dflt) {
  if (text.empty() || text == "default") return dflt;
  try {
    std::size_t used = 0;
    unsigned long long v = std::stoull(text, &used);
    if (used != text.size()) throw std::invalid_argument("");
    return v;
  } catch (...) {
    throw std::invalid_argument("--budget expects a count or \"default\", got \"" + text + "\"");
  }
}

TileKindSet parse_tiles(const std::vector<std::string>& names) {
  TileKindSet set;
  for (const std::string& name : names) {
    auto k = tile_kind_from_name(name);
    if (!k) throw std::invalid_argument("unknown tile kind \"" + name + "\"");
    set.add(*k);
  }
  return set;
}

std::string counts_line(const Tiling& t) {
  TileCounts c = t.counts();
  std::ostringstream os;
  os << "tiles: rhombus=" << c.rhombus << " t1=" << c.trap1 << " t2=" << c.trap2
     << " up=" << c.unit_up << " down=" << c.unit_down;
  return os.str();
}

std::string render_as(const Tiling& t, const std::string& format) {
  return format == "svg" ? render_svg(t) : render_ascii(t);
}

std::string set_line(const CellSet& s) {
  std::string out = "{";
  bool first = true;
  for (const UpCell& u : s.cells()) {
    if (!first) out += ",";
    out += to_string(u);
    first = false;
  }
  return out + "}";
}

int run(int argc, char** argv) {
  CLI::App app{"tiling matroids and tilings of the triangular grid"};
  app.require_subcommand(1);

  SetArgs set_args;
  std::string out_path;
  std::string format = "ascii";
  std::string budget_flag = "default";
  std::uint64_t seed = 0;
  std::vector<std::string> tiles_names;
  std::string objective_flag;
  std::vector<int> tri_vals;
  std::string kind_name;
  std::vector<std::string> theorem_names;

  auto add_set_args = [&](CLI::App* cmd, bool need_cells) {
    auto* cells = cmd->add_option("--cells", set_args.cells_path,
                                  "cell-set document, \"-\" for stdin");
    cmd->add_option("--n", set_args.n, "grid order; without --cells the set is all of u(T_n)");
    if (need_cells) cells->required();
  };
  auto add_out = [&](CLI::App* cmd) {
    cmd->add_option("--out", out_path, "write output here instead of stdout");
  };
  auto add_render_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "svg or ascii (default ascii)")
        ->check(CLI::IsMember({"svg", "ascii"}));
    add_out(cmd);
  };

  auto* cmd_indep = app.add_subcommand("indep", "is the set independent in the tiling matroid?");
  add_set_args(cmd_indep, false);
  auto* cmd_rank = app.add_subcommand("rank", "rank of the set");
  add_set_args(cmd_rank, false);
  auto* cmd_closure = app.add_subcommand("closure", "closure of the set, as a plain document");
  add_set_args(cmd_closure, false);
  add_out(cmd_closure);
  auto* cmd_basis = app.add_subcommand("basis", "is the set a basis?");
  add_set_args(cmd_basis, false);
  auto* cmd_circuit = app.add_subcommand("circuit", "is the set a circuit?");
  add_set_args(cmd_circuit, true);
  auto* cmd_flat = app.add_subcommand("flat", "is the set a flat?");
  add_set_args(cmd_flat, false);
  auto* cmd_hull = app.add_subcommand("hull", "smallest lattice triangle containing the set");
  add_set_args(cmd_hull, true);

  auto* cmd_tile = app.add_subcommand("tile", "tile T_n with holes at the given cells");
  add_set_args(cmd_tile, false);
  cmd_tile->add_option("--tiles", tiles_names, "allowed kinds: rhombus,t1,t2,up,down")
      ->delimiter(',');
  cmd_tile->add_option("--objective", objective_flag, "min-t2 or exact-t1=<k>");
  cmd_tile->add_option("--budget", budget_flag, "search-node budget, or \"default\"");
  add_render_format(cmd_tile);

  auto* cmd_mint2 = app.add_subcommand("min-type2",
                                       "minimum type-2 trapezoid count over rhombus/t1/t2 tilings");
  add_set_args(cmd_mint2, false);
  cmd_mint2->add_option("--budget", budget_flag, "search-node budget, or \"default\"");

  auto* cmd_annulus = app.add_subcommand("annulus",
                                         "constructive tiling of T_n minus an inner triangle");
  cmd_annulus->add_option("--n", set_args.n, "grid order")->required();
  cmd_annulus->add_option("--tri", tri_vals, "inner triangle p,q,r,k")
      ->delimiter(',')
      ->expected(4)
      ->required();
  add_render_format(cmd_annulus);

  auto* cmd_enum = app.add_subcommand("enum", "list independents, bases, circuits, or flats");
  cmd_enum->add_option("--n", set_args.n, "grid order")->required();
  cmd_enum->add_option("--kind", kind_name, "independents, bases, circuits, or flats")->required();
  cmd_enum->add_option("--budget", budget_flag, "subset-scan budget, or \"default\"");
  add_out(cmd_enum);

  auto* cmd_verify = app.add_subcommand("verify", "cross-check the library against itself");
  cmd_verify->add_option("--n", set_args.n, "grid order")->required();
  cmd_verify->add_option("--theorem", theorem_names, "restrict to named checks (repeatable)");
  cmd_verify->add_option("--budget", budget_flag, "items per universe before sampling");
  cmd_verify->add_option("--seed", seed, "sampling stream");
  cmd_verify->add_option("--format", format, "json-report")
      ->check(CLI::IsMember({"json-report"}));
  add_out(cmd_verify);

  auto* cmd_render = app.add_subcommand("render", "draw T_n with holes at the given cells");
  add_set_args(cmd_render, false);
  add_render_format(cmd_render);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (*cmd_indep) {
    CellSet s = set_args.load();
    TilingMatroid m(s.ambient_n());
    if (auto tri = m.violating_triangle(s)) {
      Saturation sat = saturation(*tri, s);
      std::cout << "false\n"
                << "violating triangle " << to_string(*tri) << ": " << sat.count
                << " cells, size " << sat.size << "\n";
      return 1;
    }
    std::cout << "true\n";
    return 0;
  }
  if (*cmd_rank) {
    CellSet s = set_args.load();
    std::cout << TilingMatroid(s.ambient_n()).rank(s) << "\n";
    return 0;
  }
  if (*cmd_closure) {
    CellSet s = set_args.load();
    CellSet cl = TilingMatroid(s.ambient_n()).closure(s);
    emit(out_path, serialize_cellset_plain(CellSetDocument::from_cellset(cl)));
    return 0;
  }
  if (*cmd_basis) {
    CellSet s = set_args.load();
    TilingMatroid m(s.ambient_n());
    if (s.size() != m.n()) {
      std::cout << "false\n"
                << "size " << s.size() << ", a basis has " << m.n() << " cells\n";
      return 1;
    }
    if (auto tri = m.violating_triangle(s)) {
      Saturation sat = saturation(*tri, s);
      std::cout << "false\n"
                << "violating triangle " << to_string(*tri) << ": " << sat.count
                << " cells, size " << sat.size << "\n";
      return 1;
    }
    std::cout << "true\n";
    return 0;
  }
  if (*cmd_circuit) {
    CellSet s = set_args.load();
    TilingMatroid m(s.ambient_n());
    if (m.is_circuit(s)) {
      std::cout << "true\n";
      return 0;
    }
    std::cout << "false\n";
    if (m.is_independent(s)) {
      std::cout << "the set is independent\n";
    } else {
      for (const UpCell& u : s.cells()) {
        CellSet probe = s;
        probe.erase(u);
        if (!m.is_independent(probe)) {
          std::cout << "still dependent without " << to_string(u) << "\n";
          break;
        }
      }
    }
    return 1;
  }
  if (*cmd_flat) {
    CellSet s = set_args.load();
    TilingMatroid m(s.ambient_n());
    bool flat = m.is_flat_closure(s);
    std::cout << (flat ? "true" : "false") << "\n";
    std::cout << "geometric reading: " << (m.is_flat_geometric(s) ? "yes" : "no") << "\n";
    if (flat && !s.empty()) {
      std::cout << "decomposition:";
      for (const LatticeTri& t : m.flat_decomposition(s)) std::cout << ' ' << to_string(t);
      std::cout << "\n";
    }
    return flat ? 0 : 1;
  }
  if (*cmd_hull) {
    CellSet s = set_args.load();
    std::cout << to_string(triangular_hull(s)) << "\n";
    return 0;
  }
  if (*cmd_tile) {
    CellSet s = set_args.load();
    HoleyRegion region(s.ambient_n(), s);
    TileKindSet allowed = tiles_names.empty() ? TileKindSet{TileKind::Rhombus}
                                              : parse_tiles(tiles_names);
    SearchLimits limits;
    limits.max_nodes = parse_budget(budget_flag, limits.max_nodes);

    std::optional<Tiling> tiling;
    TileKindSet lozenge{TileKind::Rhombus};
    TileKindSet with_units{TileKind::Rhombus, TileKind::UnitUp, TileKind::UnitDown};
    TileKindSet cover_kinds{TileKind::Rhombus, TileKind::Trap1, TileKind::Trap2};
    bool searchable = (allowed.mask & ~cover_kinds.mask) == 0 && allowed.mask != 0;
    if (allowed == lozenge && objective_flag.empty()) {
      tiling = lozenge_tiling(region);
    } else if (allowed == with_units && objective_flag.empty()) {
      tiling = max_rhombi_tiling(region);
    } else if (searchable) {
      TileObjective objective;
      if (objective_flag == "min-t2") {
        objective = TileObjective::minimize(TileKind::Trap2);
      } else if (objective_flag.rfind("exact-t1=", 0) == 0) {
        objective = TileObjective::require_exact(TileKind::Trap1,
                                                 std::stoi(objective_flag.substr(9)));
      } else if (!objective_flag.empty()) {
        throw std::invalid_argument("unknown --objective \"" + objective_flag + "\"");
      }
      tiling = tile_exact(region, allowed, {}, objective, limits);
    } else {
      throw std::invalid_argument("unsupported tile set; use rhombus | rhombus,up,down | "
                                  "any subset of rhombus,t1,t2");
    }
    if (!tiling) {
      std::cout << "infeasible\n";
      return 1;
    }
    emit(out_path, render_as(*tiling, format));
    std::cerr << counts_line(*tiling) << "\n";
    return 0;
  }
  if (*cmd_mint2) {
    CellSet s = set_args.load();
    HoleyRegion region(s.ambient_n(), s);
    SearchLimits limits;
    limits.max_nodes = parse_budget(budget_flag, limits.max_nodes);
    if (auto k = min_type2(region, limits)) {
      std::cout << *k << "\n";
      return 0;
    }
    std::cout << "infeasible\n";
    return 1;
  }
  if (*cmd_annulus) {
    LatticeTri inner{tri_vals[0], tri_vals[1], tri_vals[2], tri_vals[3]};
    Tiling tiling = annulus_tiling(set_args.n, inner);
    emit(out_path, render_as(tiling, format));
    std::cerr << counts_line(tiling) << "\n";
    return 0;
  }
  if (*cmd_enum) {
    auto kind = set_kind_from_name(kind_name);
    if (!kind) throw std::invalid_argument("unknown --kind \"" + kind_name + "\"");
    TilingMatroid m(set_args.n);
    std::ostringstream os;
    std::uint64_t total = for_each_set(m, *kind, [&](const CellSet& s) { os << set_line(s) << "\n"; },
                                       parse_budget(budget_flag, kDefaultEnumBudget));
    emit(out_path, os.str());
    std::cerr << "total: " << total << "\n";
    return 0;
  }
  if (*cmd_verify) {
    VerifySettings settings;
    settings.budget = parse_budget(budget_flag, settings.budget);
    settings.seed = seed;
    std::vector<TheoremId> ids;
    for (const std::string& name : theorem_names) {
      auto id = theorem_from_name(name);
      if (!id) throw std::invalid_argument("unknown --theorem \"" + name + "\"");
      ids.push_back(*id);
    }
    if (ids.empty()) ids = all_theorems();
    TilingMatroid m(set_args.n);
    std::vector<VerifyReport> reports;
    for (TheoremId id : ids) {
      reports.push_back(check(m, id, settings));
      std::cerr << report_summary(reports.back());
    }
    emit(out_path, reports_to_json(reports));
    return all_passed(reports) ? 0 : 1;
  }
  if (*cmd_render) {
    CellSet s = set_args.load();
    Tiling bare;
    bare.region = HoleyRegion(s.ambient_n(), s);
    emit(out_path, render_as(bare, format));
    return 0;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const trimat::BudgetError& e) {
    std::cerr << "budget exhausted: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
