#include "trimat/matroid.hpp"

#include <algorithm>

#include "trimat/tiler.hpp"

namespace trimat {

TilingMatroid::TilingMatroid(int n) : n_(n) {
  tris_ = lattice_triangles(n);  // validates n
  tri_cells_.reserve(tris_.size());
  for (const LatticeTri& t : tris_) tri_cells_.push_back(tri_up_cells(n, t));
}

int TilingMatroid::ground_size() const { return up_cell_count(n_); }

void TilingMatroid::check_ambient(const CellSet& s) const {
  if (s.ambient_n() != n_)
    throw std::invalid_argument("cell set lives on T_" + std::to_string(s.ambient_n()) +
                                ", matroid on T_" + std::to_string(n_));
}

bool TilingMatroid::is_independent(const CellSet& s) const {
  check_ambient(s);
  int sz = s.size();
  // a size-k violation needs k < |s| cells exceeded and k >= 2 (a single
  // cell cannot hold two members); triangles are sorted by size
  for (std::size_t i = 0; i < tris_.size(); ++i) {
    int k = tris_[i].k;
    if (k >= sz) break;
    if (k < 2) continue;
    if (s.intersection_size(tri_cells_[i]) > k) return false;
  }
  return true;
}

std::optional<LatticeTri> TilingMatroid::violating_triangle(const CellSet& s) const {
  check_ambient(s);
  for (std::size_t i = 0; i < tris_.size(); ++i)
    if (s.intersection_size(tri_cells_[i]) > tris_[i].k) return tris_[i];
  return std::nullopt;
}

int TilingMatroid::rank(const CellSet& s) const {
  check_ambient(s);
  CellSet acc(n_);
  int r = 0;
  s.for_each_index([&](int i) {
    acc.insert_index(i);
    if (is_independent(acc))
      ++r;
    else
      acc.erase_index(i);
  });
  return r;
}

int TilingMatroid::rank_via_matching(const CellSet& s) const {
  check_ambient(s);
  int matched = max_rhombi_count(HoleyRegion(n_, s));
  return s.size() - (down_cell_count(n_) - matched);
}

CellSet TilingMatroid::closure(const CellSet& s) const {
  check_ambient(s);
  int base = rank(s);
  CellSet out = s;
  int m = ground_size();
  for (int i = 0; i < m; ++i) {
    if (s.contains_index(i)) continue;
    CellSet probe = s;
    probe.insert_index(i);
    if (rank(probe) == base) out.insert_index(i);
  }
  return out;
}

bool TilingMatroid::is_basis(const CellSet& s) const {
  check_ambient(s);
  return s.size() == n_ && is_independent(s);
}

bool TilingMatroid::is_circuit(const CellSet& s) const {
  check_ambient(s);
  int sz = s.size();
  if (sz > n_ + 1) return false;  // some deletion still exceeds the rank
  if (is_independent(s)) return false;
  bool minimal = true;
  CellSet probe = s;
  s.for_each_index([&](int i) {
    if (!minimal) return;
    probe.erase_index(i);
    if (!is_independent(probe)) minimal = false;
    probe.insert_index(i);
  });
  return minimal;
}

bool TilingMatroid::is_flat_closure(const CellSet& s) const { return closure(s) == s; }

bool TilingMatroid::is_flat_geometric(const CellSet& s) const {
  check_ambient(s);
  for (std::size_t i = 0; i < tris_.size(); ++i) {
    int count = s.intersection_size(tri_cells_[i]);
    if (count >= tris_[i].k && count < tri_cells_[i].size()) return false;
  }
  return true;
}

std::vector<LatticeTri> TilingMatroid::strictly_oversaturated(const CellSet& s) const {
  check_ambient(s);
  std::vector<LatticeTri> out;
  for (std::size_t i = 0; i < tris_.size(); ++i)
    if (s.intersection_size(tri_cells_[i]) > tris_[i].k) out.push_back(tris_[i]);
  return out;
}

std::vector<LatticeTri> TilingMatroid::flat_decomposition(const CellSet& s) const {
  if (!is_flat_closure(s))
    throw std::invalid_argument("flat_decomposition requires a flat");
  std::vector<std::size_t> complete;
  for (std::size_t i = 0; i < tris_.size(); ++i)
    if (s.intersection_size(tri_cells_[i]) == static_cast<int>(tri_cells_[i].size()))
      complete.push_back(i);
  std::vector<LatticeTri> out;
  for (std::size_t i : complete) {
    bool maximal = true;
    for (std::size_t j : complete)
      if (j != i && tris_[j].p <= tris_[i].p && tris_[j].q <= tris_[i].q &&
          tris_[j].r <= tris_[i].r) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(tris_[i]);
  }
  return out;
}

const char* set_kind_name(SetKind k) {
  switch (k) {
    case SetKind::Independents: return "independents";
    case SetKind::Bases: return "bases";
    case SetKind::Circuits: return "circuits";
    case SetKind::Flats: return "flats";
  }
  return "?";
}

std::optional<SetKind> set_kind_from_name(const std::string& name) {
  for (SetKind k : {SetKind::Independents, SetKind::Bases, SetKind::Circuits, SetKind::Flats})
    if (name == set_kind_name(k)) return k;
  return std::nullopt;
}

std::uint64_t for_each_set(const TilingMatroid& ctx, SetKind kind,
                           const std::function<void(const CellSet&)>& fn, std::uint64_t budget) {
  int m = ctx.ground_size();
  if (m > 63 || (std::uint64_t{1} << m) > budget)
    throw BudgetError("enumerating T_" + std::to_string(ctx.n()) + " scans 2^" +
                      std::to_string(m) + " subsets, over the budget of " +
                      std::to_string(budget));
  std::uint64_t count = 0;
  int n = ctx.n();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    int pc = std::popcount(mask);
    bool candidate = true;
    switch (kind) {
      case SetKind::Bases: candidate = pc == n; break;
      case SetKind::Circuits: candidate = pc <= n + 1; break;
      default: break;
    }
    if (!candidate) continue;
    CellSet s = CellSet::from_mask(n, mask);
    bool keep = false;
    switch (kind) {
      case SetKind::Independents: keep = ctx.is_independent(s); break;
      case SetKind::Bases: keep = ctx.is_basis(s); break;
      case SetKind::Circuits: keep = ctx.is_circuit(s); break;
      case SetKind::Flats: keep = ctx.is_flat_closure(s); break;
    }
    if (keep) {
      ++count;
      if (fn) fn(s);
    }
  }
  return count;
}

std::vector<CellSet> enumerate_sets(const TilingMatroid& ctx, SetKind kind, std::uint64_t budget) {
  std::vector<CellSet> out;
  for_each_set(ctx, kind, [&](const CellSet& s) { out.push_back(s); }, budget);
  return out;
}

}  // namespace trimat
