#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "trimat/trigrid.hpp"

namespace trimat {

// The tiling matroid on the up cells of T_n: a set is independent exactly
// when every lattice triangle of size k contains at most k of its cells.
// Immutable after construction; every oracle is a pure function of its
// arguments.
class TilingMatroid {
 public:
  explicit TilingMatroid(int n);

  int n() const { return n_; }
  int ground_size() const;

  const std::vector<LatticeTri>& triangles() const { return tris_; }
  const CellSet& triangle_cells(std::size_t i) const { return tri_cells_[i]; }

  bool is_independent(const CellSet& s) const;
  // First over-saturated triangle in canonical order, for diagnostics.
  std::optional<LatticeTri> violating_triangle(const CellSet& s) const;

  // Greedy over the canonical cell order; matroid exchange makes it exact.
  int rank(const CellSet& s) const;
  // |s| - (C(n,2) - max rhombi): the same number derived from tilings.
  int rank_via_matching(const CellSet& s) const;

  CellSet closure(const CellSet& s) const;
  bool is_basis(const CellSet& s) const;
  bool is_circuit(const CellSet& s) const;
  bool is_flat_closure(const CellSet& s) const;

  // Literal reading of the geometric flat description: every saturated or
  // strictly over-saturated triangle must be completely filled. Kept as
  // stated even where it disagrees with is_flat_closure; the verify module
  // measures the gap.
  bool is_flat_geometric(const CellSet& s) const;

  std::vector<LatticeTri> strictly_oversaturated(const CellSet& s) const;

  // Maximal completely filled triangles of a flat; pairwise disjoint and
  // covering s at every size this library has been run at.
  std::vector<LatticeTri> flat_decomposition(const CellSet& s) const;

 private:
  void check_ambient(const CellSet& s) const;
  int n_;
  std::vector<LatticeTri> tris_;
  std::vector<CellSet> tri_cells_;
};

enum class SetKind { Independents, Bases, Circuits, Flats };

const char* set_kind_name(SetKind k);
std::optional<SetKind> set_kind_from_name(const std::string& name);

inline constexpr std::uint64_t kDefaultEnumBudget = 2'000'000;

// Scans all subsets in canonical order (ascending bitmask over canonical
// cell indices), calling fn on each qualifying one; returns the count.
// Throws BudgetError up front when the scan cannot fit the budget.
std::uint64_t for_each_set(const TilingMatroid& ctx, SetKind kind,
                           const std::function<void(const CellSet&)>& fn,
                           std::uint64_t budget = kDefaultEnumBudget);

std::vector<CellSet> enumerate_sets(const TilingMatroid& ctx, SetKind kind,
                                    std::uint64_t budget = kDefaultEnumBudget);

}  // namespace trimat
