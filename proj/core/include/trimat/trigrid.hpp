#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace trimat {

// Coordinates on the order-n triangular grid T_n. An upward unit cell is
// addressed by (a, b, c) with a + b + c = n - 1: b counts columns in from
// the left edge, c rows up from the bottom, a the remaining distance to the
// right edge. Downward cells use the same triples with a + b + c = n - 2;
// the down cell (a, b, c) is surrounded by the three upward cells
// (a+1, b, c), (a, b+1, c) and (a, b, c+1), the last sitting directly above.

struct UpCell {
  int a = 0, b = 0, c = 0;
  friend auto operator<=>(const UpCell&, const UpCell&) = default;
};

struct DownCell {
  int a = 0, b = 0, c = 0;
  friend auto operator<=>(const DownCell&, const DownCell&) = default;
  UpCell above() const { return {a, b, c + 1}; }
};

// Size-k upward sub-triangle offset p steps from the right edge, q from the
// left and r from the bottom, so p + q + r + k = n.
struct LatticeTri {
  int p = 0, q = 0, r = 0, k = 1;
  friend auto operator<=>(const LatticeTri&, const LatticeTri&) = default;
};

// Thrown when a search or enumeration hits its configured resource limit.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int up_cell_count(int n);    // n(n+1)/2
int down_cell_count(int n);  // n(n-1)/2
int lattice_tri_count(int n);

bool valid_up(int n, const UpCell& u);
bool valid_down(int n, const DownCell& d);
bool valid_tri(int n, const LatticeTri& t);

// Canonical cell order: a descending, then b descending (c is determined).
// Every enumeration, index and piece of output in the library follows it.
std::vector<UpCell> up_cells(int n);
std::vector<DownCell> down_cells(int n);
int up_index(int n, const UpCell& u);
int down_index(int n, const DownCell& d);
UpCell up_at(int n, int index);
DownCell down_at(int n, int index);

// Lattice triangles ordered by size ascending, then offsets canonically;
// the k = 1 prefix mirrors the up-cell order.
std::vector<LatticeTri> lattice_triangles(int n);

std::array<UpCell, 3> up_neighbors(const DownCell& d);
std::vector<DownCell> down_neighbors(const UpCell& u);

bool tri_contains(int n, const LatticeTri& t, const UpCell& u);
bool tri_contains(int n, const LatticeTri& t, const DownCell& d);

// 120-degree rotation of T_n onto itself.
inline UpCell rotate(const UpCell& u) { return {u.b, u.c, u.a}; }
inline DownCell rotate(const DownCell& d) { return {d.b, d.c, d.a}; }
inline LatticeTri rotate(const LatticeTri& t) { return {t.q, t.r, t.p, t.k}; }

// Canonical-order comparators usable without knowing n.
inline bool canon_less(const UpCell& x, const UpCell& y) {
  return x.a != y.a ? x.a > y.a : x.b > y.b;
}
inline bool canon_less(const DownCell& x, const DownCell& y) {
  return x.a != y.a ? x.a > y.a : x.b > y.b;
}
inline bool canon_less(const LatticeTri& x, const LatticeTri& y) {
  if (x.k != y.k) return x.k < y.k;
  if (x.p != y.p) return x.p > y.p;
  return x.q > y.q;
}

// Subset of the up cells of T_n, stored as a bitset over canonical indices.
class CellSet {
 public:
  CellSet() = default;
  explicit CellSet(int n);
  CellSet(int n, std::initializer_list<UpCell> cells);
  static CellSet full(int n);
  static CellSet from_mask(int n, std::uint64_t mask);  // low 64 indices only

  int ambient_n() const { return n_; }
  int universe_size() const;
  int size() const;
  bool empty() const;

  bool contains(const UpCell& u) const;
  bool contains_index(int i) const;
  void insert(const UpCell& u);
  void insert_index(int i);
  void erase(const UpCell& u);
  void erase_index(int i);

  std::vector<UpCell> cells() const;

  template <class Fn>
  void for_each_index(Fn f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        int tz = std::countr_zero(bits);
        f(static_cast<int>(w * 64) + tz);
        bits &= bits - 1;
      }
    }
  }

  bool subset_of(const CellSet& other) const;
  bool intersects(const CellSet& other) const;
  int intersection_size(const CellSet& other) const;

  CellSet& operator|=(const CellSet& other);
  CellSet& operator&=(const CellSet& other);
  CellSet& operator-=(const CellSet& other);
  friend CellSet operator|(CellSet l, const CellSet& r) { return l |= r; }
  friend CellSet operator&(CellSet l, const CellSet& r) { return l &= r; }
  friend CellSet operator-(CellSet l, const CellSet& r) { return l -= r; }
  friend bool operator==(const CellSet&, const CellSet&) = default;

  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  void check_same_ambient(const CellSet& other) const;
  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

struct CellSetHash {
  std::size_t operator()(const CellSet& s) const;
};

// How a set loads a lattice triangle: count = |s ∩ u(T)| against the
// triangle's size and the full capacity |u(T)|.
struct Saturation {
  int count = 0;
  int size = 0;
  int capacity = 0;
  bool saturated() const { return count == size; }
  bool over_saturated() const { return count >= size; }
  bool strictly_over() const { return count > size; }
  bool complete() const { return count == capacity; }
};

Saturation saturation(const LatticeTri& t, const CellSet& s);

// Smallest lattice triangle containing every cell of s; s must be nonempty.
LatticeTri triangular_hull(const CellSet& s);

// Intersection of two lattice triangles is empty or again a lattice
// triangle; their join is the hull of the union.
std::optional<LatticeTri> tri_intersect(int n, const LatticeTri& s, const LatticeTri& t);
LatticeTri tri_join(int n, const LatticeTri& s, const LatticeTri& t);

CellSet tri_up_cells(int n, const LatticeTri& t);
std::vector<DownCell> tri_down_cells(int n, const LatticeTri& t);

std::string to_string(const UpCell& u);
std::string to_string(const DownCell& d);
std::string to_string(const LatticeTri& t);

}  // namespace trimat
