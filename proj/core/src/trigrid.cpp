#include "trimat/trigrid.hpp"

#include <algorithm>
#include <sstream>

namespace trimat {
namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

void require_order(int n) {
  require(n >= 1, "grid order must be >= 1, got " + std::to_string(n));
}

}  // namespace

int up_cell_count(int n) {
  require_order(n);
  return n * (n + 1) / 2;
}

int down_cell_count(int n) {
  require_order(n);
  return n * (n - 1) / 2;
}

int lattice_tri_count(int n) {
  require_order(n);
  return n * (n + 1) * (n + 2) / 6;
}

bool valid_up(int n, const UpCell& u) {
  return u.a >= 0 && u.b >= 0 && u.c >= 0 && u.a + u.b + u.c == n - 1;
}

bool valid_down(int n, const DownCell& d) {
  return d.a >= 0 && d.b >= 0 && d.c >= 0 && d.a + d.b + d.c == n - 2;
}

bool valid_tri(int n, const LatticeTri& t) {
  return t.p >= 0 && t.q >= 0 && t.r >= 0 && t.k >= 1 &&
         t.p + t.q + t.r + t.k == n;
}

std::vector<UpCell> up_cells(int n) {
  require_order(n);
  std::vector<UpCell> out;
  out.reserve(up_cell_count(n));
  for (int a = n - 1; a >= 0; --a)
    for (int b = n - 1 - a; b >= 0; --b) out.push_back({a, b, n - 1 - a - b});
  return out;
}

std::vector<DownCell> down_cells(int n) {
  require_order(n);
  std::vector<DownCell> out;
  out.reserve(down_cell_count(n));
  for (int a = n - 2; a >= 0; --a)
    for (int b = n - 2 - a; b >= 0; --b) out.push_back({a, b, n - 2 - a - b});
  return out;
}

int up_index(int n, const UpCell& u) {
  require(valid_up(n, u), "not an up cell of T_" + std::to_string(n) + ": " + to_string(u));
  int j = n - 1 - u.a;
  return j * (j + 1) / 2 + u.c;
}

int down_index(int n, const DownCell& d) {
  require(valid_down(n, d), "not a down cell of T_" + std::to_string(n) + ": " + to_string(d));
  int j = n - 2 - d.a;
  return j * (j + 1) / 2 + d.c;
}

UpCell up_at(int n, int index) {
  require(index >= 0 && index < up_cell_count(n),
          "up-cell index out of range: " + std::to_string(index));
  int j = 0;
  while ((j + 1) * (j + 2) / 2 <= index) ++j;
  int c = index - j * (j + 1) / 2;
  return {n - 1 - j, j - c, c};
}

DownCell down_at(int n, int index) {
  require(index >= 0 && index < down_cell_count(n),
          "down-cell index out of range: " + std::to_string(index));
  int j = 0;
  while ((j + 1) * (j + 2) / 2 <= index) ++j;
  int c = index - j * (j + 1) / 2;
  return {n - 2 - j, j - c, c};
}

std::vector<LatticeTri> lattice_triangles(int n) {
  require_order(n);
  std::vector<LatticeTri> out;
  out.reserve(lattice_tri_count(n));
  for (int k = 1; k <= n; ++k)
    for (int p = n - k; p >= 0; --p)
      for (int q = n - k - p; q >= 0; --q) out.push_back({p, q, n - k - p - q, k});
  return out;
}

std::array<UpCell, 3> up_neighbors(const DownCell& d) {
  return {UpCell{d.a + 1, d.b, d.c}, UpCell{d.a, d.b + 1, d.c}, d.above()};
}

std::vector<DownCell> down_neighbors(const UpCell& u) {
  std::vector<DownCell> out;
  if (u.a > 0) out.push_back({u.a - 1, u.b, u.c});
  if (u.b > 0) out.push_back({u.a, u.b - 1, u.c});
  if (u.c > 0) out.push_back({u.a, u.b, u.c - 1});
  return out;
}

bool tri_contains(int n, const LatticeTri& t, const UpCell& u) {
  require(valid_tri(n, t), "not a lattice triangle of T_" + std::to_string(n) + ": " + to_string(t));
  require(valid_up(n, u), "not an up cell of T_" + std::to_string(n) + ": " + to_string(u));
  return u.a >= t.p && u.b >= t.q && u.c >= t.r;
}

bool tri_contains(int n, const LatticeTri& t, const DownCell& d) {
  require(valid_tri(n, t), "not a lattice triangle of T_" + std::to_string(n) + ": " + to_string(t));
  require(valid_down(n, d), "not a down cell of T_" + std::to_string(n) + ": " + to_string(d));
  return d.a >= t.p && d.b >= t.q && d.c >= t.r;
}

CellSet::CellSet(int n) : n_(n) {
  require_order(n);
  words_.resize((up_cell_count(n) + 63) / 64, 0);
}

CellSet::CellSet(int n, std::initializer_list<UpCell> cells) : CellSet(n) {
  for (const UpCell& u : cells) insert(u);
}

CellSet CellSet::full(int n) {
  CellSet s(n);
  int m = s.universe_size();
  for (int i = 0; i < m; ++i) s.words_[i / 64] |= std::uint64_t{1} << (i % 64);
  return s;
}

CellSet CellSet::from_mask(int n, std::uint64_t mask) {
  CellSet s(n);
  int m = s.universe_size();
  require(m >= 64 || mask < (std::uint64_t{1} << m), "mask has bits outside the ground set");
  s.words_[0] = mask;
  return s;
}

int CellSet::universe_size() const { return n_ == 0 ? 0 : up_cell_count(n_); }

int CellSet::size() const {
  int total = 0;
  for (std::uint64_t w : words_) total += std::popcount(w);
  return total;
}

bool CellSet::empty() const {
  for (std::uint64_t w : words_)
    if (w) return false;
  return true;
}

bool CellSet::contains(const UpCell& u) const { return contains_index(up_index(n_, u)); }

bool CellSet::contains_index(int i) const {
  require(i >= 0 && i < universe_size(), "cell index out of range: " + std::to_string(i));
  return (words_[i / 64] >> (i % 64)) & 1;
}

void CellSet::insert(const UpCell& u) { insert_index(up_index(n_, u)); }

void CellSet::insert_index(int i) {
  require(i >= 0 && i < universe_size(), "cell index out of range: " + std::to_string(i));
  words_[i / 64] |= std::uint64_t{1} << (i % 64);
}

void CellSet::erase(const UpCell& u) { erase_index(up_index(n_, u)); }

void CellSet::erase_index(int i) {
  require(i >= 0 && i < universe_size(), "cell index out of range: " + std::to_string(i));
  words_[i / 64] &= ~(std::uint64_t{1} << (i % 64));
}

std::vector<UpCell> CellSet::cells() const {
  std::vector<UpCell> out;
  out.reserve(size());
  for_each_index([&](int i) { out.push_back(up_at(n_, i)); });
  return out;
}

void CellSet::check_same_ambient(const CellSet& other) const {
  require(n_ == other.n_, "cell sets live on different grids: T_" + std::to_string(n_) +
                              " vs T_" + std::to_string(other.n_));
}

bool CellSet::subset_of(const CellSet& other) const {
  check_same_ambient(other);
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w] & ~other.words_[w]) return false;
  return true;
}

bool CellSet::intersects(const CellSet& other) const {
  check_same_ambient(other);
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w] & other.words_[w]) return true;
  return false;
}

int CellSet::intersection_size(const CellSet& other) const {
  check_same_ambient(other);
  int total = 0;
  for (std::size_t w = 0; w < words_.size(); ++w)
    total += std::popcount(words_[w] & other.words_[w]);
  return total;
}

CellSet& CellSet::operator|=(const CellSet& other) {
  check_same_ambient(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  return *this;
}

CellSet& CellSet::operator&=(const CellSet& other) {
  check_same_ambient(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  return *this;
}

CellSet& CellSet::operator-=(const CellSet& other) {
  check_same_ambient(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~other.words_[w];
  return *this;
}

std::size_t CellSetHash::operator()(const CellSet& s) const {
  // FNV-1a over the words plus the ambient order.
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  mix(static_cast<std::uint64_t>(s.ambient_n()));
  for (std::uint64_t w : s.words()) mix(w);
  return static_cast<std::size_t>(h);
}

Saturation saturation(const LatticeTri& t, const CellSet& s) {
  int n = s.ambient_n();
  require(valid_tri(n, t), "not a lattice triangle of T_" + std::to_string(n) + ": " + to_string(t));
  Saturation out;
  out.size = t.k;
  out.capacity = t.k * (t.k + 1) / 2;
  s.for_each_index([&](int i) {
    UpCell u = up_at(n, i);
    if (u.a >= t.p && u.b >= t.q && u.c >= t.r) ++out.count;
  });
  return out;
}

LatticeTri triangular_hull(const CellSet& s) {
  require(!s.empty(), "triangular hull of the empty set is undefined");
  int n = s.ambient_n();
  int p = n, q = n, r = n;
  s.for_each_index([&](int i) {
    UpCell u = up_at(n, i);
    p = std::min(p, u.a);
    q = std::min(q, u.b);
    r = std::min(r, u.c);
  });
  return {p, q, r, n - p - q - r};
}

std::optional<LatticeTri> tri_intersect(int n, const LatticeTri& s, const LatticeTri& t) {
  require(valid_tri(n, s), "not a lattice triangle of T_" + std::to_string(n) + ": " + to_string(s));
  require(valid_tri(n, t), "not a lattice triangle of T_" + std::to_string(n) + ": " + to_string(t));
  int p = std::max(s.p, t.p), q = std::max(s.q, t.q), r = std::max(s.r, t.r);
  int k = n - p - q - r;
  if (k < 1) return std::nullopt;
  return LatticeTri{p, q, r, k};
}

LatticeTri tri_join(int n, const LatticeTri& s, const LatticeTri& t) {
  require(valid_tri(n, s), "not a lattice triangle of T_" + std::to_string(n) + ": " + to_string(s));
  require(valid_tri(n, t), "not a lattice triangle of T_" + std::to_string(n) + ": " + to_string(t));
  int p = std::min(s.p, t.p), q = std::min(s.q, t.q), r = std::min(s.r, t.r);
  return {p, q, r, n - p - q - r};
}

CellSet tri_up_cells(int n, const LatticeTri& t) {
  require(valid_tri(n, t), "not a lattice triangle of T_" + std::to_string(n) + ": " + to_string(t));
  CellSet out(n);
  for (int a = t.p; a <= t.p + t.k - 1; ++a)
    for (int b = t.q; b <= n - 1 - a - t.r; ++b) out.insert({a, b, n - 1 - a - b});
  return out;
}

std::vector<DownCell> tri_down_cells(int n, const LatticeTri& t) {
  require(valid_tri(n, t), "not a lattice triangle of T_" + std::to_string(n) + ": " + to_string(t));
  std::vector<DownCell> out;
  out.reserve(t.k * (t.k - 1) / 2);
  for (int a = n - 2; a >= t.p; --a)
    for (int b = n - 2 - a; b >= t.q; --b)
      if (n - 2 - a - b >= t.r) out.push_back({a, b, n - 2 - a - b});
  return out;
}

std::string to_string(const UpCell& u) {
  std::ostringstream os;
  os << '(' << u.a << ',' << u.b << ',' << u.c << ')';
  return os.str();
}

std::string to_string(const DownCell& d) {
  std::ostringstream os;
  os << '(' << d.a << ',' << d.b << ',' << d.c << ')';
  return os.str();
}

std::string to_string(const LatticeTri& t) {
  std::ostringstream os;
  os << '(' << t.p << ',' << t.q << ',' << t.r << ';' << t.k << ')';
  return os.str();
}

}  // namespace trimat
