#include "trimat/cellset_io.hpp"

#include <cctype>
#include <set>
#include <sstream>

#include "json.hpp"

namespace trimat {
namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

std::string triple_str(long long a, long long b, long long c) {
  std::ostringstream os;
  os << '(' << a << ',' << b << ',' << c << ')';
  return os.str();
}

// Shared validation once a triple has been read; `where` locates it in the
// input ("cells[3]" or "line 7").
UpCell check_triple(int n, long long a, long long b, long long c, const std::string& where,
                    std::set<UpCell>& seen) {
  if (a < 0 || b < 0 || c < 0)
    fail(where + " = " + triple_str(a, b, c) + ": negative coordinate");
  if (a + b + c != n - 1)
    fail(where + " = " + triple_str(a, b, c) + ": coordinate sum " + std::to_string(a + b + c) +
         " != n-1 = " + std::to_string(n - 1));
  UpCell u{static_cast<int>(a), static_cast<int>(b), static_cast<int>(c)};
  if (!seen.insert(u).second) fail(where + ": duplicate cell " + to_string(u));
  return u;
}

CellSetDocument parse_structured(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(std::string("structured input is not valid: ") + e.what());
  }
  if (!j.is_object()) fail("structured input must be a single object");
  if (!j.contains("n")) fail("missing n: the document must carry the grid order");
  if (!j["n"].is_number_integer()) fail("n must be an integer");
  long long n = j["n"].get<long long>();
  if (n < 1 || n > 100000) fail("n out of range: " + std::to_string(n));
  CellSetDocument doc;
  doc.n = static_cast<int>(n);
  if (!j.contains("cells") || !j["cells"].is_array())
    fail("missing cells: expected an array of integer triples");
  std::set<UpCell> seen;
  for (std::size_t i = 0; i < j["cells"].size(); ++i) {
    const auto& e = j["cells"][i];
    std::string where = "cells[" + std::to_string(i) + "]";
    if (!e.is_array() || e.size() != 3 || !e[0].is_number_integer() ||
        !e[1].is_number_integer() || !e[2].is_number_integer())
      fail(where + ": expected an integer triple [a,b,c]");
    doc.cells.push_back(check_triple(doc.n, e[0].get<long long>(), e[1].get<long long>(),
                                     e[2].get<long long>(), where, seen));
  }
  if (j.contains("label")) {
    if (!j["label"].is_string()) fail("label must be a string");
    doc.label = j["label"].get<std::string>();
  }
  return doc;
}

CellSetDocument parse_plain(const std::string& text) {
  CellSetDocument doc;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool have_n = false;
  std::set<UpCell> seen;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<long long> nums;
    std::string tok;
    bool bad_token = false;
    while (ls >> tok) {
      try {
        std::size_t used = 0;
        nums.push_back(std::stoll(tok, &used));
        if (used != tok.size()) bad_token = true;
      } catch (...) {
        bad_token = true;
      }
    }
    std::string where = "line " + std::to_string(lineno);
    if (!have_n) {
      if (nums.empty() && !bad_token) continue;  // leading blank/comment lines
      if (bad_token || nums.size() != 1)
        fail("missing n: the first content line must be the grid order alone (" + where + ")");
      if (nums[0] < 1 || nums[0] > 100000) fail("n out of range: " + std::to_string(nums[0]));
      doc.n = static_cast<int>(nums[0]);
      have_n = true;
      continue;
    }
    if (nums.empty() && !bad_token) continue;
    if (bad_token || nums.size() != 3) fail(where + ": expected an integer triple \"a b c\"");
    doc.cells.push_back(check_triple(doc.n, nums[0], nums[1], nums[2], where, seen));
  }
  if (!have_n) fail("missing n: empty input");
  return doc;
}

}  // namespace

CellSet CellSetDocument::to_cellset() const {
  CellSet s(n);
  for (const UpCell& u : cells) s.insert(u);
  return s;
}

CellSetDocument CellSetDocument::from_cellset(const CellSet& s, std::string label) {
  CellSetDocument doc;
  doc.n = s.ambient_n();
  doc.cells = s.cells();
  doc.label = std::move(label);
  return doc;
}

CellSetDocument parse_cellset(const std::string& text) {
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    return ch == '{' ? parse_structured(text) : parse_plain(text);
  }
  fail("missing n: empty input");
}

std::string serialize_cellset(const CellSetDocument& doc) {
  nlohmann::ordered_json j;
  j["n"] = doc.n;
  auto cells = nlohmann::ordered_json::array();
  for (const UpCell& u : doc.cells) cells.push_back({u.a, u.b, u.c});
  j["cells"] = cells;
  if (!doc.label.empty()) j["label"] = doc.label;
  return j.dump(2) + "\n";
}

std::string serialize_cellset_plain(const CellSetDocument& doc) {
  std::ostringstream os;
  if (!doc.label.empty()) os << "# " << doc.label << "\n";
  os << doc.n << "\n";
  for (const UpCell& u : doc.cells) os << u.a << ' ' << u.b << ' ' << u.c << "\n";
  return os.str();
}

}  // namespace trimat
