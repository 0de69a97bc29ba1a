#pragma once

#include <string>
#include <vector>

#include "trimat/trigrid.hpp"

namespace trimat {

// A cell-set input/output document. Two interchangeable encodings:
//
//   structured:  {"n": 4, "cells": [[3,0,0], [1,1,1]], "label": "demo"}
//   plain:       first line n, one "a b c" triple per line, '#' comments
//
// Cells keep their input order; duplicates are rejected at parse time.
struct CellSetDocument {
  int n = 0;
  std::vector<UpCell> cells;
  std::string label;

  CellSet to_cellset() const;
  static CellSetDocument from_cellset(const CellSet& s, std::string label = "");

  friend bool operator==(const CellSetDocument&, const CellSetDocument&) = default;
};

// Accepts either encoding (structured when the first non-space byte is
// '{'). Throws std::invalid_argument with a positioned diagnostic: missing
// n, malformed triple, wrong coordinate sum, negative coordinate or
// duplicate cell each read differently.
CellSetDocument parse_cellset(const std::string& text);

std::string serialize_cellset(const CellSetDocument& doc);        // structured
std::string serialize_cellset_plain(const CellSetDocument& doc);  // plain

}  // namespace trimat
