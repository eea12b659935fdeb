#pragma once

// Conversions from library values to the oracle's name-based representation.
// Only element names and the declared cover list cross over.

#include <fstream>
#include <sstream>
#include <string>

#include "oracle.hpp"
#include "uninorm/uninorm.hpp"

namespace bridge {

inline oracle::Poset poset(const uninorm::BoundedLattice& lat) {
  std::vector<oracle::Name> names(lat.names().begin(), lat.names().end());
  std::vector<std::pair<oracle::Name, oracle::Name>> covers;
  for (const auto& [lo, hi] : lat.covers()) covers.emplace_back(lat.name(lo), lat.name(hi));
  return oracle::Poset(std::move(names), covers);
}

inline oracle::Unary unary(const uninorm::UnaryOpTable& op) {
  const auto& lat = *op.lattice();
  oracle::Unary m;
  for (auto x : lat.elements()) m[lat.name(x)] = lat.name(op(x));
  return m;
}

inline oracle::Table table(const uninorm::FullBinOpTable& u) {
  const auto& lat = *u.lattice();
  oracle::Table t;
  for (auto x : lat.elements())
    for (auto y : lat.elements()) t[{lat.name(x), lat.name(y)}] = lat.name(u(x, y));
  return t;
}

inline oracle::BinFn binop(const uninorm::PartialBinOpTable& p) {
  return [&p](const oracle::Name& x, const oracle::Name& y) {
    const auto& lat = *p.lattice();
    return lat.name(p(lat.find(x), lat.find(y)));
  };
}

// Source-tree file, for fixtures and golden tables.
inline std::string read_source(const std::string& rel) {
  std::ifstream in(std::string(UNINORM_SOURCE_DIR) + "/" + rel, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + rel);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace bridge
