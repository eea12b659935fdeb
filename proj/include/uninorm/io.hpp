#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "uninorm/binary_op.hpp"
#include "uninorm/construct.hpp"
#include "uninorm/errors.hpp"
#include "uninorm/lattice.hpp"
#include "uninorm/unary_op.hpp"

namespace uninorm {

using ReferenceToUnknownElement = UnknownElement;

namespace detail {

using json = nlohmann::ordered_json;

inline std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

inline json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    auto [line, col] = line_column(text, e.byte);
    std::string what = e.what();
    // nlohmann prefixes "[json.exception.parse_error.101] parse error at line L, column C: "
    if (auto p = what.find(": "); p != std::string::npos) {
      auto q = what.find(": ", p + 2);
      if (q != std::string::npos) what = what.substr(q + 2);
    }
    throw ParseError("malformed JSON: " + what, line, col);
  }
}

inline const json& field(const json& obj, const char* key) {
  if (!obj.is_object()) throw ParseError("expected a JSON object");
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(std::string("missing field '") + key + "'");
  return *it;
}

inline std::string as_string(const json& v, const std::string& what) {
  if (!v.is_string()) throw ParseError(what + " must be a string");
  return v.get<std::string>();
}

inline std::string quote(const std::string& s) { return json(s).dump(); }

}  // namespace detail

// ---- intervals and regions ------------------------------------------------

/// "[a,b]", "]a,b[", "[a,b[" or "]a,b]" with element ids.
inline IntervalSpec parse_interval(std::string_view text, const BoundedLattice& lat) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.size() < 5 || (text.front() != '[' && text.front() != ']') ||
      (text.back() != '[' && text.back() != ']'))
    throw ParseError("malformed interval '" + std::string(text) + "'");
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) throw ParseError("interval needs two bounds");
  IntervalSpec s;
  s.low = lat.find(trim(text.substr(1, comma - 1)));
  s.high = lat.find(trim(text.substr(comma + 1, text.size() - comma - 2)));
  s.low_open = text.front() == ']';
  s.high_open = text.back() == '[';
  return s;
}

inline std::string format_interval(const IntervalSpec& s, const BoundedLattice& lat) {
  return std::string(s.low_open ? "]" : "[") + lat.name(s.low) + "," + lat.name(s.high) +
         (s.high_open ? "[" : "]");
}

/// A subset of L: "L", an interval, "L\<interval>", "I:<id>" (elements
/// incomparable with id) or "{a,b,...}".
inline ElemSet parse_region(std::string_view text, const BoundedLattice& lat) {
  if (text == "L") return lat.elements();
  if (text.rfind("I:", 0) == 0) return lat.incomparables(lat.find(text.substr(2)));
  if (text.rfind("L\\", 0) == 0) {
    const ElemSet minus = lat.interval(parse_interval(text.substr(2), lat));
    ElemSet out;
    for (Elem x : lat.elements())
      if (!contains(minus, x)) out.push_back(x);
    return out;
  }
  if (!text.empty() && text.front() == '{' && text.back() == '}') {
    std::vector<bool> in(lat.size(), false);
    std::string_view body = text.substr(1, text.size() - 2);
    while (!body.empty()) {
      auto c = body.find(',');
      std::string_view id = body.substr(0, c);
      while (!id.empty() && id.front() == ' ') id.remove_prefix(1);
      while (!id.empty() && id.back() == ' ') id.remove_suffix(1);
      if (!id.empty()) in[lat.find(id).index()] = true;
      if (c == std::string_view::npos) break;
      body.remove_prefix(c + 1);
    }
    ElemSet out;
    for (Elem x : lat.elements())
      if (in[x.index()]) out.push_back(x);
    return out;
  }
  return lat.interval(parse_interval(text, lat));
}

// ---- lattice documents ----------------------------------------------------

inline LatticePtr parse_lattice(std::string_view text) {
  const auto doc = detail::parse_json(text);
  const auto& els = detail::field(doc, "elements");
  if (!els.is_array()) throw ParseError("'elements' must be an array");
  std::vector<std::string> names;
  for (const auto& v : els) names.push_back(detail::as_string(v, "element id"));
  std::vector<std::pair<std::string, std::string>> covers;
  const auto& cv = detail::field(doc, "covers");
  if (!cv.is_array()) throw ParseError("'covers' must be an array");
  for (const auto& c : cv) {
    if (!c.is_array() || c.size() != 2) throw ParseError("each cover must be a [lower, upper] pair");
    covers.emplace_back(detail::as_string(c[0], "cover endpoint"),
                        detail::as_string(c[1], "cover endpoint"));
  }
  return build_lattice(std::move(names), covers,
                       detail::as_string(detail::field(doc, "bottom"), "'bottom'"),
                       detail::as_string(detail::field(doc, "top"), "'top'"));
}

inline std::string serialize_lattice(const BoundedLattice& lat) {
  using detail::quote;
  std::ostringstream os;
  os << "{\n  \"elements\": [";
  for (std::size_t i = 0; i < lat.size(); ++i) os << (i ? ", " : "") << quote(lat.names()[i]);
  os << "],\n  \"covers\": [";
  bool first = true;
  for (const auto& [lo, hi] : lat.covers()) {
    os << (first ? "" : ", ") << "[" << quote(lat.name(lo)) << ", " << quote(lat.name(hi)) << "]";
    first = false;
  }
  os << "],\n  \"bottom\": " << quote(lat.name(lat.bottom())) << ",\n  \"top\": "
     << quote(lat.name(lat.top())) << "\n}\n";
  return os.str();
}

// ---- operator documents ---------------------------------------------------

/// "identity", "join-with:<k>" or "meet-with:<k>".
inline std::vector<Elem> expand_operator_preset(std::string_view preset,
                                                const BoundedLattice& lat) {
  if (preset == "identity") return identity_map(lat);
  if (preset.rfind("join-with:", 0) == 0) return join_with_map(lat, lat.find(preset.substr(10)));
  if (preset.rfind("meet-with:", 0) == 0) return meet_with_map(lat, lat.find(preset.substr(10)));
  throw ParseError("unknown operator preset '" + std::string(preset) + "'");
}

inline OperatorKind parse_kind(const std::string& s) {
  if (s == "closure") return OperatorKind::closure;
  if (s == "interior") return OperatorKind::interior;
  throw ParseError("kind must be \"closure\" or \"interior\", got \"" + s + "\"");
}

inline UnaryOpTable parse_operator(std::string_view text, const LatticePtr& lat) {
  const auto doc = detail::parse_json(text);
  const OperatorKind kind = parse_kind(detail::as_string(detail::field(doc, "kind"), "'kind'"));
  std::vector<Elem> map;
  if (doc.contains("preset")) {
    map = expand_operator_preset(detail::as_string(doc["preset"], "'preset'"), *lat);
  } else {
    const auto& m = detail::field(doc, "map");
    if (!m.is_object()) throw ParseError("'map' must be an object");
    std::vector<std::optional<Elem>> partial(lat->size());
    for (const auto& [k, v] : m.items())
      partial[lat->find(k).index()] = lat->find(detail::as_string(v, "map value"));
    for (Elem x : lat->elements()) {
      if (!partial[x.index()]) throw ParseError("operator map is missing '" + lat->name(x) + "'");
      map.push_back(*partial[x.index()]);
    }
  }
  return validate_unary(lat, kind, std::move(map));
}

inline std::string serialize_operator(const UnaryOpTable& op) {
  using detail::quote;
  const auto& lat = *op.lattice();
  std::ostringstream os;
  os << "{\n  \"kind\": " << quote(to_string(op.kind())) << ",\n  \"map\": {";
  for (Elem x : lat.elements())
    os << (x.index() ? ", " : "") << quote(lat.name(x)) << ": " << quote(lat.name(op(x)));
  os << "}\n}\n";
  return os.str();
}

// ---- binop documents ------------------------------------------------------

namespace detail {

inline std::vector<Elem> parse_grid(const json& t, const BoundedLattice& lat, const ElemSet& dom) {
  if (!t.is_object()) throw ParseError("'table' must be an object of rows");
  const std::size_t m = dom.size();
  std::vector<int> pos(lat.size(), -1);
  for (std::size_t i = 0; i < m; ++i) pos[dom[i].index()] = static_cast<int>(i);
  std::vector<std::optional<Elem>> cells(m * m);
  for (const auto& [rk, row] : t.items()) {
    const Elem x = lat.find(rk);
    if (pos[x.index()] < 0) throw ParseError("row '" + rk + "' is outside the table's domain");
    if (!row.is_object()) throw ParseError("row '" + rk + "' must be an object");
    for (const auto& [ck, v] : row.items()) {
      const Elem y = lat.find(ck);
      if (pos[y.index()] < 0) throw ParseError("column '" + ck + "' is outside the table's domain");
      cells[pos[x.index()] * m + pos[y.index()]] = lat.find(as_string(v, "table value"));
    }
  }
  std::vector<Elem> out;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      if (!cells[i * m + j])
        throw ParseError("table is missing cell (" + lat.name(dom[i]) + ", " + lat.name(dom[j]) +
                         ")");
      out.push_back(*cells[i * m + j]);
    }
  return out;
}

inline void write_grid(std::ostream& os, const BoundedLattice& lat, const ElemSet& dom,
                       std::span<const Elem> cells) {
  const std::size_t m = dom.size();
  os << "  \"table\": {\n";
  for (std::size_t i = 0; i < m; ++i) {
    os << "    " << quote(lat.name(dom[i])) << ": {";
    for (std::size_t j = 0; j < m; ++j)
      os << (j ? ", " : "") << quote(lat.name(dom[j])) << ": " << quote(lat.name(cells[i * m + j]));
    os << "}" << (i + 1 < m ? "," : "") << "\n";
  }
  os << "  }\n";
}

}  // namespace detail

/// Total table over L with its neutral element.
inline FullBinOpTable parse_full_binop(std::string_view text, const LatticePtr& lat) {
  const auto doc = detail::parse_json(text);
  const Elem e = lat->find(detail::as_string(detail::field(doc, "neutral"), "'neutral'"));
  if (doc.contains("domain")) {
    const IntervalSpec d =
        parse_interval(detail::as_string(doc["domain"], "'domain'"), *lat);
    if (d != IntervalSpec::closed(lat->bottom(), lat->top()))
      throw ParseError("a uninorm table must be total over L");
  }
  return FullBinOpTable(lat, e, detail::parse_grid(detail::field(doc, "table"), *lat, lat->elements()));
}

inline std::string serialize_full_binop(const FullBinOpTable& u) {
  const auto& lat = *u.lattice();
  std::ostringstream os;
  os << "{\n  \"neutral\": " << detail::quote(lat.name(u.neutral())) << ",\n";
  detail::write_grid(os, lat, lat.elements(), u.cells());
  os << "}\n";
  return os.str();
}

/// t-norm or t-conorm on a closed interval. The role defaults from the
/// neutral element's position; "preset": "join" | "meet" replaces the table.
inline PartialBinOpTable parse_partial_binop(std::string_view text, const LatticePtr& lat) {
  const auto doc = detail::parse_json(text);
  const IntervalSpec d =
      parse_interval(detail::as_string(detail::field(doc, "domain"), "'domain'"), *lat);
  if (d.low_open || d.high_open) throw ParseError("domain must be a closed interval");
  BinopRole role;
  if (doc.contains("role")) {
    const std::string r = detail::as_string(doc["role"], "'role'");
    if (r == "tnorm")
      role = BinopRole::tnorm;
    else if (r == "tconorm")
      role = BinopRole::tconorm;
    else
      throw ParseError("role must be \"tnorm\" or \"tconorm\"");
  } else {
    const Elem e = lat->find(detail::as_string(detail::field(doc, "neutral"), "'neutral'"));
    if (e == d.low)
      role = BinopRole::tconorm;
    else if (e == d.high)
      role = BinopRole::tnorm;
    else
      throw ParseError("neutral element must be an endpoint of the domain");
  }
  if (doc.contains("neutral")) {
    const Elem e = lat->find(detail::as_string(doc["neutral"], "'neutral'"));
    if (e != (role == BinopRole::tnorm ? d.high : d.low))
      throw ParseError("neutral element does not match the role");
  }
  const ElemSet dom = lat->interval(d);
  if (doc.contains("preset")) {
    const std::string p = detail::as_string(doc["preset"], "'preset'");
    if (p != "join" && p != "meet") throw ParseError("unknown binop preset '" + p + "'");
    return make_partial(lat, d, role, [&](Elem x, Elem y) {
      return p == "join" ? lat->join(x, y) : lat->meet(x, y);
    });
  }
  return validate_partial(lat, d, role, detail::parse_grid(detail::field(doc, "table"), *lat, dom));
}

inline std::string serialize_partial_binop(const PartialBinOpTable& p) {
  const auto& lat = *p.lattice();
  const Elem neutral = p.role() == BinopRole::tnorm ? p.domain().high : p.domain().low;
  std::ostringstream os;
  os << "{\n  \"neutral\": " << detail::quote(lat.name(neutral)) << ",\n  \"domain\": "
     << detail::quote(format_interval(p.domain(), lat)) << ",\n  \"role\": "
     << detail::quote(to_string(p.role())) << ",\n";
  detail::write_grid(os, lat, p.elements(), p.table());
  os << "}\n";
  return os.str();
}

// ---- rendering ------------------------------------------------------------

namespace detail {

inline std::string render_grid(const BoundedLattice& lat, const ElemSet& dom,
                               std::span<const Elem> cells) {
  std::size_t w = 1;
  for (Elem x : dom) w = std::max(w, lat.name(x).size());
  auto pad = [&](const std::string& s) { return s + std::string(w - s.size(), ' '); };
  auto rstrip = [](std::string s) {
    while (!s.empty() && s.back() == ' ') s.pop_back();
    return s;
  };
  const std::size_t m = dom.size();
  std::string out;
  std::string head = pad("U") + " |";
  for (Elem y : dom) head += " " + pad(lat.name(y));
  out += rstrip(head) + "\n";
  out += std::string(w + 1, '-') + "+" + std::string(m * (w + 1), '-') + "\n";
  for (std::size_t i = 0; i < m; ++i) {
    std::string line = pad(lat.name(dom[i])) + " |";
    for (std::size_t j = 0; j < m; ++j) line += " " + pad(lat.name(cells[i * m + j]));
    out += rstrip(line) + "\n";
  }
  return out;
}

}  // namespace detail

/// Fixed-width grid with header row and column in declared element order.
inline std::string render_table(const FullBinOpTable& u) {
  const auto& lat = *u.lattice();
  return detail::render_grid(lat, lat.elements(), u.cells());
}

inline std::string render_table(const PartialBinOpTable& p) {
  return detail::render_grid(*p.lattice(), p.elements(), p.table());
}

// ---- DOT ------------------------------------------------------------------

/// Hasse diagram, bottom to top; one edge per cover in list order and a
/// same-rank group per height level.
inline std::string export_dot(const BoundedLattice& lat) {
  using detail::quote;
  std::ostringstream os;
  os << "digraph lattice {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  for (Elem x : lat.elements()) os << "  " << quote(lat.name(x)) << ";\n";
  for (const auto& [lo, hi] : lat.covers())
    os << "  " << quote(lat.name(lo)) << " -> " << quote(lat.name(hi)) << ";\n";
  std::map<std::size_t, ElemSet> levels;
  for (Elem x : lat.elements()) levels[lat.height(x)].push_back(x);
  for (const auto& [h, xs] : levels) {
    if (xs.size() < 2) continue;
    os << "  { rank=same;";
    for (Elem x : xs) os << " " << quote(lat.name(x)) << ";";
    os << " }\n";
  }
  os << "}\n";
  return os.str();
}

// ---- reports as JSON --------------------------------------------------------

namespace detail {
inline json names_json(const BoundedLattice& lat, const std::vector<Elem>& xs) {
  json a = json::array();
  for (Elem x : xs) a.push_back(lat.name(x));
  return a;
}
}  // namespace detail

inline nlohmann::ordered_json to_json(const ConditionReport& r, const BoundedLattice& lat) {
  nlohmann::ordered_json j;
  j["report"] = r.kind == ReportKind::hypotheses ? "hypotheses" : "characteristic";
  j["family"] = to_string(r.family);
  j["passed"] = r.passed();
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : r.rows) {
    nlohmann::ordered_json o;
    o["name"] = row.name;
    o["statement"] = row.statement;
    o["passed"] = row.passed;
    o["binding"] = row.binding;
    o["vacuous"] = row.vacuous;
    o["witnesses"] = nlohmann::ordered_json::array();
    for (const auto& w : row.witnesses) o["witnesses"].push_back(detail::names_json(lat, w));
    j["rows"].push_back(std::move(o));
  }
  j["notes"] = r.notes;
  return j;
}

inline nlohmann::ordered_json to_json(const AxiomReport& r, const BoundedLattice& lat) {
  nlohmann::ordered_json j;
  j["uninorm"] = r.is_uninorm();
  const std::pair<const char*, const AxiomCheck*> rows[] = {{"commutative", &r.commutative},
                                                            {"associative", &r.associative},
                                                            {"monotone", &r.monotone},
                                                            {"neutral", &r.neutral}};
  for (const auto& [name, c] : rows) {
    nlohmann::ordered_json o;
    o["holds"] = c->holds;
    o["witnesses"] = nlohmann::ordered_json::array();
    for (const auto& w : c->witnesses) o["witnesses"].push_back(detail::names_json(lat, w));
    j[name] = std::move(o);
  }
  return j;
}

inline nlohmann::ordered_json to_json(const ClassMembership& m, const BoundedLattice& lat) {
  nlohmann::ordered_json j;
  for (const auto& [name, c] : m.entries()) {
    nlohmann::ordered_json o;
    o["member"] = c->member;
    o["witnesses"] = nlohmann::ordered_json::array();
    for (const auto& w : c->witnesses)
      o["witnesses"].push_back({lat.name(w.x), lat.name(w.y), lat.name(w.value)});
    j[name] = std::move(o);
  }
  return j;
}

}  // namespace uninorm
