#pragma once

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "uninorm/uninorm.hpp"

namespace uninorm::cli {

enum ExitCode { ok = 0, check_failed = 1, usage_error = 2 };

namespace detail {

using ojson = nlohmann::ordered_json;

// Raised for unreadable files and similar usage problems.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// A path, or builtin:<name> for the bundled lattices.
inline LatticePtr load_lattice(const std::string& arg) {
  if (arg.rfind("builtin:", 0) == 0) {
    const std::string n = arg.substr(8);
    if (n == "l1") return fixtures::l1();
    if (n == "l2") return fixtures::l2();
    if (n == "l3") return fixtures::l3();
    for (auto& [name, lat] : fixtures::small_lattices())
      if (name == n) return lat;
    throw UsageError("unknown builtin lattice '" + n + "'");
  }
  return parse_lattice(read_file(arg));
}

inline ojson map_json(const UnaryOpTable& op) {
  const auto& lat = *op.lattice();
  ojson m = ojson::object();
  for (Elem x : lat.elements()) m[lat.name(x)] = lat.name(op(x));
  return m;
}

inline ojson grid_json(const BoundedLattice& lat, const ElemSet& dom, std::span<const Elem> cells) {
  ojson t = ojson::object();
  const std::size_t m = dom.size();
  for (std::size_t i = 0; i < m; ++i) {
    ojson row = ojson::object();
    for (std::size_t j = 0; j < m; ++j) row[lat.name(dom[j])] = lat.name(cells[i * m + j]);
    t[lat.name(dom[i])] = std::move(row);
  }
  return t;
}

inline void print_report(std::ostream& os, const ConditionReport& r, const BoundedLattice& lat) {
  os << (r.kind == ReportKind::hypotheses ? "hypotheses" : "characteristic") << " ("
     << to_string(r.family) << "): " << (r.passed() ? "pass" : "FAIL") << "\n";
  for (const auto& row : r.rows) {
    os << "  [" << (row.passed ? "pass" : "FAIL") << "] " << row.name << ": " << row.statement;
    if (row.vacuous) os << " (vacuous)";
    if (!row.binding) os << " (not binding)";
    os << "\n";
    if (!row.witnesses.empty()) {
      os << "    witnesses:";
      for (const auto& w : row.witnesses) {
        os << " ";
        if (w.size() > 1) os << "(";
        for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << lat.name(w[i]);
        if (w.size() > 1) os << ")";
      }
      os << "\n";
    }
  }
  for (const auto& n : r.notes) os << "  note: " << n << "\n";
}

inline void print_axioms(std::ostream& os, const AxiomReport& r, const BoundedLattice& lat) {
  os << "uninorm: " << (r.is_uninorm() ? "yes" : "no") << "\n";
  const std::pair<const char*, const AxiomCheck*> rows[] = {{"commutative", &r.commutative},
                                                            {"associative", &r.associative},
                                                            {"monotone", &r.monotone},
                                                            {"neutral", &r.neutral}};
  for (const auto& [name, c] : rows) {
    os << "  " << name << ": " << (c->holds ? "yes" : "no");
    for (const auto& w : c->witnesses) {
      os << " (";
      for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << lat.name(w[i]);
      os << ")";
    }
    os << "\n";
  }
}

inline void print_classes(std::ostream& os, const ClassMembership& m, const BoundedLattice& lat) {
  for (const auto& [name, c] : m.entries()) {
    os << name << ": " << (c->member ? "yes" : "no");
    if (!c->witnesses.empty()) {
      const auto& w = c->witnesses.front();
      os << "  e.g. U(" << lat.name(w.x) << "," << lat.name(w.y) << ")=" << lat.name(w.value);
      if (c->witnesses.size() > 1) os << " (+" << c->witnesses.size() - 1 << " more)";
    }
    os << "\n";
  }
}

}  // namespace detail

/// Runs one command. Returns 0 on success, 1 when a check fails and 2 on
/// usage or parse errors.
inline int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  using namespace detail;
  CLI::App app{"Uninorms on finite bounded lattices from closure and interior operators",
               "uninorm"};
  app.require_subcommand(1);

  bool json = false;
  std::string lattice_arg, e_arg, family_arg, boundary_arg, op_low_arg, op_inc_arg, preset_arg,
      op_arg, table_arg, operator_arg, binop_arg, kind_arg = "closure", region_arg, avoid_arg,
      domain_arg, role_arg, which;
  bool force = false, render = false, all_witnesses = false, dual = false;

  auto* validate = app.add_subcommand("validate", "Check a lattice, operator or t-(co)norm document");
  validate->add_option("--lattice", lattice_arg, "Lattice document or builtin:<name>")->required();
  validate->add_option("--operator", operator_arg, "Operator document");
  validate->add_option("--binop", binop_arg, "t-norm / t-conorm document");

  auto* construct_cmd = app.add_subcommand("construct", "Build a uninorm table");
  construct_cmd->add_option("--family", family_arg, "clo2 | int2 | clo2-strict | int2-strict");
  construct_cmd->add_option("--lattice", lattice_arg)->required();
  construct_cmd->add_option("--e", e_arg, "Neutral element")->required();
  construct_cmd->add_option("--boundary", boundary_arg,
                            "t-conorm/t-norm document (default: join on [e,1] / meet on [0,e])");
  construct_cmd->add_option("--op-low", op_low_arg, "Operator used on ]0,e[ (or ]e,1[)");
  construct_cmd->add_option("--op-inc", op_inc_arg, "Operator used on I_e");
  construct_cmd->add_option("--preset", preset_arg,
                            "single-clo | clo-id | km-s | single-int | int-id | km-t");
  construct_cmd->add_option("--op", op_arg, "Operator for single-operator presets");
  construct_cmd->add_flag("--force", force, "Emit the table even if the conditions fail");
  construct_cmd->add_flag("--render", render, "Print the grid instead of a JSON document");

  auto* verify = app.add_subcommand("verify", "Check the uninorm axioms of a table");
  verify->add_option("--lattice", lattice_arg)->required();
  verify->add_option("--table", table_arg, "Table document")->required();
  verify->add_flag("--all", all_witnesses, "Report every witness");

  auto* classify_cmd = app.add_subcommand("classify", "Class membership of a uninorm table");
  classify_cmd->add_option("--lattice", lattice_arg)->required();
  classify_cmd->add_option("--table", table_arg)->required();

  auto* search_cl = app.add_subcommand("search-closures", "Enumerate closure/interior operators");
  search_cl->add_option("--lattice", lattice_arg)->required();
  search_cl->add_option("--kind", kind_arg, "closure | interior");
  search_cl->add_option("--avoid-region", region_arg, "Region whose images are restricted");
  search_cl->add_option("--avoid", avoid_arg, "Interval the images must avoid");

  auto* search_pairs = app.add_subcommand("search-pairs", "Enumerate admissible operator pairs");
  search_pairs->add_option("--lattice", lattice_arg)->required();
  search_pairs->add_option("--e", e_arg)->required();
  search_pairs->add_option("--family", family_arg)->required();

  auto* search_tc = app.add_subcommand("search-tconorms", "Enumerate t-conorms or t-norms");
  search_tc->add_option("--lattice", lattice_arg)->required();
  search_tc->add_option("--domain", domain_arg, "Closed interval, e.g. [e,1]")->required();
  search_tc->add_option("--role", role_arg, "tconorm (default) | tnorm");

  auto* reproduce = app.add_subcommand("reproduce", "Render a bundled worked example");
  reproduce->add_option("which", which, "l1 | l2 | l3")->required();

  auto* dot = app.add_subcommand("export-dot", "Hasse diagram in DOT");
  dot->add_option("--lattice", lattice_arg)->required();
  dot->add_flag("--dual", dual, "Export the order dual");

  for (auto* sub : {validate, construct_cmd, verify, classify_cmd, search_pairs})
    sub->add_flag("--json", json, "Machine-readable report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : usage_error;
  }

  try {
    if (*validate) {
      auto lat = load_lattice(lattice_arg);
      ojson rep;
      rep["lattice"] = {{"elements", lat->size()}, {"valid", true}};
      if (!operator_arg.empty()) {
        auto op = parse_operator(read_file(operator_arg), lat);
        rep["operator"] = {{"kind", to_string(op.kind())}, {"valid", true}};
      }
      if (!binop_arg.empty()) {
        auto p = parse_partial_binop(read_file(binop_arg), lat);
        rep["binop"] = {{"role", to_string(p.role())},
                        {"domain", format_interval(p.domain(), *lat)},
                        {"valid", true}};
      }
      if (json) {
        out << rep.dump(2) << "\n";
      } else {
        out << "lattice: ok (" << lat->size() << " elements)\n";
        if (rep.contains("operator"))
          out << "operator: ok (" << rep["operator"]["kind"].get<std::string>() << ")\n";
        if (rep.contains("binop"))
          out << "binop: ok (" << rep["binop"]["role"].get<std::string>() << " on "
              << rep["binop"]["domain"].get<std::string>() << ")\n";
      }
      return ok;
    }

    if (*construct_cmd) {
      auto lat = load_lattice(lattice_arg);
      const Elem e = lat->find(e_arg);
      std::optional<Preset> preset;
      Family family;
      if (!preset_arg.empty()) {
        preset = parse_preset(preset_arg);
        if (!preset) throw UsageError("unknown preset '" + preset_arg + "'");
        family = preset_family(*preset);
        if (!family_arg.empty() && parse_family(family_arg) != family)
          throw UsageError("--family does not match --preset");
      } else {
        auto f = parse_family(family_arg);
        if (!f) throw UsageError("--family must be one of clo2, int2, clo2-strict, int2-strict");
        family = *f;
      }
      if (e == lat->bottom() || e == lat->top())
        throw InvalidSpec("neutral element must lie strictly between bottom and top");
      PartialBinOpTable boundary = boundary_arg.empty()
                                       ? default_boundary(lat, e, family)
                                       : parse_partial_binop(read_file(boundary_arg), lat);
      auto spec = [&] {
        if (preset) {
          std::optional<UnaryOpTable> op;
          if (preset_needs_operator(*preset)) {
            if (op_arg.empty()) throw UsageError("--preset " + preset_arg + " needs --op");
            op = parse_operator(read_file(op_arg), lat);
          }
          return make_preset_spec(*preset, e, boundary, op);
        }
        if (op_low_arg.empty() || op_inc_arg.empty())
          throw UsageError("--op-low and --op-inc are required without --preset");
        return ConstructionSpec(family, e, boundary, parse_operator(read_file(op_low_arg), lat),
                                parse_operator(read_file(op_inc_arg), lat));
      }();

      const ConditionReport hyp = check_hypotheses(spec);
      std::optional<ConditionReport> ch;
      if (hyp.passed()) ch = check_characteristic(spec, hyp);
      const bool passed = hyp.passed() && ch->passed();
      if (!passed) {
        if (json) {
          ojson rep;
          rep["hypotheses"] = to_json(hyp, *lat);
          if (ch) rep["characteristic"] = to_json(*ch, *lat);
          err << rep.dump(2) << "\n";
        } else {
          print_report(err, hyp, *lat);
          if (ch) print_report(err, *ch, *lat);
        }
        if (!force) return check_failed;
      }
      const FullBinOpTable u = construct(spec);
      out << (render ? render_table(u) : serialize_full_binop(u));
      return ok;
    }

    if (*verify) {
      auto lat = load_lattice(lattice_arg);
      auto u = parse_full_binop(read_file(table_arg), lat);
      auto r = validate_uninorm(u, all_witnesses ? WitnessMode::all : WitnessMode::first);
      if (json)
        out << to_json(r, *lat).dump(2) << "\n";
      else
        print_axioms(out, r, *lat);
      return r.is_uninorm() ? ok : check_failed;
    }

    if (*classify_cmd) {
      auto lat = load_lattice(lattice_arg);
      auto u = parse_full_binop(read_file(table_arg), lat);
      if (!validate_uninorm(u).is_uninorm()) {
        err << "error: table is not a uninorm\n";
        return check_failed;
      }
      auto m = classify(u);
      if (json)
        out << to_json(m, *lat).dump(2) << "\n";
      else
        print_classes(out, m, *lat);
      return ok;
    }

    if (*search_cl) {
      auto lat = load_lattice(lattice_arg);
      SearchConstraints c;
      c.kind = parse_kind(kind_arg);
      if (region_arg.empty() != avoid_arg.empty())
        throw UsageError("--avoid-region and --avoid go together");
      if (!region_arg.empty())
        c.range_avoidance = SearchConstraints::RangeAvoidance{parse_region(region_arg, *lat),
                                                              parse_interval(avoid_arg, *lat)};
      enumerate_unary(lat, c, [&](const UnaryOpTable& op) {
        ojson line;
        line["kind"] = to_string(op.kind());
        line["map"] = map_json(op);
        out << line.dump() << "\n";
        return true;
      });
      return ok;
    }

    if (*search_pairs) {
      auto lat = load_lattice(lattice_arg);
      auto f = parse_family(family_arg);
      if (!f) throw UsageError("--family must be one of clo2, int2, clo2-strict, int2-strict");
      const Elem e = lat->find(e_arg);
      if (e == lat->bottom() || e == lat->top())
        throw InvalidSpec("neutral element must lie strictly between bottom and top");
      enumerate_admissible_pairs(lat, e, *f, [&](const AdmissiblePair& p) {
        ojson line;
        line["op_low"] = map_json(p.op_low);
        line["op_inc"] = map_json(p.op_inc);
        line["characteristic"] = p.characteristic_pass;
        out << line.dump() << "\n";
        return true;
      });
      return ok;
    }

    if (*search_tc) {
      auto lat = load_lattice(lattice_arg);
      const IntervalSpec d = parse_interval(domain_arg, *lat);
      if (d.low_open || d.high_open) throw UsageError("--domain must be a closed interval");
      BinopRole role = BinopRole::tconorm;
      if (role_arg == "tnorm")
        role = BinopRole::tnorm;
      else if (!role_arg.empty() && role_arg != "tconorm")
        throw UsageError("--role must be tconorm or tnorm");
      enumerate_partial_binops(lat, d, role, [&](const PartialBinOpTable& p) {
        ojson line;
        line["domain"] = format_interval(p.domain(), *lat);
        line["role"] = to_string(p.role());
        line["table"] = grid_json(*lat, p.elements(), p.table());
        out << line.dump() << "\n";
        return true;
      });
      return ok;
    }

    if (*reproduce) {
      std::optional<ConstructionSpec> spec;
      if (which == "l1")
        spec = fixtures::l1_spec();
      else if (which == "l2")
        spec = fixtures::l2_spec();
      else if (which == "l3")
        spec = fixtures::l3_spec();
      else
        throw UsageError("reproduce expects l1, l2 or l3");
      out << render_table(construct(*spec));
      return ok;
    }

    if (*dot) {
      auto lat = load_lattice(lattice_arg);
      out << export_dot(dual ? *dual_lattice(lat) : *lat);
      return ok;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return usage_error;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return usage_error;
  } catch (const UnknownElement& e) {
    err << "error: " << e.what() << "\n";
    return usage_error;
  } catch (const InvalidSpec& e) {
    err << "error: " << e.what() << "\n";
    return usage_error;
  } catch (const Error& e) {
    err << "check failed: " << e.what() << "\n";
    return check_failed;
  }
  return usage_error;
}

inline int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"uninorm"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace uninorm::cli
