#pragma once

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "tangletwist/bracket.hpp"
#include "tangletwist/catalog.hpp"
#include "tangletwist/checkerboard.hpp"
#include "tangletwist/determinant.hpp"
#include "tangletwist/seifert.hpp"
#include "tangletwist/twist.hpp"
#include "tangletwist/verify.hpp"

namespace tangletwist {

// Exit codes: 0 success, 1 input error, 2 verification failure, 3 resource
// limit exceeded.
enum ExitCode : int { exit_ok = 0, exit_input = 1, exit_verify = 2, exit_resource = 3 };

struct RunConfig {
  std::string command;             // check | invariants | twist | family | verify | catalog
  std::string verify_suite;        // det-lemma | bracket-prop (verify only)
  std::vector<std::string> inputs; // file paths or catalog keys
  std::string block_text;
  std::string pattern;
  int crossing = 0;
  int range_lo = 1, range_hi = 1;
  std::uint64_t seed = 1;
  int trials = 100;
  int max_crossings = 8;
  bool oriented = false;
  std::string emit = "text";  // text | json
};

namespace detail {

inline Diagram load_input(const std::string& spec) {
  for (const auto& e : catalog_entries())
    if (e.key == spec) return catalog_diagram(spec);
  return load_pd_file(spec);
}

struct ClassReport {
  bool adequate, a_adequate, b_adequate, homogeneous, alternative, positive;
};

inline ClassReport class_report(const Diagram& d) {
  return {is_adequate(d), is_A_adequate(d), is_B_adequate(d),
          is_homogeneous(d), is_alternative(d), is_positive(d)};
}

inline ordered_json bracket_json(const LaurentPoly& p) {
  ordered_json arr = ordered_json::array();
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) arr.push_back({it->first, it->second});
  return arr;
}

inline ordered_json signed_graph_json(const SignedGraph& g) {
  ordered_json j;
  j["vertices"] = g.nv;
  ordered_json edges = ordered_json::array();
  for (const auto& e : g.edges) {
    ordered_json ej;
    ej["u"] = e.u;
    ej["v"] = e.v;
    ej["sign"] = e.sign;
    ej["crossing"] = e.crossing;
    edges.push_back(ej);
  }
  j["edges"] = edges;
  return j;
}

inline ordered_json digraph_json(const SignedDigraph& g) {
  ordered_json j;
  ordered_json verts = ordered_json::array();
  for (int v = 0; v < g.nv; ++v) {
    ordered_json vj;
    vj["id"] = v;
    vj["color"] = g.color[static_cast<size_t>(v)] == FaceColor::black ? "black" : "white";
    verts.push_back(vj);
  }
  j["vertices"] = verts;
  ordered_json edges = ordered_json::array();
  for (const auto& e : g.edges) {
    ordered_json ej;
    ej["tail"] = e.tail;
    ej["head"] = e.head;
    ej["sign"] = e.sign;
    ej["crossing"] = e.crossing;
    edges.push_back(ej);
  }
  j["edges"] = edges;
  return j;
}

}  // namespace detail

inline int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.command == "catalog") {
      if (cfg.emit == "json") {
        ordered_json arr = ordered_json::array();
        for (const auto& e : catalog_entries()) {
          Diagram d = catalog_diagram(e.key);
          ordered_json j;
          j["key"] = e.key;
          j["crossings"] = d.n();
          j["summary"] = e.summary;
          arr.push_back(j);
        }
        out << arr.dump() << "\n";
      } else {
        for (const auto& e : catalog_entries()) {
          Diagram d = catalog_diagram(e.key);
          out << e.key << "  (" << d.n() << " crossings)  " << e.summary << "\n";
        }
      }
      return exit_ok;
    }

    if (cfg.command == "check") {
      if (cfg.inputs.empty()) throw parse_error("check: no input diagram");
      for (const auto& in : cfg.inputs) {
        Diagram d = detail::load_input(in);
        auto r = detail::class_report(d);
        if (cfg.emit == "json") {
          ordered_json j;
          j["input"] = in;
          j["name"] = d.name();
          j["crossings"] = d.n();
          j["adequate"] = r.adequate;
          j["A_adequate"] = r.a_adequate;
          j["B_adequate"] = r.b_adequate;
          j["homogeneous"] = r.homogeneous;
          j["alternative"] = r.alternative;
          j["positive"] = r.positive;
          j["seifert_graph"] = detail::signed_graph_json(seifert_graph(d));
          if (d.n() > 0)
            j["checkerboard_digraph"] = detail::digraph_json(enhanced_digraph(d, two_coloring(d)));
          out << j.dump() << "\n";
        } else {
          out << "diagram:     " << (d.name().empty() ? in : d.name()) << "\n";
          out << "crossings:   " << d.n() << "\n";
          out << "adequate:    " << (r.adequate ? "true" : "false") << "  (A: "
              << (r.a_adequate ? "true" : "false") << ", B: " << (r.b_adequate ? "true" : "false")
              << ")\n";
          out << "homogeneous: " << (r.homogeneous ? "true" : "false") << "\n";
          out << "alternative: " << (r.alternative ? "true" : "false") << "\n";
          out << "positive:    " << (r.positive ? "true" : "false") << "\n";
        }
      }
      return exit_ok;
    }

    if (cfg.command == "invariants") {
      if (cfg.inputs.empty()) throw parse_error("invariants: no input diagram");
      for (const auto& in : cfg.inputs) {
        Diagram d = detail::load_input(in);
        long long det = determinant(d);
        LaurentPoly br = bracket(d);
        auto [M, m] = extreme_powers(br);
        if (cfg.emit == "json") {
          ordered_json j;
          j["input"] = in;
          j["name"] = d.name();
          j["crossings"] = d.n();
          j["writhe"] = d.writhe();
          j["determinant"] = det;
          j["determinant_via_bracket"] = det_via_bracket(d);
          j["bracket"] = detail::bracket_json(br);
          j["bracket_text"] = br.to_string();
          j["max_power"] = M;
          j["min_power"] = m;
          out << j.dump() << "\n";
        } else {
          out << "diagram:      " << (d.name().empty() ? in : d.name()) << "\n";
          out << "crossings:    " << d.n() << "   writhe: " << d.writhe() << "\n";
          out << "determinant:  " << det << "\n";
          out << "bracket:      " << br.to_string() << "\n";
          out << "extremes:     max " << M << ", min " << m << "\n";
        }
      }
      return exit_ok;
    }

    if (cfg.command == "twist") {
      if (cfg.inputs.size() != 1) throw parse_error("twist: need exactly one input diagram");
      if (cfg.block_text.empty()) throw parse_error("twist: missing --block");
      Diagram d = detail::load_input(cfg.inputs.front());
      TangleBlock b = parse_block(cfg.block_text);
      Diagram dd = replace_crossing(d, {cfg.crossing, b, cfg.oriented});
      out << dd.serialize();
      return exit_ok;
    }

    if (cfg.command == "family") {
      if (cfg.inputs.size() != 1) throw parse_error("family: need exactly one input diagram");
      if (cfg.pattern.empty()) throw parse_error("family: missing --pattern");
      Diagram d = detail::load_input(cfg.inputs.front());
      auto fam = generate_family(d, cfg.crossing, cfg.pattern, cfg.range_lo, cfg.range_hi, cfg.oriented);
      const int cap = bracket_state_cap();
      for (size_t i = 0; i < fam.size(); ++i) {
        const Diagram& m = fam[i];
        auto r = detail::class_report(m);
        ordered_json j;
        j["index"] = cfg.range_lo + static_cast<int>(i);
        j["pd"] = m.serialize();
        j["crossings"] = m.n();
        j["adequate"] = r.adequate;
        j["homogeneous"] = r.homogeneous;
        j["alternative"] = r.alternative;
        j["positive"] = r.positive;
        j["determinant"] = determinant(m);
        if (m.n() <= cap) {
          auto [M, mm] = extreme_powers(bracket(m));
          j["max_power"] = M;
          j["min_power"] = mm;
        } else {
          j["max_power"] = nullptr;
          j["min_power"] = nullptr;
        }
        out << j.dump() << "\n";
      }
      return exit_ok;
    }

    if (cfg.command == "verify") {
      std::ostream* rec = cfg.emit == "json" ? &out : nullptr;
      VerifySummary s;
      if (cfg.verify_suite == "det-lemma") {
        s = verify_det_lemma(cfg.seed, cfg.trials, rec);
      } else if (cfg.verify_suite == "bracket-prop") {
        s = verify_bracket_prop(cfg.seed, cfg.trials, 20, rec, cfg.max_crossings);
      } else {
        throw parse_error("verify: unknown suite '" + cfg.verify_suite +
                          "' (expected det-lemma or bracket-prop)");
      }
      if (cfg.emit != "json") {
        out << s.suite << ": " << s.passed << "/" << (s.trials - s.separated) << " passed";
        if (s.separated) out << " (" << s.separated << " reported separately: x*y = 0)";
        out << ", seed " << s.seed << "\n";
      }
      return s.ok() ? exit_ok : exit_verify;
    }

    throw parse_error("unknown command '" + cfg.command + "'");
  } catch (const resource_error& e) {
    err << "resource limit: " << e.what() << "\n";
    return exit_resource;
  } catch (const parse_error& e) {
    err << "error: " << e.what() << "\n";
    return exit_input;
  } catch (const domain_error& e) {
    err << "error: " << e.what() << "\n";
    return exit_input;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return exit_input;
  }
}

}  // namespace tangletwist
