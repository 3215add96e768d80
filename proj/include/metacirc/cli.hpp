#pragma once

// Command-line front end. run() returns the process exit code:
//   0 success, 1 usage error, 2 computation bound exceeded,
//   3 disagreement with the published counts under --strict.

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "metacirc/autparam.hpp"
#include "metacirc/autosearch.hpp"
#include "metacirc/cayley.hpp"
#include "metacirc/classify.hpp"
#include "metacirc/metagroup.hpp"
#include "metacirc/transitivity.hpp"

namespace metacirc::cli {

enum Exit : int { ok = 0, usage = 1, bound = 2, disagreement = 3 };

struct RunConfig {
  i64 m = 0, n = 0, r = 0, ell = 1;
  std::string mode = "oracle";
  std::string format = "graph6";
  std::string graph6, file, a, b, output, graphs;
  i64 j = 1;
  i64 order_bound = 1000;
  i64 max_order = 231;
  unsigned jobs = 1;
  bool strict = false;
};

namespace detail {

inline std::string read_all(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

/// A graph from text: JSON adjacency when it starts with '{', else graph6
/// (first non-empty line).
inline Graph parse_graph(const std::string& text) {
  const auto start = text.find_first_not_of(" \t\r\n");
  if (start == std::string::npos) throw std::invalid_argument("empty graph input");
  if (text[start] == '{') return graph_from_json(nlohmann::json::parse(text));
  std::istringstream lines(text.substr(start));
  std::string line;
  std::getline(lines, line);
  return from_graph6(line);
}

inline Graph load_graph(const std::string& path, std::istream& in) {
  if (path == "-") return parse_graph(read_all(in));
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot read " + path);
  return parse_graph(read_all(f));
}

inline std::optional<ExportFormat> parse_format(const std::string& s) {
  if (s.empty()) return std::nullopt;
  if (s == "graph6") return ExportFormat::graph6;
  if (s == "dot") return ExportFormat::dot;
  if (s == "json") return ExportFormat::json;
  throw std::invalid_argument("unknown format " + s);
}

/// Least r' generating the same subgroup <r> of units as r with
/// r' = r^k, gcd(k, n) = 1; these give isomorphic groups (b -> b^k).
inline i64 least_equivalent_r(i64 m, i64 n, i64 r) {
  i64 best = r;
  for (i64 k = 1; k < n; ++k)
    if (std::gcd(k, n) == 1) best = std::min(best, powmod(r, k, m));
  return best;
}

inline int report_exit(const GroupReport& rep, bool strict) {
  return strict && !rep.all_agree() ? Exit::disagreement : Exit::ok;
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr,
               std::istream& in = std::cin) {
  RunConfig cfg;
  CLI::App app{"Edge-transitive tetravalent Cayley graphs of split metacyclic groups"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  auto group_opts = [&cfg](CLI::App* sub, bool required) {
    sub->add_option("--m", cfg.m, "order of a (odd)")->required(required);
    sub->add_option("--n", cfg.n, "order of b (odd)")->required(required);
    sub->add_option("--r", cfg.r, "b^-1 a b = a^r")->required(required);
    sub->add_option("--ell", cfg.ell, "order of the central factor c (odd)")->default_val(1);
  };
  auto run_opts = [&cfg](CLI::App* sub) {
    sub->add_option("--jobs", cfg.jobs, "worker threads")->default_val(1)->check(CLI::Range(1u, 256u));
    sub->add_option("--bound", cfg.order_bound, "largest group order to enumerate")->default_val(1000);
    sub->add_flag("--strict", cfg.strict, "exit 3 when any agreement flag fails");
  };
  auto report_opts = [&cfg](CLI::App* sub) {
    sub->add_option("-o,--output", cfg.output, "write the JSON report here instead of stdout");
    sub->add_option("--graphs", cfg.graphs, "with --output, also write each class graph")
        ->check(CLI::IsMember({"graph6", "dot", "json"}));
  };

  auto* info = app.add_subcommand("info", "group invariants and hypothesis flags");
  group_opts(info, true);
  auto* enumerate = app.add_subcommand("enumerate", "oracle-mode report over all connection sets");
  group_opts(enumerate, true);
  run_opts(enumerate);
  report_opts(enumerate);
  auto* classify = app.add_subcommand("classify", "classify edge-transitive Cayley graphs");
  group_opts(classify, true);
  run_opts(classify);
  report_opts(classify);
  classify->add_option("--mode", cfg.mode, "oracle or theorem")->check(CLI::IsMember({"oracle", "theorem"}));
  auto* aut = app.add_subcommand("aut", "automorphism group of a graph (graph6 or JSON)");
  auto* aut_src = aut->add_option("--graph6", cfg.graph6, "graph6 string");
  aut->add_option("--file", cfg.file, "file holding graph6 or JSON; '-' for stdin")->excludes(aut_src);
  auto* iso = app.add_subcommand("iso", "isomorphism test of two graphs");
  iso->add_option("--a", cfg.a, "first graph file ('-' for stdin)")->required();
  iso->add_option("--b", cfg.b, "second graph file")->required();
  auto* exp = app.add_subcommand("export", "Cay(G, S_j) in graph6, DOT or JSON");
  group_opts(exp, true);
  exp->add_option("--j", cfg.j, "index j of the standard connection set")->required();
  exp->add_option("--format", cfg.format, "graph6, dot or json")->check(CLI::IsMember({"graph6", "dot", "json"}));
  auto* sweep = app.add_subcommand("sweep", "oracle census over all hypothesis-(*) groups with m*n <= B");
  sweep->add_option("--max-order", cfg.max_order, "bound B on m*n")->required();
  sweep->add_option("--jobs", cfg.jobs, "worker threads")->default_val(1)->check(CLI::Range(1u, 256u));
  sweep->add_flag("--strict", cfg.strict, "exit 3 when any group disagrees");
  sweep->add_flag("--json", "print a JSON array of summaries");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? Exit::ok : Exit::usage;
  }

  auto make_spec = [&cfg] { return GroupSpec(cfg.m, cfg.n, cfg.r, cfg.ell); };
  auto options = [&cfg](Mode mode) {
    ClassifyOptions opt;
    opt.mode = mode;
    opt.jobs = cfg.jobs;
    opt.order_bound = cfg.order_bound;
    return opt;
  };
  auto print_report = [&](const GroupReport& rep) {
    if (cfg.output.empty()) {
      out << to_json(rep).dump(2) << "\n";
    } else {
      emit_report(rep, cfg.output, detail::parse_format(cfg.graphs));
    }
    return detail::report_exit(rep, cfg.strict);
  };

  try {
    if (info->parsed()) {
      const GroupSpec G = make_spec();
      out << "group=" << G.to_string() << "\n"
          << "n0=" << G.n0() << "\n"
          << "order=" << G.order() << "\n"
          << "aut_order=" << automorphisms_of(G).size() << "\n"
          << "abelian=" << std::boolalpha << G.is_abelian() << "\n"
          << "sylow_cyclic=" << G.sylow_cyclic() << "\n"
          << "hypothesis_star=" << G.hypothesis_star() << "\n"
          << "a_centre_trivial=" << G.a_centre_trivial() << "\n"
          << "parametrized_aut=" << G.parametrized_aut() << "\n";
      if (auto p = phi_n0_half(G)) out << "phi_n0_half=" << *p << "\n";
      if (auto t = theorem2_count(G)) out << "theorem2_count=" << *t << "\n";
      if (auto row = table1_row(G))
        out << "table1=" << row->aut_name << " stab=" << row->stab_name << " s=" << row->s << " n=" << row->n_column
            << "\n";
      return Exit::ok;
    }
    if (enumerate->parsed()) return print_report(classify_spec(make_spec(), options(Mode::oracle)));
    if (classify->parsed())
      return print_report(classify_spec(make_spec(), options(cfg.mode == "theorem" ? Mode::theorem : Mode::oracle)));
    if (aut->parsed()) {
      const Graph g = !cfg.graph6.empty() ? from_graph6(cfg.graph6) : detail::load_graph(cfg.file.empty() ? "-" : cfg.file, in);
      const GraphAnalysis A = analyze_graph(g);
      nlohmann::json j;
      j["n"] = g.n();
      j["edges"] = g.edge_count();
      j["aut_order"] = A.aut.order_string();
      std::vector<std::string> gens;
      for (const Perm& p : A.aut.generators()) gens.push_back(p.to_cycle_string());
      j["generators"] = gens;
      j["canonical"] = A.canonical;
      j["vertex_orbits"] = vertex_orbit_count(A.aut, g);
      j["edge_orbits"] = edge_orbit_count(A.aut, g);
      j["arc_orbits"] = arc_orbit_count(A.aut, g);
      j["s"] = max_s_arc_transitive(A.aut, g, 3);
      out << j.dump(2) << "\n";
      return Exit::ok;
    }
    if (iso->parsed()) {
      const Graph ga = detail::load_graph(cfg.a, in);
      const Graph gb = detail::load_graph(cfg.b, in);
      out << (are_isomorphic(ga, gb) ? "isomorphic" : "non-isomorphic") << "\n";
      return Exit::ok;
    }
    if (exp->parsed()) {
      const GroupSpec G = make_spec();
      const Graph g = build_cayley(standard_connection_set(cfg.j, G), G);
      out << export_graph(g, *detail::parse_format(cfg.format));
      if (cfg.format != "dot") out << "\n";
      return Exit::ok;
    }
    if (sweep->parsed()) {
      const bool as_json = sweep->count("--json") > 0;
      nlohmann::json rows = nlohmann::json::array();
      bool all_agree = true;
      if (!as_json)
        out << "m\tn\tr\tn0\torder\tphi/2\ttheorem2\ttable1_n\toracle\tmodes\tfindings\n";
      for (i64 m = 3; m <= cfg.max_order; m += 2)
        for (i64 n = 3; m * n <= cfg.max_order; n += 2)
          for (i64 r = 2; r < m; ++r) {
            if (std::gcd(r, m) != 1 || powmod(r, n, m) != 1) continue;
            if (detail::least_equivalent_r(m, n, r) != r) continue;
            const GroupSpec G(m, n, r);
            if (!G.hypothesis_star()) continue;
            ClassifyOptions opt = options(Mode::oracle);
            opt.order_bound = std::max(opt.order_bound, cfg.max_order);
            const GroupReport rep = classify_spec(G, opt);
            all_agree = all_agree && rep.all_agree();
            auto cell = [](const std::optional<i64>& x) { return x ? std::to_string(*x) : std::string("-"); };
            auto flag = [](const std::optional<bool>& x) { return x ? std::string(*x ? "yes" : "no") : std::string("-"); };
            const std::optional<i64> tn = rep.table1 ? std::optional<i64>(rep.table1->n_column) : std::nullopt;
            if (as_json) {
              auto j = to_json(rep);
              rows.push_back({{"group", j["group"]},
                              {"theory", j["theory"]},
                              {"classes", rep.classes.size()},
                              {"agreement", j["agreement"]},
                              {"findings", rep.findings}});
            } else {
              out << m << "\t" << n << "\t" << r << "\t" << G.n0() << "\t" << G.order() << "\t" << cell(rep.phi_half)
                  << "\t" << cell(rep.theorem2) << "\t" << cell(tn) << "\t" << rep.classes.size() << "\t"
                  << flag(rep.agreement.modes) << "\t" << rep.findings.size() << "\n";
            }
          }
      if (as_json) out << rows.dump(2) << "\n";
      return cfg.strict && !all_agree ? Exit::disagreement : Exit::ok;
    }
  } catch (const BoundExceeded& e) {
    err << "error: " << e.what() << "\n";
    return Exit::bound;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << "\n";
    return Exit::bound;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << "\n";
    return Exit::bound;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return Exit::usage;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return Exit::usage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return Exit::usage;
  }
  return Exit::usage;
}

}  // namespace metacirc::cli
