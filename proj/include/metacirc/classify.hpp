#pragma once

// End-to-end census of connected tetravalent edge-transitive Cayley graphs of
// a split metacyclic group: candidate connection sets, Aut(G)-orbit
// reduction, full automorphism groups, transitivity labels, and comparison
// with the published counts and exceptional graphs.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"
#include "metacirc/autparam.hpp"
#include "metacirc/autosearch.hpp"
#include "metacirc/cayley.hpp"
#include "metacirc/metagroup.hpp"
#include "metacirc/permgroup.hpp"
#include "metacirc/transitivity.hpp"

namespace metacirc {

/// A configured computation bound (group order, enumeration size) was hit.
class BoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Mode { oracle, theorem };

inline const char* mode_name(Mode m) { return m == Mode::oracle ? "oracle" : "theorem"; }

struct ClassifyOptions {
  Mode mode = Mode::oracle;
  i64 order_bound = 1000;
  unsigned jobs = 1;
  std::uint64_t normalizer_limit = 10'000'000;
};

/// One row of the table of exceptional arc-transitive graphs.
struct Table1Row {
  std::string group;       // e.g. "Z7:Z3"
  std::string aut_name;    // e.g. "PGL(2,7)"
  std::string stab_name;   // e.g. "D16"
  std::uint64_t aut_order = 0;
  std::uint64_t stab_order = 0;
  int s = 0;
  int n_column = 0;
};

/// The exceptional row for G, if G is Z5, Z7:Z3, Z11:Z5 or Z23:Z11.
inline std::optional<Table1Row> table1_row(const GroupSpec& G) {
  if (G.order() == 5) return Table1Row{"Z5", "S5", "S4", 120, 24, 2, 1};
  if (G.ell() != 1 || G.is_abelian()) return std::nullopt;
  if (G.m() == 7 && G.n() == 3) return Table1Row{"Z7:Z3", "PGL(2,7)", "D16", 336, 16, 1, 3};
  if (G.m() == 11 && G.n() == 5) return Table1Row{"Z11:Z5", "PGL(2,11)", "S4", 1320, 24, 2, 6};
  if (G.m() == 23 && G.n() == 11) return Table1Row{"Z23:Z11", "PSL(2,23)", "S4", 6072, 24, 2, 11};
  return std::nullopt;
}

/// phi(n0)/2, defined for non-abelian groups under hypothesis (*).
inline std::optional<i64> phi_n0_half(const GroupSpec& G) {
  if (G.is_abelian() || !G.hypothesis_star()) return std::nullopt;
  return euler_phi(G.n0()) / 2;
}

/// The published count, with the two stated exceptions (3 and 6).
inline std::optional<i64> theorem2_count(const GroupSpec& G) {
  auto base = phi_n0_half(G);
  if (!base) return std::nullopt;
  if (G.ell() == 1 && G.m() == 11 && G.n() == 5) return 3;
  if (G.ell() == 1 && G.m() == 23 && G.n() == 11) return 6;
  return base;
}

struct ClassReport {
  std::vector<Element> set;
  std::string canonical;
  std::uint64_t aut_order = 0;
  std::uint64_t stab_order = 0;
  bool vertex = false, edge = false, arc = false, half = false;
  int s = 0;
  bool normal_cayley = false;
  std::optional<std::uint64_t> normalizer_order;
  std::uint64_t aut_gs_order = 0;                  // |Aut(G, S)|
  std::optional<bool> normalizer_identity;         // |N(G^)| / |G| == |Aut(G, S)|
  std::optional<i64> standard_j;                   // S_j with the same canonical form
  std::vector<std::vector<i64>> aut_g_orbits;      // Aut(G)-orbit representatives in this class
};

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct Agreement {
  std::optional<bool> theorem2;  // oracle count == published count
  std::optional<bool> table1;    // structural checks on the exceptional row
  std::optional<bool> table1_n;  // class count == the table's n column
  std::optional<bool> modes;     // oracle classes == standard-form classes
};

struct Counts {
  std::uint64_t raw_candidates = 0;
  std::uint64_t connected = 0;
  std::uint64_t aut_g_orbits = 0;
  std::uint64_t edge_transitive_classes = 0;
  std::uint64_t standard_sets = 0;
};

struct GroupReport {
  explicit GroupReport(GroupSpec g) : spec(std::move(g)) {}

  GroupSpec spec;
  Mode mode = Mode::oracle;
  std::uint64_t aut_g_order = 0;
  std::optional<i64> phi_half;
  std::optional<i64> theorem2;
  std::optional<Table1Row> table1;
  std::vector<ClassReport> classes;
  Counts counts;
  std::vector<Check> checks;
  Agreement agreement;
  std::vector<std::string> findings;

  bool all_agree() const {
    for (const auto& flag : {agreement.theorem2, agreement.table1, agreement.table1_n, agreement.modes})
      if (flag && !*flag) return false;
    return findings.empty();
  }
};

struct Candidates {
  std::vector<ConnectionSet> sets;  // connected only
  std::uint64_t raw = 0;            // before the generation filter
};

/// Every connection set {x, x^-1, y, y^-1} of G generating G.
inline Candidates enumerate_candidates(const GroupSpec& G, i64 order_bound = 1000) {
  if (G.order() > order_bound)
    throw BoundExceeded("enumerate_candidates: |G| = " + std::to_string(G.order()) + " exceeds the bound " +
                        std::to_string(order_bound));
  std::vector<Element> reps;  // one element per inverse pair
  for (i64 i = 1; i < G.order(); ++i) {
    const Element x = G.element_at(i);
    if (i < G.index(inv(x, G))) reps.push_back(x);
  }
  Candidates out;
  for (std::size_t p = 0; p < reps.size(); ++p)
    for (std::size_t q = p + 1; q < reps.size(); ++q) {
      ++out.raw;
      if (closure({reps[p], reps[q]}, G) != G.order()) continue;
      out.sets.emplace_back(std::vector<Element>{reps[p], inv(reps[p], G), reps[q], inv(reps[q], G)}, G);
    }
  return out;
}

/// Standard sets S_j for 1 <= j < n0 with gcd(j, n) == 1.
inline std::vector<std::pair<i64, ConnectionSet>> standard_sets(const GroupSpec& G) {
  std::vector<std::pair<i64, ConnectionSet>> out;
  for (i64 j = 1; j < G.n0(); ++j)
    if (std::gcd(j, G.n()) == 1) out.emplace_back(j, standard_connection_set(j, G));
  return out;
}

namespace detail {

/// Is the right-regular copy of G normalized by every generator of aut?
inline bool regular_is_normal(const PermGroup& aut, const GroupSpec& G) {
  const auto regular = regular_representation(G);
  for (const Perm& sigma : aut.generators()) {
    const Perm sigma_inv = sigma.inverse();
    for (const Perm& rho : regular) {
      const Perm tau = sigma_inv * rho * sigma;
      if (tau != right_multiplication(G.element_at(tau[0]), G)) return false;
    }
  }
  return true;
}

/// Full analysis of Cay(G, S). With `edge_only`, stops after the edge-orbit
/// count when the graph is not edge-transitive.
inline ClassReport analyze_class(const ConnectionSet& S, const GroupSpec& G, const std::vector<AutoMap>& aut_g,
                                 const ClassifyOptions& opt, bool edge_only) {
  ClassReport rep;
  rep.set = S.elements();
  const Graph g = build_cayley(S, G);
  GraphAnalysis A = analyze_graph(g);
  rep.canonical = A.canonical;
  rep.edge = edge_orbit_count(A.aut, g) == 1;
  if (edge_only && !rep.edge) return rep;
  rep.aut_order = A.aut.order();
  rep.stab_order = rep.aut_order / static_cast<std::uint64_t>(G.order());
  rep.vertex = vertex_orbit_count(A.aut, g) == 1;
  rep.arc = rep.vertex && arc_orbit_count(A.aut, g) == 1;
  rep.half = rep.vertex && rep.edge && !rep.arc;
  rep.s = rep.arc ? max_s_arc_transitive(A.aut, g, 3) : 0;
  rep.normal_cayley = regular_is_normal(A.aut, G);
  rep.aut_gs_order = aut_stabilizer(S.elements(), G, aut_g).size();
  try {
    rep.normalizer_order = normalizer_of_regular(A.aut, G, opt.normalizer_limit);
    rep.normalizer_identity = *rep.normalizer_order == rep.aut_gs_order * static_cast<std::uint64_t>(G.order());
  } catch (const std::length_error&) {
    // left unset; reported as a finding
  }
  return rep;
}

template <class Task>
void parallel_for(std::size_t count, unsigned jobs, Task task) {
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < count;) {
      try {
        task(k);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next = count;
      }
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);
}

inline std::string describe(const std::vector<Element>& S) {
  std::string out = "{";
  for (const Element& x : S)
    out += (out.size() > 1 ? ", (" : "(") + std::to_string(x.u) + "," + std::to_string(x.v) + "," +
           std::to_string(x.w) + ")";
  return out + "}";
}

}  // namespace detail

/// Structural checks against the exceptional row; throws for other groups.
inline std::vector<Check> verify_table1(const GroupReport& report) {
  if (!report.table1) throw std::invalid_argument("verify_table1: " + report.spec.to_string() + " has no table row");
  const Table1Row& row = *report.table1;
  const auto twice = 2 * static_cast<std::uint64_t>(report.spec.order());
  std::vector<const ClassReport*> special;
  for (const auto& c : report.classes)
    if (c.aut_order == row.aut_order) special.push_back(&c);
  std::vector<Check> out;
  out.push_back({"exceptional_class_unique", special.size() == 1,
                 std::to_string(special.size()) + " class(es) with |Aut| = " + std::to_string(row.aut_order)});
  if (special.size() == 1) {
    const ClassReport& c = *special.front();
    out.push_back({"exceptional_stabilizer", c.stab_order == row.stab_order,
                   "stabilizer order " + std::to_string(c.stab_order) + ", expected " + std::to_string(row.stab_order)});
    out.push_back({"exceptional_s", c.s == row.s, "s = " + std::to_string(c.s) + ", expected " + std::to_string(row.s)});
  }
  bool others = true;
  for (const auto& c : report.classes)
    if (c.aut_order != row.aut_order && !(c.half && c.aut_order == twice)) others = false;
  out.push_back({"others_half_transitive", others,
                 "every other class half-transitive with |Aut| = " + std::to_string(twice)});
  return out;
}

inline GroupReport classify_spec(const GroupSpec& G, const ClassifyOptions& opt = {}) {
  GroupReport report(G);
  report.mode = opt.mode;
  report.phi_half = phi_n0_half(G);
  report.theorem2 = theorem2_count(G);
  report.table1 = table1_row(G);
  if (G.order() > opt.order_bound)
    throw BoundExceeded("classify: |G| = " + std::to_string(G.order()) + " exceeds the bound " +
                        std::to_string(opt.order_bound));

  const std::vector<AutoMap> aut_g = automorphisms_of(G);
  report.aut_g_order = aut_g.size();
  const AutAction action(G, aut_g);

  // Standard sets: needed for theorem mode, and to label oracle classes.
  const auto standard = standard_sets(G);
  report.counts.standard_sets = standard.size();
  std::vector<ClassReport> standard_reports(standard.size());
  detail::parallel_for(standard.size(), opt.jobs, [&](std::size_t k) {
    standard_reports[k] = detail::analyze_class(standard[k].second, G, aut_g, opt, false);
  });
  std::map<std::string, i64> standard_j;  // canonical form -> least j
  for (std::size_t k = 0; k < standard.size(); ++k) standard_j.emplace(standard_reports[k].canonical, standard[k].first);

  std::vector<ClassReport> found;  // in deterministic input order
  if (opt.mode == Mode::oracle) {
    const Candidates cand = enumerate_candidates(G, opt.order_bound);
    report.counts.raw_candidates = cand.raw;
    report.counts.connected = cand.sets.size();
    std::set<std::vector<i64>> orbit_reps;
    for (const ConnectionSet& S : cand.sets) orbit_reps.insert(action.canonical(S.indices(G)));
    report.counts.aut_g_orbits = orbit_reps.size();
    const std::vector<std::vector<i64>> reps(orbit_reps.begin(), orbit_reps.end());
    std::vector<ClassReport> analysed(reps.size());
    detail::parallel_for(reps.size(), opt.jobs, [&](std::size_t k) {
      std::vector<Element> elems;
      for (i64 i : reps[k]) elems.push_back(G.element_at(i));
      analysed[k] = detail::analyze_class(ConnectionSet(elems, G), G, aut_g, opt, true);
      analysed[k].aut_g_orbits = {reps[k]};
    });
    for (auto& c : analysed)
      if (c.edge) found.push_back(std::move(c));
  } else {
    for (std::size_t k = 0; k < standard.size(); ++k) {
      ClassReport c = standard_reports[k];
      c.aut_g_orbits = {action.canonical(standard[k].second.indices(G))};
      found.push_back(std::move(c));
    }
  }

  // Merge by canonical form; the first occurrence supplies the representative.
  std::map<std::string, ClassReport> merged;
  for (auto& c : found) {
    auto it = merged.find(c.canonical);
    if (it == merged.end()) {
      merged.emplace(c.canonical, std::move(c));
    } else {
      for (auto& o : c.aut_g_orbits)
        if (std::find(it->second.aut_g_orbits.begin(), it->second.aut_g_orbits.end(), o) ==
            it->second.aut_g_orbits.end())
          it->second.aut_g_orbits.push_back(o);
    }
  }
  for (auto& [key, c] : merged) {
    if (auto it = standard_j.find(key); it != standard_j.end()) c.standard_j = it->second;
    std::sort(c.aut_g_orbits.begin(), c.aut_g_orbits.end());
    report.classes.push_back(std::move(c));
  }
  report.counts.edge_transitive_classes = report.classes.size();

  // Findings and agreement.
  const auto twice = 2 * static_cast<std::uint64_t>(G.order());
  for (const auto& c : report.classes) {
    const std::string who = detail::describe(c.set);
    if (!c.edge) report.findings.push_back("standard set " + who + " is not edge-transitive");
    if (!c.vertex) report.findings.push_back(who + ": not vertex-transitive");
    if (c.aut_order != c.stab_order * static_cast<std::uint64_t>(G.order()))
      report.findings.push_back(who + ": |V| does not divide |Aut|");
    if (!c.normalizer_identity)
      report.findings.push_back(who + ": normalizer not computed (group too large)");
    else if (!*c.normalizer_identity)
      report.findings.push_back(who + ": |N(G)|/|G| != |Aut(G,S)|");
    if (c.normal_cayley && c.aut_order != static_cast<std::uint64_t>(G.order()) * c.aut_gs_order)
      report.findings.push_back(who + ": normal Cayley graph with inconsistent |Aut|");
    const bool exceptional = report.table1 && c.aut_order == report.table1->aut_order;
    if (!G.is_abelian() && !exceptional && c.edge && !(c.normal_cayley && c.aut_order == twice && c.half))
      report.findings.push_back(who + ": expected a half-transitive normal Cayley graph with |Aut| = 2|G|, got |Aut| = " +
                                std::to_string(c.aut_order));
    if (opt.mode == Mode::oracle && G.hypothesis_star() && !G.is_abelian() && !c.standard_j)
      report.findings.push_back(who + ": no standard set S_j gives this class");
  }

  if (report.theorem2) {
    report.agreement.theorem2 = static_cast<i64>(report.classes.size()) == *report.theorem2;
  }
  if (report.table1) {
    report.checks = verify_table1(report);
    report.agreement.table1 =
        std::all_of(report.checks.begin(), report.checks.end(), [](const Check& c) { return c.pass; });
    report.agreement.table1_n = static_cast<int>(report.classes.size()) == report.table1->n_column;
  }
  if (opt.mode == Mode::oracle && !standard.empty()) {
    std::set<std::string> oracle_keys, theorem_keys;
    for (const auto& c : report.classes) oracle_keys.insert(c.canonical);
    for (std::size_t k = 0; k < standard.size(); ++k)
      if (standard_reports[k].edge) theorem_keys.insert(standard_reports[k].canonical);
    report.agreement.modes = oracle_keys == theorem_keys;
  }
  return report;
}

// ---------------------------------------------------------------------------
// JSON

inline nlohmann::json to_json(const GroupReport& r) {
  using nlohmann::json;
  auto opt = [](const auto& x) -> json { return x ? json(*x) : json(nullptr); };
  json out;
  out["group"] = {{"m", r.spec.m()},     {"n", r.spec.n()},     {"r", r.spec.r()},
                  {"ell", r.spec.ell()}, {"n0", r.spec.n0()},   {"order", r.spec.order()},
                  {"aut_order", r.aut_g_order}};
  json theory;
  theory["phi_n0_half"] = opt(r.phi_half);
  theory["theorem2_count"] = opt(r.theorem2);
  if (r.table1)
    theory["table1"] = {{"group", r.table1->group},           {"aut", r.table1->aut_name},
                        {"stabilizer", r.table1->stab_name},  {"aut_order", r.table1->aut_order},
                        {"stab_order", r.table1->stab_order}, {"s", r.table1->s},
                        {"n", r.table1->n_column}};
  else
    theory["table1"] = nullptr;
  out["theory"] = theory;
  out["mode"] = mode_name(r.mode);
  out["counts"] = {{"raw_candidates", r.counts.raw_candidates},
                   {"connected", r.counts.connected},
                   {"aut_g_orbits", r.counts.aut_g_orbits},
                   {"standard_sets", r.counts.standard_sets},
                   {"classes", r.counts.edge_transitive_classes}};
  json classes = json::array();
  for (const auto& c : r.classes) {
    json set = json::array();
    for (const Element& x : c.set) set.push_back({x.u, x.v, x.w});
    classes.push_back({{"set", set},
                       {"canonical", c.canonical},
                       {"aut_order", c.aut_order},
                       {"stab_order", c.stab_order},
                       {"vertex", c.vertex},
                       {"edge", c.edge},
                       {"arc", c.arc},
                       {"half", c.half},
                       {"s", c.s},
                       {"normal_cayley", c.normal_cayley},
                       {"normalizer_order", opt(c.normalizer_order)},
                       {"aut_gs_order", c.aut_gs_order},
                       {"normalizer_identity", opt(c.normalizer_identity)},
                       {"standard_j", opt(c.standard_j)},
                       {"aut_g_orbits", c.aut_g_orbits}});
  }
  out["classes"] = classes;
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  out["checks"] = checks;
  out["agreement"] = {{"theorem2", opt(r.agreement.theorem2)},
                      {"table1", opt(r.agreement.table1)},
                      {"table1_n", opt(r.agreement.table1_n)},
                      {"modes", opt(r.agreement.modes)}};
  out["findings"] = r.findings;
  return out;
}

/// Writes the JSON report to `path`; with `graphs`, also one file per class
/// next to it (<stem>_class<k>.g6 or .dot).
inline void emit_report(const GroupReport& r, const std::filesystem::path& path,
                        std::optional<ExportFormat> graphs = std::nullopt) {
  auto write = [](const std::filesystem::path& p, const std::string& text) {
    std::ofstream f(p, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + p.string() + " for writing");
    f << text;
    if (!f) throw std::runtime_error("write failed: " + p.string());
  };
  write(path, to_json(r).dump(2) + "\n");
  if (!graphs) return;
  const char* ext = *graphs == ExportFormat::graph6 ? ".g6" : *graphs == ExportFormat::dot ? ".dot" : ".json";
  for (std::size_t k = 0; k < r.classes.size(); ++k) {
    const Graph g = build_cayley(ConnectionSet(r.classes[k].set, r.spec), r.spec);
    auto p = path;
    p.replace_filename(path.stem().string() + "_class" + std::to_string(k) + ext);
    std::string text = export_graph(g, *graphs);
    if (*graphs != ExportFormat::dot) text += "\n";
    write(p, text);
  }
}

}  // namespace metacirc
