// Copyright 2026 The raagqi Authors
// SPDX-License-Identifier: Apache-2.0

// raagqi: analyze, compare, detect, enumerate, export.
// Exit codes: 0 QI / success, 1 not QI, 2 bad input, 3 unknown.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "raagqi/decision.hpp"
#include "raagqi/jsj.hpp"
#include "raagqi/oracles.hpp"

using namespace raagqi;
using nlohmann::json;

namespace {

constexpr int kBadInput = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Graph load(const std::string& path, int max_vertices) {
  std::string text;
  if (path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else {
    std::ifstream in(path);
    if (!in) throw InputError(path + ": cannot open");
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  Graph g;
  try {
    g = parse_graph_auto(text);
  } catch (const std::exception& e) {
    throw InputError(path + ": " + e.what());
  }
  if (max_vertices > 0 && g.size() > max_vertices)
    throw InputError(path + ": " + std::to_string(g.size()) + " vertices exceeds --max-vertices " +
                     std::to_string(max_vertices));
  return g;
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::fwrite(text.data(), 1, text.size(), stdout);
    return;
  }
  std::ofstream f(out);
  if (!f) throw InputError(out + ": cannot write");
  f << text;
}

std::string yes(bool b) { return b ? "yes" : "no"; }

// Brute-force cross-checks on one input; returns discrepancy messages.
std::vector<std::string> oracle_checks(const Graph& g) {
  std::vector<std::string> bad;
  if (g.size() == 0 || !is_connected(g)) return bad;
  if (g.size() > 16) return {"oracle checks skipped: more than 16 vertices"};
  if (cut_vertices(g) != oracles::brute_cut_vertices(g)) bad.push_back("cut vertices disagree with brute force");
  if (g.size() >= 2 && maximal_biconnected_subgraphs(g) != oracles::brute_blocks(g))
    bad.push_back("blocks disagree with brute force");
  if (g.size() >= 3) {
    auto gog = build_jsj(g);
    if (!gog.trivial) {
      auto prof = profile_gog(gog);
      JointDecoration jd({&prof});
      jd.naive();
      std::vector<std::pair<std::vector<int>, std::vector<int>>> rounds{{jd.decoration(0).vertex, jd.decoration(0).edge}};
      while (jd.neighbour_refine()) rounds.push_back({jd.decoration(0).vertex, jd.decoration(0).edge});
      rounds.push_back(rounds.back());
      std::string why;
      if (!oracles::ball_matches_quotient(gog, rounds, 3, 5, &why)) bad.push_back("ball refinement: " + why);
    }
  }
  return bad;
}

std::string analyze_text(const json& r) {
  std::ostringstream s;
  s << "graph: " << r["vertices"] << " vertices, " << r["edges"] << " edges\n";
  std::vector<std::string> summary;
  if (!r["connected"].get<bool>()) {
    s << "disconnected; free product of:\n";
    for (const auto& c : r["components"])
      s << "  " << c["vertices"].get<std::string>() << "  " << c["group"].get<std::string>() << "  ["
        << c["label"].get<std::string>() << "]\n";
    s << "label: " << r["label"].get<std::string>() << "\n";
    return s.str();
  }
  bool trivial = !r.contains("jsj") || r["jsj"]["trivial"].get<bool>();
  summary.push_back(trivial ? "trivial JSJ" : "nontrivial JSJ");
  if (r["typeII"].get<bool>()) summary.push_back("type II");
  if (r["outIsFinite"].get<bool>()) summary.push_back("finite Out");
  summary.push_back(r["dovetail"] == "known-dovetail" ? "dovetail" : "dovetail unknown");
  std::string line;
  for (const auto& x : summary) line += (line.empty() ? "" : "; ") + x;
  s << line << "\n";
  s << "label: " << r["label"].get<std::string>() << "\n";
  s << "one-ended: " << yes(r["oneEnded"]) << "; trivial centre: " << yes(r["trivialCentre"]) << "\n";
  s << "clique tree-graded: " << (r["treeGraded"].is_null() ? std::string("no") : r["treeGraded"].dump() + "-clique")
    << "\n";
  if (trivial) return s.str();
  const auto& jsj = r["jsj"];
  s << "tree of cylinders: " << jsj["vertices"].size() << " vertices, " << jsj["edges"].size() << " edges\n";
  auto names = [](const json& a) {
    std::string out = "{";
    for (std::size_t i = 0; i < a.size(); ++i) out += (i ? "," : "") + a[i].get<std::string>();
    return out + "}";
  };
  for (const auto& v : jsj["vertices"]) {
    s << "  v" << v["id"] << " " << v["kind"].get<std::string>();
    if (!v["cutVertex"].is_null()) s << " star(" << v["cutVertex"].get<std::string>() << ")";
    s << " " << names(v["definingSubgraph"]) << "  group " << v["group"].get<std::string>() << "\n";
    if (v.contains("peripheralBlocks")) {
      for (const auto& p : v["peripheralBlocks"])
        s << "      peripheral block " << p["block"].get<std::string>() << " [" << p["label"].get<std::string>() << "]\n";
      for (const auto& b : v["nonPeripheralBlocks"]) s << "      non-peripheral block " << b.get<std::string>() << "\n";
    } else {
      s << "      " << v["family"].get<std::string>() << " [" << v["label"].get<std::string>() << "], "
        << v["dovetail"].get<std::string>() << "\n";
    }
  }
  for (const auto& e : jsj["edges"])
    s << "  e" << e["id"] << " v" << e["cylinder"] << " -- v" << e["rigid"] << " " << names(e["definingSubgraph"])
      << "  multiplicity " << e["multiplicityAtCylinder"].get<std::string>() << "/"
      << e["multiplicityAtRigid"].get<std::string>() << "  stretch " << e["stretchStatus"].get<std::string>()
      << "\n";
  for (const auto& l : r["stretchLedgers"]) {
    s << "  ledger for rigid " << l["rigid"].get<std::string>() << ": " << l["steps"].size()
      << " doubling steps to a " << l["base"]["vertices"].size() << "-vertex base; stretch";
    for (const auto& [k, val] : l["stretchAtCutVertices"].items()) s << " " << k << "=" << val.get<std::string>();
    s << "\n";
  }
  return s.str();
}

std::string verdict_text(const Verdict& v) {
  std::ostringstream s;
  s << "verdict: " << to_string(v.tag) << "\n";
  s << "reason: " << v.reason << "\n";
  for (const auto& w : v.witnesses) s << "witness: " << w << "\n";
  if (v.report.contains("embellished"))
    s << "relstr: " << v.report["embellished"]["relstr"][0].get<std::string>() << " vs "
      << v.report["embellished"]["relstr"][1].get<std::string>() << "\n";
  if (v.report.contains("certificates"))
    for (const auto& c : v.report["certificates"]) s << "certificate: " << c.dump() << "\n";
  return s.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quasi-isometry analysis of right-angled Artin groups from their defining graphs"};
  app.require_subcommand(1);
  std::string format = "text", out;
  int max_vertices = 0;
  bool oracle = false;
  auto add_common = [&](CLI::App* c, bool dot) {
    c->add_option("--format", format, "Output format")
        ->check(CLI::IsMember(dot ? std::vector<std::string>{"text", "json", "dot"}
                                  : std::vector<std::string>{"text", "json"}));
    c->add_option("--out", out, "Write output to PATH instead of stdout");
    c->add_option("--max-vertices", max_vertices, "Reject inputs with more vertices");
    c->add_flag("--oracle", oracle, "Cross-check against brute-force oracles");
  };

  std::string path_a, path_b;
  int n = 0;
  int threads = 0;
  auto* analyze = app.add_subcommand("analyze", "Tree of cylinders, labels, stretch ledgers, dovetail status");
  analyze->add_option("graph", path_a, "Graph file (edge list or JSON; - for stdin)")->required();
  add_common(analyze, true);
  auto* cmp = app.add_subcommand("compare", "Decide whether two RAAGs are quasi-isometric");
  cmp->add_option("first", path_a)->required();
  cmp->add_option("second", path_b)->required();
  add_common(cmp, false);
  auto* detect = app.add_subcommand("detect", "Detect clique tree-graded graphs");
  detect->add_option("graph", path_a)->required();
  add_common(detect, false);
  auto* enumerate = app.add_subcommand("enumerate", "Classify all connected graphs on n vertices");
  enumerate->add_option("n", n, "Number of vertices (1..10)")->required()->check(CLI::Range(1, 10));
  enumerate->add_option("--threads", threads, "Worker threads (0 = all cores)");
  add_common(enumerate, false);
  auto* exp = app.add_subcommand("export", "Write the tree of cylinders as DOT or JSON");
  exp->add_option("graph", path_a)->required();
  add_common(exp, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kBadInput;
  }

  try {
    if (*analyze) {
      Graph g = load(path_a, max_vertices);
      json r = analyze_graph(g);
      if (oracle) r["oracleDiscrepancies"] = oracle_checks(g);
      if (format == "json") {
        emit(r.dump(2) + "\n", out);
      } else if (format == "dot") {
        if (g.size() < 3 || !is_connected(g)) throw InputError("dot output needs a connected graph on >= 3 vertices");
        emit(export_dot(build_jsj(g)), out);
      } else {
        std::string text = analyze_text(r);
        if (oracle)
          for (const auto& d : r["oracleDiscrepancies"]) text += "oracle discrepancy: " + d.get<std::string>() + "\n";
        emit(text, out);
      }
      return oracle && !r["oracleDiscrepancies"].empty() ? 3 : 0;
    }
    if (*cmp) {
      Graph g = load(path_a, max_vertices);
      Graph h = load(path_b, max_vertices);
      Verdict v = compare(g, h);
      if (oracle) {
        auto da = oracle_checks(g), db = oracle_checks(h);
        da.insert(da.end(), db.begin(), db.end());
        v.report["oracleDiscrepancies"] = da;
      }
      emit(format == "json" ? v.report.dump(2) + "\n" : verdict_text(v), out);
      if (oracle && !v.report["oracleDiscrepancies"].empty()) return 3;
      return exit_code(v.tag);
    }
    if (*detect) {
      Graph g = load(path_a, max_vertices);
      auto k = detect_n_clique_tree_graded(g);
      if (format == "json") emit(json{{"cliqueTreeGraded", k ? json(*k) : json(nullptr)}}.dump() + "\n", out);
      else emit(k ? std::to_string(*k) + "-clique tree-graded\n" : "not clique tree-graded\n", out);
      return 0;
    }
    if (*enumerate) {
      auto gs = enumerate_connected_graphs(n);
      auto c = classify_corpus(gs, {}, threads);
      json doc;
      doc["n"] = n;
      doc["graphs"] = gs.size();
      json classes = json::array();
      for (const auto& members : c.classes) {
        const Graph& rep = gs[members.front()];
        auto p = make_profile(rep);
        json cls{{"representative", json::parse(serialize_graph(rep, GraphFormat::Json))},
                 {"members", members},
                 {"trivialJsj", p->trivial_jsj},
                 {"label", p->trivial_jsj ? json(p->label.str()) : json(nullptr)}};
        classes.push_back(cls);
      }
      doc["classes"] = classes;
      json unknown = json::array();
      for (auto [i, j] : c.unknown_pairs) unknown.push_back({i, j});
      doc["unknownPairs"] = unknown;
      if (format == "json") {
        emit(doc.dump(2) + "\n", out);
      } else {
        std::ostringstream s;
        s << gs.size() << " connected graphs on " << n << " vertices, " << c.classes.size()
          << " classes, " << c.unknown_pairs.size() << " unknown pairs\n";
        for (std::size_t i = 0; i < c.classes.size(); ++i) {
          const Graph& rep = gs[c.classes[i].front()];
          std::string edges;
          for (auto [u, v] : rep.edges()) edges += " " + rep.name(u) + "-" + rep.name(v);
          s << "class " << i << ": " << c.classes[i].size() << " graph(s); representative" << edges;
          if (classes[i]["trivialJsj"].get<bool>()) s << " [trivial JSJ, " << classes[i]["label"].get<std::string>() << "]";
          s << "\n";
        }
        emit(s.str(), out);
      }
      return 0;
    }
    if (*exp) {
      Graph g = load(path_a, max_vertices);
      if (g.size() < 3 || !is_connected(g)) throw InputError("export needs a connected graph on >= 3 vertices");
      auto gog = build_jsj(g);
      emit(format == "dot" ? export_dot(gog) : export_json(gog), out);
      return 0;
    }
  } catch (const InputError& e) {
    std::fprintf(stderr, "raagqi: %s\n", e.what());
    return kBadInput;
  } catch (const GraphError& e) {
    std::fprintf(stderr, "raagqi: %s\n", e.what());
    return kBadInput;
  }
  return 0;
}
