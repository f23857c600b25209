#include "falkkit/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "falkkit/bias_patterns.hpp"
#include "falkkit/error.hpp"
#include "falkkit/falk.hpp"
#include "falkkit/gain_graph.hpp"
#include "falkkit/realization.hpp"

namespace falkkit {

namespace {

using json = nlohmann::ordered_json;

std::string set_str(std::span<const EdgeId> ids) {
  std::string s = "{";
  for (std::size_t i = 0; i < ids.size(); ++i) s += (i ? "," : "") + std::to_string(ids[i]);
  return s + "}";
}

json hypotheses_json(const ValidationReport& r) {
  json out = json::object();
  for (Hypothesis h : kAllHypotheses) {
    out[std::string(hypothesis_name(h))] = {
        {"pass", r[h].pass},
        {"description", hypothesis_description(h)},
        {"witnesses", r[h].witnesses},
    };
  }
  return out;
}

json triangles_json(const std::vector<Triangle>& ts) {
  json out = json::array();
  for (const Triangle& t : ts) out.push_back({{"edges", t.edges}, {"kind", triangle_kind_name(t.kind)}});
  return out;
}

// Order and keys of the counts object; shared by human and JSON output.
std::vector<std::pair<std::string, long>> count_fields(const PatternCounts& c) {
  return {{"k3", c.k3},       {"k4", c.k4},       {"d3", c.d3},   {"d21", c.d21}, {"k22", c.k22}, {"k33", c.k33},
          {"gcirc", c.gcirc}, {"d31", c.d31},     {"g1", c.g1},   {"g2", c.g2},   {"theta", c.theta}};
}

json counts_json(const PatternCounts& c) {
  json out = json::object();
  for (const auto& [k, v] : count_fields(c)) out[k] = v;
  return out;
}

json occurrences_json(const PatternCensus& census) {
  json out = json::object();
  for (const auto& [name, sets] : census.occurrences) out[std::string(pattern_label(name))] = sets;
  return out;
}

json optional_json(const std::optional<std::int64_t>& v) { return v ? json(*v) : json(nullptr); }

json phi3_json(const std::optional<std::int64_t>& comb, const std::optional<std::int64_t>& rank) {
  json agree = comb && rank ? json(*comb == *rank) : json(nullptr);
  return {{"comb", optional_json(comb)}, {"rank", optional_json(rank)}, {"agree", agree}};
}

void print_hypotheses(std::ostream& out, const ValidationReport& r) {
  for (Hypothesis h : kAllHypotheses) {
    out << hypothesis_name(h) << ' ' << (r[h].pass ? "pass" : "FAIL") << "  " << hypothesis_description(h);
    if (!r[h].pass) {
      out << "  witnesses:";
      for (const EdgeSet& w : r[h].witnesses) out << ' ' << set_str(w);
    }
    out << '\n';
  }
}

std::string failing_list(const ValidationReport& r) {
  std::string s;
  for (Hypothesis h : r.failing()) s += (s.empty() ? "" : ",") + std::string(hypothesis_name(h));
  return s;
}

struct Invocation {
  std::string subcommand;
  std::string path;
  bool json = false;
  std::string method = "both";
};

int run_check(const Invocation& inv, const GainGraph& g, std::ostream& out) {
  ValidationReport r = validate(g);
  if (inv.json) {
    out << json{{"n", g.num_edges()}, {"hypotheses", hypotheses_json(r)}}.dump(2) << '\n';
  } else {
    print_hypotheses(out, r);
  }
  return kExitOk;
}

int run_triangles(const Invocation& inv, const GainGraph& g, std::ostream& out, std::ostream& err) {
  ValidationReport r = validate(g);
  if (!r.passes({Hypothesis::H3, Hypothesis::H4, Hypothesis::H5})) {
    err << "falkkit: triangle enumeration requires H3-H5 (failing: " << failing_list(r) << ")\n";
    return kExitRefused;
  }
  auto ts = triangles(g);
  if (inv.json) {
    out << json{{"n", g.num_edges()}, {"triangles", triangles_json(ts)}}.dump(2) << '\n';
  } else {
    for (const Triangle& t : ts) out << set_str(t.edges) << ' ' << triangle_kind_name(t.kind) << '\n';
    out << "total: " << ts.size() << '\n';
  }
  return kExitOk;
}

int run_counts(const Invocation& inv, const GainGraph& g, std::ostream& out, std::ostream& err) {
  ValidationReport r = validate(g);
  if (!r.all_pass()) {
    err << "falkkit: pattern counts require H1-H5 (failing: " << failing_list(r) << ")\n";
    return kExitRefused;
  }
  PatternCensus c = census(g);
  if (inv.json) {
    out << json{{"n", g.num_edges()}, {"counts", counts_json(c.counts)}, {"occurrences", occurrences_json(c)}}.dump(2)
        << '\n';
  } else {
    for (const auto& [k, v] : count_fields(c.counts)) out << k << " = " << v << '\n';
  }
  return kExitOk;
}

int run_phi3(const Invocation& inv, const GainGraph& g, std::ostream& out, std::ostream& err) {
  ValidationReport r = validate(g);
  const bool want_comb = inv.method != "rank";
  const bool want_rank = inv.method != "comb";
  std::optional<std::int64_t> comb;
  std::optional<std::int64_t> rank;
  bool refused = false;
  if (want_comb) {
    if (r.all_pass()) {
      comb = phi3_combinatorial(count_patterns(g));
    } else {
      err << "falkkit: combinatorial formula withheld (failing: " << failing_list(r) << ")\n";
      refused = true;
    }
  }
  if (want_rank) {
    if (r.passes({Hypothesis::H4, Hypothesis::H5})) {
      rank = phi3_rank(g);
    } else {
      err << "falkkit: rank formula withheld (failing: " << failing_list(r) << ")\n";
      refused = true;
    }
  }
  if (inv.json) {
    out << json{{"n", g.num_edges()}, {"phi3", phi3_json(comb, rank)}, {"hypotheses", hypotheses_json(r)}}.dump(2)
        << '\n';
  } else {
    auto show = [](const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : std::string("withheld"); };
    if (want_comb) out << "combinatorial: " << show(comb) << '\n';
    if (want_rank) out << "rank: " << show(rank) << '\n';
    if (want_comb && want_rank) {
      out << "agree: " << (comb && rank ? (*comb == *rank ? "true" : "false") : "n/a") << '\n';
    }
  }
  return refused ? kExitRefused : kExitOk;
}

int run_realize(const Invocation& inv, const GainGraph& g, std::ostream& out, std::ostream& err) {
  ValidationReport r = validate(g);
  if (!r.passes({Hypothesis::H4, Hypothesis::H5})) {
    err << "falkkit: realization requires H4 and H5 (failing: " << failing_list(r) << ")\n";
    return kExitRefused;
  }
  auto hs = arrangement(g);
  if (inv.json) {
    json planes = json::array();
    for (const Hyperplane& h : hs) {
      json normal = json::array();
      for (const mpq_class& c : h.normal) normal.push_back(c.get_num().get_str() + "/" + c.get_den().get_str());
      planes.push_back({{"edge", h.edge}, {"normal", normal}});
    }
    out << json{{"n", g.num_edges()}, {"hyperplanes", planes}}.dump(2) << '\n';
  } else {
    for (const Hyperplane& h : hs) out << "H " << h.edge << ": " << h.coefficients_str() << '\n';
  }
  return kExitOk;
}

int run_rank_f3(const Invocation& inv, const GainGraph& g, std::ostream& out, std::ostream& err) {
  ValidationReport r = validate(g);
  if (!r.passes({Hypothesis::H4, Hypothesis::H5})) {
    err << "falkkit: rank-f3 requires H4 and H5 (failing: " << failing_list(r) << ")\n";
    return kExitRefused;
  }
  SpanF3 f3 = span_F3(g.num_edges(), dependent_3sets(g));
  if (inv.json) {
    out << json{{"n", g.num_edges()}, {"f3", {{"size", f3.size}, {"rank", f3.rank}}}}.dump(2) << '\n';
  } else {
    out << "|F3| = " << f3.size << ", rank = " << f3.rank << '\n';
  }
  return kExitOk;
}

int run_report(const Invocation& inv, const GainGraph& g, std::ostream& out) {
  FalkReport rep = verify(g);
  if (inv.json) {
    json dims = nullptr;
    if (rep.rank) {
      dims = {{"dim_I2", rep.rank->dim_I2},
              {"dim_A2", rep.rank->dim_A2},
              {"dim_I3_2", rep.rank->dim_I3_2},
              {"f3_size", rep.rank->f3.size},
              {"f3_rank", rep.rank->f3.rank}};
    }
    json doc = {
        {"n", rep.n},
        {"hypotheses", hypotheses_json(rep.hypotheses)},
        {"triangles", triangles_json(rep.triangles)},
        {"counts", rep.census ? counts_json(rep.census->counts) : json(nullptr)},
        {"occurrences", rep.census ? occurrences_json(*rep.census) : json(nullptr)},
        {"dimensions", dims},
        {"phi3", phi3_json(rep.phi3_combinatorial, rep.phi3_rank())},
        {"withheld", {{"comb", rep.combinatorial_withheld}, {"rank", rep.rank_withheld}}},
    };
    out << doc.dump(2) << '\n';
    return kExitOk;
  }

  out << "n = " << rep.n << '\n';
  print_hypotheses(out, rep.hypotheses);
  out << "triangles: " << rep.triangles.size() << '\n';
  for (const Triangle& t : rep.triangles) out << "  " << set_str(t.edges) << ' ' << triangle_kind_name(t.kind) << '\n';
  if (rep.census) {
    for (const auto& [k, v] : count_fields(rep.census->counts)) out << k << " = " << v << '\n';
  } else {
    out << "counts: withheld (" << rep.combinatorial_withheld << ")\n";
  }
  if (rep.rank) {
    out << "dim I2 = " << rep.rank->dim_I2 << '\n'
        << "dim A2 = " << rep.rank->dim_A2 << '\n'
        << "dim I3_2 = " << rep.rank->dim_I3_2 << '\n'
        << "|F3| = " << rep.rank->f3.size << ", rank = " << rep.rank->f3.rank << '\n';
  } else {
    out << "dimensions: withheld (" << rep.rank_withheld << ")\n";
  }
  auto show = [](const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : std::string("withheld"); };
  auto agree = rep.agree();
  out << "combinatorial: " << show(rep.phi3_combinatorial) << '\n'
      << "rank: " << show(rep.phi3_rank()) << '\n'
      << "agree: " << (agree ? (*agree ? "true" : "false") : "n/a") << '\n';
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Invocation inv;
  CLI::App app{"Third Falk invariant of hyperplane arrangements attached to gain graphs", "falkkit"};
  app.require_subcommand(1, 1);

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"check", "report hypotheses H1-H5 with witnesses"},
      {"triangles", "list the dependent 3-sets with their kinds"},
      {"counts", "count the distinguished subgraphs"},
      {"phi3", "compute phi3"},
      {"realize", "print the canonical hyperplane arrangement"},
      {"rank-f3", "size and rank of the F3 spanning set"},
      {"report", "full verification report"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("file", inv.path, "graph file")->required();
    sub->add_flag("--json", inv.json, "machine-readable output");
    if (name == "phi3") {
      sub->add_option("--method", inv.method, "comb, rank or both")->check(CLI::IsMember({"comb", "rank", "both"}));
    }
    sub->callback([&inv, name = name] { inv.subcommand = name; });
  }

  std::vector<std::string> argv_storage = {"falkkit"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (std::string& s : argv_storage) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitInputError;
  }

  std::ifstream in(inv.path);
  if (!in) {
    err << "falkkit: cannot read '" << inv.path << "'\n";
    return kExitInputError;
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();

  std::optional<GainGraph> graph;
  try {
    graph.emplace(parse_graph(buffer.str()));
  } catch (const ParseError& e) {
    err << inv.path << ':' << e.line() << ": " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    err << inv.path << ": " << e.what() << '\n';
    return kExitInputError;
  }

  const GainGraph& g = *graph;
  if (inv.subcommand == "check") return run_check(inv, g, out);
  if (inv.subcommand == "triangles") return run_triangles(inv, g, out, err);
  if (inv.subcommand == "counts") return run_counts(inv, g, out, err);
  if (inv.subcommand == "phi3") return run_phi3(inv, g, out, err);
  if (inv.subcommand == "realize") return run_realize(inv, g, out, err);
  if (inv.subcommand == "rank-f3") return run_rank_f3(inv, g, out, err);
  return run_report(inv, g, out);
}

}  // namespace falkkit
