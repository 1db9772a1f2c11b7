#include "cli.hpp"

#include <CLI11.hpp>

#include <array>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "dgas/parallel.hpp"
#include "dgas/report_json.hpp"

namespace dgas::cli {

namespace {

struct RunConfig {
  std::string alpha;
  std::string graph;  // inline graph text
  std::string input;  // path, "-" for stdin
  std::string format = "graph6";
  std::string output = "json";
  std::size_t threads = 1;
  std::uint64_t seed = FactorOptions{}.seed;
  std::uint64_t effort = FactorOptions{}.effort;
  std::optional<std::size_t> order;
  bool connected = false;

  FactorOptions factor() const { return {effort, seed}; }
};

struct UsageError : Error {
  using Error::Error;
};

struct Io {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

std::string read_input(const RunConfig& cfg, std::istream& in) {
  if (cfg.input == "-") {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  std::ifstream f(cfg.input, std::ios::binary);
  if (!f) throw UsageError("cannot open input file '" + cfg.input + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

Graph parse_graph(const std::string& text, const std::string& format) {
  if (format == "edgelist") return parse_edge_list(text);
  return parse_graph6(text);
}

Graph single_graph(const RunConfig& cfg, std::istream& in) {
  if (!cfg.graph.empty() && !cfg.input.empty()) throw UsageError("give either --graph or --input, not both");
  if (!cfg.graph.empty()) return parse_graph(cfg.graph, cfg.format);
  if (!cfg.input.empty()) return parse_graph(read_input(cfg, in), cfg.format);
  throw UsageError("no graph given (use --graph or --input)");
}

struct Line {
  std::size_t number;
  std::string text;
};

std::vector<Line> graph6_lines(const std::string& text) {
  std::vector<Line> lines;
  std::istringstream ss(text);
  std::string line;
  for (std::size_t k = 1; std::getline(ss, line); ++k) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    lines.push_back({k, line});
  }
  return lines;
}

// Graphs for mates / verify-theorem: an exhaustive order or a graph6 list.
std::vector<Graph> graph_corpus(const RunConfig& cfg, std::istream& in) {
  if (cfg.order && !cfg.input.empty()) throw UsageError("give either --n or --input, not both");
  if (cfg.order) {
    if (*cfg.order == 0 || *cfg.order > kEnumerationOrderCap)
      throw UsageError("--n must be between 1 and " + std::to_string(kEnumerationOrderCap) +
                       "; pass larger orders as a graph6 file with --input");
    return enumerate_graphs(*cfg.order, cfg.connected);
  }
  if (cfg.input.empty()) throw UsageError("give --n or --input");
  std::vector<Graph> graphs;
  for (const auto& line : graph6_lines(read_input(cfg, in))) {
    try {
      Graph g = parse_graph6(line.text);
      if (!cfg.connected || g.is_connected()) graphs.push_back(std::move(g));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line.number) + ": " + e.what(), e.offset());
    }
  }
  return graphs;
}

int exit_code(Verdict v) {
  switch (v) {
    case Verdict::kCertifiedDgas: return 0;
    case Verdict::kFailsArithmetic:
    case Verdict::kSingularWalkMatrix: return 1;
    case Verdict::kExcludedCase:
    case Verdict::kSmallOrder:
    case Verdict::kUndecidedFactorization: return 2;
  }
  return kExitInternal;
}

constexpr std::array kAllVerdicts = {
    Verdict::kCertifiedDgas,     Verdict::kFailsArithmetic, Verdict::kExcludedCase,
    Verdict::kSingularWalkMatrix, Verdict::kSmallOrder,     Verdict::kUndecidedFactorization};

void print_report_table(const CriterionReport& r, std::ostream& out) {
  out << "graph6          " << r.graph6 << "\n"
      << "n               " << r.n << (r.connected ? " (connected)" : " (disconnected)") << "\n"
      << "alpha           " << r.alpha.to_string() << "  (c_alpha = " << r.alpha.c_alpha << ")\n"
      << "det W           " << r.det_walk.get_str() << "\n"
      << "det / 2^(n/2)   " << to_decimal(r.reduced) << "\n";
  if (r.factorization) {
    out << "factorization   ";
    bool first = true;
    for (const auto& pp : r.factorization->factors) {
      out << (first ? "" : " * ") << pp.prime.get_str();
      if (pp.exponent > 1) out << "^" << pp.exponent;
      first = false;
    }
    out << (first ? "1" : "") << "\n";
  }
  for (const auto& pr : r.prime_ranks)
    out << "rank mod " << pr.prime.get_str() << "      " << pr.rank << "\n";
  out << "verdict         " << to_string(r.verdict) << "\n"
      << "reason          " << r.reason << "\n";
}

int cmd_check(const RunConfig& cfg, const AlphaParam& alpha, Io io) {
  const Graph g = single_graph(cfg, io.in);
  const auto r = criterion_check(g, alpha, cfg.factor());
  if (cfg.output == "table")
    print_report_table(r, io.out);
  else
    io.out << to_json(r).dump() << "\n";
  return exit_code(r.verdict);
}

int cmd_batch(const RunConfig& cfg, const AlphaParam& alpha, Io io) {
  if (cfg.format != "graph6") throw UsageError("batch reads graph6, one graph per line");
  if (!cfg.graph.empty()) throw UsageError("batch reads --input, not --graph");
  if (cfg.input.empty()) throw UsageError("batch needs --input");
  const auto lines = graph6_lines(read_input(cfg, io.in));

  std::vector<Json> records(lines.size());
  std::vector<std::optional<Verdict>> verdicts(lines.size());
  parallel_for(lines.size(), cfg.threads, [&](std::size_t i) {
    Json rec;
    rec["line"] = lines[i].number;
    try {
      const auto r = criterion_check(parse_graph6(lines[i].text), alpha, cfg.factor());
      rec.update(to_json(r));
      verdicts[i] = r.verdict;
    } catch (const Error& e) {
      rec["schema"] = kJsonSchemaVersion;
      rec["error"] = e.what();
    }
    records[i] = std::move(rec);
  });

  std::map<Verdict, std::size_t> counts;
  std::size_t errors = 0;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (verdicts[i])
      ++counts[*verdicts[i]];
    else
      ++errors;
    if (cfg.output == "table") {
      io.out << lines[i].number << "\t"
             << (verdicts[i] ? std::string(to_string(*verdicts[i])) : "ERROR: " + records[i]["error"].get<std::string>())
             << "\t" << lines[i].text << "\n";
    } else {
      io.out << records[i].dump() << "\n";
    }
  }

  Json summary;
  summary["schema"] = kJsonSchemaVersion;
  summary["summary"] = true;
  summary["alpha"] = alpha.to_string();
  summary["total"] = lines.size();
  summary["errors"] = errors;
  Json by_verdict;
  for (auto v : kAllVerdicts) by_verdict[std::string(to_string(v))] = counts[v];
  summary["verdicts"] = by_verdict;
  if (cfg.output == "table") {
    io.out << "total " << lines.size() << ", errors " << errors;
    for (auto v : kAllVerdicts) io.out << ", " << to_string(v) << " " << counts[v];
    io.out << "\n";
  } else {
    io.out << summary.dump() << "\n";
  }
  return errors == 0 ? 0 : kExitDataErr;
}

int cmd_snf(const RunConfig& cfg, const AlphaParam& alpha, Io io) {
  const Graph g = single_graph(cfg, io.in);
  const auto snf = smith_normal_form(walk_matrix(g, alpha));
  const auto shape = check_snf_shape(snf.divisors, g.order(), cfg.factor());
  if (cfg.output == "table") {
    io.out << "divisors";
    for (const auto& d : snf.divisors) io.out << " " << d.get_str();
    io.out << "\n";
    if (shape.singular)
      io.out << "shape: singular\n";
    else if (shape.holds)
      io.out << "shape: holds, B = " << shape.b.get_str() << "\n";
    else
      io.out << "shape: fails (" << shape.detail << ")\n";
  } else {
    Json j = snf_json(snf, shape);
    j["graph6"] = encode_graph6(g);
    j["alpha"] = alpha.to_string();
    io.out << j.dump() << "\n";
  }
  return 0;
}

int cmd_spectrum(const RunConfig& cfg, const AlphaParam& alpha, Io io) {
  const Graph g = single_graph(cfg, io.in);
  const auto key = spectrum_key(g, alpha);
  if (cfg.output == "table") {
    io.out << "A_c(G)           " << key.graph.to_string() << "\n"
           << "A_c(complement)  " << key.complement.to_string() << "\n";
  } else {
    Json j;
    j["schema"] = kJsonSchemaVersion;
    j["graph6"] = encode_graph6(g);
    j["alpha"] = alpha.to_string();
    j["c_alpha"] = alpha.c_alpha;
    j["charpoly"] = to_json(key);
    j["charpoly_text"] = {{"graph", key.graph.to_string()}, {"complement", key.complement.to_string()}};
    io.out << j.dump() << "\n";
  }
  return 0;
}

int cmd_mates(const RunConfig& cfg, const AlphaParam& alpha, Io io) {
  const auto graphs = graph_corpus(cfg, io.in);
  const auto classes = find_mate_classes(graphs, alpha, cfg.threads);
  std::vector<MateClass> mates;
  for (const auto& c : classes)
    if (c.members.size() > 1) mates.push_back(c);
  if (cfg.output == "table") {
    io.out << graphs.size() << " graphs, " << classes.size() << " classes, " << mates.size()
           << " with generalized cospectral mates\n";
    for (const auto& c : mates) {
      for (const auto& g : c.members) io.out << encode_graph6(g) << " ";
      io.out << "\n";
    }
  } else {
    Json j;
    j["schema"] = kJsonSchemaVersion;
    j["alpha"] = alpha.to_string();
    j["graphs"] = graphs.size();
    j["classes"] = classes.size();
    j["non_singleton_classes"] = mates.size();
    j["mate_classes"] = to_json(mates);
    io.out << j.dump() << "\n";
  }
  return 0;
}

int cmd_verify(const RunConfig& cfg, const AlphaParam& alpha, Io io) {
  const auto graphs = graph_corpus(cfg, io.in);
  const auto rep = verify_theorem(graphs, alpha, {cfg.threads, cfg.factor()});
  if (cfg.output == "table") {
    std::size_t mate_classes = 0;
    for (const auto& c : rep.classes) mate_classes += c.members.size() > 1;
    io.out << "graphs                 " << graphs.size() << "\n"
           << "classes                " << rep.classes.size() << "\n"
           << "certified              " << rep.certified.size() << "\n"
           << "classes with mates     " << mate_classes << "\n"
           << "certificates           " << rep.certificates.size() << "\n"
           << "singular pairs skipped " << rep.singular_pairs_skipped << "\n"
           << "plain-only cospectral  " << rep.plain_cospectral_only.size() << "\n"
           << "counterexamples        " << rep.counterexample_classes.size() << "\n"
           << "certificate failures   " << rep.certificate_failures() << "\n";
  } else {
    io.out << to_json(rep).dump() << "\n";
  }
  return rep.ok() ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Arithmetic certification of graphs determined by their generalized A_alpha-spectrum"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--alpha", cfg.alpha, "alpha as p/q with 0 <= alpha < 1")->envname("DGAS_ALPHA")->required();
    sub->add_option("--output", cfg.output, "json or table")
        ->envname("DGAS_OUTPUT")
        ->check(CLI::IsMember({"json", "table"}));
    sub->add_option("--threads", cfg.threads, "worker threads")
        ->envname("DGAS_THREADS")
        ->check(CLI::PositiveNumber);
    sub->add_option("--seed", cfg.seed, "seed for the randomized factorization")->envname("DGAS_SEED");
    sub->add_option("--effort", cfg.effort, "Pollard-rho iteration budget")->envname("DGAS_EFFORT");
    sub->add_option("--input", cfg.input, "input file, - for stdin")->envname("DGAS_INPUT");
  };
  auto add_single = [&](CLI::App* sub) {
    add_common(sub);
    sub->add_option("--graph", cfg.graph, "inline graph text");
    sub->add_option("--format", cfg.format, "graph6 or edgelist")
        ->envname("DGAS_FORMAT")
        ->check(CLI::IsMember({"graph6", "edgelist"}));
  };
  auto add_corpus = [&](CLI::App* sub) {
    add_common(sub);
    sub->add_option("--n", cfg.order, "enumerate every graph of this order (at most 8)");
    sub->add_flag("--connected", cfg.connected, "restrict to connected graphs");
  };

  auto* check = app.add_subcommand("check", "decide one graph with the arithmetic criterion");
  auto* batch = app.add_subcommand("batch", "check a graph6 file, one JSON record per line");
  auto* snf = app.add_subcommand("snf", "Smith normal form of the walk matrix");
  auto* spectrum = app.add_subcommand("spectrum", "characteristic polynomials of G and its complement");
  auto* mates = app.add_subcommand("mates", "generalized cospectral classes");
  auto* verify = app.add_subcommand("verify-theorem", "check certified graphs against an exhaustive mate search");
  for (auto* s : {check, snf, spectrum}) add_single(s);
  add_common(batch);
  batch->add_option("--format", cfg.format, "graph6 only")->envname("DGAS_FORMAT");
  add_corpus(mates);
  add_corpus(verify);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  Io io{in, out, err};
  try {
    const AlphaParam alpha = parse_alpha(cfg.alpha);
    if (*check) return cmd_check(cfg, alpha, io);
    if (*batch) return cmd_batch(cfg, alpha, io);
    if (*snf) return cmd_snf(cfg, alpha, io);
    if (*spectrum) return cmd_spectrum(cfg, alpha, io);
    if (*mates) return cmd_mates(cfg, alpha, io);
    if (*verify) return cmd_verify(cfg, alpha, io);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInternal;
}

}  // namespace dgas::cli
