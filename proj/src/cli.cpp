#include "antimagic/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "antimagic/error.hpp"
#include "antimagic/labelers.hpp"
#include "antimagic/oracle.hpp"
#include "antimagic/stream.hpp"
#include "antimagic/verifier.hpp"
#include "json.hpp"

namespace antimagic::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

FamilySpec spec_of(const RunConfig& cfg) {
  if (!cfg.family) throw InvalidParameter("a family (path, cycle, lattice, prism) is required");
  return make_spec(*cfg.family, cfg.m, cfg.n);
}

std::string extension(OutputFormat f) {
  switch (f) {
    case OutputFormat::json: return "json";
    case OutputFormat::tsv: return "tsv";
    case OutputFormat::dot: return "dot";
    case OutputFormat::text: return "txt";
  }
  return "out";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidParameter("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Runs `write` against --output, the default output directory, or `out`.
template <class Write>
void emit(const RunConfig& cfg, const std::string& default_name, std::ostream& out, std::ostream& err, Write&& write) {
  std::string path = cfg.output;
  if (path.empty() && cfg.subcommand == "generate") {
    if (const char* dir = std::getenv(kOutputDirEnv); dir && *dir) {
      path = (std::filesystem::path(dir) / default_name).string();
    }
  }
  if (path.empty() || path == "-") {
    write(out);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InvalidParameter("cannot write " + path);
  write(file);
  err << "wrote " << path << '\n';
}

void require_report_format(const RunConfig& cfg) {
  if (cfg.format != OutputFormat::json && cfg.format != OutputFormat::text) {
    throw InvalidParameter("reports are written as json or text");
  }
}

int cmd_generate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const FamilySpec spec = spec_of(cfg);
  std::ostringstream name;
  name << to_string(spec.family) << "-m" << spec.m << "-n" << spec.n << '.' << extension(cfg.format);
  if (cfg.streaming) {
    if (cfg.format != OutputFormat::tsv) throw InvalidParameter("--stream writes tsv only");
    emit(cfg, name.str(), out, err, [&](std::ostream& os) { stream_edges(spec, os, cfg.by_label); });
    return kOk;
  }
  if (cfg.by_label) throw InvalidParameter("--by-label needs --stream");
  const Labeling lab = label(spec);
  emit(cfg, name.str(), out, err, [&](std::ostream& os) {
    switch (cfg.format) {
      case OutputFormat::json: write_json(lab, os); break;
      case OutputFormat::tsv: write_tsv(lab, os); break;
      case OutputFormat::dot: write_dot(lab, os); break;
      case OutputFormat::text: throw InvalidParameter("generate writes json, tsv or dot");
    }
  });
  return kOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  require_report_format(cfg);
  const Labeling lab = read_labeling(read_file(cfg.input));
  const Verdict verdict = check_antimagic(lab);
  emit(cfg, "verdict", out, err, [&](std::ostream& os) {
    if (cfg.format == OutputFormat::text) {
      os << to_text(verdict);
    } else {
      os << to_json(verdict).dump(2) << '\n';
    }
  });
  return verdict.antimagic ? kOk : kNotAntimagic;
}

int cmd_properties(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  require_report_format(cfg);
  const FamilySpec spec = spec_of(cfg);
  const PropertyReport report = check_construction_properties(spec, label(spec));
  emit(cfg, "properties", out, err, [&](std::ostream& os) {
    if (cfg.format == OutputFormat::text) {
      os << to_text(report);
    } else {
      os << to_json(report).dump(2) << '\n';
    }
  });
  return report.all_passed() ? kOk : kNotAntimagic;
}

ordered_json labeling_edges(const Labeling& lab) {
  ordered_json edges = ordered_json::array();
  for (EdgeId e = 0; e < lab.graph().edge_count(); ++e) {
    const Edge& edge = lab.graph().edge(e);
    edges.push_back({{"u", {edge.a.row, edge.a.col}}, {"v", {edge.b.row, edge.b.col}}, {"label", lab[e]}});
  }
  return edges;
}

int cmd_search(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.format != OutputFormat::json) throw InvalidParameter("search results are written as json");
  std::optional<Labeling> reference;
  ordered_json doc;
  if (!cfg.input.empty()) {
    reference = read_labeling(read_file(cfg.input));
    doc["input"] = cfg.input;
  } else {
    const FamilySpec spec = spec_of(cfg);
    if (cfg.exhaustive && edge_count(spec) > static_cast<Index>(kMaxExhaustiveEdges)) {
      throw SizeLimitExceeded(to_string(spec) + " has " + std::to_string(edge_count(spec)) +
                              " edges; exhaustive search is limited to " + std::to_string(kMaxExhaustiveEdges));
    }
    reference = label(spec);
    doc["family"] = std::string(to_string(spec.family));
    doc["m"] = spec.m;
    doc["n"] = spec.n;
  }
  const Graph& g = reference->graph();
  SearchResult result;
  if (cfg.exhaustive) {
    result = exhaustive_search(g, reference, ExhaustiveOptions{cfg.prune, cfg.workers});
    doc["mode"] = "exhaustive";
  } else {
    result = random_search(g, cfg.trials, cfg.seed, reference);
    doc["mode"] = "random";
    doc["seed"] = cfg.seed;
    doc["trials"] = cfg.trials;
  }
  doc["edges"] = g.edge_count();
  doc["total_labelings_checked"] = result.total_labelings_checked;
  doc["antimagic_count"] = result.antimagic_count;
  doc["contains_constructed"] = result.contains_constructed ? ordered_json(*result.contains_constructed) : nullptr;
  doc["first_antimagic"] = result.first_antimagic ? labeling_edges(*result.first_antimagic) : ordered_json(nullptr);
  emit(cfg, "search", out, err, [&](std::ostream& os) { os << doc.dump(2) << '\n'; });
  return kOk;
}

int cmd_bench(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.format != OutputFormat::json) throw InvalidParameter("bench results are written as json");
  const FamilySpec spec = spec_of(cfg);
  ordered_json doc;
  doc["mode"] = cfg.streaming ? "stream" : "materialized";
  doc["family"] = std::string(to_string(spec.family));
  doc["m"] = spec.m;
  doc["n"] = spec.n;
  doc["vertices"] = vertex_count(spec);
  doc["edges"] = edge_count(spec);

  const auto start = std::chrono::steady_clock::now();
  Verdict verdict;
  if (cfg.streaming) {
    const StreamResult r = stream_verify(spec);
    verdict = r.verdict;
    doc["label_passes"] = r.stats.label_passes;
    doc["sum_passes"] = r.stats.sum_passes;
    doc["edges_evaluated"] = r.stats.edges_evaluated;
    doc["vertices_evaluated"] = r.stats.vertices_evaluated;
    doc["peak_state_bytes"] = r.stats.peak_state_bytes;
  } else {
    verdict = check_antimagic(label(spec));
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  doc["seconds"] = seconds;
  doc["edges_per_second"] = seconds > 0 ? static_cast<double>(edge_count(spec)) / seconds : 0.0;
  doc["antimagic"] = verdict.antimagic;
  emit(cfg, "bench", out, err, [&](std::ostream& os) { os << doc.dump(2) << '\n'; });
  return verdict.antimagic ? kOk : kNotAntimagic;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Antimagic labelings of paths, cycles, lattice grids and prisms", "antimagic"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string family_name;
  std::string format_name = "json";

  auto add_family = [&](CLI::App* sub) {
    sub->add_option("family", family_name, "path | cycle | lattice | prism")->required();
    sub->add_option("-m", cfg.m, "first size parameter")->required();
    sub->add_option("-n", cfg.n, "second size parameter (lattice, prism)");
  };
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("-f,--format", format_name, "json | tsv | dot | text");
    sub->add_option("-o,--output", cfg.output, "output file (default: standard output)");
  };

  auto* generate = app.add_subcommand("generate", "write the constructed labeling");
  add_family(generate);
  add_common(generate);
  generate->add_flag("--stream", cfg.streaming, "closed-form edge stream (tsv, lattice/prism)");
  generate->add_flag("--by-label", cfg.by_label, "with --stream, emit edges in ascending label order");

  auto* verify = app.add_subcommand("verify", "check a labeling file for antimagicness");
  verify->add_option("input", cfg.input, "JSON or TSV labeling")->required();
  add_common(verify);

  auto* properties = app.add_subcommand("properties", "check the ordering/parity properties of a construction");
  add_family(properties);
  add_common(properties);

  auto* search = app.add_subcommand("search", "brute-force search over labelings");
  search->add_option("family", family_name, "path | cycle | lattice | prism");
  search->add_option("-m", cfg.m, "first size parameter");
  search->add_option("-n", cfg.n, "second size parameter");
  search->add_option("-i,--input", cfg.input, "search the graph of a labeling file instead");
  search->add_flag("--exhaustive", cfg.exhaustive, "enumerate all |E|! labelings (|E| <= 10)");
  search->add_flag("--prune", cfg.prune, "prune subtrees with clashing completed vertices");
  search->add_option("--workers", cfg.workers, "worker threads for exhaustive search");
  search->add_option("--trials", cfg.trials, "random labelings to sample");
  search->add_option("--seed", cfg.seed, "random seed");
  add_common(search);

  auto* bench = app.add_subcommand("bench", "time verification of the construction");
  add_family(bench);
  add_common(bench);
  bench->add_flag("--stream", cfg.streaming, "use the bounded-memory streaming verifier");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }

  try {
    cfg.subcommand = app.get_subcommands().front()->get_name();
    if (!family_name.empty()) {
      cfg.family = parse_family(family_name);
      if (!cfg.family) throw InvalidParameter("unknown family '" + family_name + "'");
    }
    const auto format = parse_format(format_name);
    if (!format) throw InvalidParameter("unknown format '" + format_name + "'");
    cfg.format = *format;

    if (cfg.subcommand == "generate") return cmd_generate(cfg, out, err);
    if (cfg.subcommand == "verify") return cmd_verify(cfg, out, err);
    if (cfg.subcommand == "properties") return cmd_properties(cfg, out, err);
    if (cfg.subcommand == "search") return cmd_search(cfg, out, err);
    return cmd_bench(cfg, out, err);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParseFailure;
  } catch (const SizeLimitExceeded& e) {
    err << "refused: " << e.what() << '\n';
    return kSizeRefused;
  } catch (const InvalidParameter& e) {
    err << "invalid input: " << e.what() << '\n';
    return kInvalidInput;
  }
}

}  // namespace antimagic::cli
