// Acceptance checks: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Thresholds are fixed below.

#include <array>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>

#include <sys/wait.h>

#include "antimagic/labelers.hpp"
#include "antimagic/oracle.hpp"
#include "antimagic/stream.hpp"
#include "antimagic/verifier.hpp"
#include "reference_model.hpp"

using namespace antimagic;

namespace {

constexpr double kCoverageSeconds = 10.0;
constexpr double kLargeStreamSeconds = 30.0;
constexpr Index kLargeSide = 2000;
constexpr Index kAgreementLimit = 50;
constexpr int kDeterminismConfigs = 20;
constexpr std::uint64_t kDeterminismSeed = 20240601;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool passed = true;
  std::string detail;
};

// Sums in the construction's orientation, recomputed from the edge list.
ref::SumMap sums_of(const Labeling& lab) { return ref::sums(lab.graph().edges(), lab.labels()); }

ref::SumMap factor_sums(const Labeling& lab, Factor f) {
  ref::SumMap out;
  const auto edges = lab.graph().edges();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (factor_of(edges[e]) != f) continue;
    out[edges[e].a] += lab[e];
    out[edges[e].b] += lab[e];
  }
  return out;
}

Outcome construction_coverage() {
  const auto start = Clock::now();
  int lattices = 0, prisms = 0, failures = 0;
  for (Index m = 1; m <= 20; ++m) {
    for (Index n = 1; n <= 20; ++n) {
      ++lattices;
      failures += !check_antimagic(label(make_spec(Family::lattice, m, n))).antimagic;
      if (m >= 3) {
        ++prisms;
        failures += !check_antimagic(label(make_spec(Family::prism, m, n))).antimagic;
      }
    }
  }
  const double secs = seconds_since(start);
  std::ostringstream d;
  d << lattices << " lattices, " << prisms << " prisms, " << failures << " failures, " << secs << " s (limit "
    << kCoverageSeconds << " s)";
  // Full ranges: 20 x 20 lattices, 18 x 20 prisms.
  return {failures == 0 && lattices == 400 && prisms == 360 && secs < kCoverageSeconds, d.str()};
}

Outcome formula_reproduction() {
  int mismatches = 0;
  const auto path = vertex_sums(label(make_spec(Family::path, 5))).total;
  mismatches += path != std::vector<Label>{1, 2, 4, 6, 8, 9};
  const auto cycle = vertex_sums(label(make_spec(Family::cycle, 5))).total;
  mismatches += cycle != std::vector<Label>{3, 4, 6, 8, 9};
  for (Index n = 2; n <= 10; ++n) {
    const auto f2 = factor_sums(label(make_spec(Family::lattice, 1, n)), Factor::second);
    for (Index row = 1; row <= 2; ++row) {
      for (Index i = 1; i <= n + 1; ++i) mismatches += f2.at({row, i}) != ref::thin_row_sum(n, row, i);
    }
  }
  for (Index m = 3; m <= 10; ++m) {
    const auto f1 = factor_sums(label(make_spec(Family::prism, m, 1)), Factor::first);
    for (Index layer = 1; layer <= 2; ++layer) {
      for (Index i = 1; i <= m; ++i) mismatches += f1.at({i, layer}) != ref::two_layer_cycle_sum(m, layer, i);
    }
  }
  return {mismatches == 0, std::to_string(mismatches) + " mismatching values (exact equality)"};
}

Outcome even_m_anchors() {
  int checked = 0, mismatches = 0;
  for (Index m = 2; m <= 20; m += 2) {
    for (Index n = m; n <= 20; ++n) {
      const auto s = sums_of(label(make_spec(Family::lattice, m, n)));
      mismatches += s.at({2, 1}) != 6 * n + 5;
      mismatches += s.at({2, n + 1}) != 6 * n + 3;
      ++checked;
    }
  }
  return {mismatches == 0, std::to_string(checked) + " specs, " + std::to_string(mismatches) + " mismatches"};
}

Outcome parity_partition() {
  int checked = 0, failures = 0;
  for (Index m = 2; m <= 20; ++m) {
    for (Index n = m; n <= 20; ++n) {
      const FamilySpec spec = make_spec(Family::lattice, m, n);
      const Labeling lab = label(spec);
      const auto s = sums_of(lab);
      const Index t = (n - m) / 2;
      bool ok = true;
      std::set<Vertex> chain_set;
      Label previous = -1;
      for (Index i = 1; i <= m + 1; ++i) {
        for (Index j = 2; j <= (i <= m ? n : n - 2 * t); ++j) {
          const Label x = s.at({i, j});
          ok = ok && x % 2 == 0 && x > previous;
          previous = x;
          chain_set.insert({i, j});
        }
      }
      std::set<Label> odd;
      for (const auto& [v, x] : s) {
        if (chain_set.count(v)) continue;
        ok = ok && x % 2 == 1 && odd.insert(x).second;
      }
      ok = ok && check_construction_properties(spec, lab).all_passed();
      failures += !ok;
      ++checked;
    }
  }
  return {failures == 0, std::to_string(checked) + " specs, " + std::to_string(failures) + " failures"};
}

Outcome prism_ordering() {
  int checked = 0, failures = 0;
  for (Index m = 3; m <= 20; ++m) {
    for (Index n = 2; n <= 20; ++n) {
      const FamilySpec spec = make_spec(Family::prism, m, n);
      const Labeling lab = label(spec);
      const auto s = sums_of(lab);
      bool ok = true;
      Label previous = 0;
      for (Index j = 1; j <= n + 1; ++j) {
        std::vector<Label> column;
        for (Index i = 1; i <= m; ++i) column.push_back(s.at({i, j}));
        if (j == 2 && n % 2 == 0) {
          for (std::size_t i = 0; i + 1 < column.size(); ++i) ok = ok && column[i] > column[i + 1];
        }
        std::sort(column.begin(), column.end());
        for (Label x : column) {
          ok = ok && x > previous;
          previous = x;
        }
      }
      ok = ok && check_construction_properties(spec, lab).all_passed();
      failures += !ok;
      ++checked;
    }
  }
  return {failures == 0, std::to_string(checked) + " specs, " + std::to_string(failures) + " failures"};
}

Outcome oracle_equivalence() {
  struct Instance {
    std::string name;
    std::shared_ptr<const Graph> graph;
    std::optional<Labeling> constructed;
  };
  std::vector<Instance> instances;
  instances.push_back({"K2", std::make_shared<const Graph>(complete_graph_k2()), std::nullopt});
  auto add = [&](const FamilySpec& spec) {
    Labeling lab = label(spec);
    instances.push_back({to_string(spec), lab.graph_ptr(), lab});
  };
  for (Index m = 2; m <= 10; ++m) add(make_spec(Family::path, m));
  for (Index m = 3; m <= 10; ++m) add(make_spec(Family::cycle, m));
  for (auto [m, n] : std::vector<std::pair<Index, Index>>{{1, 1}, {1, 2}, {2, 1}, {1, 3}, {3, 1}}) {
    add(make_spec(Family::lattice, m, n));
  }
  add(make_spec(Family::prism, 3, 1));

  const unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  bool ok = true;
  std::uint64_t enumerated = 0, disagreements = 0;
  std::string failed;
  for (const auto& inst : instances) {
    if (inst.graph->edge_count() > kMaxExhaustiveEdges) {
      ok = false;
      failed += " " + inst.name + "(too large)";
      continue;
    }
    std::atomic<std::uint64_t> seen{0}, differ{0};
    const auto result = exhaustive_search(*inst.graph, inst.constructed, {false, workers},
                                          [&](std::span<const Label> labels, bool antimagic) {
                                            const Labeling lab(inst.graph, {labels.begin(), labels.end()});
                                            if (check_antimagic(lab).antimagic != antimagic) ++differ;
                                            ++seen;
                                          });
    enumerated += seen.load();
    disagreements += differ.load();
    bool inst_ok = differ.load() == 0 && seen.load() == result.total_labelings_checked;
    if (inst.constructed) {
      inst_ok = inst_ok && result.contains_constructed.value_or(false);
    } else {
      inst_ok = inst_ok && result.antimagic_count == 0;
    }
    if (!inst_ok) failed += " " + inst.name;
    ok = ok && inst_ok;
  }
  std::ostringstream d;
  d << instances.size() << " instances, " << enumerated << " labelings, " << disagreements << " disagreements";
  if (!failed.empty()) d << ", failed:" << failed;
  return {ok, d.str()};
}

Outcome stream_agreement() {
  int specs = 0, label_mismatch = 0, verdict_mismatch = 0;
  for (Index m = 1; m <= kAgreementLimit; ++m) {
    for (Index n = 1; n <= kAgreementLimit; ++n) {
      for (Family f : {Family::lattice, Family::prism}) {
        if (f == Family::prism && m < 3) continue;
        const FamilySpec spec = make_spec(f, m, n);
        const Labeling lab = label(spec);
        const ClosedFormLabeler cf(spec);
        const auto edges = lab.graph().edges();
        for (std::size_t e = 0; e < edges.size(); ++e) {
          if (cf.label(key_of(spec, edges[e])) != lab[e]) {
            ++label_mismatch;
            break;
          }
        }
        verdict_mismatch += !(stream_verify(spec).verdict == check_antimagic(lab));
        ++specs;
      }
    }
  }

  const FamilySpec large = make_spec(Family::lattice, kLargeSide, kLargeSide);
  const auto start = Clock::now();
  const StreamResult big = stream_verify(large);
  const double secs = seconds_since(start);
  // Live state: two window bitsets of kStreamWindowBitsPerUnit bits per unit
  // of the shorter side (+1), plus slack for bookkeeping.
  const std::uint64_t bound = 2 * (kStreamWindowBitsPerUnit / 8) * static_cast<std::uint64_t>(kLargeSide + 2);
  const StreamResult longer = stream_verify(make_spec(Family::lattice, kLargeSide, 2 * kLargeSide));

  const bool ok = label_mismatch == 0 && verdict_mismatch == 0 && big.verdict.antimagic && secs < kLargeStreamSeconds &&
                  big.stats.peak_state_bytes <= bound &&
                  longer.stats.peak_state_bytes == big.stats.peak_state_bytes && longer.verdict.antimagic;
  std::ostringstream d;
  d << specs << " specs, " << label_mismatch << " label / " << verdict_mismatch << " verdict mismatches; "
    << kLargeSide << "x" << kLargeSide << ": " << big.stats.edges_evaluated << " edges in " << secs << " s (limit "
    << kLargeStreamSeconds << " s), peak state " << big.stats.peak_state_bytes << " B (bound " << bound
    << " B, same at " << kLargeSide << "x" << 2 * kLargeSide << ": "
    << (longer.stats.peak_state_bytes == big.stats.peak_state_bytes ? "yes" : "no") << ")";
  return {ok, d.str()};
}

std::optional<std::string> run_binary(const std::string& args) {
  const std::string cmd = std::string("\"") + ANTIMAGIC_EXE + "\" " + args + " 2>/dev/null";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) return std::nullopt;
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  const int status = ::pclose(pipe);
  if (status == -1 || !WIFEXITED(status) || WEXITSTATUS(status) > 1) return std::nullopt;
  return out;
}

Outcome determinism() {
  std::mt19937_64 rng(kDeterminismSeed);
  auto pick = [&](Index lo, Index hi) { return std::uniform_int_distribution<Index>(lo, hi)(rng); };
  int identical = 0;
  std::string failed;
  for (int c = 0; c < kDeterminismConfigs; ++c) {
    std::ostringstream args;
    switch (pick(0, 4)) {
      case 0: {
        const char* formats[] = {"json", "tsv", "dot"};
        args << "generate lattice -m " << pick(1, 12) << " -n " << pick(1, 12) << " --format " << formats[pick(0, 2)];
        break;
      }
      case 1:
        args << "generate prism -m " << pick(3, 12) << " -n " << pick(1, 12) << " --stream --format tsv"
             << (pick(0, 1) ? " --by-label" : "");
        break;
      case 2:
        args << "properties " << (pick(0, 1) ? "lattice" : "prism") << " -m " << pick(3, 15) << " -n " << pick(1, 15);
        break;
      case 3:
        args << "search prism -m " << pick(3, 6) << " -n " << pick(1, 4) << " --trials " << pick(0, 2000) << " --seed "
             << pick(0, 1'000'000);
        break;
      default:
        args << "search " << (pick(0, 1) ? "path" : "cycle") << " -m " << pick(3, 7) << " --exhaustive --workers "
             << pick(1, 4);
        break;
    }
    const auto first = run_binary(args.str());
    const auto second = run_binary(args.str());
    if (first && second && !first->empty() && *first == *second) {
      ++identical;
    } else {
      failed += " [" + args.str() + "]";
    }
  }
  std::string d = std::to_string(identical) + "/" + std::to_string(kDeterminismConfigs) + " configs byte-identical";
  if (!failed.empty()) d += ", differing:" + failed;
  return {identical == kDeterminismConfigs, d};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"construction_coverage", construction_coverage},   {"formula_reproduction", formula_reproduction},
      {"even_m_anchors", even_m_anchors},       {"parity_partition", parity_partition},
      {"prism_ordering", prism_ordering},       {"oracle_equivalence", oracle_equivalence},
      {"stream_agreement", stream_agreement},   {"determinism", determinism},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.passed;
    std::cout << (o.passed ? "PASS " : "FAIL ") << name << ": " << o.detail << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
