#include "antimagic/oracle.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <thread>

#include "antimagic/error.hpp"

namespace antimagic {

namespace {

struct Endpoints {
  std::vector<std::pair<std::size_t, std::size_t>> ends;
  std::size_t vertices = 0;
};

// Endpoint ids looked up directly from the edge list.
Endpoints endpoints_of(const Graph& g) {
  Endpoints out;
  std::vector<Vertex> vs;
  for (const auto& e : g.edges()) {
    vs.push_back(e.a);
    vs.push_back(e.b);
  }
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  auto id = [&](const Vertex& v) {
    return static_cast<std::size_t>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin());
  };
  for (const auto& e : g.edges()) out.ends.emplace_back(id(e.a), id(e.b));
  out.vertices = vs.size();
  return out;
}

bool distinct_sums(const Endpoints& ep, std::span<const Label> labels, std::vector<Label>& scratch) {
  scratch.assign(ep.vertices, 0);
  for (std::size_t e = 0; e < ep.ends.size(); ++e) {
    scratch[ep.ends[e].first] += labels[e];
    scratch[ep.ends[e].second] += labels[e];
  }
  std::sort(scratch.begin(), scratch.end());
  return std::adjacent_find(scratch.begin(), scratch.end()) == scratch.end();
}

std::uint64_t factorial(std::size_t k) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= k; ++i) f *= i;
  return f;
}

struct Branch {
  std::uint64_t checked = 0;
  std::uint64_t antimagic = 0;
  std::optional<std::vector<Label>> first;
  bool contains = false;
};

class Enumerator {
 public:
  Enumerator(const Graph& g, std::span<const Label> reference, const LabelingVisitor& visit)
      : ep_(endpoints_of(g)), reference_(reference), visit_(visit), edges_(g.edge_count()) {
    // Vertices become complete once their highest-numbered edge is labeled.
    completes_at_.resize(edges_);
    std::vector<std::size_t> last(ep_.vertices, 0);
    for (std::size_t e = 0; e < edges_; ++e) {
      last[ep_.ends[e].first] = e;
      last[ep_.ends[e].second] = e;
    }
    for (std::size_t v = 0; v < ep_.vertices; ++v) completes_at_[last[v]].push_back(v);
  }

  void record(Branch& b, std::span<const Label> labels, bool antimagic) const {
    ++b.checked;
    if (visit_) visit_(labels, antimagic);
    if (!antimagic) return;
    ++b.antimagic;
    if (!b.first) b.first.emplace(labels.begin(), labels.end());
    if (!reference_.empty() && std::equal(labels.begin(), labels.end(), reference_.begin(), reference_.end())) {
      b.contains = true;
    }
  }

  Branch plain(Label head) const {
    Branch b;
    std::vector<Label> labels;
    labels.push_back(head);
    for (Label l = 1; l <= static_cast<Label>(edges_); ++l) {
      if (l != head) labels.push_back(l);
    }
    std::vector<Label> scratch;
    do {
      record(b, labels, distinct_sums(ep_, labels, scratch));
    } while (std::next_permutation(labels.begin() + 1, labels.end()));
    return b;
  }

  Branch pruned(Label head) const {
    Branch b;
    std::vector<Label> labels(edges_, 0);
    std::vector<Label> sums(ep_.vertices, 0);
    std::vector<Label> done;
    std::vector<bool> used(edges_ + 1, false);
    descend(b, 0, head, labels, sums, done, used);
    return b;
  }

 private:
  void descend(Branch& b, std::size_t e, Label value, std::vector<Label>& labels, std::vector<Label>& sums,
               std::vector<Label>& done, std::vector<bool>& used) const {
    labels[e] = value;
    used[static_cast<std::size_t>(value)] = true;
    sums[ep_.ends[e].first] += value;
    sums[ep_.ends[e].second] += value;
    const std::size_t before = done.size();
    bool clash = false;
    for (std::size_t v : completes_at_[e]) {
      if (std::find(done.begin(), done.end(), sums[v]) != done.end()) clash = true;
      done.push_back(sums[v]);
    }
    if (clash) {
      b.checked += factorial(edges_ - e - 1);
    } else if (e + 1 == edges_) {
      record(b, labels, true);
    } else {
      for (Label next = 1; next <= static_cast<Label>(edges_); ++next) {
        if (!used[static_cast<std::size_t>(next)]) descend(b, e + 1, next, labels, sums, done, used);
      }
    }
    done.resize(before);
    sums[ep_.ends[e].first] -= value;
    sums[ep_.ends[e].second] -= value;
    used[static_cast<std::size_t>(value)] = false;
    labels[e] = 0;
  }

  Endpoints ep_;
  std::span<const Label> reference_;
  const LabelingVisitor& visit_;
  std::size_t edges_;
  std::vector<std::vector<std::size_t>> completes_at_;
};

}  // namespace

bool oracle_is_antimagic(const Graph& g, std::span<const Label> labels) {
  std::vector<Label> scratch;
  return distinct_sums(endpoints_of(g), labels, scratch);
}

SearchResult exhaustive_search(const Graph& g, const std::optional<Labeling>& reference,
                               const ExhaustiveOptions& options, const LabelingVisitor& visit) {
  if (g.edge_count() > kMaxExhaustiveEdges) {
    throw SizeLimitExceeded("exhaustive search is limited to " + std::to_string(kMaxExhaustiveEdges) +
                            " edges, graph has " + std::to_string(g.edge_count()));
  }
  if (options.prune && visit) throw InvalidParameter("a labeling visitor needs pruning disabled");
  if (reference && reference->labels().size() != g.edge_count()) {
    throw InvalidParameter("reference labeling does not match the graph");
  }

  SearchResult result;
  if (g.edge_count() == 0) return result;

  const std::span<const Label> ref = reference ? reference->labels() : std::span<const Label>{};
  const Enumerator enumerator(g, ref, visit);
  const auto heads = static_cast<Label>(g.edge_count());
  std::vector<Branch> branches(g.edge_count());
  auto run = [&](Label head) {
    branches[static_cast<std::size_t>(head - 1)] = options.prune ? enumerator.pruned(head) : enumerator.plain(head);
  };

  const unsigned workers = std::max(1u, std::min<unsigned>(options.workers, static_cast<unsigned>(heads)));
  if (workers == 1) {
    for (Label head = 1; head <= heads; ++head) run(head);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (Label head = 1 + w; head <= heads; head += workers) run(head);
      });
    }
  }

  // Branches are ordered by the label of edge 0, so the first antimagic
  // labeling of the earliest productive branch is the lexicographic first.
  auto graph = std::make_shared<const Graph>(g);
  bool contains = false;
  for (auto& b : branches) {
    result.total_labelings_checked += b.checked;
    result.antimagic_count += b.antimagic;
    contains = contains || b.contains;
    if (!result.first_antimagic && b.first) result.first_antimagic.emplace(graph, std::move(*b.first));
  }
  if (reference) result.contains_constructed = contains;
  return result;
}

SearchResult random_search(const Graph& g, std::uint64_t trials, std::uint64_t seed,
                           const std::optional<Labeling>& reference) {
  if (reference && reference->labels().size() != g.edge_count()) {
    throw InvalidParameter("reference labeling does not match the graph");
  }
  std::mt19937_64 rng(seed);
  auto uniform_below = [&rng](std::uint64_t bound) {
    const std::uint64_t threshold = (std::numeric_limits<std::uint64_t>::max() - bound + 1) % bound;
    for (;;) {
      const std::uint64_t r = rng();
      if (r >= threshold) return r % bound;
    }
  };

  const Endpoints ep = endpoints_of(g);
  auto graph = std::make_shared<const Graph>(g);
  SearchResult result;
  bool contains = false;
  std::vector<Label> labels(g.edge_count());
  std::vector<Label> scratch;
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    for (std::size_t e = 0; e < labels.size(); ++e) labels[e] = static_cast<Label>(e) + 1;
    for (std::size_t i = labels.size(); i-- > 1;) {
      std::swap(labels[i], labels[static_cast<std::size_t>(uniform_below(i + 1))]);
    }
    ++result.total_labelings_checked;
    if (!distinct_sums(ep, labels, scratch)) continue;
    ++result.antimagic_count;
    if (!result.first_antimagic) result.first_antimagic.emplace(graph, labels);
    if (reference && std::ranges::equal(labels, reference->labels())) contains = true;
  }
  if (reference) result.contains_constructed = contains;
  return result;
}

}  // namespace antimagic
