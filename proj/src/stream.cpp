#include "antimagic/stream.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <ostream>
#include <set>
#include <string>

#include "antimagic/error.hpp"

namespace antimagic {

namespace {

Factor flip(Factor f) { return f == Factor::first ? Factor::second : Factor::first; }

bool is_u(const AxisLayout& skip, Index k) { return skip.edge_traversal_position(k) % 2 == 1; }

void require_streamable(const FamilySpec& spec) {
  validate(spec);
  if (spec.family != Family::lattice && spec.family != Family::prism) {
    throw InvalidParameter("closed-form labels cover lattices and prisms only, got " + to_string(spec));
  }
}

// c_i given the head length s - t of the merge sequence.
Label merge_at(Index head, Label phase_one_top, Index i) {
  if (i <= head) return 2 * i - 1;
  const Index r = i - head;
  if (r % 2 == 1) return phase_one_top + r + 1;  // b_{(r+1)/2}
  return 2 * (head + r / 2) - 1;                 // a_{s-t+r/2}
}

}  // namespace

Label merge_element(Index m, Index n, Index i) {
  if (m < 2 || n < m) throw InvalidParameter("merge sequence needs n >= m >= 2");
  if (i < 1 || i > m * n + n) throw InvalidParameter("merge index out of range");
  const Label total = 2 * m * n + m + n;
  const Index s = (total + 1) / 2;
  const Index t = (n - m) / 2;
  return merge_at(s - t, 2 * m * n + 2 * m, i);
}

ClosedFormLabeler::ClosedFormLabeler(const FamilySpec& spec) : spec_(spec) {
  require_streamable(spec);
  shape_ = grid_shape(spec);
  if (spec.family == Family::prism) {
    m_ = spec.m;
    n_ = spec.n;
    case_ = n_ >= 2 ? Case::prism_general : Case::prism_two_layers;
    skip_ = {ArrangementKind::skip_path, n_ + 1};
    return;
  }
  transposed_ = spec.m > spec.n;
  m_ = std::min(spec.m, spec.n);
  n_ = std::max(spec.m, spec.n);
  if (m_ == 1 && n_ == 1) {
    case_ = Case::lattice_square;
  } else if (m_ == 1) {
    case_ = Case::lattice_thin;
    skip_ = {ArrangementKind::skip_path, n_ + 1};
  } else {
    case_ = Case::lattice_general;
    skip_ = {ArrangementKind::skip_path, m_ + 1};
    const Label total = 2 * m_ * n_ + m_ + n_;
    head_ = (total + 1) / 2 - (n_ - m_) / 2;
    phase_one_top_ = 2 * m_ * n_ + 2 * m_;
  }
}

Label ClosedFormLabeler::label(Factor factor, Index line, Index k) const {
  const AxisLayout& across = factor == Factor::first ? shape_.cols : shape_.rows;
  const AxisLayout& along = factor == Factor::first ? shape_.rows : shape_.cols;
  if (line < 1 || line > across.size || !along.has_edge(k)) {
    throw InvalidParameter("no edge with index " + std::to_string(k) + " on line " + std::to_string(line) +
                           " of " + to_string(spec_));
  }
  return transposed_ ? oriented(flip(factor), line, k) : oriented(factor, line, k);
}

Label ClosedFormLabeler::oriented(Factor factor, Index line, Index k) const {
  const Index m = m_;
  const Index n = n_;
  switch (case_) {
    case Case::lattice_general:
      if (factor == Factor::first) {
        const Index slot = is_u(skip_, k) ? line : n + 2 - line;
        return 2 * (k - 1) * (n + 1) + 2 * slot;
      }
      return merge_at(head_, phase_one_top_, (line - 1) * n + k);
    case Case::lattice_thin:
      if (factor == Factor::first) return 2 * n + line;
      return line == 1 ? 2 * k - 1 : 2 * k;
    case Case::lattice_square:
      if (factor == Factor::first) return line == 1 ? 1 : 4;
      return line == 1 ? 2 : 3;
    case Case::prism_general:
      if (factor == Factor::first) {
        const Label l0 = (line - 1) * m + k + 1;
        return line == 2 && n % 2 == 0 ? 3 * m + 1 - l0 : l0;
      }
      return m * n + k * m + (is_u(skip_, k) ? line : m + 1 - line);
    case Case::prism_two_layers:
      if (factor == Factor::first) return line == 1 ? 2 * k + 1 : 2 * k + 2;
      return 2 * m + line;
  }
  return 0;
}

EdgeKey ClosedFormLabeler::make_key(Factor factor, Index line, Index k) const {
  if (transposed_) factor = flip(factor);
  EdgeKey key{spec_, factor, {}, k};
  if (factor == Factor::first) {
    key.lower = {shape_.rows.edge(k).lo, line};
  } else {
    key.lower = {line, shape_.cols.edge(k).lo};
  }
  return key;
}

EdgeKey ClosedFormLabeler::edge_with_label(Label value) const {
  if (value < 1 || value > edge_count(spec_)) {
    throw InvalidParameter("label " + std::to_string(value) + " outside 1.." + std::to_string(edge_count(spec_)));
  }
  const Index m = m_;
  const Index n = n_;
  switch (case_) {
    case Case::lattice_general: {
      if (value % 2 == 0 && value <= phase_one_top_) {
        const Index k = (value - 1) / (2 * (n + 1)) + 1;
        const Index slot = (value - 2 * (k - 1) * (n + 1)) / 2;
        return make_key(Factor::first, is_u(skip_, k) ? slot : n + 2 - slot, k);
      }
      Index i = 0;
      if (value % 2 == 1) {
        const Index x = (value + 1) / 2;
        i = x <= head_ ? x : head_ + 2 * (x - head_);
      } else {
        i = head_ + (value - phase_one_top_) - 1;
      }
      return make_key(Factor::second, (i - 1) / n + 1, (i - 1) % n + 1);
    }
    case Case::lattice_thin:
      if (value > 2 * n) return make_key(Factor::first, value - 2 * n, 1);
      return value % 2 == 1 ? make_key(Factor::second, 1, (value + 1) / 2) : make_key(Factor::second, 2, value / 2);
    case Case::lattice_square: {
      constexpr std::array<std::pair<Factor, Index>, 4> where = {
          {{Factor::first, 1}, {Factor::second, 1}, {Factor::second, 2}, {Factor::first, 2}}};
      const auto& [factor, line] = where[static_cast<std::size_t>(value - 1)];
      return make_key(factor, line, 1);
    }
    case Case::prism_general: {
      if (value <= m * (n + 1)) {
        const Index j = (value - 1) / m + 1;
        const Label l0 = j == 2 && n % 2 == 0 ? 3 * m + 1 - value : value;
        return make_key(Factor::first, j, l0 - (j - 1) * m - 1);
      }
      const Index q = value - m * n - 1;
      const Index k = q / m;
      const Index slot = q % m + 1;
      return make_key(Factor::second, is_u(skip_, k) ? slot : m + 1 - slot, k);
    }
    case Case::prism_two_layers:
      if (value > 2 * m) return make_key(Factor::second, value - 2 * m, 1);
      return value % 2 == 1 ? make_key(Factor::first, 1, (value - 1) / 2) : make_key(Factor::first, 2, (value - 2) / 2);
  }
  return {};
}

EdgeKey key_of(const FamilySpec& spec, const Edge& edge) {
  require_streamable(spec);
  const GridShape shape = grid_shape(spec);
  const Edge e = make_edge(edge.a, edge.b);
  const Factor factor = factor_of(e);
  const AxisLayout& along = factor == Factor::first ? shape.rows : shape.cols;
  const AxisLayout& across = factor == Factor::first ? shape.cols : shape.rows;
  const Index line = factor == Factor::first ? e.a.col : e.a.row;
  const Index from = factor == Factor::first ? e.a.row : e.a.col;
  const Index to = factor == Factor::first ? e.b.row : e.b.col;
  const bool aligned = factor == Factor::first ? e.a.col == e.b.col : e.a.row == e.b.row;
  Index k = -1;
  if (aligned && line >= 1 && line <= across.size && from >= 1 && to <= along.size) {
    along.for_each_neighbor(from, [&](Index nb, Index idx) {
      if (nb == to) k = idx;
    });
  }
  if (k < 0) throw InvalidParameter(to_string(e.a) + " -- " + to_string(e.b) + " is not an edge of " + to_string(spec));
  return EdgeKey{spec, factor, e.a, k};
}

Edge endpoints(const EdgeKey& key) {
  require_streamable(key.spec);
  const GridShape shape = grid_shape(key.spec);
  const AxisLayout& along = key.factor == Factor::first ? shape.rows : shape.cols;
  const AxisLayout& across = key.factor == Factor::first ? shape.cols : shape.rows;
  const Index line = key.factor == Factor::first ? key.lower.col : key.lower.row;
  const Index start = key.factor == Factor::first ? key.lower.row : key.lower.col;
  if (!along.has_edge(key.index) || line < 1 || line > across.size || along.edge(key.index).lo != start) {
    throw InvalidParameter("edge key does not name an edge of " + to_string(key.spec));
  }
  const IndexPair ends = along.edge(key.index);
  if (key.factor == Factor::first) return Edge{{ends.lo, line}, {ends.hi, line}};
  return Edge{{line, ends.lo}, {line, ends.hi}};
}

Label closed_form_label(const EdgeKey& key) {
  endpoints(key);
  return ClosedFormLabeler(key.spec).label(key);
}

EdgeKey edge_with_label(const FamilySpec& spec, Label value) {
  return ClosedFormLabeler(spec).edge_with_label(value);
}

// ---------------------------------------------------------------------------

namespace {

// Fixed-size bitset over a window of consecutive values.
class WindowBits {
 public:
  explicit WindowBits(std::uint64_t bits) : words_((bits + 63) / 64, 0) {}

  std::uint64_t bits() const { return words_.size() * 64; }
  std::uint64_t bytes() const { return words_.size() * sizeof(std::uint64_t); }
  void clear() { std::fill(words_.begin(), words_.end(), 0); }
  bool test(std::uint64_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::uint64_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }

 private:
  std::vector<std::uint64_t> words_;
};

// Keeps the `cap` smallest distinct values inserted.
class SmallestValues {
 public:
  void insert(Label v) {
    values_.insert(v);
    if (values_.size() > kMaxReportedLabels) values_.erase(std::prev(values_.end()));
  }
  const std::set<Label>& values() const { return values_; }

 private:
  std::set<Label> values_;
};

template <class LabelAt>
StreamResult verify_core(const FamilySpec& spec, const LabelAt& label_at, const StreamOptions& options) {
  const GridShape shape = grid_shape(spec);
  const AxisLayout& rows = shape.rows;
  const AxisLayout& cols = shape.cols;
  const Index total_edges = edge_count(spec);
  if (total_edges > std::numeric_limits<Label>::max() / 4) {
    throw SizeLimitExceeded("vertex sums of " + to_string(spec) + " would overflow 64-bit integers");
  }

  std::uint64_t window = options.window_bits;
  if (window == 0) {
    window = kStreamWindowBitsPerUnit * static_cast<std::uint64_t>(std::min(rows.size, cols.size) + 1);
  }
  StreamResult result;
  StreamStats& stats = result.stats;

  auto for_each_edge = [&](auto&& visit) {
    for (Index i = 1; i <= rows.size; ++i) {
      for (Index j = 1; j <= cols.size; ++j) {
        cols.for_each_neighbor(j, [&](Index j2, Index k) {
          if (j2 > j) visit(label_at(Factor::second, i, k));
        });
        rows.for_each_neighbor(i, [&](Index i2, Index k) {
          if (i2 > i) visit(label_at(Factor::first, j, k));
        });
      }
    }
  };
  auto sum_at = [&](Index i, Index j) {
    Label sum = 0;
    rows.for_each_neighbor(i, [&](Index, Index k) { sum += label_at(Factor::first, j, k); });
    cols.for_each_neighbor(j, [&](Index, Index k) { sum += label_at(Factor::second, i, k); });
    ++stats.vertices_evaluated;
    return sum;
  };

  // Labels: every value in 1..|E| exactly once.
  {
    WindowBits seen(window);
    const auto span = static_cast<Label>(seen.bits());
    stats.peak_state_bytes = seen.bytes();
    SmallestValues below;
    SmallestValues above;
    std::vector<Label> in_range;
    for (Label base = 1; base <= total_edges && in_range.size() < kMaxReportedLabels; base += span) {
      seen.clear();
      SmallestValues repeats;
      const bool first_pass = base == 1;
      for_each_edge([&](Label l) {
        ++stats.edges_evaluated;
        if (l < 1 || l > total_edges) {
          if (first_pass) (l < 1 ? below : above).insert(l);
          return;
        }
        if (l < base || l - base >= span) return;
        const auto bit = static_cast<std::uint64_t>(l - base);
        if (seen.test(bit)) {
          repeats.insert(l);
        } else {
          seen.set(bit);
        }
      });
      ++stats.label_passes;
      std::vector<Label> window_problems(repeats.values().begin(), repeats.values().end());
      const Label top = std::min(total_edges, base + span - 1);
      for (Label l = base; l <= top; ++l) {
        if (!seen.test(static_cast<std::uint64_t>(l - base))) window_problems.push_back(l);
      }
      std::sort(window_problems.begin(), window_problems.end());
      for (Label l : window_problems) {
        if (in_range.size() < kMaxReportedLabels) in_range.push_back(l);
      }
    }
    auto& problems = result.verdict.missing_or_repeated_labels;
    problems.assign(below.values().begin(), below.values().end());
    problems.insert(problems.end(), in_range.begin(), in_range.end());
    problems.insert(problems.end(), above.values().begin(), above.values().end());
    if (problems.size() > kMaxReportedLabels) problems.resize(kMaxReportedLabels);
    result.verdict.bijection_ok = problems.empty();
    if (!result.verdict.bijection_ok) return result;
  }

  // Sums: each lies in 0..4|E|; look for repeats one value window at a time.
  WindowBits seen(window);
  WindowBits repeated(window);
  stats.peak_state_bytes = std::max(stats.peak_state_bytes, seen.bytes() + repeated.bytes());
  const auto span = static_cast<Label>(seen.bits());
  const Label max_sum = 4 * total_edges;
  std::optional<Vertex> first_clash;
  Label clash_sum = 0;
  for (Label base = 0; base <= max_sum; base += span) {
    seen.clear();
    repeated.clear();
    bool any = false;
    for (Index i = 1; i <= rows.size; ++i) {
      for (Index j = 1; j <= cols.size; ++j) {
        const Label s = sum_at(i, j);
        if (s < base || s - base >= span) continue;
        const auto bit = static_cast<std::uint64_t>(s - base);
        if (seen.test(bit)) {
          repeated.set(bit);
          any = true;
        } else {
          seen.set(bit);
        }
      }
    }
    ++stats.sum_passes;
    if (!any) continue;
    // Earliest vertex (in canonical order) whose sum repeats in this window.
    bool found = false;
    for (Index i = 1; i <= rows.size && !found; ++i) {
      for (Index j = 1; j <= cols.size && !found; ++j) {
        const Label s = sum_at(i, j);
        if (s < base || s - base >= span || !repeated.test(static_cast<std::uint64_t>(s - base))) continue;
        found = true;
        if (!first_clash || Vertex{i, j} < *first_clash) {
          first_clash = Vertex{i, j};
          clash_sum = s;
        }
      }
    }
  }
  if (first_clash) {
    bool after = false;
    for (Index i = first_clash->row; i <= rows.size && !result.verdict.duplicate; ++i) {
      for (Index j = 1; j <= cols.size && !result.verdict.duplicate; ++j) {
        if (!after) {
          after = Vertex{i, j} == *first_clash;
          continue;
        }
        if (sum_at(i, j) == clash_sum) result.verdict.duplicate = VertexPair{*first_clash, {i, j}};
      }
    }
  }
  result.verdict.antimagic = !result.verdict.duplicate;
  return result;
}

}  // namespace

StreamResult stream_verify(const FamilySpec& spec, const StreamOptions& options) {
  const ClosedFormLabeler labeler(spec);
  return verify_core(
      spec, [&](Factor f, Index line, Index k) { return labeler.label(f, line, k); }, options);
}

StreamResult stream_verify(const FamilySpec& spec, const EdgeLabelFn& label_fn, const StreamOptions& options) {
  require_streamable(spec);
  const GridShape shape = grid_shape(spec);
  return verify_core(
      spec,
      [&](Factor f, Index line, Index k) {
        EdgeKey key{spec, f, {}, k};
        key.lower = f == Factor::first ? Vertex{shape.rows.edge(k).lo, line} : Vertex{line, shape.cols.edge(k).lo};
        return label_fn(key);
      },
      options);
}

void stream_edges(const FamilySpec& spec, std::ostream& out, bool by_label) {
  const ClosedFormLabeler labeler(spec);
  std::string buffer;
  auto emit = [&](const Vertex& a, const Vertex& b, Label l) {
    buffer += std::to_string(a.row);
    buffer += '\t';
    buffer += std::to_string(a.col);
    buffer += '\t';
    buffer += std::to_string(b.row);
    buffer += '\t';
    buffer += std::to_string(b.col);
    buffer += '\t';
    buffer += std::to_string(l);
    buffer += '\n';
    if (buffer.size() > (1u << 16)) {
      out << buffer;
      buffer.clear();
    }
  };

  if (by_label) {
    for (Label l = 1; l <= edge_count(spec); ++l) {
      const Edge e = endpoints(labeler.edge_with_label(l));
      emit(e.a, e.b, l);
    }
  } else {
    const AxisLayout& rows = labeler.shape().rows;
    const AxisLayout& cols = labeler.shape().cols;
    for (Index i = 1; i <= rows.size; ++i) {
      for (Index j = 1; j <= cols.size; ++j) {
        std::array<std::pair<Index, Index>, 4> later{};
        std::size_t count = 0;
        cols.for_each_neighbor(j, [&](Index j2, Index k) {
          if (j2 > j) later[count++] = {j2, k};
        });
        std::sort(later.begin(), later.begin() + static_cast<std::ptrdiff_t>(count));
        for (std::size_t c = 0; c < count; ++c) {
          emit({i, j}, {i, later[c].first}, labeler.label(Factor::second, i, later[c].second));
        }
        count = 0;
        rows.for_each_neighbor(i, [&](Index i2, Index k) {
          if (i2 > i) later[count++] = {i2, k};
        });
        std::sort(later.begin(), later.begin() + static_cast<std::ptrdiff_t>(count));
        for (std::size_t c = 0; c < count; ++c) {
          emit({i, j}, {later[c].first, j}, labeler.label(Factor::first, j, later[c].second));
        }
      }
    }
  }
  out << buffer;
}

}  // namespace antimagic
