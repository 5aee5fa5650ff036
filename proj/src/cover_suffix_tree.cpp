#include "cst/cover_suffix_tree.hpp"

#include <chrono>
#include <ostream>
#include <stdexcept>
#include <string>

namespace cst {

namespace {

[[noreturn]] void fail(const std::string& what) { throw std::logic_error(what); }

// Stable counting sort of item ids by key in [0..upper].
std::vector<Index> counting_order(const std::vector<Index>& key, std::span<const Index> items, Index upper) {
  std::vector<Index> start(static_cast<std::size_t>(upper) + 2, 0);
  for (Index k : items) ++start[static_cast<std::size_t>(key[k]) + 1];
  for (Index c = 0; c <= upper; ++c) start[c + 1] += start[c];
  std::vector<Index> out(items.size());
  for (Index k : items) out[start[key[k]]++] = k;
  return out;
}

}  // namespace

CstTree build_cst_structure(const Text& t, const SuffixTree& st, std::span<const SquareOcc> squares) {
  const Index m = st.size();
  const Index s = static_cast<Index>(squares.size());

  std::vector<WaQuery> queries;
  queries.reserve(squares.size());
  for (const auto& sq : squares) queries.push_back({st.leaf(sq.i), sq.d});
  const auto locus = batch_weighted_ancestor(st, queries);

  // Squares grouped by the suffix tree node at or below their locus, each
  // group in increasing half length.
  std::vector<Index> half(static_cast<std::size_t>(s));
  std::vector<Index> ids(static_cast<std::size_t>(s));
  for (Index k = 0; k < s; ++k) {
    half[k] = squares[k].d;
    ids[k] = k;
  }
  auto by_length = counting_order(half, ids, t.size());
  auto grouped = counting_order(locus, by_length, m);
  std::vector<Index> group_start(static_cast<std::size_t>(m) + 1, 0);
  for (Index k = 0; k < s; ++k) ++group_start[locus[k] + 1];
  for (Index v = 0; v < m; ++v) group_start[v + 1] += group_start[v];

  Index inserted = 0;
  for (Index k = 0; k < s; ++k) {
    if (st.depth(locus[k]) > squares[k].d) ++inserted;
  }
  const Index total = m + inserted;
  if (static_cast<std::int64_t>(total) > 3 * static_cast<std::int64_t>(t.size()) + 2) {
    fail("explicit node count exceeds 3n + 2");
  }

  CstTree out;
  std::vector<Index> parent(static_cast<std::size_t>(total)), depth(parent.size()), repr(parent.size());
  out.square_half.assign(static_cast<std::size_t>(total), 0);
  out.st_node.assign(static_cast<std::size_t>(total), kNone);
  out.from_st.assign(static_cast<std::size_t>(m), kNone);
  out.square_node.assign(static_cast<std::size_t>(s), kNone);

  Index next = 0;
  for (Index v = 0; v < m; ++v) {
    Index up = v == SuffixTree::root() ? kNone : out.from_st[st.parent(v)];
    Index prev_depth = up == kNone ? -1 : depth[up];
    for (Index g = group_start[v]; g < group_start[v + 1]; ++g) {
      const Index k = grouped[g];
      const Index d = squares[k].d;
      if (d <= prev_depth) fail("two square halves share a locus");
      if (d == st.depth(v)) break;
      parent[next] = up;
      depth[next] = d;
      repr[next] = st.repr(v);
      out.square_half[next] = 1;
      out.square_node[k] = next;
      up = next++;
      prev_depth = d;
    }
    parent[next] = up;
    depth[next] = st.depth(v);
    repr[next] = st.repr(v);
    out.st_node[next] = v;
    out.from_st[v] = next;
    if (group_start[v + 1] > group_start[v]) {
      const Index k = grouped[group_start[v + 1] - 1];
      if (squares[k].d == st.depth(v)) {
        out.square_half[next] = 1;
        out.square_node[k] = next;
      }
    }
    ++next;
  }
  if (next != total) fail("square loci were not all placed");
  for (Index k = 0; k < s; ++k) {
    if (out.square_node[k] == kNone) fail("two square halves share a locus");
  }

  out.tree = CompactTrie(std::move(parent), std::move(depth), std::move(repr), t.symbols(), true);
  compute_suffix_links(out.tree, false);
  return out;
}

void compute_occ(CstTree& cst) {
  const Index n = cst.size();
  cst.occ.assign(static_cast<std::size_t>(n), 0);
  for (Index v = n - 1; v >= 0; --v) {
    if (cst.tree.is_leaf(v)) cst.occ[v] = 1;
    if (v > 0) cst.occ[cst.tree.parent(v)] += cst.occ[v];
  }
}

RotationGraph build_rotation_graph(const CstTree& cst, std::span<const SquareOcc> squares) {
  const Index n = cst.size();
  const auto& tree = cst.tree;
  std::vector<WaQuery> queries;
  queries.reserve(squares.size());
  for (const auto& sq : squares) queries.push_back({tree.leaf(sq.i + 1), sq.d});
  const auto target = batch_weighted_ancestor(tree, queries);

  RotationGraph g;
  g.next.assign(static_cast<std::size_t>(n), kNone);
  std::vector<std::uint8_t> indegree(static_cast<std::size_t>(n), 0);
  for (std::size_t k = 0; k < squares.size(); ++k) {
    const Index w = target[k];
    if (tree.depth(w) != squares[k].d || !cst.square_half[w]) continue;
    const Index u = cst.square_node[k];
    if (g.next[u] != kNone) fail("square half with two rotation arcs");
    g.next[u] = w;
    if (++indegree[w] > 1) fail("square half with two incoming rotation arcs");
  }

  g.component.assign(static_cast<std::size_t>(n), kNone);
  g.position.assign(static_cast<std::size_t>(n), 0);
  for (Index v = 0; v < n; ++v) {
    if (!cst.square_half[v] || indegree[v] != 0) continue;
    const Index c = static_cast<Index>(g.components.size());
    Index length = 0;
    for (Index x = v; x != kNone; x = g.next[x]) {
      g.component[x] = c;
      g.position[x] = length++;
    }
    g.components.push_back({false, v, length});
  }
  for (Index v = 0; v < n; ++v) {
    if (!cst.square_half[v] || g.component[v] != kNone) continue;
    const Index c = static_cast<Index>(g.components.size());
    Index id = 0;
    Index x = v;
    do {
      if (x == kNone || g.component[x] != kNone) fail("rotation graph component is neither a path nor a cycle");
      g.component[x] = c;
      g.position[x] = ++id;
      x = g.next[x];
    } while (x != v);
    g.components.push_back({true, v, id});
  }
  return g;
}

std::vector<RunEndpoints> locate_run_endpoints(const SuffixTree& st, const CstTree& cst, std::span<const Run> runs) {
  std::vector<WaQuery> lower, upper;
  lower.reserve(2 * runs.size());
  upper.reserve(2 * runs.size());
  for (const Run& r : runs) {
    if (r.length() == 2 * r.p) continue;
    lower.push_back({st.leaf(r.a), r.b - r.p - r.a + 1});
    lower.push_back({st.leaf(r.b - 2 * r.p + 1), r.p});
    upper.push_back({cst.tree.leaf(r.a), r.p});
    upper.push_back({cst.tree.leaf(r.b - 2 * r.p), r.p});
  }
  const auto lo = batch_weighted_ancestor(st, lower);
  const auto up = batch_weighted_ancestor(cst.tree, upper);

  std::vector<RunEndpoints> out(runs.size());
  std::size_t q = 0;
  for (std::size_t k = 0; k < runs.size(); ++k) {
    const Run& r = runs[k];
    if (r.length() == 2 * r.p) continue;  // exponent 2: Lower and Upper are empty
    auto& e = out[k];
    e.lower_bottom = lo[q];
    e.lower_top = lo[q + 1];
    e.upper_first = up[q];
    e.upper_last = up[q + 1];
    q += 2;
    if (st.depth(e.lower_bottom) != r.b - r.p - r.a + 1 || st.depth(e.lower_top) != r.p) {
      fail("Lower endpoint of a run is not an explicit node");
    }
    for (Index v : {e.upper_first, e.upper_last}) {
      if (cst.tree.depth(v) != r.p || !cst.square_half[v]) fail("Upper endpoint of a run is not a square half node");
    }
  }
  return out;
}

RunCounters compute_run_counters(const SuffixLinkTree& slt, const CstTree& cst, const RotationGraph& g,
                                 std::span<const Run> runs, std::span<const RunEndpoints> ends, WeightMode mode,
                                 WrapRule rule) {
  if (runs.size() != ends.size()) throw std::invalid_argument("one endpoint record per run expected");
  const Index n = cst.size();
  const Index m = static_cast<Index>(slt.parent.size());
  auto weight = [&](const Run& r) -> std::int64_t { return mode == WeightMode::unit ? 1 : r.p; };

  // Lower(R) is a path in the suffix-link tree: +w at its bottom, -w at the
  // parent of its top, then subtree sums.
  std::vector<std::int64_t> lower(static_cast<std::size_t>(m), 0);
  for (std::size_t k = 0; k < runs.size(); ++k) {
    if (ends[k].lower_bottom == kNone) continue;
    lower[ends[k].lower_bottom] += weight(runs[k]);
    lower[ends[k].lower_top] -= weight(runs[k]);
  }
  for (auto it = slt.order.rbegin(); it != slt.order.rend(); ++it) {
    if (slt.parent[*it] != kNone) lower[slt.parent[*it]] += lower[*it];
  }

  RunCounters out;
  out.lower.assign(static_cast<std::size_t>(n), 0);
  for (Index v = 0; v < m; ++v) out.lower[cst.from_st[v]] = lower[v];

  // Upper(R) is a walk in the rotation graph: difference counters along
  // paths, and along cycles cut before the node with id 1, plus a per-cycle
  // count of full turns.
  std::vector<std::int64_t> diff(static_cast<std::size_t>(n), 0);
  std::vector<std::int64_t> turns(g.components.size(), 0);
  for (std::size_t k = 0; k < runs.size(); ++k) {
    const Run& r = runs[k];
    const std::int64_t w = weight(r);
    const Index walk = r.b - 2 * r.p - r.a + 1;
    if (walk == 0) continue;
    const Index v1 = ends[k].upper_first;
    const Index v2 = ends[k].upper_last;
    const Index c = g.component[v1];
    if (c == kNone || g.component[v2] != c) fail("Upper walk endpoints lie in different components");
    const auto& comp = g.components[c];
    if (!comp.cycle) {
      if (g.position[v2] - g.position[v1] + 1 != walk) fail("Upper walk does not match its path segment");
      diff[v1] += w;
      if (g.next[v2] != kNone) diff[g.next[v2]] -= w;
      continue;
    }
    const Index q = comp.length;
    const Index id1 = g.position[v1];
    const Index id2 = g.position[v2];
    const Index seglen = ((id2 - id1) % q + q) % q + 1;
    Index wraps = 0;
    if (rule == WrapRule::exact) {
      if (walk < seglen || (walk - seglen) % q != 0) fail("Upper walk length is inconsistent with its cycle");
      wraps = (walk - seglen) / q;
    } else {
      wraps = walk / q;
    }
    turns[c] += static_cast<std::int64_t>(wraps) * w;
    diff[v1] += w;
    if (id1 > id2) diff[comp.head] += w;
    if (id2 < q) diff[g.next[v2]] -= w;
  }

  out.upper.assign(static_cast<std::size_t>(n), 0);
  for (std::size_t c = 0; c < g.components.size(); ++c) {
    const auto& comp = g.components[c];
    std::int64_t running = 0;
    Index x = comp.head;
    for (Index step = 0; step < comp.length; ++step, x = g.next[x]) {
      running += diff[x];
      out.upper[x] = running + turns[c];
    }
  }
  return out;
}

void annotate(CstTree& cst, const RunCounters& unit, const RunCounters& period) {
  const Index n = cst.size();
  if (cst.occ.size() != static_cast<std::size_t>(n)) compute_occ(cst);
  std::vector<std::int64_t> ov(static_cast<std::size_t>(n)), cv_ov(static_cast<std::size_t>(n));
  for (Index v = 0; v < n; ++v) {
    ov[v] = unit.lower[v] - unit.upper[v];
    cv_ov[v] = period.lower[v] - period.upper[v];
  }
  for (Index v = n - 1; v > 0; --v) {
    ov[cst.tree.parent(v)] += ov[v];
    cv_ov[cst.tree.parent(v)] += cv_ov[v];
  }

  cst.ov.assign(static_cast<std::size_t>(n), 0);
  cst.nov.assign(static_cast<std::size_t>(n), 0);
  cst.cv_ov.assign(static_cast<std::size_t>(n), 0);
  cst.cv.assign(static_cast<std::size_t>(n), 0);
  if (n == 0) return;
  cst.nov[0] = cst.occ[0];
  const Index text_length = cst.occ[0] - 1;
  for (Index v = 1; v < n; ++v) {
    if (ov[v] < 0 || ov[v] >= cst.occ[v]) {
      fail("overlap count out of range at node " + std::to_string(v) + ": ov=" + std::to_string(ov[v]) +
           " occ=" + std::to_string(cst.occ[v]));
    }
    cst.ov[v] = static_cast<Index>(ov[v]);
    cst.nov[v] = cst.occ[v] - cst.ov[v];
    cst.cv_ov[v] = cv_ov[v];
    cst.cv[v] = cv_ov[v] + cst.cv_nov(v);
    if (cst.cv[v] < cst.coverage_length(v) || cst.cv[v] > text_length) {
      fail("coverage out of range at node " + std::to_string(v) + ": cv=" + std::to_string(cst.cv[v]));
    }
  }
}

std::int64_t cv_at_depth(const CstTree& cst, Index v, Index length) {
  if (v < 0 || v >= cst.size()) throw std::out_of_range("node out of range");
  const Index low = v == CompactTrie::root() ? -1 : cst.tree.depth(cst.tree.parent(v));
  if (length <= low || length > cst.tree.depth(v)) throw std::out_of_range("length is not on the edge into the node");
  const Index full = cst.coverage_length(v);
  return cst.cv[v] - static_cast<std::int64_t>(full - std::min(length, full)) * cst.nov[v];
}

std::optional<Locus> locate(const CompactTrie& tree, std::span<const Symbol> text, std::span<const Symbol> pattern) {
  const Index m = static_cast<Index>(pattern.size());
  Index v = CompactTrie::root();
  Index matched = 0;
  while (matched < m) {
    const Index c = tree.child(v, pattern[matched], text);
    if (c == kNone) return std::nullopt;
    const Index stop = std::min(tree.depth(c), m);
    const Index offset = tree.repr(c);
    for (Index k = matched + 1; k < stop; ++k) {
      if (text[static_cast<std::size_t>(offset + k)] != pattern[k]) return std::nullopt;
    }
    matched = stop;
    v = c;
  }
  return Locus{v, m};
}

namespace {

class Stopwatch {
 public:
  double lap() {
    auto now = std::chrono::steady_clock::now();
    double s = std::chrono::duration<double>(now - last_).count();
    last_ = now;
    return s;
  }

 private:
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

}  // namespace

CoverSuffixTree::CoverSuffixTree(Text text, WrapRule rule) : text_(std::move(text)) {
  Stopwatch clock;
  auto sa = build_suffix_array(text_);
  auto lcp = build_lcp_array(text_, sa);
  LceIndex lce(sa, lcp);
  timings_.suffix_array = clock.lap();

  auto st = build_suffix_tree(text_, sa, lcp, false);
  auto slt = build_suffix_link_tree(st);
  lcp = {};
  timings_.suffix_tree = clock.lap();

  runs_ = compute_runs(text_, sa, lce);
  timings_.runs = clock.lap();

  squares_ = enumerate_distinct_squares(text_, sa, lce, runs_);
  sa = {};
  lce = {};
  timings_.squares = clock.lap();

  cst_ = build_cst_structure(text_, st, squares_);
  compute_occ(cst_);
  timings_.structure = clock.lap();

  graph_ = build_rotation_graph(cst_, squares_);
  timings_.rotation = clock.lap();

  auto ends = locate_run_endpoints(st, cst_, runs_);
  auto unit = compute_run_counters(slt, cst_, graph_, runs_, ends, WeightMode::unit, rule);
  auto period = compute_run_counters(slt, cst_, graph_, runs_, ends, WeightMode::period, rule);
  timings_.counters = clock.lap();

  annotate(cst_, unit, period);
  timings_.annotate = clock.lap();
}

std::optional<Locus> CoverSuffixTree::locate(std::span<const Symbol> pattern) const {
  return cst::locate(cst_.tree, text_.symbols(), pattern);
}

std::optional<Locus> CoverSuffixTree::locate(std::string_view pattern) const {
  auto encoded = text_.encode(pattern);
  if (!encoded) return std::nullopt;
  return locate(*encoded);
}

void write_dump(std::ostream& out, const CoverSuffixTree& cst) {
  const auto& c = cst.tree();
  const auto& tree = c.tree;
  out << "# n\t" << cst.text().size() << '\n'
      << "# sigma\t" << cst.text().sigma() << '\n'
      << "# nodes\t" << c.size() << '\n'
      << "# runs\t" << cst.runs().size() << '\n'
      << "# squares\t" << cst.squares().size() << '\n'
      << "# id\tparent\tstart\tend\tdepth\tsquare\tlink\tocc\tov\tnov\tcv_ov\tcv\n";
  for (Index v = 0; v < c.size(); ++v) {
    const bool root = v == CompactTrie::root();
    const Fragment e = root ? Fragment{0, 0} : tree.edge(v);
    const Index link = tree.has_suffix_links() ? tree.suffix_link(v) : kNone;
    out << v + 1 << '\t' << (root ? 0 : tree.parent(v) + 1) << '\t' << e.start << '\t' << e.end << '\t'
        << tree.depth(v) << '\t' << int{c.square_half[v]} << '\t' << (link == kNone ? 0 : link + 1) << '\t'
        << c.occ[v] << '\t' << c.ov[v] << '\t' << c.nov[v] << '\t' << c.cv_ov[v] << '\t' << c.cv[v] << '\n';
  }
}

}  // namespace cst
