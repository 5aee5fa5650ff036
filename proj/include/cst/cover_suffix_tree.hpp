#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "cst/repetitions.hpp"
#include "cst/suffix_tree.hpp"

namespace cst {

enum class WeightMode { unit, period };

// Number of full turns credited to a cycle Q when the walk Upper(R) starts at
// v1 and ends at v2. exact: (|Upper| - seglen) / |Q| where seglen is the
// length of the segment v1 -> v2. literal_floor: floor(|Upper| / |Q|), which
// credits one turn too many whenever |Upper| is a multiple of |Q|. Kept only
// to demonstrate that failure.
enum class WrapRule { exact, literal_floor };

// The suffix tree with the locus of every square half made explicit, plus
// per-node annotations. Node ids are pre-order ranks (root 0).
struct CstTree {
  CompactTrie tree;
  std::vector<std::uint8_t> square_half;
  std::vector<Index> st_node;      // suffix tree node, or kNone for inserted nodes
  std::vector<Index> from_st;      // suffix tree node -> node here
  std::vector<Index> square_node;  // distinct square k -> node of its half

  std::vector<Index> occ;
  std::vector<Index> ov;
  std::vector<Index> nov;
  std::vector<std::int64_t> cv_ov;
  std::vector<std::int64_t> cv;

  Index size() const { return tree.size(); }

  // Length of the label without the sentinel (leaf labels end with it).
  Index coverage_length(Index v) const { return tree.depth(v) - (tree.is_leaf(v) ? 1 : 0); }
  std::int64_t cv_nov(Index v) const { return static_cast<std::int64_t>(nov[v]) * coverage_length(v); }
  bool is_branching(Index v) const { return v != CompactTrie::root() && !tree.is_leaf(v) && tree.child_count(v) >= 2; }
};

// Inserts the square-half loci into the suffix tree. Inserted nodes on one
// edge form a chain in increasing depth, spliced in front of the edge's lower
// end, which keeps ids in pre-order. Suffix links are filled where the target
// is explicit.
CstTree build_cst_structure(const Text& t, const SuffixTree& st, std::span<const SquareOcc> squares);

void compute_occ(CstTree& cst);

// Arcs S -> rot(S) between square halves realized inside a square
// occurrence. Every vertex has in- and out-degree at most one.
struct RotationGraph {
  struct Component {
    bool cycle = false;
    Index head = kNone;  // first node of a path, node with id 1 on a cycle
    Index length = 0;
  };

  std::vector<Index> next;       // per node, kNone when there is no arc
  std::vector<Index> component;  // per node, kNone for nodes that are not square halves
  std::vector<Index> position;   // 0-based along a path, id in [1..|Q|] on a cycle
  std::vector<Component> components;

  bool is_vertex(Index v) const { return component[v] != kNone; }
  bool on_cycle(Index v) const { return is_vertex(v) && components[component[v]].cycle; }
};

RotationGraph build_rotation_graph(const CstTree& cst, std::span<const SquareOcc> squares);

// Endpoints of the Lower path (suffix tree nodes) and the Upper walk (nodes
// of the augmented tree) of each run. All kNone for runs of exponent exactly
// 2, whose families are empty.
struct RunEndpoints {
  Index lower_bottom = kNone;  // T[a..b-p]
  Index lower_top = kNone;     // T[b-2p+1..b-p], suffix-link parent of the topmost Lower member
  Index upper_first = kNone;   // T[a..a+p)
  Index upper_last = kNone;    // T[b-2p..b-p)
};

std::vector<RunEndpoints> locate_run_endpoints(const SuffixTree& st, const CstTree& cst, std::span<const Run> runs);

// C_lower[v], C_upper[v]: how many members of Lower(R), Upper(R) match v,
// summed over runs with weight 1 or per(R). Indexed by node.
struct RunCounters {
  std::vector<std::int64_t> lower;
  std::vector<std::int64_t> upper;
};

RunCounters compute_run_counters(const SuffixLinkTree& slt, const CstTree& cst, const RotationGraph& g,
                                 std::span<const Run> runs, std::span<const RunEndpoints> ends, WeightMode mode,
                                 WrapRule rule = WrapRule::exact);

// ov, nov, cv_ov and cv from subtree sums of the counters. Throws
// std::logic_error on any count that no text can produce.
void annotate(CstTree& cst, const RunCounters& unit, const RunCounters& period);

// Coverage of the prefix of length `length` of v's label, for lengths on
// the edge into v: (depth(parent(v)) .. depth(v)].
std::int64_t cv_at_depth(const CstTree& cst, Index v, Index length);

// Position of a pattern in a compact trie: `node` is the nearest explicit
// node at or below the locus and `length` the pattern length.
struct Locus {
  Index node = kNone;
  Index length = 0;
};

std::optional<Locus> locate(const CompactTrie& tree, std::span<const Symbol> text, std::span<const Symbol> pattern);

struct BuildTimings {
  double suffix_array = 0;
  double suffix_tree = 0;
  double runs = 0;
  double squares = 0;
  double structure = 0;
  double rotation = 0;
  double counters = 0;
  double annotate = 0;

  double total() const {
    return suffix_array + suffix_tree + runs + squares + structure + rotation + counters + annotate;
  }
};

class CoverSuffixTree {
 public:
  explicit CoverSuffixTree(Text text, WrapRule rule = WrapRule::exact);

  const Text& text() const { return text_; }
  const CstTree& tree() const { return cst_; }
  const RotationGraph& rotation_graph() const { return graph_; }
  std::span<const Run> runs() const { return runs_; }
  std::span<const SquareOcc> squares() const { return squares_; }
  const BuildTimings& timings() const { return timings_; }

  std::optional<Locus> locate(std::span<const Symbol> pattern) const;
  std::optional<Locus> locate(std::string_view pattern) const;
  std::int64_t cv_at_depth(Index v, Index length) const { return cst::cv_at_depth(cst_, v, length); }

 private:
  Text text_;
  std::vector<Run> runs_;
  std::vector<SquareOcc> squares_;
  CstTree cst_;
  RotationGraph graph_;
  BuildTimings timings_;
};

// Tab-separated node table with '#' header lines. Ids are 1-based; 0 means
// none.
void write_dump(std::ostream& out, const CoverSuffixTree& cst);

}  // namespace cst
