#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>
#include <stdexcept>
#include <string>

#include "cst/cover_suffix_tree.hpp"
#include "cst/ovocc_index.hpp"
#include "cst/partial_covers.hpp"
#include "cst/verify.hpp"

using namespace cst;

namespace {

struct Source {
  std::string path;
  std::string text;
  bool has_text = false;
};

void add_source(CLI::App* cmd, Source& src) {
  auto* in = cmd->add_option("--input", src.path, "input file, '-' for standard input (default)");
  cmd->add_option("--text", src.text, "text given inline")->excludes(in)->each([&](const std::string&) {
    src.has_text = true;
  });
}

// A single trailing newline (LF or CRLF) is not part of the text.
std::string read_source(const Source& src) {
  if (src.has_text) return src.text;
  std::string data;
  if (src.path.empty() || src.path == "-") {
    data.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else {
    std::ifstream in(src.path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + src.path);
    data.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  if (!data.empty() && data.back() == '\n') data.pop_back();
  if (!data.empty() && data.back() == '\r') data.pop_back();
  return data;
}

WrapRule parse_rule(const std::string& name) {
  if (name == "exact") return WrapRule::exact;
  if (name == "literal") return WrapRule::literal_floor;
  throw std::invalid_argument("unknown cycle rule: " + name);
}

// Accepts plain integers and forms like 1e6 or 2.5e5.
Index parse_size(const std::string& token) {
  std::size_t used = 0;
  const double value = std::stod(token, &used);
  if (used != token.size() || value < 1 || value != static_cast<double>(static_cast<Index>(value))) {
    throw std::invalid_argument("bad size: " + token);
  }
  return static_cast<Index>(value);
}

std::int64_t ns(double seconds) { return static_cast<std::int64_t>(seconds * 1e9 + 0.5); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cover suffix tree: partial covers and overlapping consecutive occurrences"};
  app.require_subcommand(1);

  Source src;
  std::string output, rule_name = "exact";
  auto* build = app.add_subcommand("build", "write the annotated cover suffix tree");
  add_source(build, src);
  build->add_option("--output,-o", output, "output file (default: standard output)");
  build->add_option("--cycle-rule", rule_name, "exact or literal")->check(CLI::IsMember({"exact", "literal"}));

  Index alpha = 0;
  bool all = false;
  auto* pcov = app.add_subcommand("pcov", "shortest partial covers");
  add_source(pcov, src);
  auto* all_flag = pcov->add_flag("--all", all, "one shortest cover for every alpha");
  pcov->add_option("--alpha", alpha, "every shortest alpha-partial cover")->excludes(all_flag);

  std::string pattern;
  std::vector<Index> frag;
  Index beta = 0;
  auto* ovocc = app.add_subcommand("ovocc", "consecutive occurrences at distance at most beta");
  add_source(ovocc, src);
  auto* pat_opt = ovocc->add_option("--pattern", pattern, "pattern string");
  ovocc->add_option("--frag", frag, "pattern as fragment i j of the text (1-based, inclusive)")
      ->expected(2)
      ->excludes(pat_opt);
  ovocc->add_option("--beta", beta, "largest distance j - i")->required();

  VerifyConfig vcfg;
  std::string vrule = "exact";
  bool skip_ovocc = false;
  auto* verify = app.add_subcommand("verify", "compare against brute-force oracles on random texts");
  verify->add_option("--max-n", vcfg.max_n, "largest text length (at most 500)")->check(CLI::Range(1, 500));
  verify->add_option("--iters", vcfg.iters, "texts per size");
  verify->add_option("--seed", vcfg.seed, "random seed");
  verify->add_option("--sigma", vcfg.sigma, "alphabet size")->check(CLI::Range(1, 26));
  verify->add_option("--threads", vcfg.threads, "worker threads");
  verify->add_option("--cycle-rule", vrule, "exact or literal")->check(CLI::IsMember({"exact", "literal"}));
  verify->add_flag("--skip-ovocc", skip_ovocc, "skip the query suite");

  std::string sizes_arg = "1e6,2e6", family = "random";
  int repeats = 1, bench_sigma = 4;
  std::uint64_t bench_seed = 1;
  auto* bench = app.add_subcommand("bench", "time the construction phases");
  bench->add_option("--sizes", sizes_arg, "comma-separated text lengths");
  bench->add_option("--family", family, "random, unary or fibonacci")
      ->check(CLI::IsMember({"random", "unary", "fibonacci"}));
  bench->add_option("--repeats", repeats, "builds per size; the fastest is reported")->check(CLI::PositiveNumber);
  bench->add_option("--sigma", bench_sigma, "alphabet size for random texts")->check(CLI::Range(1, 26));
  bench->add_option("--seed", bench_seed, "random seed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*build) {
      CoverSuffixTree cst(load_text(read_source(src)), parse_rule(rule_name));
      if (output.empty()) {
        write_dump(std::cout, cst);
      } else {
        std::ofstream out(output, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + output);
        write_dump(out, cst);
      }
      return 0;
    }

    if (*pcov) {
      if (!all && alpha == 0) throw std::invalid_argument("one of --all or --alpha is required");
      CoverSuffixTree cst(load_text(read_source(src)));
      if (all) {
        auto table = all_partial_covers(cst);
        for (Index a = 1; a <= table.size(); ++a) {
          const Fragment f = table.at(a);
          std::cout << a << '\t' << f.length() << '\t' << f.start << '\t' << f.end << '\n';
        }
      } else {
        for (const auto& c : shortest_alpha_covers(cst, alpha)) {
          std::cout << alpha << '\t' << c.length << '\t' << c.witness.start << '\t' << c.witness.end << '\n';
        }
      }
      return 0;
    }

    if (*ovocc) {
      if (pattern.empty() && frag.empty()) throw std::invalid_argument("one of --pattern or --frag is required");
      OvOccIndex index(load_text(read_source(src)));
      auto pairs = frag.empty() ? index.query(std::string_view(pattern), beta)
                                : index.query(Fragment{frag[0], frag[1]}, beta);
      for (auto [i, j] : pairs) std::cout << i << '\t' << j << '\n';
      return 0;
    }

    if (*verify) {
      vcfg.check.rule = parse_rule(vrule);
      vcfg.check.ovocc = !skip_ovocc;
      auto report = run_verify(vcfg);
      std::cout << "texts\t" << report.texts << '\n'
                << "sizes\t1.." << vcfg.max_n << '\n'
                << "nodes\t" << report.stats.nodes << '\n'
                << "queries\t" << report.stats.queries << '\n'
                << "max_rmq_per_output\t" << std::fixed << std::setprecision(3) << report.stats.max_rmq_ratio << '\n'
                << "failures\t" << report.failures << '\n'
                << (report.failures == 0 ? "PASS" : "FAIL") << '\n';
      if (report.first) {
        std::cerr << "first failure [" << report.first->mismatch.suite << "]: " << report.first->mismatch.detail
                  << "\n  text: " << report.first->text << "\n  minimized: " << report.first->minimized << '\n';
        return 1;
      }
      return 0;
    }

    if (*bench) {
      std::vector<Index> sizes;
      std::stringstream list(sizes_arg);
      for (std::string token; std::getline(list, token, ',');) sizes.push_back(parse_size(token));
      std::cout << "# family\tn\tsuffix_array\tsuffix_tree\truns\tsquares\tstructure\trotation\tcounters\tannotate"
                   "\ttotal\t(ns)\n";
      std::vector<double> totals;
      for (Index n : sizes) {
        auto t = time_build(workload_text(family, n, bench_seed, bench_sigma), repeats);
        totals.push_back(t.total());
        std::cout << family << '\t' << n << '\t' << ns(t.suffix_array) << '\t' << ns(t.suffix_tree) << '\t'
                  << ns(t.runs) << '\t' << ns(t.squares) << '\t' << ns(t.structure) << '\t' << ns(t.rotation) << '\t'
                  << ns(t.counters) << '\t' << ns(t.annotate) << '\t' << ns(t.total()) << '\n';
      }
      for (std::size_t k = 1; k < sizes.size(); ++k) {
        std::cout << "# ratio\t" << sizes[k] << '/' << sizes[k - 1] << '\t' << std::fixed << std::setprecision(3)
                  << totals[k] / totals[k - 1] << '\n';
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
