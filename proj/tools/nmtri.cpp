// nmtri: command-line front end for the non-monochromatic triangle toolkit.
//
// Exit codes: 0 success / verified, 1 counterexample or Violation found,
// 2 usage, parse or budget error.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "nmt/nmt.hpp"
#include "nmt/report_json.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kFound = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

nmt::ColoredGraph load(const std::string& path, bool graph6, int k) {
  const auto text = read_input(path);
  try {
    return graph6 ? nmt::parse_graph6(text, k) : nmt::parse_ecg(text);
  } catch (const nmt::ParseError& e) {
    throw UsageError((path == "-" ? std::string("<stdin>") : path) + ": " + e.what());
  }
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string join(const std::vector<std::int64_t>& xs) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? ", " : "") << xs[i];
  out << ']';
  return out.str();
}

std::string describe(const nmt::TriangleWitness& t) {
  std::ostringstream out;
  out << '{' << t.vertices[0] << ',' << t.vertices[1] << ',' << t.vertices[2] << "} colours (" << t.colors[0] << ','
      << t.colors[1] << ',' << t.colors[2] << ") " << nmt::to_string(t.profile);
  return out.str();
}

int run_check(const nmt::ColoredGraph& g) {
  const auto s = g.stats();
  const auto lhs = nmt::main_lhs(s.class_sizes);
  std::cout << "n = " << g.n() << ", k = " << g.k() << '\n';
  std::cout << "|E| = " << s.edge_total << ", class sizes = " << join(s.class_sizes) << ", C(n,2) = " << s.pair_total
            << '\n';
  std::cout << "density = " << (g.n() >= 2 ? nmt::density(g).str() : std::string("undefined")) << '\n';
  std::cout << "|E| + min|E_i| = " << lhs << '\n';
  const std::string generalized = nmt::generalized_colours(g) ? " (k-class generalisation)" : "";
  std::cout << "mantel premise: " << yes_no(nmt::mantel_premise(g)) << '\n';
  std::cout << "main premise (strict): " << yes_no(nmt::main_premise_strict(g)) << generalized << '\n';
  std::cout << "main premise (weak): " << yes_no(nmt::main_premise_weak(g)) << generalized << '\n';
  std::cout << "corollary premise: " << (g.k() == 2 ? yes_no(nmt::corollary_premise(g)) : "n/a (k != 2)") << '\n';
  std::cout << "conjecture 1 premise: " << yes_no(nmt::conjecture1_premise(g)) << '\n';
  std::cout << "conjecture 2 premise: " << yes_no(nmt::conjecture2_premise(g)) << '\n';
  const auto w = nmt::has_nonmono_triangle(g);
  std::cout << "non-monochromatic triangle: " << (w ? describe(*w) : "none") << '\n';
  if (g.k() == 2 && nmt::main_premise_strict(g) && !w) {
    std::cout << "COUNTEREXAMPLE: strict premise holds without a non-monochromatic triangle\n";
    return kFound;
  }
  return kOk;
}

void print_summary(const nmt::SearchReport& r) {
  std::cout << "mode " << nmt::mode_name(r.spec.mode) << ", n = " << r.spec.n << ", k = " << r.spec.colours() << '\n';
  std::cout << "enumerated: " << r.enumerated << '\n';
  std::cout << "premise_hits: " << r.premise_hits << '\n';
  std::cout << "conclusion_hits: " << r.conclusion_hits << '\n';
  if (r.spec.mode == nmt::SearchMode::AuditClaims) {
    std::cout << "claim2_checked: " << r.audit.claim2_checked << ", claim4_checked: " << r.audit.claim4_checked
              << ", claim4_saturated: " << r.audit.claim4_saturated << '\n';
  }
  if (!r.tight_classes.empty()) {
    std::cout << "classes (" << r.tight_classes.size() << "):\n";
    for (const auto& t : r.tight_classes)
      std::cout << "  " << t.label << " x" << t.multiplicity << "  " << nmt::to_hex(t.key) << '\n';
  }
  std::cout << "counterexamples: " << r.counterexample_total;
  if (r.counterexample_total == 0) std::cout << " []";
  std::cout << '\n';
  std::cout << "wall_time_ms: " << r.wall_time_ms << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Non-monochromatic triangles in edge-coloured graphs"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate an extremal construction as .ecg");
  std::string family;
  int gen_n = 3, gen_m = 1, gen_k = 2, gen_color = 1;
  std::string gen_out;
  bool gen_dot = false;
  gen->add_option("family", family, "mono-clique | alt-c4 | hm | hm-plus | hmk")
      ->required()
      ->check(CLI::IsMember({"mono-clique", "alt-c4", "hm", "hm-plus", "hmk"}));
  gen->add_option("--n", gen_n, "Order of the monochromatic clique")->check(CLI::NonNegativeNumber);
  gen->add_option("--m", gen_m, "Part size m")->check(CLI::PositiveNumber);
  gen->add_option("--k", gen_k, "Number of colour classes")->check(CLI::Range(1, nmt::kMaxColors));
  gen->add_option("--color", gen_color, "Colour of the monochromatic clique")->check(CLI::PositiveNumber);
  gen->add_option("-o,--output", gen_out, "Output file (default stdout)");
  gen->add_flag("--dot", gen_dot, "Write Graphviz DOT instead of .ecg");

  // check / classify / dot
  std::string in_file = "-";
  bool in_graph6 = false;
  int in_k = 2;
  auto add_input = [&](CLI::App* sub) {
    sub->add_option("file", in_file, "Input .ecg file ('-' for stdin)");
    sub->add_flag("--graph6", in_graph6, "Read graph6 instead of .ecg (edges take colour 1)");
    sub->add_option("--k", in_k, "Colour classes for graph6 input")->check(CLI::Range(1, nmt::kMaxColors));
  };
  auto* check = app.add_subcommand("check", "Print statistics, premises and the first non-monochromatic triangle");
  add_input(check);
  auto* classify = app.add_subcommand("classify", "Classify a tight two-coloured graph");
  add_input(classify);
  auto* dot = app.add_subcommand("dot", "Render a graph as Graphviz DOT");
  add_input(dot);

  // iso
  auto* iso = app.add_subcommand("iso", "Test colour-permuting isomorphism of two .ecg files");
  std::string iso_a, iso_b;
  iso->add_option("file1", iso_a)->required();
  iso->add_option("file2", iso_b)->required();

  // search
  auto* search = app.add_subcommand("search", "Exhaustive sweep over all colourings of K_n");
  std::string mode_text;
  nmt::SearchSpec spec;
  std::string json_out;
  bool no_prune = false, binomial = false, weak = false;
  search->add_option("--mode", mode_text, "theorem | tight | lemma | conj1 | conj2 | claims")
      ->required()
      ->check(CLI::IsMember({"theorem", "tight", "lemma", "conj1", "conj2", "claims"}));
  search->add_option("--n", spec.n, "Number of vertices")->required()->check(CLI::Range(1, 64));
  search->add_option("--k", spec.k, "Number of colour classes")->check(CLI::Range(1, nmt::kMaxColors));
  search->add_option("--shards", spec.shards, "Parallel shards")->check(CLI::Range(1, 4096));
  search->add_flag("--dedup", spec.dedup, "Bucket results by canonical key");
  search->add_option("--budget", spec.budget, "Maximum number of leaves");
  search->add_option("--json", json_out, "Write the JSON report here ('-' for stdout)");
  search->add_flag("--no-prune", no_prune, "Evaluate every leaf directly");
  search->add_flag("--binomial", binomial, "conj1: compare against C(n,2) instead of n^2/2");
  search->add_flag("--weak", weak, "conj2: use >= instead of >");
  spec.dedup = false;

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*gen) {
      nmt::ColoredGraph g;
      if (family == "mono-clique") {
        if (gen_color > gen_k) throw UsageError("--color must not exceed --k");
        g = nmt::mono_clique(gen_n, gen_color, gen_k);
      } else if (family == "alt-c4") {
        g = nmt::alternating_c4();
      } else if (family == "hm") {
        g = nmt::h_m(gen_m);
      } else if (family == "hm-plus") {
        g = nmt::h_m_plus(gen_m);
      } else {
        g = nmt::h_m_k(gen_m, gen_k);
      }
      write_output(gen_out, gen_dot ? nmt::emit_dot(g) : nmt::emit_ecg(g));
      return kOk;
    }
    if (*check) return run_check(load(in_file, in_graph6, in_k));
    if (*dot) {
      std::cout << nmt::emit_dot(load(in_file, in_graph6, in_k));
      return kOk;
    }
    if (*classify) {
      const auto g = load(in_file, in_graph6, in_k);
      if (g.k() != 2) throw UsageError("classify needs a two-coloured graph");
      if (!nmt::main_premise_weak(g)) throw UsageError("premise not satisfied: |E| + min|E_i| < C(n,2)");
      const auto tc = nmt::classify_tight(g);
      std::cout << tc.label();
      if (tc.witness) std::cout << ' ' << describe(*tc.witness);
      std::cout << '\n';
      return tc.kind == nmt::TightKind::Violation ? kFound : kOk;
    }
    if (*iso) {
      const auto a = load(iso_a, false, 2);
      const auto b = load(iso_b, false, 2);
      const auto cert = nmt::are_isomorphic(a, b);
      if (!cert) {
        std::cout << "non-isomorphic\n";
        return kOk;
      }
      std::cout << "isomorphic\nvertex_map:";
      for (auto v : cert->vertex_map) std::cout << ' ' << v;
      std::cout << "\ncolor_perm:";
      for (std::size_t c = 1; c < cert->color_perm.size(); ++c) std::cout << ' ' << c << "->" << cert->color_perm[c];
      std::cout << '\n';
      return kOk;
    }
    if (*search) {
      spec.mode = *nmt::parse_mode(mode_text);
      spec.prune = !no_prune;
      spec.conj1_threshold = binomial ? nmt::Conj1Threshold::Binomial : nmt::Conj1Threshold::Square;
      spec.conj2_weak = weak;
      const auto report = nmt::run_search(spec);
      if (json_out == "-") {
        std::cout << nmt::to_json(report).dump(2) << '\n';
      } else {
        print_summary(report);
        if (!json_out.empty()) write_output(json_out, nmt::to_json(report).dump(2) + "\n");
      }
      return report.verified() ? kOk : kFound;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const nmt::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
