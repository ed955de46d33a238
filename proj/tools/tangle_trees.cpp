#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "tangles/gauss_diagram.hpp"
#include "tangles/magnus.hpp"
#include "tangles/moves.hpp"
#include "tangles/operad.hpp"
#include "tangles/pairing.hpp"
#include "tangles/verify.hpp"

using nlohmann::json;
using namespace tangles;

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Accepts either text format, told apart by the header word.
GaussDiagram load_diagram(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    if (line.compare(start, 5, "gauss") == 0) return parse_gauss(text);
    if (line.compare(start, 5, "braid") == 0) {
      auto [n, word] = parse_braid(text);
      return braid_to_gauss(n, word);
    }
    break;
  }
  throw std::runtime_error("unrecognized input format (expected `gauss 1` or `braid`)");
}

struct ComputeOptions {
  std::string input;
  std::string braid;
  int trunk = 1;
  int max_degree = -1;
  bool lower = false;
  std::string format = "json";
};

GaussDiagram resolve_diagram(const ComputeOptions& opt) {
  if (!opt.braid.empty()) {
    auto [n, word] = parse_braid(opt.braid);
    return braid_to_gauss(n, word);
  }
  if (!opt.input.empty()) return load_diagram(read_input(opt.input));
  throw std::runtime_error("one of --input or --braid is required");
}

json config_json(const std::string& command, const ComputeOptions& opt) {
  return json{{"command", command},
              {"input", opt.input.empty() ? json() : json(opt.input)},
              {"braid", opt.braid.empty() ? json() : json(opt.braid)},
              {"trunk", opt.trunk},
              {"max_degree", opt.max_degree},
              {"lower", opt.lower},
              {"format", opt.format}};
}

json terms_json(const std::map<std::vector<int>, std::int64_t>& coeffs) {
  json terms = json::array();
  for (const auto& [leaves, coeff] : coeffs)
    terms.push_back(json{{"leaves", leaves}, {"coeff", coeff}});
  return terms;
}

void print_result(const json& config, int trunk, int max_degree, bool lower,
                  const std::map<std::vector<int>, std::int64_t>& coeffs,
                  const std::string& format, const char* oracle) {
  if (format == "tsv") {
    json cfg = config;
    std::cout << "# " << cfg.dump() << "\n";
    std::cout << "trunk\tleaves\tcoeff\n";
    for (const auto& [leaves, coeff] : coeffs) {
      std::cout << trunk << "\t";
      if (leaves.empty()) {
        std::cout << "-";
      } else {
        for (size_t i = 0; i < leaves.size(); ++i)
          std::cout << (i ? "," : "") << leaves[i];
      }
      std::cout << "\t" << coeff << "\n";
    }
    return;
  }
  json out{{"config", config},
           {"trunk", trunk},
           {"max_degree", max_degree},
           {"lower", lower},
           {"terms", terms_json(coeffs)}};
  if (oracle) out["oracle"] = oracle;
  std::cout << out.dump(2) << "\n";
}

int cmd_compute(const ComputeOptions& opt, bool use_magnus) {
  GaussDiagram g = resolve_diagram(opt);
  int n = g.string_count();
  if (opt.trunk < 1 || opt.trunk > n)
    throw std::runtime_error("trunk out of range for a diagram on " + std::to_string(n) +
                             " strings");
  int d = opt.max_degree < 0 ? n - 1 : opt.max_degree;
  std::map<std::vector<int>, std::int64_t> coeffs;
  if (!use_magnus) {
    TreeInvariantResult res = z_invariant(g, opt.trunk, d, opt.lower);
    coeffs = res.coefficients;
  } else {
    GaussDiagram target = opt.lower ? reverse_all_arrows(g) : g;
    MagnusOracle oracle(target);
    coeffs[{}] = 1;
    std::vector<int> others;
    for (int s = 1; s <= n; ++s)
      if (s != opt.trunk) others.push_back(s);
    int m = static_cast<int>(others.size());
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
      if (__builtin_popcount(mask) > d) continue;
      std::vector<int> I;
      for (int b = 0; b < m; ++b)
        if (mask & (1u << b)) I.push_back(others[static_cast<size_t>(b)]);
      std::int64_t c = oracle.mu(I, opt.trunk);
      if (c != 0) coeffs[I] = c;
    }
  }
  print_result(config_json(use_magnus ? "compute-mu" : "compute", opt), opt.trunk, d,
               opt.lower, coeffs, opt.format, use_magnus ? "magnus" : nullptr);
  return 0;
}

int cmd_verify(const std::string& suite, const verify::SuiteConfig& cfg) {
  verify::SuiteReport rep = verify::run_suite(suite, cfg);
  json out{{"config",
            {{"command", "verify"},
             {"suite", suite},
             {"seed", cfg.seed},
             {"cases", cfg.cases},
             {"max_strings", cfg.max_strings},
             {"max_arrows", cfg.max_arrows},
             {"max_degree", cfg.max_degree},
             {"threads", cfg.threads}}},
           {"suite", rep.suite},
           {"cases_run", rep.cases_run},
           {"passed", rep.passed()},
           {"notes", rep.notes}};
  json fails = json::array();
  for (const auto& f : rep.failures)
    fails.push_back(json{{"case", f.index}, {"detail", f.detail}, {"diagram", f.diagram}});
  out["failures"] = fails;
  std::cout << out.dump(2) << "\n";
  return rep.passed() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"tree invariants of classical and virtual tangles from Gauss diagrams"};
  app.require_subcommand(1);

  ComputeOptions copt;
  auto add_compute_flags = [&](CLI::App* sub) {
    sub->add_option("--input", copt.input, "gauss or braid file, - for stdin");
    sub->add_option("--braid", copt.braid, "inline braid word, e.g. \"3: 1 -2 1\"");
    sub->add_option("--trunk", copt.trunk, "trunk string index")->required();
    sub->add_option("--max-degree", copt.max_degree, "largest leaf-set size (default n-1)");
    sub->add_flag("--lower", copt.lower, "lower invariants (reverse all arrows first)");
    sub->add_option("--format", copt.format, "json or tsv")
        ->check(CLI::IsMember({"json", "tsv"}));
  };
  CLI::App* compute = app.add_subcommand("compute", "tree invariant coefficients");
  add_compute_flags(compute);
  CLI::App* compute_mu = app.add_subcommand("compute-mu", "Magnus-expansion oracle");
  add_compute_flags(compute_mu);

  verify::SuiteConfig vcfg;
  std::string suite;
  CLI::App* ver = app.add_subcommand("verify", "run a verification suite");
  ver->add_option("suite", suite, "one of reidemeister, skein, properties, dias, mu-equality, operad")
      ->required();
  ver->add_option("--seed", vcfg.seed, "base seed");
  ver->add_option("--cases", vcfg.cases, "number of cases");
  ver->add_option("--max-strings", vcfg.max_strings, "string-count bound");
  ver->add_option("--max-arrows", vcfg.max_arrows, "arrow-count bound");
  ver->add_option("--max-degree", vcfg.max_degree, "degree bound");
  ver->add_option("--threads", vcfg.threads, "worker cap (0 = auto)");

  int rnd_strings = 3, rnd_arrows = 6;
  std::uint64_t rnd_seed = 1;
  CLI::App* rnd = app.add_subcommand("random", "generate a seeded random diagram");
  rnd->add_option("--strings", rnd_strings, "string count")->required();
  rnd->add_option("--arrows", rnd_arrows, "arrow count")->required();
  rnd->add_option("--seed", rnd_seed, "seed");

  std::string comp_outer, comp_inner;
  int comp_at = 1, comp_trunk_outer = 1, comp_trunk_inner = 1;
  CLI::App* comp = app.add_subcommand("compose", "satellite composition of tree tangles");
  comp->add_option("--outer", comp_outer, "outer diagram file")->required();
  comp->add_option("--inner", comp_inner, "inner diagram file")->required();
  comp->add_option("--at", comp_at, "outer string receiving the inner tangle")->required();
  comp->add_option("--trunk-outer", comp_trunk_outer, "outer trunk")->required();
  comp->add_option("--trunk-inner", comp_trunk_inner, "inner trunk")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (compute->parsed()) return cmd_compute(copt, false);
    if (compute_mu->parsed()) return cmd_compute(copt, true);
    if (ver->parsed()) return cmd_verify(suite, vcfg);
    if (rnd->parsed()) {
      std::cout << serialize_gauss(random_diagram(rnd_strings, rnd_arrows, rnd_seed));
      return 0;
    }
    if (comp->parsed()) {
      TreeTangle outer = cap(load_diagram(read_input(comp_outer)), comp_trunk_outer);
      TreeTangle inner = cap(load_diagram(read_input(comp_inner)), comp_trunk_inner);
      TreeTangle result = compose(outer, comp_at, inner);
      std::cout << serialize_gauss(result.gauss);
      std::cout << "# " << json{{"trunk", result.trunk}}.dump() << "\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
