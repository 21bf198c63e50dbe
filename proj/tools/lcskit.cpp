#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "lcskit/errors.hpp"
#include "lcskit/oracle.hpp"
#include "lcskit/relative.hpp"
#include "lcskit/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitResource = 3;
constexpr int kExitMismatch = 4;

struct RunConfig {
  std::string input;
  int max_weight = 4;
  std::string format = "table";
  std::int64_t length_cap = 1'000'000;
  bool cyclic_reduce = false;
  bool self_test = false;
  bool show_basics = false;
};

int fail(int code, const std::string& what) {
  std::cerr << "error: " << what << '\n';
  return code;
}

int self_test(const RunConfig& cfg) {
  int mismatches = 0;
  for (const auto& c : lcs::oracle_catalog()) {
    for (const auto& r : lcs::compare_with_oracle(c, cfg.max_weight)) {
      std::cout << (r.agree ? "ok        " : "MISMATCH  ") << c.name << "  n=" << r.n << "  engine "
                << lcs::to_string(r.engine) << "  oracle " << lcs::to_string(r.oracle) << " [" << r.model
                << "]\n";
      if (!r.agree) {
        ++mismatches;
        std::cerr << "diagnostic: " << c.name << " weight " << r.n
                  << ": relative construction disagrees with the concrete model; the stage generators"
                     " may not span R meet gamma_n modulo gamma_(n+1)\n";
      }
    }
  }
  std::cout << (mismatches ? "self-test FAILED: " + std::to_string(mismatches) + " mismatches\n"
                           : std::string("self-test passed\n"));
  return mismatches ? kExitMismatch : kExitOk;
}

int run(const RunConfig& cfg) {
  if (cfg.self_test && cfg.input.empty()) return self_test(cfg);

  std::ifstream in(cfg.input);
  if (!in) return fail(kExitUsage, "cannot read " + cfg.input);
  std::stringstream buf;
  buf << in.rdbuf();

  lcs::Presentation p = lcs::parse_presentation(buf.str());
  if (cfg.cyclic_reduce) p = lcs::cyclically_reduced(p);

  lcs::EngineOptions options;
  options.max_weight = cfg.max_weight;
  options.length_cap = cfg.length_cap;
  lcs::LcsEngine engine(p, options);
  const lcs::LcsReport report = engine.report();

  if (cfg.format == "json")
    std::cout << lcs::render_json(report) << '\n';
  else
    std::cout << lcs::render_table(report);
  if (cfg.show_basics)
    std::cout << lcs::render_basics(engine.stages(), engine.collector().basis(), p.generator_names);

  return cfg.self_test ? self_test(cfg) : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  if (const char* env = std::getenv("LCSKIT_LENGTH_CAP")) {
    try {
      cfg.length_cap = std::stoll(env);
    } catch (const std::exception&) {
      return fail(kExitUsage, std::string("usage: LCSKIT_LENGTH_CAP is not an integer: ") + env);
    }
  }

  CLI::App app{"Lower central factors of a finitely presented group"};
  app.add_option("file", cfg.input, "Presentation file");
  app.add_option("--max-weight", cfg.max_weight, "Largest weight n to compute")->check(CLI::Range(1, 8));
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"table", "json"}));
  app.add_flag("--show-basics", cfg.show_basics, "List basics and R-basics per weight");
  app.add_flag("--cyclic-reduce", cfg.cyclic_reduce, "Cyclically reduce relators first");
  app.add_flag("--self-test", cfg.self_test, "Compare against the concrete-group catalog");
  app.add_option("--length-cap", cfg.length_cap, "Longest intermediate word during collection")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail(kExitUsage, std::string("usage: ") + e.what());
  }
  if (cfg.input.empty() && !cfg.self_test) return fail(kExitUsage, "usage: no input file");

  try {
    return run(cfg);
  } catch (const lcs::ParseError& e) {
    return fail(kExitParse, e.what());
  } catch (const lcs::ResourceLimit& e) {
    return fail(kExitResource, e.what());
  } catch (const std::exception& e) {
    return fail(kExitUsage, e.what());
  }
}
