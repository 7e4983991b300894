#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <map>
#include <set>

#include "CLI11.hpp"
#include "commands.hpp"
#include "factlab/errors.hpp"

#ifndef FACTLAB_VERSION
#define FACTLAB_VERSION "0.0.0"
#endif

namespace factlab::cli {

namespace {

struct Subcommand {
  const char* name;
  const char* summary;
  std::set<std::string> groups;
};

const std::vector<Subcommand>& subcommands() {
  static const std::vector<Subcommand> s{
      {"erdos", "Count distinct n! mod p and check the p - 2 bound", {"primes"}},
      {"census", "Distinct factorials in a window [L+1, L+N]", {"primes", "window", "checkpoint"}},
      {"product", "Size of the product set of a factorial window", {"primes", "window"}},
      {"quotient", "Size of the quotient set of a factorial window", {"primes", "window"}},
      {"images", "Image sizes of falling products on a progression", {"primes", "js", "prog"}},
      {"intersect", "Shared values of two falling products on a progression",
       {"primes", "poly", "prog"}},
      {"langweil", "Affine point counts against the Lang-Weil window", {"primes", "poly"}},
      {"expsum", "Exponential sums over the zero set", {"primes", "poly", "expsum"}},
      {"dft", "Spectrum of a progression indicator", {"primes", "prog"}},
      {"fourier-bound", "Point counts in a progression box against the Fourier estimate",
       {"primes", "poly", "prog"}},
      {"union-check", "Union lower bound for the odd-window Y sets", {"prime", "js", "sizes"}},
      {"bounds", "Exponent and regime calculators", {"prime", "theorem"}},
      {"represent", "Write residues as products of bounded factorials", {"prime", "represent"}},
      {"reach", "Coverage of products of bounded factorials", {"prime", "reach"}},
      {"embed", "Check the Wilson embedding of falling products", {"prime", "sizes"}},
  };
  return s;
}

std::string join(const std::vector<std::string>& v, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
  return s;
}

void add_options(CLI::App& sub, RunConfig& cfg, const std::set<std::string>& g) {
  sub.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  sub.add_option("--output", cfg.output, "Write records to this file instead of stdout");
  sub.add_option("--seed", cfg.seed, "Seed for sampled inputs")->capture_default_str();
  sub.add_option("--threads", cfg.threads, "Worker threads")
      ->envname("FACTLAB_THREADS")
      ->check(CLI::Range(1u, 1024u))
      ->capture_default_str();
  sub.add_flag("--sort", cfg.sort, "Emit rows in canonical order even when threaded");
  sub.add_option("--budget", cfg.budget, "Work budget for pairwise set products")
      ->capture_default_str();
  sub.add_flag("!--no-wall-time", cfg.wall_time, "Omit wall time from JSON meta");

  if (g.count("primes") || g.count("prime")) sub.add_option("--p", cfg.p, "Odd prime modulus");
  if (g.count("primes")) sub.add_option("--range", cfg.range, "Every prime in lo:hi");
  if (g.count("js") || g.count("poly"))
    sub.add_option("--j", cfg.js, "Falling-product degrees")->delimiter(',')->capture_default_str();
  if (g.count("poly")) {
    sub.add_option("--k", cfg.ks, "First degrees; pairs every k with every j")->delimiter(',');
    sub.add_option("--pairs", cfg.pairs, "Pairs drawn from the --j list (k <= j)")
        ->check(CLI::IsMember({"all", "distinct", "equal"}))
        ->capture_default_str();
  }
  if (g.count("prog")) {
    sub.add_option("--start", cfg.start, "Progression start");
    sub.add_option("--step", cfg.step, "Progression step (nonzero)");
    sub.add_option("--length", cfg.length, "Progression length (1..p)");
    sub.add_option("--interval", cfg.interval, "Interval lo:hi inside [0, p)");
    sub.add_option("--random-progressions", cfg.random_progressions,
                   "Sample this many random progressions per prime");
  }
  if (g.count("window")) {
    sub.add_option("--L", cfg.L, "Window offset (default 0)");
    sub.add_option("--N", cfg.N, "Window length (default p - 1 - L)");
  }
  if (g.count("sizes")) {
    sub.add_option("--N", cfg.N, "Half-width of the factorial window");
    sub.add_option("--M", cfg.M, "Largest shift");
  }
  if (g.count("checkpoint")) {
    sub.add_option("--checkpoint-file", cfg.checkpoint_file, "Append p,n,value checkpoints here");
    sub.add_option("--checkpoint-every", cfg.checkpoint_every, "Checkpoint every this many terms");
    sub.add_flag("--resume", cfg.resume, "Start from the best checkpoint in the file");
  }
  if (g.count("expsum")) {
    sub.add_option("--b1", cfg.b1, "Frequency in x");
    sub.add_option("--b2", cfg.b2, "Frequency in y");
    sub.add_option("--samples", cfg.samples, "Random frequencies per curve")
        ->capture_default_str();
  }
  if (g.count("theorem")) {
    sub.add_option("--theorem", cfg.theorem, "1: exponents, 2: regime bound")
        ->check(CLI::IsMember({1, 2}))
        ->capture_default_str();
    sub.add_option("--N", cfg.N, "Window length for --theorem 2");
    sub.add_option("--c", cfg.constants.c, "Error-term constant")->capture_default_str();
    sub.add_option("--c1", cfg.constants.c1, "Regime threshold constant")->capture_default_str();
    sub.add_option("--c2", cfg.constants.c2, "Regime threshold constant")->capture_default_str();
    sub.add_option("--c3", cfg.constants.c3, "Regime threshold constant")->capture_default_str();
    sub.add_option("--c4", cfg.constants.c4, "Regime threshold constant")->capture_default_str();
    sub.add_option("--c5", cfg.constants.c5, "Regime threshold constant")->capture_default_str();
  }
  if (g.count("represent") || g.count("reach")) {
    sub.add_option("--k", cfg.k_count, "Number of factorials (1..7, default 7)");
    sub.add_option("--B", cfg.B, "Largest factorial argument (default ceil(p^(6/7+0.05)))");
  }
  if (g.count("represent")) {
    sub.add_option("--a", cfg.targets, "Target residues, or 'all'")->delimiter(',');
    sub.add_option("--method", cfg.method, "search: bounded product; wilson: three factorials")
        ->check(CLI::IsMember({"search", "wilson"}))
        ->capture_default_str();
  }
}

nlohmann::ordered_json config_echo(const CLI::App& sub) {
  nlohmann::ordered_json echo = nlohmann::ordered_json::object();
  for (const CLI::Option* opt : sub.get_options()) {
    if (opt->count() == 0 || opt->get_lnames().empty()) continue;
    const std::string& name = opt->get_lnames().front();
    if (name == "help" || name == "output") continue;
    const auto results = opt->results();
    echo[name] = opt->get_expected_max() == 0
                     ? nlohmann::ordered_json(name.rfind("no-", 0) != 0)
                     : nlohmann::ordered_json(join(results, ","));
  }
  return echo;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Factorial residue laboratory"};
  app.set_version_flag("--version", FACTLAB_VERSION);
  app.require_subcommand(1);

  RunConfig cfg;
  std::map<std::string, CLI::App*> subs;
  for (const auto& s : subcommands()) {
    CLI::App* sub = app.add_subcommand(s.name, s.summary);
    add_options(*sub, cfg, s.groups);
    if (std::string(s.name) == "bounds") {
      sub->footer("Columns (--theorem 1): " + join(schema("bounds", 1), ",") +
                  "\nColumns (--theorem 2): " + join(schema("bounds", 2), ","));
    } else {
      sub->footer("Columns: " + join(schema(s.name), ","));
    }
    subs[s.name] = sub;
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  for (const auto& [name, sub] : subs)
    if (sub->parsed()) cfg.subcommand = name;

  try {
    std::ofstream file;
    if (!cfg.output.empty()) {
      file.open(cfg.output);
      if (!file) throw UsageError("cannot open --output " + cfg.output);
    }
    std::ostream& sink = cfg.output.empty() ? out : file;

    nlohmann::ordered_json meta{{"tool", "factlab"},
                                {"version", FACTLAB_VERSION},
                                {"subcommand", cfg.subcommand},
                                {"config", config_echo(*subs.at(cfg.subcommand))}};
    RecordWriter writer(sink, cfg.output_format(), schema(cfg.subcommand, cfg.theorem),
                        std::move(meta), cfg.wall_time);
    const auto t0 = std::chrono::steady_clock::now();
    const bool ok = run_command(cfg, writer);
    writer.finish(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    sink.flush();
    return ok ? kOk : kCheckFailed;
  } catch (const UsageError& e) {
    err << "factlab: " << e.what() << '\n';
    return kUsage;
  } catch (const BudgetError& e) {
    err << "factlab: " << e.what() << " (raise --budget)\n";
    return kBudget;
  } catch (const NotRepresentableError& e) {
    err << "factlab: " << e.what() << '\n';
    return kCheckFailed;
  } catch (const RangeError& e) {
    err << "factlab: " << e.what() << '\n';
    return kUsage;
  } catch (const PreconditionError& e) {
    err << "factlab: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "factlab: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "factlab: internal error: " << e.what() << '\n';
    return kCheckFailed;
  }
}

}  // namespace factlab::cli
