#include "commands.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

#include "factlab/census.hpp"
#include "factlab/constructions.hpp"
#include "factlab/errors.hpp"
#include "factlab/factorial.hpp"
#include "factlab/factorizer.hpp"
#include "factlab/fourier.hpp"
#include "factlab/point_counts.hpp"
#include "factlab/theorem_params.hpp"
#include "factlab/union_bound.hpp"

namespace factlab::cli {

namespace {

const std::map<std::string, std::vector<std::string>>& schemas() {
  static const std::map<std::string, std::vector<std::string>> s{
      {"erdos", {"p", "card", "p_minus_2", "ok"}},
      {"census", {"p", "L", "N", "card", "ratio", "deviation"}},
      {"product", {"p", "L", "N", "card_A", "card_AA", "binomial_bound", "ok"}},
      {"quotient", {"p", "L", "N", "card_A", "card_quot", "ok"}},
      {"images",
       {"p", "j", "start", "step", "length", "image_card", "j_interval", "cs_bound", "ok"}},
      {"intersect",
       {"p", "k", "j", "start", "step", "length", "intersection", "j_interval", "ok"}},
      {"langweil",
       {"p", "k", "j", "degree", "observed", "reference", "bound", "satisfied"}},
      {"expsum",
       {"p", "k", "j", "b1", "b2", "degree", "magnitude", "bound", "satisfied"}},
      {"dft",
       {"p", "start", "step", "length", "l1", "l1_over_plogp", "parseval_ok", "inversion_ok"}},
      {"fourier-bound",
       {"p", "k", "j", "start", "step", "length", "observed", "reference", "bound",
        "satisfied"}},
      {"union-check",
       {"p", "N", "M", "js", "a", "b", "n", "bound", "union", "applicable", "ok"}},
      {"bounds1",
       {"p", "kappa", "eps1", "eps2", "delta", "N", "M", "K", "Q", "constraints_hold",
        "delta_positive"}},
      {"bounds2",
       {"p", "N", "regime", "K", "Q", "kappa", "bound", "error_term", "R", "M",
        "thresholds_ordered"}},
      {"represent", {"p", "a", "k", "B", "factors", "max_factor", "verified"}},
      {"reach", {"p", "B", "k", "level", "card", "covers_all"}},
      {"embed", {"p", "N", "M", "ok", "checked"}},
  };
  return s;
}

// Runs body(i) for i in [0, n) on up to `threads` workers pulling indices
// from a shared counter.
template <typename F>
void parallel_for(std::size_t n, unsigned threads, F&& body) {
  const unsigned workers =
      static_cast<unsigned>(std::min<std::size_t>(std::max(1u, threads), n));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t i; (i = next.fetch_add(1)) < n;) {
          try {
            body(i);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            next.store(n);
          }
        }
      });
  }
  if (failure) std::rethrow_exception(failure);
}

std::pair<u64, u64> parse_span(const std::string& text, const char* flag) {
  const auto colon = text.find(':');
  if (colon == std::string::npos)
    throw UsageError(std::string(flag) + " expects lo:hi, got '" + text + "'");
  try {
    std::size_t used = 0;
    const u64 lo = std::stoull(text.substr(0, colon), &used);
    if (used != colon) throw std::invalid_argument("lo");
    const std::string rest = text.substr(colon + 1);
    const u64 hi = std::stoull(rest, &used);
    if (used != rest.size()) throw std::invalid_argument("hi");
    if (lo > hi) throw UsageError(std::string(flag) + " is empty: " + text);
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw UsageError(std::string(flag) + " expects lo:hi, got '" + text + "'");
  }
}

FieldCtx make_field(u64 p) {
  if (p < 3 || !is_prime_u64(p) || p >= (u64{1} << 63))
    throw UsageError("--p must be an odd prime below 2^63, got " + std::to_string(p));
  return FieldCtx(p);
}

std::vector<u64> selected_primes(const RunConfig& cfg) {
  if (cfg.p && !cfg.range.empty())
    throw UsageError("give either --p or --range, not both");
  if (cfg.p) {
    make_field(*cfg.p);
    return {*cfg.p};
  }
  if (cfg.range.empty()) throw UsageError("--p or --range is required");
  const auto [lo, hi] = parse_span(cfg.range, "--range");
  auto primes = primes_in_range(std::max<u64>(lo, 3), hi);
  if (primes.empty()) throw UsageError("--range " + cfg.range + " holds no odd prime");
  return primes;
}

u64 single_prime(const RunConfig& cfg) {
  if (!cfg.p) throw UsageError("--p is required");
  make_field(*cfg.p);
  return *cfg.p;
}

std::vector<std::pair<int, int>> selected_pairs(const RunConfig& cfg) {
  for (int j : cfg.js)
    if (j < 1) throw UsageError("--j entries must be >= 1");
  std::vector<std::pair<int, int>> out;
  if (!cfg.ks.empty()) {
    for (int k : cfg.ks) {
      if (k < 1) throw UsageError("--k entries must be >= 1");
      for (int j : cfg.js)
        if (cfg.pairs != "distinct" || k != j) out.emplace_back(k, j);
    }
    return out;
  }
  if (cfg.pairs != "all" && cfg.pairs != "distinct" && cfg.pairs != "equal")
    throw UsageError("--pairs must be all, distinct or equal");
  std::vector<int> js = cfg.js;
  std::sort(js.begin(), js.end());
  js.erase(std::unique(js.begin(), js.end()), js.end());
  for (std::size_t a = 0; a < js.size(); ++a)
    for (std::size_t b = a; b < js.size(); ++b) {
      const bool equal = a == b;
      if ((cfg.pairs == "distinct" && equal) || (cfg.pairs == "equal" && !equal)) continue;
      out.emplace_back(js[a], js[b]);
    }
  return out;
}

Poly falling(const FieldCtx& ctx, int j) {
  if (static_cast<u64>(j) >= ctx.modulus())
    throw UsageError("degree " + std::to_string(j) + " must be below p");
  return falling_product_poly(ctx, j);
}

std::vector<Progression> selected_progressions(const RunConfig& cfg, const FieldCtx& ctx,
                                               std::mt19937_64& rng) {
  const u64 p = ctx.modulus();
  std::vector<Progression> out;
  if (cfg.random_progressions > 0) {
    for (u64 i = 0; i < cfg.random_progressions; ++i)
      out.push_back({rng() % p, rng() % (p - 1) + 1, rng() % p + 1});
    return out;
  }
  if (!cfg.interval.empty()) {
    const auto [lo, hi] = parse_span(cfg.interval, "--interval");
    if (hi >= p) throw UsageError("--interval must lie inside [0, p)");
    out.push_back(Progression::interval(lo, hi));
    return out;
  }
  Progression I = Progression::full(p);
  if (cfg.start) I.start = *cfg.start;
  if (cfg.step) I.step = *cfg.step;
  if (cfg.length) I.length = *cfg.length;
  try {
    validate(ctx, I);
  } catch (const PreconditionError& e) {
    throw UsageError(std::string("bad progression: ") + e.what());
  }
  out.push_back(I);
  return out;
}

u64 default_bound(u64 p) {
  const double b = std::ceil(std::pow(static_cast<double>(p), 6.0 / 7.0 + 0.05));
  return std::min<u64>(static_cast<u64>(b), p - 1);
}

std::string join(const std::vector<u64>& v, char sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? std::string(1, sep) : "") + std::to_string(v[i]);
  return s;
}

// Rows computed per unit, flattened in unit order.
struct Collected {
  std::vector<std::vector<Row>> units;
  std::vector<char> ok;

  explicit Collected(std::size_t n) : units(n), ok(n, 1) {}

  bool write(RecordWriter& w) const {
    for (const auto& rows : units)
      for (const auto& r : rows) w.write(r);
    return std::all_of(ok.begin(), ok.end(), [](char c) { return c != 0; });
  }
};

std::pair<u64, u64> window_for(const RunConfig& cfg, u64 p) {
  const u64 L = cfg.L.value_or(0);
  if (L >= p - 1) throw UsageError("--L must be below p - 1");
  const u64 N = cfg.N.value_or(p - 1 - L);
  if (N < 1 || N > p - 1 - L) throw UsageError("--N must satisfy 1 <= N and L + N <= p - 1");
  return {L, N};
}

// ---------------------------------------------------------------- commands

bool cmd_erdos(const RunConfig& cfg, RecordWriter& w) {
  u64 lo, hi;
  if (cfg.p) {
    lo = hi = *cfg.p;
  } else {
    if (cfg.range.empty()) throw UsageError("--range lo:hi is required");
    std::tie(lo, hi) = parse_span(cfg.range, "--range");
  }
  if (lo < 7)
    throw UsageError("erdos needs primes >= 7: |A(5)| = 3 = p - 2 is a genuine exception");
  auto row = [](const ErdosRecord& r) {
    return Row{{"p", r.p}, {"card", r.card}, {"p_minus_2", r.p - 2}, {"ok", r.ok()}};
  };
  bool all_ok = true;
  if (cfg.threads > 1 && !cfg.sort) {
    // Stream in completion order; the census serializes the callback.
    erdos_census(lo, hi, cfg.threads, [&](const ErdosRecord& r) {
      w.write(row(r));
      all_ok = all_ok && r.ok();
    });
    return all_ok;
  }
  for (const auto& r : erdos_census(lo, hi, cfg.threads)) {
    w.write(row(r));
    all_ok = all_ok && r.ok();
  }
  return all_ok;
}

ResidueSet census_set(const RunConfig& cfg, const FieldCtx& ctx, u64 L, u64 N,
                      std::mutex& file_mutex) {
  if (cfg.checkpoint_file.empty()) return factorial_set(ctx, L, N);
  const u64 p = ctx.modulus();
  std::optional<Checkpoint> resume;
  if (cfg.resume) {
    std::lock_guard lock(file_mutex);
    std::ifstream in(cfg.checkpoint_file);
    if (in) {
      // Only positions at or before the window start help.
      std::string line;
      while (std::getline(in, line)) {
        if (line.empty()) continue;
        const Checkpoint cp = parse_checkpoint(line);
        if (cp.p == p && cp.n <= L + 1 && (!resume || cp.n > resume->n)) resume = cp;
      }
    }
  }
  FactorialScan scan(ctx, L + 1, L + N, resume);
  ResidueSet out(p);
  std::vector<Checkpoint> marks;
  u64 emitted = 0;
  while (auto term = scan.next()) {
    out.insert(term->value);
    if (cfg.checkpoint_every && ++emitted % cfg.checkpoint_every == 0)
      marks.push_back(scan.checkpoint());
  }
  marks.push_back(Checkpoint{p, L + N, factorial(ctx, L + N)});
  std::lock_guard lock(file_mutex);
  std::ofstream log(cfg.checkpoint_file, std::ios::app);
  if (!log) throw UsageError("cannot append to " + cfg.checkpoint_file);
  for (const auto& cp : marks) log << format_checkpoint(cp) << '\n';
  return out;
}

bool cmd_census(const RunConfig& cfg, RecordWriter& w) {
  const auto primes = selected_primes(cfg);
  Collected c(primes.size());
  std::mutex file_mutex;
  parallel_for(primes.size(), cfg.threads, [&](std::size_t i) {
    const u64 p = primes[i];
    const FieldCtx ctx(p);
    const auto [L, N] = window_for(cfg, p);
    const u64 card = census_set(cfg, ctx, L, N, file_mutex).size();
    const double ratio = static_cast<double>(card) / static_cast<double>(p);
    c.units[i].push_back(Row{{"p", p}, {"L", L}, {"N", N}, {"card", card},
                             {"ratio", ratio}, {"deviation", ratio - (1.0 - std::exp(-1.0))}});
  });
  return c.write(w);
}

bool cmd_product(const RunConfig& cfg, RecordWriter& w, bool quotient) {
  const auto primes = selected_primes(cfg);
  Collected c(primes.size());
  parallel_for(primes.size(), cfg.threads, [&](std::size_t i) {
    const u64 p = primes[i];
    const FieldCtx ctx(p);
    const auto [L, N] = window_for(cfg, p);
    const ResidueSet A = factorial_set(ctx, L, N);
    const u64 m = A.size();
    if (quotient) {
      const u64 q = quotient_set_card(A, A, cfg.budget);
      const bool ok = q <= m * m;
      c.ok[i] = ok;
      c.units[i].push_back(Row{{"p", p}, {"L", L}, {"N", N}, {"card_A", m},
                               {"card_quot", q}, {"ok", ok}});
    } else {
      const u64 pp = product_set_card(A, A, cfg.budget);
      const u64 ceiling = m * (m + 1) / 2;
      const bool ok = pp <= ceiling;
      c.ok[i] = ok;
      c.units[i].push_back(Row{{"p", p}, {"L", L}, {"N", N}, {"card_A", m},
                               {"card_AA", pp}, {"binomial_bound", ceiling}, {"ok", ok}});
    }
  });
  return c.write(w);
}

bool cmd_images(const RunConfig& cfg, RecordWriter& w) {
  const auto primes = selected_primes(cfg);
  std::mt19937_64 rng(cfg.seed);
  struct Unit {
    u64 p;
    int j;
    Progression I;
  };
  std::vector<Unit> units;
  for (u64 p : primes) {
    const FieldCtx ctx(p);
    for (const auto& I : selected_progressions(cfg, ctx, rng))
      for (int j : cfg.js) units.push_back({p, j, I});
  }
  Collected c(units.size());
  parallel_for(units.size(), cfg.threads, [&](std::size_t i) {
    const auto& [p, j, I] = units[i];
    const FieldCtx ctx(p);
    const Poly P = falling(ctx, j);
    const u64 img = image_count(ctx, P, I);
    const u64 JI = count_interval(ctx, P, P, I);
    const u128 n = I.length;
    const bool ok = static_cast<u128>(img) * (n + JI) >= n * n;
    c.ok[i] = ok;
    c.units[i].push_back(Row{{"p", p}, {"j", j}, {"start", I.start}, {"step", I.step},
                             {"length", I.length}, {"image_card", img}, {"j_interval", JI},
                             {"cs_bound", static_cast<double>(n * n) / static_cast<double>(n + JI)},
                             {"ok", ok}});
  });
  return c.write(w);
}

bool cmd_intersect(const RunConfig& cfg, RecordWriter& w) {
  const auto primes = selected_primes(cfg);
  std::mt19937_64 rng(cfg.seed);
  RunConfig distinct = cfg;
  distinct.pairs = "distinct";
  const auto pairs = selected_pairs(distinct);
  if (pairs.empty()) throw UsageError("intersect needs at least two distinct degrees");
  struct Unit {
    u64 p;
    int k, j;
    Progression I;
  };
  std::vector<Unit> units;
  for (u64 p : primes) {
    const FieldCtx ctx(p);
    for (const auto& I : selected_progressions(cfg, ctx, rng))
      for (auto [k, j] : pairs) units.push_back({p, k, j, I});
  }
  Collected c(units.size());
  parallel_for(units.size(), cfg.threads, [&](std::size_t i) {
    const auto& [p, k, j, I] = units[i];
    const FieldCtx ctx(p);
    const Poly P = falling(ctx, k), Q = falling(ctx, j);
    const u64 inter = intersection_count(ctx, P, Q, I);
    const u64 JI = count_interval(ctx, P, Q, I);
    c.ok[i] = inter <= JI;
    c.units[i].push_back(Row{{"p", p}, {"k", k}, {"j", j}, {"start", I.start},
                             {"step", I.step}, {"length", I.length},
                             {"intersection", inter}, {"j_interval", JI}, {"ok", inter <= JI}});
  });
  return c.write(w);
}

Row report_row(u64 p, int k, int j, const CountReport& r) {
  return Row{{"p", p},
             {"k", k},
             {"j", j},
             {"degree", r.degree},
             {"observed", static_cast<u64>(r.observed)},
             {"reference", static_cast<u64>(r.reference)},
             {"bound", r.bound},
             {"satisfied", r.satisfied}};
}

bool cmd_langweil(const RunConfig& cfg, RecordWriter& w) {
  const auto primes = selected_primes(cfg);
  const auto pairs = selected_pairs(cfg);
  Collected c(primes.size());
  parallel_for(primes.size(), cfg.threads, [&](std::size_t i) {
    const FieldCtx ctx(primes[i]);
    for (auto [k, j] : pairs) {
      const CountReport r = langweil_report(ctx, falling(ctx, k), falling(ctx, j));
      c.ok[i] = c.ok[i] && r.satisfied;
      c.units[i].push_back(report_row(primes[i], k, j, r));
    }
  });
  return c.write(w);
}

bool cmd_expsum(const RunConfig& cfg, RecordWriter& w) {
  const auto primes = selected_primes(cfg);
  const auto pairs = selected_pairs(cfg);
  if (cfg.b1.has_value() != cfg.b2.has_value())
    throw UsageError("--b1 and --b2 go together");
  std::mt19937_64 rng(cfg.seed);
  struct Unit {
    u64 p;
    int k, j;
    u64 b1, b2;
  };
  std::vector<Unit> units;
  for (u64 p : primes)
    for (auto [k, j] : pairs) {
      if (cfg.b1) {
        if (*cfg.b1 >= p || *cfg.b2 >= p) throw UsageError("--b1/--b2 must be below p");
        if (*cfg.b1 == 0 && *cfg.b2 == 0) throw UsageError("(b1, b2) must be nonzero");
        units.push_back({p, k, j, *cfg.b1, *cfg.b2});
        continue;
      }
      for (u64 s = 0; s < cfg.samples; ++s) {
        u64 b1 = 0, b2 = 0;
        while (b1 == 0 && b2 == 0) b1 = rng() % p, b2 = rng() % p;
        units.push_back({p, k, j, b1, b2});
      }
    }
  Collected c(units.size());
  parallel_for(units.size(), cfg.threads, [&](std::size_t i) {
    const auto& [p, k, j, b1, b2] = units[i];
    const FieldCtx ctx(p);
    const CountReport r = exp_sum_check(ctx, falling(ctx, k), falling(ctx, j), Residue{b1}, Residue{b2});
    c.ok[i] = r.satisfied;
    c.units[i].push_back(Row{{"p", p}, {"k", k}, {"j", j}, {"b1", b1}, {"b2", b2},
                             {"degree", r.degree}, {"magnitude", r.observed},
                             {"bound", r.bound}, {"satisfied", r.satisfied}});
  });
  return c.write(w);
}

bool cmd_dft(const RunConfig& cfg, RecordWriter& w) {
  const auto primes = selected_primes(cfg);
  std::mt19937_64 rng(cfg.seed);
  struct Unit {
    u64 p;
    Progression I;
    std::vector<u64> probes;
  };
  std::vector<Unit> units;
  for (u64 p : primes) {
    const FieldCtx ctx(p);
    for (const auto& I : selected_progressions(cfg, ctx, rng)) {
      std::vector<u64> probes{I.start};
      if (I.length < p) probes.push_back((element(ctx, I, I.length - 1) + I.step) % p);
      for (int t = 0; t < 14; ++t) probes.push_back(rng() % p);
      units.push_back({p, I, probes});
    }
  }
  Collected c(units.size());
  parallel_for(units.size(), cfg.threads, [&](std::size_t i) {
    const auto& [p, I, probes] = units[i];
    const FieldCtx ctx(p);
    const SpectrumReport s = spectrum(ctx, I);
    double energy = 0;
    for (double m : s.magnitudes) energy += m * m;
    const double want = static_cast<double>(p) * static_cast<double>(I.length);
    const bool parseval = std::abs(energy - want) <= 1e-4 * want;
    const auto transform = complex_spectrum(ctx, I);
    bool inversion = true;
    for (u64 x : probes) {
      const double target = contains(ctx, I, x) ? 1.0 : 0.0;
      inversion = inversion && std::abs(reconstruct_indicator(ctx, transform, x) - target) <=
                                   kInversionTolerance;
    }
    c.ok[i] = parseval && inversion;
    const double plogp = static_cast<double>(p) * std::log(static_cast<double>(p));
    c.units[i].push_back(Row{{"p", p}, {"start", I.start}, {"step", I.step},
                             {"length", I.length}, {"l1", s.l1}, {"l1_over_plogp", s.l1 / plogp},
                             {"parseval_ok", parseval}, {"inversion_ok", inversion}});
  });
  return c.write(w);
}

bool cmd_fourier_bound(const RunConfig& cfg, RecordWriter& w) {
  const auto primes = selected_primes(cfg);
  const auto pairs = selected_pairs(cfg);
  std::mt19937_64 rng(cfg.seed);
  struct Unit {
    u64 p;
    int k, j;
    Progression I;
  };
  std::vector<Unit> units;
  for (u64 p : primes) {
    const FieldCtx ctx(p);
    for (const auto& I : selected_progressions(cfg, ctx, rng))
      for (auto [k, j] : pairs) units.push_back({p, k, j, I});
  }
  Collected c(units.size());
  parallel_for(units.size(), cfg.threads, [&](std::size_t i) {
    const auto& [p, k, j, I] = units[i];
    const FieldCtx ctx(p);
    const CountReport r = fourier_error_bound(ctx, falling(ctx, k), falling(ctx, j), I);
    c.ok[i] = r.satisfied;
    c.units[i].push_back(Row{{"p", p}, {"k", k}, {"j", j}, {"start", I.start},
                             {"step", I.step}, {"length", I.length},
                             {"observed", static_cast<u64>(r.observed)}, {"reference", r.reference},
                             {"bound", r.bound}, {"satisfied", r.satisfied}});
  });
  return c.write(w);
}

bool cmd_union_check(const RunConfig& cfg, RecordWriter& w) {
  const u64 p = single_prime(cfg);
  const FieldCtx ctx(p);
  if (cfg.js.size() < 2) throw UsageError("union-check needs at least two --j values");
  const u64 M = cfg.M.value_or(static_cast<u64>(*std::max_element(cfg.js.begin(), cfg.js.end())));
  if (M + 1 >= p) throw UsageError("--M must be below p - 1");
  const u64 N = cfg.N.value_or((p - M - 1) / 2);
  if (N < 1 || 2 * N + M >= p) throw UsageError("need N >= 1 and 2N + M < p");
  for (int j : cfg.js) falling(ctx, j);
  const auto Y = y_sets(ctx, N, M, cfg.js);
  for (const auto& y : Y)
    if (y.empty()) throw UsageError("the odd window is empty for this N and M");
  const FamilyReport r = verify_family(Y);
  std::vector<u64> js(cfg.js.begin(), cfg.js.end());
  w.write(Row{{"p", p}, {"N", N}, {"M", M}, {"js", join(js, ';')}, {"a", r.stats.a},
              {"b", r.stats.b}, {"n", r.stats.n}, {"bound", r.bound}, {"union", r.union_size},
              {"applicable", r.applicable}, {"ok", r.holds}});
  return r.holds;
}

bool cmd_bounds(const RunConfig& cfg, RecordWriter& w) {
  const u64 p = single_prime(cfg);
  if (cfg.theorem == 1) {
    if (p < 17) throw UsageError("the exponent calculator needs p >= 17");
    const double lp = std::log(static_cast<double>(p));
    const double kappa = std::log(lp) / lp;
    const OptimalExponents e = optimal_exponents(kappa);
    Row row{{"p", p}, {"kappa", kappa}, {"eps1", e.eps1}, {"eps2", e.eps2}, {"delta", e.delta},
            {"N", nullptr}, {"M", nullptr}, {"K", nullptr}, {"Q", nullptr},
            {"constraints_hold", exponent_constraints_hold(kappa, e)},
            {"delta_positive", e.delta > 0}};
    // Without a positive saving the window would exceed p; leave it blank.
    if (e.delta > 0) {
      const Theorem1Params t = theorem1_params(p);
      row["N"] = t.N;
      row["M"] = t.M;
      row["K"] = t.K;
      row["Q"] = t.Q;
    }
    w.write(row);
    return true;
  }
  if (cfg.theorem != 2) throw UsageError("--theorem must be 1 or 2");
  if (!cfg.N) throw UsageError("--N is required for --theorem 2");
  const Theorem2Result r = theorem2_bound(p, *cfg.N, cfg.constants);
  auto opt = [](const std::optional<double>& v) {
    return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json();
  };
  w.write(Row{{"p", p}, {"N", *cfg.N}, {"regime", r.regime}, {"K", r.K}, {"Q", r.Q},
              {"kappa", r.kappa}, {"bound", r.bound}, {"error_term", r.error_term},
              {"R", opt(r.R)}, {"M", opt(r.M)}, {"thresholds_ordered", r.thresholds_ordered}});
  return true;
}

std::vector<u64> selected_targets(const RunConfig& cfg, u64 p) {
  if (cfg.targets.empty()) throw UsageError("--a is required (a residue list or 'all')");
  std::vector<u64> out;
  for (const auto& t : cfg.targets) {
    if (t == "all") {
      for (u64 a = 1; a < p; ++a) out.push_back(a);
      continue;
    }
    u64 a = 0;
    try {
      std::size_t used = 0;
      a = std::stoull(t, &used);
      if (used != t.size()) throw std::invalid_argument(t);
    } catch (const std::logic_error&) {
      throw UsageError("--a expects integers, got '" + t + "'");
    }
    if (a == 0 || a >= p)
      throw UsageError("--a must satisfy 1 <= a < p, got " + std::to_string(a));
    out.push_back(a);
  }
  return out;
}

bool cmd_represent(const RunConfig& cfg, RecordWriter& w) {
  const u64 p = single_prime(cfg);
  const FieldCtx ctx(p);
  const auto targets = selected_targets(cfg, p);
  auto row = [&](u64 a, int k, u64 B, const std::vector<u64>& f, bool verified) {
    return Row{{"p", p}, {"a", a}, {"k", k}, {"B", B}, {"factors", join(f, ';')},
               {"max_factor", f.empty() ? 0 : *std::max_element(f.begin(), f.end())},
               {"verified", verified}};
  };
  bool all_ok = true;
  if (cfg.method == "wilson") {
    for (u64 a : targets) {
      const ThreeFactorial t = three_factorial(ctx, Residue{a});
      w.write(row(a, 3, t.certificate.bound(), t.certificate.factors(), true));
    }
    return true;
  }
  if (cfg.method != "search") throw UsageError("--method must be search or wilson");
  const int k = cfg.k_count.value_or(kMaxFactorials);
  if (k < 1 || k > kMaxFactorials) throw UsageError("--k must be in 1..7");
  const u64 B = cfg.B.value_or(default_bound(p));
  if (B >= p) throw UsageError("--B must be below p");
  const auto levels = bounded_product_reach(ctx, B, k, cfg.budget, cfg.threads);
  for (u64 a : targets) {
    try {
      const auto cert = find_representation(ctx, Residue{a}, B, levels);
      w.write(row(a, k, B, cert.factors(), true));
    } catch (const NotRepresentableError&) {
      w.write(row(a, k, B, {}, false));
      all_ok = false;
    }
  }
  return all_ok;
}

bool cmd_reach(const RunConfig& cfg, RecordWriter& w) {
  const u64 p = single_prime(cfg);
  const FieldCtx ctx(p);
  const int k = cfg.k_count.value_or(kMaxFactorials);
  if (k < 1 || k > kMaxFactorials) throw UsageError("--k must be in 1..7");
  const u64 B = cfg.B.value_or(default_bound(p));
  if (B >= p) throw UsageError("--B must be below p");
  const auto levels = bounded_product_reach(ctx, B, k, cfg.budget, cfg.threads);
  for (std::size_t m = 0; m < levels.size(); ++m)
    w.write(Row{{"p", p}, {"B", B}, {"k", k}, {"level", m + 1}, {"card", levels[m].size()},
                {"covers_all", levels[m].size() == p - 1}});
  return true;
}

bool cmd_embed(const RunConfig& cfg, RecordWriter& w) {
  const u64 p = single_prime(cfg);
  if (!cfg.N || !cfg.M) throw UsageError("embed needs --N and --M");
  if (*cfg.N < 1 || 2 * *cfg.N + *cfg.M >= p) throw UsageError("need N >= 1 and 2N + M < p");
  const EmbeddingReport r = embedding_report(FieldCtx(p), *cfg.N, *cfg.M);
  w.write(Row{{"p", p}, {"N", *cfg.N}, {"M", *cfg.M}, {"ok", r.ok}, {"checked", r.checked}});
  return r.ok;
}

}  // namespace

const std::vector<std::string>& schema(const std::string& subcommand, int theorem) {
  if (subcommand == "bounds") return schemas().at(theorem == 2 ? "bounds2" : "bounds1");
  return schemas().at(subcommand);
}

bool run_command(const RunConfig& cfg, RecordWriter& w) {
  const std::string& s = cfg.subcommand;
  if (s == "erdos") return cmd_erdos(cfg, w);
  if (s == "census") return cmd_census(cfg, w);
  if (s == "product") return cmd_product(cfg, w, false);
  if (s == "quotient") return cmd_product(cfg, w, true);
  if (s == "images") return cmd_images(cfg, w);
  if (s == "intersect") return cmd_intersect(cfg, w);
  if (s == "langweil") return cmd_langweil(cfg, w);
  if (s == "expsum") return cmd_expsum(cfg, w);
  if (s == "dft") return cmd_dft(cfg, w);
  if (s == "fourier-bound") return cmd_fourier_bound(cfg, w);
  if (s == "union-check") return cmd_union_check(cfg, w);
  if (s == "bounds") return cmd_bounds(cfg, w);
  if (s == "represent") return cmd_represent(cfg, w);
  if (s == "reach") return cmd_reach(cfg, w);
  if (s == "embed") return cmd_embed(cfg, w);
  throw UsageError("unknown subcommand " + s);
}

}  // namespace factlab::cli
