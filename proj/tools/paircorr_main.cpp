// paircorr: pair correlation statistics of the van der Corput sequence over
// exact rational arithmetic.
//
// Subcommands:
//   gen     write the first N sequence points, one "p/q" per line
//   eval    evaluate F_N(s) with one engine (closed | sorted | naive)
//   sweep   evaluate F_N over an s grid, CSV output
//   verify  cross-check all engines on a van der Corput s grid
//   bench   time engines (median of 5 runs, one discarded warm-up)
//
// Exit codes: 0 ok, 1 I/O, 2 usage, 3 domain, 4 verification mismatch.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "paircorr/analysis.hpp"
#include "paircorr/closedform.hpp"
#include "paircorr/paircount.hpp"
#include "paircorr/points_io.hpp"
#include "paircorr/rational.hpp"
#include "paircorr/sequence.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;
constexpr int kExitMismatch = 4;

constexpr std::uint64_t kNaiveSizeGuard = 100000;  // refuse naive above this without --force

using paircorr::BigInt;
using paircorr::Engine;
using paircorr::Rational;
using SteadyClock = std::chrono::steady_clock;

std::uint64_t nanos_since(SteadyClock::time_point start) {
  return static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::nanoseconds>(SteadyClock::now() - start).count());
}

// Output sink: --out path, or stdout when empty.
class Output {
 public:
  bool open(const std::string& path) {
    if (path.empty()) return true;
    file_.open(path);
    if (!file_) {
      std::cerr << "error: cannot open output file: " << path << "\n";
      return false;
    }
    return true;
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }
  bool good() {
    stream().flush();
    return stream().good();
  }

 private:
  std::ofstream file_;
};

std::optional<Rational> parse_rational_flag(const std::string& text, const char* flag) {
  try {
    return Rational::parse(text);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << flag << ": " << e.what() << "\n";
    return std::nullopt;
  }
}

std::optional<Engine> parse_engine(const std::string& name) {
  if (name == "closed") return Engine::closed_form;
  if (name == "sorted") return Engine::sorted;
  if (name == "naive") return Engine::naive;
  std::cerr << "error: unknown engine '" << name << "' (expected closed, sorted or naive)\n";
  return std::nullopt;
}

// ---------------------------------------------------------------- gen ----

int cmd_gen(std::uint64_t n, std::uint64_t base, const std::string& out_path) {
  Output out;
  if (!out.open(out_path)) return kExitIo;
  for (std::uint64_t i = 0; i < n; ++i) {
    out.stream() << paircorr::radical_inverse(i, base).str() << '\n';
    if (!out.stream()) break;
  }
  return out.good() ? kExitOk : kExitIo;
}

// --------------------------------------------------------------- eval ----

int cmd_eval(std::uint64_t n_flag, const std::string& s_text, const std::string& engine_text,
             const std::string& points_path, const std::string& out_path) {
  const auto s = parse_rational_flag(s_text, "--s");
  if (!s) return kExitUsage;
  const auto engine = parse_engine(engine_text);
  if (!engine) return kExitUsage;
  if (!points_path.empty() && *engine == Engine::closed_form) {
    std::cerr << "error: --points requires --engine sorted or naive "
                 "(the closed form covers only the base-2 van der Corput sequence)\n";
    return kExitUsage;
  }
  if (points_path.empty() && n_flag == 0) {
    std::cerr << "error: --n is required unless --points is given\n";
    return kExitUsage;
  }

  std::uint64_t n = n_flag;
  Rational f;
  std::uint64_t elapsed = 0;
  try {
    if (*engine == Engine::closed_form) {
      const auto start = SteadyClock::now();
      f = paircorr::f_closed_form(n, *s);
      elapsed = nanos_since(start);
    } else {
      std::optional<paircorr::PointSet> pts;
      if (!points_path.empty()) {
        pts.emplace(paircorr::ingest_points(points_path));
        if (n_flag != 0) {
          if (n_flag > pts->size()) {
            std::cerr << "error: --n " << n_flag << " exceeds points file length " << pts->size()
                      << "\n";
            return kExitUsage;
          }
          pts.emplace(paircorr::PointSet(std::vector<Rational>(
              pts->points().begin(), pts->points().begin() + static_cast<long>(n_flag))));
        }
        n = pts->size();
      } else {
        pts.emplace(paircorr::vdc_prefix(n, 2));
      }
      const auto start = SteadyClock::now();
      const auto result = *engine == Engine::sorted ? paircorr::pair_count_sorted(*pts, *s)
                                                    : paircorr::pair_count_naive(*pts, *s);
      elapsed = nanos_since(start);
      f = result.f_value;
    }
  } catch (const paircorr::ClosedFormDomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const paircorr::IngestError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }

  Output out;
  if (!out.open(out_path)) return kExitIo;
  out.stream() << "n,s,f_exact,f_decimal,poisson_decimal,engine,elapsed_nanos\n"
               << n << ',' << s->str() << ',' << f.str() << ',' << paircorr::to_decimal(f) << ','
               << paircorr::to_decimal(*s + *s) << ',' << engine_text << ',' << elapsed << '\n';
  return out.good() ? kExitOk : kExitIo;
}

// -------------------------------------------------------------- sweep ----

int cmd_sweep(std::uint64_t n, const std::string& from_text, const std::string& to_text,
              std::uint64_t steps, const std::string& engine_text, const std::string& out_path) {
  const auto s_from = parse_rational_flag(from_text, "--s-from");
  const auto s_to = parse_rational_flag(to_text, "--s-to");
  if (!s_from || !s_to) return kExitUsage;
  const auto engine = parse_engine(engine_text);
  if (!engine) return kExitUsage;
  if (*s_to < *s_from) {
    std::cerr << "error: --s-to must be >= --s-from\n";
    return kExitUsage;
  }

  // exact grid: s_j = s_from + j * (s_to - s_from) / steps, j = 0..steps
  const Rational step = (*s_to - *s_from) / Rational(steps);
  std::vector<Rational> grid;
  grid.reserve(steps + 1);
  for (std::uint64_t j = 0; j <= steps; ++j) grid.push_back(*s_from + Rational(j) * step);

  const auto records = paircorr::sweep(n, grid, *engine);

  Output out;
  if (!out.open(out_path)) return kExitIo;
  out.stream() << "n,s,f_exact,f_decimal,poisson,engine,status,elapsed_nanos\n";
  bool any_ok = false;
  for (const auto& rec : records) {
    const bool ok = rec.status == paircorr::RecordStatus::ok;
    any_ok = any_ok || ok;
    out.stream() << rec.n << ',' << rec.s.str() << ',' << (ok ? rec.f->str() : "") << ','
                 << (ok ? paircorr::to_decimal(*rec.f) : "") << ','
                 << paircorr::to_decimal(rec.poisson) << ',' << paircorr::engine_name(rec.engine)
                 << ',' << (ok ? "ok" : "out_of_domain") << ',' << rec.elapsed_nanos << '\n';
  }
  if (!out.good()) return kExitIo;
  return any_ok ? kExitOk : kExitDomain;
}

// ------------------------------------------------------------- verify ----

int cmd_verify(std::uint64_t n_max, std::uint64_t density, std::uint64_t naive_cap,
               bool inject_fault) {
  std::uint64_t checks = 0;
  std::uint64_t mismatches = 0;
  std::string first_mismatch;

  for (std::uint64_t n = 1; n <= n_max; ++n) {
    const paircorr::PointSet pts = paircorr::vdc_prefix(n, 2);
    const paircorr::SortedPoints sorted(pts);
    for (std::uint64_t j = 0;; ++j) {
      const Rational s(BigInt(j), BigInt(density));
      if (Rational::cmp(s + s, Rational(n)) >= 0) break;  // grid covers s < n/2
      Rational closed = paircorr::f_closed_form(n, s);
      if (inject_fault && n == n_max && j == 0) closed += Rational(1, 2);
      const Rational sorted_f = sorted.result(s).f_value;
      bool ok = closed == sorted_f;
      std::string naive_part;
      if (n <= naive_cap) {
        const Rational naive_f = paircorr::pair_count_naive(pts, s).f_value;
        ok = ok && naive_f == closed;
        naive_part = ", naive=" + naive_f.str();
      }
      ++checks;
      if (!ok && ++mismatches == 1) {
        first_mismatch = "N=" + std::to_string(n) + ", s=" + s.str() +
                         ": closed=" + closed.str() + ", sorted=" + sorted_f.str() + naive_part;
      }
    }
  }

  std::cout << "verify: " << checks << " grid checks, N in [1, " << n_max << "], s grid j/"
            << density << " below N/2, naive cross-checks up to N = " << naive_cap << "\n";
  if (mismatches > 0) {
    std::cout << "mismatches: " << mismatches << "\nfirst counterexample: " << first_mismatch
              << "\n";
    return kExitMismatch;
  }
  std::cout << "mismatches: 0\n";
  return kExitOk;
}

// -------------------------------------------------------------- bench ----

struct BenchRow {
  std::string engine;
  std::uint64_t n;
  std::uint64_t median_nanos;
  Rational f;
};

int cmd_bench(const std::vector<std::uint64_t>& n_list, const std::string& s_text,
              const std::vector<std::string>& engine_names, bool force,
              const std::string& out_path) {
  const auto s = parse_rational_flag(s_text, "--s");
  if (!s) return kExitUsage;
  std::vector<Engine> engines;
  for (const auto& name : engine_names) {
    const auto e = parse_engine(name);
    if (!e) return kExitUsage;
    engines.push_back(*e);
  }

  for (std::uint64_t n : n_list)
    for (Engine e : engines)
      if (e == Engine::naive && n > kNaiveSizeGuard && !force) {
        std::cerr << "error: naive engine refused for N = " << n << " (> " << kNaiveSizeGuard
                  << "); the quadratic count would run for a very long time. "
                     "Pass --force to override.\n";
        return kExitUsage;
      }

  std::vector<BenchRow> rows;
  try {
    for (std::uint64_t n : n_list) {
      std::optional<paircorr::PointSet> pts;  // shared by the oracle engines, built untimed
      const bool need_points =
          std::any_of(engines.begin(), engines.end(), [](Engine e) { return e != Engine::closed_form; });
      if (need_points) pts.emplace(paircorr::vdc_prefix(n, 2));

      for (Engine e : engines) {
        auto run_once = [&]() -> std::pair<Rational, std::uint64_t> {
          const auto start = SteadyClock::now();
          Rational f;
          switch (e) {
            case Engine::closed_form: f = paircorr::f_closed_form(n, *s); break;
            case Engine::sorted: f = paircorr::pair_count_sorted(*pts, *s).f_value; break;
            case Engine::naive: f = paircorr::pair_count_naive(*pts, *s).f_value; break;
          }
          return {std::move(f), nanos_since(start)};
        };
        run_once();  // warm-up, discarded
        std::vector<std::uint64_t> times;
        Rational f;
        for (int rep = 0; rep < 5; ++rep) {
          auto [value, elapsed] = run_once();
          f = std::move(value);
          times.push_back(elapsed);
        }
        std::sort(times.begin(), times.end());
        rows.push_back({paircorr::engine_name(e), n, times[times.size() / 2], std::move(f)});
      }
    }
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }

  Output out;
  if (!out.open(out_path)) return kExitIo;
  out.stream() << "engine,n,s,elapsed_nanos,f_decimal\n";
  for (const auto& row : rows)
    out.stream() << row.engine << ',' << row.n << ',' << s->str() << ',' << row.median_nanos << ','
                 << paircorr::to_decimal(row.f) << '\n';
  return out.good() ? kExitOk : kExitIo;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pair correlation statistics of the van der Corput sequence, exact arithmetic"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "write the first N sequence points, one per line");
  std::uint64_t gen_n = 0;
  std::uint64_t gen_base = 2;
  std::string gen_out;
  gen->add_option("--n", gen_n, "number of points (>= 1)")->required()->check(CLI::PositiveNumber);
  gen->add_option("--base", gen_base, "sequence base (>= 2)")->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1} << 32));
  gen->add_option("--out", gen_out, "output file (default: stdout)");

  // eval
  auto* eval = app.add_subcommand("eval", "evaluate F_N(s) with one engine");
  std::uint64_t eval_n = 0;
  std::string eval_s, eval_engine, eval_points, eval_out;
  eval->add_option("--n", eval_n, "number of points (defaults to points file length)");
  eval->add_option("--s", eval_s, "s value (integer, p/q or exact decimal)")->required();
  eval->add_option("--engine", eval_engine, "closed | sorted | naive")->required();
  eval->add_option("--points", eval_points, "points file (one value per line)");
  eval->add_option("--out", eval_out, "output file (default: stdout)");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "evaluate F_N over an s grid, CSV output");
  std::uint64_t sweep_n = 0, sweep_steps = 1;
  std::string sweep_from, sweep_to, sweep_engine, sweep_out;
  sweep->add_option("--n", sweep_n, "number of points (>= 1)")->required()->check(CLI::PositiveNumber);
  sweep->add_option("--s-from", sweep_from, "grid start")->required();
  sweep->add_option("--s-to", sweep_to, "grid end")->required();
  sweep->add_option("--steps", sweep_steps, "number of grid intervals (>= 1)")
      ->required()
      ->check(CLI::PositiveNumber);
  sweep->add_option("--engine", sweep_engine, "closed | sorted | naive")->required();
  sweep->add_option("--out", sweep_out, "output file (default: stdout)");

  // verify
  auto* verify = app.add_subcommand("verify", "cross-check closed form against the oracles");
  std::uint64_t verify_n_max = 0, verify_density = 4, verify_naive_cap = 64;
  bool verify_fault = false;
  verify->add_option("--n-max", verify_n_max, "check all N up to this bound (>= 2)")
      ->required()
      ->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1} << 32));
  verify->add_option("--s-grid-density", verify_density, "s grid is {j/density} below N/2")
      ->check(CLI::PositiveNumber);
  verify->add_option("--naive-cap", verify_naive_cap,
                     "also run the quadratic oracle for N up to this bound");
  verify->add_flag("--inject-fault", verify_fault)->group("");  // test hook for the mismatch path

  // bench
  auto* bench = app.add_subcommand("bench", "time engines (median of 5 runs)");
  std::vector<std::uint64_t> bench_n;
  std::string bench_s, bench_out;
  std::vector<std::string> bench_engines;
  bool bench_force = false;
  bench->add_option("--n", bench_n, "N values (comma separated)")
      ->required()
      ->delimiter(',')
      ->check(CLI::PositiveNumber);
  bench->add_option("--s", bench_s, "s value")->required();
  bench->add_option("--engines", bench_engines, "subset of closed,sorted,naive")
      ->required()
      ->delimiter(',');
  bench->add_flag("--force", bench_force, "allow the naive engine above N = 100000");
  bench->add_option("--out", bench_out, "output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the message
    return kExitUsage;
  }

  try {
    if (gen->parsed()) return cmd_gen(gen_n, gen_base, gen_out);
    if (eval->parsed()) return cmd_eval(eval_n, eval_s, eval_engine, eval_points, eval_out);
    if (sweep->parsed())
      return cmd_sweep(sweep_n, sweep_from, sweep_to, sweep_steps, sweep_engine, sweep_out);
    if (verify->parsed())
      return cmd_verify(verify_n_max, verify_density, verify_naive_cap, verify_fault);
    if (bench->parsed()) return cmd_bench(bench_n, bench_s, bench_engines, bench_force, bench_out);
  } catch (const std::bad_alloc&) {
    std::cerr << "error: out of memory\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitUsage;
}
