#include "paircorr/analysis.hpp"

#include <chrono>
#include <stdexcept>

#include "paircorr/sequence.hpp"

namespace paircorr {

namespace {

using SteadyClock = std::chrono::steady_clock;

std::uint64_t nanos_since(SteadyClock::time_point start) {
  return static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::nanoseconds>(SteadyClock::now() - start).count());
}

std::uint64_t probe_n(ProbeKind kind, int m, int power_k) {
  switch (kind) {
    case ProbeKind::powers_of_two: return std::uint64_t{1} << m;
    case ProbeKind::power_plus_one: return (std::uint64_t{1} << m) + 1;
    case ProbeKind::power_plus_power: return (std::uint64_t{1} << m) + (std::uint64_t{1} << power_k);
    case ProbeKind::explicit_list: break;
  }
  throw std::invalid_argument("limit_probe: explicit_list requires the list overload");
}

}  // namespace

const char* engine_name(Engine e) {
  switch (e) {
    case Engine::closed_form: return "closed";
    case Engine::sorted: return "sorted";
    case Engine::naive: return "naive";
  }
  return "?";
}

Rational poisson_reference(const Rational& s) {
  if (s.sign() < 0) throw std::domain_error("poisson_reference: s must be >= 0");
  return s + s;
}

ProbeSeries limit_probe(const Rational& s, ProbeKind kind, int m_min, int m_max, int power_k) {
  if (s.sign() < 0) throw std::domain_error("limit_probe: s must be >= 0");
  if (m_min < 1 || m_min > m_max || m_max > 62)
    throw std::domain_error("limit_probe: need 1 <= m_min <= m_max <= 62");
  if (kind == ProbeKind::power_plus_power && (power_k < 0 || power_k > 62))
    throw std::domain_error("limit_probe: need 0 <= power_k <= 62");

  ProbeSeries series{s, kind, kind == ProbeKind::power_plus_power ? power_k : 0, {}};
  series.entries.reserve(static_cast<std::size_t>(m_max - m_min + 1));
  for (int m = m_min; m <= m_max; ++m) {
    const std::uint64_t n = probe_n(kind, m, power_k);
    if (Rational::cmp(s + s, Rational(n)) >= 0)
      throw std::domain_error("limit_probe: s >= N/2 at N = " + std::to_string(n) +
                              "; closed form not applicable");
    series.entries.push_back({n, f_closed_form(n, s)});
  }
  return series;
}

ProbeSeries limit_probe(const Rational& s, const std::vector<std::uint64_t>& ns) {
  if (s.sign() < 0) throw std::domain_error("limit_probe: s must be >= 0");
  for (std::size_t i = 0; i + 1 < ns.size(); ++i)
    if (ns[i] >= ns[i + 1])
      throw std::invalid_argument("limit_probe: N values must be strictly increasing");

  ProbeSeries series{s, ProbeKind::explicit_list, 0, {}};
  series.entries.reserve(ns.size());
  for (std::uint64_t n : ns) {
    try {
      series.entries.push_back({n, f_closed_form(n, s)});
    } catch (const ClosedFormDomainError&) {
      series.entries.push_back({n, pair_count_sorted(vdc_prefix(n, 2), s).f_value});
    }
  }
  return series;
}

std::vector<CorrelationRecord> sweep(std::uint64_t n, const std::vector<Rational>& s_values,
                                     Engine engine) {
  if (n == 0) throw std::domain_error("sweep: N must be >= 1");

  std::optional<PointSet> pts;
  std::optional<SortedPoints> sorted;
  if (engine == Engine::naive || engine == Engine::sorted) pts.emplace(vdc_prefix(n, 2));
  if (engine == Engine::sorted) sorted.emplace(*pts);

  std::vector<CorrelationRecord> records;
  records.reserve(s_values.size());
  for (const Rational& s : s_values) {
    CorrelationRecord rec;
    rec.n = n;
    rec.s = s;
    rec.poisson = s + s;  // kept even on failed records
    rec.engine = engine;
    const auto start = SteadyClock::now();
    try {
      switch (engine) {
        case Engine::closed_form: rec.f = f_closed_form(n, s); break;
        case Engine::sorted: rec.f = sorted->result(s).f_value; break;
        case Engine::naive: rec.f = pair_count_naive(*pts, s).f_value; break;
      }
      rec.status = RecordStatus::ok;
    } catch (const std::domain_error&) {
      rec.status = RecordStatus::out_of_domain;
      rec.f.reset();
    }
    rec.elapsed_nanos = nanos_since(start);
    records.push_back(std::move(rec));
  }
  return records;
}

}  // namespace paircorr
