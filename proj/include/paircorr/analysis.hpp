#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "paircorr/closedform.hpp"
#include "paircorr/paircount.hpp"
#include "paircorr/rational.hpp"

// Limit behaviour of F_N(s): the Poissonian reference 2s, probes of F_N(s)
// along structured subsequences of N (where the closed form makes millions
// of N values cheap), and s-grid sweeps producing per-point records.
//
// F_N(s) converges (to 0) for 0 <= s <= 1/2 and diverges for s > 1/2; the
// divergence witness used throughout is the subsequence pair N = 2^M
// (where F_N(1) = 2) against N = 2^M + 1 (where F_N(1) = 4/(2^M+1) -> 0).

namespace paircorr {

enum class Engine { closed_form, sorted, naive };

const char* engine_name(Engine e);

// The Poissonian limiting pair correlation function F(s) = 2s.
Rational poisson_reference(const Rational& s);

enum class ProbeKind { powers_of_two, power_plus_one, power_plus_power, explicit_list };

struct ProbeEntry {
  std::uint64_t n = 0;
  Rational f;
};

struct ProbeSeries {
  Rational s;
  ProbeKind kind = ProbeKind::explicit_list;
  int power_k = 0;  // the fixed k of N = 2^M + 2^k (power_plus_power only)
  std::vector<ProbeEntry> entries;  // strictly increasing n
};

// F_N(s) along N = 2^M (powers_of_two), N = 2^M + 1 (power_plus_one) or
// N = 2^M + 2^power_k (power_plus_power) for M in [m_min, m_max], through
// the closed form. Requires 1 <= m_min <= m_max <= 62 and s < N/2 for every
// probed N; throws std::domain_error otherwise.
ProbeSeries limit_probe(const Rational& s, ProbeKind kind, int m_min, int m_max,
                        int power_k = 0);

// Probe over an explicit, strictly increasing list of N values. Falls back
// to the sorted oracle where the closed form is out of domain (s >= N/2),
// at O(N log N) time and O(N) memory per such entry.
ProbeSeries limit_probe(const Rational& s, const std::vector<std::uint64_t>& ns);

enum class RecordStatus { ok, out_of_domain };

struct CorrelationRecord {
  std::uint64_t n = 0;
  Rational s;
  std::optional<Rational> f;  // present iff status == ok
  Rational poisson;           // always 2s
  Engine engine = Engine::closed_form;
  std::uint64_t elapsed_nanos = 0;
  RecordStatus status = RecordStatus::ok;
};

// Evaluates F_n(s) for each s in grid order with the chosen engine. A domain
// failure (s < 0, or s >= n/2 for the closed form) marks that record
// out_of_domain and the sweep continues. Oracle engines generate the base-2
// van der Corput prefix once and share it across the grid; elapsed_nanos
// times only the per-record engine evaluation.
std::vector<CorrelationRecord> sweep(std::uint64_t n, const std::vector<Rational>& s_values,
                                     Engine engine);

}  // namespace paircorr
