#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "airy/exactnum.hpp"
#include "airy/gf2m.hpp"
#include "airy/sheaf.hpp"

// Full-field trace census.  The naive path evaluates one point at a time
// and is the correctness oracle; the fast path evaluates every point of k
// simultaneously with one exact integer Walsh-Hadamard transform of size
// 2^d, since the t-dependence of the Witt class is exactly the bilinear
// term Tr(tx).

namespace airy {

// Per-x data: the t-independent class c0(x) of [x^t(q), f(x)] and the
// trace mask m(x), so the class at (x,t) is c0(x) + 2*parity(t & m(x)).
struct PrecompTable {
  int degree = 0;
  std::vector<std::uint32_t> packed;  // mask in the low bits, c0 in bits 28..29

  static constexpr std::uint32_t kMaskBits = 0x03FFFFFF;
  int c0(std::uint64_t x) const { return int(packed[x] >> 28); }
  FqElt mask(std::uint64_t x) const { return packed[x] & kMaskBits; }
};

PrecompTable precompute(const SheafSpec& spec, const FieldCtx& k, int threads = 1);

struct CensusEntry {
  ClearedValue value;
  std::uint64_t mult = 0;
};

struct CensusReport {
  SheafSpec spec;
  int degree = 0;
  std::uint64_t modulus = 0;
  std::string domain;       // "k" or "k*"
  std::string provenance;   // "naive" | "wht" | "wht-reindexed" | "pointwise-G"
  std::vector<CensusEntry> entries;
  mpq_class m22;
  std::string m22_decimal;
  double seconds = 0.0;

  std::uint64_t domain_size() const;
  std::uint64_t total_multiplicity() const;
};

struct NaiveOptions {
  int threads = 1;
  std::string checkpoint_path;        // empty: no checkpointing
  std::uint64_t chunk_size = 1 << 12; // t values per checkpoint chunk
};

// Oracle path, d <= 20.  Supports checkpoint/resume on chunk boundaries.
CensusReport census_naive(const SheafSpec& spec, const FieldCtx& k,
                          const NaiveOptions& opts = {});

// Walsh-Hadamard path, d <= 26; output identical to census_naive.
CensusReport census_wht(const SheafSpec& spec, const FieldCtx& k, int threads = 1);

// Census of a descent over k^x: reindexes the F census when t -> t^t(q)
// is bijective on k^x, otherwise evaluates trace_G pointwise.
CensusReport census_for_G(const SheafSpec& spec_g, const FieldCtx& k, int threads = 1);

// Raw transform values W[t] = sum_x psi2(...); the cleared trace at t is
// -W[t] over the clearing factor.  Exposed for Parseval and single-point
// cross-checks.
std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>> census_wht_raw(
    const SheafSpec& spec, const FieldCtx& k, int threads = 1);

// (1/#domain) sum |T(t)|^(2a), exact; requires a == b.
mpq_class empirical_moment(const CensusReport& report, int a, int b);
// General complex moment (1/#domain) sum T^a conj(T)^b as (re, im).
std::pair<mpq_class, mpq_class> empirical_moment_complex(const CensusReport& report,
                                                         int a, int b);

// Exact rational (re, im) of a cleared value.
std::pair<mpq_class, mpq_class> cleared_to_rational(const ClearedValue& v);

std::string census_to_json(const CensusReport& report);
std::string census_to_csv(const CensusReport& report);
std::string census_to_text(const CensusReport& report);

std::string spec_hash(const SheafSpec& spec, const FieldCtx& k);

}  // namespace airy
