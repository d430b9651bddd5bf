#include "airy/census.hpp"

#include <chrono>
#include <fstream>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "airy/detail/walk.hpp"
#include "airy/witt2.hpp"
#include "json.hpp"

namespace airy {

namespace {

using detail::PowerWalk;

using Clock = std::chrono::steady_clock;

double elapsed(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Small cleared value keyed for aggregation.
struct Key {
  std::int64_t re, im;
  std::uint32_t exp;
  bool operator<(const Key& o) const {
    if (re != o.re) return re < o.re;
    if (im != o.im) return im < o.im;
    return exp < o.exp;
  }
};

using CountMap = std::map<Key, std::uint64_t>;

// Normalize num/(1+i)^e with int64 components (|num| <= 2^26 everywhere
// in the census, so this cannot overflow).
Key clear_small(std::int64_t re, std::int64_t im, int degree, int n) {
  if (n % 2 == 0) {
    // multiply by i^d
    switch (degree & 3) {
      case 1: { auto t = re; re = -im; im = t; break; }
      case 2: re = -re; im = -im; break;
      case 3: { auto t = re; re = im; im = -t; break; }
      default: break;
    }
  }
  std::uint32_t e = std::uint32_t(degree);
  if (re == 0 && im == 0) return {0, 0, 0};
  while (e > 0 && ((re + im) & 1) == 0) {
    std::int64_t nre = (re + im) / 2, nim = (im - re) / 2;
    re = nre;
    im = nim;
    --e;
  }
  return {re, im, e};
}

ClearedValue key_to_value(const Key& k) {
  return ClearedValue(GaussInt(long(k.re), long(k.im)), k.exp);
}

void merge_counts(CountMap& into, const CountMap& from) {
  for (auto& [k, v] : from) into[k] += v;
}

void check_census_pre(const SheafSpec& spec, const FieldCtx& k, int max_degree) {
  if (spec.form != SheafForm::F)
    throw std::invalid_argument("census precomputation needs the F form");
  if (k.degree() > max_degree)
    throw std::invalid_argument("census degree guard exceeded");
}

}  // namespace

std::uint64_t CensusReport::domain_size() const {
  std::uint64_t n = std::uint64_t(1) << degree;
  return domain == "k" ? n : n - 1;
}

std::uint64_t CensusReport::total_multiplicity() const {
  std::uint64_t s = 0;
  for (auto& e : entries) s += e.mult;
  return s;
}

namespace {

void finalize_report(CensusReport& rep, const CountMap& counts) {
  rep.entries.clear();
  for (auto& [key, mult] : counts) rep.entries.push_back({key_to_value(key), mult});
  rep.m22 = empirical_moment(rep, 2, 2);
  rep.m22_decimal = decimal_string(rep.m22, 32);
}

}  // namespace

PrecompTable precompute(const SheafSpec& spec, const FieldCtx& k, int threads) {
  check_census_pre(spec, k, 26);
  const int d = k.degree();
  PrecompTable tab;
  tab.degree = d;
  tab.packed.assign(std::uint64_t(1) << d, 0);
  // x = 0: class of [0, f(0)] = [0,0] is 0, mask 0.
  tab.packed[0] = 0;

  std::vector<std::uint64_t> exps{1, spec.t_q};
  exps.insert(exps.end(), spec.f_exps.begin(), spec.f_exps.end());

  std::uint64_t n = k.group_order();
  unsigned nt = unsigned(std::max(1, threads));
  if (n < (1u << 12)) nt = 1;
  auto run = [&](unsigned id) {
    std::uint64_t lo = n * id / nt, hi = n * (id + 1) / nt;
    PowerWalk w(k, exps, lo);
    for (std::uint64_t j = lo; j < hi; ++j) {
      FqElt x = w.cur[0], a = w.cur[1], b = 0;
      for (size_t i = 2; i < w.cur.size(); ++i) b ^= w.cur[i];
      int c0 = witt_class(k, a, b);
      tab.packed[x] = k.trace_mask(x) | (std::uint32_t(c0) << 28);
      w.advance();
    }
  };
  if (nt == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned id = 0; id < nt; ++id) pool.emplace_back(run, id);
    for (auto& th : pool) th.join();
  }
  return tab;
}

// ------------------------------------------------------------- naive path

namespace {

nlohmann::json counts_to_json(const CountMap& counts) {
  nlohmann::json arr = nlohmann::json::array();
  for (auto& [k, v] : counts) arr.push_back({k.re, k.im, k.exp, v});
  return arr;
}

CountMap counts_from_json(const nlohmann::json& arr) {
  CountMap m;
  for (auto& row : arr)
    m[Key{row[0].get<std::int64_t>(), row[1].get<std::int64_t>(),
          row[2].get<std::uint32_t>()}] = row[3].get<std::uint64_t>();
  return m;
}

CountMap census_chunk(const PrecompTable& tab, const SheafSpec& spec, int degree,
                      std::uint64_t t_lo, std::uint64_t t_hi, int threads) {
  unsigned nt = unsigned(std::max(1, threads));
  if (t_hi - t_lo < 64) nt = 1;
  std::vector<CountMap> partial(nt);
  const std::uint64_t size = std::uint64_t(1) << degree;
  auto run = [&](unsigned id) {
    std::uint64_t lo = t_lo + (t_hi - t_lo) * id / nt;
    std::uint64_t hi = t_lo + (t_hi - t_lo) * (id + 1) / nt;
    CountMap& out = partial[id];
    for (std::uint64_t t = lo; t < hi; ++t) {
      std::int64_t re = 0, im = 0;
      for (std::uint64_t x = 0; x < size; ++x) {
        std::uint32_t p = tab.packed[x];
        int cls = int(p >> 28) + 2 * FieldCtx::parity(t & (p & PrecompTable::kMaskBits));
        detail::add_unit(cls, re, im);
      }
      ++out[clear_small(-re, -im, degree, spec.n)];
    }
  };
  if (nt == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned id = 0; id < nt; ++id) pool.emplace_back(run, id);
    for (auto& th : pool) th.join();
  }
  CountMap total;
  for (auto& p : partial) merge_counts(total, p);
  return total;
}

}  // namespace

std::string spec_hash(const SheafSpec& spec, const FieldCtx& k) {
  std::string s = spec.summary() + "|d=" + std::to_string(k.degree()) +
                  "|mod=" + std::to_string(k.modulus()) + "|f=";
  for (auto e : spec.f_exps) s += std::to_string(e) + ",";
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  snprintf(buf, sizeof buf, "%016llx", (unsigned long long)h);
  return buf;
}

CensusReport census_naive(const SheafSpec& spec, const FieldCtx& k,
                          const NaiveOptions& opts) {
  check_census_pre(spec, k, 20);
  auto t0 = Clock::now();
  const int d = k.degree();
  const std::uint64_t size = std::uint64_t(1) << d;
  const std::string hash = spec_hash(spec, k);
  PrecompTable tab = precompute(spec, k, opts.threads);

  CountMap counts;
  std::uint64_t nchunks = (size + opts.chunk_size - 1) / opts.chunk_size;
  std::vector<bool> done(nchunks, false);

  std::ofstream out;
  if (!opts.checkpoint_path.empty()) {
    std::ifstream in(opts.checkpoint_path);
    if (in.good()) {
      std::string line;
      bool have_header = false;
      while (std::getline(in, line)) {
        if (line.empty()) continue;
        nlohmann::json j = nlohmann::json::parse(line);
        if (!have_header) {
          if (!j.contains("version") || j["version"].get<int>() != 1)
            throw std::runtime_error("checkpoint version mismatch");
          if (j["d"].get<int>() != d || j["spec_hash"].get<std::string>() != hash ||
              j["chunk_size"].get<std::uint64_t>() != opts.chunk_size)
            throw std::runtime_error("checkpoint does not match this census");
          have_header = true;
          continue;
        }
        std::uint64_t idx = j["chunk"].get<std::uint64_t>();
        if (idx >= nchunks || done[idx])
          throw std::runtime_error("corrupt checkpoint chunk index");
        done[idx] = true;
        merge_counts(counts, counts_from_json(j["counts"]));
      }
      if (!have_header) throw std::runtime_error("checkpoint file has no header");
      out.open(opts.checkpoint_path, std::ios::app);
    } else {
      out.open(opts.checkpoint_path);
      nlohmann::json hdr{{"version", 1},
                         {"d", d},
                         {"spec_hash", hash},
                         {"chunk_size", opts.chunk_size}};
      out << hdr.dump() << "\n";
      out.flush();
    }
  }

  for (std::uint64_t c = 0; c < nchunks; ++c) {
    if (done[c]) continue;
    std::uint64_t lo = c * opts.chunk_size;
    std::uint64_t hi = std::min(size, lo + opts.chunk_size);
    CountMap part = census_chunk(tab, spec, d, lo, hi, opts.threads);
    if (out.is_open()) {
      nlohmann::json j{{"chunk", c}, {"counts", counts_to_json(part)}};
      out << j.dump() << "\n";
      out.flush();
    }
    merge_counts(counts, part);
  }

  CensusReport rep;
  rep.spec = spec;
  rep.degree = d;
  rep.modulus = k.modulus();
  rep.domain = "k";
  rep.provenance = "naive";
  finalize_report(rep, counts);
  rep.seconds = elapsed(t0);
  return rep;
}

// --------------------------------------------------------------- WHT path

namespace {

// In-place size-2^d Walsh-Hadamard transform over exact integer pairs.
void wht_inplace(std::vector<std::int64_t>& re, std::vector<std::int64_t>& im,
                 int d, int threads) {
  const std::uint64_t size = std::uint64_t(1) << d;
  unsigned nt = unsigned(std::max(1, threads));
  if (size < (1u << 14)) nt = 1;
  const std::uint64_t npairs = size >> 1;
  for (int s = 0; s < d; ++s) {
    const std::uint64_t half = std::uint64_t(1) << s;
    auto run = [&](unsigned id) {
      std::uint64_t lo = npairs * id / nt, hi = npairs * (id + 1) / nt;
      for (std::uint64_t p = lo; p < hi; ++p) {
        std::uint64_t i = ((p >> s) << (s + 1)) | (p & (half - 1));
        std::uint64_t j = i | half;
        std::int64_t ur = re[i], ui = im[i], vr = re[j], vi = im[j];
        re[i] = ur + vr;
        im[i] = ui + vi;
        re[j] = ur - vr;
        im[j] = ui - vi;
      }
    };
    if (nt == 1) {
      run(0);
    } else {
      std::vector<std::thread> pool;
      for (unsigned id = 0; id < nt; ++id) pool.emplace_back(run, id);
      for (auto& th : pool) th.join();
    }
  }
}

}  // namespace

namespace detail_census {

// Shared WHT driver; also hands back the raw transform when asked.
static CountMap wht_counts(const SheafSpec& spec, const FieldCtx& k, int threads,
                    bool skip_zero, std::vector<std::int64_t>* raw_re,
                    std::vector<std::int64_t>* raw_im) {
  check_census_pre(spec, k, 26);
  const int d = k.degree();
  const std::uint64_t size = std::uint64_t(1) << d;
  PrecompTable tab = precompute(spec, k, threads);

  // scatter s(w) = i^(c0(x)) at w = m(x); x -> m(x) is bijective
  std::vector<std::int64_t> re(size, 0), im(size, 0);
  for (std::uint64_t x = 0; x < size; ++x) {
    std::uint32_t p = tab.packed[x];
    detail::add_unit(int(p >> 28), re[p & PrecompTable::kMaskBits],
                     im[p & PrecompTable::kMaskBits]);
  }

  wht_inplace(re, im, d, threads);

  CountMap counts;
  for (std::uint64_t t = skip_zero ? 1 : 0; t < size; ++t)
    ++counts[clear_small(-re[t], -im[t], d, spec.n)];
  if (raw_re) *raw_re = std::move(re);
  if (raw_im) *raw_im = std::move(im);
  return counts;
}

}  // namespace detail_census

std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>> census_wht_raw(
    const SheafSpec& spec, const FieldCtx& k, int threads) {
  std::vector<std::int64_t> re, im;
  detail_census::wht_counts(spec, k, threads, /*skip_zero=*/false, &re, &im);
  return {std::move(re), std::move(im)};
}

CensusReport census_wht(const SheafSpec& spec, const FieldCtx& k, int threads) {
  auto t0 = Clock::now();
  CountMap counts =
      detail_census::wht_counts(spec, k, threads, /*skip_zero=*/false, nullptr, nullptr);
  CensusReport rep;
  rep.spec = spec;
  rep.degree = k.degree();
  rep.modulus = k.modulus();
  rep.domain = "k";
  rep.provenance = "wht";
  finalize_report(rep, counts);
  rep.seconds = elapsed(t0);
  return rep;
}

CensusReport census_for_G(const SheafSpec& spec_g, const FieldCtx& k, int threads) {
  if (spec_g.form != SheafForm::G)
    throw std::invalid_argument("census_for_G needs a descent spec");
  auto t0 = Clock::now();
  const int d = k.degree();
  const std::uint64_t n = k.group_order();
  CensusReport rep;
  rep.spec = spec_g;
  rep.degree = d;
  rep.modulus = k.modulus();
  rep.domain = "k*";

  if (std::gcd(spec_g.t_q % n, n) == 1) {
    // t -> t^t(q) is bijective on k^x, so the G census over k^x is the
    // F census over k^x, value for value.
    SheafSpec f = spec_g;
    f.form = SheafForm::F;
    f.kummer_r = 0;
    CountMap counts =
        detail_census::wht_counts(f, k, threads, /*skip_zero=*/true, nullptr, nullptr);
    rep.provenance = "wht-reindexed";
    finalize_report(rep, counts);
  } else {
    if (d > 16) throw std::invalid_argument("pointwise descent census guard exceeded");
    unsigned nt = unsigned(std::max(1, threads));
    if (n < (1u << 10)) nt = 1;
    std::vector<CountMap> partial(nt);
    auto run = [&](unsigned id) {
      std::uint64_t lo = 1 + (n - 1) * id / nt, hi = 1 + (n - 1) * (id + 1) / nt;
      for (std::uint64_t t = lo; t < hi; ++t) {
        RawSum s = raw_sum_G(spec_g, k, FqElt(t), 1);
        ++partial[id][clear_small(-s.re, -s.im, d, spec_g.n)];
      }
    };
    if (nt == 1) {
      run(0);
    } else {
      std::vector<std::thread> pool;
      for (unsigned id = 0; id < nt; ++id) pool.emplace_back(run, id);
      for (auto& th : pool) th.join();
    }
    CountMap counts;
    for (auto& p : partial) merge_counts(counts, p);
    rep.provenance = "pointwise-G";
    finalize_report(rep, counts);
  }
  rep.seconds = elapsed(t0);
  return rep;
}

// ---------------------------------------------------------------- moments

std::pair<mpq_class, mpq_class> cleared_to_rational(const ClearedValue& v) {
  GaussInt z = v.num();
  unsigned k = v.denom_exp() / 2;
  unsigned pow2 = k;
  if (v.denom_exp() & 1) {
    z = z * GaussInt(1, -1);
    ++pow2;
  }
  z = z.times_i_pow((4 - (k & 3)) & 3);
  mpz_class den = 1;
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), pow2);
  mpq_class re(z.re, den), im(z.im, den);
  re.canonicalize();
  im.canonicalize();
  return {re, im};
}

mpq_class empirical_moment(const CensusReport& report, int a, int b) {
  if (a != b)
    throw std::invalid_argument("empirical_moment: need a == b (use the complex variant)");
  if (a < 0) throw std::invalid_argument("empirical_moment: negative order");
  mpq_class sum = 0;
  for (auto& e : report.entries) {
    mpq_class term = 1;
    mpq_class a2 = e.value.abs_square();
    for (int i = 0; i < a; ++i) term *= a2;
    sum += term * mpq_class(static_cast<unsigned long>(e.mult));
  }
  sum /= mpq_class(static_cast<unsigned long>(report.domain_size()));
  return sum;
}

std::pair<mpq_class, mpq_class> empirical_moment_complex(const CensusReport& report,
                                                         int a, int b) {
  if (a < 0 || b < 0) throw std::invalid_argument("moment orders must be nonnegative");
  mpq_class sre = 0, sim = 0;
  for (auto& e : report.entries) {
    GaussInt z = e.value.num();
    GaussInt num = gauss_pow(z, unsigned(a)) * gauss_pow(z.conj(), unsigned(b));
    unsigned exp = e.value.denom_exp() * unsigned(a + b);
    // conj(1/(1+i)^e) = i^e / (1+i)^e
    num = num.times_i_pow((e.value.denom_exp() * unsigned(b)) & 3);
    auto [re, im] = cleared_to_rational(ClearedValue(num, exp));
    mpq_class m(static_cast<unsigned long>(e.mult));
    sre += re * m;
    sim += im * m;
  }
  mpq_class n(static_cast<unsigned long>(report.domain_size()));
  return {sre / n, sim / n};
}

// ----------------------------------------------------------------- output

std::string census_to_json(const CensusReport& report) {
  nlohmann::json j;
  j["n"] = report.spec.n;
  j["degree"] = report.degree;
  j["sheaf"] = report.spec.form == SheafForm::F ? "F" : "G";
  j["domain"] = report.domain;
  j["family"] = report.spec.family;
  j["modulus"] = report.modulus;
  j["provenance"] = report.provenance;
  j["seconds"] = report.seconds;
  nlohmann::json entries = nlohmann::json::array();
  for (auto& e : report.entries) {
    nlohmann::json row;
    row["re"] = e.value.num().re.get_str();
    row["im"] = e.value.num().im.get_str();
    row["denom_exp"] = e.value.denom_exp();
    row["mult"] = e.mult;
    entries.push_back(row);
  }
  j["entries"] = entries;
  j["m22"] = {{"num", report.m22.get_num().get_str()},
              {"den", report.m22.get_den().get_str()},
              {"decimal", report.m22_decimal}};
  return j.dump(2);
}

std::string census_to_csv(const CensusReport& report) {
  std::string s = "re,im,denom_exp,mult\n";
  for (auto& e : report.entries)
    s += e.value.num().re.get_str() + "," + e.value.num().im.get_str() + "," +
         std::to_string(e.value.denom_exp()) + "," + std::to_string(e.mult) + "\n";
  return s;
}

std::string census_to_text(const CensusReport& report) {
  std::string s = "census " + report.spec.summary() + " over degree " +
                  std::to_string(report.degree) + " (" + report.domain + ", " +
                  report.provenance + ")\n";
  for (auto& e : report.entries)
    s += "  " + e.value.rational_string() + "  x " + std::to_string(e.mult) + "\n";
  s += "M_{2,2} = " + report.m22.get_num().get_str() + "/" +
       report.m22.get_den().get_str() + " ~ " + report.m22_decimal + "\n";
  return s;
}

}  // namespace airy
