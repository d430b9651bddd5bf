#include "airy/sheaf.hpp"

#include "airy/detail/walk.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace airy {

using detail::add_unit;

std::uint64_t t_of_q(int n) {
  if (n < 0 || n > 30) throw std::out_of_range("t_of_q: n must be in 0..30");
  return (std::uint64_t(1) << (2 * n + 1)) + 1 - (std::uint64_t(1) << (n + 1));
}

namespace {

SheafSpec spec_from_f1(int n, std::vector<std::uint64_t> f1, std::string family) {
  if (n < 1 || n > 20) throw std::out_of_range("sheaf parameter n must be in 1..20");
  SheafSpec s;
  s.n = n;
  s.q = std::uint64_t(1) << (2 * n + 1);
  s.q0 = std::uint64_t(1) << n;
  s.t_q = t_of_q(n);
  s.rank = s.q0 * (s.q - 1);
  std::sort(f1.begin(), f1.end());
  if (!f1.empty() && f1.back() != s.q0 + 1)
    throw std::invalid_argument("f1 must have degree q0+1");
  if (!f1.empty() && f1.front() == 0)
    throw std::invalid_argument("f must vanish at 0");
  s.f1_exps = f1;
  s.f_exps.reserve(f1.size());
  for (auto e : f1) s.f_exps.push_back(e * s.t_q);
  s.family = std::move(family);
  return s;
}

}  // namespace

SheafSpec suzuki_standard(int n) {
  std::vector<std::uint64_t> f1;
  for (int i = 1; i <= n; ++i) f1.push_back(1 + (std::uint64_t(1) << i));
  return spec_from_f1(n, std::move(f1), "standard");
}

SheafSpec infg_family(int n) {
  std::vector<std::uint64_t> f1;
  for (int i = 0; 2 * i <= n - 1; ++i) f1.push_back(1 + (std::uint64_t(1) << (n - 2 * i)));
  return spec_from_f1(n, std::move(f1), "infg");
}

SheafSpec monomial_family(int n, std::uint64_t e) {
  return spec_from_f1(n, {e}, "monomial");
}

SheafSpec custom_spec(int n, std::vector<std::uint64_t> f_exps) {
  if (n < 1 || n > 20) throw std::out_of_range("sheaf parameter n must be in 1..20");
  SheafSpec s;
  s.n = n;
  s.q = std::uint64_t(1) << (2 * n + 1);
  s.q0 = std::uint64_t(1) << n;
  s.t_q = t_of_q(n);
  s.rank = s.q0 * (s.q - 1);
  std::sort(f_exps.begin(), f_exps.end());
  f_exps.erase(std::unique(f_exps.begin(), f_exps.end()), f_exps.end());
  if (f_exps.empty() || f_exps.back() != (s.q0 + 1) * s.t_q)
    throw std::invalid_argument("f must have degree (q0+1)*t(q)");
  if (f_exps.front() == 0) throw std::invalid_argument("f must vanish at 0");
  s.f_exps = std::move(f_exps);
  s.family = "custom";
  return s;
}

SheafSpec descend(const SheafSpec& spec, std::uint64_t r) {
  if (spec.f1_exps.empty())
    throw std::invalid_argument("descent needs f of the form f1(x^t(q))");
  if (r == 0 || spec.t_q % r != 0)
    throw std::invalid_argument("descent degree must divide t(q)");
  SheafSpec g = spec;
  g.form = SheafForm::G;
  g.kummer_r = r;
  return g;
}

std::string SheafSpec::summary() const {
  std::ostringstream os;
  os << (form == SheafForm::F ? "F" : "G") << "(q=2^" << (2 * n + 1);
  if (form == SheafForm::G) os << ", r=" << kummer_r;
  os << ", " << family;
  if (family == "monomial" && !f1_exps.empty()) os << ":" << f1_exps[0];
  os << ")";
  return os.str();
}

GaussUnit trace_L(const FieldCtx& k, const SparsePoly& a, const SparsePoly& b, FqElt x) {
  auto eval = [&](const SparsePoly& p) {
    FqElt acc = 0;
    for (auto& [e, c] : p.terms) {
      if (std::uint64_t(c) >= k.order())
        throw std::invalid_argument("trace_L: coefficient outside the field");
      FqElt xe;
      if (e == 0) xe = 1;
      else if (x == 0) xe = 0;
      else xe = k.pow(x, e % k.group_order());  // x^e = x^(e mod 2^d-1) on k^x
      acc ^= k.mul(c, xe);
    }
    return acc;
  };
  int cls = witt_class(k, eval(a), eval(b));
  return psi2(W2F2{std::uint8_t(cls)});
}

namespace {

using detail::PowerWalk;

template <typename Body>
RawSum walk_sum(const FieldCtx& k, const std::vector<std::uint64_t>& exps, int threads,
                Body body) {
  std::uint64_t n = k.group_order();
  unsigned nt = std::max(1, threads);
  if (nt > 1 && n < 1u << 12) nt = 1;
  std::vector<RawSum> partial(nt);
  auto run = [&](unsigned id) {
    std::uint64_t lo = n * id / nt, hi = n * (id + 1) / nt;
    PowerWalk w(k, exps, lo);
    RawSum& acc = partial[id];
    for (std::uint64_t j = lo; j < hi; ++j) {
      body(w.cur, acc);
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
  RawSum total;
  for (auto& p : partial) {
    total.re += p.re;
    total.im += p.im;
  }
  return total;
}

}  // namespace

RawSum raw_sum_F(const SheafSpec& spec, const FieldCtx& k, FqElt t, int threads) {
  if (std::uint64_t(t) >= k.order()) throw std::invalid_argument("t outside the field");
  // exponent walk: slot 0 is x itself, slot 1 is x^t(q), then f's monomials
  std::vector<std::uint64_t> exps{1, spec.t_q};
  exps.insert(exps.end(), spec.f_exps.begin(), spec.f_exps.end());
  RawSum s = walk_sum(k, exps, threads, [&](const std::vector<FqElt>& cur, RawSum& acc) {
    FqElt x = cur[0], a = cur[1], b = 0;
    for (size_t i = 2; i < cur.size(); ++i) b ^= cur[i];
    b ^= k.mul_fast(t, x);
    add_unit(witt_class(k, a, b), acc.re, acc.im);
  });
  // x = 0 contributes psi2 of the zero vector
  s.re += 1;
  return s;
}

RawSum raw_sum_G(const SheafSpec& spec, const FieldCtx& k, FqElt t, int threads) {
  if (spec.form != SheafForm::G) throw std::invalid_argument("raw_sum_G: spec is not a descent");
  if (t == 0) throw std::invalid_argument("the descent lives on the multiplicative group; t = 0 rejected");
  if (std::uint64_t(t) >= k.order()) throw std::invalid_argument("t outside the field");
  std::uint64_t s_exp = spec.t_q / spec.kummer_r;
  FqElt u = k.pow(k.inv(t), s_exp);  // u = t^(-s)
  // y = x^t(q) * u walks multiplicatively; track x^(t(q)*e) per f1 exponent.
  // slot 0: x, slot 1: x^t(q), slot 2+i: x^(t(q)*e_i)
  std::vector<std::uint64_t> exps{1, spec.t_q};
  std::vector<FqElt> u_pows;
  for (auto e : spec.f1_exps) {
    exps.push_back(spec.t_q * e);
    u_pows.push_back(k.pow(u, e));
  }
  RawSum sum = walk_sum(k, exps, threads, [&](const std::vector<FqElt>& cur, RawSum& acc) {
    FqElt x = cur[0];
    FqElt y = k.mul_fast(cur[1], u);
    FqElt b = x;
    for (size_t i = 0; i < u_pows.size(); ++i) b ^= k.mul_fast(cur[2 + i], u_pows[i]);
    add_unit(witt_class(k, y, b), acc.re, acc.im);
  });
  sum.re += 1;  // x = 0 term
  return sum;
}

ClearedValue clear_raw(RawSum s, int degree, int n) {
  GaussInt num(-s.re, -s.im);
  // 1/(1-i)^d = i^d/(1+i)^d
  if (n % 2 == 0) num = num.times_i_pow(unsigned(degree & 3));
  return ClearedValue(num, unsigned(degree));
}

ClearedValue trace_F(const SheafSpec& spec, const FieldCtx& k, FqElt t, int threads) {
  return clear_raw(raw_sum_F(spec, k, t, threads), k.degree(), spec.n);
}

ClearedValue trace_G(const SheafSpec& spec, const FieldCtx& k, FqElt t, int threads) {
  return clear_raw(raw_sum_G(spec, k, t, threads), k.degree(), spec.n);
}

}  // namespace airy
