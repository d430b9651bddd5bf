#pragma once

#include <cstdint>
#include <vector>

#include "airy/gf2m.hpp"

// Internal helper: enumerate k^x as powers of the fixed generator while
// advancing a set of tracked powers x^(e_i) by one multiplication per step.

namespace airy::detail {

struct PowerWalk {
  const FieldCtx& k;
  std::vector<FqElt> step;  // g^(e_i)
  std::vector<FqElt> cur;   // g^(j * e_i) at the current step j

  PowerWalk(const FieldCtx& kk, const std::vector<std::uint64_t>& exps, std::uint64_t j0)
      : k(kk) {
    FqElt g = k.generator();
    std::uint64_t n = k.group_order();
    for (auto e : exps) {
      std::uint64_t em = e % n;
      step.push_back(k.pow(g, em));
      cur.push_back(k.pow(g, (j0 * em) % n));
    }
  }

  void advance() {
    for (size_t i = 0; i < cur.size(); ++i) cur[i] = k.mul_fast(cur[i], step[i]);
  }
};

inline void add_unit(int cls, std::int64_t& re, std::int64_t& im) {
  switch (cls & 3) {
    case 0: ++re; break;
    case 1: ++im; break;
    case 2: --re; break;
    default: --im; break;
  }
}

}  // namespace airy::detail
