#pragma once

// Closed-form h-vectors of the Gorenstein families, plus Narayana numbers.

#include <stdexcept>
#include <string>
#include <vector>

#include "ssq/bigint.hpp"
#include "ssq/core.hpp"
#include "ssq/errors.hpp"
#include "ssq/hilbert.hpp"

namespace ssq {

/// N(k, i) = binom(k, i) binom(k, i-1) / k; zero outside 1 <= i <= k.
inline BigInt narayana(int k, int i) {
  if (k < 1) throw std::invalid_argument("narayana needs k >= 1");
  if (i < 1 || i > k) return 0;
  const BigInt product = binomial(k, i) * binomial(k, i - 1);
  if (product % k != 0) throw InternalInconsistency("Narayana number N(" + std::to_string(k) + "," +
                                                    std::to_string(i) + ") is not integral");
  return product / k;
}

inline BigInt catalan(int k) { return binomial(2LL * k, k) / (k + 1); }

/// h-vector of V_{2k}: binom(k, i)^2.
inline HVector hvec_v2k(int k) {
  if (k < 1) throw std::invalid_argument("hvec_v2k needs k >= 1");
  std::vector<BigInt> h;
  for (int i = 0; i <= k; ++i) {
    const BigInt b = binomial(k, i);
    h.push_back(b * b);
  }
  return HVector(std::move(h));
}

/// h-vector of st(x_n^2): binom(n, 2i).
inline HVector hvec_veronese(int n) {
  if (n < 1) throw std::invalid_argument("hvec_veronese needs n >= 1");
  std::vector<BigInt> h;
  for (int i = 0; 2 * i <= n; ++i) h.push_back(binomial(n, 2 * i));
  return HVector(std::move(h));
}

/// h-vector of V_{2k} ∪ st(x_j^2), k+1 <= j <= 2k.
///
/// Built by induction on j from V_{2k} (j = k+1). Going from j-1 to j adds
/// the paths through the N step into x_{2k-j+2} x_j; at index i there are
///   sum binom(2(j-k-1), 2 i1 + 1) N(2k-j+1, i2)
/// of them, over i1 + i2 = i with 0 <= i1 <= j-k-2 and 1 <= i2 <= 2k-j+1.
inline HVector hvec_v2k_square(int k, int j) {
  if (k < 1) throw std::invalid_argument("hvec_v2k_square needs k >= 1");
  if (j < k + 1 || j > 2 * k)
    throw std::out_of_range("hvec_v2k_square needs k+1 <= j <= 2k, got k=" + std::to_string(k) +
                            " j=" + std::to_string(j));
  std::vector<BigInt> h = hvec_v2k(k).entries();
  h.resize(static_cast<std::size_t>(k) + 1);
  for (int step = k + 2; step <= j; ++step) {
    const int lead = 2 * (step - k - 1);
    const int tail = 2 * k - step + 1;
    for (int i1 = 0; i1 <= step - k - 2; ++i1) {
      const BigInt left = binomial(lead, 2 * i1 + 1);
      for (int i2 = 1; i2 <= tail; ++i2) {
        const auto i = static_cast<std::size_t>(i1 + i2);
        if (i >= h.size()) h.resize(i + 1);
        h[i] += left * narayana(tail, i2);
      }
    }
  }
  return HVector(std::move(h));
}

/// h-vector of st(x_2 x_{2k}, x_{2k-1}^2): binom(2k-1, 2i) + binom(2k-2, 2i-2).
inline HVector hvec_hook(int k) {
  if (k < 2) throw std::invalid_argument("hvec_hook needs k >= 2");
  std::vector<BigInt> h;
  for (int i = 0; i <= k; ++i) h.push_back(binomial(2 * k - 1, 2 * i) + binomial(2 * k - 2, 2 * i - 2));
  return HVector(std::move(h));
}

/// The single box added by hvec_onebox: x_a x_{2k+3-a}.
inline Diagram onebox_diagram(int k, int a) {
  const Diagram base = v2k(k);
  const Monomial extra(a, 2 * k + 3 - a);
  const Diagram out = diagram_union(base, closure({extra}));
  // st(m) adds exactly the box m on top of V_{2k}.
  if (out.box_count() != base.box_count() + 1 || base.contains(extra))
    throw InternalInconsistency("V_2k ∪ st(" + to_string(extra) + ") is not V_2k plus one box");
  return out;
}

/// h-vector of V_{2k} ∪ st(x_a x_{2k+3-a}), 3 <= a <= k+1:
///   binom(k, i)^2 + (binom(k-a+1, j)^2)_j * (N(a-2, m))_m.
inline HVector hvec_onebox(int k, int a) {
  if (k < 2) throw std::invalid_argument("hvec_onebox needs k >= 2");
  if (a < 3 || a > k + 1)
    throw std::out_of_range("hvec_onebox needs 3 <= a <= k+1, got k=" + std::to_string(k) +
                            " a=" + std::to_string(a));
  (void)onebox_diagram(k, a);
  Poly lower;
  for (int j = 0; j <= k - a + 1; ++j) {
    const BigInt b = binomial(k - a + 1, j);
    lower.push_back(b * b);
  }
  Poly upper;
  for (int m = 0; m <= a - 2; ++m) upper.push_back(narayana(a - 2, m));
  Poly h = hvec_v2k(k).entries();
  add_into(h, convolve(lower, upper));
  return HVector(std::move(h));
}

}  // namespace ssq
