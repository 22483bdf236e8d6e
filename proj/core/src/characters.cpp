// Copyright 2026 The bdorder Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bdorder/characters.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "bdorder/error.hpp"

namespace bdorder {

namespace {

BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// First-column hook lengths, strictly decreasing.
std::vector<int> beta_set(const Partition& alpha) {
  const int l = alpha.length();
  std::vector<int> beta(static_cast<std::size_t>(l));
  for (int i = 1; i <= l; ++i) beta[i - 1] = alpha.row(i) + l - i;
  return beta;
}

Partition from_beta_set(std::vector<int> beta) {
  std::sort(beta.begin(), beta.end(), std::greater<>());
  const int l = static_cast<int>(beta.size());
  std::vector<int> parts(static_cast<std::size_t>(l));
  for (int i = 1; i <= l; ++i) parts[i - 1] = beta[i - 1] - (l - i);
  return Partition(std::move(parts));
}

// Murnaghan-Nakayama: strip a rim hook of length cycles[next] in every
// possible way, each weighted by (-1)^height.
BigInt mn_recursive(const Partition& alpha, const std::vector<int>& cycles, std::size_t next) {
  if (next == cycles.size()) return alpha.empty() ? BigInt(1) : BigInt(0);
  const int k = cycles[next];
  const std::vector<int> beta = beta_set(alpha);
  BigInt total = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    const int target = beta[i] - k;
    if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    const auto crossed = std::count_if(beta.begin(), beta.end(), [&](int b) {
      return b > target && b < beta[i];
    });
    std::vector<int> moved = beta;
    moved[i] = target;
    BigInt value = mn_recursive(from_beta_set(std::move(moved)), cycles, next + 1);
    if (crossed % 2 == 1) value = -value;
    total += value;
  }
  return total;
}

}  // namespace

BigInt sn_character(const Partition& alpha, const CycleType& cls) {
  if (alpha.size() != cls.size()) {
    throw DomainError("character argument size mismatch: |alpha| = " +
                      std::to_string(alpha.size()) + ", class size " +
                      std::to_string(cls.size()));
  }
  return mn_recursive(alpha, cls.cycles.parts(), 0);
}

BigInt sn_dimension(const Partition& alpha) {
  const Partition cols = transpose(alpha);
  BigInt hooks = 1;
  for (int i = 1; i <= alpha.length(); ++i) {
    for (int j = 1; j <= alpha.row(i); ++j) {
      hooks *= (alpha.row(i) - j) + (cols.row(j) - i) + 1;
    }
  }
  return factorial(alpha.size()) / hooks;
}

BigInt wreath_character_dimension(const Multipartition& lambda) {
  BigInt value = factorial(lambda.size());
  BigInt denominator = 1;
  for (const auto& comp : lambda.components()) {
    denominator *= factorial(comp.size());
    value *= sn_dimension(comp);
  }
  return value / denominator;
}

// ------------------------------------------------------------ WreathElement

WreathElement::WreathElement(int d, std::vector<int> colors, std::vector<int> perm)
    : d_(d), colors_(std::move(colors)), perm_(std::move(perm)) {
  if (d_ < 1) throw DomainError("wreath element needs d >= 1");
  if (colors_.size() != perm_.size()) throw DomainError("colors and perm differ in length");
  std::vector<bool> hit(perm_.size(), false);
  for (std::size_t i = 0; i < perm_.size(); ++i) {
    if (colors_[i] < 0 || colors_[i] >= d_) throw DomainError("color out of range");
    const int p = perm_[i];
    if (p < 0 || p >= n() || hit[p]) throw DomainError("perm is not a permutation");
    hit[p] = true;
  }
}

WreathElement WreathElement::identity(int d, int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  return WreathElement(d, std::vector<int>(static_cast<std::size_t>(n), 0), std::move(perm));
}

WreathElement WreathElement::inverse() const {
  std::vector<int> colors(colors_.size());
  std::vector<int> perm(perm_.size());
  for (std::size_t j = 0; j < perm_.size(); ++j) {
    perm[perm_[j]] = static_cast<int>(j);
    colors[j] = (d_ - colors_[perm_[j]]) % d_;
  }
  return WreathElement(d_, std::move(colors), std::move(perm));
}

WreathElement operator*(const WreathElement& a, const WreathElement& b) {
  if (a.d_ != b.d_ || a.n() != b.n()) throw DomainError("wreath product of mismatched elements");
  const auto n = a.perm_.size();
  std::vector<int> inv(n);
  for (std::size_t j = 0; j < n; ++j) inv[a.perm_[j]] = static_cast<int>(j);
  std::vector<int> colors(n);
  std::vector<int> perm(n);
  for (std::size_t i = 0; i < n; ++i) {
    colors[i] = (a.colors_[i] + b.colors_[inv[i]]) % a.d_;
    perm[i] = a.perm_[b.perm_[i]];
  }
  return WreathElement(a.d_, std::move(colors), std::move(perm));
}

std::vector<WreathElement> enumerate_wreath_group(int d, int n) {
  if (d < 1 || n < 0) throw DomainError("wreath group needs d >= 1, n >= 0");
  std::vector<WreathElement> out;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<int> colors(static_cast<std::size_t>(n), 0);
    while (true) {
      out.emplace_back(d, colors, perm);
      int i = 0;
      while (i < n && ++colors[i] == d) colors[i++] = 0;
      if (i == n) break;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// ------------------------------------------------------ restriction profiles

RestrictionProfile restriction_profile_closed(const Multipartition& lambda) {
  const int n = lambda.size();
  if (n == 0) throw DomainError("restriction profile needs n >= 1");
  RestrictionProfile out;
  for (const auto& comp : lambda.components()) {
    out.s0_multiplicities.push_back(Rational(comp.size(), n));
  }
  if (n >= 2) {
    out.s1_det_multiplicity =
        Rational(1, 2) + Rational(bd_statistic(lambda).total(), n * (n - 1));
  }
  return out;
}

namespace {

// Induced character of phi^(1) chi_{lambda^(1)} x ... x phi^(d) chi_{lambda^(d)}
// from B_lambda(d), evaluated as an element of Z[Z/d] (coefficient of
// zeta^e at index e) and scaled by |B_lambda(d)|.
class InducedCharacter {
 public:
  InducedCharacter(const Multipartition& lambda)
      : lambda_(lambda), d_(lambda.d()), group_(enumerate_wreath_group(d_, lambda.size())) {
    int start = 0;
    for (const auto& comp : lambda.components()) {
      block_start_.push_back(start);
      start += comp.size();
    }
    block_start_.push_back(start);
  }

  std::vector<BigInt> scaled_value(const WreathElement& g) {
    std::vector<BigInt> acc(static_cast<std::size_t>(d_), BigInt(0));
    for (const auto& x : group_) {
      const WreathElement y = x * g * x.inverse();
      accumulate_psi(y, acc);
    }
    return acc;
  }

  BigInt subgroup_order() const {
    BigInt order = 1;
    for (int i = 0; i < lambda_.size(); ++i) order *= d_;
    for (const auto& comp : lambda_.components()) order *= factorial(comp.size());
    return order;
  }

 private:
  int block_of(int point) const {
    int r = 0;
    while (point >= block_start_[r + 1]) ++r;
    return r;
  }

  void accumulate_psi(const WreathElement& y, std::vector<BigInt>& acc) {
    const auto& perm = y.perm();
    const auto& colors = y.colors();
    for (int i = 0; i < y.n(); ++i) {
      if (block_of(perm[i]) != block_of(i)) return;  // not in B_lambda(d)
    }
    int exponent = 0;
    BigInt coefficient = 1;
    for (int r = 0; r < d_; ++r) {
      const int lo = block_start_[r];
      const int hi = block_start_[r + 1];
      int color_sum = 0;
      for (int i = lo; i < hi; ++i) color_sum += colors[i];
      exponent = (exponent + r * color_sum) % d_;

      std::vector<int> cycles;
      std::vector<bool> seen(static_cast<std::size_t>(hi - lo), false);
      for (int i = lo; i < hi; ++i) {
        if (seen[i - lo]) continue;
        int len = 0;
        for (int j = i; !seen[j - lo]; j = perm[j]) {
          seen[j - lo] = true;
          ++len;
        }
        cycles.push_back(len);
      }
      std::sort(cycles.begin(), cycles.end(), std::greater<>());
      Partition cls(std::move(cycles));
      const auto key = std::make_pair(lambda_.component(r + 1), cls);
      auto it = cache_.find(key);
      if (it == cache_.end()) {
        it = cache_.emplace(key, sn_character(key.first, CycleType{key.second})).first;
      }
      coefficient *= it->second;
      if (coefficient == 0) return;
    }
    acc[exponent] += coefficient;
  }

  const Multipartition& lambda_;
  int d_;
  std::vector<WreathElement> group_;
  std::vector<int> block_start_;
  std::map<std::pair<Partition, Partition>, BigInt> cache_;
};

// Evaluates sum_e a_e zeta_d^e, which must be rational: reduction modulo
// Phi_d has to leave a constant.
BigInt evaluate_cyclotomic(const std::vector<BigInt>& coefficients, int d) {
  const IntPoly reduced = IntPoly(coefficients).divmod_monic(cyclotomic(d)).second;
  if (reduced.degree() > 0) {
    throw std::logic_error("character value is not rational: " + reduced.to_string());
  }
  return reduced.coefficient(0);
}

}  // namespace

RestrictionProfile restriction_profile_bruteforce(const Multipartition& lambda) {
  const int n = lambda.size();
  const int d = lambda.d();
  if (n == 0) throw DomainError("restriction profile needs n >= 1");
  if (n > kBruteForceMaxN || d > kBruteForceMaxD) {
    throw DomainError("brute-force restriction limited to n <= " +
                      std::to_string(kBruteForceMaxN) + ", d <= " +
                      std::to_string(kBruteForceMaxD));
  }
  InducedCharacter chi(lambda);
  const BigInt degree = evaluate_cyclotomic(chi.scaled_value(WreathElement::identity(d, n)), d);

  // values[k] = chi(s_0^k), s_0 = diag(zeta, 1, ..., 1).
  std::vector<std::vector<BigInt>> values;
  for (int k = 0; k < d; ++k) {
    WreathElement g = WreathElement::identity(d, n);
    std::vector<int> colors = g.colors();
    colors[0] = k;
    values.push_back(chi.scaled_value(WreathElement(d, std::move(colors), g.perm())));
  }

  RestrictionProfile out;
  for (int l = 0; l < d; ++l) {
    // sum_k chi(s_0^k) zeta^{-lk}
    std::vector<BigInt> total(static_cast<std::size_t>(d), BigInt(0));
    for (int k = 0; k < d; ++k) {
      for (int e = 0; e < d; ++e) {
        total[((e - l * k) % d + d) % d] += values[k][e];
      }
    }
    out.s0_multiplicities.push_back(
        Rational(evaluate_cyclotomic(total, d), BigInt(degree * d)));
  }

  if (n >= 2) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::swap(perm[0], perm[1]);
    const BigInt at_s1 = evaluate_cyclotomic(
        chi.scaled_value(WreathElement(d, std::vector<int>(static_cast<std::size_t>(n), 0),
                                       std::move(perm))),
        d);
    out.s1_det_multiplicity = Rational(degree - at_s1, BigInt(2 * degree));
  }
  return out;
}

}  // namespace bdorder
