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

#ifndef BDORDER_CHARACTERS_HPP_
#define BDORDER_CHARACTERS_HPP_

// Characters of S_n (Murnaghan-Nakayama) and of the wreath products
// B_n(d) = (Z/d)^n x| S_n, with the normalized restrictions to <s_0> and
// <s_1> computed two ways: closed form, and brute-force summation over the
// whole group.

#include <optional>
#include <vector>

#include "bdorder/combinatorics.hpp"
#include "bdorder/exactmath.hpp"

namespace bdorder {

/// Conjugacy class of S_n, labelled by cycle lengths.
struct CycleType {
  Partition cycles;
  int size() const { return cycles.size(); }
};

/// chi_alpha evaluated on the class of cycle type `cls`.
BigInt sn_character(const Partition& alpha, const CycleType& cls);

/// chi_alpha(1) by the hook-length formula.
BigInt sn_dimension(const Partition& alpha);

/// Degree of chi_lambda: n! / prod |lambda^(r)|! * prod dim chi_{lambda^(r)}.
BigInt wreath_character_dimension(const Multipartition& lambda);

/// An element (colors, perm) of B_n(d); as a monomial matrix it is
/// diag(zeta^colors) * P(perm), with P(perm) e_j = e_{perm(j)}. Points are
/// 0-based. Product: (c, s)(c', s') = (c + c' o s^{-1}, s s').
class WreathElement {
 public:
  WreathElement(int d, std::vector<int> colors, std::vector<int> perm);
  static WreathElement identity(int d, int n);

  int d() const { return d_; }
  int n() const { return static_cast<int>(perm_.size()); }
  const std::vector<int>& colors() const { return colors_; }
  const std::vector<int>& perm() const { return perm_; }

  WreathElement inverse() const;
  friend WreathElement operator*(const WreathElement& a, const WreathElement& b);
  friend bool operator==(const WreathElement&, const WreathElement&) = default;

 private:
  int d_;
  std::vector<int> colors_;
  std::vector<int> perm_;
};

/// All d^n n! elements of B_n(d).
std::vector<WreathElement> enumerate_wreath_group(int d, int n);

/// Normalized multiplicities: s0[l] = <chi|<s_0>, det^l> / chi(1) and
/// s1 = <chi|<s_1>, det> / chi(1) (absent when n < 2).
struct RestrictionProfile {
  std::vector<Rational> s0_multiplicities;
  std::optional<Rational> s1_det_multiplicity;
  friend bool operator==(const RestrictionProfile&, const RestrictionProfile&) = default;
};

RestrictionProfile restriction_profile_closed(const Multipartition& lambda);

inline constexpr int kBruteForceMaxN = 5;
inline constexpr int kBruteForceMaxD = 4;

/// Builds chi_lambda as the induced character from B_lambda(d) and sums over
/// the whole group. Limited to n <= kBruteForceMaxN, d <= kBruteForceMaxD.
RestrictionProfile restriction_profile_bruteforce(const Multipartition& lambda);

}  // namespace bdorder

#endif  // BDORDER_CHARACTERS_HPP_
