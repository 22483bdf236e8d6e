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

// Exhaustive and seeded-random checks of the structural invariants.

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "bdorder/blocks.hpp"
#include "bdorder/characters.hpp"
#include "bdorder/combinatorics.hpp"
#include "bdorder/corder.hpp"
#include "bdorder/exactmath.hpp"

namespace bdorder {
namespace {

ParameterSet random_params(std::mt19937& rng, int d, int n) {
  std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
  auto draw = [&] { return Rational(BigInt(num(rng)), BigInt(den(rng))); };
  std::vector<std::optional<Rational>> h_r;
  for (int r = 0; r < d; ++r) h_r.emplace_back(draw());
  return ParameterSet(d, n, draw(), h_r);
}

LinearForm random_form(std::mt19937& rng, int d) {
  std::uniform_int_distribution<int> num(-5, 5), den(1, 3), pick(0, 2);
  LinearForm f(Rational(BigInt(num(rng)), BigInt(den(rng))));
  if (pick(rng) > 0) f = f + LinearForm::variable(Variable::h(), Rational(BigInt(num(rng)), BigInt(den(rng))));
  for (int r = 0; r < d; ++r) {
    if (pick(rng) == 0) f = f + LinearForm::variable(Variable::h_index(r), num(rng));
  }
  return f;
}

// ---------------------------------------------------------- combinatorics

TEST(CombinatoricsProperties, TransposeIsInvolution) {
  for (int n = 0; n <= 30; ++n) {
    for (const auto& p : enumerate_partitions(n)) ASSERT_EQ(transpose(transpose(p)), p);
  }
}

TEST(CombinatoricsProperties, DominanceIsPartialOrder) {
  for (int d = 1; d <= 3; ++d) {
    for (int n = 0; n <= 6; ++n) {
      const auto labels = enumerate_multipartitions(d, n);
      const std::size_t size = labels.size();
      std::vector<char> leq(size * size);
      for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t j = 0; j < size; ++j) leq[i * size + j] = dominates(labels[i], labels[j]);
      }
      for (std::size_t i = 0; i < size; ++i) {
        ASSERT_TRUE(leq[i * size + i]);
        for (std::size_t j = 0; j < size; ++j) {
          if (i != j) {
            ASSERT_FALSE(leq[i * size + j] && leq[j * size + i]);
          }
          if (!leq[i * size + j]) continue;
          for (std::size_t k = 0; k < size; ++k) {
            if (leq[j * size + k]) {
              ASSERT_TRUE(leq[i * size + k]);
            }
          }
        }
      }
    }
  }
}

TEST(CombinatoricsProperties, CoversMatchBruteForce) {
  for (int d = 1; d <= 3; ++d) {
    for (int n = 0; n <= 6; ++n) {
      const auto labels = enumerate_multipartitions(d, n);
      for (const auto& mu : labels) {
        std::set<Multipartition> brute;
        for (const auto& lambda : labels) {
          if (lambda == mu || !dominates(lambda, mu)) continue;
          bool between = false;
          for (const auto& nu : labels) {
            if (nu != lambda && nu != mu && dominates(lambda, nu) && dominates(nu, mu)) {
              between = true;
              break;
            }
          }
          if (!between) brute.insert(lambda);
        }
        std::set<Multipartition> cased;
        std::size_t count = 0;
        for (const auto& c : dominance_covers(mu)) {
          cased.insert(c.lambda);
          ++count;
        }
        EXPECT_EQ(count, cased.size()) << "duplicates for " << mu.to_string();
        EXPECT_EQ(cased, brute) << mu.to_string();
      }
    }
  }
}

// -------------------------------------------------------------- exactmath

TEST(ExactmathProperties, IntegerDifferenceIsAntisymmetric) {
  std::mt19937 rng(20261016);
  for (int trial = 0; trial < 2000; ++trial) {
    const LinearForm a = random_form(rng, 3);
    const LinearForm b = trial % 3 == 0 ? a + LinearForm(trial % 5 - 2) : random_form(rng, 3);
    const auto ab = integer_difference(a, b);
    const auto ba = integer_difference(b, a);
    ASSERT_EQ(ab.has_value(), ba.has_value());
    if (ab) {
      ASSERT_EQ(*ab, -*ba);
    }
  }
}

TEST(ExactmathProperties, TextRoundTrips) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long long> big(-1'000'000'000'000LL, 1'000'000'000'000LL);
  for (int trial = 0; trial < 1000; ++trial) {
    BigInt den = big(rng);
    if (den == 0) den = 1;
    const Rational r(BigInt(big(rng)) * BigInt(big(rng)), den);
    ASSERT_EQ(Rational::parse(r.to_string()), r);
    const LinearForm f = random_form(rng, 4);
    ASSERT_EQ(LinearForm::parse(f.to_string()), f);
  }
  for (int m = 1; m <= 40; ++m) {
    const IntPoly p = cyclotomic(m);
    ASSERT_EQ(p.divide_exact(p), IntPoly({1}));
  }
}

// ------------------------------------------------------------- characters

TEST(CharacterProperties, RestrictionClosedFormMatchesBruteForce) {
  for (int d = 1; d <= 3; ++d) {
    for (int n = 1; n <= 4; ++n) {
      for (const auto& l : enumerate_multipartitions(d, n)) {
        EXPECT_EQ(restriction_profile_closed(l), restriction_profile_bruteforce(l)) << l.to_string();
      }
    }
  }
}

// ----------------------------------------------------------------- corder

TEST(CorderProperties, NormalizationGapIsConstant) {
  for (int d = 1; d <= 3; ++d) {
    for (int n = 1; n <= 5; ++n) {
      const auto labels = enumerate_multipartitions(d, n);
      const LinearForm gap = c_form(labels[0]) - c_form_from_multiplicities(labels[0]);
      for (const auto& l : labels) {
        EXPECT_EQ(c_form(l) - c_form_from_multiplicities(l), gap) << l.to_string();
      }
      // The gap has no constant term, so orders from either form coincide.
      EXPECT_TRUE(gap.constant().is_zero());
    }
  }
}

TEST(CorderProperties, CPrimeVanishesExactlyOnTrivial) {
  for (int d = 1; d <= 3; ++d) {
    for (int n = 1; n <= 5; ++n) {
      const Multipartition trivial = trivial_multipartition(d, n);
      for (const auto& l : enumerate_multipartitions(d, n)) {
        EXPECT_EQ(c_prime_form(l).is_zero(), l == trivial) << l.to_string();
      }
    }
  }
}

TEST(CorderProperties, DominanceControlsCOnSampledRegion) {
  for (int d = 1; d <= 3; ++d) {
    for (int n = 1; n <= 6; ++n) {
      std::vector<ParameterSet> samples;
      for (int h : {0, -1, -2}) {
        for (int mask = 0; mask < (1 << (d - 1)); ++mask) {
          std::vector<std::optional<Rational>> h_r{Rational(0)};
          int value = 0;
          for (int s = 1; s < d; ++s) {
            value += (1 - n) * h + ((mask >> (s - 1)) & 1);
            h_r.emplace_back(Rational(value));
          }
          samples.emplace_back(d, n, Rational(h), h_r);
        }
      }
      const auto labels = enumerate_multipartitions(d, n);
      for (const auto& lambda : labels) {
        for (const auto& mu : labels) {
          if (!dominates(lambda, mu)) continue;
          const LinearForm diff = c_form(lambda) - c_form(mu);
          for (const auto& p : samples) {
            ASSERT_GE(evaluate(diff, p).constant(), Rational(0))
                << lambda.to_string() << " <| " << mu.to_string() << " at " << p.to_string();
          }
        }
      }
    }
  }
}

TEST(CorderProperties, TwistIsGroupAction) {
  std::mt19937 rng(11);
  for (int d = 1; d <= 5; ++d) {
    const ParameterSet p = random_params(rng, d, 2);
    for (int r = 0; r < d; ++r) {
      for (int r2 = 0; r2 < d; ++r2) {
        EXPECT_EQ(twist_parameters(twist_parameters(p, r), r2), twist_parameters(p, (r + r2) % d));
      }
    }
  }
}

TEST(CorderProperties, CategoryOGreaterImpliesCoarseGreater) {
  std::mt19937 rng(13);
  for (int d = 1; d <= 3; ++d) {
    for (int n = 1; n <= 4; ++n) {
      for (int trial = 0; trial < 6; ++trial) {
        const ParameterSet p = random_params(rng, d, n);
        const auto labels = enumerate_multipartitions(d, n);
        for (const auto& a : labels) {
          for (const auto& b : labels) {
            const Comparison strict = compare(a, b, p, OrderConvention::kCategoryO);
            if (strict == Comparison::kGreater || strict == Comparison::kLess) {
              EXPECT_EQ(compare(a, b, p, OrderConvention::kCoarseLinear), strict);
            }
          }
        }
      }
    }
  }
}

TEST(CorderProperties, PosetInvariantUnderNormalizeShift) {
  std::mt19937 rng(17);
  for (int d = 1; d <= 3; ++d) {
    for (int n = 1; n <= 4; ++n) {
      const ParameterSet p = random_params(rng, d, n);
      for (const Rational& f : {Rational(0), Rational(-1), Rational(5, 3)}) {
        const ParameterSet q = normalize_shift(p, f, Rational(2, 7));
        EXPECT_EQ(build_order_poset(q), build_order_poset(p));
        for (const auto& l : enumerate_multipartitions(d, n)) {
          EXPECT_EQ(evaluate(c_prime_form(l), q), evaluate(c_prime_form(l), p));
        }
      }
    }
  }
}

TEST(CorderProperties, OrdersEqualIsSymmetric) {
  std::mt19937 rng(19);
  for (int trial = 0; trial < 30; ++trial) {
    const ParameterSet a = random_params(rng, 2, 3);
    const ParameterSet b = random_params(rng, 2, 3);
    EXPECT_EQ(orders_equal(a, b).equal, orders_equal(b, a).equal);
    EXPECT_TRUE(orders_equal(a, a).equal);
  }
}

// ----------------------------------------------------------------- blocks

TEST(BlocksProperties, ComparableLabelsShareALinkageClass) {
  std::mt19937 rng(23);
  for (int d = 1; d <= 3; ++d) {
    for (int n = 1; n <= 4; ++n) {
      for (int trial = 0; trial < 5; ++trial) {
        const ParameterSet p = random_params(rng, d, n);
        const LinkagePartition link = linkage_partition(p);
        std::vector<std::size_t> class_of(link.labels.size());
        std::size_t covered = 0;
        for (std::size_t c = 0; c < link.classes.size(); ++c) {
          for (std::size_t i : link.classes[c]) class_of[i] = c;
          covered += link.classes[c].size();
        }
        ASSERT_EQ(covered, link.labels.size());
        const OrderPoset poset = build_order_poset(p);
        for (const auto& [i, j] : poset.relations()) EXPECT_EQ(class_of[i], class_of[j]);
      }
    }
  }
}

TEST(BlocksProperties, PolynomialSeriesNeedsLargeBlocks) {
  std::size_t polynomial_blocks = 0;
  for (int d = 1; d <= 2; ++d) {
    for (int n = 1; n <= 3; ++n) {
      for (int hn = -3; hn <= 3; ++hn) {
        for (int hden : {1, 2, 3}) {
          for (int h1 : {0, 1, 2}) {
            std::vector<std::optional<Rational>> h_r{Rational(0)};
            if (d == 2) h_r.emplace_back(Rational(BigInt(h1), BigInt(2)));
            const ParameterSet p(d, n, Rational(BigInt(hn), BigInt(hden)), h_r);
            const LinkagePartition link = linkage_partition(p);
            for (const auto& cls : link.classes) {
              std::vector<Multipartition> block;
              for (std::size_t i : cls) block.push_back(link.labels[i]);
              std::vector<Multipartition> sorted;
              try {
                sorted = sort_block(block, p);
              } catch (const std::exception&) {
                continue;  // not totally ordered
              }
              const GradedSeries s =
                  simple_dimension_series(block, static_cast<int>(block.size()), p, 4);
              if (s.polynomial_detect()) {
                ++polynomial_blocks;
                EXPECT_GE(static_cast<int>(block.size()), n + 1) << p.to_string();
              }
            }
          }
        }
      }
    }
  }
  EXPECT_GT(polynomial_blocks, 0u);
}

TEST(BlocksProperties, OrbitInvariantUnderTwist) {
  std::mt19937 rng(29);
  for (int d = 1; d <= 4; ++d) {
    for (int trial = 0; trial < 20; ++trial) {
      const ParameterSet p = random_params(rng, d, 2);
      const auto base = orbit_decomposition(p);
      for (int r = 0; r < d; ++r) {
        const auto twisted = orbit_decomposition(twist_parameters(p, r));
        // Index j of the twisted set is index (j + r) mod d of the original.
        std::set<std::set<int>> relabeled, original;
        for (const auto& cls : twisted.classes) {
          std::set<int> s;
          for (int j : cls) s.insert((j + r) % d);
          relabeled.insert(s);
        }
        for (const auto& cls : base.classes) original.insert({cls.begin(), cls.end()});
        EXPECT_EQ(relabeled, original) << p.to_string() << " r=" << r;
      }
    }
  }
}

}  // namespace
}  // namespace bdorder
