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

#include "bdorder/verify.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "bdorder/blocks.hpp"
#include "bdorder/characters.hpp"
#include "bdorder/combinatorics.hpp"
#include "bdorder/corder.hpp"
#include "bdorder/error.hpp"

namespace bdorder {

namespace {

struct Limits {
  int dmax_default, nmax_default, dmax_limit, nmax_limit;
};

void check_bounds(const char* suite, int dmax, int nmax, const Limits& lim) {
  if (dmax < 1 || dmax > lim.dmax_limit || nmax < 0 || nmax > lim.nmax_limit) {
    std::ostringstream msg;
    msg << suite << ": bounds dmax=" << dmax << " nmax=" << nmax << " outside 1.."
        << lim.dmax_limit << " / 0.." << lim.nmax_limit;
    throw DomainError(msg.str());
  }
}

std::string bounds_text(int dmax, int nmax) {
  return "dmax=" + std::to_string(dmax) + " nmax=" + std::to_string(nmax);
}

void fail(VerifyResult& r, const std::string& what) {
  if (r.passed) r.counterexample = what;
  r.passed = false;
}

std::string join(const std::vector<Multipartition>& labels) {
  std::string out = "{";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i > 0) out += ", ";
    out += labels[i].to_string();
  }
  return out + "}";
}

constexpr Limits kCoverLimits{3, 6, 4, 8};
constexpr Limits kRestrictionLimits{3, 4, kBruteForceMaxD, kBruteForceMaxN};
constexpr Limits kConsistencyLimits{3, 5, 5, 8};
constexpr Limits kComparisonLimits{3, 6, 4, 7};
constexpr Limits kSemisimplicityLimits{3, 5, 4, 6};
constexpr int kDefaultMatrixSize = 10;
constexpr int kMaxMatrixSize = 64;

}  // namespace

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names{"covers",     "restrictions", "corder-consistency",
                                              "comporders", "dm-identity",  "ss"};
  return names;
}

VerifyResult run_verify_suite(std::string_view suite, VerifyOptions o) {
  auto pick = [](int v, int fallback) { return v > 0 ? v : fallback; };
  if (suite == "covers") {
    return verify_covers(pick(o.dmax, kCoverLimits.dmax_default),
                         pick(o.nmax, kCoverLimits.nmax_default));
  }
  if (suite == "restrictions") {
    return verify_restrictions(pick(o.dmax, kRestrictionLimits.dmax_default),
                               pick(o.nmax, kRestrictionLimits.nmax_default));
  }
  if (suite == "corder-consistency") {
    return verify_corder_consistency(pick(o.dmax, kConsistencyLimits.dmax_default),
                                     pick(o.nmax, kConsistencyLimits.nmax_default));
  }
  if (suite == "comporders") {
    return verify_comporders(pick(o.dmax, kComparisonLimits.dmax_default),
                             pick(o.nmax, kComparisonLimits.nmax_default));
  }
  if (suite == "dm-identity") return verify_dm_identity(pick(o.size, kDefaultMatrixSize));
  if (suite == "ss") {
    return verify_ss(pick(o.dmax, kSemisimplicityLimits.dmax_default),
                     pick(o.nmax, kSemisimplicityLimits.nmax_default));
  }
  throw ParseError("unknown verify suite '" + std::string(suite) + "'");
}

// Covers computed from `dominates` alone: lambda < mu with nothing strictly
// between them.
VerifyResult verify_covers(int dmax, int nmax) {
  check_bounds("covers", dmax, nmax, kCoverLimits);
  VerifyResult r{"covers", true, 0, {}, bounds_text(dmax, nmax)};
  for (int d = 1; d <= dmax; ++d) {
    for (int n = 0; n <= nmax; ++n) {
      const auto labels = enumerate_multipartitions(d, n);
      const std::size_t size = labels.size();
      std::vector<char> below(size * size);  // below[i*size+j]: labels[i] strictly under labels[j]
      for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t j = 0; j < size; ++j) {
          below[i * size + j] = i != j && dominates(labels[i], labels[j]);
        }
      }
      for (std::size_t m = 0; m < size; ++m) {
        std::set<Multipartition> brute;
        for (std::size_t l = 0; l < size; ++l) {
          if (!below[l * size + m]) continue;
          bool cover = true;
          for (std::size_t k = 0; k < size && cover; ++k) {
            cover = !(below[l * size + k] && below[k * size + m]);
          }
          if (cover) brute.insert(labels[l]);
        }
        std::set<Multipartition> cased;
        for (const auto& c : dominance_covers(labels[m])) cased.insert(c.lambda);
        ++r.checked;
        if (brute != cased) {
          fail(r, "mu=" + labels[m].to_string() + " case-covers=" +
                      join({cased.begin(), cased.end()}) +
                      " brute-covers=" + join({brute.begin(), brute.end()}));
        }
      }
    }
  }
  return r;
}

VerifyResult verify_restrictions(int dmax, int nmax) {
  check_bounds("restrictions", dmax, nmax, kRestrictionLimits);
  VerifyResult r{"restrictions", true, 0, {}, bounds_text(dmax, nmax)};
  for (int d = 1; d <= dmax; ++d) {
    for (int n = 1; n <= nmax; ++n) {
      for (const auto& lambda : enumerate_multipartitions(d, n)) {
        ++r.checked;
        if (restriction_profile_closed(lambda) != restriction_profile_bruteforce(lambda)) {
          fail(r, "lambda=" + lambda.to_string());
        }
      }
    }
  }
  return r;
}

VerifyResult verify_corder_consistency(int dmax, int nmax) {
  check_bounds("corder-consistency", dmax, nmax, kConsistencyLimits);
  VerifyResult r{"corder-consistency", true, 0, {}, bounds_text(dmax, nmax)};
  for (int d = 1; d <= dmax; ++d) {
    for (int n = 1; n <= nmax; ++n) {
      const auto labels = enumerate_multipartitions(d, n);
      const LinearForm shift = c_form(labels.front()) - c_form_from_multiplicities(labels.front());
      for (const auto& lambda : labels) {
        ++r.checked;
        const LinearForm here = c_form(lambda) - c_form_from_multiplicities(lambda);
        if (here != shift) {
          fail(r, "d=" + std::to_string(d) + " n=" + std::to_string(n) + " lambda=" +
                      lambda.to_string() + " shift " + here.to_string() + " != " +
                      shift.to_string());
        }
      }
    }
  }
  return r;
}

namespace {

// Parameters in the comparison region: h <= 0, h_0 = 0 and every gap
// h_s - h_{s-1} at or one above its lower bound (1-n)h.
std::vector<ParameterSet> comparison_samples(int d, int n) {
  std::vector<ParameterSet> out;
  for (int h : {0, -1, -2}) {
    for (int mask = 0; mask < (1 << (d - 1)); ++mask) {
      std::vector<std::optional<Rational>> values{Rational(0)};
      Rational current(0);
      for (int s = 1; s < d; ++s) {
        current += Rational((1 - n) * h + ((mask >> (s - 1)) & 1));
        values.emplace_back(current);
      }
      out.emplace_back(d, n, Rational(h), std::move(values));
    }
  }
  return out;
}

}  // namespace

// For lambda below mu in dominance, c_lambda - c_mu must be >= 0 on the whole
// region. Checked symbolically with h_0 = 0 and h_s - h_{s-1} = (1-n)h + e_s,
// e_s >= 0: the difference becomes A h + sum_s B_s e_s with A <= 0, B_s >= 0.
// Also evaluated at sampled points.
VerifyResult verify_comporders(int dmax, int nmax) {
  check_bounds("comporders", dmax, nmax, kComparisonLimits);
  VerifyResult r{"comporders", true, 0, {}, bounds_text(dmax, nmax)};
  for (int d = 1; d <= dmax; ++d) {
    for (int n = 1; n <= nmax; ++n) {
      const auto labels = enumerate_multipartitions(d, n);
      const auto samples = comparison_samples(d, n);
      std::vector<LinearForm> forms;
      for (const auto& l : labels) forms.push_back(c_form(l));
      for (std::size_t i = 0; i < labels.size(); ++i) {
        for (std::size_t j = 0; j < labels.size(); ++j) {
          if (i == j || !dominates(labels[i], labels[j])) continue;
          ++r.checked;
          const LinearForm diff = forms[i] - forms[j];
          const std::string pair = labels[i].to_string() + " <| " + labels[j].to_string();
          Rational a = diff.coefficient(Variable::h());
          for (int s = 1; s < d; ++s) {
            a += Rational((1 - n) * s) * diff.coefficient(Variable::h_index(s));
          }
          bool ok = diff.constant().is_zero() && a.sign() <= 0;
          for (int s = 1; s < d && ok; ++s) {
            Rational b;
            for (int t = s; t < d; ++t) b += diff.coefficient(Variable::h_index(t));
            ok = b.sign() >= 0;
          }
          if (!ok) {
            fail(r, pair + " difference " + diff.to_string() + " not >= 0 on the region");
            continue;
          }
          for (const auto& p : samples) {
            if (evaluate(diff, p).constant().sign() < 0) {
              fail(r, pair + " negative at " + p.to_string());
              break;
            }
          }
        }
      }
    }
  }
  return r;
}

namespace {

using Matrix = std::vector<std::vector<Rational>>;

// Gauss-Jordan over Q; nullopt when singular.
std::optional<Matrix> invert(Matrix a) {
  const std::size_t n = a.size();
  Matrix inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    const Rational scale = Rational(1) / a[col][col];
    for (std::size_t k = 0; k < n; ++k) {
      a[col][k] *= scale;
      inv[col][k] *= scale;
    }
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col].is_zero()) continue;
      const Rational f = a[row][col];
      for (std::size_t k = 0; k < n; ++k) {
        a[row][k] -= f * a[col][k];
        inv[row][k] -= f * inv[col][k];
      }
    }
  }
  return inv;
}

Matrix to_rational(const std::vector<std::vector<BigInt>>& m) {
  Matrix out;
  for (const auto& row : m) {
    out.emplace_back();
    for (const auto& x : row) out.back().emplace_back(x);
  }
  return out;
}

}  // namespace

VerifyResult verify_dm_identity(int max_size) {
  if (max_size < 1 || max_size > kMaxMatrixSize) {
    throw DomainError("dm-identity: size " + std::to_string(max_size) + " outside 1.." +
                      std::to_string(kMaxMatrixSize));
  }
  VerifyResult r{"dm-identity", true, 0, {}, "size<=" + std::to_string(max_size)};
  for (int size = 1; size <= max_size; ++size) {
    ++r.checked;
    const Matrix dm = to_rational(defect1_decomposition_matrix(size).entries);
    const Matrix alt = to_rational(alternating_sum_matrix(size));
    const auto inv = invert(dm);
    if (!inv || *inv != alt) {
      fail(r, "size=" + std::to_string(size) + ": alternating-sum matrix is not the inverse");
      continue;
    }
    for (int i = 0; i < size; ++i) {
      for (int j = 0; j < size; ++j) {
        Rational sum;
        for (int k = 0; k < size; ++k) sum += dm[i][k] * alt[k][j];
        if (sum != Rational(i == j ? 1 : 0)) {
          fail(r, "size=" + std::to_string(size) + ": product differs from identity at (" +
                      std::to_string(i) + "," + std::to_string(j) + ")");
        }
      }
    }
  }
  return r;
}

VerifyResult verify_ss(int dmax, int nmax) {
  check_bounds("ss", dmax, nmax, kSemisimplicityLimits);
  VerifyResult r{"ss", true, 0, {}, bounds_text(dmax, nmax)};
  for (int d = 1; d <= dmax; ++d) {
    for (int n = 1; n <= nmax; ++n) {
      const ParameterSet params = ParameterSet::symbolic(d, n);
      ++r.checked;
      const auto result = semisimplicity_check(params);
      if (result.verdict != SemisimplicityVerdict::kSemisimple) {
        fail(r, "d=" + std::to_string(d) + " n=" + std::to_string(n) + " comparable pair " +
                    result.witness->first.to_string() + ", " + result.witness->second.to_string());
        continue;
      }
      const auto linkage = linkage_partition(params);
      for (const auto& cls : linkage.classes) {
        if (cls.size() > 1) {
          fail(r, "d=" + std::to_string(d) + " n=" + std::to_string(n) + " linked " +
                      linkage.labels[cls[0]].to_string() + " ~ " +
                      linkage.labels[cls[1]].to_string());
          break;
        }
      }
    }
  }
  return r;
}

}  // namespace bdorder
