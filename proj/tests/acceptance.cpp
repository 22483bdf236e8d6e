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

// Acceptance gate. Without arguments every criterion runs and prints one
// PASS/FAIL line; `--criterion N` runs one. The exit status is nonzero when
// any selected criterion fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "bdorder/blocks.hpp"
#include "bdorder/characters.hpp"
#include "bdorder/combinatorics.hpp"
#include "bdorder/corder.hpp"
#include "bdorder/degree_table.hpp"
#include "bdorder/exactmath.hpp"

namespace {

using namespace bdorder;

struct Outcome {
  bool passed = true;
  std::string detail;
};

void fail(Outcome& o, const std::string& what) {
  if (o.passed) o.detail = what;
  o.passed = false;
}

BigInt factorial(int n) {
  BigInt f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

// 1. Case-based covers against covers computed from the dominance relation.
Outcome cover_law() {
  Outcome o;
  std::size_t checked = 0;
  for (int d = 1; d <= 3; ++d) {
    for (int n = 0; n <= 6; ++n) {
      const auto labels = enumerate_multipartitions(d, n);
      const std::size_t size = labels.size();
      std::vector<char> below(size * size);
      for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t j = 0; j < size; ++j) {
          below[i * size + j] = i != j && dominates(labels[i], labels[j]);
        }
      }
      for (std::size_t m = 0; m < size; ++m) {
        std::set<Multipartition> brute, cased;
        for (std::size_t l = 0; l < size; ++l) {
          if (!below[l * size + m]) continue;
          bool cover = true;
          for (std::size_t k = 0; k < size; ++k) {
            if (below[l * size + k] && below[k * size + m]) cover = false;
          }
          if (cover) brute.insert(labels[l]);
        }
        for (const auto& c : dominance_covers(labels[m])) cased.insert(c.lambda);
        ++checked;
        if (brute != cased) fail(o, "covers differ at mu = " + labels[m].to_string());
      }
    }
  }
  if (o.passed) o.detail = std::to_string(checked) + " labels, d <= 3, n <= 6";
  return o;
}

// 2. Closed-form restriction multiplicities against full-group summation.
Outcome restriction_oracle() {
  Outcome o;
  std::size_t checked = 0;
  for (int d = 1; d <= 3; ++d) {
    for (int n = 1; n <= 4; ++n) {
      for (const auto& l : enumerate_multipartitions(d, n)) {
        ++checked;
        if (restriction_profile_closed(l) != restriction_profile_bruteforce(l)) {
          fail(o, "profiles differ at " + l.to_string());
        }
      }
    }
  }
  if (o.passed) o.detail = std::to_string(checked) + " characters, d <= 3, n <= 4";
  return o;
}

// 3. The two c-normalizations differ by one label-independent form.
Outcome c_normalization() {
  Outcome o;
  std::ostringstream gaps;
  for (int d = 1; d <= 3; ++d) {
    for (int n = 1; n <= 5; ++n) {
      const auto labels = enumerate_multipartitions(d, n);
      const LinearForm gap = c_form(labels[0]) - c_form_from_multiplicities(labels[0]);
      for (const auto& l : labels) {
        if (c_form(l) - c_form_from_multiplicities(l) != gap) {
          fail(o, "gap depends on the label at " + l.to_string());
        }
      }
      if (n == 2) gaps << " d=" << d << ":" << gap.to_string();
    }
  }
  if (o.passed) o.detail = "gap at n=2" + gaps.str();
  return o;
}

// 4. Dominance pairs have c_lambda - c_mu >= 0 on the admissible region.
Outcome order_comparison() {
  Outcome o;
  std::size_t pairs = 0, evaluations = 0;
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
          if (lambda == mu || !dominates(lambda, mu)) continue;
          ++pairs;
          const LinearForm diff = c_form(lambda) - c_form(mu);
          for (const auto& p : samples) {
            ++evaluations;
            if (evaluate(diff, p).constant() < Rational(0)) {
              fail(o, lambda.to_string() + " <| " + mu.to_string() + " negative at " +
                          p.to_string());
            }
          }
          // Symbolic: with h_0 = 0 and gaps (1-n)h + e_s, the difference is
          // A h + sum B_s e_s; need A <= 0 and every B_s >= 0.
          Rational a = diff.coefficient(Variable::h());
          for (int s = 1; s < d; ++s) a += Rational((1 - n) * s) * diff.coefficient(Variable::h_index(s));
          bool ok = a <= Rational(0) && diff.constant().is_zero();
          for (int s = 1; s < d; ++s) {
            Rational b;
            for (int t = s; t < d; ++t) b += diff.coefficient(Variable::h_index(t));
            ok = ok && b >= Rational(0);
          }
          if (!ok) fail(o, "symbolic sign check fails for " + lambda.to_string() + " <| " + mu.to_string());
        }
      }
    }
  }
  if (o.passed) {
    o.detail = std::to_string(pairs) + " dominance pairs, " + std::to_string(evaluations) +
               " sampled evaluations, 0 violations";
  }
  return o;
}

// 5. Exceptional Coxeter groups: Phi_r divides the Poincare polynomial once.
Outcome exceptional_defect_one() {
  Outcome o;
  const std::map<std::string, std::pair<std::vector<int>, long long>> reference{
      {"F4", {{2, 6, 8, 12}, 1152}},
      {"H3", {{2, 6, 10}, 120}},
      {"H4", {{2, 12, 20, 30}, 14400}},
      {"E6", {{2, 5, 6, 8, 9, 12}, 51840}},
      {"E7", {{2, 6, 8, 10, 12, 14, 18}, 2903040}},
      {"E8", {{2, 8, 12, 14, 18, 20, 24, 30}, 696729600}},
  };
  for (const auto& [name, ref] : reference) {
    const CoxeterGroupData& g = coxeter_group(name);
    if (g.degrees != ref.first) fail(o, name + ": degree table differs from reference");
    if (product_of_degrees(g.degrees) != ref.second || g.order != ref.second) {
      fail(o, name + ": product of degrees is not the group order");
    }
  }
  const std::vector<std::pair<std::string, int>> listed{
      {"F4", 12}, {"F4", 8},  {"H3", 10}, {"H3", 6},  {"H4", 30}, {"H4", 20},
      {"H4", 15}, {"H4", 12}, {"E6", 12}, {"E6", 9},  {"E7", 18}, {"E7", 14},
      {"E8", 30}, {"E8", 24}, {"E8", 20}, {"E8", 15}};
  for (const auto& [name, r] : listed) {
    const Defect1Check c = defect1_coxeter_check(coxeter_group(name).degrees, r);
    if (c.multiplicity != 1 || c.verdict != Defect1Verdict::kDefectOnePrincipal) {
      fail(o, name + " r=" + std::to_string(r) + ": multiplicity " + std::to_string(c.multiplicity));
    }
  }
  const int h4 = defect1_coxeter_check(coxeter_group("H4").degrees, 10).multiplicity;
  if (h4 != 2) fail(o, "H4 r=10: multiplicity " + std::to_string(h4));
  if (o.passed) o.detail = std::to_string(listed.size()) + " listed pairs at 1, H4 r=10 at 2";
  return o;
}

// 6. Decomposition matrix times alternating-sum matrix is the identity.
Outcome decomposition_identity() {
  Outcome o;
  for (int size = 1; size <= 10; ++size) {
    const auto m = defect1_decomposition_matrix(size).entries;
    std::vector<std::vector<BigInt>> alt(size, std::vector<BigInt>(size, 0));
    for (int i = 0; i < size; ++i) {
      for (int j = 0; j <= i; ++j) alt[i][j] = (i + j) % 2 == 0 ? 1 : -1;
    }
    for (int i = 0; i < size; ++i) {
      for (int j = 0; j < size; ++j) {
        BigInt left = 0, right = 0;
        for (int k = 0; k < size; ++k) {
          left += m[i][k] * alt[k][j];
          right += alt[i][k] * m[k][j];
        }
        if (left != (i == j ? 1 : 0) || right != (i == j ? 1 : 0)) {
          fail(o, "size " + std::to_string(size) + " fails at (" + std::to_string(i) + "," +
                      std::to_string(j) + ")");
        }
      }
    }
  }
  if (o.passed) o.detail = "sizes 1..10, both products";
  return o;
}

// 7. Symbolic parameters: antichain and singleton linkage classes.
Outcome semisimplicity() {
  Outcome o;
  std::size_t linked_pairs = 0;
  std::string first_linked;
  for (int d = 1; d <= 3; ++d) {
    for (int n = 1; n <= 5; ++n) {
      const ParameterSet params = ParameterSet::symbolic(d, n);
      const auto ss = semisimplicity_check(params);
      if (ss.verdict != SemisimplicityVerdict::kSemisimple) {
        fail(o, "not an antichain at d=" + std::to_string(d) + " n=" + std::to_string(n));
      }
      const auto linkage = linkage_partition(params);
      for (const auto& cls : linkage.classes) {
        if (cls.size() < 2) continue;
        linked_pairs += cls.size() * (cls.size() - 1) / 2;
        if (first_linked.empty()) {
          first_linked = "d=" + std::to_string(d) + " n=" + std::to_string(n) + ": " +
                         linkage.labels[cls[0]].to_string() + " and " +
                         linkage.labels[cls[1]].to_string() + " share the c-form " +
                         c_form(linkage.labels[cls[0]]).to_string();
        }
      }
    }
  }
  if (linked_pairs > 0) {
    fail(o, "antichain holds everywhere, but linkage is not all-singleton: " +
                std::to_string(linked_pairs) + " linked pairs, first " + first_linked);
  }
  if (o.passed) o.detail = "antichain and singleton linkage for d <= 3, n <= 5";
  return o;
}

// 8. Shape independence of the gluing identity and monotonicity of gluing.
Outcome orbit_probe() {
  Outcome o;
  std::size_t checks = 0;
  for (int d = 2; d <= 3; ++d) {
    for (int s = 1; s < d; ++s) {
      for (int n = 1; n <= 4; ++n) {
        const OrbitProbeReport r = orbit_c_identity_probe(d, s, n);
        const std::string where =
            "d=" + std::to_string(d) + " s=" + std::to_string(s) + " n=" + std::to_string(n);
        if (!r.shape_independent()) fail(o, where + ": D depends on the shapes");
        if (r.monotonicity_violations > 0) fail(o, where + ": " + *r.first_violation);
        checks += r.monotonicity_checks;
      }
    }
  }
  if (o.passed) o.detail = "D(m) shape independent; " + std::to_string(checks) + " monotonicity checks";
  return o;
}

// 9. Character orthogonality and the sum of squared degrees.
Outcome character_checks() {
  Outcome o;
  for (int n = 1; n <= 5; ++n) {
    const auto parts = enumerate_partitions(n);
    for (const auto& a : parts) {
      for (const auto& b : parts) {
        BigInt sum = 0;
        for (const auto& mu : parts) {
          // |class| = n! / z_mu.
          std::map<int, int> mult;
          for (int p : mu.parts()) ++mult[p];
          BigInt z = 1;
          for (const auto& [part, m] : mult) {
            for (int k = 0; k < m; ++k) z *= part;
            z *= factorial(m);
          }
          sum += factorial(n) / z * sn_character(a, {mu}) * sn_character(b, {mu});
        }
        if (sum != (a == b ? factorial(n) : BigInt(0))) {
          fail(o, "orthogonality fails for " + a.to_string() + ", " + b.to_string());
        }
      }
    }
  }
  for (int d = 1; d <= 3; ++d) {
    for (int n = 1; n <= 4; ++n) {
      BigInt sum = 0;
      for (const auto& l : enumerate_multipartitions(d, n)) {
        const BigInt dim = wreath_character_dimension(l);
        sum += dim * dim;
      }
      BigInt order = factorial(n);
      for (int k = 0; k < n; ++k) order *= d;
      if (sum != order) fail(o, "sum of squares fails at d=" + std::to_string(d));
    }
  }
  if (o.passed) o.detail = "row orthogonality n <= 5; sum of squares d <= 3, n <= 4";
  return o;
}

std::string capture(const std::string& command, int& status) {
  FILE* pipe = popen((command + " 2>&1").c_str(), "r");
  if (!pipe) {
    status = -1;
    return {};
  }
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  status = pclose(pipe);
  return out;
}

// 10. Every subcommand of the installed binary is byte-stable across runs.
Outcome determinism() {
  Outcome o;
  const std::string cli = BDORDER_CLI_PATH;
  const auto poset_file = std::filesystem::temp_directory_path() / "bdorder_acceptance_poset.json";
  {
    int status = 0;
    std::ofstream(poset_file) << capture(cli + " order --d 2 --n 3 --h -1 --h0 0 --h1 2 --format json",
                                         status);
  }
  const std::vector<std::string> commands{
      "order --d 1 --n 2 --h -1 --format dot",
      "order --d 2 --n 3 --h -1 --h0 0 --h1 2 --format json",
      "order --d 3 --n 2 --h 1/2 --h0 0 --h1 1/2 --h2 1 --order-convention coarse",
      "blocks --d 2 --n 3 --h 1/2 --h0 0 --h1 1/2",
      "decmatrix --size 4 --format tsv",
      "decmatrix --size 4 --format json",
      "orbit --d 3 --n 2 --h 1/3 --h0 0 --h1 0 --h2 1/3",
      "ss --d 2 --n 3",
      "defect1 --group E8 --r 30",
      "series --block \"[1|];[|1]\" --h 0 --h0 0 --h1 1/2 --index 2 --truncate 5",
      "cform --label \"[2,1|1]\" --h -1 --h0 0",
      "probe --d 3 --s 1 --n 3",
      "refines --finer " + poset_file.string() + " --coarser " + poset_file.string(),
      "verify covers --dmax 2 --nmax 5",
      "verify bogus",
  };
  for (const auto& c : commands) {
    int first_status = 0, second_status = 0;
    const std::string first = capture(cli + " " + c, first_status);
    const std::string second = capture(cli + " " + c, second_status);
    if (first != second || first_status != second_status) fail(o, "output differs: " + c);
    if (first.empty()) fail(o, "no output: " + c);
  }
  std::filesystem::remove(poset_file);
  if (o.passed) o.detail = std::to_string(commands.size()) + " commands, two runs each";
  return o;
}

struct Criterion {
  int id;
  const char* title;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {1, "cover law matches brute-force covers", cover_law},
      {2, "restriction profile closed form matches brute force", restriction_oracle},
      {3, "c-normalization gap is label independent", c_normalization},
      {4, "dominance bounds the c-function", order_comparison},
      {5, "exceptional defect-one cyclotomic multiplicities", exceptional_defect_one},
      {6, "decomposition matrix inverts the alternating sum", decomposition_identity},
      {7, "symbolic parameters: antichain and singleton linkage", semisimplicity},
      {8, "orbit gluing identity and monotonicity", orbit_probe},
      {9, "character orthogonality and degree sum", character_checks},
      {10, "CLI output is deterministic", determinism},
  };

  int only = 0;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--criterion" && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::cerr << "usage: acceptance [--criterion N]\n";
      return 2;
    }
  }

  int failures = 0, ran = 0;
  for (const auto& c : criteria) {
    if (only != 0 && c.id != only) continue;
    ++ran;
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += !outcome.passed;
    std::cout << (outcome.passed ? "PASS" : "FAIL") << "  criterion " << std::setw(2) << c.id
              << "  " << c.title << "  (" << std::fixed << std::setprecision(3) << seconds
              << " s)  " << outcome.detail << '\n';
  }
  if (ran == 0) {
    std::cerr << "no criterion " << only << '\n';
    return 2;
  }
  return failures == 0 ? 0 : 1;
}
