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

#include "bdorder/combinatorics.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "bdorder/error.hpp"

namespace bdorder {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw DomainError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw DomainError("partition parts must be non-increasing");
    }
  }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  if (text.empty()) return Partition();
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    const auto token = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos
                                                                         : comma - pos);
    if (token.empty() || token.size() > 9 ||
        !std::all_of(token.begin(), token.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      throw ParseError("bad partition part '" + std::string(token) + "'");
    }
    const int v = std::stoi(std::string(token));
    if (v <= 0) throw ParseError("partition parts must be positive in '" + std::string(text) + "'");
    parts.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  try {
    return Partition(std::move(parts));
  } catch (const DomainError& e) {
    throw ParseError(std::string(e.what()) + " in '" + std::string(text) + "'");
  }
}

Partition transpose(const Partition& p) {
  std::vector<int> cols(p.empty() ? 0 : p.parts().front(), 0);
  for (int part : p.parts()) {
    for (int j = 0; j < part; ++j) ++cols[j];
  }
  return Partition(std::move(cols));
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& prefix,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    partitions_rec(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

void multipartitions_rec(int d, int n, std::vector<Partition>& prefix,
                         std::vector<Multipartition>& out) {
  if (d == 1) {
    for (auto& p : enumerate_partitions(n)) {
      prefix.push_back(std::move(p));
      out.emplace_back(prefix);
      prefix.pop_back();
    }
    return;
  }
  for (int first = n; first >= 0; --first) {
    for (auto& p : enumerate_partitions(first)) {
      prefix.push_back(std::move(p));
      multipartitions_rec(d - 1, n - first, prefix, out);
      prefix.pop_back();
    }
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0) throw DomainError("partition size must be >= 0");
  std::vector<Partition> out;
  std::vector<int> prefix;
  partitions_rec(n, n, prefix, out);
  return out;
}

Multipartition::Multipartition(std::vector<Partition> components)
    : components_(std::move(components)) {
  if (components_.empty()) throw DomainError("multipartition needs d >= 1 components");
}

int Multipartition::size() const {
  int n = 0;
  for (const auto& c : components_) n += c.size();
  return n;
}

std::string Multipartition::to_string() const {
  std::string out = "[";
  for (std::size_t r = 0; r < components_.size(); ++r) {
    if (r > 0) out += '|';
    out += components_[r].to_string();
  }
  out += ']';
  return out;
}

Multipartition Multipartition::parse(std::string_view text) {
  if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
    throw ParseError("multipartition must look like [3,1|2|], got '" + std::string(text) + "'");
  }
  const auto body = text.substr(1, text.size() - 2);
  std::vector<Partition> comps;
  std::size_t pos = 0;
  while (true) {
    const auto bar = body.find('|', pos);
    comps.push_back(Partition::parse(
        body.substr(pos, bar == std::string_view::npos ? std::string_view::npos : bar - pos)));
    if (bar == std::string_view::npos) break;
    pos = bar + 1;
  }
  return Multipartition(std::move(comps));
}

Multipartition trivial_multipartition(int d, int n) {
  if (d < 1) throw DomainError("d must be >= 1");
  if (n < 0) throw DomainError("n must be >= 0");
  std::vector<Partition> comps(static_cast<std::size_t>(d));
  comps[0] = Partition(std::vector<int>(n > 0 ? 1 : 0, n));
  return Multipartition(std::move(comps));
}

std::vector<Multipartition> enumerate_multipartitions(int d, int n) {
  if (d < 1) throw DomainError("d must be >= 1, got " + std::to_string(d));
  if (n < 0) throw DomainError("n must be >= 0, got " + std::to_string(n));
  std::vector<Multipartition> out;
  std::vector<Partition> prefix;
  multipartitions_rec(d, n, prefix, out);
  return out;
}

std::int64_t BDStatistic::total() const {
  std::int64_t t = 0;
  for (std::size_t r = 0; r < b_sums.size(); ++r) t += b_sums[r] - d_sums[r];
  return t;
}

BDStatistic bd_statistic(const Multipartition& lambda) {
  BDStatistic stat;
  for (const auto& comp : lambda.components()) {
    const Partition cols = transpose(comp);
    std::int64_t b = 0;
    std::int64_t dsum = 0;
    // Only cells of the bounding box can satisfy either strict inequality.
    for (int i = 1; i <= comp.length(); ++i) {
      for (int j = 1; j <= comp.row(1); ++j) {
        if (cols.row(j) > i) b += cols.row(j) - i;
        if (comp.row(i) > j) dsum += comp.row(i) - j;
      }
    }
    stat.b_sums.push_back(b);
    stat.d_sums.push_back(dsum);
  }
  return stat;
}

bool dominates(const Multipartition& lambda, const Multipartition& mu) {
  if (lambda.d() != mu.d()) {
    throw DomainError("dominance needs equal d: " + lambda.to_string() + " vs " + mu.to_string());
  }
  if (lambda.size() != mu.size()) {
    throw DomainError("dominance needs equal n: " + lambda.to_string() + " vs " + mu.to_string());
  }
  int lambda_prefix = 0;
  int mu_prefix = 0;
  for (int r = 1; r <= lambda.d(); ++r) {
    const Partition& a = lambda.component(r);
    const Partition& b = mu.component(r);
    int la = lambda_prefix;
    int lb = mu_prefix;
    if (la > lb) return false;
    for (int s = 1; s <= std::max(a.length(), b.length()); ++s) {
      la += a.row(s);
      lb += b.row(s);
      if (la > lb) return false;
    }
    lambda_prefix += a.size();
    mu_prefix += b.size();
  }
  return true;
}

std::string_view to_string(CoverCase c) {
  switch (c) {
    case CoverCase::kMoveAcrossComponents: return "a";
    case CoverCase::kAdjacentRows: return "b";
    case CoverCase::kEqualRows: return "c";
  }
  return "?";
}

std::vector<Cover> dominance_covers(const Multipartition& mu) {
  const int d = mu.d();
  std::vector<Cover> out;
  auto emit = [&](std::vector<Partition> comps, CoverCase kind) {
    Multipartition lambda(std::move(comps));
    const bool seen = std::any_of(out.begin(), out.end(),
                                  [&](const Cover& c) { return c.lambda == lambda; });
    if (!seen) out.push_back({std::move(lambda), kind});
  };

  // (a) mu^(s) ends in a 1 that came from the first row of component s+1.
  for (int s = 1; s < d; ++s) {
    const auto& from = mu.component(s).parts();
    if (from.empty() || from.back() != 1) continue;
    std::vector<Partition> comps = mu.components();
    std::vector<int> shorter(from.begin(), from.end() - 1);
    std::vector<int> longer = mu.component(s + 1).parts();
    if (longer.empty()) {
      longer.push_back(1);
    } else {
      ++longer.front();
    }
    comps[s - 1] = Partition(std::move(shorter));
    comps[s] = Partition(std::move(longer));
    emit(std::move(comps), CoverCase::kMoveAcrossComponents);
  }

  for (int s = 1; s <= d; ++s) {
    const Partition& p = mu.component(s);
    // (b) one box from row i down to row i+1.
    for (int i = 1; i <= p.length(); ++i) {
      if (p.row(i) - p.row(i + 1) < 2) continue;
      std::vector<int> rows(static_cast<std::size_t>(std::max(p.length(), i + 1)), 0);
      for (int k = 1; k <= p.length(); ++k) rows[k - 1] = p.row(k);
      --rows[i - 1];
      ++rows[i];
      std::vector<Partition> comps = mu.components();
      comps[s - 1] = Partition(std::move(rows));
      emit(std::move(comps), CoverCase::kAdjacentRows);
    }
    // (c) rows i < i' (not adjacent) end up equal: mu_i - 1 = mu_i' + 1, so
    // every row strictly between them already has length mu_i - 1.
    for (int i = 1; i <= p.length(); ++i) {
      const int v = p.row(i) - 1;
      if (v < 1) continue;
      int j = i + 1;
      while (j <= p.length() && p.row(j) == v) ++j;
      if (j < i + 2 || p.row(j) != v - 1) continue;
      std::vector<int> rows(static_cast<std::size_t>(std::max(p.length(), j)), 0);
      for (int k = 1; k <= p.length(); ++k) rows[k - 1] = p.row(k);
      --rows[i - 1];
      ++rows[j - 1];
      std::vector<Partition> comps = mu.components();
      comps[s - 1] = Partition(std::move(rows));
      emit(std::move(comps), CoverCase::kEqualRows);
    }
  }
  return out;
}

}  // namespace bdorder
