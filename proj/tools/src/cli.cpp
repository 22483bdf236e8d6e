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

#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <array>
#include <fstream>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "bdorder/blocks.hpp"
#include "bdorder/characters.hpp"
#include "bdorder/combinatorics.hpp"
#include "bdorder/corder.hpp"
#include "bdorder/degree_table.hpp"
#include "bdorder/error.hpp"
#include "bdorder/verify.hpp"

namespace bdorder::cli {

namespace {

using nlohmann::json;

constexpr int kMaxD = 64;

struct RunConfig {
  int d = 1;
  int n = 1;
  std::string h = "sym";
  std::array<std::optional<std::string>, kMaxD> h_r;
  std::string convention = "categoryO";
  std::string format;
  int truncate = 10;
  std::string group;
  int r = 0;
  int s = 1;
  int size = 0;
  int dmax = 0;
  int nmax = 0;
  int index = 1;
  std::string block;
  std::string label;
  std::string suite;
  std::string finer;
  std::string coarser;
};

// ------------------------------------------------------------ parameters

std::optional<Rational> parse_value(const std::string& flag, const std::string& text) {
  if (text == "sym") return std::nullopt;
  try {
    return Rational::parse(text);
  } catch (const ParseError& e) {
    throw ParseError(flag + ": " + e.what());
  }
}

ParameterSet make_params(const RunConfig& cfg, int d, int n) {
  if (d < 1 || d > kMaxD) {
    throw DomainError("--d: must lie in 1.." + std::to_string(kMaxD) + ", got " +
                      std::to_string(d));
  }
  if (n < 1) throw DomainError("--n: must be >= 1, got " + std::to_string(n));
  std::vector<std::optional<Rational>> values(static_cast<std::size_t>(d));
  for (int r = 0; r < kMaxD; ++r) {
    if (!cfg.h_r[r]) continue;
    const std::string flag = "--h" + std::to_string(r);
    if (r >= d) {
      throw ParseError(flag + ": no variable h_" + std::to_string(r) + " when d = " +
                       std::to_string(d));
    }
    values[r] = parse_value(flag, *cfg.h_r[r]);
  }
  return ParameterSet(d, n, parse_value("--h", cfg.h), std::move(values));
}

OrderConvention parse_convention(const std::string& text) {
  if (text == "categoryO") return OrderConvention::kCategoryO;
  if (text == "coarse") return OrderConvention::kCoarseLinear;
  throw ParseError("--order-convention: expected categoryO or coarse, got '" + text + "'");
}

std::string optional_text(const std::optional<Rational>& v) {
  return v ? v->to_string() : "sym";
}

json params_json(const ParameterSet& p) {
  json h_r = json::array();
  for (const auto& v : p.h_values()) h_r.push_back(optional_text(v));
  return {{"d", p.d()}, {"n", p.n()}, {"h", optional_text(p.h())}, {"h_r", h_r}};
}

// BigInt as a JSON number when it fits, as a decimal string otherwise.
json big_json(const BigInt& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() &&
      x <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(x);
  }
  return x.str();
}

json labels_json(const std::vector<Multipartition>& labels) {
  json out = json::array();
  for (const auto& l : labels) out.push_back(l.to_string());
  return out;
}

json c_forms_json(const std::vector<Multipartition>& labels, const ParameterSet& params) {
  json out = json::object();
  for (const auto& l : labels) out[l.to_string()] = evaluate(c_form(l), params).to_string();
  return out;
}

json terms_json(const std::vector<SeriesTerm>& terms) {
  json out = json::array();
  for (const auto& t : terms) out.push_back({t.exponent.to_string(), big_json(t.coefficient)});
  return out;
}

void emit(std::ostream& out, const std::string& operation, json inputs, json result,
          std::optional<json> certificate = std::nullopt) {
  json report{{"operation", operation}, {"inputs", std::move(inputs)}, {"result", std::move(result)}};
  if (certificate) report["certificate"] = std::move(*certificate);
  out << report.dump(2) << '\n';
}

std::string format_or(const RunConfig& cfg, const std::string& fallback,
                      std::initializer_list<const char*> allowed) {
  const std::string f = cfg.format.empty() ? fallback : cfg.format;
  for (const char* a : allowed) {
    if (f == a) return f;
  }
  throw ParseError("--format: '" + f + "' not supported by this command");
}

std::vector<Multipartition> parse_block(const std::string& text) {
  std::vector<Multipartition> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ';')) {
    const auto first = item.find_first_not_of(' ');
    if (first == std::string::npos) continue;
    try {
      out.push_back(Multipartition::parse(item.substr(first, item.find_last_not_of(' ') - first + 1)));
    } catch (const ParseError& e) {
      throw ParseError(std::string("--block: ") + e.what());
    }
  }
  if (out.empty()) throw ParseError("--block: no labels given");
  return out;
}

std::string read_file(const std::string& flag, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(flag + ": cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// ------------------------------------------------------------- commands

int cmd_order(const RunConfig& cfg, std::ostream& out) {
  const ParameterSet params = make_params(cfg, cfg.d, cfg.n);
  const OrderConvention conv = parse_convention(cfg.convention);
  const std::string format = format_or(cfg, "dot", {"dot", "json"});
  const OrderPoset poset = build_order_poset(params, conv);
  if (format == "dot") {
    out << poset.to_dot("bdorder order " + params.to_string() + " convention=" + to_string(conv));
    return 0;
  }
  json hasse = json::array();
  for (const auto& [i, j] : poset.hasse_edges()) hasse.push_back({i, j});
  json inputs = params_json(params);
  inputs["convention"] = to_string(conv);
  emit(out, "order", std::move(inputs),
       {{"poset", json::parse(poset.to_json())},
        {"hasse_edges", hasse},
        {"antichain", poset.is_antichain()}},
       json{{"c_forms", c_forms_json(poset.labels(), params)}});
  return 0;
}

int cmd_blocks(const RunConfig& cfg, std::ostream& out) {
  const ParameterSet params = make_params(cfg, cfg.d, cfg.n);
  format_or(cfg, "json", {"json"});
  const LinkagePartition linkage = linkage_partition(params);
  json classes = json::array();
  for (const auto& cls : linkage.classes) {
    json members = json::array();
    for (std::size_t i : cls) members.push_back(linkage.labels[i].to_string());
    classes.push_back(members);
  }
  emit(out, "blocks", params_json(params),
       {{"classes", classes}, {"all_singletons", linkage.all_singletons()}},
       json{{"c_forms", c_forms_json(linkage.labels, params)}});
  return 0;
}

json matrix_json(const std::vector<std::vector<BigInt>>& m) {
  json out = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (const auto& x : row) r.push_back(big_json(x));
    out.push_back(r);
  }
  return out;
}

int cmd_decmatrix(const RunConfig& cfg, std::ostream& out) {
  const std::string format = format_or(cfg, "tsv", {"tsv", "json"});
  if (cfg.size < 1) throw DomainError("--size: must be >= 1, got " + std::to_string(cfg.size));
  const DecompositionMatrix m = defect1_decomposition_matrix(cfg.size);
  if (format == "tsv") {
    out << "# bdorder decmatrix size=" << cfg.size << '\n' << m.to_tsv();
    return 0;
  }
  emit(out, "decmatrix", {{"size", cfg.size}}, {{"matrix", matrix_json(m.entries)}},
       json{{"alternating_sum_inverse", matrix_json(alternating_sum_matrix(cfg.size))}});
  return 0;
}

int cmd_orbit(const RunConfig& cfg, std::ostream& out) {
  format_or(cfg, "json", {"json"});
  const ParameterSet params = make_params(cfg, cfg.d, cfg.n);
  const OrbitDecomposition orbits = orbit_decomposition(params);
  json exponents = json::array();
  for (const auto& e : orbits.exponents) exponents.push_back(optional_text(e));
  emit(out, "orbit", params_json(params),
       {{"classes", orbits.classes}, {"exponents", exponents}},
       json{{"relation",
             "exponent h'_r = h_r + r/d; r ~ r' when h'_r' - h'_r - a*h is an integer for some "
             "|a| <= n, closed transitively"}});
  return 0;
}

int cmd_ss(const RunConfig& cfg, std::ostream& out) {
  format_or(cfg, "json", {"json"});
  const ParameterSet params = make_params(cfg, cfg.d, cfg.n);
  const SemisimplicityResult res = semisimplicity_check(params);
  json witness = nullptr;
  if (res.witness) witness = {res.witness->first.to_string(), res.witness->second.to_string()};
  emit(out, "ss", params_json(params), {{"verdict", to_string(res.verdict)}, {"witness", witness}},
       json{{"poset", json::parse(res.certificate.to_json())}});
  return 0;
}

int cmd_defect1(const RunConfig& cfg, std::ostream& out) {
  format_or(cfg, "json", {"json"});
  if (cfg.group.empty()) throw ParseError("--group: required");
  const CoxeterGroupData& g = coxeter_group(cfg.group);
  const Defect1Check check = defect1_coxeter_check(g.degrees, cfg.r);
  emit(out, "defect1", {{"group", g.name}, {"r", cfg.r}},
       {{"multiplicity", check.multiplicity}, {"verdict", to_string(check.verdict)}},
       json{{"degrees", g.degrees},
            {"order", big_json(g.order)},
            {"poincare", poincare_polynomial(g.degrees).to_string()},
            {"table_version", degree_table().version}});
  return 0;
}

int cmd_series(const RunConfig& cfg, std::ostream& out) {
  format_or(cfg, "json", {"json"});
  const std::vector<Multipartition> block = parse_block(cfg.block);
  const ParameterSet params = make_params(cfg, block.front().d(), block.front().size());
  const OrderConvention conv = parse_convention(cfg.convention);
  const GradedSeries series = simple_dimension_series(block, cfg.index, params, cfg.truncate, conv);
  const auto poly = series.polynomial_detect();
  json inputs = params_json(params);
  inputs["block"] = labels_json(block);
  inputs["index"] = cfg.index;
  inputs["truncate"] = cfg.truncate;
  inputs["convention"] = to_string(conv);
  emit(out, "series", std::move(inputs),
       {{"shift", series.shift().to_string()},
        {"numerator", terms_json(series.numerator())},
        {"denominator_power", series.denominator_power()},
        {"expansion", terms_json(series.expand())},
        {"polynomial", poly ? terms_json(*poly) : json(nullptr)}},
       json{{"sorted_block", labels_json(sort_block(block, params, conv))},
            {"numerator_at_one", big_json(series.numerator_at_one())}});
  return 0;
}

int cmd_cform(const RunConfig& cfg, std::ostream& out) {
  format_or(cfg, "json", {"json"});
  if (cfg.label.empty()) throw ParseError("--label: required");
  Multipartition label = [&] {
    try {
      return Multipartition::parse(cfg.label);
    } catch (const ParseError& e) {
      throw ParseError(std::string("--label: ") + e.what());
    }
  }();
  const ParameterSet params = make_params(cfg, label.d(), label.size());
  json inputs = params_json(params);
  inputs["label"] = label.to_string();
  emit(out, "cform", std::move(inputs),
       {{"c_form", c_form(label).to_string()},
        {"c_mult", c_form_from_multiplicities(label).to_string()},
        {"c_prime", c_prime_form(label).to_string()},
        {"value", evaluate(c_form(label), params).to_string()}});
  return 0;
}

int cmd_probe(const RunConfig& cfg, std::ostream& out) {
  format_or(cfg, "json", {"json"});
  const OrbitProbeReport report = orbit_c_identity_probe(cfg.d, cfg.s, cfg.n);
  json levels = json::array();
  for (const auto& l : report.levels) {
    json counter = nullptr;
    if (l.counterexample) {
      counter = {l.counterexample->first.to_string(), l.counterexample->second.to_string()};
    }
    levels.push_back({{"m", l.m},
                      {"shape_independent", l.shape_independent},
                      {"value", l.value ? json(l.value->to_string()) : json(nullptr)},
                      {"literal_display", l.literal_display.to_string()},
                      {"expected", l.expected.to_string()},
                      {"counterexample", counter}});
  }
  json samples = json::array();
  for (const auto& p : report.samples) samples.push_back(p.to_string());
  emit(out, "probe", {{"d", cfg.d}, {"s", cfg.s}, {"n", cfg.n}},
       {{"levels", levels},
        {"shape_independent", report.shape_independent()},
        {"matches_literal_display", report.matches_literal_display()},
        {"matches_expected", report.matches_expected()},
        {"monotonicity",
         {{"checks", report.monotonicity_checks},
          {"violations", report.monotonicity_violations},
          {"first_violation",
           report.first_violation ? json(*report.first_violation) : json(nullptr)}}}},
       json{{"samples", samples}});
  return 0;
}

int cmd_refines(const RunConfig& cfg, std::ostream& out) {
  format_or(cfg, "json", {"json"});
  const OrderPoset finer = OrderPoset::from_json(read_file("--finer", cfg.finer));
  const OrderPoset coarser = OrderPoset::from_json(read_file("--coarser", cfg.coarser));
  emit(out, "refines", {{"finer", cfg.finer}, {"coarser", cfg.coarser}},
       {{"refines", refines(finer, coarser)}, {"equal", finer == coarser}});
  return 0;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const VerifyResult res = run_verify_suite(cfg.suite, {cfg.dmax, cfg.nmax, cfg.size});
  out << "# bdorder verify " << res.suite << ' ' << res.bounds << '\n';
  out << res.suite << ": " << (res.passed ? "PASS" : "FAIL") << " checked=" << res.checked << '\n';
  if (!res.passed) out << "counterexample: " << res.counterexample << '\n';
  return res.passed ? 0 : 1;
}

// --------------------------------------------------------------- wiring

void add_params(CLI::App* sub, RunConfig& cfg, bool with_shape = true) {
  if (with_shape) {
    sub->add_option("--d", cfg.d, "number of components (cyclic order)");
    sub->add_option("--n", cfg.n, "rank");
  }
  sub->add_option("--h", cfg.h, "parameter h: rational or sym");
  for (int r = 0; r < kMaxD; ++r) {
    sub->add_option("--h" + std::to_string(r), cfg.h_r[r])
        ->group(r < 4 ? "Options" : "")
        ->description("parameter h_" + std::to_string(r) + ": rational or sym");
  }
  sub->add_option("--order-convention", cfg.convention, "categoryO or coarse");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"bdorder: highest-weight orders and blocks for B_n(d)", "bdorder"};
  app.require_subcommand(1);
  app.set_help_flag("--help", "print help and exit");  // -h would clash with --h
  std::map<CLI::App*, std::function<int(const RunConfig&, std::ostream&)>> handlers;
  auto sub = [&](const char* name, const char* help, auto handler) {
    CLI::App* s = app.add_subcommand(name, help);
    s->set_help_flag("--help", "print help and exit");
    s->add_option("--format", cfg.format, "output format: dot, json or tsv");
    handlers[s] = handler;
    return s;
  };

  add_params(sub("order", "order poset on the multipartitions of n", cmd_order), cfg);
  add_params(sub("blocks", "linkage classes of the c-function", cmd_blocks), cfg);
  sub("decmatrix", "defect-one decomposition matrix", cmd_decmatrix)
      ->add_option("--size", cfg.size, "number of characters in the block");
  add_params(sub("orbit", "orbit decomposition of the parameter indices", cmd_orbit), cfg);
  add_params(sub("ss", "semisimplicity certificate", cmd_ss), cfg);
  {
    CLI::App* s = sub("defect1", "Poincare-polynomial defect-one test", cmd_defect1);
    s->add_option("--group", cfg.group, "E6, E7, E8, F4, H3 or H4");
    s->add_option("--r", cfg.r, "denominator of h = 1/r");
  }
  {
    CLI::App* s = sub("series", "graded dimension series of a simple module", cmd_series);
    add_params(s, cfg, false);
    s->add_option("--block", cfg.block, "labels separated by ';'");
    s->add_option("--index", cfg.index, "1-based position in the sorted block");
    s->add_option("--truncate", cfg.truncate, "expansion degree");
  }
  {
    CLI::App* s = sub("cform", "c-function of one label", cmd_cform);
    add_params(s, cfg, false);
    s->add_option("--label", cfg.label, "multipartition such as [2,1|1]");
  }
  {
    CLI::App* s = sub("probe", "orbit gluing identity probe", cmd_probe);
    s->add_option("--d", cfg.d, "number of components");
    s->add_option("--s", cfg.s, "split point 1..d-1");
    s->add_option("--n", cfg.n, "rank");
  }
  {
    CLI::App* s = sub("refines", "compare two JSON order posets", cmd_refines);
    s->add_option("--finer", cfg.finer, "poset JSON file")->required();
    s->add_option("--coarser", cfg.coarser, "poset JSON file")->required();
  }
  {
    CLI::App* s = sub("verify", "run an oracle suite", cmd_verify);
    s->add_option("suite", cfg.suite, "covers, restrictions, corder-consistency, comporders, "
                                      "dm-identity or ss")
        ->required();
    s->add_option("--dmax", cfg.dmax, "largest d");
    s->add_option("--nmax", cfg.nmax, "largest n");
    s->add_option("--size", cfg.size, "largest matrix size (dm-identity)");
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    for (const auto& [s, handler] : handlers) {
      if (s->parsed()) return handler(cfg, out);
    }
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  }
}

}  // namespace bdorder::cli
