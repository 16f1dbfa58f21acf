// Copyright 2026 The tdv Authors
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

// Command-line front end for the total-domination toolkit. Talks to the
// shared library exclusively through the C API in tdv/tdv.h.
//
// Exit codes: 0 success, 1 verification failure, 2 input error,
// 3 no total dominating set exists.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tdv/tdv.h"

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int kExitVerifyFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitNoTds = 3;
constexpr int kExitInternal = 4;

struct GraphDeleter {
  void operator()(tdv_graph* g) const { tdv_graph_free(g); }
};
struct ReportDeleter {
  void operator()(tdv_report* r) const { tdv_report_free(r); }
};
struct ChecksDeleter {
  void operator()(tdv_check_list* c) const { tdv_check_list_free(c); }
};
using GraphPtr = std::unique_ptr<tdv_graph, GraphDeleter>;
using ReportPtr = std::unique_ptr<tdv_report, ReportDeleter>;
using ChecksPtr = std::unique_ptr<tdv_check_list, ChecksDeleter>;

[[noreturn]] void die(tdv_status status, const std::string& context) {
  std::cerr << "error: " << context << ": " << tdv_last_error() << "\n";
  switch (status) {
    case TDV_ERROR_NO_TDS:
      std::exit(kExitNoTds);
    case TDV_ERROR_INTERNAL:
      std::exit(kExitInternal);
    default:
      std::exit(kExitInputError);
  }
}

void must(tdv_status status, const std::string& context) {
  if (status != TDV_OK) die(status, context);
}

std::string slurp_stream(std::istream& in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

int resolve_threads(int flag_value) {
  if (flag_value > 0) return flag_value;
  if (const char* env = std::getenv("TDV_THREADS")) {
    const int value = std::atoi(env);
    if (value > 0) return value;
  }
  return 1;
}

// A family token ("path:6"), "-" for stdin, or a file path.
GraphPtr load_graph(const std::string& input, bool zero_based) {
  tdv_graph* raw = nullptr;
  if (input.find(':') != std::string::npos) {
    must(tdv_graph_from_family(input.c_str(), &raw), "building '" + input + "'");
    return GraphPtr(raw);
  }
  std::string text;
  if (input == "-") {
    text = slurp_stream(std::cin);
  } else {
    std::ifstream file(input);
    if (!file) {
      std::cerr << "error: cannot open '" << input << "'\n";
      std::exit(kExitInputError);
    }
    text = slurp_stream(file);
  }
  must(tdv_graph_parse(text.c_str(), zero_based ? 1 : 0, &raw),
       "parsing '" + input + "'");
  GraphPtr g(raw);
  if (std::string(tdv_graph_name(g.get())).empty()) {
    must(tdv_graph_set_name(g.get(), input.c_str()), "naming graph");
  }
  return g;
}

std::vector<int> tdm_set(const tdv_report* report, size_t index) {
  const int size = tdv_report_tdm_set(report, index, nullptr, 0);
  std::vector<int> members(size > 0 ? static_cast<size_t>(size) : 0);
  if (size > 0) tdv_report_tdm_set(report, index, members.data(), members.size());
  return members;
}

ordered_json check_to_json(const tdv_check_list* list, size_t i) {
  ordered_json j;
  j["id"] = tdv_check_id(list, i);
  switch (tdv_check_verdict(list, i)) {
    case TDV_VERDICT_PASS: j["verdict"] = "pass"; break;
    case TDV_VERDICT_FAIL: j["verdict"] = "fail"; break;
    case TDV_VERDICT_NOT_APPLICABLE: j["verdict"] = "not_applicable"; break;
  }
  j["lhs"] = tdv_check_lhs(list, i);
  j["rhs"] = tdv_check_rhs(list, i);
  ordered_json tags = ordered_json::array();
  for (size_t t = 0; t < tdv_check_tag_count(list, i); ++t) {
    tags.push_back(tdv_check_tag(list, i, t));
  }
  j["tags"] = std::move(tags);
  std::vector<int> witness(64);
  const int count = tdv_check_witness(list, i, witness.data(), witness.size());
  witness.resize(count > 0 ? static_cast<size_t>(count) : 0);
  j["witness"] = witness;
  j["note"] = tdv_check_note(list, i);
  return j;
}

// ---- solve ------------------------------------------------------------

struct SolveArgs {
  std::string input;
  bool json = false;
  bool tdm = false;
  bool checks = false;
  bool zero_based = false;
  int threads = 0;
};

int cmd_solve(const SolveArgs& args) {
  GraphPtr graph = load_graph(args.input, args.zero_based);
  const int threads = resolve_threads(args.threads);

  tdv_report* raw = nullptr;
  must(tdv_solve(graph.get(), args.tdm ? 1 : 0, threads, &raw),
       "solving '" + args.input + "'");
  ReportPtr report(raw);

  ChecksPtr checks;
  if (args.checks) {
    tdv_check_list* raw_checks = nullptr;
    must(tdv_check_run_all(graph.get(), &raw_checks), "running checks");
    checks.reset(raw_checks);
  }

  const int n = tdv_graph_order(graph.get());
  std::vector<std::uint64_t> values(static_cast<size_t>(n));
  for (int v = 1; v <= n; ++v) {
    values[static_cast<size_t>(v) - 1] = tdv_report_value(report.get(), v);
  }

  if (args.json) {
    ordered_json j;
    j["name"] = tdv_graph_name(graph.get());
    j["n"] = n;
    j["gamma_t"] = tdv_report_gamma_t(report.get());
    j["tau"] = tdv_report_tau(report.get());
    j["tdv"] = values;
    if (args.tdm) {
      ordered_json sets = ordered_json::array();
      for (size_t i = 0; i < tdv_report_tdm_count(report.get()); ++i) {
        sets.push_back(tdm_set(report.get(), i));
      }
      j["tdm"] = std::move(sets);
    }
    if (checks) {
      ordered_json list = ordered_json::array();
      for (size_t i = 0; i < tdv_check_list_count(checks.get()); ++i) {
        list.push_back(check_to_json(checks.get(), i));
      }
      j["checks"] = std::move(list);
    }
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  std::cout << "name:    " << tdv_graph_name(graph.get()) << "\n";
  std::cout << "n:       " << n << "\n";
  std::cout << "gamma_t: " << tdv_report_gamma_t(report.get()) << "\n";
  std::cout << "tau:     " << tdv_report_tau(report.get()) << "\n";
  std::cout << "tdv:    ";
  for (std::uint64_t value : values) std::cout << " " << value;
  std::cout << "\n";
  if (args.tdm) {
    std::cout << "tdm (" << tdv_report_tdm_count(report.get()) << " sets):\n";
    for (size_t i = 0; i < tdv_report_tdm_count(report.get()); ++i) {
      std::cout << " ";
      for (int v : tdm_set(report.get(), i)) std::cout << " " << v;
      std::cout << "\n";
    }
  }
  if (checks) {
    std::cout << "checks:\n";
    for (size_t i = 0; i < tdv_check_list_count(checks.get()); ++i) {
      const char* verdict = "n/a ";
      if (tdv_check_verdict(checks.get(), i) == TDV_VERDICT_PASS) verdict = "pass";
      if (tdv_check_verdict(checks.get(), i) == TDV_VERDICT_FAIL) verdict = "FAIL";
      std::cout << "  " << verdict << "  " << tdv_check_id(checks.get(), i);
      if (tdv_check_verdict(checks.get(), i) != TDV_VERDICT_NOT_APPLICABLE) {
        std::cout << "  " << tdv_check_lhs(checks.get(), i) << " vs "
                  << tdv_check_rhs(checks.get(), i);
      }
      const std::string note = tdv_check_note(checks.get(), i);
      if (!note.empty()) std::cout << "  (" << note << ")";
      std::cout << "\n";
    }
  }
  return 0;
}

// ---- gen ----------------------------------------------------------------

int cmd_gen(const std::string& spec, const std::string& out_path) {
  if (spec.find(':') == std::string::npos) {
    std::cerr << "error: gen expects a family token such as path:6\n";
    return kExitInputError;
  }
  tdv_graph* raw = nullptr;
  must(tdv_graph_from_family(spec.c_str(), &raw), "building '" + spec + "'");
  GraphPtr graph(raw);

  char* text = nullptr;
  must(tdv_graph_format(graph.get(), &text), "formatting graph");
  std::string body(text);
  tdv_string_free(text);

  if (out_path == "-") {
    std::cout << body;
  } else {
    std::ofstream file(out_path);
    if (!file) {
      std::cerr << "error: cannot write '" << out_path << "'\n";
      return kExitInputError;
    }
    file << body;
  }
  return 0;
}

// ---- verify ---------------------------------------------------------------

struct Range {
  int lo = 0, hi = -1;
  bool active() const { return hi >= lo && hi > 0; }
};

// Parses "A..B" (or a single "N" meaning N..N).
Range parse_range(const std::string& text) {
  Range r;
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      r.lo = r.hi = std::stoi(text);
    } else {
      r.lo = std::stoi(text.substr(0, dots));
      r.hi = std::stoi(text.substr(dots + 2));
    }
  } catch (const std::exception&) {
    std::cerr << "error: bad range '" << text << "' (expected A..B)\n";
    std::exit(kExitInputError);
  }
  return r;
}

struct Verifier {
  int threads = 1;
  std::vector<std::string> failures;

  void fail(const std::string& family, int n, const std::string& field,
            const std::string& expected, const std::string& got) {
    failures.push_back("FAIL " + family + " n=" + std::to_string(n) +
                       " field=" + field + " expected=" + expected +
                       " got=" + got);
  }

  ReportPtr solve_graph(const tdv_graph* g, const std::string& label, bool tdm = false) {
    tdv_report* raw = nullptr;
    must(tdv_solve(g, tdm ? 1 : 0, threads, &raw), "solving " + label);
    return ReportPtr(raw);
  }

  GraphPtr family_graph(const std::string& token) {
    tdv_graph* raw = nullptr;
    must(tdv_graph_from_family(token.c_str(), &raw), "building " + token);
    return GraphPtr(raw);
  }

  // Counts FAIL verdicts from run_all as verification failures.
  void run_checks(const tdv_graph* g, const std::string& family, int n) {
    tdv_check_list* raw = nullptr;
    must(tdv_check_run_all(g, &raw), "checking " + family);
    ChecksPtr checks(raw);
    for (size_t i = 0; i < tdv_check_list_count(checks.get()); ++i) {
      if (tdv_check_verdict(checks.get(), i) == TDV_VERDICT_FAIL) {
        fail(family, n, std::string("checks:") + tdv_check_id(checks.get(), i),
             "pass", std::string("fail (") + tdv_check_note(checks.get(), i) + ")");
      }
    }
  }

  void compare(const std::string& family, int n, const std::string& field,
               std::uint64_t expected, std::uint64_t got) {
    if (expected != got) {
      fail(family, n, field, std::to_string(expected), std::to_string(got));
    }
  }

  void verify_paths(Range range) {
    int count = 0;
    for (int n = std::max(2, range.lo); n <= range.hi; ++n, ++count) {
      GraphPtr g = family_graph("path:" + std::to_string(n));
      ReportPtr rep = solve_graph(g.get(), "path:" + std::to_string(n));
      std::uint64_t expected = 0;
      must(tdv_formula_gamma_t_path(n, &expected), "gamma_t_path");
      compare("path", n, "gamma_t", expected,
              static_cast<std::uint64_t>(tdv_report_gamma_t(rep.get())));
      must(tdv_formula_tau_path(n, &expected), "tau_path");
      compare("path", n, "tau", expected, tdv_report_tau(rep.get()));
      for (int v = 1; v <= n; ++v) {
        must(tdv_formula_tdv_path(n, v, &expected), "tdv_path");
        compare("path", n, "tdv[" + std::to_string(v) + "]", expected,
                tdv_report_value(rep.get(), v));
      }
      run_checks(g.get(), "path", n);
    }
    std::cout << "paths " << range.lo << ".." << range.hi << ": " << count
              << " graphs checked\n";
  }

  void verify_cycles(Range range) {
    int count = 0;
    for (int n = std::max(3, range.lo); n <= range.hi; ++n, ++count) {
      GraphPtr g = family_graph("cycle:" + std::to_string(n));
      ReportPtr rep = solve_graph(g.get(), "cycle:" + std::to_string(n));
      std::uint64_t expected = 0;
      must(tdv_formula_gamma_t_cycle(n, &expected), "gamma_t_cycle");
      compare("cycle", n, "gamma_t", expected,
              static_cast<std::uint64_t>(tdv_report_gamma_t(rep.get())));
      must(tdv_formula_tau_cycle(n, &expected), "tau_cycle");
      compare("cycle", n, "tau", expected, tdv_report_tau(rep.get()));
      must(tdv_formula_tdv_cycle(n, &expected), "tdv_cycle");
      for (int v = 1; v <= n; ++v) {
        compare("cycle", n, "tdv[" + std::to_string(v) + "]", expected,
                tdv_report_value(rep.get(), v));
      }
      run_checks(g.get(), "cycle", n);
    }
    std::cout << "cycles " << range.lo << ".." << range.hi << ": " << count
              << " graphs checked\n";
  }

  void verify_multipartite(int max_total) {
    int count = 0;
    for (int total = 2; total <= max_total; ++total) {
      // Compositions of `total` with at least two parts, one per nonempty
      // set of cut positions.
      for (unsigned cuts = 1; cuts < (1u << (total - 1)); ++cuts) {
        std::vector<int> parts;
        int current = 1;
        for (int pos = 1; pos < total; ++pos) {
          if ((cuts >> (pos - 1)) & 1u) {
            parts.push_back(current);
            current = 0;
          }
          ++current;
        }
        parts.push_back(current);

        std::string token = "kpartite:";
        for (size_t i = 0; i < parts.size(); ++i) {
          if (i > 0) token += ",";
          token += std::to_string(parts[i]);
        }
        GraphPtr g = family_graph(token);
        ReportPtr rep = solve_graph(g.get(), token);
        ++count;

        compare(token, total, "gamma_t", 2,
                static_cast<std::uint64_t>(tdv_report_gamma_t(rep.get())));
        std::uint64_t expected = 0;
        must(tdv_formula_multipartite_tau(parts.data(), parts.size(), &expected),
             "multipartite_tau");
        compare(token, total, "tau", expected, tdv_report_tau(rep.get()));
        int label = 1;
        for (size_t j = 0; j < parts.size(); ++j) {
          must(tdv_formula_multipartite_tdv(parts.data(), parts.size(),
                                            static_cast<int>(j) + 1, &expected),
               "multipartite_tdv");
          for (int i = 0; i < parts[j]; ++i, ++label) {
            compare(token, total, "tdv[" + std::to_string(label) + "]", expected,
                    tdv_report_value(rep.get(), label));
          }
        }
        run_checks(g.get(), token, total);
      }
    }
    std::cout << "multipartite totals 2.." << max_total << ": " << count
              << " graphs checked\n";
  }

  void verify_figures() {
    struct Expectation {
      const char* token;
      int gamma_t;
      std::uint64_t tau;
      int v0;
      std::int64_t neighborhood_sum;  // -1: skip
      std::int64_t v0_value;          // -1: skip
    };
    const Expectation expectations[] = {
        {"figure:1a", 2, 3, 1, 6, -1},
        {"figure:1b", 6, 2, 1, 8, -1},
        {"figure:4a", 3, 4, 1, -1, 4},
        {"figure:5", 2, 1, 1, -1, 0},
    };
    for (const auto& e : expectations) {
      GraphPtr g = family_graph(e.token);
      ReportPtr rep = solve_graph(g.get(), e.token);
      const int n = tdv_graph_order(g.get());
      compare(e.token, n, "gamma_t", static_cast<std::uint64_t>(e.gamma_t),
              static_cast<std::uint64_t>(tdv_report_gamma_t(rep.get())));
      compare(e.token, n, "tau", e.tau, tdv_report_tau(rep.get()));
      if (e.neighborhood_sum >= 0) {
        std::int64_t sum = tdv_report_value(rep.get(), e.v0);
        std::vector<int> nbrs(64);
        const int cnt = tdv_graph_neighbors(g.get(), e.v0, nbrs.data(), nbrs.size());
        for (int i = 0; i < cnt; ++i) sum += tdv_report_value(rep.get(), nbrs[static_cast<size_t>(i)]);
        compare(e.token, n, "neighborhood-sum",
                static_cast<std::uint64_t>(e.neighborhood_sum),
                static_cast<std::uint64_t>(sum));
      }
      if (e.v0_value >= 0) {
        compare(e.token, n, "tdv[v0]", static_cast<std::uint64_t>(e.v0_value),
                tdv_report_value(rep.get(), e.v0));
      }
      run_checks(g.get(), e.token, n);
    }
    std::cout << "figures: 4 graphs checked\n";
  }

  void verify_queens() {
    {
      GraphPtr g = family_graph("queen:3x3");
      ReportPtr rep = solve_graph(g.get(), "queen:3x3");
      compare("queen:3x3", 9, "gamma_t", 2,
              static_cast<std::uint64_t>(tdv_report_gamma_t(rep.get())));
      for (int v = 1; v <= 9; ++v) {
        compare("queen:3x3", 9, "tdv[" + std::to_string(v) + "]",
                v == 5 ? 8u : 4u, tdv_report_value(rep.get(), v));
      }
      run_checks(g.get(), "queen:3x3", 9);
    }
    {
      GraphPtr g = family_graph("queen:4x4");
      ReportPtr rep = solve_graph(g.get(), "queen:4x4");
      compare("queen:4x4", 16, "gamma_t", 2,
              static_cast<std::uint64_t>(tdv_report_gamma_t(rep.get())));
      for (int v = 1; v <= 16; ++v) {
        const bool center = v == 6 || v == 7 || v == 10 || v == 11;
        compare("queen:4x4", 16, "tdv[" + std::to_string(v) + "]",
                center ? 3u : 1u, tdv_report_value(rep.get(), v));
      }
      run_checks(g.get(), "queen:4x4", 16);
    }
    std::cout << "queen boards: 2 graphs checked\n";
  }

  void verify_matchings(Range range) {
    int count = 0;
    for (int m = std::max(1, range.lo); m <= range.hi; ++m, ++count) {
      const std::string token = "mk2:" + std::to_string(m);
      GraphPtr g = family_graph(token);
      ReportPtr rep = solve_graph(g.get(), token);
      compare(token, 2 * m, "gamma_t", static_cast<std::uint64_t>(2 * m),
              static_cast<std::uint64_t>(tdv_report_gamma_t(rep.get())));
      compare(token, 2 * m, "tau", 1, tdv_report_tau(rep.get()));
      run_checks(g.get(), token, 2 * m);

      tdv_graph* raw = nullptr;
      must(tdv_graph_complement(g.get(), &raw), "complement of " + token);
      GraphPtr co(raw);
      run_checks(co.get(), token + " complement", 2 * m);
      if (m >= 2) {
        std::uint64_t in_matching = 0, in_complement = 0;
        must(tdv_formula_mk2_complement_tdv(m, &in_matching, &in_complement),
             "mk2_complement_tdv");
        for (int v = 1; v <= 2 * m; ++v) {
          compare(token, 2 * m, "tdv[" + std::to_string(v) + "]", in_matching,
                  tdv_report_value(rep.get(), v));
        }
        ReportPtr co_rep = solve_graph(co.get(), token + " complement");
        for (int v = 1; v <= 2 * m; ++v) {
          compare(token + " complement", 2 * m, "tdv[" + std::to_string(v) + "]",
                  in_complement, tdv_report_value(co_rep.get(), v));
        }
      }
    }
    std::cout << "matchings " << range.lo << ".." << range.hi << ": " << count
              << " graphs checked\n";
  }

  void verify_random(int count, std::uint64_t seed_base) {
    for (int i = 1; i <= count; ++i) {
      const std::uint64_t seed = seed_base + static_cast<std::uint64_t>(i);
      const int n = 4 + static_cast<int>(seed % 9);
      const double p = 0.25 + 0.05 * static_cast<double>(seed % 6);
      tdv_graph* raw = nullptr;
      must(tdv_graph_random_connected(n, p, seed, &raw), "random graph");
      GraphPtr g(raw);
      run_checks(g.get(), "random(seed=" + std::to_string(seed) + ")", n);
    }
    std::cout << "random graphs: " << count << " graphs checked\n";
  }

  void expect_tag(const std::string& token, int v0, const char* tag) {
    GraphPtr g = family_graph(token);
    tdv_check_list* raw = nullptr;
    must(tdv_check_neighborhood_sum(g.get(), v0, &raw), "checking " + token);
    ChecksPtr checks(raw);
    if (tdv_check_verdict(checks.get(), 0) != TDV_VERDICT_PASS ||
        !tdv_check_has_tag(checks.get(), 0, tag)) {
      fail(token, tdv_graph_order(g.get()), std::string("sharpness:") + tag,
           "tight", "not tight");
    }
  }

  void verify_sharpness() {
    expect_tag("path:8", 1, "lower-tight");
    expect_tag("star:3", 1, "ub1-tight");
    expect_tag("uppersharp:6", 3, "ub2-tight");

    {
      GraphPtr g = family_graph("kpartite:2,2,2");
      tdv_check_list* raw = nullptr;
      must(tdv_check_run_all(g.get(), &raw), "checking kpartite:2,2,2");
      ChecksPtr checks(raw);
      bool tight = false;
      for (size_t i = 0; i < tdv_check_list_count(checks.get()); ++i) {
        if (std::string(tdv_check_id(checks.get(), i)) == "tau-gamma2-upper") {
          tight = tdv_check_verdict(checks.get(), i) == TDV_VERDICT_PASS &&
                  tdv_check_has_tag(checks.get(), i, "upper-tight");
        }
      }
      if (!tight) {
        fail("kpartite:2,2,2", 6, "sharpness:tau-gamma2-upper", "tight", "not tight");
      }
    }

    for (int n = 3; n <= 8; ++n) {
      std::uint64_t scanned = 0, tight_count = 0;
      int only_complete = 0;
      must(tdv_scan_tau_range_upper(n, &scanned, &tight_count, &only_complete),
           "tau-range scan");
      const std::uint64_t expected = n <= 5 ? 1 : 0;
      if (tight_count != expected || only_complete != 1) {
        fail("scan", n, "tau-range-upper-tight", std::to_string(expected),
             std::to_string(tight_count) +
                 (only_complete ? "" : " (non-complete graph tight)"));
      }
      std::cout << "tau-range scan n=" << n << ": " << scanned
                << " graphs, tight=" << tight_count << "\n";
    }
    std::cout << "sharpness witnesses checked\n";
  }
};

struct VerifyArgs {
  std::string paths, cycles, mk2;
  int multipartite_max = 0;
  bool figures = false, queens = false, sharpness = false, all = false;
  int random_count = 0;
  std::uint64_t random_seed = 0;
  int threads = 0;
};

int cmd_verify(const VerifyArgs& args) {
  Verifier verifier;
  verifier.threads = resolve_threads(args.threads);

  Range paths = args.paths.empty() ? Range{} : parse_range(args.paths);
  Range cycles = args.cycles.empty() ? Range{} : parse_range(args.cycles);
  Range mk2 = args.mk2.empty() ? Range{} : parse_range(args.mk2);
  int multipartite_max = args.multipartite_max;
  bool figures = args.figures, queens = args.queens, sharpness = args.sharpness;
  int random_count = args.random_count;

  if (args.all) {
    if (!paths.active()) paths = {2, 22};
    if (!cycles.active()) cycles = {3, 22};
    if (!mk2.active()) mk2 = {1, 5};
    if (multipartite_max == 0) multipartite_max = 9;
    figures = queens = sharpness = true;
    if (random_count == 0) random_count = 200;
  }

  bool ran = false;
  if (paths.active()) { verifier.verify_paths(paths); ran = true; }
  if (cycles.active()) { verifier.verify_cycles(cycles); ran = true; }
  if (multipartite_max >= 2) { verifier.verify_multipartite(multipartite_max); ran = true; }
  if (figures) { verifier.verify_figures(); ran = true; }
  if (queens) { verifier.verify_queens(); ran = true; }
  if (mk2.active()) { verifier.verify_matchings(mk2); ran = true; }
  if (random_count > 0) { verifier.verify_random(random_count, args.random_seed); ran = true; }
  if (sharpness) { verifier.verify_sharpness(); ran = true; }

  if (!ran) {
    std::cerr << "error: nothing to verify; pass --all or a specific range\n";
    return kExitInputError;
  }

  for (const std::string& line : verifier.failures) std::cout << line << "\n";
  std::cout << "summary: " << verifier.failures.size() << " failures\n";
  return verifier.failures.empty() ? 0 : kExitVerifyFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact total-domination toolkit"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  CLI::App* solve_cmd = app.add_subcommand(
      "solve", "Compute gamma_t, tau, and per-vertex values");
  solve_cmd->add_option("input", solve_args.input,
                        "family token (path:6), file path, or - for stdin")
      ->required();
  solve_cmd->add_flag("--json", solve_args.json, "emit a JSON record");
  solve_cmd->add_flag("--tdm", solve_args.tdm, "include every minimum set");
  solve_cmd->add_flag("--checks", solve_args.checks, "include property checks");
  solve_cmd->add_flag("--zero-based", solve_args.zero_based,
                      "input file labels start at 0");
  solve_cmd->add_option("--threads", solve_args.threads,
                        "worker threads (default: TDV_THREADS or 1)");

  std::string gen_spec, gen_out = "-";
  CLI::App* gen_cmd = app.add_subcommand("gen", "Write a family graph as an edge list");
  gen_cmd->add_option("spec", gen_spec, "family token, e.g. cycle:5")->required();
  gen_cmd->add_option("out", gen_out, "output path or - for stdout");

  VerifyArgs verify_args;
  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "Cross-check closed forms and properties against the solver");
  verify_cmd->add_option("--paths", verify_args.paths, "path orders, e.g. 2..20");
  verify_cmd->add_option("--cycles", verify_args.cycles, "cycle orders, e.g. 3..20");
  verify_cmd->add_option("--multipartite-max", verify_args.multipartite_max,
                         "check all compositions of every total up to N");
  verify_cmd->add_flag("--figures", verify_args.figures, "check the figure graphs");
  verify_cmd->add_flag("--queens", verify_args.queens, "check the queen boards");
  verify_cmd->add_option("--mk2", verify_args.mk2, "matching sizes, e.g. 1..5");
  verify_cmd->add_option("--random", verify_args.random_count,
                         "number of seeded random graphs");
  verify_cmd->add_option("--random-seed", verify_args.random_seed, "seed offset");
  verify_cmd->add_flag("--sharpness", verify_args.sharpness,
                       "check tightness witnesses and the tau-range scan");
  verify_cmd->add_flag("--all", verify_args.all, "run the full default corpus");
  verify_cmd->add_option("--threads", verify_args.threads,
                         "worker threads (default: TDV_THREADS or 1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInputError;
  }

  if (solve_cmd->parsed()) return cmd_solve(solve_args);
  if (gen_cmd->parsed()) return cmd_gen(gen_spec, gen_out);
  if (verify_cmd->parsed()) return cmd_verify(verify_args);
  return kExitInputError;
}
