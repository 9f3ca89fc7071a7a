// Command line front end.
//
// Exit codes: 0 success, 1 usage or validation error, 2 verification
// mismatch, 3 resource budget exceeded.

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "boolsch/constants.hpp"
#include "boolsch/encoding.hpp"
#include "boolsch/errors.hpp"
#include "boolsch/fast_type_a.hpp"
#include "boolsch/insertion.hpp"
#include "boolsch/kostant_kumar.hpp"
#include "boolsch/triples.hpp"
#include "boolsch/weyl_group.hpp"

namespace {

using nlohmann::json;
using namespace boolsch;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitMismatch = 2;
constexpr int kExitResource = 3;

struct CommonArgs {
  std::string lie_type = "A";
  int rank = 1;
  RootSystem make() const { return RootSystem(lie_type_from_char(lie_type.at(0)), rank); }
};

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  size_t start = 0;
  while (start < text.size()) {
    size_t end = text.find(',', start);
    if (end == std::string::npos) end = text.size();
    out.push_back(std::stoi(text.substr(start, end - start)));
    start = end + 1;
  }
  return out;
}

long long weyl_budget() {
  if (const char* env = std::getenv("BOOLSCH_MAX_WEYL_ORDER")) {
    char* tail = nullptr;
    long long v = std::strtoll(env, &tail, 10);
    if (tail && *tail == '\0' && v > 0) return v;
    throw std::invalid_argument("BOOLSCH_MAX_WEYL_ORDER must be a positive integer");
  }
  return WeylGroup::kDefaultMaxOrder;
}

// ---- constant ----

struct ConstantArgs {
  CommonArgs common;
  std::string u, v, w;
  bool equivariant = false;
  bool fast = false;
  bool check_ordering = false;
  std::string ordering;
};

int run_constant(const ConstantArgs& a) {
  RootSystem rs = a.common.make();
  BooleanElement u = element_from_string(rs, a.u);
  BooleanElement v = element_from_string(rs, a.v);
  BooleanElement w = element_from_string(rs, a.w);

  if (a.fast) {
    if (a.equivariant) {
      std::cerr << "--fast computes ordinary constants only\n";
      return kExitUsage;
    }
    if (rs.type() != LieType::A) {
      std::cerr << "--fast requires --lie-type A\n";
      return kExitUsage;
    }
    json out = {{"value", fast_ordinary_constant_type_a(rs, u, v, w)}};
    std::cout << out.dump() << "\n";
    return kExitOk;
  }

  ConstantOptions opts;
  if (!a.ordering.empty()) opts.ordering = parse_int_list(a.ordering);

  if (a.equivariant) {
    Poly d = equivariant_constant(rs, u, v, w, opts);
    if (a.check_ordering) {
      ConstantOptions reversed;
      std::vector<int> ord = opts.ordering ? *opts.ordering : v.support();
      std::reverse(ord.begin(), ord.end());
      reversed.ordering = ord;
      if (equivariant_constant(rs, u, v, w, reversed) != d) {
        std::cerr << "ordering cross-check failed\n";
        return kExitMismatch;
      }
    }
    std::cout << poly_to_json(d).dump() << "\n";
  } else {
    long long c = ordinary_constant(rs, u, v, w, opts);
    if (a.check_ordering) {
      ConstantOptions reversed;
      std::vector<int> ord = opts.ordering ? *opts.ordering : v.support();
      std::reverse(ord.begin(), ord.end());
      reversed.ordering = ord;
      if (ordinary_constant(rs, u, v, w, reversed) != c) {
        std::cerr << "ordering cross-check failed\n";
        return kExitMismatch;
      }
    }
    json out = {{"value", c}};
    std::cout << out.dump() << "\n";
  }
  return kExitOk;
}

// ---- table ----

struct TableArgs {
  CommonArgs common;
  std::string w;
  bool equivariant = false;
  std::string format = "csv";
};

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

int run_table(const TableArgs& a) {
  RootSystem rs = a.common.make();
  BooleanElement w = element_from_string(rs, a.w);
  auto table = constant_table(rs, w, a.equivariant);

  struct Row {
    std::string u, v;
    const Poly* value;
  };
  std::vector<Row> rows;
  rows.reserve(table.size());
  for (const auto& [key, value] : table)
    rows.push_back({element_to_string(key.first), element_to_string(key.second), &value});
  std::sort(rows.begin(), rows.end(), [](const Row& x, const Row& y) {
    if (x.u != y.u) return x.u < y.u;
    return x.v < y.v;
  });

  if (a.format == "csv") {
    std::cout << "u,v,value\n";
    for (const Row& r : rows) {
      std::cout << csv_quote(r.u) << ',' << csv_quote(r.v) << ',';
      if (a.equivariant)
        std::cout << csv_quote(poly_to_json(*r.value).dump());
      else
        std::cout << r.value->constant_term();
      std::cout << '\n';
    }
  } else if (a.format == "json") {
    json out;
    out["w"] = element_to_json(w);
    out["equivariant"] = a.equivariant;
    json jrows = json::array();
    for (const Row& r : rows) {
      json row;
      row["u"] = r.u;
      row["v"] = r.v;
      if (a.equivariant)
        row["value"] = poly_to_json(*r.value);
      else
        row["value"] = r.value->constant_term();
      jrows.push_back(std::move(row));
    }
    out["rows"] = std::move(jrows);
    std::cout << out.dump() << "\n";
  } else {
    std::cerr << "unknown --format '" << a.format << "'\n";
    return kExitUsage;
  }
  return kExitOk;
}

// ---- verify ----

struct VerifyArgs {
  CommonArgs common;
  std::string suite;
  long long max_triples = 0;  // 0 = unlimited
};

struct VerifyReport {
  long long checked = 0;
  json mismatches = json::array();
  long long budget = 0;

  bool over_budget() const { return budget > 0 && checked >= budget; }
  void mismatch(json j) {
    if (mismatches.size() < 64) mismatches.push_back(std::move(j));
  }
};

void verify_triples(const RootSystem& rs, VerifyReport& rep,
                    const std::function<std::optional<json>(const BooleanElement&,
                                                            const BooleanElement&,
                                                            const BooleanElement&)>& check) {
  for (const BooleanElement& w : enumerate_boolean(rs)) {
    std::vector<BooleanElement> subs = subdiagrams(w);
    for (const BooleanElement& u : subs) {
      for (const BooleanElement& v : subs) {
        if (rep.over_budget()) return;
        ++rep.checked;
        if (auto bad = check(u, v, w)) rep.mismatch(std::move(*bad));
      }
    }
  }
}

// Enumerates (u, root subset, ordering); reports through `check`.
void verify_orderings(const RootSystem& rs, VerifyReport& rep,
                      const std::function<std::optional<json>(const BooleanElement&,
                                                              const std::vector<int>&)>& check) {
  const int n = rs.rank();
  for (const BooleanElement& u : enumerate_boolean(rs)) {
    for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
      std::vector<int> roots;
      for (int i = 1; i <= n; ++i)
        if (mask & (1UL << (i - 1))) roots.push_back(i);
      std::sort(roots.begin(), roots.end());
      do {
        if (rep.over_budget()) return;
        ++rep.checked;
        if (auto bad = check(u, roots)) rep.mismatch(std::move(*bad));
      } while (std::next_permutation(roots.begin(), roots.end()));
    }
  }
}

// Counts growing-step insertion paths per endpoint, no target filter.
void count_paths(const RootSystem& rs, const BooleanElement& cur, const std::vector<int>& roots,
                 size_t depth, std::map<BooleanElement, long long>& counts) {
  if (depth == roots.size()) {
    ++counts[cur];
    return;
  }
  for (const InsertionStep& s : insertion_targets(rs, cur, roots[depth])) {
    if (s.kind == StepKind::Equivariant) continue;
    count_paths(rs, s.target, roots, depth + 1, counts);
  }
}

int run_verify(const VerifyArgs& a) {
  RootSystem rs = a.common.make();
  VerifyReport rep;
  rep.budget = a.max_triples;

  if (a.suite == "kk") {
    verify_triples(rs, rep, [&](const auto& u, const auto& v, const auto& w) -> std::optional<json> {
      Poly got = equivariant_constant(rs, u, v, w);
      Poly expected = kk_constant(rs, u, v, w);
      if (got == expected) return std::nullopt;
      return json{{"u", element_to_string(u)}, {"v", element_to_string(v)},
                  {"w", element_to_string(w)}, {"expected", poly_to_json(expected)},
                  {"got", poly_to_json(got)}};
    });
  } else if (a.suite == "chevalley") {
    WeylGroup group(rs, weyl_budget());
    verify_triples(rs, rep, [&](const auto& u, const auto& v, const auto& w) -> std::optional<json> {
      Poly got = group.chevalley_constant(u, v, w);
      Poly expected = kk_constant(rs, u, v, w);
      if (got == expected) return std::nullopt;
      return json{{"u", element_to_string(u)}, {"v", element_to_string(v)},
                  {"w", element_to_string(w)}, {"expected", poly_to_json(expected)},
                  {"got", poly_to_json(got)}};
    });
  } else if (a.suite == "zero-one") {
    if (rs.type() != LieType::A) {
      std::cerr << "suite zero-one applies to type A\n";
      return kExitUsage;
    }
    verify_triples(rs, rep, [&](const auto& u, const auto& v, const auto& w) -> std::optional<json> {
      long long c = ordinary_constant(rs, u, v, w);
      if (c == 0 || c == 1) return std::nullopt;
      return json{{"u", element_to_string(u)}, {"v", element_to_string(v)},
                  {"w", element_to_string(w)}, {"expected", "0 or 1"}, {"got", c}};
    });
  } else if (a.suite == "symmetry") {
    verify_triples(rs, rep, [&](const auto& u, const auto& v, const auto& w) -> std::optional<json> {
      Poly a1 = equivariant_constant(rs, u, v, w);
      Poly a2 = equivariant_constant(rs, v, u, w);
      if (a1 == a2) return std::nullopt;
      return json{{"u", element_to_string(u)}, {"v", element_to_string(v)},
                  {"w", element_to_string(w)}, {"expected", poly_to_json(a1)},
                  {"got", poly_to_json(a2)}};
    });
  } else if (a.suite == "ordering") {
    // Expansion along the sorted ordering is the reference for the rest.
    std::map<std::pair<BooleanElement, std::vector<int>>, std::map<BooleanElement, Poly>> ref;
    verify_orderings(rs, rep, [&](const BooleanElement& u,
                                  const std::vector<int>& ordering) -> std::optional<json> {
      std::vector<int> sorted = ordering;
      std::sort(sorted.begin(), sorted.end());
      auto key = std::make_pair(u, sorted);
      auto it = ref.find(key);
      if (it == ref.end())
        it = ref.emplace(key, boolean_product_expansion(rs, u, sorted)).first;
      if (sorted == ordering) return std::nullopt;
      if (boolean_product_expansion(rs, u, ordering) == it->second) return std::nullopt;
      return json{{"u", element_to_string(u)}, {"ordering", ordering},
                  {"expected", "expansion independent of the ordering"}, {"got", "mismatch"}};
    });
  } else if (a.suite == "uniqueness") {
    if (rs.type() == LieType::D || rs.type() == LieType::E) {
      std::cerr << "suite uniqueness applies to path-shaped diagrams (types A, B, C, F, G)\n";
      return kExitUsage;
    }
    verify_orderings(rs, rep, [&](const BooleanElement& u,
                                  const std::vector<int>& ordering) -> std::optional<json> {
      std::map<BooleanElement, long long> counts;
      count_paths(rs, u, ordering, 0, counts);
      for (const auto& [w, c] : counts) {
        if (c > 1)
          return json{{"u", element_to_string(u)}, {"ordering", ordering},
                      {"w", element_to_string(w)}, {"expected", "at most one growing path"},
                      {"got", c}};
      }
      return std::nullopt;
    });
  } else if (a.suite == "fastpath") {
    if (rs.type() != LieType::A) {
      std::cerr << "suite fastpath applies to type A\n";
      return kExitUsage;
    }
    verify_triples(rs, rep, [&](const auto& u, const auto& v, const auto& w) -> std::optional<json> {
      long long slow = ordinary_constant(rs, u, v, w);
      int fast = fast_ordinary_constant_type_a(rs, u, v, w);
      if (slow == fast) return std::nullopt;
      return json{{"u", element_to_string(u)}, {"v", element_to_string(v)},
                  {"w", element_to_string(w)}, {"expected", slow}, {"got", fast}};
    });
  } else {
    std::cerr << "unknown suite '" << a.suite << "'\n";
    return kExitUsage;
  }

  json out = {{"suite", a.suite},
              {"lie_type", a.common.lie_type},
              {"rank", a.common.rank},
              {"checked", rep.checked},
              {"mismatches", rep.mismatches}};
  std::cout << out.dump() << "\n";
  return rep.mismatches.empty() ? kExitOk : kExitMismatch;
}

// ---- bench ----

struct BenchArgs {
  std::string n_list = "16,32,64,128,256";
  int samples = 200;
  std::uint64_t seed = 12345;
};

int run_bench(const BenchArgs& a) {
  std::vector<BenchPoint> points;
  for (int n : parse_int_list(a.n_list))
    points.push_back(bench_fast_path(n, a.seed * 1000003ULL + n, a.samples));

  json results = json::array();
  for (const BenchPoint& p : points)
    results.push_back({{"n", p.n}, {"median_ns", p.median_ns}, {"mean_ns", p.mean_ns}});
  json out = {{"seed", a.seed},
              {"samples", a.samples},
              {"results", std::move(results)},
              {"loglog_slope", loglog_slope(points)}};
  std::cout << out.dump() << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"structure constants of Schubert classes for boolean Weyl group elements"};
  app.require_subcommand(1);

  ConstantArgs cargs;
  CLI::App* constant = app.add_subcommand("constant", "one structure constant");
  constant->add_option("--lie-type", cargs.common.lie_type, "Lie type A..G")->required();
  constant->add_option("--rank", cargs.common.rank, "rank")->required();
  constant->add_option("--u", cargs.u, "first factor")->required();
  constant->add_option("--v", cargs.v, "second factor")->required();
  constant->add_option("--w", cargs.w, "target element")->required();
  constant->add_flag("--equivariant", cargs.equivariant, "torus-equivariant value");
  constant->add_flag("--fast", cargs.fast, "type A near-linear path search");
  constant->add_option("--ordering", cargs.ordering,
                       "insertion order for supp(v), comma separated");
  constant->add_flag("--check-ordering", cargs.check_ordering,
                     "recompute under the reversed ordering and compare");

  TableArgs targs;
  CLI::App* table = app.add_subcommand("table", "all nonzero constants below one element");
  table->add_option("--lie-type", targs.common.lie_type, "Lie type A..G")->required();
  table->add_option("--rank", targs.common.rank, "rank")->required();
  table->add_option("--w", targs.w, "target element")->required();
  table->add_flag("--equivariant", targs.equivariant, "torus-equivariant values");
  table->add_option("--format", targs.format, "csv or json");

  VerifyArgs vargs;
  CLI::App* verify = app.add_subcommand("verify", "cross-check suites");
  verify->add_option("--suite", vargs.suite,
                     "kk | chevalley | zero-one | symmetry | ordering | uniqueness | fastpath")
      ->required();
  verify->add_option("--lie-type", vargs.common.lie_type, "Lie type A..G")->required();
  verify->add_option("--rank", vargs.common.rank, "rank")->required();
  verify->add_option("--max-triples", vargs.max_triples, "stop after this many checks");

  BenchArgs bargs;
  CLI::App* bench = app.add_subcommand("bench", "time the type A path search");
  bench->add_option("--n-list", bargs.n_list, "comma separated ranks");
  bench->add_option("--samples", bargs.samples, "triples per rank");
  bench->add_option("--seed", bargs.seed, "corpus seed");

  try {
    app.parse(argc, argv);
    if (constant->parsed()) return run_constant(cargs);
    if (table->parsed()) return run_table(targs);
    if (verify->parsed()) return run_verify(vargs);
    if (bench->parsed()) return run_bench(bargs);
    return kExitUsage;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const boolsch::ResourceLimitError& e) {
    std::cerr << "resource budget: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitUsage;
  }
}
