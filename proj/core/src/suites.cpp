#include "pcp/suites.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <set>

#include "pcp/error.hpp"
#include "pcp/expr.hpp"
#include "pcp/limits.hpp"
#include "pcp/perm.hpp"
#include "pcp/prograph.hpp"
#include "pcp/refined.hpp"
#include "pcp/tableau.hpp"
#include "pcp/treebij.hpp"
#include "pcp/wpath.hpp"

namespace pcp {

bool SuiteReport::passed() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

namespace {

std::string up_to(int n) { return "n <= " + std::to_string(n); }

// Per-check ceilings: beyond these the exhaustive loops take minutes.
constexpr int kCountCap = 7;
constexpr int kOracleCap = 4;
constexpr int kRoundtripCap = 5;
constexpr int kPairCap = 4;
constexpr int kConditionCap = 4;
constexpr int kConjectureCap = 5;
constexpr int kPerm123Cap = 8;

struct Context {
  int max_size;
  unsigned threads;
  SuiteReport report;

  int clip(int cap) const { return std::min({max_size, cap, pcp::max_size()}); }

  void add(std::string suite, std::string property, bool passed, std::uint64_t checked,
           std::string detail) {
    report.checks.push_back(
        {std::move(suite), std::move(property), passed, checked, std::move(detail)});
  }
};

void counts_suite(Context& ctx) {
  const int top = ctx.clip(kCountCap);
  std::string seq;
  bool formula = true, paths = true, prographs = true, tableaux = true;
  for (int n = 0; n <= top; ++n) {
    const BigInt expected = catalan3(n);
    formula = formula && (n >= static_cast<int>(kCatalan3Table.size()) ||
                          expected == BigInt(kCatalan3Table[n]));
    paths = paths && BigInt(count_constrained_paths(n)) == expected;
    prographs = prographs && BigInt(enumerate_prographs(n, ctx.threads).size()) == expected;
    tableaux = tableaux && BigInt(count_tableaux(n)) == expected;
    if (n > 0) seq += ',';
    seq += expected.str();
  }
  const auto sizes = static_cast<std::uint64_t>(top + 1);
  ctx.add("counts", "catalan3 matches table", formula, sizes, seq);
  ctx.add("counts", "constrained paths", paths, sizes, up_to(top));
  ctx.add("counts", "prographs", prographs, sizes, up_to(top));
  ctx.add("counts", "tableaux", tableaux, sizes, up_to(top));

  const int oracle_top = ctx.clip(kOracleCap);
  bool same = true;
  std::uint64_t seen = 0;
  for (int n = 0; n <= oracle_top; ++n) {
    const auto oracle = enumerate_prographs_oracle(n, ctx.threads);
    same = same && oracle == enumerate_prographs(n, ctx.threads);
    seen += oracle.size();
  }
  ctx.add("counts", "oracle equals dw_inverse of constrained paths", same, seen,
          up_to(oracle_top));
}

void bijections_suite(Context& ctx) {
  const int top = ctx.clip(kRoundtripCap - 1);
  bool le_ok = true, dw_ok = true;
  std::uint64_t objects = 0;
  for (int n = 0; n <= top; ++n) {
    for (const Prograph& p : enumerate_prographs(n, ctx.threads)) {
      le_ok = le_ok && le_inverse(le(p)) == p;
      dw_ok = dw_ok && dw_inverse(dw(p)) == p;
      ++objects;
    }
    for (const StandardTableau3& t : enumerate_tableaux(n)) le_ok = le_ok && le(le_inverse(t)) == t;
    for (const WeightedDyckPath& w : enumerate_constrained_paths(n, ctx.threads)) {
      dw_ok = dw_ok && dw(dw_inverse(w)) == w;
    }
  }
  ctx.add("bijections", "le/le_inverse roundtrip", le_ok, objects, up_to(top));
  ctx.add("bijections", "dw/dw_inverse roundtrip", dw_ok, objects, up_to(top));

  const int dw_top = ctx.clip(kRoundtripCap);
  if (dw_top > top) {
    bool ok = true;
    std::uint64_t more = 0;
    for (const WeightedDyckPath& w : enumerate_constrained_paths(dw_top, ctx.threads)) {
      const Prograph p = dw_inverse(w);
      ok = ok && dw(p) == w;
      ++more;
    }
    ctx.add("bijections", "dw/dw_inverse roundtrip", ok, more, "n = " + std::to_string(dw_top));
  }

  const int len = std::min(2 * ctx.max_size, kPerm123Cap);
  const Permutation p123 = Permutation::from_word({1, 2, 3});
  bool tree_ok = true;
  std::uint64_t perms = 0;
  for (int m = 0; m <= len; ++m) {
    for_each_permutation(m, [&](const Permutation& p) {
      if (contains_pattern(p.word(), p123)) return;
      const ParkingFunctionND f = pf_from_perm123(p);
      const PlanarBinaryTree t = tree_from_pf(f);
      tree_ok = tree_ok && perm123_from_pf(f) == p && pf_from_tree(t) == f &&
                parse_tree(to_string(t)) == t;
      ++perms;
    });
  }
  ctx.add("bijections", "perm -> pf -> tree closes", tree_ok, perms,
          "123-avoiding, size <= " + std::to_string(len));
}

void schutzenberger_suite(Context& ctx) {
  const int top = ctx.clip(kRoundtripCap - 1);
  bool involution = true, equivariant = true, tableau_invol = true;
  std::uint64_t objects = 0;
  for (int n = 0; n <= top; ++n) {
    for (const Prograph& p : enumerate_prographs(n, ctx.threads)) {
      const Prograph s = schutzenberger(p);
      involution = involution && schutzenberger(s) == p;
      equivariant = equivariant && le(s) == schutzenberger(le(p));
      ++objects;
    }
    for (const StandardTableau3& t : enumerate_tableaux(n)) {
      tableau_invol = tableau_invol && schutzenberger(schutzenberger(t)) == t;
    }
  }
  ctx.add("schutzenberger", "prograph rotation is an involution", involution, objects, up_to(top));
  ctx.add("schutzenberger", "tableau involution", tableau_invol, objects, up_to(top));
  ctx.add("schutzenberger", "le commutes with the involution", equivariant, objects, up_to(top));

  bool perm_ok = true;
  std::uint64_t perms = 0;
  for (int n = 0; n <= ctx.clip(kConjectureCap); ++n) {
    for_each_A2n(n, [&](const Permutation& p) {
      const Permutation s = schutzenberger(p);
      perm_ok = perm_ok && in_A2n(s) && schutzenberger(s) == p;
      ++perms;
    });
  }
  ctx.add("schutzenberger", "permutation involution preserves A_2n(1234)", perm_ok, perms,
          up_to(ctx.clip(kConjectureCap)));
}

void monoid_suite(Context& ctx) {
  const int total = ctx.clip(kPairCap);
  std::vector<std::vector<Prograph>> by_size;
  std::vector<std::vector<Permutation>> perms_by_size;
  for (int n = 0; n <= total; ++n) {
    by_size.push_back(enumerate_prographs(n, ctx.threads));
    perms_by_size.push_back(enumerate_A2n(n));
  }

  bool le_morph = true, dw_morph = true, closed = true, unit = true;
  std::uint64_t pairs = 0, perm_pairs = 0;
  const Prograph id;
  for (int a = 0; a <= total; ++a) {
    for (int b = 0; a + b <= total; ++b) {
      for (const Prograph& p : by_size[a]) {
        unit = unit && stack(p, id) == p && stack(id, p) == p;
        for (const Prograph& q : by_size[b]) {
          const Prograph s = stack(p, q);
          le_morph = le_morph && le(s) == shifted_concat(le(p), le(q));
          WeightedDyckPath joined = dw(p);
          const WeightedDyckPath tail = dw(q);
          joined.steps.insert(joined.steps.end(), tail.steps.begin(), tail.steps.end());
          dw_morph = dw_morph && dw(s) == joined;
          ++pairs;
        }
      }
      for (const Permutation& s : perms_by_size[a]) {
        for (const Permutation& t : perms_by_size[b]) {
          closed = closed && in_A2n(shifted_concat(s, t));
          ++perm_pairs;
        }
      }
    }
  }
  ctx.add("monoid", "stack has the empty prograph as unit", unit, pairs, "total " + up_to(total));
  ctx.add("monoid", "le(stack(p,q)) = le(p) . le(q)", le_morph, pairs, "total " + up_to(total));
  ctx.add("monoid", "dw(stack(p,q)) = dw(p) dw(q)", dw_morph, pairs, "total " + up_to(total));
  ctx.add("monoid", "shifted concatenation stays in A_2n(1234)", closed, perm_pairs,
          "total " + up_to(total));

  const int assoc_top = std::min(total, 3);
  bool assoc = true;
  std::uint64_t triples = 0;
  for (int a = 0; a <= assoc_top; ++a) {
    for (int b = 0; a + b <= assoc_top; ++b) {
      for (int c = 0; a + b + c <= assoc_top; ++c) {
        for (const Prograph& p : by_size[a]) {
          for (const Prograph& q : by_size[b]) {
            for (const Prograph& r : by_size[c]) {
              assoc = assoc && stack(stack(p, q), r) == stack(p, stack(q, r));
              ++triples;
            }
          }
        }
      }
    }
  }
  ctx.add("monoid", "stack is associative", assoc, triples, "total " + up_to(assoc_top));

  // Stacking primitives of all sizes must rebuild every prograph exactly once.
  bool factor = true;
  std::uint64_t objects = 0;
  for (int n = 0; n <= total; ++n) {
    for (const Prograph& p : by_size[n]) {
      Prograph rebuilt;
      for (const WeightedDyckPath& f : primitive_factors(dw(p))) {
        factor = factor && is_primitive(f);
        rebuilt = stack(rebuilt, dw_inverse(f));
      }
      factor = factor && rebuilt == p;
      ++objects;
    }
  }
  ctx.add("monoid", "unique factorisation into primitives", factor, objects, up_to(total));
}

void conditions_suite(Context& ctx) {
  const int top = ctx.clip(kConditionCap);
  std::uint64_t checked = 0, mismatches = 0;
  for (int n = 0; n <= top; ++n) {
    for_each_permutation(2 * n, [&](const Permutation& p) {
      const bool member = in_A2n(p);
      const bool predicted = is_up_down(p) && check_conditions(p).all();
      if (member != predicted) ++mismatches;
      ++checked;
    });
  }
  ctx.add("conditions", "A_2n(1234) iff up-down and the four conditions", mismatches == 0, checked,
          std::to_string(mismatches) + " mismatches, " + up_to(top));

  bool generators = true;
  for (int n = 0; n <= std::min(top, 4); ++n) {
    generators = generators && enumerate_A2n(n) == enumerate_A2n_filter(n);
  }
  ctx.add("conditions", "pruned generator equals the filter", generators,
          static_cast<std::uint64_t>(std::min(top, 4) + 1), up_to(std::min(top, 4)));
}

void conjecture_suite(Context& ctx) {
  const int top = ctx.clip(kConjectureCap);
  bool equal = true;
  std::uint64_t rows = 0;
  std::string first_bad;
  for (int n = 0; n <= top; ++n) {
    for (const RefinedRow& row : refined_counts(n, ctx.threads)) {
      if (row.permutations != row.prographs && first_bad.empty()) {
        first_bad = "n=" + std::to_string(n) + " differs";
      }
      equal = equal && row.permutations == row.prographs;
      ++rows;
    }
  }
  ctx.add("conjecture", "refined counts agree on every bipartition", equal, rows,
          first_bad.empty() ? up_to(top) : first_bad);

  bool single_peak = true;
  std::uint64_t objects = 0;
  for (int n = 0; n <= top; ++n) {
    std::set<Permutation> image;
    for (const Prograph& p : enumerate_prographs(n, ctx.threads)) {
      const WeightedDyckPath path = dw(p);
      const bool peak = std::all_of(path.steps.begin(), path.steps.begin() + n,
                                    [](WeightedStep s) { return s.direction == Direction::Up; });
      if (!peak) continue;
      const Permutation s = single_peak_to_perm(p);
      single_peak = single_peak && in_A2n(s) && perm_to_single_peak(s) == p;
      image.insert(s);
      ++objects;
    }
    std::uint64_t expected = 0;
    for_each_A2n(n, [&](const Permutation& s) {
      const auto vals = peak_valley_view(s).vals;
      if (std::all_of(vals.begin(), vals.end(), [&](int v) { return v <= n; })) {
        ++expected;
        single_peak = single_peak && image.count(s) == 1;
      }
    });
    single_peak = single_peak && expected == image.size();
  }
  ctx.add("conjecture", "single-peak map is a bijection onto Vals = {1..n}", single_peak, objects,
          up_to(top));
}

void dsl_suite(Context& ctx) {
  const int top = ctx.clip(kPairCap);
  bool ok = true;
  std::uint64_t objects = 0;
  for (int n = 0; n <= top; ++n) {
    for (const Prograph& p : enumerate_prographs(n, ctx.threads)) {
      const std::string text = print_canonical(p);
      const Prograph back = eval_expression(parse_expression(text));
      ok = ok && back == p && print_canonical(back) == text;
      ++objects;
    }
  }
  ctx.add("dsl", "normal form evaluates back to the prograph", ok, objects, up_to(top));

  bool rejected = false;
  try {
    parse_expression("m o d o d");
  } catch (const Error& e) {
    rejected = e.code() == ErrorCode::ArityMismatch && e.position().has_value();
  }
  ctx.add("dsl", "ill-typed composition is rejected with a position", rejected, 1, "m o d o d");
}

using SuiteFn = void (*)(Context&);

constexpr std::array<std::pair<std::string_view, SuiteFn>, 7> kSuites{{
    {"counts", counts_suite},
    {"bijections", bijections_suite},
    {"schutzenberger", schutzenberger_suite},
    {"monoid", monoid_suite},
    {"conditions", conditions_suite},
    {"conjecture", conjecture_suite},
    {"dsl", dsl_suite},
}};

}  // namespace

SuiteReport run_suite(std::string_view name, int max_size, unsigned threads) {
  Context ctx{max_size, std::max(1u, threads), {}};
  bool found = false;
  for (const auto& [suite, fn] : kSuites) {
    if (name == "all" || name == suite) {
      fn(ctx);
      found = true;
    }
  }
  if (!found) throw Error(ErrorCode::UnknownSuite, "unknown suite '" + std::string(name) + "'");
  return std::move(ctx.report);
}

std::string format_report(const SuiteReport& report) {
  std::string out;
  for (const CheckResult& c : report.checks) {
    out += c.passed ? "PASS " : "FAIL ";
    out += c.suite + '/' + c.property + " (" + std::to_string(c.checked) + " checked)";
    if (!c.detail.empty()) out += ": " + c.detail;
    out += '\n';
  }
  return out;
}

}  // namespace pcp
