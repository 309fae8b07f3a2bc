// pcp: count, enumerate, convert and check prographs and the families in
// bijection with them. Exit status: 0 ok, 1 property failure, 2 bad input.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include "pcp/error.hpp"
#include "pcp/expr.hpp"
#include "pcp/limits.hpp"
#include "pcp/perm.hpp"
#include "pcp/refined.hpp"
#include "pcp/suites.hpp"
#include "pcp/tableau.hpp"
#include "pcp/treebij.hpp"
#include "pcp/wpath.hpp"

namespace {

using namespace pcp;

enum class Family { Prographs, Paths, Tableaux, Permutations, Expressions };

const std::map<std::string, Family> kFamilies{
    {"prographs", Family::Prographs},     {"paths", Family::Paths},
    {"tableaux", Family::Tableaux},       {"permutations", Family::Permutations},
    {"expressions", Family::Expressions},
};

// --format names the target family by its short name.
const std::map<std::string, Family> kFormats{
    {"path", Family::Paths},
    {"expr", Family::Expressions},
    {"tableau", Family::Tableaux},
    {"perm", Family::Permutations},
};

// Prographs and paths share the weighted-path text; permutations only reach
// prographs through the single-peak map.
Prograph read_as_prograph(Family f, const std::string& text) {
  switch (f) {
    case Family::Prographs:
    case Family::Paths:
      return dw_inverse(parse_path(text));
    case Family::Tableaux:
      return le_inverse(parse_tableau(text));
    case Family::Permutations:
      return perm_to_single_peak(parse_permutation(text));
    case Family::Expressions:
      return eval_expression(parse_expression(text));
  }
  return {};
}

std::string write_prograph(Family f, const Prograph& p) {
  switch (f) {
    case Family::Prographs:
    case Family::Paths:
      return to_string(dw(p));
    case Family::Tableaux:
      return to_string(le(p));
    case Family::Permutations:
      return to_string(single_peak_to_perm(p));
    case Family::Expressions:
      return print_canonical(p);
  }
  return {};
}

std::string convert(Family from, Family to, const std::string& text) {
  if (from == Family::Permutations && to == Family::Permutations) {
    const Permutation s = parse_permutation(text);
    if (!in_A2n(s)) throw Error(ErrorCode::NotInFamily, "not in A2n(1234)");
    return to_string(s);
  }
  return write_prograph(to, read_as_prograph(from, text));
}

std::string involution(Family f, const std::string& text) {
  switch (f) {
    case Family::Tableaux:
      return to_string(schutzenberger(parse_tableau(text)));
    case Family::Permutations:
      return to_string(schutzenberger(parse_permutation(text)));
    default:
      return write_prograph(f, schutzenberger(read_as_prograph(f, text)));
  }
}

std::string product(Family f, const std::string& a, const std::string& b) {
  switch (f) {
    case Family::Tableaux:
      return to_string(shifted_concat(parse_tableau(a), parse_tableau(b)));
    case Family::Permutations:
      return to_string(shifted_concat(parse_permutation(a), parse_permutation(b)));
    default:
      return write_prograph(f, stack(read_as_prograph(f, a), read_as_prograph(f, b)));
  }
}

std::uint64_t count(Family f, int n, unsigned jobs) {
  switch (f) {
    case Family::Prographs:
    case Family::Expressions:
      return enumerate_prographs(n, jobs).size();
    case Family::Paths:
      return count_constrained_paths(n);
    case Family::Tableaux:
      return count_tableaux(n);
    case Family::Permutations:
      return count_A2n(n);
  }
  return 0;
}

std::vector<std::string> enumerate(Family f, Family format, int n, unsigned jobs) {
  std::vector<std::string> out;
  if (f == Family::Permutations) {
    for (const Permutation& s : enumerate_A2n(n)) {
      out.push_back(format == Family::Permutations ? to_string(s)
                                                   : write_prograph(format, perm_to_single_peak(s)));
    }
  } else if (format == Family::Permutations) {
    // Only the single-peak prographs have a permutation image.
    for (const Prograph& p : enumerate_prographs(n, jobs)) {
      try {
        out.push_back(write_prograph(format, p));
      } catch (const Error& e) {
        if (e.code() != ErrorCode::NotSinglePeak) throw;
      }
    }
  } else {
    for (const Prograph& p : enumerate_prographs(n, jobs)) out.push_back(write_prograph(format, p));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

void print_refined(const std::vector<RefinedRow>& rows) {
  std::printf("valleys\tpermutations\tprographs\n");
  for (const RefinedRow& r : rows) {
    std::printf("%s\t%llu\t%llu\n", join(r.valleys).c_str(),
                static_cast<unsigned long long>(r.permutations),
                static_cast<unsigned long long>(r.prographs));
  }
}

template <class F>
int each_line(F&& f) {
  std::string line;
  while (std::getline(std::cin, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::cout << f(line) << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Prographs, weighted Dyck paths, 3-row tableaux and A2n(1234) permutations"};
  app.require_subcommand(1);
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  app.add_option("-j,--jobs", jobs, "Worker threads for enumeration")->check(CLI::PositiveNumber);

  int size = 0;
  Family object = Family::Prographs;
  Family from = Family::Prographs;
  Family to = Family::Prographs;
  std::string format;
  std::string suite;
  std::string lhs, rhs;
  bool refined = false;
  const auto family_check = CLI::CheckedTransformer(kFamilies);

  auto* count_cmd = app.add_subcommand("count", "Count the objects of a family of size N");
  count_cmd->add_option("-n,--size", size, "Size")->required();
  count_cmd->add_option("--object", object, "Family")->transform(family_check);
  count_cmd->add_flag("--refined", refined, "Valley-refined counts instead of a total");

  auto* enum_cmd = app.add_subcommand("enumerate", "List a family of size N, sorted");
  enum_cmd->add_option("-n,--size", size, "Size")->required();
  enum_cmd->add_option("--object", object, "Family")->transform(family_check);
  enum_cmd->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"path", "expr", "tableau", "perm"}));

  auto* conv_cmd = app.add_subcommand("convert", "Convert stdin lines between families");
  conv_cmd->add_option("--from", from, "Source family")->required()->transform(family_check);
  conv_cmd->add_option("--to", to, "Target family")->required()->transform(family_check);

  auto* inv_cmd = app.add_subcommand("involution", "Apply the Schutzenberger involution to stdin lines");
  inv_cmd->add_option("--object", object, "Family")->required()->transform(family_check);

  auto* prod_cmd = app.add_subcommand("product", "Print the product A.B");
  prod_cmd->add_option("--object", object, "Family")->required()->transform(family_check);
  prod_cmd->add_option("A", lhs, "Left factor")->required();
  prod_cmd->add_option("B", rhs, "Right factor")->required();

  auto* conj_cmd = app.add_subcommand("conjecture", "Compare valley-refined counts of both sides");
  conj_cmd->add_option("-n,--size", size, "Size")->required();

  int max = kDefaultMaxSize;
  auto* verify_cmd = app.add_subcommand("verify", "Run an invariant suite");
  verify_cmd->add_option("--suite", suite, "Suite name")->required();
  verify_cmd->add_option("--max-size", max, "Largest size checked");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (count_cmd->parsed()) {
      check_size(size, "count");
      if (refined) {
        print_refined(refined_counts(size, jobs));
      } else {
        std::printf("%llu\n", static_cast<unsigned long long>(count(object, size, jobs)));
      }
      return 0;
    }
    if (enum_cmd->parsed()) {
      check_size(size, "enumerate");
      const Family target = format.empty() ? object : kFormats.at(format);
      for (const std::string& line : enumerate(object, target, size, jobs)) {
        std::cout << line << '\n';
      }
      return 0;
    }
    if (conv_cmd->parsed()) {
      return each_line([&](const std::string& l) { return convert(from, to, l); });
    }
    if (inv_cmd->parsed()) {
      return each_line([&](const std::string& l) { return involution(object, l); });
    }
    if (prod_cmd->parsed()) {
      std::cout << product(object, lhs, rhs) << '\n';
      return 0;
    }
    if (conj_cmd->parsed()) {
      const auto rows = refined_counts(size, jobs);
      print_refined(rows);
      std::size_t bad = 0;
      for (const RefinedRow& r : rows) bad += r.permutations != r.prographs;
      std::printf("%s %zu of %zu rows agree\n", bad ? "FAIL" : "PASS", rows.size() - bad,
                  rows.size());
      return bad ? 1 : 0;
    }
    if (verify_cmd->parsed()) {
      const SuiteReport report = run_suite(suite, max, jobs);
      std::cout << format_report(report);
      return report.passed() ? 0 : 1;
    }
  } catch (const Error& e) {
    std::cerr << "pcp: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
