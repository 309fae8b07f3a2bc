#include <gtest/gtest.h>

#include <set>

#include "fixtures.hpp"
#include "pcp/error.hpp"
#include "pcp/perm.hpp"
#include "pcp/tableau.hpp"

namespace pcp {
namespace {

std::string digits(const Permutation& p) {
  std::string out;
  for (int v : p.word()) out += std::to_string(v);
  return out;
}

// Checks every index subset of the pattern's size. Independent of both
// library routines; only for short words.
bool contains_by_subsets(std::span<const int> word, const Permutation& pattern) {
  const int n = static_cast<int>(word.size());
  const int k = pattern.size();
  if (k > n) return false;
  std::vector<int> idx(k);
  const std::function<bool(int, int)> pick = [&](int j, int from) {
    if (j == k) {
      for (int a = 0; a < k; ++a) {
        for (int b = 0; b < k; ++b) {
          if ((word[idx[a]] < word[idx[b]]) != (pattern[a] < pattern[b])) return false;
        }
      }
      return true;
    }
    for (int i = from; i < n; ++i) {
      idx[j] = i;
      if (pick(j + 1, i + 1)) return true;
    }
    return false;
  };
  return pick(0, 0);
}

TEST(PermText, RoundTrip) {
  EXPECT_EQ(to_string(Permutation::from_digits("563412")), "5,6,3,4,1,2");
  EXPECT_EQ(parse_permutation("5,6,3,4,1,2"), Permutation::from_digits("563412"));
  EXPECT_EQ(parse_permutation("").size(), 0);
  EXPECT_EQ(parse_permutation("10,1,2,3,4,5,6,7,8,9").size(), 10);
  EXPECT_THROW(parse_permutation("1,1"), Error);
  EXPECT_THROW(parse_permutation("1,,2"), Error);
  EXPECT_THROW(parse_permutation("1,2,"), Error);
  EXPECT_THROW(Permutation::from_digits("120"), Error);
}

TEST(Patterns, AgreeWithSubsetSearch) {
  const std::vector<Permutation> patterns{
      Permutation::from_digits("123"), Permutation::from_digits("132"),
      Permutation::from_digits("2143"), Permutation::from_digits("1234")};
  for (int n = 0; n <= 7; ++n) {
    for_each_permutation(n, [&](const Permutation& p) {
      for (const Permutation& pat : patterns) {
        const bool expected = contains_by_subsets(p.word(), pat);
        ASSERT_EQ(contains_pattern(p.word(), pat), expected) << digits(p) << " " << digits(pat);
        ASSERT_EQ(contains_pattern_bruteforce(p.word(), pat), expected);
      }
    });
  }
}

TEST(Lis, Examples) {
  EXPECT_EQ(longest_increasing_subsequence(Permutation::from_digits("563412").word()), 2);
  EXPECT_EQ(longest_increasing_subsequence(Permutation::from_digits("143625").word()), 3);
  EXPECT_EQ(longest_increasing_subsequence({}), 0);
}

TEST(UpDown, Examples) {
  EXPECT_TRUE(is_up_down(Permutation::from_digits("563412")));
  EXPECT_TRUE(is_up_down(Permutation::from_digits("12")));
  EXPECT_FALSE(is_up_down(Permutation::from_digits("2143")));
  EXPECT_FALSE(is_up_down(Permutation::from_digits("1234")));
  EXPECT_TRUE(in_A2n(Permutation()));
  EXPECT_FALSE(in_A2n(Permutation::from_digits("132")));
}

TEST(A2n, SizeSixIsTheDisplayedList) {
  std::set<Permutation> expected;
  for (std::string_view s : fixtures::kA6) expected.insert(Permutation::from_digits(s));
  ASSERT_EQ(expected.size(), 42u);
  const auto got = enumerate_A2n(3);
  EXPECT_EQ(std::set<Permutation>(got.begin(), got.end()), expected);
  EXPECT_EQ(got.size(), 42u);
}

TEST(A2n, GeneratorAgreesWithFilter) {
  for (int n = 0; n <= 4; ++n) EXPECT_EQ(enumerate_A2n(n), enumerate_A2n_filter(n)) << n;
}

TEST(A2n, CountsAreCatalan3) {
  for (int n = 0; n <= 6; ++n) EXPECT_EQ(count_A2n(n), kCatalan3Table[n]) << n;
}

TEST(PermSchutzenberger, Examples) {
  EXPECT_EQ(digits(schutzenberger(Permutation::from_digits("631278594"))), "615238974");
  EXPECT_EQ(digits(schutzenberger(Permutation::from_digits("12"))), "12");
}

TEST(PermSchutzenberger, StabilisesA6) {
  std::set<Permutation> list;
  for (std::string_view s : fixtures::kA6) list.insert(Permutation::from_digits(s));
  std::set<Permutation> image;
  for (const Permutation& p : list) {
    image.insert(schutzenberger(p));
    EXPECT_EQ(schutzenberger(schutzenberger(p)), p);
  }
  EXPECT_EQ(image, list);
}

TEST(PermProduct, Examples) {
  const Permutation p12 = Permutation::from_digits("12");
  EXPECT_EQ(digits(shifted_concat(p12, p12)), "3412");
  EXPECT_EQ(digits(shifted_concat_words(Permutation::from_digits("2143"),
                                        Permutation::from_digits("1324"))),
            "57682143");
  Permutation power;
  for (int k = 0; k < 4; ++k) power = shifted_concat(power, p12);
  EXPECT_EQ(digits(power), "78563412");
}

TEST(PermProduct, RejectsOutsideFamily) {
  try {
    shifted_concat(Permutation::from_digits("2143"), Permutation::from_digits("1324"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotInFamily);
  }
}

TEST(PermProduct, ClosedAndAssociative) {
  const auto a1 = enumerate_A2n(1);
  const auto a2 = enumerate_A2n(2);
  for (const auto& x : a2) {
    for (const auto& y : a1) {
      EXPECT_TRUE(in_A2n(shifted_concat(x, y)));
      for (const auto& z : a2) {
        EXPECT_EQ(shifted_concat(shifted_concat(x, y), z), shifted_concat(x, shifted_concat(y, z)));
      }
    }
  }
}

TEST(Conditions, ListedMembersPass) {
  EXPECT_TRUE(check_conditions(Permutation::from_digits("563412")).all());
  EXPECT_TRUE(check_conditions(Permutation::from_digits("143625")).all());
  EXPECT_FALSE(is_up_down(Permutation::from_digits("1234")) &&
               check_conditions(Permutation::from_digits("1234")).all());
  EXPECT_THROW(check_conditions(Permutation::from_digits("132")), Error);
}

TEST(Conditions, EachConditionCanFail) {
  // Peaks 4,5,6 increase.
  EXPECT_FALSE(check_conditions(Permutation::from_digits("142536")).peaks_avoid_123);
  // Valleys 1,2,3 increase.
  EXPECT_FALSE(check_conditions(Permutation::from_digits("152634")).vals_avoid_123);
  // Peak 3 lies left of valley 4.
  EXPECT_FALSE(check_conditions(Permutation::from_digits("1342")).low_peaks_right_of_valley);
  // Valley 3 has valley 2 on its left and peaks 5 < 6 to its right.
  EXPECT_FALSE(check_conditions(Permutation::from_digits("243516")).high_peaks_decreasing);
}

TEST(Conditions, EquivalenceExhaustive) {
  for (int n = 0; n <= 4; ++n) {
    int mismatches = 0;
    for_each_permutation(2 * n, [&](const Permutation& p) {
      if (in_A2n(p) != (is_up_down(p) && check_conditions(p).all())) ++mismatches;
    });
    EXPECT_EQ(mismatches, 0) << n;
  }
}

}  // namespace
}  // namespace pcp
