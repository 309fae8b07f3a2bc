#pragma once

#include <array>
#include <string_view>
#include <vector>

#include "pcp/prograph.hpp"

namespace pcp::fixtures {

// Four-coproduct prograph of the operator-labelling example, node ids in
// operator-label order: c1 c2 p1 c3 p2 c4 p3 p4.
inline Prograph labelled_prograph() {
  using K = OperatorKind;
  const std::vector<K> kinds{K::Coproduct, K::Coproduct, K::Product, K::Coproduct,
                             K::Product,   K::Coproduct, K::Product, K::Product};
  const std::vector<Wire> wires{
      {{kBoundary, 0}, {0, 0}},
      {{0, 0}, {1, 0}}, {{0, 1}, {2, 1}},
      {{1, 0}, {4, 0}}, {{1, 1}, {2, 0}},
      {{2, 0}, {3, 0}},
      {{3, 0}, {4, 1}}, {{3, 1}, {5, 0}},
      {{4, 0}, {6, 0}},
      {{5, 0}, {6, 1}}, {{5, 1}, {7, 1}},
      {{6, 0}, {7, 0}},
      {{7, 0}, {kBoundary, 0}},
  };
  return Prograph::from_graph(kinds, wires);
}

// Its rotation as drawn next to it, same id convention.
inline Prograph labelled_rotation() {
  using K = OperatorKind;
  const std::vector<K> kinds{K::Coproduct, K::Coproduct, K::Product, K::Coproduct,
                             K::Product,   K::Coproduct, K::Product, K::Product};
  const std::vector<Wire> wires{
      {{kBoundary, 0}, {0, 0}},
      {{0, 0}, {2, 0}}, {{0, 1}, {1, 0}},
      {{1, 0}, {2, 1}}, {{1, 1}, {3, 0}},
      {{2, 0}, {4, 0}},
      {{3, 0}, {4, 1}}, {{3, 1}, {6, 1}},
      {{4, 0}, {5, 0}},
      {{5, 0}, {7, 0}}, {{5, 1}, {6, 0}},
      {{6, 0}, {7, 1}},
      {{7, 0}, {kBoundary, 0}},
  };
  return Prograph::from_graph(kinds, wires);
}

inline constexpr std::array<std::string_view, 42> kA6{
    "563412", "562413", "562314", "561423", "561324", "463512", "462513",
    "462315", "461523", "461325", "453612", "452613", "452316", "451623",
    "451326", "364512", "362514", "362415", "361524", "361425", "354612",
    "352614", "352416", "351624", "351426", "342615", "341625", "264513",
    "263514", "261534", "261435", "254613", "253614", "251634", "251436",
    "243615", "241635", "164523", "163524", "154623", "153624", "143625"};

// Size-3 single-peak table, row by row (valley order 321, 213, 312, 231, 132).
inline constexpr std::array<std::string_view, 21> kSinglePeak3{
    "362514", "342615", "352614", "362415", "352416",
    "261534", "241635", "251634", "261435", "251436",
    "361524", "341625", "351624", "361425", "351426",
    "263514", "243615", "253614",
    "163524", "143625", "153624"};

// The weighted path of each prograph drawn in the same table cell.
inline constexpr std::array<std::string_view, 21> kSinglePeak3Paths{
    "U0 U0 U0 D0 D0 D0", "U0 U0 U0 D1 D0 D0", "U0 U0 U0 D1 D1 D0", "U0 U0 U0 D2 D0 D0",
    "U0 U0 U0 D2 D1 D0", "U0 U0 U1 D0 D0 D0", "U0 U0 U1 D1 D0 D0", "U0 U0 U1 D1 D1 D0",
    "U0 U0 U1 D2 D0 D0", "U0 U0 U1 D2 D1 D0", "U0 U1 U1 D0 D0 D0", "U0 U1 U1 D1 D0 D0",
    "U0 U1 U1 D1 D1 D0", "U0 U1 U1 D2 D0 D0", "U0 U1 U1 D2 D1 D0", "U0 U0 U2 D0 D0 D0",
    "U0 U0 U2 D1 D0 D0", "U0 U0 U2 D1 D1 D0", "U0 U1 U2 D0 D0 D0", "U0 U1 U2 D1 D0 D0",
    "U0 U1 U2 D1 D1 D0"};

struct TreeTriple {
  std::string_view perm;
  std::string_view pf;
  std::string_view tree;
};

// The 123-avoiding permutations of size 4 with their parking functions and
// binary trees, transcribed from the drawings.
inline constexpr std::array<TreeTriple, 14> kTrees4{{
    {"4321", "0,0,0,0", "((((.)(.))(.))(.))(.)"},
    {"3214", "0,0,0,1", "(((.)((.)(.)))(.))(.)"},
    {"4213", "0,0,1,1", "((.)(((.)(.))(.)))(.)"},
    {"4312", "0,1,1,1", "(.)((((.)(.))(.))(.))"},
    {"3241", "0,0,0,2", "(((.)(.))((.)(.)))(.)"},
    {"2143", "0,0,1,2", "((.)((.)((.)(.))))(.)"},
    {"3142", "0,1,1,2", "(.)(((.)((.)(.)))(.))"},
    {"4231", "0,0,2,2", "((.)(.))(((.)(.))(.))"},
    {"4132", "0,1,2,2", "(.)((.)(((.)(.))(.)))"},
    {"3421", "0,0,0,3", "(((.)(.))(.))((.)(.))"},
    {"2413", "0,0,1,3", "((.)((.)(.)))((.)(.))"},
    {"3412", "0,1,1,3", "(.)(((.)(.))((.)(.)))"},
    {"2431", "0,0,2,3", "((.)(.))((.)((.)(.)))"},
    {"1432", "0,1,2,3", "(.)((.)((.)((.)(.))))"},
}};

// Expressions of the five size-2 prographs and of the labelled pair.
inline constexpr std::array<std::string_view, 5> kSize2Expressions{
    "m o d o m o d",
    "m o (m x i) o (i x d) o d",
    "m o (m x i) o (d x i) o d",
    "m o (i x m) o (i x d) o d",
    "m o (i x m) o (d x i) o d"};
inline constexpr std::string_view kLabelledExpression =
    "m o (m x i) o (m x d) o (i x d) o (i x m) o (d x i) o d";
inline constexpr std::string_view kLabelledRotationExpression =
    "m o (i x m) o (d x i) o (m x i) o (m x d) o (i x d) o d";

}  // namespace pcp::fixtures
