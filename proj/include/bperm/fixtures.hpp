#pragma once

// Classical signed pattern lists, kept verbatim in the
// shared text grammar. Tests compare each against global_basis() rather than
// trusting either side. Bump kFixtureVersion when any list changes.

#include <string_view>

namespace bperm::fixtures {

inline constexpr int kFixtureVersion = 1;

// Type-B vexillary elements (nine patterns).
inline constexpr std::string_view kVexillaryClassical =
    "2,1;-3,2,-1;2,-3,4,-1;-2,-3,4,-1;3,-4,-1,-2;-3,-4,1,-2;-3,-4,-1,-2;-4,1,-2,3;-4,-1,-2,3";

// Boolean signed permutations (ten patterns).
inline constexpr std::string_view kBooleanClassical = "1,-2;-1,-2;-2,-1;3,2,1;3,2,-1;3,-2,1;-3,2,1;3,4,1,2;3,4,-1,2;-3,4,1,2";

// Free signed permutations: all generators in the support commute (eight patterns).
inline constexpr std::string_view kFreeClassical = "2,3,1;3,1,2;3,2,1;-2,1;-1,-2;-2,-1;2,-1;1,-2";

// Smooth Schubert varieties of type B (seventeen patterns).
inline constexpr std::string_view kSmoothBClassical =
    "-2,-1;1,2,-3;1,-2,-3;-1,2,-3;2,-1,-3;-2,1,-3;3,-2,1;-2,-4,3,1;2,-4,3,1;3,4,1,2;3,4,-1,2;-3,4,1,2;"
    "4,1,3,-2;4,-1,3,-2;4,2,3,1;4,2,3,-1;-4,2,3,1";

// Smooth Schubert varieties of type C (seventeen patterns).
inline constexpr std::string_view kSmoothCClassical =
    "1,-2;-2,-1,-3;3,-2,1;3,-2,-1;-3,2,-1;-3,-2,1;-3,-2,-1;-2,-4,3,1;3,4,1,2;3,4,-1,2;-3,4,1,2;-3,4,-1,2;"
    "-3,-4,-1,-2;4,-1,3,-2;4,2,3,1;4,2,3,-1;-4,2,3,1";

// Union of the two lists above with every pattern containing another removed.
inline constexpr std::string_view kSmoothBCClassical =
    "-2,-1;1,-2;3,-2,1;-2,-4,3,1;3,4,1,2;3,4,-1,2;-3,4,1,2;4,-1,3,-2;4,2,3,1;4,2,3,-1;-4,2,3,1";

// Conjectured global patterns for Grassmannian signed permutations.
inline constexpr std::string_view kGrassmannianGlobal =
    "4321;32154;42153;43152;52143;53142;214365;315264;314265;415263";

// Global pattern sets of the persistent families.
inline constexpr std::string_view kVexillaryGlobal = "2143";
inline constexpr std::string_view kBooleanGlobal = "321;3412";
inline constexpr std::string_view kFreeGlobal = "231;312;321";
inline constexpr std::string_view kSmoothBCGlobal = "3412;4231";

// Characterizes 2-boolean permutations in S_n.
inline constexpr std::string_view kTwoBooleanGlobal = "3421;4312;4321;4,5,6,1,2,3";

}  // namespace bperm::fixtures
