#pragma once

// Values worked out by hand or by the oracles in oracles.hpp before the
// library code existed. The oracle_fixtures tests recompute each one.

#include <cstdint>
#include <string_view>

namespace fixture {

inline constexpr std::string_view kTriangleGraph6 = "Bw";   // bits 1,1,1 -> 111000 -> 56 + 63
inline constexpr std::string_view kEdgelessPairGraph6 = "A?";

inline constexpr std::uint64_t kClasses[] = {0, 1, 2, 4, 11, 34, 156, 1044, 12346};

inline constexpr std::uint64_t kEdgeBound11_2 = 40;         // max{h(11,2), h(11,5)} = max{40, 40}
inline constexpr std::uint64_t kTrianglesInH10_2 = 58;      // subset scan
inline constexpr std::uint64_t kLabeledTrianglesInH10_2 = 348;
inline constexpr std::uint64_t kPathsOfLength2InC5 = 5;     // 10 injections / |Aut(P3)| = 2
inline constexpr std::uint64_t kMinDegree2On4 = 3;          // C4, diamond, K4
inline constexpr int kMinDegreeHprime9_2 = 2;
inline constexpr std::uint64_t kMaxEdgesNonham7_2 = 15;     // e(7,2) = max{14, 15}
inline constexpr std::uint64_t kStarH10_2_t3 = 400;        // 2*(9)_2 + 6*(7)_2 + 2*(2)_2

}  // namespace fixture
