#pragma once
// Decidable obstructions and necessary conditions: cheap certificates that a
// distance magic labeling cannot exist, independent of any search.

#include <cstdint>
#include <optional>
#include <string>

#include "gdm/abelian.hpp"

namespace gdm {

enum class ObstructionKind { OddRegular, InvolutionSum, AcgCondition, C8Necessary };

std::string to_string(ObstructionKind kind);

// An obstruction carries a human-readable witness (the involution, the
// violated inequality with both sides) that can be re-checked by hand.
struct Obstruction {
    ObstructionKind kind;
    std::string detail;
};

// Magic constant r(n+1)/2 of an r-regular graph on n vertices, as a reduced
// fraction. No labeling exists when r is odd (classical or Z_n labels).
struct RegularMagic {
    std::int64_t num;
    std::int64_t den;
    bool feasible;
};

RegularMagic regular_magic_constant(std::int64_t r, std::int64_t n);

// Obstruction for K_{m,n} x C4 with m odd, n even: every labeling satisfies
// 4*mu = sum of all group elements, so none exists when that sum is outside
// the image of x -> 4x. Requires |group| = 4(m+n); throws
// std::invalid_argument on parity or order violations.
std::optional<Obstruction> involution_obstruction_bipartite_c4(std::int64_t m, std::int64_t n,
                                                               const GroupSpec& group);

// Whether K_{m,n} (1 <= m <= n) is distance magic with integer labels:
// m + n even and (8m+8n+1)^2 >= 2(8n+1)^2 - 1, evaluated in exact integer
// arithmetic.
bool acg_c4_distance_magic(std::int64_t m, std::int64_t n);

// Necessary condition for K_{m,n} x C8 (1 <= m <= n) to be distance magic:
// m + n even and (16m+16n+1)^2 >= 2(16n+1)^2 - 1, exact. False rules the
// graph out; true certifies nothing.
bool c8_necessary(std::int64_t m, std::int64_t n);

enum class Characterization { Exists, NotExists };

// Complete dichotomy for K_{m,n} x C4 with m odd, n even: a group-distance
// magic labeling exists iff the group has a Z2 x Z2 direct summand. Same
// argument validation as the involution obstruction.
Characterization bipartite_c4_characterization(std::int64_t m, std::int64_t n,
                                               const GroupSpec& group);

}  // namespace gdm
