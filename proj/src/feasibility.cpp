#include "gdm/feasibility.hpp"

#include <numeric>
#include <stdexcept>

namespace gdm {

namespace {

__int128 sq(__int128 x) { return x * x; }

void check_bipartite_args(std::int64_t m, std::int64_t n, const GroupSpec& group) {
    if (m < 1 || m % 2 == 0) throw std::invalid_argument("m must be odd and positive");
    if (n < 2 || n % 2 != 0) throw std::invalid_argument("n must be even and positive");
    if (group.order() != 4 * (m + n))
        throw std::invalid_argument("group order " + std::to_string(group.order()) +
                                    " != 4(m+n) = " + std::to_string(4 * (m + n)));
}

}  // namespace

std::string to_string(ObstructionKind kind) {
    switch (kind) {
        case ObstructionKind::OddRegular: return "OddRegular";
        case ObstructionKind::InvolutionSum: return "InvolutionSum";
        case ObstructionKind::AcgCondition: return "AcgCondition";
        case ObstructionKind::C8Necessary: return "C8Necessary";
    }
    return "";
}

RegularMagic regular_magic_constant(std::int64_t r, std::int64_t n) {
    if (r < 0 || n < 1) throw std::invalid_argument("require r >= 0 and n >= 1");
    std::int64_t num = r * (n + 1);
    std::int64_t g = std::gcd(num, std::int64_t{2});
    return {num / g, 2 / g, r % 2 == 0};
}

std::optional<Obstruction> involution_obstruction_bipartite_c4(std::int64_t m, std::int64_t n,
                                                               const GroupSpec& group) {
    check_bipartite_args(m, n, group);
    // 4*mu = sum_all is solvable iff each residue is divisible by the gcd of
    // 4 and that factor's order.
    Element s = group.sum_all();
    const auto& factors = group.factors();
    for (std::size_t k = 0; k < factors.size(); ++k) {
        std::int64_t g = std::gcd(std::int64_t{4}, factors[k]);
        if (s.residues[k] % g != 0)
            return Obstruction{ObstructionKind::InvolutionSum,
                               "sum of all elements is " + to_string(s) + "; 4x = " +
                                   std::to_string(s.residues[k]) + " (mod " +
                                   std::to_string(factors[k]) + ") has no solution"};
    }
    return std::nullopt;
}

bool acg_c4_distance_magic(std::int64_t m, std::int64_t n) {
    if (m < 1 || m > n) throw std::invalid_argument("require 1 <= m <= n");
    if ((m + n) % 2 != 0) return false;
    return sq(8 * static_cast<__int128>(m + n) + 1) >= 2 * sq(8 * static_cast<__int128>(n) + 1) - 1;
}

bool c8_necessary(std::int64_t m, std::int64_t n) {
    if (m < 1 || m > n) throw std::invalid_argument("require 1 <= m <= n");
    if ((m + n) % 2 != 0) return false;
    return sq(16 * static_cast<__int128>(m + n) + 1) >=
           2 * sq(16 * static_cast<__int128>(n) + 1) - 1;
}

Characterization bipartite_c4_characterization(std::int64_t m, std::int64_t n,
                                               const GroupSpec& group) {
    check_bipartite_args(m, n, group);
    return has_z2_z2_summand(group) ? Characterization::Exists : Characterization::NotExists;
}

}  // namespace gdm
