#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "gdm/abelian.hpp"
#include "gdm/graphs.hpp"
#include "gdm/labeling.hpp"

namespace gdm {

// Thrown when a construction's own verification of its output fails. This
// always means a defect in this library, never a property of the input.
class ConstructionDefect : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

struct ConstructReport {
    enum class Outcome { Constructed, NotCovered, PreconditionFailed };

    Outcome outcome = Outcome::PreconditionFailed;
    // Scheme identifier: "lemma21", "lemma22", "obs24", "lemma28",
    // "lemma31", "thm32c2" or "thm32c3". Empty for dispatcher-level failures.
    std::string construction;
    // Corrections applied to the published scheme, subset of {"E1","E2","E3"}.
    std::vector<std::string> errata;
    // Present iff outcome == Constructed; always verified before return.
    std::optional<Labeling> labeling;
    std::optional<Element> magic;  // in the labeling's group coordinates
    // Labeling coordinate k addresses canonical factor coord_to_canonical[k]
    // of the requested group.
    std::vector<int> coord_to_canonical;
    std::string requested_group;
    std::string reason;  // failure explanation
    std::string notes;   // deterministic choices made along the way

    bool constructed() const { return outcome == Outcome::Constructed; }
    nlohmann::json to_json() const;
};

// G x C4 over Z_{2^alpha} x A, alpha >= 2, |A| = n/2^(alpha-2), all degrees
// congruent mod 2^alpha. Magic constant (0_A, -c mod 2^alpha).
ConstructReport c4_cyclic2(const Graph& g, const GroupSpec& group, int alpha);

// G x C4 over Z2 x Z2 x A, |A| = n, all degrees of equal parity c.
// Magic constant (0_A, c, c).
ConstructReport c4_z2z2(const Graph& g, const GroupSpec& group);

// G x C4 for any group of order 4n when all degrees are congruent
// mod 2^(v2(n)+2): picks c4_z2z2 or the largest cyclic 2-factor.
ConstructReport c4_dispatch(const Graph& g, const GroupSpec& group);

// K_{p,q,t} x C4 for odd p, q, t and any group of order 4(p+q+t).
// Magic constant (0_A, 2) in the Z4 case; delegates to c4_z2z2 otherwise.
ConstructReport c4_tripartite(std::int64_t p, std::int64_t q, std::int64_t t,
                              const GroupSpec& group);

// K_{m,n} x C4 for m odd, n even over Z2 x Z2 x A, |A| = m + n.
// Magic constant (0_A, 0, 1).
ConstructReport c4_bipartite_z2z2(std::int64_t m, std::int64_t n, const GroupSpec& group);

// G x C8 over Z2 x Z2 x A, |A| = 2n, all degrees even. Magic constant 0.
ConstructReport c8_z2z2(const Graph& g, const GroupSpec& group);

// G x C8 over Z4 x A, |A| = 2n, degrees congruent to an even constant
// mod 4. Magic constant (0_A, deg mod 4).
ConstructReport c8_z4(const Graph& g, const GroupSpec& group);

// G x C8 over Z_{2^alpha} x A, alpha >= 3, |A| = n/2^(alpha-3), degrees
// congruent to an even constant mod 2^alpha. Magic constant
// (0_A, -deg mod 2^alpha).
ConstructReport c8_cyclic2(const Graph& g, const GroupSpec& group, int alpha);

// G x C8 for groups of order 8n, all degrees even: tries c8_z2z2, then
// c8_cyclic2 on the largest admissible 2-factor of order >= 8, then c8_z4;
// NotCovered when none applies.
ConstructReport c8_dispatch(const Graph& g, const GroupSpec& group);

// Shape-aware entry point: all-odd tripartite generator specs go through
// c4_tripartite, odd-by-even bipartite specs try c4_bipartite_z2z2 before
// the dispatcher, everything else uses the dispatcher for the cycle length.
ConstructReport construct_for_spec(const std::string& gen_spec, int cycle, const GroupSpec& group);

}  // namespace gdm
