#pragma once
// Exhaustive backtracking oracle: decides whether a small graph admits a
// group-distance magic labeling, independently of the constructions.

#include <cstdint>
#include <optional>
#include <vector>

#include "gdm/abelian.hpp"
#include "gdm/graphs.hpp"
#include "gdm/labeling.hpp"

namespace gdm {

struct SearchOptions {
    std::uint64_t max_nodes = 0;   // assignment-tree node budget; 0 = unlimited
    double timeout_seconds = 0;    // wall-clock budget; 0 = unlimited
    bool symmetry_breaking = true; // halve the tree via the negation automorphism
    bool find_all = false;         // enumerate every labeling instead of stopping at one
    int jobs = 1;                  // worker threads; the root branch set is partitioned
    int vertex_cap = 16;           // refuse graphs larger than this
};

enum class SearchStatus { Found, ExhaustedNone, Timeout };

// Found implies the labeling verifies; ExhaustedNone implies the whole
// assignment tree was covered; a blown budget is always Timeout, never
// ExhaustedNone. magic_constants lists the distinct weights over all found
// labelings, closed under negation when symmetry breaking halved the
// enumeration (the negated labeling is magic with the negated constant).
struct SearchOutcome {
    SearchStatus status = SearchStatus::ExhaustedNone;
    std::uint64_t nodes_explored = 0;
    double elapsed_seconds = 0;
    std::optional<Labeling> labeling;
    std::vector<Labeling> solutions;       // filled in find_all mode
    std::vector<Element> magic_constants;  // sorted, deduplicated
};

// Searches `h` as-is; |group| must equal the vertex count.
SearchOutcome exists_labeling(const Graph& h, const GroupSpec& group,
                              const SearchOptions& opts = {});

// Searches base x C_cycle; found labelings carry the product structure.
SearchOutcome search_product(const Graph& base, int cycle, const GroupSpec& group,
                             const SearchOptions& opts = {});

// Distinct magic constants over the complete enumeration of `h`; complete
// only when the search did not time out.
std::vector<Element> all_magic_constants(const Graph& h, const GroupSpec& group,
                                         const SearchOptions& opts = {});

}  // namespace gdm
