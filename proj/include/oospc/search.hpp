// search.hpp
// Exact maximum-size code search: branch and bound over pairwise-disjoint
// difference supports, with an optional prescribed regular leave.
#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "oospc/code.hpp"
#include "oospc/errors.hpp"

namespace oospc {

/// Nonzero elements are indexed row-major with (0,0) skipped: bit i stands
/// for g.element(i + 1).
struct Candidate {
    Codeword codeword;             // canonical representative
    std::vector<uint64_t> support; // bit vector over nonzero elements
    std::vector<int> elements;     // indices of the set bits, ascending
    int lambda_x = 0;
};

/// One candidate per distinct support among codewords through (0,0) with
/// lambda(X) <= lambda_a and support disjoint from `forbidden`. Ordered by
/// canonical codeword; the representative is the least codeword with that
/// support.
std::vector<Candidate> enumerate_candidates(int m, int n, int lambda_a,
                                            const std::vector<GroupElement>& forbidden = {});

struct SearchOptions {
    std::optional<std::chrono::milliseconds> timeout;
    /// Prune against this size from the start; re-run without it when no code
    /// of that size exists.
    std::optional<int> lower_bound_hint;
    /// (s,t): forbid subgroup(s,t) and require every other element covered.
    std::optional<std::pair<int, int>> prescribed_leave;
    /// Stop as soon as a code meets the closed-form upper bound. Disable to
    /// prove optimality without relying on the bound.
    bool cap_by_bound = true;
    /// Split the root branches across OpenMP threads.
    bool parallel = true;
};

struct SearchResult {
    int best_size = 0;
    Code witness;
    bool proven_optimal = false;
    uint64_t nodes_explored = 0;
    std::chrono::duration<double> elapsed{0};
};

/// Largest (m,n,3,lambda_a,1) code. The witness is the first maximum packing
/// met in depth-first order, so serial and parallel runs return the same
/// code. proven_optimal is false only when the timeout fired.
///
/// With a prescribed leave: throws NoSuchDesign when the search space is
/// exhausted without a perfect packing and SearchTimeout when time runs out
/// first.
SearchResult max_code(int m, int n, int lambda_a, const SearchOptions& options = {});

/// Perfect packing of Z_m x Z_n minus subgroup(s,t); the witness is
/// (s,t)-regular. Errors as for max_code with a prescribed leave.
SearchResult search_regular(int m, int n, int lambda_a, int s, int t,
                            std::optional<std::chrono::milliseconds> timeout = std::nullopt,
                            bool parallel = true);

}  // namespace oospc
