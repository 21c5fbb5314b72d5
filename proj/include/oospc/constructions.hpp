// constructions.hpp
// Ingredient designs (cyclic Steiner triple systems, cyclic difference
// matrices), the filling / inflation / doubling constructions, the explicit
// codes and parametric families, and the optimal-code dispatcher for
// m = n = 2 (mod 4).
#pragma once

#include <array>
#include <chrono>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "oospc/code.hpp"
#include "oospc/errors.hpp"

namespace oospc {

/// Base blocks {0, a, a+b} of a cyclic STS(v). `leave` is empty for
/// v = 1 (mod 6) and {v/3, 2v/3} for v = 3 (mod 6).
struct CstsBlocks {
    int v = 0;
    std::vector<std::array<int, 3>> blocks;
    std::vector<int> leave;
};

/// Solves the difference-triple problem on {1..(v-1)/2} by backtracking.
/// Throws NoSuchDesign for v = 9 or v not 1, 3 (mod 6). Results are
/// memoized per v and re-verified before they are returned.
CstsBlocks cyclic_sts(int v);

/// Block supports pairwise disjoint and covering Z_v \ ({0} + leave).
bool verify_csts(const CstsBlocks& sts);

/// Blocks of a CSTS(mn) mapped into Z_m x Z_n through the CRT; needs
/// gcd(m,n) = 1. The result has lambda_a = lambda_c = 1.
Code csts_code(const CstsBlocks& sts, int m, int n);

/// 3 x v matrix over Z_v whose row differences cover Z_v once per row pair.
struct DiffMatrix {
    int v = 0;
    std::array<std::vector<int>, 3> rows;
};

/// The (0, i, 2i) difference matrix; NoSuchDesign for even v.
DiffMatrix cdm(int v);
bool verify_cdm(const DiffMatrix& d);

/// Adds `inner` (a code on Z_s x Z_t) to an (s,t)-regular `outer`, placing
/// it on the subgroup S x T. The result carries the larger lambda_a.
Code fill(const Code& outer, const Code& inner);

enum class Axis { rows, cols };

/// Product of an (s,t)-regular lambda = 1 code on (m,n) with cdm(v): gives an
/// (sv,t)-regular code on (mv,n) for Axis::rows, (s,tv) on (m,nv) for cols.
Code inflate(const Code& base, int v, Axis axis);

/// Five codewords per base codeword, chosen by parity class inside the Klein
/// cosets. Base: a lambda = 1 code on (m/2, n/2); result on (m, n), lambda_a = 2.
Code double_code(const Code& base);

/// Explicit codes from the catalog. Keys: (6,6,2), (6,6,3), (2,2,2), (1,3,3),
/// (2,6,2,"(1,3)-regular"), (2,18,2,"(1,3)-regular"), (9,3,1,"(3,3)-regular").
/// An empty variant matches when the (m,n,lambda_a) key is unambiguous.
Code base_code(int m, int n, int lambda_a, const std::string& variant = "");

/// (2,n)-regular (m,n,3,2,1) code with 5n(m-2)/24 codewords, m = 2 (mod 12),
/// n = 2 (mod 4).
Code family_m2mod12(int m, int n);

/// (2,n,3,2,1) code with (5n-2)/12 codewords for n = 10 (mod 12), built on
/// Z_2 x Z_2 x Z_{n/2} and mapped to Z_2 x Z_n.
Code family_2xn(int n);

/// Cache for ingredients obtained by search. Lookups hit memory first, then
/// `<dir>/regular_m<m>_n<n>_s<s>_t<t>_la<l>.json` when a directory is set.
/// A missing or unreadable file is a miss, never an error.
class IngredientCache {
public:
    IngredientCache() = default;
    explicit IngredientCache(std::optional<std::filesystem::path> dir) : dir_(std::move(dir)) {}

    /// Directory from $OOSPC_CACHE_DIR, if set.
    static IngredientCache from_environment();

    std::optional<Code> find(int m, int n, int s, int t, int lambda_a) const;
    void store(int s, int t, const Code& code) const;

    const std::optional<std::filesystem::path>& directory() const { return dir_; }

private:
    std::optional<std::filesystem::path> dir_;
};

struct IngredientOptions {
    std::chrono::milliseconds search_timeout{std::chrono::minutes(5)};
    const IngredientCache* cache = nullptr;
};

/// (1,1)-regular (m,n,3,1) code, mn = 1 (mod 6).
Code regular_11(int m, int n, const IngredientOptions& opts = {});

/// (1,3)-regular (m,n,3,1) code, m = 1,5 (mod 6), n = 3 (mod 6), (m,n) != (1,9).
Code regular_13(int m, int n);

/// (3,3)-regular (m,n,3,1) code, m,n = 3 (mod 6).
Code regular_33(int m, int n, const IngredientOptions& opts = {});

/// (1,3)-regular (m,n,3,2,1) code with (5mn-12)/24 codewords, m = 2,10 (mod 12),
/// n = 6 (mod 12).
Code regular_13_la2(int m, int n);

/// How construct_optimal produced its code.
struct ConstructionReport {
    std::string path;
    std::optional<std::pair<int, int>> regularity;
};

/// Verified code of size theta_exact_2mod4(m,n,lambda_a) for m = n = 2 (mod 4).
Code construct_optimal(int m, int n, int lambda_a, const IngredientOptions& opts = {},
                       ConstructionReport* report = nullptr);

}  // namespace oospc
