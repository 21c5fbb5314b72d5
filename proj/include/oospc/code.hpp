// code.hpp
// Weight-3 codewords over Z_m x Z_n, difference profiles, the support-size
// type taxonomy, correlation verifiers, leave and regularity.
#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "oospc/group.hpp"

namespace oospc {

/// Three group elements. Codes may hold codewords in any form; `canonicalize`
/// gives the translate through (0,0) that is lexicographically least.
struct Codeword {
    std::array<GroupElement, 3> elements{};

    auto operator<=>(const Codeword&) const = default;
};

std::string to_string(const Codeword& c);

/// Throws std::invalid_argument unless the elements are reduced and distinct.
void check_codeword(const GridGroup& g, const Codeword& c);

Codeword canonicalize(const GridGroup& g, const Codeword& c);

Codeword translate(const GridGroup& g, const Codeword& c, const GroupElement& shift);

/// Major type is the support size; minor refines it when the residue
/// conditions are meaningful for (m,n). Minor strings: "3.1" "3.2" "3.3"
/// "4.1" "4.2" "4.1.1" "4.1.2" "4.2.1" "4.2.2" "4.2.3", or empty.
struct TypeLabel {
    int major = 0;
    std::string minor;

    std::string str() const { return minor.empty() ? std::to_string(major) : minor; }
    bool operator==(const TypeLabel&) const = default;
};

struct DifferenceProfile {
    std::array<GroupElement, 6> delta{};  // ordered pairwise differences
    std::vector<GroupElement> support;    // sorted, deduplicated
    int lambda_x = 0;                     // largest multiplicity in delta
    TypeLabel type;
};

DifferenceProfile difference_profile(const GridGroup& g, const Codeword& c);

TypeLabel classify(const GridGroup& g, const Codeword& c);

struct Code {
    GridGroup group{1, 1};
    int lambda_a = 1;
    int lambda_c = 1;
    std::vector<Codeword> codewords;

    size_t size() const { return codewords.size(); }
};

/// Swaps the roles of m and n, and of the coordinates of every element.
Code transpose(const Code& code);
GroupElement transpose(const GroupElement& e);

struct TypeCensus {
    int n2 = 0;
    int n3_1 = 0, n3_2 = 0, n3_3 = 0;
    int n4 = 0;                 // Type 4 without a meaningful refinement
    int n4_1 = 0, n4_2 = 0;     // refined only to 4.1 / 4.2
    int n4_1_1 = 0, n4_1_2 = 0;
    int n4_2_1 = 0, n4_2_2 = 0, n4_2_3 = 0;
    int n5 = 0;
    int n6 = 0;

    int total() const;
    int type3() const { return n3_1 + n3_2 + n3_3; }
    int type4() const { return n4 + n4_1 + n4_2 + n4_1_1 + n4_1_2 + n4_2_1 + n4_2_2 + n4_2_3; }

    /// "N2=.. N3_1=.. ..." in a fixed order.
    std::string str() const;
    bool operator==(const TypeCensus&) const = default;
};

TypeCensus census(const Code& code);

enum class ViolationKind { degenerate, auto_correlation, cross_correlation };

/// Witness of a failed check. For correlation failures `first`/`second` are
/// codeword indices (second == first for auto-correlation), `shift` is the
/// translation achieving `count` coincidences. Difference-method reports put
/// the offending difference in `shift`.
struct Violation {
    ViolationKind kind = ViolationKind::degenerate;
    size_t first = 0;
    size_t second = 0;
    GroupElement shift{};
    int count = 0;

    std::string describe(const Code& code) const;
};

struct Verdict {
    std::optional<Violation> violation;

    bool valid() const { return !violation.has_value(); }
    explicit operator bool() const { return valid(); }
};

/// Correlation check straight from the shift definition, for any lambda_a,
/// lambda_c. Pair checks are split across OpenMP threads; the reported
/// violation is the first one in (codeword, partner, shift) order.
Verdict verify_shift(const Code& code);

/// Serial evaluation of the same definition, translating every codeword by
/// every shift. Reference for `verify_shift`.
Verdict verify_shift_reference(const Code& code);

/// Difference-method check: lambda(X) <= lambda_a and pairwise disjoint
/// supports. Throws std::invalid_argument when lambda_c != 1.
Verdict verify_diff(const Code& code);

/// Nonzero elements not covered by any support. Throws if the code fails
/// verify_diff.
std::vector<GroupElement> leave(const Code& code);

/// (s,t) when leave + {(0,0)} is the subgroup S x T.
std::optional<std::pair<int, int>> regularity(const Code& code);
std::optional<std::pair<int, int>> regularity_of_leave(const GridGroup& g,
                                                       const std::vector<GroupElement>& leave);

}  // namespace oospc
