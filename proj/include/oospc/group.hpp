// group.hpp
// The ambient group Z_m x Z_n: element arithmetic, torsion subsets,
// subgroups, Klein cosets and the CRT index maps used by the families.
#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace oospc {

struct GroupElement {
    int x = 0;
    int y = 0;

    auto operator<=>(const GroupElement&) const = default;
};

std::string to_string(const GroupElement& e);

/// Z_m x Z_n with m, n >= 1. Elements handed to the member functions are
/// expected to be reduced; `reduce` brings arbitrary integers into range.
class GridGroup {
public:
    GridGroup(int m, int n);

    int m() const { return m_; }
    int n() const { return n_; }
    int order() const { return m_ * n_; }

    GroupElement reduce(long long x, long long y) const;
    bool contains(const GroupElement& e) const;

    GroupElement add(const GroupElement& a, const GroupElement& b) const;
    GroupElement sub(const GroupElement& a, const GroupElement& b) const;
    GroupElement negate(const GroupElement& a) const;
    GroupElement scale(long long k, const GroupElement& a) const;

    /// Row-major index in [0, mn); (0,0) has index 0.
    int index(const GroupElement& e) const { return e.x * n_ + e.y; }
    GroupElement element(int index) const { return {index / n_, index % n_}; }

    /// Additive order of e.
    int element_order(const GroupElement& e) const;

    GridGroup transposed() const { return GridGroup(n_, m_); }

    bool operator==(const GridGroup&) const = default;

private:
    int m_;
    int n_;
};

GroupElement add(const GridGroup& g, const GroupElement& a, const GroupElement& b);
GroupElement negate(const GridGroup& g, const GroupElement& a);
GroupElement scale(const GridGroup& g, long long k, const GroupElement& a);

/// Omega(i) = { a : i*a = 0 } for i in {2,3,4}, sorted. Built from the
/// i-torsion of each cyclic factor, never by scanning the group.
std::vector<GroupElement> omega(const GridGroup& g, int i);

/// The subgroup S x T with |S| = s, |T| = t. Throws unless s | m and t | n.
std::vector<GroupElement> subgroup(const GridGroup& g, int s, int t);

using Subgroup = std::vector<GroupElement>;

/// All subgroups of order 3 (0, 1 or 4 of them), each sorted.
std::vector<Subgroup> order3_subgroups(const GridGroup& g);

/// All cyclic subgroups of order 4, each sorted.
std::vector<Subgroup> order4_cyclic_subgroups(const GridGroup& g);

/// Coset (x,y) + H of the Klein subgroup H = Omega(2), for m = n = 2 (mod 4).
/// (x,y) is read as an element of Z_{m/2} x Z_{n/2}.
std::array<GroupElement, 4> coset_D(const GridGroup& g, int x, int y);

enum class ParityClass { ee, eo, oe, oo };

std::string to_string(ParityClass p);

/// Coordinate parity class; m and n must both be even.
ParityClass parity(const GridGroup& g, const GroupElement& a);

// Residue-class predicates used by the census inequalities. All require the
// moduli to make the residue well defined (x mod 4 needs 4 | m, etc.).
bool in_A_s(const GridGroup& g, const GroupElement& a);   // x = 2 (mod 4)
bool in_A_d(const GridGroup& g, const GroupElement& a);   // x = 0 (mod 4)
bool in_A_o(const GridGroup& g, const GroupElement& a);   // y odd
bool in_A_se(const GridGroup& g, const GroupElement& a);  // x = 2 (mod 4), y even
bool in_A_de(const GridGroup& g, const GroupElement& a);  // x = 0 (mod 4), y even
bool in_A_ds(const GridGroup& g, const GroupElement& a);  // x = 0 (mod 4), y = 2 (mod 4)

/// Ring isomorphism Z_{n1 n2} <-> Z_{n1} x Z_{n2} for coprime n1, n2.
class CrtSplit {
public:
    CrtSplit(int modulus, int n1, int n2);

    std::pair<int, int> split(long long y) const;
    int join(long long a, long long b) const;

    int modulus() const { return modulus_; }

private:
    int modulus_;
    int n1_;
    int n2_;
    long long e1_;  // idempotent: 1 mod n1, 0 mod n2
    long long e2_;  // idempotent: 0 mod n1, 1 mod n2
};

CrtSplit crt_split(int modulus, int n1, int n2);

long long mod(long long a, long long m);
int gcd3(int a, int b, int c);

}  // namespace oospc
