#include "oospc/group.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace oospc {

long long mod(long long a, long long m) {
    long long r = a % m;
    return r < 0 ? r + m : r;
}

int gcd3(int a, int b, int c) { return std::gcd(std::gcd(a, b), c); }

std::string to_string(const GroupElement& e) {
    return "(" + std::to_string(e.x) + "," + std::to_string(e.y) + ")";
}

GridGroup::GridGroup(int m, int n) : m_(m), n_(n) {
    if (m < 1 || n < 1)
        throw std::invalid_argument("group moduli must be positive, got (" + std::to_string(m) +
                                    "," + std::to_string(n) + ")");
}

GroupElement GridGroup::reduce(long long x, long long y) const {
    return {static_cast<int>(mod(x, m_)), static_cast<int>(mod(y, n_))};
}

bool GridGroup::contains(const GroupElement& e) const {
    return e.x >= 0 && e.x < m_ && e.y >= 0 && e.y < n_;
}

GroupElement GridGroup::add(const GroupElement& a, const GroupElement& b) const {
    int x = a.x + b.x;
    int y = a.y + b.y;
    return {x >= m_ ? x - m_ : x, y >= n_ ? y - n_ : y};
}

GroupElement GridGroup::sub(const GroupElement& a, const GroupElement& b) const {
    int x = a.x - b.x;
    int y = a.y - b.y;
    return {x < 0 ? x + m_ : x, y < 0 ? y + n_ : y};
}

GroupElement GridGroup::negate(const GroupElement& a) const {
    return {a.x == 0 ? 0 : m_ - a.x, a.y == 0 ? 0 : n_ - a.y};
}

GroupElement GridGroup::scale(long long k, const GroupElement& a) const {
    return reduce(k * a.x, k * a.y);
}

int GridGroup::element_order(const GroupElement& e) const {
    int ox = m_ / std::gcd(m_, e.x);
    int oy = n_ / std::gcd(n_, e.y);
    return std::lcm(ox, oy);
}

GroupElement add(const GridGroup& g, const GroupElement& a, const GroupElement& b) { return g.add(a, b); }
GroupElement negate(const GridGroup& g, const GroupElement& a) { return g.negate(a); }
GroupElement scale(const GridGroup& g, long long k, const GroupElement& a) { return g.scale(k, a); }

namespace {

// i-torsion of Z_q: multiples of q / gcd(q, i).
std::vector<int> cyclic_torsion(int q, int i) {
    int step = q / std::gcd(q, i);
    std::vector<int> out;
    for (int v = 0; v < q; v += step) out.push_back(v);
    return out;
}

std::vector<GroupElement> product(const std::vector<int>& xs, const std::vector<int>& ys) {
    std::vector<GroupElement> out;
    out.reserve(xs.size() * ys.size());
    for (int x : xs)
        for (int y : ys) out.push_back({x, y});
    return out;
}

std::vector<Subgroup> cyclic_subgroups_of_order(const GridGroup& g, int order, int torsion) {
    std::vector<Subgroup> out;
    std::vector<bool> seen(static_cast<size_t>(g.order()), false);
    for (const auto& a : omega(g, torsion)) {
        if (g.element_order(a) != order || seen[g.index(a)]) continue;
        Subgroup h;
        GroupElement cur{0, 0};
        for (int k = 0; k < order; ++k) {
            h.push_back(cur);
            if (g.element_order(cur) == order) seen[g.index(cur)] = true;
            cur = g.add(cur, a);
        }
        std::sort(h.begin(), h.end());
        out.push_back(std::move(h));
    }
    return out;
}

}  // namespace

std::vector<GroupElement> omega(const GridGroup& g, int i) {
    if (i < 2 || i > 4) throw std::invalid_argument("omega: unsupported torsion order " + std::to_string(i));
    return product(cyclic_torsion(g.m(), i), cyclic_torsion(g.n(), i));
}

std::vector<GroupElement> subgroup(const GridGroup& g, int s, int t) {
    if (s < 1 || t < 1 || g.m() % s != 0 || g.n() % t != 0)
        throw std::invalid_argument("subgroup: (" + std::to_string(s) + "," + std::to_string(t) +
                                    ") does not divide (" + std::to_string(g.m()) + "," +
                                    std::to_string(g.n()) + ")");
    std::vector<int> xs, ys;
    for (int x = 0; x < g.m(); x += g.m() / s) xs.push_back(x);
    for (int y = 0; y < g.n(); y += g.n() / t) ys.push_back(y);
    return product(xs, ys);
}

std::vector<Subgroup> order3_subgroups(const GridGroup& g) { return cyclic_subgroups_of_order(g, 3, 3); }

std::vector<Subgroup> order4_cyclic_subgroups(const GridGroup& g) { return cyclic_subgroups_of_order(g, 4, 4); }

std::array<GroupElement, 4> coset_D(const GridGroup& g, int x, int y) {
    if (g.m() % 4 != 2 || g.n() % 4 != 2)
        throw std::invalid_argument("coset_D needs m = n = 2 (mod 4), got (" + std::to_string(g.m()) +
                                    "," + std::to_string(g.n()) + ")");
    const int hm = g.m() / 2;
    const int hn = g.n() / 2;
    const int rx = static_cast<int>(mod(x, hm));
    const int ry = static_cast<int>(mod(y, hn));
    return {GroupElement{rx, ry}, GroupElement{rx, ry + hn}, GroupElement{rx + hm, ry},
            GroupElement{rx + hm, ry + hn}};
}

std::string to_string(ParityClass p) {
    switch (p) {
        case ParityClass::ee: return "ee";
        case ParityClass::eo: return "eo";
        case ParityClass::oe: return "oe";
        case ParityClass::oo: return "oo";
    }
    return "?";
}

ParityClass parity(const GridGroup& g, const GroupElement& a) {
    if (g.m() % 2 != 0 || g.n() % 2 != 0) throw std::invalid_argument("parity needs even moduli");
    const bool xo = a.x % 2 != 0;
    const bool yo = a.y % 2 != 0;
    if (xo) return yo ? ParityClass::oo : ParityClass::oe;
    return yo ? ParityClass::eo : ParityClass::ee;
}

namespace {
void require_divides(int d, int q, const char* what) {
    if (q % d != 0) throw std::invalid_argument(std::string(what) + ": residue not well defined");
}
}  // namespace

bool in_A_s(const GridGroup& g, const GroupElement& a) {
    require_divides(4, g.m(), "A_s");
    return a.x % 4 == 2;
}
bool in_A_d(const GridGroup& g, const GroupElement& a) {
    require_divides(4, g.m(), "A_d");
    return a.x % 4 == 0;
}
bool in_A_o(const GridGroup& g, const GroupElement& a) {
    require_divides(2, g.n(), "A_o");
    return a.y % 2 == 1;
}
bool in_A_se(const GridGroup& g, const GroupElement& a) {
    require_divides(2, g.n(), "A_se");
    return in_A_s(g, a) && a.y % 2 == 0;
}
bool in_A_de(const GridGroup& g, const GroupElement& a) {
    require_divides(2, g.n(), "A_de");
    return in_A_d(g, a) && a.y % 2 == 0;
}
bool in_A_ds(const GridGroup& g, const GroupElement& a) {
    require_divides(4, g.n(), "A_ds");
    return in_A_d(g, a) && a.y % 4 == 2;
}

namespace {
long long inverse_mod(long long a, long long m) {
    long long t = 0, new_t = 1, r = m, new_r = mod(a, m);
    while (new_r != 0) {
        long long q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    return mod(t, m);
}
}  // namespace

CrtSplit::CrtSplit(int modulus, int n1, int n2) : modulus_(modulus), n1_(n1), n2_(n2) {
    if (n1 < 1 || n2 < 1 || static_cast<long long>(n1) * n2 != modulus)
        throw std::invalid_argument("crt_split: modulus must equal n1*n2");
    if (std::gcd(n1, n2) != 1) throw std::invalid_argument("crt_split: factors are not coprime");
    // e1 = n2 * (n2^{-1} mod n1), e2 = n1 * (n1^{-1} mod n2)
    e1_ = n1 == 1 ? 0 : mod(static_cast<long long>(n2) * inverse_mod(n2, n1), modulus);
    e2_ = n2 == 1 ? 0 : mod(static_cast<long long>(n1) * inverse_mod(n1, n2), modulus);
}

std::pair<int, int> CrtSplit::split(long long y) const {
    return {static_cast<int>(mod(y, n1_)), static_cast<int>(mod(y, n2_))};
}

int CrtSplit::join(long long a, long long b) const {
    return static_cast<int>(mod(mod(a, n1_) * e1_ + mod(b, n2_) * e2_, modulus_));
}

CrtSplit crt_split(int modulus, int n1, int n2) { return CrtSplit(modulus, n1, n2); }

}  // namespace oospc
