#include "oospc/code.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace oospc {

std::string to_string(const Codeword& c) {
    return "{" + to_string(c.elements[0]) + "," + to_string(c.elements[1]) + "," + to_string(c.elements[2]) + "}";
}

void check_codeword(const GridGroup& g, const Codeword& c) {
    for (const auto& e : c.elements)
        if (!g.contains(e)) throw std::invalid_argument("codeword element " + to_string(e) + " is not reduced");
    const auto& [a, b, d] = c.elements;
    if (a == b || a == d || b == d) throw std::invalid_argument("codeword " + to_string(c) + " repeats an element");
}

Codeword translate(const GridGroup& g, const Codeword& c, const GroupElement& shift) {
    Codeword out;
    for (size_t i = 0; i < 3; ++i) out.elements[i] = g.add(c.elements[i], shift);
    return out;
}

Codeword canonicalize(const GridGroup& g, const Codeword& c) {
    std::optional<Codeword> best;
    for (const auto& p : c.elements) {
        Codeword t = translate(g, c, g.negate(p));
        std::sort(t.elements.begin(), t.elements.end());
        if (!best || t < *best) best = t;
    }
    return *best;
}

GroupElement transpose(const GroupElement& e) { return {e.y, e.x}; }

Code transpose(const Code& code) {
    Code out{code.group.transposed(), code.lambda_a, code.lambda_c, {}};
    out.codewords.reserve(code.size());
    for (const auto& c : code.codewords) {
        Codeword t;
        for (size_t i = 0; i < 3; ++i) t.elements[i] = transpose(c.elements[i]);
        out.codewords.push_back(t);
    }
    return out;
}

namespace {

std::array<GroupElement, 6> ordered_differences(const GridGroup& g, const Codeword& c) {
    const auto& e = c.elements;
    return {g.sub(e[0], e[1]), g.sub(e[1], e[0]), g.sub(e[0], e[2]),
            g.sub(e[2], e[0]), g.sub(e[1], e[2]), g.sub(e[2], e[1])};
}

// Step of the arithmetic progression formed by a Type-4 codeword.
GroupElement progression_step(const GridGroup& g, const Codeword& c) {
    const auto& e = c.elements;
    for (int mid = 0; mid < 3; ++mid) {
        const auto& p = e[(mid + 1) % 3];
        const auto& r = e[(mid + 2) % 3];
        if (g.add(p, r) == g.scale(2, e[mid])) return g.sub(e[mid], p);
    }
    throw std::logic_error("progression_step: codeword is not an arithmetic progression");
}

std::string refine_type3(const GridGroup& g, const std::vector<GroupElement>& support) {
    bool all_involutions = std::all_of(support.begin(), support.end(),
                                       [&](const GroupElement& d) { return g.element_order(d) == 2; });
    if (all_involutions) return "3.1";
    for (const auto& d : support) {
        if (g.element_order(d) != 4) continue;
        const int row_order = g.m() / std::gcd(g.m(), d.x);
        return row_order == 4 ? "3.2" : "3.3";
    }
    return {};
}

std::string refine_type4(const GridGroup& g, const Codeword& c) {
    if (g.m() % 2 != 0) return {};
    const GroupElement step = progression_step(g, c);
    const int a = step.x;
    const int b = step.y;
    const bool n_even = g.n() % 2 == 0;
    if (a % 2 == 1) {
        if (!n_even) return "4.1";
        return b % 2 == 1 ? "4.1.1" : "4.1.2";
    }
    if (!n_even) return "4.2";
    if (b % 2 == 1) return "4.2.3";
    if (g.m() % 4 != 0) return "4.2";
    return a % 4 == 2 ? "4.2.1" : "4.2.2";
}

}  // namespace

DifferenceProfile difference_profile(const GridGroup& g, const Codeword& c) {
    check_codeword(g, c);
    DifferenceProfile p;
    p.delta = ordered_differences(g, c);
    std::array<GroupElement, 6> sorted = p.delta;
    std::sort(sorted.begin(), sorted.end());
    int run = 0;
    for (size_t i = 0; i < sorted.size(); ++i) {
        if (i == 0 || sorted[i] != sorted[i - 1]) {
            p.support.push_back(sorted[i]);
            run = 1;
        } else {
            ++run;
        }
        p.lambda_x = std::max(p.lambda_x, run);
    }
    p.type.major = static_cast<int>(p.support.size());
    if (p.type.major == 3) p.type.minor = refine_type3(g, p.support);
    if (p.type.major == 4) p.type.minor = refine_type4(g, c);
    return p;
}

TypeLabel classify(const GridGroup& g, const Codeword& c) { return difference_profile(g, c).type; }

int TypeCensus::total() const { return n2 + type3() + type4() + n5 + n6; }

std::string TypeCensus::str() const {
    std::ostringstream os;
    os << "N2=" << n2 << " N3_1=" << n3_1 << " N3_2=" << n3_2 << " N3_3=" << n3_3 << " N4=" << n4
       << " N4_1=" << n4_1 << " N4_2=" << n4_2 << " N4_1_1=" << n4_1_1 << " N4_1_2=" << n4_1_2
       << " N4_2_1=" << n4_2_1 << " N4_2_2=" << n4_2_2 << " N4_2_3=" << n4_2_3 << " N5=" << n5
       << " N6=" << n6;
    return os.str();
}

TypeCensus census(const Code& code) {
    static const std::map<std::string, int TypeCensus::*> slots = {
        {"2", &TypeCensus::n2},         {"3.1", &TypeCensus::n3_1},     {"3.2", &TypeCensus::n3_2},
        {"3.3", &TypeCensus::n3_3},     {"4", &TypeCensus::n4},         {"4.1", &TypeCensus::n4_1},
        {"4.2", &TypeCensus::n4_2},     {"4.1.1", &TypeCensus::n4_1_1}, {"4.1.2", &TypeCensus::n4_1_2},
        {"4.2.1", &TypeCensus::n4_2_1}, {"4.2.2", &TypeCensus::n4_2_2}, {"4.2.3", &TypeCensus::n4_2_3},
        {"5", &TypeCensus::n5},         {"6", &TypeCensus::n6},
    };
    TypeCensus out;
    for (const auto& c : code.codewords) {
        const auto label = classify(code.group, c).str();
        ++(out.*slots.at(label));
    }
    return out;
}

std::string Violation::describe(const Code& code) const {
    std::ostringstream os;
    switch (kind) {
        case ViolationKind::degenerate:
            os << "codeword " << first << " is degenerate";
            if (first < code.size()) os << ": " << to_string(code.codewords[first]);
            break;
        case ViolationKind::auto_correlation:
            os << "auto-correlation " << count << " > " << code.lambda_a << " for codeword " << first << " "
               << to_string(code.codewords[first]) << " at shift " << to_string(shift);
            break;
        case ViolationKind::cross_correlation:
            os << "cross-correlation " << count << " > " << code.lambda_c << " between codewords " << first
               << " " << to_string(code.codewords[first]) << " and " << second << " "
               << to_string(code.codewords[second]) << " at " << to_string(shift);
            break;
    }
    return os.str();
}

namespace {

std::optional<Violation> find_degenerate(const Code& code) {
    for (size_t i = 0; i < code.size(); ++i) {
        try {
            check_codeword(code.group, code.codewords[i]);
        } catch (const std::invalid_argument&) {
            return Violation{ViolationKind::degenerate, i, i, {}, 0};
        }
    }
    return std::nullopt;
}

}  // namespace

Verdict verify_diff(const Code& code) {
    if (code.lambda_c != 1) throw std::invalid_argument("difference-method verification requires lambda_c = 1");
    if (auto bad = find_degenerate(code)) return {bad};
    const GridGroup& g = code.group;
    std::vector<long long> owner(static_cast<size_t>(g.order()), -1);
    for (size_t i = 0; i < code.size(); ++i) {
        const auto profile = difference_profile(g, code.codewords[i]);
        if (profile.lambda_x > code.lambda_a) {
            // shift realising lambda(X): the most repeated difference
            GroupElement worst = profile.support.front();
            int best = 0;
            for (const auto& d : profile.support) {
                int k = static_cast<int>(std::count(profile.delta.begin(), profile.delta.end(), d));
                if (k > best) best = k, worst = d;
            }
            return {Violation{ViolationKind::auto_correlation, i, i, worst, profile.lambda_x}};
        }
        for (const auto& d : profile.support) {
            auto& o = owner[static_cast<size_t>(g.index(d))];
            if (o >= 0) return {Violation{ViolationKind::cross_correlation, static_cast<size_t>(o), i, d, 2}};
            o = static_cast<long long>(i);
        }
    }
    return {};
}

std::vector<GroupElement> leave(const Code& code) {
    auto verdict = verify_diff(code);
    if (!verdict) throw std::invalid_argument("leave of an invalid code: " + verdict.violation->describe(code));
    const GridGroup& g = code.group;
    std::vector<bool> covered(static_cast<size_t>(g.order()), false);
    for (const auto& c : code.codewords)
        for (const auto& d : difference_profile(g, c).support) covered[static_cast<size_t>(g.index(d))] = true;
    std::vector<GroupElement> out;
    for (int i = 1; i < g.order(); ++i)
        if (!covered[static_cast<size_t>(i)]) out.push_back(g.element(i));
    return out;
}

std::optional<std::pair<int, int>> regularity_of_leave(const GridGroup& g, const std::vector<GroupElement>& lv) {
    std::vector<bool> in(static_cast<size_t>(g.order()), false);
    in[0] = true;
    for (const auto& e : lv) in[static_cast<size_t>(g.index(e))] = true;
    int s = 0, t = 0;
    for (int x = 0; x < g.m(); ++x) s += in[static_cast<size_t>(g.index({x, 0}))];
    for (int y = 0; y < g.n(); ++y) t += in[static_cast<size_t>(g.index({0, y}))];
    if (g.m() % s != 0 || g.n() % t != 0) return std::nullopt;
    if (static_cast<long long>(s) * t != static_cast<long long>(lv.size()) + 1) return std::nullopt;
    for (const auto& e : subgroup(g, s, t))
        if (!in[static_cast<size_t>(g.index(e))]) return std::nullopt;
    return std::pair{s, t};
}

std::optional<std::pair<int, int>> regularity(const Code& code) {
    return regularity_of_leave(code.group, leave(code));
}

}  // namespace oospc
