#include <algorithm>
#include <map>
#include <string>
#include <tuple>

#include "oospc/constructions.hpp"

namespace oospc {

namespace {

void require_valid(const Code& code, const char* who) {
    if (code.lambda_c != 1) throw std::invalid_argument(std::string(who) + ": lambda_c must be 1");
    auto verdict = verify_diff(code);
    if (!verdict) throw std::invalid_argument(std::string(who) + ": invalid input code: " + verdict.violation->describe(code));
}

void require_result(const Code& code, const char* who) {
    auto verdict = verify_diff(code);
    if (!verdict) throw std::logic_error(std::string(who) + " produced an invalid code: " + verdict.violation->describe(code));
}

}  // namespace

Code fill(const Code& outer, const Code& inner) {
    require_valid(outer, "fill");
    require_valid(inner, "fill");
    const auto reg = regularity(outer);
    if (!reg) throw std::invalid_argument("fill: outer code is not regular");
    const auto [s, t] = *reg;
    if (inner.group != GridGroup(s, t))
        throw std::invalid_argument("fill: inner code lives on (" + std::to_string(inner.group.m()) + "," +
                                    std::to_string(inner.group.n()) + ") but outer leave is (" + std::to_string(s) +
                                    "," + std::to_string(t) + ")");
    const GridGroup& g = outer.group;
    const int sx = g.m() / s;
    const int sy = g.n() / t;
    Code out{g, std::max(outer.lambda_a, inner.lambda_a), 1, outer.codewords};
    for (const auto& c : inner.codewords) {
        Codeword e;
        for (size_t i = 0; i < 3; ++i) e.elements[i] = {c.elements[i].x * sx, c.elements[i].y * sy};
        out.codewords.push_back(e);
    }
    require_result(out, "fill");
    return out;
}

Code inflate(const Code& base, int v, Axis axis) {
    if (base.lambda_a != 1) throw std::invalid_argument("inflate: base must have lambda_a = 1");
    require_valid(base, "inflate");
    const auto reg = regularity(base);
    if (!reg) throw std::invalid_argument("inflate: base code is not regular");
    const DiffMatrix d = cdm(v);
    const GridGroup& g = base.group;
    const bool rows = axis == Axis::rows;
    const GridGroup big = rows ? GridGroup(g.m() * v, g.n()) : GridGroup(g.m(), g.n() * v);
    Code out{big, 1, 1, {}};
    out.codewords.reserve(base.size() * static_cast<size_t>(v));
    for (const auto& c : base.codewords) {
        for (size_t col = 0; col < static_cast<size_t>(v); ++col) {
            Codeword e;
            for (size_t i = 0; i < 3; ++i) {
                const auto& p = c.elements[i];
                const int lift = d.rows[i][col];
                e.elements[i] = rows ? GroupElement{p.x + g.m() * lift, p.y} : GroupElement{p.x, p.y + g.n() * lift};
            }
            out.codewords.push_back(e);
        }
    }
    require_result(out, "inflate");
    const auto expect = rows ? std::pair{reg->first * v, reg->second} : std::pair{reg->first, reg->second * v};
    if (regularity(out) != expect) throw std::logic_error("inflate: regularity did not propagate");
    return out;
}

Code double_code(const Code& base) {
    if (base.lambda_a != 1) throw std::invalid_argument("double: base must have lambda_a = 1");
    require_valid(base, "double");
    const GridGroup& h = base.group;
    if (h.m() % 2 == 0 || h.n() % 2 == 0) throw std::invalid_argument("double: base moduli must be odd");
    const GridGroup g(2 * h.m(), 2 * h.n());
    auto pick = [&](const GroupElement& a, ParityClass cls) {
        for (const auto& e : coset_D(g, a.x, a.y))
            if (parity(g, e) == cls) return e;
        throw std::logic_error("double: parity class missing from coset");
    };
    Code out{g, 2, 1, {}};
    out.codewords.reserve(5 * base.size());
    const GroupElement zero{};
    for (const auto& raw : base.codewords) {
        // translate so that the codeword contains (0,0)
        const Codeword c = translate(h, raw, h.negate(raw.elements[0]));
        const GroupElement p1 = c.elements[1];
        const GroupElement p2 = c.elements[2];
        const GroupElement alpha1 = pick(p1, ParityClass::oo);
        const GroupElement beta1 = pick(p1, ParityClass::eo);
        const GroupElement beta3 = pick(p1, ParityClass::oe);
        const GroupElement alpha2 = pick(p2, ParityClass::eo);
        const GroupElement beta2 = pick(p2, ParityClass::oe);
        const GroupElement beta4 = pick(p2, ParityClass::oo);
        const GroupElement alpha3 = pick(h.sub(p2, p1), ParityClass::oe);
        for (const auto& a : {alpha1, alpha2, alpha3}) out.codewords.push_back({{zero, a, g.scale(2, a)}});
        out.codewords.push_back({{zero, beta1, beta2}});
        out.codewords.push_back({{zero, beta3, beta4}});
    }
    require_result(out, "double");
    return out;
}

namespace {

using Key = std::tuple<int, int, int, std::string>;
using Listing = std::vector<std::array<std::pair<int, int>, 3>>;

const std::map<Key, Listing>& catalog() {
    static const std::map<Key, Listing> entries = {
        {{6, 6, 2, ""},
         {{{{0, 0}, {0, 3}, {3, 0}}},
          {{{0, 0}, {0, 1}, {0, 2}}},
          {{{0, 0}, {1, 0}, {2, 0}}},
          {{{0, 0}, {1, 1}, {2, 2}}},
          {{{0, 0}, {1, 2}, {2, 1}}},
          {{{0, 0}, {1, 3}, {3, 2}}},
          {{{0, 0}, {1, 4}, {3, 1}}}}},
        {{6, 6, 3, ""},
         {{{{0, 0}, {0, 2}, {0, 4}}},
          {{{0, 0}, {2, 0}, {4, 0}}},
          {{{0, 0}, {2, 2}, {4, 4}}},
          {{{0, 0}, {2, 4}, {4, 2}}},
          {{{0, 0}, {0, 1}, {1, 0}}},
          {{{0, 0}, {1, 1}, {2, 3}}},
          {{{0, 0}, {1, 3}, {3, 2}}},
          {{{0, 0}, {1, 4}, {3, 5}}},
          {{{0, 0}, {0, 3}, {3, 0}}}}},
        {{2, 6, 2, "(1,3)-regular"}, {{{{0, 0}, {0, 1}, {1, 2}}}, {{{0, 0}, {0, 3}, {1, 0}}}}},
        {{2, 18, 2, "(1,3)-regular"},
         {{{{0, 0}, {0, 1}, {0, 2}}},
          {{{0, 0}, {1, 4}, {0, 8}}},
          {{{0, 0}, {1, 7}, {0, 14}}},
          {{{0, 0}, {0, 3}, {1, 1}}},
          {{{0, 0}, {0, 5}, {1, 8}}},
          {{{0, 0}, {0, 7}, {1, 12}}},
          {{{0, 0}, {0, 9}, {1, 0}}}}},
        {{9, 3, 1, "(3,3)-regular"}, {{{{0, 0}, {1, 0}, {2, 1}}}, {{{0, 0}, {1, 2}, {5, 0}}}, {{{0, 0}, {2, 0}, {4, 2}}}}},
        {{2, 2, 2, ""}, {{{{0, 0}, {1, 0}, {0, 1}}}}},
        {{1, 3, 3, ""}, {{{{0, 0}, {0, 1}, {0, 2}}}}},
    };
    return entries;
}

}  // namespace

Code base_code(int m, int n, int lambda_a, const std::string& variant) {
    const auto& entries = catalog();
    const Listing* found = nullptr;
    if (auto it = entries.find({m, n, lambda_a, variant}); it != entries.end()) {
        found = &it->second;
    } else if (variant.empty()) {
        for (const auto& [key, list] : entries) {
            if (std::get<0>(key) != m || std::get<1>(key) != n || std::get<2>(key) != lambda_a) continue;
            if (found) throw std::invalid_argument("base_code: ambiguous key, give a variant");
            found = &list;
        }
    }
    if (!found)
        throw std::invalid_argument("base_code: no catalog entry for (" + std::to_string(m) + "," + std::to_string(n) +
                                    "," + std::to_string(lambda_a) + (variant.empty() ? "" : ",\"" + variant + "\"") +
                                    ")");
    Code out{GridGroup(m, n), lambda_a, 1, {}};
    for (const auto& row : *found) {
        Codeword c;
        for (size_t i = 0; i < 3; ++i) c.elements[i] = {row[i].first, row[i].second};
        out.codewords.push_back(c);
    }
    require_result(out, "base_code");
    return out;
}

}  // namespace oospc
