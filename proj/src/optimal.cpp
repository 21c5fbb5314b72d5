#include <string>

#include "oospc/bounds.hpp"
#include "oospc/constructions.hpp"

namespace oospc {

namespace {

struct Built {
    Code code;
    std::string path;
};

// m = n = 2 (mod 4), already oriented so that the dispatch below applies.
Built build(int m, int n, int lambda_a, const IngredientOptions& opts) {
    const int rm = m % 12;
    const int rn = n % 12;
    if (rm == 6 && rn == 6) {
        if (m == 6 && n == 6) return {base_code(6, 6, lambda_a), "explicit (6,6)"};
        const Code doubled = double_code(regular_33(m / 2, n / 2, opts));
        return {fill(doubled, base_code(6, 6, lambda_a)), "regular_33 + double + fill (6,6)"};
    }
    if (rn == 6) {
        Code code = regular_13_la2(m, n);
        if (lambda_a == 3) return {fill(code, base_code(1, 3, 3)), "regular_13_la2 + fill (1,3)"};
        return {code, "regular_13_la2"};
    }
    Built out;
    if (rm == rn) {
        if (m == 2 && n == 2) {
            out = {base_code(2, 2, 2), "explicit (2,2)"};
        } else {
            const Code doubled = double_code(regular_11(m / 2, n / 2, opts));
            out = {fill(doubled, base_code(2, 2, 2)), "regular_11 + double + fill (2,2)"};
        }
    } else if (m == 2) {
        out = {family_2xn(n), "family_2xn"};
    } else {
        out = {fill(family_m2mod12(m, n), family_2xn(n)), "family_m2mod12 + fill family_2xn"};
    }
    // 3 does not divide mn here, so every lambda(X) <= 2 and the same code serves lambda_a = 3
    out.code.lambda_a = lambda_a;
    return out;
}

}  // namespace

Code construct_optimal(int m, int n, int lambda_a, const IngredientOptions& opts, ConstructionReport* report) {
    if (lambda_a != 2 && lambda_a != 3)
        throw std::invalid_argument("construct_optimal: lambda_a must be 2 or 3, got " + std::to_string(lambda_a));
    if (m < 2 || n < 2 || m % 4 != 2 || n % 4 != 2)
        throw std::invalid_argument("construct_optimal needs m = n = 2 (mod 4); got (" + std::to_string(m) + "," +
                                    std::to_string(n) + ") with residues mod 4 (" + std::to_string(((m % 4) + 4) % 4) +
                                    "," + std::to_string(((n % 4) + 4) % 4) + ")");
    // orient: a coordinate = 6 (mod 12) goes second; otherwise the = 2 (mod 12) one goes first
    const int rm = m % 12;
    const int rn = n % 12;
    const bool flip = (rm == 6 && rn != 6) || (rm == 10 && rn == 2);
    Built b = flip ? build(n, m, lambda_a, opts) : build(m, n, lambda_a, opts);
    Code code = flip ? transpose(b.code) : std::move(b.code);

    auto verdict = verify_diff(code);
    if (!verdict) throw std::logic_error("construct_optimal: invalid code: " + verdict.violation->describe(code));
    const auto want = theta_exact_2mod4(m, n, lambda_a);
    if (static_cast<long long>(code.size()) != want)
        throw std::logic_error("construct_optimal: built " + std::to_string(code.size()) + " codewords, expected " +
                               std::to_string(want));
    if (report) {
        report->path = (flip ? "transpose of " : "") + b.path;
        report->regularity = regularity(code);
    }
    return code;
}

}  // namespace oospc
