// Shift-definition correlation checks: an OpenMP kernel over codeword rows
// and the serial all-shifts reference it is tested against.
#include <algorithm>
#include <atomic>
#include <limits>
#include <optional>
#include <stdexcept>

#include "oospc/code.hpp"

namespace oospc {

namespace {

std::optional<Violation> first_degenerate(const Code& code) {
    for (size_t i = 0; i < code.size(); ++i) {
        try {
            check_codeword(code.group, code.codewords[i]);
        } catch (const std::invalid_argument&) {
            return Violation{ViolationKind::degenerate, i, i, {}, 0};
        }
    }
    return std::nullopt;
}

// |X ∩ (Y + s)| counts pairs (p in X, q in Y) with p - q = s. Returns the
// lexicographically least shift whose count exceeds `limit`, skipping s = 0
// when `skip_zero` (auto-correlation, X == Y).
std::optional<std::pair<GroupElement, int>> worst_shift(const GridGroup& g, const Codeword& x, const Codeword& y,
                                                        int limit, bool skip_zero) {
    std::array<GroupElement, 9> diffs;
    size_t k = 0;
    for (const auto& p : x.elements)
        for (const auto& q : y.elements) diffs[k++] = g.sub(p, q);
    std::sort(diffs.begin(), diffs.end());
    for (size_t i = 0; i < diffs.size();) {
        size_t j = i;
        while (j < diffs.size() && diffs[j] == diffs[i]) ++j;
        const int count = static_cast<int>(j - i);
        const bool zero = diffs[i] == GroupElement{0, 0};
        if (!(zero && skip_zero) && count > limit) return std::pair{diffs[i], count};
        i = j;
    }
    return std::nullopt;
}

std::optional<Violation> first_in_row(const Code& code, size_t i) {
    const GridGroup& g = code.group;
    const Codeword& x = code.codewords[i];
    if (auto w = worst_shift(g, x, x, code.lambda_a, true))
        return Violation{ViolationKind::auto_correlation, i, i, w->first, w->second};
    for (size_t j = i + 1; j < code.size(); ++j)
        if (auto w = worst_shift(g, x, code.codewords[j], code.lambda_c, false))
            return Violation{ViolationKind::cross_correlation, i, j, w->first, w->second};
    return std::nullopt;
}

}  // namespace

Verdict verify_shift(const Code& code) {
    if (auto bad = first_degenerate(code)) return {bad};
    const long long rows = static_cast<long long>(code.size());
    std::vector<std::optional<Violation>> found(code.size());
    std::atomic<long long> first_bad{std::numeric_limits<long long>::max()};

#pragma omp parallel for schedule(dynamic, 8)
    for (long long i = 0; i < rows; ++i) {
        if (i > first_bad.load(std::memory_order_relaxed)) continue;
        found[static_cast<size_t>(i)] = first_in_row(code, static_cast<size_t>(i));
        if (found[static_cast<size_t>(i)]) {
            long long cur = first_bad.load();
            while (i < cur && !first_bad.compare_exchange_weak(cur, i)) {
            }
        }
    }

    const long long bad = first_bad.load();
    if (bad == std::numeric_limits<long long>::max()) return {};
    return {found[static_cast<size_t>(bad)]};
}

Verdict verify_shift_reference(const Code& code) {
    if (auto bad = first_degenerate(code)) return {bad};
    const GridGroup& g = code.group;
    auto coincidences = [&](const Codeword& x, const Codeword& y, const GroupElement& s) {
        const Codeword ys = translate(g, y, s);
        int count = 0;
        for (const auto& p : x.elements)
            count += static_cast<int>(std::count(ys.elements.begin(), ys.elements.end(), p));
        return count;
    };
    for (size_t i = 0; i < code.size(); ++i) {
        for (size_t j = i; j < code.size(); ++j) {
            const bool self = i == j;
            const int limit = self ? code.lambda_a : code.lambda_c;
            for (int idx = self ? 1 : 0; idx < g.order(); ++idx) {
                const GroupElement s = g.element(idx);
                const int c = coincidences(code.codewords[i], code.codewords[j], s);
                if (c > limit)
                    return {Violation{self ? ViolationKind::auto_correlation : ViolationKind::cross_correlation, i,
                                      j, s, c}};
            }
        }
    }
    return {};
}

}  // namespace oospc
