#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <string>
#include <thread>
#include <tuple>

#include "oospc/code_io.hpp"
#include "oospc/constructions.hpp"
#include "oospc/search.hpp"

namespace oospc {

namespace {

long long floor_div(long long a, long long b) { return a / b - ((a % b != 0) && ((a < 0) != (b < 0))); }

std::string dims(int m, int n) { return "(" + std::to_string(m) + "," + std::to_string(n) + ")"; }

void expect(const Code& code, size_t size, std::pair<int, int> reg, const char* who) {
    auto verdict = verify_diff(code);
    if (!verdict) throw std::logic_error(std::string(who) + ": invalid code: " + verdict.violation->describe(code));
    if (code.size() != size)
        throw std::logic_error(std::string(who) + ": expected " + std::to_string(size) + " codewords, got " +
                               std::to_string(code.size()));
    if (regularity(code) != reg)
        throw std::logic_error(std::string(who) + ": expected a " + dims(reg.first, reg.second) + "-regular code");
}

}  // namespace

Code family_m2mod12(int m, int n) {
    if (m < 2 || n < 2 || m % 12 != 2 || n % 4 != 2)
        throw std::invalid_argument("family_m2mod12 needs m = 2 (mod 12), n = 2 (mod 4); got " + dims(m, n));
    const GridGroup g(m, n);
    Code out{g, 2, 1, {}};
    auto add = [&](long long x1, long long y1, long long x2, long long y2) {
        out.codewords.push_back({{GroupElement{}, g.reduce(x1, y1), g.reduce(x2, y2)}});
    };
    const long long j_hi = floor_div(m - 14, 12);
    const long long s_hi = floor_div(m - 26, 24);
    const long long t_hi = floor_div(m - 14, 24);
    for (long long i = 0; i <= n / 2 - 1; ++i) {
        for (long long t = 0; t <= t_hi; ++t) {
            add(12 * t + 3, 2 * i, 24 * t + 6, 4 * i);
            add(12 * t + 5, 2 * i + 1, 24 * t + 10, 4 * i + 2);
        }
        for (long long s = 0; s <= s_hi; ++s) {
            add(12 * s + 9, 2 * i + 1, 24 * s + 18, 4 * i + 2);
            add(12 * s + 11, 2 * i, 24 * s + 22, 4 * i);
        }
        for (long long j = 0; j <= j_hi; ++j) {
            add(m / 2 - 6 * j - 1, 2 * i + 1, m - 12 * j - 2, 4 * i + 2);
            add(6 * j + 1, 2 * i, 12 * j + 3, 4 * i + 1);
            add(6 * j + 4, 2 * i + 1, 12 * j + 5, 4 * i + 2);
        }
    }
    expect(out, static_cast<size_t>(5LL * n * (m - 2) / 24), {2, n}, "family_m2mod12");
    return out;
}

Code family_2xn(int n) {
    if (n < 10 || n % 12 != 10) throw std::invalid_argument("family_2xn needs n = 10 (mod 12); got " + std::to_string(n));
    const int t = n / 2;
    const CrtSplit crt = crt_split(n, 2, t);
    const GridGroup g(2, n);
    Code out{g, 2, 1, {}};
    // (a,b,c) in Z_2 x Z_2 x Z_t
    auto at = [&](long long a, long long b, long long c) { return GroupElement{static_cast<int>(mod(a, 2)), crt.join(b, c)}; };
    auto add = [&](GroupElement p, GroupElement q) { out.codewords.push_back({{GroupElement{}, p, q}}); };
    add(at(0, 1, 0), at(1, 0, 0));
    for (int i = 1; i <= (t + 1) / 6; ++i) {
        add(at(0, 1, 2 * i - 1), at(0, 0, 4 * i - 2));
        add(at(1, 0, 2 * i), at(0, 0, 4 * i));
        add(at(1, 1, 2 * i - 1), at(0, 1, 4 * i - 2));
    }
    for (int i = 1; i <= (t - 5) / 6; ++i) {
        add(at(1, 1, (t + 1) / 2 - i), at(0, 0, t - 2 * i + 1));
        add(at(0, 1, 4 * i), at(1, 0, (t + 1) / 3 + 2 * i));
    }
    auto verdict = verify_diff(out);
    if (!verdict) throw std::logic_error("family_2xn: invalid code: " + verdict.violation->describe(out));
    if (out.size() != static_cast<size_t>((5 * n - 2) / 12)) throw std::logic_error("family_2xn: wrong size");
    return out;
}

IngredientCache IngredientCache::from_environment() {
    if (const char* dir = std::getenv("OOSPC_CACHE_DIR"); dir && *dir) return IngredientCache(std::filesystem::path(dir));
    return IngredientCache();
}

namespace {

using CacheKey = std::tuple<int, int, int, int, int>;

std::mutex& memory_mutex() {
    static std::mutex mu;
    return mu;
}

std::map<CacheKey, Code>& memory() {
    static std::map<CacheKey, Code> codes;
    return codes;
}

std::filesystem::path cache_file(const std::filesystem::path& dir, int m, int n, int s, int t, int lambda_a) {
    return dir / ("regular_m" + std::to_string(m) + "_n" + std::to_string(n) + "_s" + std::to_string(s) + "_t" +
                  std::to_string(t) + "_la" + std::to_string(lambda_a) + ".json");
}

bool acceptable(const Code& code, int m, int n, int s, int t, int lambda_a) {
    return code.group == GridGroup(m, n) && code.lambda_a == lambda_a && code.lambda_c == 1 && verify_diff(code) &&
           regularity(code) == std::pair{s, t};
}

}  // namespace

std::optional<Code> IngredientCache::find(int m, int n, int s, int t, int lambda_a) const {
    const CacheKey key{m, n, s, t, lambda_a};
    {
        std::lock_guard lock(memory_mutex());
        if (auto it = memory().find(key); it != memory().end()) return it->second;
    }
    if (!dir_) return std::nullopt;
    try {
        CodeFile f = load_code(cache_file(*dir_, m, n, s, t, lambda_a));
        if (!acceptable(f.code, m, n, s, t, lambda_a)) return std::nullopt;
        std::lock_guard lock(memory_mutex());
        memory().emplace(key, f.code);
        return f.code;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

void IngredientCache::store(int s, int t, const Code& code) const {
    const int m = code.group.m();
    const int n = code.group.n();
    {
        std::lock_guard lock(memory_mutex());
        memory().emplace(CacheKey{m, n, s, t, code.lambda_a}, code);
    }
    if (!dir_) return;
    try {
        std::filesystem::create_directories(*dir_);
        // write-then-rename so concurrent readers never see a partial file
        const auto final_path = cache_file(*dir_, m, n, s, t, code.lambda_a);
        auto tmp = final_path;
        tmp += ".tmp" + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id()));
        save_code(tmp, code, {"search", std::pair{s, t}});
        std::filesystem::rename(tmp, final_path);
    } catch (const std::exception&) {
        // a cache that cannot be written only costs a recomputation
    }
}

namespace {

Code searched(int m, int n, int s, int t, const IngredientOptions& opts) {
    static const IngredientCache process_cache = IngredientCache::from_environment();
    const IngredientCache& cache = opts.cache ? *opts.cache : process_cache;
    if (auto hit = cache.find(m, n, s, t, 1)) return *hit;
    SearchResult r = search_regular(m, n, 1, s, t, opts.search_timeout);
    cache.store(s, t, r.witness);
    return r.witness;
}

}  // namespace

namespace {

// Divisor v = 1 (mod 6) of m (axis rows) or n (axis cols) for the inflate +
// fill route. Prefers a reduction that needs no search, then the largest v.
std::optional<std::pair<int, Axis>> split_11(int m, int n);

std::pair<int, int> reduced(int m, int n, std::pair<int, Axis> split) {
    return split.second == Axis::cols ? std::pair{m, n / split.first} : std::pair{m / split.first, n};
}

bool constructive_11(int m, int n) {
    if (std::gcd(m, n) == 1) return true;
    const auto s = split_11(m, n);
    if (!s) return false;
    const auto [a, b] = reduced(m, n, *s);
    return constructive_11(a, b);
}

std::optional<std::pair<int, Axis>> split_11(int m, int n) {
    std::optional<std::pair<int, Axis>> largest;
    for (int v = 7; v <= std::max(m, n); v += 6)
        for (Axis axis : {Axis::cols, Axis::rows}) {
            if ((axis == Axis::cols ? n : m) % v != 0) continue;
            const auto [a, b] = reduced(m, n, {v, axis});
            if (constructive_11(a, b)) return std::pair{v, axis};
            largest = std::pair{v, axis};
        }
    return largest;
}

}  // namespace

Code regular_11(int m, int n, const IngredientOptions& opts) {
    if (m < 1 || n < 1 || (static_cast<long long>(m) * n) % 6 != 1)
        throw std::invalid_argument("regular_11 needs mn = 1 (mod 6); got " + dims(m, n));
    const size_t size = static_cast<size_t>((static_cast<long long>(m) * n - 1) / 6);
    Code out;
    if (std::gcd(m, n) == 1) {
        out = csts_code(cyclic_sts(m * n), m, n);
    } else if (const auto split = split_11(m, n)) {
        // (1,v)- or (v,1)-regular by inflation, then the leave filled by CSTS(v)
        const auto [v, axis] = *split;
        const auto [a, b] = reduced(m, n, *split);
        const Code inner = axis == Axis::cols ? csts_code(cyclic_sts(v), 1, v) : csts_code(cyclic_sts(v), v, 1);
        out = fill(inflate(regular_11(a, b, opts), v, axis), inner);
    } else {
        out = searched(m, n, 1, 1, opts);
    }
    expect(out, size, {1, 1}, "regular_11");
    return out;
}

Code regular_13(int m, int n) {
    if (m < 1 || n < 3 || (m % 6 != 1 && m % 6 != 5) || n % 6 != 3 || (m == 1 && n == 9))
        throw std::invalid_argument("regular_13 needs m = 1,5 (mod 6), n = 3 (mod 6), (m,n) != (1,9); got " + dims(m, n));
    Code out;
    if (n == 3 || n == 9) {
        out = csts_code(cyclic_sts(m * n), m, n);
    } else {
        out = csts_code(cyclic_sts(n), 1, n);
        if (m > 1) out = fill(inflate(out, m, Axis::rows), regular_13(m, 3));
    }
    expect(out, static_cast<size_t>((static_cast<long long>(m) * n - 3) / 6), {1, 3}, "regular_13");
    return out;
}

Code regular_33(int m, int n, const IngredientOptions& opts) {
    if (m < 3 || n < 3 || m % 6 != 3 || n % 6 != 3)
        throw std::invalid_argument("regular_33 needs m, n = 3 (mod 6); got " + dims(m, n));
    Code out;
    if (m == 3 && n == 3) {
        out = Code{GridGroup(3, 3), 1, 1, {}};
    } else if (m == 9 && n == 3) {
        out = base_code(9, 3, 1, "(3,3)-regular");
    } else if (m == 9 && n == 9) {
        out = searched(9, 9, 3, 3, opts);
    } else if (n == 3 || (n == 9 && m != 9)) {
        out = transpose(regular_33(n, m, opts));
    } else if (m == 9) {
        // (3,n)-regular (9,n), then fill with (3,n)
        out = fill(inflate(regular_33(9, 3, opts), n / 3, Axis::cols), regular_33(3, n, opts));
    } else if (m == 3) {
        // (1,3)-regular (1,n) from CSTS(n), inflated by 3 along rows
        out = inflate(csts_code(cyclic_sts(n), 1, n), 3, Axis::rows);
    } else {
        // (m,3)-regular (m,n), then fill with (m,3)
        out = fill(inflate(regular_33(3, n, opts), m / 3, Axis::rows), regular_33(m, 3, opts));
    }
    expect(out, static_cast<size_t>((static_cast<long long>(m) * n - 9) / 6), {3, 3}, "regular_33");
    return out;
}

Code regular_13_la2(int m, int n) {
    if (m < 2 || n < 6 || (m % 12 != 2 && m % 12 != 10) || n % 12 != 6)
        throw std::invalid_argument("regular_13_la2 needs m = 2,10 (mod 12), n = 6 (mod 12); got " + dims(m, n));
    Code out;
    if (m == 2 && (n == 6 || n == 18)) {
        out = base_code(2, n, 2, "(1,3)-regular");
    } else {
        out = fill(double_code(regular_13(m / 2, n / 2)), base_code(2, 6, 2, "(1,3)-regular"));
    }
    expect(out, static_cast<size_t>((5LL * m * n - 12) / 24), {1, 3}, "regular_13_la2");
    return out;
}

}  // namespace oospc
