#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <string>

#include "oospc/constructions.hpp"

namespace oospc {

namespace {

// Partition of the half-range {1..h} (minus v/3) into triples {a,b,c} with
// a+b = c or a+b+c = v. Branches on the element with the fewest completions;
// a run that exceeds its node budget restarts with a reshuffled option order.
class TripleSolver {
public:
    explicit TripleSolver(int v) : v_(v), h_((v - 1) / 2), used_(static_cast<size_t>(h_) + 1, 0) {
        if (v % 6 == 3) used_[static_cast<size_t>(v / 3)] = 1;
        remaining_ = h_ - (v % 6 == 3 ? 1 : 0);
    }

    bool solve() {
        std::mt19937 rng(static_cast<unsigned>(v_));
        for (long long budget = 4LL * h_ + 16;; budget += budget / 8) {
            budget_ = budget;
            if (descend(rng)) return true;
            if (budget_ > 0) return false;  // tree exhausted within budget
        }
    }

    std::vector<std::array<int, 3>> blocks() const { return blocks_; }

private:
    bool free(int a) const { return a >= 1 && a <= h_ && !used_[static_cast<size_t>(a)]; }

    // Pairs {y,z} completing x to a triple; each block is {0, a, a+b}.
    void completions(int x, std::vector<std::array<int, 4>>& out) const {
        out.clear();
        for (int y = 1; y <= h_; ++y) {
            if (y == x || !free(y)) continue;
            const int sum = x + y;
            if (y < x) {
                const int d = x - y;  // d + y = x
                if (d < y && free(d)) out.push_back({y, d, d, y});
            }
            if (sum <= h_ && free(sum)) out.push_back({y, sum, x, y});  // x + y = sum
            const int rest = v_ - sum;  // x + y + rest = v
            if (rest > y && free(rest) && rest != x) out.push_back({y, rest, x, y});
        }
    }

    bool descend(std::mt19937& rng) {
        if (remaining_ == 0) return true;
        if (--budget_ < 0) return false;
        int pick = -1;
        std::vector<std::array<int, 4>> best, cur;
        for (int x = h_; x >= 1; --x) {
            if (!free(x)) continue;
            completions(x, cur);
            if (pick < 0 || cur.size() < best.size()) pick = x, best.swap(cur);
            if (best.empty()) return false;
        }
        std::shuffle(best.begin(), best.end(), rng);
        for (const auto& [y, z, a, b] : best) {
            take(pick), take(y), take(z);
            blocks_.push_back({0, a, a + b});
            if (descend(rng)) return true;
            blocks_.pop_back();
            release(pick), release(y), release(z);
            if (budget_ < 0) return false;
        }
        return false;
    }

    void take(int a) { used_[static_cast<size_t>(a)] = 1, --remaining_; }
    void release(int a) { used_[static_cast<size_t>(a)] = 0, ++remaining_; }

    int v_;
    int h_;
    int remaining_;
    long long budget_ = 0;
    std::vector<char> used_;
    std::vector<std::array<int, 3>> blocks_;
};

std::vector<int> sts_leave(int v) {
    if (v % 6 == 3) return {v / 3, 2 * v / 3};
    return {};
}

}  // namespace

bool verify_csts(const CstsBlocks& sts) {
    const int v = sts.v;
    if (v < 1) return false;
    std::vector<int> hits(static_cast<size_t>(v), 0);
    for (const auto& b : sts.blocks) {
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                if (i != j) ++hits[static_cast<size_t>(mod(b[i] - b[j], v))];
    }
    std::vector<bool> in_leave(static_cast<size_t>(v), false);
    for (int l : sts.leave) {
        if (l <= 0 || l >= v) return false;
        in_leave[static_cast<size_t>(l)] = true;
    }
    if (hits[0] != 0) return false;
    for (int d = 1; d < v; ++d)
        if (hits[static_cast<size_t>(d)] != (in_leave[static_cast<size_t>(d)] ? 0 : 1)) return false;
    return true;
}

CstsBlocks cyclic_sts(int v) {
    if (v < 1 || (v % 6 != 1 && v % 6 != 3))
        throw NoSuchDesign("no cyclic STS(" + std::to_string(v) + "): need v = 1, 3 (mod 6)");
    if (v == 9) throw NoSuchDesign("no cyclic STS(9) exists");

    static std::mutex mu;
    static std::map<int, CstsBlocks> memo;
    {
        std::lock_guard lock(mu);
        if (auto it = memo.find(v); it != memo.end()) return it->second;
    }
    TripleSolver solver(v);
    if (!solver.solve()) throw NoSuchDesign("difference-triple search failed for v = " + std::to_string(v));
    CstsBlocks out{v, solver.blocks(), sts_leave(v)};
    if (!verify_csts(out)) throw std::logic_error("cyclic_sts produced an invalid system for v = " + std::to_string(v));
    std::lock_guard lock(mu);
    memo.emplace(v, out);
    return out;
}

Code csts_code(const CstsBlocks& sts, int m, int n) {
    if (m < 1 || n < 1 || static_cast<long long>(m) * n != sts.v || std::gcd(m, n) != 1)
        throw std::invalid_argument("csts_code: need coprime m, n with mn = v");
    if (!verify_csts(sts)) throw std::invalid_argument("csts_code: block system does not verify");
    GridGroup g(m, n);
    Code out{g, 1, 1, {}};
    for (const auto& b : sts.blocks) {
        Codeword c;
        for (size_t i = 0; i < 3; ++i) c.elements[i] = g.reduce(b[i], b[i]);
        out.codewords.push_back(c);
    }
    return out;
}

DiffMatrix cdm(int v) {
    if (v < 1 || v % 2 == 0) throw NoSuchDesign("no (" + std::to_string(v) + ",3,1) difference matrix of (0,i,2i) form: v must be odd");
    DiffMatrix d{v, {}};
    for (int r = 0; r < 3; ++r) {
        d.rows[static_cast<size_t>(r)].resize(static_cast<size_t>(v));
        for (int i = 0; i < v; ++i) d.rows[static_cast<size_t>(r)][static_cast<size_t>(i)] = (r * i) % v;
    }
    if (!verify_cdm(d)) throw std::logic_error("cdm produced an invalid matrix");
    return d;
}

bool verify_cdm(const DiffMatrix& d) {
    const int v = d.v;
    if (v < 1) return false;
    for (const auto& row : d.rows)
        if (static_cast<int>(row.size()) != v) return false;
    for (size_t a = 0; a < 3; ++a) {
        for (size_t b = a + 1; b < 3; ++b) {
            std::vector<bool> seen(static_cast<size_t>(v), false);
            for (size_t i = 0; i < static_cast<size_t>(v); ++i) {
                auto s = seen[static_cast<size_t>(mod(d.rows[b][i] - d.rows[a][i], v))];
                if (s) return false;
                s = true;
            }
        }
    }
    return true;
}

}  // namespace oospc
