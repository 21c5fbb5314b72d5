#include "oospc/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <limits>
#include <map>
#include <string>

#include "oospc/bounds.hpp"

namespace oospc {

std::vector<Candidate> enumerate_candidates(int m, int n, int lambda_a, const std::vector<GroupElement>& forbidden) {
    if (lambda_a < 1 || lambda_a > 3) throw std::invalid_argument("enumerate_candidates: lambda_a must be 1, 2 or 3");
    const GridGroup g(m, n);
    const int bits = g.order() - 1;
    const size_t words = static_cast<size_t>((bits + 63) / 64);
    std::vector<bool> banned(static_cast<size_t>(g.order()), false);
    for (const auto& f : forbidden) banned[static_cast<size_t>(g.index(g.reduce(f.x, f.y)))] = true;

    // support (as sorted element indices) -> least canonical codeword
    std::map<std::vector<int>, std::pair<Codeword, int>> by_support;
    const GroupElement zero{};
    for (int a = 1; a < g.order(); ++a) {
        for (int b = a + 1; b < g.order(); ++b) {
            const Codeword c{{zero, g.element(a), g.element(b)}};
            const Codeword canon = canonicalize(g, c);
            if (canon != c) continue;
            const auto profile = difference_profile(g, c);
            if (profile.lambda_x > lambda_a) continue;
            std::vector<int> idx;
            bool ok = true;
            for (const auto& d : profile.support) {
                const int i = g.index(d);
                if (banned[static_cast<size_t>(i)]) ok = false;
                idx.push_back(i - 1);
            }
            if (!ok) continue;
            auto [it, inserted] = by_support.try_emplace(idx, c, profile.lambda_x);
            if (!inserted && c < it->second.first) it->second = {c, profile.lambda_x};
        }
    }
    std::vector<Candidate> out;
    out.reserve(by_support.size());
    for (const auto& [idx, rep] : by_support) {
        Candidate cand{rep.first, std::vector<uint64_t>(words, 0), idx, rep.second};
        for (int i : idx) cand.support[static_cast<size_t>(i / 64)] |= uint64_t{1} << (i % 64);
        out.push_back(std::move(cand));
    }
    std::sort(out.begin(), out.end(), [](const Candidate& a, const Candidate& b) { return a.codeword < b.codeword; });
    return out;
}

namespace {

using Clock = std::chrono::steady_clock;

struct Problem {
    GridGroup group{1, 1};
    int lambda_a = 1;
    int elements = 0;  // number of nonzero elements
    std::vector<Candidate> cands;
    std::vector<std::vector<int>> by_elem;  // candidate ids containing each element
    std::vector<int> neg;                   // index of -e
    std::vector<bool> forbidden;
    bool perfect = false;
    int cap = 0;
};

// Shared between workers.
struct Shared {
    std::atomic<int> global_best{0};
    std::atomic<size_t> done_branch{std::numeric_limits<size_t>::max()};  // lowest branch that reached the goal
    std::atomic<bool> timed_out{false};
    std::atomic<uint64_t> nodes{0};
    std::optional<Clock::time_point> deadline;
};

class Worker {
public:
    Worker(const Problem& p, Shared& shared, size_t branch)
        : p_(p), sh_(shared), branch_(branch), alive_(p.cands.size(), 1), count_(static_cast<size_t>(p.elements), 0),
          free_(static_cast<size_t>(p.elements), 1), free_count_(p.elements) {
        for (const auto& c : p.cands) {
            ++by_size_[c.elements.size()];
            for (int e : c.elements) ++count_[static_cast<size_t>(e)];
        }
        for (int e = 0; e < p.elements; ++e)
            if (p.forbidden[static_cast<size_t>(e)]) free_[static_cast<size_t>(e)] = 0, --free_count_;
    }

    // Root options: candidate ids covering the branching element, then -1 for
    // "leave it" in max mode.
    std::vector<int> root_options() const {
        std::vector<int> out;
        const int e = branch_element();
        if (e < 0) return out;
        for (int c : p_.by_elem[static_cast<size_t>(e)])
            if (alive_[static_cast<size_t>(c)]) out.push_back(c);
        if (!p_.perfect) out.push_back(-1);
        return out;
    }

    void run_option(int option) {
        const int e = branch_element();
        if (e < 0) {
            record();
            return;
        }
        apply(e, option);
        if (p_.perfect)
            found_ = dfs_perfect();
        else
            dfs_max();
        if (p_.perfect && !found_) best_.clear();
    }

    int best_size() const { return best_size_; }
    const std::vector<int>& best() const { return best_; }
    bool found() const { return found_; }
    int free_count() const { return free_count_; }
    uint64_t nodes() const { return nodes_; }

private:
    int branch_element() const {
        if (p_.perfect) {
            int best = -1;
            int best_count = std::numeric_limits<int>::max();
            for (int e = 0; e < p_.elements; ++e) {
                if (!free_[static_cast<size_t>(e)]) continue;
                if (count_[static_cast<size_t>(e)] < best_count) best = e, best_count = count_[static_cast<size_t>(e)];
            }
            return best;
        }
        for (int e = 0; e < p_.elements; ++e)
            if (free_[static_cast<size_t>(e)]) return e;
        return -1;
    }

    void apply(int e, int option) {
        if (option >= 0) {
            cover(option);
            chosen_.push_back(option);
        } else {
            drop(e);
        }
    }

    bool should_stop() {
        if ((++nodes_ & 1023) == 0) {
            sh_.nodes.fetch_add(1024, std::memory_order_relaxed);
            if (sh_.deadline && Clock::now() > *sh_.deadline) sh_.timed_out = true;
        }
        return sh_.timed_out.load(std::memory_order_relaxed) ||
               sh_.done_branch.load(std::memory_order_relaxed) < branch_;
    }

    void kill(int c) {
        alive_[static_cast<size_t>(c)] = 0;
        const auto& cand = p_.cands[static_cast<size_t>(c)];
        --by_size_[cand.elements.size()];
        for (int e : cand.elements) --count_[static_cast<size_t>(e)];
        trail_.push_back(c);
    }

    void kill_containing(int e) {
        for (int c : p_.by_elem[static_cast<size_t>(e)])
            if (alive_[static_cast<size_t>(c)]) kill(c);
    }

    void cover(int c) {
        for (int e : p_.cands[static_cast<size_t>(c)].elements) {
            free_[static_cast<size_t>(e)] = 0;
            --free_count_;
            kill_containing(e);
        }
    }

    // Leaving e uncovered also leaves -e: every support is symmetric.
    void drop(int e) {
        const int ne = p_.neg[static_cast<size_t>(e)];
        free_[static_cast<size_t>(e)] = 0;
        --free_count_;
        if (ne != e) {
            free_[static_cast<size_t>(ne)] = 0;
            --free_count_;
        }
        kill_containing(e);
    }

    void undo(size_t mark, int e, int option) {
        while (trail_.size() > mark) {
            const int c = trail_.back();
            trail_.pop_back();
            alive_[static_cast<size_t>(c)] = 1;
            const auto& cand = p_.cands[static_cast<size_t>(c)];
            ++by_size_[cand.elements.size()];
            for (int x : cand.elements) ++count_[static_cast<size_t>(x)];
        }
        if (option >= 0) {
            chosen_.pop_back();
            for (int x : p_.cands[static_cast<size_t>(option)].elements) free_[static_cast<size_t>(x)] = 1, ++free_count_;
        } else {
            const int ne = p_.neg[static_cast<size_t>(e)];
            free_[static_cast<size_t>(e)] = 1, ++free_count_;
            if (ne != e) free_[static_cast<size_t>(ne)] = 1, ++free_count_;
        }
    }

    // Most disjoint supports that fit in the free elements, taking the
    // smallest live sizes first.
    int capacity() const {
        int rem = free_count_;
        int k = 0;
        for (size_t s = 2; s <= 6 && rem >= static_cast<int>(s); ++s) {
            const int take = std::min(by_size_[s], rem / static_cast<int>(s));
            k += take;
            rem -= take * static_cast<int>(s);
        }
        return k;
    }

    void record() {
        const int cur = static_cast<int>(chosen_.size());
        if (cur <= best_size_) return;
        best_size_ = cur;
        best_ = chosen_;
        int g = sh_.global_best.load();
        while (cur > g && !sh_.global_best.compare_exchange_weak(g, cur)) {
        }
        if (cur >= p_.cap) {
            size_t b = sh_.done_branch.load();
            while (branch_ < b && !sh_.done_branch.compare_exchange_weak(b, branch_)) {
            }
        }
    }

    void dfs_max() {
        if (should_stop()) return;
        record();
        if (best_size_ >= p_.cap) return;
        const int cur = static_cast<int>(chosen_.size());
        const int ub = std::min(cur + capacity(), p_.cap);
        if (ub <= best_size_ || ub < sh_.global_best.load(std::memory_order_relaxed)) return;
        const int e = branch_element();
        if (e < 0) return;
        const auto& options = p_.by_elem[static_cast<size_t>(e)];
        for (int c : options) {
            if (!alive_[static_cast<size_t>(c)]) continue;
            const size_t mark = trail_.size();
            apply(e, c);
            dfs_max();
            undo(mark, e, c);
            if (best_size_ >= p_.cap) return;
        }
        const size_t mark = trail_.size();
        apply(e, -1);
        dfs_max();
        undo(mark, e, -1);
    }

    bool dfs_perfect() {
        if (free_count_ == 0) {
            best_ = chosen_;
            best_size_ = static_cast<int>(chosen_.size());
            size_t b = sh_.done_branch.load();
            while (branch_ < b && !sh_.done_branch.compare_exchange_weak(b, branch_)) {
            }
            return true;
        }
        if (should_stop()) return false;
        const int e = branch_element();
        if (count_[static_cast<size_t>(e)] == 0) return false;
        for (int c : p_.by_elem[static_cast<size_t>(e)]) {
            if (!alive_[static_cast<size_t>(c)]) continue;
            const size_t mark = trail_.size();
            apply(e, c);
            if (dfs_perfect()) return true;
            undo(mark, e, c);
        }
        return false;
    }

    const Problem& p_;
    Shared& sh_;
    size_t branch_;
    std::vector<char> alive_;
    std::vector<int> count_;
    std::vector<char> free_;
    int free_count_;
    std::array<int, 7> by_size_{};
    std::vector<int> trail_;
    std::vector<int> chosen_;
    std::vector<int> best_;
    int best_size_ = 0;
    bool found_ = false;
    uint64_t nodes_ = 0;
};

int size_cap(int m, int n, int lambda_a) {
    const long long v = static_cast<long long>(m) * n;
    if (lambda_a == 1) return v > 3 ? static_cast<int>(johnson(v, 3, 1)) : 0;
    return static_cast<int>(theta_best_upper(m, n, lambda_a));
}

Problem build_problem(int m, int n, int lambda_a, const SearchOptions& opt) {
    Problem p;
    p.group = GridGroup(m, n);
    p.lambda_a = lambda_a;
    p.elements = p.group.order() - 1;
    std::vector<GroupElement> forbidden;
    if (opt.prescribed_leave) {
        const auto [s, t] = *opt.prescribed_leave;
        for (const auto& e : subgroup(p.group, s, t))
            if (e != GroupElement{}) forbidden.push_back(e);
        p.perfect = true;
    }
    p.cands = enumerate_candidates(m, n, lambda_a, forbidden);
    p.by_elem.resize(static_cast<size_t>(p.elements));
    for (size_t c = 0; c < p.cands.size(); ++c)
        for (int e : p.cands[c].elements) p.by_elem[static_cast<size_t>(e)].push_back(static_cast<int>(c));
    p.neg.resize(static_cast<size_t>(p.elements));
    for (int e = 0; e < p.elements; ++e) p.neg[static_cast<size_t>(e)] = p.group.index(p.group.negate(p.group.element(e + 1))) - 1;
    p.forbidden.assign(static_cast<size_t>(p.elements), false);
    for (const auto& f : forbidden) p.forbidden[static_cast<size_t>(p.group.index(f) - 1)] = true;
    p.cap = p.perfect || !opt.cap_by_bound ? std::numeric_limits<int>::max() : size_cap(m, n, lambda_a);
    return p;
}

Code witness_code(const Problem& p, const std::vector<int>& chosen) {
    Code out{p.group, p.lambda_a, 1, {}};
    for (int c : chosen) out.codewords.push_back(p.cands[static_cast<size_t>(c)].codeword);
    return out;
}

std::string label(int m, int n, int lambda_a) {
    return "(" + std::to_string(m) + "," + std::to_string(n) + ",3," + std::to_string(lambda_a) + ",1)";
}

}  // namespace

SearchResult max_code(int m, int n, int lambda_a, const SearchOptions& options) {
    if (lambda_a < 1 || lambda_a > 3) throw std::invalid_argument("max_code: lambda_a must be 1, 2 or 3");
    const auto start = Clock::now();
    GridGroup g(m, n);
    if (options.prescribed_leave) {
        const auto [s, t] = *options.prescribed_leave;
        if (s < 1 || t < 1 || m % s != 0 || n % t != 0)
            throw std::invalid_argument("prescribed leave (" + std::to_string(s) + "," + std::to_string(t) +
                                        ") is not a subgroup");
    }
    const Problem p = build_problem(m, n, lambda_a, options);

    Shared shared;
    if (options.timeout) shared.deadline = start + *options.timeout;
    const bool hinted = options.lower_bound_hint && !p.perfect;
    if (hinted) shared.global_best = *options.lower_bound_hint;

    const Worker root(p, shared, 0);
    const std::vector<int> opts = root.root_options();
    const size_t k = opts.size();
    std::vector<int> sizes(k, 0);
    std::vector<std::vector<int>> witnesses(k);
    std::vector<char> found(k, 0);
    std::atomic<uint64_t> nodes{0};

    auto run = [&](size_t i) {
        if (shared.done_branch.load() < i || shared.timed_out.load()) return;
        Worker w(p, shared, i);
        w.run_option(opts[i]);
        sizes[i] = w.best_size();
        witnesses[i] = w.best();
        found[i] = w.found();
        nodes += w.nodes();
    };
    if (options.parallel) {
#pragma omp parallel for schedule(dynamic, 1)
        for (long i = 0; i < static_cast<long>(k); ++i) run(static_cast<size_t>(i));
    } else {
        for (size_t i = 0; i < k; ++i) run(i);
    }

    SearchResult out;
    out.nodes_explored = nodes.load();
    out.proven_optimal = !shared.timed_out.load();
    out.witness = Code{p.group, lambda_a, 1, {}};

    if (p.perfect) {
        if (root.free_count() == 0) {
            out.elapsed = Clock::now() - start;
            return out;
        }
        for (size_t i = 0; i < k; ++i) {
            if (!found[i]) continue;
            out.witness = witness_code(p, witnesses[i]);
            out.best_size = static_cast<int>(out.witness.size());
            out.proven_optimal = true;
            out.elapsed = Clock::now() - start;
            return out;
        }
        const auto [s, t] = *options.prescribed_leave;
        if (shared.timed_out.load())
            throw SearchTimeout("timed out looking for an (" + std::to_string(s) + "," + std::to_string(t) +
                                ")-regular " + label(m, n, lambda_a) + " code");
        throw NoSuchDesign("no (" + std::to_string(s) + "," + std::to_string(t) + ")-regular " + label(m, n, lambda_a) +
                           " code exists");
    }

    const int best = k == 0 ? 0 : *std::max_element(sizes.begin(), sizes.end());
    const size_t pick = static_cast<size_t>(std::find(sizes.begin(), sizes.end(), best) - sizes.begin());
    if (hinted && best < *options.lower_bound_hint && out.proven_optimal) {
        SearchOptions again = options;
        again.lower_bound_hint.reset();
        if (options.timeout) {
            const auto spent = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
            again.timeout = std::max(std::chrono::milliseconds(1), *options.timeout - spent);
        }
        SearchResult r = max_code(m, n, lambda_a, again);
        r.nodes_explored += out.nodes_explored;
        r.elapsed = Clock::now() - start;
        return r;
    }
    out.best_size = best;
    if (pick < k) out.witness = witness_code(p, witnesses[pick]);
    if (!verify_diff(out.witness)) throw std::logic_error("max_code produced an invalid witness");
    out.elapsed = Clock::now() - start;
    return out;
}

SearchResult search_regular(int m, int n, int lambda_a, int s, int t, std::optional<std::chrono::milliseconds> timeout,
                            bool parallel) {
    SearchOptions opt;
    opt.timeout = timeout;
    opt.prescribed_leave = std::pair{s, t};
    opt.parallel = parallel;
    SearchResult r = max_code(m, n, lambda_a, opt);
    if (!verify_diff(r.witness) || regularity(r.witness) != std::pair{s, t})
        throw std::logic_error("search_regular produced a code with the wrong leave");
    return r;
}

}  // namespace oospc
