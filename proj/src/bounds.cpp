#include "oospc/bounds.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "oospc/group.hpp"

namespace oospc {

namespace {

void require_lambda23(int lambda_a) {
    if (lambda_a != 2 && lambda_a != 3)
        throw std::invalid_argument("lambda_a must be 2 or 3, got " + std::to_string(lambda_a));
}

void require_positive(int m, int n) {
    if (m < 1 || n < 1) throw std::invalid_argument("m and n must be positive");
}

bool is_pair(int m, int n, int a, int b) { return (m == a && n == b) || (m == b && n == a); }

}  // namespace

long long johnson(long long v, int k, int lam) {
    if (!(v > k && k >= lam + 1 && lam + 1 >= 2))
        throw std::invalid_argument("johnson: need v > k >= lam+1 >= 2");
    long long acc = (v - lam) / (k - lam);
    for (int i = lam - 1; i >= 1; --i) acc = (v - i) * acc / (k - i);
    return acc / k;
}

long long bound_lambda_gap(int m, int n, int k, int lambda_a, int lambda_c) {
    require_positive(m, n);
    if (lambda_c < 1 || lambda_a <= lambda_c)
        throw std::invalid_argument("bound_lambda_gap: need lambda_a > lambda_c >= 1");
    if (k <= lambda_c) throw std::invalid_argument("bound_lambda_gap: need k > lambda_c");
    const long long v = static_cast<long long>(m) * n;
    long long num = lambda_a;
    long long den = k;
    for (int i = 1; i <= lambda_c; ++i) {
        num *= v - i;
        den *= k - i;
    }
    return num / den;
}

long long bound_sawa(int m, int n) {
    require_positive(m, n);
    const long long v = static_cast<long long>(m) * n;
    return v % 4 == 0 ? v / 4 : (v - 1) / 4;
}

int xi(int m, int n) {
    require_positive(m, n);
    if ((static_cast<long long>(m) * n) % 3 != 0) return 0;
    return gcd3(m, n, 3) == 3 ? 4 : 1;
}

int omega_count(int m, int n, int lambda_a) {
    require_lambda23(lambda_a);
    return lambda_a == 2 ? 0 : xi(m, n);
}

long long theta_upper(int m, int n, int lambda_a) {
    require_lambda23(lambda_a);
    require_positive(m, n);
    const long long v = static_cast<long long>(m) * n;
    const long long w = omega_count(m, n, lambda_a);
    const int g2 = gcd3(m, n, 2);
    const int g4 = gcd3(m, n, 4);
    const int g8 = gcd3(m, n, 8);
    const bool la2 = lambda_a == 2;

    // Guards in display order, sporadic pairs first.
    if (is_pair(m, n, 12, 3)) return 7 + w / 2;
    if (is_pair(m, n, 2, 4)) return 1;
    if (!la2 && (is_pair(m, n, 2, 12) || is_pair(m, n, 4, 6) || is_pair(m, n, 6, 12)))
        return (5 * v + 8 + 8 * w) / 24;
    if (v % 4 != 0) return (v + 2 * w) / 4;
    if (g2 == 1) {
        if (v % 8 == 0) return (7 * v + 16 * w) / 32;
        return (7 * v + 4 + 16 * w) / 32;
    }
    if (v % 8 == 4) return (5 * v + 4 + 8 * w) / 24;
    if (v % 16 == 8) return (13 * v + 40 + 32 * w) / 64;
    if (la2 && v % 64 == 32 && g8 == 4) return (13 * v - 32) / 64;
    if (v % 32 == 0 || (v % 32 == 16 && g4 == 2)) return (13 * v + 32 + 32 * w) / 64;
    if (la2 && v % 192 == 144 && g4 == 4) return (13 * v - 16) / 64;
    // remaining: mn = 16 (mod 32), gcd(m,n,4) = 4
    return (13 * v + 48 + 32 * w) / 64;
}

long long theta_best_upper(int m, int n, int lambda_a) {
    require_lambda23(lambda_a);
    require_positive(m, n);
    const long long own = theta_upper(m, n, lambda_a);
    if ((static_cast<long long>(m) * n) % 3 == 0) return own;
    return std::min(own, theta_upper(m, n, lambda_a == 2 ? 3 : 2));
}

long long theta_exact_2mod4(int m, int n, int lambda_a) {
    require_lambda23(lambda_a);
    if (m < 1 || n < 1 || m % 4 != 2 || n % 4 != 2)
        throw std::invalid_argument("theta_exact_2mod4 needs m = n = 2 (mod 4)");
    const long long v = static_cast<long long>(m) * n;
    return (5 * v + 4 + 8 * omega_count(m, n, lambda_a)) / 24;
}

long long theta_lambda1(int m, int n) {
    require_positive(m, n);
    const long long v = static_cast<long long>(m) * n;
    if (v < 4) return 0;
    const long long j = johnson(v, 3, 1);
    const int g4 = gcd3(m, n, 4);
    const long long r24 = v % 24;
    const bool defect = r24 == 14 || r24 == 20 || ((r24 == 8 || r24 == 16) && g4 == 2) || (v % 6 == 2 && g4 == 4);
    return defect ? j - 1 : j;
}

long long phi_1d(long long v, int lambda_a) {
    require_lambda23(lambda_a);
    if (v < 4 || v % 4 != 0) throw std::invalid_argument("phi_1d needs v = 0 (mod 4)");
    if (lambda_a == 2) {
        if (v == 64) return 13;
        if (v % 8 == 0) return 7 * v / 32;
        return (7 * v + 4) / 32;
    }
    const long long r = v % 24;
    if (v == 48) return 10;
    if (v == 64) return 13;
    if (r == 0) return (7 * v + 16) / 32;
    if (r == 4 || r == 20) return (7 * v + 4) / 32;
    if (r == 8 || r == 16) return 7 * v / 32;
    return (7 * v + 20) / 32;  // r == 12
}

}  // namespace oospc
