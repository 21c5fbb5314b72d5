// bounds.hpp
// Closed-form size bounds and exact values for weight-3 codes with
// cross-correlation 1. Integer arithmetic only.
#pragma once

namespace oospc {

/// Nested-floor Johnson bound J(v,k,lam) = floor(1/k floor((v-1)/(k-1) ...
/// floor((v-lam)/(k-lam)))). Requires v > k >= lam+1 >= 2.
long long johnson(long long v, int k, int lam);

/// floor(lambda_a (mn-1)...(mn-lambda_c) / (k (k-1) ... (k-lambda_c))),
/// valid when lambda_a > lambda_c >= 1.
long long bound_lambda_gap(int m, int n, int k, int lambda_a, int lambda_c);

/// mn/4 when 4 | mn, else floor((mn-1)/4). Upper bound for lambda_a = 2.
long long bound_sawa(int m, int n);

/// Number of subgroups of order 3 in Z_m x Z_n (0, 1 or 4).
int xi(int m, int n);

/// 0 for lambda_a = 2, xi(m,n) for lambda_a = 3.
int omega_count(int m, int n, int lambda_a);

/// Piecewise upper bound on the largest (m,n,3,lambda_a,1) code, including
/// the sporadic pairs (2,4), (3,12) and the lambda_a = 2 refinements.
long long theta_upper(int m, int n, int lambda_a);

/// theta_upper, capped by the other lambda_a's bound when 3 does not divide
/// mn (then lambda(X) <= 2 for every 3-subset and both problems coincide).
long long theta_best_upper(int m, int n, int lambda_a);

/// floor((5mn + 4 + 8 omega)/24) for m = n = 2 (mod 4): the exact maximum.
long long theta_exact_2mod4(int m, int n, int lambda_a);

/// Largest (m,n,3,1) code size (J(mn,3,1) minus the known defects).
long long theta_lambda1(int m, int n);

/// Largest 1-D (v,3,lambda_a,1) code size for v = 0 (mod 4).
long long phi_1d(long long v, int lambda_a);

}  // namespace oospc
