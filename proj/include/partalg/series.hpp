#pragma once

#include "partalg/dims.hpp"
#include "partalg/filter.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace partalg {

/// d_0 ... d_N with d_n = dim A_Omega(n).
struct DimensionSeries {
    Filter filter;
    Hook ambient;
    std::vector<BigInt> values;
};

/// dim A_Omega(n) = sum of dim W_lam over lam ⊢ n in H(k, l) outside Omega.
inline BigInt dim_quotient(const Filter& omega, int n) {
    const Hook h = omega.require_ambient("dim_quotient");
    BigInt total = 0;
    for (const auto& lam : complement_at(omega, n)) total += w_dim(lam, h.k, h.l);
    return total;
}

/// dim I_Omega(n) = sum of dim W_lam over lam ⊢ n in Omega.
inline BigInt dim_ideal(const Filter& omega, int n) {
    const Hook h = omega.require_ambient("dim_ideal");
    BigInt total = 0;
    for_each_partition(n, h, [&](const Partition& lam) {
        if (omega.member(lam)) total += w_dim(lam, h.k, h.l);
    });
    return total;
}

/// d_0 ... d_{n_max}. With jobs > 1 the per-shape dimensions are computed on
/// worker threads; the reduction always runs in enumeration order.
inline DimensionSeries series(const Filter& omega, int n_max, unsigned jobs = 1) {
    const Hook h = omega.require_ambient("series");
    DimensionSeries out{omega, h, {}};
    if (n_max < 0) return out;

    std::vector<std::pair<int, Partition>> work;
    for (int n = 0; n <= n_max; ++n)
        for (auto& lam : complement_at(omega, n)) work.emplace_back(n, std::move(lam));

    std::vector<BigInt> dims(work.size());
    auto compute_range = [&](std::size_t begin, std::size_t step) {
        for (std::size_t i = begin; i < work.size(); i += step) dims[i] = w_dim(work[i].second, h.k, h.l);
    };
    jobs = std::max(1u, jobs);
    if (jobs == 1) {
        compute_range(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(compute_range, j, jobs);
        for (auto& t : pool) t.join();
    }

    out.values.assign(static_cast<std::size_t>(n_max) + 1, BigInt(0));
    for (std::size_t i = 0; i < work.size(); ++i) out.values[static_cast<std::size_t>(work[i].first)] += dims[i];
    return out;
}

struct GrowthReport {
    int alpha = 0;
    int n_max = 0;
    /// log(d_N) / N; absent when d_N = 0 or N = 0.
    std::optional<double> slope;
    std::optional<int> nilpotency;
    bool pass = false;
    std::string detail;
    std::vector<BigInt> values;
};

/// Checks the growth exponent against the computed series:
///  - alpha = 0: d_n vanishes from the nilpotency bound on;
///  - alpha = 1: d_n ≤ (n+1)^((k+1)(l+1)) for every computed n;
///  - alpha ≥ 2: |log(d_N) / (N log alpha) - 1| ≤ 0.15.
inline GrowthReport verify_growth(const Filter& omega, int n_max, unsigned jobs = 1) {
    constexpr double kSlopeTolerance = 0.15;
    const Hook h = omega.require_ambient("verify_growth");
    GrowthReport rep;
    rep.alpha = exp_growth(omega);
    rep.n_max = n_max;
    rep.nilpotency = nilpotency_bound(omega);
    rep.values = series(omega, n_max, jobs).values;
    const BigInt& last = rep.values.back();
    if (n_max > 0 && last > 0) rep.slope = log_of(last) / n_max;

    if (rep.alpha == 0) {
        int start = rep.nilpotency.value_or(0);
        rep.pass = true;
        for (int n = start; n <= n_max; ++n)
            if (rep.values[static_cast<std::size_t>(n)] != 0) {
                rep.pass = false;
                rep.detail = "d_" + std::to_string(n) + " != 0 past the nilpotency bound";
                break;
            }
        if (rep.pass) rep.detail = "d_n = 0 for n >= " + std::to_string(start);
    } else if (rep.alpha == 1) {
        const unsigned long degree = static_cast<unsigned long>((h.k + 1) * (h.l + 1));
        rep.pass = true;
        for (int n = 0; n <= n_max; ++n)
            if (rep.values[static_cast<std::size_t>(n)] > power(static_cast<unsigned long>(n) + 1, degree)) {
                rep.pass = false;
                rep.detail = "d_" + std::to_string(n) + " exceeds (n+1)^" + std::to_string(degree);
                break;
            }
        if (rep.pass) rep.detail = "d_n <= (n+1)^" + std::to_string(degree) + " for all n <= " + std::to_string(n_max);
    } else {
        if (rep.slope) {
            double ratio = *rep.slope / std::log(static_cast<double>(rep.alpha));
            rep.pass = std::abs(ratio - 1.0) <= kSlopeTolerance;
            rep.detail = "slope/log(alpha) = " + std::to_string(ratio);
        } else {
            rep.detail = "d_N = 0 but alpha >= 2";
        }
    }
    return rep;
}

} // namespace partalg
