#pragma once
// Slow, independent reference computations used only by the tests.

#include "partalg/numeric.hpp"
#include "partalg/partition.hpp"

#include <functional>
#include <map>
#include <set>
#include <vector>

namespace oracles {

using partalg::BigInt;
using partalg::Partition;

// f^lam = sum over removable corners of f^(lam - corner).
inline BigInt f_by_corners(const Partition& lam) {
    static std::map<Partition, BigInt> memo;
    if (lam.size() <= 1) return 1;
    if (auto it = memo.find(lam); it != memo.end()) return it->second;
    BigInt total = 0;
    auto parts = lam.parts();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i + 1 < parts.size() && parts[i + 1] == parts[i]) continue;
        auto smaller = parts;
        --smaller[i];
        total += f_by_corners(Partition(smaller));
    }
    memo.emplace(lam, total);
    return total;
}

// Counts (k,l)-semistandard tableaux by filling cells one at a time.
// Entries 0..k-1 unprimed, k..k+l-1 primed.
inline long naive_hook_tableaux(const Partition& lam, int k, int l) {
    std::vector<std::pair<int, int>> cells;
    for (std::size_t i = 0; i < lam.length(); ++i)
        for (int j = 0; j < lam[i]; ++j) cells.emplace_back(static_cast<int>(i), j);
    std::vector<std::vector<int>> t(lam.length());
    for (std::size_t i = 0; i < lam.length(); ++i) t[i].assign(static_cast<std::size_t>(lam[i]), -1);
    long count = 0;
    std::function<void(std::size_t)> rec = [&](std::size_t c) {
        if (c == cells.size()) {
            ++count;
            return;
        }
        auto [i, j] = cells[c];
        for (int v = 0; v < k + l; ++v) {
            const bool primed = v >= k;
            if (j > 0) {
                int left = t[i][j - 1];
                if (primed ? left >= v : left > v) continue;
            }
            if (i > 0) {
                int up = t[i - 1][j];
                if (primed ? up > v : up >= v) continue;
            }
            t[i][j] = v;
            rec(c + 1);
            t[i][j] = -1;
        }
    };
    rec(0);
    return count;
}

// Murnaghan-Nakayama: chi^lam at the class of cycle type rho, via beta numbers.
inline long character(const Partition& lam, const std::vector<int>& rho) {
    if (lam.size() == 0) return 1;
    const int len = static_cast<int>(lam.length());
    std::set<int> beta;
    for (int i = 0; i < len; ++i) beta.insert(lam[static_cast<std::size_t>(i)] + (len - 1 - i));
    std::function<long(std::set<int>, std::size_t)> rec = [&](std::set<int> b, std::size_t idx) -> long {
        if (idx == rho.size()) return 1;
        const int r = rho[idx];
        long total = 0;
        for (int x : std::vector<int>(b.begin(), b.end())) {
            if (x - r < 0 || b.count(x - r)) continue;
            int between = 0;
            for (int y : b)
                if (y > x - r && y < x) ++between;
            auto nb = b;
            nb.erase(x);
            nb.insert(x - r);
            long sub = rec(nb, idx + 1);
            total += between % 2 == 0 ? sub : -sub;
        }
        return total;
    };
    return rec(beta, 0);
}

// z_rho = prod_i i^{m_i} m_i!
inline BigInt centralizer(const Partition& rho) {
    std::map<int, int> mult;
    for (int p : rho.parts()) ++mult[p];
    BigInt z = 1;
    for (auto [i, m] : mult) z *= partalg::power(static_cast<unsigned long>(i), static_cast<unsigned long>(m)) *
                                   partalg::factorial(static_cast<unsigned long>(m));
    return z;
}

// <chi^nu restricted to S_m x S_r, chi^mu x chi^lam>, summed over class pairs.
inline BigInt lr_by_characters(const Partition& mu, const Partition& lam, const Partition& nu) {
    if (nu.size() != mu.size() + lam.size()) return 0;
    partalg::Rational total = 0;
    for (const auto& a : partalg::enumerate(mu.size()))
        for (const auto& b : partalg::enumerate(lam.size())) {
            std::vector<int> joint = a.parts();
            joint.insert(joint.end(), b.parts().begin(), b.parts().end());
            const long v = character(nu, joint) * character(mu, a.parts()) * character(lam, b.parts());
            total += partalg::Rational(v) / partalg::Rational(centralizer(a) * centralizer(b));
        }
    total.canonicalize();
    return total.get_num();
}

} // namespace oracles
