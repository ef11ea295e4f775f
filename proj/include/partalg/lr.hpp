#pragma once

#include "partalg/numeric.hpp"
#include "partalg/partition.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <tuple>
#include <vector>

namespace partalg {

/// chi^mu (outer) chi^lam = sum_nu c^nu_{mu,lam} chi^nu. Only positive
/// coefficients are stored; every key has size `degree` and contains both factors.
struct LRExpansion {
    int degree = 0;
    std::map<Partition, BigInt> terms;

    BigInt coefficient(const Partition& nu) const {
        auto it = terms.find(nu);
        return it == terms.end() ? BigInt(0) : it->second;
    }

    friend bool operator==(const LRExpansion&, const LRExpansion&) = default;
};

namespace detail {

// Counts LR tableaux of shape nu/mu and content lam. Cells are filled in
// reverse reading order (rows top to bottom, each row right to left) so the
// lattice condition can be checked on every prefix.
class LRFiller {
public:
    LRFiller(const Partition& mu, const Partition& lam, const Partition& nu)
        : mu_(mu), lam_(lam), nu_(nu), count_(lam.length() + 1, 0) {
        for (std::size_t r = 0; r < nu.length(); ++r) {
            table_.emplace_back(static_cast<std::size_t>(nu[r]), 0);
            for (int c = nu[r] - 1; c >= mu[r]; --c) cells_.emplace_back(r, c);
        }
    }

    long count() { return fill(0); }

private:
    long fill(std::size_t idx) {
        if (idx == cells_.size()) return 1;
        auto [r, c] = cells_[idx];
        auto col = static_cast<std::size_t>(c);
        int hi = static_cast<int>(lam_.length());
        if (c + 1 < nu_[r]) hi = std::min(hi, table_[r][col + 1]);
        int lo = 1;
        if (r > 0 && c >= mu_[r - 1]) lo = table_[r - 1][col] + 1;
        long total = 0;
        for (int v = lo; v <= hi; ++v) {
            auto vi = static_cast<std::size_t>(v);
            if (count_[vi] >= lam_[vi - 1]) continue;
            if (v > 1 && count_[vi - 1] <= count_[vi]) continue;
            ++count_[vi];
            table_[r][col] = v;
            total += fill(idx + 1);
            --count_[vi];
        }
        table_[r][col] = 0;
        return total;
    }

    const Partition& mu_;
    const Partition& lam_;
    const Partition& nu_;
    std::vector<std::vector<int>> table_;
    std::vector<std::pair<std::size_t, int>> cells_;
    std::vector<int> count_;
};

class LRCache {
public:
    using Key = std::tuple<Partition, Partition, Partition>;

    static LRCache& instance() {
        static LRCache cache;
        return cache;
    }

    template <class F>
    BigInt get_or_compute(const Key& key, F&& compute) {
        {
            std::shared_lock lock(mutex_);
            if (auto it = table_.find(key); it != table_.end()) return it->second;
        }
        BigInt value = compute();
        std::unique_lock lock(mutex_);
        table_.emplace(key, value);
        return value;
    }

    void clear() {
        std::unique_lock lock(mutex_);
        table_.clear();
    }

private:
    std::shared_mutex mutex_;
    std::map<Key, BigInt> table_;
};

} // namespace detail

/// Littlewood-Richardson coefficient c^nu_{mu,lam}.
inline BigInt lr_coefficient(const Partition& mu, const Partition& lam, const Partition& nu) {
    if (nu.size() != mu.size() + lam.size()) return 0;
    if (!contained_in(mu, nu) || !contained_in(lam, nu)) return 0;
    // c^nu_{mu,lam} = c^nu_{lam,mu}; cache under the ordered pair.
    const Partition& a = mu <= lam ? mu : lam;
    const Partition& b = mu <= lam ? lam : mu;
    return detail::LRCache::instance().get_or_compute({a, b, nu}, [&] {
        return BigInt(detail::LRFiller(b, a, nu).count());
    });
}

inline LRExpansion outer_product(const Partition& mu, const Partition& lam) {
    LRExpansion out;
    out.degree = mu.size() + lam.size();
    for_each_partition(out.degree, std::nullopt, [&](const Partition& nu) {
        if (!contained_in(mu, nu) || !contained_in(lam, nu)) return;
        BigInt c = lr_coefficient(mu, lam, nu);
        if (c != 0) out.terms.emplace(nu, std::move(c));
    });
    return out;
}

} // namespace partalg
