#pragma once

#include "partalg/numeric.hpp"
#include "partalg/partition.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <span>
#include <tuple>
#include <vector>

namespace partalg {

/// f^lam, the number of standard Young tableaux (hook-length formula).
inline BigInt f_lambda(const Partition& lam) {
    const Partition conj = conjugate(lam);
    BigInt hooks = 1;
    for (std::size_t i = 0; i < lam.length(); ++i)
        for (int j = 0; j < lam[i]; ++j) {
            int arm = lam[i] - j - 1;
            int leg = conj[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1;
            hooks *= arm + leg + 1;
        }
    return factorial(static_cast<unsigned long>(lam.size())) / hooks;
}

namespace detail {

// One column of a (k,l)-semistandard tableau, top to bottom. Entries 1..k are
// unprimed, k+1..k+l stand for 1'..l'. Unprimed entries strictly increase down
// the column and sit above the primed ones, which weakly increase.
using Column = std::vector<int>;

inline std::vector<Column> column_fillings(int height, int k, int l) {
    std::vector<Column> out;
    Column cur;
    // primed part: weakly increasing values in k+1..k+l
    auto primed = [&](auto&& self, int remaining, int min_value) -> void {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        for (int v = min_value; v <= k + l; ++v) {
            cur.push_back(v);
            self(self, remaining - 1, v);
            cur.pop_back();
        }
    };
    // unprimed part: strictly increasing values in 1..k, then switch to primed
    auto unprimed = [&](auto&& self, int remaining, int min_value) -> void {
        primed(primed, remaining, k + 1);
        if (remaining == 0) return;
        for (int v = min_value; v <= k; ++v) {
            cur.push_back(v);
            self(self, remaining - 1, v + 1);
            cur.pop_back();
        }
    };
    unprimed(unprimed, height, 1);
    return out;
}

// Row condition between horizontally adjacent cells: unprimed entries weakly
// increase along a row, primed entries strictly increase.
inline bool rows_compatible(const Column& left, const Column& right, int k) {
    for (std::size_t r = 0; r < right.size(); ++r) {
        int a = left[r], b = right[r];
        if (a <= k ? b < a : b <= a) return false;
    }
    return true;
}

} // namespace detail

/// Generating sum over (k,l)-semistandard tableaux of shape lam, where each
/// tableau contributes the product of weight(entry) over its cells. Runs a
/// transfer over columns: the state is the filling of the current column.
/// Only the first l columns can be taller than k, so the state spaces stay
/// small even for long shapes.
template <class T, class Weight>
T hook_tableau_sum(const Partition& lam, int k, int l, Weight&& weight) {
    if (!in_hook(lam, k, l)) return T(0);
    if (lam.empty()) return T(1);
    const Partition conj = conjugate(lam);

    std::map<int, std::vector<detail::Column>> fillings_by_height;
    auto fillings = [&](int h) -> const std::vector<detail::Column>& {
        auto it = fillings_by_height.find(h);
        if (it == fillings_by_height.end())
            it = fillings_by_height.emplace(h, detail::column_fillings(h, k, l)).first;
        return it->second;
    };
    auto column_weight = [&](const detail::Column& col) {
        T w(1);
        for (int v : col) w *= weight(v);
        return w;
    };

    const auto* prev_cols = &fillings(conj[0]);
    std::vector<T> prev;
    prev.reserve(prev_cols->size());
    for (const auto& col : *prev_cols) prev.push_back(column_weight(col));

    for (std::size_t c = 1; c < conj.length(); ++c) {
        const auto& cols = fillings(conj[c]);
        std::vector<T> next;
        next.reserve(cols.size());
        for (const auto& col : cols) {
            T acc(0);
            for (std::size_t i = 0; i < prev_cols->size(); ++i)
                if (prev[i] != 0 && detail::rows_compatible((*prev_cols)[i], col, k)) acc += prev[i];
            if (acc != 0) acc *= column_weight(col);
            next.push_back(std::move(acc));
        }
        prev = std::move(next);
        prev_cols = &cols;
    }
    T total(0);
    for (const auto& v : prev) total += v;
    return total;
}

namespace detail {

class SchurDimCache {
public:
    using Key = std::tuple<Partition, int, int>;

    static SchurDimCache& instance() {
        static SchurDimCache cache;
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

private:
    std::shared_mutex mutex_;
    std::map<Key, BigInt> table_;
};

} // namespace detail

/// dim V^lam_{k,l}: the number of (k,l)-semistandard tableaux of shape lam.
inline BigInt schur_dim(const Partition& lam, int k, int l) {
    if (k < 0 || l < 0) throw InvalidArgument("schur_dim: k and l must be nonnegative");
    if (!in_hook(lam, k, l)) return 0;
    return detail::SchurDimCache::instance().get_or_compute({lam, k, l}, [&] {
        return hook_tableau_sum<BigInt>(lam, k, l, [](int) { return BigInt(1); });
    });
}

/// HS_lam(xs; ys): the hook Schur function at a rational point, k = |xs|, l = |ys|.
inline Rational hs_eval(const Partition& lam, std::span<const Rational> xs,
                        std::span<const Rational> ys) {
    const int k = static_cast<int>(xs.size());
    const int l = static_cast<int>(ys.size());
    return hook_tableau_sum<Rational>(lam, k, l, [&](int v) -> const Rational& {
        return v <= k ? xs[static_cast<std::size_t>(v - 1)] : ys[static_cast<std::size_t>(v - k - 1)];
    });
}

/// dim W_lam = f^lam * dim V^lam_{k,l}.
inline BigInt w_dim(const Partition& lam, int k, int l) { return f_lambda(lam) * schur_dim(lam, k, l); }

struct DimensionRecord {
    Partition lambda;
    BigInt f;
    BigInt schur_dim;
    BigInt w_dim;
};

inline DimensionRecord dimension_record(const Partition& lam, int k, int l) {
    DimensionRecord rec{lam, f_lambda(lam), schur_dim(lam, k, l), 0};
    rec.w_dim = rec.f * rec.schur_dim;
    return rec;
}

} // namespace partalg
