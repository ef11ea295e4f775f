#pragma once

#include "partalg/filter.hpp"
#include "partalg/partition.hpp"
#include "partalg/oracle/ee.hpp"
#include "partalg/oracle/group_algebra.hpp"
#include "partalg/oracle/polynomial.hpp"
#include "partalg/oracle/subspace.hpp"
#include "partalg/oracle/tensor.hpp"

#include <deque>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <span>
#include <tuple>
#include <vector>

namespace partalg::oracle {

namespace detail {

inline TensorSubspace close_under_symmetric_group(std::vector<TensorVector> seeds, const SuperBasis& basis, int n) {
    TensorSubspace s(basis.size(), n);
    std::deque<TensorVector> queue;
    for (auto& v : seeds)
        if (s.insert(v)) queue.push_back(std::move(v));
    std::vector<Permutation> adjacent;
    for (int i = 0; i + 1 < n; ++i)
        adjacent.push_back(Permutation::transposition(static_cast<std::size_t>(n), static_cast<std::size_t>(i),
                                                      static_cast<std::size_t>(i + 1)));
    while (!queue.empty()) {
        TensorVector v = std::move(queue.front());
        queue.pop_front();
        for (const auto& s_i : adjacent) {
            TensorVector w = star(v, s_i, basis);
            if (s.insert(w)) queue.push_back(std::move(w));
        }
    }
    return s;
}

class ModuleCache {
public:
    static ModuleCache& instance() {
        static ModuleCache c;
        return c;
    }

    template <class Compute>
    TensorSubspace get(const Partition& lam, const SuperBasis& basis, Compute&& compute) {
        const auto key = std::make_tuple(lam, basis.k, basis.l);
        {
            std::lock_guard lock(mutex_);
            auto it = cache_.find(key);
            if (it != cache_.end()) return it->second;
        }
        TensorSubspace s = compute();
        std::lock_guard lock(mutex_);
        return cache_.try_emplace(key, std::move(s)).first->second;
    }

private:
    std::mutex mutex_;
    std::map<std::tuple<Partition, int, int>, TensorSubspace> cache_;
};

} // namespace detail

/// W_lambda = T^n(V) * e_T * F S_n under the super action, for one standard
/// tableau T of shape lambda (the row reading tableau unless given).
inline TensorSubspace module_W(const Partition& lam, const SuperBasis& basis, int n,
                               const std::optional<Tableau>& tableau = std::nullopt) {
    if (lam.size() != n) throw InvalidArgument("module_W: |lambda| must equal n");
    if (tableau && tableau->shape() != lam) throw InvalidArgument("module_W: tableau shape differs from lambda");
    checked_ambient_dim(basis.size(), n);
    auto compute = [&] {
        const Tableau t = tableau ? *tableau : row_reading_tableau(lam);
        const GroupAlgebraElement e = tableau_symmetrizer(t);
        std::vector<TensorVector> seeds;
        for (const auto& w : all_words(basis.size(), n)) {
            TensorVector v = star(TensorVector::from_word(w, basis.size()), e, basis);
            if (!v.is_zero()) seeds.push_back(std::move(v));
        }
        return detail::close_under_symmetric_group(std::move(seeds), basis, n);
    };
    if (tableau) return compute();
    return detail::ModuleCache::instance().get(lam, basis, compute);
}

/// Sum of W_lambda over the given partitions of n.
inline TensorSubspace ideal_subspace(std::span<const Partition> parts, const SuperBasis& basis, int n) {
    TensorSubspace s(basis.size(), n);
    for (const auto& lam : parts) {
        if (lam.size() != n) continue;
        s.insert_all(module_W(lam, basis, n));
    }
    return s;
}

/// I_Omega in degree n.
inline TensorSubspace ideal_subspace(const Filter& omega, const SuperBasis& basis, int n) {
    if (omega.is_everything()) return TensorSubspace::full(basis.size(), n);
    std::vector<Partition> members;
    for (const auto& lam : enumerate(n))
        if (omega.member(lam)) members.push_back(lam);
    return ideal_subspace(std::span<const Partition>(members), basis, n);
}

struct IdealCheck {
    bool is_ideal = true;
    /// Degree n of the failing basis vector, when not an ideal.
    std::optional<int> failing_degree;
};

/// Checks that z⊗v and v⊗z stay inside the span for every generator z and every
/// basis vector v of the degree-n part, n < n_max.
inline IdealCheck check_ideal(std::span<const Partition> set, const SuperBasis& basis, int n_max) {
    IdealCheck out;
    if (n_max <= 0) return out;
    TensorSubspace lower = ideal_subspace(set, basis, 0);
    for (int n = 0; n < n_max; ++n) {
        TensorSubspace upper = ideal_subspace(set, basis, n + 1);
        for (const auto& v : lower.basis())
            for (int z = 0; z < basis.size(); ++z) {
                const TensorVector letter = TensorVector::from_word(Word{static_cast<std::uint8_t>(z)}, basis.size());
                if (!upper.contains(tensor(letter, v)) || !upper.contains(tensor(v, letter))) {
                    out.is_ideal = false;
                    out.failing_degree = n;
                    return out;
                }
            }
        lower = std::move(upper);
    }
    return out;
}

/// Members of omega with |lambda| <= max_size.
inline std::vector<Partition> members_up_to(const Filter& omega, int max_size) {
    std::vector<Partition> out;
    for (const auto& lam : enumerate_up_to(max_size))
        if (omega.member(lam)) out.push_back(lam);
    return out;
}

struct IdentityCheck {
    bool holds = true;
    /// A substitution whose value is nonzero in A_Omega.
    std::optional<std::vector<Word>> witness;
    std::uint64_t substitutions = 0;
};

/// Evaluates g on every d-tuple of words of total length n and tests membership
/// in I_Omega. Empty words (the unit) are included unless nonempty_only is set.
inline IdentityCheck evaluate_identity(const MultilinearPoly& g, const Filter& omega, const SuperBasis& basis, int n,
                                       bool nonempty_only = false) {
    if (n < 0) throw InvalidArgument("degree must be nonnegative");
    const TensorSubspace ideal = ideal_subspace(omega, basis, n);
    IdentityCheck out;
    const int d = static_cast<int>(g.degree());
    for_each_word_tuple(d, n, basis.size(), !nonempty_only, [&](std::span<const Word> t) {
        ++out.substitutions;
        if (ideal.contains(evaluate_on_words(g, t, basis.size()))) return true;
        out.holds = false;
        out.witness = std::vector<Word>(t.begin(), t.end());
        return false;
    });
    return out;
}

/// Degree-n slice of the two-sided ideal generated by homogeneous relations.
inline TensorSubspace generated_ideal(std::span<const TensorVector> relations, const SuperBasis& basis, int n) {
    TensorSubspace s(basis.size(), n);
    for (const auto& r : relations) {
        if (r.alphabet() != basis.size()) throw InvalidArgument("relation over a different basis");
        const int rest = n - r.degree();
        if (rest < 0 || r.is_zero()) continue;
        for (int a = 0; a <= rest; ++a) {
            const auto left = all_words(basis.size(), a);
            const auto right = all_words(basis.size(), rest - a);
            for (const auto& w1 : left) {
                const TensorVector lr = tensor(TensorVector::from_word(w1, basis.size()), r);
                for (const auto& w2 : right) s.insert(tensor(lr, TensorVector::from_word(w2, basis.size())));
            }
        }
    }
    return s;
}

/// z_i z_j + sign * z_j z_i over all pairs i <= j of letters.
inline std::vector<TensorVector> quadratic_relations(const SuperBasis& basis, int sign) {
    std::vector<TensorVector> out;
    const int m = basis.size();
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j) {
            const auto a = static_cast<std::uint8_t>(i), b = static_cast<std::uint8_t>(j);
            TensorVector r = TensorVector::from_word(Word{a, b}, m);
            r += TensorVector::from_word(Word{b, a}, m, sign);
            if (!r.is_zero()) out.push_back(std::move(r));
        }
    return out;
}

} // namespace partalg::oracle
