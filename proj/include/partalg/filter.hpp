#pragma once

#include "partalg/errors.hpp"
#include "partalg/partition.hpp"

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace partalg {

/// Canonical generator order: by size, then reverse lexicographic.
inline bool generator_order(const Partition& a, const Partition& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a > b;
}

/// The containment-minimal elements of `gens`, deduplicated, in generator order.
inline std::vector<Partition> minimal_elements(std::span<const Partition> gens) {
    std::vector<Partition> sorted(gens.begin(), gens.end());
    std::sort(sorted.begin(), sorted.end(), generator_order);
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<Partition> out;
    // A generator can only be contained in one of no larger size, so every
    // candidate needs checking only against the minimal ones already kept.
    for (const auto& g : sorted) {
        bool dominated = std::any_of(out.begin(), out.end(),
                                     [&](const Partition& m) { return contained_in(m, g); });
        if (!dominated) out.push_back(g);
    }
    return out;
}

/// An upward-closed set of partitions <mu^1, ..., mu^r>, stored by its
/// minimal generators. With an ambient (k, l) the rectangle of k+1 rows of
/// length l+1 is always a member: W_lam vanishes for every lam containing it.
class Filter {
public:
    Filter() = default;

    explicit Filter(std::vector<Partition> generators, std::optional<Hook> ambient = std::nullopt)
        : ambient_(ambient) {
        if (ambient_) {
            if (ambient_->k < 0 || ambient_->l < 0)
                throw InvalidArgument("filter ambient must be nonnegative");
            generators.push_back(ambient_rectangle(*ambient_));
        }
        generators_ = minimal_elements(generators);
    }

    static Partition ambient_rectangle(Hook h) { return Partition::rectangle(h.k + 1, h.l + 1); }

    const std::vector<Partition>& generators() const noexcept { return generators_; }
    const std::optional<Hook>& ambient() const noexcept { return ambient_; }

    const Hook& require_ambient(const char* what) const {
        if (!ambient_) throw AmbientError(std::string(what) + ": filter has no ambient (k, l)");
        return *ambient_;
    }

    bool member(const Partition& lam) const {
        return std::any_of(generators_.begin(), generators_.end(),
                           [&](const Partition& g) { return contained_in(g, lam); });
    }

    bool is_everything() const { return member(Partition{}); }

    friend bool operator==(const Filter&, const Filter&) = default;

private:
    std::vector<Partition> generators_;
    std::optional<Hook> ambient_;
};

/// The filter generated by `gens`; membership is unchanged by minimization.
inline Filter minimize(std::span<const Partition> gens, std::optional<Hook> ambient = std::nullopt) {
    return Filter(std::vector<Partition>(gens.begin(), gens.end()), ambient);
}

/// Membership in the filter generated by an arbitrary (not necessarily minimal) set.
inline bool member_of_generated(std::span<const Partition> gens, const Partition& lam) {
    return std::any_of(gens.begin(), gens.end(), [&](const Partition& g) { return contained_in(g, lam); });
}

/// Omega_1 ∪ Omega_2. Ambients must agree when both are present.
inline Filter unite(const Filter& a, const Filter& b) {
    std::optional<Hook> amb = a.ambient() ? a.ambient() : b.ambient();
    if (a.ambient() && b.ambient() && *a.ambient() != *b.ambient())
        throw AmbientError("filter union: ambient mismatch");
    std::vector<Partition> gens = a.generators();
    gens.insert(gens.end(), b.generators().begin(), b.generators().end());
    return Filter(std::move(gens), amb);
}

/// lam ⊢ n in H(k, l) with lam ∉ Omega, in reverse lexicographic order.
inline std::vector<Partition> complement_at(const Filter& omega, int n) {
    const Hook h = omega.require_ambient("complement_at");
    std::vector<Partition> out;
    for_each_partition(n, h, [&](const Partition& lam) {
        if (!omega.member(lam)) out.push_back(lam);
    });
    return out;
}

/// Whether D(a1, a2, b) ∈ Omega for some b ≥ a1, a2. A generator mu fits
/// inside D(a1, a2, b) for large b exactly when mu_{a1+1} ≤ a2.
inline bool admits_hook_rectangle(const Filter& omega, int a1, int a2) {
    return std::any_of(omega.generators().begin(), omega.generators().end(),
                       [&](const Partition& mu) { return mu[static_cast<std::size_t>(a1)] <= a2; });
}

/// A b with D(a1, a2, b) ∈ Omega, if any.
inline std::optional<int> hook_rectangle_witness(const Filter& omega, int a1, int a2) {
    std::optional<int> best;
    for (const auto& mu : omega.generators()) {
        if (mu[static_cast<std::size_t>(a1)] > a2) continue;
        int b = std::max({mu[0], static_cast<int>(mu.length()), a1, a2});
        if (!best || b < *best) best = b;
    }
    return best;
}

/// Whether Omega satisfies the a-th hook-rectangular condition.
inline bool satisfies_hook_rectangular(const Filter& omega, int a) {
    for (int a1 = 0; a1 <= a; ++a1)
        if (!admits_hook_rectangle(omega, a1, a - a1)) return false;
    return true;
}

/// h_r(Omega): the least a satisfying the a-th hook-rectangular condition.
/// At most k + l + 1 because the ambient rectangle is a member.
inline int hr(const Filter& omega) {
    const Hook h = omega.require_ambient("hr");
    for (int a = 0; a <= h.k + h.l + 1; ++a)
        if (satisfies_hook_rectangular(omega, a)) return a;
    throw std::logic_error("hr: ambient rectangle missing from filter");
}

/// The integer exponential growth rate of dim A_Omega(n): h_r - 1, or 0 when Omega is everything.
inline int exp_growth(const Filter& omega) { return std::max(hr(omega) - 1, 0); }

/// Classical case (l = 0): the least c > 0 with (c, c) ∈ Omega, if any.
inline std::optional<int> is_pi_classical(const Filter& omega) {
    const Hook h = omega.require_ambient("is_pi_classical");
    if (h.l != 0) throw AmbientError("is_pi_classical: ambient has l > 0, use is_pi_super");
    std::optional<int> best;
    for (const auto& mu : omega.generators()) {
        if (mu.length() > 2) continue;
        int c = std::max(mu[0], 1);
        if (!best || c < *best) best = c;
    }
    return best;
}

/// Number of commutator factors in the identity [x1,x2]...[x_{2m-1},x_{2m}] = 0
/// guaranteed when (c, c) ∈ Omega and dim V = k: m = c (k - 1) + 1.
inline int classical_identity_degree(int c, int k) {
    if (c <= 0 || k <= 0) throw InvalidArgument("classical_identity_degree: c and k must be positive");
    return c * (k - 1) + 1;
}

/// The least b ≥ 2 with D(2,0,b), D(1,1,b), D(0,2,b) all in Omega, if any.
/// A product of b^2 copies of any multilinear identity of E⊗E then vanishes on A_Omega.
inline std::optional<int> is_pi_super(const Filter& omega) {
    omega.require_ambient("is_pi_super");
    int bound = 2;
    for (const auto& mu : omega.generators())
        bound = std::max({bound, mu[0], static_cast<int>(mu.length())});
    for (int b = 2; b <= bound; ++b) {
        if (omega.member(hook_rectangle(2, 0, b)) && omega.member(hook_rectangle(1, 1, b)) &&
            omega.member(hook_rectangle(0, 2, b)))
            return b;
    }
    return std::nullopt;
}

/// Number of factors t = b^2 in the super identity for witness b.
inline int super_identity_factors(int b) { return b * b; }

/// When A_Omega is finite dimensional (h_r ≤ 1): the least N such that no
/// partition of size ≥ N lies outside Omega. Absent otherwise.
inline std::optional<int> nilpotency_bound(const Filter& omega) {
    if (hr(omega) > 1) return std::nullopt;
    if (omega.is_everything()) return 0;
    int row_len = 1;
    while (!omega.member(Partition::row(row_len))) ++row_len;
    int col_len = 1;
    while (!omega.member(Partition::column(col_len))) ++col_len;
    // Everything outside Omega fits in (col_len-1) rows of length (row_len-1).
    int largest = -1;
    for (int n = (row_len - 1) * (col_len - 1); n >= 0 && largest < 0; --n) {
        for_each_partition(n, Hook{col_len - 1, 0}, [&](const Partition& lam) {
            if (largest < 0 && lam[0] <= row_len - 1 && !omega.member(lam)) largest = n;
        });
    }
    return largest + 1;
}

} // namespace partalg
