#pragma once

#include "partalg/errors.hpp"
#include "partalg/numeric.hpp"
#include "partalg/oracle/caps.hpp"
#include "partalg/oracle/permutation.hpp"
#include "partalg/oracle/polynomial.hpp"
#include "partalg/oracle/tensor.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <span>
#include <vector>

namespace partalg::oracle {

/// Subsets of {1..d} as bitmasks: bit i-1 set means i is in the subset.
using IndexSet = std::uint32_t;

/// f_I(sigma) = (-1)^{#{p<q : sigma(p), sigma(q) in I, sigma(p) > sigma(q)}}.
inline int f_I(const Permutation& sigma, IndexSet I) {
    int inv = 0;
    const std::size_t d = sigma.size();
    for (std::size_t p = 0; p < d; ++p) {
        if (!(I >> sigma(p) & 1u)) continue;
        for (std::size_t q = p + 1; q < d; ++q)
            if ((I >> sigma(q) & 1u) && sigma(p) > sigma(q)) ++inv;
    }
    return inv % 2 == 0 ? 1 : -1;
}

struct EEReport {
    bool identity = true;
    /// First pair (I1, I2) whose sign sum is nonzero.
    std::optional<std::pair<IndexSet, IndexSet>> violation;
    Rational violation_value;
    std::uint64_t pairs_checked = 0;
};

namespace detail {

// Coefficients scaled to a common denominator, paired with their sign rows.
struct SignTable {
    std::vector<BigInt> coeffs;
    // signs[s * subsets + I] for the s-th supported permutation
    std::vector<std::int8_t> signs;
    std::size_t subsets = 0;
    Rational scale;
    bool fits_int64 = true;
};

inline SignTable sign_table(const MultilinearPoly& g) {
    SignTable t;
    const std::size_t d = g.degree();
    t.subsets = std::size_t{1} << d;
    BigInt lcm = 1;
    for (const auto& [p, c] : g.coeffs()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
    t.scale = Rational(1, 1) / Rational(lcm);
    for (const auto& [p, c] : g.coeffs()) {
        BigInt v = c.get_num() * (lcm / c.get_den());
        if (!v.fits_slong_p()) t.fits_int64 = false;
        t.coeffs.push_back(v);
        for (IndexSet I = 0; I < t.subsets; ++I) t.signs.push_back(static_cast<std::int8_t>(f_I(p, I)));
    }
    return t;
}

inline BigInt pair_sum(const SignTable& t, IndexSet I1, IndexSet I2) {
    const std::size_t m = t.coeffs.size();
    if (t.fits_int64) {
        __int128 acc = 0;
        for (std::size_t s = 0; s < m; ++s) {
            const int sg = t.signs[s * t.subsets + I1] * t.signs[s * t.subsets + I2];
            const __int128 c = t.coeffs[s].get_si();
            acc += sg > 0 ? c : -c;
        }
        if (acc == 0) return 0;
        // only the nonzero case needs the exact value
    }
    BigInt acc = 0;
    for (std::size_t s = 0; s < m; ++s) {
        const int sg = t.signs[s * t.subsets + I1] * t.signs[s * t.subsets + I2];
        if (sg > 0) acc += t.coeffs[s];
        else acc -= t.coeffs[s];
    }
    return acc;
}

} // namespace detail

/// Exhaustive test of the sign-sum criterion over all 4^d pairs (I1, I2).
inline EEReport is_identity_EE(const MultilinearPoly& g) {
    if (static_cast<int>(g.degree()) > caps().ee_degree)
        throw CapExceeded("E⊗E test degree " + std::to_string(g.degree()) + " exceeds cap " +
                          std::to_string(caps().ee_degree));
    EEReport r;
    const auto t = detail::sign_table(g);
    for (IndexSet I1 = 0; I1 < t.subsets; ++I1)
        for (IndexSet I2 = 0; I2 < t.subsets; ++I2) {
            ++r.pairs_checked;
            BigInt s = detail::pair_sum(t, I1, I2);
            if (s != 0) {
                r.identity = false;
                r.violation = {I1, I2};
                r.violation_value = Rational(s) * t.scale;
                return r;
            }
        }
    return r;
}

/// The same criterion on `samples` uniformly drawn pairs; for degrees past the cap.
/// A false verdict is exact, a true verdict is only evidence.
inline EEReport is_identity_EE_sampled(const MultilinearPoly& g, std::uint64_t samples, std::uint64_t seed = 1) {
    if (g.degree() > 20) throw CapExceeded("sampled E⊗E test limited to degree 20");
    EEReport r;
    const auto t = detail::sign_table(g);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<IndexSet> pick(0, static_cast<IndexSet>(t.subsets - 1));
    for (std::uint64_t i = 0; i < samples; ++i) {
        const IndexSet I1 = pick(rng), I2 = pick(rng);
        ++r.pairs_checked;
        BigInt s = detail::pair_sum(t, I1, I2);
        if (s != 0) {
            r.identity = false;
            r.violation = {I1, I2};
            r.violation_value = Rational(s) * t.scale;
            return r;
        }
    }
    return r;
}

namespace detail {

inline constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
    unsigned __int128 x = static_cast<unsigned __int128>(a) * b;
    std::uint64_t lo = static_cast<std::uint64_t>(x & kPrime);
    std::uint64_t hi = static_cast<std::uint64_t>(x >> 61);
    std::uint64_t s = lo + hi;
    return s >= kPrime ? s - kPrime : s;
}

inline std::uint64_t addmod(std::uint64_t a, std::uint64_t b) {
    std::uint64_t s = a + b;
    return s >= kPrime ? s - kPrime : s;
}

inline std::uint64_t submod(std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + kPrime - b; }

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a);
        a = mulmod(a, a);
        e >>= 1;
    }
    return r;
}

inline std::uint64_t invmod(std::uint64_t a) { return powmod(a, kPrime - 2); }

// Distinct constraint rows up to sign, as ±1 vectors over the permutations of S_d.
inline std::vector<std::vector<std::int8_t>> ee_constraint_rows(int d) {
    const auto perms = all_permutations(static_cast<std::size_t>(d));
    const IndexSet subsets = IndexSet{1} << d;
    std::vector<std::vector<std::int8_t>> f(subsets, std::vector<std::int8_t>(perms.size()));
    for (IndexSet I = 0; I < subsets; ++I)
        for (std::size_t s = 0; s < perms.size(); ++s) f[I][s] = static_cast<std::int8_t>(f_I(perms[s], I));
    std::set<std::vector<std::int8_t>> seen;
    std::vector<std::vector<std::int8_t>> rows;
    std::vector<std::int8_t> row(perms.size());
    for (IndexSet I1 = 0; I1 < subsets; ++I1)
        for (IndexSet I2 = I1; I2 < subsets; ++I2) {
            for (std::size_t s = 0; s < perms.size(); ++s) row[s] = static_cast<std::int8_t>(f[I1][s] * f[I2][s]);
            if (row[0] < 0)
                for (auto& x : row) x = static_cast<std::int8_t>(-x);
            if (seen.insert(row).second) rows.push_back(row);
        }
    return rows;
}

// Exact rank by fraction-free elimination on integer rows.
inline std::size_t exact_rank(const std::vector<std::vector<std::int8_t>>& input, std::size_t cols) {
    std::vector<std::vector<BigInt>> basis; // echelon rows, leading entry at pivot[i]
    std::vector<std::size_t> pivot;
    for (const auto& src : input) {
        std::vector<BigInt> r(src.begin(), src.end());
        for (std::size_t i = 0; i < basis.size(); ++i) {
            const BigInt& a = r[pivot[i]];
            if (a == 0) continue;
            const BigInt p = basis[i][pivot[i]];
            const BigInt f = a;
            for (std::size_t c = 0; c < cols; ++c) r[c] = r[c] * p - basis[i][c] * f;
            BigInt g = 0;
            for (const auto& x : r) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
            if (g > 1)
                for (auto& x : r) x /= g;
        }
        std::size_t lead = cols;
        for (std::size_t c = 0; c < cols; ++c)
            if (r[c] != 0) {
                lead = c;
                break;
            }
        if (lead == cols) continue;
        basis.push_back(std::move(r));
        pivot.push_back(lead);
    }
    return basis.size();
}

// Rational reconstruction of x mod p with |num|, den below sqrt(p/2).
inline std::optional<Rational> reconstruct(std::uint64_t x) {
    BigInt r0 = static_cast<unsigned long>(kPrime), r1 = static_cast<unsigned long>(x);
    BigInt t0 = 0, t1 = 1;
    BigInt bound;
    mpz_sqrt(bound.get_mpz_t(), BigInt(static_cast<unsigned long>(kPrime / 2)).get_mpz_t());
    while (r1 > bound) {
        BigInt q = r0 / r1;
        BigInt r2 = r0 - q * r1;
        BigInt t2 = t0 - q * t1;
        r0 = r1;
        r1 = r2;
        t0 = t1;
        t1 = t2;
    }
    if (t1 == 0 || abs(t1) > bound) return std::nullopt;
    Rational q(r1, t1);
    q.canonicalize();
    return q;
}

} // namespace detail

/// Dimension of {alpha : sum_sigma alpha_sigma f_I1(sigma) f_I2(sigma) = 0 for all I1, I2},
/// by exact elimination over all distinct constraint rows.
inline std::size_t ee_identity_kernel_dim_exact(int d) {
    if (d < 0) throw InvalidArgument("degree must be nonnegative");
    if (d > caps().ee_kernel_degree)
        throw CapExceeded("E⊗E kernel degree " + std::to_string(d) + " exceeds cap " +
                          std::to_string(caps().ee_kernel_degree));
    const auto rows = detail::ee_constraint_rows(d);
    const std::size_t cols = rows.empty() ? 1 : rows[0].size();
    return cols - detail::exact_rank(rows, cols);
}

/// Same quantity: a mod-p elimination proposes the rank and a kernel basis,
/// the kernel basis is lifted to Q and checked against every constraint row.
/// Rank over Q is at least the rank mod p, so an exactly verified kernel of
/// the proposed size settles the answer; otherwise falls back to exact elimination.
inline std::size_t ee_identity_kernel_dim(int d) {
    if (d < 0) throw InvalidArgument("degree must be nonnegative");
    if (d > caps().ee_kernel_degree)
        throw CapExceeded("E⊗E kernel degree " + std::to_string(d) + " exceeds cap " +
                          std::to_string(caps().ee_kernel_degree));
    using namespace detail;
    const auto rows = ee_constraint_rows(d);
    const std::size_t cols = rows[0].size();

    // reduced echelon form mod p, rows indexed by pivot column
    std::vector<std::vector<std::uint64_t>> ech;
    std::vector<std::size_t> piv;
    std::vector<std::uint64_t> r(cols);
    for (const auto& src : rows) {
        for (std::size_t c = 0; c < cols; ++c) r[c] = src[c] > 0 ? 1 : kPrime - 1;
        for (std::size_t i = 0; i < ech.size(); ++i) {
            const std::uint64_t a = r[piv[i]];
            if (a == 0) continue;
            for (std::size_t c = 0; c < cols; ++c) r[c] = submod(r[c], mulmod(a, ech[i][c]));
        }
        std::size_t lead = cols;
        for (std::size_t c = 0; c < cols; ++c)
            if (r[c] != 0) {
                lead = c;
                break;
            }
        if (lead == cols) continue;
        const std::uint64_t inv = invmod(r[lead]);
        for (auto& x : r) x = mulmod(x, inv);
        for (auto& e : ech) {
            const std::uint64_t a = e[lead];
            if (a == 0) continue;
            for (std::size_t c = 0; c < cols; ++c) e[c] = submod(e[c], mulmod(a, r[c]));
        }
        ech.push_back(r);
        piv.push_back(lead);
        if (ech.size() == cols) return 0;
    }

    std::vector<bool> is_pivot(cols, false);
    for (auto p : piv) is_pivot[p] = true;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        // kernel vector: x_f = 1, x_piv[i] = -ech[i][f]
        std::vector<Rational> x(cols, Rational(0));
        x[f] = 1;
        for (std::size_t i = 0; i < ech.size(); ++i) {
            auto q = reconstruct(submod(0, ech[i][f]));
            if (!q) return ee_identity_kernel_dim_exact(d);
            x[piv[i]] = *q;
        }
        BigInt den = 1;
        for (const auto& q : x) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
        std::vector<std::pair<std::size_t, long>> support;
        for (std::size_t c = 0; c < cols; ++c) {
            if (x[c] == 0) continue;
            BigInt v = x[c].get_num() * (den / x[c].get_den());
            if (!v.fits_slong_p()) return ee_identity_kernel_dim_exact(d);
            support.emplace_back(c, v.get_si());
        }
        for (const auto& row : rows) {
            __int128 s = 0;
            for (const auto& [c, v] : support) s += row[c] > 0 ? v : -static_cast<__int128>(v);
            if (s != 0) return ee_identity_kernel_dim_exact(d);
        }
    }
    return cols - ech.size();
}

/// v * e_(1^n) and v * e_(n), both computed in one sweep over S_n.
inline std::pair<TensorVector, TensorVector> symmetrized_pair(const TensorVector& v, const SuperBasis& basis) {
    const int n = v.degree();
    check_group_order(n);
    if (v.alphabet() != basis.size()) throw InvalidArgument("basis mismatch");
    TensorVector sign_part(v.alphabet(), n), full_part(v.alphabet(), n);
    std::vector<std::pair<Word, Rational>> terms;
    for (const auto& [idx, c] : v.coords()) terms.emplace_back(v.word_at(idx), c);
    Word moved(static_cast<std::size_t>(n));
    for (const auto& sigma : all_permutations(static_cast<std::size_t>(n))) {
        const int sg = sigma.sign();
        for (const auto& [w, c] : terms) {
            for (std::size_t i = 0; i < sigma.size(); ++i) moved[i] = w[sigma(i)];
            const int f = odd_transposition_sign(w, sigma, basis);
            const auto idx = full_part.index_of(moved);
            full_part.add(idx, f > 0 ? c : Rational(-c));
            sign_part.add(idx, f * sg > 0 ? c : Rational(-c));
        }
    }
    return {sign_part, full_part};
}

/// True iff g(m_1..m_d) * e_(1^n) and g(m_1..m_d) * e_(n) both vanish.
inline bool check_annihilation(const MultilinearPoly& g, std::span<const Word> monomials, const SuperBasis& basis) {
    if (monomials.size() != g.degree()) throw InvalidArgument("check_annihilation: wrong number of monomials");
    std::size_t total = 0;
    for (const auto& m : monomials) {
        total += m.size();
        for (auto z : m)
            if (z >= basis.size()) throw InvalidArgument("letter outside the basis");
    }
    if (total > 7) throw CapExceeded("check_annihilation: total length " + std::to_string(total) + " exceeds 7");
    const TensorVector v = evaluate_on_words(g, monomials, basis.size());
    auto [a, b] = symmetrized_pair(v, basis);
    return a.is_zero() && b.is_zero();
}

/// Calls visit on every d-tuple of nonempty words with total length n; stops
/// early when visit returns false. Returns false iff stopped.
template <class Visit>
bool for_each_word_tuple(int d, int n, int alphabet, bool allow_empty, Visit&& visit) {
    std::vector<Word> tuple(static_cast<std::size_t>(d));
    const int min_len = allow_empty ? 0 : 1;
    auto rec = [&](auto&& self, int slot, int remaining) -> bool {
        if (slot == d) return remaining != 0 || visit(std::span<const Word>(tuple));
        const int lo = slot == d - 1 ? remaining : min_len;
        const int hi = remaining - (d - 1 - slot) * min_len;
        for (int len = lo; len <= hi; ++len) {
            for (const auto& w : all_words(alphabet, len)) {
                tuple[static_cast<std::size_t>(slot)] = w;
                if (!self(self, slot + 1, remaining - len)) return false;
            }
        }
        return true;
    };
    if (d == 0) return n != 0 || visit(std::span<const Word>(tuple));
    return rec(rec, 0, n);
}

/// Searches tuples of nonempty words with total length d..n_max for one that
/// g does not annihilate.
inline std::optional<std::vector<Word>> annihilation_witness(const MultilinearPoly& g, const SuperBasis& basis,
                                                             int n_max) {
    const int d = static_cast<int>(g.degree());
    std::optional<std::vector<Word>> found;
    for (int n = d; n <= n_max && !found; ++n)
        for_each_word_tuple(d, n, basis.size(), false, [&](std::span<const Word> t) {
            if (check_annihilation(g, t, basis)) return true;
            found = std::vector<Word>(t.begin(), t.end());
            return false;
        });
    return found;
}

} // namespace partalg::oracle
