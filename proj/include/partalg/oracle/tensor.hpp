#pragma once

#include "partalg/errors.hpp"
#include "partalg/numeric.hpp"
#include "partalg/oracle/caps.hpp"
#include "partalg/oracle/permutation.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace partalg::oracle {

/// V = V0 ⊕ V1 with basis letters 0..k-1 even and k..k+l-1 odd.
struct SuperBasis {
    int k = 0;
    int l = 0;

    int size() const noexcept { return k + l; }
    bool is_odd(int letter) const noexcept { return letter >= k; }

    friend bool operator==(const SuperBasis&, const SuperBasis&) = default;
};

/// A word z_1 ... z_n in the basis letters, i.e. a basis tensor of T^n(V).
using Word = std::vector<std::uint8_t>;

/// Parity of the number of odd letters.
inline int super_degree(const Word& w, const SuperBasis& basis) {
    int odd = 0;
    for (auto z : w) odd += basis.is_odd(z) ? 1 : 0;
    return odd % 2;
}

/// Even letters print as t1, t2, ...; odd letters as u1, u2, ...
inline std::string to_string(const Word& w, const SuperBasis& basis) {
    if (w.empty()) return "1";
    std::string s;
    for (auto z : w) s += basis.is_odd(z) ? "u" + std::to_string(z - basis.k + 1) : "t" + std::to_string(z + 1);
    return s;
}

/// All words of length n, lexicographic.
inline std::vector<Word> all_words(int alphabet, int n) {
    std::uint64_t count = checked_ambient_dim(alphabet, n);
    std::vector<Word> out;
    out.reserve(count);
    Word w(static_cast<std::size_t>(n), 0);
    for (std::uint64_t i = 0; i < count; ++i) {
        out.push_back(w);
        for (int p = n - 1; p >= 0; --p) {
            auto& z = w[static_cast<std::size_t>(p)];
            if (++z < alphabet) break;
            z = 0;
        }
    }
    return out;
}

/// A homogeneous element of T^n(V) with exact rational coordinates in the word
/// basis. Words are indexed in base `alphabet`, so index order is lexicographic.
class TensorVector {
public:
    using Index = std::uint64_t;

    TensorVector() = default;
    TensorVector(int alphabet, int degree) : alphabet_(alphabet), degree_(degree) {}

    static TensorVector from_word(const Word& w, int alphabet, const Rational& coef = 1) {
        TensorVector v(alphabet, static_cast<int>(w.size()));
        v.add(v.index_of(w), coef);
        return v;
    }

    int alphabet() const noexcept { return alphabet_; }
    int degree() const noexcept { return degree_; }
    const std::map<Index, Rational>& coords() const noexcept { return coords_; }
    std::size_t support_size() const noexcept { return coords_.size(); }
    bool is_zero() const noexcept { return coords_.empty(); }

    Index index_of(const Word& w) const {
        if (static_cast<int>(w.size()) != degree_) throw InvalidArgument("word length does not match degree");
        Index idx = 0;
        for (auto z : w) {
            if (z >= alphabet_) throw InvalidArgument("letter outside the basis");
            idx = idx * static_cast<Index>(alphabet_) + z;
        }
        return idx;
    }

    Word word_at(Index idx) const {
        Word w(static_cast<std::size_t>(degree_));
        for (int p = degree_ - 1; p >= 0; --p) {
            w[static_cast<std::size_t>(p)] = static_cast<std::uint8_t>(idx % static_cast<Index>(alphabet_));
            idx /= static_cast<Index>(alphabet_);
        }
        return w;
    }

    Rational operator[](const Word& w) const {
        auto it = coords_.find(index_of(w));
        return it == coords_.end() ? Rational(0) : it->second;
    }

    void add(Index idx, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = coords_.try_emplace(idx, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) coords_.erase(it);
        }
    }

    TensorVector& operator+=(const TensorVector& o) {
        check_compatible(o);
        for (const auto& [idx, c] : o.coords_) add(idx, c);
        return *this;
    }

    TensorVector& operator-=(const TensorVector& o) {
        check_compatible(o);
        for (const auto& [idx, c] : o.coords_) add(idx, -c);
        return *this;
    }

    TensorVector& operator*=(const Rational& s) {
        if (s == 0) {
            coords_.clear();
            return *this;
        }
        for (auto& [idx, c] : coords_) c *= s;
        return *this;
    }

    friend TensorVector operator+(TensorVector a, const TensorVector& b) { return a += b; }
    friend TensorVector operator-(TensorVector a, const TensorVector& b) { return a -= b; }
    friend TensorVector operator*(TensorVector a, const Rational& s) { return a *= s; }
    friend TensorVector operator*(const Rational& s, TensorVector a) { return a *= s; }

    friend bool operator==(const TensorVector&, const TensorVector&) = default;

private:
    void check_compatible(const TensorVector& o) const {
        if (o.alphabet_ != alphabet_ || o.degree_ != degree_)
            throw InvalidArgument("tensor vectors live in different spaces");
    }

    int alphabet_ = 0;
    int degree_ = 0;
    std::map<Index, Rational> coords_;
};

/// a ⊗ b, the product in T(V).
inline TensorVector tensor(const TensorVector& a, const TensorVector& b) {
    if (a.alphabet() != b.alphabet()) throw InvalidArgument("tensor vectors over different bases");
    checked_ambient_dim(a.alphabet(), a.degree() + b.degree());
    TensorVector out(a.alphabet(), a.degree() + b.degree());
    TensorVector::Index shift = 1;
    for (int i = 0; i < b.degree(); ++i) shift *= static_cast<TensorVector::Index>(b.alphabet());
    for (const auto& [ia, ca] : a.coords())
        for (const auto& [ib, cb] : b.coords()) out.add(ia * shift + ib, ca * cb);
    return out;
}

/// f_J(sigma) for the positions J of odd letters in w: the sign picked up by
/// moving odd letters past each other when w is rearranged to w_sigma(1) ... w_sigma(n).
inline int odd_transposition_sign(const Word& w, const Permutation& sigma, const SuperBasis& basis) {
    int inv = 0;
    const std::size_t n = sigma.size();
    for (std::size_t p = 0; p < n; ++p) {
        if (!basis.is_odd(w[sigma(p)])) continue;
        for (std::size_t q = p + 1; q < n; ++q)
            if (basis.is_odd(w[sigma(q)]) && sigma(p) > sigma(q)) ++inv;
    }
    return inv % 2 == 0 ? 1 : -1;
}

/// The super sign-action, on the right:
/// (z_1 ... z_n) * sigma = f_J(sigma) z_sigma(1) ... z_sigma(n),
/// so that (v * tau) * pi = v * (tau pi) with (tau pi)(i) = tau(pi(i)).
inline TensorVector star(const TensorVector& v, const Permutation& sigma, const SuperBasis& basis) {
    if (static_cast<int>(sigma.size()) != v.degree()) throw InvalidArgument("star: degree mismatch");
    if (v.alphabet() != basis.size()) throw InvalidArgument("star: basis mismatch");
    TensorVector out(v.alphabet(), v.degree());
    Word moved(sigma.size());
    for (const auto& [idx, c] : v.coords()) {
        Word w = v.word_at(idx);
        for (std::size_t i = 0; i < sigma.size(); ++i) moved[i] = w[sigma(i)];
        int sign = odd_transposition_sign(w, sigma, basis);
        out.add(out.index_of(moved), sign > 0 ? c : Rational(-c));
    }
    return out;
}

} // namespace partalg::oracle
