#pragma once

#include "partalg/partition.hpp"
#include "partalg/oracle/caps.hpp"
#include "partalg/oracle/permutation.hpp"
#include "partalg/oracle/tensor.hpp"

#include <algorithm>
#include <map>
#include <vector>

namespace partalg::oracle {

/// An element of the group algebra Q S_n.
class GroupAlgebraElement {
public:
    GroupAlgebraElement() = default;
    explicit GroupAlgebraElement(std::size_t degree) : degree_(degree) {}

    static GroupAlgebraElement basis(const Permutation& p, const Rational& c = 1) {
        GroupAlgebraElement e(p.size());
        e.add(p, c);
        return e;
    }

    std::size_t degree() const noexcept { return degree_; }
    const std::map<Permutation, Rational>& coeffs() const noexcept { return coeffs_; }

    Rational coefficient(const Permutation& p) const {
        auto it = coeffs_.find(p);
        return it == coeffs_.end() ? Rational(0) : it->second;
    }

    void add(const Permutation& p, const Rational& c) {
        if (p.size() != degree_) throw InvalidArgument("group algebra degree mismatch");
        if (c == 0) return;
        auto [it, inserted] = coeffs_.try_emplace(p, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }

    GroupAlgebraElement& operator+=(const GroupAlgebraElement& o) {
        for (const auto& [p, c] : o.coeffs_) add(p, c);
        return *this;
    }

    friend GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
        if (a.degree_ != b.degree_) throw InvalidArgument("group algebra degree mismatch");
        GroupAlgebraElement out(a.degree_);
        for (const auto& [p, cp] : a.coeffs_)
            for (const auto& [q, cq] : b.coeffs_) out.add(p * q, cp * cq);
        return out;
    }

    friend bool operator==(const GroupAlgebraElement&, const GroupAlgebraElement&) = default;

private:
    std::size_t degree_ = 0;
    std::map<Permutation, Rational> coeffs_;
};

/// e_(n) = sum of all permutations.
inline GroupAlgebraElement symmetrizer_full(std::size_t n) {
    check_group_order(static_cast<int>(n));
    GroupAlgebraElement e(n);
    for (const auto& p : all_permutations(n)) e.add(p, 1);
    return e;
}

/// e_(1^n) = signed sum of all permutations.
inline GroupAlgebraElement symmetrizer_sign(std::size_t n) {
    check_group_order(static_cast<int>(n));
    GroupAlgebraElement e(n);
    for (const auto& p : all_permutations(n)) e.add(p, p.sign());
    return e;
}

/// A bijective filling of a Young diagram by 1..n, stored row by row.
class Tableau {
public:
    explicit Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
        std::vector<int> lengths;
        int n = 0;
        for (const auto& r : rows_) {
            lengths.push_back(static_cast<int>(r.size()));
            n += static_cast<int>(r.size());
        }
        shape_ = Partition(lengths);
        std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
        for (const auto& r : rows_)
            for (int v : r) {
                if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
                    throw InvalidArgument("tableau filling is not a bijection onto 1..n");
                seen[static_cast<std::size_t>(v)] = true;
            }
    }

    const Partition& shape() const noexcept { return shape_; }
    const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }
    std::size_t size() const noexcept { return static_cast<std::size_t>(shape_.size()); }

    std::vector<std::vector<int>> columns() const {
        std::vector<std::vector<int>> cols(static_cast<std::size_t>(shape_[0]));
        for (const auto& r : rows_)
            for (std::size_t j = 0; j < r.size(); ++j) cols[j].push_back(r[j]);
        return cols;
    }

    bool is_standard() const {
        for (std::size_t i = 0; i < rows_.size(); ++i)
            for (std::size_t j = 0; j < rows_[i].size(); ++j) {
                if (j + 1 < rows_[i].size() && rows_[i][j] > rows_[i][j + 1]) return false;
                if (i + 1 < rows_.size() && j < rows_[i + 1].size() && rows_[i][j] > rows_[i + 1][j]) return false;
            }
        return true;
    }

private:
    std::vector<std::vector<int>> rows_;
    Partition shape_;
};

/// Fills rows left to right with 1..n.
inline Tableau row_reading_tableau(const Partition& lam) {
    std::vector<std::vector<int>> rows;
    int next = 1;
    for (int len : lam.parts()) {
        rows.emplace_back();
        for (int j = 0; j < len; ++j) rows.back().push_back(next++);
    }
    return Tableau(std::move(rows));
}

/// Fills columns top to bottom with 1..n.
inline Tableau column_reading_tableau(const Partition& lam) {
    std::vector<std::vector<int>> rows;
    for (int len : lam.parts()) rows.emplace_back(static_cast<std::size_t>(len), 0);
    int next = 1;
    const Partition conj = conjugate(lam);
    for (std::size_t j = 0; j < conj.length(); ++j)
        for (int i = 0; i < conj[j]; ++i) rows[static_cast<std::size_t>(i)][j] = next++;
    return Tableau(std::move(rows));
}

namespace detail {

// Sum over the subgroup permuting each block of entries among itself,
// optionally weighted by sign.
inline GroupAlgebraElement block_symmetrizer(std::size_t n, const std::vector<std::vector<int>>& blocks,
                                             bool signed_sum) {
    GroupAlgebraElement acc = GroupAlgebraElement::basis(Permutation::identity(n));
    for (const auto& block : blocks) {
        if (block.size() < 2) continue;
        GroupAlgebraElement factor(n);
        for (const auto& local : all_permutations(block.size())) {
            Permutation p = Permutation::identity(n);
            std::vector<std::uint8_t> img = p.images();
            for (std::size_t i = 0; i < block.size(); ++i)
                img[static_cast<std::size_t>(block[i] - 1)] = static_cast<std::uint8_t>(block[local(i)] - 1);
            factor.add(Permutation(std::move(img)), signed_sum ? local.sign() : 1);
        }
        acc = acc * factor;
    }
    return acc;
}

} // namespace detail

/// e_T = R_T^+ C_T^-: row symmetrizer times signed column symmetrizer.
inline GroupAlgebraElement tableau_symmetrizer(const Tableau& t) {
    check_group_order(static_cast<int>(t.size()));
    auto rplus = detail::block_symmetrizer(t.size(), t.rows(), false);
    auto cminus = detail::block_symmetrizer(t.size(), t.columns(), true);
    return rplus * cminus;
}

/// v * x = sum_sigma x_sigma (v * sigma).
inline TensorVector star(const TensorVector& v, const GroupAlgebraElement& x, const SuperBasis& basis) {
    if (static_cast<int>(x.degree()) != v.degree()) throw InvalidArgument("star: degree mismatch");
    TensorVector out(v.alphabet(), v.degree());
    for (const auto& [p, c] : x.coeffs()) out += star(v, p, basis) * c;
    return out;
}

} // namespace partalg::oracle
