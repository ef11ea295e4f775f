#pragma once

#include "partalg/oracle/tensor.hpp"

#include <map>
#include <vector>

namespace partalg::oracle {

/// A subspace of T^n(V) held as a fully reduced row echelon basis over the
/// lexicographic word order. The echelon form is canonical, so two subspaces
/// are equal exactly when their bases compare equal.
class TensorSubspace {
public:
    using Index = TensorVector::Index;

    TensorSubspace() = default;
    TensorSubspace(int alphabet, int degree)
        : alphabet_(alphabet), degree_(degree), ambient_dim_(checked_ambient_dim(alphabet, degree)) {}

    /// All of T^n(V).
    static TensorSubspace full(int alphabet, int degree) {
        TensorSubspace s(alphabet, degree);
        for (Index i = 0; i < s.ambient_dim_; ++i) {
            TensorVector e(alphabet, degree);
            e.add(i, 1);
            s.rows_.emplace(i, std::move(e));
        }
        return s;
    }

    int alphabet() const noexcept { return alphabet_; }
    int degree() const noexcept { return degree_; }
    std::uint64_t ambient_dim() const noexcept { return ambient_dim_; }
    std::size_t dim() const noexcept { return rows_.size(); }

    /// v minus its projection along the echelon basis; zero iff v lies in the subspace.
    TensorVector reduce(const TensorVector& v) const {
        check(v);
        TensorVector r = v;
        for (const auto& [idx, c] : v.coords()) {
            auto it = rows_.find(idx);
            if (it != rows_.end()) r -= it->second * c;
        }
        return r;
    }

    bool contains(const TensorVector& v) const { return reduce(v).is_zero(); }

    /// Adds v to the span. Returns true when the dimension grew.
    bool insert(const TensorVector& v) {
        TensorVector r = reduce(v);
        if (r.is_zero()) return false;
        const Index pivot = r.coords().begin()->first;
        r *= Rational(1) / r.coords().begin()->second;
        for (auto& [p, row] : rows_) {
            auto it = row.coords().find(pivot);
            if (it != row.coords().end()) row -= r * Rational(it->second);
        }
        rows_.emplace(pivot, std::move(r));
        return true;
    }

    void insert_all(const TensorSubspace& o) {
        for (const auto& [p, row] : o.rows_) insert(row);
    }

    /// Echelon basis in pivot order.
    std::vector<TensorVector> basis() const {
        std::vector<TensorVector> out;
        out.reserve(rows_.size());
        for (const auto& [p, row] : rows_) out.push_back(row);
        return out;
    }

    friend bool operator==(const TensorSubspace& a, const TensorSubspace& b) {
        return a.alphabet_ == b.alphabet_ && a.degree_ == b.degree_ && a.rows_ == b.rows_;
    }

private:
    void check(const TensorVector& v) const {
        if (v.alphabet() != alphabet_ || v.degree() != degree_)
            throw InvalidArgument("vector does not live in this subspace's ambient space");
    }

    int alphabet_ = 0;
    int degree_ = 0;
    std::uint64_t ambient_dim_ = 1;
    std::map<Index, TensorVector> rows_;
};

} // namespace partalg::oracle
