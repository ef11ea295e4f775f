#pragma once

#include "partalg/errors.hpp"
#include "partalg/numeric.hpp"
#include "partalg/oracle/caps.hpp"
#include "partalg/oracle/permutation.hpp"
#include "partalg/oracle/tensor.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace partalg::oracle {

/// A noncommutative polynomial: monomials are sequences of variable indices.
class NcPolynomial {
public:
    using Monomial = std::vector<int>;

    NcPolynomial() = default;

    static NcPolynomial variable(int i) {
        NcPolynomial p;
        p.terms_[{i}] = 1;
        return p;
    }

    static NcPolynomial one() {
        NcPolynomial p;
        p.terms_[{}] = 1;
        return p;
    }

    const std::map<Monomial, Rational>& terms() const noexcept { return terms_; }

    void add(const Monomial& m, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    NcPolynomial& operator+=(const NcPolynomial& o) {
        for (const auto& [m, c] : o.terms_) add(m, c);
        return *this;
    }
    NcPolynomial& operator-=(const NcPolynomial& o) {
        for (const auto& [m, c] : o.terms_) add(m, -c);
        return *this;
    }
    friend NcPolynomial operator+(NcPolynomial a, const NcPolynomial& b) { return a += b; }
    friend NcPolynomial operator-(NcPolynomial a, const NcPolynomial& b) { return a -= b; }
    friend NcPolynomial operator*(const NcPolynomial& a, const NcPolynomial& b) {
        NcPolynomial out;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                Monomial m = ma;
                m.insert(m.end(), mb.begin(), mb.end());
                out.add(m, ca * cb);
            }
        return out;
    }

    friend bool operator==(const NcPolynomial&, const NcPolynomial&) = default;

private:
    std::map<Monomial, Rational> terms_;
};

inline NcPolynomial commutator(const NcPolynomial& a, const NcPolynomial& b) { return a * b - b * a; }

inline NcPolynomial power(const NcPolynomial& a, int e) {
    NcPolynomial r = NcPolynomial::one();
    for (int i = 0; i < e; ++i) r = r * a;
    return r;
}

/// g(x_1..x_d) = sum_sigma alpha_sigma x_sigma(1) ... x_sigma(d), stored with
/// 0-based one-line permutations: slot i of the monomial holds variable sigma(i).
class MultilinearPoly {
public:
    MultilinearPoly() = default;
    explicit MultilinearPoly(std::size_t degree) : degree_(degree) {}

    std::size_t degree() const noexcept { return degree_; }
    const std::map<Permutation, Rational>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }

    void add(const Permutation& p, const Rational& c) {
        if (p.size() != degree_) throw InvalidArgument("multilinear polynomial degree mismatch");
        if (c == 0) return;
        auto [it, inserted] = coeffs_.try_emplace(p, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }

    /// Rejects anything that is not multilinear in variables 0..d-1.
    static MultilinearPoly from_nc(const NcPolynomial& p) {
        MultilinearPoly out;
        bool first = true;
        for (const auto& [m, c] : p.terms()) {
            if (first) {
                out.degree_ = m.size();
                first = false;
            }
            std::vector<int> img(m.begin(), m.end());
            if (img.size() != out.degree_) throw InvalidArgument("polynomial is not homogeneous");
            out.add(Permutation::from_images(img), c);
        }
        return out;
    }

    friend bool operator==(const MultilinearPoly&, const MultilinearPoly&) = default;

private:
    std::size_t degree_ = 0;
    std::map<Permutation, Rational> coeffs_;
};

/// Full polarization of a polynomial homogeneous in each variable: the m
/// occurrences of variable v in every monomial are replaced by m fresh
/// variables in all m! orders. Fresh variables are numbered consecutively,
/// variable 0's copies first.
inline MultilinearPoly multilinearize(const NcPolynomial& p) {
    if (p.terms().empty()) return {};
    std::map<int, int> mult;
    for (int v : p.terms().begin()->first) ++mult[v];
    for (const auto& [m, c] : p.terms()) {
        std::map<int, int> here;
        for (int v : m) ++here[v];
        if (here != mult) throw InvalidArgument("multilinearize: polynomial is not multihomogeneous");
    }
    std::map<int, int> offset;
    int degree = 0;
    for (const auto& [v, m] : mult) {
        offset[v] = degree;
        degree += m;
    }
    check_group_order(degree);

    MultilinearPoly out(static_cast<std::size_t>(degree));
    for (const auto& [mono, c] : p.terms()) {
        // positions of each variable inside the monomial
        std::map<int, std::vector<std::size_t>> where;
        for (std::size_t i = 0; i < mono.size(); ++i) where[mono[i]].push_back(i);
        std::vector<int> img(mono.size());
        auto assign = [&](auto&& self, std::map<int, std::vector<std::size_t>>::const_iterator it) -> void {
            if (it == where.cend()) {
                out.add(Permutation::from_images(img), c);
                return;
            }
            const auto& pos = it->second;
            for (const auto& local : all_permutations(pos.size())) {
                for (std::size_t j = 0; j < pos.size(); ++j)
                    img[pos[j]] = offset[it->first] + static_cast<int>(local(j));
                self(self, std::next(it));
            }
        };
        assign(assign, where.cbegin());
    }
    return out;
}

/// [x1,x2][x3,x4]...[x_{2j-1},x_{2j}]
inline MultilinearPoly commutator_product(int j) {
    NcPolynomial p = NcPolynomial::one();
    for (int i = 0; i < j; ++i) p = p * commutator(NcPolynomial::variable(2 * i), NcPolynomial::variable(2 * i + 1));
    return MultilinearPoly::from_nc(p);
}

/// s_d = sum_sigma sgn(sigma) x_sigma(1) ... x_sigma(d)
inline MultilinearPoly standard_polynomial(int d) {
    check_group_order(d);
    MultilinearPoly out(static_cast<std::size_t>(d));
    for (const auto& p : all_permutations(static_cast<std::size_t>(d))) out.add(p, p.sign());
    return out;
}

/// [[x1,x2],x3]
inline MultilinearPoly lie_triple() {
    auto x = NcPolynomial::variable;
    return MultilinearPoly::from_nc(commutator(commutator(x(0), x(1)), x(2)));
}

/// Polarization of [[x,y]^2, x], degree 5.
inline MultilinearPoly popov5a() {
    auto x = NcPolynomial::variable(0), y = NcPolynomial::variable(1);
    return multilinearize(commutator(power(commutator(x, y), 2), x));
}

/// [[[x1,x2],[x3,x4]],x5]
inline MultilinearPoly popov5b() {
    auto x = NcPolynomial::variable;
    return MultilinearPoly::from_nc(commutator(commutator(commutator(x(0), x(1)), commutator(x(2), x(3))), x(4)));
}

/// Polarization of [x,y]^3, degree 6.
inline MultilinearPoly br_cube() {
    auto x = NcPolynomial::variable(0), y = NcPolynomial::variable(1);
    return multilinearize(power(commutator(x, y), 3));
}

/// Polarization of s_3(x1,x2,x3)^3, degree 9. Needs a group-order cap of at least 9!.
inline MultilinearPoly s3_cube() {
    NcPolynomial s3;
    for (const auto& p : all_permutations(3)) {
        NcPolynomial::Monomial m{static_cast<int>(p(0)), static_cast<int>(p(1)), static_cast<int>(p(2))};
        s3.add(m, p.sign());
    }
    return multilinearize(power(s3, 3));
}

/// Built-in polynomials by name: commutators:j, lie3, popov5a (alias popov5),
/// popov5b, br-cube, s<d> (standard polynomial), s3cube.
inline MultilinearPoly named_polynomial(std::string_view name) {
    auto parse_tail = [&](std::string_view tail) {
        int v = 0;
        auto [ptr, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), v);
        if (tail.empty() || ec != std::errc{} || ptr != tail.data() + tail.size() || v <= 0)
            throw InvalidArgument("bad polynomial name: '" + std::string(name) + "'");
        return v;
    };
    if (name.starts_with("commutators:")) return commutator_product(parse_tail(name.substr(12)));
    if (name == "lie3") return lie_triple();
    if (name == "popov5a" || name == "popov5") return popov5a();
    if (name == "popov5b") return popov5b();
    if (name == "br-cube") return br_cube();
    if (name == "s3cube") {
        Caps saved = caps();
        caps().group_order = std::max<std::uint64_t>(saved.group_order, 362880);
        MultilinearPoly g = s3_cube();
        caps() = saved;
        return g;
    }
    if (name.size() >= 2 && name[0] == 's') return standard_polynomial(parse_tail(name.substr(1)));
    throw InvalidArgument("unknown polynomial: '" + std::string(name) + "'");
}

/// g(m_1, ..., m_d) in T(V): plain concatenation, no signs.
inline TensorVector evaluate(const MultilinearPoly& g, std::span<const TensorVector> args) {
    if (args.size() != g.degree()) throw InvalidArgument("evaluate: wrong number of arguments");
    if (args.empty()) {
        TensorVector one(0, 0);
        if (!g.is_zero()) one.add(0, g.coeffs().begin()->second);
        return one;
    }
    int total = 0;
    for (const auto& a : args) total += a.degree();
    TensorVector out(args[0].alphabet(), total);
    for (const auto& [sigma, c] : g.coeffs()) {
        TensorVector term = args[sigma(0)];
        for (std::size_t i = 1; i < sigma.size(); ++i) term = tensor(term, args[sigma(i)]);
        out += term * c;
    }
    return out;
}

/// g evaluated on words; the fast path used by the substitution loops.
inline TensorVector evaluate_on_words(const MultilinearPoly& g, std::span<const Word> words, int alphabet) {
    if (words.size() != g.degree()) throw InvalidArgument("evaluate: wrong number of arguments");
    int total = 0;
    for (const auto& w : words) total += static_cast<int>(w.size());
    TensorVector out(alphabet, total);
    Word buf;
    buf.reserve(static_cast<std::size_t>(total));
    for (const auto& [sigma, c] : g.coeffs()) {
        buf.clear();
        for (std::size_t i = 0; i < sigma.size(); ++i) {
            const auto& w = words[sigma(i)];
            buf.insert(buf.end(), w.begin(), w.end());
        }
        out.add(out.index_of(buf), c);
    }
    return out;
}

} // namespace partalg::oracle
