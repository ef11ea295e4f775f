#pragma once

#include "partalg/errors.hpp"

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace partalg::oracle {

/// A permutation of {0, ..., n-1} in one-line notation: images()[i] = sigma(i).
class Permutation {
public:
    Permutation() = default;

    explicit Permutation(std::vector<std::uint8_t> images) : images_(std::move(images)) {
        std::vector<bool> seen(images_.size(), false);
        for (auto v : images_) {
            if (v >= images_.size() || seen[v]) throw InvalidArgument("not a permutation");
            seen[v] = true;
        }
    }

    static Permutation from_images(const std::vector<int>& images) {
        std::vector<std::uint8_t> v;
        v.reserve(images.size());
        for (int x : images) {
            if (x < 0 || x > 255) throw InvalidArgument("not a permutation");
            v.push_back(static_cast<std::uint8_t>(x));
        }
        return Permutation(std::move(v));
    }

    static Permutation identity(std::size_t n) {
        std::vector<std::uint8_t> v(n);
        std::iota(v.begin(), v.end(), std::uint8_t{0});
        Permutation p;
        p.images_ = std::move(v);
        return p;
    }

    /// The transposition swapping i and j (0-based).
    static Permutation transposition(std::size_t n, std::size_t i, std::size_t j) {
        Permutation p = identity(n);
        std::swap(p.images_[i], p.images_[j]);
        return p;
    }

    std::size_t size() const noexcept { return images_.size(); }
    std::size_t operator()(std::size_t i) const noexcept { return images_[i]; }
    const std::vector<std::uint8_t>& images() const noexcept { return images_; }

    Permutation inverse() const {
        Permutation p;
        p.images_.resize(images_.size());
        for (std::size_t i = 0; i < images_.size(); ++i) p.images_[images_[i]] = static_cast<std::uint8_t>(i);
        return p;
    }

    int inversions() const noexcept {
        int inv = 0;
        for (std::size_t p = 0; p < images_.size(); ++p)
            for (std::size_t q = p + 1; q < images_.size(); ++q)
                if (images_[p] > images_[q]) ++inv;
        return inv;
    }

    int sign() const noexcept { return inversions() % 2 == 0 ? 1 : -1; }

    /// (tau * pi)(i) = tau(pi(i)).
    friend Permutation operator*(const Permutation& tau, const Permutation& pi) {
        if (tau.size() != pi.size()) throw InvalidArgument("permutation degree mismatch");
        Permutation r;
        r.images_.resize(pi.size());
        for (std::size_t i = 0; i < pi.size(); ++i) r.images_[i] = tau.images_[pi.images_[i]];
        return r;
    }

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<std::uint8_t> images_;
};

/// All of S_n in lexicographic order of one-line notation.
inline std::vector<Permutation> all_permutations(std::size_t n) {
    std::vector<Permutation> out;
    std::vector<std::uint8_t> v(n);
    std::iota(v.begin(), v.end(), std::uint8_t{0});
    do {
        out.emplace_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

inline std::string to_string(const Permutation& p) {
    std::string s = "[";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(p(i) + 1);
    }
    return s + "]";
}

} // namespace partalg::oracle
