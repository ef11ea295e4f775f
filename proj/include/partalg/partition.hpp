#pragma once

#include "partalg/errors.hpp"

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace partalg {

/// The (k, l)-hook H(k, l): partitions whose (k+1)-th row has length at most l.
/// Also used as the ambient (dim V0, dim V1) of a filter.
struct Hook {
    int k = 0;
    int l = 0;

    friend auto operator<=>(const Hook&, const Hook&) = default;
};

/// A weakly decreasing finite sequence of positive integers. The empty
/// partition is a valid value. Ordering is lexicographic on the parts.
class Partition {
public:
    Partition() = default;

    /// Trailing zeros are dropped; anything else that is not weakly
    /// decreasing and nonnegative is rejected.
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0)
                throw InvalidArgument("partition parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw InvalidArgument("partition parts must be weakly decreasing");
        }
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// (n)
    static Partition row(int n) { return n == 0 ? Partition{} : Partition(std::vector<int>{n}); }
    /// (1^n)
    static Partition column(int n) { return Partition(std::vector<int>(static_cast<std::size_t>(n), 1)); }
    /// `rows` rows of length `len`.
    static Partition rectangle(int rows, int len) {
        if (rows == 0 || len == 0) return {};
        return Partition(std::vector<int>(static_cast<std::size_t>(rows), len));
    }

    /// Comma-separated parts, with `a^m` for m copies of a. Accepts optional
    /// surrounding parentheses; "", "()", "0" and "∅" denote the empty partition.
    static Partition parse(std::string_view text);

    const std::vector<int>& parts() const noexcept { return parts_; }

    /// Length of row i (0-based); rows past the end read as 0.
    int operator[](std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

    /// Number of nonzero rows.
    std::size_t length() const noexcept { return parts_.size(); }

    int size() const noexcept {
        int s = 0;
        for (int p : parts_) s += p;
        return s;
    }

    bool empty() const noexcept { return parts_.empty(); }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

/// mu ⊆ lam as Young diagrams.
inline bool contained_in(const Partition& mu, const Partition& lam) {
    if (mu.length() > lam.length()) return false;
    for (std::size_t i = 0; i < mu.length(); ++i)
        if (mu[i] > lam[i]) return false;
    return true;
}

inline Partition conjugate(const Partition& lam) {
    std::vector<int> cols(static_cast<std::size_t>(lam[0]), 0);
    for (int p : lam.parts())
        for (int j = 0; j < p; ++j) ++cols[static_cast<std::size_t>(j)];
    return Partition(std::move(cols));
}

/// lam ∈ H(k, l): lam_{k+1} ≤ l.
inline bool in_hook(const Partition& lam, int k, int l) {
    return lam[static_cast<std::size_t>(k)] <= l;
}

inline bool in_hook(const Partition& lam, Hook h) { return in_hook(lam, h.k, h.l); }

/// D(a1, a2, b) = (b^{a1}, a2^{b - a1}).
inline Partition hook_rectangle(int a1, int a2, int b) {
    if (a1 < 0 || a2 < 0 || b < 0)
        throw InvalidArgument("hook_rectangle: arguments must be nonnegative");
    if (b < a1 || b < a2)
        throw InvalidArgument("hook_rectangle: requires b >= a1 and b >= a2");
    std::vector<int> parts(static_cast<std::size_t>(a1), b);
    parts.insert(parts.end(), static_cast<std::size_t>(b - a1), a2);
    return Partition(std::move(parts));
}

/// c(lam) = |lam| - lam_1.
inline int c_stat(const Partition& lam) { return lam.size() - lam[0]; }

namespace detail {

inline void enumerate_rec(int remaining, int max_part, std::size_t row,
                          const std::optional<Hook>& hook, std::vector<int>& cur,
                          const std::function<void(const Partition&)>& visit) {
    if (remaining == 0) {
        visit(Partition(cur));
        return;
    }
    int cap = std::min(remaining, max_part);
    if (hook && row >= static_cast<std::size_t>(hook->k)) cap = std::min(cap, hook->l);
    for (int p = cap; p >= 1; --p) {
        cur.push_back(p);
        enumerate_rec(remaining - p, p, row + 1, hook, cur, visit);
        cur.pop_back();
    }
}

} // namespace detail

/// Visits every partition of n (restricted to the hook when given) in
/// reverse lexicographic order.
inline void for_each_partition(int n, const std::optional<Hook>& hook,
                               const std::function<void(const Partition&)>& visit) {
    if (n < 0) return;
    std::vector<int> cur;
    detail::enumerate_rec(n, n, 0, hook, cur, visit);
}

inline std::vector<Partition> enumerate(int n, const std::optional<Hook>& hook = std::nullopt) {
    std::vector<Partition> out;
    for_each_partition(n, hook, [&](const Partition& p) { out.push_back(p); });
    return out;
}

/// All partitions with |lam| ≤ max_size, grouped by size ascending.
inline std::vector<Partition> enumerate_up_to(int max_size,
                                              const std::optional<Hook>& hook = std::nullopt) {
    std::vector<Partition> out;
    for (int n = 0; n <= max_size; ++n)
        for_each_partition(n, hook, [&](const Partition& p) { out.push_back(p); });
    return out;
}

/// Canonical form: "3,2,2" (empty partition prints as "").
inline std::string to_string(const Partition& lam) {
    std::string s;
    for (std::size_t i = 0; i < lam.length(); ++i) {
        if (i) s += ',';
        s += std::to_string(lam[i]);
    }
    return s;
}

/// "(3,2,2)"; the empty partition prints as "()".
inline std::string to_paren_string(const Partition& lam) { return "(" + to_string(lam) + ")"; }

inline std::ostream& operator<<(std::ostream& os, const Partition& lam) {
    return os << to_paren_string(lam);
}

inline Partition Partition::parse(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    if (text.size() >= 2 && text.front() == '(' && text.back() == ')')
        text = trim(text.substr(1, text.size() - 2));
    if (text.empty() || text == "0" || text == "\xE2\x88\x85") return {};

    auto parse_int = [&](std::string_view s) {
        s = trim(s);
        int v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
            throw InvalidArgument("bad partition syntax: '" + std::string(text) + "'");
        return v;
    };

    std::vector<int> parts;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        std::string_view item =
            text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        std::size_t caret = item.find('^');
        int value = parse_int(item.substr(0, caret));
        int mult = caret == std::string_view::npos ? 1 : parse_int(item.substr(caret + 1));
        if (value < 0 || mult < 0)
            throw InvalidArgument("bad partition syntax: '" + std::string(text) + "'");
        if (value > 0) parts.insert(parts.end(), static_cast<std::size_t>(mult), value);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return Partition(std::move(parts));
}

} // namespace partalg

template <>
struct std::hash<partalg::Partition> {
    std::size_t operator()(const partalg::Partition& p) const noexcept {
        std::size_t h = 0x9e3779b97f4a7c15ULL;
        for (int v : p.parts()) h = (h ^ static_cast<std::size_t>(v)) * 0x100000001b3ULL;
        return h;
    }
};
