#pragma once

/**
 * @file group_id.hpp
 * @brief Identify the abstract structure of finite groups whose elements are
 *        ring elements closed under multiplication: closure, element orders,
 *        abelian invariants, and matching against claimed structures
 *        (products of cyclic groups, optionally with a D_8 factor).
 */

#include <cstdint>
#include <numeric>
#include <set>
#include <string>

#include "biset_ring.hpp"

namespace dburnside {

inline bool operator<(const RingElement& a, const RingElement& b) {
    if (a.group.p != b.group.p) return a.group.p < b.group.p;
    if (a.group.n != b.group.n) return a.group.n < b.group.n;
    return a.coeffs < b.coeffs;
}

/// Breadth-first product saturation of a set of units. Aborts above `cap`.
inline std::vector<RingElement> closure(const std::vector<RingElement>& gens,
                                        std::size_t cap = 100000) {
    std::set<RingElement> seen(gens.begin(), gens.end());
    std::vector<RingElement> frontier(seen.begin(), seen.end());
    while (!frontier.empty()) {
        std::vector<RingElement> fresh;
        for (const auto& a : frontier)
            for (const auto& b : seen) {
                for (const auto& prod : {a * b, b * a})
                    if (seen.insert(prod).second) fresh.push_back(prod);
                if (seen.size() > cap)
                    throw std::runtime_error("closure: element cap exceeded");
            }
        frontier = std::move(fresh);
    }
    return {seen.begin(), seen.end()};
}

/// Multiplicative order of u; requires u to generate a finite cycle.
inline std::int64_t element_order(const RingElement& u,
                                  std::int64_t cap = 100000) {
    const RingElement id = identity(u.group);
    RingElement x = u;
    std::int64_t ord = 1;
    while (!(x == id)) {
        x = x * u;
        ++ord;
        if (ord > cap)
            throw std::runtime_error("element_order: cap exceeded");
    }
    return ord;
}

struct GroupFingerprint {
    std::int64_t order = 0;
    bool is_abelian = true;
    std::map<std::int64_t, std::int64_t> order_statistics;
    std::vector<std::int64_t> abelian_invariants;  ///< ascending, d1 | d2 | ...
    std::int64_t center_order = 0;

    bool operator==(const GroupFingerprint&) const = default;
};

namespace detail {

inline std::vector<std::int64_t> prime_factors(std::int64_t x) {
    std::vector<std::int64_t> out;
    for (std::int64_t d = 2; d * d <= x; ++d)
        while (x % d == 0) {
            if (out.empty() || out.back() != d) out.push_back(d);
            x /= d;
        }
    if (x > 1 && (out.empty() || out.back() != x)) out.push_back(x);
    return out;
}

/// Exponent partition of the q-primary component of a finite abelian group,
/// recovered by counting elements of order dividing q^k: if the counts are
/// q^{c_k}, then c_k - c_{k-1} = #{parts >= k}. Returned descending.
inline std::vector<int> primary_partition(
    const std::vector<std::int64_t>& orders, std::int64_t q) {
    std::vector<int> conj;  // conj[k-1] = #{parts >= k}
    std::int64_t prev = 1;
    for (int k = 1;; ++k) {
        std::int64_t modulus = 1;
        for (int c = 0; c < k; ++c) modulus *= q;
        std::int64_t cnt = 0;
        for (auto o : orders)
            if (modulus % o == 0) ++cnt;
        int logc = 0;
        for (std::int64_t v = cnt; v > 1; v /= q) ++logc;
        int logp = 0;
        for (std::int64_t v = prev; v > 1; v /= q) ++logp;
        conj.push_back(logc - logp);
        if (cnt == prev && k > 1) {
            conj.pop_back();
            break;
        }
        prev = cnt;
    }
    std::vector<int> parts;
    for (int k = static_cast<int>(conj.size()); k >= 1; --k) {
        const int ge_k = conj[static_cast<std::size_t>(k - 1)];
        const int ge_k1 =
            k < static_cast<int>(conj.size()) ? conj[static_cast<std::size_t>(k)] : 0;
        for (int c = 0; c < ge_k - ge_k1; ++c) parts.push_back(k);
    }
    return parts;  // descending
}

/// Merge per-prime exponent partitions (descending) into invariant factors.
inline std::vector<std::int64_t> invariant_factors(
    const std::map<std::int64_t, std::vector<int>>& partitions) {
    std::size_t len = 0;
    for (const auto& [q, parts] : partitions) len = std::max(len, parts.size());
    std::vector<std::int64_t> inv(len, 1);
    for (const auto& [q, parts] : partitions)
        for (std::size_t idx = 0; idx < parts.size(); ++idx) {
            std::int64_t f = 1;
            for (int c = 0; c < parts[idx]; ++c) f *= q;
            inv[idx] *= f;
        }
    std::reverse(inv.begin(), inv.end());  // ascending, d1 | d2 | ...
    return inv;
}

}  // namespace detail

/// Fingerprint a closed set of units containing the identity.
inline GroupFingerprint fingerprint(const std::vector<RingElement>& elements) {
    if (elements.empty())
        throw std::invalid_argument("fingerprint: empty input");
    const CyclicPGroup g = elements.front().group;
    const RingElement id = identity(g);
    const std::set<RingElement> set(elements.begin(), elements.end());
    if (set.size() != elements.size())
        throw std::invalid_argument("fingerprint: duplicate elements");
    if (set.find(id) == set.end())
        throw std::invalid_argument("fingerprint: identity missing");
    for (const auto& a : elements)
        for (const auto& b : elements)
            if (set.find(a * b) == set.end())
                throw std::invalid_argument("fingerprint: input not closed");

    GroupFingerprint fp;
    fp.order = static_cast<std::int64_t>(elements.size());

    std::vector<std::int64_t> orders;
    orders.reserve(elements.size());
    for (const auto& a : elements) {
        const auto o = element_order(a);
        orders.push_back(o);
        ++fp.order_statistics[o];
    }

    fp.is_abelian = true;
    fp.center_order = 0;
    for (const auto& a : elements) {
        bool central = true;
        for (const auto& b : elements)
            if (!(a * b == b * a)) {
                central = false;
                break;
            }
        if (central)
            ++fp.center_order;
        else
            fp.is_abelian = false;
    }

    if (fp.is_abelian) {
        std::map<std::int64_t, std::vector<int>> partitions;
        for (auto q : detail::prime_factors(fp.order))
            partitions[q] = detail::primary_partition(orders, q);
        fp.abelian_invariants = detail::invariant_factors(partitions);
    }
    return fp;
}

/// A direct product of cyclic groups, optionally with D_8 factors.
struct StructureDescriptor {
    std::vector<std::int64_t> cyclic_orders;
    int d8_factors = 0;

    std::string to_string() const {
        std::map<std::int64_t, int> mult;
        for (auto m : cyclic_orders)
            if (m > 1) ++mult[m];
        std::string out;
        for (const auto& [m, count] : mult) {
            if (!out.empty()) out += " x ";
            out += "C_" + std::to_string(m);
            if (count > 1) out += "^" + std::to_string(count);
        }
        for (int c = 0; c < d8_factors; ++c) {
            if (!out.empty()) out += " x ";
            out += "D_8";
        }
        return out.empty() ? "C_1" : out;
    }
};

/// Fingerprint the descriptor itself (order statistics by lcm-convolution).
inline GroupFingerprint expected_fingerprint(const StructureDescriptor& d) {
    if (d.d8_factors > 1)
        throw std::invalid_argument(
            "expected_fingerprint: at most one D_8 factor supported");
    GroupFingerprint fp;
    fp.order = 1;
    fp.center_order = 1;
    fp.order_statistics = {{1, 1}};
    auto convolve = [&fp](const std::map<std::int64_t, std::int64_t>& stats) {
        std::map<std::int64_t, std::int64_t> next;
        for (const auto& [o1, c1] : fp.order_statistics)
            for (const auto& [o2, c2] : stats)
                next[std::lcm(o1, o2)] += c1 * c2;
        fp.order_statistics = std::move(next);
    };
    for (auto m : d.cyclic_orders) {
        if (m < 1) throw std::invalid_argument("expected_fingerprint: bad order");
        std::map<std::int64_t, std::int64_t> stats;
        for (std::int64_t o = 1; o <= m; ++o)
            if (m % o == 0) {
                std::int64_t count = 0;  // Euler phi(o)
                for (std::int64_t v = 1; v <= o; ++v)
                    if (std::gcd(v, o) == 1) ++count;
                stats[o] = count;
            }
        convolve(stats);
        fp.order *= m;
        fp.center_order *= m;
    }
    for (int c = 0; c < d.d8_factors; ++c) {
        convolve({{1, 1}, {2, 5}, {4, 2}});
        fp.order *= 8;
        fp.center_order *= 2;
    }
    fp.is_abelian = d.d8_factors == 0;
    if (fp.is_abelian) {
        std::map<std::int64_t, std::vector<int>> partitions;
        for (auto m : d.cyclic_orders)
            for (auto q : detail::prime_factors(m)) {
                int e = 0;
                for (std::int64_t v = m; v % q == 0; v /= q) ++e;
                partitions[q].push_back(e);
            }
        for (auto& [q, parts] : partitions)
            std::sort(parts.begin(), parts.end(), std::greater<>());
        fp.abelian_invariants = detail::invariant_factors(partitions);
    }
    return fp;
}

/// Compare a computed fingerprint against a claimed structure. Abelian
/// targets compare invariant factors exactly; targets with a D_8 factor
/// compare order, non-abelianness, order statistics, and center order.
inline bool match_structure(const GroupFingerprint& fp,
                            const StructureDescriptor& d) {
    const auto want = expected_fingerprint(d);
    if (d.d8_factors == 0)
        return fp.is_abelian && fp.order == want.order &&
               fp.abelian_invariants == want.abelian_invariants;
    return !fp.is_abelian && fp.order == want.order &&
           fp.order_statistics == want.order_statistics &&
           fp.center_order == want.center_order;
}

/// The classified structure of the orthogonal unit group of B(G,G) for
/// cyclic p-groups. No structure is claimed for p = 2, n > 1 (open case).
inline std::optional<StructureDescriptor> claimed_unit_group_structure(
    const CyclicPGroup& g) {
    if (g.n == 0) return StructureDescriptor{{2}, 0};
    if (g.p == 2) {
        if (g.n == 1) return StructureDescriptor{{2}, 1};  // C_2 x D_8
        return std::nullopt;
    }
    StructureDescriptor d;
    const int twos = g.n + (g.p == 3 ? 2 : 1);
    for (int c = 0; c < twos; ++c) d.cyclic_orders.push_back(2);
    for (int i = 1; i <= g.n; ++i)
        d.cyclic_orders.push_back(pow_i64(g.p, i - 1) * (g.p - 1));  // |Out(C_{p^i})|
    return d;
}

}  // namespace dburnside
