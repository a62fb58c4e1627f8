#pragma once

/**
 * @file solver.hpp
 * @brief Enumeration of orthogonal units of B(G,G).
 *
 * A unit u with u u° = u° u = Id_G splits through rho as an eta-part
 * (a sign times an outer automorphism) and a kernel part Id_G - alpha with
 * alpha in I_G satisfying
 *
 *     alpha alpha° = alpha° alpha = alpha + alpha°.
 *
 * Two solvers enumerate the alphas:
 *  - kernel_oracle: exhaustive box search over the ideal coordinates. Slow,
 *    assumption-free; the trust anchor for small groups.
 *  - kernel_pruned: structured search. Coefficients whose quintuple has a
 *    trivial kernel on either side are pinned down by positive-weighted
 *    square-sum equations read off diagonal basis elements; whatever survives
 *    is confined to the inflated copy of B(G/C_p, G/C_p) and handled by
 *    recursion. Odd p resolves completely; p = 2 with n > 1 falls back to a
 *    bounded exploratory search and is reported as unverified.
 */

#include <chrono>
#include <cmath>
#include <functional>

#include "group_id.hpp"

namespace dburnside {

enum class SearchMode { oracle, pruned };

inline const char* to_string(SearchMode m) {
    return m == SearchMode::oracle ? "oracle" : "pruned";
}

struct SearchConfig {
    std::int64_t coefficient_bound = 6;  ///< box half-width for oracle/fallback
    SearchMode mode = SearchMode::pruned;
    double time_budget_seconds = 0;      ///< 0 disables the deadline
    std::size_t fingerprint_cap = 4096;  ///< skip full fingerprint above this
};

class Deadline {
  public:
    explicit Deadline(double seconds)
        : enabled_(seconds > 0),
          end_(std::chrono::steady_clock::now() +
               std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                   std::chrono::duration<double>(seconds > 0 ? seconds : 0))) {}

    bool expired() const {
        return enabled_ && std::chrono::steady_clock::now() > end_;
    }

  private:
    bool enabled_;
    std::chrono::steady_clock::time_point end_;
};

inline bool is_orthogonal_unit(const RingElement& u) {
    const RingElement ud = dual(u);
    const RingElement id = identity(u.group);
    return u * ud == id && ud * u == id;
}

/// alpha in I_G with alpha alpha° = alpha° alpha = alpha + alpha°.
inline bool is_kernel_solution(const RingElement& alpha) {
    for (const auto& [q, c] : alpha.coeffs)
        if (!in_ideal(alpha.group, q)) return false;
    const RingElement ad = dual(alpha);
    const RingElement sum = alpha + ad;
    return alpha * ad == sum && ad * alpha == sum;
}

struct KernelSearchResult {
    CyclicPGroup group;
    std::vector<RingElement> solutions;  ///< canonical order
    SearchMode mode = SearchMode::oracle;
    std::int64_t bound_used = 0;
    bool complete = false;         ///< solution set provably exhaustive
    bool budget_exceeded = false;  ///< deadline cut the search short
    bool support_in_lifted_basis = false;  ///< all kernels >= C_p on both sides
    std::vector<std::string> notes;

    explicit KernelSearchResult(const CyclicPGroup& g) : group(g) {}
};

namespace detail {

inline void finalize_solutions(KernelSearchResult& r,
                               std::set<RingElement>&& found) {
    r.solutions.assign(found.begin(), found.end());
    r.support_in_lifted_basis = r.complete;
    for (const auto& a : r.solutions)
        for (const auto& [q, c] : a.coeffs)
            if (q.j < 1 || q.l < 1) r.support_in_lifted_basis = false;
}

}  // namespace detail

/// Exhaustive search of the coefficient box |a_X| <= B over all of I_G.
/// Intended for C_p, where I_G is four-dimensional; the reduction to any
/// smaller coordinate set is discovered by the search, never assumed.
inline KernelSearchResult kernel_oracle(const CyclicPGroup& g,
                                        const SearchConfig& cfg) {
    if (cfg.coefficient_bound < 0)
        throw std::invalid_argument("kernel_oracle: bound must be >= 0");
    KernelSearchResult result(g);
    result.mode = SearchMode::oracle;
    result.bound_used = cfg.coefficient_bound;

    const auto coords = ideal_basis(g);
    const std::int64_t B = cfg.coefficient_bound;
    const Deadline deadline(cfg.time_budget_seconds);
    std::set<RingElement> found;

    std::vector<std::int64_t> values(coords.size(), -B);
    std::uint64_t visited = 0;
    bool truncated = false;
    if (coords.empty()) {
        found.insert(RingElement(g));
    } else {
        for (;;) {
            if ((++visited & 1023) == 0 && deadline.expired()) {
                truncated = true;
                break;
            }
            RingElement alpha(g);
            for (std::size_t c = 0; c < coords.size(); ++c)
                if (values[c] != 0) alpha.coeffs.emplace(coords[c], values[c]);
            if (is_kernel_solution(alpha)) found.insert(std::move(alpha));
            std::size_t c = 0;
            while (c < coords.size() && values[c] == B) values[c++] = -B;
            if (c == coords.size()) break;
            ++values[c];
        }
    }

    result.budget_exceeded = truncated;
    result.complete = !truncated;
    result.notes.push_back(
        "oracle: exhaustive box |a| <= " + std::to_string(B) + " over " +
        std::to_string(coords.size()) + " ideal coordinates" +
        (truncated ? " (truncated at time budget)" : ""));
    detail::finalize_solutions(result, std::move(found));
    return result;
}

namespace detail {

/// The quadratic system over the ideal coordinates: for every basis element
/// Q of I_G, the Q-coefficients of alpha alpha° and alpha° alpha must both
/// equal a_Q + a_{Q°}.
struct QuadraticSystem {
    std::vector<Quintuple> coords;
    std::map<Quintuple, int> index;

    struct Equation {
        // weight * x[a] * x[b], summed, minus x[q] - x[qd], must vanish
        std::vector<std::tuple<int, int, std::int64_t>> terms;
        int q = 0, qd = 0;
    };
    std::vector<Equation> equations;

    explicit QuadraticSystem(const CyclicPGroup& g) : coords(ideal_basis(g)) {
        for (std::size_t c = 0; c < coords.size(); ++c)
            index.emplace(coords[c], static_cast<int>(c));
        std::map<Quintuple, Equation> plus, minus;
        for (const auto& q : coords) {
            const int iq = index.at(q);
            const int iqd = index.at(opposite(g, q));
            plus[q].q = minus[q].q = iq;
            plus[q].qd = minus[q].qd = iqd;
        }
        for (const auto& X : coords)
            for (const auto& Y : coords) {
                const Quintuple Q = star(g, X, Y);
                const std::int64_t w = gamma(g, X, Y);
                plus[Q].terms.emplace_back(index.at(X),
                                           index.at(opposite(g, Y)), w);
                minus[Q].terms.emplace_back(index.at(opposite(g, X)),
                                            index.at(Y), w);
            }
        for (auto& [q, e] : plus) equations.push_back(std::move(e));
        for (auto& [q, e] : minus) equations.push_back(std::move(e));
    }
};

struct PartialAssignment {
    std::vector<std::optional<std::int64_t>> values;

    explicit PartialAssignment(std::size_t dim) : values(dim) {}
};

/// Integer roots of a x^2 + b x + c = 0 (a may be zero).
inline std::vector<std::int64_t> integer_roots(const Int& a, const Int& b,
                                               const Int& c) {
    std::vector<std::int64_t> roots;
    if (a == 0) {
        if (b == 0) return roots;  // constant equation; caller checks c
        if (c % b == 0) roots.push_back(static_cast<std::int64_t>(-c / b));
        return roots;
    }
    const Int disc = b * b - 4 * a * c;
    if (disc < 0) return roots;
    const Int s = boost::multiprecision::sqrt(disc);
    if (s * s != disc) return roots;
    for (const Int& num : {-b + s, -b - s}) {
        if (num % (2 * a) == 0) {
            const auto r = static_cast<std::int64_t>(num / (2 * a));
            if (roots.empty() || roots.front() != r) roots.push_back(r);
        }
    }
    return roots;
}

class PrunedSearch {
  public:
    PrunedSearch(const CyclicPGroup& g, const SearchConfig& cfg,
                 KernelSearchResult& result)
        : g_(g),
          cfg_(cfg),
          result_(result),
          deadline_(cfg.time_budget_seconds),
          system_(g) {}

    void run() {
        PartialAssignment state(system_.coords.size());
        result_.complete = true;
        diagonal_sweep(state, g_.n - 1, true);
    }

  private:
    const CyclicPGroup& g_;
    const SearchConfig& cfg_;
    KernelSearchResult& result_;
    Deadline deadline_;
    QuadraticSystem system_;
    std::set<RingElement> found_;
    std::set<std::string> emitted_notes_;

  public:
    std::set<RingElement>&& take_found() { return std::move(found_); }

  private:
    void note_once(const std::string& s) {
        if (emitted_notes_.insert(s).second) result_.notes.push_back(s);
    }

    void assign(PartialAssignment& state, const Quintuple& q,
                std::int64_t v) const {
        state.values[static_cast<std::size_t>(system_.index.at(q))] = v;
    }

    /// Coefficient group attached to the diagonal (m,0;m,0)_1: every ideal
    /// quintuple whose left or right section is exactly (m,0). The diagonal
    /// coefficient of alpha alpha° restricted to this stage is the
    /// positive-weighted square sum  sum_X gamma(X,X°) a_X^2 = 2 a_diag.
    std::vector<Quintuple> stage_group(int m) const {
        std::vector<Quintuple> out;
        for (const auto& q : system_.coords)
            if ((q.i == m && q.j == 0) || (q.k == m && q.l == 0))
                out.push_back(q);
        return out;
    }

    /// Stages m = n-1 .. 1, processed in descending order while every
    /// previously assigned coefficient is zero ("clean"). The weight of the
    /// diagonal square is p^(n-m), so 0 <= a_diag <= 2/p^(n-m): zero unless
    /// p^(n-m) = 2, where a_diag = 1 forces the rest of the stage to zero.
    void diagonal_sweep(PartialAssignment state, int m, bool clean) {
        if (deadline_.expired()) {
            result_.budget_exceeded = true;
            result_.complete = false;
            return;
        }
        if (m < 1) {
            edge_sweep(std::move(state), clean);
            return;
        }
        if (!clean) {
            diagonal_sweep(std::move(state), m - 1, false);
            return;
        }
        const std::int64_t w = pow_i64(g_.p, g_.n - m);
        const std::int64_t maxv = 2 / w;
        const Quintuple diag{m, 0, m, 0, 1};
        note_once("diagonal sweep m=" + std::to_string(m) +
                  ": weight p^(n-m)=" + std::to_string(w) +
                  " bounds the diagonal coefficient to [0," +
                  std::to_string(maxv) + "]");
        for (std::int64_t v = 0; v <= maxv; ++v) {
            PartialAssignment next = state;
            const std::int64_t residual = 2 * v - w * v * v;
            if (residual != 0) continue;  // squares cannot absorb a remainder
            for (const auto& q : stage_group(m))
                assign(next, q, q == diag ? v : 0);
            diagonal_sweep(std::move(next), m - 1, clean && v == 0);
        }
    }

    /// The remaining trivial-kernel coordinates all have t = 0: the chains
    /// (0,0;c,c) and (c,c;0,0). In a clean state the (0,0;0,0)-coefficient
    /// of alpha alpha° telescopes to
    ///   sum_k w_k (a_0+...+a_k)^2 = 2 a_0,  w_k = p^(n-k)-p^(n-k-1), w_n = 1,
    /// so the partial sums are enumerable exactly; the mirrored equation from
    /// alpha° alpha does the same for the (c,c;0,0) side.
    void edge_sweep(PartialAssignment state, bool clean) {
        if (!clean) {
            finish(std::move(state), false);
            return;
        }
        std::vector<std::int64_t> weights(static_cast<std::size_t>(g_.n) + 1);
        for (int c = 0; c < g_.n; ++c)
            weights[static_cast<std::size_t>(c)] =
                pow_i64(g_.p, g_.n - c) - pow_i64(g_.p, g_.n - c - 1);
        weights[static_cast<std::size_t>(g_.n)] = 1;

        const std::int64_t max0 = 2 / weights[0];
        note_once("edge sweep: weight p^n-p^(n-1)=" + std::to_string(weights[0]) +
                  " bounds the (0,0;0,0) coefficient to [0," +
                  std::to_string(max0) + "]");
        for (std::int64_t a0 = 0; a0 <= max0; ++a0) {
            std::vector<std::vector<std::int64_t>> sides;
            enumerate_partial_sums(weights, a0, sides);
            for (const auto& left : sides)
                for (const auto& right : sides) {
                    PartialAssignment next = state;
                    bool zero = a0 == 0;
                    for (int c = 0; c <= g_.n; ++c) {
                        const auto lc = left[static_cast<std::size_t>(c)];
                        const auto rc = right[static_cast<std::size_t>(c)];
                        if (lc != 0 || rc != 0) zero = false;
                        assign(next, Quintuple{0, 0, c, c, 1}, lc);
                        assign(next, Quintuple{c, c, 0, 0, 1}, rc);
                    }
                    finish(std::move(next), clean && zero);
                }
        }
    }

    /// All integer coefficient vectors (a_0..a_n) with fixed a_0 whose
    /// partial sums s_k satisfy sum_k w_k s_k^2 = 2 a_0.
    static void enumerate_partial_sums(const std::vector<std::int64_t>& w,
                                       std::int64_t a0,
                                       std::vector<std::vector<std::int64_t>>& out) {
        std::vector<std::int64_t> sums{a0};
        std::int64_t residual = 2 * a0 - w[0] * a0 * a0;
        if (residual < 0) return;
        std::function<void(std::size_t, std::int64_t)> rec =
            [&](std::size_t k, std::int64_t rem) {
                if (k == w.size()) {
                    if (rem != 0) return;
                    std::vector<std::int64_t> coeffs(w.size());
                    coeffs[0] = sums[0];
                    for (std::size_t c = 1; c < w.size(); ++c)
                        coeffs[c] = sums[c] - sums[c - 1];
                    out.push_back(std::move(coeffs));
                    return;
                }
                for (std::int64_t s = 0; w[k] * s * s <= rem; ++s) {
                    for (const std::int64_t v : s == 0
                                                    ? std::vector<std::int64_t>{0}
                                                    : std::vector<std::int64_t>{s, -s}) {
                        sums.push_back(v);
                        rec(k + 1, rem - w[k] * v * v);
                        sums.pop_back();
                    }
                }
            };
        rec(1, residual);
    }

    /// Every coordinate with a trivial kernel on either side is assigned.
    /// A clean all-zero state is exactly the inflated copy of the quotient
    /// ring: recurse. States carrying nonzero values are completed by
    /// quadratic constraint propagation with a bounded fallback.
    void finish(PartialAssignment state, bool zero_and_clean) {
        if (deadline_.expired()) {
            result_.budget_exceeded = true;
            result_.complete = false;
            return;
        }
        if (zero_and_clean) {
            recurse_into_quotient();
            return;
        }
        propagate(std::move(state));
    }

    void recurse_into_quotient();

    /// Look for an equation with at most one unknown coordinate; solve its
    /// integer roots and branch. Falls back to a bounded coordinate search
    /// when every remaining equation is genuinely multivariate.
    void propagate(PartialAssignment state) {
        if (deadline_.expired()) {
            result_.budget_exceeded = true;
            result_.complete = false;
            return;
        }
        for (const auto& eq : system_.equations) {
            int unknown = -1;
            bool single = true;
            Int qa = 0, qb = 0, qc = 0;
            auto touch = [&](int idx) {
                if (state.values[static_cast<std::size_t>(idx)]) return true;
                if (unknown == -1) unknown = idx;
                if (unknown != idx) single = false;
                return false;
            };
            for (const auto& [ia, ib, w] : eq.terms) {
                const bool ka = touch(ia), kb = touch(ib);
                if (!single) break;
                if (ka && kb)
                    qc += Int(w) * *state.values[static_cast<std::size_t>(ia)] *
                          *state.values[static_cast<std::size_t>(ib)];
                else if (ka)
                    qb += Int(w) * *state.values[static_cast<std::size_t>(ia)];
                else if (kb)
                    qb += Int(w) * *state.values[static_cast<std::size_t>(ib)];
                else
                    qa += w;
            }
            if (!single) continue;
            for (const int idx : {eq.q, eq.qd}) {
                if (touch(idx))
                    qc -= *state.values[static_cast<std::size_t>(idx)];
                else
                    qb -= 1;
            }
            if (!single) continue;
            if (unknown == -1) {
                if (qc != 0) return;  // fully assigned and violated
                continue;
            }
            for (const auto r : integer_roots(qa, qb, qc)) {
                PartialAssignment next = state;
                next.values[static_cast<std::size_t>(unknown)] = r;
                propagate(std::move(next));
            }
            if (qa == 0 && qb == 0 && qc == 0)
                continue;  // equation vacuous for this unknown; keep scanning
            return;
        }
        std::vector<std::size_t> open;
        for (std::size_t c = 0; c < state.values.size(); ++c)
            if (!state.values[c]) open.push_back(c);
        if (open.empty()) {
            RingElement alpha(g_);
            for (std::size_t c = 0; c < state.values.size(); ++c)
                if (*state.values[c] != 0)
                    alpha.coeffs.emplace(system_.coords[c], *state.values[c]);
            if (is_kernel_solution(alpha)) found_.insert(std::move(alpha));
            return;
        }
        // Bounded exploratory fallback; completeness is lost here.
        note_once("fallback: bounded search |a| <= " +
                  std::to_string(cfg_.coefficient_bound) +
                  " over coordinates no equation pins down individually");
        result_.complete = false;
        const std::size_t idx = open.front();
        for (std::int64_t mag = 0; mag <= cfg_.coefficient_bound; ++mag) {
            for (const std::int64_t v :
                 mag == 0 ? std::vector<std::int64_t>{0}
                          : std::vector<std::int64_t>{mag, -mag}) {
                if (deadline_.expired()) {
                    result_.budget_exceeded = true;
                    return;
                }
                PartialAssignment next = state;
                next.values[idx] = v;
                propagate(std::move(next));
            }
        }
    }
};

}  // namespace detail

inline KernelSearchResult kernel_pruned(const CyclicPGroup& g,
                                        const SearchConfig& cfg);

namespace detail {

/// Beta-solutions of the quotient: all beta = Id - u with u an orthogonal
/// unit of B(G',G'); their inflations are exactly the kernel solutions of G
/// that are supported on the lifted basis.
inline std::vector<RingElement> beta_solutions(const CyclicPGroup& g,
                                               const SearchConfig& cfg,
                                               KernelSearchResult& parent) {
    const auto sub = kernel_pruned(g, cfg);
    if (!sub.complete) parent.complete = false;
    if (sub.budget_exceeded) parent.budget_exceeded = true;
    std::vector<RingElement> out;
    const RingElement id = identity(g);
    std::vector<SignedOuterAut> etas;
    for (int sign : {1, -1})
        for (const auto& u : units_mod(g, g.n))
            etas.push_back(SignedOuterAut{sign, u});
    for (const auto& s : etas) {
        const RingElement e = eta(g, s);
        for (const auto& alpha : sub.solutions)
            out.push_back(id - e * (id - alpha));
    }
    return out;
}

inline void PrunedSearch::recurse_into_quotient() {
    note_once(
        "all coefficients with a trivial kernel on either side vanish; "
        "remaining support lies in the inflated copy of the quotient ring");
    const CyclicPGroup quotient(g_.p, g_.n - 1);
    for (const auto& beta : beta_solutions(quotient, cfg_, result_)) {
        RingElement alpha = rng_embed(g_, 1, beta);
        if (!is_kernel_solution(alpha))
            throw std::logic_error("pruned: inflated candidate fails the system");
        found_.insert(std::move(alpha));
    }
}

}  // namespace detail

/// Structured search mirroring the diagonal/edge elimination. Complete for
/// odd p and for n <= 1; exploratory (bounded, unverified) for p = 2, n > 1.
inline KernelSearchResult kernel_pruned(const CyclicPGroup& g,
                                        const SearchConfig& cfg) {
    KernelSearchResult result(g);
    result.mode = SearchMode::pruned;
    result.bound_used = cfg.coefficient_bound;
    if (g.n == 0) {
        result.complete = true;
        result.notes.push_back("trivial group: I_G = 0");
        detail::finalize_solutions(result, {RingElement(g)});
        return result;
    }
    detail::PrunedSearch search(g, cfg, result);
    search.run();
    if (g.p == 2 && g.n > 1)
        result.notes.push_back(
            "p = 2, n > 1: exploratory mode; the classification here is an "
            "open problem and reported results are UNVERIFIED");
    detail::finalize_solutions(result, search.take_found());
    return result;
}

/// The enumerated group of orthogonal units with identification data.
struct UnitGroupReport {
    CyclicPGroup group;
    KernelSearchResult kernel;
    std::vector<RingElement> elements;  ///< all units, canonical order
    std::optional<GroupFingerprint> fingerprint;
    std::optional<StructureDescriptor> claimed;
    std::optional<bool> match;  ///< empty when no fingerprint or no claim
    bool verified = false;      ///< classification provably complete
    bool direct_product_verified = false;
    std::vector<std::string> notes;

    explicit UnitGroupReport(const CyclicPGroup& g)
        : group(g), kernel(KernelSearchResult(g)) {}
};

/// Assemble B_o(G,G) = im(eta) x ker(rho^x) from the kernel solutions,
/// check every product is an orthogonal unit, fingerprint the group, and
/// compare against the classified structure.
inline UnitGroupReport orthogonal_unit_group(const CyclicPGroup& g,
                                             const SearchConfig& cfg) {
    UnitGroupReport report(g);
    report.kernel = cfg.mode == SearchMode::oracle ? kernel_oracle(g, cfg)
                                                   : kernel_pruned(g, cfg);
    report.notes = report.kernel.notes;

    const RingElement id = identity(g);
    std::vector<RingElement> kernel_units;
    for (const auto& alpha : report.kernel.solutions)
        kernel_units.push_back(id - alpha);

    std::set<RingElement> units;
    for (int sign : {1, -1})
        for (const auto& u : units_mod(g, g.n)) {
            const RingElement e = eta(g, sign, u.value);
            for (const auto& k : kernel_units) {
                RingElement prod = e * k;
                if (!is_orthogonal_unit(prod))
                    throw std::logic_error(
                        "orthogonal_unit_group: assembled element fails "
                        "orthogonality");
                units.insert(std::move(prod));
            }
        }
    report.elements.assign(units.begin(), units.end());

    // Direct-product structure: each unit factors uniquely through rho as
    // eta-part times kernel-part, and the two parts commute.
    const std::set<RingElement> kernel_set(kernel_units.begin(),
                                           kernel_units.end());
    report.direct_product_verified = true;
    for (const auto& u : report.elements) {
        const auto s = rho_times(u);
        if (!s) {
            report.direct_product_verified = false;
            break;
        }
        const RingElement e = eta(g, *s);
        const RingElement k = eta(g, SignedOuterAut{s->sign, unit_inv(g, s->aut)}) * u;
        if (kernel_set.find(k) == kernel_set.end() || !(e * k == u) ||
            !(k * e == u)) {
            report.direct_product_verified = false;
            break;
        }
    }
    if (report.elements.size() !=
        kernel_units.size() * 2 *
            units_mod(g, g.n).size())
        report.direct_product_verified = false;

    report.verified = report.kernel.complete && !(g.p == 2 && g.n > 1);
    report.claimed = claimed_unit_group_structure(g);

    if (!report.kernel.complete) {
        report.notes.push_back(
            "fingerprint skipped: kernel search incomplete, assembled set "
            "need not be a group");
    } else if (report.elements.size() <= cfg.fingerprint_cap) {
        report.fingerprint = fingerprint(report.elements);
        if (report.claimed)
            report.match = match_structure(*report.fingerprint, *report.claimed);
    } else {
        report.notes.push_back(
            "fingerprint skipped: group order " +
            std::to_string(report.elements.size()) + " exceeds cap " +
            std::to_string(cfg.fingerprint_cap) +
            "; order and direct-product checks still apply");
        if (report.claimed) {
            const auto want = expected_fingerprint(*report.claimed);
            report.match = want.order ==
                               static_cast<std::int64_t>(report.elements.size()) &&
                           report.direct_product_verified;
        }
    }
    return report;
}

}  // namespace dburnside
