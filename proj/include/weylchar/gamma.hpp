#ifndef WEYLCHAR_GAMMA_HPP
#define WEYLCHAR_GAMMA_HPP

// Gamma-set tables: the Weyl alternant rebuilt without summing over the
// Weyl group.
//
// For each fundamental weight l_i the candidates gamma_i are the elements of
// the positive root lattice with (l_i - gamma_i, l_i - gamma_i) = (l_i, l_i);
// they are exactly l_i - W(l_i). An entry picks one candidate per index such
// that (l_i - gamma_i, l_j - gamma_j) = (l_i, l_j) for all i, j. The map
// U: l_i -> l_i - gamma_i is then orthogonal, its determinant is the entry's
// signature, and the entry contributes the signed monomial with simple-root
// exponents
//
//     xi_i = 2 (l_i - gamma_i, rho + Lambda) / (a_i, a_i)
//
// to A(rho + Lambda). In fundamental-weight coordinates that monomial is
// U^{-1}(rho + Lambda), which is integral, so each entry caches the integer
// matrix of U^{-1}.
//
// Indices (fundamental weight, candidate) are zero-based throughout.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "weylchar/algebra.hpp"
#include "weylchar/errors.hpp"
#include "weylchar/exact.hpp"
#include "weylchar/laurent.hpp"
#include "weylchar/weyl.hpp"

namespace weylchar {

struct GammaEntry {
    /// selector[i] indexes candidates[i].
    std::vector<std::size_t> selector;
    int signature = 1;
    /// Fundamental-weight coordinates of the entry's monomial are action * (rho + Lambda).
    IntMatrix action;
};

struct GammaTable {
    Family family = Family::A;
    int rank = 0;
    /// candidates[i]: simple-root coordinates of gamma_i, sorted by height then lexicographically.
    std::vector<std::vector<IntVec>> candidates;
    /// Sorted by selector.
    std::vector<GammaEntry> entries;

    std::string algebra_id() const { return std::string(1, static_cast<char>(family)) + std::to_string(rank); }
    std::size_t size() const { return entries.size(); }

    friend bool operator==(const GammaTable& a, const GammaTable& b)
    {
        if (a.family != b.family || a.rank != b.rank || a.candidates != b.candidates ||
            a.entries.size() != b.entries.size())
            return false;
        for (std::size_t k = 0; k < a.entries.size(); ++k)
            if (a.entries[k].selector != b.entries[k].selector || a.entries[k].signature != b.entries[k].signature)
                return false;
        return true;
    }
};

namespace detail {

inline void check_index(const Algebra& a, std::size_t i)
{
    if (i >= a.size())
        throw InputError("fundamental weight index " + std::to_string(i) + " out of range for " + a.id());
}

inline void check_table(const Algebra& a, const GammaTable& t)
{
    if (t.family != a.family() || t.rank != a.rank())
        throw InputError("Gamma table for " + t.algebra_id() + " used with algebra " + a.id());
}

/// l_i - gamma in fundamental-weight coordinates.
inline IntVec image_of(const Algebra& a, std::size_t i, const IntVec& gamma_roots)
{
    IntVec w = a.root_to_weight(gamma_roots);
    for (auto& x : w)
        x = -x;
    w[i] += 1;
    return w;
}

/// Columns are the images l_i - gamma_i.
inline IntMatrix image_matrix(const Algebra& a, const GammaTable& t, const std::vector<std::size_t>& selector)
{
    const std::size_t n = a.size();
    IntMatrix m(n, IntVec(n));
    for (std::size_t i = 0; i < n; ++i) {
        const IntVec col = image_of(a, i, t.candidates[i].at(selector[i]));
        for (std::size_t j = 0; j < n; ++j)
            m[j][i] = col[j];
    }
    return m;
}

/// X with xi = X (rho + Lambda), X_ik = (l_i - gamma_i, l_k) / d_i.
inline RationalMatrix xi_matrix(const Algebra& a, const GammaTable& t, const std::vector<std::size_t>& selector)
{
    const std::size_t n = a.size();
    RationalMatrix x(n, RationalVec(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        const IntVec mu = image_of(a, i, t.candidates[i].at(selector[i]));
        for (std::size_t k = 0; k < n; ++k) {
            Rational s = 0;
            for (std::size_t m = 0; m < n; ++m)
                s += mu[m] * a.weight_gram()[m][k];
            x[i][k] = s / a.half_norms()[i];
        }
    }
    return x;
}

/// C^T X, which must be integral.
inline IntMatrix action_matrix(const Algebra& a, const GammaTable& t, const std::vector<std::size_t>& selector)
{
    const RationalMatrix x = xi_matrix(a, t, selector);
    const std::size_t n = a.size();
    IntMatrix m(n, IntVec(n));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
            Rational s = 0;
            for (std::size_t i = 0; i < n; ++i)
                s += a.cartan()[i][j] * x[i][k];
            m[j][k] = to_int64(s);
        }
    return m;
}

inline bool gram_holds(const Algebra& a, std::size_t i, const IntVec& mu_i, std::size_t j, const IntVec& mu_j)
{
    IntVec li(a.size(), 0), lj(a.size(), 0);
    li[i] = 1;
    lj[j] = 1;
    return a.scaled_dot(mu_i, mu_j) == a.scaled_dot(li, lj);
}

}  // namespace detail

/// Simple-root coordinates of the candidates gamma_i, i.e. l_i - W(l_i).
inline std::vector<IntVec> gamma_candidate_coords(const Algebra& a, std::size_t i)
{
    detail::check_index(a, i);
    IntVec li(a.size(), 0);
    li[i] = 1;
    std::vector<IntVec> out;
    for (const auto& mu : orbit_weights(a, li)) {
        IntVec diff = li;
        for (std::size_t k = 0; k < diff.size(); ++k)
            diff[k] -= mu[k];
        const RationalVec roots = a.root_coords(diff);
        IntVec gamma = to_int_vec(roots);
        if (std::any_of(gamma.begin(), gamma.end(), [](std::int64_t x) { return x < 0; }))
            throw IntegrityError("candidate outside the positive root lattice: " + format_vec(gamma));
        out.push_back(std::move(gamma));
    }
    std::sort(out.begin(), out.end(), detail::height_then_lex);
    return out;
}

inline std::vector<WeightVec> gamma_candidates(const Algebra& a, std::size_t i)
{
    std::vector<WeightVec> out;
    for (const auto& g : gamma_candidate_coords(a, i))
        out.push_back(WeightVec::in_roots(g));
    return out;
}

/// Determinant of U: l_i -> l_i - gamma_i in the fundamental-weight basis.
inline int signature_of(const Algebra& a, const GammaTable& t, const std::vector<std::size_t>& selector)
{
    detail::check_table(a, t);
    if (selector.size() != a.size())
        throw InputError("selector must have one index per fundamental weight");
    const BigInt det = determinant(detail::image_matrix(a, t, selector));
    if (det != 1 && det != -1)
        throw IntegrityError("Gamma-set determinant is " + det.get_str() + ", expected +1 or -1");
    return det.get_si();
}

/// Every Gram condition, signature, ordering and count of a table. Recomputes
/// the cached action matrices. Throws IntegrityError on the first violation.
inline void validate_table(const Algebra& a, GammaTable& t)
{
    detail::check_table(a, t);
    const std::size_t n = a.size();
    if (t.candidates.size() != n)
        throw IntegrityError("table has " + std::to_string(t.candidates.size()) + " candidate lists, expected " +
                             std::to_string(n));
    std::vector<std::vector<IntVec>> images(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (t.candidates[i].size() != orbit_weights(a, a.weight_coords(a.fundamental_weights()[i])).size())
            throw IntegrityError("candidate list " + std::to_string(i) + " does not match the orbit size");
        for (const auto& g : t.candidates[i]) {
            if (g.size() != n || std::any_of(g.begin(), g.end(), [](std::int64_t x) { return x < 0; }))
                throw IntegrityError("candidate " + format_vec(g) + " is not in the positive root lattice");
            images[i].push_back(detail::image_of(a, i, g));
            if (!detail::gram_holds(a, i, images[i].back(), i, images[i].back()))
                throw IntegrityError("candidate " + format_vec(g) + " violates the diagonal Gram condition");
        }
        if (!std::is_sorted(t.candidates[i].begin(), t.candidates[i].end(), detail::height_then_lex) ||
            std::adjacent_find(t.candidates[i].begin(), t.candidates[i].end()) != t.candidates[i].end())
            throw IntegrityError("candidate list " + std::to_string(i) + " is not canonically ordered");
    }
    const BigInt order = weyl_group_order(a);
    if (BigInt(static_cast<unsigned long>(t.entries.size())) != order)
        throw IntegrityError("table has " + std::to_string(t.entries.size()) + " entries but |W| = " + order.get_str());
    int signature_sum = 0;
    for (std::size_t k = 0; k < t.entries.size(); ++k) {
        auto& e = t.entries[k];
        if (e.selector.size() != n)
            throw IntegrityError("entry " + std::to_string(k) + " has a malformed selector");
        if (k > 0 && !(t.entries[k - 1].selector < e.selector))
            throw IntegrityError("entries are not sorted and unique at position " + std::to_string(k));
        for (std::size_t i = 0; i < n; ++i)
            if (e.selector[i] >= t.candidates[i].size())
                throw IntegrityError("entry " + std::to_string(k) + " selects a missing candidate");
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (!detail::gram_holds(a, i, images[i][e.selector[i]], j, images[j][e.selector[j]]))
                    throw IntegrityError("entry " + std::to_string(k) + " violates the Gram condition for (" +
                                         std::to_string(i) + "," + std::to_string(j) + ")");
        if (signature_of(a, t, e.selector) != e.signature)
            throw IntegrityError("entry " + std::to_string(k) + " carries the wrong signature");
        signature_sum += e.signature;
        e.action = detail::action_matrix(a, t, e.selector);
    }
    if (signature_sum != 0)
        throw IntegrityError("signatures do not cancel");
}

/// Builds the table by depth-first search over candidate indices with
/// forward checking: choosing gamma_i immediately narrows every other
/// index to the candidates compatible with it.
inline GammaTable assemble(const Algebra& a)
{
    check_envelope(a);
    const std::size_t n = a.size();
    GammaTable t;
    t.family = a.family();
    t.rank = a.rank();
    std::vector<std::vector<IntVec>> images(n);
    for (std::size_t i = 0; i < n; ++i) {
        t.candidates.push_back(gamma_candidate_coords(a, i));
        for (const auto& g : t.candidates[i])
            images[i].push_back(detail::image_of(a, i, g));
    }

    // compat[i][j][p] = candidates q of j with (l_i - gamma_i(p), l_j - gamma_j(q)) = (l_i, l_j)
    using Bits = boost::dynamic_bitset<>;
    std::vector<std::vector<std::vector<Bits>>> compat(n, std::vector<std::vector<Bits>>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j)
                continue;
            compat[i][j].assign(images[i].size(), Bits(images[j].size()));
            for (std::size_t p = 0; p < images[i].size(); ++p)
                for (std::size_t q = 0; q < images[j].size(); ++q)
                    if (detail::gram_holds(a, i, images[i][p], j, images[j][q]))
                        compat[i][j][p].set(q);
        }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return t.candidates[x].size() < t.candidates[y].size(); });

    std::vector<std::vector<std::size_t>> found;
    std::vector<std::size_t> selector(n);
    std::vector<Bits> domains(n);
    for (std::size_t i = 0; i < n; ++i)
        domains[i] = Bits(images[i].size()).set();

    std::function<void(std::size_t, const std::vector<Bits>&)> search = [&](std::size_t level,
                                                                           const std::vector<Bits>& dom) {
        if (level == n) {
            found.push_back(selector);
            return;
        }
        const std::size_t idx = order[level];
        for (auto p = dom[idx].find_first(); p != Bits::npos; p = dom[idx].find_next(p)) {
            std::vector<Bits> next = dom;
            bool alive = true;
            for (std::size_t l = level + 1; l < n && alive; ++l) {
                const std::size_t other = order[l];
                next[other] &= compat[idx][other][p];
                alive = next[other].any();
            }
            if (!alive)
                continue;
            selector[idx] = p;
            search(level + 1, next);
        }
    };
    search(0, domains);

    std::sort(found.begin(), found.end());
    const BigInt order_w = weyl_group_order(a);
    if (BigInt(static_cast<unsigned long>(found.size())) != order_w)
        throw IntegrityError("Gamma-set count " + std::to_string(found.size()) + " differs from |W(" + a.id() +
                             ")| = " + order_w.get_str());
    for (auto& s : found) {
        GammaEntry e;
        e.selector = std::move(s);
        e.signature = signature_of(a, t, e.selector);
        e.action = detail::action_matrix(a, t, e.selector);
        t.entries.push_back(std::move(e));
    }
    return t;
}

inline const GammaEntry& entry_at(const GammaTable& t, std::size_t entry)
{
    if (entry >= t.entries.size())
        throw InputError("entry index " + std::to_string(entry) + " out of range");
    return t.entries[entry];
}

/// Simple-root exponents xi(A) of the entry's monomial in A(rho + highest).
inline WeightVec xi_exponents(const Algebra& a, const GammaTable& t, std::size_t entry, const IntVec& highest)
{
    detail::check_table(a, t);
    a.check_size(highest.size());
    if (!a.is_dominant(highest))
        throw InputError("highest weight must be dominant, got " + format_vec(highest));
    const RationalMatrix x = detail::xi_matrix(a, t, entry_at(t, entry).selector);
    return {mat_vec(x, to_rational(detail::shifted_by_rho(highest))), Basis::root};
}

inline WeightVec xi_exponents(const Algebra& a, const GammaTable& t, std::size_t entry, const WeightVec& highest)
{
    return xi_exponents(a, t, entry, detail::dominant_input(a, highest));
}

/// A(rho + highest) as the signed sum of one monomial per entry.
inline LaurentPoly alternant(const Algebra& a, const GammaTable& t, const IntVec& highest)
{
    detail::check_table(a, t);
    a.check_size(highest.size());
    if (!a.is_dominant(highest))
        throw InputError("highest weight must be dominant, got " + format_vec(highest));
    const IntVec v = detail::shifted_by_rho(highest);
    std::vector<LaurentPoly::Term> terms;
    terms.reserve(t.entries.size());
    for (const auto& e : t.entries)
        terms.push_back({to_exponent(mat_vec(e.action, v)), e.signature});
    return LaurentPoly::from_terms(a.size(), std::move(terms));
}

inline LaurentPoly alternant(const Algebra& a, const GammaTable& t, const WeightVec& highest)
{
    return alternant(a, t, detail::dominant_input(a, highest));
}

/// Exponents as affine functions of the highest-weight coordinates s:
/// xi_i = constant_i + sum_j slope[i][j] s_j.
struct AffineExponents {
    int signature = 1;
    RationalVec constant;
    RationalMatrix slope;

    /// Evaluates at integer s.
    RationalVec at(const IntVec& s) const
    {
        RationalVec out = constant;
        for (std::size_t i = 0; i < out.size(); ++i)
            for (std::size_t j = 0; j < s.size(); ++j)
                out[i] += slope[i][j] * s[j];
        return out;
    }
};

inline std::vector<AffineExponents> generic_alternant(const Algebra& a, const GammaTable& t)
{
    detail::check_table(a, t);
    std::vector<AffineExponents> out;
    for (const auto& e : t.entries) {
        AffineExponents f;
        f.signature = e.signature;
        f.slope = detail::xi_matrix(a, t, e.selector);
        f.constant.assign(a.size(), 0);
        for (std::size_t i = 0; i < a.size(); ++i)
            for (const auto& x : f.slope[i])
                f.constant[i] += x;
        out.push_back(std::move(f));
    }
    return out;
}

/// Signatures read off the expanded product form of A(rho), and the
/// agreement of that expansion with the table.
struct SignatureCheck {
    bool matches = false;
    /// Coefficient of each entry's monomial in the expansion (table order).
    std::vector<int> expansion_signatures;
    /// Empty when matches.
    std::string mismatch;
};

/// Expansion is capped at 12 positive roots (4096 raw terms).
inline constexpr std::size_t kExpansionCap = 12;

/// e^-rho times the product over positive roots of (e^a - 1), in
/// fundamental-weight coordinates.
inline LaurentPoly denominator_by_expansion(const Algebra& a)
{
    if (a.positive_root_coords().size() > kExpansionCap)
        throw EnvelopeError(a.id() + " has " + std::to_string(a.positive_root_coords().size()) +
                            " positive roots; expansion is capped at " + std::to_string(kExpansionCap));
    const std::size_t n = a.size();
    LaurentPoly product = LaurentPoly::constant(n, 1);
    const LaurentPoly one = LaurentPoly::constant(n, 1);
    for (const auto& root : a.positive_root_weights())
        product *= LaurentPoly::monomial(to_exponent(root)) - one;
    return product.shifted(Exponent(n, -1));
}

inline SignatureCheck verify_signatures_by_expansion(const Algebra& a, const GammaTable& t)
{
    detail::check_table(a, t);
    const LaurentPoly expanded = denominator_by_expansion(a);
    const LaurentPoly from_table = alternant(a, t, IntVec(a.size(), 0));

    SignatureCheck result;
    const IntVec rho = a.rho();
    for (const auto& e : t.entries) {
        const BigInt c = expanded.coefficient(to_exponent(mat_vec(e.action, rho)));
        result.expansion_signatures.push_back(static_cast<int>(c.get_si()));
    }
    const LaurentPoly diff = expanded - from_table;
    if (diff.is_zero()) {
        result.matches = true;
        return result;
    }
    const auto& first = diff.terms().front();
    result.mismatch = "monomial " + format_vec(first.exponent) + ": expansion has " +
                      expanded.coefficient(first.exponent).get_str() + ", table has " +
                      from_table.coefficient(first.exponent).get_str();
    return result;
}

}  // namespace weylchar

#endif
