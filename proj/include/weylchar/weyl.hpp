#ifndef WEYLCHAR_WEYL_HPP
#define WEYLCHAR_WEYL_HPP

// Explicit Weyl group machinery. Everything here is deliberately naive and
// serves as ground truth for the Gamma-table route.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "weylchar/algebra.hpp"
#include "weylchar/errors.hpp"
#include "weylchar/exact.hpp"
#include "weylchar/laurent.hpp"

namespace weylchar {

/// Largest Weyl group we are willing to enumerate (|W(E6)|).
inline constexpr std::uint64_t kWeylEnvelope = 51840;

/// Order of W from the classical product formulas.
inline BigInt weyl_group_order(Family family, int rank)
{
    BigInt fact = 1;
    for (int k = 2; k <= rank; ++k)
        fact *= k;
    switch (family) {
    case Family::A:
        return fact * (rank + 1);
    case Family::B:
    case Family::C:
        return fact * (BigInt(1) << rank);
    case Family::D:
        return fact * (BigInt(1) << (rank - 1));
    case Family::E:
        if (rank == 6)
            return 51840;
        if (rank == 7)
            return 2903040;
        return 696729600;
    case Family::F:
        return 1152;
    case Family::G:
        return 12;
    }
    return 0;
}

inline BigInt weyl_group_order(const Algebra& a) { return weyl_group_order(a.family(), a.rank()); }

inline void check_envelope(const Algebra& a)
{
    const BigInt order = weyl_group_order(a);
    if (order > static_cast<unsigned long>(kWeylEnvelope))
        throw EnvelopeError("|W(" + a.id() + ")| = " + order.get_str() + " exceeds the enumeration envelope of " +
                            std::to_string(kWeylEnvelope) + " (for scale: |W(E8)| = 696729600)");
}

struct WeylGroup {
    /// Matrices acting on fundamental-weight coordinates.
    std::vector<RationalMatrix> elements;
    /// det of each element, +1 or -1.
    std::vector<int> signatures;

    std::size_t size() const { return elements.size(); }
};

/// Closure of the simple reflections, breadth first from the identity.
inline WeylGroup generate(const Algebra& a)
{
    check_envelope(a);
    const std::size_t n = a.size();
    RationalMatrix identity(n, RationalVec(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        identity[i][i] = 1;

    WeylGroup group;
    std::set<RationalMatrix> seen{identity};
    group.elements.push_back(identity);
    group.signatures.push_back(1);
    for (std::size_t head = 0; head < group.elements.size(); ++head) {
        for (std::size_t i = 0; i < n; ++i) {
            // s_i = I - a_i e_i^T, where a_i is row i of the Cartan matrix.
            RationalMatrix next = group.elements[head];
            const RationalVec row = next[i];
            for (std::size_t j = 0; j < n; ++j) {
                const std::int64_t c = a.cartan()[i][j];
                if (c == 0)
                    continue;
                for (std::size_t k = 0; k < n; ++k)
                    next[j][k] -= c * row[k];
            }
            if (seen.insert(next).second) {
                group.elements.push_back(std::move(next));
                group.signatures.push_back(-group.signatures[head]);
            }
        }
    }
    return group;
}

namespace detail {

inline IntVec dominant_input(const Algebra& a, const WeightVec& lambda)
{
    const IntVec w = a.weight_coords(lambda);
    if (!a.is_dominant(w))
        throw InputError("highest weight must be dominant, got " + format_vec(w));
    return w;
}

inline IntVec shifted_by_rho(IntVec w)
{
    for (auto& x : w)
        x += 1;
    return w;
}

}  // namespace detail

/// sum over sigma of det(sigma) e^{sigma(rho + highest)}.
inline LaurentPoly alternant_direct(const Algebra& a, const WeylGroup& group, const IntVec& highest)
{
    a.check_size(highest.size());
    if (!a.is_dominant(highest))
        throw InputError("highest weight must be dominant, got " + format_vec(highest));
    const RationalVec v = to_rational(detail::shifted_by_rho(highest));
    std::vector<LaurentPoly::Term> terms;
    terms.reserve(group.size());
    for (std::size_t k = 0; k < group.size(); ++k)
        terms.push_back({to_exponent(to_int_vec(mat_vec(group.elements[k], v))), group.signatures[k]});
    return LaurentPoly::from_terms(a.size(), std::move(terms));
}

/// Generates the group on every call; pass a WeylGroup to reuse one.
inline LaurentPoly alternant_direct(const Algebra& a, const WeightVec& highest)
{
    const IntVec w = detail::dominant_input(a, highest);
    return alternant_direct(a, generate(a), w);
}

/// prod over positive roots of (highest + rho, alpha) / (rho, alpha).
inline BigInt weyl_dimension(const Algebra& a, const IntVec& highest)
{
    a.check_size(highest.size());
    if (!a.is_dominant(highest))
        throw InputError("highest weight must be dominant, got " + format_vec(highest));
    const IntVec shifted = detail::shifted_by_rho(highest);
    const IntVec rho = a.rho();
    Rational product = 1;
    for (const auto& root : a.positive_root_coords()) {
        Rational ratio(to_bigint(a.pair_with_root(shifted, root)), to_bigint(a.pair_with_root(rho, root)));
        ratio.canonicalize();
        product *= ratio;
    }
    if (product.get_den() != 1)
        throw IntegrityError("Weyl dimension formula produced a non-integer: " + product.get_str());
    return product.get_num();
}

inline BigInt weyl_dimension(const Algebra& a, const WeightVec& highest)
{
    return weyl_dimension(a, detail::dominant_input(a, highest));
}

/// Weight (fundamental-weight coordinates) -> multiplicity.
using WeightMultiplicities = std::map<IntVec, BigInt>;

/// Dominant weights below `highest` in the dominance order, each with the
/// height of highest - mu.
inline std::map<IntVec, std::int64_t> dominant_weights_below(const Algebra& a, const IntVec& highest)
{
    std::map<IntVec, std::int64_t> depth{{highest, 0}};
    std::vector<IntVec> frontier{highest};
    const auto& roots_w = a.positive_root_weights();
    const auto& roots_r = a.positive_root_coords();
    while (!frontier.empty()) {
        std::vector<IntVec> next;
        for (const auto& mu : frontier) {
            const std::int64_t d = depth.at(mu);
            for (std::size_t k = 0; k < roots_w.size(); ++k) {
                IntVec nu = mu;
                for (std::size_t i = 0; i < nu.size(); ++i)
                    nu[i] -= roots_w[k][i];
                if (!a.is_dominant(nu))
                    continue;
                std::int64_t h = 0;
                for (auto x : roots_r[k])
                    h += x;
                if (depth.emplace(nu, d + h).second)
                    next.push_back(std::move(nu));
            }
        }
        frontier = std::move(next);
    }
    return depth;
}

/// Freudenthal's recursion on the dominant weights, extended to all weights
/// by Weyl invariance.
inline WeightMultiplicities freudenthal_multiplicities(const Algebra& a, const IntVec& highest)
{
    a.check_size(highest.size());
    if (!a.is_dominant(highest))
        throw InputError("highest weight must be dominant, got " + format_vec(highest));

    const auto depth = dominant_weights_below(a, highest);
    std::vector<IntVec> order;
    for (const auto& [mu, d] : depth)
        order.push_back(mu);
    std::stable_sort(order.begin(), order.end(),
                     [&](const IntVec& x, const IntVec& y) { return depth.at(x) < depth.at(y); });

    const IntVec rho = a.rho();
    auto norm_shifted = [&](const IntVec& mu) {
        IntVec v = mu;
        for (std::size_t i = 0; i < v.size(); ++i)
            v[i] += rho[i];
        return a.scaled_dot(v, v);
    };
    const std::int64_t top = norm_shifted(highest);

    std::map<IntVec, BigInt> dominant;
    dominant[highest] = 1;
    for (const auto& mu : order) {
        if (mu == highest)
            continue;
        BigInt sum = 0;
        for (const auto& alpha : a.positive_root_weights()) {
            IntVec nu = mu;
            for (;;) {
                for (std::size_t i = 0; i < nu.size(); ++i)
                    nu[i] += alpha[i];
                auto it = dominant.find(a.dominant_conjugate(nu));
                if (it == dominant.end())
                    break;
                sum += it->second * to_bigint(a.scaled_dot(nu, alpha));
            }
        }
        const BigInt num = 2 * sum;
        const BigInt den = to_bigint(top - norm_shifted(mu));
        if (den <= 0 || !mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
            throw IntegrityError("Freudenthal recursion produced a non-integer multiplicity at " + format_vec(mu));
        dominant[mu] = num / den;
    }

    WeightMultiplicities all;
    for (const auto& [mu, m] : dominant) {
        if (m == 0)
            continue;
        for (const auto& w : orbit_weights(a, mu))
            all.emplace(w, m);
    }
    return all;
}

inline WeightMultiplicities freudenthal_multiplicities(const Algebra& a, const WeightVec& highest)
{
    return freudenthal_multiplicities(a, detail::dominant_input(a, highest));
}

}  // namespace weylchar

#endif
