#ifndef WEYLCHAR_LAURENT_HPP
#define WEYLCHAR_LAURENT_HPP

// Sparse multivariate Laurent polynomials with arbitrary-precision integer
// coefficients. A monomial t_1^{m_1} ... t_r^{m_r} stands for the formal
// exponential e^{m_1 l_1 + ... + m_r l_r}.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <queue>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/container/small_vector.hpp>
#include <boost/container_hash/hash.hpp>

#include "weylchar/errors.hpp"
#include "weylchar/exact.hpp"

namespace weylchar {

using Exponent = boost::container::small_vector<std::int64_t, 8>;

inline Exponent to_exponent(const IntVec& v) { return Exponent(v.begin(), v.end()); }
inline IntVec to_int_vec(const Exponent& e) { return IntVec(e.begin(), e.end()); }

enum class MonomialOrder {
    graded_lex,          ///< total degree, then lexicographic
    graded_reverse_lex,  ///< total degree, then smallest last exponent wins
};

/// Three-way comparison of exponents under a term order.
inline int compare(const Exponent& a, const Exponent& b, MonomialOrder order = MonomialOrder::graded_lex)
{
    const auto da = std::accumulate(a.begin(), a.end(), std::int64_t{0});
    const auto db = std::accumulate(b.begin(), b.end(), std::int64_t{0});
    if (da != db)
        return da < db ? -1 : 1;
    if (order == MonomialOrder::graded_lex) {
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i])
                return a[i] < b[i] ? -1 : 1;
    } else {
        for (std::size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i])
                return a[i] > b[i] ? -1 : 1;
    }
    return 0;
}

struct ExponentHash {
    std::size_t operator()(const Exponent& e) const { return boost::hash_range(e.begin(), e.end()); }
};

class LaurentPoly {
public:
    struct Term {
        Exponent exponent;
        BigInt coeff;
        friend bool operator==(const Term& a, const Term& b)
        {
            return a.exponent == b.exponent && a.coeff == b.coeff;
        }
    };

    LaurentPoly() = default;
    explicit LaurentPoly(std::size_t rank) : rank_(rank) {}

    static LaurentPoly constant(std::size_t rank, const BigInt& c)
    {
        return monomial(Exponent(rank, 0), c);
    }

    static LaurentPoly monomial(Exponent e, const BigInt& c = 1)
    {
        LaurentPoly p(e.size());
        if (c != 0)
            p.terms_.push_back({std::move(e), c});
        return p;
    }

    /// Builds a canonical polynomial from arbitrary terms; like terms are merged.
    static LaurentPoly from_terms(std::size_t rank, std::vector<Term> terms)
    {
        LaurentPoly p(rank);
        for (const auto& t : terms)
            if (t.exponent.size() != rank)
                throw InputError("exponent length does not match polynomial rank");
        std::sort(terms.begin(), terms.end(),
                  [](const Term& a, const Term& b) { return compare(a.exponent, b.exponent) < 0; });
        for (auto& t : terms) {
            if (!p.terms_.empty() && p.terms_.back().exponent == t.exponent)
                p.terms_.back().coeff += t.coeff;
            else
                p.terms_.push_back(std::move(t));
            if (p.terms_.back().coeff == 0)
                p.terms_.pop_back();
        }
        return p;
    }

    std::size_t rank() const { return rank_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    /// Ascending graded-lex order, no zero coefficients.
    const std::vector<Term>& terms() const { return terms_; }

    BigInt coefficient(const Exponent& e) const
    {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                                   [](const Term& t, const Exponent& x) { return compare(t.exponent, x) < 0; });
        if (it != terms_.end() && it->exponent == e)
            return it->coeff;
        return 0;
    }

    LaurentPoly operator-() const
    {
        LaurentPoly p = *this;
        for (auto& t : p.terms_)
            t.coeff = -t.coeff;
        return p;
    }

    friend LaurentPoly operator+(const LaurentPoly& p, const LaurentPoly& q) { return combine(p, q, 1); }
    friend LaurentPoly operator-(const LaurentPoly& p, const LaurentPoly& q) { return combine(p, q, -1); }

    friend LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q)
    {
        check_rank(p, q);
        if (p.is_zero() || q.is_zero())
            return LaurentPoly(p.rank_);
        std::unordered_map<Exponent, BigInt, ExponentHash> acc;
        acc.reserve(p.terms_.size() * q.terms_.size());
        Exponent e(p.rank_);
        for (const auto& a : p.terms_)
            for (const auto& b : q.terms_) {
                for (std::size_t i = 0; i < p.rank_; ++i)
                    e[i] = a.exponent[i] + b.exponent[i];
                acc[e] += a.coeff * b.coeff;
            }
        std::vector<Term> terms;
        terms.reserve(acc.size());
        for (auto& [exp, c] : acc)
            if (c != 0)
                terms.push_back({exp, std::move(c)});
        return from_terms(p.rank_, std::move(terms));
    }

    LaurentPoly& operator+=(const LaurentPoly& q) { return *this = *this + q; }
    LaurentPoly& operator-=(const LaurentPoly& q) { return *this = *this - q; }
    LaurentPoly& operator*=(const LaurentPoly& q) { return *this = *this * q; }

    LaurentPoly scaled(const BigInt& c) const
    {
        if (c == 0)
            return LaurentPoly(rank_);
        LaurentPoly p = *this;
        for (auto& t : p.terms_)
            t.coeff *= c;
        return p;
    }

    /// Multiplication by the monomial t^shift.
    LaurentPoly shifted(const Exponent& shift) const
    {
        LaurentPoly p = *this;
        for (auto& t : p.terms_)
            for (std::size_t i = 0; i < rank_; ++i)
                t.exponent[i] += shift[i];
        return p;  // translation preserves the term order
    }

    friend bool operator==(const LaurentPoly& p, const LaurentPoly& q)
    {
        return p.rank_ == q.rank_ && p.terms_ == q.terms_;
    }

private:
    static void check_rank(const LaurentPoly& p, const LaurentPoly& q)
    {
        if (p.rank_ != q.rank_)
            throw InputError("Laurent polynomial rank mismatch: " + std::to_string(p.rank_) + " vs " +
                             std::to_string(q.rank_));
    }

    static LaurentPoly combine(const LaurentPoly& p, const LaurentPoly& q, int sign)
    {
        check_rank(p, q);
        LaurentPoly out(p.rank_);
        out.terms_.reserve(p.terms_.size() + q.terms_.size());
        auto i = p.terms_.begin();
        auto j = q.terms_.begin();
        while (i != p.terms_.end() || j != q.terms_.end()) {
            int c = 0;
            if (i == p.terms_.end())
                c = 1;
            else if (j == q.terms_.end())
                c = -1;
            else
                c = compare(i->exponent, j->exponent);
            if (c < 0) {
                out.terms_.push_back(*i++);
            } else if (c > 0) {
                out.terms_.push_back({j->exponent, sign > 0 ? j->coeff : BigInt(-j->coeff)});
                ++j;
            } else {
                BigInt s = sign > 0 ? BigInt(i->coeff + j->coeff) : BigInt(i->coeff - j->coeff);
                if (s != 0)
                    out.terms_.push_back({i->exponent, std::move(s)});
                ++i;
                ++j;
            }
        }
        return out;
    }

    std::size_t rank_ = 0;
    std::vector<Term> terms_;
};

inline LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q) { return p + q; }
inline LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q) { return p * q; }

/// Value at t_1 = ... = t_r = 1.
inline BigInt eval_ones(const LaurentPoly& p)
{
    BigInt s = 0;
    for (const auto& t : p.terms())
        s += t.coeff;
    return s;
}

/// Exact quotient num / den.
///
/// Both operands are translated into ordinary polynomials, then divided by
/// leading-term reduction under `order`. Products q_j * den_i are merged
/// through a heap, so the remainder is never materialized. Throws
/// NotDivisibleError if a leading term cannot be cancelled.
inline LaurentPoly exact_div(const LaurentPoly& num, const LaurentPoly& den,
                             MonomialOrder order = MonomialOrder::graded_lex)
{
    if (num.rank() != den.rank())
        throw InputError("Laurent polynomial rank mismatch in exact_div");
    if (den.is_zero())
        throw InputError("division by the zero polynomial");
    const std::size_t r = num.rank();
    if (num.is_zero())
        return LaurentPoly(r);

    auto min_exponent = [r](const LaurentPoly& p) {
        Exponent m = p.terms().front().exponent;
        for (const auto& t : p.terms())
            for (std::size_t i = 0; i < r; ++i)
                m[i] = std::min(m[i], t.exponent[i]);
        return m;
    };
    const Exponent num_shift = min_exponent(num);
    const Exponent den_shift = min_exponent(den);

    using Term = LaurentPoly::Term;
    auto descending = [order](const Term& a, const Term& b) { return compare(a.exponent, b.exponent, order) > 0; };
    auto to_ordinary = [&](const LaurentPoly& p, const Exponent& shift) {
        std::vector<Term> out = p.terms();
        for (auto& t : out)
            for (std::size_t i = 0; i < r; ++i)
                t.exponent[i] -= shift[i];
        std::sort(out.begin(), out.end(), descending);
        return out;
    };
    const std::vector<Term> f = to_ordinary(num, num_shift);
    const std::vector<Term> g = to_ordinary(den, den_shift);
    const Term& lead = g.front();

    struct Product {
        Exponent exponent;
        std::size_t g_index;
        std::size_t q_index;
    };
    auto heap_less = [order](const Product& a, const Product& b) { return compare(a.exponent, b.exponent, order) < 0; };
    std::priority_queue<Product, std::vector<Product>, decltype(heap_less)> heap(heap_less);

    std::vector<Term> q;
    auto product_exponent = [r](const Exponent& a, const Exponent& b) {
        Exponent e(r);
        for (std::size_t i = 0; i < r; ++i)
            e[i] = a[i] + b[i];
        return e;
    };

    std::size_t fi = 0;
    BigInt c;
    while (fi < f.size() || !heap.empty()) {
        Exponent current;
        if (heap.empty())
            current = f[fi].exponent;
        else if (fi == f.size())
            current = heap.top().exponent;
        else
            current = compare(f[fi].exponent, heap.top().exponent, order) >= 0 ? f[fi].exponent
                                                                                : heap.top().exponent;
        c = 0;
        if (fi < f.size() && f[fi].exponent == current)
            c = f[fi++].coeff;
        while (!heap.empty() && heap.top().exponent == current) {
            Product p = heap.top();
            heap.pop();
            c -= g[p.g_index].coeff * q[p.q_index].coeff;
            if (p.g_index + 1 < g.size())
                heap.push({product_exponent(g[p.g_index + 1].exponent, q[p.q_index].exponent), p.g_index + 1,
                           p.q_index});
        }
        if (c == 0)
            continue;

        Exponent qe(r);
        for (std::size_t i = 0; i < r; ++i) {
            qe[i] = current[i] - lead.exponent[i];
            if (qe[i] < 0)
                throw NotDivisibleError("not divisible: leading remainder term is not a multiple of the divisor's");
        }
        if (!mpz_divisible_p(c.get_mpz_t(), lead.coeff.get_mpz_t()))
            throw NotDivisibleError("not divisible: coefficient " + c.get_str() + " is not a multiple of " +
                                    lead.coeff.get_str());
        q.push_back({qe, BigInt(c / lead.coeff)});
        if (g.size() > 1)
            heap.push({product_exponent(g[1].exponent, qe), 1, q.size() - 1});
    }

    for (auto& t : q)
        for (std::size_t i = 0; i < r; ++i)
            t.exponent[i] += num_shift[i] - den_shift[i];
    return LaurentPoly::from_terms(r, std::move(q));
}

}  // namespace weylchar

#endif
