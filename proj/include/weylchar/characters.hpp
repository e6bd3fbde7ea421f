#ifndef WEYLCHAR_CHARACTERS_HPP
#define WEYLCHAR_CHARACTERS_HPP

// Characters as the exact quotient A(rho + Lambda) / A(rho), from either the
// Gamma table or the explicit Weyl group.

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "weylchar/algebra.hpp"
#include "weylchar/errors.hpp"
#include "weylchar/exact.hpp"
#include "weylchar/gamma.hpp"
#include "weylchar/laurent.hpp"
#include "weylchar/weyl.hpp"

namespace weylchar {

enum class Method { gamma_table, direct_weyl };

inline std::string to_string(Method m) { return m == Method::gamma_table ? "gamma-table" : "direct-weyl"; }

struct CharacterResult {
    std::string algebra_id;
    WeightVec highest_weight;
    /// Monomial t^mu for every weight mu (fundamental-weight coordinates).
    LaurentPoly poly;
    BigInt dimension;
    Method method = Method::gamma_table;
};

/// Holds whatever one route needs (table or group) plus A(rho), so repeated
/// characters of one algebra share the setup cost.
class CharacterEngine {
public:
    CharacterEngine(Algebra a, Method method) : algebra_(std::move(a)), method_(method)
    {
        if (method_ == Method::gamma_table)
            table_ = assemble(algebra_);
        else
            group_ = generate(algebra_);
        denominator_ = alternant(IntVec(algebra_.size(), 0));
    }

    CharacterEngine(Algebra a, GammaTable table)
        : algebra_(std::move(a)), method_(Method::gamma_table), table_(std::move(table))
    {
        detail::check_table(algebra_, *table_);
        denominator_ = alternant(IntVec(algebra_.size(), 0));
    }

    const Algebra& algebra() const { return algebra_; }
    Method method() const { return method_; }
    const GammaTable* table() const { return table_ ? &*table_ : nullptr; }

    LaurentPoly alternant(const IntVec& highest) const
    {
        if (table_)
            return weylchar::alternant(algebra_, *table_, highest);
        return alternant_direct(algebra_, *group_, highest);
    }

    /// A(rho).
    const LaurentPoly& denominator() const { return denominator_; }

    CharacterResult character(const IntVec& highest) const
    {
        algebra_.check_size(highest.size());
        if (!algebra_.is_dominant(highest))
            throw InputError("highest weight must be dominant, got " + format_vec(highest));
        CharacterResult c;
        c.algebra_id = algebra_.id();
        c.highest_weight = WeightVec::in_weights(highest);
        c.method = method_;
        try {
            c.poly = exact_div(alternant(highest), denominator_);
        } catch (const NotDivisibleError& e) {
            throw IntegrityError("A(rho + Lambda) is not divisible by A(rho) for " + algebra_.id() + " " +
                                 format_vec(highest) + ": " + e.what());
        }
        c.dimension = eval_ones(c.poly);
        return c;
    }

    CharacterResult character(const WeightVec& highest) const
    {
        return character(detail::dominant_input(algebra_, highest));
    }

private:
    Algebra algebra_;
    Method method_;
    std::optional<GammaTable> table_;
    std::optional<WeylGroup> group_;
    LaurentPoly denominator_;
};

inline CharacterResult character(const Algebra& a, const WeightVec& highest, Method method)
{
    return CharacterEngine(a, method).character(highest);
}

/// Weight -> multiplicity, read off the character's monomials.
inline WeightMultiplicities multiplicities(const CharacterResult& c)
{
    WeightMultiplicities m;
    for (const auto& t : c.poly.terms())
        m.emplace(to_int_vec(t.exponent), t.coeff);
    return m;
}

/// A polynomial rewritten in the variables u_i = e^{a_i}.
struct AlphaPresentation {
    std::vector<std::string> variables;
    /// Simple-root exponents and coefficients, descending graded-lex.
    std::vector<std::pair<RationalVec, BigInt>> terms;
    /// Componentwise minimum exponent, pulled out in the factored form.
    RationalVec prefactor;
    std::string expanded;
    std::string factored;
};

namespace detail {

inline std::vector<std::string> variable_names(std::size_t rank)
{
    if (rank == 1)
        return {"u"};
    if (rank == 2)
        return {"x", "y"};
    std::vector<std::string> v;
    for (std::size_t i = 1; i <= rank; ++i)
        v.push_back("u" + std::to_string(i));
    return v;
}

inline std::string render_monomial(const std::vector<std::string>& vars, const RationalVec& e)
{
    std::string s;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0)
            continue;
        if (!s.empty())
            s += '*';
        s += vars[i];
        if (e[i] == 1)
            continue;
        if (e[i].get_den() == 1)
            s += "^" + e[i].get_str();
        else
            s += "^(" + e[i].get_str() + ")";
    }
    return s;
}

inline std::string render_sum(const std::vector<std::string>& vars,
                              const std::vector<std::pair<RationalVec, BigInt>>& terms, const RationalVec& shift)
{
    if (terms.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [exp, coeff] : terms) {
        RationalVec e = exp;
        for (std::size_t i = 0; i < e.size(); ++i)
            e[i] -= shift[i];
        const std::string mono = render_monomial(vars, e);
        BigInt mag = abs(coeff);
        if (first)
            out += coeff < 0 ? "-" : "";
        else
            out += coeff < 0 ? " - " : " + ";
        first = false;
        if (mono.empty())
            out += mag.get_str();
        else if (mag == 1)
            out += mono;
        else
            out += mag.get_str() + "*" + mono;
    }
    return out;
}

inline bool rational_graded_lex_greater(const RationalVec& a, const RationalVec& b)
{
    Rational da = 0, db = 0;
    for (const auto& x : a)
        da += x;
    for (const auto& x : b)
        db += x;
    if (da != db)
        return da > db;
    return b < a;
}

}  // namespace detail

inline AlphaPresentation present_alpha_basis(const Algebra& a, const LaurentPoly& p)
{
    a.check_size(p.rank());
    AlphaPresentation out;
    out.variables = detail::variable_names(a.size());
    for (const auto& t : p.terms())
        out.terms.emplace_back(a.root_coords(to_int_vec(t.exponent)), t.coeff);
    std::sort(out.terms.begin(), out.terms.end(),
              [](const auto& x, const auto& y) { return detail::rational_graded_lex_greater(x.first, y.first); });

    const RationalVec zero(a.size(), 0);
    out.prefactor = zero;
    if (!out.terms.empty()) {
        out.prefactor = out.terms.front().first;
        for (const auto& [e, c] : out.terms)
            for (std::size_t i = 0; i < e.size(); ++i)
                out.prefactor[i] = std::min(out.prefactor[i], e[i]);
    }
    out.expanded = detail::render_sum(out.variables, out.terms, zero);
    const std::string pre = detail::render_monomial(out.variables, out.prefactor);
    if (pre.empty() || out.terms.size() < 2)
        out.factored = out.expanded;
    else
        out.factored = pre + "*(" + detail::render_sum(out.variables, out.terms, out.prefactor) + ")";
    return out;
}

inline AlphaPresentation present_alpha_basis(const CharacterResult& c)
{
    return present_alpha_basis(parse_algebra(c.algebra_id), c.poly);
}

}  // namespace weylchar

#endif
