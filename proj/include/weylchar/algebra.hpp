#ifndef WEYLCHAR_ALGEBRA_HPP
#define WEYLCHAR_ALGEBRA_HPP

// Simple Lie algebra data: Cartan matrix, invariant form, positive roots,
// fundamental weights and Weyl orbits.
//
// Conventions
//   * cartan()[i][j] = 2(a_i, a_j) / (a_j, a_j), so row i holds the
//     fundamental-weight coordinates of the simple root a_i.
//   * The short roots have squared length 2 in every family; for G2 this
//     gives (a_1,a_1) = 6, (a_2,a_2) = 2, (a_1,a_2) = -3 with a_1 long.
//   * Weights are stored in the fundamental-weight basis, where every
//     integral weight has integer coordinates.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <deque>
#include <numeric>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "weylchar/errors.hpp"
#include "weylchar/exact.hpp"

namespace weylchar {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

enum class Basis { root, weight };

/// Exact rational coordinate vector tagged with the basis it is written in.
struct WeightVec {
    RationalVec coords;
    Basis basis = Basis::weight;

    static WeightVec in_weights(const IntVec& v) { return {to_rational(v), Basis::weight}; }
    static WeightVec in_roots(const IntVec& v) { return {to_rational(v), Basis::root}; }

    std::size_t size() const { return coords.size(); }
    bool is_integral() const { return weylchar::is_integral(coords); }

    friend bool operator==(const WeightVec&, const WeightVec&) = default;
};

class Algebra;
Algebra build_algebra(Family family, int rank);

class Algebra {
public:
    Family family() const { return family_; }
    int rank() const { return rank_; }
    std::size_t size() const { return static_cast<std::size_t>(rank_); }

    /// "G2", "B3", ...
    std::string id() const { return std::string(1, static_cast<char>(family_)) + std::to_string(rank_); }

    const IntMatrix& cartan() const { return cartan_; }
    /// (a_i, a_i)
    const RationalVec& root_norms() const { return root_norms_; }
    /// (a_i, a_i) / 2, always an integer under the chosen normalization.
    const IntVec& half_norms() const { return half_norms_; }
    /// (a_i, a_j)
    const IntMatrix& root_gram() const { return root_gram_; }
    /// (l_i, l_j); the inverse Cartan matrix scaled by the half norms.
    const RationalMatrix& weight_gram() const { return weight_gram_; }

    /// Positive roots in the simple-root basis, sorted by height then lexicographically.
    const std::vector<WeightVec>& positive_roots() const { return positive_roots_; }
    const IntMatrix& positive_root_coords() const { return positive_roots_root_; }
    /// Same roots, fundamental-weight coordinates.
    const IntMatrix& positive_root_weights() const { return positive_roots_weight_; }

    const std::vector<WeightVec>& fundamental_weights() const { return fundamental_weights_; }
    const WeightVec& weyl_vector() const { return weyl_vector_; }
    /// rho in fundamental-weight coordinates: all ones.
    IntVec rho() const { return IntVec(size(), 1); }

    void check_size(std::size_t n) const
    {
        if (n != size())
            throw InputError("expected " + std::to_string(rank_) + " coordinates for " + id() + ", got " +
                             std::to_string(n));
    }

    /// Fundamental-weight coordinates -> simple-root coordinates (rational in general).
    RationalVec root_coords(const IntVec& weight) const
    {
        check_size(weight.size());
        return mat_vec(weight_to_root_, to_rational(weight));
    }

    WeightVec to_basis(const WeightVec& v, Basis target) const
    {
        check_size(v.size());
        if (v.basis == target)
            return v;
        if (target == Basis::root)
            return {mat_vec(weight_to_root_, v.coords), Basis::root};
        return {mat_vec(root_to_weight_, v.coords), Basis::weight};
    }

    /// Integer weight coordinates; throws InputError if v is not an integral weight.
    IntVec weight_coords(const WeightVec& v) const
    {
        WeightVec w = to_basis(v, Basis::weight);
        if (!w.is_integral())
            throw InputError("not an integral weight: " + format_vec(w.coords));
        return to_int_vec(w.coords);
    }

    /// Simple-root coordinates -> fundamental-weight coordinates (C^T n).
    IntVec root_to_weight(const IntVec& roots) const
    {
        check_size(roots.size());
        IntVec w(size(), 0);
        for (std::size_t k = 0; k < size(); ++k)
            for (std::size_t j = 0; j < size(); ++j)
                w[j] += roots[k] * cartan_[k][j];
        return w;
    }

    /// Simple reflection s_i acting on fundamental-weight coordinates.
    IntVec reflect(IntVec v, std::size_t i) const
    {
        const std::int64_t c = v[i];
        if (c != 0)
            for (std::size_t j = 0; j < size(); ++j)
                v[j] -= c * cartan_[i][j];
        return v;
    }

    bool is_dominant(const IntVec& v) const
    {
        return std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x >= 0; });
    }

    IntVec dominant_conjugate(IntVec v) const
    {
        for (;;) {
            auto it = std::find_if(v.begin(), v.end(), [](std::int64_t x) { return x < 0; });
            if (it == v.end())
                return v;
            v = reflect(std::move(v), static_cast<std::size_t>(it - v.begin()));
        }
    }

    /// gram_scale() * (v, w) for weight-basis integer vectors; exact integer.
    std::int64_t scaled_dot(const IntVec& v, const IntVec& w) const
    {
        std::int64_t s = 0;
        for (std::size_t i = 0; i < size(); ++i) {
            if (v[i] == 0)
                continue;
            s += v[i] * dot(weight_gram_scaled_[i], w);
        }
        return s;
    }
    std::int64_t gram_scale() const { return gram_scale_; }

    /// height_scale() * (sum of simple-root coordinates) of a weight.
    std::int64_t scaled_height(const IntVec& w) const { return dot(height_functional_, w); }
    std::int64_t height_scale() const { return height_scale_; }

    /// (v, a) for v in weight coordinates and a given by its simple-root coordinates.
    std::int64_t pair_with_root(const IntVec& v, const IntVec& root) const
    {
        std::int64_t s = 0;
        for (std::size_t i = 0; i < size(); ++i)
            s += root[i] * v[i] * half_norms_[i];
        return s;
    }

    friend bool operator==(const Algebra& a, const Algebra& b) { return a.family_ == b.family_ && a.rank_ == b.rank_; }

private:
    friend Algebra build_algebra(Family family, int rank);

    Family family_ = Family::A;
    int rank_ = 0;
    IntMatrix cartan_;
    RationalVec root_norms_;
    IntVec half_norms_;
    IntMatrix root_gram_;
    RationalMatrix weight_gram_;
    IntMatrix weight_gram_scaled_;
    std::int64_t gram_scale_ = 1;
    RationalMatrix weight_to_root_;
    RationalMatrix root_to_weight_;
    IntVec height_functional_;
    std::int64_t height_scale_ = 1;
    std::vector<WeightVec> positive_roots_;
    IntMatrix positive_roots_root_;
    IntMatrix positive_roots_weight_;
    std::vector<WeightVec> fundamental_weights_;
    WeightVec weyl_vector_;
};

namespace detail {

/// (a_i, a_j) for the Bourbaki labelling, short roots of squared length 2.
inline IntMatrix simple_root_gram(Family family, int rank)
{
    const auto n = static_cast<std::size_t>(rank);
    IntMatrix b(n, IntVec(n, 0));
    auto link = [&](int i, int j, std::int64_t v) {
        b[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = v;
        b[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i - 1)] = v;
    };
    auto norm = [&](int i, std::int64_t v) { b[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(i - 1)] = v; };

    switch (family) {
    case Family::A:
        for (int i = 1; i <= rank; ++i)
            norm(i, 2);
        for (int i = 1; i < rank; ++i)
            link(i, i + 1, -1);
        break;
    case Family::B:
        for (int i = 1; i < rank; ++i)
            norm(i, 4);
        norm(rank, 2);
        for (int i = 1; i < rank; ++i)
            link(i, i + 1, -2);
        break;
    case Family::C:
        for (int i = 1; i < rank; ++i)
            norm(i, 2);
        norm(rank, 4);
        for (int i = 1; i + 1 < rank; ++i)
            link(i, i + 1, -1);
        link(rank - 1, rank, -2);
        break;
    case Family::D:
        for (int i = 1; i <= rank; ++i)
            norm(i, 2);
        for (int i = 1; i + 2 < rank; ++i)
            link(i, i + 1, -1);
        link(rank - 2, rank - 1, -1);
        link(rank - 2, rank, -1);
        break;
    case Family::E:
        for (int i = 1; i <= rank; ++i)
            norm(i, 2);
        link(1, 3, -1);
        link(2, 4, -1);
        for (int i = 3; i < rank; ++i)
            link(i, i + 1, -1);
        break;
    case Family::F:
        norm(1, 4);
        norm(2, 4);
        norm(3, 2);
        norm(4, 2);
        link(1, 2, -2);
        link(2, 3, -2);
        link(3, 4, -1);
        break;
    case Family::G:
        norm(1, 6);
        norm(2, 2);
        link(1, 2, -3);
        break;
    }
    return b;
}

inline void check_type(Family family, int rank)
{
    const std::string name = std::string(1, static_cast<char>(family)) + std::to_string(rank);
    auto fail = [&](const std::string& why) { throw InputError("invalid simple Lie algebra " + name + ": " + why); };
    switch (family) {
    case Family::A:
        if (rank < 1)
            fail("A_r requires r >= 1");
        break;
    case Family::B:
        if (rank < 2)
            fail("B_r requires r >= 2");
        break;
    case Family::C:
        if (rank < 2)
            fail("C_r requires r >= 2");
        break;
    case Family::D:
        if (rank < 4)
            fail("D_r requires r >= 4");
        break;
    case Family::E:
        if (rank < 6 || rank > 8)
            fail("E_r exists only for r = 6, 7, 8");
        break;
    case Family::F:
        if (rank != 4)
            fail("F_r exists only for r = 4");
        break;
    case Family::G:
        if (rank != 2)
            fail("G_r exists only for r = 2");
        break;
    default:
        fail("unknown family");
    }
    if (rank > 64)
        fail("rank too large");
}

inline bool height_then_lex(const IntVec& a, const IntVec& b)
{
    const auto ha = std::accumulate(a.begin(), a.end(), std::int64_t{0});
    const auto hb = std::accumulate(b.begin(), b.end(), std::int64_t{0});
    if (ha != hb)
        return ha < hb;
    return a < b;
}

}  // namespace detail

inline Algebra build_algebra(Family family, int rank)
{
    detail::check_type(family, rank);
    Algebra a;
    a.family_ = family;
    a.rank_ = rank;
    const std::size_t n = a.size();

    a.root_gram_ = detail::simple_root_gram(family, rank);
    a.cartan_.assign(n, IntVec(n, 0));
    a.half_norms_.resize(n);
    a.root_norms_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        a.root_norms_[i] = to_rational(a.root_gram_[i][i]);
        a.half_norms_[i] = a.root_gram_[i][i] / 2;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const std::int64_t num = 2 * a.root_gram_[i][j];
            if (num % a.root_gram_[j][j] != 0)
                throw IntegrityError("non-integral Cartan entry");
            a.cartan_[i][j] = num / a.root_gram_[j][j];
        }

    // a_i = sum_j C_ij l_j, hence l = C^{-1} a and root coordinates n = C^{-T} w.
    const RationalMatrix cartan_q = to_rational(a.cartan_);
    const RationalMatrix cartan_inv = inverse(cartan_q);
    a.weight_to_root_ = transpose(cartan_inv);
    a.root_to_weight_ = transpose(cartan_q);

    // (l_i, l_j) = (C^{-1})_ij d_j
    a.weight_gram_.assign(n, RationalVec(n));
    BigInt den = 1;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            a.weight_gram_[i][j] = cartan_inv[i][j] * a.half_norms_[j];
            den = lcm(den, BigInt(a.weight_gram_[i][j].get_den()));
        }
    a.gram_scale_ = to_int64(den);
    a.weight_gram_scaled_.assign(n, IntVec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a.weight_gram_scaled_[i][j] = to_int64(Rational(a.weight_gram_[i][j] * den));

    BigInt hden = 1;
    RationalVec height(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k)
            height[i] += cartan_inv[i][k];
        hden = lcm(hden, BigInt(height[i].get_den()));
    }
    a.height_scale_ = to_int64(hden);
    a.height_functional_.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        a.height_functional_[i] = to_int64(Rational(height[i] * hden));

    // Positive roots: closure of the simple roots under simple reflections,
    // keeping only the positive images.
    std::set<IntVec> seen;
    std::deque<IntVec> queue;
    for (std::size_t i = 0; i < n; ++i) {
        IntVec e(n, 0);
        e[i] = 1;
        seen.insert(e);
        queue.push_back(e);
    }
    while (!queue.empty()) {
        IntVec beta = std::move(queue.front());
        queue.pop_front();
        const IntVec w = a.root_to_weight(beta);
        for (std::size_t i = 0; i < n; ++i) {
            if (w[i] == 0)
                continue;
            IntVec image = beta;
            image[i] -= w[i];
            if (std::any_of(image.begin(), image.end(), [](std::int64_t x) { return x < 0; }))
                continue;
            if (seen.insert(image).second)
                queue.push_back(std::move(image));
        }
    }
    a.positive_roots_root_.assign(seen.begin(), seen.end());
    std::sort(a.positive_roots_root_.begin(), a.positive_roots_root_.end(), detail::height_then_lex);
    for (const auto& r : a.positive_roots_root_) {
        a.positive_roots_.push_back(WeightVec::in_roots(r));
        a.positive_roots_weight_.push_back(a.root_to_weight(r));
    }

    for (std::size_t i = 0; i < n; ++i) {
        IntVec e(n, 0);
        e[i] = 1;
        a.fundamental_weights_.push_back(WeightVec::in_weights(e));
    }
    a.weyl_vector_ = WeightVec::in_weights(IntVec(n, 1));
    return a;
}

/// Parses "G2", "b3", "E6".
inline Algebra parse_algebra(std::string_view name)
{
    if (name.size() < 2)
        throw InputError("algebra must look like G2 or B3, got '" + std::string(name) + "'");
    const char f = static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
    if (std::string_view("ABCDEFG").find(f) == std::string_view::npos)
        throw InputError("unknown algebra family '" + std::string(1, name[0]) + "'");
    int rank = 0;
    for (char c : name.substr(1)) {
        if (!std::isdigit(static_cast<unsigned char>(c)) || rank > 1000)
            throw InputError("invalid rank in algebra '" + std::string(name) + "'");
        rank = rank * 10 + (c - '0');
    }
    return build_algebra(static_cast<Family>(f), rank);
}

/// The invariant form. Mixed bases are allowed.
inline Rational bilinear(const Algebra& a, const WeightVec& v, const WeightVec& w)
{
    a.check_size(v.size());
    a.check_size(w.size());
    const WeightVec vw = a.to_basis(v, Basis::weight);
    const WeightVec wr = a.to_basis(w, Basis::root);
    // (l_i, a_j) = delta_ij d_j
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += vw.coords[i] * wr.coords[i] * a.half_norms()[i];
    return s;
}

inline std::vector<WeightVec> positive_roots(const Algebra& a) { return a.positive_roots(); }

/// Weyl orbit of an integral weight, sorted lexicographically by weight coordinates.
inline std::vector<IntVec> orbit_weights(const Algebra& a, const IntVec& start)
{
    a.check_size(start.size());
    std::set<IntVec> seen{start};
    std::vector<IntVec> frontier{start};
    while (!frontier.empty()) {
        std::vector<IntVec> next;
        for (const auto& v : frontier)
            for (std::size_t i = 0; i < a.size(); ++i) {
                if (v[i] == 0)
                    continue;
                IntVec image = a.reflect(v, i);
                if (seen.insert(image).second)
                    next.push_back(std::move(image));
            }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

inline std::vector<WeightVec> orbit(const Algebra& a, const WeightVec& dominant)
{
    const IntVec w = a.weight_coords(dominant);
    if (!a.is_dominant(w))
        throw InputError("orbit() expects a dominant weight, got " + format_vec(w));
    std::vector<WeightVec> out;
    for (const auto& v : orbit_weights(a, w))
        out.push_back(WeightVec::in_weights(v));
    return out;
}

}  // namespace weylchar

#endif
