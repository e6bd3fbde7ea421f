#ifndef WEYLCHAR_EXACT_HPP
#define WEYLCHAR_EXACT_HPP

#include <cstdint>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "weylchar/errors.hpp"

namespace weylchar {

using BigInt = mpz_class;
using Rational = mpq_class;

using IntVec = std::vector<std::int64_t>;
using IntMatrix = std::vector<IntVec>;
using RationalVec = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVec>;

inline std::int64_t to_int64(const BigInt& z)
{
    if (!z.fits_slong_p())
        throw IntegrityError("integer does not fit in 64 bits: " + z.get_str());
    return z.get_si();
}

inline std::int64_t to_int64(const Rational& q)
{
    if (q.get_den() != 1)
        throw IntegrityError("expected an integer, got " + q.get_str());
    return to_int64(q.get_num());
}

inline BigInt to_bigint(std::int64_t v)
{
    // mpz_class has no long long constructor on every platform.
    return BigInt(static_cast<long>(v));
}

inline Rational to_rational(std::int64_t v) { return Rational(to_bigint(v)); }

inline RationalVec to_rational(const IntVec& v)
{
    RationalVec out;
    out.reserve(v.size());
    for (auto x : v)
        out.push_back(to_rational(x));
    return out;
}

inline IntVec to_int_vec(const RationalVec& v)
{
    IntVec out;
    out.reserve(v.size());
    for (const auto& x : v)
        out.push_back(to_int64(x));
    return out;
}

inline bool is_integral(const RationalVec& v)
{
    for (const auto& x : v)
        if (x.get_den() != 1)
            return false;
    return true;
}

inline std::int64_t dot(const IntVec& a, const IntVec& b)
{
    std::int64_t s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

/// y = M x
inline IntVec mat_vec(const IntMatrix& m, const IntVec& x)
{
    IntVec y(m.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i)
        y[i] = dot(m[i], x);
    return y;
}

inline RationalVec mat_vec(const RationalMatrix& m, const RationalVec& x)
{
    RationalVec y(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        Rational s = 0;
        for (std::size_t j = 0; j < x.size(); ++j)
            s += m[i][j] * x[j];
        y[i] = s;
    }
    return y;
}

inline RationalMatrix to_rational(const IntMatrix& m)
{
    RationalMatrix out;
    out.reserve(m.size());
    for (const auto& row : m)
        out.push_back(to_rational(row));
    return out;
}

inline RationalMatrix transpose(const RationalMatrix& m)
{
    if (m.empty())
        return {};
    RationalMatrix t(m[0].size(), RationalVec(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j)
            t[j][i] = m[i][j];
    return t;
}

/// Gauss-Jordan over the rationals. Throws IntegrityError on a singular matrix.
inline RationalMatrix inverse(const RationalMatrix& m)
{
    const std::size_t n = m.size();
    RationalMatrix a = m;
    RationalMatrix inv(n, RationalVec(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        inv[i][i] = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0)
            ++pivot;
        if (pivot == n)
            throw IntegrityError("singular matrix");
        std::swap(a[pivot], a[col]);
        std::swap(inv[pivot], inv[col]);
        const Rational p = a[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            a[col][j] /= p;
            inv[col][j] /= p;
        }
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || a[row][col] == 0)
                continue;
            const Rational f = a[row][col];
            for (std::size_t j = 0; j < n; ++j) {
                a[row][j] -= f * a[col][j];
                inv[row][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

/// Fraction-free (Bareiss) determinant of an integer matrix.
inline BigInt determinant(const IntMatrix& m)
{
    const std::size_t n = m.size();
    if (n == 0)
        return 1;
    std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = to_bigint(m[i][j]);
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && a[swap_row][k] == 0)
                ++swap_row;
            if (swap_row == n)
                return 0;
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

inline std::string format_rational(const Rational& q)
{
    return q.get_str();
}

template <class Vec>
std::string format_vec(const Vec& v)
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            os << ',';
        os << v[i];
    }
    os << ')';
    return os.str();
}

}  // namespace weylchar

#endif
