#pragma once

// Exact arithmetic scalars and Eigen aliases used throughout the library.
// All feasibility / extremality decisions are made over these types; no
// floating point is used anywhere in the core.

#include <Eigen/Core>
#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <numeric>
#include <vector>

namespace nst {

using Integer  = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

using IntMat = Eigen::Matrix<Integer, Eigen::Dynamic, Eigen::Dynamic>;
using IntVec = Eigen::Matrix<Integer, Eigen::Dynamic, 1>;
using RatMat = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RatVec = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

inline Integer intGcd(const Integer& a, const Integer& b) {
    return boost::multiprecision::gcd(a, b);
}

/// gcd of all entries (0 if the vector is zero).
inline Integer vecGcd(const IntVec& v) {
    Integer g = 0;
    for (Eigen::Index i = 0; i < v.size(); ++i)
        g = intGcd(g, v[i]);
    return g;
}

/// Divide through by the gcd of the entries. Zero vectors pass unchanged.
inline IntVec makePrimitive(const IntVec& v) {
    Integer g = vecGcd(v);
    if (g == 0 || g == 1)
        return v;
    IntVec out(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i)
        out[i] = v[i] / g;
    return out;
}

/// Clear denominators: smallest positive multiple of a rational vector that
/// is integral, then divided by the entry gcd.
inline IntVec ratToPrimitiveInt(const RatVec& v) {
    Integer lcm = 1;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        Integer den = boost::multiprecision::denominator(v[i]);
        lcm = lcm / intGcd(lcm, den) * den;
    }
    IntVec out(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        Rational scaled = v[i] * lcm;
        out[i] = boost::multiprecision::numerator(scaled);
    }
    return makePrimitive(out);
}

inline Rational dotRI(const RatVec& a, const IntVec& b) {
    Rational s = 0;
    for (Eigen::Index i = 0; i < a.size(); ++i)
        s += a[i] * Rational(b[i]);
    return s;
}

inline Integer dotII(const IntVec& a, const IntVec& b) {
    Integer s = 0;
    for (Eigen::Index i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

} // namespace nst
