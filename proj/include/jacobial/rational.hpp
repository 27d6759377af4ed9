#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace jacobial {

// All arithmetic in the library is exact: arbitrary-precision integers for
// lattice computations, arbitrary-precision rationals everywhere a
// polarization or an offset appears. No floating point.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rat& r) { return den(r) == 1; }

// floor(p/q) with exact integer semantics for negative values.
inline Int floor_rat(const Rat& r) {
    Int n = num(r), d = den(r);
    Int q = n / d;
    if (n % d != 0 && n < 0) --q;
    return q;
}

inline Int ceil_rat(const Rat& r) {
    Int n = num(r), d = den(r);
    Int q = n / d;
    if (n % d != 0 && n > 0) ++q;
    return q;
}

// Fractional part in [0, 1).
inline Rat frac1(const Rat& r) { return r - Rat(floor_rat(r)); }

// Distance to the nearest integer.
inline Rat dist_to_int(const Rat& r) {
    Rat f = frac1(r);
    return f <= Rat(1, 2) ? f : Rat(1) - f;
}

inline Int gcd_int(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline Int lcm_int(const Int& a, const Int& b) {
    if (a == 0 || b == 0) return 0;
    Int g = gcd_int(a, b);
    Int l = (a / g) * b;
    return l < 0 ? -l : l;
}

// Parses "p", "-p", "p/q". Decimal notation is deliberately rejected.
inline Rat parse_rat(const std::string& s) {
    auto bad = [&] { throw std::invalid_argument("bad rational: '" + s + "'"); };
    if (s.empty()) bad();
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int p(s.substr(0, slash));
        Int q(s.substr(slash + 1));
        if (q == 0) bad();
        return Rat(p, q);
    } catch (const std::runtime_error&) {
        bad();
    }
    return Rat(0); // unreachable
}

inline std::string rat_str(const Rat& r) {
    if (is_integer(r)) return num(r).str();
    return num(r).str() + "/" + den(r).str();
}

inline std::string int_vec_str(const std::vector<long long>& v) {
    std::string out = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(v[i]);
    }
    return out + ")";
}

inline std::string rat_vec_str(const std::vector<Rat>& v) {
    std::string out = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += rat_str(v[i]);
    }
    return out + ")";
}

} // namespace jacobial
