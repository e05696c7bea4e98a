#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <type_traits>

#include "freelift/config.hpp"
#include "freelift/errors.hpp"

namespace freelift {

// Exact arithmetic is arbitrary-precision rational; float mode is IEEE double.
using Rat = mpq_class;

// Parses "p", "-p", or "p/q". Rejects decimals and zero denominators.
inline Rat parse_rat(const std::string& text) {
    std::string s = text;
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }),
            s.end());
    if (s.empty()) throw ParseError("empty rational literal");
    if (s.find('.') != std::string::npos || s.find('e') != std::string::npos ||
        s.find('E') != std::string::npos)
        throw ParseError("decimal literal '" + text + "' not allowed; use p/q form");
    Rat r;
    if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
        throw ParseError("bad rational literal '" + text + "'");
    if (r.get_den() == 0) throw ParseError("zero denominator in '" + text + "'");
    r.canonicalize();
    return r;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

// Shortest round-trip decimal for doubles, so reports are deterministic.
inline std::string double_str(double v) {
    char buf[64];
    for (int prec = 15; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof buf, "%.*g", prec, v);
        if (std::strtod(buf, nullptr) == v) break;
    }
    return buf;
}

template <class T>
struct Num;

template <>
struct Num<Rat> {
    static constexpr bool exact = true;
    static Rat zero() { return Rat(0); }
    static Rat one() { return Rat(1); }
    static Rat abs(const Rat& a) { return ::abs(a); }
    static bool is_zero(const Rat& a) { return sgn(a) == 0; }
    static bool eq(const Rat& a, const Rat& b) { return a == b; }
    static bool leq(const Rat& a, const Rat& b) { return a <= b; }
    static bool lt(const Rat& a, const Rat& b) { return a < b; }
    static std::string str(const Rat& a) { return rat_str(a); }
    static double to_double(const Rat& a) { return a.get_d(); }
    static Rat from_int(long v) { return Rat(v); }
    static Rat from_fraction(long p, long q) {
        Rat r(p, q);
        r.canonicalize();
        return r;
    }
};

template <>
struct Num<double> {
    static constexpr bool exact = false;
    static double zero() { return 0.0; }
    static double one() { return 1.0; }
    static double abs(double a) { return std::fabs(a); }
    static double tol(double a, double b) {
        return float_tolerance() * (1.0 + std::max(std::fabs(a), std::fabs(b)));
    }
    static bool is_zero(double a) { return std::fabs(a) <= float_tolerance(); }
    static bool eq(double a, double b) { return std::fabs(a - b) <= tol(a, b); }
    static bool leq(double a, double b) { return a <= b + tol(a, b); }
    static bool lt(double a, double b) { return a < b - tol(a, b); }
    static std::string str(double a) { return double_str(a); }
    static double to_double(double a) { return a; }
    static double from_int(long v) { return static_cast<double>(v); }
    static double from_fraction(long p, long q) {
        return static_cast<double>(p) / static_cast<double>(q);
    }
};

template <class T>
constexpr Mode mode_of() {
    return Num<T>::exact ? Mode::exact : Mode::floating;
}

}  // namespace freelift
