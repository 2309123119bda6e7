#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "dcycle/errors.hpp"

namespace dcycle {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Prime field GF(p) with a runtime modulus.  Elements are residues in
/// [0, p).  The modulus is primality-checked at construction, so inverses
/// always exist for nonzero elements.
class GfP {
public:
    using Value = std::uint64_t;

    explicit GfP(std::uint64_t p) : p_(p) {
        if (p >= (std::uint64_t(1) << 31))
            throw Error("modulus-range", "GF(p) modulus must fit in 31 bits");
        if (!is_prime(p))
            throw NotAPrime("field modulus " + std::to_string(p) + " is not prime");
    }

    std::uint64_t modulus() const { return p_; }
    std::uint64_t characteristic() const { return p_; }

    Value zero() const { return 0; }
    Value one() const { return 1 % p_; }
    bool is_zero(Value a) const { return a == 0; }

    Value add(Value a, Value b) const {
        Value s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Value sub(Value a, Value b) const { return a >= b ? a - b : a + p_ - b; }
    Value neg(Value a) const { return a == 0 ? 0 : p_ - a; }
    Value mul(Value a, Value b) const { return (a * b) % p_; }

    Value inv(Value a) const {
        if (a == 0) throw Error("division-by-zero", "inverse of 0 in GF(p)");
        // extended Euclid on (a, p)
        std::int64_t t = 0, new_t = 1;
        std::int64_t r = static_cast<std::int64_t>(p_), new_r = static_cast<std::int64_t>(a);
        while (new_r != 0) {
            std::int64_t q = r / new_r;
            std::int64_t tmp = t - q * new_t;
            t = new_t; new_t = tmp;
            tmp = r - q * new_r;
            r = new_r; new_r = tmp;
        }
        if (t < 0) t += static_cast<std::int64_t>(p_);
        return static_cast<Value>(t);
    }

    Value div(Value a, Value b) const { return mul(a, inv(b)); }

    Value from_int(long long n) const {
        long long m = n % static_cast<long long>(p_);
        if (m < 0) m += static_cast<long long>(p_);
        return static_cast<Value>(m);
    }

    std::string to_string(Value a) const { return std::to_string(a); }

    std::string name() const {
        if (p_ == 2) return "gf2";
        if (p_ == 3) return "gf3";
        return "gf:" + std::to_string(p_);
    }

    bool operator==(const GfP& other) const { return p_ == other.p_; }

    static bool is_prime(std::uint64_t n) {
        if (n < 2) return false;
        if (n % 2 == 0) return n == 2;
        for (std::uint64_t d = 3; d * d <= n; d += 2)
            if (n % d == 0) return false;
        return true;
    }

private:
    std::uint64_t p_;
};

/// The field of rational numbers with exact arbitrary-precision arithmetic.
/// No floating point is involved anywhere.
class Rationals {
public:
    using Value = BigRational;

    std::uint64_t characteristic() const { return 0; }

    Value zero() const { return Value(0); }
    Value one() const { return Value(1); }
    bool is_zero(const Value& a) const { return a == 0; }

    Value add(const Value& a, const Value& b) const { return a + b; }
    Value sub(const Value& a, const Value& b) const { return a - b; }
    Value neg(const Value& a) const { return -a; }
    Value mul(const Value& a, const Value& b) const { return a * b; }
    Value inv(const Value& a) const {
        if (a == 0) throw Error("division-by-zero", "inverse of 0 in Q");
        return Value(1) / a;
    }
    Value div(const Value& a, const Value& b) const { return a / b; }

    Value from_int(long long n) const { return Value(n); }

    std::string to_string(const Value& a) const { return a.str(); }
    std::string name() const { return "q"; }

    bool operator==(const Rationals&) const { return true; }
};

/// Runtime tag naming a coefficient field: GF(p) for a prime p, or Q.
/// Parsed from the CLI syntax `gf2 | gf3 | gf:<p> | q`.
struct FieldSpec {
    bool rational = false;
    std::uint64_t p = 2;

    static FieldSpec gf(std::uint64_t p) {
        if (!GfP::is_prime(p))
            throw NotAPrime("field modulus " + std::to_string(p) + " is not prime");
        return FieldSpec{false, p};
    }
    static FieldSpec rationals() { return FieldSpec{true, 0}; }

    static FieldSpec parse(const std::string& text) {
        if (text == "q" || text == "Q") return rationals();
        if (text == "gf2") return gf(2);
        if (text == "gf3") return gf(3);
        if (text.rfind("gf:", 0) == 0) {
            const std::string num = text.substr(3);
            if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
                throw ParseError("bad field syntax '" + text + "'");
            return gf(std::stoull(num));
        }
        throw ParseError("unknown field '" + text + "' (expected gf2, gf3, gf:<p>, or q)");
    }

    std::string name() const { return rational ? "q" : GfP(p).name(); }

    bool operator==(const FieldSpec& other) const {
        return rational == other.rational && (rational || p == other.p);
    }
};

/// Calls `fn` with the concrete field object described by `spec`.
template <class Fn>
decltype(auto) with_field(const FieldSpec& spec, Fn&& fn) {
    if (spec.rational) return fn(Rationals{});
    return fn(GfP(spec.p));
}

} // namespace dcycle
