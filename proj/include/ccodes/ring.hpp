#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "ccodes/poly.hpp"

namespace ccodes {

/// An element a + u*b of the chain ring R = F_{p^m} + u F_{p^m}, u^2 = 0.
/// Units are exactly the elements with a != 0; the non-units u*F_{p^m} form
/// the unique maximal ideal.
class RElem {
  public:
    RElem() = default;
    RElem(FieldElem a, FieldElem b);

    static RElem zero(const Field& f) { return RElem(f.zero(), f.zero()); }
    static RElem one(const Field& f) { return RElem(f.one(), f.zero()); }
    static RElem u(const Field& f) { return RElem(f.zero(), f.one()); }
    static RElem from_field(const FieldElem& a) { return RElem(a, a.field().zero()); }

    const Field& field() const { return a_.field(); }
    const FieldElem& a() const { return a_; }
    const FieldElem& b() const { return b_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_one() const { return a_.is_one() && b_.is_zero(); }
    bool is_unit() const { return !a_.is_zero(); }

    RElem operator-() const { return RElem(-a_, -b_); }
    RElem& operator+=(const RElem& rhs);
    RElem& operator-=(const RElem& rhs);
    RElem& operator*=(const RElem& rhs);  // (a+ub)(c+ud) = ac + u(ad+bc)

    bool operator==(const RElem& rhs) const { return a_ == rhs.a_ && b_ == rhs.b_; }
    bool operator!=(const RElem& rhs) const { return !(*this == rhs); }

    std::string to_string() const;

  private:
    FieldElem a_, b_;
};

RElem operator+(RElem a, const RElem& b);
RElem operator-(RElem a, const RElem& b);
RElem operator*(RElem a, const RElem& b);
std::ostream& operator<<(std::ostream& os, const RElem& e);

/// (a + ub)^{-1} = a^{-1} - u a^{-2} b; throws NonUnit when a = 0.
RElem r_inverse(const RElem& e);

/// Dense polynomial over R, constant term first, no trailing zeros. Decomposes
/// coordinate-wise as f1(x) + u*f2(x) with f1, f2 over F_{p^m}.
class RPoly {
  public:
    RPoly() = default;

    static RPoly zero(const Field& f);
    static RPoly one(const Field& f);
    static RPoly x(const Field& f);
    static RPoly monomial(const Field& f, std::int64_t deg, const RElem& c);
    static RPoly from_coeffs(const Field& f, std::vector<RElem> cs);
    static RPoly embed(const Poly& p);  // u-part zero
    static RPoly from_parts(const Poly& f1, const Poly& f2);

    const Field& field() const { return field_; }
    std::int64_t degree() const { return static_cast<std::int64_t>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const;
    RElem coeff(std::int64_t i) const;
    RElem leading() const;  // throws ZeroPolynomial
    const std::vector<RElem>& coeffs() const { return c_; }
    std::pair<Poly, Poly> parts() const;

    RPoly operator-() const;
    RPoly& operator+=(const RPoly& rhs);
    RPoly& operator-=(const RPoly& rhs);
    RPoly& operator*=(const RPoly& rhs);
    RPoly scaled(const RElem& c) const;
    RPoly shifted(std::int64_t k) const;

    bool operator==(const RPoly& rhs) const;
    bool operator!=(const RPoly& rhs) const { return !(*this == rhs); }

    std::string to_string() const;

  private:
    RPoly(Field f, std::vector<RElem> c) : field_(std::move(f)), c_(std::move(c)) { trim(); }
    void trim();
    Field field_;
    std::vector<RElem> c_;
};

RPoly operator+(RPoly a, const RPoly& b);
RPoly operator-(RPoly a, const RPoly& b);
RPoly operator*(RPoly a, const RPoly& b);
std::ostream& operator<<(std::ostream& os, const RPoly& f);

/// u * f: the field part becomes the u-part, the old u-part dies (u^2 = 0).
RPoly u_times(const RPoly& f);

/// Division with remainder; the divisor's leading coefficient must be a unit.
std::pair<RPoly, RPoly> rpoly_divmod(const RPoly& a, const RPoly& b);

/// Canonical representative of f in R[x]/<x^N - lambda>, degree < N, obtained
/// by substituting x^N -> lambda.
RPoly reduce_mod_ambient(const RPoly& f, std::int64_t N, const RElem& lambda);

/// base^e reduced in R[x]/<x^N - lambda>; e >= 0.
RPoly rpoly_pow_mod_ambient(RPoly base, std::int64_t e, std::int64_t N, const RElem& lambda);

/// Inverse of w modulo a monic h in R[x]; w must be a unit there, i.e. the
/// field part of w must be coprime to the field part of h. Throws NonUnit.
RPoly rpoly_inverse_mod(const RPoly& w, const RPoly& h);

}  // namespace ccodes
