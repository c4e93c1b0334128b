#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "ccodes/gf.hpp"

namespace ccodes {

/// Dense polynomial over F_{p^m}, constant term first, no trailing zeros.
/// Immutable value semantics; all operations are pure.
class Poly {
  public:
    Poly() = default;  // zero over a disengaged field; assign before use

    static Poly zero(const Field& f);
    static Poly one(const Field& f);
    static Poly x(const Field& f);
    static Poly monomial(const Field& f, std::int64_t deg, const FieldElem& c);
    static Poly from_coeffs(const Field& f, std::vector<FieldElem> cs);
    /// Coefficients from prime-subfield integers (test/CLI convenience).
    static Poly from_ints(const Field& f, const std::vector<std::int64_t>& cs);

    const Field& field() const { return field_; }
    std::int64_t degree() const { return static_cast<std::int64_t>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const;
    bool is_monic() const;
    FieldElem coeff(std::int64_t i) const;  // zero beyond the degree
    FieldElem leading() const;              // throws ZeroPolynomial
    FieldElem constant_term() const { return coeff(0); }
    const std::vector<FieldElem>& coeffs() const { return c_; }

    FieldElem evaluate(const FieldElem& at) const;
    Poly monic() const;  // throws ZeroPolynomial
    Poly scaled(const FieldElem& c) const;
    Poly shifted(std::int64_t k) const;  // multiply by x^k
    Poly derivative() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    Poly& operator*=(const Poly& rhs);

    bool operator==(const Poly& rhs) const;
    bool operator!=(const Poly& rhs) const { return !(*this == rhs); }
    /// Deterministic total order: (degree, coefficient vector from the constant
    /// term up). Fixes factor indices across runs.
    bool operator<(const Poly& rhs) const;

    std::string to_string() const;

  private:
    Poly(Field f, std::vector<FieldElem> c) : field_(std::move(f)), c_(std::move(c)) { trim(); }
    void trim();
    Field field_;
    std::vector<FieldElem> c_;
};

Poly operator+(Poly a, const Poly& b);
Poly operator-(Poly a, const Poly& b);
Poly operator*(Poly a, const Poly& b);
std::ostream& operator<<(std::ostream& os, const Poly& f);

/// Quotient and remainder with deg(r) < deg(b).
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly operator/(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);

/// Monic gcd (zero if both inputs are zero... callers pass at least one nonzero).
Poly gcd(Poly a, Poly b);

struct XgcdResult {
    Poly g;  // monic gcd
    Poly s;
    Poly t;  // s*a + t*b = g
};

/// Extended Euclid; for coprime nonconstant inputs the cofactors are the reduced
/// Bezout pair with deg(s) < deg(b) and deg(t) < deg(a).
XgcdResult xgcd(const Poly& a, const Poly& b);

Poly pow(Poly base, std::int64_t e);
Poly pow_mod(Poly base, std::uint64_t e, const Poly& mod);

/// unit * product(factor^multiplicity) == the factorized input, exactly.
struct Factorization {
    FieldElem unit;
    std::vector<std::pair<Poly, int>> factors;  // monic irreducible, sorted, distinct
    Poly expand() const;
};

inline constexpr std::uint64_t kDefaultFactorSeed = 0x00c0ffee;

/// Complete factorization into monic irreducibles: squarefree decomposition,
/// then distinct-degree splitting, then seeded equal-degree splitting.
/// Output order is deterministic regardless of the seed.
Factorization factorize(const Poly& f, std::uint64_t seed = kDefaultFactorSeed);

/// Irreducibility of x^n - a over F_q, decided arithmetically: every prime
/// factor of n must divide e = mult_order(a) and not (q-1)/e, and q = 1 mod 4
/// whenever n = 0 mod 4.
bool binomial_irreducible(std::int64_t n, const FieldElem& a);

/// x^{deg f} * f(1/x): the coefficient vector reversed.
Poly reciprocal(const Poly& f);

/// f(0)^{-1} * reciprocal(f); maps monic factors of x^n - c to monic factors
/// of x^n - c^{-1}.
Poly monic_normalized_reciprocal(const Poly& f);

}  // namespace ccodes
