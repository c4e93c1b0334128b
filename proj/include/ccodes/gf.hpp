#pragma once

#include <cstdint>
#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include "ccodes/errors.hpp"

namespace ccodes {

class FieldElem;

/// The finite field F_{p^m}, represented as F_p[x] modulo a monic irreducible
/// polynomial of degree m. Immutable; cheap to copy and share.
class Field {
  public:
    Field() = default;  // disengaged handle

    /// Construct with the lexicographically smallest monic irreducible modulus.
    static Field make(std::int64_t p, int m);
    /// Construct with an explicit monic irreducible modulus (m+1 coefficients,
    /// constant term first).
    static Field make(std::int64_t p, int m, const std::vector<std::int64_t>& modulus);

    std::int64_t p() const;
    int m() const;
    std::int64_t q() const;  // p^m
    const std::vector<std::int64_t>& modulus() const;

    FieldElem zero() const;
    FieldElem one() const;
    /// Element from coordinates w.r.t. the power basis (up to m entries,
    /// reduced mod p; missing entries are zero).
    FieldElem element(std::vector<std::int64_t> coords) const;
    /// Scalar from the prime subfield: v mod p.
    FieldElem from_int(std::int64_t v) const;
    /// Power-basis element x^k mod modulus, 0 <= k < m.
    FieldElem basis_elem(int k) const;
    /// Element number `index` in [0, q): base-p digits, constant coordinate first.
    FieldElem elem_at(std::int64_t index) const;

    bool engaged() const { return impl_ != nullptr; }
    bool operator==(const Field& o) const;
    bool operator!=(const Field& o) const { return !(*this == o); }

    /// Textual form "GF(q; modulus=...)" echoed in all output.
    std::string to_string() const;

  private:
    struct Impl;
    explicit Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const Impl> impl_;
    friend class FieldElem;
};

/// An element of F_{p^m}: m coordinates in the power basis of the modulus.
class FieldElem {
  public:
    FieldElem() = default;  // disengaged

    const Field& field() const { return field_; }
    const std::vector<std::int64_t>& coords() const { return c_; }
    /// Base-p encoding of the coordinates (constant coordinate least significant).
    std::int64_t index() const;

    bool is_zero() const;
    bool is_one() const;

    FieldElem operator-() const;
    FieldElem& operator+=(const FieldElem& rhs);
    FieldElem& operator-=(const FieldElem& rhs);
    FieldElem& operator*=(const FieldElem& rhs);
    FieldElem& operator/=(const FieldElem& rhs);

    FieldElem inv() const;
    /// a^k for any integer k; negative exponents invert the base first.
    FieldElem pow(std::int64_t k) const;

    bool operator==(const FieldElem& rhs) const;
    bool operator!=(const FieldElem& rhs) const { return !(*this == rhs); }
    /// Lexicographic order on coordinates; used only for deterministic sorting.
    bool operator<(const FieldElem& rhs) const;

    std::string to_string() const;  // "2" for m = 1, "(1,0)" for m > 1

  private:
    FieldElem(Field f, std::vector<std::int64_t> c) : field_(std::move(f)), c_(std::move(c)) {}
    Field field_;
    std::vector<std::int64_t> c_;
    friend class Field;
};

FieldElem operator+(FieldElem a, const FieldElem& b);
FieldElem operator-(FieldElem a, const FieldElem& b);
FieldElem operator*(FieldElem a, const FieldElem& b);
FieldElem operator/(FieldElem a, const FieldElem& b);
std::ostream& operator<<(std::ostream& os, const FieldElem& e);

/// Smallest e >= 1 with a^e = 1; divides q - 1.
std::int64_t mult_order(const FieldElem& a);

/// The unique alpha0 with alpha0^{p^s} = alpha (x -> x^{p^s} is an automorphism),
/// computed as alpha^t with t = (p^s)^{-1} mod (q - 1).
FieldElem ps_root(const FieldElem& alpha, int s);

}  // namespace ccodes
