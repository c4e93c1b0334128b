#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "ccodes/ring.hpp"

namespace ccodes {

/// One factor of x^n - alpha0 together with its lift to R[x]:
/// h = f^{p^s} + u*g (monic, degree d*p^s) and the CRT idempotent eps of the
/// component R[x]/<h> inside the ambient ring.
struct FactorData {
    Poly f;      // monic irreducible, degree d
    Poly g;      // deg(g) < d*p^s, coprime to f
    RPoly h;     // f^{p^s} + u*g
    RPoly eps;   // idempotent, degree < n*p^s
    std::int64_t d;
};

/// Full algebraic scaffolding of R[x]/<x^{n p^s} - alpha - u*beta>:
/// the p^s-th root alpha0 of alpha, the factorization of x^n - alpha0, the
/// lifted factors h_j with product exactly x^{n p^s} - alpha - u*beta, and the
/// orthogonal idempotents. Immutable after construction; cheap to copy.
class AmbientRing {
  public:
    AmbientRing() = default;

    const Field& field() const;
    int s() const;
    std::int64_t n() const;
    std::int64_t ps() const;      // p^s
    std::int64_t length() const;  // N = n * p^s
    const FieldElem& alpha() const;
    const FieldElem& beta() const;
    const FieldElem& alpha0() const;
    RElem lambda() const;  // alpha + u*beta
    std::int64_t r() const;
    bool irreducible_case() const { return r() == 1; }
    const std::vector<FactorData>& factors() const;

    /// Canonical representative in the ambient ring (degree < N).
    RPoly reduce(const RPoly& f) const;
    /// x^{N} - alpha - u*beta as a polynomial in R[x].
    RPoly modulus_poly() const;

    bool engaged() const { return impl_ != nullptr; }
    bool operator==(const AmbientRing& o) const;
    bool operator!=(const AmbientRing& o) const { return !(*this == o); }

    nlohmann::json to_json() const;

    struct Impl;  // defined in ambient.cpp

  private:
    explicit AmbientRing(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const Impl> impl_;

    friend AmbientRing build_ambient(const Field&, int, std::int64_t, const FieldElem&,
                                     const FieldElem&, std::uint64_t);
    friend AmbientRing dual_ambient(const AmbientRing&);
};

/// Construct the ambient ring. Requires gcd(n, p) = 1 and alpha, beta nonzero.
/// Every structural identity (exact product of the h_j, coprimality of f_j and
/// g_j, idempotent relations) is verified before returning.
AmbientRing build_ambient(const Field& field, int s, std::int64_t n, const FieldElem& alpha,
                          const FieldElem& beta, std::uint64_t seed = kDefaultFactorSeed);

/// The ambient ring of the dual codes: twist lambda^{-1} = alpha^{-1} - u alpha^{-2} beta,
/// with factor j the monic normalized reciprocal of factor j of the source ring
/// (index-aligned, never re-sorted).
AmbientRing dual_ambient(const AmbientRing& ring);

nlohmann::json field_elem_json(const FieldElem& e);
nlohmann::json poly_json(const Poly& f);
nlohmann::json rpoly_json(const RPoly& f);

}  // namespace ccodes
