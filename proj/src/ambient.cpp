#include "ccodes/ambient.hpp"

#include "ccodes/intutil.hpp"

namespace ccodes {

struct AmbientRing::Impl {
    Field field;
    int s = 0;
    std::int64_t n = 0;
    std::int64_t ps = 0;
    std::int64_t length = 0;
    FieldElem alpha, beta, alpha0;
    std::vector<FactorData> factors;
};

const Field& AmbientRing::field() const { return impl_->field; }
int AmbientRing::s() const { return impl_->s; }
std::int64_t AmbientRing::n() const { return impl_->n; }
std::int64_t AmbientRing::ps() const { return impl_->ps; }
std::int64_t AmbientRing::length() const { return impl_->length; }
const FieldElem& AmbientRing::alpha() const { return impl_->alpha; }
const FieldElem& AmbientRing::beta() const { return impl_->beta; }
const FieldElem& AmbientRing::alpha0() const { return impl_->alpha0; }
RElem AmbientRing::lambda() const { return RElem(impl_->alpha, impl_->beta); }
std::int64_t AmbientRing::r() const { return static_cast<std::int64_t>(impl_->factors.size()); }
const std::vector<FactorData>& AmbientRing::factors() const { return impl_->factors; }

RPoly AmbientRing::reduce(const RPoly& f) const {
    return reduce_mod_ambient(f, impl_->length, lambda());
}

RPoly AmbientRing::modulus_poly() const {
    const Field& F = impl_->field;
    return RPoly::monomial(F, impl_->length, RElem::one(F)) -
           RPoly::monomial(F, 0, RElem(impl_->alpha, impl_->beta));
}

bool AmbientRing::operator==(const AmbientRing& o) const {
    if (impl_ == o.impl_) return true;
    if (!impl_ || !o.impl_) return false;
    if (!(impl_->field == o.impl_->field) || impl_->s != o.impl_->s || impl_->n != o.impl_->n ||
        impl_->alpha != o.impl_->alpha || impl_->beta != o.impl_->beta)
        return false;
    for (std::int64_t j = 0; j < r(); ++j)
        if (impl_->factors[j].f != o.impl_->factors[j].f) return false;
    return true;
}

namespace {

// Shared constructor: the factor list is prescribed (sorted by the factorizer
// for a fresh ring, reciprocal-paired for a dual ring) and every structural
// identity is asserted before the ring is returned.
AmbientRing::Impl build_impl(const Field& F, int s, std::int64_t n, const FieldElem& alpha,
                             const FieldElem& beta, std::vector<Poly> factor_polys) {
    AmbientRing::Impl impl;
    impl.field = F;
    impl.s = s;
    impl.n = n;
    impl.ps = checked_pow_int(F.p(), s, std::int64_t{1} << 40, "p^s too large");
    if (n > (std::int64_t{1} << 40) / impl.ps) throw TooLarge("ambient length too large");
    impl.length = n * impl.ps;
    impl.alpha = alpha;
    impl.beta = beta;
    impl.alpha0 = ps_root(alpha, s);
    if (impl.alpha0.pow(impl.ps) != alpha)
        throw ConsistencyFailure("alpha0^{p^s} != alpha");

    const std::int64_t N = impl.length;
    const RElem lambda(alpha, beta);

    // x^n - alpha0 must be exactly the product of the prescribed monic factors.
    Poly xn_minus_a0 = Poly::monomial(F, n, F.one()) - Poly::from_coeffs(F, {impl.alpha0});
    Poly prod = Poly::one(F);
    for (const auto& f : factor_polys) {
        if (!f.is_monic()) throw ConsistencyFailure("factor not monic");
        prod *= f;
    }
    if (prod != xn_minus_a0)
        throw ConsistencyFailure("factor product != x^n - alpha0");

    // x^{N} - alpha = product f_j^{p^s} (Frobenius); solve one congruence per
    // factor for g_j: g_j = -beta * (prod_{l != j} f_l^{p^s})^{-1} mod f_j^{p^s}.
    Poly xN_minus_alpha = Poly::monomial(F, N, F.one()) - Poly::from_coeffs(F, {alpha});
    std::vector<Poly> fps;
    fps.reserve(factor_polys.size());
    for (const auto& f : factor_polys) fps.push_back(pow(f, impl.ps));
    {
        Poly check = Poly::one(F);
        for (const auto& fp : fps) check *= fp;
        if (check != xN_minus_alpha)
            throw ConsistencyFailure("prod f_j^{p^s} != x^N - alpha");
    }

    for (std::size_t j = 0; j < factor_polys.size(); ++j) {
        auto [cofactor, rem] = divmod(xN_minus_alpha, fps[j]);
        if (!rem.is_zero()) throw ConsistencyFailure("cofactor division not exact");
        auto bez = xgcd(cofactor % fps[j], fps[j]);
        if (!bez.g.is_one()) throw ConsistencyFailure("lifted factors not coprime");
        Poly g = (bez.s.scaled(-beta)) % fps[j];
        FactorData fd;
        fd.f = factor_polys[j];
        fd.g = g;
        fd.h = RPoly::from_parts(fps[j], g);
        fd.d = factor_polys[j].degree();
        impl.factors.push_back(std::move(fd));
    }

    // The authoritative identity: prod h_j = x^N - alpha - u*beta, exactly in R[x].
    RPoly target = RPoly::monomial(F, N, RElem::one(F)) - RPoly::monomial(F, 0, lambda);
    RPoly hprod = RPoly::one(F);
    for (const auto& fd : impl.factors) hprod *= fd.h;
    if (hprod != target)
        throw ConsistencyFailure("prod h_j != x^N - alpha - u*beta");

    // gcd(f_j, g_j) = 1 for every j.
    for (const auto& fd : impl.factors) {
        if (!gcd(fd.f, fd.g).is_one())
            throw ConsistencyFailure("f_j and g_j are not coprime");
    }

    // Idempotents. For r = 1 the complement product is empty and eps = 1.
    const std::size_t r = impl.factors.size();
    if (r == 1) {
        impl.factors[0].eps = RPoly::one(F);
    } else {
        for (std::size_t j = 0; j < r; ++j) {
            // Residue-field Bezout: s_bar * (prod_{l != j} f_l^{p^s}) = 1 mod f_j^{p^s}.
            auto [cofactor, rem] = divmod(xN_minus_alpha, fps[j]);
            (void)rem;
            auto bez = xgcd(cofactor, fps[j]);
            if (!bez.g.is_one()) throw ConsistencyFailure("idempotent Bezout failed");
            RPoly Hj = RPoly::one(F);
            for (std::size_t l = 0; l < r; ++l)
                if (l != j) Hj *= impl.factors[l].h;
            RPoly e = reduce_mod_ambient(RPoly::embed(bez.s) * Hj, N, lambda);
            // One refinement step lands on the exact idempotent because the
            // error e^2 - e lies in <u> and u^2 = 0.
            RPoly e2 = reduce_mod_ambient(e * e, N, lambda);
            RPoly e3 = reduce_mod_ambient(e2 * e, N, lambda);
            RPoly eps = e2.scaled(RElem::from_field(F.from_int(3))) -
                        e3.scaled(RElem::from_field(F.from_int(2)));
            impl.factors[j].eps = reduce_mod_ambient(eps, N, lambda);
        }
    }

    // Verify the idempotent relations exactly in the ambient ring.
    RPoly sum = RPoly::zero(F);
    for (const auto& fd : impl.factors) sum += fd.eps;
    if (!reduce_mod_ambient(sum, N, lambda).is_one())
        throw ConsistencyFailure("sum of idempotents != 1");
    for (std::size_t j = 0; j < r; ++j) {
        const RPoly& ej = impl.factors[j].eps;
        if (reduce_mod_ambient(ej * ej, N, lambda) != ej)
            throw ConsistencyFailure("idempotent is not idempotent");
        if (!reduce_mod_ambient(ej * impl.factors[j].h, N, lambda).is_zero())
            throw ConsistencyFailure("eps_j * h_j != 0");
        for (std::size_t l = j + 1; l < r; ++l) {
            if (!reduce_mod_ambient(ej * impl.factors[l].eps, N, lambda).is_zero())
                throw ConsistencyFailure("idempotents not orthogonal");
        }
    }
    return impl;
}

}  // namespace

AmbientRing build_ambient(const Field& field, int s, std::int64_t n, const FieldElem& alpha,
                          const FieldElem& beta, std::uint64_t seed) {
    if (!field.engaged()) throw std::invalid_argument("field required");
    if (s < 1) throw std::invalid_argument("s must be >= 1");
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (n % field.p() == 0) throw NotCoprime("n must be coprime to the characteristic");
    if (alpha.field() != field || beta.field() != field)
        throw FieldMismatch("alpha/beta from a different field");
    if (alpha.is_zero() || beta.is_zero())
        throw ZeroElement("alpha and beta must be nonzero");

    FieldElem alpha0 = ps_root(alpha, s);
    Poly xn_minus_a0 =
        Poly::monomial(field, n, field.one()) - Poly::from_coeffs(field, {alpha0});
    auto fact = factorize(xn_minus_a0, seed);
    std::vector<Poly> factor_polys;
    for (const auto& [f, mult] : fact.factors) {
        if (mult != 1)
            throw ConsistencyFailure("x^n - alpha0 must be squarefree when gcd(n,p)=1");
        factor_polys.push_back(f);
    }
    return AmbientRing(std::make_shared<const AmbientRing::Impl>(
        build_impl(field, s, n, alpha, beta, std::move(factor_polys))));
}

AmbientRing dual_ambient(const AmbientRing& ring) {
    const Field& F = ring.field();
    FieldElem ai = ring.alpha().inv();
    FieldElem dual_alpha = ai;
    FieldElem dual_beta = -(ai * ai * ring.beta());
    std::vector<Poly> dual_factors;
    for (const auto& fd : ring.factors())
        dual_factors.push_back(monic_normalized_reciprocal(fd.f));
    return AmbientRing(std::make_shared<const AmbientRing::Impl>(
        build_impl(F, ring.s(), ring.n(), dual_alpha, dual_beta, std::move(dual_factors))));
}

nlohmann::json field_elem_json(const FieldElem& e) {
    nlohmann::json out = nlohmann::json::array();
    for (auto c : e.coords()) out.push_back(c);
    return out;
}

nlohmann::json poly_json(const Poly& f) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& c : f.coeffs()) out.push_back(field_elem_json(c));
    return out;
}

nlohmann::json rpoly_json(const RPoly& f) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& c : f.coeffs())
        out.push_back(nlohmann::json::array({field_elem_json(c.a()), field_elem_json(c.b())}));
    return out;
}

nlohmann::json AmbientRing::to_json() const {
    nlohmann::json j;
    j["field"] = impl_->field.to_string();
    j["p"] = impl_->field.p();
    j["m"] = impl_->field.m();
    j["modulus"] = impl_->field.modulus();
    j["s"] = impl_->s;
    j["n"] = impl_->n;
    j["N"] = impl_->length;
    j["alpha"] = field_elem_json(impl_->alpha);
    j["beta"] = field_elem_json(impl_->beta);
    j["alpha0"] = field_elem_json(impl_->alpha0);
    j["lambda"] = rpoly_json(RPoly::monomial(impl_->field, 0, lambda()));
    j["irreducible_case"] = irreducible_case();
    j["r"] = r();
    nlohmann::json fs = nlohmann::json::array();
    for (std::int64_t idx = 0; idx < r(); ++idx) {
        const auto& fd = impl_->factors[idx];
        nlohmann::json fj;
        fj["index"] = idx + 1;
        fj["d"] = fd.d;
        fj["f"] = poly_json(fd.f);
        fj["g"] = poly_json(fd.g);
        fj["h"] = rpoly_json(fd.h);
        fj["eps"] = rpoly_json(fd.eps);
        fs.push_back(std::move(fj));
    }
    j["factors"] = std::move(fs);
    return j;
}

}  // namespace ccodes
