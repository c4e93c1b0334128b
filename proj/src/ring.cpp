#include "ccodes/ring.hpp"

#include <algorithm>

#include "ccodes/intutil.hpp"

namespace ccodes {

namespace {

void require_same_field(const RElem& a, const RElem& b) {
    if (!a.field().engaged() || !b.field().engaged())
        throw FieldMismatch("operation on a disengaged ring element");
    if (a.field() != b.field()) throw FieldMismatch("ring elements over different fields");
}

void require_same_field(const RPoly& a, const RPoly& b) {
    if (!a.field().engaged() || !b.field().engaged())
        throw FieldMismatch("operation on a ring polynomial without a field");
    if (a.field() != b.field()) throw FieldMismatch("ring polynomials over different fields");
}

}  // namespace

RElem::RElem(FieldElem a, FieldElem b) : a_(std::move(a)), b_(std::move(b)) {
    if (a_.field() != b_.field()) throw FieldMismatch("ring element parts in different fields");
}

RElem& RElem::operator+=(const RElem& rhs) {
    require_same_field(*this, rhs);
    a_ += rhs.a_;
    b_ += rhs.b_;
    return *this;
}

RElem& RElem::operator-=(const RElem& rhs) {
    require_same_field(*this, rhs);
    a_ -= rhs.a_;
    b_ -= rhs.b_;
    return *this;
}

RElem& RElem::operator*=(const RElem& rhs) {
    require_same_field(*this, rhs);
    FieldElem na = a_ * rhs.a_;
    FieldElem nb = a_ * rhs.b_ + b_ * rhs.a_;
    a_ = std::move(na);
    b_ = std::move(nb);
    return *this;
}

std::string RElem::to_string() const {
    if (is_zero()) return "0";
    if (b_.is_zero()) return a_.to_string();
    std::string ub = b_.is_one() ? "u" : "u*" + b_.to_string();
    if (a_.is_zero()) return ub;
    return "(" + a_.to_string() + " + " + ub + ")";
}

RElem operator+(RElem a, const RElem& b) { return a += b; }
RElem operator-(RElem a, const RElem& b) { return a -= b; }
RElem operator*(RElem a, const RElem& b) { return a *= b; }

std::ostream& operator<<(std::ostream& os, const RElem& e) { return os << e.to_string(); }

RElem r_inverse(const RElem& e) {
    if (!e.is_unit()) throw NonUnit("ring element with zero field part is not invertible");
    FieldElem ai = e.a().inv();
    return RElem(ai, -(ai * ai * e.b()));
}

void RPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

RPoly RPoly::zero(const Field& f) { return RPoly(f, {}); }

RPoly RPoly::one(const Field& f) { return RPoly(f, {RElem::one(f)}); }

RPoly RPoly::x(const Field& f) { return RPoly(f, {RElem::zero(f), RElem::one(f)}); }

RPoly RPoly::monomial(const Field& f, std::int64_t deg, const RElem& c) {
    if (deg < 0) throw std::invalid_argument("monomial degree must be >= 0");
    std::vector<RElem> cs(deg + 1, RElem::zero(f));
    cs[deg] = c;
    return RPoly(f, std::move(cs));
}

RPoly RPoly::from_coeffs(const Field& f, std::vector<RElem> cs) {
    for (const auto& c : cs)
        if (c.field() != f) throw FieldMismatch("coefficient from a different field");
    return RPoly(f, std::move(cs));
}

RPoly RPoly::embed(const Poly& p) {
    std::vector<RElem> cs;
    cs.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) cs.push_back(RElem::from_field(c));
    return RPoly(p.field(), std::move(cs));
}

RPoly RPoly::from_parts(const Poly& f1, const Poly& f2) {
    if (f1.field() != f2.field()) throw FieldMismatch("parts over different fields");
    const Field& F = f1.field();
    std::int64_t d = std::max(f1.degree(), f2.degree());
    std::vector<RElem> cs;
    for (std::int64_t i = 0; i <= d; ++i) cs.emplace_back(f1.coeff(i), f2.coeff(i));
    return RPoly(F, std::move(cs));
}

bool RPoly::is_one() const { return c_.size() == 1 && c_[0].is_one(); }

RElem RPoly::coeff(std::int64_t i) const {
    if (i < 0 || i >= static_cast<std::int64_t>(c_.size())) return RElem::zero(field_);
    return c_[i];
}

RElem RPoly::leading() const {
    if (c_.empty()) throw ZeroPolynomial("leading coefficient of zero polynomial");
    return c_.back();
}

std::pair<Poly, Poly> RPoly::parts() const {
    std::vector<FieldElem> p1, p2;
    p1.reserve(c_.size());
    p2.reserve(c_.size());
    for (const auto& c : c_) {
        p1.push_back(c.a());
        p2.push_back(c.b());
    }
    return {Poly::from_coeffs(field_, std::move(p1)), Poly::from_coeffs(field_, std::move(p2))};
}

RPoly RPoly::operator-() const {
    std::vector<RElem> out(c_);
    for (auto& v : out) v = -v;
    return RPoly(field_, std::move(out));
}

RPoly& RPoly::operator+=(const RPoly& rhs) {
    require_same_field(*this, rhs);
    if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size(), RElem::zero(field_));
    for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] += rhs.c_[i];
    trim();
    return *this;
}

RPoly& RPoly::operator-=(const RPoly& rhs) {
    require_same_field(*this, rhs);
    if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size(), RElem::zero(field_));
    for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] -= rhs.c_[i];
    trim();
    return *this;
}

RPoly& RPoly::operator*=(const RPoly& rhs) {
    require_same_field(*this, rhs);
    if (is_zero() || rhs.is_zero()) {
        c_.clear();
        return *this;
    }
    std::vector<RElem> out(c_.size() + rhs.c_.size() - 1, RElem::zero(field_));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < rhs.c_.size(); ++j) out[i + j] += c_[i] * rhs.c_[j];
    }
    c_ = std::move(out);
    trim();
    return *this;
}

RPoly RPoly::scaled(const RElem& c) const {
    std::vector<RElem> out(c_);
    for (auto& v : out) v *= c;
    return RPoly(field_, std::move(out));
}

RPoly RPoly::shifted(std::int64_t k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<RElem> out(c_.size() + k, RElem::zero(field_));
    for (std::size_t i = 0; i < c_.size(); ++i) out[i + k] = c_[i];
    return RPoly(field_, std::move(out));
}

bool RPoly::operator==(const RPoly& rhs) const {
    require_same_field(*this, rhs);
    return c_ == rhs.c_;
}

std::string RPoly::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        if (!s.empty()) s += " + ";
        if (i == 0) {
            s += c_[i].to_string();
        } else {
            if (!c_[i].is_one()) s += c_[i].to_string() + "*";
            s += (i == 1) ? "x" : "x^" + std::to_string(i);
        }
    }
    return s;
}

RPoly operator+(RPoly a, const RPoly& b) { return a += b; }
RPoly operator-(RPoly a, const RPoly& b) { return a -= b; }
RPoly operator*(RPoly a, const RPoly& b) { return a *= b; }

std::ostream& operator<<(std::ostream& os, const RPoly& f) { return os << f.to_string(); }

RPoly u_times(const RPoly& f) {
    auto [p1, p2] = f.parts();
    (void)p2;
    return RPoly::from_parts(Poly::zero(f.field()), p1);
}

std::pair<RPoly, RPoly> rpoly_divmod(const RPoly& a, const RPoly& b) {
    require_same_field(a, b);
    if (b.is_zero()) throw DivisionByZero("ring polynomial division by zero");
    if (!b.leading().is_unit())
        throw NonUnitLeadingCoefficient("divisor leading coefficient must be a unit");
    const Field& F = a.field();
    if (a.degree() < b.degree()) return {RPoly::zero(F), a};
    RElem lc_inv = r_inverse(b.leading());
    std::vector<RElem> rem(a.coeffs());
    std::int64_t db = b.degree();
    std::vector<RElem> quo(a.degree() - db + 1, RElem::zero(F));
    for (std::int64_t i = a.degree(); i >= db; --i) {
        RElem c = rem[i] * lc_inv;
        if (c.is_zero()) continue;
        quo[i - db] = c;
        for (std::int64_t j = 0; j <= db; ++j) rem[i - db + j] -= c * b.coeff(j);
    }
    return {RPoly::from_coeffs(F, std::move(quo)), RPoly::from_coeffs(F, std::move(rem))};
}

RPoly reduce_mod_ambient(const RPoly& f, std::int64_t N, const RElem& lambda) {
    if (N < 1) throw std::invalid_argument("ambient length must be >= 1");
    if (!lambda.is_unit()) throw NonUnit("ambient twist must be a unit");
    const Field& F = lambda.field();
    std::vector<RElem> out(N, RElem::zero(F));
    RElem lpow = RElem::one(F);
    std::int64_t block = 0;  // current power of lambda = lambda^block
    for (std::int64_t i = 0; i <= f.degree(); ++i) {
        std::int64_t k = i / N;
        while (block < k) {
            lpow *= lambda;
            ++block;
        }
        out[i % N] += f.coeff(i) * lpow;
    }
    return RPoly::from_coeffs(F, std::move(out));
}

RPoly rpoly_pow_mod_ambient(RPoly base, std::int64_t e, std::int64_t N, const RElem& lambda) {
    if (e < 0) throw std::invalid_argument("negative power");
    base = reduce_mod_ambient(base, N, lambda);
    RPoly res = RPoly::one(lambda.field());
    while (e > 0) {
        if (e & 1) res = reduce_mod_ambient(res * base, N, lambda);
        base = reduce_mod_ambient(base * base, N, lambda);
        e >>= 1;
    }
    return res;
}

RPoly rpoly_inverse_mod(const RPoly& w, const RPoly& h) {
    require_same_field(w, h);
    if (h.is_zero() || !h.leading().is_one())
        throw std::invalid_argument("modulus must be monic");
    const Field& F = w.field();
    auto [h1, h2] = h.parts();
    auto [w1, w2] = rpoly_divmod(w, h).second.parts();
    // Unit test in the residue ring: the field part must be coprime to h1.
    Poly g = gcd(w1, h1);
    if (!g.is_one()) throw NonUnit("not a unit modulo h");
    auto bez = xgcd(w1, h1);  // bez.s * w1 + bez.t * h1 = 1
    // Modulo h: h1 = -u*h2, so bez.s*w1 = 1 + u*(bez.t*h2), hence
    // w*bez.s = 1 + u*c with c = bez.s*w2 + bez.t*h2, and (1+uc)^{-1} = 1-uc.
    Poly c = (bez.s * w2 + bez.t * h2) % h1;
    RPoly inv = RPoly::embed(bez.s) * (RPoly::one(F) - u_times(RPoly::embed(c)));
    inv = rpoly_divmod(inv, h).second;
    if (!rpoly_divmod(inv * w, h).second.is_one())
        throw ConsistencyFailure("rpoly_inverse_mod: verification failed");
    return inv;
}

}  // namespace ccodes
