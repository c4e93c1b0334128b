#include "ccodes/poly.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "ccodes/intutil.hpp"

namespace ccodes {

namespace {

void require_same_field(const Poly& a, const Poly& b) {
    if (!a.field().engaged() || !b.field().engaged())
        throw FieldMismatch("operation on a polynomial without a field");
    if (a.field() != b.field()) throw FieldMismatch("polynomials over different fields");
}

}  // namespace

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::zero(const Field& f) { return Poly(f, {}); }

Poly Poly::one(const Field& f) { return Poly(f, {f.one()}); }

Poly Poly::x(const Field& f) { return Poly(f, {f.zero(), f.one()}); }

Poly Poly::monomial(const Field& f, std::int64_t deg, const FieldElem& c) {
    if (deg < 0) throw std::invalid_argument("monomial degree must be >= 0");
    if (c.field() != f) throw FieldMismatch("coefficient from a different field");
    std::vector<FieldElem> cs(deg + 1, f.zero());
    cs[deg] = c;
    return Poly(f, std::move(cs));
}

Poly Poly::from_coeffs(const Field& f, std::vector<FieldElem> cs) {
    for (const auto& c : cs)
        if (c.field() != f) throw FieldMismatch("coefficient from a different field");
    return Poly(f, std::move(cs));
}

Poly Poly::from_ints(const Field& f, const std::vector<std::int64_t>& cs) {
    std::vector<FieldElem> out;
    out.reserve(cs.size());
    for (auto v : cs) out.push_back(f.from_int(v));
    return Poly(f, std::move(out));
}

bool Poly::is_one() const { return c_.size() == 1 && c_[0].is_one(); }

bool Poly::is_monic() const { return !c_.empty() && c_.back().is_one(); }

FieldElem Poly::coeff(std::int64_t i) const {
    if (i < 0 || i >= static_cast<std::int64_t>(c_.size())) return field_.zero();
    return c_[i];
}

FieldElem Poly::leading() const {
    if (c_.empty()) throw ZeroPolynomial("leading coefficient of zero polynomial");
    return c_.back();
}

FieldElem Poly::evaluate(const FieldElem& at) const {
    FieldElem acc = field_.zero();
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
    return acc;
}

Poly Poly::monic() const {
    if (is_zero()) throw ZeroPolynomial("cannot normalize the zero polynomial");
    if (is_monic()) return *this;
    return scaled(leading().inv());
}

Poly Poly::scaled(const FieldElem& c) const {
    std::vector<FieldElem> out(c_);
    for (auto& v : out) v *= c;
    return Poly(field_, std::move(out));
}

Poly Poly::shifted(std::int64_t k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<FieldElem> out(c_.size() + k, field_.zero());
    for (std::size_t i = 0; i < c_.size(); ++i) out[i + k] = c_[i];
    return Poly(field_, std::move(out));
}

Poly Poly::derivative() const {
    if (degree() <= 0) return zero(field_);
    std::vector<FieldElem> out;
    out.reserve(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) out.push_back(c_[i] * field_.from_int(i));
    return Poly(field_, std::move(out));
}

Poly Poly::operator-() const {
    std::vector<FieldElem> out(c_);
    for (auto& v : out) v = -v;
    return Poly(field_, std::move(out));
}

Poly& Poly::operator+=(const Poly& rhs) {
    require_same_field(*this, rhs);
    if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size(), field_.zero());
    for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] += rhs.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
    require_same_field(*this, rhs);
    if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size(), field_.zero());
    for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] -= rhs.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator*=(const Poly& rhs) {
    require_same_field(*this, rhs);
    if (is_zero() || rhs.is_zero()) {
        c_.clear();
        return *this;
    }
    std::vector<FieldElem> out(c_.size() + rhs.c_.size() - 1, field_.zero());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < rhs.c_.size(); ++j) out[i + j] += c_[i] * rhs.c_[j];
    }
    c_ = std::move(out);
    trim();
    return *this;
}

bool Poly::operator==(const Poly& rhs) const {
    require_same_field(*this, rhs);
    return c_ == rhs.c_;
}

bool Poly::operator<(const Poly& rhs) const {
    require_same_field(*this, rhs);
    if (degree() != rhs.degree()) return degree() < rhs.degree();
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] != rhs.c_[i]) return c_[i] < rhs.c_[i];
    }
    return false;
}

std::string Poly::to_string() const {
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

Poly operator+(Poly a, const Poly& b) { return a += b; }
Poly operator-(Poly a, const Poly& b) { return a -= b; }
Poly operator*(Poly a, const Poly& b) { return a *= b; }

std::ostream& operator<<(std::ostream& os, const Poly& f) { return os << f.to_string(); }

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    require_same_field(a, b);
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    const Field& F = a.field();
    if (a.degree() < b.degree()) return {Poly::zero(F), a};
    FieldElem lc_inv = b.leading().inv();
    std::vector<FieldElem> rem(a.coeffs());
    std::int64_t db = b.degree();
    std::vector<FieldElem> quo(a.degree() - db + 1, F.zero());
    for (std::int64_t i = a.degree(); i >= db; --i) {
        FieldElem c = rem[i] * lc_inv;
        if (c.is_zero()) continue;
        quo[i - db] = c;
        for (std::int64_t j = 0; j <= db; ++j) rem[i - db + j] -= c * b.coeff(j);
    }
    return {Poly::from_coeffs(F, std::move(quo)), Poly::from_coeffs(F, std::move(rem))};
}

Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

Poly gcd(Poly a, Poly b) {
    require_same_field(a, b);
    while (!b.is_zero()) {
        Poly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
}

XgcdResult xgcd(const Poly& a, const Poly& b) {
    require_same_field(a, b);
    if (a.is_zero() && b.is_zero()) throw BothZero("xgcd of two zero polynomials");
    const Field& F = a.field();
    Poly r0 = a, r1 = b;
    Poly s0 = Poly::one(F), s1 = Poly::zero(F);
    Poly t0 = Poly::zero(F), t1 = Poly::one(F);
    while (!r1.is_zero()) {
        auto [q, r2] = divmod(r0, r1);
        Poly s2 = s0 - q * s1;
        Poly t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    FieldElem scale = r0.leading().inv();
    Poly g = r0.scaled(scale);
    Poly s = s0.scaled(scale);
    Poly t = t0.scaled(scale);
    // Reduce to the canonical Bezout pair: s mod (b/g), then t recomputed exactly.
    if (!b.is_zero()) {
        Poly bg = b / g;
        if (bg.degree() >= 1) {
            s = s % bg;
            Poly num = g - s * a;
            auto [tq, tr] = divmod(num, b);
            if (!tr.is_zero()) throw ConsistencyFailure("xgcd: cofactor reduction not exact");
            t = std::move(tq);
        }
    }
    return {std::move(g), std::move(s), std::move(t)};
}

Poly pow(Poly base, std::int64_t e) {
    if (e < 0) throw std::invalid_argument("negative polynomial power");
    Poly res = Poly::one(base.field());
    while (e > 0) {
        if (e & 1) res *= base;
        base *= base;
        e >>= 1;
    }
    return res;
}

Poly pow_mod(Poly base, std::uint64_t e, const Poly& mod) {
    Poly res = Poly::one(base.field());
    base = base % mod;
    while (e > 0) {
        if (e & 1) res = (res * base) % mod;
        base = (base * base) % mod;
        e >>= 1;
    }
    return res;
}

Poly Factorization::expand() const {
    Poly acc = Poly::from_coeffs(unit.field(), {unit});
    for (const auto& [f, mult] : factors) acc *= pow(f, mult);
    return acc;
}

namespace {

// w with w^p = f, for f whose nonzero terms all have exponent divisible by p.
Poly pth_root(const Poly& f) {
    const Field& F = f.field();
    std::int64_t p = F.p();
    std::int64_t frob_inv = 1;
    for (int i = 0; i < F.m() - 1; ++i) frob_inv *= p;  // a^(p^(m-1)) inverts x -> x^p
    std::vector<FieldElem> out;
    for (std::int64_t i = 0; i <= f.degree(); i += p) out.push_back(f.coeff(i).pow(frob_inv));
    return Poly::from_coeffs(F, std::move(out));
}

// Squarefree decomposition of a monic polynomial in characteristic p.
void squarefree_decompose(const Poly& f, int outer_mult,
                          std::vector<std::pair<Poly, int>>& out) {
    if (f.degree() <= 0) return;
    Poly fp = f.derivative();
    if (fp.is_zero()) {
        squarefree_decompose(pth_root(f), outer_mult * static_cast<int>(f.field().p()), out);
        return;
    }
    Poly c = gcd(f, fp);
    Poly w = f / c;
    int i = 1;
    while (!w.is_one()) {
        Poly y = gcd(w, c);
        Poly z = w / y;
        if (z.degree() >= 1) out.emplace_back(z, i * outer_mult);
        ++i;
        w = std::move(y);
        c = c / w;
    }
    if (!c.is_one())
        squarefree_decompose(pth_root(c), outer_mult * static_cast<int>(f.field().p()), out);
}

// Distinct-degree splitting of a squarefree monic polynomial: (product, d) pairs.
std::vector<std::pair<Poly, std::int64_t>> distinct_degree_split(Poly f) {
    const Field& F = f.field();
    std::vector<std::pair<Poly, std::int64_t>> out;
    Poly h = Poly::x(F) % f;
    std::int64_t d = 0;
    while (f.degree() > 2 * d) {
        ++d;
        h = pow_mod(h, static_cast<std::uint64_t>(F.q()), f);
        Poly g = gcd(h - Poly::x(F), f);
        if (g.degree() >= 1) {
            out.emplace_back(g, d);
            f = f / g;
            h = h % f;
        }
    }
    if (f.degree() >= 1) out.emplace_back(f, f.degree());
    return out;
}

Poly random_poly_below(const Field& F, std::int64_t deg_bound, std::mt19937_64& rng) {
    std::vector<FieldElem> cs;
    cs.reserve(deg_bound);
    for (std::int64_t i = 0; i < deg_bound; ++i)
        cs.push_back(F.elem_at(static_cast<std::int64_t>(rng() % F.q())));
    return Poly::from_coeffs(F, std::move(cs));
}

// Equal-degree splitting (Cantor-Zassenhaus) of a monic squarefree product of
// irreducibles all of degree d. Exponents stay within 64 bits: for odd p the
// splitting element is norm(h)^((q-1)/2) with norm(h) = prod h^(q^i) computed by
// iterated q-th powers; for p = 2 it is the F_2-trace sum of h^(2^i).
void equal_degree_split(const Poly& f, std::int64_t d, std::mt19937_64& rng,
                        std::vector<Poly>& out) {
    const Field& F = f.field();
    if (f.degree() == d) {
        out.push_back(f);
        return;
    }
    Poly splitter = Poly::zero(F);
    while (true) {
        Poly h = random_poly_below(F, f.degree(), rng);
        if (h.degree() < 1) continue;
        Poly g = gcd(h, f);
        if (g.degree() >= 1 && g.degree() < f.degree()) {
            splitter = std::move(g);
            break;
        }
        Poly b;
        if (F.p() == 2) {
            Poly trace = Poly::zero(F);
            Poly cur = h % f;
            std::int64_t bits = static_cast<std::int64_t>(F.m()) * d;
            for (std::int64_t i = 0; i < bits; ++i) {
                trace += cur;
                cur = (cur * cur) % f;
            }
            b = std::move(trace);
        } else {
            Poly norm = h % f;
            Poly cur = norm;
            for (std::int64_t i = 1; i < d; ++i) {
                cur = pow_mod(cur, static_cast<std::uint64_t>(F.q()), f);
                norm = (norm * cur) % f;
            }
            b = pow_mod(norm, static_cast<std::uint64_t>((F.q() - 1) / 2), f);
            b -= Poly::one(F);
        }
        Poly g2 = gcd(b, f);
        if (g2.degree() >= 1 && g2.degree() < f.degree()) {
            splitter = std::move(g2);
            break;
        }
    }
    equal_degree_split(splitter, d, rng, out);
    equal_degree_split(f / splitter, d, rng, out);
}

}  // namespace

Factorization factorize(const Poly& f, std::uint64_t seed) {
    if (f.is_zero()) throw ZeroPolynomial("cannot factorize the zero polynomial");
    FieldElem unit = f.leading();
    std::map<Poly, int> acc;
    if (f.degree() >= 1) {
        std::mt19937_64 rng(seed);
        std::vector<std::pair<Poly, int>> squarefree;
        squarefree_decompose(f.monic(), 1, squarefree);
        for (const auto& [sf, mult] : squarefree) {
            for (const auto& [prod, d] : distinct_degree_split(sf)) {
                std::vector<Poly> irreducibles;
                equal_degree_split(prod, d, rng, irreducibles);
                for (auto& g : irreducibles) acc[g] += mult;
            }
        }
    }
    Factorization out{unit, {}};
    for (auto& [g, mult] : acc) out.factors.emplace_back(g, mult);
    // std::map on Poly::operator< already yields the (degree, coefficients) order.
    if (out.expand() != f) throw ConsistencyFailure("factorize: product check failed");
    return out;
}

bool binomial_irreducible(std::int64_t n, const FieldElem& a) {
    if (a.is_zero()) throw ZeroElement("binomial criterion needs a nonzero constant");
    if (n < 2) throw std::invalid_argument("binomial criterion needs n >= 2");
    std::int64_t q = a.field().q();
    std::int64_t e = mult_order(a);
    for (std::int64_t r : prime_factors_int(n)) {
        if (e % r != 0) return false;
        if (((q - 1) / e) % r == 0) return false;
    }
    if (n % 4 == 0 && q % 4 != 1) return false;
    return true;
}

Poly reciprocal(const Poly& f) {
    if (f.is_zero()) throw ZeroPolynomial("reciprocal of the zero polynomial");
    std::vector<FieldElem> rev(f.coeffs().rbegin(), f.coeffs().rend());
    return Poly::from_coeffs(f.field(), std::move(rev));
}

Poly monic_normalized_reciprocal(const Poly& f) {
    if (f.is_zero()) throw ZeroPolynomial("reciprocal of the zero polynomial");
    if (f.constant_term().is_zero())
        throw ZeroConstantTerm("normalized reciprocal needs f(0) != 0");
    return reciprocal(f).scaled(f.constant_term().inv());
}

}  // namespace ccodes
