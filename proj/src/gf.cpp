#include "ccodes/gf.hpp"

#include <algorithm>

#include "ccodes/intutil.hpp"

namespace ccodes {

namespace {

// Helpers on raw F_p coefficient vectors (constant term first, trailing zeros allowed).

void trim_fp(std::vector<std::int64_t>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

int deg_fp(const std::vector<std::int64_t>& v) {
    for (int i = static_cast<int>(v.size()) - 1; i >= 0; --i)
        if (v[i] != 0) return i;
    return -1;
}

std::vector<std::int64_t> mul_fp(const std::vector<std::int64_t>& a,
                                 const std::vector<std::int64_t>& b, std::int64_t p) {
    if (a.empty() || b.empty()) return {};
    std::vector<std::int64_t> out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    }
    trim_fp(out);
    return out;
}

// Remainder of a modulo b (b monic-normalizable, nonzero).
std::vector<std::int64_t> rem_fp(std::vector<std::int64_t> a, const std::vector<std::int64_t>& b,
                                 std::int64_t p) {
    int db = deg_fp(b);
    std::int64_t lc_inv = mod_inv_int(b[db], p);
    int da = deg_fp(a);
    while (da >= db) {
        std::int64_t c = (a[da] * lc_inv) % p;
        if (c != 0) {
            int shift = da - db;
            for (int i = 0; i <= db; ++i) {
                a[i + shift] = ((a[i + shift] - c * b[i]) % p + p) % p;
            }
        }
        --da;
        while (da >= 0 && a[da] == 0) --da;
    }
    a.resize(da + 1);
    return a;
}

bool is_irreducible_fp(const std::vector<std::int64_t>& f, std::int64_t p) {
    int d = deg_fp(f);
    if (d <= 0) return false;
    if (d == 1) return true;
    // Trial division by every monic polynomial of degree 1..d/2.
    for (int dg = 1; 2 * dg <= d; ++dg) {
        std::vector<std::int64_t> g(dg + 1, 0);
        g[dg] = 1;
        std::int64_t count = 1;
        for (int i = 0; i < dg; ++i) count *= p;
        for (std::int64_t k = 0; k < count; ++k) {
            std::int64_t t = k;
            for (int i = 0; i < dg; ++i) {
                g[i] = t % p;
                t /= p;
            }
            if (rem_fp(f, g, p).empty()) return false;
        }
    }
    return true;
}

// Lexicographically smallest monic irreducible of degree m over F_p, comparing
// coefficient vectors (c_0, ..., c_{m-1}).
std::vector<std::int64_t> find_modulus(std::int64_t p, int m) {
    std::vector<std::int64_t> f(m + 1, 0);
    f[m] = 1;
    std::int64_t total = 1;
    for (int i = 0; i < m; ++i) total *= p;
    for (std::int64_t k = 0; k < total; ++k) {
        // c_0 is the most significant base-p digit of k, so candidates appear in
        // lexicographic order of (c_0, ..., c_{m-1}).
        for (int i = 0; i < m; ++i) {
            std::int64_t digit = k;
            for (int j = 0; j < m - 1 - i; ++j) digit /= p;
            f[i] = digit % p;
        }
        if (is_irreducible_fp(f, p)) return f;
    }
    throw ConsistencyFailure("find_modulus: no irreducible polynomial found");
}

}  // namespace

struct Field::Impl {
    std::int64_t p;
    int m;
    std::vector<std::int64_t> modulus;
    std::int64_t q;
};

Field Field::make(std::int64_t p, int m) {
    if (!is_prime_int(p)) throw NonPrimeCharacteristic("characteristic must be prime");
    if (m < 1) throw std::invalid_argument("extension degree must be >= 1");
    return make(p, m, find_modulus(p, m));
}

Field Field::make(std::int64_t p, int m, const std::vector<std::int64_t>& modulus) {
    if (!is_prime_int(p)) throw NonPrimeCharacteristic("characteristic must be prime");
    if (m < 1) throw std::invalid_argument("extension degree must be >= 1");
    if (static_cast<int>(modulus.size()) != m + 1)
        throw std::invalid_argument("modulus must have degree m");
    std::vector<std::int64_t> mod(modulus);
    for (auto& c : mod) c = ((c % p) + p) % p;
    if (mod[m] != 1) throw std::invalid_argument("modulus must be monic");
    if (!is_irreducible_fp(mod, p)) throw ReducibleModulus("modulus factors over F_p");
    auto impl = std::make_shared<Impl>();
    impl->p = p;
    impl->m = m;
    impl->modulus = std::move(mod);
    impl->q = checked_pow_int(p, m, std::int64_t{1} << 40, "field too large");
    return Field(std::move(impl));
}

std::int64_t Field::p() const { return impl_->p; }
int Field::m() const { return impl_->m; }
std::int64_t Field::q() const { return impl_->q; }
const std::vector<std::int64_t>& Field::modulus() const { return impl_->modulus; }

FieldElem Field::zero() const { return FieldElem(*this, std::vector<std::int64_t>(impl_->m, 0)); }

FieldElem Field::one() const { return from_int(1); }

FieldElem Field::element(std::vector<std::int64_t> coords) const {
    if (static_cast<int>(coords.size()) > impl_->m)
        throw std::invalid_argument("too many coordinates for this field");
    coords.resize(impl_->m, 0);
    for (auto& c : coords) c = ((c % impl_->p) + impl_->p) % impl_->p;
    return FieldElem(*this, std::move(coords));
}

FieldElem Field::from_int(std::int64_t v) const {
    std::vector<std::int64_t> c(impl_->m, 0);
    c[0] = ((v % impl_->p) + impl_->p) % impl_->p;
    return FieldElem(*this, std::move(c));
}

FieldElem Field::basis_elem(int k) const {
    if (k < 0 || k >= impl_->m) throw std::invalid_argument("basis index out of range");
    std::vector<std::int64_t> c(impl_->m, 0);
    c[k] = 1;
    return FieldElem(*this, std::move(c));
}

FieldElem Field::elem_at(std::int64_t index) const {
    if (index < 0 || index >= impl_->q) throw std::invalid_argument("element index out of range");
    std::vector<std::int64_t> c(impl_->m, 0);
    for (int i = 0; i < impl_->m; ++i) {
        c[i] = index % impl_->p;
        index /= impl_->p;
    }
    return FieldElem(*this, std::move(c));
}

bool Field::operator==(const Field& o) const {
    if (impl_ == o.impl_) return true;
    if (!impl_ || !o.impl_) return false;
    return impl_->p == o.impl_->p && impl_->m == o.impl_->m && impl_->modulus == o.impl_->modulus;
}

namespace {

std::string fp_poly_to_string(const std::vector<std::int64_t>& coeffs) {
    std::string s;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0) continue;
        if (!s.empty()) s += "+";
        if (i == 0) {
            s += std::to_string(coeffs[i]);
        } else {
            if (coeffs[i] != 1) s += std::to_string(coeffs[i]) + "*";
            s += (i == 1) ? "x" : "x^" + std::to_string(i);
        }
    }
    return s.empty() ? "0" : s;
}

}  // namespace

std::string Field::to_string() const {
    return "GF(" + std::to_string(impl_->q) + "; modulus=" + fp_poly_to_string(impl_->modulus) +
           ")";
}

namespace {

void require_same_field(const FieldElem& a, const FieldElem& b) {
    if (!a.field().engaged() || !b.field().engaged())
        throw FieldMismatch("operation on a disengaged field element");
    if (a.field() != b.field()) throw FieldMismatch("elements belong to different fields");
}

}  // namespace

std::int64_t FieldElem::index() const {
    std::int64_t idx = 0;
    for (int i = static_cast<int>(c_.size()) - 1; i >= 0; --i) idx = idx * field_.p() + c_[i];
    return idx;
}

bool FieldElem::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](std::int64_t v) { return v == 0; });
}

bool FieldElem::is_one() const {
    if (c_.empty() || c_[0] != 1) return false;
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

FieldElem FieldElem::operator-() const {
    FieldElem r(*this);
    std::int64_t p = field_.p();
    for (auto& v : r.c_) v = (p - v) % p;
    return r;
}

FieldElem& FieldElem::operator+=(const FieldElem& rhs) {
    require_same_field(*this, rhs);
    std::int64_t p = field_.p();
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = (c_[i] + rhs.c_[i]) % p;
    return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& rhs) {
    require_same_field(*this, rhs);
    std::int64_t p = field_.p();
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = ((c_[i] - rhs.c_[i]) % p + p) % p;
    return *this;
}

FieldElem& FieldElem::operator*=(const FieldElem& rhs) {
    require_same_field(*this, rhs);
    std::int64_t p = field_.p();
    int m = field_.m();
    std::vector<std::int64_t> prod(2 * m - 1, 0);
    for (int i = 0; i < m; ++i) {
        if (c_[i] == 0) continue;
        for (int j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + c_[i] * rhs.c_[j]) % p;
    }
    const auto& mod = field_.modulus();
    for (int k = 2 * m - 2; k >= m; --k) {
        std::int64_t c = prod[k];
        if (c == 0) continue;
        prod[k] = 0;
        for (int i = 0; i < m; ++i) {
            prod[k - m + i] = ((prod[k - m + i] - c * mod[i]) % p + p) % p;
        }
    }
    prod.resize(m);
    c_ = std::move(prod);
    return *this;
}

FieldElem& FieldElem::operator/=(const FieldElem& rhs) { return *this *= rhs.inv(); }

FieldElem FieldElem::inv() const {
    if (is_zero()) throw DivisionByZero("inverse of zero field element");
    // Extended Euclid on the coordinate polynomial against the modulus.
    std::int64_t p = field_.p();
    std::vector<std::int64_t> r0 = field_.modulus();
    std::vector<std::int64_t> r1 = c_;
    trim_fp(r1);
    std::vector<std::int64_t> t0, t1{1};
    while (!r1.empty()) {
        // r0 = q*r1 + r2 via repeated leading-term elimination
        std::vector<std::int64_t> q;
        std::vector<std::int64_t> r2 = r0;
        int d1 = deg_fp(r1);
        std::int64_t lc_inv = mod_inv_int(r1[d1], p);
        int d2 = deg_fp(r2);
        if (d2 >= d1) q.assign(d2 - d1 + 1, 0);
        while (d2 >= d1) {
            std::int64_t c = (r2[d2] * lc_inv) % p;
            q[d2 - d1] = c;
            for (int i = 0; i <= d1; ++i)
                r2[i + d2 - d1] = ((r2[i + d2 - d1] - c * r1[i]) % p + p) % p;
            while (d2 >= 0 && r2[d2] == 0) --d2;
        }
        r2.resize(d2 + 1);
        // t2 = t0 - q*t1
        std::vector<std::int64_t> qt = mul_fp(q, t1, p);
        std::vector<std::int64_t> t2(std::max(t0.size(), qt.size()), 0);
        for (std::size_t i = 0; i < t0.size(); ++i) t2[i] = t0[i];
        for (std::size_t i = 0; i < qt.size(); ++i) t2[i] = ((t2[i] - qt[i]) % p + p) % p;
        trim_fp(t2);
        r0 = std::move(r1);
        r1 = std::move(r2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    // r0 = gcd (a nonzero constant since the modulus is irreducible)
    if (deg_fp(r0) != 0) throw ConsistencyFailure("field inverse: gcd not constant");
    std::int64_t scale = mod_inv_int(r0[0], p);
    std::vector<std::int64_t> out(field_.m(), 0);
    for (std::size_t i = 0; i < t0.size(); ++i) out[i] = (t0[i] * scale) % p;
    return FieldElem(field_, std::move(out));
}

FieldElem FieldElem::pow(std::int64_t k) const {
    FieldElem base(*this);
    if (k < 0) {
        base = base.inv();
        k = -k;
    }
    FieldElem res = field_.one();
    while (k > 0) {
        if (k & 1) res *= base;
        base *= base;
        k >>= 1;
    }
    return res;
}

bool FieldElem::operator==(const FieldElem& rhs) const {
    require_same_field(*this, rhs);
    return c_ == rhs.c_;
}

bool FieldElem::operator<(const FieldElem& rhs) const {
    require_same_field(*this, rhs);
    return std::lexicographical_compare(c_.begin(), c_.end(), rhs.c_.begin(), rhs.c_.end());
}

std::string FieldElem::to_string() const {
    if (field_.m() == 1) return std::to_string(c_[0]);
    std::string s = "(";
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i > 0) s += ",";
        s += std::to_string(c_[i]);
    }
    return s + ")";
}

FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
FieldElem operator*(FieldElem a, const FieldElem& b) { return a *= b; }
FieldElem operator/(FieldElem a, const FieldElem& b) { return a /= b; }

std::ostream& operator<<(std::ostream& os, const FieldElem& e) { return os << e.to_string(); }

std::int64_t mult_order(const FieldElem& a) {
    if (a.is_zero()) throw ZeroElement("multiplicative order of zero");
    std::int64_t group = a.field().q() - 1;
    for (std::int64_t d : divisors_int(group)) {
        if (a.pow(d).is_one()) return d;
    }
    throw ConsistencyFailure("mult_order: no divisor of q-1 works");
}

FieldElem ps_root(const FieldElem& alpha, int s) {
    if (alpha.is_zero()) throw ZeroElement("p^s-th root of zero");
    if (s < 1) throw std::invalid_argument("s must be >= 1");
    std::int64_t group = alpha.field().q() - 1;
    if (group == 1) return alpha;  // F_2: the only unit is 1
    std::int64_t ps_mod = mod_pow_int(alpha.field().p(), s, group);
    std::int64_t t = mod_inv_int(ps_mod, group);
    return alpha.pow(t);
}

}  // namespace ccodes
