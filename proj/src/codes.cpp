#include "ccodes/codes.hpp"

#include <algorithm>

#include "ccodes/intutil.hpp"

namespace ccodes {

std::vector<CodeSpec> enumerate_codes(const AmbientRing& ring) {
    const std::int64_t top = 2 * ring.ps();
    const std::int64_t r = ring.r();
    std::int64_t count = checked_pow_int(top + 1, r, std::int64_t{100000000},
                                         "code enumeration too large");
    std::vector<CodeSpec> out;
    out.reserve(count);
    std::vector<std::int64_t> exps(r, 0);
    while (true) {
        out.push_back(CodeSpec{ring, exps});
        std::int64_t j = r - 1;
        while (j >= 0 && exps[j] == top) {
            exps[j] = 0;
            --j;
        }
        if (j < 0) break;
        ++exps[j];
    }
    if (static_cast<std::int64_t>(out.size()) != count)
        throw ConsistencyFailure("enumerate_codes: count mismatch");
    return out;
}

namespace {

void validate(const CodeSpec& code) {
    if (!code.ring.engaged()) throw std::invalid_argument("code without a ring");
    if (static_cast<std::int64_t>(code.exponents.size()) != code.ring.r())
        throw LengthMismatch("exponent vector length must equal r");
    for (auto i : code.exponents)
        if (i < 0 || i > 2 * code.ring.ps())
            throw std::invalid_argument("exponent out of range [0, 2p^s]");
}

}  // namespace

std::int64_t log_cardinality(const CodeSpec& code) {
    validate(code);
    const auto& ring = code.ring;
    std::int64_t k = 0;
    for (std::int64_t j = 0; j < ring.r(); ++j)
        k += ring.factors()[j].d * ring.field().m() * (2 * ring.ps() - code.exponents[j]);
    return k;
}

RPoly generator(const CodeSpec& code) {
    validate(code);
    const auto& ring = code.ring;
    const Field& F = ring.field();
    RPoly acc = RPoly::zero(F);
    for (std::int64_t j = 0; j < ring.r(); ++j) {
        RPoly fij = RPoly::embed(pow(ring.factors()[j].f, code.exponents[j]));
        acc += ring.reduce(ring.factors()[j].eps * fij);
    }
    return ring.reduce(acc);
}

CodeSpec dual(const CodeSpec& code) {
    validate(code);
    std::vector<std::int64_t> dual_exps;
    dual_exps.reserve(code.exponents.size());
    for (auto i : code.exponents) dual_exps.push_back(2 * code.ring.ps() - i);
    return CodeSpec{dual_ambient(code.ring), std::move(dual_exps)};
}

WordOps::WordOps(Field field, std::int64_t length, RElem lambda)
    : field_(std::move(field)),
      length_(length),
      lambda_(std::move(lambda)),
      m_(field_.m()),
      p_(field_.p()),
      ncols_(2 * m_ * length_) {
    if (length_ < 1) throw std::invalid_argument("length must be >= 1");
    if (!lambda_.is_unit()) throw NonUnit("twist must be a unit");
    // mat_theta: column k holds coords(theta * theta^k).
    mat_theta_.assign(m_ * m_, 0);
    if (m_ > 1) {
        auto theta = field_.basis_elem(1);
        for (int k = 0; k < m_; ++k) {
            auto prod = theta * field_.basis_elem(k);
            for (int i = 0; i < m_; ++i)
                mat_theta_[i * m_ + k] = static_cast<fplin::Elt>(prod.coords()[i]);
        }
    } else {
        mat_theta_[0] = 1;
    }
    // mat_lambda: column j holds the (a,b) coordinates of lambda * basis_j,
    // basis_j = theta^j for j < m and u*theta^{j-m} otherwise.
    mat_lambda_.assign(4 * m_ * m_, 0);
    const int two_m = 2 * m_;
    for (int j = 0; j < two_m; ++j) {
        RElem basis = (j < m_) ? RElem(field_.basis_elem(j), field_.zero())
                               : RElem(field_.zero(), field_.basis_elem(j - m_));
        RElem prod = lambda_ * basis;
        for (int i = 0; i < m_; ++i) {
            mat_lambda_[i * two_m + j] = static_cast<fplin::Elt>(prod.a().coords()[i]);
            mat_lambda_[(m_ + i) * two_m + j] = static_cast<fplin::Elt>(prod.b().coords()[i]);
        }
    }
}

void WordOps::apply_block(const std::vector<fplin::Elt>& mat, int dim, const fplin::Elt* in,
                          fplin::Elt* out) const {
    for (int i = 0; i < dim; ++i) {
        std::uint64_t acc = 0;
        for (int j = 0; j < dim; ++j)
            acc += static_cast<std::uint64_t>(mat[i * dim + j]) * in[j];
        out[i] = static_cast<fplin::Elt>(acc % p_);
    }
}

fplin::Row WordOps::pack(const Word& w) const {
    if (static_cast<std::int64_t>(w.size()) != length_)
        throw LengthMismatch("word length must equal N");
    fplin::Row row(ncols_, 0);
    for (std::int64_t i = 0; i < length_; ++i) {
        if (w[i].field() != field_) throw FieldMismatch("word coordinate from a different field");
        for (int k = 0; k < m_; ++k) {
            row[i * 2 * m_ + k] = static_cast<fplin::Elt>(w[i].a().coords()[k]);
            row[i * 2 * m_ + m_ + k] = static_cast<fplin::Elt>(w[i].b().coords()[k]);
        }
    }
    return row;
}

Word WordOps::unpack(const fplin::Row& row) const {
    Word w;
    w.reserve(length_);
    for (std::int64_t i = 0; i < length_; ++i) {
        std::vector<std::int64_t> a(m_), b(m_);
        for (int k = 0; k < m_; ++k) {
            a[k] = row[i * 2 * m_ + k];
            b[k] = row[i * 2 * m_ + m_ + k];
        }
        w.emplace_back(field_.element(std::move(a)), field_.element(std::move(b)));
    }
    return w;
}

fplin::Row WordOps::from_rpoly(const RPoly& f) const {
    if (f.degree() >= length_)
        throw LengthMismatch("polynomial degree must be < N; reduce first");
    Word w(length_, RElem::zero(field_));
    for (std::int64_t i = 0; i <= f.degree(); ++i) w[i] = f.coeff(i);
    return pack(w);
}

RPoly WordOps::to_rpoly(const fplin::Row& row) const {
    return RPoly::from_coeffs(field_, unpack(row));
}

fplin::Row WordOps::shift(const fplin::Row& row) const {
    fplin::Row out(ncols_, 0);
    const int two_m = 2 * m_;
    apply_block(mat_lambda_, two_m, row.data() + (length_ - 1) * two_m, out.data());
    std::copy(row.begin(), row.end() - two_m, out.begin() + two_m);
    return out;
}

fplin::Row WordOps::times_u(const fplin::Row& row) const {
    fplin::Row out(ncols_, 0);
    const int two_m = 2 * m_;
    for (std::int64_t i = 0; i < length_; ++i) {
        for (int k = 0; k < m_; ++k) out[i * two_m + m_ + k] = row[i * two_m + k];
    }
    return out;
}

fplin::Row WordOps::times_theta(const fplin::Row& row) const {
    fplin::Row out(ncols_, 0);
    const int two_m = 2 * m_;
    for (std::int64_t i = 0; i < length_; ++i) {
        apply_block(mat_theta_, m_, row.data() + i * two_m, out.data() + i * two_m);
        apply_block(mat_theta_, m_, row.data() + i * two_m + m_, out.data() + i * two_m + m_);
    }
    return out;
}

fplin::Row WordOps::times_relem(const fplin::Row& row, const RElem& c) const {
    fplin::Row acc(ncols_, 0);
    fplin::Row cur = row;  // theta^k * row
    for (int k = 0; k < m_; ++k) {
        std::int64_t ca = c.a().coords()[k];
        std::int64_t cb = c.b().coords()[k];
        if (ca != 0) {
            for (std::int64_t j = 0; j < ncols_; ++j)
                acc[j] = static_cast<fplin::Elt>((acc[j] + ca * cur[j]) % p_);
        }
        if (cb != 0) {
            fplin::Row ucur = times_u(cur);
            for (std::int64_t j = 0; j < ncols_; ++j)
                acc[j] = static_cast<fplin::Elt>((acc[j] + cb * ucur[j]) % p_);
        }
        if (k + 1 < m_) cur = times_theta(cur);
    }
    return acc;
}

fplin::Basis WordOps::ideal_closure(const fplin::Row& gen) const {
    fplin::BasisBuilder builder(p_, ncols_);
    fplin::Row cur = gen;
    for (int k = 0; k < m_ && !builder.full(); ++k) {
        fplin::Row w = cur;
        for (std::int64_t t = 0; t < length_ && !builder.full(); ++t) {
            builder.insert(w);
            builder.insert(times_u(w));
            if (t + 1 < length_) w = shift(w);
        }
        if (k + 1 < m_) cur = times_theta(cur);
    }
    return std::move(builder).build();
}

fplin::Basis WordOps::ideal_closure(const RPoly& gen) const {
    return ideal_closure(from_rpoly(gen));
}

fplin::Basis WordOps::orthogonal_complement(const fplin::Basis& code_basis) const {
    // One 2m-row block of constraints per basis word y: column t is the
    // R-coordinate expansion of e_t . y.
    std::vector<fplin::Row> mat;
    mat.reserve(code_basis.rows.size() * 2 * m_);
    const int two_m = 2 * m_;
    for (const auto& yrow : code_basis.rows) {
        Word y = unpack(yrow);
        std::vector<fplin::Row> block(two_m, fplin::Row(ncols_, 0));
        for (std::int64_t i = 0; i < length_; ++i) {
            for (int w = 0; w < two_m; ++w) {
                RElem basis = (w < m_) ? RElem(field_.basis_elem(w), field_.zero())
                                       : RElem(field_.zero(), field_.basis_elem(w - m_));
                RElem prod = basis * y[i];
                for (int c = 0; c < m_; ++c) {
                    block[c][i * two_m + w] = static_cast<fplin::Elt>(prod.a().coords()[c]);
                    block[m_ + c][i * two_m + w] =
                        static_cast<fplin::Elt>(prod.b().coords()[c]);
                }
            }
        }
        for (auto& row : block) mat.push_back(std::move(row));
    }
    return fplin::nullspace(p_, ncols_, mat);
}

WordOps word_ops(const AmbientRing& ring) {
    return WordOps(ring.field(), ring.length(), ring.lambda());
}

fplin::Basis code_basis(const CodeSpec& code) {
    validate(code);
    return word_ops(code.ring).ideal_closure(generator(code));
}

CodewordSet members(const CodeSpec& code, std::int64_t limit) {
    validate(code);
    std::int64_t k = log_cardinality(code);
    if (!pow_within(code.ring.field().p(), k, limit))
        throw TooLarge("codeword set exceeds the limit");
    fplin::Basis basis = code_basis(code);
    if (basis.rank() != k)
        throw ConsistencyFailure("code rank does not match predicted cardinality");
    return CodewordSet{code.ring.field(), code.ring.length(),
                       fplin::span_enumerate(basis, limit)};
}

bool contains(const CodeSpec& code, const Word& word) {
    validate(code);
    WordOps ops = word_ops(code.ring);
    return code_basis(code).contains(ops.pack(word));
}

bool is_self_dual(const CodeSpec& code, std::int64_t cap) {
    validate(code);
    if (code.ring.irreducible_case()) return code.exponents[0] == code.ring.ps();
    const Field& F = code.ring.field();
    if (!pow_within(F.p(), 2 * F.m() * code.ring.length(), cap))
        throw TooLarge("ring too large for the brute-force self-duality check");
    WordOps ops = word_ops(code.ring);
    fplin::Basis basis = code_basis(code);
    return ops.orthogonal_complement(basis) == basis;
}

nlohmann::json code_record_json(const CodeSpec& code, std::int64_t cap) {
    nlohmann::json j;
    j["exponents"] = code.exponents;
    std::int64_t k = log_cardinality(code);
    j["log_cardinality"] = k;
    j["cardinality"] = pow_decimal(code.ring.field().p(), k);
    j["generator"] = rpoly_json(generator(code));
    std::vector<std::int64_t> dual_exps;
    for (auto i : code.exponents) dual_exps.push_back(2 * code.ring.ps() - i);
    j["dual_exponents"] = dual_exps;
    try {
        j["self_dual"] = is_self_dual(code, cap);
    } catch (const TooLarge&) {
        j["self_dual"] = "undecided(too large)";
    }
    return j;
}

}  // namespace ccodes
