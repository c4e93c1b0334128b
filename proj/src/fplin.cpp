#include "ccodes/fplin.hpp"

#include <algorithm>

#include "ccodes/intutil.hpp"

namespace ccodes::fplin {

namespace {

// w -= c * row (mod p), starting at column `from`.
void axpy(Row& w, std::int64_t c, const Row& row, std::int64_t p, std::int64_t from) {
    for (std::size_t j = from; j < w.size(); ++j) {
        std::int64_t v = (static_cast<std::int64_t>(w[j]) - c * row[j]) % p;
        if (v < 0) v += p;
        w[j] = static_cast<Elt>(v);
    }
}

int first_nonzero(const Row& w) {
    for (std::size_t j = 0; j < w.size(); ++j)
        if (w[j] != 0) return static_cast<int>(j);
    return -1;
}

}  // namespace

bool Basis::reduce(Row& w) const {
    for (std::size_t i = 0; i < rows.size(); ++i) {
        int pc = pivots[i];
        if (w[pc] != 0) axpy(w, w[pc], rows[i], p, pc);
    }
    return first_nonzero(w) < 0;
}

bool Basis::contains(Row w) const { return reduce(w); }

std::string Basis::key() const {
    std::string s;
    s.reserve(2 * rows.size() * ncols + 16);
    s += std::to_string(p) + ":" + std::to_string(ncols) + ":";
    for (const auto& r : rows) {
        for (auto v : r) {
            s += static_cast<char>(v & 0xff);
            s += static_cast<char>((v >> 8) & 0xff);
        }
    }
    return s;
}

BasisBuilder::BasisBuilder(std::int64_t p, std::int64_t ncols) : p_(p), ncols_(ncols) {}

bool BasisBuilder::insert(Row w) {
    if (static_cast<std::int64_t>(w.size()) != ncols_)
        throw LengthMismatch("row has the wrong number of columns");
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        int pc = pivots_[i];
        if (w[pc] != 0) axpy(w, w[pc], rows_[i], p_, pc);
    }
    int pc = first_nonzero(w);
    if (pc < 0) return false;
    std::int64_t inv = mod_inv_int(w[pc], p_);
    for (std::size_t j = pc; j < w.size(); ++j)
        w[j] = static_cast<Elt>((w[j] * inv) % p_);
    rows_.push_back(std::move(w));
    pivots_.push_back(pc);
    return true;
}

Basis BasisBuilder::build() && {
    // Sort by pivot column, then clear above every pivot.
    std::vector<std::size_t> order(rows_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return pivots_[a] < pivots_[b]; });
    Basis out;
    out.p = p_;
    out.ncols = ncols_;
    for (auto i : order) {
        out.rows.push_back(std::move(rows_[i]));
        out.pivots.push_back(pivots_[i]);
    }
    for (std::size_t i = out.rows.size(); i-- > 0;) {
        for (std::size_t k = 0; k < i; ++k) {
            Elt c = out.rows[k][out.pivots[i]];
            if (c != 0) axpy(out.rows[k], c, out.rows[i], p_, out.pivots[i]);
        }
    }
    return out;
}

Basis rref(std::int64_t p, std::int64_t ncols, const std::vector<Row>& rows) {
    BasisBuilder b(p, ncols);
    for (const auto& r : rows) b.insert(r);
    return std::move(b).build();
}

Basis nullspace(std::int64_t p, std::int64_t ncols, const std::vector<Row>& mat) {
    Basis m = rref(p, ncols, mat);
    std::vector<bool> is_pivot(ncols, false);
    for (int pc : m.pivots) is_pivot[pc] = true;
    std::vector<Row> gens;
    for (std::int64_t j = 0; j < ncols; ++j) {
        if (is_pivot[j]) continue;
        Row x(ncols, 0);
        x[j] = 1;
        for (std::size_t i = 0; i < m.rows.size(); ++i) {
            std::int64_t v = (p - m.rows[i][j] % p) % p;
            x[m.pivots[i]] = static_cast<Elt>(v);
        }
        gens.push_back(std::move(x));
    }
    return rref(p, ncols, gens);
}

std::vector<Row> span_enumerate(const Basis& basis, std::int64_t limit) {
    std::int64_t count = 1;
    for (std::int64_t i = 0; i < basis.rank(); ++i) {
        if (count > limit / basis.p) throw TooLarge("span too large to materialize");
        count *= basis.p;
    }
    if (count > limit) throw TooLarge("span too large to materialize");
    std::vector<Row> out;
    out.reserve(count);
    Row cur(basis.ncols, 0);
    std::vector<std::int64_t> digits(basis.rank(), 0);
    out.push_back(cur);
    for (std::int64_t n = 1; n < count; ++n) {
        // Odometer over coefficients; update cur incrementally.
        for (std::size_t i = 0; i < digits.size(); ++i) {
            for (std::size_t j = 0; j < cur.size(); ++j) {
                std::int64_t v = cur[j] + basis.rows[i][j];
                cur[j] = static_cast<Elt>(v >= basis.p ? v - basis.p : v);
            }
            digits[i] += 1;
            if (digits[i] < basis.p) break;
            // carried: cur already wrapped around for this digit (p * row = 0)
            digits[i] = 0;
        }
        out.push_back(cur);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace ccodes::fplin
