#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "ccodes/ambient.hpp"
#include "ccodes/fplin.hpp"

namespace ccodes {

/// One constacyclic code, named by its exponent vector (i_1, ..., i_r) with
/// 0 <= i_j <= 2p^s: the ideal  sum_j eps_j * <f_j^{i_j}>  of the ambient ring.
struct CodeSpec {
    AmbientRing ring;
    std::vector<std::int64_t> exponents;

    bool operator==(const CodeSpec& o) const {
        return ring == o.ring && exponents == o.exponents;
    }
};

/// All (2p^s+1)^r codes, exponent vectors in lexicographic order (first index
/// most significant). The first entry is the full ring, the last the zero code.
std::vector<CodeSpec> enumerate_codes(const AmbientRing& ring);

/// k with |C| = p^k: sum_j d_j * m * (2p^s - i_j).
std::int64_t log_cardinality(const CodeSpec& code);

/// Single generator sum_j eps_j * f_j^{i_j}, reduced in the ambient ring.
RPoly generator(const CodeSpec& code);

/// The dual code: exponents 2p^s - i_j over the dual ambient ring,
/// index-aligned through the reciprocal factor pairing.
CodeSpec dual(const CodeSpec& code);

/// A word of R^N.
using Word = std::vector<RElem>;

/// An explicit codeword set (materialized only at desk scale). Words are kept
/// as packed F_p coordinate rows, sorted, so equality is plain vector equality.
struct CodewordSet {
    Field field;
    std::int64_t length = 0;  // N
    std::vector<fplin::Row> words;

    std::int64_t size() const { return static_cast<std::int64_t>(words.size()); }
    bool operator==(const CodewordSet& o) const {
        return field == o.field && length == o.length && words == o.words;
    }
};

/// Packed-coordinate view of R^N: each R coordinate a + u*b becomes 2m F_p
/// entries [coords(a), coords(b)]. Provides the constacyclic shift, the u- and
/// theta-multiplications, ideal closures, and orthogonal complements.
class WordOps {
  public:
    WordOps(Field field, std::int64_t length, RElem lambda);

    const Field& field() const { return field_; }
    std::int64_t length() const { return length_; }
    std::int64_t ncols() const { return ncols_; }
    const RElem& lambda() const { return lambda_; }

    fplin::Row pack(const Word& w) const;
    Word unpack(const fplin::Row& row) const;
    /// Coefficient word of a polynomial of degree < N.
    fplin::Row from_rpoly(const RPoly& f) const;
    RPoly to_rpoly(const fplin::Row& row) const;

    /// tau_lambda(x_0, ..., x_{N-1}) = (lambda*x_{N-1}, x_0, ..., x_{N-2}).
    fplin::Row shift(const fplin::Row& row) const;
    fplin::Row times_u(const fplin::Row& row) const;
    fplin::Row times_theta(const fplin::Row& row) const;  // power-basis generator
    fplin::Row times_relem(const fplin::Row& row, const RElem& c) const;

    /// F_p basis of the ideal generated by gen: the span of
    /// { theta^k x^t gen, theta^k x^t u gen : k < m, t < N }.
    fplin::Basis ideal_closure(const fplin::Row& gen) const;
    fplin::Basis ideal_closure(const RPoly& gen) const;

    /// Basis of { x in R^N : x . y = 0 for all y in the given subspace },
    /// via the F_p linear system of the 2m-coordinate expansion. Independent
    /// of any structural dual formula.
    fplin::Basis orthogonal_complement(const fplin::Basis& code_basis) const;

  private:
    void apply_block(const std::vector<fplin::Elt>& mat, int dim, const fplin::Elt* in,
                     fplin::Elt* out) const;
    Field field_;
    std::int64_t length_;
    RElem lambda_;
    int m_;
    std::int64_t p_;
    std::int64_t ncols_;
    std::vector<fplin::Elt> mat_lambda_;  // 2m x 2m, multiplication by lambda
    std::vector<fplin::Elt> mat_theta_;   // m x m, multiplication by theta
};

WordOps word_ops(const AmbientRing& ring);

/// F_p basis of the code's word set.
fplin::Basis code_basis(const CodeSpec& code);

/// Materialize the codeword set; requires p^{log_cardinality} <= limit.
CodewordSet members(const CodeSpec& code, std::int64_t limit);

/// Membership by reduction against the code's basis.
bool contains(const CodeSpec& code, const Word& word);

/// Irreducible case: closed form i = p^s. Reducible case: decided by set
/// equality between the code and its brute-force orthogonal complement;
/// requires p^{2mN} <= cap.
bool is_self_dual(const CodeSpec& code, std::int64_t cap = 1000000);

/// JSON record of one code as exported by the CLI.
nlohmann::json code_record_json(const CodeSpec& code, std::int64_t cap);

}  // namespace ccodes
