#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ccodes/errors.hpp"

namespace ccodes::fplin {

using Elt = std::uint32_t;
using Row = std::vector<Elt>;  // entries in [0, p)

/// Canonical reduced row echelon basis of an F_p subspace: pivot columns
/// strictly increasing, pivots 1, pivot columns cleared. Two subspaces are
/// equal iff their Basis rows are equal.
struct Basis {
    std::int64_t p = 0;
    std::int64_t ncols = 0;
    std::vector<Row> rows;    // no zero rows
    std::vector<int> pivots;  // pivot column of each row

    std::int64_t rank() const { return static_cast<std::int64_t>(rows.size()); }
    /// Reduce w against the basis in place; returns true when w ends up zero.
    bool reduce(Row& w) const;
    bool contains(Row w) const;
    /// Order-independent identity of the spanned subspace.
    std::string key() const;
    bool operator==(const Basis& o) const {
        return p == o.p && ncols == o.ncols && rows == o.rows;
    }
};

/// Incremental Gaussian elimination; rows may be inserted in any order.
class BasisBuilder {
  public:
    BasisBuilder(std::int64_t p, std::int64_t ncols);
    /// Returns true if the row enlarged the span.
    bool insert(Row w);
    bool full() const { return static_cast<std::int64_t>(rows_.size()) == ncols_; }
    /// Finish and return the canonical basis (sorts rows, clears above pivots).
    Basis build() &&;

  private:
    std::int64_t p_, ncols_;
    std::vector<Row> rows_;     // echelon rows, pivot normalized to 1
    std::vector<int> pivots_;   // parallel to rows_, unsorted
};

Basis rref(std::int64_t p, std::int64_t ncols, const std::vector<Row>& rows);

/// Basis of { x : M x = 0 } for the matrix with the given rows.
Basis nullspace(std::int64_t p, std::int64_t ncols, const std::vector<Row>& mat);

/// All p^rank vectors of the span, lexicographically sorted. Throws TooLarge
/// when the span exceeds `limit` vectors.
std::vector<Row> span_enumerate(const Basis& basis, std::int64_t limit);

}  // namespace ccodes::fplin
