#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "ccodes/codes.hpp"

namespace ccodes {

inline constexpr std::int64_t kDefaultOracleCap = 1000000;

/// Exhaustive view of R[x]/<x^N - lambda>: p^{2mN} elements, addressed by
/// index. Deliberately naive; exists to validate the structural claims.
class TinyRing {
  public:
    TinyRing(Field field, std::int64_t length, RElem lambda,
             std::int64_t cap = kDefaultOracleCap);

    const Field& field() const { return ops_.field(); }
    std::int64_t length() const { return ops_.length(); }
    const RElem& lambda() const { return ops_.lambda(); }
    std::int64_t size() const { return size_; }  // p^{2mN}
    const WordOps& ops() const { return ops_; }

    /// Element number idx as a packed coordinate row (base-p digits).
    fplin::Row element_row(std::int64_t idx) const;
    RPoly element(std::int64_t idx) const;

  private:
    WordOps ops_;
    std::int64_t size_;
};

/// A principal ideal <g>, canonically described by the RREF basis of its
/// F_p span; log_size is the rank (|ideal| = p^{log_size}).
struct IdealDesc {
    fplin::Basis basis;
    std::int64_t log_size = 0;
};

/// All distinct ideals <g> over every ring element g, deduplicated by
/// canonical basis and sorted by (log_size, key). Every ideal of the ambient
/// rings classified here is principal (they are finite direct sums of chain
/// rings), so this enumeration is exhaustive; the count check in verify_ring
/// guards that assumption.
std::vector<IdealDesc> enumerate_ideals(const TinyRing& ring);

/// All vectors of R^N orthogonal to every given word (Euclidean inner product
/// over R), materialized. Independent of any structural dual formula.
CodewordSet brute_dual(const CodewordSet& words, std::int64_t cap = kDefaultOracleCap);

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
    std::int64_t ms = 0;
};

struct VerifyReport {
    bool ok = false;
    std::int64_t ideal_count = 0;
    std::int64_t expected_count = 0;
    std::vector<CheckResult> checks;
    nlohmann::json to_json() const;
};

/// Cross-check the classification against the exhaustive oracle:
///  (a) ideal count equals (2p^s+1)^r;
///  (b) the enumerated ideals are exactly the enumerated codes' word sets;
///  (c) every predicted cardinality matches;
///  (d) every dual code equals the brute-force orthogonal complement;
///  (e) log|C| + log|C_dual| = 2mN for every code;
///  (f) in the irreducible case the ideals form a strict chain.
VerifyReport verify_ring(const AmbientRing& ring, std::int64_t cap = kDefaultOracleCap);

}  // namespace ccodes
