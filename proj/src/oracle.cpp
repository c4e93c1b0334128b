#include "ccodes/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <unordered_map>
#include <unordered_set>

#include "ccodes/intutil.hpp"

namespace ccodes {

TinyRing::TinyRing(Field field, std::int64_t length, RElem lambda, std::int64_t cap)
    : ops_(std::move(field), length, std::move(lambda)) {
    auto sz = pow_within(ops_.field().p(), ops_.ncols(), cap);
    if (!sz) throw TooLarge("ring exceeds the oracle cap");
    size_ = *sz;
}

fplin::Row TinyRing::element_row(std::int64_t idx) const {
    if (idx < 0 || idx >= size_) throw std::invalid_argument("element index out of range");
    fplin::Row row(ops_.ncols(), 0);
    const std::int64_t p = ops_.field().p();
    for (std::int64_t j = 0; j < ops_.ncols(); ++j) {
        row[j] = static_cast<fplin::Elt>(idx % p);
        idx /= p;
    }
    return row;
}

RPoly TinyRing::element(std::int64_t idx) const { return ops_.to_rpoly(element_row(idx)); }

std::vector<IdealDesc> enumerate_ideals(const TinyRing& ring) {
    std::unordered_set<std::string> seen;
    std::vector<IdealDesc> out;
    const std::int64_t p = ring.field().p();
    const std::int64_t ncols = ring.ops().ncols();
    fplin::Row row(ncols, 0);
    for (std::int64_t idx = 0; idx < ring.size(); ++idx) {
        // Base-p odometer over the coordinates; cheaper than re-decoding idx.
        if (idx > 0) {
            for (std::int64_t j = 0; j < ncols; ++j) {
                if (++row[j] < p) break;
                row[j] = 0;
            }
        }
        auto basis = ring.ops().ideal_closure(row);
        if (seen.insert(basis.key()).second) {
            IdealDesc d;
            d.log_size = basis.rank();
            d.basis = std::move(basis);
            out.push_back(std::move(d));
        }
    }
    std::sort(out.begin(), out.end(), [](const IdealDesc& a, const IdealDesc& b) {
        if (a.log_size != b.log_size) return a.log_size < b.log_size;
        return a.basis.key() < b.basis.key();
    });
    return out;
}

CodewordSet brute_dual(const CodewordSet& words, std::int64_t cap) {
    if (!words.field.engaged()) throw std::invalid_argument("codeword set without a field");
    const Field& F = words.field;
    // The complement is lambda-free linear algebra; any unit twist works here.
    WordOps ops(F, words.length, RElem::one(F));
    fplin::Basis basis = fplin::rref(F.p(), ops.ncols(), words.words);
    fplin::Basis comp = ops.orthogonal_complement(basis);
    return CodewordSet{F, words.length, fplin::span_enumerate(comp, cap)};
}

nlohmann::json VerifyReport::to_json() const {
    nlohmann::json j;
    j["ok"] = ok;
    j["ideal_count"] = ideal_count;
    j["expected_count"] = expected_count;
    nlohmann::json cs = nlohmann::json::array();
    for (const auto& c : checks) {
        nlohmann::json cj;
        cj["name"] = c.name;
        cj["pass"] = c.pass;
        cj["detail"] = c.detail;
        cj["ms"] = c.ms;
        cs.push_back(std::move(cj));
    }
    j["checks"] = std::move(cs);
    return j;
}

namespace {

class Timer {
  public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    std::int64_t ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

  private:
    std::chrono::steady_clock::time_point start_;
};

}  // namespace

VerifyReport verify_ring(const AmbientRing& ring, std::int64_t cap) {
    VerifyReport report;
    const Field& F = ring.field();
    TinyRing tiny(F, ring.length(), ring.lambda(), cap);

    Timer t_ideals;
    auto ideals = enumerate_ideals(tiny);
    std::int64_t ideals_ms = t_ideals.ms();
    report.ideal_count = static_cast<std::int64_t>(ideals.size());
    report.expected_count =
        checked_pow_int(2 * ring.ps() + 1, ring.r(), std::int64_t{1} << 40, "count overflow");

    auto add = [&report](std::string name, bool pass, std::string detail, std::int64_t ms) {
        report.checks.push_back({std::move(name), pass, std::move(detail), ms});
    };

    add("ideal_count", report.ideal_count == report.expected_count,
        std::to_string(report.ideal_count) + " ideals, expected " +
            std::to_string(report.expected_count),
        ideals_ms);

    // Classified codes and their bases, plus the dual ring built once.
    Timer t_codes;
    auto codes = enumerate_codes(ring);
    AmbientRing dual_ring = dual_ambient(ring);
    WordOps ops = word_ops(ring);
    WordOps dual_ops = word_ops(dual_ring);
    std::vector<fplin::Basis> bases;
    bases.reserve(codes.size());
    for (const auto& c : codes) bases.push_back(ops.ideal_closure(generator(c)));

    {
        std::unordered_map<std::string, std::int64_t> ideal_keys;
        for (std::int64_t i = 0; i < report.ideal_count; ++i)
            ideal_keys.emplace(ideals[i].basis.key(), i);
        std::unordered_set<std::string> code_keys;
        bool all_found = true;
        for (const auto& b : bases) {
            auto key = b.key();
            code_keys.insert(key);
            if (ideal_keys.find(key) == ideal_keys.end()) all_found = false;
        }
        bool distinct = code_keys.size() == codes.size();
        bool same_sets = all_found && distinct &&
                         static_cast<std::int64_t>(code_keys.size()) == report.ideal_count;
        add("codes_equal_ideals", same_sets,
            std::to_string(code_keys.size()) + " distinct code word-sets vs " +
                std::to_string(report.ideal_count) + " ideals",
            t_codes.ms());
    }

    {
        Timer t;
        bool all = true;
        std::string bad;
        for (std::size_t i = 0; i < codes.size(); ++i) {
            if (bases[i].rank() != log_cardinality(codes[i])) {
                all = false;
                bad = "exponents " + nlohmann::json(codes[i].exponents).dump();
                break;
            }
        }
        add("cardinalities", all, all ? "all match p^k" : "mismatch at " + bad, t.ms());
    }

    {
        Timer t;
        bool all = true;
        std::string bad;
        for (std::size_t i = 0; i < codes.size(); ++i) {
            auto comp = ops.orthogonal_complement(bases[i]);
            CodeSpec dual_code{dual_ring, {}};
            for (auto e : codes[i].exponents)
                dual_code.exponents.push_back(2 * ring.ps() - e);
            auto dual_basis = dual_ops.ideal_closure(generator(dual_code));
            if (!(comp == dual_basis)) {
                all = false;
                bad = "exponents " + nlohmann::json(codes[i].exponents).dump();
                break;
            }
        }
        add("duals_vs_brute_force", all, all ? "all duals match the complement" : bad, t.ms());
    }

    {
        Timer t;
        bool all = true;
        const std::int64_t total = 2 * F.m() * ring.length();
        for (std::size_t i = 0; i < codes.size() && all; ++i) {
            auto comp = ops.orthogonal_complement(bases[i]);
            all = bases[i].rank() + comp.rank() == total;
        }
        add("size_product", all, "log|C| + log|C_dual| = " + std::to_string(total), t.ms());
    }

    if (ring.irreducible_case()) {
        Timer t;
        bool chain = true;
        for (std::size_t i = 0; i + 1 < codes.size() && chain; ++i) {
            if (bases[i + 1].rank() >= bases[i].rank()) chain = false;
            for (const auto& row : bases[i + 1].rows)
                if (!bases[i].contains(row)) chain = false;
        }
        add("strict_chain", chain, "ideals totally ordered by inclusion", t.ms());
    }

    report.ok = std::all_of(report.checks.begin(), report.checks.end(),
                            [](const CheckResult& c) { return c.pass; });
    return report;
}

}  // namespace ccodes
