// Command-line front end: classify (alpha + u*beta)-constacyclic codes of
// length n*p^s over F_{p^m} + u F_{p^m}, compute duals, and cross-check the
// classification against the exhaustive oracle.
//
// Exit codes: 0 ok, 1 verification failure, 2 bad input, 3 resource cap hit.

#include <algorithm>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ccodes/codes.hpp"
#include "ccodes/intutil.hpp"
#include "ccodes/oracle.hpp"

using namespace ccodes;
using nlohmann::json;

namespace {

struct RunConfig {
    std::int64_t p = 0;
    int m = 1;
    int s = 1;
    std::int64_t n = 0;
    std::string alpha_str;
    std::string beta_str;
    std::string modulus_str;
    std::string output = "table";
    std::int64_t cap = kDefaultOracleCap;
    std::uint64_t seed = kDefaultFactorSeed;
    std::string exponents_str;  // dual only
};

std::vector<std::int64_t> parse_int_list(const std::string& s, const char* what) {
    std::vector<std::int64_t> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stoll(item));
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string("cannot parse ") + what + ": '" + item + "'");
        }
    }
    if (out.empty()) throw std::invalid_argument(std::string(what) + " must be nonempty");
    return out;
}

Field make_field(const RunConfig& cfg) {
    if (cfg.modulus_str.empty()) return Field::make(cfg.p, cfg.m);
    return Field::make(cfg.p, cfg.m, parse_int_list(cfg.modulus_str, "modulus"));
}

AmbientRing make_ring(const RunConfig& cfg, Field* field_out = nullptr) {
    Field F = make_field(cfg);
    if (field_out) *field_out = F;
    FieldElem alpha = F.element(parse_int_list(cfg.alpha_str, "alpha"));
    FieldElem beta = F.element(parse_int_list(cfg.beta_str, "beta"));
    if (alpha.is_zero()) throw ZeroElement("violated precondition: alpha must be nonzero");
    if (beta.is_zero()) throw ZeroElement("violated precondition: beta must be nonzero");
    if (cfg.n % F.p() == 0)
        throw NotCoprime("violated precondition: gcd(n, p) = 1");
    return build_ambient(F, cfg.s, cfg.n, alpha, beta, cfg.seed);
}

json params_json(const AmbientRing& R) {
    json j;
    j["field"] = R.field().to_string();
    j["p"] = R.field().p();
    j["m"] = R.field().m();
    j["modulus"] = R.field().modulus();
    j["s"] = R.s();
    j["n"] = R.n();
    j["N"] = R.length();
    j["alpha"] = field_elem_json(R.alpha());
    j["beta"] = field_elem_json(R.beta());
    j["alpha0"] = field_elem_json(R.alpha0());
    return j;
}

std::string lambda_str(const AmbientRing& R) { return R.lambda().to_string(); }

void print_factor_table(const AmbientRing& R) {
    std::cout << "field:  " << R.field().to_string() << "\n";
    std::cout << "ring:   R[x]/<x^" << R.length() << " - (" << lambda_str(R) << ")>,  R = "
              << "F_" << R.field().q() << " + u*F_" << R.field().q() << ", u^2 = 0\n";
    std::cout << "alpha0: " << R.alpha0().to_string() << "  (alpha0^(p^s) = alpha)\n";
    std::cout << "x^" << R.n() << " - alpha0 factors into r = " << R.r()
              << (R.r() == 1 ? " irreducible factor" : " irreducible factors")
              << (R.irreducible_case() ? "  [irreducible case: chain ring]" : "") << "\n";
    for (std::int64_t j = 0; j < R.r(); ++j) {
        const auto& fd = R.factors()[j];
        std::cout << "  f_" << (j + 1) << ": " << fd.f.to_string() << "   (degree " << fd.d
                  << ")\n";
        std::cout << "  g_" << (j + 1) << ": " << fd.g.to_string() << "\n";
        std::cout << "  h_" << (j + 1) << ": " << fd.h.to_string() << "\n";
    }
}

int cmd_factor(const RunConfig& cfg) {
    AmbientRing R = make_ring(cfg);
    if (cfg.output == "json") {
        json j = R.to_json();
        j["command"] = "factor";
        std::cout << j.dump(2) << "\n";
    } else {
        print_factor_table(R);
    }
    return 0;
}

int cmd_codes(const RunConfig& cfg) {
    AmbientRing R = make_ring(cfg);
    auto codes = enumerate_codes(R);
    if (cfg.output == "json") {
        json j;
        j["command"] = "codes";
        j["params"] = params_json(R);
        j["irreducible_case"] = R.irreducible_case();
        j["code_count"] = static_cast<std::int64_t>(codes.size());
        json rows = json::array();
        for (const auto& c : codes) rows.push_back(code_record_json(c, cfg.cap));
        j["codes"] = std::move(rows);
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    if (cfg.output == "csv") {
        std::cout << "exponents,log_cardinality,generator,dual_exponents,self_dual\n";
        for (const auto& c : codes) {
            json rec = code_record_json(c, cfg.cap);
            auto joined = [](const json& arr) {
                std::string s;
                for (const auto& v : arr) {
                    if (!s.empty()) s += ",";
                    s += std::to_string(v.get<std::int64_t>());
                }
                return s;
            };
            std::string sd = rec["self_dual"].is_boolean()
                                 ? (rec["self_dual"].get<bool>() ? "true" : "false")
                                 : rec["self_dual"].get<std::string>();
            std::cout << '"' << joined(rec["exponents"]) << '"' << ','
                      << rec["log_cardinality"].get<std::int64_t>() << ','
                      << '"' << generator(c).to_string() << '"' << ','
                      << '"' << joined(rec["dual_exponents"]) << '"' << ',' << sd << "\n";
        }
        return 0;
    }
    std::cout << "field: " << R.field().to_string() << "   lambda: " << lambda_str(R)
              << "   N = " << R.length() << "\n";
    std::cout << codes.size() << " codes ((2p^s+1)^r with p^s = " << R.ps()
              << ", r = " << R.r() << ")\n\n";
    std::cout << "exponents | log|C| (p^k) | |C| | dual exps | self-dual | generator\n";
    for (const auto& c : codes) {
        json rec = code_record_json(c, cfg.cap);
        std::string exps, dexps;
        for (auto i : c.exponents) exps += (exps.empty() ? "" : ",") + std::to_string(i);
        for (const auto& v : rec["dual_exponents"])
            dexps += (dexps.empty() ? "" : ",") + std::to_string(v.get<std::int64_t>());
        std::string sd = rec["self_dual"].is_boolean()
                             ? (rec["self_dual"].get<bool>() ? "yes" : "no")
                             : rec["self_dual"].get<std::string>();
        std::cout << "(" << exps << ") | " << rec["log_cardinality"].get<std::int64_t>()
                  << " | " << rec["cardinality"].get<std::string>() << " | (" << dexps
                  << ") | " << sd << " | " << generator(c).to_string() << "\n";
    }
    return 0;
}

int cmd_dual(const RunConfig& cfg) {
    AmbientRing R = make_ring(cfg);
    if (cfg.exponents_str.empty())
        throw std::invalid_argument("dual requires --exponents i_1,...,i_r");
    CodeSpec code{R, parse_int_list(cfg.exponents_str, "exponents")};
    CodeSpec d = dual(code);
    if (cfg.output == "json") {
        json j;
        j["command"] = "dual";
        j["params"] = params_json(R);
        j["code"] = code_record_json(code, cfg.cap);
        json dj;
        dj["params"] = params_json(d.ring);
        dj["lambda"] = rpoly_json(RPoly::monomial(d.ring.field(), 0, d.ring.lambda()));
        dj["code"] = code_record_json(d, cfg.cap);
        j["dual"] = std::move(dj);
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "code      (" << lambda_str(R) << ")-constacyclic, exponents "
              << json(code.exponents).dump() << ", log|C| = " << log_cardinality(code) << "\n";
    std::cout << "          generator " << generator(code).to_string() << "\n";
    std::cout << "dual code (" << lambda_str(d.ring) << ")-constacyclic, exponents "
              << json(d.exponents).dump() << ", log|C| = " << log_cardinality(d) << "\n";
    std::cout << "          generator " << generator(d).to_string() << "\n";
    return 0;
}

int cmd_verify(const RunConfig& cfg) {
    AmbientRing R = make_ring(cfg);
    VerifyReport report = verify_ring(R, cfg.cap);
    if (cfg.output == "json") {
        json j = report.to_json();
        j["command"] = "verify";
        j["params"] = params_json(R);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "ring " << R.field().to_string() << ", N = " << R.length()
                  << ", lambda = " << lambda_str(R) << "\n";
        for (const auto& c : report.checks)
            std::cout << (c.pass ? "PASS" : "FAIL") << "  " << c.name << "  (" << c.detail
                      << ", " << c.ms << " ms)\n";
        std::cout << (report.ok ? "all checks passed" : "verification FAILED") << "\n";
    }
    return report.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Constacyclic codes of length n*p^s over F_{p^m} + u F_{p^m} (u^2 = 0)"};
    app.require_subcommand(1);

    RunConfig cfg;
    auto add_common = [&cfg](CLI::App* sub) {
        sub->add_option("-p", cfg.p, "prime characteristic")->required();
        sub->add_option("-m", cfg.m, "extension degree (default 1)");
        sub->add_option("-s", cfg.s, "power of p in the length (default 1)");
        sub->add_option("-n", cfg.n, "coprime part of the length")->required();
        sub->add_option("--alpha", cfg.alpha_str,
                        "field part of the twist, comma-separated F_p coordinates")
            ->required();
        sub->add_option("--beta", cfg.beta_str,
                        "u part of the twist, comma-separated F_p coordinates")
            ->required();
        sub->add_option("--modulus", cfg.modulus_str,
                        "field modulus, comma-separated F_p coefficients, constant first");
        sub->add_option("--output", cfg.output, "table|json|csv")
            ->check(CLI::IsMember({"table", "json", "csv"}));
        sub->add_option("--cap", cfg.cap, "element cap for exhaustive computations");
        sub->add_option("--seed", cfg.seed, "factorization seed");
    };

    auto* factor = app.add_subcommand("factor", "factor x^{np^s} - alpha - u*beta");
    add_common(factor);
    auto* codes = app.add_subcommand("codes", "classify all constacyclic codes");
    add_common(codes);
    auto* dual_cmd = app.add_subcommand("dual", "dual of one code");
    add_common(dual_cmd);
    dual_cmd->add_option("--exponents", cfg.exponents_str, "exponent vector i_1,...,i_r");
    auto* verify = app.add_subcommand("verify", "cross-check against the exhaustive oracle");
    add_common(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (factor->parsed()) return cmd_factor(cfg);
        if (codes->parsed()) return cmd_codes(cfg);
        if (dual_cmd->parsed()) return cmd_dual(cfg);
        if (verify->parsed()) return cmd_verify(cfg);
    } catch (const TooLarge& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
