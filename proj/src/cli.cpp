#include "trisim/cli.hpp"

#include "trisim/birkhoff.hpp"
#include "trisim/combinatorics.hpp"
#include "trisim/family.hpp"
#include "trisim/oracle.hpp"
#include "trisim/serialize.hpp"
#include "trisim/triangulator.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

namespace trisim {

namespace {

// Usage or input problem; maps to kExitUsage.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

void diagnose(std::ostream& err, const std::string& kind, const std::string& message) {
    Json d;
    d["error"] = kind;
    d["message"] = message;
    err << d.dump() << "\n";
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw InputError("malformed JSON in " + path + ": " + e.what());
    }
}

int cmd_charpoly(long n, const std::string& form, std::ostream& out) {
    if (n < 2) throw InputError("charpoly needs --n >= 2");
    if (form == "product") {
        out << factors_to_json(nicer_product(n)).dump() << "\n";
    } else if (form == "expanded") {
        out << poly_to_json(expand_product(nicer_product(n))).dump() << "\n";
    } else {
        out << poly_to_json(conjecture_formula(n)).dump() << "\n";
    }
    return kExitPass;
}

Json verify_one(long n, bool& ok) {
    ConjectureReport report = verify_conjecture(n);
    Json line = report_to_json(report);
    ok = report.pass;
    Json tri;
    try {
        const BidiagonalResult r = triangularize_Ctilde(n);
        tri["status"] = "pass";
        tri["diag"] = Json::array();
        for (const auto& d : r.diag) tri["diag"].push_back(d.get_str());
        tri["subdiag"] = Json::array();
        for (const auto& s : r.subdiag) tri["subdiag"].push_back(s.get_str());
    } catch (const StructureMismatch& e) {
        ok = false;
        tri["status"] = "fail";
        tri["mismatch"] = mismatch_to_json(e.mismatch);
    }
    line["triangular"] = std::move(tri);
    return line;
}

int cmd_verify(long n_max, std::ostream& out, std::ostream& err) {
    if (n_max < 2) throw InputError("verify needs --n-max >= 2");
    const std::size_t count = static_cast<std::size_t>(n_max - 1);
    std::vector<std::string> lines(count);
    std::vector<char> passed(count, 0);
    std::atomic<std::size_t> next{0};

    auto worker = [&] {
        for (std::size_t idx = next++; idx < count; idx = next++) {
            bool ok = false;
            lines[idx] = verify_one(static_cast<long>(idx) + 2, ok).dump();
            passed[idx] = ok ? 1 : 0;
        }
    };
    const std::size_t threads =
        std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, std::min<std::size_t>(count, 16));
    std::vector<std::thread> pool;
    for (std::size_t i = 1; i < threads; ++i) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    std::size_t failures = 0;
    for (std::size_t idx = 0; idx < count; ++idx) {
        out << lines[idx] << "\n";
        if (!passed[idx]) {
            ++failures;
            diagnose(err, "check_failed", "verification failed at n = " + std::to_string(idx + 2));
        }
    }
    err << "verify: n = 2.." << n_max << ", " << (count - failures) << "/" << count << " passed\n";
    return failures == 0 ? kExitPass : kExitCheckFailed;
}

int cmd_conjugate(const std::string& path, std::ostream& out) {
    const AnyMatrix any = matrix_from_json(read_json_file(path));
    const auto* m = std::get_if<RatMatrix>(&any);
    if (m == nullptr) throw InputError("conjugate expects an int or rat matrix");
    const RatMatrix conj = conjugate_by_U(*m);
    bool bidiagonal = true;
    for (std::size_t i = 1; i <= conj.size(); ++i)
        for (std::size_t j = 1; j <= conj.size(); ++j)
            if ((j > i || i > j + 1) && conj(i, j) != 0) bidiagonal = false;
    Json o;
    o["conjugate"] = matrix_to_json(conj);
    o["lower_bidiagonal"] = bidiagonal;
    out << o.dump() << "\n";
    return kExitPass;
}

Json not_constant_json(const NotConstant& e) {
    Json o;
    o["status"] = "fail";
    Json w;
    w["k"] = e.k;
    w["i"] = e.i;
    w["expected"] = format_rational(e.expected);
    w["actual"] = format_rational(e.actual);
    o["not_constant"] = std::move(w);
    return o;
}

int cmd_family(const std::string& action, const std::string& path, long n, std::uint64_t seed,
               std::ostream& out, std::ostream& err) {
    if (action == "generate") {
        if (n < 1 || n > 6) throw InputError("family generate needs 1 <= --n <= 6");
        std::mt19937_64 rng(seed);
        out << family_to_json(sample_family(n, rng)).dump() << "\n";
        return kExitPass;
    }
    if (path.empty()) throw InputError("family --action " + action + " needs --file");
    const FamilySpec spec = family_from_json(read_json_file(path));
    try {
        if (action == "check") {
            const LambdaVector lambda = compute_lambda(spec);
            Json o;
            o["status"] = "pass";
            o["lambda"] = rationals_to_json(lambda);
            out << o.dump() << "\n";
            return kExitPass;
        }
        if (action == "conjugate") {
            const FamilyReport report = verify_family(spec);
            out << report_to_json(report).dump() << "\n";
            if (!report.pass) {
                diagnose(err, "check_failed", "conjugate differs from the predicted bidiagonal form");
                return kExitCheckFailed;
            }
            return kExitPass;
        }
        // eliminate
        if (spec.n() < 2) throw InputError("family eliminate needs n >= 2");
        const EliminationResult step = eliminate_step(spec);
        Json o;
        o["status"] = "pass";
        o["block_form"] = "pass";
        o["B"] = rationals_to_json(step.b_row);
        o["A1"] = matrix_to_json(step.a1);
        o["subfamily"] = family_to_json(step.subfamily);
        out << o.dump() << "\n";
        return kExitPass;
    } catch (const NotConstant& e) {
        out << not_constant_json(e).dump() << "\n";
        diagnose(err, "not_constant", e.what());
        return kExitCheckFailed;
    } catch (const BlockMismatch& e) {
        Json o;
        o["status"] = "fail";
        o["block_form"] = "fail";
        o["mismatch"] = mismatch_to_json(e.mismatch);
        out << o.dump() << "\n";
        diagnose(err, "block_mismatch", e.what());
        return kExitCheckFailed;
    }
}

int cmd_oracle(const std::string& path, std::ostream& out) {
    const AnyMatrix any = matrix_from_json(read_json_file(path));
    Json o;
    if (const auto* m = std::get_if<RatMatrix>(&any)) {
        IntMatrix im;
        try {
            im = to_integer(*m);
        } catch (const std::invalid_argument& e) {
            throw InputError(std::string("oracle charpoly needs integer entries: ") + e.what());
        }
        o["charpoly"] = poly_to_json(charpoly(im));
    } else {
        o["det"] = poly_to_json(det_fraction_free(std::get<PolyMatrix>(any)));
    }
    out << o.dump() << "\n";
    return kExitPass;
}

int cmd_birkhoff(long n, long t, const std::string& method, std::ostream& out, std::ostream& err) {
    if (n < 1 || t < 0) throw InputError("birkhoff needs --n >= 1 and --t >= 0");
    const CountQuery q{n, t};
    if (method != "dp" && (n > 4 || t > 6)) throw InputError("brute-force counting is limited to n <= 4, t <= 6");
    Json o;
    o["n"] = n;
    o["t"] = t;
    if (method == "dp") {
        o["count"] = count_dp(q).get_str();
    } else if (method == "brute") {
        o["count"] = count_bruteforce(q).get_str();
    } else {
        const Integer dp = count_dp(q);
        const Integer brute = count_bruteforce(q);
        o["count"] = dp.get_str();
        o["agreement"] = dp == brute;
        if (dp != brute) {
            o["count_bruteforce"] = brute.get_str();
            out << o.dump() << "\n";
            diagnose(err, "check_failed", "dp and brute-force counts disagree");
            return kExitCheckFailed;
        }
    }
    out << o.dump() << "\n";
    return kExitPass;
}

int cmd_identities(long n_max, std::ostream& out, std::ostream& err) {
    if (n_max < 1) throw InputError("identities needs --n-max >= 1");
    const IdentityReport report = check_identity_suite(n_max);
    out << report_to_json(report).dump() << "\n";
    if (!report.pass()) {
        diagnose(err, "check_failed", "identity " + report.counterexample->identity + " failed");
        return kExitCheckFailed;
    }
    return kExitPass;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact checks for Pascal-similar tridiagonal matrices", "trisim"};
    app.require_subcommand(1);

    long n = 0;
    long n_max = 0;
    long t = 0;
    std::string form = "product";
    std::string file;
    std::string action;
    std::string method = "dp";
    std::uint64_t seed = 0;

    auto* charpoly_cmd = app.add_subcommand("charpoly", "det C as factors or coefficients");
    charpoly_cmd->add_option("--n", n, "matrix parameter n (C is (n-1)x(n-1))")->required();
    charpoly_cmd->add_option("--form", form, "product | expanded | conjecture")
        ->check(CLI::IsMember({"product", "expanded", "conjecture"}));

    auto* verify_cmd = app.add_subcommand("verify", "sweep the determinant and triangular-form checks");
    verify_cmd->add_option("--n-max", n_max, "largest n to verify")->required();

    auto* conjugate_cmd = app.add_subcommand("conjugate", "U A U^-1 for a matrix JSON file");
    conjugate_cmd->add_option("--file", file, "matrix JSON")->required();

    auto* family_cmd = app.add_subcommand("family", "banded family checks");
    family_cmd->add_option("--action", action, "check | conjugate | eliminate | generate")
        ->required()
        ->check(CLI::IsMember({"check", "conjugate", "eliminate", "generate"}));
    family_cmd->add_option("--file", file, "family JSON");
    family_cmd->add_option("--n", n, "size for generate");
    family_cmd->add_option("--seed", seed, "RNG seed for generate");

    auto* oracle_cmd = app.add_subcommand("oracle", "determinant / characteristic polynomial oracle");
    oracle_cmd->add_option("--file", file, "matrix JSON")->required();

    auto* birkhoff_cmd = app.add_subcommand("birkhoff", "count matrices with all line sums t");
    birkhoff_cmd->add_option("--n", n, "matrix side")->required();
    birkhoff_cmd->add_option("--t", t, "common line sum")->required();
    birkhoff_cmd->add_option("--method", method, "dp | brute | both")
        ->check(CLI::IsMember({"dp", "brute", "both"}));

    auto* identities_cmd = app.add_subcommand("identities", "exhaustive binomial identity suite");
    identities_cmd->add_option("--n-max", n_max, "largest n")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitPass;
    } catch (const CLI::ParseError& e) {
        diagnose(err, "usage", e.what());
        return kExitUsage;
    }

    try {
        if (*charpoly_cmd) return cmd_charpoly(n, form, out);
        if (*verify_cmd) return cmd_verify(n_max, out, err);
        if (*conjugate_cmd) return cmd_conjugate(file, out);
        if (*family_cmd) return cmd_family(action, file, n, seed, out, err);
        if (*oracle_cmd) return cmd_oracle(file, out);
        if (*birkhoff_cmd) return cmd_birkhoff(n, t, method, out, err);
        if (*identities_cmd) return cmd_identities(n_max, out, err);
    } catch (const InputError& e) {
        diagnose(err, "input", e.what());
        return kExitUsage;
    } catch (const FormatError& e) {
        diagnose(err, "input", e.what());
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        diagnose(err, "input", e.what());
        return kExitUsage;
    }
    diagnose(err, "usage", "no subcommand");
    return kExitUsage;
}

}  // namespace trisim
