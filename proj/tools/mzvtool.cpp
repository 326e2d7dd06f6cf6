// mzvtool: reductions of zeta(m,{1}_k), triangle integrals and the
// cross-verification suite from the command line.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 numerical non-convergence.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "mzv/commands.hpp"
#include "mzv/quadrature.hpp"
#include "mzv/records.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNoConvergence = 3;

struct Settings {
    int precision = mzv::EvalContext::kDefaultDigits;
    long sum_limit = mzv::EvalContext::kDefaultSumLimit;
    std::string format = "text";
    std::string out;
    int max_weight = 10;
};

void add_common(CLI::App* cmd, Settings& s) {
    cmd->add_option("--precision", s.precision, "Working precision in decimal digits")->check(CLI::Range(15, 2000));
    cmd->add_option("--sum-limit", s.sum_limit, "Cutoff N for nested sums")->check(CLI::PositiveNumber);
    cmd->add_option("--format", s.format, "Output format")->check(CLI::IsMember({"text", "json", "latex"}));
    cmd->add_option("--out", s.out, "Write output to this file instead of stdout");
}

int emit(const std::string& text, const Settings& s) {
    if (s.out.empty()) {
        std::cout << text;
        return kExitOk;
    }
    std::ofstream f(s.out);
    if (!f) {
        std::cerr << "mzvtool: cannot open " << s.out << " for writing\n";
        return kExitUsage;
    }
    f << text;
    return kExitOk;
}

int fail(int code, const std::string& message, const Settings& s) {
    if (s.format == "json") {
        mzv::Json err;
        err["error"] = {{"code", code}, {"message", message}};
        std::cout << err.dump(2) << "\n";
    } else {
        std::cerr << "mzvtool: " << message << "\n";
    }
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Reduce zeta(m,{1,...,1}) to ordinary zeta values and verify triangle-integral identities"};
    app.require_subcommand(1);
    Settings s;

    int m = 0;
    int k = 0;
    int n = 0;
    std::string reduce_method = "kolbig";
    std::string integrate_method = "semi";
    bool normalize = false;
    std::string inject_fault;

    auto* reduce = app.add_subcommand("reduce", "Exact reduction of zeta(m, {1}_k)");
    reduce->add_option("m", m, "Leading index (>= 2)")->required();
    reduce->add_option("k", k, "Number of trailing ones (>= 0)")->required();
    reduce->add_option("--method", reduce_method, "Reduction route")->check(CLI::IsMember({"kolbig", "genfunc"}));
    reduce->add_flag("--normalize", normalize, "Rewrite even zetas as powers of zeta(2)");
    reduce->add_option("--max-weight", s.max_weight, "Series cap for --method genfunc");
    add_common(reduce, s);

    auto* triangle = app.add_subcommand("triangle", "Reduce the triangle integral I_n");
    triangle->add_option("n", n, "Log power (>= 0)")->required();
    add_common(triangle, s);

    auto* integrate = app.add_subcommand("integrate", "Evaluate I_n by numerical quadrature");
    integrate->add_option("n", n, "Log power (>= 0)")->required();
    integrate->add_option("--method", integrate_method, "semi: 1D form, 2d: iterated double integral")
        ->check(CLI::IsMember({"semi", "2d"}));
    add_common(integrate, s);

    auto* eval = app.add_subcommand("eval", "Nested-sum evaluation of zeta(m, {1}_k) with a tail bound");
    eval->add_option("m", m, "Leading index (>= 2)")->required();
    eval->add_option("k", k, "Number of trailing ones (>= 0)")->required();
    add_common(eval, s);

    auto* verify = app.add_subcommand("verify", "Run the cross-verification suite");
    verify->add_option("--max-weight", s.max_weight, "Largest weight m+k to check")->check(CLI::Range(2, 14));
    verify->add_option("--inject-fault", inject_fault, "Perturb the first check with this name prefix (testing)");
    add_common(verify, s);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return fail(kExitUsage, e.what(), s);
    }

    try {
        const auto format = mzv::parse_format(s.format);
        mzv::EvalContext ctx(s.precision, s.sum_limit);
        mzv::OutputRecord record;
        if (*reduce) {
            record = mzv::cmd_reduce(m, k, mzv::parse_reduce_method(reduce_method), normalize, ctx, s.max_weight);
        } else if (*triangle) {
            record = mzv::cmd_triangle(n, ctx);
        } else if (*integrate) {
            record = mzv::cmd_integrate(n, mzv::parse_integration_method(integrate_method), ctx);
        } else if (*eval) {
            record = mzv::cmd_eval(m, k, ctx);
        } else {
            mzv::VerifyOptions opts;
            opts.max_weight = s.max_weight;
            opts.digits = s.precision;
            opts.sum_limit = s.sum_limit;
            if (!inject_fault.empty()) {
                opts.inject_fault = inject_fault;
            }
            record = mzv::cmd_verify(opts);
        }
        int rc = emit(mzv::render(record, format), s);
        if (rc != kExitOk) {
            return rc;
        }
        if (record.kind == "verify-report" && !record.payload["passed"].get<bool>()) {
            return kExitVerifyFailed;
        }
        return kExitOk;
    } catch (const mzv::QuadratureError& e) {
        return fail(kExitNoConvergence, e.what(), s);
    } catch (const std::invalid_argument& e) {
        return fail(kExitUsage, e.what(), s);
    } catch (const std::domain_error& e) {
        return fail(kExitUsage, e.what(), s);
    }
}
