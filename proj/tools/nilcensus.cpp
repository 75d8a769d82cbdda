// Command-line front end: construct algebras, run ideal/fiber censuses,
// evaluate the bound family, and re-run the reproduction suite.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <iostream>

#include "nilcensus/checks.hpp"
#include "nilcensus/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResourceRefusal = 3;

struct CommonOptions {
    std::string algebra;
    std::string strategy = "join-closure";
    nilcensus::Index max_enum_dim = 6;
    int workers = 1;
    bool force = false;
    std::string format = "json";
};

void add_common(CLI::App* cmd, CommonOptions& opt, bool with_strategy) {
    cmd->add_option("--algebra", opt.algebra,
                    "builtin grammar name(arg)@p or path to an algebra spec file")
        ->required();
    if (with_strategy)
        cmd->add_option("--strategy", opt.strategy, "ideal enumeration strategy")
            ->check(CLI::IsMember({"join-closure", "filter"}));
    cmd->add_option("--max-enum-dim", opt.max_enum_dim, "subspace enumeration dimension cap");
    cmd->add_option("--workers", opt.workers, "worker threads for enumerations")
        ->check(CLI::PositiveNumber);
    cmd->add_flag("--force", opt.force, "override enumeration caps");
    cmd->add_option("--format", opt.format, "report format")
        ->check(CLI::IsMember({"json", "csv"}));
}

nilcensus::EnumLimits limits_of(const CommonOptions& opt) {
    nilcensus::EnumLimits limits;
    limits.max_enum_dim = opt.max_enum_dim;
    limits.force = opt.force;
    return limits;
}

void emit(const nilcensus::Json& json) { std::cout << json.dump(2) << "\n"; }

int run_describe(const CommonOptions& opt) {
    const auto algebra = nilcensus::resolve_algebra(opt.algebra);
    if (opt.format == "csv")
        std::cout << nilcensus::describe_csv(algebra);
    else
        emit(nilcensus::describe_report(algebra));
    return kExitOk;
}

int run_count(const CommonOptions& opt, bool with_fibers) {
    const auto algebra = nilcensus::resolve_algebra(opt.algebra);
    const auto strategy = opt.strategy == "filter" ? nilcensus::EnumStrategy::Filter
                                                   : nilcensus::EnumStrategy::JoinClosure;
    const auto report =
        nilcensus::census(algebra, strategy, limits_of(opt), opt.workers, with_fibers);
    if (opt.format == "csv")
        std::cout << (with_fibers ? nilcensus::fiber_csv(algebra, report)
                                  : nilcensus::census_csv(algebra, report));
    else
        emit(nilcensus::census_report_json(algebra, report));
    return kExitOk;
}

int run_bounds(const CommonOptions& opt) {
    const auto algebra = nilcensus::resolve_algebra(opt.algebra);
    const auto report = nilcensus::bound_report(algebra, limits_of(opt), opt.workers);
    if (opt.format == "csv")
        std::cout << nilcensus::bound_csv(algebra, report);
    else
        emit(nilcensus::bound_report_json(algebra, report));
    return kExitOk;
}

int run_verify(const std::vector<std::string>& only, const CommonOptions& opt) {
    nilcensus::VerifyOptions options;
    options.limits = limits_of(opt);
    options.workers = opt.workers;
    const auto results = nilcensus::run_verify_checks(only, options);
    bool all = true;
    nilcensus::Json rows = nilcensus::Json::array();
    for (const auto& r : results) {
        all = all && r.passed;
        if (opt.format == "csv") {
            std::cout << (r.passed ? "PASS," : "FAIL,") << r.name
                      << (r.detail.empty() ? "" : "," + r.detail) << "\n";
        } else {
            std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << r.name
                      << (r.detail.empty() ? "" : ": " + r.detail) << "\n";
        }
        rows.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    }
    std::cout << (all ? "all checks passed" : "some checks FAILED") << "\n";
    return all ? kExitOk : kExitCheckFailure;
}

int run_interpolate(const std::string& family, std::vector<std::int64_t> primes,
                    std::int64_t validation_prime, const CommonOptions& opt) {
    const auto limits = limits_of(opt);
    const int workers = opt.workers;
    const auto fit = nilcensus::interpolate_count(
        [&](std::int64_t q) {
            const auto algebra = nilcensus::build_family_at(family, q);
            return nilcensus::BigInt(
                nilcensus::enumerate_ideals(algebra, nilcensus::EnumStrategy::JoinClosure, limits,
                                            workers)
                    .size());
        },
        primes, validation_prime);
    emit(nilcensus::interpolation_report_json(family, primes, validation_prime, fit));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ideal censuses and subspace-ratio bounds for finite commutative nilpotent "
                 "F_p-algebras"};
    app.require_subcommand(1);

    CommonOptions describe_opt, count_opt, fiber_opt, bounds_opt, verify_opt, interp_opt;
    std::vector<std::string> only;
    std::string family;
    std::vector<std::int64_t> primes;
    std::int64_t validation_prime = 0;

    auto* describe = app.add_subcommand("describe", "chain data and basis of an algebra");
    add_common(describe, describe_opt, false);

    auto* count = app.add_subcommand("count", "ideal census i(A), s(A) and the exact ratio");
    add_common(count, count_opt, true);

    auto* fibers = app.add_subcommand("fibers", "full fiber table of the ideal-generator map");
    add_common(fibers, fiber_opt, true);

    auto* bounds = app.add_subcommand("bounds", "every lower/upper bound with applicability");
    add_common(bounds, bounds_opt, false);

    auto* verify = app.add_subcommand("verify", "run the reproduction suite");
    verify->add_option("--only", only,
                       "run only the named checks (see --list for names)")
        ->check(CLI::IsMember(nilcensus::verify_check_names()));
    bool list_checks = false;
    verify->add_flag("--list", list_checks, "list check names and exit");
    verify->add_option("--max-enum-dim", verify_opt.max_enum_dim, "enumeration dimension cap");
    verify->add_option("--workers", verify_opt.workers, "worker threads")
        ->check(CLI::PositiveNumber);
    verify->add_flag("--force", verify_opt.force, "override enumeration caps");
    verify->add_option("--format", verify_opt.format, "report format")
        ->check(CLI::IsMember({"json", "csv"}));

    auto* interpolate =
        app.add_subcommand("interpolate", "fit an exact count polynomial over sample primes");
    interpolate->add_option("--family", family, "algebra family, e.g. triangular(2)")->required();
    interpolate->add_option("--primes", primes, "sample primes")->required()->expected(1, -1);
    interpolate->add_option("--validate", validation_prime, "held-out validation prime")
        ->required();
    interpolate->add_option("--max-enum-dim", interp_opt.max_enum_dim, "enumeration cap");
    interpolate->add_option("--workers", interp_opt.workers, "worker threads");
    interpolate->add_flag("--force", interp_opt.force, "override enumeration caps");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*describe) return run_describe(describe_opt);
        if (*count) return run_count(count_opt, false);
        if (*fibers) return run_count(fiber_opt, true);
        if (*bounds) return run_bounds(bounds_opt);
        if (*verify) {
            if (list_checks) {
                for (const auto& name : nilcensus::verify_check_names()) std::cout << name << "\n";
                return kExitOk;
            }
            return run_verify(only, verify_opt);
        }
        if (*interpolate)
            return run_interpolate(family, primes, validation_prime, interp_opt);
    } catch (const nilcensus::EnumerationTooLargeError& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return kExitResourceRefusal;
    } catch (const nilcensus::NonIntegerCoefficientsError& e) {
        std::cerr << "interpolation failed: " << e.what() << "\n";
        return kExitCheckFailure;
    } catch (const nilcensus::ValidationMismatchError& e) {
        std::cerr << "interpolation failed: " << e.what() << "\n";
        return kExitCheckFailure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
