#include "slocc/io.hpp"
#include "slocc/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

namespace {

using namespace slocc;

struct CommonOpts {
    std::string mode;
    double eps2 = ToleranceConfig{}.eps2;
    double eps4 = ToleranceConfig{}.eps4;
    std::string output = "-";
};

void add_tolerance_flags(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--eps2", o.eps2, "relative tolerance for degree-2 residuals")
        ->envname("SLOCC_EPS2")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--eps4", o.eps4, "relative tolerance for degree-4 residuals")
        ->envname("SLOCC_EPS4")
        ->check(CLI::PositiveNumber);
}

ToleranceConfig tolerances(const CommonOpts& o) {
    ToleranceConfig tol;
    tol.eps2 = o.eps2;
    tol.eps4 = o.eps4;
    tol.validate();
    return tol;
}

// Output sink: "-" means stdout.
class Sink {
  public:
    explicit Sink(const std::string& path) {
        if (path != "-") {
            file_ = std::make_unique<std::ofstream>(path);
            if (!*file_) {
                throw std::runtime_error("cannot open output file: " + path);
            }
        }
    }
    std::ostream& stream() { return file_ ? *file_ : std::cout; }

  private:
    std::unique_ptr<std::ofstream> file_;
};

int cmd_classify(const std::string& input, const CommonOpts& o) {
    std::optional<Mode> default_mode;
    if (!o.mode.empty()) {
        default_mode = parse_mode(o.mode);
        if (!default_mode) {
            std::cerr << "unknown mode: " << o.mode << "\n";
            return 1;
        }
    }
    auto tol = tolerances(o);
    Sink sink(o.output);
    if (input == "-") {
        return process_classify_stream(std::cin, sink.stream(), tol, default_mode);
    }
    std::ifstream in(input);
    if (!in) {
        std::cerr << "cannot open input file: " << input << "\n";
        return 1;
    }
    return process_classify_stream(in, sink.stream(), tol, default_mode);
}

int cmd_orbit(const std::string& cls_name, std::uint64_t seed, long count, const CommonOpts& o) {
    auto cls = parse_canonical_class(cls_name);
    if (!cls) {
        std::cerr << "unknown class: " << cls_name << "\n";
        return 1;
    }
    auto mode = parse_mode(o.mode.empty() ? "float" : o.mode);
    if (!mode) {
        std::cerr << "unknown mode: " << o.mode << "\n";
        return 1;
    }
    Sink sink(o.output);
    write_orbit_stream(sink.stream(), *cls, seed, count, *mode, tolerances(o));
    return 0;
}

int cmd_verify(const std::vector<std::string>& suite_names, long long trials, std::uint64_t seed,
               const CommonOpts& o) {
    std::vector<Suite> suites;
    if (suite_names.empty()) {
        suites = all_suites();
    } else {
        for (const auto& name : suite_names) {
            auto s = parse_suite(name);
            if (!s) {
                std::cerr << "unknown suite: " << name << "\n";
                return 1;
            }
            suites.push_back(*s);
        }
    }
    auto mode = parse_mode(o.mode.empty() ? "exact" : o.mode);
    if (!mode) {
        std::cerr << "unknown mode: " << o.mode << "\n";
        return 1;
    }
    auto tol = tolerances(o);
    Sink sink(o.output);
    auto& out = sink.stream();
    bool any_violation = false;
    for (Suite s : suites) {
        auto result = run_suite(s, trials, seed, *mode, tol);
        out << result.suite << ": " << result.trials << " trials, " << result.violations
            << " violations " << (result.passed() ? "[pass]" : "[FAIL]") << "\n";
        for (const auto& ce : result.counterexamples) {
            out << "  counterexample: " << ce << "\n";
        }
        any_violation = any_violation || !result.passed();
    }
    return any_violation ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"SLOCC equivalence-class tools for 3- and 4-qubit pure states"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::string input = "-";
    std::string cls_name;
    std::vector<std::string> suite_names;
    std::uint64_t seed = 0;
    long count = 10;
    long long trials = 1000;

    auto* classify = app.add_subcommand(
        "classify", "read state records (one JSON object per line), write one verdict per line");
    classify->add_option("input", input, "input file, or - for stdin");
    classify->add_option("--mode", opts.mode, "default scalar mode for records that omit one");
    classify->add_option("--output", opts.output, "output file, or - for stdout");
    add_tolerance_flags(classify, opts);

    auto* orbit =
        app.add_subcommand("orbit", "emit a deterministic stream of random orbit states");
    orbit->add_option("--class", cls_name, "canonical class name")->required();
    orbit->add_option("--seed", seed, "base seed; record i uses seed+i");
    orbit->add_option("--count", count, "number of records")->check(CLI::NonNegativeNumber);
    orbit->add_option("--mode", opts.mode, "scalar mode (float or exact)");
    orbit->add_option("--output", opts.output, "output file, or - for stdout");
    add_tolerance_flags(orbit, opts);

    auto* verify = app.add_subcommand("verify", "run randomized property suites");
    verify->add_option("--suite", suite_names, "suite name (repeatable; default: all)");
    verify->add_option("--trials", trials, "trials per suite")->check(CLI::NonNegativeNumber);
    verify->add_option("--seed", seed, "RNG seed");
    verify->add_option("--mode", opts.mode, "scalar mode (default exact)");
    verify->add_option("--output", opts.output, "report file, or - for stdout");
    add_tolerance_flags(verify, opts);

    CLI11_PARSE(app, argc, argv);

    try {
        if (classify->parsed()) return cmd_classify(input, opts);
        if (orbit->parsed()) return cmd_orbit(cls_name, seed, count, opts);
        return cmd_verify(suite_names, trials, seed, opts);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
