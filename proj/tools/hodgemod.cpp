#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "hodgemod/document.hpp"
#include "hodgemod/errors.hpp"
#include "hodgemod/moduli.hpp"
#include "hodgemod/verify.hpp"

namespace {

using namespace hodgemod;

constexpr int kExitOk = 0;
constexpr int kExitInvalidInput = 2;
constexpr int kExitConsistency = 3;

struct QueryOptions {
    int rank = 0;
    long long degree = 0;
    int genus = 0;
    bool fixed_determinant = false;
    std::string format = "json";
    std::optional<int> cap;
    std::string cache_dir;
    std::string out_file;
};

void add_common_options(CLI::App* cmd, QueryOptions& opts, bool with_variant_flag) {
    cmd->add_option("--rank,-n", opts.rank, "rank n")->required();
    cmd->add_option("--degree,-d", opts.degree, "degree d")->required();
    cmd->add_option("--genus,-g", opts.genus, "genus g of the curve (>= 2)")->required();
    if (with_variant_flag) {
        cmd->add_flag("--fixed-determinant", opts.fixed_determinant,
                      "fixed-determinant subspace instead of the full moduli space");
    }
    cmd->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"json", "latex", "text"}))
        ->default_val("json");
    cmd->add_option("--cap", opts.cap,
                    "series truncation cap override (testing only; must be >= 2*dim)");
    cmd->add_option("--cache-dir", opts.cache_dir, "directory for the on-disk series cache")
        ->envname("HODGE_CACHE_DIR");
    cmd->add_option("--out", opts.out_file, "write the document to a file instead of stdout");
}

OutputFormat parse_format(const std::string& name) {
    if (name == "text") return OutputFormat::text;
    if (name == "latex") return OutputFormat::latex;
    return OutputFormat::json;
}

SeriesCache make_cache(const QueryOptions& opts) {
    if (opts.cache_dir.empty()) return SeriesCache();
    return SeriesCache(std::filesystem::path(opts.cache_dir));
}

void emit(const QueryOptions& opts, const std::string& payload) {
    if (opts.out_file.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(opts.out_file, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open output file: " + opts.out_file);
    out << payload;
}

int run_compute(const QueryOptions& opts, DocumentView view) {
    SeriesCache cache = make_cache(opts);
    const Variant variant =
        opts.fixed_determinant ? Variant::fixed_determinant : Variant::full;
    const HodgeReport rep = report(opts.rank, opts.degree, opts.genus, variant, cache, opts.cap);
    emit(opts, render(make_document(rep), parse_format(opts.format), view));
    return kExitOk;
}

int run_verify_cmd(int max_rank, int max_genus, const std::string& cache_dir) {
    VerifyOptions options;
    options.max_rank = max_rank;
    options.max_genus = max_genus;
    if (!cache_dir.empty()) options.cache_dir = std::filesystem::path(cache_dir);
    const VerifyOutcome outcome = run_verify(options);
    std::cout << format_verify_matrix(outcome);
    return outcome.all_passed ? kExitOk : kExitConsistency;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hodge diamonds, Betti numbers and chi(t)-characteristics of moduli spaces "
                 "of stable bundles over a genus-g curve"};
    app.require_subcommand(1);

    QueryOptions compute_opts;
    CLI::App* compute = app.add_subcommand(
        "compute", "full Hodge report for one moduli space");
    add_common_options(compute, compute_opts, /*with_variant_flag=*/true);

    QueryOptions chi_opts;
    CLI::App* chi = app.add_subcommand(
        "chi", "chi(t)-characteristic (fixed determinant unless --full-space)");
    bool chi_full_space = false;
    add_common_options(chi, chi_opts, /*with_variant_flag=*/false);
    chi->add_flag("--full-space", chi_full_space,
                  "chi of the full moduli space (identically zero)");

    QueryOptions betti_opts;
    CLI::App* betti = app.add_subcommand("betti", "Betti numbers of one moduli space");
    add_common_options(betti, betti_opts, /*with_variant_flag=*/true);

    int verify_max_rank = 3;
    int verify_max_genus = 4;
    std::string verify_cache_dir;
    CLI::App* verify = app.add_subcommand("verify", "run the identity battery over a grid");
    verify->add_option("--max-rank", verify_max_rank, "largest rank to check")->default_val(3);
    verify->add_option("--max-genus", verify_max_genus, "largest genus to check")->default_val(4);
    verify->add_option("--cache-dir", verify_cache_dir, "directory for the on-disk series cache")
        ->envname("HODGE_CACHE_DIR");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInvalidInput;
    }

    try {
        if (compute->parsed()) return run_compute(compute_opts, DocumentView::all);
        if (chi->parsed()) {
            chi_opts.fixed_determinant = !chi_full_space;
            return run_compute(chi_opts, DocumentView::chi_only);
        }
        if (betti->parsed()) return run_compute(betti_opts, DocumentView::betti_only);
        if (verify->parsed()) {
            return run_verify_cmd(verify_max_rank, verify_max_genus, verify_cache_dir);
        }
    } catch (const DomainError& e) {
        std::cerr << "error (invalid input): " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const ConsistencyError& e) {
        std::cerr << "error (self-check failed): " << e.what() << "\n";
        return kExitConsistency;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConsistency;
    }
    return kExitOk;
}
