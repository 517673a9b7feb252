#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "homcat/driver.hpp"

namespace {

int emit(const homcat::ojson& report, const std::string& out_path, const std::string& format) {
    std::string text = format == "json" ? report.dump(2) + "\n" : homcat::render_text(report);
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "cannot write to " << out_path << "\n";
            return 2;
        }
        out << text;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"homcat: homological invariants of hypersurface stable categories and finite-dimensional algebras"};
    app.require_subcommand(1);

    std::string f_text, input, out_path, format = "text";
    long characteristic = 0;
    int cap = 20;

    auto add_common = [&](CLI::App* cmd, bool with_field) {
        cmd->add_option("--cap", cap, "resolution cap (default 20)")->check(CLI::PositiveNumber);
        cmd->add_option("--out", out_path, "write the report to a file instead of stdout");
        cmd->add_option("--format", format, "text|json")
            ->check(CLI::IsMember({"text", "json"}));
        if (with_field)
            cmd->add_option("--char", characteristic, "field characteristic: 0 or a prime")
                ->check(CLI::NonNegativeNumber);
    };

    CLI::App* ring = app.add_subcommand("analyze-ring", "analyze the stable category of k[x]/(f)");
    ring->add_option("--f", f_text, "polynomial, e.g. \"x^2\"")->required();
    add_common(ring, true);

    CLI::App* alg = app.add_subcommand("analyze-algebra", "analyze an algebra from a JSON file");
    alg->add_option("--input", input, "algebra JSON file")->required();
    add_common(alg, false);

    CLI::App* dec = app.add_subcommand("decompose", "Krull-Schmidt decomposition of a module file");
    dec->add_option("--input", input, "module JSON file")->required();
    add_common(dec, false);

    CLI::App* suite = app.add_subcommand("paper-suite", "run every built-in instance and check its claims");
    add_common(suite, true);

    CLI::App* census = app.add_subcommand("census", "Gorenstein projective census");
    census->add_option("--f", f_text, "polynomial for a hypersurface instance");
    census->add_option("--input", input, "algebra JSON file");
    add_common(census, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        homcat::FieldDesc field = homcat::FieldDesc::of_char(static_cast<uint32_t>(characteristic));
        if (ring->parsed()) {
            return emit(homcat::run_analyze_ring(f_text, field, cap), out_path, format);
        }
        if (alg->parsed()) {
            bool claims_failed = false;
            homcat::ojson rep = homcat::run_analyze_algebra(input, cap, claims_failed);
            int rc = emit(rep, out_path, format);
            return rc != 0 ? rc : (claims_failed ? 1 : 0);
        }
        if (dec->parsed()) {
            return emit(homcat::run_decompose(input, cap), out_path, format);
        }
        if (suite->parsed()) {
            bool all_pass = false;
            homcat::ojson rep = homcat::run_paper_suite(field, cap, all_pass);
            int rc = emit(rep, out_path, format);
            return rc != 0 ? rc : (all_pass ? 0 : 1);
        }
        if (census->parsed()) {
            if (f_text.empty() == input.empty()) {
                std::cerr << "census needs exactly one of --f or --input\n";
                return 2;
            }
            return emit(homcat::run_census(f_text, input, field, cap), out_path, format);
        }
    } catch (const homcat::Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
