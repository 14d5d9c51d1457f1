#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "vglab/bundleops.hpp"
#include "vglab/dsl.hpp"
#include "vglab/report.hpp"

namespace {

void emit(const std::string& text, const std::string& out_file) {
    if (out_file.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_file, std::ios::binary);
    if (!f) throw vglab::VglabError("cannot open output file '" + out_file + "'");
    f << text;
}

std::string pad(const std::string& s, size_t width) {
    return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of rank-2 bundles mapping projective space into Grassmannians"};
    app.require_subcommand(1);

    std::string case_id, spec_text, format = "text", out_file, twists = "-5..5", line_text;
    std::uint64_t seed = 2026;
    int samples = 200;
    bool timings = false;

    CLI::App* cmd_list = app.add_subcommand("list", "list the named cases");

    CLI::App* cmd_verify =
        app.add_subcommand("verify", "run the full verification pipeline for a named case");
    cmd_verify->add_option("case", case_id, "case id, e.g. 4a or 1b@P3")->required();
    cmd_verify->add_option("--seed", seed, "seed for all sampling")->capture_default_str();
    cmd_verify->add_option("--samples", samples, "embedding sample count")
        ->capture_default_str()
        ->check(CLI::Range(4, 1000000));
    cmd_verify->add_option("--format", format, "output format")
        ->capture_default_str()
        ->check(CLI::IsMember({"text", "json"}));
    cmd_verify->add_option("--out", out_file, "write the report to this file");
    cmd_verify->add_flag("--timings", timings, "include phase timings in the report");

    CLI::App* cmd_chern = app.add_subcommand("chern", "Chern data of a bundle spec");
    cmd_chern->add_option("spec", spec_text, "bundle spec, e.g. 'O(1)+O(2)' or 'case:4a'")
        ->required();

    CLI::App* cmd_cohom = app.add_subcommand("cohom", "cohomology table over a twist range");
    cmd_cohom->add_option("spec", spec_text, "bundle spec")->required();
    cmd_cohom->add_option("--twists", twists, "twist range a..b")->capture_default_str();

    CLI::App* cmd_restrict =
        app.add_subcommand("restrict", "splitting type on the line through two points");
    cmd_restrict->add_option("spec", spec_text, "bundle spec")->required();
    cmd_restrict->add_option("--line", line_text, "two points 'P;Q', e.g. '1:0:0;0:1:0'")
        ->required();

    CLI::App* cmd_plucker =
        app.add_subcommand("plucker", "coordinate forms of the Grassmannian map");
    cmd_plucker->add_option("spec", spec_text, "bundle spec")->required();
    cmd_plucker->add_option("--out", out_file, "write the map to this file");

    CLI::App* cmd_obstructions =
        app.add_subcommand("obstructions", "arithmetic oracles behind the exclusion arguments");
    cmd_obstructions->add_option("--format", format, "output format")
        ->capture_default_str()
        ->check(CLI::IsMember({"text", "json"}));
    cmd_obstructions->add_option("--out", out_file, "write the report to this file");

    CLI::App* cmd_stratify =
        app.add_subcommand("stratify", "sample the moduli stratification by resolution type");
    cmd_stratify->add_option("--samples", samples, "number of sampled presentations")
        ->capture_default_str()
        ->check(CLI::Range(1, 1000000));
    cmd_stratify->add_option("--seed", seed, "seed for the draws")->capture_default_str();
    cmd_stratify->add_option("--format", format, "output format")
        ->capture_default_str()
        ->check(CLI::IsMember({"text", "json"}));
    cmd_stratify->add_option("--out", out_file, "write the report to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cmd_list->parsed()) {
            for (const vglab::CatalogCase& c : vglab::catalog()) {
                std::cout << pad(vglab::case_key(c.id, c.n), 12) << " "
                          << pad(c.spec.str(), 40) << " "
                          << (c.embedding_expected ? "embedding    " : "non-embedding")
                          << "  " << c.summary << "\n";
            }
            return 0;
        }
        if (cmd_verify->parsed()) {
            vglab::VerificationReport r = vglab::run_case(case_id, seed, samples);
            emit(format == "json" ? r.json(timings) : r.str(timings), out_file);
            return r.ok() ? 0 : 1;
        }
        if (cmd_chern->parsed()) {
            vglab::BundleSpec s = vglab::parse_spec(spec_text);
            vglab::ChernData cd = s.chern();
            std::cout << "spec: " << s.str() << "  ambient P" << s.n << "\n";
            std::cout << "rank " << cd.rank << "\n";
            std::cout << "total chern: " << s.total_chern().str() << "\n";
            std::cout << "c1 " << cd.c1.str() << "\nc2 " << cd.c2.str() << "\n";
            if (s.n >= 3) std::cout << "c3 " << cd.c3.str() << "\n";
            return 0;
        }
        if (cmd_cohom->parsed()) {
            auto [lo, hi] = vglab::parse_twist_range(twists);
            vglab::BundleSpec s = vglab::parse_spec(spec_text);
            vglab::CohomologyTable t = vglab::cohomology_table(s, lo, hi);
            std::cout << "spec: " << s.str() << "  ambient P" << s.n << "\n";
            std::cout << "   m:";
            for (int i = 0; i <= s.n; ++i) std::cout << "  h^" << i;
            std::cout << "   chi\n";
            for (int m = lo; m <= hi; ++m) {
                std::ostringstream row;
                row << "  " << m << ":";
                for (const vglab::Int& h : t.at(m)) row << "  " << h.str();
                row << "   " << t.chi(m).str();
                std::cout << row.str() << "\n";
            }
            return 0;
        }
        if (cmd_restrict->parsed()) {
            vglab::BundleSpec s = vglab::parse_spec(spec_text);
            auto [P, Q] = vglab::parse_line_points(line_text, s.n);
            std::cout << "spec: " << s.str() << "\nline: " << P.str() << " .. " << Q.str()
                      << "\n";
            try {
                vglab::SplittingType st = vglab::restrict_to_line(s, P, Q);
                std::cout << "splitting: O(" << st.a << ") + O(" << st.b << ")   " << st.str()
                          << "\n";
                return 0;
            } catch (const vglab::DegenerateLine& e) {
                std::cout << "degenerate: " << e.what() << "\n";
                return 1;
            }
        }
        if (cmd_plucker->parsed()) {
            vglab::BundleSpec s = vglab::parse_spec(spec_text);
            vglab::PluckerMap m = vglab::plucker_symbolic_det(s);
            std::ostringstream os;
            vglab::write_plucker(m, os);
            emit(os.str(), out_file);
            return 0;
        }
        if (cmd_obstructions->parsed()) {
            vglab::ObstructionsReport o = vglab::obstructions_report();
            emit(format == "json" ? o.json() : o.str(), out_file);
            return o.ok() ? 0 : 1;
        }
        if (cmd_stratify->parsed()) {
            vglab::StratifyReport st = vglab::stratify(samples, seed);
            emit(format == "json" ? st.json() : st.str(), out_file);
            return st.ok() ? 0 : 1;
        }
    } catch (const vglab::VglabError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
