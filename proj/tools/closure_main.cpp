#include <iostream>

#include <CLI11.hpp>

#include "zcl/cli.hpp"
#include "zcl/facttree.hpp"

#ifndef ZCL_CORPUS_DIR
#define ZCL_CORPUS_DIR "corpus"
#endif

using nlohmann::json;

namespace {

std::optional<mpz_class> eta_flag(const std::string& s) {
    if (s.empty()) return std::nullopt;
    mpz_class x;
    if (x.set_str(s, 10) != 0 || x < 1) zcl::fail(zcl::ErrorKind::argument, "--eta-override needs a positive integer");
    return x;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Degree-bounded vanishing ideals of one-counter language images"};
    app.require_subcommand(1);

    std::string file, eta, which, dir = ZCL_CORPUS_DIR;
    bool normalize = false, text = false;
    std::size_t max_len = zcl::default_oracle_max_len;
    std::optional<std::size_t> oracle_len;

    auto* run = app.add_subcommand("run", "Run the pipeline selected by the instance mode");
    run->add_option("file", file, "Instance JSON")->required();
    run->add_option("--eta-override", eta, "Threshold override (enables the oracle cross-check)");
    run->add_option("--oracle-max-len", oracle_len, "Word length bound for the oracle cross-check");
    run->add_flag("--normalize-weights", normalize, "Split weights outside {-1,0,1} into unit steps");
    run->add_flag("--text", text, "Print generators one per line instead of JSON");

    auto* corpus = app.add_subcommand("verify-corpus", "Run every corpus entry and print PASS/FAIL/DISCREPANCY");
    corpus->add_option("--dir", dir, "Corpus directory");

    auto* tree = app.add_subcommand("tree", "Factorization tree of the instance word");
    tree->add_option("file", file, "Instance JSON with a \"word\" field")->required();
    tree->add_flag("--text", text, "Indented text instead of JSON");

    auto* automaton = app.add_subcommand("automaton", "Dump a construction automaton");
    automaton->add_option("file", file, "Instance JSON")->required();
    automaton->add_option("--which", which, "cover, reach, zero or bz")->required()->check(CLI::IsMember({"cover", "reach", "zero", "bz"}));
    automaton->add_option("--eta-override", eta, "Threshold override");

    auto* oracle = app.add_subcommand("oracle", "Brute-force enumeration oracle");
    oracle->add_option("file", file, "Instance JSON")->required();
    oracle->add_option("--max-len", max_len, "Maximum word length");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*run) {
            zcl::Instance in = zcl::load_instance(file, normalize);
            zcl::RunOptions opt;
            opt.eta_override = eta_flag(eta);
            opt.oracle_max_len = oracle_len;
            auto r = zcl::run_pipeline(in, opt);
            if (text) {
                if (r.report.contains("generators"))
                    for (const auto& g : r.report["generators"]) std::cout << g.get<std::string>() << '\n';
                else
                    std::cout << r.report.dump(2) << '\n';
            } else {
                std::cout << r.report.dump(2) << '\n';
            }
            return 0;
        }
        if (*corpus) {
            auto results = zcl::verify_corpus(dir);
            bool failed = false;
            for (const auto& r : results) {
                std::cout << r.status << ' ' << r.name << ": " << r.detail << '\n';
                failed = failed || r.status == "FAIL";
            }
            return failed ? 1 : 0;
        }
        if (*tree) {
            zcl::Instance in = zcl::load_instance(file);
            if (text) {
                std::vector<zcl::Matrix> ms;
                for (auto l : in.mp.word(in.word)) ms.push_back(in.mp.phi[l]);
                std::cout << zcl::tree_to_text(zcl::build_tree(ms));
            } else {
                std::cout << zcl::tree_report(in).dump(2) << '\n';
            }
            return 0;
        }
        if (*automaton) {
            zcl::Instance in = zcl::load_instance(file);
            zcl::RunOptions opt;
            opt.eta_override = eta_flag(eta);
            std::cout << zcl::automaton_dump(in, which, opt).dump(2) << '\n';
            return 0;
        }
        if (*oracle) {
            zcl::Instance in = zcl::load_instance(file);
            std::cout << zcl::oracle_report(in, max_len).dump(2) << '\n';
            return 0;
        }
    } catch (const zcl::Error& e) {
        std::cerr << zcl::error_json(e).dump() << '\n';
        return zcl::exit_code(e.kind());
    } catch (const std::exception& e) {
        std::cerr << json{{"error", "internal"}, {"message", e.what()}, {"exit_code", 5}}.dump() << '\n';
        return 5;
    }
    return 0;
}
