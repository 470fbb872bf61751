#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "zcl/closure.hpp"

namespace zcl {

struct ChainSpec {
    std::vector<Matrix> sigma;
    Matrix alpha, beta;
    std::size_t depth = 0;
};

struct Expected {
    std::optional<std::vector<std::string>> ideal;  // generators of the stated ideal
    std::string discrepancy;  // non-empty: a mismatch with `ideal` is documented
    std::optional<int> exit_code;  // the run is expected to be refused with this code
};

struct Instance {
    std::string name;
    std::string mode;  // cover | reach | zero | regular | vass-cover | vass-reach | chain
    MorphismPair mp;
    std::vector<long> raw_omega;  // as written; mp.omega after validation
    std::size_t degree = 0;
    std::optional<Nfa> nfa;
    std::optional<Vass> vass;
    std::optional<ChainSpec> chain;
    std::optional<std::size_t> max_veronese, max_states;
    std::vector<std::string> word;
    std::optional<std::size_t> oracle_max_len;
    std::optional<Expected> expected;

    bool operator==(const Instance& o) const;
};

/// Schema errors name the offending field.
Instance parse_instance(const nlohmann::json& j, bool normalize = false);
Instance load_instance(const std::string& path, bool normalize = false);
nlohmann::json instance_to_json(const Instance& in);

constexpr std::size_t default_oracle_max_len = 12;

struct RunOptions {
    std::optional<mpz_class> eta_override;
    std::optional<std::size_t> oracle_max_len;
};

struct RunResult {
    nlohmann::json report;
    PolySpace space;
};

Caps instance_caps(const Instance& in);

/// Dispatches to the pipeline for in.mode. Throws Error: resource when the
/// default threshold is refused, oracle_disagreement when an overridden run
/// differs from the enumeration oracle.
RunResult run_pipeline(const Instance& in, const RunOptions& opt = {});

int exit_code(ErrorKind k);
nlohmann::json error_json(const Error& e);

struct CorpusResult {
    std::string name;
    std::string status;  // PASS | FAIL | DISCREPANCY
    std::string detail;
};

/// Runs every *.json file of `dir` in name order.
std::vector<CorpusResult> verify_corpus(const std::string& dir);

nlohmann::json tree_report(const Instance& in);
nlohmann::json automaton_dump(const Instance& in, const std::string& which, const RunOptions& opt = {});
nlohmann::json oracle_report(const Instance& in, std::size_t max_len);

}  // namespace zcl
