#pragma once

#include <string>
#include <vector>

namespace sullivan {

/// One expectation checked against a fixture.
struct CorpusCheckResult {
    std::string fixture;
    std::string check;
    std::string expected;
    std::string actual;
    bool pass = false;
};

struct CorpusRunResult {
    std::vector<CorpusCheckResult> rows;
    std::size_t fixture_count = 0;
    bool all_pass() const {
        for (const auto& r : rows)
            if (!r.pass) return false;
        return true;
    }
};

/// Run every .sul fixture in the directory against its .expect sidecar.
/// Sidecar lines (whitespace-tokenized, # comments):
///   o <ext> = <int>
///   obasis <ext> = <gen> ...
///   rgmap <ext> = true|false
///   rgmap_morphism <name> = true|false
///   gottlieb <alg> @ <deg> = <dim> [basis <gen> ...]
///   evalsub <ext> @ <deg> = <dim> [basis <gen> ...]
///   evalsub_total <ext> = <dim>
///   center <alg> @ <deg> = <dim> [basis <gen> ...]
///   wmap <ext> = true|false
///   split <ext> <gen> ... = verified <k> | refused
///   cohom <alg> @ <deg> = <dim>
///   classify <ext> <gen> = K1|K2|K3|K4|none
CorpusRunResult run_corpus(const std::string& directory);

}  // namespace sullivan
