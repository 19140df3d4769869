// The involution catalog (one representative generator word per conjugacy
// class of involutions in M(N_g), 2 <= g <= 5, with quotient signature,
// fixed-point profile and documented curve actions) plus the verification
// suites built on it: involution checks, generator relations, crosscap-slide
// conjugates Y_{i,j}, derivation chains, curve actions, classification and
// blowup identities, and the low-level engine cross-checks.
#pragma once

#include <string>
#include <vector>

#include "nsurf/action.hpp"
#include "nsurf/nec.hpp"
#include "nsurf/notation.hpp"
#include "nsurf/report.hpp"

namespace nsurf {

struct ExpectedAction {
    CurveClass curve;
    CurveClass target;
    bool inverted = false;
};

struct InvolutionRecord {
    std::string label;  // e.g. "4;2,1"
    int genus = 2;
    std::string word_text;
    WordExpr word;
    NecSignature signature;
    FixedPointProfile profile;
    std::vector<ExpectedAction> expected_actions;
};

const std::vector<InvolutionRecord>& catalog();
std::string catalog_text();  // canonical text form (same as data/catalog.txt)
std::vector<InvolutionRecord> parse_catalog(std::string_view text);
const InvolutionRecord& record(const std::string& label);

// Conjugates of the crosscap slide: Y_{i,j} slides the crosscap of mu_i
// along a curve through mu_i and mu_j.  Closed-form words exist for
// j = i+1, j = i-1 and (i,j) = (g,1).
GeneratorWord yij_word(int i, int j, int genus);
bool yij_defined(int i, int j, int genus);

struct VerifyOptions {
    int conj_bound = 16;
    int power_bound = 8;
    bool strict = true;
    int jobs = 1;
    int oracle_len = 8;
    int oracle_insert_cap = 12;
};

// --- check suites; each returns one CheckResult per check -----------------

// involution/<label>, nonidentity/<label>
std::vector<CheckResult> verify_involutions(const VerifyOptions& opt);
// relation/g<g>/...
std::vector<CheckResult> verify_relations(int genus, const VerifyOptions& opt);
// rel-y/g<g>/Y<i>,<j>
std::vector<CheckResult> verify_rel_y(int genus, const VerifyOptions& opt);
// action/<label>/<curve>, action/W-.../...
std::vector<CheckResult> verify_curve_actions(const VerifyOptions& opt);
// derivation/<label>
std::vector<CheckResult> verify_derivations(const VerifyOptions& opt);
// classifier/...
std::vector<CheckResult> verify_classifier(const VerifyOptions& opt);
// blowup/..., blowup-flow/...
std::vector<CheckResult> verify_blowups(const VerifyOptions& opt);
// engine/...
std::vector<CheckResult> verify_engine(const VerifyOptions& opt);

// Everything above.
std::vector<CheckResult> verify_all(const VerifyOptions& opt);

// Checks for one catalog class: involution, non-identity, actions.
std::vector<CheckResult> verify_class(const std::string& label, const VerifyOptions& opt);

}  // namespace nsurf
