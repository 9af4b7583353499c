#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "gordian/diagram.hpp"
#include "gordian/invariants.hpp"
#include "gordian/moves.hpp"

namespace gordian {

class ContractError : public std::runtime_error {
public:
    ContractError(const std::string& contract, const std::string& what)
        : std::runtime_error(contract + ": " + what), contract_(contract) {}
    const std::string& contract() const { return contract_; }

private:
    std::string contract_;
};

// Evidence that the crossing changes at C and B reach K_0 and K_1.
struct Verification {
    InvariantSuite k_prime;
    InvariantSuite at_c;
    InvariantSuite k0;
    InvariantSuite at_b;
    InvariantSuite k1;
    bool k0_ok = false;
    bool k1_ok = false;
    // Distance zero is excluded when an invariant of K' differs.
    bool k0_distinct = false;
    bool k1_distinct = false;
};

struct ConstructionReport {
    int solved_k = 0;
    std::int64_t achieved_a2 = 0;
    int lk_intercept = 0;
    int lk_slope = 0;
    Verification verification;

    std::string to_json() const;
};

struct Construction {
    MarkedDiagram k_prime;
    ConstructionReport report;
};

// K_1: crossing changes at both marks.
Diagram derive_k1(const MarkedDiagram& m);

// Linking number of the two-component link obtained by smoothing C in K'(k).
int lk_of(const MarkedDiagram& m, int k);

// Builds K' at Gordian distance one from K_0 = m.diagram and from K_1 with
// a2(K') = target. Throws ContractError naming the contract that failed.
// With A positive, C is negative and a2(K') = a2(K_0) - lk; with A negative
// the sign of the lk term flips.
Construction construct_between(const MarkedDiagram& m, std::int64_t target);

// A site of order n next to marks A and B: two strands at the marks plus
// n-2 further edges met by continuing the same path through the faces.
MoveSite prepare_cn_site(const MarkedDiagram& m, int n);

struct PermutedSite {
    Diagram diagram;
    MoveSite site;
    int transpositions = 0;
};

// Reorders the site strands 2..n+1 by transpositions until the entry
// permutation equals target.
PermutedSite realize_permutation(const Diagram& d, const MoveSite& site, const Permutation& target);

struct CnDeltaRecord {
    int n = 0;
    Permutation sigma;
    int sign_product = 1;
    std::optional<std::int64_t> delta;  // v_n after minus v_n before, for n = 2, 3
};

// Applies the special C_n-move and measures the jump of v_n (a2 for n = 2,
// v3 for n = 3). Throws ContractError if an invariant of lower order moves.
CnDeltaRecord measure_cn_delta(const Diagram& d, const MoveSite& site, const SignVector& signs);

}  // namespace gordian
