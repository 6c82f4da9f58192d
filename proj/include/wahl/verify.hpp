#pragma once

#include "wahl/jio.hpp"
#include "wahl/surface.hpp"

#include <optional>
#include <string>
#include <vector>

namespace wahl::verify {

// A fixture is a declarative description of one construction: the blown-up
// rational surface M, the disjoint class-T chains D selected on it, the
// (-1)-curves whose discrepancy pairings matter, and the facts the source
// establishes by geometry that this verifier cannot recompute (those enter
// as "asserted" with a citation, never silently).
//
// Chain and component indices are 1-based and follow the chain's written
// orientation; the R rows of the invariant tables fix that orientation.

struct Attachment {
    std::size_t chain;
    std::size_t component;
    Int multiplicity;
};

struct MinusOneCurve {
    std::string id;
    std::vector<Attachment> attachments;
    std::optional<Rat> expected_delta;           // the displayed exact value
    std::optional<std::string> gt_one_assertion; // citation when the source
                                                 // asserts > 1 and the exact
                                                 // value does not exceed 1
};

struct Flank {
    std::string id;
    std::size_t component;
    Int multiplicity = 1;
};

struct Flanking {
    std::size_t chain;
    Flank left;   // meets component 1
    Flank right;  // meets component l
    bool in_b_plus = true;
};

struct FixtureChain {
    std::vector<Int> weights;
    classt::ClassTTriple expected;
};

/// Intersection data for the C4 determinant test: either named A_n blocks
/// of (-2)-curves or an explicit symmetric matrix.
struct GramData {
    std::vector<std::size_t> an_blocks;
    std::vector<Int> diag;
    std::vector<std::tuple<std::size_t, std::size_t, Int>> off;  // 1-based pairs
    std::optional<Int> expected_determinant;

    bool is_blocks() const { return !an_blocks.empty(); }
};

struct ScWitness {
    std::size_t chain_i;
    std::size_t chain_j;
    std::string curve;
    std::optional<Int> expected_gcd;
};

struct AssertedFact {
    std::string condition;  // "C1".."C7", "A1", "A2", "SC", "ampleness"
    bool holds;
    std::string citation;
};

struct OutsideCurve {
    std::string id;
    Int self_int;
};

struct LeeParkFixture {
    std::string name;
    std::vector<Int> excluded_characteristics;
    Int k_m_squared;
    Int picard_rank_m;
    Int target_k_squared;
    std::vector<FixtureChain> chains;
    std::vector<MinusOneCurve> minus_one_curves;
    std::vector<Flanking> flanking;
    std::optional<GramData> gram;
    std::vector<ScWitness> sc_witnesses;
    std::vector<AssertedFact> asserted_facts;
    std::vector<OutsideCurve> exceptional_outside;
    bool b_contains_node_blowup = false;

    const AssertedFact* fact(std::string_view condition) const;
};

enum class Status { Pass, Fail, Asserted, NotCheckable };

std::string to_string(Status s);

struct ConditionEntry {
    std::string id;
    Status status;
    std::string detail;
    jio::Value data;  // structured witnesses: exact rationals, determinants, gcds
    std::optional<std::string> citation;
    std::optional<std::string> note;
};

struct VerificationReport {
    std::string fixture;
    Int characteristic;
    std::vector<ConditionEntry> entries;
    std::string verdict;  // "pass" | "fail" | "incomplete"
    std::optional<Int> k_x_squared;
    std::vector<Int> deltas;  // per chain, when computable

    bool passed() const { return verdict == "pass"; }
};

/// C4 via the determinant test: pass iff det(G_i.G_j) is nonzero mod p
/// (nonzero in characteristic 0).  Sufficient only; fixtures whose source
/// proves C4 by a bespoke argument enter it as asserted.
ConditionEntry check_C4(const LeeParkFixture& fx, const Int& p);
/// Every chain consists of weights >= 2 and contracts to the expected
/// class-T singularity.
ConditionEntry check_C8(const LeeParkFixture& fx);
/// K_M^2 + sum of the chain deltas equals the target K_X^2.
ConditionEntry check_C9(const LeeParkFixture& fx);
/// Delta.Gamma > 1 for every listed (-1)-curve, exact; also evaluates the
/// three sufficient conditions and reports which path settled each curve.
ConditionEntry check_C10(const LeeParkFixture& fx);
/// Every chain carries declared flanking curves meeting exactly the two end
/// components once each, inside B+.
ConditionEntry check_C11(const LeeParkFixture& fx);
/// Fails if any declared (-2)-curve lies outside the chains; combines the
/// result with the asserted A1/A2 facts into an ampleness verdict.
ConditionEntry check_A3_and_ampleness(const LeeParkFixture& fx);
/// The gcd sufficient criterion: every chain is joined to another by a
/// declared curve meeting one end component of each, once, with
/// gcd(d_i n_i, d_j n_j) = 1.
ConditionEntry check_simply_connected_sufficient(const LeeParkFixture& fx);

/// Runs every checker and folds the asserted facts, in the fixed order
/// C1..C3, C4, C5..C7, C8, C9, C10, C11, A3/ampleness, SC, consistency.
/// p must be 0 or a prime outside the fixture's excluded characteristics.
VerificationReport verify_all(const LeeParkFixture& fx, const Int& p);

const std::vector<LeeParkFixture>& builtin_fixtures();
const LeeParkFixture& builtin_fixture(std::string_view name);
/// Smallest characteristic (prime, or 0 if all primes excluded) permitted
/// by the fixture; the default map used by `examples`.
Int default_characteristic(const LeeParkFixture& fx);

} // namespace wahl::verify
