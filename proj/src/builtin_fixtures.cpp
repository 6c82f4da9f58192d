#include "wahl/verify.hpp"

namespace wahl::verify {

namespace {

// Shared citation texts for facts the fixtures assert rather than recompute.
const std::string kC1 = "construction notes: the base locus of the defining cubic pencil is finite";
const std::string kC2 = "construction notes: every singular member off the base fiber is a nodal rational curve";
const std::string kC3 = "construction notes: the retained divisor is simple normal crossing away from the two nodes";
const std::string kC5 = "construction notes: the transformed divisor is simple normal crossing on the blown-up surface";
const std::string kC6 = "construction notes: every chosen horizontal curve is a (-1)-curve";
const std::string kC7 = "construction notes: the selected chains map onto the retained divisor";
const std::string kC4A = "construction notes: independence of the component classes shown by a direct argument";
const std::string kA1 = "construction notes: the complement of the retained curves is affine";
const std::string kA1no = "construction notes: the complement of the retained curves is not affine";
const std::string kA2yes = "construction notes: no (-2)-curve survives outside the retained curves";
const std::string kA2no = "construction notes: a (-2)-curve survives outside the retained curves";
const std::string kSC = "construction notes: the chain complement is simply connected by the known surgery argument";
const std::string kAmp73 = "construction notes: a residual (-2)-curve would map to a line through both nodes, which does not exist";
const std::string kGt1 = "construction notes: the displayed pairing is stated to exceed 1; its exact value is 1";

FixtureChain chain(std::vector<int> w, int d, int n, int a) {
    std::vector<Int> weights(w.begin(), w.end());
    return {std::move(weights), classt::ClassTTriple(d, n, a)};
}

Attachment at(std::size_t chain_idx, std::size_t component, int mult = 1) {
    return {chain_idx, component, Int(mult)};
}

MinusOneCurve curve(std::string id, std::vector<Attachment> ats, int num, int den) {
    return {std::move(id), std::move(ats), Rat(num, den), std::nullopt};
}

Flanking flank(std::size_t chain_idx, std::string left_id, std::size_t left_comp,
               std::string right_id, std::size_t right_comp) {
    return {chain_idx, {std::move(left_id), left_comp, 1}, {std::move(right_id), right_comp, 1},
            true};
}

ScWitness witness(std::size_t i, std::size_t j, std::string curve_id) {
    return {i, j, std::move(curve_id), Int(1)};
}

std::vector<AssertedFact> base_facts() {
    return {{"C1", true, kC1}, {"C2", true, kC2}, {"C3", true, kC3},
            {"C5", true, kC5}, {"C6", true, kC6}, {"C7", true, kC7}};
}

GramData an_blocks(std::vector<std::size_t> sizes, int expected_det) {
    return {std::move(sizes), {}, {}, Int(expected_det)};
}

LeeParkFixture example_7_1() {
    LeeParkFixture fx;
    fx.name = "example-7.1";
    fx.excluded_characteristics = {2, 3};
    fx.k_m_squared = -18;
    fx.picard_rank_m = 28;
    fx.target_k_squared = 2;
    fx.chains = {chain({2, 10, 2, 2, 2, 2, 2, 3}, 1, 15, 8),
                 chain({2, 7, 2, 2, 3}, 1, 9, 5),
                 chain({7, 2, 2, 2}, 1, 5, 1),
                 chain({5, 2}, 1, 3, 1),
                 chain({4}, 1, 2, 1)};
    fx.gram = an_blocks({5, 1, 1}, -24);
    fx.minus_one_curves = {curve("E1", {at(1, 2), at(3, 4)}, 17, 15),
                           curve("E2", {at(2, 1), at(4, 1)}, 10, 9),
                           curve("E3", {at(1, 1), at(2, 5)}, 46, 45)};
    fx.flanking = {flank(1, "E3", 1, "bp1", 8),
                   flank(2, "E2", 1, "E3", 5),
                   flank(3, "bp2", 1, "E1", 4),
                   flank(4, "E2", 1, "bp3", 2),
                   flank(5, "bp4", 1, "bp5", 1)};
    fx.asserted_facts = base_facts();
    fx.asserted_facts.push_back({"A1", true, kA1});
    fx.asserted_facts.push_back({"SC", true, kSC});
    return fx;
}

LeeParkFixture example_7_2() {
    LeeParkFixture fx;
    fx.name = "example-7.2";
    fx.excluded_characteristics = {2};
    fx.k_m_squared = -22;
    fx.picard_rank_m = 32;
    fx.target_k_squared = 2;
    fx.chains = {chain({2, 2, 11, 2, 2, 2, 2, 2, 2, 4}, 1, 25, 17),
                 chain({2, 2, 9, 2, 2, 2, 2, 4}, 1, 19, 13),
                 chain({7, 2, 2, 2}, 1, 5, 1),
                 chain({4}, 1, 2, 1),
                 chain({4}, 1, 2, 1)};
    fx.gram = an_blocks({7}, -8);
    fx.minus_one_curves = {curve("E1", {at(1, 3), at(3, 4)}, 29, 25),
                           curve("E2", {at(2, 3), at(2, 1)}, 24, 19),
                           curve("E3", {at(2, 8), at(1, 1)}, 477, 475),
                           curve("E4", {at(1, 10), at(4, 1)}, 59, 50),
                           curve("E5", {at(1, 10), at(5, 1)}, 59, 50),
                           curve("E6", {at(3, 1), at(4, 1)}, 13, 10)};
    fx.flanking = {flank(1, "E3", 1, "E4", 10),
                   flank(2, "bp1", 1, "E3", 8),
                   flank(3, "E6", 1, "E1", 4),
                   flank(4, "E4", 1, "E6", 1),
                   flank(5, "E5", 1, "bp2", 1)};
    fx.sc_witnesses = {witness(1, 2, "E3"), witness(1, 4, "E4"), witness(1, 5, "E5"),
                       witness(3, 4, "E6")};
    fx.asserted_facts = base_facts();
    fx.asserted_facts.push_back({"A1", true, kA1});
    return fx;
}

LeeParkFixture example_7_3() {
    LeeParkFixture fx;
    fx.name = "example-7.3";
    fx.excluded_characteristics = {2};
    fx.k_m_squared = -14;
    fx.picard_rank_m = 24;
    fx.target_k_squared = 1;
    fx.chains = {chain({7, 2, 2, 2}, 1, 5, 1),
                 chain({7, 2, 2, 2}, 1, 5, 1),
                 chain({3, 2, 3}, 3, 2, 1),
                 chain({9, 2, 2, 2, 2, 2}, 1, 7, 1)};
    fx.minus_one_curves = {curve("E1", {at(4, 1), at(1, 4)}, 37, 35),
                           curve("E2", {at(4, 1), at(2, 4)}, 37, 35),
                           curve("E3", {at(3, 1), at(1, 1)}, 13, 10)};
    fx.flanking = {flank(1, "E3", 1, "E1", 4),
                   flank(2, "bp1", 1, "E2", 4),
                   flank(3, "E3", 1, "bp2", 3),
                   flank(4, "E1", 1, "bp3", 6)};
    fx.sc_witnesses = {witness(1, 4, "E1"), witness(2, 4, "E2"), witness(3, 1, "E3")};
    fx.asserted_facts = base_facts();
    fx.asserted_facts.push_back({"C4", true, kC4A});
    fx.asserted_facts.push_back({"A1", false, kA1no});
    fx.asserted_facts.push_back({"ampleness", true, kAmp73});
    return fx;
}

LeeParkFixture example_7_4() {
    LeeParkFixture fx;
    fx.name = "example-7.4";
    fx.excluded_characteristics = {2};
    fx.k_m_squared = -21;
    fx.picard_rank_m = 31;
    fx.target_k_squared = 3;
    fx.chains = {chain({6, 8, 2, 2, 2, 3, 2, 2, 2, 2}, 1, 35, 6),
                 chain({4}, 1, 2, 1),
                 chain({4, 7, 2, 2, 3, 2, 2}, 1, 19, 5),
                 chain({9, 2, 2, 2, 2, 2}, 1, 7, 1)};
    fx.gram = an_blocks({7, 1}, 16);
    fx.minus_one_curves = {curve("E1", {at(3, 2), at(1, 10)}, 744, 665),
                           curve("E2", {at(4, 1), at(3, 7)}, 149, 133),
                           curve("E3", {at(1, 2), at(4, 6)}, 39, 35)};
    fx.flanking = {flank(1, "bp1", 1, "E1", 10),
                   flank(2, "bp2", 1, "bp3", 1),
                   flank(3, "bp4", 1, "E2", 7),
                   flank(4, "E2", 1, "E3", 6)};
    fx.asserted_facts = base_facts();
    fx.asserted_facts.push_back({"A1", true, kA1});
    fx.asserted_facts.push_back({"SC", true, kSC});
    return fx;
}

LeeParkFixture example_7_5() {
    LeeParkFixture fx;
    fx.name = "example-7.5";
    fx.excluded_characteristics = {2};
    fx.k_m_squared = -9;
    fx.picard_rank_m = 19;
    fx.target_k_squared = 4;
    fx.chains = {chain({2, 4, 6, 2, 6, 2, 4, 2, 2, 2, 3, 2, 3}, 1, 252, 145)};
    fx.minus_one_curves = {
        {"E1", {at(1, 1), at(1, 13)}, Rat(1), kGt1}};
    fx.flanking = {flank(1, "bp1", 1, "bp2", 13)};
    fx.asserted_facts = base_facts();
    fx.asserted_facts.push_back({"C4", true, kC4A});
    fx.asserted_facts.push_back({"A2", true, kA2yes});
    fx.asserted_facts.push_back({"SC", true, kSC});
    fx.b_contains_node_blowup = true;
    return fx;
}

LeeParkFixture example_7_6() {
    LeeParkFixture fx;
    fx.name = "example-7.6";
    fx.excluded_characteristics = {3};
    fx.k_m_squared = -7;
    fx.picard_rank_m = 17;
    fx.target_k_squared = 1;
    fx.chains = {chain({4, 5, 3, 2, 2}, 1, 11, 3),
                 chain({5, 2}, 1, 3, 1),
                 chain({3, 3}, 2, 2, 1)};
    fx.gram = an_blocks({2, 2}, 9);
    fx.minus_one_curves = {curve("E1", {at(1, 1), at(2, 2)}, 35, 33),
                           curve("E2", {at(1, 1), at(3, 1)}, 27, 22)};
    fx.flanking = {flank(1, "E1", 1, "bp1", 5),
                   flank(2, "bp2", 1, "E1", 2),
                   flank(3, "E2", 1, "bp3", 2)};
    fx.sc_witnesses = {witness(1, 2, "E1"), witness(1, 3, "E2")};
    fx.asserted_facts = base_facts();
    fx.asserted_facts.push_back({"A2", false, kA2no});
    fx.b_contains_node_blowup = true;
    return fx;
}

LeeParkFixture example_7_7() {
    LeeParkFixture fx;
    fx.name = "example-7.7";
    fx.excluded_characteristics = {3};
    fx.k_m_squared = -17;
    fx.picard_rank_m = 27;
    fx.target_k_squared = 3;
    fx.chains = {chain({2, 7, 7, 2, 2, 3, 2, 2, 2, 2, 3}, 1, 63, 34),
                 chain({5, 3, 2, 2}, 2, 4, 1),
                 chain({9, 2, 2, 2, 2, 2}, 1, 7, 1)};
    fx.gram = an_blocks({8}, 9);
    fx.minus_one_curves = {curve("E1", {at(2, 4), at(3, 1)}, 31, 28),
                           curve("E2", {at(3, 6), at(1, 3)}, 71, 63),
                           curve("E3", {at(1, 1), at(1, 2)}, 29, 21),
                           curve("E4", {at(1, 11), at(2, 1)}, 325, 252)};
    fx.flanking = {flank(1, "bp1", 1, "E4", 11),
                   flank(2, "E4", 1, "E1", 4),
                   flank(3, "E1", 1, "E2", 6)};
    fx.sc_witnesses = {witness(2, 3, "E1"), witness(1, 2, "E4")};
    fx.asserted_facts = base_facts();
    fx.asserted_facts.push_back({"A2", true, kA2yes});
    fx.b_contains_node_blowup = true;
    return fx;
}

LeeParkFixture example_7_8() {
    LeeParkFixture fx;
    fx.name = "example-7.8";
    fx.excluded_characteristics = {3};
    fx.k_m_squared = -10;
    fx.picard_rank_m = 20;
    fx.target_k_squared = 2;
    fx.chains = {chain({6, 5, 2, 3, 2, 3, 2, 2, 2, 2}, 3, 23, 4),
                 chain({7, 2, 2, 2}, 1, 5, 1)};
    fx.minus_one_curves = {curve("E1", {at(1, 1), at(2, 4)}, 118, 115)};
    fx.flanking = {flank(1, "E1", 1, "bp1", 10),
                   flank(2, "bp2", 1, "E1", 4)};
    fx.sc_witnesses = {witness(1, 2, "E1")};
    fx.asserted_facts = base_facts();
    fx.asserted_facts.push_back({"C4", true, kC4A});
    fx.asserted_facts.push_back({"A2", false, kA2no});
    fx.b_contains_node_blowup = true;
    return fx;
}

} // namespace

const std::vector<LeeParkFixture>& builtin_fixtures() {
    static const std::vector<LeeParkFixture> all = {
        example_7_1(), example_7_2(), example_7_3(), example_7_4(),
        example_7_5(), example_7_6(), example_7_7(), example_7_8()};
    return all;
}

} // namespace wahl::verify
