#include "doctest.h"

#include <algorithm>
#include <set>

#include "mglab/bundled.hpp"
#include "mglab/enumerate.hpp"

using namespace mglab;

namespace {

std::set<Phon> yields_of(const std::vector<DerivedSentence>& fs) {
    std::set<Phon> out;
    for (const DerivedSentence& f : fs)
        out.insert(f.yield);
    return out;
}

} // namespace

TEST_CASE("the three-item grammar derives exactly the transitive clauses") {
    Lexicon lex = load_bundled_lexicon("scolds");
    std::set<Phon> expected = {
        {"Alice", "scolds", "Alice"},
        {"Alice", "scolds", "Bill"},
        {"Bill", "scolds", "Alice"},
        {"Bill", "scolds", "Bill"},
    };

    EnumerationConfig cfg;
    cfg.max_leaves = 3;
    std::vector<DerivedSentence> found = derive_all(lex, cfg);
    CHECK(yields_of(found) == expected);

    // No larger derivation completes: the space dies out, it is not truncated.
    cfg.max_leaves = 8;
    CHECK(yields_of(derive_all(lex, cfg)) == expected);

    for (const DerivedSentence& f : found) {
        Replay r = replay(f.derivation, lex);
        CHECK(linearize(r.final_expression(), lex.start) == f.yield);
        CHECK(count_steps(f.derivation, StepCountMode::Batch) == 3);
        CHECK(count_steps(f.derivation, StepCountMode::PerItem) == 5);
    }
}

TEST_CASE("derivations come out ordered and replayable on the movement grammar") {
    Lexicon lex = load_bundled_lexicon("wh_demo");
    EnumerationConfig cfg;
    cfg.max_leaves = 5;
    std::vector<DerivedSentence> found = derive_all(lex, cfg);

    std::set<Phon> expected = {
        {"alice", "describes", "alice"},
        {"what", "alice", "describes"},
        {"what", "describes", "alice"},
    };
    CHECK(yields_of(found) == expected);
    CHECK(std::is_sorted(found.begin(), found.end(),
                         [](const DerivedSentence& a, const DerivedSentence& b) {
                             return a.yield < b.yield ||
                                    (a.yield == b.yield &&
                                     derivation_key(a.derivation) < derivation_key(b.derivation));
                         }));
    for (const DerivedSentence& f : found)
        CHECK(linearize(replay(f.derivation, lex).final_expression(), lex.start) == f.yield);
}

TEST_CASE("recognition agrees with the sentence and rejects the rest") {
    Lexicon lex = load_bundled_lexicon("scolds");

    RecognitionResult yes = recognize(lex, {"Alice", "scolds", "Bill"});
    REQUIRE(yes.accepted);
    REQUIRE(yes.witnesses.size() == 1);
    Replay r = replay(yes.witnesses[0], lex);
    CHECK(linearize(r.final_expression(), "V") == Phon{"Alice", "scolds", "Bill"});

    CHECK_FALSE(recognize(lex, {"Alice", "scolds"}).accepted);
    CHECK_FALSE(recognize(lex, {"Alice", "Bill", "scolds"}).accepted);
    CHECK_FALSE(recognize(lex, {"scolds", "Alice", "Bill"}).accepted);
    CHECK_FALSE(recognize(lex, {"Alice", "scolds", "Bill", "Bill"}).accepted);

    RecognitionResult unknown = recognize(lex, {"Alice", "greets", "Bill"});
    CHECK_FALSE(unknown.accepted);
    CHECK(unknown.diagnostic == "token 2 'greets' is not pronounced by any entry");
}

TEST_CASE("recognition finds silent heads within the allowance") {
    Lexicon lex = load_bundled_lexicon("wh_demo");
    CHECK(recognize(lex, {"what", "alice", "describes"}).accepted);
    CHECK(recognize(lex, {"alice", "describes", "alice"}).accepted);
    CHECK_FALSE(recognize(lex, {"alice", "describes", "what"}).accepted);
    CHECK_FALSE(recognize(lex, {"what", "describes"}).accepted);

    RecognizeConfig strict;
    strict.allowance = 0; // the complementizer no longer fits
    CHECK_FALSE(recognize(lex, {"what", "alice", "describes"}, strict).accepted);
}

TEST_CASE("the exploration guard trips instead of running away") {
    Lexicon lex = load_bundled_lexicon("agreement");
    RecognizeConfig cfg;
    cfg.state_cap = 5; // pruning keeps this sentence well under 40 states
    CHECK_THROWS_AS(
        recognize(lex, {"the", "author", "that", "the", "senators", "hurt", "is", "good"}, cfg),
        BoundExceeded);

    EnumerationConfig ecfg;
    ecfg.max_leaves = 10;
    ecfg.state_cap = 40;
    CHECK_THROWS_AS(derive_all(lex, ecfg), BoundExceeded);
}

TEST_CASE("a step budget excludes bushier derivations") {
    Lexicon lex = load_bundled_lexicon("scolds");
    EnumerationConfig cfg;
    cfg.max_leaves = 3;
    cfg.max_steps = 4; // 3 selections + 2 merges need 5
    CHECK(derive_all(lex, cfg).empty());
    cfg.max_steps = 5;
    CHECK(derive_all(lex, cfg).size() == 4);
}

TEST_CASE("feature checking is what stops overgeneration") {
    Lexicon lex = load_bundled_lexicon("scolds");

    EnumerationConfig cfg;
    cfg.max_leaves = 3;
    std::set<Phon> checked = yields_of(derive_all(lex, cfg));
    std::set<Phon> anything = unconstrained_merge_demo(lex, 3);

    CHECK(std::includes(anything.begin(), anything.end(), checked.begin(), checked.end()));
    CHECK(anything.size() > checked.size());

    // The four orders a free tree-builder predicts for the transitive clause,
    // none of them grammatical.
    CHECK(anything.count({"scolds", "Alice", "Bill"}));
    CHECK(anything.count({"scolds", "Bill", "Alice"}));
    CHECK(anything.count({"Alice", "Bill", "scolds"}));
    CHECK(anything.count({"Bill", "Alice", "scolds"}));
    for (const Phon& bad : {Phon{"scolds", "Alice", "Bill"}, Phon{"Alice", "Bill", "scolds"}})
        CHECK_FALSE(checked.count(bad));
}
