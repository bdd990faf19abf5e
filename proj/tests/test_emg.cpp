#include "doctest.h"

#include <algorithm>
#include <string>

#include "mglab/bundled.hpp"
#include "mglab/emg.hpp"
#include "mglab/lexicon_parser.hpp"

using namespace mglab;

namespace {

bool trace_has(const EmgResult& r, const std::string& needle) {
    return std::any_of(r.trace.begin(), r.trace.end(), [&](const std::string& line) {
        return line.find(needle) != std::string::npos;
    });
}

/// A transitive pattern with distinguishable argument categories, so the two
/// expectation slots of the head cannot be confused: r takes a Z complement
/// and an A specifier.
Lexicon prehead_lexicon() {
    return parse_lexicon(
        "inventory: Z A S\n"
        "start: S\n"
        "x :: A\n"
        "z :: Z\n"
        "r :: =Z =A S\n");
}

Lexicon adjunct_lexicon() {
    return parse_lexicon(
        "inventory: D V Adv\n"
        "start: V\n"
        "alice :: D\n"
        "bill :: D\n"
        "scolds :: =D =D V\n"
        "damn :: Adv\n"
        "quickly :: Adv\n"
        "emg:\n"
        "damn adjoin: D left\n"
        "quickly adjoin: V right\n");
}

} // namespace

TEST_CASE("the transitive clause is integrated in reading order") {
    Lexicon lex = load_bundled_lexicon("scolds");
    EmgResult r = emg_parse(lex, {"Alice", "scolds", "Bill"});
    REQUIRE(r.success);
    CHECK(r.consumed == 3);
    CHECK(r.peak_memory == 0); // subject never waits in memory

    // Subject first, then the verb takes the built structure as its argument.
    REQUIRE(r.trace.size() == 3);
    CHECK(r.trace[0].find("Alice") != std::string::npos);
    CHECK(r.trace[1].find("scolds") != std::string::npos);
    CHECK(r.trace[2].find("Bill") != std::string::npos);

    CHECK(r.tree.label == "scolds");
    REQUIRE(r.tree.children.size() == 2);
    CHECK(r.tree.children[0].label == "Alice");
    CHECK(r.tree.children[1].label == "Bill");
}

TEST_CASE("no reordering of the transitive clause is accepted") {
    Lexicon lex = load_bundled_lexicon("scolds");
    for (const Phon& bad : {Phon{"Alice", "Bill", "scolds"}, Phon{"scolds", "Alice", "Bill"},
                            Phon{"scolds", "Bill", "Alice"}, Phon{"Bill", "Alice", "scolds"},
                            Phon{"Alice", "scolds"}, Phon{"Alice", "scolds", "Bill", "Bill"}}) {
        EmgResult r = emg_parse(lex, bad);
        CHECK_FALSE(r.success);
        CHECK(r.failure == EmgFailure::NoParse);
    }
}

TEST_CASE("step operations guard their preconditions") {
    Lexicon lex = load_bundled_lexicon("scolds");
    const LexicalItem& alice = lex.items[0];
    const LexicalItem& scolds = lex.items[2];

    EmgState st;
    CHECK_FALSE(emg_merge_complement(st, alice)); // nothing expects anything yet
    CHECK_FALSE(emg_merge_mirror(st, scolds));    // no completed structure to wrap
    REQUIRE(emg_merge_root(st, alice));
    CHECK(st.main.complete_projection());
    CHECK_FALSE(emg_merge_root(st, alice)); // already rooted

    REQUIRE(emg_merge_mirror(st, scolds));
    CHECK(st.main.exps.size() == 1); // the object slot remains
    CHECK_FALSE(st.main.exps.front().from_memory);

    LexicalItem bill = lex.items[1];
    REQUIRE(emg_merge_complement(st, bill));
    CHECK(st.main.complete_projection());
    CHECK(emg_accepts(st, "V"));
}

TEST_CASE("mirror needs a second selector ending on the built category") {
    Lexicon lex = parse_lexicon(
        "inventory: D V\n"
        "start: V\n"
        "alice :: D\n"
        "runs :: =D V\n");
    EmgState st;
    REQUIRE(emg_merge_root(st, lex.items[0]));
    CHECK_FALSE(emg_merge_mirror(st, lex.items[1])); // one selector is complement-only
}

TEST_CASE("a head wraps pre-head material instead of borrowing from memory") {
    Lexicon lex = prehead_lexicon();

    EmgResult good = emg_parse(lex, {"x", "r", "z"});
    REQUIRE(good.success);
    CHECK(good.peak_memory == 0); // the built x satisfies =A at the head's arrival
    CHECK_FALSE(trace_has(good, "STORE"));
    CHECK(trace_has(good, "CPL r"));

    // Head first: the =A slot then predates any storing of x, and filling a
    // slot from a younger store would reorder the input.
    CHECK_FALSE(emg_parse(lex, {"r", "x", "z"}).success);
    CHECK_FALSE(emg_parse(lex, {"r", "z", "x"}).success);
    CHECK_FALSE(emg_parse(lex, {"x", "z", "r"}).success);
}

TEST_CASE("discharge serves only the most recent memory entry") {
    Lexicon lex = prehead_lexicon();
    EmgState st;
    REQUIRE(emg_move_store(st, lex.items[0])); // x :: A
    REQUIRE(emg_merge_root(st, lex.items[2])); // r :: =Z =A S
    CHECK_FALSE(emg_move_discharge(st));       // front expectation is =Z, not =A

    REQUIRE(emg_move_store(st, lex.items[1])); // z :: Z on top of x
    CHECK(st.peak_memory == 2);
    // x could fill =A once =Z is satisfied, but it is buried under z; and z,
    // being stored material, may not serve the input-facing =Z slot.
    CHECK_FALSE(emg_move_discharge(st));
}

TEST_CASE("a licensee carrier may discharge into an input-facing slot") {
    Lexicon lex = load_bundled_lexicon("wh_demo");
    EmgResult r = emg_parse(lex, {"what", "alice", "describes"});
    REQUIRE(r.success);
    CHECK(r.peak_memory == 1);
    CHECK(trace_has(r, "STORE what"));

    // Base position first (as a gap), landing site second.
    std::size_t discharges = 0;
    for (const std::string& line : r.trace)
        if (line.find("DISCH") == 0)
            ++discharges;
    CHECK(discharges == 2);

    CHECK_FALSE(emg_parse(lex, {"alice", "describes", "what"}).success);
    CHECK_FALSE(emg_parse(lex, {"describes", "alice", "what"}).success);
    CHECK(emg_parse(lex, {"alice", "describes", "alice"}).success);
    CHECK(emg_parse(lex, {"what", "describes", "alice"}).success);
}

TEST_CASE("silent heads cost allowance") {
    Lexicon lex = load_bundled_lexicon("wh_demo");
    EmgConfig tight;
    tight.silent_allowance = 0; // the clause head is silent, so nothing parses
    CHECK_FALSE(emg_parse(lex, {"what", "alice", "describes"}, tight).success);
    CHECK_FALSE(emg_parse(lex, {"alice", "describes", "alice"}, tight).success);

    Lexicon nesting = load_bundled_lexicon("nesting");
    EmgConfig two;
    two.silent_allowance = 2; // center-embedding at depth 1 needs both silents
    CHECK(emg_parse(nesting, nesting_sentence('b', 1), two).success);
    two.silent_allowance = 1;
    CHECK_FALSE(emg_parse(nesting, nesting_sentence('b', 1), two).success);
}

TEST_CASE("adjuncts attach without consuming expectations") {
    Lexicon lex = adjunct_lexicon();

    EmgResult right = emg_parse(lex, {"alice", "scolds", "bill", "quickly"});
    REQUIRE(right.success);
    REQUIRE(right.tree.children.size() == 3);
    CHECK(right.tree.children[2].label == "quickly");

    EmgResult left = emg_parse(lex, {"damn", "alice", "scolds", "bill"});
    REQUIRE(left.success);
    CHECK(trace_has(left, "held"));
    REQUIRE_FALSE(left.tree.children.empty());
    const EmgNode& alice = left.tree.children[0];
    REQUIRE(alice.children.size() == 1);
    CHECK(alice.children[0].label == "damn");

    // A held adjunct that never finds its host strands the parse.
    CHECK_FALSE(emg_parse(lex, {"alice", "scolds", "bill", "damn"}).success);
    CHECK_FALSE(emg_parse(lex, {"quickly", "alice", "scolds", "bill"}).success);
}

TEST_CASE("failures are classified") {
    Lexicon lex = load_bundled_lexicon("scolds");

    EmgResult unknown = emg_parse(lex, {"Alice", "greets", "Bill"});
    CHECK(unknown.failure == EmgFailure::UnknownToken);
    CHECK(unknown.stuck_at == 1);

    EmgResult stuck = emg_parse(lex, {"Alice", "Bill", "scolds"});
    CHECK(stuck.failure == EmgFailure::NoParse);
    CHECK(stuck.stuck_at >= 1); // got past the subject before dying

    Lexicon nesting = load_bundled_lexicon("nesting");
    EmgConfig starved;
    starved.backtrack_budget = 3;
    EmgResult budget = emg_parse(nesting, nesting_sentence('b', 2), starved);
    CHECK_FALSE(budget.success);
    CHECK(budget.failure == EmgFailure::Budget);
}

TEST_CASE("successors expose the one-token window") {
    Lexicon lex = load_bundled_lexicon("scolds");
    EmgConfig cfg;

    std::string alice = "Alice";
    std::vector<EmgState> first = emg_successors(EmgState{}, &alice, lex, cfg);
    REQUIRE(first.size() == 2); // integrate as the root, or store for later
    for (const EmgState& st : first)
        CHECK(st.consumed == 1);

    // Without input, only bookkeeping actions remain; a fresh state has none.
    CHECK(emg_successors(EmgState{}, nullptr, lex, cfg).empty());

    std::string scolds = "scolds";
    std::vector<EmgState> second = emg_successors(first[0], &scolds, lex, cfg);
    REQUIRE_FALSE(second.empty());
    CHECK(std::all_of(second.begin(), second.end(),
                      [](const EmgState& st) { return st.consumed == 2; }));
}

TEST_CASE("trace recording can be switched off for bulk runs") {
    Lexicon lex = load_bundled_lexicon("scolds");
    EmgConfig quiet;
    quiet.record_trace = false;
    EmgResult r = emg_parse(lex, {"Alice", "scolds", "Bill"}, quiet);
    REQUIRE(r.success);
    CHECK(r.trace.empty());
    CHECK(r.peak_memory == 0);
}
