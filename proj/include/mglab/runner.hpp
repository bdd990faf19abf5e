#pragma once

#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "mglab/emg.hpp"
#include "mglab/enumerate.hpp"
#include "mglab/lexicon.hpp"
#include "mglab/suite.hpp"

namespace mglab {

enum class Engine { Classic, Emg };

/// Per-sentence outcome.  Indeterminate means a resource bound ended the
/// search before a verdict; it never counts as correct.
enum class Judgment { Accept, Reject, Indeterminate };

/// Bounds shared by both engines plus the engine selector.  A suite's own
/// allowance header, when present, overrides `allowance` (it is calibrated
/// to the silent heads the suite's sentences need).
struct RunConfig {
    Engine engine = Engine::Classic;
    std::size_t allowance = 3;             // silent-leaf slack per sentence
    std::size_t max_steps = std::numeric_limits<std::size_t>::max();
    std::size_t state_cap = 500000;        // classic enumeration guard
    std::size_t backtrack_budget = 100000; // incremental search guard
};

Judgment judge_sentence(const Lexicon& lex, const Phon& sentence, const RunConfig& cfg);

struct ItemOutcome {
    std::string id;
    bool expect_good = true;
    Judgment judgment = Judgment::Reject;
    bool correct = false;          // meaningful for unpaired items only
    std::size_t peak_memory = 0;   // incremental engine, successful runs
    std::vector<std::string> trace;
};

enum class PairVerdict { Correct, Wrong, Tie, Indeterminate };

struct PairOutcome {
    std::string id;
    Judgment good = Judgment::Reject;
    Judgment bad = Judgment::Reject;
    PairVerdict verdict = PairVerdict::Wrong;
};

struct SuiteReport {
    std::string suite;
    std::string phenomenon;
    std::string lexicon;
    Engine engine = Engine::Classic;
    RunConfig config;                 // effective bounds, echoed in reports
    std::vector<ItemOutcome> items;   // suite order
    std::vector<PairOutcome> pairs;   // suite order
    std::size_t units = 0;
    std::size_t correct_units = 0;
    std::size_t indeterminate_units = 0;
    double accuracy = 0.0;            // meaningful only when units > 0
};

/// Scores every item, then pairs under the two-sided rule: a pair is correct
/// iff its good half is derivable and its bad half is not; deriving both or
/// neither is a tie, counted against the grammar.  Unpaired items score on
/// their own judgment.  Deterministic for fixed inputs and bounds.
SuiteReport run_suite(const Lexicon& lex, const TestSuite& suite, const RunConfig& cfg);

std::string to_string(Engine engine);
std::string to_string(Judgment judgment);
std::string to_string(PairVerdict verdict);

/// Fixed-layout text rendering; byte-identical across runs on equal reports.
std::string report_text(const SuiteReport& report);

} // namespace mglab
