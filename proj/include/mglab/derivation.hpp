#pragma once

#include <cstddef>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mglab/expression.hpp"
#include "mglab/lexicon.hpp"

namespace mglab {

enum class StepKind { Select, Merge, Move };

/// One step of a derivation.  Merge consumes the results of two earlier steps
/// (head first), Move the result of one; every intermediate result is
/// consumed exactly once.
struct DerivationStep {
    StepKind kind = StepKind::Select;
    LexicalItem item;        // Select only
    std::size_t head = 0;    // Merge/Move: step index of the operand
    std::size_t arg = 0;     // Merge: step index of the argument

    bool operator==(const DerivationStep&) const = default;
};

struct Derivation {
    std::vector<DerivationStep> steps;

    bool operator==(const Derivation&) const = default;
};

/// Compact one-line key, stable across runs; used for deterministic ordering.
std::string derivation_key(const Derivation& d);

enum class StepCountMode {
    PerItem, // every step counts
    Batch,   // a run of consecutive Selects counts once
};

int count_steps(const Derivation& d, StepCountMode mode);

/// Result of executing a derivation against a lexicon.  Tree nodes carry
/// consecutive ids (creation order); `pairings` records, for every Merge and
/// every landing Move, the two root nodes that were put together, in both
/// directions.
struct Replay {
    std::string start;
    std::vector<Expression> results;               // one per step
    std::vector<std::string> trace_lines;          // numbered, human-readable
    std::vector<std::pair<long, long>> pairings;   // (x, y): x was paired with y
    std::unordered_map<long, TreePtr> nodes;       // id → node

    const Expression& final_expression() const { return results.back(); }
    std::string trace_text() const;
    /// Ids of leaves whose label equals the given phon text.
    std::vector<long> leaves_labeled(const std::string& label) const;
};

/// Executes the steps in order.  Throws DerivationError when a step reference
/// is out of range, reuses a consumed result, or the final state leaves more
/// than one live expression; selected items must exist in the lexicon.
Replay replay(const Derivation& d, const Lexicon& lex);

/// Derivational command relation: x commands y iff some Merge or Move paired
/// x with a constituent that contains y.  Node ids are the ones assigned by
/// replay; unknown ids throw DerivationError.
bool c_commands(const Replay& r, long x, long y);

/// All node ids commanded by x, sorted.
std::vector<long> commanded_by(const Replay& r, long x);

} // namespace mglab
