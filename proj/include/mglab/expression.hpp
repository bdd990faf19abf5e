#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "mglab/lexicon.hpp"

namespace mglab {

/// Display-tree node.  Internal nodes are labeled by the head that projected
/// them; traces mark the base position of a chain that re-merges higher up.
/// Ids are assigned only when a derivation is replayed (see derivation.hpp);
/// free-standing operations leave them at -1.
struct TreeNode {
    long id = -1;
    std::string label;   // head phon text, or "ε" for silent heads
    bool trace = false;  // base-position placeholder of an extracted chain
    long trace_of = -1;  // id of the extracted chain's root (when trace)
    std::vector<std::shared_ptr<const TreeNode>> children; // in linear order

    bool leaf() const { return children.empty(); }
};

using TreePtr = std::shared_ptr<const TreeNode>;

/// "[scolds [Alice] [scolds [scolds] [Bill]]]"; traces render as [t].
std::string bracket_string(const TreePtr& tree);
/// Set-pair rendering: "{scolds {Alice, scolds {scolds, Bill}}}".
std::string set_pair_string(const TreePtr& tree);

/// One chain: pronounced material plus the features still to be checked.
/// The main chain of an expression drives merge and move; mover chains wait
/// for a licensor.
struct Chain {
    Phon yield;
    std::vector<Feature> features;
    TreePtr tree;
    std::size_t checked = 0; // features already consumed on this chain's head

    bool first_combination() const { return checked == 0; }
    bool operator==(const Chain& other) const {
        return yield == other.yield && features == other.features && checked == other.checked;
    }
};

struct Expression {
    Chain main;
    std::vector<Chain> movers;

    bool operator==(const Expression& other) const {
        return main == other.main && movers == other.movers;
    }
};

std::string to_string(const Expression& e); // "⟨yield⟩ :: features [mover: ...]*"

enum class DerivationFault {
    FeatureMismatch,
    SmcViolation,
    InputComplete,
    NoMatchingMover,
    NotComplete,
    InvalidStep,
};

struct DerivationError : std::runtime_error {
    DerivationError(DerivationFault fault, const std::string& what)
        : std::runtime_error(what), fault(fault) {}
    DerivationFault fault;
};

/// Lifts a lexical entry into a one-chain expression.  When `next_id` is
/// given, freshly created tree nodes take consecutive ids from it (replay
/// uses this to give every node a stable address).
Expression select(const LexicalItem& item, long* next_id = nullptr);

/// Feature-checked binary combination.  head's first feature must be a
/// selector, arg's first feature the matching category; both are deleted.
/// Word order follows the argument-shell convention: a SEL_R argument lands
/// right of the head on the head's first combination and left on every later
/// one; SEL_L lands left on the first combination.  An argument with leftover
/// features becomes a mover (its yield held out of the string, a trace left
/// in the tree).  Throws DerivationError on mismatch, on an SMC collision
/// (two movers waiting on the same licensee symbol), or when either input is
/// already complete for `start`.
Expression merge(const Expression& head, const Expression& arg, const std::string& start,
                 long* next_id = nullptr);

/// Checks the main chain's leading licensor against the unique mover whose
/// leading feature is the matching licensee.  A fully checked mover
/// discharges its yield to the left of the main yield; otherwise it stays a
/// mover.  Throws when the licensor has no matching mover.
Expression move(const Expression& e, long* next_id = nullptr);

/// Index of the unique mover whose leading licensee answers `probe`
/// (a LIC_PLUS feature), or the mover count when none does.
std::size_t matching_mover(const Expression& e, const Feature& probe);

/// No pending movers and exactly the start category left.
bool is_complete(const Expression& e, const std::string& start);

/// Yield of a complete expression; throws DerivationError otherwise.
Phon linearize(const Expression& e, const std::string& start);

} // namespace mglab
