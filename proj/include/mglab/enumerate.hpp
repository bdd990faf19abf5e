#pragma once

#include <cstddef>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "mglab/derivation.hpp"
#include "mglab/lexicon.hpp"

namespace mglab {

/// Thrown when enumeration would exceed the configured exploration guard.
struct BoundExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EnumerationConfig {
    std::size_t max_leaves = 6;
    std::size_t max_steps = std::numeric_limits<std::size_t>::max();
    std::size_t state_cap = 500000;
};

struct DerivedSentence {
    Phon yield;
    Derivation derivation;
};

/// Every complete derivation using at most max_leaves selections and
/// max_steps total steps, ordered by yield and then by derivation key.  Items
/// may be selected any number of times; an empty lexicon yields nothing.
std::vector<DerivedSentence> derive_all(const Lexicon& lex, const EnumerationConfig& cfg = {});

struct RecognizeConfig {
    /// Extra silent leaves allowed beyond the sentence length.
    std::size_t allowance = 3;
    std::size_t max_steps = std::numeric_limits<std::size_t>::max();
    std::size_t state_cap = 500000;
};

struct RecognitionResult {
    bool accepted = false;
    std::vector<Derivation> witnesses; // all derivations of the sentence, ordered
    std::string diagnostic;            // set when rejected without search
};

/// Membership in the derivable string set, decided by bounded enumeration
/// with pruning that never drops a derivation of the sentence itself.
RecognitionResult recognize(const Lexicon& lex, const Phon& sentence, const RecognizeConfig& cfg = {});

/// What merge alone licenses once feature checking is switched off: every
/// bracketing of up to max_leaves entries, linearized in both orders at each
/// node.  Returns the set of distinct yields; silent entries contribute
/// nothing to a yield.  Demonstration only.
std::set<Phon> unconstrained_merge_demo(const Lexicon& lex, std::size_t max_leaves,
                                        std::size_t state_cap = 500000);

} // namespace mglab
