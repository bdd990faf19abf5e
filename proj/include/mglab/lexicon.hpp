#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mglab/feature.hpp"

namespace mglab {

/// Pronounced material of an entry as a token sequence.  Empty for silent
/// heads (spelled "ε" in lexicon files).
using Phon = std::vector<std::string>;

std::string phon_text(const Phon& phon); // tokens joined by single spaces; "ε" when empty

/// One lexical entry.  The feature list is consumed strictly front to back:
/// selectors and licensors first, then exactly one category, then any
/// licensees.  validate_item_shape enforces that layout.
struct LexicalItem {
    Phon phon;
    std::vector<Feature> features;

    bool operator==(const LexicalItem&) const = default;

    bool silent() const { return phon.empty(); }
    /// The single CAT feature's symbol (valid only for shape-checked items).
    const std::string& category() const;
};

std::string to_string(const LexicalItem& item); // "phon :: features"

/// Incremental-engine adjunction declaration for all entries sharing a phon.
struct AdjunctionRule {
    std::string phon;
    std::vector<std::string> hosts; // categories the adjunct may attach to
    bool left = true;               // side of the host head in the string

    bool operator==(const AdjunctionRule&) const = default;
};

struct LexiconError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A grammar: feature-symbol inventory, start category, entries, and optional
/// adjunction rules used only by the incremental engine.
struct Lexicon {
    std::string name = "lexicon";
    std::vector<std::string> inventory; // declaration order preserved
    std::string start;
    std::vector<LexicalItem> items;
    std::vector<AdjunctionRule> adjunction;

    bool operator==(const Lexicon&) const = default;

    bool in_inventory(const std::string& symbol) const;
    const AdjunctionRule* adjunction_for(const std::string& phon) const;
    /// Indices of entries whose phon is exactly the given single token.
    std::vector<std::size_t> entries_for_token(const std::string& token) const;
    std::vector<std::size_t> silent_entries() const;
    /// Every distinct overt token any entry can pronounce.
    std::vector<std::string> vocabulary() const;
    /// True when no entry carries a licensor or licensee.
    bool movement_free() const;

    /// Throws LexiconError unless: inventory symbols are unique, start is
    /// declared, every feature symbol is declared, items are unique, and each
    /// item has the shape (SEL|LIC_PLUS)* CAT (LIC_MINUS)*.
    void validate() const;
};

/// Checks the one-category layout of a single entry; returns a diagnostic or
/// nullopt when well-formed.
std::optional<std::string> validate_item_shape(const LexicalItem& item);

/// Emits the lexicon file format understood by parse_lexicon; parsing the
/// result reproduces the lexicon exactly.
std::string serialize_lexicon(const Lexicon& lex);

} // namespace mglab
