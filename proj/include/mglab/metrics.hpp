#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mglab/derivation.hpp"
#include "mglab/lexicon.hpp"

namespace mglab {

struct ItemCost {
    std::string entry; // "phon :: features"
    std::size_t bits = 0;
};

/// Stored size of a grammar under a fixed binary code: the symbol inventory
/// as terminated byte strings plus a start-symbol reference, then each entry
/// as its pronunciation in bytes and its features at a flat per-feature rate
/// (a 3-bit kind tag plus an inventory index).  Deterministic and portable:
/// only byte lengths and symbol counts enter.
struct GrammarMetrics {
    std::size_t inventory_bits = 0;
    std::size_t lexicon_bits = 0;
    std::size_t total_bits = 0;
    std::size_t item_count = 0;
    std::size_t feature_token_count = 0;
    std::vector<ItemCost> per_item; // entry order preserved
};

GrammarMetrics grammar_size_bits(const Lexicon& lex);

/// Bits to reference one inventory symbol: ceil(log2 of the symbol count).
std::size_t symbol_index_bits(std::size_t inventory_size);

/// Derivational effort under the batch convention: a run of consecutive
/// lexical selections counts as one step.
std::size_t efficiency(const Derivation& d);

enum class AdequacyOrder { ADominates, BDominates, Equal, Incomparable };

/// One grammar's showing on a fixed suite: units it gets right and its size.
struct AdequacyPoint {
    std::string grammar;
    std::size_t correct = 0;
    std::size_t units = 0;
    std::size_t bits = 0;
};

/// Pareto comparison: dominance means at least as many correct units and at
/// most as many bits, strictly better in one. Throws std::invalid_argument
/// when the points were scored on suites of different sizes.
AdequacyOrder compare_adequacy(const AdequacyPoint& a, const AdequacyPoint& b);

enum class DustVerdict { Covered, Dust, RelevantExtension };

struct DustReport {
    DustVerdict verdict = DustVerdict::Covered;
    std::size_t base_correct = 0;
    std::size_t extended_correct = 0;
    std::size_t fixed_units = 0; // units the extension newly gets right
    std::size_t delta_bits = 0;  // size the extension pays for them
};

/// Judges whether growing `base` into `extended` earned its keep on a suite:
/// fixing nothing means the data was already covered, fixing one unit is
/// dust, fixing two or more is a relevant extension.  `extended` must
/// contain every item of `base`; throws std::invalid_argument otherwise.
DustReport classify_data_dust(const Lexicon& base, const Lexicon& extended,
                              std::size_t base_correct, std::size_t extended_correct);

std::string to_string(AdequacyOrder order);
std::string to_string(DustVerdict verdict);

} // namespace mglab
