#include "mglab/metrics.hpp"

#include <algorithm>
#include <stdexcept>

namespace mglab {

namespace {

constexpr std::size_t kKindTagBits = 3; // five feature kinds need three bits

std::size_t utf8_bytes(const std::string& s) {
    return s.size();
}

std::string spelled_out(const Phon& phon) {
    std::string joined;
    for (std::size_t i = 0; i < phon.size(); ++i) {
        if (i > 0) joined += " ";
        joined += phon[i];
    }
    return joined; // empty for silent entries: silence costs no phonology
}

} // namespace

std::size_t symbol_index_bits(std::size_t inventory_size) {
    std::size_t bits = 0;
    while ((std::size_t{1} << bits) < inventory_size) bits += 1;
    return bits;
}

GrammarMetrics grammar_size_bits(const Lexicon& lex) {
    GrammarMetrics m;
    const std::size_t index_bits = symbol_index_bits(lex.inventory.size());

    for (const std::string& symbol : lex.inventory)
        m.inventory_bits += (utf8_bytes(symbol) + 1) * 8; // terminated byte string
    m.inventory_bits += index_bits;                       // start-symbol reference

    for (const LexicalItem& item : lex.items) {
        std::size_t bits = utf8_bytes(spelled_out(item.phon)) * 8;
        bits += item.features.size() * (kKindTagBits + index_bits);
        m.per_item.push_back(ItemCost{to_string(item), bits});
        m.lexicon_bits += bits;
        m.feature_token_count += item.features.size();
    }
    m.item_count = lex.items.size();
    m.total_bits = m.inventory_bits + m.lexicon_bits;
    return m;
}

std::size_t efficiency(const Derivation& d) {
    return count_steps(d, StepCountMode::Batch);
}

AdequacyOrder compare_adequacy(const AdequacyPoint& a, const AdequacyPoint& b) {
    if (a.units != b.units)
        throw std::invalid_argument("adequacy points score different suites: " +
                                    std::to_string(a.units) + " vs " + std::to_string(b.units) +
                                    " units");
    const bool a_weak = a.correct >= b.correct && a.bits <= b.bits;
    const bool b_weak = b.correct >= a.correct && b.bits <= a.bits;
    if (a_weak && b_weak) return AdequacyOrder::Equal;
    if (a_weak) return AdequacyOrder::ADominates;
    if (b_weak) return AdequacyOrder::BDominates;
    return AdequacyOrder::Incomparable;
}

DustReport classify_data_dust(const Lexicon& base, const Lexicon& extended,
                              std::size_t base_correct, std::size_t extended_correct) {
    for (const LexicalItem& item : base.items) {
        if (std::find(extended.items.begin(), extended.items.end(), item) == extended.items.end())
            throw std::invalid_argument("extended grammar drops base entry: " + to_string(item));
    }
    DustReport report;
    report.base_correct = base_correct;
    report.extended_correct = extended_correct;
    report.fixed_units = extended_correct > base_correct ? extended_correct - base_correct : 0;
    const std::size_t base_bits = grammar_size_bits(base).total_bits;
    const std::size_t extended_bits = grammar_size_bits(extended).total_bits;
    report.delta_bits = extended_bits > base_bits ? extended_bits - base_bits : 0;
    if (report.fixed_units == 0)
        report.verdict = DustVerdict::Covered;
    else if (report.fixed_units == 1)
        report.verdict = DustVerdict::Dust;
    else
        report.verdict = DustVerdict::RelevantExtension;
    return report;
}

std::string to_string(AdequacyOrder order) {
    switch (order) {
        case AdequacyOrder::ADominates: return "A_DOMINATES";
        case AdequacyOrder::BDominates: return "B_DOMINATES";
        case AdequacyOrder::Equal: return "EQUAL";
        case AdequacyOrder::Incomparable: return "INCOMPARABLE";
    }
    return "INCOMPARABLE";
}

std::string to_string(DustVerdict verdict) {
    switch (verdict) {
        case DustVerdict::Covered: return "COVERED";
        case DustVerdict::Dust: return "DUST";
        case DustVerdict::RelevantExtension: return "RELEVANT_EXTENSION";
    }
    return "COVERED";
}

} // namespace mglab
