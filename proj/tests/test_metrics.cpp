#include "doctest.h"

#include <fstream>
#include <sstream>

#include "mglab/bundled.hpp"
#include "mglab/metrics.hpp"

using namespace mglab;

namespace {

std::string golden(const std::string& name) {
    std::ifstream in(std::string(MGLAB_GOLDEN_DIR) + "/" + name);
    REQUIRE_MESSAGE(in.good(), "missing golden file " << name);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string render(const GrammarMetrics& m) {
    std::ostringstream out;
    out << "inventory_bits " << m.inventory_bits << "\n"
        << "lexicon_bits " << m.lexicon_bits << "\n"
        << "total_bits " << m.total_bits << "\n"
        << "item_count " << m.item_count << "\n"
        << "feature_token_count " << m.feature_token_count << "\n";
    for (const ItemCost& c : m.per_item)
        out << c.entry << " | " << c.bits << "\n";
    return out.str();
}

} // namespace

TEST_CASE("three-item grammar sizes match the frozen expectation") {
    GrammarMetrics m = grammar_size_bits(load_bundled_lexicon("scolds"));
    CHECK(render(m) == golden("scolds_metrics.txt"));
    CHECK(m.total_bits == m.inventory_bits + m.lexicon_bits);
}

TEST_CASE("symbol references grow logarithmically") {
    CHECK(symbol_index_bits(0) == 0);
    CHECK(symbol_index_bits(1) == 0);
    CHECK(symbol_index_bits(2) == 1);
    CHECK(symbol_index_bits(3) == 2);
    CHECK(symbol_index_bits(4) == 2);
    CHECK(symbol_index_bits(5) == 3);
    CHECK(symbol_index_bits(8) == 3);
    CHECK(symbol_index_bits(9) == 4);
}

TEST_CASE("silence costs no phonology, features always cost") {
    Lexicon lex = load_bundled_lexicon("nesting"); // 9-symbol inventory, so 4-bit references
    GrammarMetrics m = grammar_size_bits(lex);
    const std::size_t per_feature = 3 + symbol_index_bits(lex.inventory.size());
    for (std::size_t i = 0; i < lex.items.size(); ++i) {
        const LexicalItem& item = lex.items[i];
        std::size_t expected =
            item.silent() ? item.features.size() * per_feature
                          : phon_text(item.phon).size() * 8 + item.features.size() * per_feature;
        CHECK(m.per_item[i].bits == expected);
    }
}

TEST_CASE("every added entry strictly grows the grammar") {
    for (const char* name : {"scolds", "agreement", "npi"}) {
        Lexicon lex = load_bundled_lexicon(name);
        std::size_t whole = grammar_size_bits(lex).total_bits;
        for (std::size_t drop = 0; drop < lex.items.size(); ++drop) {
            Lexicon smaller = lex;
            smaller.items.erase(smaller.items.begin() + static_cast<long>(drop));
            CHECK(grammar_size_bits(smaller).total_bits < whole);
        }
    }
}

TEST_CASE("recomputation is bit-identical") {
    Lexicon lex = load_bundled_lexicon("agreement");
    GrammarMetrics a = grammar_size_bits(lex);
    GrammarMetrics b = grammar_size_bits(lex);
    CHECK(render(a) == render(b));
}

TEST_CASE("pareto comparison covers all four orders") {
    auto point = [](std::size_t correct, std::size_t bits) {
        return AdequacyPoint{"g", correct, 10, bits};
    };
    CHECK(compare_adequacy(point(5, 100), point(5, 100)) == AdequacyOrder::Equal);
    CHECK(compare_adequacy(point(6, 100), point(5, 100)) == AdequacyOrder::ADominates);
    CHECK(compare_adequacy(point(5, 90), point(5, 100)) == AdequacyOrder::ADominates);
    CHECK(compare_adequacy(point(5, 100), point(6, 100)) == AdequacyOrder::BDominates);
    CHECK(compare_adequacy(point(6, 90), point(5, 100)) == AdequacyOrder::ADominates);
    CHECK(compare_adequacy(point(6, 110), point(5, 100)) == AdequacyOrder::Incomparable);
    CHECK(compare_adequacy(point(5, 90), point(6, 100)) == AdequacyOrder::Incomparable);

    AdequacyPoint other{"h", 5, 12, 100};
    CHECK_THROWS_AS(compare_adequacy(point(5, 100), other), std::invalid_argument);
}

TEST_CASE("dust classification follows the fixed-unit count") {
    Lexicon base = load_bundled_lexicon("scolds");
    Lexicon extended = base;
    extended.items.push_back(LexicalItem{{"Carol"}, {Feature{FeatureKind::Cat, "D"}}});

    DustReport covered = classify_data_dust(base, extended, 4, 4);
    CHECK(covered.verdict == DustVerdict::Covered);
    CHECK(covered.fixed_units == 0);
    CHECK(covered.delta_bits == grammar_size_bits(extended).total_bits -
                                    grammar_size_bits(base).total_bits);

    CHECK(classify_data_dust(base, extended, 3, 4).verdict == DustVerdict::Dust);
    CHECK(classify_data_dust(base, extended, 2, 4).verdict == DustVerdict::RelevantExtension);
    CHECK(classify_data_dust(base, extended, 4, 3).fixed_units == 0); // regressions never negative

    CHECK_THROWS_AS(classify_data_dust(extended, base, 4, 4), std::invalid_argument);
}

TEST_CASE("verdict and order names") {
    CHECK(to_string(AdequacyOrder::ADominates) == "A_DOMINATES");
    CHECK(to_string(AdequacyOrder::Equal) == "EQUAL");
    CHECK(to_string(DustVerdict::Dust) == "DUST");
    CHECK(to_string(DustVerdict::RelevantExtension) == "RELEVANT_EXTENSION");
}
