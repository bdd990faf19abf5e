#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mglab/lexicon.hpp"
#include "mglab/lexicon_parser.hpp"

namespace mglab {

/// One judged sentence.  `score` carries an optional graded judgment from
/// the suite file; the categorical scorer ignores it but reports retain it.
struct TestItem {
    std::string id;
    bool expect_good = true;
    Phon tokens;
    double score = 1.0;

    bool operator==(const TestItem&) const = default;
};

/// A contrast: same unit, the good half must come out derivable and the bad
/// half not.
struct MinimalPair {
    std::string id;
    std::string good_id;
    std::string bad_id;

    bool operator==(const MinimalPair&) const = default;
};

struct TestSuite {
    std::string name;
    std::string phenomenon;
    std::string source;                      // free-form attribution, optional
    std::optional<std::size_t> allowance;    // bound hint calibrated to the data
    std::vector<TestItem> items;
    std::vector<MinimalPair> pairs;

    bool operator==(const TestSuite&) const = default;

    const TestItem* find_item(const std::string& id) const;
    bool paired(const std::string& id) const;
    /// Scoring units: each pair is one unit, each unpaired item is one unit.
    std::size_t units() const;
};

/// Parses the suite format:
///   suite: <name>
///   phenomenon: <text>
///   source: <text>            (optional)
///   allowance: <n>            (optional)
///   good <id> :: <tokens> [:: score: <n>]
///   bad <id> :: <tokens> [:: score: <n>]
///   item <id> + :: <tokens>   (alternate spelling of good/bad)
///   pair <id> = <good-id> / <bad-id>
/// Throws ParseError on malformed lines, duplicate ids, pairs that reference
/// missing items, or pairs whose halves have the wrong polarity.
TestSuite parse_suite(const std::string& text, const std::string& file = "<suite>");
TestSuite load_suite(const std::string& path);

/// Emits the format above; parsing the result reproduces the suite.
std::string serialize_suite(const TestSuite& suite);

} // namespace mglab
