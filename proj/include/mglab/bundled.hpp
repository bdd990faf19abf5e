#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mglab/lexicon.hpp"
#include "mglab/suite.hpp"

namespace mglab {

/// Directory holding the shipped lexicons and suites.  Resolution order:
/// explicit set_data_dir (CLI flag), the MGLAB_DATA_DIR environment variable,
/// then the build-time default.
std::string data_dir();
void set_data_dir(const std::string& dir);

struct BundledEntry {
    std::string name;
    std::string lexicon_file;  // under data/lexicons
    std::string suite_file;    // under data/suites; empty when generated
    bool emg_only = false;     // stipulated contrast needs the memory buffer
    std::string note;          // documentation caveat shown by listings
};

/// The shipped suite/lexicon pairs.  The nesting suite is generated from its
/// depth templates rather than stored.
const std::vector<BundledEntry>& bundled_entries();
const BundledEntry* bundled_entry(const std::string& name);

Lexicon load_bundled_lexicon(const std::string& name);
TestSuite load_bundled_suite(const std::string& name);

/// Standalone demonstration lexicons (no suite attached).
std::vector<std::string> bundled_lexicon_names();

/// Embedding templates.  Series 'a' nests right-branching subject relatives
/// ("a dog that bit a cat ... ran"); series 'b' center-embeds object
/// relatives ("a mouse that a cat ... chased ran").  Depth is the number of
/// relative clauses; depth 0 is the bare "a <noun> ran".
Phon nesting_sentence(char series, std::size_t depth);

/// Suite text over nesting_sentence for depths 1..max_depth, parseable by
/// parse_suite; its allowance header covers the silent heads the deepest
/// center-embedding needs.
std::string nesting_suite_text(std::size_t max_depth);

} // namespace mglab
