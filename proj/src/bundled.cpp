#include "mglab/bundled.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "mglab/lexicon_parser.hpp"

#ifndef MGLAB_DATA_DIR
#define MGLAB_DATA_DIR "data"
#endif

namespace mglab {

namespace {

std::string g_data_dir; // set_data_dir override

const std::vector<std::string> kANouns = {"dog", "cat", "mouse", "rat", "bird", "fox"};
const std::vector<std::string> kAVerbs = {"bit", "chased", "saw", "feared", "heard"};
const std::vector<std::string> kBNouns = {"mouse", "cat", "dog", "rat", "bird", "fox"};
const std::vector<std::string> kBVerbs = {"chased", "bit", "saw", "feared", "heard"};

} // namespace

std::string data_dir() {
    if (!g_data_dir.empty()) return g_data_dir;
    if (const char* env = std::getenv("MGLAB_DATA_DIR"); env != nullptr && *env != '\0')
        return env;
    return MGLAB_DATA_DIR;
}

void set_data_dir(const std::string& dir) {
    g_data_dir = dir;
}

const std::vector<BundledEntry>& bundled_entries() {
    static const std::vector<BundledEntry> entries = {
        {"agreement", "agreement.lex", "agreement.suite", false,
         "number agreement across an intervening relative clause"},
        {"nesting", "nesting.lex", "", false,
         "right-branching vs center-embedded relatives, generated per depth"},
        {"filled-gap", "filled_gap.lex", "filled_gap.suite", false,
         "fronted interrogative leaves its object position empty"},
        {"npi", "npi.lex", "npi.suite", false,
         "polarity item licensed only under a commanding negative subject"},
        {"atb", "atb.lex", "atb.suite", true,
         "extraction must span both conjuncts; the separation is stipulated by the "
         "conjunction entries rather than derived from an island theory, and the "
         "adjunction rules it needs exist only in the incremental engine"},
    };
    return entries;
}

const BundledEntry* bundled_entry(const std::string& name) {
    for (const BundledEntry& e : bundled_entries())
        if (e.name == name) return &e;
    return nullptr;
}

std::vector<std::string> bundled_lexicon_names() {
    std::vector<std::string> names = {"scolds", "wh_demo"};
    for (const BundledEntry& e : bundled_entries()) names.push_back(e.name);
    return names;
}

Lexicon load_bundled_lexicon(const std::string& name) {
    const BundledEntry* entry = bundled_entry(name);
    std::string file = entry != nullptr ? entry->lexicon_file : name + ".lex";
    return load_lexicon(data_dir() + "/lexicons/" + file);
}

TestSuite load_bundled_suite(const std::string& name) {
    const BundledEntry* entry = bundled_entry(name);
    if (entry == nullptr) throw std::invalid_argument("no bundled suite named " + name);
    if (entry->suite_file.empty()) return parse_suite(nesting_suite_text(3), "<generated:nesting>");
    return load_suite(data_dir() + "/suites/" + entry->suite_file);
}

Phon nesting_sentence(char series, std::size_t depth) {
    if (series != 'a' && series != 'b')
        throw std::invalid_argument("nesting series must be 'a' or 'b'");
    const auto& nouns = series == 'a' ? kANouns : kBNouns;
    const auto& verbs = series == 'a' ? kAVerbs : kBVerbs;
    if (depth >= nouns.size() || depth > verbs.size())
        throw std::invalid_argument("nesting depth supported up to " +
                                    std::to_string(verbs.size()));

    Phon s;
    if (series == 'a') {
        // a N0 (that Vi a N(i+1))^depth ran
        s = {"a", nouns[0]};
        for (std::size_t i = 0; i < depth; ++i) {
            s.push_back("that");
            s.push_back(verbs[i]);
            s.push_back("a");
            s.push_back(nouns[i + 1]);
        }
        s.push_back("ran");
        return s;
    }
    // (a Ni that)^depth a Ndepth, then the verbs inside out, then ran
    for (std::size_t i = 0; i < depth; ++i) {
        s.push_back("a");
        s.push_back(nouns[i]);
        s.push_back("that");
    }
    s.push_back("a");
    s.push_back(nouns[depth]);
    for (std::size_t i = depth; i-- > 0;) s.push_back(verbs[i]);
    s.push_back("ran");
    return s;
}

std::string nesting_suite_text(std::size_t max_depth) {
    std::ostringstream out;
    out << "suite: nesting\n";
    out << "phenomenon: embedding-depth\n";
    // Each center-embedded clause needs one silent object head, plus one
    // silent verb closer for the whole sentence.
    out << "allowance: " << max_depth + 1 << "\n\n";
    for (char series : {'a', 'b'}) {
        for (std::size_t d = 1; d <= max_depth; ++d) {
            Phon s = nesting_sentence(series, d);
            out << "good " << series << "_" << d << " ::";
            for (const std::string& tok : s) out << " " << tok;
            out << "\n";
        }
    }
    return out.str();
}

} // namespace mglab
