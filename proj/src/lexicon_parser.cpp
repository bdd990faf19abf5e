#include "mglab/lexicon_parser.hpp"

#include <fstream>
#include <sstream>

namespace mglab {

namespace {

struct Token {
    std::string text;
    int col = 0; // 1-based byte column
};

std::vector<Token> split_tokens(const std::string& line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == ' ' || line[i] == '\t') {
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t')
            ++i;
        out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
    }
    return out;
}

std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

std::vector<std::string> split_on_commas(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == ',') {
            if (!cur.empty())
                out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty())
        out.push_back(cur);
    return out;
}

} // namespace

Lexicon parse_lexicon(std::string_view text, const std::string& default_name, const std::string& file) {
    Lexicon lex;
    lex.name = default_name;
    bool saw_inventory = false;
    bool in_emg = false;

    std::istringstream stream{std::string(text)};
    std::string raw;
    int line_no = 0;
    int last_line = 0;
    while (std::getline(stream, raw)) {
        ++line_no;
        last_line = line_no;
        std::string line = strip_comment(raw);
        std::vector<Token> toks = split_tokens(line);
        if (toks.empty())
            continue;

        auto fail = [&](int col, const std::string& what) -> void {
            throw ParseError(file, line_no, col, what);
        };

        if (!in_emg && toks[0].text == "name:") {
            if (toks.size() != 2)
                fail(toks[0].col, "expected exactly one name");
            lex.name = toks[1].text;
            continue;
        }
        if (!in_emg && toks[0].text == "inventory:") {
            if (saw_inventory)
                fail(toks[0].col, "inventory declared twice");
            if (toks.size() < 2)
                fail(toks[0].col, "empty inventory");
            for (std::size_t i = 1; i < toks.size(); ++i)
                lex.inventory.push_back(toks[i].text);
            saw_inventory = true;
            continue;
        }
        if (!in_emg && toks[0].text == "start:") {
            if (toks.size() != 2)
                fail(toks[0].col, "expected exactly one start category");
            if (!lex.start.empty())
                fail(toks[0].col, "start category declared twice");
            lex.start = toks[1].text;
            continue;
        }
        if (toks[0].text == "emg:" && toks.size() == 1) {
            in_emg = true;
            continue;
        }

        if (in_emg) {
            // phon adjoin: host[,host...] [left|right]
            if (toks.size() < 3 || toks[1].text != "adjoin:")
                fail(toks[0].col, "expected 'phon adjoin: hosts [left|right]'");
            AdjunctionRule rule;
            rule.phon = toks[0].text;
            rule.hosts = split_on_commas(toks[2].text);
            if (toks.size() == 4) {
                if (toks[3].text == "left")
                    rule.left = true;
                else if (toks[3].text == "right")
                    rule.left = false;
                else
                    fail(toks[3].col, "adjunction side must be 'left' or 'right'");
            } else if (toks.size() > 4) {
                fail(toks[4].col, "unexpected trailing tokens in adjunction rule");
            }
            lex.adjunction.push_back(rule);
            continue;
        }

        // Entry line: phon tokens, '::', feature tokens.
        std::size_t sep = 0;
        while (sep < toks.size() && toks[sep].text != "::")
            ++sep;
        if (sep == toks.size())
            fail(toks[0].col, "expected '::' between phon and features");
        LexicalItem item;
        for (std::size_t i = 0; i < sep; ++i)
            item.phon.push_back(toks[i].text);
        if (item.phon.size() == 1 && item.phon[0] == "ε")
            item.phon.clear(); // silent head
        for (std::size_t i = sep + 1; i < toks.size(); ++i) {
            Feature f;
            if (!feature_from_token(toks[i].text, f))
                fail(toks[i].col, "malformed feature '" + toks[i].text + "'");
            item.features.push_back(f);
        }
        if (auto problem = validate_item_shape(item))
            fail(toks[0].col, *problem);
        lex.items.push_back(std::move(item));
    }

    try {
        lex.validate();
    } catch (const LexiconError& e) {
        throw ParseError(file, last_line, 1, e.what());
    }
    return lex;
}

Lexicon load_lexicon(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError(path, 0, 0, "cannot open lexicon file");
    std::stringstream buf;
    buf << in.rdbuf();
    std::string stem = path;
    if (auto slash = stem.find_last_of('/'); slash != std::string::npos)
        stem = stem.substr(slash + 1);
    if (auto dot = stem.find_last_of('.'); dot != std::string::npos && dot > 0)
        stem = stem.substr(0, dot);
    return parse_lexicon(buf.str(), stem, path);
}

} // namespace mglab
