#include "mglab/suite.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace mglab {

const TestItem* TestSuite::find_item(const std::string& id) const {
    for (const TestItem& item : items)
        if (item.id == id) return &item;
    return nullptr;
}

bool TestSuite::paired(const std::string& id) const {
    return std::any_of(pairs.begin(), pairs.end(), [&](const MinimalPair& p) {
        return p.good_id == id || p.bad_id == id;
    });
}

std::size_t TestSuite::units() const {
    std::size_t n = pairs.size();
    for (const TestItem& item : items)
        if (!paired(item.id)) n += 1;
    return n;
}

namespace {

std::string strip(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> words(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string w;
    while (in >> w) out.push_back(w);
    return out;
}

/// Splits on " :: " separators (surrounding spaces optional around "::").
std::vector<std::string> split_sections(const std::string& line) {
    std::vector<std::string> parts;
    std::size_t pos = 0;
    while (true) {
        std::size_t sep = line.find("::", pos);
        if (sep == std::string::npos) {
            parts.push_back(strip(line.substr(pos)));
            return parts;
        }
        parts.push_back(strip(line.substr(pos, sep - pos)));
        pos = sep + 2;
    }
}

} // namespace

TestSuite parse_suite(const std::string& text, const std::string& file) {
    TestSuite suite;
    std::set<std::string> ids;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;

    auto fail = [&](const std::string& why) { throw ParseError(file, lineno, 1, why); };

    while (std::getline(in, raw)) {
        lineno += 1;
        std::size_t hash = raw.find('#');
        if (hash != std::string::npos) raw = raw.substr(0, hash);
        std::string line = strip(raw);
        if (line.empty()) continue;

        if (line.rfind("suite:", 0) == 0) {
            suite.name = strip(line.substr(6));
            continue;
        }
        if (line.rfind("phenomenon:", 0) == 0) {
            suite.phenomenon = strip(line.substr(11));
            continue;
        }
        if (line.rfind("source:", 0) == 0) {
            suite.source = strip(line.substr(7));
            continue;
        }
        if (line.rfind("allowance:", 0) == 0) {
            try {
                suite.allowance = std::stoul(strip(line.substr(10)));
            } catch (const std::exception&) {
                fail("allowance expects a number");
            }
            continue;
        }

        std::vector<std::string> head = words(line.substr(0, line.find("::")));
        if (head.empty()) fail("unrecognized line");

        if (head[0] == "pair") {
            // pair <id> = <good-id> / <bad-id>
            std::vector<std::string> w = words(line);
            if (w.size() != 6 || w[2] != "=" || w[4] != "/")
                fail("pair expects: pair <id> = <good-id> / <bad-id>");
            if (!ids.insert(w[1]).second) fail("duplicate id " + w[1]);
            const TestItem* good = suite.find_item(w[3]);
            const TestItem* bad = suite.find_item(w[5]);
            if (good == nullptr) fail("pair references unknown item " + w[3]);
            if (bad == nullptr) fail("pair references unknown item " + w[5]);
            if (!good->expect_good) fail("pair lists " + w[3] + " as its good half, but it is marked bad");
            if (bad->expect_good) fail("pair lists " + w[5] + " as its bad half, but it is marked good");
            suite.pairs.push_back(MinimalPair{w[1], w[3], w[5]});
            continue;
        }

        bool expect_good = true;
        std::string id;
        if (head[0] == "good" || head[0] == "bad") {
            if (head.size() != 2) fail(head[0] + " expects: " + head[0] + " <id> :: <tokens>");
            expect_good = head[0] == "good";
            id = head[1];
        } else if (head[0] == "item") {
            // item <id> :: tokens  (grammatical unless marked -)
            if (head.size() == 3 && (head[2] == "+" || head[2] == "-"))
                expect_good = head[2] == "+";
            else if (head.size() != 2)
                fail("item expects: item <id> [+|-] :: <tokens>");
            id = head[1];
        } else {
            fail("unrecognized line: " + line);
        }

        std::vector<std::string> sections = split_sections(line);
        if (sections.size() < 2 || sections[1].empty()) fail("item " + id + " has no tokens");
        if (!ids.insert(id).second) fail("duplicate id " + id);
        TestItem item{id, expect_good, words(sections[1]), 1.0};
        if (sections.size() >= 3) {
            std::vector<std::string> w = words(sections[2]);
            if (w.size() != 2 || w[0] != "score:") fail("trailing section expects: score: <n>");
            try {
                item.score = std::stod(w[1]);
            } catch (const std::exception&) {
                fail("score expects a number");
            }
        }
        if (sections.size() > 3) fail("too many :: sections");
        suite.items.push_back(std::move(item));
    }

    lineno += 1;
    if (suite.name.empty()) fail("missing suite: header");
    if (suite.items.empty()) fail("suite has no items");
    return suite;
}

TestSuite load_suite(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path, 0, 0, "cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_suite(buf.str(), path);
}

std::string serialize_suite(const TestSuite& suite) {
    std::ostringstream out;
    out << "suite: " << suite.name << "\n";
    if (!suite.phenomenon.empty()) out << "phenomenon: " << suite.phenomenon << "\n";
    if (!suite.source.empty()) out << "source: " << suite.source << "\n";
    if (suite.allowance) out << "allowance: " << *suite.allowance << "\n";
    out << "\n";
    for (const TestItem& item : suite.items) {
        out << (item.expect_good ? "good " : "bad ") << item.id << " ::";
        for (const std::string& tok : item.tokens) out << " " << tok;
        if (item.score != 1.0) out << " :: score: " << item.score;
        out << "\n";
    }
    for (const MinimalPair& pair : suite.pairs)
        out << "pair " << pair.id << " = " << pair.good_id << " / " << pair.bad_id << "\n";
    return out.str();
}

} // namespace mglab
