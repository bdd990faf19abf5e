#include "mglab/lexicon.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace mglab {

std::string phon_text(const Phon& phon) {
    if (phon.empty())
        return "ε";
    std::string out;
    for (const std::string& tok : phon) {
        if (!out.empty())
            out += ' ';
        out += tok;
    }
    return out;
}

const std::string& LexicalItem::category() const {
    for (const Feature& f : features)
        if (f.kind == FeatureKind::Cat)
            return f.symbol;
    throw LexiconError("entry '" + phon_text(phon) + "' has no category feature");
}

std::string to_string(const LexicalItem& item) {
    return phon_text(item.phon) + " :: " + to_string(item.features);
}

bool Lexicon::in_inventory(const std::string& symbol) const {
    return std::find(inventory.begin(), inventory.end(), symbol) != inventory.end();
}

const AdjunctionRule* Lexicon::adjunction_for(const std::string& phon) const {
    for (const AdjunctionRule& rule : adjunction)
        if (rule.phon == phon)
            return &rule;
    return nullptr;
}

std::vector<std::size_t> Lexicon::entries_for_token(const std::string& token) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < items.size(); ++i)
        if (items[i].phon.size() == 1 && items[i].phon[0] == token)
            out.push_back(i);
    return out;
}

std::vector<std::size_t> Lexicon::silent_entries() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < items.size(); ++i)
        if (items[i].silent())
            out.push_back(i);
    return out;
}

std::vector<std::string> Lexicon::vocabulary() const {
    std::set<std::string> seen;
    for (const LexicalItem& item : items)
        seen.insert(item.phon.begin(), item.phon.end());
    return {seen.begin(), seen.end()};
}

bool Lexicon::movement_free() const {
    for (const LexicalItem& item : items)
        for (const Feature& f : item.features)
            if (f.kind == FeatureKind::LicPlus || f.kind == FeatureKind::LicMinus)
                return false;
    return true;
}

std::optional<std::string> validate_item_shape(const LexicalItem& item) {
    if (item.features.empty())
        return "entry '" + phon_text(item.phon) + "' has no features";
    int cats = 0;
    bool past_cat = false;
    for (const Feature& f : item.features) {
        switch (f.kind) {
        case FeatureKind::Cat:
            ++cats;
            if (cats > 1)
                return "entry '" + phon_text(item.phon) + "' declares more than one category";
            past_cat = true;
            break;
        case FeatureKind::SelRight:
        case FeatureKind::SelLeft:
        case FeatureKind::LicPlus:
            if (past_cat)
                return "entry '" + phon_text(item.phon) + "': " + to_string(f) +
                       " follows the category and could never be checked";
            break;
        case FeatureKind::LicMinus:
            if (!past_cat)
                return "entry '" + phon_text(item.phon) + "': " + to_string(f) +
                       " precedes the category and could never be checked";
            break;
        }
    }
    if (cats == 0)
        return "entry '" + phon_text(item.phon) + "' has no category feature";
    return std::nullopt;
}

void Lexicon::validate() const {
    std::unordered_set<std::string> symbols;
    for (const std::string& s : inventory) {
        if (s.empty())
            throw LexiconError("empty inventory symbol");
        if (!symbols.insert(s).second)
            throw LexiconError("inventory symbol '" + s + "' declared twice");
    }
    if (start.empty())
        throw LexiconError("missing start category");
    if (!symbols.count(start))
        throw LexiconError("start category '" + start + "' is not in the inventory");

    std::set<std::pair<std::string, std::string>> seen; // (phon text, feature text)
    for (const LexicalItem& item : items) {
        if (auto problem = validate_item_shape(item))
            throw LexiconError(*problem);
        for (const Feature& f : item.features)
            if (!symbols.count(f.symbol))
                throw LexiconError("entry '" + phon_text(item.phon) + "' uses undeclared symbol '" +
                                   f.symbol + "'");
        if (!seen.insert({phon_text(item.phon), to_string(item.features)}).second)
            throw LexiconError("duplicate entry '" + to_string(item) + "'");
    }

    std::unordered_set<std::string> adjunct_phons;
    for (const AdjunctionRule& rule : adjunction) {
        if (!adjunct_phons.insert(rule.phon).second)
            throw LexiconError("duplicate adjunction rule for '" + rule.phon + "'");
        if (rule.hosts.empty())
            throw LexiconError("adjunction rule for '" + rule.phon + "' lists no host categories");
        for (const std::string& host : rule.hosts)
            if (!symbols.count(host))
                throw LexiconError("adjunction rule for '" + rule.phon + "' uses undeclared symbol '" +
                                   host + "'");
        bool any = false;
        for (const LexicalItem& item : items)
            any = any || (item.phon.size() == 1 && item.phon[0] == rule.phon);
        if (!any)
            throw LexiconError("adjunction rule for '" + rule.phon + "' matches no single-token entry");
    }
}

std::string serialize_lexicon(const Lexicon& lex) {
    std::string out;
    out += "name: " + lex.name + "\n";
    out += "inventory:";
    for (const std::string& s : lex.inventory)
        out += " " + s;
    out += "\n";
    out += "start: " + lex.start + "\n";
    for (const LexicalItem& item : lex.items)
        out += to_string(item) + "\n";
    if (!lex.adjunction.empty()) {
        out += "emg:\n";
        for (const AdjunctionRule& rule : lex.adjunction) {
            out += rule.phon + " adjoin:";
            std::string hosts;
            for (const std::string& h : rule.hosts) {
                if (!hosts.empty())
                    hosts += ",";
                hosts += h;
            }
            out += " " + hosts + (rule.left ? " left" : " right") + "\n";
        }
    }
    return out;
}

} // namespace mglab
