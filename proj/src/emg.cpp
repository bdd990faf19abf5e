#include "mglab/emg.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace mglab {

namespace {

bool is_sel(const Feature& f) {
    return f.kind == FeatureKind::SelRight || f.kind == FeatureKind::SelLeft;
}

std::vector<Feature> pre_of(const LexicalItem& item) {
    std::vector<Feature> pre;
    for (const Feature& f : item.features) {
        if (f.kind == FeatureKind::Cat) break;
        pre.push_back(f);
    }
    return pre;
}

std::vector<Feature> rest_of(const LexicalItem& item) {
    std::vector<Feature> rest;
    bool seen = false;
    for (const Feature& f : item.features) {
        if (f.kind == FeatureKind::Cat) seen = true;
        if (seen) rest.push_back(f);
    }
    return rest;
}

bool carries_licensee(const LexicalItem& item) {
    return std::any_of(item.features.begin(), item.features.end(),
                       [](const Feature& f) { return f.kind == FeatureKind::LicMinus; });
}

EmgNode* node_at(EmgNode& root, const std::vector<std::size_t>& path) {
    EmgNode* n = &root;
    for (std::size_t i : path) {
        if (i >= n->children.size()) return nullptr;
        n = &n->children[i];
    }
    return n;
}

/// Queues the expectations an item raises, preserving their feature order at
/// the front of the chain's queue.  `skip` is the index of a feature already
/// met at integration time (mirror's final selector, wrap's first selector).
/// The first selector is input-facing only when it points right; every other
/// requirement waits for memory.
void queue_expectations(EmgChain& chain, const LexicalItem& item,
                        const std::vector<Feature>& pre, std::size_t skip,
                        const std::vector<std::size_t>& site, std::size_t birth) {
    std::size_t first_sel = pre.size();
    for (std::size_t i = 0; i < pre.size(); ++i) {
        if (is_sel(pre[i])) {
            first_sel = i;
            break;
        }
    }
    std::vector<Expectation> fresh;
    for (std::size_t i = 0; i < pre.size(); ++i) {
        if (i == skip) continue;
        const Feature& f = pre[i];
        bool from_memory = f.kind == FeatureKind::LicPlus || f.kind == FeatureKind::SelLeft ||
                           (f.kind == FeatureKind::SelRight && i != first_sel);
        fresh.push_back(Expectation{f, phon_text(item.phon), item.category(), site, from_memory, birth});
    }
    chain.exps.insert(chain.exps.begin(), fresh.begin(), fresh.end());
}

void attach_held(EmgState& st, EmgNode& node, const std::string& cat) {
    for (auto it = st.held.begin(); it != st.held.end();) {
        if (std::find(it->hosts.begin(), it->hosts.end(), cat) != it->hosts.end()) {
            node.children.push_back(EmgNode{phon_text(it->item.phon), it->item.category(), false, {}});
            it = st.held.erase(it);
        } else {
            ++it;
        }
    }
}

/// Categories some entry requests on the memory side (a leftward selector, or
/// a rightward selector after the first).  A stored chain without licensees
/// saturates to a bare category and can only ever discharge into such a slot,
/// so storing any other category is a guaranteed dead end.
std::vector<std::string> memory_fillable_categories(const Lexicon& lex) {
    std::vector<std::string> cats;
    for (const LexicalItem& item : lex.items) {
        std::vector<Feature> pre = pre_of(item);
        std::size_t first_sel = pre.size();
        for (std::size_t i = 0; i < pre.size(); ++i) {
            if (is_sel(pre[i])) {
                first_sel = i;
                break;
            }
        }
        for (std::size_t i = 0; i < pre.size(); ++i) {
            const Feature& f = pre[i];
            bool memory_side = f.kind == FeatureKind::SelLeft ||
                               (f.kind == FeatureKind::SelRight && i != first_sel);
            if (memory_side && std::find(cats.begin(), cats.end(), f.symbol) == cats.end())
                cats.push_back(f.symbol);
        }
    }
    return cats;
}

std::string exps_text(const EmgChain& chain) {
    std::string out = "[";
    for (std::size_t i = 0; i < chain.exps.size(); ++i) {
        out += to_string(chain.exps[i].feature);
        if (i + 1 < chain.exps.size()) out += " ";
    }
    out += "]";
    return out;
}

void log_action(EmgState& st, const std::string& tag, const std::string& shown,
                const std::string& detail) {
    if (!st.trace_enabled) return;
    st.trace.push_back(tag + " " + shown + " :: " + detail + " | exps=" + exps_text(st.main) +
                       " |mem|=" + std::to_string(st.memory.size()));
}

/// Fills a chain's front expectation from the input side: the expectation
/// must be an input-facing selector matching the item's category, and the
/// item must be free of licensees (those always store).  Returns the new
/// node's path, or nullopt when the expectation does not fit.
std::optional<std::vector<std::size_t>> fill_front_from_input(EmgState& st, EmgChain& chain,
                                                              const LexicalItem& item) {
    if (carries_licensee(item)) return std::nullopt;
    if (!chain.rooted || chain.exps.empty()) return std::nullopt;
    const Expectation& e = chain.exps.front();
    if (!is_sel(e.feature) || e.from_memory) return std::nullopt;
    if (item.category() != e.feature.symbol) return std::nullopt;
    EmgNode* parent = node_at(chain.tree, e.site);
    if (parent == nullptr) return std::nullopt;

    st.clock += 1;
    EmgNode child{item.silent() ? "ε" : phon_text(item.phon), item.category(), false, {}};
    attach_held(st, child, item.category());
    parent->children.push_back(std::move(child));
    std::vector<std::size_t> path = e.site;
    path.push_back(parent->children.size() - 1);
    chain.exps.erase(chain.exps.begin());
    queue_expectations(chain, item, pre_of(item), pre_of(item).size(), path, st.clock);
    return path;
}

} // namespace

bool emg_merge_complement(EmgState& st, const LexicalItem& item) {
    if (!fill_front_from_input(st, st.main, item)) return false;
    log_action(st, "CPL", phon_text(item.phon), to_string(item.features));
    return true;
}

bool emg_merge_grow(EmgState& st, const LexicalItem& item) {
    for (std::size_t i = st.memory.size(); i-- > 0;) {
        EmgState probe = st;
        if (fill_front_from_input(probe, probe.memory[i], item)) {
            st = std::move(probe);
            log_action(st, "CPL", phon_text(item.phon), to_string(item.features));
            return true;
        }
    }
    return false;
}

bool emg_merge_mirror(EmgState& st, const LexicalItem& item) {
    if (carries_licensee(item)) return false;
    if (!st.main.complete_projection()) return false;
    std::vector<Feature> pre = pre_of(item);
    if (pre.size() < 2) return false;
    std::size_t selectors = 0;
    for (const Feature& f : pre)
        if (is_sel(f)) selectors += 1;
    if (selectors < 2 || !is_sel(pre.back())) return false;
    if (pre.back().symbol != st.main.rest.front().symbol) return false;

    st.clock += 1;
    EmgNode root{phon_text(item.phon), item.category(), false, {}};
    root.children.push_back(std::move(st.main.tree));
    attach_held(st, root, item.category());
    st.main.tree = std::move(root);
    st.main.exps.clear();
    queue_expectations(st.main, item, pre, pre.size() - 1, {}, st.clock);
    st.main.rest = rest_of(item);
    log_action(st, "CPL", phon_text(item.phon), to_string(item.features));
    return true;
}

bool emg_merge_root(EmgState& st, const LexicalItem& item) {
    if (carries_licensee(item)) return false;
    if (st.main.rooted) return false;

    st.clock += 1;
    st.main.rooted = true;
    st.main.tree = EmgNode{item.silent() ? "ε" : phon_text(item.phon), item.category(), false, {}};
    attach_held(st, st.main.tree, item.category());
    queue_expectations(st.main, item, pre_of(item), pre_of(item).size(), {}, st.clock);
    st.main.rest = rest_of(item);
    log_action(st, "CPL", phon_text(item.phon), to_string(item.features));
    return true;
}

bool emg_merge_adjunct(EmgState& st, const LexicalItem& item, const Lexicon& lex) {
    if (carries_licensee(item) || !pre_of(item).empty()) return false;
    const AdjunctionRule* rule = lex.adjunction_for(phon_text(item.phon));
    if (rule == nullptr) return false;

    if (rule->left) {
        st.clock += 1;
        st.held.push_back(HeldAdjunct{item, rule->hosts});
        log_action(st, "ADJ", phon_text(item.phon), to_string(item.features) + " held");
        return true;
    }

    if (!st.main.rooted) return false;
    // Right adjuncts attach to the innermost right-frontier projection the
    // rule licenses.
    EmgNode* site = nullptr;
    for (EmgNode* n = &st.main.tree;; n = &n->children.back()) {
        if (std::find(rule->hosts.begin(), rule->hosts.end(), n->cat) != rule->hosts.end()) site = n;
        if (n->children.empty()) break;
    }
    if (site == nullptr) return false;
    st.clock += 1;
    site->children.push_back(EmgNode{phon_text(item.phon), item.category(), false, {}});
    log_action(st, "ADJ", phon_text(item.phon), to_string(item.features));
    return true;
}

bool emg_move_store(EmgState& st, const LexicalItem& item) {
    st.clock += 1;
    EmgChain chain;
    chain.rooted = true;
    chain.tree = EmgNode{item.silent() ? "ε" : phon_text(item.phon), item.category(), false, {}};
    queue_expectations(chain, item, pre_of(item), pre_of(item).size(), {}, st.clock);
    chain.rest = rest_of(item);
    chain.stored_at = st.clock;
    st.memory.push_back(std::move(chain));
    st.peak_memory = std::max(st.peak_memory, st.memory.size());
    log_action(st, "STORE", phon_text(item.phon), to_string(item.features));
    return true;
}

bool emg_move_discharge(EmgState& st) {
    if (st.memory.empty()) return false;
    EmgChain& src = st.memory.back();
    if (!src.exps.empty() || src.rest.empty()) return false;
    const Feature need = src.rest.front();

    // Receivers in priority order: the main structure, then memory entries
    // below the source.  Only each receiver's next expectation is eligible.
    std::vector<EmgChain*> receivers;
    receivers.push_back(&st.main);
    for (std::size_t i = st.memory.size() - 1; i-- > 0;) receivers.push_back(&st.memory[i]);

    for (EmgChain* recv : receivers) {
        if (!recv->rooted || recv->exps.empty()) continue;
        const Expectation& e = recv->exps.front();
        if (!check_match(e.feature, need)) continue;
        if (e.birth <= src.stored_at) continue; // raised before the store: filling it would reorder
        bool mover = src.rest.size() > 1;       // licensees remain, so this chain may land anywhere
        if (need.kind == FeatureKind::Cat && !e.from_memory && !mover) continue;

        st.clock += 1;
        EmgNode* parent = node_at(recv->tree, e.site);
        src.rest.erase(src.rest.begin());
        bool done = src.rest.empty();
        if (parent != nullptr) {
            if (need.kind == FeatureKind::Cat) {
                if (done) {
                    EmgNode landed = src.tree;
                    landed.gap = true;
                    parent->children.push_back(std::move(landed));
                } else {
                    parent->children.push_back(EmgNode{src.tree.label, need.symbol, true, {}});
                }
            } else if (done) {
                parent->children.push_back(src.tree);
            }
        }
        std::string shown = src.tree.label;
        recv->exps.erase(recv->exps.begin());
        if (done) st.memory.pop_back();
        log_action(st, "DISCH", shown, to_string(need));
        return true;
    }
    return false;
}

bool emg_insert_silent(EmgState& st, const LexicalItem& item) {
    if (!item.silent()) return false;
    if (fill_front_from_input(st, st.main, item)) {
        st.silents += 1;
        log_action(st, "CPL", "ε", to_string(item.features));
        return true;
    }
    for (std::size_t i = st.memory.size(); i-- > 0;) {
        EmgState probe = st;
        if (fill_front_from_input(probe, probe.memory[i], item)) {
            st = std::move(probe);
            st.silents += 1;
            log_action(st, "CPL", "ε", to_string(item.features));
            return true;
        }
    }
    return false;
}

bool emg_wrap_silent(EmgState& st, const LexicalItem& item) {
    if (!item.silent()) return false;
    if (!st.main.complete_projection()) return false;
    std::vector<Feature> pre = pre_of(item);
    if (pre.empty() || !is_sel(pre.front())) return false;
    if (pre.front().symbol != st.main.rest.front().symbol) return false;

    st.clock += 1;
    EmgNode root{"ε", item.category(), false, {}};
    root.children.push_back(std::move(st.main.tree));
    st.main.tree = std::move(root);
    st.main.exps.clear();
    queue_expectations(st.main, item, pre, 0, {}, st.clock);
    st.main.rest = rest_of(item);
    st.silents += 1;
    log_action(st, "CPL", "ε", to_string(item.features));
    return true;
}

bool emg_accepts(const EmgState& st, const std::string& start) {
    return st.memory.empty() && st.held.empty() && st.main.complete_projection() &&
           st.main.rest.front() == Feature{FeatureKind::Cat, start};
}

std::vector<EmgState> emg_successors(const EmgState& st, const std::string* token,
                                     const Lexicon& lex, const EmgConfig& cfg) {
    std::vector<EmgState> out;
    auto attempt = [&](bool consumes, auto&& op) {
        EmgState next = st;
        if (op(next)) {
            if (consumes) next.consumed += 1;
            out.push_back(std::move(next));
        }
    };

    if (token != nullptr) {
        std::vector<std::string> storable = memory_fillable_categories(lex);
        for (std::size_t idx : lex.entries_for_token(*token)) {
            const LexicalItem& item = lex.items[idx];
            if (carries_licensee(item)) {
                // A licensee names a landing position, so the item never
                // integrates in place: it must wait in memory.
                attempt(true, [&](EmgState& s) { return emg_move_store(s, item); });
                continue;
            }
            attempt(true, [&](EmgState& s) { return emg_merge_complement(s, item); });
            attempt(true, [&](EmgState& s) { return emg_merge_grow(s, item); });
            attempt(true, [&](EmgState& s) { return emg_merge_mirror(s, item); });
            attempt(true, [&](EmgState& s) { return emg_merge_root(s, item); });
            attempt(true, [&](EmgState& s) { return emg_merge_adjunct(s, item, lex); });
            if (std::find(storable.begin(), storable.end(), item.category()) != storable.end())
                attempt(true, [&](EmgState& s) { return emg_move_store(s, item); });
        }
    }
    attempt(false, [&](EmgState& s) { return emg_move_discharge(s); });
    if (st.silents < cfg.silent_allowance) {
        for (std::size_t idx : lex.silent_entries()) {
            const LexicalItem& item = lex.items[idx];
            attempt(false, [&](EmgState& s) { return emg_insert_silent(s, item); });
            attempt(false, [&](EmgState& s) { return emg_wrap_silent(s, item); });
        }
    }
    return out;
}

namespace {

struct Driver {
    Driver(const Lexicon& l, const Phon& s, const EmgConfig& c) : lex(l), sentence(s), cfg(c) {}

    const Lexicon& lex;
    const Phon& sentence;
    const EmgConfig& cfg;
    std::size_t explored = 0;
    std::size_t furthest = 0;
    bool budget_hit = false;
    std::optional<EmgState> found;

    bool run(const EmgState& st) {
        if (budget_hit) return false;
        if (++explored > cfg.backtrack_budget) {
            budget_hit = true;
            return false;
        }
        furthest = std::max(furthest, st.consumed);
        if (st.consumed == sentence.size() && emg_accepts(st, lex.start)) {
            found = st;
            return true;
        }
        const std::string* token = st.consumed < sentence.size() ? &sentence[st.consumed] : nullptr;
        for (const EmgState& next : emg_successors(st, token, lex, cfg))
            if (run(next)) return true;
        return false;
    }
};

} // namespace

EmgResult emg_parse(const Lexicon& lex, const Phon& sentence, const EmgConfig& cfg) {
    EmgResult result;
    for (std::size_t i = 0; i < sentence.size(); ++i) {
        if (lex.entries_for_token(sentence[i]).empty()) {
            result.failure = EmgFailure::UnknownToken;
            result.stuck_at = i;
            return result;
        }
    }

    Driver driver{lex, sentence, cfg};
    EmgState initial;
    initial.trace_enabled = cfg.record_trace;
    if (driver.run(initial)) {
        const EmgState& st = *driver.found;
        result.success = true;
        result.consumed = st.consumed;
        result.peak_memory = st.peak_memory;
        result.trace = st.trace;
        result.tree = st.main.tree;
        return result;
    }
    result.failure = driver.budget_hit ? EmgFailure::Budget : EmgFailure::NoParse;
    result.stuck_at = driver.furthest;
    return result;
}

} // namespace mglab
