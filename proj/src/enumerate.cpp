#include "mglab/enumerate.hpp"

#include <algorithm>
#include <map>
#include <memory>

namespace mglab {

namespace {

/// Derivation-tree node; flattened into a step list only for surviving
/// complete derivations.
struct DTree {
    StepKind kind;
    std::size_t item = 0; // Select: lexicon index
    std::shared_ptr<const DTree> head;
    std::shared_ptr<const DTree> arg;
};
using DTreePtr = std::shared_ptr<const DTree>;

struct State {
    Expression expr;
    DTreePtr dtree;
    std::size_t ops = 0; // merges + moves
};

/// Canonical step order: all selections first (in head-first traversal
/// order), then merges and moves bottom-up.  Keeping selections contiguous is
/// what makes the batch step count meaningful.  Subtrees are shared between
/// derivation trees, so both passes walk by occurrence, never by node
/// identity: the same node reached twice is two selections of the same entry.
Derivation flatten(const DTreePtr& root, const Lexicon& lex) {
    Derivation d;
    std::vector<std::size_t> leaf_steps;
    auto walk_leaves = [&](auto&& self, const DTree* node) -> void {
        if (node->kind == StepKind::Select) {
            leaf_steps.push_back(d.steps.size());
            DerivationStep s;
            s.kind = StepKind::Select;
            s.item = lex.items[node->item];
            d.steps.push_back(std::move(s));
            return;
        }
        self(self, node->head.get());
        if (node->arg)
            self(self, node->arg.get());
    };
    walk_leaves(walk_leaves, root.get());

    std::size_t cursor = 0;
    auto walk_ops = [&](auto&& self, const DTree* node) -> std::size_t {
        if (node->kind == StepKind::Select)
            return leaf_steps[cursor++];
        std::size_t head_step = self(self, node->head.get());
        std::size_t arg_step = node->arg ? self(self, node->arg.get()) : 0;
        DerivationStep s;
        s.kind = node->kind;
        s.head = head_step;
        if (node->arg)
            s.arg = arg_step;
        d.steps.push_back(std::move(s));
        return d.steps.size() - 1;
    };
    walk_ops(walk_ops, root.get());
    return d;
}

std::size_t total_tokens(const Expression& e) {
    std::size_t n = e.main.yield.size();
    for (const Chain& m : e.movers)
        n += m.yield.size();
    return n;
}

/// Shared enumeration core.  `keep` prunes states (must be monotone: a
/// dropped state's descendants would all be dropped); `on_complete` receives
/// every complete state.
template <typename Keep, typename OnComplete>
void enumerate(const Lexicon& lex, const EnumerationConfig& cfg, Keep keep, OnComplete on_complete) {
    if (lex.items.empty() || cfg.max_leaves == 0)
        return;
    std::vector<std::vector<State>> bucket(cfg.max_leaves + 1);
    std::size_t states = 0;

    auto admit = [&](std::vector<State>& out, State s, std::size_t leaves) {
        if (leaves + s.ops > cfg.max_steps)
            return;
        if (!keep(s.expr))
            return;
        if (++states > cfg.state_cap)
            throw BoundExceeded("enumeration exceeded state cap of " + std::to_string(cfg.state_cap));
        if (is_complete(s.expr, lex.start))
            on_complete(s);
        out.push_back(std::move(s));
    };

    for (std::size_t k = 1; k <= cfg.max_leaves; ++k) {
        std::vector<State>& out = bucket[k];
        if (k == 1) {
            for (std::size_t i = 0; i < lex.items.size(); ++i) {
                State s;
                s.expr = select(lex.items[i]);
                auto node = std::make_shared<DTree>();
                node->kind = StepKind::Select;
                node->item = i;
                s.dtree = std::move(node);
                admit(out, std::move(s), k);
            }
        } else {
            for (std::size_t i = 1; i < k; ++i) {
                for (const State& a : bucket[i]) {
                    for (const State& b : bucket[k - i]) {
                        try {
                            State s;
                            s.expr = merge(a.expr, b.expr, lex.start);
                            auto node = std::make_shared<DTree>();
                            node->kind = StepKind::Merge;
                            node->head = a.dtree;
                            node->arg = b.dtree;
                            s.dtree = std::move(node);
                            s.ops = a.ops + b.ops + 1;
                            admit(out, std::move(s), k);
                        } catch (const DerivationError&) {
                            // not a licit combination; skip
                        }
                    }
                }
            }
        }
        // Close the bucket under move before it feeds larger expressions.
        for (std::size_t i = 0; i < out.size(); ++i) {
            const State& s = out[i];
            if (s.expr.main.features.empty() ||
                s.expr.main.features.front().kind != FeatureKind::LicPlus)
                continue;
            try {
                State next;
                next.expr = mglab::move(s.expr);
                auto node = std::make_shared<DTree>();
                node->kind = StepKind::Move;
                node->head = s.dtree;
                next.dtree = std::move(node);
                next.ops = s.ops + 1;
                admit(out, std::move(next), k);
            } catch (const DerivationError&) {
            }
        }
    }
}

void sort_sentences(std::vector<std::pair<Phon, Derivation>>& found) {
    std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first)
            return a.first < b.first;
        return derivation_key(a.second) < derivation_key(b.second);
    });
}

} // namespace

std::vector<DerivedSentence> derive_all(const Lexicon& lex, const EnumerationConfig& cfg) {
    std::vector<std::pair<Phon, Derivation>> found;
    enumerate(
        lex, cfg, [](const Expression&) { return true; },
        [&](const State& s) { found.emplace_back(s.expr.main.yield, flatten(s.dtree, lex)); });
    sort_sentences(found);
    std::vector<DerivedSentence> out;
    out.reserve(found.size());
    for (auto& [yield, d] : found)
        out.push_back({std::move(yield), std::move(d)});
    return out;
}

RecognitionResult recognize(const Lexicon& lex, const Phon& sentence, const RecognizeConfig& cfg) {
    RecognitionResult res;
    std::vector<std::string> vocab = lex.vocabulary();
    for (std::size_t i = 0; i < sentence.size(); ++i) {
        if (std::find(vocab.begin(), vocab.end(), sentence[i]) == vocab.end()) {
            res.diagnostic = "token " + std::to_string(i + 1) + " '" + sentence[i] +
                             "' is not pronounced by any entry";
            return res;
        }
    }

    // A state can only ever extend its pronounced material, so anything that
    // already uses a token more often than the sentence does is dead.
    std::map<std::string, std::size_t> budget;
    for (const std::string& tok : sentence)
        ++budget[tok];
    auto fits = [&](const Expression& e) {
        if (total_tokens(e) > sentence.size())
            return false;
        std::map<std::string, std::size_t> used;
        auto count = [&](const Phon& yield) {
            for (const std::string& tok : yield)
                ++used[tok];
        };
        count(e.main.yield);
        for (const Chain& m : e.movers)
            count(m.yield);
        for (const auto& [tok, n] : used) {
            auto it = budget.find(tok);
            if (it == budget.end() || n > it->second)
                return false;
        }
        return true;
    };

    EnumerationConfig ecfg;
    ecfg.max_leaves = sentence.size() + cfg.allowance;
    ecfg.max_steps = cfg.max_steps;
    ecfg.state_cap = cfg.state_cap;

    std::vector<std::pair<Phon, Derivation>> found;
    enumerate(lex, ecfg, fits, [&](const State& s) {
        if (s.expr.main.yield == sentence)
            found.emplace_back(s.expr.main.yield, flatten(s.dtree, lex));
    });
    sort_sentences(found);
    for (auto& [yield, d] : found)
        res.witnesses.push_back(std::move(d));
    res.accepted = !res.witnesses.empty();
    return res;
}

std::set<Phon> unconstrained_merge_demo(const Lexicon& lex, std::size_t max_leaves,
                                        std::size_t state_cap) {
    std::set<Phon> all;
    if (lex.items.empty() || max_leaves == 0)
        return all;
    std::vector<std::set<Phon>> bucket(max_leaves + 1);
    std::size_t states = 0;
    auto admit = [&](std::set<Phon>& out, Phon yield) {
        if (out.insert(std::move(yield)).second && ++states > state_cap)
            throw BoundExceeded("demo exceeded state cap of " + std::to_string(state_cap));
    };
    for (const LexicalItem& item : lex.items)
        admit(bucket[1], item.phon);
    for (std::size_t k = 2; k <= max_leaves; ++k) {
        for (std::size_t i = 1; i < k; ++i) {
            for (const Phon& a : bucket[i]) {
                for (const Phon& b : bucket[k - i]) {
                    Phon ab = a;
                    ab.insert(ab.end(), b.begin(), b.end());
                    admit(bucket[k], std::move(ab));
                    Phon ba = b;
                    ba.insert(ba.end(), a.begin(), a.end());
                    admit(bucket[k], std::move(ba));
                }
            }
        }
    }
    for (const auto& yields : bucket)
        all.insert(yields.begin(), yields.end());
    return all;
}

} // namespace mglab
