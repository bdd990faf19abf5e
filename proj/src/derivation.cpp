#include "mglab/derivation.hpp"

#include <algorithm>
#include <set>

namespace mglab {

std::string derivation_key(const Derivation& d) {
    std::string out;
    for (const DerivationStep& s : d.steps) {
        switch (s.kind) {
        case StepKind::Select:
            out += "S(" + to_string(s.item) + ")";
            break;
        case StepKind::Merge:
            out += "M(" + std::to_string(s.head) + "," + std::to_string(s.arg) + ")";
            break;
        case StepKind::Move:
            out += "V(" + std::to_string(s.head) + ")";
            break;
        }
    }
    return out;
}

int count_steps(const Derivation& d, StepCountMode mode) {
    if (mode == StepCountMode::PerItem)
        return static_cast<int>(d.steps.size());
    int count = 0;
    bool in_select_run = false;
    for (const DerivationStep& s : d.steps) {
        if (s.kind == StepKind::Select) {
            if (!in_select_run)
                ++count;
            in_select_run = true;
        } else {
            ++count;
            in_select_run = false;
        }
    }
    return count;
}

std::string Replay::trace_text() const {
    std::string out;
    for (const std::string& line : trace_lines)
        out += line + "\n";
    return out;
}

std::vector<long> Replay::leaves_labeled(const std::string& label) const {
    std::vector<long> out;
    for (const auto& [id, node] : nodes)
        if (node->leaf() && !node->trace && node->label == label)
            out.push_back(id);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

void collect_subtree(const TreePtr& node, std::set<long>& out) {
    if (!node)
        return;
    out.insert(node->id);
    for (const TreePtr& child : node->children)
        collect_subtree(child, out);
}

void index_nodes(const TreePtr& node, std::unordered_map<long, TreePtr>& nodes) {
    if (!node)
        return;
    nodes.emplace(node->id, node);
    for (const TreePtr& child : node->children)
        index_nodes(child, nodes);
}

} // namespace

Replay replay(const Derivation& d, const Lexicon& lex) {
    Replay r;
    r.start = lex.start;
    std::vector<bool> consumed(d.steps.size(), false);
    long next_id = 0;

    auto operand = [&](std::size_t idx, std::size_t at) -> const Expression& {
        if (idx >= at)
            throw DerivationError(DerivationFault::InvalidStep,
                                  "step " + std::to_string(at) + " references step " +
                                      std::to_string(idx) + " which does not precede it");
        if (consumed[idx])
            throw DerivationError(DerivationFault::InvalidStep,
                                  "step " + std::to_string(at) + " reuses the result of step " +
                                      std::to_string(idx));
        consumed[idx] = true;
        return r.results[idx];
    };

    for (std::size_t i = 0; i < d.steps.size(); ++i) {
        const DerivationStep& s = d.steps[i];
        std::string line = std::to_string(i) + " ";
        switch (s.kind) {
        case StepKind::Select: {
            bool known = std::find(lex.items.begin(), lex.items.end(), s.item) != lex.items.end();
            if (!known)
                throw DerivationError(DerivationFault::InvalidStep,
                                      "step " + std::to_string(i) + " selects '" + to_string(s.item) +
                                          "' which is not in lexicon '" + lex.name + "'");
            r.results.push_back(select(s.item, &next_id));
            line += "SELECT " + to_string(s.item);
            break;
        }
        case StepKind::Merge: {
            const Expression& head = operand(s.head, i);
            const Expression& arg = operand(s.arg, i);
            long hx = head.main.tree->id;
            long ax = arg.main.tree->id;
            r.results.push_back(merge(head, arg, lex.start, &next_id));
            r.pairings.emplace_back(hx, ax);
            r.pairings.emplace_back(ax, hx);
            line += "MERGE #" + std::to_string(s.head) + " #" + std::to_string(s.arg) + " → " +
                    to_string(r.results.back());
            break;
        }
        case StepKind::Move: {
            const Expression& src = operand(s.head, i);
            if (src.main.features.empty() || src.main.features.front().kind != FeatureKind::LicPlus)
                throw DerivationError(DerivationFault::FeatureMismatch,
                                      "move: main chain does not lead with a licensor");
            std::size_t hit = matching_mover(src, src.main.features.front());
            if (hit == src.movers.size())
                throw DerivationError(DerivationFault::NoMatchingMover,
                                      "move: no mover waits on -" + src.main.features.front().symbol);
            long mx = src.movers[hit].tree->id;
            long bx = src.main.tree->id;
            r.results.push_back(mglab::move(src, &next_id));
            r.pairings.emplace_back(mx, bx);
            r.pairings.emplace_back(bx, mx);
            line += "MOVE #" + std::to_string(s.head) + " → " + to_string(r.results.back());
            break;
        }
        }
        r.trace_lines.push_back(line);
    }

    if (r.results.empty())
        throw DerivationError(DerivationFault::InvalidStep, "empty derivation");
    for (std::size_t i = 0; i + 1 < d.steps.size(); ++i)
        if (!consumed[i])
            throw DerivationError(DerivationFault::InvalidStep,
                                  "step " + std::to_string(i) + " produced a result nothing consumed");

    const Expression& last = r.results.back();
    index_nodes(last.main.tree, r.nodes);
    for (const Chain& m : last.movers)
        index_nodes(m.tree, r.nodes);
    // Intermediate trees are sub-trees of the final one except for chains that
    // never landed; indexing every step keeps trace/tree queries total.
    for (const Expression& e : r.results) {
        index_nodes(e.main.tree, r.nodes);
        for (const Chain& m : e.movers)
            index_nodes(m.tree, r.nodes);
    }
    return r;
}

bool c_commands(const Replay& r, long x, long y) {
    if (!r.nodes.count(x))
        throw DerivationError(DerivationFault::InvalidStep, "unknown node id " + std::to_string(x));
    if (!r.nodes.count(y))
        throw DerivationError(DerivationFault::InvalidStep, "unknown node id " + std::to_string(y));
    if (x == y)
        return false;
    for (const auto& [from, to] : r.pairings) {
        if (from != x)
            continue;
        std::set<long> terms;
        collect_subtree(r.nodes.at(to), terms);
        if (terms.count(y))
            return true;
    }
    return false;
}

std::vector<long> commanded_by(const Replay& r, long x) {
    std::set<long> out;
    for (const auto& [from, to] : r.pairings) {
        if (from != x)
            continue;
        collect_subtree(r.nodes.at(to), out);
    }
    out.erase(x);
    return {out.begin(), out.end()};
}

} // namespace mglab
