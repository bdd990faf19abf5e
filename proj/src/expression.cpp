#include "mglab/expression.hpp"

#include <algorithm>
#include <unordered_set>

namespace mglab {

namespace {

TreePtr make_node(TreeNode node, long* next_id) {
    if (next_id)
        node.id = (*next_id)++;
    return std::make_shared<const TreeNode>(std::move(node));
}

TreePtr trace_node(long* next_id, long trace_of) {
    TreeNode n;
    n.label = "t";
    n.trace = true;
    n.trace_of = trace_of;
    return make_node(std::move(n), next_id);
}

/// Every mover must wait on a distinct licensee symbol.
void enforce_smc(const std::vector<Chain>& movers, const std::string& op) {
    std::unordered_set<std::string> leading;
    for (const Chain& m : movers) {
        if (m.features.empty() || m.features.front().kind != FeatureKind::LicMinus)
            throw DerivationError(DerivationFault::SmcViolation,
                                  op + ": mover is not waiting on a licensee");
        if (!leading.insert(m.features.front().symbol).second)
            throw DerivationError(DerivationFault::SmcViolation,
                                  op + ": two movers wait on -" + m.features.front().symbol);
    }
}

Phon concat(const Phon& a, const Phon& b) {
    Phon out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

} // namespace

std::string bracket_string(const TreePtr& tree) {
    if (!tree)
        return "[]";
    std::string out = "[" + (tree->trace ? "t" : tree->label);
    for (const TreePtr& child : tree->children)
        out += " " + bracket_string(child);
    return out + "]";
}

namespace {

std::string set_pair_body(const TreePtr& tree) {
    if (tree->trace)
        return "t";
    if (tree->leaf())
        return tree->label;
    std::string inner;
    for (const TreePtr& child : tree->children) {
        if (!inner.empty())
            inner += ", ";
        inner += set_pair_body(child);
    }
    return tree->label + " {" + inner + "}";
}

} // namespace

std::string set_pair_string(const TreePtr& tree) {
    if (!tree)
        return "{}";
    if (tree->leaf())
        return "{" + tree->label + "}";
    return "{" + set_pair_body(tree) + "}";
}

std::string to_string(const Expression& e) {
    std::string out = "⟨" + phon_text(e.main.yield) + "⟩ :: " + to_string(e.main.features);
    for (const Chain& m : e.movers)
        out += " [mover: ⟨" + phon_text(m.yield) + "⟩ :: " + to_string(m.features) + "]";
    return out;
}

Expression select(const LexicalItem& item, long* next_id) {
    Expression e;
    e.main.yield = item.phon;
    e.main.features = item.features;
    TreeNode leaf;
    leaf.label = phon_text(item.phon);
    e.main.tree = make_node(std::move(leaf), next_id);
    return e;
}

Expression merge(const Expression& head, const Expression& arg, const std::string& start,
                 long* next_id) {
    if (is_complete(head, start) || is_complete(arg, start))
        throw DerivationError(DerivationFault::InputComplete,
                              "merge: input is already a complete expression");
    if (head.main.features.empty() || arg.main.features.empty())
        throw DerivationError(DerivationFault::FeatureMismatch, "merge: exhausted feature list");

    const Feature& probe = head.main.features.front();
    const Feature& goal = arg.main.features.front();
    if ((probe.kind != FeatureKind::SelRight && probe.kind != FeatureKind::SelLeft) ||
        !check_match(probe, goal))
        throw DerivationError(DerivationFault::FeatureMismatch,
                              "merge: " + to_string(probe) + " does not select " + to_string(goal));

    // Shell convention: a SEL_R argument lands right only on the head's first
    // combination; every later argument stacks to the left.
    bool arg_right = probe.kind == FeatureKind::SelRight && head.main.first_combination();

    Chain checked_arg = arg.main;
    checked_arg.features.erase(checked_arg.features.begin());
    checked_arg.checked += 1;
    bool arg_moves = !checked_arg.features.empty();

    Expression out;
    out.main.features = head.main.features;
    out.main.features.erase(out.main.features.begin());
    out.main.checked = head.main.checked + 1;

    long arg_root = checked_arg.tree ? checked_arg.tree->id : -1;
    TreePtr arg_slot = arg_moves ? trace_node(next_id, arg_root) : checked_arg.tree;
    TreeNode node;
    node.label = head.main.tree ? head.main.tree->label : phon_text(head.main.yield);
    if (arg_right) {
        out.main.yield = arg_moves ? head.main.yield : concat(head.main.yield, checked_arg.yield);
        node.children = {head.main.tree, arg_slot};
    } else {
        out.main.yield = arg_moves ? head.main.yield : concat(checked_arg.yield, head.main.yield);
        node.children = {arg_slot, head.main.tree};
    }
    out.main.tree = make_node(std::move(node), next_id);

    out.movers = head.movers;
    out.movers.insert(out.movers.end(), arg.movers.begin(), arg.movers.end());
    if (arg_moves)
        out.movers.push_back(std::move(checked_arg));
    enforce_smc(out.movers, "merge");
    return out;
}

std::size_t matching_mover(const Expression& e, const Feature& probe) {
    for (std::size_t i = 0; i < e.movers.size(); ++i)
        if (!e.movers[i].features.empty() && check_match(probe, e.movers[i].features.front()))
            return i; // SMC guarantees at most one candidate
    return e.movers.size();
}

Expression move(const Expression& e, long* next_id) {
    if (e.main.features.empty() || e.main.features.front().kind != FeatureKind::LicPlus)
        throw DerivationError(DerivationFault::FeatureMismatch,
                              "move: main chain does not lead with a licensor");
    const Feature& probe = e.main.features.front();
    std::size_t hit = matching_mover(e, probe);
    if (hit == e.movers.size())
        throw DerivationError(DerivationFault::NoMatchingMover,
                              "move: no mover waits on -" + probe.symbol);

    Expression out;
    out.main = e.main;
    out.main.features.erase(out.main.features.begin());
    out.main.checked += 1;

    Chain mover = e.movers[hit];
    mover.features.erase(mover.features.begin());
    mover.checked += 1;
    for (std::size_t i = 0; i < e.movers.size(); ++i)
        if (i != hit)
            out.movers.push_back(e.movers[i]);

    if (mover.features.empty()) {
        // Final landing: the chain surfaces to the left of the main yield.
        out.main.yield = concat(mover.yield, out.main.yield);
        TreeNode node;
        node.label = out.main.tree ? out.main.tree->label : phon_text(out.main.yield);
        node.children = {mover.tree, out.main.tree};
        out.main.tree = make_node(std::move(node), next_id);
    } else {
        out.movers.push_back(std::move(mover));
    }
    enforce_smc(out.movers, "move");
    return out;
}

bool is_complete(const Expression& e, const std::string& start) {
    return e.movers.empty() && e.main.features.size() == 1 &&
           e.main.features.front() == Feature{FeatureKind::Cat, start};
}

Phon linearize(const Expression& e, const std::string& start) {
    if (!is_complete(e, start))
        throw DerivationError(DerivationFault::NotComplete,
                              "linearize: expression is not a complete " + start + " phrase");
    return e.main.yield;
}

} // namespace mglab
