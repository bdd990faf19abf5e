#include <algorithm>
#include <iostream>
#include <limits>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "mglab/bundled.hpp"
#include "mglab/derivation.hpp"
#include "mglab/emg.hpp"
#include "mglab/enumerate.hpp"
#include "mglab/lexicon_parser.hpp"
#include "mglab/metrics.hpp"
#include "mglab/runner.hpp"

using json = nlohmann::ordered_json;
using namespace mglab;

namespace {

/// Exit contract: 0 success, 1 the grammar or suite fails the query's
/// verdict, 2 usage, IO, or resource errors.
constexpr int kOk = 0;
constexpr int kVerdictFail = 1;
constexpr int kUsage = 2;

struct Options {
    std::string lexicon_path;
    std::string bundled;
    std::string suite_path;
    std::string data_dir;
    std::string format = "text";
    std::string engine = "classic";
    std::string steps_mode = "batch";
    std::size_t max_leaves = 6;
    std::size_t max_steps = 0; // 0 means unlimited
    std::size_t state_cap = 500000;
    std::size_t allowance = 3;
    std::size_t backtrack_budget = 100000;
    std::size_t seed = 0;

    bool machine() const { return format == "machine"; }
    std::size_t steps_limit() const {
        return max_steps == 0 ? std::numeric_limits<std::size_t>::max() : max_steps;
    }
};

int usage_error(const std::string& why) {
    std::cerr << "error: " << why << "\n";
    return kUsage;
}

/// Bounds that drive a search must be positive; 0 would silence every query.
bool bounds_positive(const Options& o) {
    return o.max_leaves > 0 && o.state_cap > 0 && o.backtrack_budget > 0;
}

Lexicon resolve_lexicon(const Options& o) {
    if (!o.data_dir.empty()) set_data_dir(o.data_dir);
    if (!o.bundled.empty()) return load_bundled_lexicon(o.bundled);
    if (o.lexicon_path.empty())
        throw std::invalid_argument("a lexicon is required (--lexicon <file> or --bundled <name>)");
    return load_lexicon(o.lexicon_path);
}

/// Bundled name if one matches, otherwise a file path.
Lexicon resolve_named_lexicon(const std::string& ref) {
    const auto& names = bundled_lexicon_names();
    if (std::find(names.begin(), names.end(), ref) != names.end())
        return load_bundled_lexicon(ref);
    return load_lexicon(ref);
}

std::string angled(const Phon& s) {
    std::string out = "⟨";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i > 0) out += " ";
        out += s[i];
    }
    return out + "⟩";
}

json phon_json(const Phon& s) {
    return json(s);
}

void emit(const json& payload) {
    std::cout << payload.dump(2) << "\n";
}

std::string run_header(const Lexicon& lex, const Options& o, const std::string& bounds) {
    std::ostringstream out;
    out << "# lexicon " << lex.name << " | engine " << o.engine << " | " << bounds << "\n";
    return out.str();
}

json config_json(const Options& o) {
    json cfg;
    cfg["engine"] = o.engine;
    cfg["max_leaves"] = o.max_leaves;
    if (o.max_steps > 0) cfg["max_steps"] = o.max_steps;
    cfg["state_cap"] = o.state_cap;
    cfg["allowance"] = o.allowance;
    cfg["backtrack_budget"] = o.backtrack_budget;
    return cfg;
}

int cmd_validate(const Options& o) {
    Lexicon lex = resolve_lexicon(o); // loaders validate; failures throw
    if (o.machine()) {
        json out;
        out["command"] = "validate";
        out["lexicon"] = lex.name;
        out["valid"] = true;
        out["items"] = lex.items.size();
        out["silent_items"] = lex.silent_entries().size();
        out["inventory"] = json(lex.inventory);
        out["start"] = lex.start;
        out["movement_free"] = lex.movement_free();
        out["adjunction_rules"] = lex.adjunction.size();
        emit(out);
        return kOk;
    }
    std::cout << "lexicon " << lex.name << " | " << lex.items.size() << " items ("
              << lex.silent_entries().size() << " silent) | inventory " << lex.inventory.size()
              << " | start " << lex.start << "\n";
    std::cout << "movement_free " << (lex.movement_free() ? "yes" : "no") << "\n";
    std::cout << "adjunction_rules " << lex.adjunction.size() << "\n";
    std::cout << "ok\n";
    return kOk;
}

int cmd_derive(const Options& o, const Phon& sentence) {
    if (!bounds_positive(o)) return usage_error("all bounds must be positive");
    if (sentence.empty()) return usage_error("derive expects sentence tokens");
    Lexicon lex = resolve_lexicon(o);

    RecognizeConfig rc;
    rc.allowance = o.allowance;
    rc.max_steps = o.steps_limit();
    rc.state_cap = o.state_cap;
    RecognitionResult res = recognize(lex, sentence, rc);

    if (!res.accepted) {
        if (o.machine()) {
            json out;
            out["command"] = "derive";
            out["lexicon"] = lex.name;
            out["config"] = config_json(o);
            out["sentence"] = phon_json(sentence);
            out["derivable"] = false;
            out["diagnostic"] = res.diagnostic;
            emit(out);
        } else {
            std::cout << "underivable " << angled(sentence) << "\n";
            if (!res.diagnostic.empty()) std::cout << res.diagnostic << "\n";
        }
        return kVerdictFail;
    }

    const Derivation& d = res.witnesses.front();
    Replay r = replay(d, lex);
    int batch = count_steps(d, StepCountMode::Batch);
    int per_item = count_steps(d, StepCountMode::PerItem);
    const TreePtr& tree = r.final_expression().main.tree;

    if (o.machine()) {
        json out;
        out["command"] = "derive";
        out["lexicon"] = lex.name;
        out["config"] = config_json(o);
        out["sentence"] = phon_json(sentence);
        out["derivable"] = true;
        out["witnesses"] = res.witnesses.size();
        out["steps"] = json{{"per_item", per_item}, {"batch", batch}};
        out["trace"] = json(r.trace_lines);
        out["bracket"] = bracket_string(tree);
        out["sets"] = set_pair_string(tree);
        out["yield"] = phon_json(sentence);
        emit(out);
        return kOk;
    }

    std::ostringstream bounds;
    bounds << "allowance " << o.allowance << " state_cap " << o.state_cap;
    std::cout << run_header(lex, o, bounds.str());
    std::cout << r.trace_text();
    std::cout << "bracket " << bracket_string(tree) << "\n";
    std::cout << "sets " << set_pair_string(tree) << "\n";
    if (o.steps_mode == "per-item")
        std::cout << "steps(per-item)=" << per_item << "\n";
    else
        std::cout << "steps(batch)=" << batch << "\n";
    std::cout << angled(sentence) << "\n";
    return kOk;
}

int cmd_generate(const Options& o) {
    if (!bounds_positive(o)) return usage_error("all bounds must be positive");
    Lexicon lex = resolve_lexicon(o);

    EnumerationConfig cfg;
    cfg.max_leaves = o.max_leaves;
    cfg.max_steps = o.steps_limit();
    cfg.state_cap = o.state_cap;
    std::vector<DerivedSentence> all = derive_all(lex, cfg);

    std::vector<Phon> yields;
    for (const DerivedSentence& s : all)
        if (yields.empty() || yields.back() != s.yield) yields.push_back(s.yield);

    if (o.machine()) {
        json out;
        out["command"] = "generate";
        out["lexicon"] = lex.name;
        out["config"] = config_json(o);
        json sentences = json::array();
        for (const Phon& y : yields) sentences.push_back(phon_json(y));
        out["sentences"] = sentences;
        out["sentence_count"] = yields.size();
        out["derivation_count"] = all.size();
        emit(out);
    } else {
        std::ostringstream bounds;
        bounds << "max_leaves " << o.max_leaves << " state_cap " << o.state_cap;
        std::cout << run_header(lex, o, bounds.str());
        for (const Phon& y : yields) std::cout << angled(y) << "\n";
        std::cout << "sentences " << yields.size() << " derivations " << all.size() << "\n";
    }
    return yields.empty() ? kVerdictFail : kOk;
}

int cmd_recognize(const Options& o, const Phon& sentence) {
    if (!bounds_positive(o)) return usage_error("all bounds must be positive");
    if (sentence.empty()) return usage_error("recognize expects sentence tokens");
    Lexicon lex = resolve_lexicon(o);

    if (o.engine == "emg") {
        EmgConfig cfg;
        cfg.backtrack_budget = o.backtrack_budget;
        cfg.silent_allowance = o.allowance;
        EmgResult r = emg_parse(lex, sentence, cfg);
        if (r.failure == EmgFailure::Budget)
            return usage_error("indeterminate: search budget exhausted at token " +
                               std::to_string(r.stuck_at));
        if (o.machine()) {
            json out;
            out["command"] = "recognize";
            out["lexicon"] = lex.name;
            out["config"] = config_json(o);
            out["sentence"] = phon_json(sentence);
            out["accepted"] = r.success;
            if (r.success)
                out["peak_memory"] = r.peak_memory;
            else
                out["stuck_at"] = r.stuck_at;
            emit(out);
        } else {
            std::ostringstream bounds;
            bounds << "allowance " << o.allowance << " backtrack_budget " << o.backtrack_budget;
            std::cout << run_header(lex, o, bounds.str());
            if (r.success)
                std::cout << "accept " << angled(sentence) << " peak_memory " << r.peak_memory
                          << "\n";
            else
                std::cout << "reject " << angled(sentence) << " (no integration past token "
                          << r.stuck_at << ")\n";
        }
        return r.success ? kOk : kVerdictFail;
    }

    RecognizeConfig rc;
    rc.allowance = o.allowance;
    rc.max_steps = o.steps_limit();
    rc.state_cap = o.state_cap;
    RecognitionResult res = recognize(lex, sentence, rc);
    if (o.machine()) {
        json out;
        out["command"] = "recognize";
        out["lexicon"] = lex.name;
        out["config"] = config_json(o);
        out["sentence"] = phon_json(sentence);
        out["accepted"] = res.accepted;
        out["witnesses"] = res.witnesses.size();
        if (!res.diagnostic.empty()) out["diagnostic"] = res.diagnostic;
        emit(out);
    } else {
        std::ostringstream bounds;
        bounds << "allowance " << o.allowance << " state_cap " << o.state_cap;
        std::cout << run_header(lex, o, bounds.str());
        if (res.accepted)
            std::cout << "accept " << angled(sentence) << " witnesses " << res.witnesses.size()
                      << "\n";
        else
            std::cout << "reject " << angled(sentence)
                      << (res.diagnostic.empty() ? "" : " (" + res.diagnostic + ")") << "\n";
    }
    return res.accepted ? kOk : kVerdictFail;
}

json report_json(const SuiteReport& rep) {
    json out;
    out["suite"] = rep.suite;
    out["phenomenon"] = rep.phenomenon;
    out["lexicon"] = rep.lexicon;
    out["engine"] = to_string(rep.engine);
    json cfg;
    cfg["allowance"] = rep.config.allowance;
    cfg["state_cap"] = rep.config.state_cap;
    cfg["backtrack_budget"] = rep.config.backtrack_budget;
    if (rep.config.max_steps != std::numeric_limits<std::size_t>::max())
        cfg["max_steps"] = rep.config.max_steps;
    out["config"] = cfg;
    json pairs = json::array();
    for (const PairOutcome& p : rep.pairs)
        pairs.push_back(json{{"id", p.id},
                             {"good", to_string(p.good)},
                             {"bad", to_string(p.bad)},
                             {"verdict", to_string(p.verdict)}});
    out["pairs"] = pairs;
    json items = json::array();
    for (const ItemOutcome& i : rep.items) {
        json row;
        row["id"] = i.id;
        row["expect_good"] = i.expect_good;
        row["judgment"] = to_string(i.judgment);
        if (i.judgment == Judgment::Accept && rep.engine == Engine::Emg)
            row["peak_memory"] = i.peak_memory;
        items.push_back(row);
    }
    out["items"] = items;
    out["units"] = rep.units;
    out["correct"] = rep.correct_units;
    out["indeterminate"] = rep.indeterminate_units;
    if (rep.units > 0)
        out["accuracy"] = rep.accuracy;
    else
        out["accuracy"] = nullptr;
    return out;
}

RunConfig suite_config(const Options& o) {
    RunConfig cfg;
    cfg.engine = o.engine == "emg" ? Engine::Emg : Engine::Classic;
    cfg.allowance = o.allowance;
    cfg.max_steps = o.steps_limit();
    cfg.state_cap = o.state_cap;
    cfg.backtrack_budget = o.backtrack_budget;
    return cfg;
}

int cmd_bench(const Options& o) {
    if (!bounds_positive(o)) return usage_error("all bounds must be positive");
    if (!o.data_dir.empty()) set_data_dir(o.data_dir);

    Lexicon lex;
    TestSuite suite;
    if (!o.bundled.empty()) {
        const BundledEntry* entry = bundled_entry(o.bundled);
        if (entry == nullptr) return usage_error("no bundled suite named " + o.bundled);
        if (entry->emg_only && o.engine != "emg")
            return usage_error("suite " + o.bundled + " needs --engine emg: " + entry->note);
        lex = o.lexicon_path.empty() ? load_bundled_lexicon(o.bundled)
                                     : load_lexicon(o.lexicon_path);
        suite = o.suite_path.empty() ? load_bundled_suite(o.bundled) : load_suite(o.suite_path);
    } else {
        if (o.lexicon_path.empty() || o.suite_path.empty())
            return usage_error("bench expects --lexicon and --suite, or --bundled <name>");
        lex = load_lexicon(o.lexicon_path);
        suite = load_suite(o.suite_path);
    }

    SuiteReport rep = run_suite(lex, suite, suite_config(o));
    if (o.machine()) {
        json out;
        out["command"] = "bench";
        out["report"] = report_json(rep);
        emit(out);
    } else {
        std::cout << report_text(rep);
    }
    bool clean = rep.units > 0 && rep.correct_units == rep.units && rep.indeterminate_units == 0;
    return clean ? kOk : kVerdictFail;
}

std::string metrics_table(const GrammarMetrics& m) {
    std::ostringstream out;
    out << "inventory_bits " << m.inventory_bits << "\n";
    out << "lexicon_bits " << m.lexicon_bits << "\n";
    out << "total_bits " << m.total_bits << "\n";
    out << "item_count " << m.item_count << "\n";
    out << "feature_token_count " << m.feature_token_count << "\n";
    for (const ItemCost& c : m.per_item) out << c.entry << " | " << c.bits << "\n";
    return out.str();
}

json metrics_json(const std::string& name, const GrammarMetrics& m) {
    json out;
    out["grammar"] = name;
    out["inventory_bits"] = m.inventory_bits;
    out["lexicon_bits"] = m.lexicon_bits;
    out["total_bits"] = m.total_bits;
    out["item_count"] = m.item_count;
    out["feature_token_count"] = m.feature_token_count;
    json items = json::array();
    for (const ItemCost& c : m.per_item) items.push_back(json{{"entry", c.entry}, {"bits", c.bits}});
    out["items"] = items;
    return out;
}

int cmd_mdl(const Options& o, const std::string& against) {
    if (!bounds_positive(o)) return usage_error("all bounds must be positive");
    Lexicon lex = resolve_lexicon(o);
    GrammarMetrics m = grammar_size_bits(lex);

    if (against.empty()) {
        if (o.machine()) {
            json out;
            out["command"] = "mdl";
            out["metrics"] = metrics_json(lex.name, m);
            emit(out);
        } else {
            std::cout << metrics_table(m);
        }
        return kOk;
    }

    if (o.suite_path.empty() && o.bundled.empty())
        return usage_error("comparing grammars needs a suite (--suite or --bundled)");
    Lexicon other = resolve_named_lexicon(against);
    GrammarMetrics mo = grammar_size_bits(other);
    TestSuite suite = o.suite_path.empty() ? load_bundled_suite(o.bundled)
                                           : load_suite(o.suite_path);

    RunConfig cfg = suite_config(o);
    SuiteReport ra = run_suite(lex, suite, cfg);
    SuiteReport rb = run_suite(other, suite, cfg);
    AdequacyPoint pa{lex.name, ra.correct_units, ra.units, m.total_bits};
    AdequacyPoint pb{other.name, rb.correct_units, rb.units, mo.total_bits};
    AdequacyOrder order = compare_adequacy(pa, pb);

    // A dust verdict applies only when one grammar extends the other item-wise.
    json dust = nullptr;
    std::string dust_line;
    for (int dir = 0; dir < 2; ++dir) {
        const Lexicon& base = dir == 0 ? lex : other;
        const Lexicon& ext = dir == 0 ? other : lex;
        std::size_t base_correct = dir == 0 ? ra.correct_units : rb.correct_units;
        std::size_t ext_correct = dir == 0 ? rb.correct_units : ra.correct_units;
        try {
            DustReport dr = classify_data_dust(base, ext, base_correct, ext_correct);
            dust = json{{"base", base.name},
                        {"extension", ext.name},
                        {"verdict", to_string(dr.verdict)},
                        {"fixed_units", dr.fixed_units},
                        {"delta_bits", dr.delta_bits}};
            std::ostringstream line;
            line << "extension " << base.name << " -> " << ext.name << ": "
                 << to_string(dr.verdict) << " (fixed " << dr.fixed_units << " units for "
                 << dr.delta_bits << " bits)";
            dust_line = line.str();
            break;
        } catch (const std::invalid_argument&) {
            // not an extension in this direction
        }
    }

    if (o.machine()) {
        json out;
        out["command"] = "mdl";
        out["suite"] = suite.name;
        out["engine"] = o.engine;
        out["grammars"] = json::array({metrics_json(lex.name, m), metrics_json(other.name, mo)});
        out["scores"] = json::array(
            {json{{"grammar", lex.name}, {"correct", ra.correct_units}, {"units", ra.units}},
             json{{"grammar", other.name}, {"correct", rb.correct_units}, {"units", rb.units}}});
        out["pareto"] = to_string(order);
        out["dust"] = dust;
        emit(out);
    } else {
        std::cout << "suite " << suite.name << " | engine " << o.engine << "\n";
        std::cout << "grammar " << lex.name << ": correct " << ra.correct_units << "/" << ra.units
                  << " | " << m.total_bits << " bits\n";
        std::cout << "grammar " << other.name << ": correct " << rb.correct_units << "/"
                  << rb.units << " | " << mo.total_bits << " bits\n";
        std::cout << "pareto " << to_string(order) << "\n";
        if (!dust_line.empty()) std::cout << dust_line << "\n";
    }
    return kOk;
}

int cmd_demo_overgen(const Options& o) {
    if (!bounds_positive(o)) return usage_error("all bounds must be positive");
    Lexicon lex = resolve_lexicon(o);

    EnumerationConfig cfg;
    cfg.max_leaves = o.max_leaves;
    cfg.state_cap = o.state_cap;
    std::set<Phon> checked;
    for (const DerivedSentence& s : derive_all(lex, cfg)) checked.insert(s.yield);
    std::set<Phon> free = unconstrained_merge_demo(lex, o.max_leaves, o.state_cap);

    std::vector<Phon> extra;
    for (const Phon& y : free)
        if (checked.find(y) == checked.end()) extra.push_back(y);
    bool superset =
        std::includes(free.begin(), free.end(), checked.begin(), checked.end()) && !extra.empty();

    if (o.machine()) {
        json out;
        out["command"] = "demo-overgen";
        out["lexicon"] = lex.name;
        out["config"] = config_json(o);
        out["seed"] = o.seed;
        out["checked_count"] = checked.size();
        out["free_count"] = free.size();
        out["strict_superset"] = superset;
        json over = json::array();
        for (const Phon& y : extra) over.push_back(phon_json(y));
        out["overgenerated"] = over;
        emit(out);
    } else {
        std::ostringstream bounds;
        bounds << "max_leaves " << o.max_leaves << " seed " << o.seed;
        std::cout << run_header(lex, o, bounds.str());
        std::cout << "checked_yields " << checked.size() << "\n";
        std::cout << "free_combination_yields " << free.size() << "\n";
        std::cout << "strict_superset " << (superset ? "yes" : "no") << "\n";
        for (const Phon& y : extra) std::cout << "overgenerated " << angled(y) << "\n";
    }
    return superset ? kOk : kVerdictFail;
}

} // namespace

int main(int argc, char** argv) {
    Options opts;
    Phon tokens;
    std::string against;

    CLI::App app{"minimalist-grammar laboratory: derive, recognize, benchmark, and size grammars"};
    app.require_subcommand(1);
    app.set_config("--config", "", "defaults file (key=value per line)")->envname("MGLAB_CONFIG");

    app.add_option("--lexicon", opts.lexicon_path, "lexicon file");
    app.add_option("--bundled", opts.bundled, "bundled lexicon/suite name");
    app.add_option("--suite", opts.suite_path, "suite file");
    app.add_option("--data-dir", opts.data_dir, "bundled data directory override");
    app.add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"text", "machine"}));
    app.add_option("--engine", opts.engine, "derivation engine")
        ->check(CLI::IsMember({"classic", "emg"}));
    app.add_option("--steps-mode", opts.steps_mode, "step counting convention")
        ->check(CLI::IsMember({"per-item", "batch"}));
    app.add_option("--max-leaves", opts.max_leaves, "generation leaf bound");
    app.add_option("--max-steps", opts.max_steps, "derivation step bound (0 = unlimited)");
    app.add_option("--state-cap", opts.state_cap, "enumeration exploration guard");
    app.add_option("--allowance", opts.allowance, "silent leaves allowed beyond sentence length");
    app.add_option("--backtrack-budget", opts.backtrack_budget, "incremental search guard");
    app.add_option("--seed", opts.seed, "seed for sampled demonstrations");

    int rc = kOk;
    auto sub = [&](const std::string& name, const std::string& desc) {
        CLI::App* s = app.add_subcommand(name, desc);
        s->fallthrough();
        return s;
    };

    sub("validate", "parse and shape-check a lexicon")->callback([&] { rc = cmd_validate(opts); });
    CLI::App* derive = sub("derive", "derive a sentence and print the derivation");
    derive->add_option("tokens", tokens, "sentence tokens");
    derive->callback([&] { rc = cmd_derive(opts, tokens); });
    sub("generate", "enumerate every derivable sentence within bounds")->callback([&] {
        rc = cmd_generate(opts);
    });
    CLI::App* recog = sub("recognize", "decide whether a sentence is derivable");
    recog->add_option("tokens", tokens, "sentence tokens");
    recog->callback([&] { rc = cmd_recognize(opts, tokens); });
    sub("bench", "score a suite of judged sentences")->callback([&] { rc = cmd_bench(opts); });
    CLI::App* mdl = sub("mdl", "grammar size report; with --against, a Pareto comparison");
    mdl->add_option("--against", against, "second lexicon (bundled name or file)");
    mdl->callback([&] { rc = cmd_mdl(opts, against); });
    sub("demo-overgen", "show what unchecked combination would overgenerate")->callback([&] {
        rc = cmd_demo_overgen(opts);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const BoundExceeded& e) {
        std::cerr << "error: indeterminate: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return rc;
}
