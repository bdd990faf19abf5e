#include "mglab/runner.hpp"

#include <iomanip>
#include <sstream>

namespace mglab {

namespace {

struct Judged {
    Judgment judgment = Judgment::Reject;
    std::size_t peak_memory = 0;
    std::vector<std::string> trace;
};

Judged judge_full(const Lexicon& lex, const Phon& sentence, const RunConfig& cfg) {
    Judged out;
    if (cfg.engine == Engine::Classic) {
        RecognizeConfig rc;
        rc.allowance = cfg.allowance;
        rc.max_steps = cfg.max_steps;
        rc.state_cap = cfg.state_cap;
        try {
            RecognitionResult r = recognize(lex, sentence, rc);
            out.judgment = r.accepted ? Judgment::Accept : Judgment::Reject;
            if (!r.accepted && !r.diagnostic.empty()) out.trace.push_back(r.diagnostic);
        } catch (const BoundExceeded& e) {
            out.judgment = Judgment::Indeterminate;
            out.trace.push_back(e.what());
        }
        return out;
    }
    EmgConfig ec;
    ec.backtrack_budget = cfg.backtrack_budget;
    ec.silent_allowance = cfg.allowance;
    EmgResult r = emg_parse(lex, sentence, ec);
    if (r.success) {
        out.judgment = Judgment::Accept;
        out.peak_memory = r.peak_memory;
        out.trace = r.trace;
    } else if (r.failure == EmgFailure::Budget) {
        out.judgment = Judgment::Indeterminate;
        out.trace.push_back("search budget exhausted at token " + std::to_string(r.stuck_at));
    } else {
        out.judgment = Judgment::Reject;
        out.trace.push_back("no integration past token " + std::to_string(r.stuck_at));
    }
    return out;
}

} // namespace

Judgment judge_sentence(const Lexicon& lex, const Phon& sentence, const RunConfig& cfg) {
    return judge_full(lex, sentence, cfg).judgment;
}

SuiteReport run_suite(const Lexicon& lex, const TestSuite& suite, const RunConfig& cfg) {
    SuiteReport report;
    report.suite = suite.name;
    report.phenomenon = suite.phenomenon;
    report.lexicon = lex.name;
    report.engine = cfg.engine;
    report.config = cfg;
    if (suite.allowance) report.config.allowance = *suite.allowance;

    for (const TestItem& item : suite.items) {
        Judged j = judge_full(lex, item.tokens, report.config);
        ItemOutcome out;
        out.id = item.id;
        out.expect_good = item.expect_good;
        out.judgment = j.judgment;
        out.correct = item.expect_good ? j.judgment == Judgment::Accept
                                       : j.judgment == Judgment::Reject;
        out.peak_memory = j.peak_memory;
        out.trace = std::move(j.trace);
        report.items.push_back(std::move(out));
    }

    auto judgment_of = [&](const std::string& id) {
        for (const ItemOutcome& out : report.items)
            if (out.id == id) return out.judgment;
        return Judgment::Reject; // unreachable for validated suites
    };

    for (const MinimalPair& pair : suite.pairs) {
        PairOutcome out;
        out.id = pair.id;
        out.good = judgment_of(pair.good_id);
        out.bad = judgment_of(pair.bad_id);
        if (out.good == Judgment::Indeterminate || out.bad == Judgment::Indeterminate)
            out.verdict = PairVerdict::Indeterminate;
        else if (out.good == Judgment::Accept && out.bad == Judgment::Reject)
            out.verdict = PairVerdict::Correct;
        else if (out.good == out.bad)
            out.verdict = PairVerdict::Tie; // derives both or neither
        else
            out.verdict = PairVerdict::Wrong;
        report.pairs.push_back(out);
    }

    report.units = suite.units();
    for (const PairOutcome& out : report.pairs) {
        if (out.verdict == PairVerdict::Correct) report.correct_units += 1;
        if (out.verdict == PairVerdict::Indeterminate) report.indeterminate_units += 1;
    }
    for (const ItemOutcome& out : report.items) {
        if (suite.paired(out.id)) continue;
        if (out.correct) report.correct_units += 1;
        if (out.judgment == Judgment::Indeterminate) report.indeterminate_units += 1;
    }
    if (report.units > 0)
        report.accuracy = static_cast<double>(report.correct_units) / static_cast<double>(report.units);
    return report;
}

std::string to_string(Engine engine) {
    return engine == Engine::Classic ? "classic" : "emg";
}

std::string to_string(Judgment judgment) {
    switch (judgment) {
        case Judgment::Accept: return "ACCEPT";
        case Judgment::Reject: return "REJECT";
        case Judgment::Indeterminate: return "INDETERMINATE";
    }
    return "INDETERMINATE";
}

std::string to_string(PairVerdict verdict) {
    switch (verdict) {
        case PairVerdict::Correct: return "CORRECT";
        case PairVerdict::Wrong: return "WRONG";
        case PairVerdict::Tie: return "TIE";
        case PairVerdict::Indeterminate: return "INDETERMINATE";
    }
    return "INDETERMINATE";
}

std::string report_text(const SuiteReport& report) {
    std::ostringstream out;
    out << "suite " << report.suite;
    if (!report.phenomenon.empty()) out << " (" << report.phenomenon << ")";
    out << " | lexicon " << report.lexicon << " | engine " << to_string(report.engine) << "\n";
    out << "config allowance=" << report.config.allowance
        << " state_cap=" << report.config.state_cap
        << " backtrack_budget=" << report.config.backtrack_budget;
    if (report.config.max_steps != std::numeric_limits<std::size_t>::max())
        out << " max_steps=" << report.config.max_steps;
    out << "\n";
    for (const PairOutcome& pair : report.pairs)
        out << "pair " << pair.id << " good=" << to_string(pair.good)
            << " bad=" << to_string(pair.bad) << " -> " << to_string(pair.verdict) << "\n";
    for (const ItemOutcome& item : report.items) {
        if (item.judgment == Judgment::Accept && report.engine == Engine::Emg)
            out << "item " << item.id << " " << (item.expect_good ? "+" : "-") << " "
                << to_string(item.judgment) << " peak_memory=" << item.peak_memory << "\n";
        else
            out << "item " << item.id << " " << (item.expect_good ? "+" : "-") << " "
                << to_string(item.judgment) << "\n";
    }
    out << "units " << report.units << " correct " << report.correct_units;
    if (report.indeterminate_units > 0) out << " indeterminate " << report.indeterminate_units;
    if (report.units > 0) {
        out << " accuracy " << std::fixed << std::setprecision(3) << report.accuracy << "\n";
    } else {
        out << " accuracy n/a\n";
    }
    return out.str();
}

} // namespace mglab
