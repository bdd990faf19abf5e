#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mglab/lexicon.hpp"

namespace mglab {

/// Display node of the incremental engine.  Value-typed: states copy freely
/// during backtracking.  Internal nodes are labeled by the item whose
/// expectations the children satisfied; chains re-merged from memory attach
/// at their gap position.
struct EmgNode {
    std::string label;
    std::string cat;
    bool gap = false; // satisfied from memory rather than from the input
    std::vector<EmgNode> children;
};

/// A pending requirement: a selector waiting for a category, or a licensor
/// waiting for a stored licensee.  `site` addresses the raising node in the
/// owning chain's tree (child indices from the root; paths stay valid because
/// children are only ever appended).
///
/// `from_memory` separates the two ways a requirement may be met.  A head's
/// first selector names its post-head argument, so only the input (or a
/// silent head) may fill it; later selectors name pre-head arguments, which
/// by the time the head is read have necessarily been stored, so only memory
/// may fill them.  Licensee-carrying fillers are the exception: they sit in a
/// landing position and may discharge anywhere.  `birth` orders requirements
/// against stores: a filler never discharges into a requirement older than
/// its own storage (that would reorder the input).
struct Expectation {
    Feature feature;
    std::string owner;            // phon text of the raising head
    std::string owner_cat;
    std::vector<std::size_t> site;
    bool from_memory = false;
    std::size_t birth = 0;
};

/// One partial projection: the main structure or one memory entry.
/// `exps.front()` is the next requirement in prediction order; `rest` holds
/// the root item's own category and licensees, exposed only once all
/// expectations are met.
struct EmgChain {
    bool rooted = false;
    std::vector<Expectation> exps;
    std::vector<Feature> rest;
    EmgNode tree;
    std::size_t stored_at = 0; // clock value when this entry joined memory

    bool saturated() const { return rooted && exps.empty(); }
    /// Saturated with nothing left but the bare category.
    bool complete_projection() const { return saturated() && rest.size() == 1; }
};

/// A left adjunct read before its host; it attaches to the next integrated
/// item whose category the adjunction rule names.
struct HeldAdjunct {
    LexicalItem item;
    std::vector<std::string> hosts;
};

struct EmgState {
    EmgChain main;
    std::vector<EmgChain> memory;        // back() is the most recent entry
    std::vector<HeldAdjunct> held;       // left adjuncts waiting for a host
    std::size_t consumed = 0;
    std::size_t peak_memory = 0;
    std::size_t silents = 0;
    std::size_t clock = 0;               // advances on every applied action
    bool trace_enabled = true;
    std::vector<std::string> trace;
};

struct EmgConfig {
    std::size_t backtrack_budget = 100000; // states explored before giving up
    std::size_t silent_allowance = 3;      // silent heads insertable per run
    bool record_trace = true;              // off: skip trace lines (bulk runs)
};

/// Single-step integration attempts.  Each returns false and leaves the
/// state untouched when the operation does not apply; on success the state
/// is updated and a trace line appended.  The parse driver explores these in
/// a fixed order with backtracking; they are exposed for direct testing.
///
/// Incoming overt items that still carry licensees are never integrated in
/// place: they sit in a landing position, so only emg_move_store accepts
/// them.
bool emg_merge_complement(EmgState& st, const LexicalItem& item); // fills main's next expectation
bool emg_merge_grow(EmgState& st, const LexicalItem& item);       // fills a memory chain's expectation
bool emg_merge_mirror(EmgState& st, const LexicalItem& item);     // multi-selector head takes the
                                                                  // completed structure as its argument
bool emg_merge_root(EmgState& st, const LexicalItem& item);       // first overt material
bool emg_merge_adjunct(EmgState& st, const LexicalItem& item, const Lexicon& lex);
bool emg_move_store(EmgState& st, const LexicalItem& item);       // append to memory (LIFO)
bool emg_move_discharge(EmgState& st);                            // satisfy an expectation from memory
bool emg_insert_silent(EmgState& st, const LexicalItem& item);    // silent complement
bool emg_wrap_silent(EmgState& st, const LexicalItem& item);      // silent head above a complete root

/// Accepting configuration for `start`: main is a bare start projection,
/// memory is drained, and no held adjunct is stranded.
bool emg_accepts(const EmgState& st, const std::string& start);

enum class EmgFailure { None, NoParse, UnknownToken, Budget };

struct EmgResult {
    bool success = false;
    std::size_t consumed = 0;        // tokens integrated on the reported run
    std::size_t peak_memory = 0;
    std::size_t stuck_at = 0;        // furthest token index reached on failure
    EmgFailure failure = EmgFailure::None;
    std::vector<std::string> trace;  // successful run, or empty on failure
    EmgNode tree;
};

/// Deterministic depth-first search over the step operations above,
/// consuming the sentence strictly left to right (no action looks past the
/// current token).  The first successful run under the fixed action order is
/// reported.
EmgResult emg_parse(const Lexicon& lex, const Phon& sentence, const EmgConfig& cfg = {});

/// Successor states reachable by exactly one action, in the driver's
/// exploration order.  `token` is the current input token or nullptr once
/// input is exhausted.  emg_parse is a depth-first walk of this relation;
/// exposing it lets tests drive the engine through a one-token window.
std::vector<EmgState> emg_successors(const EmgState& st, const std::string* token,
                                     const Lexicon& lex, const EmgConfig& cfg);

} // namespace mglab
