#pragma once

#include <string>
#include <string_view>

#include "untangle/core.hpp"
#include "untangle/reductions.hpp"

// Line-oriented text formats. All parsers accept LF or CRLF endings, blank
// lines, arbitrary blanks between tokens, and '#' comments to end of line.
// Renderers emit a canonical form (LF, single spaces, sorted), and
// parse(render(x)) == x for every valid value.
//
// Temporal graphs (.tg):
//     tg 1
//     n 5
//     tau 9
//     layer 1        # layer headers strictly increasing, 1 <= t <= tau
//     e 2 5          # edges of the most recent layer; u != v, no repeats
// Layers never mentioned are empty. A static graph is a .tg with tau 1.
//
// Timelines (.tl): one "v a b" triple per line, 1 <= a <= b, no duplicate
// triples; rendered sorted by (v, a, b).
//
// Budgets (.bud): exactly one of three shapes:
//     k 2                    uniform
//     v 1 2 / v 2 1 ...      per-vertex
//     class 1 2 / member 1 4 per-class partition
//
// Bin packing (.bp):
//     bp 1
//     sizes 2 3 1 3
//     beta 3
//     B 3

namespace untangle {

// what() is "line N: <reason>"; line is 1-based in the parsed text.
struct ParseError : std::runtime_error {
    ParseError(int line, const std::string& reason)
        : std::runtime_error("line " + std::to_string(line) + ": " + reason),
          line(line),
          reason(reason) {}
    int line;
    std::string reason;
};

TemporalGraph parse_temporal_graph(std::string_view text);
std::string render_temporal_graph(const TemporalGraph& g);

ActivityTimeline parse_timeline(std::string_view text);
std::string render_timeline(const ActivityTimeline& t);

BudgetSpec parse_budgets(std::string_view text);
std::string render_budgets(const BudgetSpec& b);

BinPackingInstance parse_bin_packing(std::string_view text);
std::string render_bin_packing(const BinPackingInstance& bp);

// Clause deletion instances are only ever written (reduction output), using
// literals "v:i" / "-v:i" with i in {1,2}.
std::string render_two_cnf(const TwoCnfInstance& f);

// Reads the whole file; throws std::runtime_error with the path on IO errors
// and rethrows ParseError with "path:line:" prefixed to the reason.
struct GraphFile {
    std::string path;
    TemporalGraph graph;
};
GraphFile load_temporal_graph(const std::string& path);
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view content);

}  // namespace untangle
