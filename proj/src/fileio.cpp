#include "untangle/fileio.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace untangle {

namespace {

struct Line {
    int no;
    std::vector<std::string> tokens;
};

// Shared lexical layer: LF/CRLF lines, '#' comments, blank-separated tokens.
std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> lines;
    int no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string_view raw = (nl == std::string_view::npos)
                                   ? text.substr(pos)
                                   : text.substr(pos, nl - pos);
        ++no;
        if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
        if (std::size_t hash = raw.find('#'); hash != std::string_view::npos)
            raw = raw.substr(0, hash);
        Line line{no, {}};
        std::size_t i = 0;
        while (i < raw.size()) {
            while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t')) ++i;
            std::size_t start = i;
            while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t') ++i;
            if (i > start) line.tokens.emplace_back(raw.substr(start, i - start));
        }
        if (!line.tokens.empty()) lines.push_back(std::move(line));
        if (nl == std::string_view::npos) break;
        pos = nl + 1;
    }
    return lines;
}

int to_int(const std::string& tok, int line, const std::string& what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError(line, what + " expects an integer, got '" + tok + "'");
    return value;
}

void expect_arity(const Line& line, std::size_t n) {
    if (line.tokens.size() != n)
        throw ParseError(line.no, "directive '" + line.tokens[0] + "' expects " +
                                      std::to_string(n - 1) + " argument(s)");
}

void expect_header(const std::vector<Line>& lines, const std::string& name) {
    if (lines.empty()) throw ParseError(1, "empty file, expected '" + name + " 1' header");
    const Line& first = lines.front();
    if (first.tokens[0] != name || first.tokens.size() != 2 || first.tokens[1] != "1")
        throw ParseError(first.no, "expected '" + name + " 1' header");
}

}  // namespace

TemporalGraph parse_temporal_graph(std::string_view text) {
    auto lines = tokenize(text);
    expect_header(lines, "tg");
    std::optional<int> n, tau;
    std::vector<std::vector<Edge>> layers;
    int current = 0;  // most recent layer header, 0 = none yet
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& line = lines[i];
        const std::string& dir = line.tokens[0];
        if (dir == "n") {
            expect_arity(line, 2);
            if (n) throw ParseError(line.no, "duplicate 'n' directive");
            if (tau || current) throw ParseError(line.no, "'n' must precede layers");
            n = to_int(line.tokens[1], line.no, "'n'");
            if (*n < 0) throw ParseError(line.no, "vertex count must be nonnegative");
        } else if (dir == "tau") {
            expect_arity(line, 2);
            if (tau) throw ParseError(line.no, "duplicate 'tau' directive");
            if (!n) throw ParseError(line.no, "'n' must precede 'tau'");
            tau = to_int(line.tokens[1], line.no, "'tau'");
            if (*tau < 1) throw ParseError(line.no, "lifetime must be at least 1");
            layers.assign(*tau, {});
        } else if (dir == "layer") {
            expect_arity(line, 2);
            if (!tau) throw ParseError(line.no, "'layer' before 'tau'");
            int t = to_int(line.tokens[1], line.no, "'layer'");
            if (t < 1 || t > *tau)
                throw ParseError(line.no, "layer " + std::to_string(t) +
                                              " outside 1.." + std::to_string(*tau));
            if (t == current) throw ParseError(line.no, "duplicate layer header");
            if (t < current)
                throw ParseError(line.no, "layer headers must be strictly increasing");
            current = t;
        } else if (dir == "e") {
            expect_arity(line, 3);
            if (!current) throw ParseError(line.no, "'e' before any 'layer'");
            Edge e{to_int(line.tokens[1], line.no, "'e'"),
                   to_int(line.tokens[2], line.no, "'e'")};
            if (e.u > e.v) std::swap(e.u, e.v);
            if (e.u == e.v)
                throw ParseError(line.no, "loop edge at vertex " + std::to_string(e.u));
            if (e.u < 1 || e.v > *n)
                throw ParseError(line.no, "edge endpoint outside 1.." + std::to_string(*n));
            auto& layer = layers[current - 1];
            if (std::find(layer.begin(), layer.end(), e) != layer.end())
                throw ParseError(line.no, "edge repeated within layer " +
                                              std::to_string(current));
            layer.push_back(e);
        } else {
            throw ParseError(line.no, "unknown directive '" + dir + "'");
        }
    }
    if (!n) throw ParseError(lines.back().no, "missing 'n' directive");
    if (!tau) throw ParseError(lines.back().no, "missing 'tau' directive");
    return TemporalGraph(*n, *tau, std::move(layers));
}

std::string render_temporal_graph(const TemporalGraph& g) {
    std::ostringstream os;
    os << "tg 1\n" << "n " << g.n() << "\n" << "tau " << g.tau() << "\n";
    for (TimeStep t = 1; t <= g.tau(); ++t) {
        if (g.layer(t).empty()) continue;
        os << "layer " << t << "\n";
        for (const Edge& e : g.layer(t)) os << "e " << e.u << " " << e.v << "\n";
    }
    return os.str();
}

ActivityTimeline parse_timeline(std::string_view text) {
    std::vector<IntervalAssignment> entries;
    for (const Line& line : tokenize(text)) {
        if (line.tokens.size() != 3)
            throw ParseError(line.no, "expected 'v a b' with three integers");
        IntervalAssignment iv{to_int(line.tokens[0], line.no, "vertex"),
                              to_int(line.tokens[1], line.no, "interval start"),
                              to_int(line.tokens[2], line.no, "interval end")};
        if (iv.v < 1) throw ParseError(line.no, "vertex must be positive");
        if (iv.a < 1) throw ParseError(line.no, "time steps start at 1");
        if (iv.a > iv.b) throw ParseError(line.no, "interval start exceeds end");
        if (std::find(entries.begin(), entries.end(), iv) != entries.end())
            throw ParseError(line.no, "duplicate interval");
        entries.push_back(iv);
    }
    return ActivityTimeline(std::move(entries));
}

std::string render_timeline(const ActivityTimeline& t) {
    std::ostringstream os;
    for (const auto& iv : t.entries())
        os << iv.v << " " << iv.a << " " << iv.b << "\n";
    return os.str();
}

BudgetSpec parse_budgets(std::string_view text) {
    auto lines = tokenize(text);
    if (lines.empty()) throw ParseError(1, "empty budget file");
    const std::string& form = lines.front().tokens[0];
    if (form == "k") {
        expect_arity(lines.front(), 2);
        if (lines.size() > 1)
            throw ParseError(lines[1].no, "uniform budget is a single 'k' line");
        int k = to_int(lines.front().tokens[1], lines.front().no, "'k'");
        if (k < 0) throw ParseError(lines.front().no, "budget must be nonnegative");
        return UniformBudget{k};
    }
    if (form == "v") {
        NonUniformBudget b;
        for (const Line& line : lines) {
            if (line.tokens[0] != "v")
                throw ParseError(line.no, "cannot mix budget forms");
            expect_arity(line, 3);
            Vertex v = to_int(line.tokens[1], line.no, "'v'");
            int k = to_int(line.tokens[2], line.no, "'v'");
            if (v < 1) throw ParseError(line.no, "vertex must be positive");
            if (k < 0) throw ParseError(line.no, "budget must be nonnegative");
            for (auto& [pv, pk] : b.entries)
                if (pv == v)
                    throw ParseError(line.no,
                                     "vertex " + std::to_string(v) + " listed twice");
            b.entries.emplace_back(v, k);
        }
        std::sort(b.entries.begin(), b.entries.end());
        return b;
    }
    if (form == "class") {
        MulticoloredBudget b;
        for (const Line& line : lines) {
            if (line.tokens[0] == "class") {
                expect_arity(line, 3);
                int i = to_int(line.tokens[1], line.no, "'class'");
                int k = to_int(line.tokens[2], line.no, "'class'");
                if (i != static_cast<int>(b.budgets.size()) + 1)
                    throw ParseError(line.no, "classes must be numbered 1, 2, ... in order");
                if (k < 0) throw ParseError(line.no, "budget must be nonnegative");
                b.classes.emplace_back();
                b.budgets.push_back(k);
            } else if (line.tokens[0] == "member") {
                expect_arity(line, 3);
                int i = to_int(line.tokens[1], line.no, "'member'");
                Vertex v = to_int(line.tokens[2], line.no, "'member'");
                if (i < 1 || i > static_cast<int>(b.classes.size()))
                    throw ParseError(line.no,
                                     "member of undeclared class " + std::to_string(i));
                if (v < 1) throw ParseError(line.no, "vertex must be positive");
                for (const auto& cls : b.classes)
                    if (std::find(cls.begin(), cls.end(), v) != cls.end())
                        throw ParseError(line.no, "vertex " + std::to_string(v) +
                                                      " already placed in a class");
                b.classes[i - 1].push_back(v);
            } else {
                throw ParseError(line.no, "cannot mix budget forms");
            }
        }
        for (auto& cls : b.classes) std::sort(cls.begin(), cls.end());
        return b;
    }
    throw ParseError(lines.front().no,
                     "expected 'k', 'v' or 'class' budget, got '" + form + "'");
}

std::string render_budgets(const BudgetSpec& b) {
    std::ostringstream os;
    if (const auto* u = std::get_if<UniformBudget>(&b)) {
        os << "k " << u->k << "\n";
    } else if (const auto* nu = std::get_if<NonUniformBudget>(&b)) {
        auto entries = nu->entries;
        std::sort(entries.begin(), entries.end());
        for (auto [v, k] : entries) os << "v " << v << " " << k << "\n";
    } else {
        const auto& mc = std::get<MulticoloredBudget>(b);
        for (std::size_t i = 0; i < mc.classes.size(); ++i) {
            os << "class " << i + 1 << " " << mc.budgets[i] << "\n";
            auto members = mc.classes[i];
            std::sort(members.begin(), members.end());
            for (Vertex v : members) os << "member " << i + 1 << " " << v << "\n";
        }
    }
    return os.str();
}

BinPackingInstance parse_bin_packing(std::string_view text) {
    auto lines = tokenize(text);
    expect_header(lines, "bp");
    BinPackingInstance bp;
    bool have_sizes = false, have_beta = false, have_bin = false;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& line = lines[i];
        const std::string& dir = line.tokens[0];
        if (dir == "sizes") {
            if (have_sizes) throw ParseError(line.no, "duplicate 'sizes' directive");
            have_sizes = true;
            for (std::size_t j = 1; j < line.tokens.size(); ++j) {
                int s = to_int(line.tokens[j], line.no, "'sizes'");
                if (s < 1) throw ParseError(line.no, "item size must be positive");
                bp.sizes.push_back(s);
            }
        } else if (dir == "beta") {
            expect_arity(line, 2);
            if (have_beta) throw ParseError(line.no, "duplicate 'beta' directive");
            have_beta = true;
            bp.beta = to_int(line.tokens[1], line.no, "'beta'");
            if (bp.beta < 1) throw ParseError(line.no, "bin count must be positive");
        } else if (dir == "B") {
            expect_arity(line, 2);
            if (have_bin) throw ParseError(line.no, "duplicate 'B' directive");
            have_bin = true;
            bp.bin_size = to_int(line.tokens[1], line.no, "'B'");
            if (bp.bin_size < 1) throw ParseError(line.no, "bin size must be positive");
        } else {
            throw ParseError(line.no, "unknown directive '" + dir + "'");
        }
    }
    int last = lines.back().no;
    if (!have_sizes) throw ParseError(last, "missing 'sizes' directive");
    if (!have_beta) throw ParseError(last, "missing 'beta' directive");
    if (!have_bin) throw ParseError(last, "missing 'B' directive");
    return bp;
}

std::string render_bin_packing(const BinPackingInstance& bp) {
    std::ostringstream os;
    os << "bp 1\nsizes";
    for (int s : bp.sizes) os << " " << s;
    os << "\nbeta " << bp.beta << "\nB " << bp.bin_size << "\n";
    return os.str();
}

std::string render_two_cnf(const TwoCnfInstance& f) {
    std::ostringstream os;
    os << "cnf2 1\nvertices " << f.n_vertices << "\nbudget " << f.budget << "\n";
    auto lit = [&](const TwoCnfLiteral& l) {
        std::ostringstream ls;
        if (l.negated) ls << "-";
        ls << l.v << ":" << l.idx;
        return ls.str();
    };
    for (const auto& c : f.clauses)
        os << "c " << lit(c.first) << " " << lit(c.second) << "\n";
    return os.str();
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error(path + ": cannot open for reading");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_text_file(const std::string& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error(path + ": cannot open for writing");
    out << content;
    if (!out) throw std::runtime_error(path + ": write failed");
}

GraphFile load_temporal_graph(const std::string& path) {
    std::string text = read_text_file(path);
    try {
        return GraphFile{path, parse_temporal_graph(text)};
    } catch (const ParseError& e) {
        throw std::runtime_error(path + ":" + std::to_string(e.line) + ": " + e.reason);
    }
}

}  // namespace untangle
