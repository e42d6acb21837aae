#include "tg/io.hpp"

#include <cctype>
#include <istream>
#include <sstream>

#include "tg/pairs.hpp"

namespace tg {

namespace {

struct Token {
    std::string text;
    std::size_t column;  // 1-based
};

struct Line {
    std::size_t number = 0;  // 1-based
    std::vector<Token> tokens;
};

// Splits the input into content lines: comments stripped, blank lines
// dropped, tokens separated by spaces/tabs.
std::vector<Line> content_lines(std::istream& in) {
    std::vector<Line> out;
    std::string raw;
    std::size_t number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        Line line{number, {}};
        std::size_t i = 0;
        while (i < raw.size()) {
            if (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r') {
                ++i;
                continue;
            }
            std::size_t start = i;
            while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t' && raw[i] != '\r') ++i;
            line.tokens.push_back({raw.substr(start, i - start), start + 1});
        }
        if (!line.tokens.empty()) out.push_back(std::move(line));
    }
    return out;
}

class LineCursor {
public:
    explicit LineCursor(std::vector<Line> lines) : lines_(std::move(lines)) {}

    bool done() const { return next_ >= lines_.size(); }

    const Line& take(const std::string& expected) {
        if (done())
            throw ParseError("unexpected end of input, expected " + expected,
                             lines_.empty() ? 1 : lines_.back().number + 1);
        return lines_[next_++];
    }

private:
    std::vector<Line> lines_;
    std::size_t next_ = 0;
};

std::size_t parse_number(const Token& t, std::size_t line) {
    if (t.text.empty() || t.text.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("expected a number, got '" + t.text + "'", line, t.column);
    return std::stoull(t.text);
}

void expect_tokens(const Line& line, std::size_t count, const std::string& what) {
    if (line.tokens.size() != count)
        throw ParseError("expected '" + what + "'", line.number,
                         line.tokens.size() > count ? line.tokens[count].column : 0);
}

std::size_t parse_header_field(LineCursor& cur, const std::string& keyword) {
    const Line& line = cur.take("'" + keyword + " <n>'");
    expect_tokens(line, 2, keyword + " <n>");
    if (line.tokens[0].text != keyword)
        throw ParseError("expected '" + keyword + "', got '" + line.tokens[0].text + "'",
                         line.number, line.tokens[0].column);
    return parse_number(line.tokens[1], line.number);
}

void expect_magic(LineCursor& cur, const std::string& magic) {
    const Line& line = cur.take("'" + magic + " 1'");
    if (line.tokens.size() != 2 || line.tokens[0].text != magic ||
        line.tokens[1].text != "1")
        throw ParseError("expected header '" + magic + " 1'", line.number,
                         line.tokens[0].column);
}

LabelSet parse_label_list(const Token& t, std::size_t line) {
    LabelSet label;
    if (t.text == "-") return label;
    std::size_t pos = 0;
    bool have_prev = false;
    std::size_t prev = 0;
    while (pos < t.text.size()) {
        std::size_t start = pos;
        while (pos < t.text.size() && std::isdigit(static_cast<unsigned char>(t.text[pos])))
            ++pos;
        if (pos == start)
            throw ParseError("malformed label list '" + t.text + "'", line,
                             t.column + start);
        std::size_t value = std::stoull(t.text.substr(start, pos - start));
        if (have_prev && value <= prev)
            throw ParseError("label indices must be strictly increasing", line,
                             t.column + start);
        label.insert(value);
        prev = value;
        have_prev = true;
        if (pos < t.text.size()) {
            if (t.text[pos] != ',')
                throw ParseError("malformed label list '" + t.text + "'", line,
                                 t.column + pos);
            ++pos;
            if (pos == t.text.size())
                throw ParseError("trailing ',' in label list", line, t.column + pos - 1);
        }
    }
    return label;
}

std::string format_label_list(const LabelSet& label) {
    if (label.empty()) return "-";
    std::string out;
    label.for_each([&](std::size_t i) {
        if (!out.empty()) out += ',';
        out += std::to_string(i);
    });
    return out;
}

}  // namespace

TransitionGraph parse_transition_graph(std::istream& in) {
    LineCursor cur(content_lines(in));
    expect_magic(cur, "tg");
    TransitionGraph g;
    g.universe_size = parse_header_field(cur, "universe");
    g.vertex_count = parse_header_field(cur, "vertices");
    g.initial = parse_header_field(cur, "initial");
    g.terminal = parse_header_field(cur, "terminal");
    while (!cur.done()) {
        const Line& line = cur.take("edge");
        expect_tokens(line, 4, "edge <u> <v> <labels>");
        if (line.tokens[0].text != "edge")
            throw ParseError("expected 'edge', got '" + line.tokens[0].text + "'",
                             line.number, line.tokens[0].column);
        TgEdge e;
        e.source = parse_number(line.tokens[1], line.number);
        e.target = parse_number(line.tokens[2], line.number);
        e.label = parse_label_list(line.tokens[3], line.number);
        g.edges.push_back(std::move(e));
    }
    return g;
}

TransitionGraph parse_transition_graph(const std::string& text) {
    std::istringstream in(text);
    return parse_transition_graph(in);
}

std::string print_transition_graph(const TransitionGraph& g) {
    std::string out = "tg 1\n";
    out += "universe " + std::to_string(g.universe_size) + "\n";
    out += "vertices " + std::to_string(g.vertex_count) + "\n";
    out += "initial " + std::to_string(g.initial) + "\n";
    out += "terminal " + std::to_string(g.terminal) + "\n";
    for (const TgEdge& e : g.edges)
        out += "edge " + std::to_string(e.source) + " " + std::to_string(e.target) + " " +
               format_label_list(e.label) + "\n";
    return out;
}

AcceptedFamily parse_truth_table(std::istream& in) {
    LineCursor cur(content_lines(in));
    expect_magic(cur, "tt");
    AcceptedFamily f;
    f.universe_size = parse_header_field(cur, "vars");
    while (!cur.done()) {
        const Line& line = cur.take("assignment bitstring");
        expect_tokens(line, 1, "<bitstring>");
        const Token& t = line.tokens[0];
        if (t.text.size() != f.universe_size)
            throw ParseError("assignment has " + std::to_string(t.text.size()) +
                                 " bits, expected " + std::to_string(f.universe_size),
                             line.number, t.column);
        LabelSet units;
        for (std::size_t i = 0; i < t.text.size(); ++i) {
            if (t.text[i] == '1')
                units.insert(i);
            else if (t.text[i] != '0')
                throw ParseError("assignment must consist of '0' and '1'", line.number,
                                 t.column + i);
        }
        f.accepted.insert(std::move(units));
    }
    return f;
}

AcceptedFamily parse_truth_table(const std::string& text) {
    std::istringstream in(text);
    return parse_truth_table(in);
}

std::string print_truth_table(const AcceptedFamily& f) {
    std::string out = "tt 1\n";
    out += "vars " + std::to_string(f.universe_size) + "\n";
    for (const LabelSet& s : f.accepted) {
        std::string row(f.universe_size, '0');
        s.for_each([&](std::size_t i) { row[i] = '1'; });
        out += row + "\n";
    }
    return out;
}

BranchingProgram parse_branching_program(std::istream& in) {
    LineCursor cur(content_lines(in));
    expect_magic(cur, "nbp");
    BranchingProgram b;
    b.variable_count = parse_header_field(cur, "vars");
    b.vertex_count = parse_header_field(cur, "vertices");
    b.initial = parse_header_field(cur, "initial");
    b.terminal = parse_header_field(cur, "terminal");
    while (!cur.done()) {
        const Line& line = cur.take("edge");
        expect_tokens(line, 4, "edge <u> <v> <+i|-i>");
        if (line.tokens[0].text != "edge")
            throw ParseError("expected 'edge', got '" + line.tokens[0].text + "'",
                             line.number, line.tokens[0].column);
        BpEdge e;
        e.source = parse_number(line.tokens[1], line.number);
        e.target = parse_number(line.tokens[2], line.number);
        const Token& lit = line.tokens[3];
        if (lit.text.size() < 2 || (lit.text[0] != '+' && lit.text[0] != '-'))
            throw ParseError("literal must look like +3 or -3, got '" + lit.text + "'",
                             line.number, lit.column);
        e.literal.negated = lit.text[0] == '-';
        Token index{lit.text.substr(1), lit.column + 1};
        e.literal.variable = parse_number(index, line.number);
        b.edges.push_back(e);
    }
    return b;
}

BranchingProgram parse_branching_program(const std::string& text) {
    std::istringstream in(text);
    return parse_branching_program(in);
}

std::string print_branching_program(const BranchingProgram& b) {
    std::string out = "nbp 1\n";
    out += "vars " + std::to_string(b.variable_count) + "\n";
    out += "vertices " + std::to_string(b.vertex_count) + "\n";
    out += "initial " + std::to_string(b.initial) + "\n";
    out += "terminal " + std::to_string(b.terminal) + "\n";
    for (const BpEdge& e : b.edges)
        out += "edge " + std::to_string(e.source) + " " + std::to_string(e.target) + " " +
               (e.literal.negated ? "-" : "+") + std::to_string(e.literal.variable) + "\n";
    return out;
}

CnfFormula parse_dimacs(std::istream& in) {
    CnfFormula c;
    std::string raw;
    std::size_t number = 0;
    bool have_header = false;
    std::size_t declared_clauses = 0;
    std::vector<int> clause;
    while (std::getline(in, raw)) {
        ++number;
        if (raw.empty() || raw[0] == 'c') continue;
        std::istringstream line(raw);
        if (!have_header) {
            std::string p, cnf;
            long long vars = -1, clauses = -1;
            if (!(line >> p >> cnf >> vars >> clauses) || p != "p" || cnf != "cnf" ||
                vars < 0 || clauses < 0)
                throw ParseError("expected 'p cnf <vars> <clauses>'", number);
            c.variable_count = static_cast<std::size_t>(vars);
            declared_clauses = static_cast<std::size_t>(clauses);
            have_header = true;
            continue;
        }
        long long lit;
        while (line >> lit) {
            if (lit == 0) {
                c.clauses.push_back(clause);
                clause.clear();
                continue;
            }
            std::size_t v = static_cast<std::size_t>(lit < 0 ? -lit : lit);
            if (v > c.variable_count)
                throw ParseError("literal " + std::to_string(lit) +
                                     " exceeds declared variable count",
                                 number);
            clause.push_back(static_cast<int>(lit));
        }
        if (!line.eof())
            throw ParseError("malformed literal", number);
    }
    if (!have_header) throw ParseError("missing 'p cnf' header", number ? number : 1);
    if (!clause.empty())
        throw ParseError("last clause is not terminated by 0", number);
    if (c.clauses.size() != declared_clauses)
        throw ParseError("header declares " + std::to_string(declared_clauses) +
                             " clauses, found " + std::to_string(c.clauses.size()),
                         number);
    return c;
}

CnfFormula parse_dimacs(const std::string& text) {
    std::istringstream in(text);
    return parse_dimacs(in);
}

std::string print_dimacs(const CnfFormula& c) {
    std::string out = "p cnf " + std::to_string(c.variable_count) + " " +
                      std::to_string(c.clauses.size()) + "\n";
    for (const auto& clause : c.clauses) {
        std::string row;
        for (int lit : clause) row += std::to_string(lit) + " ";
        out += row + "0\n";
    }
    return out;
}

FileKind sniff_kind(const std::string& text) {
    std::istringstream in(text);
    auto lines = content_lines(in);
    if (!lines.empty() && !lines[0].tokens.empty()) {
        const std::string& magic = lines[0].tokens[0].text;
        if (magic == "tg") return FileKind::TransitionGraph;
        if (magic == "nbp") return FileKind::BranchingProgram;
        if (magic == "tt") return FileKind::TruthTable;
    }
    throw ParseError("unrecognized header; expected 'tg 1', 'nbp 1', or 'tt 1'", 1);
}

namespace {

std::string dot_label(const LabelSet& label, std::optional<std::size_t> pair_order) {
    std::string out = "{";
    bool first = true;
    label.for_each([&](std::size_t i) {
        if (!first) out += ",";
        if (pair_order) {
            auto [a, b] = pair_from_index(*pair_order, i);
            out += std::to_string(a) + "-" + std::to_string(b);
        } else {
            out += std::to_string(i);
        }
        first = false;
    });
    return out + "}";
}

std::string dot_node_line(std::size_t v, std::size_t initial, std::size_t terminal) {
    std::string attrs;
    if (v == initial && v == terminal)
        attrs = "shape=doublecircle,label=\"s=t\"";
    else if (v == initial)
        attrs = "shape=square,label=\"s\"";
    else if (v == terminal)
        attrs = "shape=doublecircle,label=\"t\"";
    else
        attrs = "shape=circle,label=\"" + std::to_string(v) + "\"";
    return "  v" + std::to_string(v) + " [" + attrs + "];\n";
}

}  // namespace

std::string export_dot(const TransitionGraph& g, std::optional<std::size_t> pair_order) {
    if (pair_order && pair_count(*pair_order) != g.universe_size)
        throw Error("pair order " + std::to_string(*pair_order) +
                    " does not match universe size " + std::to_string(g.universe_size));
    std::string out = "digraph tg {\n";
    for (std::size_t v = 0; v < g.vertex_count; ++v)
        out += dot_node_line(v, g.initial, g.terminal);
    for (const TgEdge& e : g.edges)
        out += "  v" + std::to_string(e.source) + " -> v" + std::to_string(e.target) +
               " [label=\"" + dot_label(e.label, pair_order) + "\"];\n";
    return out + "}\n";
}

std::string export_dot(const BranchingProgram& b) {
    std::string out = "digraph nbp {\n";
    for (std::size_t v = 0; v < b.vertex_count; ++v)
        out += dot_node_line(v, b.initial, b.terminal);
    for (const BpEdge& e : b.edges)
        out += "  v" + std::to_string(e.source) + " -> v" + std::to_string(e.target) +
               " [label=\"" + std::string(e.literal.negated ? "!" : "") + "x" +
               std::to_string(e.literal.variable) + "\"];\n";
    return out + "}\n";
}

}  // namespace tg
