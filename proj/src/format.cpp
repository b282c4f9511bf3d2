#include <chromix/format.hpp>

#include <algorithm>
#include <charconv>
#include <sstream>

using std::string;
using std::string_view;
using std::to_string;
using std::vector;

namespace chromix {

namespace {

struct Line {
    int number;            // 1-based position in the input
    vector<string> tokens; // never empty
    string tail;           // rest of line after the second token, for labels
};

auto strip_comment(string_view s) -> string_view
{
    auto hash = s.find('#');
    if (hash != string_view::npos)
        s = s.substr(0, hash);
    while (! s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    while (! s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    return s;
}

auto split_lines(string_view text) -> vector<Line>
{
    vector<Line> result;
    int number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto nl = text.find('\n', pos);
        auto raw = text.substr(pos, nl == string_view::npos ? string_view::npos : nl - pos);
        pos = nl == string_view::npos ? text.size() + 1 : nl + 1;
        ++number;
        auto stripped = strip_comment(raw);
        if (stripped.empty())
            continue;
        Line line{ number, {}, "" };
        std::size_t at = 0;
        while (at < stripped.size()) {
            while (at < stripped.size() && (stripped[at] == ' ' || stripped[at] == '\t'))
                ++at;
            if (at >= stripped.size())
                break;
            auto end = at;
            while (end < stripped.size() && stripped[end] != ' ' && stripped[end] != '\t')
                ++end;
            if (line.tokens.size() == 2) {
                // keep everything from here on verbatim (label text)
                line.tail = string(stripped.substr(at));
                break;
            }
            line.tokens.emplace_back(stripped.substr(at, end - at));
            at = end;
        }
        result.push_back(std::move(line));
    }
    return result;
}

auto parse_int(const string & token, int line) -> int
{
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        throw Error{ ErrorKind::Syntax, "expected an integer, got '" + token + "'", line };
    return value;
}

// tail is itself whitespace-split when the directive wants plain integers
auto tail_ints(const Line & line, std::size_t want) -> vector<int>
{
    vector<string> tokens(line.tokens.begin() + 1, line.tokens.end());
    std::istringstream rest{ line.tail };
    string tok;
    while (rest >> tok)
        tokens.push_back(tok);
    if (tokens.size() != want)
        throw Error{ ErrorKind::Syntax, "'" + line.tokens[0] + "' expects " + to_string(want) + " arguments", line.number };
    vector<int> values;
    for (auto & t : tokens)
        values.push_back(parse_int(t, line.number));
    return values;
}

template <typename Fn>
auto with_line(int line, Fn && fn)
{
    try {
        return fn();
    }
    catch (const Error & e) {
        if (e.line() != 0)
            throw;
        throw Error{ e.kind(), e.what(), line };
    }
}

} // namespace

auto parse_nmgraph(string_view text) -> NmGraph
{
    auto lines = split_lines(text);
    if (lines.empty())
        throw Error{ ErrorKind::Syntax, "empty input", 1 };

    auto at = lines.begin();
    if (at->tokens[0] != "nmgraph")
        throw Error{ ErrorKind::Syntax, "expected 'nmgraph <n> <m>' header, got '" + at->tokens[0] + "'", at->number };
    auto header = tail_ints(*at, 2);
    Signature sig{ header[0], header[1] };
    with_line(at->number, [&] { sig.validate(); });
    ++at;

    if (at == lines.end() || at->tokens[0] != "vertices")
        throw Error{ ErrorKind::Syntax, "expected 'vertices <N>' after the header",
            at == lines.end() ? lines.back().number : at->number };
    int order = tail_ints(*at, 1)[0];
    if (order < 0)
        throw Error{ ErrorKind::Syntax, "negative vertex count", at->number };
    NmGraphBuilder builder{ sig, order };
    ++at;

    for (; at != lines.end(); ++at) {
        const auto & directive = at->tokens[0];
        int line = at->number;
        if (directive == "arc") {
            auto v = tail_ints(*at, 3);
            with_line(line, [&] { builder.add_arc(v[0], v[1], v[2]); });
        }
        else if (directive == "edge") {
            auto v = tail_ints(*at, 3);
            with_line(line, [&] { builder.add_edge(v[0], v[1], v[2]); });
        }
        else if (directive == "label") {
            if (at->tokens.size() < 2)
                throw Error{ ErrorKind::Syntax, "'label' expects a vertex and a text", line };
            int v = parse_int(at->tokens[1], line);
            if (at->tail.empty())
                throw Error{ ErrorKind::Syntax, "'label' expects a text after the vertex", line };
            with_line(line, [&] { builder.set_label(v, at->tail); });
        }
        else
            throw Error{ ErrorKind::Syntax, "unknown directive '" + directive + "'", line };
    }
    return builder.build();
}

auto serialize(const NmGraph & g) -> string
{
    std::ostringstream out;
    out << "nmgraph " << g.signature().n << " " << g.signature().m << "\n";
    out << "vertices " << g.order() << "\n";
    for (int v = 0; v < g.order(); ++v)
        if (! g.label(v).empty())
            out << "label " << v << " " << g.label(v) << "\n";
    for (auto & a : g.arcs())
        out << "arc " << a.tail << " " << a.head << " " << a.type << "\n";
    for (auto & e : g.edges())
        out << "edge " << e.u << " " << e.v << " " << e.type << "\n";
    return out.str();
}

auto parse_undirected(string_view text) -> UndirectedGraph
{
    auto lines = split_lines(text);
    if (lines.empty())
        throw Error{ ErrorKind::Syntax, "empty input", 1 };

    auto at = lines.begin();
    if (at->tokens[0] != "graph" || at->tokens.size() != 1 || ! at->tail.empty())
        throw Error{ ErrorKind::Syntax, "expected bare 'graph' header", at->number };
    ++at;

    if (at == lines.end() || at->tokens[0] != "vertices")
        throw Error{ ErrorKind::Syntax, "expected 'vertices <N>' after the header",
            at == lines.end() ? lines.back().number : at->number };
    int order = tail_ints(*at, 1)[0];
    if (order < 0)
        throw Error{ ErrorKind::Syntax, "negative vertex count", at->number };
    UndirectedGraph g{ order };
    ++at;

    for (; at != lines.end(); ++at) {
        if (at->tokens[0] != "edge")
            throw Error{ ErrorKind::Syntax, "unknown directive '" + at->tokens[0] + "'", at->number };
        auto v = tail_ints(*at, 2);
        with_line(at->number, [&] { g.add_edge(v[0], v[1]); });
    }
    return g;
}

auto serialize(const UndirectedGraph & g) -> string
{
    std::ostringstream out;
    out << "graph\n";
    out << "vertices " << g.order() << "\n";
    for (auto & [u, v] : g.edges())
        out << "edge " << u << " " << v << "\n";
    return out.str();
}

} // namespace chromix
