#include "homcyl/graph_io.hpp"

#include <fstream>
#include <sstream>

#include "homcyl/errors.hpp"

namespace homcyl {

namespace {

[[noreturn]] void parse_fail(const std::string& origin, int line, const std::string& what)
{
    throw InputError(origin + ":" + std::to_string(line) + ": " + what);
}

bool content_line(const std::string& line)
{
    for (char c : line) {
        if (c == '#') return false;
        if (!isspace(static_cast<unsigned char>(c))) return true;
    }
    return false;
}

}  // namespace

Graph read_graph(std::istream& in, const std::string& origin)
{
    std::string line;
    int lineno = 0;
    std::string name;
    int n = -1;
    std::vector<std::string> labels;
    std::vector<std::pair<std::string, std::string>> edges;

    while (std::getline(in, line)) {
        ++lineno;
        if (!content_line(line)) continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "graph") {
            if (n >= 0) parse_fail(origin, lineno, "second graph header");
            if (!(ls >> name >> n) || n < 0) parse_fail(origin, lineno, "expected `graph <name> <n>`");
        } else if (tag == "v") {
            if (n < 0) parse_fail(origin, lineno, "vertex line before graph header");
            std::string label;
            if (!(ls >> label)) parse_fail(origin, lineno, "expected `v <label>`");
            labels.push_back(label);
        } else if (tag == "e") {
            if (n < 0) parse_fail(origin, lineno, "edge line before graph header");
            std::string a, b;
            if (!(ls >> a >> b)) parse_fail(origin, lineno, "expected `e <label> <label>`");
            edges.emplace_back(a, b);
        } else {
            parse_fail(origin, lineno, "unknown line tag '" + tag + "'");
        }
    }
    if (n < 0) parse_fail(origin, lineno, "missing graph header");
    if (static_cast<int>(labels.size()) != n)
        parse_fail(origin, lineno,
                   "header declares " + std::to_string(n) + " vertices, found " +
                       std::to_string(labels.size()));
    try {
        return Graph::build(name, labels, edges);
    } catch (const InputError& e) {
        throw InputError(origin + ": " + e.what());
    }
}

Graph read_graph_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw InputError("cannot open graph file '" + path + "'");
    return read_graph(in, path);
}

void write_graph(std::ostream& out, const Graph& g)
{
    out << "graph " << (g.name().empty() ? "g" : g.name()) << " " << g.vertex_count() << "\n";
    for (int v = 0; v < g.vertex_count(); ++v) out << "v " << g.label(v) << "\n";
    for (const auto& [u, v] : g.edges()) out << "e " << g.label(u) << " " << g.label(v) << "\n";
}

void write_graph_file(const std::string& path, const Graph& g)
{
    std::ofstream out(path);
    if (!out) throw InputError("cannot write graph file '" + path + "'");
    write_graph(out, g);
}

Graph read_dimacs(std::istream& in, const std::string& name)
{
    std::string line;
    int lineno = 0;
    int n = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ls(line);
        char tag;
        ls >> tag;
        if (tag == 'p') {
            std::string kind;
            int m;
            if (!(ls >> kind >> n >> m) || kind != "edge" || n <= 0)
                parse_fail(name, lineno, "expected `p edge <n> <m>`");
        } else if (tag == 'e') {
            int u, v;
            if (!(ls >> u >> v)) parse_fail(name, lineno, "expected `e <u> <v>`");
            if (n < 0) parse_fail(name, lineno, "edge before problem line");
            if (u < 1 || u > n || v < 1 || v > n) parse_fail(name, lineno, "vertex out of range");
            if (u == v) parse_fail(name, lineno, "loops are not allowed in DIMACS input");
            edges.emplace_back(u - 1, v - 1);
        }
    }
    if (n < 0) parse_fail(name, lineno, "missing problem line");
    std::vector<std::string> labels;
    labels.reserve(n);
    for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
    Graph g(name, labels);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

Graph read_dimacs_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw InputError("cannot open DIMACS file '" + path + "'");
    return read_dimacs(in, path);
}

Graph read_graph_auto(const std::string& path)
{
    if (path.size() > 4 && path.substr(path.size() - 4) == ".col") return read_dimacs_file(path);
    return read_graph_file(path);
}

std::string graph_to_dot(const Graph& g)
{
    std::ostringstream out;
    out << "graph \"" << g.name() << "\" {\n";
    for (int v = 0; v < g.vertex_count(); ++v)
        out << "  \"" << g.label(v) << "\";\n";
    for (const auto& [u, v] : g.edges())
        out << "  \"" << g.label(u) << "\" -- \"" << g.label(v) << "\";\n";
    out << "}\n";
    return out.str();
}

}  // namespace homcyl
