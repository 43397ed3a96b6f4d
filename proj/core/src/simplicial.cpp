#include "homcyl/simplicial.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "homcyl/errors.hpp"

namespace homcyl {

SimplicialComplex SimplicialComplex::from_faces(std::string name,
                                                std::vector<std::string> vertex_labels,
                                                std::vector<std::vector<int>> faces)
{
    SimplicialComplex k;
    k.name_ = std::move(name);
    k.labels_ = std::move(vertex_labels);
    for (auto& f : faces) {
        std::sort(f.begin(), f.end());
        f.erase(std::unique(f.begin(), f.end()), f.end());
        for (int v : f)
            if (v < 0 || v >= k.vertex_count())
                throw InputError("facet vertex out of range in complex '" + k.name_ + "'");
    }
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    // Drop faces nested in another face.
    for (std::size_t i = 0; i < faces.size(); ++i) {
        if (faces[i].empty()) continue;
        bool maximal = true;
        for (std::size_t j = 0; j < faces.size() && maximal; ++j) {
            if (i == j || faces[j].size() < faces[i].size()) continue;
            if (i != j && faces[j].size() == faces[i].size()) continue;
            if (std::includes(faces[j].begin(), faces[j].end(), faces[i].begin(), faces[i].end()))
                maximal = false;
        }
        if (maximal) k.facets_.push_back(faces[i]);
    }
    std::sort(k.facets_.begin(), k.facets_.end(), [](const auto& x, const auto& y) {
        if (x.size() != y.size()) return x.size() < y.size();
        return x < y;
    });
    return k;
}

SimplicialComplex SimplicialComplex::from_facets_nonnested(std::string name,
                                                           std::vector<std::string> vertex_labels,
                                                           std::vector<std::vector<int>> facets)
{
    SimplicialComplex k;
    k.name_ = std::move(name);
    k.labels_ = std::move(vertex_labels);
    for (auto& f : facets) {
        std::sort(f.begin(), f.end());
        for (int v : f)
            if (v < 0 || v >= k.vertex_count())
                throw InputError("facet vertex out of range in complex '" + k.name_ + "'");
    }
    std::sort(facets.begin(), facets.end(), [](const auto& x, const auto& y) {
        if (x.size() != y.size()) return x.size() < y.size();
        return x < y;
    });
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    k.facets_ = std::move(facets);
    return k;
}

int SimplicialComplex::dim() const
{
    int d = -1;
    for (const auto& f : facets_) d = std::max(d, static_cast<int>(f.size()) - 1);
    return d;
}

std::vector<std::vector<int>> SimplicialComplex::all_simplices(int max_facet_size) const
{
    std::set<std::vector<int>> faces;
    for (const auto& f : facets_) {
        const int s = static_cast<int>(f.size());
        if (s > max_facet_size)
            throw BudgetExceeded("facet of size " + std::to_string(s) +
                                 " exceeds the face enumeration guard");
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << s); ++mask) {
            std::vector<int> sub;
            for (int i = 0; i < s; ++i)
                if (mask & (std::uint64_t{1} << i)) sub.push_back(f[i]);
            faces.insert(std::move(sub));
        }
    }
    return {faces.begin(), faces.end()};
}

std::vector<int> SimplicialComplex::support() const
{
    std::set<int> used;
    for (const auto& f : facets_) used.insert(f.begin(), f.end());
    return {used.begin(), used.end()};
}

int SimplicialComplex::component_count() const
{
    auto verts = support();
    if (verts.empty()) return 0;
    std::vector<int> idx(vertex_count(), -1);
    for (std::size_t i = 0; i < verts.size(); ++i) idx[verts[i]] = static_cast<int>(i);
    std::vector<int> parent(verts.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& f : facets_)
        for (std::size_t i = 1; i < f.size(); ++i) {
            int a = find(idx[f[0]]), b = find(idx[f[i]]);
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    std::set<int> roots;
    for (std::size_t i = 0; i < verts.size(); ++i) roots.insert(find(static_cast<int>(i)));
    return static_cast<int>(roots.size());
}

SimplicialComplex neighbourhood_complex(const Graph& g)
{
    std::vector<std::vector<int>> faces;
    for (int v = 0; v < g.vertex_count(); ++v) {
        auto nb = g.neighbours(v);
        if (!nb.empty()) faces.push_back(std::move(nb));
    }
    return SimplicialComplex::from_faces("N(" + g.name() + ")", g.labels(), std::move(faces));
}

namespace {

[[noreturn]] void parse_fail(const std::string& origin, int line, const std::string& what)
{
    throw InputError(origin + ":" + std::to_string(line) + ": " + what);
}

}  // namespace

SimplicialComplex read_complex(std::istream& in, const std::string& origin)
{
    std::string line;
    int lineno = 0;
    std::string name;
    int n = -1;
    std::vector<std::string> labels;
    std::vector<std::vector<std::string>> facet_labels;

    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "complex") {
            if (!(ls >> name >> n) || n < 0) parse_fail(origin, lineno, "expected `complex <name> <n>`");
        } else if (tag == "v") {
            std::string l;
            if (!(ls >> l)) parse_fail(origin, lineno, "expected `v <label>`");
            labels.push_back(l);
        } else if (tag == "f") {
            std::vector<std::string> f;
            std::string l;
            while (ls >> l) f.push_back(l);
            if (f.empty()) parse_fail(origin, lineno, "empty facet line");
            facet_labels.push_back(std::move(f));
        } else {
            parse_fail(origin, lineno, "unknown line tag '" + tag + "'");
        }
    }
    if (n < 0) parse_fail(origin, lineno, "missing complex header");
    if (static_cast<int>(labels.size()) != n)
        parse_fail(origin, lineno, "vertex dictionary size does not match header");

    std::vector<std::vector<int>> faces;
    for (const auto& fl : facet_labels) {
        std::vector<int> f;
        for (const auto& l : fl) {
            auto it = std::find(labels.begin(), labels.end(), l);
            if (it == labels.end()) parse_fail(origin, lineno, "facet uses unknown vertex '" + l + "'");
            f.push_back(static_cast<int>(it - labels.begin()));
        }
        faces.push_back(std::move(f));
    }
    return SimplicialComplex::from_faces(name, labels, faces);
}

SimplicialComplex read_complex_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw InputError("cannot open complex file '" + path + "'");
    return read_complex(in, path);
}

void write_complex(std::ostream& out, const SimplicialComplex& k)
{
    out << "complex " << (k.name().empty() ? "k" : k.name()) << " " << k.vertex_count() << "\n";
    for (const auto& l : k.vertex_labels()) out << "v " << l << "\n";
    for (const auto& f : k.facets()) {
        out << "f";
        for (int v : f) out << " " << k.vertex_labels()[v];
        out << "\n";
    }
}

void write_complex_file(const std::string& path, const SimplicialComplex& k)
{
    std::ofstream out(path);
    if (!out) throw InputError("cannot write complex file '" + path + "'");
    write_complex(out, k);
}

std::string complex_to_dot(const SimplicialComplex& k)
{
    std::set<std::pair<int, int>> edges;
    std::set<int> verts;
    for (const auto& f : k.facets()) {
        for (std::size_t i = 0; i < f.size(); ++i) {
            verts.insert(f[i]);
            for (std::size_t j = i + 1; j < f.size(); ++j) edges.insert({f[i], f[j]});
        }
    }
    std::ostringstream out;
    out << "graph \"" << k.name() << "\" {\n";
    for (int v : verts) out << "  \"" << k.vertex_labels()[v] << "\";\n";
    for (const auto& [u, v] : edges)
        out << "  \"" << k.vertex_labels()[u] << "\" -- \"" << k.vertex_labels()[v] << "\";\n";
    out << "}\n";
    return out.str();
}

}  // namespace homcyl
