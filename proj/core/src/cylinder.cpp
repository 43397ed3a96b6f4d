#include "homcyl/cylinder.hpp"

#include <algorithm>
#include <numeric>

#include "homcyl/errors.hpp"

namespace homcyl {

void CylinderSpec::validate() const
{
    if (height < 1) throw InputError("cylinder height must be >= 1");
    if (!f.domain.same_structure(a) || !f.codomain.same_structure(b))
        throw InputError("f must map A to B");
    if (!g.domain.same_structure(a) || !g.codomain.same_structure(c))
        throw InputError("g must map A to C");
    if (!is_homomorphism(f)) throw InputError("f is not a graph homomorphism");
    if (!is_homomorphism(g)) throw InputError("g is not a graph homomorphism");
}

CylinderSpec CylinderSpec::with_height(int n) const
{
    CylinderSpec s = *this;
    s.height = n;
    return s;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x)
    {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int x, int y)
    {
        x = find(x);
        y = find(y);
        if (x == y) return;
        if (x > y) std::swap(x, y);  // least member becomes representative
        parent[y] = x;
    }
};

}  // namespace

Cylinder Cylinder::build(CylinderSpec spec)
{
    spec.validate();
    const int nb = spec.b.vertex_count();
    const int na = spec.a.vertex_count();
    const int nc = spec.c.vertex_count();
    const int n = spec.height;
    const int levels = n + 1;

    // Disjoint union indexing: B, then (a, level), then C.
    auto b_idx = [&](int v) { return v; };
    auto a_idx = [&](int v, int lvl) { return nb + v * levels + lvl; };
    auto c_idx = [&](int v) { return nb + na * levels + v; };
    const int total = nb + na * levels + nc;

    UnionFind uf(total);
    for (int av = 0; av < na; ++av) {
        uf.unite(b_idx(spec.f(av)), a_idx(av, n));
        uf.unite(c_idx(spec.g(av)), a_idx(av, 0));
    }

    // Classes ordered by least member.
    std::vector<int> rep_of(total);
    std::vector<int> reps;
    for (int i = 0; i < total; ++i) {
        rep_of[i] = uf.find(i);
        if (rep_of[i] == i) reps.push_back(i);
    }
    std::vector<int> class_id(total, -1);
    for (std::size_t cid = 0; cid < reps.size(); ++cid) class_id[reps[cid]] = static_cast<int>(cid);
    for (int i = 0; i < total; ++i) class_id[i] = class_id[rep_of[i]];

    Cylinder cyl;
    cyl.spec_ = spec;
    cyl.b_class_.resize(nb);
    cyl.c_class_.resize(nc);
    cyl.a_class_.assign(na, std::vector<int>(levels));
    cyl.members_b_.assign(reps.size(), {});
    cyl.members_c_.assign(reps.size(), {});
    cyl.members_a_.assign(reps.size(), {});
    for (int v = 0; v < nb; ++v) {
        cyl.b_class_[v] = class_id[b_idx(v)];
        cyl.members_b_[cyl.b_class_[v]].push_back(v);
    }
    for (int v = 0; v < na; ++v)
        for (int lvl = 0; lvl < levels; ++lvl) {
            cyl.a_class_[v][lvl] = class_id[a_idx(v, lvl)];
            cyl.members_a_[cyl.a_class_[v][lvl]].emplace_back(v, lvl);
        }
    for (int v = 0; v < nc; ++v) {
        cyl.c_class_[v] = class_id[c_idx(v)];
        cyl.members_c_[cyl.c_class_[v]].push_back(v);
    }

    // Labels from the representative member.
    std::vector<std::string> labels;
    labels.reserve(reps.size());
    for (int rep : reps) {
        if (rep < nb) {
            labels.push_back("B." + spec.b.label(rep));
        } else if (rep < nb + na * levels) {
            int av = (rep - nb) / levels;
            int lvl = (rep - nb) % levels;
            labels.push_back("A." + spec.a.label(av) + "." + std::to_string(lvl));
        } else {
            labels.push_back("C." + spec.c.label(rep - nb - na * levels));
        }
    }

    std::string name = spec.b.name() + "+" + spec.a.name() + "xI" + std::to_string(n) + "+" +
                       spec.c.name();
    Graph d(name, labels);
    for (const auto& [u, v] : spec.b.edges()) d.add_edge(class_id[b_idx(u)], class_id[b_idx(v)]);
    for (const auto& [u, v] : spec.c.edges()) d.add_edge(class_id[c_idx(u)], class_id[c_idx(v)]);
    for (const auto& [u, v] : spec.a.edges()) {
        for (int lvl = 0; lvl < levels; ++lvl) {
            // (u,lvl)(v,lvl) from the loop at lvl in I_n, plus the two
            // diagonal orientations between consecutive levels.
            d.add_edge(class_id[a_idx(u, lvl)], class_id[a_idx(v, lvl)]);
            if (lvl < n) {
                d.add_edge(class_id[a_idx(u, lvl)], class_id[a_idx(v, lvl + 1)]);
                d.add_edge(class_id[a_idx(v, lvl)], class_id[a_idx(u, lvl + 1)]);
            }
        }
    }
    cyl.d_ = d;
    cyl.j1_ = GraphMap(spec.b, d, cyl.b_class_);
    cyl.j2_ = GraphMap(spec.c, d, cyl.c_class_);
    return cyl;
}

bool Cylinder::class_meets_level(int dv, int level) const
{
    for (const auto& [av, lvl] : members_a_[dv])
        if (lvl == level) return true;
    return false;
}

Cylinder double_mapping_cylinder(const CylinderSpec& spec)
{
    return Cylinder::build(spec);
}

Pushout pushout(const CylinderSpec& spec)
{
    spec.validate();
    const int nb = spec.b.vertex_count();
    const int na = spec.a.vertex_count();
    const int nc = spec.c.vertex_count();
    UnionFind uf(nb + nc);
    for (int av = 0; av < na; ++av) uf.unite(spec.f(av), nb + spec.g(av));

    std::vector<int> reps;
    std::vector<int> class_id(nb + nc, -1);
    for (int i = 0; i < nb + nc; ++i)
        if (uf.find(i) == i) reps.push_back(i);
    for (std::size_t cid = 0; cid < reps.size(); ++cid) class_id[reps[cid]] = static_cast<int>(cid);
    for (int i = 0; i < nb + nc; ++i) class_id[i] = class_id[uf.find(i)];

    std::vector<std::string> labels;
    labels.reserve(reps.size());
    for (int rep : reps)
        labels.push_back(rep < nb ? "B." + spec.b.label(rep) : "C." + spec.c.label(rep - nb));

    Graph p(spec.b.name() + "v" + spec.c.name(), labels);
    for (const auto& [u, v] : spec.b.edges()) p.add_edge(class_id[u], class_id[v]);
    for (const auto& [u, v] : spec.c.edges()) p.add_edge(class_id[nb + u], class_id[nb + v]);

    Pushout out;
    out.simple = !p.has_any_loop();
    out.graph = p;
    std::vector<int> fb(nb), fc(nc);
    for (int v = 0; v < nb; ++v) fb[v] = class_id[v];
    for (int v = 0; v < nc; ++v) fc[v] = class_id[nb + v];
    out.from_b = GraphMap(spec.b, out.graph, fb);
    out.from_c = GraphMap(spec.c, out.graph, fc);
    return out;
}

CylinderSpec abc_split(const Graph& g, int c, int height)
{
    if (c < 0 || c >= g.vertex_count()) throw InputError("abc_split: vertex out of range");
    if (g.has_loop(c) || g.degree(c) != 2)
        throw InputError("abc_split: vertex '" + g.label(c) + "' does not have degree 2");
    auto nb = g.neighbours(c);
    int a = std::min(nb[0], nb[1]);
    int b = std::max(nb[0], nb[1]);
    {
        Graph h = g.removed_vertex(c);
        int ai = a < c ? a : a - 1;
        int bi = b < c ? b : b - 1;
        if (h.component_ids()[ai] != h.component_ids()[bi])
            throw InputError("abc_split: vertex '" + g.label(c) + "' lies on no cycle");
    }

    Graph ga = g.without_edge(a, c).without_edge(c, b).renamed(g.name() + ".A");
    Graph gb = ga.with_edge(a, c).renamed(g.name() + ".B");
    Graph gc = ga.with_edge(c, b).renamed(g.name() + ".C");

    CylinderSpec spec;
    spec.a = ga;
    spec.b = gb;
    spec.c = gc;
    spec.f = GraphMap(ga, gb, GraphMap::identity(ga).assignment);
    spec.g = GraphMap(ga, gc, GraphMap::identity(ga).assignment);
    spec.height = height;
    return spec;
}

}  // namespace homcyl
