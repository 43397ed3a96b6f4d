#include "homcyl/graph.hpp"

#include <algorithm>
#include <queue>
#include <unordered_map>
#include <unordered_set>

#include "homcyl/errors.hpp"

namespace homcyl {

Graph::Graph(std::string name, std::vector<std::string> labels)
    : name_(std::move(name)), labels_(std::move(labels))
{
    std::unordered_set<std::string> seen;
    for (const auto& l : labels_) {
        if (!seen.insert(l).second)
            throw InputError("duplicate vertex label '" + l + "' in graph '" + name_ + "'");
    }
    adj_.assign(labels_.size(), Bits(static_cast<int>(labels_.size())));
}

Graph Graph::build(std::string name, const std::vector<std::string>& labels,
                   const std::vector<std::pair<std::string, std::string>>& edges)
{
    if (labels.empty()) throw InputError("graph '" + name + "' has an empty label list");
    Graph g(std::move(name), labels);
    for (const auto& [a, b] : edges) {
        int u = g.index_of(a);
        int v = g.index_of(b);
        if (u < 0) throw InputError("unknown label '" + a + "' in edge list of '" + g.name_ + "'");
        if (v < 0) throw InputError("unknown label '" + b + "' in edge list of '" + g.name_ + "'");
        g.add_edge(u, v);
    }
    return g;
}

namespace {

std::vector<std::string> numbered_labels(int n, const std::string& prefix)
{
    std::vector<std::string> ls;
    ls.reserve(n);
    for (int i = 0; i < n; ++i) ls.push_back(prefix + std::to_string(i));
    return ls;
}

}  // namespace

Graph Graph::complete(int n, std::string name)
{
    if (n < 1) throw InputError("complete graph needs n >= 1");
    if (name.empty()) name = "K" + std::to_string(n);
    Graph g(std::move(name), numbered_labels(n, "v"));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph Graph::cycle(int n, std::string name)
{
    if (n < 3) throw InputError("cycle needs n >= 3");
    if (name.empty()) name = "C" + std::to_string(n);
    Graph g(std::move(name), numbered_labels(n, "v"));
    for (int u = 0; u < n; ++u) g.add_edge(u, (u + 1) % n);
    return g;
}

Graph Graph::path(int n, std::string name)
{
    if (n < 1) throw InputError("path needs n >= 1");
    if (name.empty()) name = "P" + std::to_string(n);
    Graph g(std::move(name), numbered_labels(n, "v"));
    for (int u = 0; u + 1 < n; ++u) g.add_edge(u, u + 1);
    return g;
}

int Graph::index_of(const std::string& label) const
{
    for (int i = 0; i < vertex_count(); ++i)
        if (labels_[i] == label) return i;
    return -1;
}

void Graph::add_edge(int u, int v)
{
    adj_[u].set(v);
    adj_[v].set(u);
}

void Graph::remove_edge(int u, int v)
{
    adj_[u].reset(v);
    adj_[v].reset(u);
}

bool Graph::has_any_loop() const
{
    for (int v = 0; v < vertex_count(); ++v)
        if (has_loop(v)) return true;
    return false;
}

int Graph::edge_count() const
{
    int c = 0;
    for (int u = 0; u < vertex_count(); ++u)
        for (int v = u; v < vertex_count(); ++v)
            if (adj_[u].test(v)) ++c;
    return c;
}

std::vector<std::pair<int, int>> Graph::edges() const
{
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < vertex_count(); ++u)
        for (int v = u; v < vertex_count(); ++v)
            if (adj_[u].test(v)) es.emplace_back(u, v);
    return es;
}

std::vector<int> Graph::component_ids() const
{
    std::vector<int> comp(vertex_count(), -1);
    int next_id = 0;
    for (int s = 0; s < vertex_count(); ++s) {
        if (comp[s] >= 0) continue;
        comp[s] = next_id;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : neighbours(u)) {
                if (comp[v] < 0) {
                    comp[v] = next_id;
                    q.push(v);
                }
            }
        }
        ++next_id;
    }
    return comp;
}

bool Graph::connected() const
{
    if (vertex_count() == 0) return false;
    auto comp = component_ids();
    return std::all_of(comp.begin(), comp.end(), [](int c) { return c == 0; });
}

Graph Graph::renamed(std::string name) const
{
    Graph g = *this;
    g.name_ = std::move(name);
    return g;
}

Graph Graph::induced(const std::vector<int>& keep, std::string name) const
{
    std::vector<std::string> ls;
    ls.reserve(keep.size());
    for (int v : keep) ls.push_back(labels_[v]);
    Graph g(std::move(name), ls);
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = i; j < keep.size(); ++j)
            if (adj_[keep[i]].test(keep[j])) g.add_edge(static_cast<int>(i), static_cast<int>(j));
    return g;
}

Graph Graph::removed_vertex(int v) const
{
    std::vector<int> keep;
    keep.reserve(vertex_count() - 1);
    for (int u = 0; u < vertex_count(); ++u)
        if (u != v) keep.push_back(u);
    return induced(keep, name_ + "-" + labels_[v]);
}

Graph Graph::with_edge(int u, int v) const
{
    Graph g = *this;
    g.add_edge(u, v);
    return g;
}

Graph Graph::without_edge(int u, int v) const
{
    Graph g = *this;
    g.remove_edge(u, v);
    return g;
}

bool Graph::same_structure(const Graph& other) const
{
    return labels_ == other.labels_ && adj_ == other.adj_;
}

GraphMap::GraphMap(Graph dom, Graph cod, std::vector<int> assign)
    : domain(std::move(dom)), codomain(std::move(cod)), assignment(std::move(assign))
{
    if (static_cast<int>(assignment.size()) != domain.vertex_count())
        throw InputError("graph map assignment size does not match domain");
    for (int img : assignment)
        if (img < 0 || img >= codomain.vertex_count())
            throw InputError("graph map assignment leaves the codomain");
}

GraphMap GraphMap::identity(const Graph& g)
{
    std::vector<int> a(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) a[v] = v;
    return {g, g, std::move(a)};
}

GraphMap GraphMap::constant(const Graph& dom, const Graph& cod, int image)
{
    return {dom, cod, std::vector<int>(dom.vertex_count(), image)};
}

GraphMap GraphMap::from_labels(const Graph& dom, const Graph& cod,
                               const std::vector<std::string>& images)
{
    if (static_cast<int>(images.size()) != dom.vertex_count())
        throw InputError("vertex map needs one image per domain vertex");
    std::vector<int> a;
    a.reserve(images.size());
    for (const auto& l : images) {
        int v = cod.index_of(l);
        if (v < 0) throw InputError("vertex map image '" + l + "' is not a vertex of '" + cod.name() + "'");
        a.push_back(v);
    }
    return {dom, cod, std::move(a)};
}

bool is_homomorphism(const GraphMap& m)
{
    for (const auto& [u, v] : m.domain.edges())
        if (!m.codomain.has_edge(m(u), m(v))) return false;
    return true;
}

GraphMap compose(const GraphMap& outer, const GraphMap& inner)
{
    if (!inner.codomain.same_structure(outer.domain))
        throw InputError("compose: middle graphs do not match");
    std::vector<int> a(inner.domain.vertex_count());
    for (int v = 0; v < inner.domain.vertex_count(); ++v) a[v] = outer(inner(v));
    return {inner.domain, outer.codomain, std::move(a)};
}

Graph categorical_product(const Graph& g, const Graph& h)
{
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(g.vertex_count()) * h.vertex_count());
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = 0; v < h.vertex_count(); ++v)
            labels.push_back(g.label(u) + "," + h.label(v));
    Graph p(g.name() + "x" + h.name(), labels);
    for (const auto& [u, u2] : g.edges()) {
        for (const auto& [v, v2] : h.edges()) {
            // Both orientations of both edges.
            p.add_edge(product_index(h, u, v), product_index(h, u2, v2));
            p.add_edge(product_index(h, u, v2), product_index(h, u2, v));
        }
    }
    return p;
}

Graph looped_interval(int n)
{
    if (n < 1) throw InputError("looped interval needs n >= 1");
    Graph g("I" + std::to_string(n), numbered_labels(n + 1, ""));
    for (int i = 0; i <= n; ++i) {
        g.add_edge(i, i);
        if (i < n) g.add_edge(i, i + 1);
    }
    return g;
}

BipartiteCheck is_bipartite(const Graph& g)
{
    BipartiteCheck out;
    out.side.assign(g.vertex_count(), -1);
    std::vector<int> parent(g.vertex_count(), -1);

    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.has_loop(v)) {
            out.bipartite = false;
            out.odd_closed_walk = {v, v};
            return out;
        }
    }

    auto walk_to_root = [&](int v) {
        std::vector<int> w;
        while (v >= 0) {
            w.push_back(v);
            v = parent[v];
        }
        return w;  // v .. root
    };

    for (int s = 0; s < g.vertex_count(); ++s) {
        if (out.side[s] >= 0) continue;
        out.side[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : g.neighbours(u)) {
                if (out.side[v] < 0) {
                    out.side[v] = 1 - out.side[u];
                    parent[v] = u;
                    q.push(v);
                } else if (out.side[v] == out.side[u]) {
                    // Odd walk: root -> u, edge uv, v -> root.
                    std::vector<int> up = walk_to_root(u);
                    std::vector<int> down = walk_to_root(v);
                    std::reverse(up.begin(), up.end());
                    out.odd_closed_walk = up;
                    out.odd_closed_walk.insert(out.odd_closed_walk.end(), down.begin(),
                                               down.end());
                    out.bipartite = false;
                    out.side.clear();
                    return out;
                }
            }
        }
    }
    return out;
}

int diameter(const Graph& g)
{
    if (g.vertex_count() == 0) throw InputError("diameter of the empty graph");
    int best = 0;
    for (int s = 0; s < g.vertex_count(); ++s) {
        std::vector<int> dist(g.vertex_count(), -1);
        dist[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : g.neighbours(u)) {
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    best = std::max(best, dist[v]);
                    q.push(v);
                }
            }
        }
        for (int d : dist)
            if (d < 0) throw InputError("diameter of a disconnected graph");
    }
    return best;
}

bool is_p4_free(const Graph& g)
{
    const int n = g.vertex_count();
    auto induces_p4 = [&](int a, int b, int c, int d) {
        // Path a-b-c-d with no chords, no loops on the four vertices.
        if (g.has_loop(a) || g.has_loop(b) || g.has_loop(c) || g.has_loop(d)) return false;
        return g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(c, d) && !g.has_edge(a, c) &&
               !g.has_edge(a, d) && !g.has_edge(b, d);
    };
    std::vector<int> vs(4);
    for (vs[0] = 0; vs[0] < n; ++vs[0])
        for (vs[1] = 0; vs[1] < n; ++vs[1])
            for (vs[2] = 0; vs[2] < n; ++vs[2])
                for (vs[3] = 0; vs[3] < n; ++vs[3]) {
                    if (vs[0] == vs[1] || vs[0] == vs[2] || vs[0] == vs[3] || vs[1] == vs[2] ||
                        vs[1] == vs[3] || vs[2] == vs[3])
                        continue;
                    if (vs[0] > vs[3]) continue;  // each path once
                    if (induces_p4(vs[0], vs[1], vs[2], vs[3])) return false;
                }
    return true;
}

std::optional<int> degree2_vertex_on_cycle(const Graph& g)
{
    for (int c = 0; c < g.vertex_count(); ++c) {
        if (g.has_loop(c) || g.degree(c) != 2) continue;
        auto nb = g.neighbours(c);
        // On a cycle iff the two neighbours stay connected without c.
        Graph h = g.removed_vertex(c);
        int a = nb[0] < c ? nb[0] : nb[0] - 1;
        int b = nb[1] < c ? nb[1] : nb[1] - 1;
        auto comp = h.component_ids();
        if (comp[a] == comp[b]) return c;
    }
    return std::nullopt;
}

std::optional<Fold> find_fold(const Graph& g)
{
    for (int r = 0; r < g.vertex_count(); ++r)
        for (int a = 0; a < g.vertex_count(); ++a) {
            if (a == r) continue;
            if (g.neighbourhood(r).is_subset_of(g.neighbourhood(a))) return Fold{r, a};
        }
    return std::nullopt;
}

FoldSequence stiff_core(const Graph& g)
{
    FoldSequence seq;
    seq.start = g;
    Graph cur = g;
    // image_of[v] = current vertex index of original vertex v's image.
    std::vector<int> image_of(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) image_of[v] = v;

    while (auto fold = find_fold(cur)) {
        seq.steps.emplace_back(cur.label(fold->removed), cur.label(fold->absorbing));
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (image_of[v] == fold->removed)
                image_of[v] = fold->absorbing;
        }
        // Vertex indices above the removed one shift down.
        for (int v = 0; v < g.vertex_count(); ++v)
            if (image_of[v] > fold->removed) --image_of[v];
        cur = cur.removed_vertex(fold->removed);
    }
    seq.core = cur.renamed(g.name() + ".core");
    seq.projection = GraphMap(g, seq.core, image_of);
    return seq;
}

namespace {

struct IsoState {
    const Graph* g;
    const Graph* h;
    std::vector<int> g_to_h;
    std::vector<int> h_used;

    bool extend(int depth, const std::vector<int>& order)
    {
        if (depth == static_cast<int>(order.size())) return true;
        int u = order[depth];
        for (int w = 0; w < h->vertex_count(); ++w) {
            if (h_used[w]) continue;
            if (g->has_loop(u) != h->has_loop(w)) continue;
            if (g->degree(u) != h->degree(w)) continue;
            bool ok = true;
            for (int d = 0; d < depth && ok; ++d) {
                int u2 = order[d];
                if (g->has_edge(u, u2) != h->has_edge(w, g_to_h[u2])) ok = false;
            }
            if (!ok) continue;
            g_to_h[u] = w;
            h_used[w] = 1;
            if (extend(depth + 1, order)) return true;
            h_used[w] = 0;
            g_to_h[u] = -1;
        }
        return false;
    }
};

std::vector<std::pair<int, int>> degree_loop_signature(const Graph& g)
{
    std::vector<std::pair<int, int>> sig;
    sig.reserve(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v)
        sig.emplace_back(g.degree(v), g.has_loop(v) ? 1 : 0);
    std::sort(sig.begin(), sig.end());
    return sig;
}

}  // namespace

bool are_isomorphic(const Graph& g, const Graph& h)
{
    if (g.vertex_count() != h.vertex_count()) return false;
    if (g.edge_count() != h.edge_count()) return false;
    if (degree_loop_signature(g) != degree_loop_signature(h)) return false;

    // Assign high-degree vertices first; they are the most constrained.
    std::vector<int> order(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) order[v] = v;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return g.degree(a) > g.degree(b); });

    IsoState st{&g, &h, std::vector<int>(g.vertex_count(), -1),
                std::vector<int>(h.vertex_count(), 0)};
    return st.extend(0, order);
}

}  // namespace homcyl
