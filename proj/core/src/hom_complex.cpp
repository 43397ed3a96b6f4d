#include "homcyl/hom_complex.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>
#include <unordered_set>

#include "homcyl/errors.hpp"

namespace homcyl {

int Cell::total_size() const
{
    int s = 0;
    for (const auto& a : assignment) s += static_cast<int>(a.size());
    return s;
}

bool Cell::face_of(const Cell& other) const
{
    if (assignment.size() != other.assignment.size()) return false;
    for (std::size_t t = 0; t < assignment.size(); ++t)
        if (!std::includes(other.assignment[t].begin(), other.assignment[t].end(),
                           assignment[t].begin(), assignment[t].end()))
            return false;
    return true;
}

std::vector<int> Cell::image() const
{
    std::vector<int> im;
    for (const auto& a : assignment) im.insert(im.end(), a.begin(), a.end());
    std::sort(im.begin(), im.end());
    im.erase(std::unique(im.begin(), im.end()), im.end());
    return im;
}

bool Cell::operator<(const Cell& other) const
{
    return assignment < other.assignment;
}

std::string Cell::key() const
{
    std::ostringstream out;
    for (std::size_t t = 0; t < assignment.size(); ++t) {
        if (t) out << ";";
        for (std::size_t i = 0; i < assignment[t].size(); ++i)
            out << (i ? "," : "") << assignment[t][i];
    }
    return out.str();
}

std::string Cell::pretty(const Graph& target) const
{
    std::ostringstream out;
    for (std::size_t t = 0; t < assignment.size(); ++t) {
        if (t) out << ";";
        out << "{";
        for (std::size_t i = 0; i < assignment[t].size(); ++i)
            out << (i ? "," : "") << target.label(assignment[t][i]);
        out << "}";
    }
    return out.str();
}

std::size_t CellHash::operator()(const Cell& c) const
{
    std::size_t h = 1469598103934665603ull;
    auto mix = [&h](int x) {
        h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    };
    for (const auto& a : c.assignment) {
        mix(-1);
        for (int v : a) mix(v);
    }
    return h;
}

bool valid_cell(const Graph& t, const Graph& g, const Cell& c)
{
    if (c.coordinate_count() != t.vertex_count()) return false;
    for (const auto& a : c.assignment)
        if (a.empty()) return false;
    for (const auto& [u, v] : t.edges())
        for (int x : c.assignment[u])
            for (int y : c.assignment[v])
                if (!g.has_edge(x, y)) return false;
    return true;
}

bool can_extend(const Graph& t, const Graph& g, const Cell& c, int coord, int v)
{
    if (std::binary_search(c.assignment[coord].begin(), c.assignment[coord].end(), v))
        return false;
    for (int u : t.neighbours(coord)) {
        if (u == coord) {
            if (!g.has_edge(v, v)) return false;
            for (int w : c.assignment[coord])
                if (!g.has_edge(v, w)) return false;
        } else {
            for (int w : c.assignment[u])
                if (!g.has_edge(v, w)) return false;
        }
    }
    return true;
}

bool maximal_cell(const Graph& t, const Graph& g, const Cell& c)
{
    for (int coord = 0; coord < t.vertex_count(); ++coord)
        for (int v = 0; v < g.vertex_count(); ++v)
            if (can_extend(t, g, c, coord, v)) return false;
    return true;
}

std::vector<std::vector<int>> vertex_homomorphisms(const Graph& t, const Graph& g, long long cap)
{
    std::vector<std::vector<int>> homs;
    const int nt = t.vertex_count();
    if (nt == 0) return homs;

    // BFS-forest order so each vertex is constrained by assigned neighbours.
    std::vector<int> order;
    {
        std::vector<char> seen(nt, 0);
        for (int s = 0; s < nt; ++s) {
            if (seen[s]) continue;
            std::queue<int> q;
            q.push(s);
            seen[s] = 1;
            while (!q.empty()) {
                int u = q.front();
                q.pop();
                order.push_back(u);
                for (int v : t.neighbours(u))
                    if (!seen[v]) {
                        seen[v] = 1;
                        q.push(v);
                    }
            }
        }
    }

    std::vector<int> img(nt, -1);
    std::function<void(int)> rec = [&](int idx) {
        if (idx == nt) {
            homs.push_back(img);
            if (static_cast<long long>(homs.size()) > cap)
                throw BudgetExceeded("vertex homomorphism cap exceeded");
            return;
        }
        int u = order[idx];
        Bits allowed(g.vertex_count());
        for (int v = 0; v < g.vertex_count(); ++v) allowed.set(v);
        if (t.has_loop(u)) {
            Bits loops(g.vertex_count());
            for (int v = 0; v < g.vertex_count(); ++v)
                if (g.has_loop(v)) loops.set(v);
            allowed &= loops;
        }
        for (int w : t.neighbours(u))
            if (w != u && img[w] >= 0) allowed &= g.neighbourhood(img[w]);
        for (int v = allowed.next(0); v >= 0; v = allowed.next(v + 1)) {
            img[u] = v;
            rec(idx + 1);
            img[u] = -1;
        }
    };
    rec(0);
    std::sort(homs.begin(), homs.end());
    return homs;
}

namespace {

// Bron-Kerbosch with pivoting over the hom compatibility graph.
class CliqueEnumerator {
  public:
    CliqueEnumerator(std::vector<Bits> adj, long long cap) : adj_(std::move(adj)), cap_(cap)
    {
        n_ = static_cast<int>(adj_.size());
    }

    void run(const std::function<void(const std::vector<int>&)>& emit)
    {
        emit_ = &emit;
        Bits p(n_), x(n_);
        for (int v = 0; v < n_; ++v) p.set(v);
        r_.clear();
        expand(p, x);
    }

  private:
    int n_;
    std::vector<Bits> adj_;
    long long cap_;
    long long found_ = 0;
    std::vector<int> r_;
    const std::function<void(const std::vector<int>&)>* emit_ = nullptr;

    void expand(Bits p, Bits x)
    {
        if (!p.any() && !x.any()) {
            (*emit_)(r_);
            if (++found_ > cap_) throw BudgetExceeded("maximal cell cap exceeded");
            return;
        }
        // Pivot: vertex of P ∪ X with most neighbours in P.
        int pivot = -1, best = -1;
        for (int v = p.next(0); v >= 0; v = p.next(v + 1)) {
            int d = (p & adj_[v]).count();
            if (d > best) {
                best = d;
                pivot = v;
            }
        }
        for (int v = x.next(0); v >= 0; v = x.next(v + 1)) {
            int d = (p & adj_[v]).count();
            if (d > best) {
                best = d;
                pivot = v;
            }
        }
        Bits candidates = p;
        if (pivot >= 0) {
            for (int v = candidates.next(0); v >= 0; v = candidates.next(v + 1))
                if (adj_[pivot].test(v)) candidates.reset(v);
        }
        for (int v = candidates.next(0); v >= 0; v = candidates.next(v + 1)) {
            r_.push_back(v);
            expand(p & adj_[v], x & adj_[v]);
            r_.pop_back();
            p.reset(v);
            x.set(v);
        }
    }
};

}  // namespace

PolyhedralComplex hom_complex(const Graph& t, const Graph& g, const HomBudget& budget)
{
    PolyhedralComplex out;
    out.source = t;
    out.target = g;
    out.source_disconnected = !t.connected();

    auto homs = vertex_homomorphisms(t, g, budget.max_vertex_homs);
    const int h = static_cast<int>(homs.size());
    if (h == 0) return out;

    const auto edges = t.edges();
    auto compatible = [&](int i, int j) {
        for (const auto& [u, v] : edges) {
            if (!g.has_edge(homs[i][u], homs[j][v])) return false;
            if (!g.has_edge(homs[i][v], homs[j][u])) return false;
        }
        return true;
    };

    std::vector<Bits> adj(h, Bits(h));
    for (int i = 0; i < h; ++i)
        for (int j = i + 1; j < h; ++j)
            if (compatible(i, j)) {
                adj[i].set(j);
                adj[j].set(i);
            }

    CliqueEnumerator bk(std::move(adj), budget.max_cells);
    const int nt = t.vertex_count();
    bk.run([&](const std::vector<int>& clique) {
        Cell c;
        c.assignment.assign(nt, {});
        for (int hi : clique)
            for (int u = 0; u < nt; ++u) c.assignment[u].push_back(homs[hi][u]);
        for (auto& a : c.assignment) {
            std::sort(a.begin(), a.end());
            a.erase(std::unique(a.begin(), a.end()), a.end());
        }
        out.maximal_cells.push_back(std::move(c));
    });
    std::sort(out.maximal_cells.begin(), out.maximal_cells.end());
    out.maximal_cells.erase(std::unique(out.maximal_cells.begin(), out.maximal_cells.end()),
                            out.maximal_cells.end());
    return out;
}

long long PolyhedralComplex::vertex_cell_count() const
{
    return static_cast<long long>(vertex_homomorphisms(source, target).size());
}

Cell induced_cell(const GraphMap& h, const Cell& c)
{
    Cell out;
    out.assignment.reserve(c.assignment.size());
    for (const auto& a : c.assignment) {
        std::vector<int> img;
        img.reserve(a.size());
        for (int v : a) img.push_back(h(v));
        std::sort(img.begin(), img.end());
        img.erase(std::unique(img.begin(), img.end()), img.end());
        out.assignment.push_back(std::move(img));
    }
    return out;
}

FacePoset FacePoset::from_cells(Graph source, Graph target, const std::vector<Cell>& generators,
                                long long max_faces, std::string name)
{
    FacePoset p;
    p.name_ = std::move(name);
    p.source_ = std::move(source);
    p.target_ = std::move(target);

    std::unordered_set<Cell, CellHash> seen;
    std::vector<Cell> queue;
    auto push = [&](const Cell& c) {
        if (seen.insert(c).second) {
            if (static_cast<long long>(seen.size()) > max_faces)
                throw BudgetExceeded("face poset cap exceeded");
            queue.push_back(c);
        }
    };
    for (const auto& gcell : generators) push(gcell);
    // Downward closure through codimension-one faces.
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        Cell cur = queue[qi];
        for (std::size_t coord = 0; coord < cur.assignment.size(); ++coord) {
            if (cur.assignment[coord].size() < 2) continue;
            for (std::size_t drop = 0; drop < cur.assignment[coord].size(); ++drop) {
                Cell face = cur;
                face.assignment[coord].erase(face.assignment[coord].begin() + drop);
                push(face);
            }
        }
    }

    p.faces_.assign(queue.begin(), queue.end());
    std::sort(p.faces_.begin(), p.faces_.end(), [](const Cell& a, const Cell& b) {
        if (a.total_size() != b.total_size()) return a.total_size() < b.total_size();
        return a < b;
    });
    for (int i = 0; i < p.size(); ++i) p.index_.emplace(p.faces_[i], i);
    for (const auto& gcell : generators) p.generator_ids_.push_back(p.index_.at(gcell));
    std::sort(p.generator_ids_.begin(), p.generator_ids_.end());
    p.generator_ids_.erase(std::unique(p.generator_ids_.begin(), p.generator_ids_.end()),
                           p.generator_ids_.end());
    return p;
}

FacePoset FacePoset::from_complex(const PolyhedralComplex& c, long long max_faces)
{
    return from_cells(c.source, c.target, c.maximal_cells, max_faces,
                      "Hom(" + c.source.name() + "," + c.target.name() + ")");
}

int FacePoset::index_of(const Cell& c) const
{
    auto it = index_.find(c);
    return it == index_.end() ? -1 : it->second;
}

void FacePoset::below(int i, std::vector<int>& out) const
{
    out.clear();
    const Cell& top = faces_[i];
    // Every nonempty pointwise subset except the cell itself.
    Cell cur;
    cur.assignment.assign(top.assignment.size(), {});
    std::function<void(std::size_t)> rec = [&](std::size_t coord) {
        if (coord == top.assignment.size()) {
            if (!(cur == top)) out.push_back(index_.at(cur));
            return;
        }
        const auto& opts = top.assignment[coord];
        const int s = static_cast<int>(opts.size());
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << s); ++mask) {
            cur.assignment[coord].clear();
            for (int b = 0; b < s; ++b)
                if (mask & (std::uint64_t{1} << b)) cur.assignment[coord].push_back(opts[b]);
            rec(coord + 1);
        }
    };
    rec(0);
}

void FacePoset::covers_below(int i, std::vector<int>& out) const
{
    out.clear();
    const Cell& top = faces_[i];
    for (std::size_t coord = 0; coord < top.assignment.size(); ++coord) {
        if (top.assignment[coord].size() < 2) continue;
        Cell face = top;
        for (std::size_t drop = 0; drop < top.assignment[coord].size(); ++drop) {
            face.assignment[coord] = top.assignment[coord];
            face.assignment[coord].erase(face.assignment[coord].begin() + drop);
            out.push_back(index_.at(face));
        }
    }
}

std::vector<int> FacePoset::maximal_elements() const
{
    // Every face lies under some generator, so only generators can be
    // maximal; among those, drop any nested in another.
    std::vector<int> out;
    for (int i : generator_ids_) {
        bool maximal = true;
        for (int j : generator_ids_) {
            if (i == j) continue;
            if (faces_[i].total_size() < faces_[j].total_size() &&
                faces_[i].face_of(faces_[j])) {
                maximal = false;
                break;
            }
        }
        if (maximal) out.push_back(i);
    }
    return out;
}

ChainComplex poset_chain_complex(int n_elements,
                                 const std::function<void(int, std::vector<int>&)>& below,
                                 long long max_chains)
{
    // Chains stored per length in flat arenas, in descending poset order.
    std::vector<std::vector<int>> arena;  // arena[len-1]: records of `len` ints
    long long total = 0;
    std::vector<int> chain;

    std::function<void(int)> dfs = [&](int x) {
        chain.push_back(x);
        const std::size_t len = chain.size();
        if (arena.size() < len) arena.emplace_back();
        arena[len - 1].insert(arena[len - 1].end(), chain.begin(), chain.end());
        if (++total > max_chains) throw BudgetExceeded("order complex chain cap exceeded");
        std::vector<int> lower;
        below(x, lower);
        for (int y : lower) dfs(y);
        chain.pop_back();
    };
    for (int e = 0; e < n_elements; ++e) dfs(e);

    ChainComplex cc;
    const int top = static_cast<int>(arena.size()) - 1;
    if (top < 0) return cc;
    cc.dims.resize(top + 1);
    cc.boundary.resize(top + 1);

    // Sort records per dimension for deterministic indexing.
    std::vector<std::vector<int>> perm(top + 1);
    auto record_less = [&](const std::vector<int>& flat, int len, int a, int b) {
        const int* ra = flat.data() + static_cast<std::size_t>(a) * len;
        const int* rb = flat.data() + static_cast<std::size_t>(b) * len;
        return std::lexicographical_compare(ra, ra + len, rb, rb + len);
    };
    for (int d = 0; d <= top; ++d) {
        const int len = d + 1;
        const int count = static_cast<int>(arena[d].size()) / len;
        cc.dims[d] = count;
        perm[d].resize(count);
        std::iota(perm[d].begin(), perm[d].end(), 0);
        std::sort(perm[d].begin(), perm[d].end(),
                  [&](int a, int b) { return record_less(arena[d], len, a, b); });
    }
    // rank_of[d][record position] via binary search in the sorted permutation.
    auto find_rank = [&](int d, const int* rec) {
        const int len = d + 1;
        const auto& flat = arena[d];
        int lo = 0, hi = cc.dims[d];
        while (lo < hi) {
            int mid = (lo + hi) / 2;
            const int* rm = flat.data() + static_cast<std::size_t>(perm[d][mid]) * len;
            if (std::lexicographical_compare(rm, rm + len, rec, rec + len))
                lo = mid + 1;
            else
                hi = mid;
        }
        return lo;
    };

    std::vector<int> sub;
    for (int d = 1; d <= top; ++d) {
        const int len = d + 1;
        SparseIntMatrix& m = cc.boundary[d];
        m.rows = cc.dims[d - 1];
        m.cols = cc.dims[d];
        for (int col = 0; col < cc.dims[d]; ++col) {
            const int* rec = arena[d].data() + static_cast<std::size_t>(perm[d][col]) * len;
            long long sign = 1;
            for (int drop = 0; drop < len; ++drop) {
                sub.clear();
                for (int i = 0; i < len; ++i)
                    if (i != drop) sub.push_back(rec[i]);
                m.entries.push_back({find_rank(d - 1, sub.data()), col, sign});
                sign = -sign;
            }
        }
    }
    return cc;
}

HomologyResult poset_homology(const FacePoset& poset, bool reduced, long long max_chains)
{
    if (poset.size() == 0) {
        HomologyResult res;
        res.reduced = reduced;
        res.empty_complex = true;
        return res;
    }
    auto below = [&](int i, std::vector<int>& out) { poset.below(i, out); };
    return homology(poset_chain_complex(poset.size(), below, max_chains), reduced);
}

namespace {

// Saturated descending chains from the maximal elements; these are the
// facets of the order complex.
void maximal_chains(int n_elements, const std::vector<int>& tops,
                    const std::function<void(int, std::vector<int>&)>& covers,
                    long long cap, const std::function<void(const std::vector<int>&)>& emit)
{
    (void)n_elements;
    long long total = 0;
    std::vector<int> chain;
    std::function<void(int)> dfs = [&](int x) {
        chain.push_back(x);
        std::vector<int> lower;
        covers(x, lower);
        if (lower.empty()) {
            emit(chain);
            if (++total > cap) throw BudgetExceeded("maximal chain cap exceeded");
        } else {
            for (int y : lower) dfs(y);
        }
        chain.pop_back();
    };
    for (int m : tops) dfs(m);
}

}  // namespace

SimplicialComplex order_complex(const PolyhedralComplex& p, const HomBudget& budget)
{
    FacePoset poset = FacePoset::from_complex(p, budget.max_faces);
    std::vector<std::string> labels;
    labels.reserve(poset.size());
    for (int i = 0; i < poset.size(); ++i) labels.push_back(poset.face(i).key());

    std::vector<std::vector<int>> facets;
    auto covers = [&](int i, std::vector<int>& out) { poset.covers_below(i, out); };
    maximal_chains(poset.size(), poset.maximal_elements(), covers, budget.max_chains,
                   [&](const std::vector<int>& chain) { facets.push_back(chain); });
    return SimplicialComplex::from_facets_nonnested("Sd" + poset.name(), std::move(labels),
                                                    std::move(facets));
}

HomologyResult hom_homology(const Graph& t, const Graph& g, bool reduced, const HomBudget& budget)
{
    auto complex = hom_complex(t, g, budget);
    if (complex.empty()) {
        HomologyResult res;
        res.reduced = reduced;
        res.empty_complex = true;
        return res;
    }
    FacePoset poset = FacePoset::from_complex(complex, budget.max_faces);
    return poset_homology(poset, reduced, budget.max_chains);
}

namespace {

// Shared glued-poset machinery for the double mapping cylinder of maps
// out of a middle part A into sides B and C. Elements are faces of three
// posets; the cross order is "image is a face of".
struct GluedPoset {
    // Elements: [0, nb) B-part, [nb, nb+nc) C-part, [nb+nc, nb+nc+na) A-part.
    int nb = 0, nc = 0, na = 0;
    std::function<void(int, std::vector<int>&)> below_b, below_c, below_a;  // within parts
    std::function<void(int, std::vector<int>&)> covers_b, covers_c, covers_a;
    std::vector<int> phi, psi;                  // A-element -> B/C-element images
    std::vector<std::vector<int>> a_under_b;    // per B-element
    std::vector<std::vector<int>> a_under_c;    // per C-element
    std::vector<std::vector<int>> parents_a;    // covers above, within the A part
    std::vector<char> b_is_max, c_is_max;

    int size() const { return nb + nc + na; }
    int a_id(int i) const { return nb + nc + i; }

    void below(int x, std::vector<int>& out) const
    {
        out.clear();
        std::vector<int> tmp;
        if (x < nb) {
            below_b(x, tmp);
            out = tmp;
            for (int a : a_under_b[x]) out.push_back(a_id(a));
        } else if (x < nb + nc) {
            below_c(x - nb, tmp);
            for (int y : tmp) out.push_back(nb + y);
            for (int a : a_under_c[x - nb]) out.push_back(a_id(a));
        } else {
            below_a(x - nb - nc, tmp);
            for (int y : tmp) out.push_back(a_id(y));
        }
    }

    void covers(int x, std::vector<int>& out) const
    {
        out.clear();
        std::vector<int> tmp;
        if (x < nb) {
            covers_b(x, tmp);
            out = tmp;
            // a -> b is a cover iff b = phi(a) and no parent of a has the
            // same image.
            for (int a : a_under_b[x]) {
                if (phi[a] != x) continue;
                bool blocked = false;
                for (int pa : parents_a[a])
                    if (phi[pa] == x) {
                        blocked = true;
                        break;
                    }
                if (!blocked) out.push_back(a_id(a));
            }
        } else if (x < nb + nc) {
            covers_c(x - nb, tmp);
            for (int y : tmp) out.push_back(nb + y);
            for (int a : a_under_c[x - nb]) {
                if (psi[a] != x - nb) continue;
                bool blocked = false;
                for (int pa : parents_a[a])
                    if (psi[pa] == x - nb) {
                        blocked = true;
                        break;
                    }
                if (!blocked) out.push_back(a_id(a));
            }
        } else {
            covers_a(x - nb - nc, tmp);
            for (int y : tmp) out.push_back(a_id(y));
        }
    }

    std::vector<int> tops() const
    {
        std::vector<int> out;
        for (int b = 0; b < nb; ++b)
            if (b_is_max[b]) out.push_back(b);
        for (int c = 0; c < nc; ++c)
            if (c_is_max[c]) out.push_back(nb + c);
        return out;
    }
};

}  // namespace

SimplicialComplex simplicial_double_cylinder(const SimplicialComplex& ka,
                                             const SimplicialComplex& kb,
                                             const SimplicialComplex& kc,
                                             const std::vector<int>& phi,
                                             const std::vector<int>& psi, long long max_chains)
{
    if (static_cast<int>(phi.size()) != ka.vertex_count() ||
        static_cast<int>(psi.size()) != ka.vertex_count())
        throw InputError("double cylinder: vertex maps must cover the middle complex");

    auto faces_a = ka.all_simplices();
    auto faces_b = kb.all_simplices();
    auto faces_c = kc.all_simplices();

    auto index_map = [](const std::vector<std::vector<int>>& faces) {
        std::unordered_map<std::string, int> idx;
        for (std::size_t i = 0; i < faces.size(); ++i) {
            std::string k;
            for (int v : faces[i]) k += std::to_string(v) + ",";
            idx.emplace(std::move(k), static_cast<int>(i));
        }
        return idx;
    };
    auto key_of = [](const std::vector<int>& f) {
        std::string k;
        for (int v : f) k += std::to_string(v) + ",";
        return k;
    };
    auto idx_a = index_map(faces_a);
    auto idx_b = index_map(faces_b);
    auto idx_c = index_map(faces_c);

    auto image_simplex = [&](const std::vector<int>& f, const std::vector<int>& map) {
        std::vector<int> img;
        img.reserve(f.size());
        for (int v : f) img.push_back(map[v]);
        std::sort(img.begin(), img.end());
        img.erase(std::unique(img.begin(), img.end()), img.end());
        return img;
    };

    const int na = static_cast<int>(faces_a.size());
    const int nbf = static_cast<int>(faces_b.size());
    const int ncf = static_cast<int>(faces_c.size());

    std::vector<int> phi_img(na), psi_img(na);
    for (int a = 0; a < na; ++a) {
        auto ib = idx_b.find(key_of(image_simplex(faces_a[a], phi)));
        auto ic = idx_c.find(key_of(image_simplex(faces_a[a], psi)));
        if (ib == idx_b.end()) throw InputError("double cylinder: phi is not simplicial");
        if (ic == idx_c.end()) throw InputError("double cylinder: psi is not simplicial");
        phi_img[a] = ib->second;
        psi_img[a] = ic->second;
    }

    auto subset = [](const std::vector<int>& small, const std::vector<int>& big) {
        return std::includes(big.begin(), big.end(), small.begin(), small.end());
    };

    GluedPoset gp;
    gp.nb = nbf;
    gp.nc = ncf;
    gp.na = na;
    gp.phi = phi_img;
    gp.psi = psi_img;
    gp.a_under_b.assign(nbf, {});
    gp.a_under_c.assign(ncf, {});
    for (int a = 0; a < na; ++a) {
        for (int b = 0; b < nbf; ++b)
            if (subset(faces_b[phi_img[a]], faces_b[b])) gp.a_under_b[b].push_back(a);
        for (int c = 0; c < ncf; ++c)
            if (subset(faces_c[psi_img[a]], faces_c[c])) gp.a_under_c[c].push_back(a);
    }
    gp.parents_a.assign(na, {});
    for (int a = 0; a < na; ++a) {
        // a's parents: supersets with one extra vertex that are simplices.
        const auto& f = faces_a[a];
        for (int v = 0; v < ka.vertex_count(); ++v) {
            if (std::binary_search(f.begin(), f.end(), v)) continue;
            std::vector<int> up = f;
            up.insert(std::lower_bound(up.begin(), up.end(), v), v);
            auto it = idx_a.find(key_of(up));
            if (it != idx_a.end()) gp.parents_a[a].push_back(it->second);
        }
    }
    auto within_below = [](const std::vector<std::vector<int>>& faces,
                           const std::unordered_map<std::string, int>& idx,
                           const std::function<std::string(const std::vector<int>&)>& key) {
        return [&faces, &idx, key](int i, std::vector<int>& out) {
            out.clear();
            const auto& f = faces[i];
            const int s = static_cast<int>(f.size());
            for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << s); ++mask) {
                std::vector<int> sub;
                for (int b = 0; b < s; ++b)
                    if (mask & (std::uint64_t{1} << b)) sub.push_back(f[b]);
                out.push_back(idx.at(key(sub)));
            }
        };
    };
    auto within_covers = [](const std::vector<std::vector<int>>& faces,
                            const std::unordered_map<std::string, int>& idx,
                            const std::function<std::string(const std::vector<int>&)>& key) {
        return [&faces, &idx, key](int i, std::vector<int>& out) {
            out.clear();
            const auto& f = faces[i];
            if (f.size() < 2) return;
            for (std::size_t drop = 0; drop < f.size(); ++drop) {
                std::vector<int> sub;
                for (std::size_t j = 0; j < f.size(); ++j)
                    if (j != drop) sub.push_back(f[j]);
                out.push_back(idx.at(key(sub)));
            }
        };
    };
    std::function<std::string(const std::vector<int>&)> keyfn = key_of;
    gp.below_a = within_below(faces_a, idx_a, keyfn);
    gp.below_b = within_below(faces_b, idx_b, keyfn);
    gp.below_c = within_below(faces_c, idx_c, keyfn);
    gp.covers_a = within_covers(faces_a, idx_a, keyfn);
    gp.covers_b = within_covers(faces_b, idx_b, keyfn);
    gp.covers_c = within_covers(faces_c, idx_c, keyfn);

    // Maximal elements of the side parts are exactly the facets.
    auto mark_facets = [&](const SimplicialComplex& k,
                           const std::unordered_map<std::string, int>& idx, int count) {
        std::vector<char> ismax(count, 0);
        for (const auto& f : k.facets()) ismax[idx.at(key_of(f))] = 1;
        return ismax;
    };
    gp.b_is_max = mark_facets(kb, idx_b, nbf);
    gp.c_is_max = mark_facets(kc, idx_c, ncf);

    // Vertex labels for the output: part tag + simplex key.
    std::vector<std::string> labels(gp.size());
    auto label_of = [&](char tag, const std::vector<int>& f) {
        std::string l(1, tag);
        l += ":";
        for (std::size_t i = 0; i < f.size(); ++i) l += (i ? "." : "") + std::to_string(f[i]);
        return l;
    };
    for (int b = 0; b < nbf; ++b) labels[b] = label_of('B', faces_b[b]);
    for (int c = 0; c < ncf; ++c) labels[nbf + c] = label_of('C', faces_c[c]);
    for (int a = 0; a < na; ++a) labels[gp.a_id(a)] = label_of('A', faces_a[a]);

    std::vector<std::vector<int>> facets;
    auto covers = [&](int x, std::vector<int>& out) { gp.covers(x, out); };
    maximal_chains(gp.size(), gp.tops(), covers, max_chains,
                   [&](const std::vector<int>& chain) { facets.push_back(chain); });

    std::string name = kb.name() + "+cyl(" + ka.name() + ")+" + kc.name();
    return SimplicialComplex::from_facets_nonnested(std::move(name), std::move(labels),
                                                    std::move(facets));
}

HomologyResult hom_cylinder_pushout_homology(const Graph& t, const CylinderSpec& spec,
                                             bool reduced, const HomBudget& budget)
{
    spec.validate();
    auto hom_a = hom_complex(t, spec.a, budget);
    auto hom_b = hom_complex(t, spec.b, budget);
    auto hom_c = hom_complex(t, spec.c, budget);
    FacePoset pa = FacePoset::from_complex(hom_a, budget.max_faces);
    FacePoset pb = FacePoset::from_complex(hom_b, budget.max_faces);
    FacePoset pc = FacePoset::from_complex(hom_c, budget.max_faces);

    const int na = pa.size(), nbf = pb.size(), ncf = pc.size();
    if (na + nbf + ncf == 0) {
        HomologyResult res;
        res.reduced = reduced;
        res.empty_complex = true;
        return res;
    }

    std::vector<int> phi(na), psi(na);
    for (int a = 0; a < na; ++a) {
        phi[a] = pb.index_of(induced_cell(spec.f, pa.face(a)));
        psi[a] = pc.index_of(induced_cell(spec.g, pa.face(a)));
        if (phi[a] < 0 || psi[a] < 0)
            throw PropertyViolation("induced cell escaped the side complex");
    }
    std::vector<std::vector<int>> a_under_b(nbf), a_under_c(ncf);
    for (int a = 0; a < na; ++a) {
        for (int b = 0; b < nbf; ++b)
            if (pb.face(phi[a]).face_of(pb.face(b))) a_under_b[b].push_back(a);
        for (int c = 0; c < ncf; ++c)
            if (pc.face(psi[a]).face_of(pc.face(c))) a_under_c[c].push_back(a);
    }

    const int total = nbf + ncf + na;
    auto below = [&](int x, std::vector<int>& out) {
        out.clear();
        std::vector<int> tmp;
        if (x < nbf) {
            pb.below(x, tmp);
            out = tmp;
            for (int a : a_under_b[x]) out.push_back(nbf + ncf + a);
        } else if (x < nbf + ncf) {
            pc.below(x - nbf, tmp);
            for (int y : tmp) out.push_back(nbf + y);
            for (int a : a_under_c[x - nbf]) out.push_back(nbf + ncf + a);
        } else {
            pa.below(x - nbf - ncf, tmp);
            for (int y : tmp) out.push_back(nbf + ncf + y);
        }
    };
    return homology(poset_chain_complex(total, below, budget.max_chains), reduced);
}

HomVertexCount hom_vertex_count(const Cylinder& cyl, const HomBudget& budget)
{
    const CylinderSpec& spec = cyl.spec();
    const int p = spec.b.vertex_count();
    const int r = spec.c.vertex_count();
    const int n = cyl.height();

    auto is_complete_loopless = [](const Graph& g) {
        if (g.has_any_loop()) return false;
        for (int u = 0; u < g.vertex_count(); ++u)
            for (int v = u + 1; v < g.vertex_count(); ++v)
                if (!g.has_edge(u, v)) return false;
        return true;
    };
    auto injective = [](const GraphMap& m) {
        std::vector<int> seen(m.codomain.vertex_count(), 0);
        for (int v = 0; v < m.domain.vertex_count(); ++v) {
            if (seen[m(v)]) return false;
            seen[m(v)] = 1;
        }
        return true;
    };
    if (spec.a.vertex_count() != 2 || !spec.a.has_edge(0, 1) || spec.a.has_any_loop() ||
        !is_complete_loopless(spec.b) || !is_complete_loopless(spec.c) || p <= 2 || r <= 2 ||
        !injective(spec.f) || !injective(spec.g))
        throw InputError("hom_vertex_count expects B = K_p, A = K_2, C = K_r with inclusions");

    HomVertexCount out;
    Graph k2 = Graph::complete(2);
    out.zero_cells = static_cast<long long>(
        vertex_homomorphisms(k2, cyl.quotient(), budget.max_vertex_homs).size());
    out.quoted_form = static_cast<long long>(p) * (p - 1) + static_cast<long long>(r) * (r - 1) +
                      6LL * n - 8;
    out.corrected_form = static_cast<long long>(p) * (p - 1) +
                         static_cast<long long>(r) * (r - 1) + 6LL * n - 2;
    out.matches_quoted = out.zero_cells == out.quoted_form;
    out.matches_corrected = out.zero_cells == out.corrected_form;
    return out;
}

}  // namespace homcyl
