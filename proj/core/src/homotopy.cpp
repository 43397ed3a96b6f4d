#include "homcyl/homotopy.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>

#include "homcyl/errors.hpp"

namespace homcyl {

namespace {

// Adjacent level maps: m1(u) m2(v) must be an edge of Y for every edge uv
// of X (both orientations are covered because uv and vu both occur).
bool cross_compatible(const Graph& x, const Graph& y, const std::vector<int>& m1,
                      const std::vector<int>& m2)
{
    for (const auto& [u, v] : x.edges()) {
        if (!y.has_edge(m1[u], m2[v])) return false;
        if (!y.has_edge(m1[v], m2[u])) return false;
    }
    return true;
}

bool is_hom_vec(const Graph& x, const Graph& y, const std::vector<int>& m)
{
    for (const auto& [u, v] : x.edges())
        if (!y.has_edge(m[u], m[v])) return false;
    return true;
}

}  // namespace

GraphMap HomotopyK::as_product_map() const
{
    const int r = height();
    Graph prod = categorical_product(x, looped_interval(std::max(r, 1)));
    if (r == 0) {
        // Height 0 still materializes over I_1 with both levels equal.
        std::vector<int> a(prod.vertex_count());
        for (int v = 0; v < x.vertex_count(); ++v)
            for (int i = 0; i <= 1; ++i) a[v * 2 + i] = levels[0][v];
        return {prod, y, a};
    }
    std::vector<int> a(prod.vertex_count());
    for (int v = 0; v < x.vertex_count(); ++v)
        for (int i = 0; i <= r; ++i) a[v * (r + 1) + i] = levels[i][v];
    return {prod, y, a};
}

bool HomotopyK::valid() const
{
    if (levels.empty()) return false;
    for (const auto& lvl : levels)
        if (!is_hom_vec(x, y, lvl)) return false;
    for (std::size_t i = 0; i + 1 < levels.size(); ++i)
        if (!cross_compatible(x, y, levels[i], levels[i + 1])) return false;
    return true;
}

HomotopyK HomotopyK::constant(const GraphMap& m, int r)
{
    HomotopyK k;
    k.x = m.domain;
    k.y = m.codomain;
    k.levels.assign(r + 1, m.assignment);
    return k;
}

HomotopyK HomotopyK::from_level_maps(const Graph& x, const Graph& y,
                                     std::vector<std::vector<int>> lvls)
{
    HomotopyK k;
    k.x = x;
    k.y = y;
    k.levels = std::move(lvls);
    if (!k.valid()) throw InputError("level maps do not assemble into a x-homotopy");
    return k;
}

HomotopyK HomotopyK::extended(int new_r) const
{
    if (new_r < height()) throw InputError("cannot shorten a homotopy by extension");
    HomotopyK k = *this;
    while (k.height() < new_r) k.levels.push_back(k.levels.back());
    return k;
}

XHomotopyResult x_homotopic(const GraphMap& p, const GraphMap& q, const XHomotopyOptions& opts)
{
    if (!p.domain.same_structure(q.domain) || !p.codomain.same_structure(q.codomain))
        throw InputError("x_homotopic: maps must share domain and codomain");
    if (!is_homomorphism(p) || !is_homomorphism(q))
        throw InputError("x_homotopic: both maps must be homomorphisms");

    const Graph& x = p.domain;
    const Graph& y = p.codomain;
    XHomotopyResult out;

    if (p.assignment == q.assignment) {
        out.homotopy = HomotopyK::from_level_maps(x, y, {p.assignment});
        return out;
    }

    std::map<std::vector<int>, std::vector<int>> parent;  // map -> predecessor
    parent.emplace(p.assignment, std::vector<int>{});
    std::vector<std::vector<int>> frontier{p.assignment};
    long long visited = 1;

    auto reconstruct = [&](std::vector<int> tail) {
        std::vector<std::vector<int>> lvls{tail};
        while (true) {
            const auto& prev = parent.at(lvls.back());
            if (prev.empty()) break;
            lvls.push_back(prev);
        }
        std::reverse(lvls.begin(), lvls.end());
        out.homotopy = HomotopyK::from_level_maps(x, y, std::move(lvls));
    };

    for (int depth = 1; opts.exhaustive || depth <= opts.budget; ++depth) {
        std::vector<std::vector<int>> next;
        for (const auto& cur : frontier) {
            // Allowed images per vertex: adjacent to every image of a
            // neighbour under the current map.
            std::vector<Bits> allowed(x.vertex_count());
            for (int v = 0; v < x.vertex_count(); ++v) {
                Bits all(y.vertex_count());
                for (int i = 0; i < y.vertex_count(); ++i) all.set(i);
                for (int u : x.neighbours(v)) all &= y.neighbourhood(cur[u]);
                allowed[v] = all;
            }
            std::vector<int> cand(x.vertex_count(), -1);
            // Backtracking over the product of allowed sets, keeping the
            // homomorphism condition on the partial map.
            std::vector<int> order(x.vertex_count());
            for (int v = 0; v < x.vertex_count(); ++v) order[v] = v;
            bool aborted = false;

            std::function<void(int)> rec = [&](int idx) {
                if (aborted) return;
                if (idx == x.vertex_count()) {
                    if (!parent.count(cand)) {
                        parent.emplace(cand, cur);
                        next.push_back(cand);
                        ++visited;
                        if (visited > opts.node_cap) aborted = true;
                    }
                    return;
                }
                int v = order[idx];
                for (int w = allowed[v].next(0); w >= 0; w = allowed[v].next(w + 1)) {
                    bool ok = true;
                    for (int u : x.neighbours(v)) {
                        if (u == v) {
                            if (!y.has_edge(w, w)) ok = false;
                        } else if (cand[u] >= 0 && !y.has_edge(cand[u], w)) {
                            ok = false;
                        }
                        if (!ok) break;
                    }
                    if (!ok) continue;
                    cand[v] = w;
                    rec(idx + 1);
                    cand[v] = -1;
                    if (aborted) return;
                }
            };
            rec(0);
            if (aborted) {
                out.budget_hit = true;
                return out;
            }
        }
        for (const auto& m : next) {
            if (m == q.assignment) {
                reconstruct(m);
                return out;
            }
        }
        if (next.empty()) {
            if (opts.exhaustive) out.certified_absent = true;
            return out;
        }
        frontier = std::move(next);
    }
    out.budget_hit = true;
    return out;
}

namespace {

// Assigns value `val` to class `cls`, failing when two members disagree.
void assign_class(std::vector<int>& out, int cls, int val, const char* what)
{
    if (out[cls] == -1) {
        out[cls] = val;
    } else if (out[cls] != val) {
        throw InputError(std::string("incompatible data: two members of a cylinder class "
                                     "map to different vertices (") +
                         what + ")");
    }
}

}  // namespace

GraphMap universal_alpha(const Cylinder& cyl, const GraphMap& k1, const GraphMap& k2,
                         const HomotopyK& k)
{
    const CylinderSpec& spec = cyl.spec();
    if (!k1.domain.same_structure(spec.b) || !k2.domain.same_structure(spec.c))
        throw InputError("universal_alpha: k1, k2 must start at B, C");
    if (!k1.codomain.same_structure(k2.codomain))
        throw InputError("universal_alpha: k1, k2 must share the target");
    if (!is_homomorphism(k1) || !is_homomorphism(k2))
        throw InputError("universal_alpha: k1, k2 must be homomorphisms");
    if (!k.x.same_structure(spec.a) || !k.y.same_structure(k1.codomain))
        throw InputError("universal_alpha: K must run A x I_n -> G");
    if (k.height() != cyl.height())
        throw InputError("universal_alpha: K must have the cylinder's height");
    if (!k.valid()) throw InputError("universal_alpha: K is not a x-homotopy");
    for (int av = 0; av < spec.a.vertex_count(); ++av) {
        if (k.at(av, 0) != k2(spec.g(av)))
            throw InputError("universal_alpha: level 0 of K differs from k2 . g");
        if (k.at(av, cyl.height()) != k1(spec.f(av)))
            throw InputError("universal_alpha: level n of K differs from k1 . f");
    }

    const Graph& d = cyl.quotient();
    std::vector<int> alpha(d.vertex_count(), -1);
    for (int bv = 0; bv < spec.b.vertex_count(); ++bv)
        assign_class(alpha, cyl.b_class(bv), k1(bv), "B");
    for (int cv = 0; cv < spec.c.vertex_count(); ++cv)
        assign_class(alpha, cyl.c_class(cv), k2(cv), "C");
    for (int av = 0; av < spec.a.vertex_count(); ++av)
        for (int lvl = 0; lvl <= cyl.height(); ++lvl)
            assign_class(alpha, cyl.level_class(av, lvl), k.at(av, lvl), "AxI");

    GraphMap m(d, k1.codomain, alpha);
    if (!is_homomorphism(m))
        throw PropertyViolation("universal_alpha produced a non-homomorphism");
    return m;
}

GraphMap shrink_map(const Cylinder& tall, int m, int k)
{
    if (m < 0 || k < 0) throw InputError("shrink_map: m, k must be >= 0");
    const int n = tall.height() - m - k;
    if (n < 1) throw InputError("shrink_map: target height would drop below 1");
    Cylinder target = Cylinder::build(tall.spec().with_height(n));

    const CylinderSpec& spec = tall.spec();
    std::vector<int> out(tall.quotient().vertex_count(), -1);
    for (int bv = 0; bv < spec.b.vertex_count(); ++bv)
        assign_class(out, tall.b_class(bv), target.b_class(bv), "B");
    for (int cv = 0; cv < spec.c.vertex_count(); ++cv)
        assign_class(out, tall.c_class(cv), target.c_class(cv), "C");
    for (int av = 0; av < spec.a.vertex_count(); ++av) {
        for (int s = 0; s <= tall.height(); ++s) {
            int lvl = s <= k ? 0 : (s <= k + n ? s - k : n);
            assign_class(out, tall.level_class(av, s), target.level_class(av, lvl), "AxI");
        }
    }
    GraphMap res(tall.quotient(), target.quotient(), out);
    if (!is_homomorphism(res)) throw PropertyViolation("shrink_map produced a non-homomorphism");
    return res;
}

GraphMap map_F(const Cylinder& cyl, const Cylinder& cyl2, const GraphMap& ha, const GraphMap& hb,
               const GraphMap& hc)
{
    if (cyl.height() != cyl2.height()) throw InputError("map_F: cylinders must share the height");
    const CylinderSpec& s = cyl.spec();
    const CylinderSpec& s2 = cyl2.spec();
    if (!ha.domain.same_structure(s.a) || !ha.codomain.same_structure(s2.a) ||
        !hb.domain.same_structure(s.b) || !hb.codomain.same_structure(s2.b) ||
        !hc.domain.same_structure(s.c) || !hc.codomain.same_structure(s2.c))
        throw InputError("map_F: hA, hB, hC must map A->A', B->B', C->C'");
    if (!is_homomorphism(ha) || !is_homomorphism(hb) || !is_homomorphism(hc))
        throw InputError("map_F: hA, hB, hC must be homomorphisms");
    for (int av = 0; av < s.a.vertex_count(); ++av) {
        if (cyl2.b_class(s2.f(ha(av))) != cyl2.b_class(hb(s.f(av))))
            throw InputError("map_F: f'hA and hB f disagree on a glued class");
        if (cyl2.c_class(s2.g(ha(av))) != cyl2.c_class(hc(s.g(av))))
            throw InputError("map_F: g'hA and hC g disagree on a glued class");
    }

    std::vector<int> out(cyl.quotient().vertex_count(), -1);
    for (int bv = 0; bv < s.b.vertex_count(); ++bv)
        assign_class(out, cyl.b_class(bv), cyl2.b_class(hb(bv)), "B");
    for (int cv = 0; cv < s.c.vertex_count(); ++cv)
        assign_class(out, cyl.c_class(cv), cyl2.c_class(hc(cv)), "C");
    for (int av = 0; av < s.a.vertex_count(); ++av)
        for (int lvl = 0; lvl <= cyl.height(); ++lvl)
            assign_class(out, cyl.level_class(av, lvl), cyl2.level_class(ha(av), lvl), "AxI");

    GraphMap res(cyl.quotient(), cyl2.quotient(), out);
    if (!is_homomorphism(res)) throw PropertyViolation("map_F produced a non-homomorphism");
    return res;
}

GraphMap map_Fprime(const Cylinder& tall_prime, const Cylinder& target, const GraphMap& ha_p,
                    const GraphMap& hb_p, const GraphMap& hc_p, const HomotopyK& hb,
                    const HomotopyK& hc, int l)
{
    const CylinderSpec& sp = tall_prime.spec();  // primed data
    const CylinderSpec& st = target.spec();
    const int n = target.height();
    if (tall_prime.height() != n + 2 * l)
        throw InputError("map_Fprime: the primed cylinder must have height n + 2l");
    if (!ha_p.domain.same_structure(sp.a) || !ha_p.codomain.same_structure(st.a) ||
        !hb_p.domain.same_structure(sp.b) || !hb_p.codomain.same_structure(st.b) ||
        !hc_p.domain.same_structure(sp.c) || !hc_p.codomain.same_structure(st.c))
        throw InputError("map_Fprime: hA', hB', hC' must map A'->A, B'->B, C'->C");
    if (!is_homomorphism(ha_p) || !is_homomorphism(hb_p) || !is_homomorphism(hc_p))
        throw InputError("map_Fprime: hA', hB', hC' must be homomorphisms");
    if (hb.height() != l || hc.height() != l)
        throw InputError("map_Fprime: HB and HC must both have height l");
    if (!hb.valid() || !hc.valid()) throw InputError("map_Fprime: HB or HC is not a x-homotopy");
    if (!hb.x.same_structure(sp.a) || !hb.y.same_structure(st.b) ||
        !hc.x.same_structure(sp.a) || !hc.y.same_structure(st.c))
        throw InputError("map_Fprime: HB must run A' x I_l -> B, HC must run A' x I_l -> C");
    for (int av = 0; av < sp.a.vertex_count(); ++av) {
        if (hb.at(av, 0) != st.f(ha_p(av)))
            throw InputError("map_Fprime: HB level 0 differs from f . hA'");
        if (hb.at(av, l) != hb_p(sp.f(av)))
            throw InputError("map_Fprime: HB level l differs from hB' . f'");
        if (hc.at(av, 0) != hc_p(sp.g(av)))
            throw InputError("map_Fprime: HC level 0 differs from hC' . g'");
        if (hc.at(av, l) != st.g(ha_p(av)))
            throw InputError("map_Fprime: HC level l differs from g . hA'");
    }

    std::vector<int> out(tall_prime.quotient().vertex_count(), -1);
    for (int bv = 0; bv < sp.b.vertex_count(); ++bv)
        assign_class(out, tall_prime.b_class(bv), target.b_class(hb_p(bv)), "B'");
    for (int cv = 0; cv < sp.c.vertex_count(); ++cv)
        assign_class(out, tall_prime.c_class(cv), target.c_class(hc_p(cv)), "C'");
    for (int av = 0; av < sp.a.vertex_count(); ++av) {
        for (int s = 0; s <= tall_prime.height(); ++s) {
            int val;
            if (s <= l) {
                val = target.c_class(hc.at(av, s));
            } else if (s <= l + n) {
                val = target.level_class(ha_p(av), s - l);
            } else {
                val = target.b_class(hb.at(av, s - n - l));
            }
            assign_class(out, tall_prime.level_class(av, s), val, "A'xI");
        }
    }
    GraphMap res(tall_prime.quotient(), target.quotient(), out);
    if (!is_homomorphism(res)) throw PropertyViolation("map_Fprime produced a non-homomorphism");
    return res;
}

}  // namespace homcyl
