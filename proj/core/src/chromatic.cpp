#include "homcyl/chromatic.hpp"

#include <algorithm>

#include "homcyl/errors.hpp"

namespace homcyl {

bool Colouring::verify() const
{
    if (static_cast<int>(assignment.size()) != graph.vertex_count()) return false;
    for (int c : assignment)
        if (c < 0 || c >= colour_count) return false;
    for (const auto& [u, v] : graph.edges())
        if (assignment[u] == assignment[v]) return false;
    return true;
}

GraphMap Colouring::as_map() const
{
    return {graph, Graph::complete(colour_count), assignment};
}

namespace {

struct ColourSearch {
    const Graph& g;
    int k_limit;                 // colours allowed
    std::vector<int> colour;
    std::vector<int> best;       // best complete colouring found
    int best_used;               // colours in `best`, or k_limit+1
    bool decision_mode;          // stop at first success with <= k_limit

    explicit ColourSearch(const Graph& graph, int k, bool decision)
        : g(graph), k_limit(k), colour(graph.vertex_count(), -1),
          best_used(k + 1), decision_mode(decision)
    {
    }

    int pick_vertex() const
    {
        // DSATUR: highest saturation, then highest degree, then index.
        int best_v = -1, best_sat = -1, best_deg = -1;
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (colour[v] >= 0) continue;
            std::vector<char> seen(k_limit, 0);
            int sat = 0;
            for (int u : g.neighbours(v))
                if (colour[u] >= 0 && !seen[colour[u]]) {
                    seen[colour[u]] = 1;
                    ++sat;
                }
            int deg = g.degree(v);
            if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                best_v = v;
                best_sat = sat;
                best_deg = deg;
            }
        }
        return best_v;
    }

    // Returns true when the search can stop (decision mode success).
    bool run(int coloured, int used)
    {
        if (used >= best_used) return false;  // bound
        if (coloured == g.vertex_count()) {
            best = colour;
            best_used = used;
            return decision_mode && used <= k_limit;
        }
        int v = pick_vertex();
        std::vector<char> forbidden(k_limit, 0);
        for (int u : g.neighbours(v))
            if (colour[u] >= 0) forbidden[colour[u]] = 1;
        // Existing colours first, then one fresh colour (symmetry break).
        int cap = std::min(used + 1, std::min(k_limit, best_used - 1));
        for (int c = 0; c < cap; ++c) {
            if (forbidden[c]) continue;
            colour[v] = c;
            if (run(coloured + 1, std::max(used, c + 1))) return true;
            colour[v] = -1;
        }
        return false;
    }
};

std::vector<int> greedy_clique(const Graph& g)
{
    // Seed with a maximal clique grown from high-degree vertices.
    std::vector<int> order(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) order[v] = v;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return g.degree(a) > g.degree(b); });
    std::vector<int> clique;
    for (int v : order) {
        bool ok = true;
        for (int u : clique)
            if (!g.has_edge(u, v)) {
                ok = false;
                break;
            }
        if (ok) clique.push_back(v);
    }
    return clique;
}

}  // namespace

std::optional<Colouring> is_k_colourable(const Graph& g, int k)
{
    if (g.has_any_loop()) throw InputError("colouring a graph with loops");
    if (k < 0) throw InputError("negative colour count");
    if (g.vertex_count() == 0) return Colouring{g, k, {}};
    if (k == 0) return std::nullopt;
    ColourSearch search(g, k, /*decision=*/true);
    search.run(0, 0);
    if (search.best_used <= k) {
        Colouring c{g, k, search.best};
        if (!c.verify()) throw PropertyViolation("colouring witness failed verification");
        return c;
    }
    return std::nullopt;
}

std::pair<int, Colouring> chromatic_number(const Graph& g)
{
    if (g.has_any_loop()) throw InputError("chromatic number of a graph with loops");
    if (g.vertex_count() == 0) return {0, Colouring{g, 0, {}}};

    auto clique = greedy_clique(g);
    const int lower = static_cast<int>(clique.size());
    // Clique seeding: a clique takes distinct colours in every proper
    // colouring, so pinning colours 0..|Q|-1 on it loses no solutions.
    ColourSearch search(g, g.vertex_count(), /*decision=*/false);
    for (int i = 0; i < lower; ++i) search.colour[clique[i]] = i;
    search.run(lower, lower);
    int chi = search.best_used;
    if (chi < lower) throw PropertyViolation("branch and bound beat the clique bound");
    Colouring witness{g, chi, search.best};
    if (!witness.verify()) throw PropertyViolation("chromatic witness failed verification");
    return {chi, witness};
}

Colouring cylinder_colouring(const Cylinder& cyl, const Pushout& po, const Colouring& c)
{
    if (!po.simple) throw InputError("cylinder_colouring needs a simple pushout");
    if (!c.graph.same_structure(po.graph) || !c.verify())
        throw InputError("cylinder_colouring needs a verified colouring of the pushout");

    const CylinderSpec& spec = cyl.spec();
    const Graph& d = cyl.quotient();
    std::vector<int> out(d.vertex_count(), -1);
    auto put = [&](int cls, int val) {
        if (out[cls] == -1)
            out[cls] = val;
        else if (out[cls] != val)
            throw PropertyViolation("colouring lift disagreed on a class");
    };
    for (int bv = 0; bv < spec.b.vertex_count(); ++bv)
        put(cyl.b_class(bv), c.assignment[po.from_b(bv)]);
    for (int cv = 0; cv < spec.c.vertex_count(); ++cv)
        put(cyl.c_class(cv), c.assignment[po.from_c(cv)]);
    // Interior levels wear the pulled-back colouring of A: f(a) and g(a)
    // share a pushout class, so the pullback is well defined.
    for (int av = 0; av < spec.a.vertex_count(); ++av) {
        int shade = c.assignment[po.from_b(spec.f(av))];
        for (int lvl = 1; lvl < cyl.height(); ++lvl) put(cyl.level_class(av, lvl), shade);
    }
    Colouring lifted{d, c.colour_count, out};
    if (!lifted.verify()) throw PropertyViolation("lifted cylinder colouring is not proper");
    return lifted;
}

BoundReport lovasz_bound(const Graph& g, const BoundOptions& opts)
{
    if (!g.connected()) throw InputError("lovasz_bound needs a connected graph");
    if (g.has_any_loop()) throw InputError("lovasz_bound needs a loopless graph");

    BoundReport rep;
    rep.graph_name = g.name();
    rep.nbhd_report = connectivity_report(neighbourhood_complex(g), opts.conn);
    rep.lovasz_lower = rep.nbhd_report.certified_conn + 3;

    rep.trace = reduce_pipeline(g, opts.pipeline_height);
    const ReductionTrace& trace = *rep.trace;
    if (trace.input_bipartite) {
        rep.pipeline_applicable = false;
        rep.pipeline_lower = 2;  // bipartite: chi = 2 certified directly
    } else if (trace.kind == TerminalKind::bipartite) {
        rep.pipeline_applicable = true;
        rep.pipeline_lower = 3;  // chi = 3 certified by the bipartite terminal
    } else if (!trace.stages.empty()) {
        rep.pipeline_applicable = true;
        rep.pipeline_report =
            connectivity_report(neighbourhood_complex(*trace.last_a()), opts.conn);
        rep.pipeline_lower = rep.pipeline_report->certified_conn + 3;
    } else {
        rep.pipeline_applicable = false;
        rep.pipeline_lower = rep.lovasz_lower;  // nothing removed, no new data
    }
    rep.best_lower = std::max(rep.lovasz_lower, rep.pipeline_lower);

    if (g.vertex_count() <= opts.chi_vertex_budget) {
        auto [chi, witness] = chromatic_number(g);
        rep.chi_exact = chi;
        rep.witness = witness;
    }
    return rep;
}

}  // namespace homcyl
