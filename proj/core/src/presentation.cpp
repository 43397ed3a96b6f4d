#include "homcyl/presentation.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>

#include "homcyl/errors.hpp"

namespace homcyl {

std::string Presentation::to_string() const
{
    std::ostringstream out;
    out << "<" << generator_count << " generators | " << relators.size() << " relators>";
    return out.str();
}

Presentation pi1_presentation(const SimplicialComplex& k, int base)
{
    auto verts = k.support();
    if (verts.empty()) throw InputError("pi1 of the empty complex");
    if (k.component_count() != 1) throw InputError("pi1 needs a path-connected complex");

    // 1-skeleton restricted to the support.
    std::set<std::pair<int, int>> edge_set;
    std::set<std::vector<int>> triangles;
    for (const auto& f : k.facets()) {
        for (std::size_t i = 0; i < f.size(); ++i)
            for (std::size_t j = i + 1; j < f.size(); ++j) {
                edge_set.insert({f[i], f[j]});
                for (std::size_t l = j + 1; l < f.size(); ++l)
                    triangles.insert({f[i], f[j], f[l]});
            }
    }

    if (base < 0) base = verts.front();
    std::map<int, std::vector<int>> adj;
    for (const auto& [u, v] : edge_set) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }

    // BFS spanning tree.
    std::set<std::pair<int, int>> tree;
    std::map<int, int> seen;
    std::queue<int> q;
    q.push(base);
    seen[base] = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : adj[u]) {
            if (seen.count(v)) continue;
            seen[v] = 1;
            tree.insert({std::min(u, v), std::max(u, v)});
            q.push(v);
        }
    }

    // Generators: non-tree edges, numbered in set order.
    std::map<std::pair<int, int>, int> gen_of;
    int ngen = 0;
    for (const auto& e : edge_set)
        if (!tree.count(e)) gen_of[e] = ++ngen;

    auto letter = [&](int u, int v) -> int {
        auto e = std::make_pair(std::min(u, v), std::max(u, v));
        auto it = gen_of.find(e);
        if (it == gen_of.end()) return 0;           // tree edge
        return u < v ? it->second : -it->second;    // orientation low -> high
    };

    Presentation p;
    p.generator_count = ngen;
    for (const auto& t : triangles) {
        std::vector<int> word;
        int w1 = letter(t[0], t[1]), w2 = letter(t[1], t[2]), w3 = letter(t[2], t[0]);
        for (int w : {w1, w2, w3})
            if (w != 0) word.push_back(w);
        if (!word.empty()) p.relators.push_back(std::move(word));
    }
    return p;
}

namespace {

void free_reduce(std::vector<int>& w)
{
    std::vector<int> out;
    for (int letter : w) {
        if (!out.empty() && out.back() == -letter)
            out.pop_back();
        else
            out.push_back(letter);
    }
    w = std::move(out);
}

void cyclic_reduce(std::vector<int>& w)
{
    free_reduce(w);
    while (w.size() >= 2 && w.front() == -w.back()) {
        w.erase(w.begin());
        w.pop_back();
        free_reduce(w);
    }
}

std::vector<int> invert(const std::vector<int>& w)
{
    std::vector<int> out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
    return out;
}

// Canonical cyclic form: least rotation of the word or its inverse.
std::vector<int> cyclic_canon(const std::vector<int>& w)
{
    if (w.empty()) return w;
    std::vector<int> best;
    for (const auto& base : {w, invert(w)}) {
        for (std::size_t r = 0; r < base.size(); ++r) {
            std::vector<int> rot(base.begin() + r, base.end());
            rot.insert(rot.end(), base.begin(), base.begin() + r);
            if (best.empty() || rot < best) best = rot;
        }
    }
    return best;
}

}  // namespace

Presentation tietze_simplify(Presentation p, long long budget)
{
    long long work = 0;
    bool changed = true;
    while (changed && work < budget) {
        changed = false;

        // Normalize relators.
        std::set<std::vector<int>> canon;
        std::vector<std::vector<int>> rels;
        for (auto& r : p.relators) {
            cyclic_reduce(r);
            if (r.empty()) continue;
            auto c = cyclic_canon(r);
            if (canon.insert(c).second) rels.push_back(r);
            work += static_cast<long long>(r.size());
        }
        if (rels.size() != p.relators.size()) changed = true;
        p.relators = std::move(rels);

        // Find a generator occurring exactly once in some relator, prefer
        // the shortest such relator to keep substitutions small.
        int best_rel = -1, best_gen = 0;
        for (std::size_t ri = 0; ri < p.relators.size(); ++ri) {
            const auto& r = p.relators[ri];
            if (best_rel >= 0 && r.size() >= p.relators[best_rel].size()) continue;
            std::map<int, int> occ;
            for (int letter : r) occ[std::abs(letter)] += 1;
            for (const auto& [g, cnt] : occ)
                if (cnt == 1) {
                    best_rel = static_cast<int>(ri);
                    best_gen = g;
                    break;
                }
        }
        if (best_rel >= 0) {
            // Solve r = u g^e v = 1 for g: g^e = u^-1 v^-1, g = (v u)^-(e).
            std::vector<int> r = p.relators[best_rel];
            std::size_t pos = 0;
            while (std::abs(r[pos]) != best_gen) ++pos;
            int e = r[pos] > 0 ? 1 : -1;
            std::vector<int> u(r.begin(), r.begin() + pos);
            std::vector<int> v(r.begin() + pos + 1, r.end());
            // g = u^-1 (vu)^0 ... : from u g^e v = 1: g^e = u^-1 v^-1, so
            // g = (u^-1 v^-1)^e.
            std::vector<int> rhs = invert(u);
            auto vinv = invert(v);
            rhs.insert(rhs.end(), vinv.begin(), vinv.end());
            std::vector<int> g_word = (e == 1) ? rhs : invert(rhs);

            p.relators.erase(p.relators.begin() + best_rel);
            for (auto& rel : p.relators) {
                std::vector<int> out;
                for (int letter : rel) {
                    if (std::abs(letter) == best_gen) {
                        const auto& sub = (letter > 0) ? g_word : invert(g_word);
                        out.insert(out.end(), sub.begin(), sub.end());
                    } else {
                        out.push_back(letter);
                    }
                    work += 1;
                }
                rel = std::move(out);
                free_reduce(rel);
            }
            // Renumber: drop best_gen.
            for (auto& rel : p.relators)
                for (int& letter : rel) {
                    int g = std::abs(letter);
                    if (g > best_gen) letter = letter > 0 ? letter - 1 : letter + 1;
                }
            p.generator_count -= 1;
            changed = true;
            continue;
        }

        // Drop generators that appear in no relator only when the group is
        // otherwise dead: a generator with no occurrences is a free factor,
        // so it stays (the group is not trivial). Nothing to do here.
    }
    return p;
}

}  // namespace homcyl
