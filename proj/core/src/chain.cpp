#include "homcyl/chain.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <unordered_map>

#include "homcyl/errors.hpp"

namespace homcyl {

void write_triplets(std::ostream& out, const SparseIntMatrix& m)
{
    out << m.rows << " " << m.cols << "\n";
    for (const auto& e : m.entries) out << e.row << " " << e.col << " " << e.value << "\n";
}

bool ChainComplex::verify_dd_zero() const
{
    for (std::size_t k = 1; k + 1 < boundary.size(); ++k) {
        // Compose boundary[k] * boundary[k+1] sparsely.
        std::vector<std::vector<std::pair<int, long long>>> cols_k(dims[k]);
        for (const auto& e : boundary[k].entries) cols_k[e.col].emplace_back(e.row, e.value);
        std::vector<std::vector<std::pair<int, long long>>> cols_k1(dims[k + 1]);
        for (const auto& e : boundary[k + 1].entries) cols_k1[e.col].emplace_back(e.row, e.value);
        for (int j = 0; j < dims[k + 1]; ++j) {
            std::map<int, long long> acc;
            for (const auto& [mid, v1] : cols_k1[j])
                for (const auto& [row, v2] : cols_k[mid]) acc[row] += v1 * v2;
            for (const auto& [row, v] : acc)
                if (v != 0) return false;
        }
    }
    return true;
}

namespace {

struct VecHash {
    std::size_t operator()(const std::vector<int>& v) const
    {
        std::size_t h = 1469598103934665603ull;
        for (int x : v) {
            h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

}  // namespace

ChainComplex chain_complex(const SimplicialComplex& k)
{
    ChainComplex c;
    if (k.empty()) return c;
    auto faces = k.all_simplices();

    int top = 0;
    for (const auto& f : faces) top = std::max(top, static_cast<int>(f.size()) - 1);
    std::vector<std::vector<std::vector<int>>> by_dim(top + 1);
    for (auto& f : faces) by_dim[f.size() - 1].push_back(std::move(f));
    for (auto& bucket : by_dim) std::sort(bucket.begin(), bucket.end());

    c.dims.resize(top + 1);
    for (int d = 0; d <= top; ++d) c.dims[d] = static_cast<int>(by_dim[d].size());

    c.boundary.resize(top + 1);
    std::unordered_map<std::vector<int>, int, VecHash> index_below;
    for (int d = 1; d <= top; ++d) {
        index_below.clear();
        index_below.reserve(by_dim[d - 1].size());
        for (std::size_t i = 0; i < by_dim[d - 1].size(); ++i)
            index_below.emplace(by_dim[d - 1][i], static_cast<int>(i));

        SparseIntMatrix& m = c.boundary[d];
        m.rows = c.dims[d - 1];
        m.cols = c.dims[d];
        for (std::size_t j = 0; j < by_dim[d].size(); ++j) {
            const auto& simplex = by_dim[d][j];
            long long sign = 1;
            std::vector<int> face;
            face.reserve(simplex.size() - 1);
            for (std::size_t drop = 0; drop < simplex.size(); ++drop) {
                face.clear();
                for (std::size_t t = 0; t < simplex.size(); ++t)
                    if (t != drop) face.push_back(simplex[t]);
                m.entries.push_back({index_below.at(face), static_cast<int>(j), sign});
                sign = -sign;
            }
        }
    }
    return c;
}

namespace {

/**
 * Sparse elimination working state. Column-major storage with a parallel
 * row occupancy index; unit (+-1) pivots are eliminated without changing
 * the Smith type, the remaining core goes through the dense algorithm.
 */
class SmithWorker {
  public:
    explicit SmithWorker(const SparseIntMatrix& m) : rows_(m.rows), cols_(m.cols)
    {
        col_.assign(cols_, {});
        row_cols_.assign(rows_, {});
        std::map<std::pair<int, int>, Int> acc;
        for (const auto& e : m.entries) {
            if (e.value == 0) continue;
            acc[{e.col, e.row}] += e.value;
        }
        for (const auto& [pos, v] : acc) {
            if (v == 0) continue;
            col_[pos.first][pos.second] = v;
            row_cols_[pos.second].insert(pos.first);
        }
    }

    SmithResult run()
    {
        eliminate_units();
        auto core_factors = dense_core();
        SmithResult res;
        res.rank = unit_count_ + static_cast<int>(core_factors.size());
        res.invariant_factors.assign(unit_count_, Int(1));
        res.invariant_factors.insert(res.invariant_factors.end(), core_factors.begin(),
                                     core_factors.end());
        return res;
    }

  private:
    int rows_, cols_;
    int unit_count_ = 0;
    std::vector<std::map<int, Int>> col_;   // col -> (row -> value)
    std::vector<std::set<int>> row_cols_;   // row -> columns with a nonzero
    std::vector<int> unit_in_col_;          // count of +-1 entries per column
    std::set<std::pair<std::size_t, int>> unit_queue_;  // (col nnz, col), cols with a unit

    void queue_erase(int c)
    {
        if (c < static_cast<int>(unit_in_col_.size()) && unit_in_col_[c] > 0)
            unit_queue_.erase({col_[c].size(), c});
    }

    void queue_insert(int c)
    {
        if (unit_in_col_[c] > 0) unit_queue_.insert({col_[c].size(), c});
    }

    static bool is_unit(const Int& v) { return v == 1 || v == -1; }

    void drop_entry(int r, int c)
    {
        auto it = col_[c].find(r);
        if (it == col_[c].end()) return;
        queue_erase(c);
        if (is_unit(it->second)) --unit_in_col_[c];
        col_[c].erase(it);
        row_cols_[r].erase(c);
        queue_insert(c);
    }

    void set_entry(int r, int c, const Int& v)
    {
        if (v == 0) {
            drop_entry(r, c);
            return;
        }
        queue_erase(c);
        auto it = col_[c].find(r);
        if (it != col_[c].end()) {
            if (is_unit(it->second)) --unit_in_col_[c];
            it->second = v;
        } else {
            col_[c][r] = v;
            row_cols_[r].insert(c);
        }
        if (is_unit(v)) ++unit_in_col_[c];
        queue_insert(c);
    }

    void init_queue()
    {
        unit_in_col_.assign(cols_, 0);
        for (int c = 0; c < cols_; ++c)
            for (const auto& [r, v] : col_[c])
                if (is_unit(v)) ++unit_in_col_[c];
        for (int c = 0; c < cols_; ++c) queue_insert(c);
    }

    // Picks the sparsest column holding a +-1, then within it the unit
    // entry with the lightest row.
    bool find_unit_pivot(int& pr, int& pc)
    {
        if (unit_queue_.empty()) return false;
        pc = unit_queue_.begin()->second;
        std::size_t best_row_load = 0;
        pr = -1;
        for (const auto& [r, v] : col_[pc]) {
            if (!is_unit(v)) continue;
            if (pr < 0 || row_cols_[r].size() < best_row_load) {
                pr = r;
                best_row_load = row_cols_[r].size();
            }
        }
        return pr >= 0;
    }

    void eliminate_units()
    {
        init_queue();
        int pr, pc;
        while (find_unit_pivot(pr, pc)) {
            Int pivot = col_[pc][pr];
            // Clear the pivot row with column operations.
            std::vector<int> row_cols(row_cols_[pr].begin(), row_cols_[pr].end());
            for (int c : row_cols) {
                if (c == pc) continue;
                Int factor = col_[c][pr] / pivot;  // pivot is +-1
                // col_c -= factor * col_pc
                for (const auto& [r, v] : col_[pc]) {
                    Int cur = 0;
                    auto it = col_[c].find(r);
                    if (it != col_[c].end()) cur = it->second;
                    set_entry(r, c, cur - factor * v);
                }
            }
            // The pivot column is the only one meeting the pivot row now;
            // clearing the column with row operations touches nothing else.
            std::vector<int> col_rows;
            for (const auto& [r, v] : col_[pc]) col_rows.push_back(r);
            for (int r : col_rows) drop_entry(r, pc);
            ++unit_count_;
        }
    }

    // Dense Smith normal form on whatever is left (usually tiny).
    std::vector<Int> dense_core()
    {
        // Collect surviving rows/columns.
        std::vector<int> live_rows, live_cols;
        for (int r = 0; r < rows_; ++r)
            if (!row_cols_[r].empty()) live_rows.push_back(r);
        for (int c = 0; c < cols_; ++c)
            if (!col_[c].empty()) live_cols.push_back(c);
        const int nr = static_cast<int>(live_rows.size());
        const int nc = static_cast<int>(live_cols.size());
        if (nr == 0 || nc == 0) return {};

        std::vector<std::vector<Int>> a(nr, std::vector<Int>(nc, 0));
        std::unordered_map<int, int> row_idx;
        for (int i = 0; i < nr; ++i) row_idx[live_rows[i]] = i;
        for (int j = 0; j < nc; ++j)
            for (const auto& [r, v] : col_[live_cols[j]]) a[row_idx[r]][j] = v;

        std::vector<Int> factors;
        int t = 0;
        while (t < nr && t < nc) {
            // Find the smallest nonzero entry in the trailing block.
            int br = -1, bc = -1;
            for (int i = t; i < nr; ++i)
                for (int j = t; j < nc; ++j)
                    if (a[i][j] != 0 &&
                        (br < 0 || abs(a[i][j]) < abs(a[br][bc]))) {
                        br = i;
                        bc = j;
                    }
            if (br < 0) break;
            std::swap(a[t], a[br]);
            for (int i = 0; i < nr; ++i) std::swap(a[i][t], a[i][bc]);

            bool clean = true;
            for (int i = t + 1; i < nr; ++i) {
                if (a[i][t] == 0) continue;
                Int q = a[i][t] / a[t][t];
                if (q != 0)
                    for (int j = t; j < nc; ++j) a[i][j] -= q * a[t][j];
                if (a[i][t] != 0) clean = false;
            }
            for (int j = t + 1; j < nc; ++j) {
                if (a[t][j] == 0) continue;
                Int q = a[t][j] / a[t][t];
                if (q != 0)
                    for (int i = t; i < nr; ++i) a[i][j] -= q * a[i][t];
                if (a[t][j] != 0) clean = false;
            }
            if (!clean) continue;  // smaller remainders appeared, repeat pivot hunt

            // Divisibility: fold in any entry the pivot does not divide.
            bool redo = false;
            for (int i = t + 1; i < nr && !redo; ++i)
                for (int j = t + 1; j < nc && !redo; ++j)
                    if (a[i][j] % a[t][t] != 0) {
                        for (int jj = t; jj < nc; ++jj) a[t][jj] += a[i][jj];
                        redo = true;
                    }
            if (redo) continue;

            if (a[t][t] < 0) a[t][t] = -a[t][t];
            factors.push_back(a[t][t]);
            ++t;
        }
        return factors;
    }
};

}  // namespace

SmithResult smith_normal_form(const SparseIntMatrix& m)
{
    SmithWorker w(m);
    auto res = w.run();
    // Unit pivots may hide larger invariant factors only if the core had
    // factors of 1 too; normalize the divisibility chain ordering.
    std::sort(res.invariant_factors.begin(), res.invariant_factors.end());
    return res;
}

bool HomologyResult::all_trivial() const
{
    for (int b : betti)
        if (b != 0) return false;
    for (const auto& t : torsion)
        if (!t.empty()) return false;
    return true;
}

std::string HomologyResult::to_string() const
{
    std::ostringstream out;
    out << (reduced ? "reduced " : "") << "betti (";
    for (std::size_t i = 0; i < betti.size(); ++i) out << (i ? "," : "") << betti[i];
    out << ")";
    bool any_t = false;
    for (const auto& t : torsion)
        if (!t.empty()) any_t = true;
    if (any_t) {
        out << " torsion ";
        for (std::size_t i = 0; i < torsion.size(); ++i) {
            if (torsion[i].empty()) continue;
            out << "H" << i << ":[";
            for (std::size_t j = 0; j < torsion[i].size(); ++j)
                out << (j ? "," : "") << torsion[i][j].str();
            out << "] ";
        }
    }
    return out.str();
}

HomologyResult homology(const ChainComplex& c, bool reduced)
{
    HomologyResult res;
    res.reduced = reduced;
    if (c.dims.empty()) {
        res.empty_complex = true;
        return res;
    }
    const int top = c.top_dimension();
    std::vector<int> rank(top + 2, 0);
    std::vector<std::vector<Int>> tors(top + 2);
    for (int k = 1; k <= top; ++k) {
        auto snf = smith_normal_form(c.boundary[k]);
        rank[k] = snf.rank;
        for (const auto& f : snf.invariant_factors)
            if (f > 1) tors[k].push_back(f);
    }
    res.betti.resize(top + 1);
    res.torsion.resize(top + 1);
    for (int k = 0; k <= top; ++k) {
        res.betti[k] = c.dims[k] - rank[k] - rank[k + 1];
        res.torsion[k] = tors[k + 1];
    }
    if (reduced && res.betti[0] > 0) res.betti[0] -= 1;
    return res;
}

HomologyResult homology(const SimplicialComplex& k, bool reduced)
{
    if (k.empty()) {
        HomologyResult res;
        res.reduced = reduced;
        res.empty_complex = true;
        return res;
    }
    return homology(chain_complex(k), reduced);
}

}  // namespace homcyl
