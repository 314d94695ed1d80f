#include "rigidity/matroid.hpp"

#include <algorithm>
#include <numeric>

#include "rigidity/linalg.hpp"

namespace rigidity {

EdgeSubset full_edge_set(const Graph& g) {
    EdgeSubset s(g.edge_count());
    s.set();
    return s;
}

EdgeSubset edge_subset(const Graph& g, std::initializer_list<std::size_t> indices) {
    EdgeSubset s(g.edge_count());
    for (std::size_t i : indices) s.set(i);
    return s;
}

MatroidOracle::MatroidOracle(Graph g, unsigned dim, RandomRegime regime)
    : g_(std::move(g)),
      dim_(dim),
      regime_(regime),
      fw_(sample_framework(g_, dim, regime, 0)) {
    regime_.validate();
    pin_rows();
}

MatroidOracle::MatroidOracle(Graph g, unsigned dim, RandomRegime regime, Framework pinned)
    : g_(std::move(g)), dim_(dim), regime_(regime), fw_(std::move(pinned)) {
    regime_.validate();
    if (fw_.vertex_count() != g_.vertex_count() || fw_.dim() != dim_)
        throw DimensionError("pinned framework does not match graph/dimension");
    pin_rows();
}

Framework MatroidOracle::framework() const { return fw_; }

void MatroidOracle::pin_rows() {
    const auto scaled = detail::scale_to_integers(rigidity_matrix(g_, fw_).matrix());
    rows_ = scaled.rows;
}

namespace {
std::size_t rank_of_rows(const std::vector<std::vector<Int>>& rows, const EdgeSubset& s,
                         std::size_t cols) {
    std::vector<std::vector<Int>> sub;
    sub.reserve(s.count());
    for (auto i = s.find_first(); i != EdgeSubset::npos; i = s.find_next(i)) sub.push_back(rows[i]);
    if (sub.empty()) return 0;
    return detail::bareiss_echelon(std::move(sub), cols).rank;
}
}  // namespace

void MatroidOracle::resample_and_replay(const char* why) {
    ++trial_;
    if (trial_ > 16)
        throw InternalError(std::string("matroid oracle kept failing validation: ") + why);
    fw_ = sample_framework(g_, dim_, regime_, trial_);
    pin_rows();
    const std::size_t cols = std::size_t(dim_) * g_.vertex_count();
    for (auto& [subset, value] : memo_) value = rank_of_rows(rows_, subset, cols);
}

std::size_t MatroidOracle::raw_subset_rank(const EdgeSubset& s) {
    if (s.size() != g_.edge_count()) throw PreconditionError("edge subset size mismatch");
    auto it = memo_.find(s);
    if (it != memo_.end()) return it->second;
    const std::size_t cols = std::size_t(dim_) * g_.vertex_count();
    const std::size_t r = rank_of_rows(rows_, s, cols);
    if (r > s.count()) throw InternalError("subset rank exceeds subset size");
    memo_.emplace(s, r);
    return r;
}

std::size_t MatroidOracle::subset_rank(const EdgeSubset& s) {
    std::lock_guard lock(mutex_);
    return raw_subset_rank(s);
}

bool MatroidOracle::raw_is_circuit(const EdgeSubset& s) {
    const std::size_t k = s.count();
    if (k == 0) return false;
    if (raw_subset_rank(s) != k - 1) return false;
    for (auto i = s.find_first(); i != EdgeSubset::npos; i = s.find_next(i)) {
        EdgeSubset t = s;
        t.reset(i);
        if (raw_subset_rank(t) != k - 1) return false;
    }
    return true;
}

bool MatroidOracle::is_circuit(const EdgeSubset& s) {
    std::lock_guard lock(mutex_);
    return raw_is_circuit(s);
}

EdgeSubset MatroidOracle::raw_fundamental_circuit(const EdgeSubset& base, std::size_t e) {
    if (base.test(e)) throw PreconditionError("element e already in base");
    const std::size_t k = base.count();
    if (raw_subset_rank(base) != k) throw PreconditionError("base is dependent");
    EdgeSubset ext = base;
    ext.set(e);
    if (raw_subset_rank(ext) != k) throw PreconditionError("base + e is independent");
    EdgeSubset circuit(g_.edge_count());
    circuit.set(e);
    for (auto b = base.find_first(); b != EdgeSubset::npos; b = base.find_next(b)) {
        EdgeSubset t = ext;
        t.reset(b);
        // b lies on the circuit iff removing it restores independence.
        if (raw_subset_rank(t) == k) circuit.set(b);
    }
    return circuit;
}

EdgeSubset MatroidOracle::fundamental_circuit(const EdgeSubset& base, std::size_t e) {
    std::lock_guard lock(mutex_);
    for (int attempt = 0;; ++attempt) {
        EdgeSubset c = raw_fundamental_circuit(base, e);
        if (raw_is_circuit(c)) return c;
        if (attempt >= 4) throw InternalError("fundamental circuit failed verification");
        resample_and_replay("fundamental circuit not minimally dependent");
    }
}

// Incremental reduction with combination tracking: for every edge row that is
// dependent on the rows before it, the support of its expression in the
// greedy basis is exactly the fundamental circuit minus the edge itself.
std::vector<EdgeSubset> MatroidOracle::raw_components(const EdgeSubset& restriction) {
    const std::size_t m = g_.edge_count();
    const std::size_t cols = std::size_t(dim_) * g_.vertex_count();

    std::vector<std::size_t> parent(m);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](std::size_t a, std::size_t b) { parent[find(a)] = find(b); };

    struct EchRow {
        std::vector<Rational> row;     // pivot normalized to 1
        std::size_t pivot;
        std::vector<Rational> combo;   // expression over basis edges so far
    };
    std::vector<EchRow> ech;
    std::vector<std::size_t> basis_edges;

    for (auto e = restriction.find_first(); e != EdgeSubset::npos; e = restriction.find_next(e)) {
        std::vector<Rational> row(cols);
        for (std::size_t j = 0; j < cols; ++j) row[j] = Rational(rows_[e][j]);
        std::vector<Rational> lambda(basis_edges.size(), Rational(0));
        for (const auto& er : ech) {
            const Rational f = row[er.pivot];
            if (f == 0) continue;
            for (std::size_t j = er.pivot; j < cols; ++j)
                if (er.row[j] != 0) row[j] -= f * er.row[j];
            for (std::size_t b = 0; b < er.combo.size(); ++b)
                if (er.combo[b] != 0) lambda[b] += f * er.combo[b];
        }
        std::size_t pivot = cols;
        for (std::size_t j = 0; j < cols; ++j)
            if (row[j] != 0) {
                pivot = j;
                break;
            }
        if (pivot == cols) {
            // Dependent: lambda holds the coefficients of e over the basis.
            for (std::size_t b = 0; b < lambda.size(); ++b)
                if (lambda[b] != 0) unite(basis_edges[b], e);
        } else {
            const Rational p = row[pivot];
            for (std::size_t j = pivot; j < cols; ++j)
                if (row[j] != 0) row[j] /= p;
            std::vector<Rational> combo(basis_edges.size() + 1, Rational(0));
            for (std::size_t b = 0; b < lambda.size(); ++b) combo[b] = -lambda[b] / p;
            combo[basis_edges.size()] = Rational(1) / p;
            basis_edges.push_back(e);
            ech.push_back({std::move(row), pivot, std::move(combo)});
        }
    }

    std::map<std::size_t, EdgeSubset> classes;
    for (auto e = restriction.find_first(); e != EdgeSubset::npos; e = restriction.find_next(e)) {
        auto it = classes.try_emplace(find(e), EdgeSubset(m)).first;
        it->second.set(e);
    }
    std::vector<EdgeSubset> out;
    out.reserve(classes.size());
    for (auto& [root, cls] : classes) out.push_back(std::move(cls));
    std::sort(out.begin(), out.end(),
              [](const EdgeSubset& a, const EdgeSubset& b) { return a.find_first() < b.find_first(); });
    return out;
}

std::vector<EdgeSubset> MatroidOracle::rd_components() { return rd_components(full_edge_set(g_)); }

std::vector<EdgeSubset> MatroidOracle::rd_components(const EdgeSubset& restriction) {
    std::lock_guard lock(mutex_);
    return raw_components(restriction);
}

bool MatroidOracle::is_rd_connected() {
    if (g_.edge_count() < 1) throw PreconditionError("R_d-connectivity needs at least one edge");
    if (g_.edge_count() == 1) return false;  // a lone edge lies in no circuit
    std::lock_guard lock(mutex_);
    return raw_components(full_edge_set(g_)).size() == 1;
}

std::optional<EdgeSubset> MatroidOracle::circuit_through_pair(std::size_t e, std::size_t f) {
    if (e == f) throw PreconditionError("circuit_through_pair needs two distinct edges");
    if (e >= g_.edge_count() || f >= g_.edge_count())
        throw PreconditionError("edge index out of range");
    std::lock_guard lock(mutex_);

    auto together = [&](const EdgeSubset& s) {
        for (const auto& cls : raw_components(s))
            if (cls.test(e)) return cls.test(f);
        return false;
    };

    for (int attempt = 0;; ++attempt) {
        EdgeSubset s = full_edge_set(g_);
        if (!together(s)) return std::nullopt;
        for (std::size_t g = 0; g < g_.edge_count(); ++g) {
            if (g == e || g == f || !s.test(g)) continue;
            EdgeSubset t = s;
            t.reset(g);
            if (together(t)) s = std::move(t);
        }
        if (raw_is_circuit(s)) return s;
        if (attempt >= 4) throw InternalError("greedy circuit failed verification");
        resample_and_replay("pair circuit not minimally dependent");
    }
}

}  // namespace rigidity
