#include "rigidity/framework.hpp"

#include <algorithm>

#include "rigidity/rng.hpp"

namespace rigidity {

Framework::Framework(unsigned dim, std::vector<std::vector<Rational>> coords)
    : dim_(dim), coords_(std::move(coords)) {
    if (dim_ < 1) throw PreconditionError("dimension must be >= 1");
    for (const auto& p : coords_)
        if (p.size() != dim_)
            throw DimensionError("coordinate vector length does not match dimension");
}

RationalMatrix Framework::configuration_matrix() const {
    RationalMatrix p(coords_.size(), dim_);
    for (std::size_t v = 0; v < coords_.size(); ++v)
        for (unsigned a = 0; a < dim_; ++a) p.at(v, a) = coords_[v][a];
    return p;
}

bool Framework::points_affinely_span() const {
    RationalMatrix lift(coords_.size(), dim_ + 1);
    for (std::size_t v = 0; v < coords_.size(); ++v) {
        for (unsigned a = 0; a < dim_; ++a) lift.at(v, a) = coords_[v][a];
        lift.at(v, dim_) = 1;
    }
    return rank(lift) == dim_ + 1;
}

Framework sample_framework(const Graph& g, unsigned dim, const RandomRegime& regime,
                           std::uint64_t trial) {
    regime.validate();
    if (dim < 1) throw PreconditionError("dimension must be >= 1");
    const unsigned words = (regime.coord_bits + 63) / 64;
    std::vector<std::vector<Rational>> coords(g.vertex_count());
    for (unsigned v = 0; v < g.vertex_count(); ++v) {
        coords[v].resize(dim);
        for (unsigned a = 0; a < dim; ++a) {
            Int value = 0;
            for (unsigned w = 0; w < words; ++w) {
                const std::uint64_t part =
                    rng::keyed(regime.seed, {rng::kCoordinates, trial, v, a, w});
                Int word(static_cast<unsigned long>(part >> 32));
                mpz_mul_2exp(word.get_mpz_t(), word.get_mpz_t(), 32);
                word += static_cast<unsigned long>(part & 0xFFFFFFFFULL);
                mpz_mul_2exp(value.get_mpz_t(), value.get_mpz_t(), 64);
                value += word;
            }
            mpz_fdiv_r_2exp(value.get_mpz_t(), value.get_mpz_t(), regime.coord_bits);
            coords[v][a] = Rational(value + 1);  // uniform in [1, 2^coord_bits]
        }
    }
    return Framework(dim, std::move(coords));
}

RigidityMatrix::RigidityMatrix(const Graph& g, const Framework& fw) {
    if (fw.vertex_count() != g.vertex_count())
        throw DimensionError("framework does not match graph vertex count");
    const unsigned d = fw.dim();
    mat_ = RationalMatrix(g.edge_count(), std::size_t(d) * g.vertex_count());
    for (std::size_t r = 0; r < g.edge_count(); ++r) {
        const auto& [u, v] = g.edge(r);
        for (unsigned a = 0; a < d; ++a) {
            const Rational diff = fw.point(u)[a] - fw.point(v)[a];
            mat_.at(r, std::size_t(u) * d + a) = diff;
            mat_.at(r, std::size_t(v) * d + a) = -diff;
        }
    }
    // Independent re-derivation of every row against the definition.
    for (std::size_t r = 0; r < g.edge_count(); ++r) {
        const auto& [u, v] = g.edge(r);
        for (unsigned w = 0; w < g.vertex_count(); ++w)
            for (unsigned a = 0; a < d; ++a) {
                const Rational& entry = mat_.at(r, std::size_t(w) * d + a);
                Rational expect(0);
                if (w == u) expect = fw.point(u)[a] - fw.point(v)[a];
                if (w == v) expect = fw.point(v)[a] - fw.point(u)[a];
                if (entry != expect)
                    throw ValidationError("rigidity matrix row fails block structure");
            }
    }
}

RigidityMatrix rigidity_matrix(const Graph& g, const Framework& fw) {
    return RigidityMatrix(g, fw);
}

std::size_t generic_rank_upper_bound(const Graph& g, unsigned dim) {
    const std::size_t n = g.vertex_count();
    std::size_t bound = g.edge_count();
    if (n >= dim + 1)
        bound = std::min(bound, std::size_t(dim) * n - std::size_t(dim) * (dim + 1) / 2);
    return bound;
}

std::size_t generic_rank(const Graph& g, unsigned dim, const RandomRegime& regime) {
    regime.validate();
    const std::size_t cap = generic_rank_upper_bound(g, dim);
    std::size_t best = 0;
    for (std::uint64_t t = 0; t < regime.trials && best < cap; ++t) {
        const Framework fw = sample_framework(g, dim, regime, t);
        best = std::max(best, rank(rigidity_matrix(g, fw).matrix()));
    }
    return best;
}

RigidityVerdict is_generically_rigid(const Graph& g, unsigned dim, const RandomRegime& regime) {
    RigidityVerdict v;
    v.regime = regime;
    const std::size_t n = g.vertex_count();
    if (n <= dim + 1) {
        // The rank criterion assumes affinely spanning points, which n <= d+1
        // vertices cannot give; completeness decides here.
        v.target_rank = n * (n - 1) / 2;
        v.achieved_rank = g.edge_count();
        v.rigid = g.is_complete();
        return v;
    }
    v.target_rank = std::size_t(dim) * n - std::size_t(dim) * (dim + 1) / 2;
    v.achieved_rank = generic_rank(g, dim, regime);
    v.rigid = v.achieved_rank == v.target_rank;
    return v;
}

}  // namespace rigidity
