#pragma once

#include <cstdint>
#include <vector>

#include "rigidity/graph.hpp"
#include "rigidity/linalg.hpp"
#include "rigidity/matrix.hpp"
#include "rigidity/rational.hpp"

namespace rigidity {

// Randomization parameters shared by every randomized decision. Genericity is
// realized by sampling large integer coordinates; low-rank outcomes are wrong
// only when the sample hits a proper algebraic subvariety, which happens with
// probability on the order of degree / 2^coord_bits per trial.
struct RandomRegime {
    std::uint64_t seed = 0xC0FFEE;
    unsigned coord_bits = 64;
    unsigned trials = 3;

    void validate() const {
        if (coord_bits < 16) throw PreconditionError("coord_bits must be >= 16");
        if (trials < 1) throw PreconditionError("trials must be >= 1");
    }
};

// Exact rational coordinates in dimension d for every vertex of a companion
// graph. Row v of the configuration matrix is p(v)^T.
class Framework {
public:
    Framework(unsigned dim, std::vector<std::vector<Rational>> coords);

    unsigned dim() const { return dim_; }
    unsigned vertex_count() const { return static_cast<unsigned>(coords_.size()); }
    const std::vector<Rational>& point(unsigned v) const { return coords_.at(v); }

    // n x d configuration matrix P.
    RationalMatrix configuration_matrix() const;

    // Rank of the (d+1)-column homogeneous lift [P | 1]; the points affinely
    // span R^d exactly when this is d+1.
    bool points_affinely_span() const;

private:
    unsigned dim_;
    std::vector<std::vector<Rational>> coords_;
};

// Deterministic integer sampling: coordinate (v, axis) of a given trial is a
// pure function of (seed, trial, v, axis), uniform in [1, 2^coord_bits].
Framework sample_framework(const Graph& g, unsigned dim, const RandomRegime& regime,
                           std::uint64_t trial);

// |E| x (d n) rigidity matrix: the row of edge uv carries p(u)-p(v) in u's
// column block, p(v)-p(u) in v's, zeros elsewhere. Row order is the canonical
// edge order. The constructor re-derives each row independently and refuses
// matrices that do not match the definition.
class RigidityMatrix {
public:
    RigidityMatrix(const Graph& g, const Framework& fw);

    const RationalMatrix& matrix() const { return mat_; }
    std::size_t rows() const { return mat_.rows(); }
    std::size_t cols() const { return mat_.cols(); }

private:
    RationalMatrix mat_;
};

RigidityMatrix rigidity_matrix(const Graph& g, const Framework& fw);

// Max rank of dn - d(d+1)/2 attainable by any graph on n >= d+1 affinely
// spanning points; |E| always bounds from above.
std::size_t generic_rank_upper_bound(const Graph& g, unsigned dim);

// Max over `trials` sampled frameworks of rank(R_d(G,p)). Never exceeds the
// true generic rank; equals it except with probability vanishing in
// coord_bits.
std::size_t generic_rank(const Graph& g, unsigned dim, const RandomRegime& regime);

struct RigidityVerdict {
    bool rigid = false;
    std::size_t achieved_rank = 0;
    std::size_t target_rank = 0;
    RandomRegime regime;
};

// Generic rigidity: rank dn - d(d+1)/2 for n >= d+1, completeness below that.
RigidityVerdict is_generically_rigid(const Graph& g, unsigned dim, const RandomRegime& regime);

}  // namespace rigidity
