#ifndef NOKW_ROOTSYS_HPP
#define NOKW_ROOTSYS_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nokw/rational.hpp"

namespace nokw {

/**
 * Classification label of a simple Lie type: a series letter A..G and a rank.
 * Rank bounds follow the classification (A>=1, B>=2, C>=2, D>=4, E in {6,7,8},
 * F=4, G=2); `make_cartan_type` validates them.
 */
struct CartanType {
    char series = 'A';
    int rank = 1;

    std::string name() const { return std::string(1, series) + std::to_string(rank); }
    bool operator==(const CartanType&) const = default;
};

CartanType make_cartan_type(char series, int rank);

/// A root written in the simple-root basis (integer coordinates).  Positive
/// roots have all coordinates >= 0.
struct RootVec {
    std::vector<int> coords;

    bool operator==(const RootVec&) const = default;
    auto operator<=>(const RootVec&) const = default;
};

/// A weight written in the fundamental-weight basis, so coords[i] equals the
/// pairing with the i-th simple coroot.  Dominant iff all coordinates >= 0,
/// regular dominant iff all > 0.
struct Weight {
    std::vector<long> coords;

    bool operator==(const Weight&) const = default;
    auto operator<=>(const Weight&) const = default;
};

Weight operator+(const Weight& a, const Weight& b);
Weight operator-(const Weight& a, const Weight& b);
Weight operator*(long c, const Weight& a);

/// True iff beta - gamma is nonzero with all simple-root coordinates >= 0,
/// i.e. beta strictly dominates gamma in the sum-of-positive-roots order.
bool root_dominates(const RootVec& beta, const RootVec& gamma);

/**
 * Exact combinatorial backbone of one simple Lie type: Cartan matrix,
 * minimal integral symmetrizer, and the full list of positive roots in
 * simple-root coordinates.
 *
 * Conventions (fixed once, used everywhere):
 *  - cartan()[i][j] is the pairing of the j-th simple root with the i-th
 *    simple coroot; rows therefore describe coroots.
 *  - Bourbaki numbering of the simple roots per series, except that for G2 we
 *    keep the matrix [[2,-1],[-3,2]], which makes the first simple root the
 *    long one.
 *  - positive_roots() is sorted ascending by (height, lexicographic
 *    coordinates); this canonical order doubles as the default good ordering.
 */
class RootSystem {
public:
    explicit RootSystem(CartanType t);

    static RootSystem make(char series, int rank) { return RootSystem(make_cartan_type(series, rank)); }

    const CartanType& type() const { return type_; }
    int rank() const { return type_.rank; }
    const std::vector<std::vector<int>>& cartan() const { return cartan_; }
    const std::vector<long>& symmetrizer() const { return sym_; }
    const std::vector<RootVec>& positive_roots() const { return positive_; }
    int num_positive() const { return static_cast<int>(positive_.size()); }

    RootVec simple_root(int i) const;
    bool is_positive_root(const std::vector<int>& coords) const;
    /// Position of beta in positive_roots(), or -1 when beta is not a
    /// positive root.
    int root_index(const RootVec& beta) const;
    long height(const RootVec& beta) const;

    /// Half the squared length of a root in the minimal-symmetrizer
    /// normalization; equals symmetrizer()[i] on the i-th simple root.
    long half_square_length(const RootVec& beta) const;

    /// Pairing of a weight with the coroot of beta: sum_i c_i d_i lambda_i
    /// divided by d_beta.  Exact integer for integral weights.
    long coroot_pairing(const Weight& lambda, const RootVec& beta) const;
    Rat coroot_pairing_rational(const std::vector<Rat>& lambda, const RootVec& beta) const;

    /// Coordinates of a root-lattice vector in the fundamental-weight basis:
    /// (A nu)_k = pairing of nu with the k-th simple coroot.
    std::vector<long> root_to_weight_coords(const std::vector<int>& nu) const;

    bool is_dominant(const Weight& lambda) const;
    bool is_regular_dominant(const Weight& lambda) const;
    bool is_zero(const Weight& lambda) const;
    /// Indices (0-based) of the nonzero coordinates of lambda.
    std::vector<int> support(const Weight& lambda) const;

    Weight zero_weight() const { return Weight{std::vector<long>(type_.rank, 0)}; }
    Weight fundamental_weight(int i) const;
    Weight rho() const;

    /// Dimension of the irreducible module with highest weight lambda
    /// (product formula over positive roots; exact integer).
    Int weyl_dim(const Weight& lambda) const;

    /// Positive roots with at least one nonzero coordinate on the given
    /// (0-based, nonempty) support set, in canonical order.
    std::vector<RootVec> parabolic_positive_roots(const std::vector<int>& supp) const;

    /// Positive roots whose support is contained in S (the positive system of
    /// the Levi subalgebra on S), in canonical order.
    std::vector<RootVec> levi_positive_roots(const std::vector<int>& S) const;

    /// The unique maximal element, in the dominance order, of the Levi
    /// positive system on S (S must span a connected subdiagram).
    RootVec highest_root_of_levi(const std::vector<int>& S) const;

    /// Cover relations of the dominance order on the positive roots, as index
    /// pairs (lower, upper) into positive_roots().
    std::vector<std::pair<int, int>> dominance_cover_edges() const;

private:
    void build_cartan();
    void build_symmetrizer();
    void build_positive_roots();

    CartanType type_;
    std::vector<std::vector<int>> cartan_;
    std::vector<long> sym_;
    std::vector<RootVec> positive_;
    std::map<std::vector<int>, int> index_;
};

/**
 * Lower bound datum of the width formula: the minimum over all coroots with
 * nonzero pairing of |<lambda, beta^vee>|.  For dominant lambda every pairing
 * against a positive coroot is >= 0, so this is the smallest nonzero pairing
 * over the positive roots.  Throws invalid_input on the zero weight.
 */
long gromov_width_formula(const RootSystem& rs, const Weight& lambda);

/// Same minimum restricted to the parabolic positive system on supp(lambda).
/// Agrees with gromov_width_formula on every input; computed independently
/// and used as a consistency check.
long gromov_width_parabolic(const RootSystem& rs, const Weight& lambda);

/// All positive roots whose coroot attains the minimum of the width formula.
std::vector<RootVec> gromov_width_minimizers(const RootSystem& rs, const Weight& lambda);

/**
 * Writes a nonzero rational weight q as (1/scale) * lambda with lambda
 * primitive integral (gcd of coordinates 1, positive multiples of q).
 * The width of q is then width(lambda) / scale.
 */
std::pair<Weight, Rat> normalize_rational_weight(const std::vector<Rat>& q);

/// Width of a nonzero rational dominant weight via the scaling reduction.
Rat gromov_width_rational(const RootSystem& rs, const std::vector<Rat>& q);

/// Type-A convenience: converts n+1 epsilon-coordinates (lambda_1,...,
/// lambda_{n+1}) to the n fundamental-weight coordinates a_i = l_i - l_{i+1}.
std::vector<Rat> weight_from_epsilon_coords(const std::vector<Rat>& eps);

} // namespace nokw

#endif // NOKW_ROOTSYS_HPP
