#ifndef NOKW_REPMOD_HPP
#define NOKW_REPMOD_HPP

#include <map>
#include <memory>
#include <tuple>
#include <vector>

#include "nokw/linalg.hpp"
#include "nokw/rootsys.hpp"
#include "nokw/weyl.hpp"

namespace nokw {

/// A word (i_1, ..., i_k) of simple indices denoting the lowering operator
/// f_{i_1} f_{i_2} ... f_{i_k} applied to the highest-weight vector; the
/// rightmost letter acts first.
using LoweringWord = std::vector<int>;

/// Element of a weight space of V(lambda): the depth nu = lambda - weight in
/// simple-root coordinates, plus exact coordinates in the basis that the
/// module construction selected for that weight space.  A vector whose
/// coordinates are all zero (or whose space is zero-dimensional) is the zero
/// vector of that weight.
struct ModuleVector {
    std::vector<int> depth;
    std::vector<Rat> coords;

    bool is_zero() const {
        for (const auto& c : coords)
            if (c != 0) return false;
        return true;
    }
};

/**
 * A lowering root vector F_beta written out as an exact combination of words
 * in the simple lowering operators.  Simple roots give a single letter; a
 * composite root is the iterated commutator F_beta = F_i F_gamma - F_gamma F_i
 * for the least i such that gamma = beta - alpha_i is again a positive root.
 * No structure-constant normalization is imposed: any nonzero generator of
 * the root space works, because every downstream question (vanishing, span
 * membership, essentiality) is invariant under scaling the generators.
 */
struct RootVectorExpr {
    RootVec beta;
    std::map<LoweringWord, Rat> expansion;
};

RootVectorExpr root_vector_expr(const RootSystem& rs, const RootVec& beta);

/**
 * Contravariant form on lowering words over the Verma module of highest
 * weight lambda, evaluated from first principles: e_i is adjoint to f_i,
 * [e_i, f_j] = delta_ij h_i, and h_i acts on a tail of a word by the integer
 * pairing of the tail's weight.  Completely independent of the module
 * construction below, which makes it a from-scratch cross-check for every
 * Gram entry the construction produces.
 */
class ShapovalovEvaluator {
public:
    ShapovalovEvaluator(const RootSystem& rs, Weight lambda);

    Rat pair(const LoweringWord& u, const LoweringWord& w);

private:
    const RootSystem rs_;
    Weight lambda_;
    std::map<std::pair<LoweringWord, LoweringWord>, Rat> memo_;
};

Rat shapovalov_pair(const RootSystem& rs, const Weight& lambda, const LoweringWord& u,
                    const LoweringWord& w);

/**
 * The irreducible highest-weight module V(lambda), built weight space by
 * weight space in exact arithmetic.
 *
 * Candidates for the weight space at depth nu are f_i applied to the basis
 * vectors of the space at depth nu - e_i, ordered by (parent basis position,
 * letter).  Their pairwise contravariant products are assembled from the
 * parent spaces' data; a greedy maximal subset with positive-definite Gram
 * matrix becomes the basis.  Because the radical of the contravariant form on
 * the Verma module is exactly the maximal submodule, rank computations
 * against the form implement linear algebra in V(lambda) without ever
 * writing down the quotient.
 *
 * Spaces are built lazily on first access and memoized; build_all() closes
 * the whole weight diagram breadth-first and checks the total dimension
 * against the Weyl dimension formula.
 */
class HighestWeightModule {
public:
    HighestWeightModule(const RootSystem& rs, Weight lambda);

    const RootSystem& root_system() const { return rs_; }
    const Weight& highest_weight() const { return lambda_; }

    struct WeightSpace {
        std::vector<LoweringWord> basis;
        RatMat gram;
        /// Per simple index i: the map from the space at depth nu - e_i into
        /// this one given by f_i, in basis coordinates (empty when nu_i = 0).
        std::vector<RatMat> lowering_in;
        /// Per simple index i: the map from this space to depth nu - e_i
        /// given by e_i (empty when nu_i = 0).
        std::vector<RatMat> raising_out;

        int dim() const { return static_cast<int>(basis.size()); }
    };

    /// Weight space at the given depth (lambda minus depth in root
    /// coordinates), built on demand.  Depth coordinates must be >= 0.
    const WeightSpace& space(const std::vector<int>& depth);
    int weight_multiplicity(const std::vector<int>& depth);
    Weight weight_of_depth(const std::vector<int>& depth) const;

    /// Builds every weight space of the module and verifies that the total
    /// dimension equals the Weyl dimension formula.
    void build_all();
    bool fully_built() const { return fully_built_; }
    /// Depths of the nonzero weight spaces (requires build_all()).
    std::vector<std::vector<int>> weight_depths() const;

    /// Walks all weight spaces built so far (including by lazy access);
    /// f(depth, space) is called in deterministic (map) order.
    template <typename F>
    void for_each_built_space(F&& f) const {
        for (const auto& [depth, space] : spaces_)
            if (space.dim() > 0) f(depth, space);
    }

    ModuleVector highest_vector() const;

    /// Multiplies the generator used for F_beta by a nonzero rational.
    /// Essential sets and all span verdicts are invariant under this.
    void set_generator_scale(const RootVec& beta, const Rat& scale);

    ModuleVector apply_simple_lowering(int i, const ModuleVector& v);
    ModuleVector apply_root_lowering(const RootVec& beta, const ModuleVector& v);
    /// Applies a root-vector expression literally, word by word (the slow
    /// path; used to validate the memoized matrices against the definition).
    ModuleVector apply_expr_words(const RootVectorExpr& expr, const ModuleVector& v);

    /// Matrix of the (unscaled) F_beta from the space at `from_depth` to the
    /// space at `from_depth + beta`, built by the commutator recursion and
    /// memoized per (beta, depth).
    const RatMat& root_lowering_matrix(const RootVec& beta, const std::vector<int>& from_depth);

    /// F_{beta_1}^{m_1} ... F_{beta_N}^{m_N} v_lambda, rightmost factor
    /// first, in the frame of the given enumeration.
    ModuleVector pbw_monomial_vector(const Enumeration& e, const std::vector<int>& m);

    /// Membership of v in the span of S, decided by comparing contravariant
    /// Gram ranks of S and S + {v}.  All vectors must share one depth.
    bool in_span(const ModuleVector& v, const std::vector<ModuleVector>& S);

    /// Terms of v as an explicit combination of basis lowering words.
    std::map<LoweringWord, Rat> word_terms(const ModuleVector& v);

private:
    const WeightSpace& ensure_space(const std::vector<int>& depth);
    Rat generator_scale(const RootVec& beta) const;

    RootSystem rs_;
    Weight lambda_;
    std::vector<long> lambda_wc_; // alias of lambda_.coords for clarity
    std::map<std::vector<int>, WeightSpace> spaces_;
    std::map<std::pair<std::vector<int>, std::vector<int>>, RatMat> lowering_memo_;
    std::map<std::vector<int>, Rat> scales_;
    bool fully_built_ = false;
};

/**
 * Keyed store of modules, one per (type, highest weight).  Verifiers and the
 * CLI route every module construction through a cache so that (a) repeated
 * requests share work and (b) a final sweep can re-check positive
 * definiteness of every Gram matrix that was ever built.
 */
class ModuleCache {
public:
    HighestWeightModule& get(const RootSystem& rs, const Weight& lambda);

    template <typename F>
    void for_each_module(F&& f) const {
        for (const auto& [key, module] : modules_) f(*module);
    }

    std::size_t size() const { return modules_.size(); }

private:
    using Key = std::tuple<char, int, std::vector<long>>;
    std::map<Key, std::unique_ptr<HighestWeightModule>> modules_;
};

} // namespace nokw

#endif // NOKW_REPMOD_HPP
