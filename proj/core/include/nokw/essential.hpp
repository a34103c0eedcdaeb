#ifndef NOKW_ESSENTIAL_HPP
#define NOKW_ESSENTIAL_HPP

#include <map>
#include <utility>
#include <vector>

#include "nokw/repmod.hpp"
#include "nokw/rootsys.hpp"
#include "nokw/weyl.hpp"

namespace nokw {

/// Exponent tuple m = (m_1, ..., m_N) over an enumeration beta_1..beta_N;
/// entry k is the exponent of F_{beta_k}.
using ExponentTuple = std::vector<int>;

/**
 * The two total orders used throughout:
 *  - right_lex: decided at the highest-index differing coordinate (the tuple
 *    with the smaller entry there is smaller);
 *  - opposite_right_lex: the reverse of right_lex.  The essential-tuple scan
 *    processes each weight class ascending in this order.
 */
enum class TupleOrder { right_lex, opposite_right_lex };

/// Three-way comparison: -1 when m < k, 0 on equality, +1 when m > k.
int compare_tuples(const ExponentTuple& m, const ExponentTuple& k, TupleOrder order);

/**
 * All tuples m >= 0 with sum_k m_k beta_k = nu over the allowed roots,
 * enumerated depth-first with a feasibility memo; complete, duplicate-free,
 * and sorted ascending in the opposite right-lexicographic order (the scan
 * order of the essential-set computation).
 */
std::vector<ExponentTuple> kostant_partitions(const std::vector<int>& nu,
                                              const std::vector<RootVec>& allowed);

/**
 * The essential tuples of V(lambda) in the coordinate frame of an
 * enumeration: m is essential when F^m v_lambda does not lie in the span of
 * the F^k v_lambda with k before m in the opposite right-lexicographic
 * order.  Monomials of different weights are independent, so the scan runs
 * per weight class; the essential vectors of each class form a basis of its
 * weight space, and the full set has exactly Weyl-dimension many elements.
 */
struct EssentialSet {
    Weight lambda;
    Enumeration enumeration;
    /// Sorted ascending right-lexicographically (canonical output order).
    std::vector<ExponentTuple> tuples;

    struct TupleInfo {
        std::vector<int> depth; ///< lambda minus the reached weight, root coordinates
        long scan_rank = 0;     ///< emission index in the opposite-right-lex scan
    };
    std::map<ExponentTuple, TupleInfo> info;

    std::size_t size() const { return tuples.size(); }
    bool contains(const ExponentTuple& m) const { return info.count(m) > 0; }
};

/// Computes the full essential set of the module's highest weight.  The
/// module's support must be contained in the enumeration's parabolic support
/// (so that V(lambda) is cyclic over the corresponding lowering algebra).
EssentialSet essential_set(HighestWeightModule& module, const Enumeration& e);

/// Membership test for a single tuple; scans only the one weight class the
/// tuple lands in, building just the weight spaces below it.
bool is_essential(HighestWeightModule& module, const Enumeration& e, const ExponentTuple& m);

/// Level-ell slice of the graded essential monoid: {ell} x es(ell * lambda),
/// computed by full reconstruction at the scaled weight.
struct GammaLevel {
    long level = 1;
    EssentialSet points;
};

GammaLevel gamma_level(ModuleCache& cache, const RootSystem& rs, const Weight& lambda,
                       const Enumeration& e, long level);

/**
 * Checks es(mu) + es(nu) inside es(mu + nu); returns the violating pairs.
 * The containment is a theorem, so a nonempty result signals an
 * implementation bug rather than a property of the input.  All three sets
 * must live in the same enumeration frame.
 */
std::vector<std::pair<ExponentTuple, ExponentTuple>> check_monoid_inclusion(
    const EssentialSet& es_mu, const EssentialSet& es_nu, const EssentialSet& es_sum);

/// True iff the Minkowski sum es(mu) + es(nu) equals es(mu + nu) exactly
/// (informative; equality is known for good orderings in several types but
/// is not a theorem in general).
bool minkowski_equality(const EssentialSet& es_mu, const EssentialSet& es_nu,
                        const EssentialSet& es_sum);

/**
 * Sparse polynomial in the variables x_{beta_1}, ..., x_{beta_N} with exact
 * rational coefficients; the carrier of the lowest-term valuation.
 */
class SparseExponentPolynomial {
public:
    explicit SparseExponentPolynomial(int nvars) : nvars_(nvars) {}

    static SparseExponentPolynomial monomial(ExponentTuple m, const Rat& c);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<ExponentTuple, Rat>& terms() const { return terms_; }

    /// Adds c * x^m, erasing the term if the coefficient cancels to zero.
    void add_term(const ExponentTuple& m, const Rat& c);

    SparseExponentPolynomial operator+(const SparseExponentPolynomial& rhs) const;
    SparseExponentPolynomial operator*(const SparseExponentPolynomial& rhs) const;

private:
    int nvars_;
    std::map<ExponentTuple, Rat> terms_;
};

/// The right-lexicographically smallest exponent with nonzero coefficient.
/// Multiplicative: the valuation of a product is the sum of the valuations.
/// Throws invalid_input on the zero polynomial.
ExponentTuple lowest_term_valuation(const SparseExponentPolynomial& p);

} // namespace nokw

#endif // NOKW_ESSENTIAL_HPP
