#ifndef NOKW_WIDTHS_HPP
#define NOKW_WIDTHS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nokw/essential.hpp"
#include "nokw/repmod.hpp"
#include "nokw/rootsys.hpp"
#include "nokw/weyl.hpp"

namespace nokw {

/// Which simplex construction a report describes.
enum class SimplexKind { good_ordering, convex_ordering, telescope };

std::string simplex_kind_name(SimplexKind kind);

/**
 * A claimed lattice simplex inside the essential set: the zero tuple plus N
 * scaled generators (unit tuples for the good-ordering and telescope
 * constructions, suffix-indicator tuples for convex orderings), all dilated
 * by the Gromov width of the weight.
 */
struct SimplexSpec {
    SimplexKind kind = SimplexKind::good_ordering;
    Weight lambda;
    Enumeration enumeration;
    long size = 0; ///< dilation factor k; equals the Gromov width of lambda
    std::vector<ExponentTuple> vertices; ///< N + 1 tuples, the zero tuple first
};

struct NamedCheck {
    std::string name;
    bool passed = false;
};

/// Outcome of machine-verifying one construction in exact arithmetic.
struct SimplexReport {
    SimplexSpec spec;
    /// Per-vertex essential-membership verdicts, aligned with spec.vertices.
    std::vector<std::pair<ExponentTuple, bool>> vertex_verdicts;
    /// Construction-specific side conditions.
    std::vector<NamedCheck> checks;
    /// Facts recorded from the construction without independent verification.
    std::vector<std::string> notes;
    bool verified = false;
};

/**
 * Good-ordering construction: with k the Gromov width of a nonzero dominant
 * lambda and e the good ordering of its parabolic positive system, the
 * vertices 0 and k * e_p of the standard N-simplex are all essential.
 */
SimplexReport verify_good_ordering_theorem(ModuleCache& cache, const RootSystem& rs,
                                           const Weight& lambda);

/**
 * Maximal exponents of a suffix enumeration at a regular dominant weight,
 * computed two independent ways: the closed form pairs lambda with the
 * simple coroot of each word letter; the induction lowers the highest vector
 * along the enumeration from the last root backwards, each exponent maximal
 * before the vector vanishes.  A mismatch signals a bug (internal_error).
 */
struct MmaxData {
    Enumeration enumeration;
    std::vector<long> exponents;            ///< m^max_1 .. m^max_N
    std::vector<ExponentTuple> tail_tuples; ///< (0..0, m^max_k, .., m^max_N), k = 1..N
};

MmaxData mmax_tuples(ModuleCache& cache, const RootSystem& rs, const std::vector<int>& word,
                     const Weight& lambda);

/**
 * Convex-ordering construction for a reduced word of the longest element at
 * a regular dominant weight: the tail truncations of the maximal-exponent
 * tuple are essential and reach the extremal weights s_{beta_k}..s_{beta_N}
 * applied to lambda, and the simplex with vertices 0 and k * (e_i + ... +
 * e_N) lies in the essential set.
 */
SimplexReport verify_convex_ordering_theorem(ModuleCache& cache, const RootSystem& rs,
                                             const std::vector<int>& word, const Weight& lambda);

/// True when the telescope construction is defined for the ambient type
/// (series A, B, C, D and E6, E7; not G2, F4, E8).
bool telescope_supported(const CartanType& type);

/**
 * Telescope construction at a regular dominant weight: verifies the block
 * decomposition of the longest element (length additivity, cominuscule
 * stages), that each unit tuple is essential in the fundamental-weight
 * module of its shell, and that the corner simplex 0, k * e_p lies in the
 * essential set of V(lambda).
 */
SimplexReport verify_telescope_theorem(ModuleCache& cache, const RootSystem& rs,
                                       const Weight& lambda);

/// Which constructions width_report should attempt.
enum class ConstructionRequest { all_applicable, good, convex, telescope };

/**
 * Full report for a rational dominant weight q: primitive integral rescaling
 * lambda with q = (1/scale) * lambda, the width of q (the integral width
 * divided by scale), the minimizing roots, and the requested construction
 * verifications.  With all_applicable, constructions whose hypotheses fail
 * (singular weight, unsupported type) are skipped with a note; requesting
 * one of those explicitly throws instead.
 */
struct WidthReport {
    std::vector<Rat> input;
    Weight lambda;
    Rat scale = 1;
    Rat width = 0;
    long integral_width = 0;
    std::vector<RootVec> minimizers;
    std::optional<SimplexReport> good;
    std::optional<SimplexReport> convex;
    std::optional<SimplexReport> telescope;
    std::vector<std::string> notes;
    bool verified = false;
};

WidthReport width_report(ModuleCache& cache, const RootSystem& rs, const std::vector<Rat>& q,
                         ConstructionRequest request = ConstructionRequest::all_applicable);

} // namespace nokw

#endif // NOKW_WIDTHS_HPP
