#ifndef NOKW_WEYL_HPP
#define NOKW_WEYL_HPP

#include <vector>

#include "nokw/rootsys.hpp"

namespace nokw {

/**
 * An element of the Weyl group, stored as two integer matrices: its action on
 * fundamental-weight coordinates and its action on simple-root coordinates.
 * Both are products of simple-reflection matrices and are kept in sync by the
 * group operations.
 */
class WeylElement {
public:
    static WeylElement identity(int rank);
    static WeylElement simple_reflection(const RootSystem& rs, int i);

    int rank() const { return static_cast<int>(wmat_.size()); }

    Weight apply(const Weight& lambda) const;
    std::vector<int> apply_to_root(const std::vector<int>& coords) const;

    WeylElement operator*(const WeylElement& rhs) const;
    bool operator==(const WeylElement&) const = default;

    WeylElement inverse() const;

    /// Number of positive roots sent to negative roots.
    long length(const RootSystem& rs) const;

    /// True iff the image of the given positive root is again positive.
    bool sends_positive(const RootSystem& rs, const RootVec& beta) const;

private:
    WeylElement() = default;
    std::vector<std::vector<long>> wmat_; // action on weight coordinates
    std::vector<std::vector<long>> rmat_; // action on root coordinates
};

/// Product s_{w_1} s_{w_2} ... s_{w_k} of simple reflections (letters are
/// 0-based simple indices).
WeylElement product_of_word(const RootSystem& rs, const std::vector<int>& word);

/// True iff the word's length equals the length of the element it represents.
bool is_reduced_word(const RootSystem& rs, const std::vector<int>& word);

/**
 * Longest element of the Weyl group generated by the simple reflections in S
 * (0-based indices; the full group when S covers every index), together with
 * the reduced word found by greedy ascent: starting from the identity,
 * repeatedly append the smallest i in S whose appended reflection increases
 * the length.  Deterministic, and the resulting word length equals the number
 * of Levi positive roots on S.
 */
std::pair<WeylElement, std::vector<int>> longest_element(const RootSystem& rs, const std::vector<int>& S);

/// Reflection of a weight along an arbitrary root:
/// s_beta(lambda) = lambda - <lambda, beta^vee> * (beta in weight coordinates).
Weight reflect_weight(const RootSystem& rs, const RootVec& beta, const Weight& lambda);

enum class EnumKind { good, word_prefix, word_suffix, telescope };

/**
 * An ordered listing beta_1 .. beta_N of the parabolic positive system, the
 * coordinate frame in which exponent tuples live.  Construction provenance is
 * recorded so downstream checks know which invariants apply:
 *
 *  - good:        sorted ascending by (height, lexicographic coordinates); a
 *                 root dominating another always comes later.
 *  - word_prefix: beta_k = w_L s_{i_1}...s_{i_{k-1}}(alpha_{i_k}) for a word
 *                 extending the Levi longest element on the left.
 *  - word_suffix: beta_k = w_L s_{i_N}...s_{i_{k+1}}(alpha_{i_k}) for a word
 *                 extending the Levi longest element on the right.
 *  - telescope:   reversed prefix listing of the block word tau_1...tau_n of
 *                 a chain of cominuscule Levi subalgebras; shell j occupies a
 *                 tail segment (see telescope_enumeration).
 */
struct Enumeration {
    EnumKind kind = EnumKind::good;
    std::vector<int> supp;        // 0-based support defining the parabolic
    std::vector<RootVec> roots;   // beta_1..beta_N at indices 0..N-1
    std::vector<int> word;        // originating reduced word (empty for good)
    std::vector<int> relabeling;  // telescope: stage j -> simple index (0-based)
    std::vector<int> shells;      // telescope: 1-based stage id per position

    int size() const { return static_cast<int>(roots.size()); }
    /// Position of beta in this listing, or -1 when absent.
    int position_of(const RootVec& beta) const;
    bool same_frame(const Enumeration& other) const { return roots == other.roots; }
};

/// The support set {0, ..., rank-1}.
std::vector<int> full_support(const RootSystem& rs);

/// Canonical good ordering of the parabolic positive system on supp.
Enumeration good_ordering(const RootSystem& rs, const std::vector<int>& supp);

/// True iff no root of the listing dominates a root placed after it.
bool is_good_ordering(const Enumeration& e);

/**
 * Enumeration of the parabolic positive system induced by a reduced word.
 * `word` (0-based letters) must complete the longest word of the Levi on the
 * complement of supp to a reduced decomposition of the longest element: Levi
 * word first for the prefix variant, last for the suffix variant.  Throws
 * invalid_input when the decomposition is not reduced, internal_error if the
 * produced listing fails to be a bijection onto the parabolic system (which
 * would mean the reflection conventions are wrong, not the input).
 */
Enumeration enumeration_from_word(const RootSystem& rs, const std::vector<int>& supp,
                                  const std::vector<int>& word, EnumKind variant);

/**
 * Shell-compatible enumeration from a telescope of Levi subalgebras.
 *
 * A per-type relabeling sigma orders the simple roots so that every prefix
 * {sigma(1),...,sigma(j)} spans a connected subdiagram whose fundamental
 * weight at sigma(j) is cominuscule (pairs to 1 with the highest coroot of
 * that Levi).  Stage blocks tau_j = (w0^{j-1})^{-1} w0^j give reduced words
 * whose concatenation B is a reduced word for the longest element; the
 * returned listing is the reversed prefix enumeration of B, so the roots of
 * the first j stages occupy the tail positions — the shape the inductive
 * essentiality argument needs.  The stored word is B itself: its restriction
 * to the first j blocks is a reduced word for w0^j.
 *
 * Defined for types A, B, C, D, E6 and E7; throws unsupported_type otherwise.
 */
Enumeration telescope_enumeration(const RootSystem& rs);

} // namespace nokw

#endif // NOKW_WEYL_HPP
