#include "nokw/weyl.hpp"

#include <algorithm>
#include <set>

#include "nokw/errors.hpp"
#include "nokw/linalg.hpp"

namespace nokw {

namespace {

std::vector<std::vector<long>> identity_matrix(int n) {
    std::vector<std::vector<long>> m(n, std::vector<long>(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

std::vector<std::vector<long>> multiply(const std::vector<std::vector<long>>& a,
                                        const std::vector<std::vector<long>>& b) {
    const int n = static_cast<int>(a.size());
    std::vector<std::vector<long>> c(n, std::vector<long>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            if (a[i][k] == 0) continue;
            for (int j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

std::vector<std::vector<long>> invert_integer_matrix(const std::vector<std::vector<long>>& m) {
    const int n = static_cast<int>(m.size());
    RatMat a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = m[i][j];
    std::vector<std::vector<long>> inv(n, std::vector<long>(n, 0));
    for (int col = 0; col < n; ++col) {
        std::vector<Rat> e(n, Rat(0));
        e[col] = 1;
        const auto x = solve_linear(a, e);
        for (int i = 0; i < n; ++i) {
            require_internal(is_integer(x[i]), "Weyl matrix inverse must be integral");
            inv[i][col] = to_long(x[i]);
        }
    }
    return inv;
}

template <typename T>
std::vector<T> apply_matrix(const std::vector<std::vector<long>>& m, const std::vector<T>& x) {
    const int n = static_cast<int>(m.size());
    require_internal(static_cast<int>(x.size()) == n, "Weyl action dimension mismatch");
    std::vector<T> y(n, T(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (m[i][j] != 0) y[i] += static_cast<T>(m[i][j] * x[j]);
    return y;
}

bool coords_negative(const std::vector<int>& coords) {
    bool any_negative = false;
    for (int c : coords) any_negative = any_negative || c < 0;
    return any_negative;
}

} // namespace

WeylElement WeylElement::identity(int rank) {
    WeylElement w;
    w.wmat_ = identity_matrix(rank);
    w.rmat_ = identity_matrix(rank);
    return w;
}

WeylElement WeylElement::simple_reflection(const RootSystem& rs, int i) {
    require_input(i >= 0 && i < rs.rank(), "simple-reflection index out of range");
    const auto& cartan = rs.cartan();
    WeylElement w = identity(rs.rank());
    // Weight coordinates: (s_i lambda)_k = lambda_k - A[k][i] lambda_i.
    for (int k = 0; k < rs.rank(); ++k) w.wmat_[k][i] -= cartan[k][i];
    // Root coordinates: only the i-th coordinate changes,
    // (s_i c)_i = c_i - sum_j A[i][j] c_j.
    for (int j = 0; j < rs.rank(); ++j) w.rmat_[i][j] -= cartan[i][j];
    return w;
}

Weight WeylElement::apply(const Weight& lambda) const { return Weight{apply_matrix(wmat_, lambda.coords)}; }

std::vector<int> WeylElement::apply_to_root(const std::vector<int>& coords) const {
    return apply_matrix(rmat_, coords);
}

WeylElement WeylElement::operator*(const WeylElement& rhs) const {
    WeylElement w;
    w.wmat_ = multiply(wmat_, rhs.wmat_);
    w.rmat_ = multiply(rmat_, rhs.rmat_);
    return w;
}

WeylElement WeylElement::inverse() const {
    WeylElement w;
    w.wmat_ = invert_integer_matrix(wmat_);
    w.rmat_ = invert_integer_matrix(rmat_);
    return w;
}

long WeylElement::length(const RootSystem& rs) const {
    long inversions = 0;
    for (const auto& beta : rs.positive_roots())
        if (coords_negative(apply_to_root(beta.coords))) ++inversions;
    return inversions;
}

bool WeylElement::sends_positive(const RootSystem& rs, const RootVec& beta) const {
    require_input(rs.is_positive_root(beta.coords), "not a positive root of this system");
    return !coords_negative(apply_to_root(beta.coords));
}

WeylElement product_of_word(const RootSystem& rs, const std::vector<int>& word) {
    WeylElement w = WeylElement::identity(rs.rank());
    for (int i : word) w = w * WeylElement::simple_reflection(rs, i);
    return w;
}

bool is_reduced_word(const RootSystem& rs, const std::vector<int>& word) {
    return product_of_word(rs, word).length(rs) == static_cast<long>(word.size());
}

std::pair<WeylElement, std::vector<int>> longest_element(const RootSystem& rs, const std::vector<int>& S) {
    std::vector<int> sorted = S;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (int i : sorted) require_input(i >= 0 && i < rs.rank(), "Levi index out of range");

    WeylElement w = WeylElement::identity(rs.rank());
    std::vector<int> word;
    // Greedy ascent: appending s_i increases the length iff w(alpha_i) > 0.
    bool progressed = true;
    while (progressed) {
        progressed = false;
        for (int i : sorted) {
            if (w.sends_positive(rs, rs.simple_root(i))) {
                w = w * WeylElement::simple_reflection(rs, i);
                word.push_back(i);
                progressed = true;
                break;
            }
        }
    }
    require_internal(w.length(rs) == static_cast<long>(word.size()),
                     "greedy longest-element word is not reduced");
    require_internal(static_cast<long>(word.size()) ==
                         static_cast<long>(rs.levi_positive_roots(sorted).size()),
                     "longest-element length must equal the Levi positive-root count");
    return {w, word};
}

Weight reflect_weight(const RootSystem& rs, const RootVec& beta, const Weight& lambda) {
    const long pairing = rs.coroot_pairing(lambda, beta);
    const auto beta_wc = rs.root_to_weight_coords(beta.coords);
    Weight out = lambda;
    for (int k = 0; k < rs.rank(); ++k) out.coords[k] -= pairing * beta_wc[k];
    return out;
}

int Enumeration::position_of(const RootVec& beta) const {
    for (int k = 0; k < size(); ++k)
        if (roots[k] == beta) return k;
    return -1;
}

std::vector<int> full_support(const RootSystem& rs) {
    std::vector<int> supp(rs.rank());
    for (int i = 0; i < rs.rank(); ++i) supp[i] = i;
    return supp;
}

Enumeration good_ordering(const RootSystem& rs, const std::vector<int>& supp) {
    Enumeration e;
    e.kind = EnumKind::good;
    e.supp = supp;
    std::sort(e.supp.begin(), e.supp.end());
    e.supp.erase(std::unique(e.supp.begin(), e.supp.end()), e.supp.end());
    e.roots = rs.parabolic_positive_roots(e.supp);
    return e;
}

bool is_good_ordering(const Enumeration& e) {
    for (int i = 0; i < e.size(); ++i)
        for (int j = i + 1; j < e.size(); ++j)
            if (root_dominates(e.roots[i], e.roots[j])) return false;
    return true;
}

Enumeration enumeration_from_word(const RootSystem& rs, const std::vector<int>& supp,
                                  const std::vector<int>& word, EnumKind variant) {
    require_input(variant == EnumKind::word_prefix || variant == EnumKind::word_suffix,
                  "word-induced enumerations are prefix or suffix");
    Enumeration e;
    e.kind = variant;
    e.supp = supp;
    std::sort(e.supp.begin(), e.supp.end());
    e.supp.erase(std::unique(e.supp.begin(), e.supp.end()), e.supp.end());

    const auto parabolic = rs.parabolic_positive_roots(e.supp);
    const int N = static_cast<int>(parabolic.size());
    require_input(static_cast<int>(word.size()) == N,
                  "word length must equal the number of parabolic positive roots");
    for (int i : word) require_input(i >= 0 && i < rs.rank(), "word letter out of range");

    std::vector<int> levi;
    for (int i = 0; i < rs.rank(); ++i)
        if (!std::binary_search(e.supp.begin(), e.supp.end(), i)) levi.push_back(i);
    auto [w_levi, levi_word] = longest_element(rs, levi);

    std::vector<int> full = (variant == EnumKind::word_prefix) ? levi_word : word;
    const std::vector<int>& tail = (variant == EnumKind::word_prefix) ? word : levi_word;
    full.insert(full.end(), tail.begin(), tail.end());
    require_input(is_reduced_word(rs, full) &&
                      static_cast<int>(full.size()) == rs.num_positive(),
                  "word does not complete the Levi longest word to a reduced "
                  "decomposition of the longest element");

    e.roots.resize(N);
    if (variant == EnumKind::word_prefix) {
        WeylElement w = w_levi;
        for (int k = 0; k < N; ++k) {
            e.roots[k] = RootVec{w.apply_to_root(rs.simple_root(word[k]).coords)};
            w = w * WeylElement::simple_reflection(rs, word[k]);
        }
    } else {
        WeylElement w = w_levi;
        for (int k = N - 1; k >= 0; --k) {
            e.roots[k] = RootVec{w.apply_to_root(rs.simple_root(word[k]).coords)};
            w = w * WeylElement::simple_reflection(rs, word[k]);
        }
    }
    e.word = word;

    std::set<std::vector<int>> expected, produced;
    for (const auto& beta : parabolic) expected.insert(beta.coords);
    for (const auto& beta : e.roots) produced.insert(beta.coords);
    require_internal(produced == expected && static_cast<int>(produced.size()) == N,
                     "word-induced listing is not a bijection onto the parabolic positive system");
    return e;
}

Enumeration telescope_enumeration(const RootSystem& rs) {
    const int n = rs.rank();
    std::vector<int> sigma;
    switch (rs.type().series) {
        case 'A':
        case 'C':
        case 'D':
            for (int i = 0; i < n; ++i) sigma.push_back(i);
            break;
        case 'B':
            for (int i = n - 1; i >= 0; --i) sigma.push_back(i);
            break;
        case 'E':
            if (n == 6) sigma = {5, 4, 3, 2, 1, 0};
            else if (n == 7) sigma = {5, 4, 3, 2, 1, 0, 6};
            else throw unsupported_type("the telescope construction is undefined for type E8");
            break;
        case 'F':
            throw unsupported_type("the telescope construction is undefined for type F4");
        case 'G':
            throw unsupported_type("the telescope construction is undefined for type G2");
        default:
            throw internal_error("unreachable series");
    }

    WeylElement w_prev = WeylElement::identity(n);
    long len_prev = 0;
    std::vector<int> block_word;
    std::vector<long> cumulative_lengths; // after each stage

    std::vector<std::vector<int>> stages(n + 1); // stages[j] = S_j (sorted), stages[0] empty
    for (int j = 1; j <= n; ++j) {
        stages[j] = stages[j - 1];
        stages[j].push_back(sigma[j - 1]);
        std::sort(stages[j].begin(), stages[j].end());

        auto [w_stage, stage_word] = longest_element(rs, stages[j]);
        const long len_stage = w_stage.length(rs);

        // tau_j = (w0^{j-1})^{-1} w0^j, with a reduced word extracted by
        // repeatedly peeling the smallest left descent.
        const WeylElement tau = w_prev.inverse() * w_stage;
        std::vector<int> tau_word;
        WeylElement u = tau.inverse();
        while (u.length(rs) > 0) {
            bool found = false;
            for (int i : stages[j]) {
                if (!u.sends_positive(rs, rs.simple_root(i))) {
                    tau_word.push_back(i);
                    u = u * WeylElement::simple_reflection(rs, i);
                    found = true;
                    break;
                }
            }
            require_internal(found, "stage block has no descent inside its own Levi");
        }
        require_internal(product_of_word(rs, tau_word) == tau, "stage word does not multiply to the block");
        require_internal(static_cast<long>(tau_word.size()) == len_stage - len_prev,
                         "stage lengths must be additive along the telescope");

        // Minimal coset representative: tau_j^{-1} keeps the previous stage's
        // simple roots positive.
        const WeylElement tau_inv = tau.inverse();
        for (int i : stages[j - 1])
            require_internal(tau_inv.sends_positive(rs, rs.simple_root(i)),
                             "stage block is not a minimal coset representative");

        // Cominuscule condition at this stage.
        const RootVec theta = rs.highest_root_of_levi(stages[j]);
        require_internal(rs.coroot_pairing(rs.fundamental_weight(sigma[j - 1]), theta) == 1,
                         "stage weight is not cominuscule for its Levi");

        block_word.insert(block_word.end(), tau_word.begin(), tau_word.end());
        cumulative_lengths.push_back(len_stage);
        w_prev = w_stage;
        len_prev = len_stage;
    }

    const int N = rs.num_positive();
    require_internal(static_cast<int>(block_word.size()) == N && is_reduced_word(rs, block_word),
                     "telescope block word is not a reduced word for the longest element");

    // Prefix listing of the block word, then reverse so that stage j's roots
    // sit in the tail.
    std::vector<RootVec> prefix_roots(N);
    std::vector<int> prefix_stage(N);
    {
        WeylElement w = WeylElement::identity(n);
        int stage = 1;
        for (int k = 0; k < N; ++k) {
            while (k >= cumulative_lengths[stage - 1]) ++stage;
            prefix_roots[k] = RootVec{w.apply_to_root(rs.simple_root(block_word[k]).coords)};
            prefix_stage[k] = stage;
            w = w * WeylElement::simple_reflection(rs, block_word[k]);
        }
    }

    Enumeration e;
    e.kind = EnumKind::telescope;
    e.supp = full_support(rs);
    e.word = block_word;
    e.relabeling = sigma;
    e.roots.resize(N);
    e.shells.resize(N);
    for (int p = 0; p < N; ++p) {
        e.roots[p] = prefix_roots[N - 1 - p];
        e.shells[p] = prefix_stage[N - 1 - p];
    }

    std::set<std::vector<int>> produced;
    for (const auto& beta : e.roots) {
        require_internal(rs.is_positive_root(beta.coords), "telescope listing contains a non-root");
        produced.insert(beta.coords);
    }
    require_internal(static_cast<int>(produced.size()) == N,
                     "telescope listing is not a bijection onto the positive system");

    // Shell property: the union of the first j stages is exactly the Levi
    // positive system of S_j and occupies the last len(w0^j) positions.
    for (int j = 1; j <= n; ++j) {
        const long count = cumulative_lengths[j - 1];
        std::set<std::vector<int>> tail_roots, levi_roots;
        for (int p = 0; p < N; ++p) {
            const bool in_tail = p >= N - count;
            require_internal((e.shells[p] <= j) == in_tail,
                             "telescope shells do not occupy tail segments");
            if (in_tail) tail_roots.insert(e.roots[p].coords);
        }
        for (const auto& beta : rs.levi_positive_roots(stages[j])) levi_roots.insert(beta.coords);
        require_internal(tail_roots == levi_roots,
                         "telescope shells do not exhaust the stage Levi positive system");
    }
    return e;
}

} // namespace nokw
