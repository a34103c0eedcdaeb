#include "nokw/repmod.hpp"

#include <algorithm>
#include <set>

#include "nokw/errors.hpp"

namespace nokw {

namespace {

std::vector<int> depth_step(const std::vector<int>& nu, int i, int delta) {
    std::vector<int> out = nu;
    out[i] += delta;
    return out;
}

std::vector<int> depth_plus_root(const std::vector<int>& nu, const RootVec& beta) {
    std::vector<int> out = nu;
    for (std::size_t k = 0; k < out.size(); ++k) out[k] += beta.coords[k];
    return out;
}

bool depth_nonnegative(const std::vector<int>& nu) {
    return std::all_of(nu.begin(), nu.end(), [](int c) { return c >= 0; });
}

bool depth_is_zero(const std::vector<int>& nu) {
    return std::all_of(nu.begin(), nu.end(), [](int c) { return c == 0; });
}

std::vector<int> letter_counts(int rank, const LoweringWord& w) {
    std::vector<int> counts(rank, 0);
    for (int letter : w) ++counts[letter];
    return counts;
}

} // namespace

RootVectorExpr root_vector_expr(const RootSystem& rs, const RootVec& beta) {
    require_input(rs.is_positive_root(beta.coords), "root-vector expression requires a positive root");
    if (rs.height(beta) == 1) {
        int letter = 0;
        while (beta.coords[letter] == 0) ++letter;
        RootVectorExpr expr{beta, {}};
        expr.expansion.emplace(LoweringWord{letter}, Rat(1));
        return expr;
    }
    for (int i = 0; i < rs.rank(); ++i) {
        if (beta.coords[i] == 0) continue;
        RootVec gamma = beta;
        gamma.coords[i] -= 1;
        if (!rs.is_positive_root(gamma.coords)) continue;
        const RootVectorExpr inner = root_vector_expr(rs, gamma);
        RootVectorExpr expr{beta, {}};
        for (const auto& [word, coeff] : inner.expansion) {
            LoweringWord left{i};
            left.insert(left.end(), word.begin(), word.end());
            LoweringWord right = word;
            right.push_back(i);
            expr.expansion[left] += coeff;
            expr.expansion[right] -= coeff;
        }
        for (auto it = expr.expansion.begin(); it != expr.expansion.end();)
            it = (it->second == 0) ? expr.expansion.erase(it) : std::next(it);
        require_internal(!expr.expansion.empty(), "commutator expansion collapsed to zero");
        return expr;
    }
    throw internal_error("no simple root peels off a positive root of height >= 2");
}

ShapovalovEvaluator::ShapovalovEvaluator(const RootSystem& rs, Weight lambda)
    : rs_(rs), lambda_(std::move(lambda)) {
    require_input(static_cast<int>(lambda_.coords.size()) == rs_.rank(), "weight rank mismatch");
}

Rat ShapovalovEvaluator::pair(const LoweringWord& u, const LoweringWord& w) {
    if (letter_counts(rs_.rank(), u) != letter_counts(rs_.rank(), w)) return 0;
    if (u.empty()) return 1;
    const auto key = std::make_pair(u, w);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    // Peel the first letter of u: <f_i u', w> = <u', e_i w>.  Moving e_i past
    // the letters of w picks up, at each occurrence of i, the pairing of the
    // tail weight with alpha_i^vee.
    const int i = u.front();
    const LoweringWord rest(u.begin() + 1, u.end());
    const auto& cartan = rs_.cartan();

    Rat acc = 0;
    // tail_pairing(t) = <lambda - sum_{s>t} alpha_{w_s}, alpha_i^vee>
    std::vector<long> tail_pairing(w.size());
    long drop = 0;
    for (std::size_t t = w.size(); t-- > 0;) {
        tail_pairing[t] = lambda_.coords[i] - drop;
        drop += cartan[i][w[t]];
    }
    for (std::size_t t = 0; t < w.size(); ++t) {
        if (w[t] != i || tail_pairing[t] == 0) continue;
        LoweringWord dropped;
        dropped.reserve(w.size() - 1);
        dropped.insert(dropped.end(), w.begin(), w.begin() + t);
        dropped.insert(dropped.end(), w.begin() + t + 1, w.end());
        acc += Rat(tail_pairing[t]) * pair(rest, dropped);
    }
    memo_.emplace(key, acc);
    return acc;
}

Rat shapovalov_pair(const RootSystem& rs, const Weight& lambda, const LoweringWord& u,
                    const LoweringWord& w) {
    ShapovalovEvaluator eval(rs, lambda);
    return eval.pair(u, w);
}

HighestWeightModule::HighestWeightModule(const RootSystem& rs, Weight lambda)
    : rs_(rs), lambda_(std::move(lambda)), lambda_wc_(lambda_.coords) {
    require_input(static_cast<int>(lambda_.coords.size()) == rs_.rank(), "weight rank mismatch");
    require_input(rs_.is_dominant(lambda_), "highest weight must be dominant integral");
}

Weight HighestWeightModule::weight_of_depth(const std::vector<int>& depth) const {
    const auto wc = rs_.root_to_weight_coords(depth);
    Weight out = lambda_;
    for (int k = 0; k < rs_.rank(); ++k) out.coords[k] -= wc[k];
    return out;
}

const HighestWeightModule::WeightSpace& HighestWeightModule::space(const std::vector<int>& depth) {
    require_input(static_cast<int>(depth.size()) == rs_.rank() && depth_nonnegative(depth),
                  "weight-space depth must be a nonnegative root-lattice vector");
    return ensure_space(depth);
}

int HighestWeightModule::weight_multiplicity(const std::vector<int>& depth) {
    return space(depth).dim();
}

const HighestWeightModule::WeightSpace& HighestWeightModule::ensure_space(const std::vector<int>& depth) {
    if (auto it = spaces_.find(depth); it != spaces_.end()) return it->second;

    const int n = rs_.rank();
    WeightSpace ws;
    ws.lowering_in.resize(n);
    ws.raising_out.resize(n);

    if (depth_is_zero(depth)) {
        ws.basis = {LoweringWord{}};
        ws.gram = RatMat(1, 1);
        ws.gram(0, 0) = 1;
        return spaces_.emplace(depth, std::move(ws)).first->second;
    }

    // Parents first; std::map keeps references stable across insertions.
    std::vector<const WeightSpace*> parent(n, nullptr);
    for (int i = 0; i < n; ++i)
        if (depth[i] > 0) parent[i] = &ensure_space(depth_step(depth, i, -1));

    // Candidate vectors f_i u_p in (parent position, letter) order.
    struct Cand {
        int letter;
        int parent_pos;
    };
    std::vector<Cand> cands;
    std::map<std::pair<int, int>, int> cand_index; // (letter, parent_pos) -> candidate slot
    int max_parent_dim = 0;
    for (int i = 0; i < n; ++i)
        if (parent[i]) max_parent_dim = std::max(max_parent_dim, parent[i]->dim());
    for (int p = 0; p < max_parent_dim; ++p)
        for (int i = 0; i < n; ++i)
            if (parent[i] && p < parent[i]->dim()) {
                cand_index.emplace(std::make_pair(i, p), static_cast<int>(cands.size()));
                cands.push_back({i, p});
            }

    const int c = static_cast<int>(cands.size());
    if (c == 0) {
        for (int i = 0; i < n; ++i)
            if (parent[i]) {
                ws.lowering_in[i] = RatMat(0, parent[i]->dim());
                ws.raising_out[i] = RatMat(parent[i]->dim(), 0);
            }
        return spaces_.emplace(depth, std::move(ws)).first->second;
    }

    // h_i eigenvalue on the parent space at depth - e_i.
    std::vector<long> hpair(n, 0);
    for (int i = 0; i < n; ++i) {
        if (!parent[i]) continue;
        long acc = lambda_wc_[i];
        for (int k = 0; k < n; ++k) acc -= rs_.cartan()[i][k] * (depth[k] - (k == i ? 1 : 0));
        hpair[i] = acc;
    }

    // T[i][j]: parent_j -> parent_i, u |-> f_j(e_i(u)); zero when the
    // intermediate depth leaves the cone.  P[i][j] = gram_i * T[i][j] holds
    // the cross inner products <u_p, f_j e_i u_q>.
    std::vector<std::vector<RatMat>> T(n, std::vector<RatMat>(n));
    std::vector<std::vector<RatMat>> P(n, std::vector<RatMat>(n));
    for (int i = 0; i < n; ++i) {
        if (!parent[i]) continue;
        for (int j = 0; j < n; ++j) {
            if (!parent[j]) continue;
            const std::vector<int> mid = depth_step(depth_step(depth, i, -1), j, -1);
            if (!depth_nonnegative(mid)) {
                T[i][j] = RatMat(parent[i]->dim(), parent[j]->dim());
            } else {
                // e_i out of parent_j lands at `mid`; f_j brings it into parent_i.
                T[i][j] = parent[i]->lowering_in[j] * parent[j]->raising_out[i];
            }
            P[i][j] = parent[i]->gram * T[i][j];
        }
    }

    RatMat cand_gram(c, c);
    for (int a = 0; a < c; ++a)
        for (int b = 0; b < c; ++b) {
            const auto [i, p] = cands[a];
            const auto [j, q] = cands[b];
            Rat val = P[i][j](p, q);
            if (i == j) val += Rat(hpair[i]) * parent[i]->gram(p, q);
            cand_gram(a, b) = val;
        }

    const auto kept = greedy_independent_subset(cand_gram);
    const int d = static_cast<int>(kept.size());

    ws.basis.reserve(d);
    for (const auto s : kept) {
        LoweringWord word{cands[s].letter};
        const LoweringWord& parent_word = parent[cands[s].letter]->basis[cands[s].parent_pos];
        word.insert(word.end(), parent_word.begin(), parent_word.end());
        ws.basis.push_back(std::move(word));
    }
    ws.gram = RatMat(d, d);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) ws.gram(a, b) = cand_gram(kept[a], kept[b]);

    // f_i images of the parent's basis, written in the new basis by solving
    // against the (positive definite) Gram matrix.
    for (int i = 0; i < n; ++i) {
        if (!parent[i]) continue;
        RatMat m(d, parent[i]->dim());
        for (int p = 0; p < parent[i]->dim(); ++p) {
            const int a = cand_index.at(std::make_pair(i, p));
            std::vector<Rat> rhs(d);
            for (int s = 0; s < d; ++s) rhs[s] = cand_gram(kept[s], a);
            const auto x = solve_linear(ws.gram, rhs);
            for (int s = 0; s < d; ++s) m(s, p) = x[s];
        }
        ws.lowering_in[i] = std::move(m);
    }

    // e_i images of the new basis vectors: e_i(f_j u_q) = f_j e_i u_q +
    // delta_ij * hpair * u_q, all expressed in the parent-space basis.
    for (int i = 0; i < n; ++i) {
        if (!parent[i]) continue;
        RatMat m(parent[i]->dim(), d);
        for (int s = 0; s < d; ++s) {
            const auto [j, q] = cands[kept[s]];
            for (int r = 0; r < parent[i]->dim(); ++r) m(r, s) = T[i][j](r, q);
            if (i == j) m(q, s) += hpair[i];
        }
        ws.raising_out[i] = std::move(m);
    }

    return spaces_.emplace(depth, std::move(ws)).first->second;
}

void HighestWeightModule::build_all() {
    if (fully_built_) return;
    const int n = rs_.rank();
    std::vector<std::vector<int>> current{std::vector<int>(n, 0)};
    ensure_space(current.front());
    while (!current.empty()) {
        std::set<std::vector<int>> next;
        for (const auto& nu : current)
            for (int i = 0; i < n; ++i) {
                const auto child = depth_step(nu, i, +1);
                if (ensure_space(child).dim() > 0) next.insert(child);
            }
        current.assign(next.begin(), next.end());
    }
    Int total = 0;
    for (const auto& [depth, space] : spaces_) {
        (void)depth;
        total += space.dim();
    }
    require_internal(total == rs_.weyl_dim(lambda_),
                     "weight-space dimensions do not sum to the Weyl dimension");
    fully_built_ = true;
}

std::vector<std::vector<int>> HighestWeightModule::weight_depths() const {
    require_internal(fully_built_, "weight_depths requires build_all()");
    std::vector<std::vector<int>> out;
    for (const auto& [depth, space] : spaces_)
        if (space.dim() > 0) out.push_back(depth);
    return out;
}

ModuleVector HighestWeightModule::highest_vector() const {
    return ModuleVector{std::vector<int>(rs_.rank(), 0), {Rat(1)}};
}

void HighestWeightModule::set_generator_scale(const RootVec& beta, const Rat& scale) {
    require_input(rs_.is_positive_root(beta.coords), "generator scale requires a positive root");
    require_input(scale != 0, "generator scale must be nonzero");
    scales_[beta.coords] = scale;
}

Rat HighestWeightModule::generator_scale(const RootVec& beta) const {
    auto it = scales_.find(beta.coords);
    return it == scales_.end() ? Rat(1) : it->second;
}

ModuleVector HighestWeightModule::apply_simple_lowering(int i, const ModuleVector& v) {
    require_input(i >= 0 && i < rs_.rank(), "simple index out of range");
    const auto target = depth_step(v.depth, i, +1);
    const RatMat& m = root_lowering_matrix(rs_.simple_root(i), v.depth);
    return ModuleVector{target, m.apply(v.coords)};
}

ModuleVector HighestWeightModule::apply_root_lowering(const RootVec& beta, const ModuleVector& v) {
    const auto target = depth_plus_root(v.depth, beta);
    const RatMat& m = root_lowering_matrix(beta, v.depth);
    auto coords = m.apply(v.coords);
    const Rat scale = generator_scale(beta);
    if (scale != 1)
        for (auto& x : coords) x *= scale;
    return ModuleVector{target, std::move(coords)};
}

ModuleVector HighestWeightModule::apply_expr_words(const RootVectorExpr& expr, const ModuleVector& v) {
    const auto target = depth_plus_root(v.depth, expr.beta);
    std::vector<Rat> acc(ensure_space(target).dim(), Rat(0));
    for (const auto& [word, coeff] : expr.expansion) {
        ModuleVector cur = v;
        for (std::size_t t = word.size(); t-- > 0;) cur = apply_simple_lowering(word[t], cur);
        require_internal(cur.depth == target, "expression term landed at the wrong depth");
        for (std::size_t k = 0; k < acc.size(); ++k) acc[k] += coeff * cur.coords[k];
    }
    return ModuleVector{target, std::move(acc)};
}

const RatMat& HighestWeightModule::root_lowering_matrix(const RootVec& beta,
                                                        const std::vector<int>& from_depth) {
    require_input(rs_.is_positive_root(beta.coords), "lowering requires a positive root");
    const auto key = std::make_pair(beta.coords, from_depth);
    if (auto it = lowering_memo_.find(key); it != lowering_memo_.end()) return it->second;

    const auto to_depth = depth_plus_root(from_depth, beta);
    const int rows = ensure_space(to_depth).dim();
    const int cols = ensure_space(from_depth).dim();

    RatMat m;
    if (rs_.height(beta) == 1) {
        int letter = 0;
        while (beta.coords[letter] == 0) ++letter;
        if (rows == 0 || cols == 0)
            m = RatMat(rows, cols);
        else
            m = spaces_.at(to_depth).lowering_in[letter];
    } else {
        int i = 0;
        RootVec gamma = beta;
        for (;; ++i) {
            require_internal(i < rs_.rank(), "no simple root peels off the commutator argument");
            if (beta.coords[i] == 0) continue;
            gamma = beta;
            gamma.coords[i] -= 1;
            if (rs_.is_positive_root(gamma.coords)) break;
        }
        const RootVec alpha = rs_.simple_root(i);
        // F_beta = F_i F_gamma - F_gamma F_i on this weight space.
        const RatMat a = root_lowering_matrix(alpha, depth_plus_root(from_depth, gamma));
        const RatMat b = root_lowering_matrix(gamma, from_depth);
        const RatMat c = root_lowering_matrix(gamma, depth_step(from_depth, i, +1));
        const RatMat d = root_lowering_matrix(alpha, from_depth);
        m = a * b - c * d;
    }
    return lowering_memo_.emplace(key, std::move(m)).first->second;
}

ModuleVector HighestWeightModule::pbw_monomial_vector(const Enumeration& e, const std::vector<int>& m) {
    require_input(static_cast<int>(m.size()) == e.size(), "exponent tuple length mismatch");
    std::vector<int> target(rs_.rank(), 0);
    for (int k = 0; k < e.size(); ++k) {
        require_input(m[k] >= 0, "exponents must be nonnegative");
        for (int x = 0; x < rs_.rank(); ++x) target[x] += m[k] * e.roots[k].coords[x];
    }
    ModuleVector v = highest_vector();
    for (int k = e.size() - 1; k >= 0; --k) {
        for (int t = 0; t < m[k]; ++t) {
            v = apply_root_lowering(e.roots[k], v);
            if (v.is_zero())
                return ModuleVector{target, std::vector<Rat>(ensure_space(target).dim(), Rat(0))};
        }
    }
    return v;
}

bool HighestWeightModule::in_span(const ModuleVector& v, const std::vector<ModuleVector>& S) {
    for (const auto& s : S)
        require_input(s.depth == v.depth, "span test requires vectors of a single weight");
    if (v.is_zero()) return true;
    const auto& ws = ensure_space(v.depth);
    require_internal(static_cast<int>(v.coords.size()) == ws.dim(),
                     "vector coordinates do not match its weight space");
    for (const auto& s : S)
        require_internal(static_cast<int>(s.coords.size()) == ws.dim(),
                         "vector coordinates do not match its weight space");

    auto form = [&](const ModuleVector& x, const ModuleVector& y) {
        const auto gy = ws.gram.apply(y.coords);
        Rat acc = 0;
        for (std::size_t k = 0; k < gy.size(); ++k) acc += x.coords[k] * gy[k];
        return acc;
    };

    const std::size_t ns = S.size();
    RatMat small(ns, ns), big(ns + 1, ns + 1);
    for (std::size_t a = 0; a < ns; ++a)
        for (std::size_t b = 0; b < ns; ++b) {
            small(a, b) = form(S[a], S[b]);
            big(a, b) = small(a, b);
        }
    for (std::size_t a = 0; a < ns; ++a) {
        big(a, ns) = form(S[a], v);
        big(ns, a) = big(a, ns);
    }
    big(ns, ns) = form(v, v);
    return rank_exact(big) == rank_exact(small);
}

std::map<LoweringWord, Rat> HighestWeightModule::word_terms(const ModuleVector& v) {
    const auto& ws = ensure_space(v.depth);
    std::map<LoweringWord, Rat> terms;
    for (int s = 0; s < ws.dim(); ++s)
        if (v.coords[s] != 0) terms.emplace(ws.basis[s], v.coords[s]);
    return terms;
}

HighestWeightModule& ModuleCache::get(const RootSystem& rs, const Weight& lambda) {
    Key key{rs.type().series, rs.rank(), lambda.coords};
    auto it = modules_.find(key);
    if (it == modules_.end())
        it = modules_.emplace(std::move(key), std::make_unique<HighestWeightModule>(rs, lambda)).first;
    return *it->second;
}

} // namespace nokw
