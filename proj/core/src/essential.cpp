#include "nokw/essential.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <set>

#include "nokw/errors.hpp"
#include "nokw/linalg.hpp"

namespace nokw {

namespace {

bool all_zero(const std::vector<int>& r) {
    return std::all_of(r.begin(), r.end(), [](int c) { return c == 0; });
}

bool any_negative(const std::vector<int>& r) {
    return std::any_of(r.begin(), r.end(), [](int c) { return c < 0; });
}

/// Largest t >= 0 with t * beta <= r componentwise (beta a positive root, so
/// it has a strictly positive coordinate and the bound is finite).
int max_multiple(const std::vector<int>& beta, const std::vector<int>& r) {
    int t = std::numeric_limits<int>::max();
    bool bounded = false;
    for (std::size_t j = 0; j < beta.size(); ++j) {
        if (beta[j] > 0) {
            bounded = true;
            t = std::min(t, r[j] / beta[j]);
        }
    }
    require_internal(bounded, "positive root with no positive coordinate");
    return t;
}

void subtract_multiple(std::vector<int>& r, const std::vector<int>& beta, int t) {
    for (std::size_t j = 0; j < beta.size(); ++j) r[j] -= t * beta[j];
}

/// Memoized test of whether r is a nonnegative integer combination of the
/// first k listed roots.
class PrefixFeasibility {
public:
    explicit PrefixFeasibility(const std::vector<RootVec>& roots) : roots_(roots) {}

    bool can(int k, const std::vector<int>& r) {
        if (any_negative(r)) return false;
        if (all_zero(r)) return true;
        if (k <= 0) return false;
        auto key = std::make_pair(k, r);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        const auto& beta = roots_[static_cast<std::size_t>(k - 1)].coords;
        bool ok = false;
        std::vector<int> rest = r;
        const int tmax = max_multiple(beta, r);
        subtract_multiple(rest, beta, tmax);
        for (int t = tmax; t >= 0; --t) {
            if (can(k - 1, rest)) {
                ok = true;
                break;
            }
            for (std::size_t j = 0; j < beta.size(); ++j) rest[j] += beta[j];
        }
        memo_.emplace(std::move(key), ok);
        return ok;
    }

private:
    const std::vector<RootVec>& roots_;
    std::map<std::pair<int, std::vector<int>>, bool> memo_;
};

void require_support_contained(const RootSystem& rs, const Weight& lambda, const Enumeration& e) {
    for (int i : rs.support(lambda)) {
        if (!std::binary_search(e.supp.begin(), e.supp.end(), i))
            throw invalid_input("highest weight support is not contained in the enumeration support");
    }
}

} // namespace

int compare_tuples(const ExponentTuple& m, const ExponentTuple& k, TupleOrder order) {
    require_input(m.size() == k.size(), "cannot compare exponent tuples of different lengths");
    int result = 0;
    for (std::size_t pos = m.size(); pos-- > 0;) {
        if (m[pos] != k[pos]) {
            result = m[pos] < k[pos] ? -1 : 1;
            break;
        }
    }
    return order == TupleOrder::right_lex ? result : -result;
}

std::vector<ExponentTuple> kostant_partitions(const std::vector<int>& nu,
                                              const std::vector<RootVec>& allowed) {
    require_input(!allowed.empty(), "kostant_partitions needs a nonempty root list");
    const std::size_t rank = allowed.front().coords.size();
    require_input(nu.size() == rank, "target vector length does not match the root coordinates");
    for (const auto& beta : allowed)
        require_input(beta.coords.size() == rank, "roots of mixed coordinate lengths");

    const int n = static_cast<int>(allowed.size());
    PrefixFeasibility feasible(allowed);
    std::vector<ExponentTuple> out;
    ExponentTuple m(static_cast<std::size_t>(n), 0);

    // Positions are filled from the last root down, values descending, so
    // leaves appear ascending in the opposite right-lexicographic order.
    std::function<void(int, std::vector<int>&)> rec = [&](int k, std::vector<int>& r) {
        if (!feasible.can(k, r)) return;
        if (k == 0) {
            out.push_back(m);
            return;
        }
        const auto& beta = allowed[static_cast<std::size_t>(k - 1)].coords;
        const int tmax = max_multiple(beta, r);
        subtract_multiple(r, beta, tmax);
        for (int t = tmax; t >= 0; --t) {
            m[static_cast<std::size_t>(k - 1)] = t;
            rec(k - 1, r);
            for (std::size_t j = 0; j < beta.size(); ++j) r[j] += beta[j];
        }
        subtract_multiple(r, beta, 1); // the loop ends one increment past the start
        m[static_cast<std::size_t>(k - 1)] = 0;
    };

    std::vector<int> r = nu;
    if (!any_negative(r)) rec(n, r);
    return out;
}

EssentialSet essential_set(HighestWeightModule& module, const Enumeration& e) {
    const RootSystem& rs = module.root_system();
    const Weight& lambda = module.highest_weight();
    require_support_contained(rs, lambda, e);
    require_input(e.size() > 0, "empty enumeration");

    module.build_all();

    // Componentwise exponent budget: every weight of the module lies within
    // the box spanned by the built depth vectors.
    const std::size_t rank = static_cast<std::size_t>(rs.rank());
    std::vector<int> box(rank, 0);
    for (const auto& depth : module.weight_depths())
        for (std::size_t j = 0; j < rank; ++j) box[j] = std::max(box[j], depth[j]);

    EssentialSet es;
    es.lambda = lambda;
    es.enumeration = e;

    std::map<std::vector<int>, SpanTester> testers;
    long scan_rank = 0;
    const int n = e.size();
    ExponentTuple m(static_cast<std::size_t>(n), 0);

    // Fused scan: one depth-first pass over all tuples, positions filled from
    // the last root down with values descending (ascending opposite
    // right-lexicographic leaf order).  Zero partial vectors prune whole
    // subtrees, which in particular confines the walk to the weight diagram.
    std::function<void(int, std::vector<int>&, const ModuleVector&)> rec =
        [&](int k, std::vector<int>& budget, const ModuleVector& v) {
            if (k == 0) {
                auto it = testers.find(v.depth);
                if (it == testers.end()) {
                    const int dim = module.weight_multiplicity(v.depth);
                    require_internal(dim > 0, "nonzero vector in a zero weight space");
                    it = testers.emplace(v.depth, SpanTester(static_cast<std::size_t>(dim))).first;
                }
                if (it->second.insert(v.coords)) {
                    es.info.emplace(m, EssentialSet::TupleInfo{v.depth, scan_rank});
                    ++scan_rank;
                }
                return;
            }
            const auto& beta = e.roots[static_cast<std::size_t>(k - 1)];
            const int tmax = max_multiple(beta.coords, budget);
            std::vector<ModuleVector> powers;
            powers.push_back(v);
            for (int t = 1; t <= tmax; ++t) {
                ModuleVector next = module.apply_root_lowering(beta, powers.back());
                if (next.is_zero()) break;
                powers.push_back(std::move(next));
            }
            for (int t = static_cast<int>(powers.size()) - 1; t >= 0; --t) {
                m[static_cast<std::size_t>(k - 1)] = t;
                subtract_multiple(budget, beta.coords, t);
                rec(k - 1, budget, powers[static_cast<std::size_t>(t)]);
                subtract_multiple(budget, beta.coords, -t);
            }
            m[static_cast<std::size_t>(k - 1)] = 0;
        };

    std::vector<int> budget = box;
    rec(n, budget, module.highest_vector());

    // Completeness: the essential vectors of each weight class form a basis.
    for (const auto& depth : module.weight_depths()) {
        auto it = testers.find(depth);
        require_internal(it != testers.end(), "weight class never reached by the scan");
        require_internal(it->second.rank() == it->second.dim(),
                         "essential vectors fail to span a weight space");
    }
    require_internal(Int(static_cast<long>(es.info.size())) == rs.weyl_dim(lambda),
                     "essential set size differs from the module dimension");

    es.tuples.reserve(es.info.size());
    for (const auto& [tuple, info] : es.info) {
        (void)info;
        es.tuples.push_back(tuple);
    }
    std::sort(es.tuples.begin(), es.tuples.end(), [](const ExponentTuple& a, const ExponentTuple& b) {
        return compare_tuples(a, b, TupleOrder::right_lex) < 0;
    });
    return es;
}

bool is_essential(HighestWeightModule& module, const Enumeration& e, const ExponentTuple& m) {
    const RootSystem& rs = module.root_system();
    require_support_contained(rs, module.highest_weight(), e);
    require_input(static_cast<int>(m.size()) == e.size(),
                  "exponent tuple length does not match the enumeration");
    for (int c : m) require_input(c >= 0, "exponent tuples have nonnegative entries");

    const std::size_t rank = static_cast<std::size_t>(rs.rank());
    std::vector<int> nu(rank, 0);
    for (std::size_t k = 0; k < m.size(); ++k)
        for (std::size_t j = 0; j < rank; ++j) nu[j] += m[k] * e.roots[k].coords[j];

    const int dim = module.weight_multiplicity(nu);
    if (dim == 0) return false; // F^m v_lambda vanishes outside the weight diagram

    SpanTester tester(static_cast<std::size_t>(dim));
    for (const auto& tuple : kostant_partitions(nu, e.roots)) {
        if (compare_tuples(tuple, m, TupleOrder::opposite_right_lex) > 0)
            break; // everything after m in scan order is irrelevant
        ModuleVector v = module.pbw_monomial_vector(e, tuple);
        const bool fresh = !v.is_zero() && tester.insert(v.coords);
        if (tuple == m) return fresh;
    }
    throw internal_error("tuple missed by its own weight-class scan");
}

GammaLevel gamma_level(ModuleCache& cache, const RootSystem& rs, const Weight& lambda,
                       const Enumeration& e, long level) {
    require_input(level >= 1, "level must be a positive integer");
    Weight scaled = level * lambda;
    GammaLevel out;
    out.level = level;
    out.points = essential_set(cache.get(rs, scaled), e);
    return out;
}

std::vector<std::pair<ExponentTuple, ExponentTuple>> check_monoid_inclusion(
    const EssentialSet& es_mu, const EssentialSet& es_nu, const EssentialSet& es_sum) {
    require_input(es_mu.enumeration.same_frame(es_nu.enumeration) &&
                      es_mu.enumeration.same_frame(es_sum.enumeration),
                  "essential sets live in different enumeration frames");
    std::vector<std::pair<ExponentTuple, ExponentTuple>> violations;
    for (const auto& a : es_mu.tuples) {
        for (const auto& b : es_nu.tuples) {
            ExponentTuple sum(a.size());
            for (std::size_t k = 0; k < a.size(); ++k) sum[k] = a[k] + b[k];
            if (!es_sum.contains(sum)) violations.emplace_back(a, b);
        }
    }
    return violations;
}

bool minkowski_equality(const EssentialSet& es_mu, const EssentialSet& es_nu,
                        const EssentialSet& es_sum) {
    if (!check_monoid_inclusion(es_mu, es_nu, es_sum).empty()) return false;
    std::set<ExponentTuple> sums;
    for (const auto& a : es_mu.tuples) {
        for (const auto& b : es_nu.tuples) {
            ExponentTuple sum(a.size());
            for (std::size_t k = 0; k < a.size(); ++k) sum[k] = a[k] + b[k];
            sums.insert(std::move(sum));
        }
    }
    return sums.size() == es_sum.tuples.size();
}

SparseExponentPolynomial SparseExponentPolynomial::monomial(ExponentTuple m, const Rat& c) {
    SparseExponentPolynomial p(static_cast<int>(m.size()));
    p.add_term(m, c);
    return p;
}

void SparseExponentPolynomial::add_term(const ExponentTuple& m, const Rat& c) {
    require_input(static_cast<int>(m.size()) == nvars_,
                  "monomial exponent length does not match the variable count");
    for (int e : m) require_input(e >= 0, "monomial exponents are nonnegative");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

SparseExponentPolynomial SparseExponentPolynomial::operator+(
    const SparseExponentPolynomial& rhs) const {
    require_input(nvars_ == rhs.nvars_, "polynomials in different variable counts");
    SparseExponentPolynomial out = *this;
    for (const auto& [m, c] : rhs.terms_) out.add_term(m, c);
    return out;
}

SparseExponentPolynomial SparseExponentPolynomial::operator*(
    const SparseExponentPolynomial& rhs) const {
    require_input(nvars_ == rhs.nvars_, "polynomials in different variable counts");
    SparseExponentPolynomial out(nvars_);
    for (const auto& [a, ca] : terms_) {
        for (const auto& [b, cb] : rhs.terms_) {
            ExponentTuple m(a.size());
            for (std::size_t k = 0; k < a.size(); ++k) m[k] = a[k] + b[k];
            out.add_term(m, ca * cb);
        }
    }
    return out;
}

ExponentTuple lowest_term_valuation(const SparseExponentPolynomial& p) {
    require_input(!p.is_zero(), "the zero polynomial has no lowest term");
    const ExponentTuple* best = nullptr;
    for (const auto& [m, c] : p.terms()) {
        (void)c;
        if (best == nullptr || compare_tuples(m, *best, TupleOrder::right_lex) < 0) best = &m;
    }
    return *best;
}

} // namespace nokw
