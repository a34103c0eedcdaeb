#include "nokw/rootsys.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "nokw/errors.hpp"
#include "nokw/linalg.hpp"

namespace nokw {

CartanType make_cartan_type(char series, int rank) {
    switch (series) {
        case 'A': require_input(rank >= 1, "type A requires rank >= 1"); break;
        case 'B': require_input(rank >= 2, "type B requires rank >= 2"); break;
        case 'C': require_input(rank >= 2, "type C requires rank >= 2"); break;
        case 'D': require_input(rank >= 4, "type D requires rank >= 4"); break;
        case 'E': require_input(rank >= 6 && rank <= 8, "type E requires rank in {6,7,8}"); break;
        case 'F': require_input(rank == 4, "type F requires rank 4"); break;
        case 'G': require_input(rank == 2, "type G requires rank 2"); break;
        default: throw invalid_input(std::string("unknown series letter '") + series + "'");
    }
    return CartanType{series, rank};
}

Weight operator+(const Weight& a, const Weight& b) {
    require_internal(a.coords.size() == b.coords.size(), "weight size mismatch");
    Weight out = a;
    for (std::size_t i = 0; i < out.coords.size(); ++i) out.coords[i] += b.coords[i];
    return out;
}

Weight operator-(const Weight& a, const Weight& b) {
    require_internal(a.coords.size() == b.coords.size(), "weight size mismatch");
    Weight out = a;
    for (std::size_t i = 0; i < out.coords.size(); ++i) out.coords[i] -= b.coords[i];
    return out;
}

Weight operator*(long c, const Weight& a) {
    Weight out = a;
    for (auto& x : out.coords) x *= c;
    return out;
}

bool root_dominates(const RootVec& beta, const RootVec& gamma) {
    require_internal(beta.coords.size() == gamma.coords.size(), "root size mismatch");
    bool strict = false;
    for (std::size_t i = 0; i < beta.coords.size(); ++i) {
        const int d = beta.coords[i] - gamma.coords[i];
        if (d < 0) return false;
        if (d > 0) strict = true;
    }
    return strict;
}

RootSystem::RootSystem(CartanType t) : type_(make_cartan_type(t.series, t.rank)) {
    build_cartan();
    build_symmetrizer();
    build_positive_roots();
}

void RootSystem::build_cartan() {
    const int n = type_.rank;
    cartan_.assign(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) cartan_[i][i] = 2;

    auto edge = [&](int i, int j, int aij, int aji) {
        cartan_[i][j] = aij;
        cartan_[j][i] = aji;
    };
    auto chain = [&](int from, int to) {
        for (int i = from; i < to; ++i) edge(i, i + 1, -1, -1);
    };

    switch (type_.series) {
        case 'A':
            chain(0, n - 1);
            break;
        case 'B':
            // Last simple root short: the double arrow points at it.
            chain(0, n - 2);
            edge(n - 2, n - 1, -1, -2);
            break;
        case 'C':
            // Last simple root long.
            chain(0, n - 2);
            edge(n - 2, n - 1, -2, -1);
            break;
        case 'D':
            chain(0, n - 3);
            edge(n - 3, n - 2, -1, -1);
            edge(n - 3, n - 1, -1, -1);
            break;
        case 'E':
            // Bourbaki: chain 1-3-4-5-...(n), with node 2 hanging off node 4.
            edge(0, 2, -1, -1);
            edge(1, 3, -1, -1);
            for (int i = 2; i < n - 1; ++i) edge(i, i + 1, -1, -1);
            break;
        case 'F':
            edge(0, 1, -1, -1);
            edge(1, 2, -1, -2);
            edge(2, 3, -1, -1);
            break;
        case 'G':
            // Fixed convention: first simple root long, second short.
            edge(0, 1, -1, -3);
            break;
        default:
            throw internal_error("unreachable series");
    }
}

void RootSystem::build_symmetrizer() {
    const int n = type_.rank;
    // Propagate d_j = d_i * A[i][j] / A[j][i] along Dynkin edges (the diagram
    // of a simple type is connected), then scale to the smallest positive
    // integer solution.
    std::vector<Rat> d(n, Rat(0));
    d[0] = 1;
    std::queue<int> queue;
    queue.push(0);
    while (!queue.empty()) {
        const int i = queue.front();
        queue.pop();
        for (int j = 0; j < n; ++j) {
            if (j == i || cartan_[i][j] == 0 || d[j] != 0) continue;
            d[j] = d[i] * cartan_[i][j] / cartan_[j][i];
            queue.push(j);
        }
    }
    Int den_lcm = 1;
    for (const auto& x : d) {
        require_internal(x > 0, "symmetrizer propagation failed (disconnected diagram?)");
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den().get_mpz_t());
    }
    std::vector<Int> nums(n);
    Int num_gcd = 0;
    for (int i = 0; i < n; ++i) {
        nums[i] = d[i].get_num() * (den_lcm / d[i].get_den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), nums[i].get_mpz_t());
    }
    sym_.resize(n);
    for (int i = 0; i < n; ++i) {
        const Int v = nums[i] / num_gcd;
        require_internal(v.fits_slong_p(), "symmetrizer entry out of range");
        sym_[i] = v.get_si();
    }
    RatMat symmetrized(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            require_internal(sym_[i] * cartan_[i][j] == sym_[j] * cartan_[j][i],
                             "symmetrizer does not symmetrize the Cartan matrix");
            symmetrized(i, j) = sym_[i] * cartan_[i][j];
        }
    require_internal(leading_principal_minors_positive(symmetrized),
                     "symmetrized Cartan matrix is not positive definite");
}

void RootSystem::build_positive_roots() {
    const int n = type_.rank;
    std::map<std::vector<int>, bool> seen;
    std::vector<std::vector<int>> current;
    for (int i = 0; i < n; ++i) {
        std::vector<int> alpha(n, 0);
        alpha[i] = 1;
        seen.emplace(alpha, true);
        current.push_back(alpha);
    }
    // Height-by-height closure: beta + alpha_i is a root iff the alpha_i
    // string through beta continues upward, i.e. q = p - <beta, alpha_i^vee>
    // is positive, where p is the largest k with beta - k alpha_i a root.
    while (!current.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& beta : current) {
            for (int i = 0; i < n; ++i) {
                long pairing = 0;
                for (int j = 0; j < n; ++j) pairing += cartan_[i][j] * beta[j];
                long p = 0;
                std::vector<int> down = beta;
                while (true) {
                    down[i] -= 1;
                    if (down[i] < 0) break;
                    bool zero = std::all_of(down.begin(), down.end(), [](int c) { return c == 0; });
                    if (zero || !seen.count(down)) break;
                    ++p;
                }
                if (p - pairing <= 0) continue;
                std::vector<int> up = beta;
                up[i] += 1;
                if (seen.emplace(up, true).second) next.push_back(up);
            }
        }
        current = std::move(next);
    }

    positive_.clear();
    for (const auto& [coords, flag] : seen) {
        (void)flag;
        positive_.push_back(RootVec{coords});
    }
    std::sort(positive_.begin(), positive_.end(), [this](const RootVec& a, const RootVec& b) {
        const long ha = height(a), hb = height(b);
        if (ha != hb) return ha < hb;
        return a.coords < b.coords;
    });
    index_.clear();
    for (int k = 0; k < static_cast<int>(positive_.size()); ++k) index_.emplace(positive_[k].coords, k);

    long expected = 0;
    switch (type_.series) {
        case 'A': expected = static_cast<long>(n) * (n + 1) / 2; break;
        case 'B':
        case 'C': expected = static_cast<long>(n) * n; break;
        case 'D': expected = static_cast<long>(n) * (n - 1); break;
        case 'E': expected = (n == 6) ? 36 : (n == 7) ? 63 : 120; break;
        case 'F': expected = 24; break;
        case 'G': expected = 6; break;
        default: throw internal_error("unreachable series");
    }
    require_internal(static_cast<long>(positive_.size()) == expected,
                     "positive-root closure produced the wrong count for " + type_.name());
}

RootVec RootSystem::simple_root(int i) const {
    require_input(i >= 0 && i < type_.rank, "simple-root index out of range");
    std::vector<int> coords(type_.rank, 0);
    coords[i] = 1;
    return RootVec{coords};
}

bool RootSystem::is_positive_root(const std::vector<int>& coords) const { return index_.count(coords) > 0; }

int RootSystem::root_index(const RootVec& beta) const {
    auto it = index_.find(beta.coords);
    return it == index_.end() ? -1 : it->second;
}

long RootSystem::height(const RootVec& beta) const {
    return std::accumulate(beta.coords.begin(), beta.coords.end(), 0L);
}

long RootSystem::half_square_length(const RootVec& beta) const {
    long twice = 0;
    for (int i = 0; i < type_.rank; ++i)
        for (int j = 0; j < type_.rank; ++j)
            twice += static_cast<long>(beta.coords[i]) * beta.coords[j] * sym_[i] * cartan_[i][j];
    require_internal(twice > 0 && twice % 2 == 0, "squared root length must be a positive even integer");
    return twice / 2;
}

long RootSystem::coroot_pairing(const Weight& lambda, const RootVec& beta) const {
    require_input(static_cast<int>(lambda.coords.size()) == type_.rank, "weight rank mismatch");
    std::vector<int> abs = beta.coords;
    bool nonneg = std::all_of(abs.begin(), abs.end(), [](int c) { return c >= 0; });
    if (!nonneg) {
        // Pairing with a negative coroot: negate, compute, negate back.
        for (auto& c : abs) c = -c;
        return -coroot_pairing(lambda, RootVec{abs});
    }
    require_input(is_positive_root(abs), "not a root of this system");
    long num = 0;
    for (int i = 0; i < type_.rank; ++i) num += static_cast<long>(beta.coords[i]) * sym_[i] * lambda.coords[i];
    const long d = half_square_length(beta);
    require_internal(num % d == 0, "coroot pairing failed to be integral");
    return num / d;
}

Rat RootSystem::coroot_pairing_rational(const std::vector<Rat>& lambda, const RootVec& beta) const {
    require_input(static_cast<int>(lambda.size()) == type_.rank, "weight rank mismatch");
    require_input(is_positive_root(beta.coords), "not a positive root of this system");
    Rat num = 0;
    for (int i = 0; i < type_.rank; ++i) num += Rat(beta.coords[i]) * sym_[i] * lambda[i];
    return num / half_square_length(beta);
}

std::vector<long> RootSystem::root_to_weight_coords(const std::vector<int>& nu) const {
    require_internal(static_cast<int>(nu.size()) == type_.rank, "root-lattice vector rank mismatch");
    std::vector<long> wc(type_.rank, 0);
    for (int k = 0; k < type_.rank; ++k)
        for (int j = 0; j < type_.rank; ++j) wc[k] += static_cast<long>(cartan_[k][j]) * nu[j];
    return wc;
}

bool RootSystem::is_dominant(const Weight& lambda) const {
    require_input(static_cast<int>(lambda.coords.size()) == type_.rank, "weight rank mismatch");
    return std::all_of(lambda.coords.begin(), lambda.coords.end(), [](long c) { return c >= 0; });
}

bool RootSystem::is_regular_dominant(const Weight& lambda) const {
    require_input(static_cast<int>(lambda.coords.size()) == type_.rank, "weight rank mismatch");
    return std::all_of(lambda.coords.begin(), lambda.coords.end(), [](long c) { return c > 0; });
}

bool RootSystem::is_zero(const Weight& lambda) const {
    return std::all_of(lambda.coords.begin(), lambda.coords.end(), [](long c) { return c == 0; });
}

std::vector<int> RootSystem::support(const Weight& lambda) const {
    require_input(static_cast<int>(lambda.coords.size()) == type_.rank, "weight rank mismatch");
    std::vector<int> supp;
    for (int i = 0; i < type_.rank; ++i)
        if (lambda.coords[i] != 0) supp.push_back(i);
    return supp;
}

Weight RootSystem::fundamental_weight(int i) const {
    require_input(i >= 0 && i < type_.rank, "fundamental-weight index out of range");
    Weight w = zero_weight();
    w.coords[i] = 1;
    return w;
}

Weight RootSystem::rho() const { return Weight{std::vector<long>(type_.rank, 1)}; }

Int RootSystem::weyl_dim(const Weight& lambda) const {
    require_input(is_dominant(lambda), "weyl_dim requires a dominant weight");
    const Weight r = rho();
    Rat dim = 1;
    for (const auto& beta : positive_) {
        const long num = coroot_pairing(lambda + r, beta);
        const long den = coroot_pairing(r, beta);
        dim *= Rat(num, den);
    }
    dim.canonicalize();
    require_internal(is_integer(dim), "Weyl dimension formula must produce an integer");
    return dim.get_num();
}

std::vector<RootVec> RootSystem::parabolic_positive_roots(const std::vector<int>& supp) const {
    require_input(!supp.empty(), "empty support set");
    for (int i : supp) require_input(i >= 0 && i < type_.rank, "support index out of range");
    std::vector<RootVec> out;
    for (const auto& beta : positive_) {
        bool touches = false;
        for (int i : supp) touches = touches || beta.coords[i] != 0;
        if (touches) out.push_back(beta);
    }
    return out;
}

std::vector<RootVec> RootSystem::levi_positive_roots(const std::vector<int>& S) const {
    for (int i : S) require_input(i >= 0 && i < type_.rank, "Levi index out of range");
    std::vector<bool> in(type_.rank, false);
    for (int i : S) in[i] = true;
    std::vector<RootVec> out;
    for (const auto& beta : positive_) {
        bool inside = true;
        for (int j = 0; j < type_.rank; ++j)
            if (beta.coords[j] != 0 && !in[j]) inside = false;
        if (inside) out.push_back(beta);
    }
    return out;
}

RootVec RootSystem::highest_root_of_levi(const std::vector<int>& S) const {
    const auto roots = levi_positive_roots(S);
    require_input(!roots.empty(), "Levi subset carries no roots");
    std::vector<RootVec> maximal;
    for (const auto& beta : roots) {
        bool dominated = false;
        for (const auto& gamma : roots)
            if (root_dominates(gamma, beta)) dominated = true;
        if (!dominated) maximal.push_back(beta);
    }
    require_internal(maximal.size() == 1,
                     "Levi positive system has no unique highest root (disconnected subset?)");
    return maximal.front();
}

std::vector<std::pair<int, int>> RootSystem::dominance_cover_edges() const {
    const int n = num_positive();
    std::vector<std::pair<int, int>> covers;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (!root_dominates(positive_[j], positive_[i])) continue;
            bool strictly_between = false;
            for (int k = 0; k < n && !strictly_between; ++k)
                strictly_between = root_dominates(positive_[j], positive_[k]) &&
                                   root_dominates(positive_[k], positive_[i]);
            if (!strictly_between) covers.emplace_back(i, j);
        }
    return covers;
}

long gromov_width_formula(const RootSystem& rs, const Weight& lambda) {
    require_input(rs.is_dominant(lambda), "width formula requires a dominant weight");
    require_input(!rs.is_zero(lambda), "width formula is undefined for the zero weight");
    long best = -1;
    for (const auto& beta : rs.positive_roots()) {
        const long p = rs.coroot_pairing(lambda, beta);
        if (p != 0 && (best < 0 || p < best)) best = p;
    }
    require_internal(best > 0, "nonzero dominant weight must pair nontrivially with some coroot");
    return best;
}

long gromov_width_parabolic(const RootSystem& rs, const Weight& lambda) {
    require_input(rs.is_dominant(lambda), "width formula requires a dominant weight");
    require_input(!rs.is_zero(lambda), "width formula is undefined for the zero weight");
    long best = -1;
    for (const auto& beta : rs.parabolic_positive_roots(rs.support(lambda))) {
        const long p = rs.coroot_pairing(lambda, beta);
        require_internal(p > 0, "parabolic positive roots must pair positively with the defining weight");
        if (best < 0 || p < best) best = p;
    }
    return best;
}

std::vector<RootVec> gromov_width_minimizers(const RootSystem& rs, const Weight& lambda) {
    const long k = gromov_width_formula(rs, lambda);
    std::vector<RootVec> mins;
    for (const auto& beta : rs.positive_roots())
        if (rs.coroot_pairing(lambda, beta) == k) mins.push_back(beta);
    return mins;
}

std::pair<Weight, Rat> normalize_rational_weight(const std::vector<Rat>& q) {
    require_input(!q.empty(), "empty weight");
    bool all_zero = std::all_of(q.begin(), q.end(), [](const Rat& x) { return x == 0; });
    require_input(!all_zero, "cannot normalize the zero weight");

    Int den_lcm = 1;
    for (const auto& x : q) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den().get_mpz_t());
    std::vector<Int> nums(q.size());
    Int num_gcd = 0;
    for (std::size_t i = 0; i < q.size(); ++i) {
        nums[i] = q[i].get_num() * (den_lcm / q[i].get_den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), nums[i].get_mpz_t());
    }
    Weight lambda;
    lambda.coords.resize(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) {
        const Int v = nums[i] / num_gcd;
        require_input(v.fits_slong_p(), "normalized weight coordinate out of machine range");
        lambda.coords[i] = v.get_si();
    }
    Rat scale(den_lcm, num_gcd);
    scale.canonicalize();
    return {lambda, scale};
}

Rat gromov_width_rational(const RootSystem& rs, const std::vector<Rat>& q) {
    require_input(static_cast<int>(q.size()) == rs.rank(), "weight rank mismatch");
    auto [lambda, scale] = normalize_rational_weight(q);
    require_input(rs.is_dominant(lambda), "width formula requires a dominant weight");
    return Rat(gromov_width_formula(rs, lambda)) / scale;
}

std::vector<Rat> weight_from_epsilon_coords(const std::vector<Rat>& eps) {
    require_input(eps.size() >= 2, "epsilon coordinates need at least two entries");
    std::vector<Rat> out(eps.size() - 1);
    for (std::size_t i = 0; i + 1 < eps.size(); ++i) out[i] = eps[i] - eps[i + 1];
    return out;
}

} // namespace nokw
