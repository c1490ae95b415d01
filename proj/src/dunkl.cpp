#include "hsjack/dunkl.hpp"

#include "hsjack/symfun.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <tuple>
#include <unordered_map>

namespace hsjack {

DunklConfig::DunklConfig(int n, const Rational& a) : N(n), alpha(a)
{
    if (n < 1) throw InvalidInput("DunklConfig: N must be at least 1");
    if (a == 0) throw InvalidInput("DunklConfig: alpha = 0 gives degenerate eigenvalues");
}

LaurentPoly monomial_divided_difference(const Exponent& e, int i, int j)
{
    const int n = static_cast<int>(e.size());
    LaurentPoly out(n);
    int A = e[i - 1], B = e[j - 1];
    if (A == B) return out;
    Rational sign = 1;
    if (A < B) {
        std::swap(A, B);
        sign = -1;
    }
    // z_i^B z_j^B * sum_t z_i^t z_j^(A-B-1-t)
    Exponent f(e);
    for (int t = 0; t < A - B; ++t) {
        f[i - 1] = B + t;
        f[j - 1] = A - 1 - t;
        out.add_term(f, sign);
    }
    return out;
}

LaurentPoly divided_difference(const LaurentPoly& f, int i, int j)
{
    LaurentPoly out(f.num_vars());
    for (const auto& [e, c] : f.terms()) {
        const int A = e[i - 1], B = e[j - 1];
        if (A == B) continue;
        const int lo = std::min(A, B), hi = std::max(A, B);
        const Rational s = A > B ? c : Rational(-c);
        Exponent g(e);
        for (int t = 0; t < hi - lo; ++t) {
            g[i - 1] = lo + t;
            g[j - 1] = hi - 1 - t;
            out.add_term(g, s);
        }
    }
    return out;
}

namespace {

// d_j applied to a single monomial, accumulated into `out` with weight w.
void dunkl_monomial(int j, const Exponent& e, const Rational& w, const DunklConfig& cfg, LaurentPoly& out)
{
    const int N = cfg.N;
    Exponent g(e);
    out.add_term(e, w * (cfg.alpha * e[j - 1] + make_rational(N - 2 * j + 1, 2)));
    // -z_j (1 - s_ij) z^e / (z_i - z_j), i < j
    for (int i = 1; i < j; ++i) {
        const int A = e[i - 1], B = e[j - 1];
        if (A == B) continue;
        const int lo = std::min(A, B), hi = std::max(A, B);
        const Rational s = A > B ? Rational(-w) : w;
        g = e;
        for (int t = 0; t < hi - lo; ++t) {
            g[i - 1] = lo + t;
            g[j - 1] = hi - 1 - t + 1;
            out.add_term(g, s);
        }
    }
    // +z_k (1 - s_jk) z^e / (z_j - z_k), k > j
    for (int k = j + 1; k <= N; ++k) {
        const int A = e[j - 1], B = e[k - 1];
        if (A == B) continue;
        const int lo = std::min(A, B), hi = std::max(A, B);
        const Rational s = A > B ? w : Rational(-w);
        g = e;
        for (int t = 0; t < hi - lo; ++t) {
            g[j - 1] = lo + t;
            g[k - 1] = hi - 1 - t + 1;
            out.add_term(g, s);
        }
    }
}

Composition pad_to(const Composition& lambda, int N, const char* who)
{
    if (static_cast<int>(lambda.size()) == N) return lambda;
    if (static_cast<int>(lambda.size()) < N) {
        Composition out(lambda);
        out.resize(N, 0);
        return out;
    }
    throw InvalidInput(std::string(who) + ": composition longer than N");
}

struct CacheKey {
    int N;
    std::string alpha;
    Composition lambda;
    bool operator<(const CacheKey& o) const
    {
        return std::tie(N, alpha, lambda) < std::tie(o.N, o.alpha, o.lambda);
    }
};

std::mutex g_cache_mutex;
std::map<CacheKey, LaurentPoly> g_cache;

LaurentPoly solve_nonsym(const Composition& lambda, const DunklConfig& cfg)
{
    const int N = cfg.N;
    const int w = static_cast<int>(weight(lambda));

    std::vector<Composition> basis;
    for (const Composition& mu : compositions(w, N)) {
        const Order o = dominance_compare(mu, lambda);
        if (o == Order::Less || o == Order::Equal) basis.push_back(mu);
    }
    // Linear extension of the dominance order: sorted parts first, then the composition.
    std::vector<std::pair<Partition, Composition>> keyed;
    keyed.reserve(basis.size());
    for (auto& mu : basis) keyed.emplace_back(sorted_decreasing(mu), mu);
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first > b.first;
        return a.second > b.second;
    });

    std::map<Composition, std::vector<Rational>> acc;
    std::vector<Rational> target(N);
    for (int i = 1; i <= N; ++i) target[i - 1] = dunkl_eigenvalue(lambda, i, cfg.alpha);

    LaurentPoly result(N);
    for (std::size_t idx = 0; idx < keyed.size(); ++idx) {
        const Composition& mu = keyed[idx].second;
        Rational c;
        if (idx == 0) {
            c = 1;
        } else {
            auto it = acc.find(mu);
            if (it == acc.end()) continue;
            const std::vector<Rational>& a = it->second;
            bool have = false;
            for (int i = 1; i <= N; ++i) {
                const Rational gap = target[i - 1] - dunkl_eigenvalue(mu, i, cfg.alpha);
                if (gap == 0) {
                    if (a[i - 1] != 0)
                        throw SingularSystem("nonsym_jack: inconsistent constraint d_" + std::to_string(i) +
                                             " at monomial " + LaurentPoly::monomial(mu).to_string() +
                                             " (zero pivot)");
                    continue;
                }
                const Rational cand = a[i - 1] / gap;
                if (!have) {
                    c = cand;
                    have = true;
                } else if (cand != c) {
                    throw SingularSystem("nonsym_jack: Dunkl constraints disagree at monomial " +
                                         LaurentPoly::monomial(mu).to_string());
                }
            }
            if (!have) {
                if (std::any_of(a.begin(), a.end(), [](const Rational& x) { return x != 0; }))
                    throw SingularSystem("nonsym_jack: zero pivot at monomial " +
                                         LaurentPoly::monomial(mu).to_string());
                throw SingularSystem("nonsym_jack: eigenvalues of " + LaurentPoly::monomial(mu).to_string() +
                                     " coincide with the leading ones (non-generic alpha)");
            }
        }
        if (c == 0) continue;
        result.add_term(mu, c);
        for (int i = 1; i <= N; ++i) {
            LaurentPoly img(N);
            dunkl_monomial(i, mu, c, cfg, img);
            for (const auto& [nu, v] : img.terms()) {
                if (nu == mu) continue;
                auto& slot = acc[nu];
                if (slot.empty()) slot.assign(N, Rational(0));
                slot[i - 1] += v;
            }
        }
    }
    return result;
}

}  // namespace

LaurentPoly apply_dunkl(int j, const LaurentPoly& f, const DunklConfig& cfg)
{
    if (j < 1 || j > cfg.N) throw InvalidInput("apply_dunkl: index out of range");
    if (f.num_vars() != cfg.N) throw InvalidInput("apply_dunkl: variable count differs from N");
    LaurentPoly out(cfg.N);
    for (const auto& [e, c] : f.terms()) dunkl_monomial(j, e, c, cfg, out);
    return out;
}

LaurentPoly nonsym_jack(const Composition& lambda_in, const DunklConfig& cfg)
{
    if (cfg.alpha <= 0) throw InvalidInput("nonsym_jack: alpha must be a positive rational");
    const Composition lambda = pad_to(lambda_in, cfg.N, "nonsym_jack");
    const int lo = lambda.empty() ? 0 : *std::min_element(lambda.begin(), lambda.end());
    if (lo != 0) {
        LaurentPoly base = nonsym_jack(boost(lambda, -lo), cfg);
        return base.shifted(Exponent(cfg.N, lo));
    }
    const CacheKey key{cfg.N, to_pq(cfg.alpha), lambda};
    {
        std::lock_guard<std::mutex> lock(g_cache_mutex);
        auto it = g_cache.find(key);
        if (it != g_cache.end()) return it->second;
    }
    LaurentPoly E = solve_nonsym(lambda, cfg);
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    g_cache.emplace(key, E);
    return E;
}

void clear_jack_cache()
{
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    g_cache.clear();
}

std::size_t jack_cache_size()
{
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    return g_cache.size();
}

std::pair<Rational, Rational> exchange_action(int i, const Composition& lambda_in, const DunklConfig& cfg)
{
    const Composition lambda = pad_to(lambda_in, cfg.N, "exchange_action");
    if (i < 1 || i >= cfg.N) throw InvalidInput("exchange_action: need 1 <= i < N");
    const Rational gap = dunkl_eigenvalue(lambda, i, cfg.alpha) - dunkl_eigenvalue(lambda, i + 1, cfg.alpha);
    if (gap == 0) throw SingularSystem("exchange_action: delta_i = delta_{i+1} with distinct parts");
    const Rational a = 1 / gap;
    Rational b;
    if (lambda[i - 1] > lambda[i])
        b = 1 - a * a;
    else if (lambda[i - 1] == lambda[i])
        b = 0;
    else
        b = 1;
    return {a, b};
}

Rational sym_normalisation(const Partition& lambda_in, const DunklConfig& cfg)
{
    const Partition lambda = pad_to(lambda_in, cfg.N, "sym_jack");
    if (!is_partition(lambda)) throw InvalidInput("sym_jack: lambda must be a partition");
    return symmetrize(nonsym_jack(lambda, cfg), +1).coeff(lambda);
}

LaurentPoly sym_jack(const Partition& lambda_in, const DunklConfig& cfg)
{
    const Partition lambda = pad_to(lambda_in, cfg.N, "sym_jack");
    if (!is_partition(lambda)) throw InvalidInput("sym_jack: lambda must be a partition");
    LaurentPoly P = symmetrize(nonsym_jack(lambda, cfg), +1);
    const Rational lead = P.coeff(lambda);
    if (lead == 0) throw SingularSystem("sym_jack: symmetrisation vanished");
    P /= lead;
    return P;
}

Rational antisym_normalisation(const Composition& k_in, const DunklConfig& cfg)
{
    const Composition k = pad_to(k_in, cfg.N, "antisym_jack");
    if (!is_strict_partition(k)) throw InvalidInput("antisym_jack: k must be strictly decreasing");
    return symmetrize(nonsym_jack(k, cfg), -1).coeff(k);
}

LaurentPoly antisym_jack(const Composition& k_in, const DunklConfig& cfg)
{
    const Composition k = pad_to(k_in, cfg.N, "antisym_jack");
    if (!is_strict_partition(k))
        throw InvalidInput("antisym_jack: k must be strictly decreasing (the antisymmetrisation is zero)");
    LaurentPoly A = symmetrize(nonsym_jack(k, cfg), -1);
    const Rational lead = A.coeff(k);
    if (lead == 0) throw SingularSystem("antisym_jack: antisymmetrisation vanished");
    A /= lead;
    return A;
}

bool has_symmetry(const LaurentPoly& f, int sign)
{
    const int N = f.num_vars();
    for (int i = 1; i < N; ++i) {
        LaurentPoly s = f.swapped(i, i + 1);
        if (sign < 0) s = -s;
        if (s != f) return false;
    }
    return true;
}

LaurentPoly scalar_eff_hamiltonian(const LaurentPoly& f, const DunklConfig& cfg, int sign)
{
    const int N = cfg.N;
    if (f.num_vars() != N) throw InvalidInput("scalar_eff_hamiltonian: variable count differs from N");
    if (sign != 1 && sign != -1) throw InvalidInput("scalar_eff_hamiltonian: sign must be +1 or -1");
    if (!has_symmetry(f, sign))
        throw InvalidInput(sign > 0 ? "scalar_eff_hamiltonian: input is not symmetric"
                                    : "scalar_eff_hamiltonian: input is not antisymmetric");
    const Rational beta = cfg.beta();
    LaurentPoly out(N);
    for (int j = 1; j <= N; ++j) out += euler(euler(f, j), j) * Rational(1, 2);
    for (int i = 1; i <= N; ++i)
        for (int j = i + 1; j <= N; ++j) {
            const LaurentPoly D = euler(f, i) - euler(f, j);
            const LaurentPoly zi = LaurentPoly::variable(N, i), zj = LaurentPoly::variable(N, j);
            if (sign > 0) {
                out += divide_by_difference((zi + zj) * D, i, j) * (beta / 2);
            } else {
                LaurentPoly num = (zi * zi - zj * zj) * D * Rational(1, 2) - zi * zj * f * Rational(2);
                out += divide_by_difference(divide_by_difference(num, i, j), i, j) * beta;
            }
        }
    return out;
}

Rational scalar_energy(const Composition& lambda_in, const DunklConfig& cfg)
{
    const Composition lambda = pad_to(lambda_in, cfg.N, "scalar_energy");
    Rational s = 0;
    for (int i = 1; i <= cfg.N; ++i) {
        const Rational d = dunkl_eigenvalue(lambda, i, cfg.alpha);
        s += d * d;
    }
    const Rational beta = cfg.beta();
    return beta * beta / 2 * (s - ground_constant(cfg.N));
}

Rational ground_constant(int N) { return ground_energy(N); }

}  // namespace hsjack
