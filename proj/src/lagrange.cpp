#include "hsjack/lagrange.hpp"

#include "hsjack/freezing.hpp"
#include "hsjack/numeric.hpp"
#include "hsjack/spinchain.hpp"
#include "hsjack/symfun.hpp"

#include <algorithm>
#include <cmath>

namespace hsjack {

namespace {

using C = std::complex<double>;

void check_degree(const LaurentPoly& f, int var, int N, const char* who)
{
    if (f.is_zero()) return;
    const int lo = f.min_exponents()[var - 1], hi = f.max_exponents()[var - 1];
    if (lo < 0 || hi >= N)
        throw InvalidInput(std::string(who) + ": degree in z_" + std::to_string(var) +
                           " must lie in [0, N)");
}

void check_sites(const LaurentPoly& f, int var, const std::vector<int>& sites)
{
    if (static_cast<int>(sites.size()) != f.num_vars())
        throw InvalidInput("lattice point has the wrong number of sites");
    if (var < 1 || var > f.num_vars()) throw InvalidInput("variable index out of range");
}

// sum_{j != s_i} w_j(z) f(z_i -> omega^j), with w supplied per distance.
template <class Weight>
C replacement_sum(const LaurentPoly& f, int var, std::vector<int> sites, int N,
                  const std::vector<C>& table, Weight weight)
{
    const int si = sites[var - 1];
    C acc(0);
    for (int j = 1; j <= N; ++j) {
        if ((j - si) % N == 0) continue;
        sites[var - 1] = j;
        acc += weight(si, j) * eval_at_sites<double>(f, N, sites, table);
    }
    return acc;
}

}  // namespace

DualValue onshell_derivative(const LaurentPoly& f, int var, const std::vector<int>& sites, int N, bool strict)
{
    check_sites(f, var, sites);
    if (strict) check_degree(f, var, N, "onshell_derivative");
    const auto table = root_table<double>(N);
    auto z = [&](int j) { return table[((j % N) + N) % N]; };
    DualValue out;
    out.onshell = replacement_sum(f, var, sites, N, table, [&](int i, int j) { return z(j) / (z(i) - z(j)); }) +
                  0.5 * (N - 1) * eval_at_sites<double>(f, N, sites, table);
    out.direct = eval_at_sites<double>(euler(f, var), N, sites, table);
    return out;
}

DualValue onshell_second_derivative(const LaurentPoly& f, int var, const std::vector<int>& sites, int N,
                                    bool strict)
{
    check_sites(f, var, sites);
    if (strict) check_degree(f, var, N, "onshell_second_derivative");
    const auto table = root_table<double>(N);
    const CouplingTable V(N);
    const C first = onshell_derivative(f, var, sites, N, false).onshell;
    DualValue out;
    out.onshell = 2.0 * replacement_sum(f, var, sites, N, table, [&](int i, int j) { return C(V(i - j)); }) +
                  double(N) * first - (double(N) * N - 1) / 6.0 * eval_at_sites<double>(f, N, sites, table);
    out.direct = eval_at_sites<double>(euler(euler(f, var), var), N, sites, table);
    return out;
}

namespace {

void require_symmetric(const LaurentPoly& psi, const char* who)
{
    for (int m = 1; m < psi.num_vars(); ++m)
        if (psi.swapped(m, m + 1) != psi) throw InvalidInput(std::string(who) + ": psi is not symmetric");
}

// For every increasing tuple I: (ev psi)(I) and the moved-particle sum.
struct LatticeData {
    std::vector<C> psi, moved, diag;
};

LatticeData lattice_data(const LaurentPoly& psi, int N)
{
    const int M = psi.num_vars();
    const auto table = root_table<double>(N);
    const CouplingTable V(N);
    const double bulk = M * (double(N) * N - 1) / 12.0;
    LatticeData d;
    for (const auto& I : subsets(N, M)) {
        d.psi.push_back(eval_at_sites<double>(psi, N, I, table));
        C moved(0);
        double pair = 0;
        for (int m = 0; m < M; ++m) {
            std::vector<int> s(I);
            for (int j = 1; j <= N; ++j) {
                if (std::binary_search(I.begin(), I.end(), j)) continue;
                s[m] = j;
                moved += V(I[m] - j) * eval_at_sites<double>(psi, N, s, table);
            }
            for (int mp = 0; mp < M; ++mp)
                if (mp != m) pair += V(I[m] - I[mp]);
        }
        d.moved.push_back(moved);
        d.diag.push_back(bulk - pair);
    }
    return d;
}

}  // namespace

double difference_equation_residual(const LaurentPoly& psi, const Rational& E, int N)
{
    require_symmetric(psi, "difference_equation_residual");
    const LatticeData d = lattice_data(psi, N);
    const double e = to_double(E);
    double worst = 0, scale = 1;
    for (std::size_t t = 0; t < d.psi.size(); ++t) {
        worst = std::max(worst, std::abs(d.moved[t] - (d.diag[t] - e) * d.psi[t]));
        scale = std::max(scale, std::abs(d.psi[t]));
    }
    return worst / scale;
}

double difference_equation_energy(const LaurentPoly& psi, int N)
{
    require_symmetric(psi, "difference_equation_energy");
    const LatticeData d = lattice_data(psi, N);
    C num(0);
    double den = 0;
    for (std::size_t t = 0; t < d.psi.size(); ++t) {
        num += std::conj(d.psi[t]) * (d.diag[t] * d.psi[t] - d.moved[t]);
        den += std::norm(d.psi[t]);
    }
    if (den == 0) throw InvalidInput("difference_equation_energy: psi vanishes on the lattice");
    return num.real() / den;
}

double CsReport::energy_gap() const { return std::abs(to_double(energy) - difference_energy); }

CsReport cs_connection_check(const LaurentPoly& psi, int N)
{
    const int M = psi.num_vars();
    if (M < 1 || M > N) throw InvalidInput("cs_connection_check: need 1 <= M <= N");
    require_symmetric(psi, "cs_connection_check");
    for (int m = 1; m <= M; ++m) check_degree(psi, m, N, "cs_connection_check");
    const LaurentPoly D = vandermonde(M);
    try {
        divide_exact(psi, D * D);
    } catch (const std::domain_error&) {
        throw InvalidInput("cs_connection_check: psi is not divisible by the squared Vandermonde");
    }

    LaurentPoly H(M);
    for (int m = 1; m <= M; ++m) {
        const LaurentPoly d1 = euler(psi, m);
        H += euler(d1, m) * make_rational(1, 2) - d1 * make_rational(N, 2);
    }
    for (int m = 1; m <= M; ++m)
        for (int mp = m + 1; mp <= M; ++mp) {
            const LaurentPoly q = divide_by_difference(divide_by_difference(psi, m, mp), m, mp);
            H -= LaurentPoly::variable(M, m) * LaurentPoly::variable(M, mp) * q * Rational(2);
        }

    CsReport rep;
    const auto& [e0, c0] = psi.leading();
    const Rational c = H.coeff(e0) / c0;
    rep.eigenfunction = (H == psi * c);
    rep.energy = -c;

    const auto table = root_table<double>(N);
    double worst = 0, scale = 1;
    for (const auto& I : subsets(N, M)) {
        const C p = eval_at_sites<double>(psi, N, I, table);
        const C h = eval_at_sites<double>(H, N, I, table);
        worst = std::max(worst, std::abs(h + to_double(rep.energy) * p));
        scale = std::max(scale, std::abs(p));
    }
    rep.lattice_residual = worst / scale;
    rep.difference_energy = difference_equation_energy(psi, N);
    rep.difference_residual = difference_equation_residual(psi, rep.energy, N);
    return rep;
}

double sum_rule_residual(int N)
{
    const CouplingTable V(N);
    double s = 0;
    for (int n = 1; n < N; ++n) s += V(n);
    return std::abs(s - (double(N) * N - 1) / 12.0);
}

}  // namespace hsjack
