#include "hsjack/freezing.hpp"

#include "hsjack/dunkl.hpp"
#include "hsjack/numeric.hpp"
#include "hsjack/symfun.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

namespace hsjack {

std::vector<std::vector<int>> subsets(int N, int M)
{
    std::vector<std::vector<int>> out;
    if (M < 0 || M > N) return out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(cur.size()) == M) {
            out.push_back(cur);
            return;
        }
        for (int s = start; s <= N - (M - static_cast<int>(cur.size())) + 1; ++s) {
            cur.push_back(s);
            rec(s + 1);
            cur.pop_back();
        }
    };
    rec(1);
    return out;
}

std::size_t subset_index(const std::vector<int>& sites, int N)
{
    std::size_t idx = 0;
    for (int s : sites) idx |= std::size_t(1) << (N - s);
    return idx;
}

Partition nu_from_motif(const Motif& mu)
{
    const int M = mu.size();
    Partition nu(M);
    for (int m = 1; m <= M; ++m) nu[m - 1] = mu.entries[M - m] - 2 * (M - m);
    return nu;
}

Motif motif_from_nu(const Partition& nu, int N)
{
    const int M = static_cast<int>(nu.size());
    std::vector<int> e(M);
    for (int m = 1; m <= M; ++m) e[M - m] = nu[m - 1] + 2 * (M - m);
    return make_motif(e, N, 2);
}

namespace {

template <class R>
void fill_components(const LaurentPoly& psi, int N, SpinVector& v)
{
    const int M = psi.num_vars();
    const auto table = root_table<R>(N);
    for (const auto& I : subsets(N, M)) {
        const std::complex<R> z = eval_at_sites<R>(psi, N, I, table);
        v.entries[subset_index(I, N)] = {static_cast<double>(z.real()), static_cast<double>(z.imag())};
    }
}

}  // namespace

HSEigenvector hs_eigenvector(const Motif& mu, unsigned precision_bits)
{
    if (mu.r != 2 || !is_valid_motif(mu.entries, mu.N, 2))
        throw InvalidInput("hs_eigenvector: invalid rank-2 motif " + to_string(mu));
    const int N = mu.N;
    const int M = mu.size();
    HSEigenvector ev;
    ev.motif = mu;
    ev.N = N;
    ev.nu = nu_from_motif(mu);
    if (M == 0) {
        ev.wavefn = LaurentPoly::constant(0, 1);
    } else {
        const LaurentPoly P = sym_jack(ev.nu, DunklConfig(M, make_rational(1, 2)));
        const LaurentPoly D = vandermonde(M);
        ev.wavefn = D * D * P;
    }
    ev.vector = SpinVector(N, 2);
    if (precision_bits > 53) {
        const unsigned saved = working_precision();
        set_working_precision(precision_bits);
        fill_components<MpReal>(ev.wavefn, N, ev.vector);
        set_working_precision(saved);
    } else {
        fill_components<double>(ev.wavefn, N, ev.vector);
    }
    ev.energy_plus = hs_motif_energy(mu);
    ev.energy_minus = hs_motif_energy_minus(mu);
    ev.momentum = motif_momentum(mu);
    return ev;
}

double EigenvectorReport::max_residual() const
{
    return std::max({hamiltonian, s_plus, q_plus, translation});
}

EigenvectorReport verify_eigenvector(const HSEigenvector& ev)
{
    const SpinVector& v = ev.vector;
    const double nv = v.norm();
    if (!(nv > 0))
        throw std::runtime_error("verify_eigenvector: motif " + to_string(ev.motif) +
                                 " evaluates to the zero vector");
    EigenvectorReport rep;
    const SpinVector h = hs_apply(v, +1);
    rep.hamiltonian = (h.entries - to_double(ev.energy_plus) * v.entries).norm() / nv;
    rep.s_plus = yangian_apply(Generator::Splus, v).norm() / nv;
    rep.q_plus = yangian_apply(Generator::Qplus, v).norm() / nv;
    const double phase = 2 * 3.14159265358979323846 * ev.momentum / ev.N;
    const std::complex<double> w(std::cos(phase), std::sin(phase));
    rep.translation = (translation(v).entries - w * v.entries).norm() / nv;
    try {
        rep.momentum = momentum_of(v, 1e-8);
    } catch (const InvalidInput&) {
        rep.momentum = -1;
    }
    const int M = ev.wavefn.num_vars();
    const Exponent lo = ev.wavefn.min_exponents(), hi = ev.wavefn.max_exponents();
    rep.vanishes_at_zero = true;
    rep.degree_below_N = true;
    for (int m = 0; m < M; ++m) {
        if (lo[m] < 1) rep.vanishes_at_zero = false;
        if (hi[m] >= ev.N) rep.degree_below_N = false;
    }
    return rep;
}

SpinVector evaluate_table(const SpinTable& t, int N, int r)
{
    SpinVector v(N, r);
    const auto table = root_table<double>(N);
    std::vector<int> sites(N);
    for (int j = 0; j < N; ++j) sites[j] = j + 1;
    for (const auto& [word, p] : t) v.entries[index_of(word, r)] += eval_at_sites<double>(p, N, sites, table);
    return v;
}

LaurentPoly frozen_wedge_polynomial(const Wedge& w)
{
    if (w.r != 2) throw InvalidInput("frozen_wedge: only rank 2 is supported");
    const int N = w.size();
    const auto parts = split_colours(w);
    const std::vector<int>& up = parts[0];
    const std::vector<int>& down = parts[1];
    const int M = static_cast<int>(down.size());
    Partition ld(M), lu(N - M);
    for (int m = 1; m <= M; ++m) ld[m - 1] = down[m - 1] - M + m;
    for (int j = 1; j <= N - M; ++j) lu[j - 1] = up[j - 1] - (N - M) + j;
    for (int x : ld)
        if (x < 0) throw InvalidInput("frozen_wedge: negative spin-down momenta; boost the wedge first");
    for (int x : lu)
        if (x < 0) throw InvalidInput("frozen_wedge: negative spin-up momenta; boost the wedge first");
    const Partition luc = conjugate(strip_zeros(lu));
    // Trading s_{lambda_up}(z_{I^c}) for s_{lambda_up'}(z_I) under evaluation
    // holds only for lambda_up inside the (N-M) x M box.
    if (static_cast<int>(luc.size()) > M)
        throw InvalidInput("frozen_wedge: spin-up partition has first part " + std::to_string(luc.size()) +
                           " > M = " + std::to_string(M) + "; no frozen form");
    if (M == 0) return LaurentPoly::constant(0, 1);
    const LaurentPoly D = vandermonde(M);
    return D * D * elementary(M, M) * schur(ld, M) * schur(luc, M);
}

SpinVector frozen_wedge(const Wedge& w)
{
    const int N = w.size();
    const LaurentPoly psi = frozen_wedge_polynomial(w);
    SpinVector v(N, 2);
    fill_components<double>(psi, N, v);
    return v;
}

std::pair<std::complex<double>, double> proportionality(const SpinVector& a, const SpinVector& b)
{
    const double na = a.norm(), nb = b.norm();
    if (nb == 0) return {0.0, na == 0 ? 0.0 : 1.0};
    const std::complex<double> c = b.entries.dot(a.entries) / (nb * nb);
    const double res = (a.entries - c * b.entries).norm();
    return {c, na == 0 ? res : res / na};
}

std::complex<double> ev_vandermonde_closed(int N)
{
    const double pi = 3.14159265358979323846;
    const double x = (N + 2.0) * (N - 1.0) / 4.0;
    return std::polar(std::pow(double(N), N / 2.0), pi * x);
}

std::vector<CheckResult> evaluation_identity_suite(int N, std::uint64_t seed, int samples)
{
    using C = std::complex<double>;
    const double tol = 1e-10;
    const double pi = 3.14159265358979323846;
    const auto w = root_table<double>(N);
    auto z = [&](int j) { return w[((j % N) + N) % N]; };
    std::vector<CheckResult> out;
    auto record = [&](const std::string& name, double res) { out.push_back({name, res, tol, res < tol}); };

    {
        double s = 0;
        for (int n = 1; n < N; ++n) s += 1.0 / std::tan(pi * n / N);
        record("cot_sum", std::abs(s) / std::max(1.0, double(N)));
    }
    {
        double r1 = 0, r2 = 0, r3 = 0, r4 = 0;
        for (int i = 1; i <= N; ++i) {
            C a(0), b(0), sq(0), prod = z(i);
            for (int j = 1; j <= N; ++j) {
                if (j == i) continue;
                const C zij = z(i) - z(j);
                a += z(i) / zij;
                b -= z(j) / zij;
                sq += (z(i) / zij) * (z(i) / zij);
                prod *= zij;
            }
            const double half = (N - 1) / 2.0;
            const double third = (N - 1.0) * (N - 2.0) / 3.0;
            r1 = std::max(r1, std::abs(a - half) / std::max(1.0, half));
            r2 = std::max(r2, std::abs(b - half) / std::max(1.0, half));
            r3 = std::max(r3, std::abs(a * a - sq - third) / std::max(1.0, third));
            r4 = std::max(r4, std::abs(prod - double(N)) / N);
        }
        record("onshell_sum_zi_over_zij", r1);
        record("onshell_sum_zj_over_zji", r2);
        record("onshell_double_sum", r3);
        record("onshell_phi", r4);
    }
    {
        const CouplingTable V(N);
        double s = 0;
        for (int n = 1; n < N; ++n) s += V(n);
        const double target = (double(N) * N - 1) / 12.0;
        record("coupling_sum_rule", std::abs(s - target) / std::max(1.0, target));
        C e(0);
        for (int i = 1; i <= N; ++i)
            for (int j = i + 1; j <= N; ++j) e += z(i) * z(j) / ((z(i) - z(j)) * (z(j) - z(i)));
        const double half_e0 = to_double(ground_energy(N)) / 2;
        record("classical_equilibrium_energy", std::abs(e - half_e0) / std::max(1.0, half_e0));
    }
    {
        double rp = 0;
        for (int n = 0; n <= 2 * N; ++n) {
            C p(0);
            for (int j = 1; j <= N; ++j) p += z(j * n);
            const double target = (n % N == 0) ? N : 0;
            rp = std::max(rp, std::abs(p - target) / N);
        }
        record("power_sums", rp);
        // prod_j (1 + omega^j t) = sum_n e_n t^n; the binomial-size cancellations
        // need more than double precision once N passes about 20.
        const unsigned saved = working_precision();
        set_working_precision(256);
        const auto wm = root_table<MpReal>(N);
        std::vector<MpCplx> e(N + 1, MpCplx(0));
        e[0] = MpCplx(1);
        for (int j = 1; j <= N; ++j)
            for (int n = j; n >= 1; --n) e[n] += wm[j % N] * e[n - 1];
        double re = 0;
        for (int n = 0; n <= N; ++n) {
            double target = 0;
            if (n == 0) target += 1;
            if (n == N) target += (N % 2 == 1) ? 1 : -1;
            const MpCplx d = e[n] - MpCplx(target);
            re = std::max(re, std::hypot(static_cast<double>(d.real()), static_cast<double>(d.imag())));
        }
        set_working_precision(saved);
        record("elementary", re);
    }
    auto ev_delta = [&](const std::vector<int>& sites) {
        C d(1);
        for (std::size_t a = 0; a < sites.size(); ++a)
            for (std::size_t b = a + 1; b < sites.size(); ++b) d *= z(sites[a]) - z(sites[b]);
        return d;
    };
    std::vector<int> all(N);
    for (int j = 0; j < N; ++j) all[j] = j + 1;
    const C closed = ev_vandermonde_closed(N);
    {
        const C direct = ev_delta(all);
        record("vandermonde_closed_form", std::abs(direct - closed) / std::abs(closed));
    }

    std::mt19937_64 gen(seed);
    auto random_subset = [&](int M) {
        std::vector<int> s(all);
        std::shuffle(s.begin(), s.end(), gen);
        s.resize(M);
        std::sort(s.begin(), s.end());
        return s;
    };
    auto complement = [&](const std::vector<int>& I) {
        std::vector<int> c;
        for (int j = 1; j <= N; ++j)
            if (!std::binary_search(I.begin(), I.end(), j)) c.push_back(j);
        return c;
    };
    {
        double worst = 0;
        std::vector<std::vector<int>> tests{{}};
        for (int s = 0; s < samples; ++s) {
            std::uniform_int_distribution<int> mdist(0, N);
            tests.push_back(random_subset(mdist(gen)));
        }
        for (const auto& I : tests) {
            const int M = static_cast<int>(I.size());
            long sumI = 0;
            C eM(1);
            for (int i : I) {
                sumI += i;
                eM *= z(i);
            }
            const C lhs = ev_delta(complement(I));
            const double sgn = ((sumI - M) % 2 == 0) ? 1.0 : -1.0;
            const C rhs = closed * std::pow(double(N), -M) * sgn * ev_delta(I) * eM;
            worst = std::max(worst, std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs)));
        }
        record("vandermonde_splitting", worst);
    }
    {
        double worst = 0;
        for (int s = 0; s < samples; ++s) {
            std::uniform_int_distribution<int> mdist(1, N - 1);
            const int M = N > 1 ? mdist(gen) : 0;
            const auto I = random_subset(M);
            const auto Ic = complement(I);
            // The identity needs lambda inside the (N-M) x M box.
            const int max_size = std::min(12, M * (N - M));
            std::uniform_int_distribution<int> sdist(0, max_size);
            const int size = sdist(gen);
            auto parts = partitions(size, N - M, M);
            if (parts.empty()) continue;
            std::uniform_int_distribution<std::size_t> pdist(0, parts.size() - 1);
            const Partition lam = strip_zeros(parts[pdist(gen)]);
            std::vector<C> pi, pic;
            for (int i : I) pi.push_back(z(i));
            for (int i : Ic) pic.push_back(z(i));
            const C lhs = schur_numeric<double>(lam, pic);
            const double sgn = (weight(lam) % 2 == 0) ? 1.0 : -1.0;
            const C rhs = sgn * schur_numeric<double>(lam.empty() ? lam : conjugate(lam), pi);
            worst = std::max(worst, std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs)));
        }
        record("schur_conjugation", worst);
    }
    return out;
}

namespace {

LaurentPoly alternant_poly(const std::vector<int>& k, int M) { return alternant(k, M); }

// Linearised (coefficient of beta) wedge action.
WedgeVector linear_action(const Wedge& w)
{
    const int N = w.size();
    WedgeVector out(N, w.r);
    const Composition kb = w.kbar();
    out.add(w.k, wedge_energy(kb, 1) - wedge_energy(kb, 0));
    for (int i = 1; i <= N; ++i)
        for (int j = i + 1; j <= N; ++j) out += squeeze(i, j, w) * offdiag_prefactor(w.r);
    return out;
}

std::vector<int> concat(const std::vector<int>& a, const std::vector<int>& b)
{
    std::vector<int> c(a);
    c.insert(c.end(), b.begin(), b.end());
    return c;
}

SpinTable table_momentum(const SpinTable& t)
{
    SpinTable out;
    for (const auto& [w, p] : t) out.emplace(w, total_momentum(p));
    return prune(out);
}

// Solves diff = c * base; returns false if diff is not a multiple.
bool solve_multiple(const SpinTable& diff, const SpinTable& base, Rational& c)
{
    if (base.empty()) return diff.empty();
    const auto& [w0, p0] = *base.begin();
    const auto& [e0, c0] = p0.leading();
    auto it = diff.find(w0);
    c = it == diff.end() ? Rational(0) : it->second.coeff(e0) / c0;
    return add_tables(diff, scaled(base, -c)).empty();
}

}  // namespace

ReducedReport reduced_hamiltonian_check(int N, int M)
{
    if (M < 1 || 2 * M > N) throw InvalidInput("reduced_hamiltonian_check: need 1 <= M <= N/2");
    ReducedReport rep;
    rep.N = N;
    rep.M = M;
    rep.r = 2;
    rep.consistent = true;
    std::vector<int> up;
    for (int v = N - M - 1; v >= 0; --v) up.push_back(2 * v);
    bool have_constant = false;
    const DunklConfig scalar_cfg(M, Rational(1));
    for (const auto& sub : subsets(N - M, M)) {
        // kbar_down: M distinct values in {0..N-M-1}, decreasing
        std::vector<int> kd;
        for (auto it = sub.rbegin(); it != sub.rend(); ++it) kd.push_back(*it - 1);
        std::vector<int> down;
        for (int v : kd) down.push_back(2 * v + 1);
        const auto [sw, W] = normalize(concat(down, up), 2);
        const WedgeVector L = linear_action(W);

        LaurentPoly lhs(M);
        std::string bad;
        for (const auto& [k, coef] : L.terms()) {
            const Wedge out{k, 2};
            const auto parts = split_colours(out);
            std::vector<int> up_kbar(parts[0]);
            std::vector<int> expect;
            for (int v = N - M - 1; v >= 0; --v) expect.push_back(v);
            if (up_kbar != expect) {
                bad = "spin-up block changed in " + WedgeVector::single(out).to_string();
                break;
            }
            std::vector<int> d2;
            for (int v : parts[1]) d2.push_back(2 * v + 1);
            const int s2 = normalize(concat(d2, up), 2).first;
            lhs += alternant_poly(parts[1], M) * (coef * sw * s2);
        }
        ++rep.instances;
        if (!bad.empty()) {
            rep.consistent = false;
            if (rep.failure.empty()) rep.failure = bad;
            continue;
        }
        const LaurentPoly a = alternant_poly(kd, M);
        const LaurentPoly rhs = scalar_eff_hamiltonian(a, scalar_cfg, -1) -
                                total_momentum(a) * make_rational(N - M - 1, 2);
        const LaurentPoly diff = lhs - rhs;
        const auto& [e0, c0] = a.leading();
        const Rational c = diff.coeff(e0) / c0;
        if (diff != a * c) {
            rep.consistent = false;
            if (rep.failure.empty()) rep.failure = "not a multiple for kbar_down " + LaurentPoly::monomial(kd).to_string();
            continue;
        }
        if (!have_constant) {
            rep.constant = c;
            have_constant = true;
        } else if (c != rep.constant) {
            rep.consistent = false;
            if (rep.failure.empty())
                rep.failure = "constant " + to_short(c) + " differs from " + to_short(rep.constant);
        }
    }
    return rep;
}

ReducedReport reduced_hamiltonian_check_rank(int N, int r, int M0)
{
    if (r < 2) throw InvalidInput("reduced_hamiltonian_check_rank: rank must be at least 2");
    const int rest = N - M0;
    if (M0 < 1 || rest < 1 || (r - 1) * M0 < rest)
        throw InvalidInput("reduced_hamiltonian_check_rank: colour-0 block too small or too large");
    ReducedReport rep;
    rep.N = N;
    rep.M = M0;
    rep.r = r;
    rep.consistent = true;
    std::vector<int> block0;
    for (int v = M0 - 1; v >= 0; --v) block0.push_back(r * v);
    std::vector<int> allowed;  // decreasing
    for (int v = M0 - 1; v >= 0; --v)
        for (int a = r - 1; a >= 1; --a) allowed.push_back(r * v + a);

    auto reduce = [&](const std::vector<int>& ks) {
        std::vector<int> red;
        for (int k : ks) red.push_back((r - 1) * kbar_of(k, r) + colour_of(k, r) - 1);
        return red;
    };
    bool have_constant = false;
    for (const auto& sub : subsets(static_cast<int>(allowed.size()), rest)) {
        std::vector<int> others;
        for (int idx : sub) others.push_back(allowed[idx - 1]);
        const auto [sw, W] = normalize(concat(others, block0), r);
        const WedgeVector L = linear_action(W);

        WedgeVector lhs(rest, r - 1);
        std::string bad;
        for (const auto& [k, coef] : L.terms()) {
            std::vector<int> o, zero;
            for (int x : k) (colour_of(x, r) == 0 ? zero : o).push_back(x);
            if (zero != block0) {
                bad = "colour-0 block changed in " + WedgeVector::single(Wedge{k, r}).to_string();
                break;
            }
            const int s2 = normalize(concat(o, block0), r).first;
            lhs.add(reduce(o), coef * sw * s2);
        }
        ++rep.instances;
        if (!bad.empty()) {
            rep.consistent = false;
            if (rep.failure.empty()) rep.failure = bad;
            continue;
        }
        const SpinTable T = wedge_to_coordinate(WedgeVector::single(Wedge{reduce(others), r - 1}));
        const SpinTable rhs = add_tables(spin_eff_hamiltonian_coordinate(T, rest, Rational(1)),
                                         scaled(table_momentum(T), make_rational(-(M0 - 1), 2)));
        const SpinTable diff = add_tables(wedge_to_coordinate(lhs), scaled(rhs, Rational(-1)));
        Rational c;
        if (!solve_multiple(diff, T, c)) {
            rep.consistent = false;
            if (rep.failure.empty()) rep.failure = "not a multiple for " + WedgeVector::single(W).to_string();
            continue;
        }
        if (!have_constant) {
            rep.constant = c;
            have_constant = true;
        } else if (c != rep.constant) {
            rep.consistent = false;
            if (rep.failure.empty())
                rep.failure = "constant " + to_short(c) + " differs from " + to_short(rep.constant);
        }
    }
    return rep;
}

DescendantReport descendant_degree_probe(int N, int M, const Partition& lambda_down_old, int j, int n)
{
    if (static_cast<int>(lambda_down_old.size()) != M || !is_partition(lambda_down_old) ||
        (M > 0 && lambda_down_old.back() < 0))
        throw InvalidInput("descendant_degree_probe: lambda_down_old must be a partition with M parts");
    if (j < 1 || j > N - M) throw InvalidInput("descendant_degree_probe: need 1 <= j <= N-M");
    std::vector<int> kd(M);
    for (int m = 1; m <= M; ++m) {
        kd[m - 1] = lambda_down_old[m - 1] + M - m;
        if (kd[m - 1] >= N - M)
            throw InvalidInput("descendant_degree_probe: spin-down momenta not contained in delta_{N-M}");
    }
    const int v = N - M - j;
    if (std::find(kd.begin(), kd.end(), v) != kd.end())
        throw InvalidInput("descendant_degree_probe: N-M-j is already a spin-down momentum");
    int pos = 1;
    for (int x : kd)
        if (x > v) ++pos;
    if (n != pos)
        throw InvalidInput("descendant_degree_probe: n = " + std::to_string(n) +
                           " is not the sorted insertion position " + std::to_string(pos));

    DescendantReport rep;
    rep.n = n;
    rep.lambda_up_new = Partition(j - 1, 1);
    // piecewise rule
    Partition ld(M + 1);
    for (int m = 1; m <= M + 1; ++m) {
        if (m < n)
            ld[m - 1] = lambda_down_old[m - 1] - 1;
        else if (m == n)
            ld[m - 1] = N - 2 * M - 1 - j + m;
        else
            ld[m - 1] = lambda_down_old[m - 2];
    }
    rep.lambda_down_new = ld;
    // direct route via kbar -> lambda with M+1 spin-down entries
    std::vector<int> kd_new(kd);
    kd_new.insert(kd_new.begin() + (n - 1), v);
    Partition direct(M + 1);
    for (int m = 1; m <= M + 1; ++m) direct[m - 1] = kd_new[m - 1] - (M + 1) + m;
    std::vector<int> ku_new;
    for (int x = N - M - 1; x >= 0; --x)
        if (x != v) ku_new.push_back(x);
    Partition lu_direct(N - M - 1);
    for (int t = 1; t <= N - M - 1; ++t) lu_direct[t - 1] = ku_new[t - 1] - (N - M - 1) + t;
    Partition lu_expect(N - M - 1, 0);
    for (int t = 0; t < j - 1 && t < N - M - 1; ++t) lu_expect[t] = 1;
    rep.formula_matches = (direct == ld) && (lu_direct == lu_expect);
    rep.d_max = 2 * M + 1 + (j - 1) + ld[0];
    rep.claim_holds = (n == 1) ? rep.d_max == N : rep.d_max > N;
    return rep;
}

}  // namespace hsjack
