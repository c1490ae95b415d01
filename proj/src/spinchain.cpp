#include "hsjack/spinchain.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

namespace hsjack {

namespace {
const double kPi = 3.14159265358979323846264338327950288;
}

CouplingTable::CouplingTable(int N) : n_(N), v_(N > 0 ? N : 1, 0.0)
{
    if (N < 1) throw InvalidInput("CouplingTable: N must be positive");
    for (int n = 1; n < N; ++n) {
        const double s = std::sin(kPi * n / N);
        v_[n] = 1.0 / (4.0 * s * s);
    }
}

double CouplingTable::operator()(int d) const
{
    int m = d % n_;
    if (m < 0) m += n_;
    return v_[m];
}

std::size_t basis_size(int N, int r)
{
    std::size_t d = 1;
    for (int i = 0; i < N; ++i) d *= static_cast<std::size_t>(r);
    return d;
}

SpinVector::SpinVector(int n, int rank) : N(n), r(rank), entries(Eigen::VectorXcd::Zero(basis_size(n, rank))) {}

std::vector<int> word_of(std::size_t index, int N, int r)
{
    std::vector<int> w(N);
    for (int i = N - 1; i >= 0; --i) {
        w[i] = static_cast<int>(index % r);
        index /= r;
    }
    return w;
}

std::size_t index_of(const std::vector<int>& word, int r)
{
    std::size_t idx = 0;
    for (int a : word) idx = idx * r + a;
    return idx;
}

SpinVector ferromagnet(int N, int r)
{
    SpinVector v(N, r);
    v.entries[0] = 1.0;
    return v;
}

SpinVector random_vector(int N, int r, std::uint64_t seed)
{
    SpinVector v(N, r);
    std::mt19937_64 gen(seed);
    std::normal_distribution<double> g(0.0, 1.0);
    for (Eigen::Index k = 0; k < v.entries.size(); ++k) v.entries[k] = {g(gen), g(gen)};
    return v;
}

namespace {

// Powers r^(N-i) for site i (1-based).
std::vector<std::size_t> place_values(int N, int r)
{
    std::vector<std::size_t> p(N + 1, 1);
    for (int i = N - 1; i >= 1; --i) p[i] = p[i + 1] * r;
    return p;
}

std::size_t swap_sites(std::size_t idx, int i, int j, const std::vector<int>& w, const std::vector<std::size_t>& pv)
{
    const long di = w[i - 1], dj = w[j - 1];
    return idx + (dj - di) * pv[i] + (di - dj) * pv[j];
}

}  // namespace

SpinVector hs_apply(const SpinVector& v, int sign, const CouplingTable& V)
{
    if (sign != 1 && sign != -1) throw InvalidInput("hs_apply: sign must be +1 or -1");
    const int N = v.N, r = v.r;
    const auto pv = place_values(N, r);
    SpinVector out(N, r);
    for (std::size_t idx = 0; idx < v.dim(); ++idx) {
        const std::complex<double> c = v.entries[idx];
        if (c == 0.0) continue;
        const std::vector<int> w = word_of(idx, N, r);
        for (int i = 1; i <= N; ++i)
            for (int j = i + 1; j <= N; ++j) {
                const double coup = V(i - j);
                out.entries[idx] += coup * c;
                const std::size_t s = swap_sites(idx, i, j, w, pv);
                if (sign > 0)
                    out.entries[s] -= coup * c;
                else
                    out.entries[s] += coup * c;
            }
    }
    return out;
}

SpinVector hs_apply(const SpinVector& v, int sign) { return hs_apply(v, sign, CouplingTable(v.N)); }

SpinVector translation(const SpinVector& v)
{
    SpinVector out(v.N, v.r);
    for (std::size_t idx = 0; idx < v.dim(); ++idx) {
        std::vector<int> w = word_of(idx, v.N, v.r);
        std::rotate(w.begin(), w.begin() + 1, w.end());
        out.entries[index_of(w, v.r)] += v.entries[idx];
    }
    return out;
}

int momentum_of(const SpinVector& v, double tol)
{
    const double nv = v.norm();
    if (nv == 0) throw InvalidInput("momentum_of: zero vector");
    const SpinVector t = translation(v);
    const std::complex<double> lambda = v.entries.dot(t.entries) / (nv * nv);
    const double resid = (t.entries - lambda * v.entries).norm() / nv;
    if (resid > tol || std::abs(std::abs(lambda) - 1.0) > tol)
        throw InvalidInput("momentum_of: not a translation eigenvector (residual " + std::to_string(resid) + ")");
    const double q = std::arg(lambda) / (2 * kPi / v.N);
    const long qi = std::lround(q);
    if (std::abs(q - qi) > 1e-6) throw InvalidInput("momentum_of: phase is not an N-th root of unity");
    return static_cast<int>(((qi % v.N) + v.N) % v.N);
}

namespace {

std::vector<double> cluster(std::vector<double> vals, double tol, std::vector<int>& mult)
{
    std::sort(vals.begin(), vals.end());
    std::vector<double> out;
    mult.clear();
    for (double x : vals) {
        if (!out.empty() && x - out.back() <= tol) {
            // keep the running mean so long clusters stay centred
            const int m = mult.back();
            out.back() = (out.back() * m + x) / (m + 1);
            ++mult.back();
        } else {
            out.push_back(x);
            mult.push_back(1);
        }
    }
    return out;
}

}  // namespace

std::vector<SectorLevel> exact_spectrum_by_sector(int N, int r, int sign, double cluster_tol, std::size_t limit)
{
    if (N < 1 || r < 1) throw InvalidInput("exact_spectrum: need N >= 1 and r >= 1");
    const std::size_t dim = basis_size(N, r);
    if (dim > limit)
        throw InvalidInput("exact_spectrum: r^N = " + std::to_string(dim) + " exceeds the dense limit " +
                           std::to_string(limit));
    const CouplingTable V(N);
    const auto pv = place_values(N, r);

    std::map<std::vector<int>, std::vector<std::size_t>> sectors;
    for (std::size_t idx = 0; idx < dim; ++idx) {
        const auto w = word_of(idx, N, r);
        std::vector<int> weight(r, 0);
        for (int a : w) ++weight[a];
        sectors[weight].push_back(idx);
    }
    std::vector<SectorLevel> out;
    std::vector<long> pos(dim, -1);
    for (const auto& [weight, states] : sectors) {
        const Eigen::Index d = static_cast<Eigen::Index>(states.size());
        for (Eigen::Index a = 0; a < d; ++a) pos[states[a]] = a;
        Eigen::MatrixXd H = Eigen::MatrixXd::Zero(d, d);
        for (Eigen::Index a = 0; a < d; ++a) {
            const std::size_t idx = states[a];
            const auto w = word_of(idx, N, r);
            for (int i = 1; i <= N; ++i)
                for (int j = i + 1; j <= N; ++j) {
                    const double coup = V(i - j);
                    H(a, a) += coup;
                    const long b = pos[swap_sites(idx, i, j, w, pv)];
                    H(b, a) += sign > 0 ? -coup : coup;
                }
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(H, Eigen::EigenvaluesOnly);
        if (solver.info() != Eigen::Success) throw std::runtime_error("exact_spectrum: eigensolver failed");
        std::vector<double> vals(solver.eigenvalues().data(), solver.eigenvalues().data() + d);
        std::vector<int> mult;
        const auto levels = cluster(vals, cluster_tol, mult);
        for (std::size_t k = 0; k < levels.size(); ++k) out.push_back({weight, levels[k], mult[k]});
        for (std::size_t s : states) pos[s] = -1;
    }
    return out;
}

std::vector<Level> exact_spectrum(int N, int r, int sign, double cluster_tol, std::size_t limit)
{
    std::vector<double> all;
    for (const auto& s : exact_spectrum_by_sector(N, r, sign, cluster_tol, limit))
        for (int m = 0; m < s.multiplicity; ++m) all.push_back(s.value);
    std::vector<int> mult;
    const auto vals = cluster(all, cluster_tol, mult);
    std::vector<Level> out;
    for (std::size_t k = 0; k < vals.size(); ++k) out.push_back({vals[k], mult[k]});
    return out;
}

Generator parse_generator(const std::string& name)
{
    static const std::map<std::string, Generator> table{
        {"S+", Generator::Splus}, {"S-", Generator::Sminus}, {"Sz", Generator::Sz},
        {"Q+", Generator::Qplus}, {"Q-", Generator::Qminus}, {"Qz", Generator::Qz}};
    auto it = table.find(name);
    if (it == table.end()) throw InvalidInput("unknown generator " + name);
    return it->second;
}

const char* to_string(Generator g)
{
    switch (g) {
    case Generator::Splus: return "S+";
    case Generator::Sminus: return "S-";
    case Generator::Sz: return "Sz";
    case Generator::Qplus: return "Q+";
    case Generator::Qminus: return "Q-";
    case Generator::Qz: return "Qz";
    }
    return "?";
}

namespace {

// Pauli conventions on colour digits: 0 = up (sigma^z = +1), 1 = down.
int sz(int a) { return a == 0 ? 1 : -1; }

}  // namespace

SpinVector yangian_apply(Generator which, const SpinVector& v)
{
    if (v.r != 2) throw InvalidInput("yangian_apply: only defined for rank 2");
    const int N = v.N;
    const auto pv = place_values(N, 2);
    SpinVector out(N, 2);
    const std::complex<double> half_i(0.0, 0.5);
    std::vector<std::vector<double>> cot(N + 1, std::vector<double>(N + 1, 0.0));
    for (int i = 1; i <= N; ++i)
        for (int j = i + 1; j <= N; ++j) cot[i][j] = 1.0 / std::tan(kPi * (i - j) / N);

    for (std::size_t idx = 0; idx < v.dim(); ++idx) {
        const std::complex<double> c = v.entries[idx];
        if (c == 0.0) continue;
        const auto w = word_of(idx, N, 2);
        switch (which) {
        case Generator::Sz: {
            int s = 0;
            for (int a : w) s += sz(a);
            out.entries[idx] += 0.5 * s * c;
            break;
        }
        case Generator::Splus:
        case Generator::Sminus: {
            const int from = which == Generator::Splus ? 1 : 0;
            for (int i = 1; i <= N; ++i)
                if (w[i - 1] == from) {
                    const long delta = which == Generator::Splus ? -1 : 1;
                    out.entries[idx + delta * pv[i]] += c;
                }
            break;
        }
        case Generator::Qplus:
        case Generator::Qminus: {
            // (i/2) sum cot (s_i sz_j - sz_i s_j), with an extra minus sign for Q-.
            const int from = which == Generator::Qplus ? 1 : 0;
            const long delta = which == Generator::Qplus ? -1 : 1;
            const std::complex<double> pre = which == Generator::Qplus ? half_i : -half_i;
            for (int i = 1; i <= N; ++i)
                for (int j = i + 1; j <= N; ++j) {
                    if (w[i - 1] == from) out.entries[idx + delta * pv[i]] += pre * cot[i][j] * double(sz(w[j - 1])) * c;
                    if (w[j - 1] == from) out.entries[idx + delta * pv[j]] -= pre * cot[i][j] * double(sz(w[i - 1])) * c;
                }
            break;
        }
        case Generator::Qz: {
            // (i/2) sum cot (s+_i s-_j - s-_i s+_j)
            for (int i = 1; i <= N; ++i)
                for (int j = i + 1; j <= N; ++j) {
                    if (w[i - 1] == 1 && w[j - 1] == 0)
                        out.entries[idx - pv[i] + pv[j]] += half_i * cot[i][j] * c;
                    if (w[i - 1] == 0 && w[j - 1] == 1)
                        out.entries[idx + pv[i] - pv[j]] -= half_i * cot[i][j] * c;
                }
            break;
        }
        }
    }
    return out;
}

}  // namespace hsjack
