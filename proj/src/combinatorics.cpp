#include "hsjack/combinatorics.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace hsjack {

const char* to_string(Order o)
{
    switch (o) {
    case Order::Less: return "Less";
    case Order::Greater: return "Greater";
    case Order::Equal: return "Equal";
    case Order::Incomparable: return "Incomparable";
    }
    return "?";
}

namespace {

// Partial-sum dominance on equal-length tuples; assumes equal totals are
// handled by the caller (unequal totals are reported as incomparable).
Order partial_sum_compare(const std::vector<int>& a, const std::vector<int>& b)
{
    long sa = 0, sb = 0;
    bool ge = true, le = true;
    for (std::size_t i = 0; i < a.size(); ++i) {
        sa += a[i];
        sb += b[i];
        if (sa < sb) ge = false;
        if (sa > sb) le = false;
    }
    if (sa != sb) return Order::Incomparable;
    if (ge && le) return Order::Equal;
    if (ge) return Order::Greater;
    if (le) return Order::Less;
    return Order::Incomparable;
}

}  // namespace

Order dominance_compare(const Composition& a, const Composition& b)
{
    if (a.size() != b.size())
        throw InvalidInput("dominance_compare: length mismatch");
    const Order sorted = partial_sum_compare(sorted_decreasing(a), sorted_decreasing(b));
    if (sorted != Order::Equal) return sorted;
    return partial_sum_compare(a, b);
}

int sigma_rank(const Composition& lambda, int i)
{
    const int n = static_cast<int>(lambda.size());
    if (i < 1 || i > n) throw InvalidInput("sigma_rank: index out of range");
    const int li = lambda[i - 1];
    int s = 1;
    for (int k = 1; k < i; ++k)
        if (lambda[k - 1] >= li) ++s;
    for (int k = i + 1; k <= n; ++k)
        if (lambda[k - 1] > li) ++s;
    return s;
}

Rational dunkl_eigenvalue(const Composition& lambda, int i, const Rational& alpha)
{
    const int n = static_cast<int>(lambda.size());
    const int s = sigma_rank(lambda, i);
    return alpha * lambda[i - 1] + make_rational(n - 2 * s + 1, 2);
}

Partition sorted_decreasing(const Composition& c)
{
    Partition p(c);
    std::sort(p.begin(), p.end(), std::greater<int>());
    return p;
}

Composition reversed(const Composition& c) { return Composition(c.rbegin(), c.rend()); }

Partition conjugate(const Partition& p)
{
    if (!is_partition(p)) throw InvalidInput("conjugate: not a partition");
    if (!p.empty() && p.back() < 0) throw InvalidInput("conjugate: negative part");
    const int cols = p.empty() ? 0 : p.front();
    Partition c(cols, 0);
    for (int part : p)
        for (int j = 0; j < part; ++j) ++c[j];
    return c;
}

Partition staircase(int n)
{
    Partition d(n);
    for (int j = 0; j < n; ++j) d[j] = n - 1 - j;
    return d;
}

Composition boost(const Composition& c, int l)
{
    Composition out(c);
    for (int& x : out) x += l;
    return out;
}

long weight(const Composition& c) { return std::accumulate(c.begin(), c.end(), 0L); }

bool is_partition(const Composition& c)
{
    return std::is_sorted(c.begin(), c.end(), std::greater<int>());
}

bool is_strict_partition(const Composition& c)
{
    for (std::size_t i = 1; i < c.size(); ++i)
        if (c[i - 1] <= c[i]) return false;
    return true;
}

Partition strip_zeros(const Partition& p)
{
    Partition out;
    for (int x : p)
        if (x != 0) out.push_back(x);
    return out;
}

std::vector<Composition> compositions(int total, int n)
{
    std::vector<Composition> out;
    if (n <= 0) {
        if (total == 0) out.emplace_back();
        return out;
    }
    Composition cur(n, 0);
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == n - 1) {
            cur[pos] = left;
            out.push_back(cur);
            return;
        }
        for (int v = left; v >= 0; --v) {
            cur[pos] = v;
            rec(pos + 1, left - v);
        }
    };
    if (total >= 0) rec(0, total);
    return out;
}

std::vector<Partition> partitions(int total, int max_len, int max_part)
{
    std::vector<Partition> out;
    if (total < 0 || max_len < 0) return out;
    Partition cur(max_len, 0);
    std::function<void(int, int, int)> rec = [&](int pos, int left, int cap) {
        if (left == 0) {
            Partition p(cur);
            std::fill(p.begin() + pos, p.end(), 0);
            out.push_back(p);
            return;
        }
        if (pos == max_len) return;
        for (int v = std::min(left, cap); v >= 1; --v) {
            cur[pos] = v;
            rec(pos + 1, left - v, v);
        }
    };
    rec(0, total, max_part < 0 ? total : max_part);
    return out;
}

Rational ground_energy(int N) { return make_rational(N * (N * N - 1), 12); }

std::string to_string(const Motif& m)
{
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < m.entries.size(); ++i) os << (i ? "," : "") << m.entries[i];
    os << ")";
    return os.str();
}

bool is_valid_motif(const std::vector<int>& e, int N, int r)
{
    if (r < 2 || N < 1) return false;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] <= 0 || e[i] >= N) return false;
        if (i > 0 && e[i] <= e[i - 1]) return false;
    }
    // r consecutive integers present <=> e[i + r - 1] == e[i] + r - 1
    for (std::size_t i = 0; i + r - 1 < e.size(); ++i)
        if (e[i + r - 1] == e[i] + r - 1) return false;
    return true;
}

Motif make_motif(const std::vector<int>& entries, int N, int r)
{
    if (!is_valid_motif(entries, N, r)) {
        Motif tmp{entries, N, r};
        throw InvalidInput("invalid rank-" + std::to_string(r) + " motif " + to_string(tmp) +
                           " for N=" + std::to_string(N));
    }
    return Motif{entries, N, r};
}

std::vector<Motif> enumerate_motifs(int N, int r)
{
    std::vector<Motif> out;
    if (N < 1 || r < 2) return out;
    std::vector<int> cur;
    // run = length of the block of consecutive integers ending at cur.back()
    std::function<void(int, int)> rec = [&](int next, int run) {
        out.push_back(Motif{cur, N, r});
        for (int v = next; v <= N - 1; ++v) {
            const int newrun = (!cur.empty() && v == cur.back() + 1) ? run + 1 : 1;
            if (newrun >= r) continue;
            cur.push_back(v);
            rec(v + 1, newrun);
            cur.pop_back();
        }
    };
    rec(1, 0);
    std::stable_sort(out.begin(), out.end(), [](const Motif& a, const Motif& b) {
        if (a.entries.size() != b.entries.size()) return a.entries.size() < b.entries.size();
        return a.entries < b.entries;
    });
    return out;
}

std::uint64_t degeneracy(const Motif& mu)
{
    if (mu.r != 2 || !is_valid_motif(mu.entries, mu.N, 2))
        throw InvalidInput("degeneracy: not a valid rank-2 motif " + to_string(mu));
    const auto& e = mu.entries;
    if (e.empty()) return static_cast<std::uint64_t>(mu.N) + 1;
    std::uint64_t d = static_cast<std::uint64_t>(e.front()) * static_cast<std::uint64_t>(mu.N - e.back());
    for (std::size_t m = 0; m + 1 < e.size(); ++m) d *= static_cast<std::uint64_t>(e[m + 1] - e[m] - 1);
    return d;
}

Rational hs_motif_energy(const Motif& mu)
{
    long twice = 0;
    for (int m : mu.entries) twice += static_cast<long>(m) * (mu.N - m);
    return make_rational(twice, 2);
}

Rational hs_motif_energy_minus(const Motif& mu) { return ground_energy(mu.N) - hs_motif_energy(mu); }

int motif_momentum(const Motif& mu)
{
    long s = 0;
    for (int m : mu.entries) s += m;
    return static_cast<int>(((s % mu.N) + mu.N) % mu.N);
}

Motif motif_from_kbar(const Composition& kbar, int N, int r)
{
    if (static_cast<int>(kbar.size()) != N) throw InvalidInput("motif_from_kbar: length must be N");
    if (!is_partition(kbar)) throw InvalidInput("motif_from_kbar: kbar must weakly decrease");
    const Composition k = boost(kbar, -kbar.back());
    std::map<int, int> mult;
    for (int v : k) ++mult[v];
    const int distinct = static_cast<int>(mult.size());
    for (auto [v, c] : mult) {
        if (c > r)
            throw InvalidInput("motif_from_kbar: value " + std::to_string(v) + " repeated " +
                               std::to_string(c) + " times exceeds one per colour");
        if (v >= distinct)
            throw InvalidInput("motif_from_kbar: colour-0 momenta are not tightly packed");
    }
    // Remove one copy of 0..distinct-1 (the colour-0 block); the rest are particles.
    Composition rest;
    for (auto [v, c] : mult)
        for (int t = 1; t < c; ++t) rest.push_back(v);
    std::sort(rest.begin(), rest.end(), std::greater<int>());
    const int M = static_cast<int>(rest.size());
    std::vector<int> mu(M);
    for (int m = 1; m <= M; ++m) mu[m - 1] = rest[M - m] + m;
    return make_motif(mu, N, r);
}

Composition kbar_from_motif(const Motif& mu)
{
    const int N = mu.N;
    Composition k(N);
    for (int j = 1; j <= N; ++j) {
        int count = 0;
        for (int m : mu.entries)
            if (N - j - m >= 0) ++count;  // theta(0) = 1
        k[j - 1] = N - j - count;
    }
    return k;
}

}  // namespace hsjack
