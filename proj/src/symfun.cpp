#include "hsjack/symfun.hpp"

#include <functional>
#include <stdexcept>

namespace hsjack {

namespace {

std::vector<int> resolve(int N, const std::vector<int>& vars)
{
    if (vars.empty()) return all_vars(N);
    for (int v : vars)
        if (v < 1 || v > N) throw std::out_of_range("variable index out of range");
    return vars;
}

}  // namespace

std::vector<int> all_vars(int N)
{
    std::vector<int> v(N);
    for (int j = 0; j < N; ++j) v[j] = j + 1;
    return v;
}

LaurentPoly vandermonde(int N, const std::vector<int>& vars)
{
    const auto v = resolve(N, vars);
    LaurentPoly r = LaurentPoly::constant(N, 1);
    for (std::size_t a = 0; a < v.size(); ++a)
        for (std::size_t b = a + 1; b < v.size(); ++b)
            r = r * (LaurentPoly::variable(N, v[a]) - LaurentPoly::variable(N, v[b]));
    return r;
}

LaurentPoly alternant(const std::vector<int>& k, int N, const std::vector<int>& vars)
{
    const auto v = resolve(N, vars);
    if (k.size() != v.size()) throw std::invalid_argument("alternant: length mismatch");
    LaurentPoly r(N);
    const int m = static_cast<int>(v.size());
    Exponent e(N, 0);
    for_each_permutation(m, [&](const std::vector<int>& p, int sign) {
        std::fill(e.begin(), e.end(), 0);
        for (int a = 0; a < m; ++a) e[v[a] - 1] = k[p[a]];
        r.add_term(e, Rational(sign));
    });
    return r;
}

LaurentPoly schur(const Partition& lambda, int N, const std::vector<int>& vars)
{
    const auto v = resolve(N, vars);
    const int m = static_cast<int>(v.size());
    Partition lam = strip_zeros(lambda);
    if (!is_partition(lam)) throw InvalidInput("schur: not a partition");
    if (static_cast<int>(lam.size()) > m) return LaurentPoly(N);
    lam.resize(m, 0);
    std::vector<int> k(m);
    for (int a = 0; a < m; ++a) k[a] = lam[a] + m - 1 - a;
    return divide_exact(alternant(k, N, v), vandermonde(N, v));
}

LaurentPoly elementary(int n, int N, const std::vector<int>& vars)
{
    const auto v = resolve(N, vars);
    const int m = static_cast<int>(v.size());
    LaurentPoly r(N);
    if (n < 0 || n > m) return r;
    Exponent e(N, 0);
    std::function<void(int, int)> rec = [&](int start, int left) {
        if (left == 0) {
            r.add_term(e, Rational(1));
            return;
        }
        for (int a = start; a <= m - left; ++a) {
            e[v[a] - 1] = 1;
            rec(a + 1, left - 1);
            e[v[a] - 1] = 0;
        }
    };
    rec(0, n);
    return r;
}

LaurentPoly powersum(int n, int N, const std::vector<int>& vars)
{
    const auto v = resolve(N, vars);
    LaurentPoly r(N);
    for (int x : v) {
        Exponent e(N, 0);
        e[x - 1] = n;
        r.add_term(e, Rational(1));
    }
    return r;
}

LaurentPoly complete(int n, int N, const std::vector<int>& vars)
{
    const auto v = resolve(N, vars);
    const int m = static_cast<int>(v.size());
    LaurentPoly r(N);
    if (n < 0) return r;
    for (const auto& c : compositions(n, m)) {
        Exponent e(N, 0);
        for (int a = 0; a < m; ++a) e[v[a] - 1] = c[a];
        r.add_term(e, Rational(1));
    }
    return r;
}

LaurentPoly monomial_sym(const Partition& lambda, int N, const std::vector<int>& vars)
{
    const auto v = resolve(N, vars);
    const int m = static_cast<int>(v.size());
    Partition lam = sorted_decreasing(lambda);
    if (static_cast<int>(lam.size()) > m) {
        for (std::size_t a = m; a < lam.size(); ++a)
            if (lam[a] != 0) return LaurentPoly(N);
        lam.resize(m);
    }
    lam.resize(m, 0);
    std::sort(lam.begin(), lam.end());
    LaurentPoly r(N);
    do {
        Exponent e(N, 0);
        for (int a = 0; a < m; ++a) e[v[a] - 1] = lam[a];
        r.set_term(e, Rational(1));
    } while (std::next_permutation(lam.begin(), lam.end()));
    return r;
}

LaurentPoly symmetrize(const LaurentPoly& f, int sign, const std::vector<int>& blocks_in)
{
    const int N = f.num_vars();
    std::vector<int> blocks = blocks_in.empty() ? std::vector<int>{N} : blocks_in;
    int total = 0;
    for (int b : blocks) total += b;
    if (total != N) throw std::invalid_argument("symmetrize: block sizes must sum to N");
    if (sign != 1 && sign != -1) throw std::invalid_argument("symmetrize: sign must be +1 or -1");

    LaurentPoly cur = f;
    int offset = 0;
    for (int b : blocks) {
        LaurentPoly acc(N);
        std::vector<int> sigma(N);
        for_each_permutation(b, [&](const std::vector<int>& p, int sgn) {
            for (int k = 0; k < N; ++k) sigma[k] = k;
            for (int a = 0; a < b; ++a) sigma[offset + a] = offset + p[a];
            LaurentPoly t = cur.permuted(sigma);
            if (sign < 0 && sgn < 0)
                acc -= t;
            else
                acc += t;
        });
        cur = std::move(acc);
        offset += b;
    }
    return cur;
}

int sort_sign(const std::vector<int>& v)
{
    int sign = 1;
    for (std::size_t a = 0; a < v.size(); ++a)
        for (std::size_t b = a + 1; b < v.size(); ++b) {
            if (v[a] == v[b]) return 0;
            if (v[a] < v[b]) sign = -sign;
        }
    return sign;
}

}  // namespace hsjack
