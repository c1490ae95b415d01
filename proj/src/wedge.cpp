#include "hsjack/wedge.hpp"

#include "hsjack/symfun.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hsjack {

int kbar_of(int k, int r)
{
    int q = k / r;
    if (k % r != 0 && k < 0) --q;
    return q;
}

int colour_of(int k, int r) { return k - r * kbar_of(k, r); }

Composition Wedge::kbar() const
{
    Composition out(k.size());
    for (std::size_t i = 0; i < k.size(); ++i) out[i] = kbar_of(k[i], r);
    return out;
}

std::vector<int> Wedge::colours() const
{
    std::vector<int> out(k.size());
    for (std::size_t i = 0; i < k.size(); ++i) out[i] = colour_of(k[i], r);
    return out;
}

std::pair<int, Wedge> normalize(const std::vector<int>& k, int r)
{
    if (r < 1) throw InvalidInput("normalize: rank must be positive");
    std::vector<int> s(k);
    // insertion sort counting transpositions
    int sign = 1;
    for (std::size_t a = 1; a < s.size(); ++a)
        for (std::size_t b = a; b > 0 && s[b - 1] <= s[b]; --b) {
            if (s[b - 1] == s[b]) return {0, Wedge{s, r}};
            std::swap(s[b - 1], s[b]);
            sign = -sign;
        }
    return {sign, Wedge{s, r}};
}

WedgeVector WedgeVector::single(const Wedge& w, const Rational& c)
{
    WedgeVector v(w.size(), w.r);
    v.add(w.k, c);
    return v;
}

Rational WedgeVector::coeff(const std::vector<int>& k) const
{
    auto it = terms_.find(k);
    return it == terms_.end() ? Rational(0) : it->second;
}

void WedgeVector::add(const std::vector<int>& k, const Rational& c)
{
    if (static_cast<int>(k.size()) != n_) throw std::invalid_argument("WedgeVector: length mismatch");
    if (c == 0) return;
    auto [sign, w] = normalize(k, r_);
    if (sign == 0) return;
    auto [it, inserted] = terms_.emplace(w.k, sign > 0 ? c : Rational(-c));
    if (!inserted) {
        if (sign > 0)
            it->second += c;
        else
            it->second -= c;
        if (it->second == 0) terms_.erase(it);
    }
}

WedgeVector& WedgeVector::operator+=(const WedgeVector& o)
{
    if (n_ != o.n_ || r_ != o.r_) throw std::invalid_argument("WedgeVector: shape mismatch");
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
}

WedgeVector& WedgeVector::operator-=(const WedgeVector& o)
{
    if (n_ != o.n_ || r_ != o.r_) throw std::invalid_argument("WedgeVector: shape mismatch");
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
}

WedgeVector& WedgeVector::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, v] : terms_) v *= c;
    return *this;
}

std::string WedgeVector::to_string() const
{
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        Rational a = c;
        if (first) {
            if (a < 0) os << "-";
        } else {
            os << (a < 0 ? " - " : " + ");
        }
        first = false;
        if (a < 0) a = -a;
        if (a != 1) os << (a.get_den() == 1 ? to_short(a) : "(" + to_short(a) + ")") << " ";
        os << "u(";
        for (std::size_t i = 0; i < k.size(); ++i) os << (i ? "," : "") << k[i];
        os << ")";
    }
    return os.str();
}

std::vector<std::vector<int>> split_colours(const Wedge& w)
{
    std::vector<std::vector<int>> out(w.r);
    for (int k : w.k) out[colour_of(k, w.r)].push_back(kbar_of(k, w.r));
    return out;
}

WedgeVector squeeze(int i, int j, const Wedge& w)
{
    const int N = w.size();
    if (i < 1 || j > N || i >= j) throw InvalidInput("squeeze: need 1 <= i < j <= N");
    WedgeVector out(N, w.r);
    const int gap = kbar_of(w.k[i - 1], w.r) - kbar_of(w.k[j - 1], w.r);
    std::vector<int> k(w.k);
    for (int p = 1; p <= gap - 1; ++p) {
        k[i - 1] = w.k[i - 1] - w.r * p;
        k[j - 1] = w.k[j - 1] + w.r * p;
        out.add(k, Rational(gap - p));
    }
    return out;
}

Rational wedge_energy(const Composition& kbar, const Rational& beta)
{
    const int N = static_cast<int>(kbar.size());
    Rational quad = 0, lin = 0;
    for (int i = 1; i <= N; ++i) {
        const int x = kbar[i - 1];
        quad += make_rational(x * x, 2);
        lin += make_rational((N - 2 * i + 1) * x, 2);
    }
    return quad + beta * lin;
}

Rational offdiag_prefactor(int r)
{
    (void)r;
    return Rational(1);
}

WedgeVector apply_spin_eff_hamiltonian(const WedgeVector& v, const Rational& beta)
{
    const int N = v.num_particles();
    const Rational c = offdiag_prefactor(v.rank()) * beta;
    WedgeVector out(N, v.rank());
    for (const auto& [k, coef] : v.terms()) {
        const Wedge w{k, v.rank()};
        out.add(k, coef * wedge_energy(w.kbar(), beta));
        if (c == 0) continue;
        for (int i = 1; i <= N; ++i)
            for (int j = i + 1; j <= N; ++j) out += squeeze(i, j, w) * (coef * c);
    }
    return out;
}

WedgeVector uglov_eigenvector(const Wedge& top, const Rational& beta, std::size_t cap)
{
    const int N = top.size();
    const int r = top.r;
    auto [sign, w] = normalize(top.k, r);
    if (sign == 0) throw InvalidInput("uglov_eigenvector: wedge vanishes (repeated entry)");

    // Closure under squeezing.
    std::set<std::vector<int>, LexDesc> seen{w.k};
    std::deque<std::vector<int>> queue{w.k};
    while (!queue.empty()) {
        const Wedge cur{queue.front(), r};
        queue.pop_front();
        for (int i = 1; i <= N; ++i)
            for (int j = i + 1; j <= N; ++j) {
                const WedgeVector sq = squeeze(i, j, cur);
                for (const auto& [k, c] : sq.terms()) {
                    if (seen.insert(k).second) {
                        if (seen.size() > cap)
                            throw std::length_error("uglov_eigenvector: reachable set exceeds cap of " +
                                                    std::to_string(cap) + " wedges");
                        queue.push_back(k);
                    }
                }
            }
    }
    // Linear extension: squeezing strictly lowers the sorted kbar in dominance.
    std::vector<std::pair<Composition, std::vector<int>>> order;
    for (const auto& k : seen) order.emplace_back(sorted_decreasing(Wedge{k, r}.kbar()), k);
    std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first > b.first;
        return a.second > b.second;
    });
    if (order.front().second != w.k) throw std::logic_error("uglov_eigenvector: top wedge is not maximal");

    const Rational E = wedge_energy(w.kbar(), beta);
    const Rational c = offdiag_prefactor(r) * beta;
    std::map<std::vector<int>, Rational> acc;
    WedgeVector result(N, r);
    for (std::size_t idx = 0; idx < order.size(); ++idx) {
        const std::vector<int>& k = order[idx].second;
        Rational coef;
        if (idx == 0) {
            coef = 1;
        } else {
            auto it = acc.find(k);
            if (it == acc.end() || it->second == 0) continue;
            const Rational gap = E - wedge_energy(Wedge{k, r}.kbar(), beta);
            if (gap == 0)
                throw SingularSystem("uglov_eigenvector: eigenvalue collision at " +
                                     WedgeVector::single(Wedge{k, r}).to_string());
            coef = it->second / gap;
        }
        result.add(k, coef);
        const Wedge cur{k, r};
        for (int i = 1; i <= N; ++i)
            for (int j = i + 1; j <= N; ++j) {
                const WedgeVector sq = squeeze(i, j, cur);
                for (const auto& [k2, v] : sq.terms()) acc[k2] += coef * c * v;
            }
    }
    return result;
}

SpinTable wedge_to_coordinate(const WedgeVector& v)
{
    const int N = v.num_particles();
    const int r = v.rank();
    SpinTable out;
    std::vector<int> word(N);
    Exponent e(N);
    for (const auto& [k, coef] : v.terms()) {
        std::vector<int> kb(N), col(N);
        for (int a = 0; a < N; ++a) {
            kb[a] = kbar_of(k[a], r);
            col[a] = colour_of(k[a], r);
        }
        for_each_permutation(N, [&](const std::vector<int>& sigma, int sgn) {
            for (int i = 0; i < N; ++i) {
                word[i] = col[sigma[i]];
                e[i] = kb[sigma[i]];
            }
            auto it = out.find(word);
            if (it == out.end()) it = out.emplace(word, LaurentPoly(N)).first;
            it->second.add_term(e, sgn > 0 ? coef : Rational(-coef));
        });
    }
    return prune(out);
}

SpinTable prune(const SpinTable& t)
{
    SpinTable out;
    for (const auto& [w, p] : t)
        if (!p.is_zero()) out.emplace(w, p);
    return out;
}

SpinTable scaled(const SpinTable& t, const Rational& c)
{
    SpinTable out;
    if (c == 0) return out;
    for (const auto& [w, p] : t) out.emplace(w, p * c);
    return out;
}

SpinTable add_tables(const SpinTable& a, const SpinTable& b)
{
    SpinTable out(a);
    for (const auto& [w, p] : b) {
        auto it = out.find(w);
        if (it == out.end())
            out.emplace(w, p);
        else
            it->second += p;
    }
    return prune(out);
}

SpinTable spin_eff_hamiltonian_coordinate(const SpinTable& F, int N, const Rational& beta)
{
    SpinTable out;
    auto component = [&](const std::vector<int>& w) -> LaurentPoly {
        auto it = F.find(w);
        return it == F.end() ? LaurentPoly(N) : it->second;
    };
    // Words reachable from the support by transpositions of sites.
    std::set<std::vector<int>> words;
    for (const auto& [w, p] : F) {
        words.insert(w);
        for (int i = 0; i < N; ++i)
            for (int j = i + 1; j < N; ++j) {
                std::vector<int> s(w);
                std::swap(s[i], s[j]);
                words.insert(s);
            }
    }
    for (const auto& w : words) {
        const LaurentPoly f = component(w);
        LaurentPoly h(N);
        for (int j = 1; j <= N; ++j) h += euler(euler(f, j), j) * Rational(1, 2);
        for (int i = 1; i <= N; ++i)
            for (int j = i + 1; j <= N; ++j) {
                std::vector<int> s(w);
                std::swap(s[i - 1], s[j - 1]);
                const LaurentPoly g = component(s);
                if (f.is_zero() && g.is_zero()) continue;
                const LaurentPoly zi = LaurentPoly::variable(N, i), zj = LaurentPoly::variable(N, j);
                const LaurentPoly D = euler(f, i) - euler(f, j);
                LaurentPoly num = (zi * zi - zj * zj) * D * Rational(1, 2) - zi * zj * (f + g);
                h += divide_by_difference(divide_by_difference(num, i, j), i, j) * beta;
            }
        if (!h.is_zero()) out.emplace(w, std::move(h));
    }
    return out;
}

}  // namespace hsjack
