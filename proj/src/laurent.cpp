#include "hsjack/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hsjack {

namespace {

void check_vars(int a, int b)
{
    if (a != b) throw std::invalid_argument("LaurentPoly: variable count mismatch");
}

std::string monomial_string(const Exponent& e)
{
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < e.size(); ++k) {
        if (e[k] == 0) continue;
        if (!first) os << ' ';
        first = false;
        os << 'z' << (k + 1);
        if (e[k] != 1) os << '^' << e[k];
    }
    return os.str();
}

std::string exponent_string(const Exponent& e)
{
    std::ostringstream os;
    os << '(';
    for (std::size_t k = 0; k < e.size(); ++k) os << (k ? "," : "") << e[k];
    os << ')';
    return os.str();
}

}  // namespace

LaurentPoly LaurentPoly::constant(int num_vars, const Rational& c)
{
    LaurentPoly p(num_vars);
    p.add_term(Exponent(num_vars, 0), c);
    return p;
}

LaurentPoly LaurentPoly::variable(int num_vars, int j)
{
    if (j < 1 || j > num_vars) throw std::out_of_range("LaurentPoly::variable: index out of range");
    Exponent e(num_vars, 0);
    e[j - 1] = 1;
    return monomial(e);
}

LaurentPoly LaurentPoly::monomial(const Exponent& e, const Rational& c)
{
    LaurentPoly p(static_cast<int>(e.size()));
    p.add_term(e, c);
    return p;
}

Rational LaurentPoly::coeff(const Exponent& e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPoly::add_term(const Exponent& e, const Rational& c)
{
    if (static_cast<int>(e.size()) != n_) throw std::invalid_argument("LaurentPoly: exponent length mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void LaurentPoly::set_term(const Exponent& e, const Rational& c)
{
    if (static_cast<int>(e.size()) != n_) throw std::invalid_argument("LaurentPoly: exponent length mismatch");
    if (c == 0)
        terms_.erase(e);
    else
        terms_[e] = c;
}

const LaurentPoly::TermMap::value_type& LaurentPoly::leading() const
{
    if (terms_.empty()) throw std::domain_error("leading term of the zero polynomial");
    return *terms_.begin();
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o)
{
    check_vars(n_, o.n_);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o)
{
    check_vars(n_, o.n_);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& kv : terms_) kv.second *= c;
    return *this;
}

LaurentPoly& LaurentPoly::operator/=(const Rational& c)
{
    if (c == 0) throw std::domain_error("LaurentPoly: division by zero");
    for (auto& kv : terms_) kv.second /= c;
    return *this;
}

LaurentPoly LaurentPoly::operator-() const
{
    LaurentPoly r(*this);
    for (auto& kv : r.terms_) kv.second = -kv.second;
    return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b)
{
    check_vars(a.n_, b.n_);
    LaurentPoly r(a.n_);
    Exponent e(a.n_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (int k = 0; k < a.n_; ++k) e[k] = ea[k] + eb[k];
            r.add_term(e, ca * cb);
        }
    return r;
}

LaurentPoly LaurentPoly::pow(unsigned k) const
{
    LaurentPoly r = constant(n_, 1);
    for (unsigned t = 0; t < k; ++t) r = r * *this;
    return r;
}

LaurentPoly LaurentPoly::shifted(const Exponent& s) const
{
    check_vars(n_, static_cast<int>(s.size()));
    LaurentPoly r(n_);
    for (const auto& [e, c] : terms_) {
        Exponent f(e);
        for (int k = 0; k < n_; ++k) f[k] += s[k];
        r.terms_.emplace_hint(r.terms_.end(), std::move(f), c);
    }
    return r;
}

LaurentPoly LaurentPoly::permuted(const std::vector<int>& sigma) const
{
    check_vars(n_, static_cast<int>(sigma.size()));
    LaurentPoly r(n_);
    Exponent f(n_);
    for (const auto& [e, c] : terms_) {
        for (int k = 0; k < n_; ++k) f[sigma[k]] = e[k];
        r.terms_.emplace(f, c);
    }
    return r;
}

LaurentPoly LaurentPoly::swapped(int i, int j) const
{
    std::vector<int> sigma(n_);
    for (int k = 0; k < n_; ++k) sigma[k] = k;
    std::swap(sigma[i - 1], sigma[j - 1]);
    return permuted(sigma);
}

LaurentPoly LaurentPoly::embedded(int new_vars, const std::vector<int>& target) const
{
    check_vars(n_, static_cast<int>(target.size()));
    LaurentPoly r(new_vars);
    Exponent f(new_vars);
    for (const auto& [e, c] : terms_) {
        std::fill(f.begin(), f.end(), 0);
        for (int k = 0; k < n_; ++k) f[target[k] - 1] += e[k];
        r.add_term(f, c);
    }
    return r;
}

Exponent LaurentPoly::min_exponents() const
{
    Exponent m(n_, 0);
    bool first = true;
    for (const auto& [e, c] : terms_) {
        for (int k = 0; k < n_; ++k) m[k] = first ? e[k] : std::min(m[k], e[k]);
        first = false;
    }
    return m;
}

Exponent LaurentPoly::max_exponents() const
{
    Exponent m(n_, 0);
    bool first = true;
    for (const auto& [e, c] : terms_) {
        for (int k = 0; k < n_; ++k) m[k] = first ? e[k] : std::max(m[k], e[k]);
        first = false;
    }
    return m;
}

bool LaurentPoly::is_homogeneous() const
{
    long deg = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        long d = 0;
        for (int x : e) d += x;
        if (!first && d != deg) return false;
        deg = d;
        first = false;
    }
    return true;
}

long LaurentPoly::total_degree() const
{
    long best = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        long d = 0;
        for (int x : e) d += x;
        best = first ? d : std::max(best, d);
        first = false;
    }
    return best;
}

std::string LaurentPoly::to_string() const
{
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        const bool neg = c < 0;
        const Rational a = neg ? Rational(-c) : c;
        const std::string mono = monomial_string(e);
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        if (mono.empty()) {
            os << to_short(a);
            continue;
        }
        if (a != 1) {
            if (a.get_den() == 1)
                os << to_short(a) << ' ';
            else
                os << '(' << to_short(a) << ") ";
        }
        os << mono;
    }
    return os.str();
}

LaurentPoly euler(const LaurentPoly& f, int j)
{
    LaurentPoly r(f.num_vars());
    for (const auto& [e, c] : f.terms()) {
        const int a = e[j - 1];
        if (a != 0) r.add_term(e, c * a);
    }
    return r;
}

LaurentPoly total_momentum(const LaurentPoly& f)
{
    LaurentPoly r(f.num_vars());
    for (const auto& [e, c] : f.terms()) {
        long d = 0;
        for (int x : e) d += x;
        if (d != 0) r.add_term(e, c * d);
    }
    return r;
}

LaurentPoly divide_by_difference(const LaurentPoly& f, int i, int j)
{
    const int n = f.num_vars();
    if (i < 1 || j < 1 || i > n || j > n || i == j)
        throw std::invalid_argument("divide_by_difference: bad variable pair");
    const int ii = i - 1, jj = j - 1;
    if (f.is_zero()) return LaurentPoly(n);
    const int lo = f.min_exponents()[ii];
    // levels[a] holds the terms whose z_i exponent (after shifting by -lo) is a.
    std::map<int, std::map<Exponent, Rational>, std::greater<int>> levels;
    for (const auto& [e, c] : f.terms()) {
        Exponent g(e);
        g[ii] -= lo;
        levels[g[ii]][g] += c;
    }
    LaurentPoly q(n);
    while (!levels.empty()) {
        auto top = levels.begin();
        const int a = top->first;
        auto bucket = std::move(top->second);
        levels.erase(top);
        if (a == 0) {
            for (const auto& [e, c] : bucket)
                if (c != 0) {
                    std::ostringstream os;
                    os << "divide_by_difference: remainder " << to_short(c) << " * z^"
                       << exponent_string(e) << " when dividing by (z" << i << " - z" << j << ")";
                    throw std::domain_error(os.str());
                }
            break;
        }
        for (const auto& [e, c] : bucket) {
            if (c == 0) continue;
            Exponent qe(e);
            qe[ii] = a - 1 + lo;
            q.add_term(qe, c);
            Exponent ne(e);
            ne[ii] = a - 1;
            ne[jj] += 1;
            levels[a - 1][ne] += c;
        }
    }
    return q;
}

LaurentPoly divide_exact(const LaurentPoly& f, const LaurentPoly& g)
{
    if (g.is_zero()) throw std::domain_error("divide_exact: division by zero polynomial");
    check_vars(f.num_vars(), g.num_vars());
    const int n = f.num_vars();
    if (f.is_zero()) return LaurentPoly(n);
    Exponent mf = f.min_exponents(), mg = g.min_exponents();
    Exponent negf(n), negg(n), back(n);
    for (int k = 0; k < n; ++k) {
        negf[k] = -mf[k];
        negg[k] = -mg[k];
        back[k] = mf[k] - mg[k];
    }
    LaurentPoly rem = f.shifted(negf);
    const LaurentPoly div = g.shifted(negg);
    const auto& [lg, lc] = div.leading();
    LaurentPoly q(n);
    Exponent s(n);
    while (!rem.is_zero()) {
        const auto [lr, rc] = rem.leading();
        for (int k = 0; k < n; ++k) {
            s[k] = lr[k] - lg[k];
            if (s[k] < 0) {
                std::ostringstream os;
                os << "divide_exact: not divisible; remainder leading term " << to_short(rc) << " * z^"
                   << exponent_string(lr);
                throw std::domain_error(os.str());
            }
        }
        const Rational t = rc / lc;
        q.add_term(s, t);
        LaurentPoly sub = div.shifted(s);
        sub *= t;
        rem -= sub;
    }
    return q.shifted(back);
}

}  // namespace hsjack
