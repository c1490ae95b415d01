#include "hsjack/serialize.hpp"

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace hsjack {

namespace fs = std::filesystem;

std::string serialize_poly(const LaurentPoly& p)
{
    std::ostringstream os;
    os << "# vars " << p.num_vars() << "\n";
    for (const auto& [e, c] : p.terms()) {
        os << to_pq(c) << " :";
        for (int x : e) os << ' ' << x;
        os << "\n";
    }
    return os.str();
}

LaurentPoly parse_poly(const std::string& text)
{
    std::istringstream is(text);
    std::string line;
    int n = -1;
    LaurentPoly out(0);
    while (std::getline(is, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        if (line[0] == '#') {
            std::istringstream hs(line.substr(1));
            std::string key;
            hs >> key;
            if (key == "vars") {
                if (!(hs >> n) || n < 0) throw InvalidInput("parse_poly: bad vars header");
                out = LaurentPoly(n);
            }
            continue;
        }
        const auto colon = line.find(':');
        if (colon == std::string::npos) throw InvalidInput("parse_poly: missing ':' in \"" + line + "\"");
        std::string coeff = line.substr(0, colon);
        coeff.erase(coeff.find_last_not_of(" \t") + 1);
        coeff.erase(0, coeff.find_first_not_of(" \t"));
        const Rational c = parse_rational(coeff);
        std::istringstream es(line.substr(colon + 1));
        Exponent e;
        int x;
        while (es >> x) e.push_back(x);
        if (!es.eof()) throw InvalidInput("parse_poly: bad exponent list in \"" + line + "\"");
        if (n < 0) {
            n = static_cast<int>(e.size());
            out = LaurentPoly(n);
        }
        if (static_cast<int>(e.size()) != n) throw InvalidInput("parse_poly: exponent length mismatch");
        out.add_term(e, c);
    }
    if (n < 0) throw InvalidInput("parse_poly: empty input without a vars header");
    return out;
}

std::string serialize_wedge(const Wedge& w)
{
    return "k: " + join_ints(w.k) + " ; r=" + std::to_string(w.r);
}

Wedge parse_wedge(const std::string& text)
{
    const auto kpos = text.find("k:");
    const auto semi = text.find(';');
    const auto rpos = text.find("r=");
    if (kpos == std::string::npos || semi == std::string::npos || rpos == std::string::npos || semi < kpos ||
        rpos < semi)
        throw InvalidInput("parse_wedge: expected \"k: a,b,... ; r=R\"");
    const std::vector<int> k = parse_int_list(text.substr(kpos + 2, semi - kpos - 2));
    const std::vector<int> rv = parse_int_list(text.substr(rpos + 2));
    if (rv.size() != 1 || rv[0] < 1) throw InvalidInput("parse_wedge: bad rank");
    for (std::size_t i = 1; i < k.size(); ++i)
        if (k[i - 1] <= k[i]) throw InvalidInput("parse_wedge: k must be strictly decreasing");
    return Wedge{k, rv[0]};
}

Json to_json(const WedgeVector& v)
{
    Json arr = Json::array();
    for (const auto& [k, c] : v.terms()) arr.push_back(Json{{"k", k}, {"coeff", to_pq(c)}});
    return arr;
}

Json to_json(const Motif& mu) { return Json{{"N", mu.N}, {"r", mu.r}, {"entries", mu.entries}}; }

std::string decimal(double x)
{
    if (x == 0) return "0";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

Json complex_json(std::complex<double> z) { return Json{{"re", decimal(z.real())}, {"im", decimal(z.imag())}}; }

std::vector<int> parse_int_list(const std::string& text)
{
    std::vector<int> out;
    std::string tok;
    std::istringstream is(text);
    while (std::getline(is, tok, ',')) {
        tok.erase(0, tok.find_first_not_of(" \t"));
        tok.erase(tok.find_last_not_of(" \t\r\n") + 1);
        if (tok.empty()) {
            if (out.empty() && is.eof()) break;
            throw InvalidInput("empty entry in integer list \"" + text + "\"");
        }
        int v = 0;
        const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (res.ec != std::errc() || res.ptr != tok.data() + tok.size())
            throw InvalidInput("not an integer: \"" + tok + "\"");
        out.push_back(v);
    }
    return out;
}

std::string join_ints(const std::vector<int>& v, const char* sep)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += sep;
        s += std::to_string(v[i]);
    }
    return s;
}

JackCache::JackCache(std::string dir) : dir_(std::move(dir)) {}

std::string JackCache::resolve_dir(const std::string& fallback)
{
    if (const char* env = std::getenv(kEnvVar); env && *env) return env;
    return fallback;
}

std::string JackCache::path_for(const std::string& kind, int N, const Rational& alpha,
                                const std::vector<int>& index) const
{
    std::string a = to_pq(alpha);
    for (char& ch : a)
        if (ch == '/') ch = '_';
    std::string idx;
    for (std::size_t i = 0; i < index.size(); ++i) {
        if (i) idx += '.';
        idx += index[i] < 0 ? "m" + std::to_string(-index[i]) : std::to_string(index[i]);
    }
    const std::string name = kind + "-N" + std::to_string(N) + "-a" + a + "-" + (idx.empty() ? "0" : idx) + ".poly";
    return (fs::path(dir_) / ("v" + std::to_string(kVersion)) / name).string();
}

namespace {

std::string header(const std::string& kind, int N, const Rational& alpha, const std::vector<int>& index)
{
    std::ostringstream os;
    os << "# hsjack-cache " << JackCache::kVersion << "\n"
       << "# kind " << kind << "\n"
       << "# N " << N << "\n"
       << "# alpha " << to_pq(alpha) << "\n"
       << "# index " << join_ints(index) << "\n";
    return os.str();
}

}  // namespace

std::optional<LaurentPoly> JackCache::load(const std::string& kind, int N, const Rational& alpha,
                                           const std::vector<int>& index) const
{
    std::ifstream in(path_for(kind, N, alpha, index));
    if (!in) return std::nullopt;
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    const std::string head = header(kind, N, alpha, index);
    if (text.compare(0, head.size(), head) != 0) return std::nullopt;
    try {
        return parse_poly(text.substr(head.size()));
    } catch (const InvalidInput&) {
        return std::nullopt;
    }
}

void JackCache::store(const std::string& kind, int N, const Rational& alpha, const std::vector<int>& index,
                      const LaurentPoly& p) const
{
    const fs::path target = path_for(kind, N, alpha, index);
    fs::create_directories(target.parent_path());
    const fs::path tmp = target.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
        out << header(kind, N, alpha, index) << serialize_poly(p);
    }
    fs::rename(tmp, target);
}

}  // namespace hsjack
