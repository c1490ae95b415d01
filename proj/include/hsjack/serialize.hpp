#pragma once
// Text and JSON forms of the library's objects, and the on-disk Jack cache.

#include "hsjack/combinatorics.hpp"
#include "hsjack/laurent.hpp"
#include "hsjack/wedge.hpp"

#include <json.hpp>

#include <complex>
#include <optional>
#include <string>

namespace hsjack {

using Json = nlohmann::ordered_json;

/// Canonical text: a "# vars N" line, then one "p/q : e1 e2 ... eN" line per
/// term in the polynomial's term order.
std::string serialize_poly(const LaurentPoly& p);
LaurentPoly parse_poly(const std::string& text);

/// "k: 6,4,2,0 ; r=2"
std::string serialize_wedge(const Wedge& w);
Wedge parse_wedge(const std::string& text);

Json to_json(const WedgeVector& v);
Json to_json(const Motif& mu);

/// Shortest round-trip decimal form of a double.
std::string decimal(double x);
Json complex_json(std::complex<double> z);

/// Comma separated integers, e.g. "1,0,2". Whitespace is ignored.
std::vector<int> parse_int_list(const std::string& text);
std::string join_ints(const std::vector<int>& v, const char* sep = ",");

/// File-per-entry cache for computed Jack polynomials. Entries are keyed by
/// (kind, N, alpha, index) and carry a format version; a mismatched or
/// unreadable entry counts as a miss.
class JackCache {
public:
    static constexpr int kVersion = 1;
    static constexpr const char* kEnvVar = "HSJACK_CACHE_DIR";

    explicit JackCache(std::string dir);
    /// The environment variable wins over `fallback`.
    static std::string resolve_dir(const std::string& fallback);

    std::optional<LaurentPoly> load(const std::string& kind, int N, const Rational& alpha,
                                    const std::vector<int>& index) const;
    void store(const std::string& kind, int N, const Rational& alpha, const std::vector<int>& index,
               const LaurentPoly& p) const;
    std::string path_for(const std::string& kind, int N, const Rational& alpha,
                         const std::vector<int>& index) const;

private:
    std::string dir_;
};

}  // namespace hsjack
