// hsjack: command-line front end.
//
// Exit codes: 0 success, 1 internal error, 2 invalid input, 3 a verification
// step failed.

#include "hsjack/dunkl.hpp"
#include "hsjack/freezing.hpp"
#include "hsjack/lagrange.hpp"
#include "hsjack/serialize.hpp"
#include "hsjack/spinchain.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

using namespace hsjack;

namespace {

constexpr int kOk = 0, kInternal = 1, kInvalid = 2, kFailed = 3;

struct RunConfig {
    int N = 0;
    int rank = 2;
    std::string alpha = "1";
    std::string sign = "+";
    std::string motif;
    bool motif_given = false;
    std::string comp, part;
    std::string kind;
    unsigned precision = 53;
    std::string cache_dir;
    bool no_cache = false;
    std::string format = "text";
    std::uint64_t seed = 1;
    bool sectors = false;
};

std::string default_cache_dir()
{
    if (const char* x = std::getenv("XDG_CACHE_HOME"); x && *x) return std::string(x) + "/hsjack";
    if (const char* h = std::getenv("HOME"); h && *h) return std::string(h) + "/.cache/hsjack";
    return ".hsjack-cache";
}

int parse_sign(const std::string& s)
{
    if (s == "+" || s == "1" || s == "+1" || s == "plus") return +1;
    if (s == "-" || s == "-1" || s == "minus") return -1;
    throw InvalidInput("--sign must be + or -");
}

void require_n(const RunConfig& c, int lo = 1)
{
    if (c.N < lo) throw InvalidInput("--n must be at least " + std::to_string(lo));
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

// ---------------------------------------------------------------- jack

int cmd_jack(const RunConfig& c)
{
    const Rational alpha = parse_rational(c.alpha);
    if (alpha <= 0) throw InvalidInput("--alpha must be positive");
    if (c.kind == "nonsym" ? c.comp.empty() && c.part.empty() : c.part.empty() && c.comp.empty())
        throw InvalidInput("jack needs an index via --comp or --part");
    std::vector<int> index = parse_int_list(c.kind == "nonsym" ? (c.comp.empty() ? c.part : c.comp)
                                                              : (c.part.empty() ? c.comp : c.part));
    const int N = c.N > 0 ? c.N : static_cast<int>(index.size());
    if (N < 1) throw InvalidInput("--n must be at least 1");
    if (static_cast<int>(index.size()) > N) throw InvalidInput("index has more than N parts");
    index.resize(N, 0);
    if (c.kind != "nonsym" && !is_partition(index)) throw InvalidInput("--part must be weakly decreasing");
    if (c.kind == "antisym" && !is_strict_partition(index))
        throw InvalidInput("antisymmetric Jacks need strictly decreasing parts");

    std::optional<JackCache> cache;
    if (!c.no_cache) cache.emplace(JackCache::resolve_dir(c.cache_dir.empty() ? default_cache_dir() : c.cache_dir));
    std::optional<LaurentPoly> p;
    if (cache) p = cache->load(c.kind, N, alpha, index);
    if (!p) {
        const DunklConfig cfg(N, alpha);
        if (c.kind == "nonsym")
            p = nonsym_jack(index, cfg);
        else if (c.kind == "sym")
            p = sym_jack(index, cfg);
        else
            p = antisym_jack(index, cfg);
        if (cache) {
            try {
                cache->store(c.kind, N, alpha, index, *p);
            } catch (const std::exception& e) {
                std::cerr << "warning: cache not written: " << e.what() << "\n";
            }
        }
    }

    if (c.format == "json") {
        Json terms = Json::array();
        for (const auto& [e, q] : p->terms()) terms.push_back(Json{{"coeff", to_pq(q)}, {"exponent", e}});
        emit(Json{{"kind", c.kind},
                  {"N", N},
                  {"alpha", to_pq(alpha)},
                  {"index", index},
                  {"polynomial", p->to_string()},
                  {"terms", terms}});
    } else if (c.format == "csv") {
        std::cout << "coeff";
        for (int j = 1; j <= N; ++j) std::cout << ",e" << j;
        std::cout << "\n";
        for (const auto& [e, q] : p->terms()) std::cout << to_pq(q) << "," << join_ints(e) << "\n";
    } else {
        std::cout << p->to_string() << "\n";
    }
    return kOk;
}

// ---------------------------------------------------------------- motifs

int cmd_motifs(const RunConfig& c)
{
    require_n(c);
    if (c.rank < 2) throw InvalidInput("--rank must be at least 2");
    const auto motifs = enumerate_motifs(c.N, c.rank);
    const bool with_deg = c.rank == 2;
    std::uint64_t total = 0;
    if (with_deg)
        for (const auto& mu : motifs) total += degeneracy(mu);
    const std::uint64_t expect = std::uint64_t(1) << c.N;
    const bool ok = !with_deg || total == expect;

    if (c.format == "json") {
        Json rows = Json::array();
        for (const auto& mu : motifs) {
            Json row{{"motif", mu.entries},
                     {"energy_plus", to_pq(hs_motif_energy(mu))},
                     {"energy_minus", to_pq(hs_motif_energy_minus(mu))}};
            if (with_deg) row["degeneracy"] = degeneracy(mu);
            row["momentum"] = motif_momentum(mu);
            rows.push_back(row);
        }
        Json out{{"N", c.N}, {"rank", c.rank}, {"rows", rows}};
        if (with_deg) out["total_degeneracy"] = total;
        emit(out);
    } else if (c.format == "csv") {
        std::cout << "motif,energy_plus,energy_minus" << (with_deg ? ",degeneracy" : "") << ",momentum\n";
        for (const auto& mu : motifs) {
            std::cout << '"' << to_string(mu) << "\"," << to_pq(hs_motif_energy(mu)) << ","
                      << to_pq(hs_motif_energy_minus(mu));
            if (with_deg) std::cout << "," << degeneracy(mu);
            std::cout << "," << motif_momentum(mu) << "\n";
        }
    } else {
        std::cout << std::left << std::setw(20) << "motif" << std::setw(10) << "E+" << std::setw(10) << "E-";
        if (with_deg) std::cout << std::setw(8) << "deg";
        std::cout << "P\n";
        for (const auto& mu : motifs) {
            std::cout << std::setw(20) << to_string(mu) << std::setw(10) << to_short(hs_motif_energy(mu))
                      << std::setw(10) << to_short(hs_motif_energy_minus(mu));
            if (with_deg) std::cout << std::setw(8) << degeneracy(mu);
            std::cout << motif_momentum(mu) << "\n";
        }
        std::cout << motifs.size() << " motifs";
        if (with_deg) std::cout << ", total degeneracy " << total << " (2^N = " << expect << ")";
        std::cout << "\n";
    }
    return ok ? kOk : kFailed;
}

// ---------------------------------------------------------------- spectrum

int cmd_spectrum(const RunConfig& c)
{
    require_n(c, 2);
    if (c.rank < 2) throw InvalidInput("--rank must be at least 2");
    const int sign = parse_sign(c.sign);
    double states = 1;
    for (int i = 0; i < c.N; ++i) states *= c.rank;
    if (states > 1 << 16) throw InvalidInput("chain too large for dense diagonalisation");

    const auto levels = exact_spectrum(c.N, c.rank, sign);
    // predicted levels from motifs: exact energy -> (multiplicity, motifs)
    std::map<Rational, std::pair<std::uint64_t, std::vector<std::string>>> predicted;
    for (const auto& mu : enumerate_motifs(c.N, c.rank)) {
        auto& slot = predicted[sign > 0 ? hs_motif_energy(mu) : hs_motif_energy_minus(mu)];
        if (c.rank == 2) slot.first += degeneracy(mu);
        slot.second.push_back(to_string(mu));
    }
    bool ok = levels.size() == predicted.size();
    std::vector<const std::pair<const Rational, std::pair<std::uint64_t, std::vector<std::string>>>*> match;
    auto it = predicted.begin();
    long count = 0;
    for (const auto& lv : levels) {
        count += lv.multiplicity;
        if (it == predicted.end()) {
            ok = false;
            match.push_back(nullptr);
            continue;
        }
        const bool hit = std::abs(to_double(it->first) - lv.value) < 1e-8 &&
                         (c.rank != 2 || it->second.first == static_cast<std::uint64_t>(lv.multiplicity));
        ok = ok && hit;
        match.push_back(hit ? &*it : nullptr);
        ++it;
    }
    ok = ok && count == static_cast<long>(states);

    if (c.format == "json") {
        Json rows = Json::array();
        for (std::size_t i = 0; i < levels.size(); ++i) {
            Json row{{"eigenvalue", decimal(levels[i].value)}, {"multiplicity", levels[i].multiplicity}};
            if (match[i]) {
                row["exact"] = to_pq(match[i]->first);
                row["motifs"] = match[i]->second.second;
            }
            rows.push_back(row);
        }
        Json out{{"N", c.N}, {"rank", c.rank}, {"sign", sign > 0 ? "+" : "-"}, {"levels", rows}};
        if (c.sectors) {
            Json sec = Json::array();
            for (const auto& s : exact_spectrum_by_sector(c.N, c.rank, sign))
                sec.push_back(Json{{"weight", s.weight},
                                   {"eigenvalue", decimal(s.value)},
                                   {"multiplicity", s.multiplicity}});
            out["sectors"] = sec;
        }
        out["matches_motifs"] = ok;
        emit(out);
    } else if (c.format == "csv") {
        std::cout << "eigenvalue,multiplicity,exact\n";
        for (std::size_t i = 0; i < levels.size(); ++i)
            std::cout << decimal(levels[i].value) << "," << levels[i].multiplicity << ","
                      << (match[i] ? to_pq(match[i]->first) : "") << "\n";
    } else {
        for (std::size_t i = 0; i < levels.size(); ++i) {
            std::cout << std::left << std::setw(24) << decimal(levels[i].value) << " x" << std::setw(6)
                      << levels[i].multiplicity;
            if (match[i]) {
                std::cout << " = " << std::setw(8) << to_short(match[i]->first) << " from";
                for (const auto& m : match[i]->second.second) std::cout << " " << m;
            } else {
                std::cout << " (no motif match)";
            }
            std::cout << "\n";
        }
        std::cout << (ok ? "spectrum matches the motif prediction" : "MISMATCH with the motif prediction")
                  << "\n";
    }
    return ok ? kOk : kFailed;
}

// ---------------------------------------------------------------- verify

struct VerifyRow {
    Motif mu;
    EigenvectorReport rep;
    double difference = 0;
    unsigned bits = 53;
    bool pass = false;
};

int cmd_verify(const RunConfig& c)
{
    require_n(c, 2);
    if (c.precision < 53) throw InvalidInput("--precision must be at least 53");
    const double tol = 1e-9;
    std::vector<Motif> todo;
    if (c.motif_given)
        todo.push_back(make_motif(parse_int_list(c.motif), c.N, 2));
    else
        todo = enumerate_motifs(c.N, 2);

    std::vector<VerifyRow> rows;
    bool all = true;
    for (const auto& mu : todo) {
        VerifyRow row;
        row.mu = mu;
        row.bits = c.precision;
        HSEigenvector ev = hs_eigenvector(mu, row.bits);
        row.rep = verify_eigenvector(ev);
        // Close calls are redone with more bits in the component evaluation.
        if (row.rep.max_residual() >= tol / 10 && row.bits < 256) {
            row.bits = 256;
            ev = hs_eigenvector(mu, row.bits);
            row.rep = verify_eigenvector(ev);
        }
        row.difference = mu.size() > 0 ? difference_equation_residual(ev.wavefn, ev.energy_plus, c.N) : 0.0;
        row.pass = row.rep.max_residual() < tol && row.difference < tol && row.rep.momentum == ev.momentum &&
                   (mu.size() == 0 || row.rep.vanishes_at_zero) && row.rep.degree_below_N;
        all = all && row.pass;
        rows.push_back(row);
    }

    if (c.format == "json") {
        Json arr = Json::array();
        for (const auto& r : rows)
            arr.push_back(Json{{"motif", r.mu.entries},
                               {"energy_plus", to_pq(hs_motif_energy(r.mu))},
                               {"hamiltonian", decimal(r.rep.hamiltonian)},
                               {"s_plus", decimal(r.rep.s_plus)},
                               {"q_plus", decimal(r.rep.q_plus)},
                               {"translation", decimal(r.rep.translation)},
                               {"difference_equation", decimal(r.difference)},
                               {"momentum", r.rep.momentum},
                               {"expected_momentum", motif_momentum(r.mu)},
                               {"vanishes_at_zero", r.rep.vanishes_at_zero},
                               {"precision_bits", r.bits},
                               {"tolerance", decimal(tol)},
                               {"pass", r.pass}});
        emit(Json{{"N", c.N}, {"results", arr}, {"pass", all}});
    } else if (c.format == "csv") {
        std::cout << "motif,hamiltonian,s_plus,q_plus,translation,difference_equation,momentum,pass\n";
        for (const auto& r : rows)
            std::cout << '"' << to_string(r.mu) << "\"," << decimal(r.rep.hamiltonian) << ","
                      << decimal(r.rep.s_plus) << "," << decimal(r.rep.q_plus) << "," << decimal(r.rep.translation)
                      << "," << decimal(r.difference) << "," << r.rep.momentum << "," << (r.pass ? 1 : 0) << "\n";
    } else {
        for (const auto& r : rows)
            std::cout << (r.pass ? "PASS " : "FAIL ") << std::left << std::setw(18) << to_string(r.mu)
                      << " E+=" << std::setw(8) << to_short(hs_motif_energy(r.mu)) << " max residual "
                      << std::setw(14) << decimal(std::max(r.rep.max_residual(), r.difference)) << " P="
                      << r.rep.momentum << "\n";
        std::cout << (all ? "all eigenvectors verified" : "verification FAILED") << "\n";
    }
    return all ? kOk : kFailed;
}

// ---------------------------------------------------------------- identities

int cmd_identities(const RunConfig& c)
{
    require_n(c, 2);
    std::vector<CheckResult> checks = evaluation_identity_suite(c.N, c.seed);
    const double tol = 1e-9;
    if (c.N <= 10) {
        const Rational e0 = ground_energy(c.N);
        double sum = 0, comm = 0;
        for (int t = 0; t < 5; ++t) {
            const SpinVector v = random_vector(c.N, 2, c.seed + t);
            const double nv = v.norm();
            const SpinVector hp = hs_apply(v, +1), hm = hs_apply(v, -1);
            sum = std::max(sum, (hp.entries + hm.entries - to_double(e0) * v.entries).norm() / nv);
            for (Generator g : {Generator::Splus, Generator::Sminus, Generator::Sz, Generator::Qplus,
                                Generator::Qminus, Generator::Qz}) {
                const auto lhs = hs_apply(yangian_apply(g, v), +1).entries;
                const auto rhs = yangian_apply(g, hp).entries;
                comm = std::max(comm, (lhs - rhs).norm() / nv);
            }
        }
        checks.push_back({"hamiltonian_sum_is_ground_energy", sum, tol, sum < tol});
        checks.push_back({"yangian_commutes", comm, tol, comm < tol});
    }
    bool all = true;
    for (const auto& ch : checks) all = all && ch.pass;
    if (c.format == "json") {
        Json arr = Json::array();
        for (const auto& ch : checks)
            arr.push_back(Json{{"check", ch.name},
                               {"N", c.N},
                               {"residual", decimal(ch.residual)},
                               {"tolerance", decimal(ch.tolerance)},
                               {"pass", ch.pass}});
        emit(Json{{"seed", c.seed}, {"checks", arr}, {"pass", all}});
    } else {
        for (const auto& ch : checks)
            std::cout << (ch.pass ? "PASS " : "FAIL ") << std::left << std::setw(36) << ch.name << " "
                      << decimal(ch.residual) << "\n";
    }
    return all ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv)
{
    RunConfig cfg;
    CLI::App app{"Jack polynomials, wedges and the Haldane-Shastry chain"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--precision", cfg.precision, "bits used when evaluating wave functions")->check(CLI::Range(53u, 100000u));
    app.add_option("--cache-dir", cfg.cache_dir, std::string("Jack cache directory (") + JackCache::kEnvVar + " overrides)");
    app.add_flag("--no-cache", cfg.no_cache, "do not read or write the Jack cache");
    app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--seed", cfg.seed, "seed for randomized checks");

    auto* jack = app.add_subcommand("jack", "compute a (non)symmetric or antisymmetric Jack polynomial");
    jack->add_option("kind", cfg.kind, "nonsym, sym or antisym")->required()->check(CLI::IsMember({"nonsym", "sym", "antisym"}));
    jack->add_option("--comp", cfg.comp, "composition, e.g. 1,0,2");
    jack->add_option("--part", cfg.part, "partition, e.g. 2,1");
    jack->add_option("--n", cfg.N, "number of variables (default: length of the index)");
    jack->add_option("--alpha", cfg.alpha, "Jack parameter p/q");

    auto* motifs = app.add_subcommand("motifs", "list motifs with energies, degeneracies and momenta");
    motifs->add_option("--n", cfg.N, "chain length")->required();
    motifs->add_option("--rank", cfg.rank, "number of colours");

    auto* spectrum = app.add_subcommand("spectrum", "dense spectrum of the chain, matched against motifs");
    spectrum->add_option("--n", cfg.N, "chain length")->required();
    spectrum->add_option("--rank", cfg.rank, "number of colours");
    spectrum->add_option("--sign", cfg.sign, "+ for sum V(1-P), - for sum V(1+P)");
    spectrum->add_flag("--sectors", cfg.sectors, "also list levels per weight sector (json)");

    auto* verify = app.add_subcommand("verify", "check explicit eigenvectors built from Jack polynomials");
    verify->add_option("--n", cfg.N, "chain length")->required();
    auto* motif_opt = verify->add_option("--motif", cfg.motif, "comma separated motif; all motifs if omitted");

    auto* ident = app.add_subcommand("identities", "evaluation identities and operator identities");
    ident->add_option("--n", cfg.N, "chain length")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInvalid;
    }
    cfg.motif_given = motif_opt->count() > 0;

    try {
        if (jack->parsed()) return cmd_jack(cfg);
        if (motifs->parsed()) return cmd_motifs(cfg);
        if (spectrum->parsed()) return cmd_spectrum(cfg);
        if (verify->parsed()) return cmd_verify(cfg);
        if (ident->parsed()) return cmd_identities(cfg);
    } catch (const InvalidInput& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kInvalid;
    } catch (const SingularSystem& e) {
        std::cerr << "singular system: " << e.what() << "\n";
        return kInternal;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternal;
    }
    return kInternal;
}
