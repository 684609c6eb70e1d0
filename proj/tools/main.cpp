/**
 * Command-line surface for the restricted Birkhoff / Gelfand-Tsetlin
 * polytope library.
 *
 * Subcommands: count, ehrhart, vertices, facets, rsk, verify-bijection,
 * rowmotion, kostka, transfer.
 *
 * Exit codes: 0 success, 1 input error, 2 budget exceeded, 3 polynomiality
 * verification failed, 4 bijection mismatch.
 *
 * All rationals are printed as decimal-free "p/q" strings; matrix files
 * are one row per line, whitespace-separated entries, '#' comments.
 */

#include "rbp/rbp.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using json = nlohmann::json;
using namespace rbp;

namespace {

struct Options {
    std::string family = "B";
    std::size_t n = 3;
    long k = 2;
    std::size_t m = 0;  // second chain length for O/C (defaults to n)
    std::string alpha, beta, lambda, mu;
    long t = 1;
    std::string t_range;
    std::string format = "text";
    std::size_t verify_extra = 3;
    bool quasi = false;
    std::size_t denominator_lcm = 0;
    std::uint64_t max_nodes = 20'000'000;
    std::uint64_t max_states = 0;
    std::string input;
    bool inverse = false;
    bool table1 = false;
    std::size_t max_n = 4;
    long steps = -1;
    unsigned long seed = 1;
    bool random_point = false;
};

double elapsed_ms(const std::chrono::steady_clock::time_point& from)
{
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - from)
        .count();
}

std::optional<Margins> margins_of(const Options& o)
{
    if (o.alpha.empty() && o.beta.empty()) return std::nullopt;
    Margins m{parse_int_list(o.alpha), parse_int_list(o.beta)};
    if (m.alpha.empty() || m.alpha.size() != m.beta.size())
        throw std::invalid_argument("--alpha and --beta must be nonempty lists of equal length");
    return m;
}

HPolytope selected_polytope(const Options& o)
{
    const auto mg = margins_of(o);
    if (o.family == "B")
        return mg ? build_transportation(*mg, Int(o.k))
                  : build_restricted_birkhoff(o.n, o.k);
    if (o.family == "M")
        return mg ? build_M_transportation(*mg, Int(o.k)) : build_M(o.n, o.k);
    if (o.family == "GT") return build_GT(parse_int_list(o.lambda), parse_int_list(o.mu));
    if (o.family == "O") return order_polytope(product_of_chains(o.n, o.m ? o.m : o.n));
    if (o.family == "C") return chain_polytope(product_of_chains(o.n, o.m ? o.m : o.n));
    throw std::invalid_argument("unknown --family (expected B, M, GT, O or C)");
}

/// Rough a-priori DFS node estimate for t * B^k margins: the number of
/// row fillings ignoring all couplings.
double dfs_node_estimate(const Margins& m, long t)
{
    double est = 1;
    const double n = static_cast<double>(m.n());
    for (const auto& a : m.alpha) {
        double s = static_cast<double>(a) * static_cast<double>(t);
        double rows = 1;
        for (double i = 1; i < n; ++i) rows *= (s + i) / i;
        est *= rows;
        if (est > 1e18) return est;
    }
    return est;
}

struct CountRecord {
    long t;
    Int value;
    std::string counter;
    double ms;
};

/// Counter selection for one dilate. Families B and M share the diagonal
/// DP (their dilate counts agree); B prefers the direct DFS when the node
/// estimate fits the budget so both routes stay exercised.
CountRecord count_once(const Options& o, long t)
{
    const auto mg = margins_of(o);
    const auto start = std::chrono::steady_clock::now();
    if (o.family == "B") {
        const Margins m = mg ? *mg : Margins::uniform(o.n);
        if (dfs_node_estimate(m, t) <= static_cast<double>(o.max_nodes)) {
            Int c = count_lattice_points_direct(m, Int(o.k), Int(t), o.max_nodes);
            return {t, c, "direct DFS", elapsed_ms(start)};
        }
        Int c = count_M_diagonal_DP(m, Int(o.k), Int(t), o.max_states);
        return {t, c, "diagonal DP", elapsed_ms(start)};
    }
    if (o.family == "M") {
        const Margins m = mg ? *mg : Margins::uniform(o.n);
        Int c = count_M_diagonal_DP(m, Int(o.k), Int(t), o.max_states);
        return {t, c, "diagonal DP", elapsed_ms(start)};
    }
    if (o.family == "GT") {
        // The (k^n, 0^n) family routes through the diagonal DP; the dilate
        // of GT_{lambda,mu} is GT_{t lambda, t mu}.
        auto lambda = parse_int_list(o.lambda);
        auto mu = parse_int_list(o.mu);
        const std::size_t len = lambda.size();
        if (len >= 2 && len % 2 == 0 && mu.size() == len) {
            const std::size_t half = len / 2;
            const Int kk = lambda[0];
            bool family = kk > 0;
            for (std::size_t i = 0; i < half && family; ++i) family = lambda[i] == kk;
            for (std::size_t i = half; i < len && family; ++i) family = lambda[i] == 0;
            if (family) {
                Margins m;
                m.alpha.assign(mu.begin(), mu.begin() + static_cast<long>(half));
                for (std::size_t j = 0; j < half; ++j) m.beta.push_back(kk - mu[len - 1 - j]);
                bool admissible = m.balanced();
                for (const auto& a : m.alpha) admissible = admissible && a >= 0;
                for (const auto& b : m.beta) admissible = admissible && b >= 0;
                if (admissible) {
                    Int c = count_M_diagonal_DP(m, kk, Int(t), o.max_states);
                    return {t, c, "diagonal DP", elapsed_ms(start)};
                }
            }
        }
    }
    Int c = count_lattice_points(dilate(selected_polytope(o), Int(t)), o.max_nodes);
    return {t, c, "generic", elapsed_ms(start)};
}

std::pair<long, long> parse_t_range(const Options& o)
{
    if (o.t_range.empty()) return {o.t, o.t};
    const auto colon = o.t_range.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("--t-range expects A:B");
    return {std::stol(o.t_range.substr(0, colon)), std::stol(o.t_range.substr(colon + 1))};
}

/// Fitting dimension: closed form for the B/M families, affine hull of the
/// vertex set otherwise.
std::size_t fitting_dim(const Options& o)
{
    if ((o.family == "B" || o.family == "M") && !margins_of(o))
        return o.k == 1 ? 0 : o.n * o.n - 2 * o.n + 1;
    return affine_dim(selected_polytope(o));
}

RatMatrix matrix_from(const Options& o)
{
    if (o.input.empty() || o.input == "-") return read_matrix(std::cin);
    std::ifstream in(o.input);
    if (!in) throw std::invalid_argument("cannot open input file: " + o.input);
    return read_matrix(in);
}

void print_matrix(const RatMatrix& m) { std::cout << m.str(); }

int cmd_count(const Options& o)
{
    auto [t0, t1] = parse_t_range(o);
    json out = json::array();
    for (long t = t0; t <= t1; ++t) {
        auto rec = count_once(o, t);
        if (o.format == "json")
            out.push_back({{"t", rec.t},
                           {"count", rec.value.str()},
                           {"counter", rec.counter},
                           {"ms", rec.ms}});
        else if (o.format == "csv")
            std::cout << rec.t << "," << rec.value << "," << rec.counter << "," << rec.ms << "\n";
        else
            std::cout << "t=" << rec.t << " count=" << rec.value << " counter=" << rec.counter
                      << " ms=" << rec.ms << "\n";
    }
    if (o.format == "json") std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_ehrhart(const Options& o)
{
    const std::size_t d = fitting_dim(o);
    std::vector<std::pair<long, std::string>> used;
    CountFunction f{[&](long t) {
                        auto rec = count_once(o, t);
                        used.emplace_back(t, rec.counter);
                        return rec.value;
                    },
                    d, "auto"};
    if (o.quasi) {
        std::size_t lcm = o.denominator_lcm;
        if (lcm == 0) {
            auto rep = vertex_denominators(vertices(selected_polytope(o)));
            lcm = static_cast<std::size_t>(rep.max);
        }
        auto qp = quasi_polynomial(f, lcm);
        if (o.format == "json") {
            json out{{"period", qp.period}, {"denominator_lcm", lcm}};
            out["failed_periods"] = qp.failed_periods;
            json cons = json::array();
            for (const auto& c : qp.constituents) {
                json one = json::array();
                for (const auto& x : c) one.push_back(x.str());
                cons.push_back(one);
            }
            out["constituents"] = cons;
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << "period " << qp.period << " (denominator lcm " << lcm << ")\n";
            if (qp.period < lcm) std::cout << "period collapse: period < denominator lcm\n";
            for (std::size_t r = 0; r < qp.period; ++r) {
                std::cout << "constituent t=" << r << " mod " << qp.period << ": ";
                for (std::size_t i = 0; i < qp.constituents[r].size(); ++i)
                    std::cout << (i ? ", " : "") << qp.constituents[r][i];
                std::cout << "\n";
            }
        }
        return 0;
    }
    auto res = ehrhart_polynomial(f, o.verify_extra);
    if (o.format == "json") {
        json out;
        json coeffs = json::array();
        for (const auto& c : res.coeffs) coeffs.push_back(c.str());
        out["coefficients_low_to_high"] = coeffs;
        out["value_at_zero_ok"] = res.value_at_zero_ok;
        json counts = json::array();
        for (std::size_t i = 0; i < res.counts.size(); ++i)
            counts.push_back({{"t", res.counts[i].first},
                              {"count", res.counts[i].second.str()},
                              {"counter", used[i].second}});
        out["counts"] = counts;
        std::cout << out.dump(2) << "\n";
    } else if (o.format == "csv") {
        for (std::size_t i = 0; i < res.coeffs.size(); ++i)
            std::cout << i << "," << res.coeffs[i] << "\n";
    } else {
        std::cout << "coefficients (low to high): ";
        for (std::size_t i = 0; i < res.coeffs.size(); ++i)
            std::cout << (i ? ", " : "") << res.coeffs[i];
        std::cout << "\n";
        std::cout << "fit t=1.." << d + 1 << ", verified t=" << d + 2 << ".."
                  << d + 1 + o.verify_extra << ", L(0)=1 check: "
                  << (res.value_at_zero_ok ? "ok" : "FAILED") << "\n";
        std::cout << "counters used:";
        for (const auto& [t, name] : used) std::cout << " " << t << ":" << name;
        std::cout << "\n";
    }
    return 0;
}

int cmd_vertices(const Options& o)
{
    auto v = vertices(selected_polytope(o));
    auto rep = vertex_denominators(v);
    if (o.format == "json") {
        json out{{"ambient_dim", v.ambient_dim}, {"count", v.vertices.size()},
                 {"max_denominator", rep.max.str()}};
        json verts = json::array();
        for (const auto& vert : v.vertices) {
            json one = json::array();
            for (const auto& x : vert) one.push_back(x.str());
            verts.push_back(one);
        }
        out["vertices"] = verts;
        std::cout << out.dump(2) << "\n";
    } else {
        const char* sep = o.format == "csv" ? "," : " ";
        for (const auto& vert : v.vertices) {
            for (std::size_t i = 0; i < vert.size(); ++i)
                std::cout << (i ? sep : "") << vert[i];
            std::cout << "\n";
        }
        if (o.format == "text")
            std::cout << "count=" << v.vertices.size() << " max_denominator=" << rep.max << "\n";
    }
    return 0;
}

int cmd_facets(const Options& o)
{
    if (o.table1) {
        json rows = json::array();
        for (std::size_t n = 1; n <= o.max_n; ++n) {
            std::vector<std::string> fac, ver;
            fac.push_back("1 (point)");
            ver.push_back("1 (point)");
            for (long k = 2; k <= static_cast<long>(n); ++k) {
                auto p = build_restricted_birkhoff(n, k);
                auto v = vertices(p);
                fac.push_back(std::to_string(facet_count(p, v)));
                ver.push_back(std::to_string(v.vertices.size()));
            }
            if (o.format == "json") {
                rows.push_back({{"n", n}, {"facets", fac}, {"vertices", ver}});
            } else {
                std::cout << "n=" << n << " facets:";
                for (const auto& s : fac) std::cout << " " << s;
                std::cout << " | vertices:";
                for (const auto& s : ver) std::cout << " " << s;
                std::cout << "\n";
            }
        }
        if (o.format == "json") std::cout << rows.dump(2) << "\n";
        return 0;
    }
    auto p = selected_polytope(o);
    auto c = facet_count(p);
    if (o.format == "json")
        std::cout << json{{"facets", c}}.dump(2) << "\n";
    else
        std::cout << "facets=" << c << "\n";
    return 0;
}

int cmd_rsk(const Options& o)
{
    auto x = matrix_from(o);
    print_matrix(o.inverse ? rho_inverse(x) : rho(x));
    return 0;
}

int cmd_verify_bijection(const Options& o)
{
    auto b = build_restricted_birkhoff(o.n, o.k);
    auto m = build_M(o.n, o.k);
    auto bp = lattice_points(dilate(b, Int(o.t)), false, o.max_nodes);
    auto mp = lattice_points(dilate(m, Int(o.t)), false, o.max_nodes);
    std::vector<RatVector> images;
    for (const auto& z : bp) {
        RatMatrix x(o.n, RatVector(z.begin(), z.end()));
        images.push_back(rho(x).flat());
    }
    std::sort(images.begin(), images.end());
    images.erase(std::unique(images.begin(), images.end()), images.end());
    std::vector<RatVector> expected;
    for (const auto& z : mp) expected.emplace_back(z.begin(), z.end());
    const bool ok = images == expected && images.size() == bp.size();
    std::cout << bp.size() << " = " << mp.size() << ", bijection "
              << (ok ? "OK" : "MISMATCH") << "\n";
    return ok ? 0 : 4;
}

int cmd_rowmotion(const Options& o)
{
    const std::size_t n = o.n, m = o.m ? o.m : o.n;
    auto p = product_of_chains(n, m);
    RatVector g;
    if (o.random_point || o.input.empty()) {
        // random rational point of C([n] x [m]): scaled random values
        std::mt19937_64 rng(o.seed);
        g.assign(n * m, Rat(0));
        for (auto& x : g) x = Rat(static_cast<long>(rng() % 7), 6);
        Rat worst = 0;
        for (const auto& chain : p.maximal_chains()) {
            Rat s = 0;
            for (auto q : chain) s += g[q];
            if (s > worst) worst = s;
        }
        if (worst > 1)
            for (auto& x : g) x /= worst;
    } else {
        std::ifstream in(o.input);
        if (!in) throw std::invalid_argument("cannot open input file: " + o.input);
        auto rows = read_grid(in);
        if (rows.size() != n || rows[0].size() != m)
            throw std::invalid_argument("rowmotion: input grid is not n x m");
        for (const auto& r : rows) g.insert(g.end(), r.begin(), r.end());
    }
    if (!in_chain_polytope(p, g))
        throw std::invalid_argument("rowmotion: point is not in C([n] x [m])");

    const long limit = o.steps > 0 ? o.steps : 1000;
    json steps = json::array();
    auto show = [&](const RatVector& v, std::size_t idx) {
        auto w = stanley_thomas_word(n, m, v);
        if (o.format == "json") {
            json pt = json::array(), word = json::array();
            for (const auto& x : v) pt.push_back(x.str());
            for (const auto& x : w) word.push_back(x.str());
            steps.push_back({{"step", idx}, {"point", pt}, {"st_word", word}});
        } else {
            std::cout << "step " << idx << ":";
            for (const auto& x : v) std::cout << " " << x;
            std::cout << "  | st-word:";
            for (const auto& x : w) std::cout << " " << x;
            std::cout << "\n";
        }
    };
    show(g, 0);
    RatVector cur = g;
    long orbit = -1;
    for (long s = 1; s <= limit; ++s) {
        cur = rowmotion_chain(p, cur);
        show(cur, static_cast<std::size_t>(s));
        if (cur == g) {
            orbit = s;
            break;
        }
    }
    if (o.format == "json") {
        json out{{"orbit_length", orbit}};
        out["steps"] = steps;
        std::cout << out.dump(2) << "\n";
    } else if (orbit > 0) {
        std::cout << "orbit length " << orbit << "\n";
    }
    return 0;
}

int cmd_kostka(const Options& o)
{
    auto value = kostka(parse_int_list(o.lambda), parse_int_list(o.mu));
    if (o.format == "json")
        std::cout << json{{"kostka", value.str()}}.dump(2) << "\n";
    else
        std::cout << value << "\n";
    return 0;
}

int cmd_transfer(const Options& o)
{
    const std::size_t n = o.n, m = o.m ? o.m : o.n;
    auto p = product_of_chains(n, m);
    std::ifstream file;
    std::istream* in = &std::cin;
    if (!o.input.empty() && o.input != "-") {
        file.open(o.input);
        if (!file) throw std::invalid_argument("cannot open input file: " + o.input);
        in = &file;
    }
    auto rows = read_grid(*in);
    if (rows.size() != n || rows[0].size() != m)
        throw std::invalid_argument("transfer: input grid is not n x m");
    RatVector f;
    for (const auto& r : rows) f.insert(f.end(), r.begin(), r.end());
    RatVector out = o.inverse ? transfer_inverse(p, f) : transfer(p, f);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) std::cout << (j ? " " : "") << out[i * m + j];
        std::cout << "\n";
    }
    return 0;
}

void add_common(CLI::App* cmd, Options& o)
{
    cmd->add_option("--family", o.family, "polytope family: B, M, GT, O or C");
    cmd->add_option("--n", o.n, "matrix size / first chain length");
    cmd->add_option("--k", o.k, "chain cap k");
    cmd->add_option("--m", o.m, "second chain length (O/C families)");
    cmd->add_option("--alpha", o.alpha, "row sums, comma separated");
    cmd->add_option("--beta", o.beta, "column sums, comma separated");
    cmd->add_option("--lambda", o.lambda, "GT shape, comma separated");
    cmd->add_option("--mu", o.mu, "GT content, comma separated");
    cmd->add_option("--format", o.format, "output format: text, json or csv");
    cmd->add_option("--max-nodes", o.max_nodes, "enumeration node budget");
    cmd->add_option("--max-states", o.max_states, "diagonal DP state budget (0 = unlimited)");
    cmd->add_option("--seed", o.seed, "seed for sampled inputs");
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact geometry of restricted Birkhoff polytopes and their GT partners"};
    app.require_subcommand(1);
    Options o;

    auto* count = app.add_subcommand("count", "lattice points of the t-th dilate");
    add_common(count, o);
    count->add_option("--t", o.t, "dilation factor");
    count->add_option("--t-range", o.t_range, "dilation range A:B");

    auto* ehr = app.add_subcommand("ehrhart", "Ehrhart (quasi-)polynomial");
    add_common(ehr, o);
    ehr->add_option("--verify-extra", o.verify_extra, "extra verification points");
    ehr->add_flag("--quasi", o.quasi, "fit a quasi-polynomial with minimal period search");
    ehr->add_option("--denominator-lcm", o.denominator_lcm,
                    "lcm of vertex denominators (computed if omitted)");

    auto* verts = app.add_subcommand("vertices", "exact vertex enumeration");
    add_common(verts, o);

    auto* facets = app.add_subcommand("facets", "facet count");
    add_common(facets, o);
    facets->add_flag("--table1", o.table1, "emit the facet/vertex grid for n <= max-n");
    facets->add_option("--max-n", o.max_n, "largest n for --table1");

    auto* rsk = app.add_subcommand("rsk", "piecewise-linear RSK on a matrix file");
    rsk->add_option("--input", o.input, "matrix file (default stdin)");
    rsk->add_flag("--inverse", o.inverse, "apply the inverse map");
    rsk->add_option("--format", o.format, "output format");

    auto* vb = app.add_subcommand("verify-bijection",
                                  "check rho : tB_n^k cap Z -> tM_n^k cap Z is a bijection");
    add_common(vb, o);
    vb->add_option("--t", o.t, "dilation factor");

    auto* rm = app.add_subcommand("rowmotion", "chain rowmotion orbit with Stanley-Thomas words");
    add_common(rm, o);
    rm->add_option("--input", o.input, "point of C([n] x [m]) as an n x m grid file");
    rm->add_flag("--random", o.random_point, "start from a seeded random point");
    rm->add_option("--steps", o.steps, "maximum number of steps (default: full orbit)");

    auto* ko = app.add_subcommand("kostka", "Kostka number K_{lambda,mu}");
    add_common(ko, o);

    auto* tr = app.add_subcommand("transfer", "Stanley transfer map on [n] x [m]");
    add_common(tr, o);
    tr->add_option("--input", o.input, "poset function as an n x m grid file");
    tr->add_flag("--inverse", o.inverse, "apply the inverse transfer map");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (count->parsed()) return cmd_count(o);
        if (ehr->parsed()) return cmd_ehrhart(o);
        if (verts->parsed()) return cmd_vertices(o);
        if (facets->parsed()) return cmd_facets(o);
        if (rsk->parsed()) return cmd_rsk(o);
        if (vb->parsed()) return cmd_verify_bijection(o);
        if (rm->parsed()) return cmd_rowmotion(o);
        if (ko->parsed()) return cmd_kostka(o);
        if (tr->parsed()) return cmd_transfer(o);
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const NotAPolynomial& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const NoPeriodFound& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
