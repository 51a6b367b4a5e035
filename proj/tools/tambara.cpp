// Command line front end: eval, ideal, spec, verify, oracle-check.
//
// Exit codes: 0 success, 1 a verification failed, 2 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "tambara/checks.hpp"
#include "tambara/expr.hpp"
#include "tambara/io.hpp"
#include "tambara/spectrum.hpp"

namespace {

using namespace tambara;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Common {
    unsigned long p = 2;
    unsigned r = 1;
    std::string qs;
    int bound = default_sample_bound;
    std::string format = "text";
    std::uint64_t seed = 1;
};

void add_common(CLI::App* cmd, Common& c, bool with_dot)
{
    cmd->add_option("--p", c.p, "prime p")->capture_default_str();
    cmd->add_option("--r", c.r, "rank r of G = Z/p^r")->capture_default_str();
    cmd->add_option("--qs", c.qs, "comma separated primes different from p");
    cmd->add_option("--bound", c.bound, "coefficient bound B for sampled checks")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    std::vector<std::string> formats{"json", "text"};
    if (with_dot)
        formats.insert(formats.begin() + 1, "dot");
    cmd->add_option("--format", c.format, "output format")
        ->capture_default_str()
        ->check(CLI::IsMember(formats));
    cmd->add_option("--seed", c.seed, "seed for randomized checks")->capture_default_str();
}

std::vector<Int> parse_qs(const std::string& s)
{
    std::vector<Int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty())
            continue;
        Int q;
        if (q.set_str(item, 10) != 0)
            throw UsageError("--qs: '" + item + "' is not an integer");
        out.push_back(q);
    }
    return out;
}

// Splits "l,k,x" style lists.
std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep))
        out.push_back(item);
    return out;
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string lattice_text(const Lattice& l)
{
    if (l.is_zero())
        return "0";
    std::string out;
    for (const auto& row : l.basis()) {
        out += "(";
        for (std::size_t c = 0; c < row.size(); ++c)
            out += (c ? "," : "") + row[c].get_str();
        out += ")";
    }
    return out;
}

// --- eval -------------------------------------------------------------------

int run_eval(const Common& c, const std::string& src)
{
    GroupParams P(c.p, c.r);
    Element a = eval_expr(src, P);
    if (c.format == "json")
        print_json(json{{"p", c.p}, {"r", c.r}, {"level", a.level()}, {"value", to_string(a)}});
    else
        std::cout << to_string(a) << "\n";
    return kOk;
}

// --- ideal ------------------------------------------------------------------

int run_ideal(const Common& c, const std::string& jspec, const std::string& base,
              const std::string& ops, bool prime)
{
    GroupParams P(c.p, c.r);
    std::optional<IdealSequence> seq;
    bool certified = true;
    if (!jspec.empty()) {
        auto parts = split(jspec, ',');
        if (parts.size() != 3)
            throw UsageError("--j expects l,k,x");
        const unsigned l = static_cast<unsigned>(std::stoul(parts[0]));
        const unsigned k = static_cast<unsigned>(std::stoul(parts[1]));
        Int x;
        if (x.set_str(parts[2], 10) != 0)
            throw UsageError("--j: bad x '" + parts[2] + "'");
        // a lone J ideal is shown as a one-level-wide report
        Ideal J = J_ideal(P, l, k, abs(x));
        if (c.format == "json") {
            json j{{"level", l}, {"lattice", lattice_to_json(J.lattice())}};
            if (auto d = recognize_J(J))
                j["label"] = descriptor_to_json(*d);
            print_json(j);
        } else {
            std::cout << to_string(JDescriptor{l, k, abs(x)}) << " = " << lattice_text(J.lattice())
                      << "\n";
        }
        return kOk;
    }
    Int n;
    if (n.set_str(base.empty() ? "0" : base, 10) != 0)
        throw UsageError("--base: not an integer");
    seq = apply_ops(IdealSequence::base(P, n), ops, c.bound, &certified);
    TambaraReport rep = check_tambara(*seq, c.bound);
    std::optional<PrimeReport> pr;
    if (prime)
        pr = falsify_prime(*seq, c.bound);
    if (c.format == "json") {
        json j = sequence_to_json(*seq);
        j["S_certified"] = certified;
        j["tambara"] = to_string(rep.status);
        j["tambara_details"] = rep.details;
        if (pr)
            j["prime"] = prime_report_to_json(*pr);
        print_json(j);
    } else {
        for (unsigned k = 0; k <= seq->top(); ++k) {
            std::cout << "I_" << k << " = " << lattice_text((*seq)[k].lattice());
            if (auto d = recognize_J((*seq)[k]))
                std::cout << "  " << to_string(*d);
            std::cout << "\n";
        }
        if (!certified)
            std::cout << "note: some S step was generated from bounded samples\n";
        std::cout << "tambara: " << to_string(rep.status) << "\n";
        for (const auto& d : rep.details)
            std::cout << "  " << d << "\n";
        if (pr) {
            std::cout << "prime: " << to_string(pr->status) << " (bound " << pr->bound << ")\n";
            if (pr->witness)
                std::cout << "  k=" << pr->witness->k << " i=" << pr->witness->i
                          << " b=" << to_string(pr->witness->b)
                          << " a=" << to_string(pr->witness->a) << "\n";
        }
    }
    return rep.ok() ? kOk : kFailed;
}

// --- spec -------------------------------------------------------------------

int run_spec(const Common& c)
{
    GroupParams G(c.p, c.r);
    const auto qs = validate_prime_set(G, parse_qs(c.qs));
    auto pts = enumerate_spectrum(G, qs, c.bound);
    Poset poset = inclusion_poset(pts);
    if (c.format == "json") {
        print_json(spectrum_to_json(G, qs, pts, poset));
    } else if (c.format == "dot") {
        std::cout << to_dot(G, pts, poset);
    } else {
        std::cout << "Spec for p=" << G.p << ", r=" << G.r << ": " << pts.size() << " points\n";
        for (std::size_t a = 0; a < pts.size(); ++a) {
            std::cout << "  [" << a << "] " << label(pts[a], G.r, G.p) << "  "
                      << check_detail::seq_text(pts[a].seq) << "\n";
        }
        std::cout << "covering relations (smaller < larger):\n";
        for (const auto& [a, b] : poset.covers)
            std::cout << "  " << label(pts[a], G.r, G.p) << " < " << label(pts[b], G.r, G.p)
                      << "\n";
        std::cout << "dimension: " << dimension(pts, poset) << "\n";
    }
    return kOk;
}

// --- verify -----------------------------------------------------------------

int run_verify(const Common& c)
{
    GroupParams G(c.p, c.r);
    const auto qs = validate_prime_set(G, parse_qs(c.qs));
    const unsigned long long cap = enumeration_cap_from_env();
    std::vector<CheckResult> checks;
    checks.push_back(check_spectrum_law(G, qs, c.bound));
    checks.push_back(check_points_prime(G, qs, c.bound));
    checks.push_back(check_p_siblings(G, c.bound));
    checks.push_back(check_zero_fiber(G, c.bound));
    checks.push_back(check_closed_forms_sound(G, qs));
    checks.push_back(check_covering(c.p, qs, c.r, 2));
    checks.push_back(check_path_independence(c.p, c.r));
    checks.push_back(check_oracle_grid(c.p, std::min(c.r, 3u), 2, cap));
    checks.push_back(check_structure_laws(c.p, c.r, 200, 9, c.seed));
    checks.push_back(check_hnf_canonical(100, c.seed));
    checks.push_back(check_preimage(100, c.seed));
    checks.push_back(check_index_chains(50, c.seed));

    bool all = true;
    for (const auto& ch : checks)
        all = all && ch.ok;
    if (c.format == "json") {
        json arr = json::array();
        for (const auto& ch : checks)
            arr.push_back(json{{"name", ch.name},
                               {"ok", ch.ok},
                               {"cases", ch.cases},
                               {"detail", ch.detail}});
        print_json(json{{"status", all ? "certified" : "failed"},
                        {"p", c.p},
                        {"r", c.r},
                        {"bound", c.bound},
                        {"seed", c.seed},
                        {"checks", std::move(arr)}});
    } else {
        for (const auto& ch : checks)
            std::cout << (ch.ok ? "ok    " : "FAIL  ") << ch.name << " (" << ch.cases << ")"
                      << (ch.detail.empty() ? "" : ": " + ch.detail) << "\n";
        std::cout << (all ? "all checks passed" : "verification failed") << "\n";
    }
    return all ? kOk : kFailed;
}

// --- oracle-check -----------------------------------------------------------

int run_oracle(const Common& c, int max_coeff)
{
    const unsigned long long cap = enumeration_cap_from_env();
    CheckResult res = check_oracle_grid(c.p, c.r, max_coeff, cap);
    if (c.format == "json")
        print_json(json{{"p", c.p},
                        {"max_level", c.r},
                        {"max_coeff", max_coeff},
                        {"cap", cap},
                        {"grid_points", res.cases},
                        {"ok", res.ok},
                        {"detail", res.detail}});
    else
        std::cout << (res.ok ? "agree: " : "DISAGREE: ") << res.detail << " (levels <= " << c.r
                  << ", coefficients 0.." << max_coeff << ", cap " << cap << ")\n";
    return res.ok ? kOk : kFailed;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Prime ideals of Burnside Tambara functors on cyclic p-groups"};
    app.require_subcommand(1);

    Common c;
    std::string expr_src, jspec, base, ops;
    bool prime = false;
    int max_coeff = 2;

    auto* eval = app.add_subcommand("eval", "evaluate an element expression");
    add_common(eval, c, false);
    eval->add_option("expr", expr_src, "expression, e.g. \"jnd(1, 3)\"")->required();

    auto* ideal = app.add_subcommand("ideal", "build a J ideal or an L/S iterate");
    add_common(ideal, c, false);
    auto* jopt = ideal->add_option("--j", jspec, "J ideal as l,k,x");
    auto* bopt = ideal->add_option("--base", base, "level-0 generator n of (n)");
    ideal->add_option("--ops", ops, "word over L and S applied left to right");
    ideal->add_flag("--prime", prime, "also run the bounded primality falsifier");
    jopt->excludes(bopt);

    auto* spec = app.add_subcommand("spec", "enumerate the spectrum and its inclusion order");
    add_common(spec, c, true);

    auto* verify = app.add_subcommand("verify", "run the consistency checks for (p, r, Q)");
    add_common(verify, c, false);

    auto* oracle = app.add_subcommand("oracle-check", "compare norm closed form and census");
    add_common(oracle, c, false);
    oracle->add_option("--max-coeff", max_coeff, "largest coefficient on the grid")
        ->capture_default_str()
        ->check(CLI::NonNegativeNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (eval->parsed())
            return run_eval(c, expr_src);
        if (ideal->parsed()) {
            if (jspec.empty() && base.empty())
                throw UsageError("ideal: give --j l,k,x or --base n [--ops word]");
            return run_ideal(c, jspec, base, ops, prime);
        }
        if (spec->parsed())
            return run_spec(c);
        if (verify->parsed())
            return run_verify(c);
        if (oracle->parsed())
            return run_oracle(c, max_coeff);
    } catch (const SyntaxError& e) {
        std::cerr << "syntax error at " << e.position << ": " << e.what() << "\n";
        return kUsage;
    } catch (const InternalError& e) {
        std::cerr << "internal check failed: " << e.what() << "\n";
        return kFailed;
    } catch (const UsageError& e) {
        std::cerr << e.what() << "\n";
        return kUsage;
    } catch (const tambara::Error& e) {
        std::cerr << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "bad number: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
