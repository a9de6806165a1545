#include "lf/cli.hpp"

#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "lf/catalog.hpp"
#include "lf/feasibility.hpp"
#include "lf/fileformat.hpp"
#include "lf/invariants.hpp"

namespace lf {

namespace {

struct CheckFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void write_output(const std::string& text, const std::string& path, std::ostream& out)
{
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << text;
}

std::vector<int> parse_primes(const std::string& text)
{
    std::vector<int> primes;
    std::stringstream ss(text);
    for (std::string tok; std::getline(ss, tok, ',');) {
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError("bad prime list '" + text + "'");
        primes.push_back(std::stoi(tok));
    }
    return primes;
}

IdentityLevel parse_level(const std::string& s)
{
    if (s == "homology") return IdentityLevel::Homology;
    if (s == "modp") return IdentityLevel::ModP;
    if (s == "exact") return IdentityLevel::Exact;
    if (s == "closed") return IdentityLevel::Closed;
    throw ParseError("unknown level '" + s + "'");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Lefschetz fibration monodromy toolkit", "lfib"};
    app.require_subcommand(1);

    std::string src, src2, level, output, word, dir, instance = "lantern-std", format = "csv", primes = "2,3,5";
    std::string cat_action, cat_name;
    std::size_t index = 0;
    int n_max = 20, s_max = 15, k = 2;
    bool no_section = false, disk = false;

    auto* check = app.add_subcommand("check", "verify that a factorization multiplies to the identity");
    check->add_option("src", src, "file or catalog:<name>")->required();
    check->add_option("--level", level, "homology|modp|exact|closed (default: strongest that passes)");

    auto* inv = app.add_subcommand("invariants", "Euler characteristic, signature, H1, Betti numbers");
    inv->add_option("src", src)->required();
    inv->add_flag("--no-section", no_section, "do not assume a section exists");

    auto* type = app.add_subcommand("type", "(n,s) type");
    type->add_option("src", src)->required();

    auto* pres = app.add_subcommand("pi1", "fundamental group presentation");
    pres->add_option("src", src)->required();
    pres->add_flag("--disk", disk, "base is a disk (no surface relator)");
    pres->add_flag("--no-section", no_section);

    auto* hur = app.add_subcommand("hurwitz", "elementary Hurwitz move");
    hur->add_option("src", src)->required();
    hur->add_option("--index", index)->required();
    hur->add_option("--dir", dir)->required()->check(CLI::IsMember({"left", "right"}));
    hur->add_option("-o", output);

    auto* conj = app.add_subcommand("conjugate", "conjugate every cycle by a twist word");
    conj->add_option("src", src)->required();
    conj->add_option("--word", word, "tokens such as \"t1 T3 s1\"")->required();
    conj->add_option("-o", output);

    auto* fsum = app.add_subcommand("fibersum", "concatenate two factorizations");
    fsum->add_option("src1", src)->required();
    fsum->add_option("src2", src2)->required();
    fsum->add_option("-o", output);

    auto* sub = app.add_subcommand("sub", "lantern or chain substitution");
    sub->require_subcommand(1);
    auto* lan = sub->add_subcommand("lantern");
    lan->add_option("src", src)->required();
    lan->add_option("--at", index)->required();
    lan->add_option("--instance", instance);
    lan->add_option("-o", output);
    auto* chn = sub->add_subcommand("chain");
    chn->add_option("src", src)->required();
    chn->add_option("--at", index)->required();
    chn->add_option("--dir", dir)->required()->check(CLI::IsMember({"expand", "contract"}));
    chn->add_option("-o", output);

    auto* trans = app.add_subcommand("transitivity", "finite symplectic quotient certificate");
    trans->add_option("src", src)->required();
    trans->add_option("--primes", primes);

    auto* feas = app.add_subcommand("feasibility", "genus-2 (n,s) lattice");
    feas->add_option("--n-max", n_max);
    feas->add_option("--s-max", s_max);
    feas->add_option("--format", format)->check(CLI::IsMember({"csv", "svg"}));
    feas->add_option("-o", output);

    auto* fam = app.add_subcommand("family", "invariants of the (2k, 4k-5) family");
    fam->add_option("--k", k)->required();

    auto* bp = app.add_subcommand("basis-pairs", "cycle pairs extending to an integral basis");
    bp->add_option("src", src)->required();

    auto* cat = app.add_subcommand("catalog", "built-in factorizations and relations");
    cat->add_option("action", cat_action)->required()->check(CLI::IsMember({"list", "show", "verify"}));
    cat->add_option("name", cat_name);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n' << app.help();
        return 2;
    }

    try {
        if (*check) {
            Factorization f = load_source(src);
            if (level.empty()) {
                auto l = strongest_identity(f);
                if (!l) throw CheckFailure("identity: fails (" + identity_check(f, IdentityLevel::Homology).detail + ")");
                out << "identity: " << to_string(*l) << '\n';
                out << identity_check(f, *l).detail << '\n';
            } else {
                auto r = identity_check(f, parse_level(level));
                out << "identity: " << to_string(r.level) << ' ' << (r.passed ? "passes" : "fails") << '\n'
                    << r.detail << '\n';
                if (!r.passed) return 1;
            }
        } else if (*inv) {
            Factorization f = load_source(src);
            InvariantReport r;
            try {
                r = betti_numbers(f, !no_section);
            } catch (const InvariantError& e) {
                throw CheckFailure(e.what());
            }
            NSType t = ns_type(f);
            out << "type=(" << t.n << "," << t.s << ")\n" << r.to_text();
        } else if (*type) {
            NSType t = ns_type(load_source(src));
            out << "type: (" << t.n << "," << t.s << ")" << (t.caveat ? " (s counts all separating cycles)" : "")
                << '\n';
        } else if (*pres) {
            Factorization f = load_source(src);
            out << pi1_presentation(f, !disk, !no_section).to_text() << '\n';
        } else if (*hur) {
            Factorization f = load_source(src);
            write_output(serialize(hurwitz_move(f, index, dir == "left" ? Direction::Left : Direction::Right)),
                         output, out);
        } else if (*conj) {
            Factorization f = load_source(src);
            write_output(serialize(global_conjugate(f, parse_twist_word(word, f.fiber_genus))), output, out);
        } else if (*fsum) {
            write_output(serialize(fiber_sum(load_source(src), load_source(src2))), output, out);
        } else if (*lan) {
            Factorization f = load_source(src);
            write_output(serialize(lantern_substitute(f, index, lantern_instance(instance))), output, out);
        } else if (*chn) {
            Factorization f = load_source(src);
            auto d = dir == "expand" ? ChainDirection::Expand : ChainDirection::Contract;
            write_output(serialize(chain_substitute(f, index, d)), output, out);
        } else if (*trans) {
            Factorization f = load_source(src);
            const SurfaceModel& s = surface(f.fiber_genus);
            std::vector<SpMatrix> gens;
            for (const auto& c : f.cycles) {
                SpMatrix m = transvection(curve_class(s, c));
                if (std::find(gens.begin(), gens.end(), m) == gens.end()) gens.push_back(m);
            }
            auto certificate = transitivity_certificate(gens, parse_primes(primes));
            for (const auto& p : certificate.primes)
                out << "p=" << p.p << " order=" << p.order << " target=" << p.target
                    << (p.surjective ? " surjective" : " proper") << '\n';
            out << (certificate.consistent_with_transitive() ? "consistent with transitive" : "not transitive") << '\n';
            if (!certificate.consistent_with_transitive()) return 1;
        } else if (*feas) {
            auto reports = enumerate_types(n_max, s_max, catalog_types());
            write_output(format == "csv" ? figure_csv(reports) : figure_svg(reports, n_max, s_max), output, out);
        } else if (*fam) {
            FamilyReport r = family_invariants(k);
            auto ind = indecomposability_check(r.n, r.s);
            out << "k=" << r.k << "\nn=" << r.n << "\ns=" << r.s << "\nb1=" << r.b1 << "\neuler=" << r.euler
                << "\nsignature=" << r.signature << "\nb2=" << r.b2 << "\nb2_plus=" << r.b2_plus
                << "\nb2_minus=" << r.b2_minus << "\n2n-s=" << 2 * r.n - r.s
                << "\nindecomposable=" << (ind.certified ? "certified" : "inconclusive") << '\n';
        } else if (*bp) {
            Factorization f = load_source(src);
            auto pairs = basis_pair_search(f);
            for (auto [i, j] : pairs) out << i << ' ' << j << '\n';
            if (pairs.empty()) {
                out << "no pair\n";
                return 1;
            }
        } else if (*cat) {
            if (cat_action == "list") {
                for (const auto& l : catalog_list()) out << l.name << '\t' << l.kind << '\t' << l.provenance << '\n';
            } else {
                if (cat_name.empty()) throw ParseError("catalog " + cat_action + " needs a name");
                if (!catalog_has(cat_name)) throw std::out_of_range("unknown catalog entry '" + cat_name + "'");
                if (cat_action == "show") {
                    try {
                        out << serialize(catalog_get(cat_name).factorization);
                    } catch (const std::out_of_range&) {
                        const auto& l = lantern_instance(cat_name);
                        Factorization lhs, rhs;
                        lhs.cycles = l.boundary;
                        rhs.cycles = l.replacement();
                        out << "lhs " << serialize(lhs) << "rhs " << serialize(rhs);
                    }
                } else {
                    auto r = catalog_verify(cat_name);
                    out << r.to_text();
                    if (!r.passed()) return 1;
                }
            }
        }
    } catch (const CheckFailure& e) {
        out << e.what() << '\n';
        return 1;
    } catch (const PatternError& e) {
        err << e.what() << '\n';
        return 1;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}

}  // namespace lf
