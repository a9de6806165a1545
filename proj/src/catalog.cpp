#include "lf/catalog.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "lf/catalog_data.hpp"
#include "lf/fileformat.hpp"
#include "lf/invariants.hpp"

namespace lf {

namespace {

Factorization plain(std::initializer_list<int> application_order, int repeat)
{
    Factorization f;
    for (int r = 0; r < repeat; ++r)
        for (int c : application_order) f.cycles.push_back({c, {}});
    return f;
}

LanternInstance make_lantern_std()
{
    LanternInstance l;
    l.name = "lantern-std";
    l.genus = 2;
    l.boundary = {{1, {}}, {1, {}}, {5, {}}, {5, {}}};
    l.a = {kS1, {}};
    l.b = {3, {}};
    // (t1 t2)^3 rotates the a1,b1 handle by a half turn: class a2 − a1
    TwistWord half;
    for (int r = 0; r < 3; ++r) half.insert(half.end(), {{1, 1}, {2, 1}});
    l.c = {3, half};
    return l;
}

struct Catalog {
    std::vector<CatalogEntry> entries;
    std::map<std::string, LanternInstance> lanterns;
};

const Catalog& catalog()
{
    static const Catalog cat = [] {
        Catalog c;
        auto add = [&](std::string name, Factorization f, NSType t, std::optional<int> b1, std::string prov,
                       IdentityLevel level, bool external = false) {
            c.entries.push_back({std::move(name), std::move(f), t, b1, std::move(prov), level, external});
        };
        // Words are listed in application order, i.e. reversed from the composition.
        add("chakiris-alpha", plain({5, 4, 3, 2, 1}, 6), {30, 0}, 0, "chain relation (t1 t2 t3 t4 t5)^6",
            IdentityLevel::Exact);
        add("chakiris-beta", plain({4, 3, 2, 1}, 10), {40, 0}, 0, "chain relation (t1 t2 t3 t4)^10",
            IdentityLevel::Exact);
        add("chakiris-gamma", plain({1, 2, 3, 4, 5, 5, 4, 3, 2, 1}, 2), {20, 0}, 0,
            "(t1 t2 t3 t4 t5 t5 t4 t3 t2 t1)^2", IdentityLevel::Exact);
        Factorization hyp = plain({5, 4, 3, 2, 1, 1, 2, 3, 4, 5}, 2);
        add("hyperelliptic-sq", hyp, {20, 0}, 0, "square of the hyperelliptic involution", IdentityLevel::Exact);

        Factorization m62 = parse_factorization(data::kMatsumoto62);
        add("matsumoto-62", m62, {6, 2}, 2,
            "Matsumoto's relation (t_B0 t_B1 t_B2 t_C)^2; curves located by computer search within that form",
            IdentityLevel::Exact, true);

        LanternInstance lan = make_lantern_std();
        c.lanterns[lan.name] = lan;

        Factorization l181 = lantern_substitute(normalize_for_lantern(hyp, 0), 3, lan);
        add("lantern-18-1", l181, {18, 1}, 0, "one lantern substitution in hyperelliptic-sq", IdentityLevel::Closed);
        Factorization l162 = lantern_substitute(normalize_for_lantern(l181, 9), 12, lan);
        add("lantern-16-2", l162, {16, 2}, 0, "two lantern substitutions in hyperelliptic-sq", IdentityLevel::Closed);
        add("fibersum-12-4", fiber_sum(m62, m62), {12, 4}, 2, "fiber sum of two copies of matsumoto-62",
            IdentityLevel::Exact);
        return c;
    }();
    return cat;
}

std::string class_string(const HomologyClass& h)
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < h.size(); ++i) os << (i ? "," : "") << h[i];
    os << ')';
    return os.str();
}

VerifyReport verify_lantern(const LanternInstance& l)
{
    VerifyReport r;
    r.name = l.name;
    const SurfaceModel& s = surface(l.genus);

    Factorization lhs, rhs;
    lhs.fiber_genus = rhs.fiber_genus = l.genus;
    lhs.cycles = l.boundary;
    rhs.cycles = l.replacement();
    bool eq = evaluate(lhs) == evaluate(rhs);
    r.checks.push_back({"evaluate(LHS) = evaluate(RHS)", eq, to_string(evaluate(lhs).m)});

    std::vector<HomologyClass> d;
    for (const auto& c : l.boundary) d.push_back(curve_class(s, c));
    bool disjoint = true;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j) disjoint = disjoint && algebraic_intersection(d[i], d[j]) == 0;
    r.checks.push_back({"boundary curves pairwise have i = 0", disjoint, ""});

    std::vector<HomologyClass> abc{curve_class(s, l.a), curve_class(s, l.b), curve_class(s, l.c)};
    bool abc_zero = true;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j) abc_zero = abc_zero && algebraic_intersection(abc[i], abc[j]) == 0;
    r.checks.push_back({"A, B, C pairwise have i = 0", abc_zero, ""});

    // Each interior curve encloses two boundary components: its class is ±∂i ± ∂j
    // for a side of one of the partitions {12|34}, {13|24}, {14|23}, and the three
    // curves use three different partitions.
    const int parts[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
    auto matches = [&](const HomologyClass& x, int p) {
        for (int side = 0; side < 2; ++side) {
            const auto& u = d[parts[p][2 * side]];
            const auto& v = d[parts[p][2 * side + 1]];
            for (int e1 : {1, -1})
                for (int e2 : {1, -1}) {
                    bool ok = true;
                    for (std::size_t k = 0; k < x.size(); ++k) ok = ok && x[k] == e1 * u[k] + e2 * v[k];
                    if (ok) return true;
                }
        }
        return false;
    };
    int perm[3] = {0, 1, 2};
    bool pattern = false;
    do {
        pattern = pattern || (matches(abc[0], perm[0]) && matches(abc[1], perm[1]) && matches(abc[2], perm[2]));
    } while (std::next_permutation(perm, perm + 3));
    r.checks.push_back({"interior classes enclose distinct boundary pairs", pattern,
                        "A" + class_string(abc[0]) + " B" + class_string(abc[1]) + " C" + class_string(abc[2])});

    int separating = 0;
    for (const auto& x : abc)
        if (std::all_of(x.begin(), x.end(), [](auto v) { return v == 0; })) ++separating;
    r.checks.push_back({"exactly one of A, B, C separating", separating == 1, ""});

    if (l.genus == 2) {
        TwistWord word = lhs.composition_word();
        TwistWord rw = inverse(rhs.composition_word());
        word.insert(word.end(), rw.begin(), rw.end());
        bool sphere = is_inner(sphere_quotient(word)).has_value();
        bool hom = evaluate(s, word).m.is_identity();
        r.checks.push_back({"relation trivial in Mod(closed genus 2)", sphere && hom,
                            std::string("sphere quotient ") + (sphere ? "trivial" : "nontrivial")});
    }
    return r;
}

}  // namespace

Factorization normalize_for_lantern(const Factorization& f, std::size_t offset)
{
    Factorization g = f;
    for (std::size_t k = 0; k < 3; ++k) g = hurwitz_move(g, offset + k, Direction::Left);
    for (std::size_t k = 8; k > 5; --k) g = hurwitz_move(g, offset + k, Direction::Right);
    return g;
}

std::vector<CatalogListing> catalog_list()
{
    std::vector<CatalogListing> out;
    for (const auto& e : catalog().entries) out.push_back({e.name, "factorization", e.provenance});
    for (const auto& [name, l] : catalog().lanterns)
        out.push_back({name, "relation", "lantern t_c1^2 t_c5^2 = t_A t_B t_C with A = s1, B = c3"});
    return out;
}

bool catalog_has(const std::string& name)
{
    for (const auto& l : catalog_list())
        if (l.name == name) return true;
    return false;
}

const CatalogEntry& catalog_get(const std::string& name)
{
    for (const auto& e : catalog().entries)
        if (e.name == name) return e;
    if (catalog().lanterns.count(name)) throw std::out_of_range("catalog entry '" + name + "' is a relation, not a factorization");
    throw std::out_of_range("unknown catalog entry '" + name + "'");
}

const LanternInstance& lantern_instance(const std::string& name)
{
    auto it = catalog().lanterns.find(name);
    if (it == catalog().lanterns.end()) throw std::out_of_range("unknown lantern instance '" + name + "'");
    return it->second;
}

std::set<std::pair<int, int>> catalog_types()
{
    std::set<std::pair<int, int>> out;
    for (const auto& e : catalog().entries) out.insert({e.expected_type.n, e.expected_type.s});
    return out;
}

bool VerifyReport::passed() const
{
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

std::string VerifyReport::to_text() const
{
    std::ostringstream os;
    os << name << ": " << (passed() ? "ok" : "FAILED") << '\n';
    for (const auto& c : checks) {
        os << "  [" << (c.passed ? "ok" : "FAIL") << "] " << c.what;
        if (!c.detail.empty()) os << " (" << c.detail << ')';
        os << '\n';
    }
    return os.str();
}

VerifyReport catalog_verify(const std::string& name)
{
    if (catalog().lanterns.count(name)) return verify_lantern(catalog().lanterns.at(name));
    const CatalogEntry& e = catalog_get(name);
    VerifyReport r;
    r.name = name;
    const Factorization& f = e.factorization;

    auto hom = identity_check(f, IdentityLevel::Homology);
    r.checks.push_back({"identity: homology", hom.passed, hom.detail});
    if (e.verification_level != IdentityLevel::Homology) {
        auto id = identity_check(f, e.verification_level);
        r.checks.push_back({"identity: " + to_string(e.verification_level), id.passed, id.detail});
    }
    NSType t = ns_type(f);
    r.checks.push_back({"type (" + std::to_string(e.expected_type.n) + "," + std::to_string(e.expected_type.s) + ")",
                        t == e.expected_type, "(" + std::to_string(t.n) + "," + std::to_string(t.s) + ")"});
    if (e.expected_b1) {
        auto h1 = first_homology(f, true);
        r.checks.push_back({"b1 = " + std::to_string(*e.expected_b1),
                            static_cast<int>(h1.free_rank) == *e.expected_b1,
                            "H1 = " + h1.to_string() + ", assuming a section"});
        // external words are accepted only with the exact group H1 = Z^b1
        if (e.external_data)
            r.checks.push_back({"H1 torsion-free (external data)", h1.torsion.empty(), "H1 = " + h1.to_string()});
    }
    return r;
}

}  // namespace lf
