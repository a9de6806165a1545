#include "doctest.h"
#include "lf/catalog.hpp"
#include "lf/invariants.hpp"

using namespace lf;

namespace {

const Factorization& entry(const char* name) { return catalog_get(name).factorization; }

}  // namespace

TEST_CASE("euler characteristic and signature")
{
    CHECK(euler_characteristic(entry("chakiris-alpha")) == 26);
    CHECK(euler_characteristic(entry("matsumoto-62")) == 4);
    CHECK(signature_g2(entry("chakiris-alpha")) == -18);
    CHECK(signature_g2(6, 2) == -4);
    CHECK(signature_g2(4, 3) == -3);
    CHECK_THROWS_AS(signature_g2(1, 0), InvariantError);

    Factorization f;
    f.base_genus = 1;
    f.cycles = {{1, {}}};
    CHECK(euler_characteristic(f) == 1);
}

TEST_CASE("first homology")
{
    CHECK(first_homology(entry("chakiris-alpha")).to_string() == "0");
    CHECK(first_homology(entry("matsumoto-62")).free_rank == 2);
    CHECK(first_homology(entry("lantern-16-2")).to_string() == "Z/2");
    CHECK(first_homology(entry("lantern-18-1")).to_string() == "0");
    Factorization f;
    f.base_genus = 1;
    f.cycles = {{1, {}}};
    CHECK(first_homology(f).free_rank == 5);
}

TEST_CASE("betti numbers")
{
    auto a = betti_numbers(entry("chakiris-alpha"));
    CHECK(a.betti == std::array<std::int64_t, 5>{1, 0, 24, 0, 1});
    CHECK(a.b2_plus == 3);
    CHECK(a.b2_minus == 21);
    CHECK(a.identity_level == "exact");

    auto m = betti_numbers(entry("matsumoto-62"));
    CHECK(m.betti == std::array<std::int64_t, 5>{1, 2, 6, 2, 1});
    CHECK(m.b2_plus == 1);
    CHECK(m.b2_minus == 5);

    auto l = betti_numbers(entry("lantern-16-2"));
    CHECK(l.euler == 14);
    CHECK(l.signature == -10);
    CHECK(l.b2_plus == 1);
    CHECK(l.b2_minus == 11);
    CHECK(l.identity_level == "closed");

    auto text = m.to_text();
    CHECK(text.find("euler=4\n") != std::string::npos);
    CHECK(text.find("h1=Z^2\n") != std::string::npos);
    CHECK(text.find("section_assumed=true\n") != std::string::npos);
    CHECK_FALSE(betti_numbers(entry("matsumoto-62"), false).section_assumed);

    Factorization bad;
    bad.cycles = {{1, {}}};
    CHECK_THROWS_AS(betti_numbers(bad), InvariantError);
}

TEST_CASE("presentations")
{
    auto p = pi1_presentation(entry("matsumoto-62"));
    CHECK(p.generators.size() == 4);
    CHECK(p.relators.size() == 9);
    CHECK(abelianization(p) == first_homology(entry("matsumoto-62")));
    auto disk = pi1_presentation(entry("matsumoto-62"), false);
    CHECK(disk.relators.size() == 8);
    CHECK(p.to_text().rfind("< a1, b1, a2, b2 | ", 0) == 0);

    for (const char* name : {"chakiris-alpha", "chakiris-beta", "hyperelliptic-sq", "lantern-16-2"}) {
        auto q = pi1_presentation(entry(name));
        CHECK(abelianization(q) == first_homology(entry(name)));
    }

    Factorization torus;
    torus.fiber_genus = 1;
    torus.cycles = {{1, {}}, {2, {}}};
    auto t = pi1_presentation(torus);
    CHECK(abelianization(t).to_string() == "0");

    Factorization g3;
    g3.fiber_genus = 3;
    g3.cycles = {{1, {}}};
    CHECK_THROWS_AS(pi1_presentation(g3), InvariantError);
}

TEST_CASE("betti bound and witnesses")
{
    for (const auto& l : catalog_list()) {
        if (l.kind != "factorization") continue;
        auto r = betti_bound_check(entry(l.name.c_str()));
        CHECK_MESSAGE(r.ok(), l.name);
        CHECK(r.bound == 2);
    }
    Factorization twice;
    twice.cycles = {{1, {}}, {1, {}}};
    auto r = betti_bound_check(twice);
    CHECK_FALSE(r.witness_ok);
    CHECK_FALSE(r.identity_ok);
    CHECK_FALSE(r.ok());
    CHECK_THROWS_AS(betti_bound_check(Factorization{}), InvariantError);
}

TEST_CASE("basis pairs")
{
    Factorization f;
    f.cycles = {{1, {}}, {2, {}}, {1, {}}, {4, {}}};
    auto pairs = basis_pair_search(f);
    CHECK(pairs == std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK_FALSE(basis_pair_search(entry("matsumoto-62")).empty());
}
