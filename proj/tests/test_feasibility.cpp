#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "lf/feasibility.hpp"

using namespace lf;

namespace {

const std::set<std::pair<int, int>> kOpen{{6, 7}, {8, 11}, {10, 15}, {12, 14}};

}  // namespace

TEST_CASE("individual constraints")
{
    auto r = admissible(4, 3);
    CHECK(r.mod10_ok);
    CHECK(r.bk_ok);
    CHECK(r.sharp_ok);
    CHECK(r.status == CatalogStatus::Known);
    CHECK(r.b1_forced == 2);
    CHECK(r.b2_plus == 1);

    CHECK_FALSE(admissible(10, 0).bk_ok);
    CHECK_FALSE(admissible(2, 4).sharp_ok);
    CHECK_FALSE(admissible(5, 0).mod10_ok);
    CHECK(admissible(2, 4).status == CatalogStatus::Inadmissible);
    CHECK(admissible(6, 7).status == CatalogStatus::Open);
    CHECK(admissible(6, 7).b1_forced == 2);
    CHECK_FALSE(admissible(20, 0).b1_forced.has_value());
    CHECK_THROWS(admissible(0, 0));
    CHECK_THROWS(admissible(-1, 3));
}

TEST_CASE("b1 lower bound and b2+")
{
    CHECK(b1_lower_bound(4, 3) == 2);
    CHECK(b1_lower_bound(6, 2) == 0);
    CHECK(b1_lower_bound(6, 7) == 2);
    CHECK(b1_lower_bound(20, 0) == 0);
    CHECK(b1_lower_bound(3, 3) == 2);  // clamped
    CHECK(b2plus(20, 0, 0) == 1);
    CHECK(b2plus(30, 0, 0) == 3);
    CHECK(b2plus(6, 2, 2) == 1);
    CHECK_THROWS(b2plus(6, 1, 0));
}

TEST_CASE("types with b2+ = 1")
{
    std::vector<B2PlusOneType> want{{4, 3, 2},  {6, 2, 2},  {8, 6, 0},  {10, 5, 0}, {12, 4, 0},
                                    {14, 3, 0}, {16, 2, 0}, {18, 1, 0}, {20, 0, 0}};
    CHECK(b2plus_one_types() == want);
}

TEST_CASE("lattice window matches the transcribed figure")
{
    auto reports = enumerate_types(20, 15);
    std::set<std::pair<int, int>> known, open;
    for (const auto& r : reports) {
        CHECK(r.admissible());
        (r.status == CatalogStatus::Known ? known : open).insert({r.n, r.s});
    }
    CHECK(known == transcribed_known_types());
    CHECK(open == kOpen);
    CHECK(reports.size() == 24);

    auto extra = enumerate_types(20, 15, {{6, 7}});
    for (const auto& r : extra)
        if (r.n == 6 && r.s == 7) CHECK(r.status == CatalogStatus::Known);
    CHECK_THROWS(enumerate_types(-1, 3));
}

TEST_CASE("family (2k, 4k-5)")
{
    auto r = family_invariants(2);
    CHECK(r.n == 4);
    CHECK(r.s == 3);
    CHECK(r.euler == 3);
    CHECK(r.signature == -3);
    CHECK(r.b2 == 5);
    CHECK(r.b2_plus == 1);
    CHECK(r.b2_minus == 4);
    for (int k = 2; k <= 10; ++k) {
        auto f = family_invariants(k);
        CHECK(f.on_sharp_line);
        CHECK(f.constraints_ok);
        CHECK(f.b2_plus + f.b2_minus == f.b2);
        CHECK(f.b2_plus == 2 * k - 3);
        CHECK(indecomposability_check(f.n, f.s).certified);
    }
    CHECK_THROWS(family_invariants(1));
}

TEST_CASE("indecomposability")
{
    auto r = indecomposability_check(12, 4);
    CHECK_FALSE(r.certified);
    REQUIRE(r.splits.size() == 1);
    CHECK(r.splits[0] == std::pair{std::pair{6, 2}, std::pair{6, 2}});
    CHECK(indecomposability_check(6, 2).certified);
}

TEST_CASE("figure output")
{
    auto reports = enumerate_types(20, 15);
    std::string csv = figure_csv(reports);
    CHECK(csv.rfind("n,s,status,b1_forced,b2_plus\n", 0) == 0);
    CHECK(csv.find("\n4,3,known,2,1\n") != std::string::npos);
    CHECK(csv.find("\n20,0,known,,\n") != std::string::npos);
    CHECK(csv.find("\n6,7,open,2,") != std::string::npos);
    std::istringstream lines(csv);
    int count = 0;
    for (std::string line; std::getline(lines, line);) ++count;
    CHECK(count == 25);

    std::string svg = figure_svg(reports, 20, 15);
    CHECK(svg.find("data-line=\"2n-s=3\"") != std::string::npos);
    CHECK(svg.find("data-line=\"2n-s=5\"") != std::string::npos);

    auto path = std::filesystem::temp_directory_path() / "lf_test_figure.csv";
    emit_figure(reports, "csv", path.string());
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str() == csv);
    std::filesystem::remove(path);
    CHECK_THROWS(emit_figure(reports, "png", path.string()));
    CHECK_THROWS(emit_figure(reports, "csv", "/nonexistent-dir/x.csv"));
}
