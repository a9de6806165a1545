#include <algorithm>
#include <random>

#include "doctest.h"
#include "lf/homrep.hpp"
#include "lf/pi1.hpp"

using namespace lf;

namespace {

TwistWord power(const TwistWord& w, int k)
{
    TwistWord r;
    for (int i = 0; i < k; ++i) r.insert(r.end(), w.begin(), w.end());
    return r;
}

HomologyClass abel_image(const Automorphism& a, int gen) { return abelianize(a.images[gen], 4); }

const int kCurves[] = {1, 2, 3, 4, 5, kS1};

FreeWord cyclic_reduce(FreeWord w)
{
    w = reduce(w);
    while (w.size() > 1 && w.front() == -w.back()) w = FreeWord(w.begin() + 1, w.end() - 1);
    return w;
}

// Free homotopy classes of loops are conjugacy classes: equal cyclic reductions up to rotation.
bool conjugate(const FreeWord& x, const FreeWord& y)
{
    FreeWord a = cyclic_reduce(x), b = cyclic_reduce(y);
    if (a.size() != b.size()) return false;
    if (a.empty()) return true;
    FreeWord bb = b;
    bb.insert(bb.end(), b.begin(), b.end());
    return std::search(bb.begin(), bb.end(), a.begin(), a.end()) != bb.end();
}

}  // namespace

TEST_CASE("free reduction")
{
    CHECK(reduce({1, 2, -2, -1, 3}) == FreeWord{3});
    CHECK(inverse(FreeWord{1, -2}) == FreeWord{2, -1});
    CHECK(to_string(FreeWord{1, -4}) == "a1 b2^-1");
}

TEST_CASE("every twist fixes the boundary word and inverts")
{
    const FreeWord delta = boundary_word();
    for (int c : kCurves)
        for (int s : {1, -1}) {
            auto t = twist_automorphism(c, s);
            CHECK(lf::apply(t, delta) == delta);
            CHECK(compose(t, twist_automorphism(c, -s)) == Automorphism::identity(4));
        }
}

TEST_CASE("twists fix their own curve up to free homotopy")
{
    CHECK(lf::apply(twist_automorphism(1, 1), {1}) == FreeWord{1});
    for (int c : kCurves) {
        FreeWord w = curve_word(c, {});
        CHECK(conjugate(lf::apply(twist_automorphism(c, 1), w), w));
    }
    CHECK(conjugate({1, 2, -1}, {2}));
    CHECK_FALSE(conjugate({1, 2}, {2, 2}));
}

TEST_CASE("abelianization matches the transvection of each curve")
{
    const auto& s = surface(2);
    for (int c : kCurves)
        for (int sg : {1, -1}) {
            auto a = twist_automorphism(c, sg);
            auto m = transvection(s.base_class(c), sg).m;
            for (int g = 0; g < 4; ++g) {
                HomologyClass e(4, 0);
                e[g] = 1;
                CHECK(abel_image(a, g) == m.apply(e));
            }
        }
    // t_c1 sends b1 to b1 + a1, since î(b1, a1) = +1
    CHECK(twist_automorphism(1, 1).images[1] == FreeWord{2, 1});
    CHECK(abel_image(twist_automorphism(1, 1), 1) == HomologyClass{1, 1, 0, 0});
}

TEST_CASE("s1 conjugates the first handle by [b1,a1]")
{
    auto t = twist_automorphism(kS1, 1);
    FreeWord w{2, 1, -2, -1};
    CHECK(t.images[0] == conjugation(w, 4).images[0]);
    CHECK(t.images[1] == conjugation(w, 4).images[1]);
    CHECK(t.images[2] == FreeWord{3});
    CHECK(t.images[3] == FreeWord{4});
}

TEST_CASE("braid and commutation relations hold exactly")
{
    for (int i = 1; i <= 5; ++i)
        for (int j = i + 1; j <= 5; ++j) {
            Twist a{i, 1}, b{j, 1};
            if (j == i + 1)
                CHECK(compose({a, b, a}) == compose({b, a, b}));
            else
                CHECK(compose({a, b}) == compose({b, a}));
        }
    // s1 is disjoint from c1, c2, c4, c5
    for (int c : {1, 2, 4, 5}) CHECK(compose({{kS1, 1}, {c, 1}}) == compose({{c, 1}, {kS1, 1}}));
}

TEST_CASE("chain relations")
{
    CHECK(compose(power({{1, 1}, {2, 1}}, 6)) == twist_automorphism(kS1, 1));

    const FreeWord delta = boundary_word();
    auto alpha = compose(power({{1, 1}, {2, 1}, {3, 1}, {4, 1}, {5, 1}}, 6));
    auto w = is_inner(alpha);
    REQUIRE(w.has_value());
    // x ↦ δ⁻¹·x·δ: the boundary twist
    CHECK(*w == inverse(delta));

    auto beta = compose(power({{1, 1}, {2, 1}, {3, 1}, {4, 1}}, 10));
    REQUIRE(is_inner(beta).has_value());
    CHECK(*is_inner(beta) == inverse(delta));

    TwistWord hyp{{5, 1}, {4, 1}, {3, 1}, {2, 1}, {1, 1}, {1, 1}, {2, 1}, {3, 1}, {4, 1}, {5, 1}};
    CHECK(is_inner(compose(power(hyp, 2))).has_value());
    CHECK_FALSE(is_inner(compose(hyp)).has_value());
}

TEST_CASE("is_inner")
{
    CHECK(*is_inner(Automorphism::identity(4)) == FreeWord{});
    const FreeWord delta = boundary_word();
    CHECK(*is_inner(conjugation(delta, 4)) == delta);
    FreeWord w{1, 1, 1, 2, -3};
    CHECK(*is_inner(conjugation(w, 4)) == w);
    CHECK_FALSE(is_inner(twist_automorphism(1, 1)).has_value());
    CHECK_FALSE(is_inner(twist_automorphism(kS1, 1)).has_value());
}

TEST_CASE("compose and apply")
{
    CHECK(compose(TwistWord{}) == Automorphism::identity(4));
    FreeWord w{1, -2, 3, 4, -1};
    CHECK(lf::apply(Automorphism::identity(4), w) == w);
    // (f∘g)(x) = f(g(x))
    auto f = twist_automorphism(1, 1), g = twist_automorphism(2, 1);
    CHECK(lf::apply(compose(f, g), w) == lf::apply(f, lf::apply(g, w)));
    CHECK(compose({{1, 1}, {2, 1}}) == compose(f, g));
}

TEST_CASE("frozen images from an independent implementation")
{
    // t1 t2 T3 t5 T4
    auto a = compose({{1, 1}, {2, 1}, {3, -1}, {5, 1}, {4, -1}});
    CHECK(a.images[0] == FreeWord{-2});
    CHECK(a.images[1] == FreeWord{2, 1, 2, -1, -2, 4, -3, -4, 2, 1});
    CHECK(a.images[3] == FreeWord{2, 1, 2, -1, -2, 4, 4, -3, -4, 2, 1, 2, -1, -2, 4, 3, -4, 2, 1, -2, -1, -2});
    // the lantern curve (t1 t2)^3 (c3)
    CHECK(curve_word(3, power({{1, 1}, {2, 1}}, 3)) == FreeWord{2, 1, -2, -1, 2, -1, -2, 4, 3, -4});
    CHECK(curve_word(1, {{3, 1}, {2, 1}}) == FreeWord{-2, 4, -3, -4});
}

TEST_CASE("curve twists")
{
    // t_{φ(c)} fixes the word of φ(c)
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> cur(1, 5), sg(0, 1), len(0, 4);
    for (int trial = 0; trial < 40; ++trial) {
        TwistWord conj;
        for (int i = len(rng); i > 0; --i) conj.push_back({cur(rng), sg(rng) ? 1 : -1});
        int base = cur(rng);
        auto t = curve_twist(base, conj);
        FreeWord w = curve_word(base, conj);
        CHECK(conjugate(lf::apply(t, w), w));
        CHECK(lf::apply(t, boundary_word()) == boundary_word());
        CHECK(compose(t, curve_twist(base, conj, -1)) == Automorphism::identity(4));
    }
}

TEST_CASE("sphere quotient")
{
    TwistWord hyp{{5, 1}, {4, 1}, {3, 1}, {2, 1}, {1, 1}, {1, 1}, {2, 1}, {3, 1}, {4, 1}, {5, 1}};
    // the hyperelliptic involution maps to the identity of the sphere
    CHECK(is_inner(sphere_quotient(hyp)).has_value());
    CHECK_FALSE(is_inner(sphere_quotient({{1, 1}})).has_value());
    CHECK(is_inner(sphere_quotient(power({{1, 1}, {2, 1}, {3, 1}, {4, 1}, {5, 1}}, 6))).has_value());
    // braid relation survives
    CHECK(sphere_quotient({{2, 1}, {3, 1}, {2, 1}}) == sphere_quotient({{3, 1}, {2, 1}, {3, 1}}));
}
