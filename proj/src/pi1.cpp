#include "lf/pi1.hpp"

#include <array>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace lf {

TwistWord inverse(const TwistWord& w)
{
    TwistWord r;
    for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back(it->inverse());
    return r;
}

TwistWord free_reduce(TwistWord w)
{
    TwistWord out;
    for (const auto& t : w) {
        if (!out.empty() && out.back().curve == t.curve && out.back().sign == -t.sign)
            out.pop_back();
        else
            out.push_back(t);
    }
    return out;
}

std::string to_string(const TwistWord& w)
{
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? " " : "") + twist_token(w[i].curve, w[i].sign);
    return s;
}

FreeWord reduce(FreeWord w)
{
    FreeWord out;
    out.reserve(w.size());
    for (Letter x : w) {
        if (!out.empty() && out.back() == -x)
            out.pop_back();
        else
            out.push_back(x);
    }
    return out;
}

FreeWord inverse(const FreeWord& w)
{
    FreeWord r(w.rbegin(), w.rend());
    for (auto& x : r) x = -x;
    return r;
}

FreeWord concat(std::initializer_list<const FreeWord*> parts)
{
    FreeWord r;
    for (const auto* p : parts) r.insert(r.end(), p->begin(), p->end());
    return reduce(std::move(r));
}

std::string to_string(const FreeWord& w, int genus_labels)
{
    if (w.empty()) return "1";
    std::ostringstream os;
    for (std::size_t i = 0; i < w.size(); ++i) {
        int k = std::abs(w[i]);
        if (i) os << ' ';
        if (genus_labels > 0)
            os << ((k % 2) ? 'a' : 'b') << (k + 1) / 2;
        else
            os << 'x' << k;
        if (w[i] < 0) os << "^-1";
    }
    return os.str();
}

Automorphism Automorphism::identity(int rank)
{
    Automorphism a;
    a.rank = rank;
    for (int k = 1; k <= rank; ++k) a.images.push_back({k});
    return a;
}

std::size_t Automorphism::total_length() const
{
    std::size_t n = 0;
    for (const auto& w : images) n += w.size();
    return n;
}

FreeWord apply(const Automorphism& aut, const FreeWord& w)
{
    FreeWord r;
    for (Letter x : w) {
        int k = std::abs(x);
        if (k < 1 || k > aut.rank) throw std::invalid_argument("apply: letter outside the automorphism's rank");
        const FreeWord& img = aut.images[k - 1];
        if (x > 0) {
            for (Letter y : img) {
                if (!r.empty() && r.back() == -y) r.pop_back(); else r.push_back(y);
            }
        } else {
            for (auto it = img.rbegin(); it != img.rend(); ++it) {
                if (!r.empty() && r.back() == *it) r.pop_back(); else r.push_back(-*it);
            }
        }
    }
    return r;
}

Automorphism compose(const Automorphism& f, const Automorphism& g)
{
    if (f.rank != g.rank) throw std::invalid_argument("compose: rank mismatch");
    Automorphism r;
    r.rank = f.rank;
    for (const auto& w : g.images) r.images.push_back(apply(f, w));
    return r;
}

Automorphism conjugation(const FreeWord& w, int rank)
{
    Automorphism a;
    a.rank = rank;
    FreeWord wi = inverse(w);
    for (int k = 1; k <= rank; ++k) {
        FreeWord x{k};
        a.images.push_back(concat({&w, &x, &wi}));
    }
    return a;
}

namespace {

// Generator images on (a1,b1,a2,b2) = (1,2,3,4). The tables satisfy the
// braid, commutation, chain and boundary-fixing relations checked in the tests.
using Table = std::array<FreeWord, 4>;

const Table& positive_table(int curve)
{
    static const Table c1{FreeWord{1}, {2, 1}, {3}, {4}};
    static const Table c2{FreeWord{1, -2}, {2}, {3}, {4}};
    static const Table c3{FreeWord{1},
                          {4, 3, -4, 2, 1},
                          {4, 3, -4, 2, 1, -2, 4, -3, -4, 2, -1, -2, 3, 2, 1, -2, 4, 3, -4, 2, -1, -2, 4, -3, -4},
                          {4, 3, -4, 2, 1, -2, 4, 2, 1, -2, 4, 3, -4, 2, -1, -2, 4, -3, -4}};
    static const Table c4{FreeWord{1}, {2}, {3, -4}, {4}};
    static const Table c5{FreeWord{1}, {2}, {3}, {4, 3}};
    // s1 bounds the a1,b1 handle: conjugation of that handle by [b1,a1]
    static const Table s1{FreeWord{2, 1, -2, 1, 2, -1, -2}, {2, 1, -2, -1, 2, 1, 2, -1, -2}, {3}, {4}};
    switch (curve) {
        case 1: return c1;
        case 2: return c2;
        case 3: return c3;
        case 4: return c4;
        case 5: return c5;
        case kS1: return s1;
    }
    throw std::invalid_argument("twist_automorphism: unknown curve " + curve_label(curve));
}

const Table& negative_table(int curve)
{
    static const Table c1{FreeWord{1}, {2, -1}, {3}, {4}};
    static const Table c2{FreeWord{1, 2}, {2}, {3}, {4}};
    static const Table c3{FreeWord{1},
                          {2, -1, -2, 4, -3, -4, 2},
                          {2, -1, -2, 4, -3, -4, 2, 1, -2, 4, 3, -4, 3, 4, -3, -4, 2, -1, -2, 4, 3, -4, 2, 1, -2},
                          {2, -1, -2, 4, -3, 4, -3, -4, 2, -1, -2, 4, 3, -4, 2, 1, -2}};
    static const Table c4{FreeWord{1}, {2}, {3, 4}, {4}};
    static const Table c5{FreeWord{1}, {2}, {3}, {4, -3}};
    static const Table s1{FreeWord{1, 2, -1, -2, 1, 2, 1, -2, -1}, {1, 2, -1, 2, 1, -2, -1}, {3}, {4}};
    switch (curve) {
        case 1: return c1;
        case 2: return c2;
        case 3: return c3;
        case 4: return c4;
        case 5: return c5;
        case kS1: return s1;
    }
    throw std::invalid_argument("twist_automorphism: unknown curve " + curve_label(curve));
}

template <class Gen>
Automorphism compose_word(const TwistWord& word, int rank, Gen gen)
{
    Automorphism r = Automorphism::identity(rank);
    for (const auto& t : word) r = compose(r, gen(t.curve, t.sign));
    return r;
}

template <class Gen>
Automorphism conjugated_twist(int base, const TwistWord& conj, int sign, int rank, Gen gen)
{
    Automorphism phi = compose_word(conj, rank, gen);
    Automorphism phi_inv = compose_word(inverse(conj), rank, gen);
    return compose(phi, compose(gen(base, sign), phi_inv));
}

}  // namespace

Automorphism twist_automorphism(int curve, int sign)
{
    if (sign != 1 && sign != -1) throw std::invalid_argument("twist sign must be +1 or -1");
    const Table& t = sign > 0 ? positive_table(curve) : negative_table(curve);
    Automorphism a;
    a.rank = 4;
    a.images.assign(t.begin(), t.end());
    a.label = twist_token(curve, sign);
    return a;
}

Automorphism compose(const TwistWord& word)
{
    Automorphism r = compose_word(word, 4, twist_automorphism);
    r.label = to_string(word);
    return r;
}

Automorphism curve_twist(int base, const TwistWord& conj, int sign)
{
    return conjugated_twist(base, conj, sign, 4, twist_automorphism);
}

FreeWord curve_word(int base, const TwistWord& conj)
{
    static const SurfaceModel s2 = standard_surface(2);
    return apply(compose(conj), *s2.base_word(base));
}

FreeWord boundary_word() { return surface_relator(2); }

std::optional<FreeWord> is_inner(const Automorphism& aut)
{
    if (aut.rank < 2) throw std::invalid_argument("is_inner: rank must be at least 2");
    // aut(x1) = u·x1^{±1}·u⁻¹ after peeling; anything else is not a conjugate of x1.
    const FreeWord& y = aut.images[0];
    std::size_t h = 0;
    while (2 * h + 1 < y.size() && y[h] == -y[y.size() - 1 - h]) ++h;
    if (y.size() != 2 * h + 1 || y[h] != 1) return std::nullopt;
    FreeWord u(y.begin(), y.begin() + h);

    // Remaining freedom is the centralizer ⟨x1⟩: w = u·x1^k. Read k off aut(x2).
    FreeWord ui = inverse(u);
    FreeWord z = concat({&ui, &aut.images[1], &u});
    std::size_t run = 0;
    while (run < z.size() && z[run] == z[0] && std::abs(z[0]) == 1) ++run;
    long k = run ? (z[0] > 0 ? static_cast<long>(run) : -static_cast<long>(run)) : 0;
    const long bound = static_cast<long>(aut.total_length());
    if (std::labs(k) > bound) return std::nullopt;

    FreeWord w = u;
    for (long i = 0; i < std::labs(k); ++i) w.push_back(k > 0 ? 1 : -1);
    w = reduce(w);
    if (conjugation(w, aut.rank).images != aut.images) return std::nullopt;
    return w;
}

namespace {

// Half twists on the free group of the six-times punctured sphere, with
// x6 = (x1 x2 x3 x4 x5)⁻¹ eliminated.
Automorphism half_twist(int i, int sign)
{
    if (i < 1 || i > 5) throw std::invalid_argument("half twist index out of range");
    const FreeWord x6{-5, -4, -3, -2, -1};
    auto gen = [&](int k) { return k == 6 ? x6 : FreeWord{k}; };
    auto gen_inv = [&](int k) { return inverse(gen(k)); };
    Automorphism a = Automorphism::identity(5);
    std::array<FreeWord, 7> img;
    for (int k = 1; k <= 6; ++k) img[k] = gen(k);
    FreeWord xi = gen(i), xj = gen(i + 1), xi_inv = gen_inv(i), xj_inv = gen_inv(i + 1);
    if (sign > 0) {
        img[i] = concat({&xi, &xj, &xi_inv});
        img[i + 1] = xi;
    } else {
        img[i] = xj;
        img[i + 1] = concat({&xj_inv, &xi, &xj});
    }
    for (int k = 1; k <= 5; ++k) a.images[k - 1] = img[k];
    return a;
}

Automorphism sphere_twist(int curve, int sign)
{
    if (curve == kS1) {
        // t_{s1} = (t1 t2)^6
        TwistWord w;
        for (int r = 0; r < 6; ++r) w.insert(w.end(), {{1, 1}, {2, 1}});
        if (sign < 0) w = inverse(w);
        return compose_word(w, 5, half_twist);
    }
    return half_twist(curve, sign);
}

}  // namespace

Automorphism sphere_quotient(const TwistWord& word)
{
    return compose_word(word, 5, sphere_twist);
}

Automorphism sphere_curve_twist(int base, const TwistWord& conj, int sign)
{
    return conjugated_twist(base, conj, sign, 5, sphere_twist);
}

}  // namespace lf
