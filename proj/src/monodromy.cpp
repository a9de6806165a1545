#include "lf/monodromy.hpp"

#include <algorithm>
#include <stdexcept>

namespace lf {

TwistWord Curve::twist_word(int sign) const
{
    TwistWord w = conj;
    w.push_back({base, sign});
    TwistWord ci = inverse(conj);
    w.insert(w.end(), ci.begin(), ci.end());
    return w;
}

TwistWord Factorization::composition_word() const
{
    TwistWord w;
    for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
        TwistWord t = it->twist_word();
        w.insert(w.end(), t.begin(), t.end());
    }
    return free_reduce(std::move(w));
}

HomologyClass curve_class(const SurfaceModel& s, const Curve& c)
{
    return curve_class(s, c.base, c.conj);
}

CurveKind classify_curve(const SurfaceModel& s, const Curve& c)
{
    // Ψ(conj) is invertible, so only the base decides; computed anyway as a guard.
    HomologyClass h = curve_class(s, c);
    bool zero = std::all_of(h.begin(), h.end(), [](auto x) { return x == 0; });
    return zero ? CurveKind::Separating : CurveKind::Nonseparating;
}

NSType ns_type(const Factorization& f)
{
    const SurfaceModel& s = surface(f.fiber_genus);
    NSType t;
    t.caveat = f.fiber_genus > 2;
    for (const auto& c : f.cycles) {
        if (classify_curve(s, c) == CurveKind::Separating)
            ++t.s;
        else
            ++t.n;
    }
    return t;
}

SpMatrix evaluate(const Factorization& f)
{
    const SurfaceModel& s = surface(f.fiber_genus);
    IntMatrix m = IntMatrix::identity(2 * f.fiber_genus);
    for (auto it = f.cycles.rbegin(); it != f.cycles.rend(); ++it)
        m = m * transvection(curve_class(s, *it)).m;
    return {m};
}

Factorization hurwitz_move(const Factorization& f, std::size_t i, Direction dir)
{
    if (i + 1 >= f.cycles.size()) throw std::out_of_range("hurwitz_move: index out of range");
    Factorization g = f;
    const Curve& x = f.cycles[i];
    const Curve& y = f.cycles[i + 1];
    if (dir == Direction::Right) {
        TwistWord conj = y.twist_word(1);
        conj.insert(conj.end(), x.conj.begin(), x.conj.end());
        g.cycles[i] = y;
        g.cycles[i + 1] = Curve{x.base, free_reduce(conj)};
    } else {
        TwistWord conj = x.twist_word(-1);
        conj.insert(conj.end(), y.conj.begin(), y.conj.end());
        g.cycles[i] = Curve{y.base, free_reduce(conj)};
        g.cycles[i + 1] = x;
    }
    return g;
}

Factorization global_conjugate(const Factorization& f, const TwistWord& w)
{
    Factorization g = f;
    for (auto& c : g.cycles) {
        TwistWord conj = w;
        conj.insert(conj.end(), c.conj.begin(), c.conj.end());
        c.conj = free_reduce(conj);
    }
    return g;
}

Factorization fiber_sum(const Factorization& f1, const Factorization& f2)
{
    if (f1.fiber_genus != f2.fiber_genus) throw std::invalid_argument("fiber_sum: fiber genus mismatch");
    if (f1.base_genus != 0 || f2.base_genus != 0) throw std::invalid_argument("fiber_sum: base genus must be 0");
    Factorization g = f1;
    g.cycles.insert(g.cycles.end(), f2.cycles.begin(), f2.cycles.end());
    return g;
}

Factorization lantern_substitute(const Factorization& f, std::size_t position, const LanternInstance& inst)
{
    if (f.fiber_genus != inst.genus) throw PatternError("lantern: genus mismatch with instance " + inst.name);
    if (position + 4 > f.cycles.size()) throw PatternError("lantern: positions out of range");

    std::vector<Curve> want;
    for (const auto& c : inst.boundary) want.push_back(c.reduced());
    for (std::size_t k = 0; k < 4; ++k) {
        Curve c = f.cycles[position + k].reduced();
        auto it = std::find(want.begin(), want.end(), c);
        if (it == want.end())
            throw PatternError("lantern: cycle " + std::to_string(position + k) + " is not a boundary curve of " +
                               inst.name);
        want.erase(it);
    }

    Factorization g = f;
    auto first = g.cycles.begin() + static_cast<std::ptrdiff_t>(position);
    g.cycles.erase(first, first + 4);
    auto rep = inst.replacement();
    g.cycles.insert(g.cycles.begin() + static_cast<std::ptrdiff_t>(position), rep.begin(), rep.end());

    if (!(evaluate(g) == evaluate(f))) throw PatternError("lantern: homological image changed; instance data is wrong");
    return g;
}

Factorization chain_substitute(const Factorization& f, std::size_t position, ChainDirection dir)
{
    if (f.fiber_genus < 2) throw PatternError("chain: needs genus at least 2");
    Factorization g = f;
    if (dir == ChainDirection::Expand) {
        if (position >= f.cycles.size()) throw PatternError("chain: position out of range");
        Curve c = f.cycles[position];
        if (c.base != kS1) throw PatternError("chain: cycle " + std::to_string(position) + " is not a conjugate of s1");
        // t_{s1} = (t1 t2)^6, applied t2 first
        std::vector<Curve> rep;
        for (int r = 0; r < 6; ++r) {
            rep.push_back({2, c.conj});
            rep.push_back({1, c.conj});
        }
        g.cycles.erase(g.cycles.begin() + static_cast<std::ptrdiff_t>(position));
        g.cycles.insert(g.cycles.begin() + static_cast<std::ptrdiff_t>(position), rep.begin(), rep.end());
    } else {
        if (position + 12 > f.cycles.size()) throw PatternError("chain: fewer than 12 cycles at position");
        TwistWord conj = free_reduce(f.cycles[position].conj);
        int first = f.cycles[position].base;
        if (first != 1 && first != 2) throw PatternError("chain: pattern must alternate c1 and c2");
        for (std::size_t k = 0; k < 12; ++k) {
            const Curve& c = f.cycles[position + k];
            int expect = (k % 2 == 0) ? first : 3 - first;
            if (c.base != expect || free_reduce(c.conj) != conj)
                throw PatternError("chain: cycle " + std::to_string(position + k) + " breaks the (t1 t2)^6 pattern");
        }
        auto it = g.cycles.begin() + static_cast<std::ptrdiff_t>(position);
        g.cycles.erase(it, it + 12);
        g.cycles.insert(g.cycles.begin() + static_cast<std::ptrdiff_t>(position), Curve{kS1, conj});
    }
    if (!(evaluate(g) == evaluate(f))) throw PatternError("chain: homological image changed");
    return g;
}

std::string to_string(IdentityLevel level)
{
    switch (level) {
        case IdentityLevel::Homology: return "homology";
        case IdentityLevel::ModP: return "modp";
        case IdentityLevel::Exact: return "exact";
        case IdentityLevel::Closed: return "closed";
    }
    return "?";
}

IdentityReport identity_check(const Factorization& f, IdentityLevel level)
{
    IdentityReport r;
    r.level = level;
    const SpMatrix m = evaluate(f);
    switch (level) {
        case IdentityLevel::Homology:
            r.passed = m.m.is_identity();
            r.detail = r.passed ? "Psi = I" : "Psi = " + to_string(m.m);
            break;
        case IdentityLevel::ModP: {
            r.passed = true;
            for (int p : {2, 3, 5}) {
                bool ok = true;
                for (std::size_t i = 0; i < m.m.rows(); ++i)
                    for (std::size_t j = 0; j < m.m.cols(); ++j)
                        if (((m.m(i, j) - (i == j)) % p) != 0) ok = false;
                r.detail += (r.detail.empty() ? "" : " ") + std::string("p=") + std::to_string(p) + (ok ? ":I" : ":not I");
                r.passed = r.passed && ok;
            }
            break;
        }
        case IdentityLevel::Exact: {
            if (f.fiber_genus != 2) throw std::invalid_argument("exact identity check needs genus 2");
            r.conjugator = is_inner(compose(f.composition_word()));
            r.passed = r.conjugator.has_value();
            r.detail = r.passed ? "inner, conjugator " + to_string(*r.conjugator) : "not inner on the bordered surface";
            break;
        }
        case IdentityLevel::Closed: {
            if (f.fiber_genus != 2) throw std::invalid_argument("closed identity check needs genus 2");
            bool sphere = is_inner(sphere_quotient(f.composition_word())).has_value();
            bool hom = m.m.is_identity();
            r.passed = sphere && hom;
            r.detail = std::string("sphere quotient ") + (sphere ? "trivial" : "nontrivial") + ", Psi " +
                       (hom ? "= I" : "!= I");
            break;
        }
    }
    return r;
}

std::optional<IdentityLevel> strongest_identity(const Factorization& f)
{
    // exact implies closed implies homology implies mod p
    if (identity_check(f, IdentityLevel::Homology).passed) {
        if (f.fiber_genus == 2) {
            if (identity_check(f, IdentityLevel::Exact).passed) return IdentityLevel::Exact;
            if (identity_check(f, IdentityLevel::Closed).passed) return IdentityLevel::Closed;
        }
        return IdentityLevel::Homology;
    }
    if (identity_check(f, IdentityLevel::ModP).passed) return IdentityLevel::ModP;
    return std::nullopt;
}

}  // namespace lf
