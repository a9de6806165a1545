#include "lf/surface.hpp"

#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace lf {

std::string curve_label(int curve)
{
    return curve == kS1 ? "s1" : "c" + std::to_string(curve);
}

std::string twist_token(int curve, int sign)
{
    if (curve == kS1) return sign > 0 ? "s1" : "S1";
    return (sign > 0 ? "t" : "T") + std::to_string(curve);
}

bool SurfaceModel::valid_curve(int curve) const
{
    if (curve == kS1) return genus >= 2;
    return curve >= 1 && curve <= chain_length();
}

HomologyClass SurfaceModel::base_class(int curve) const
{
    if (!valid_curve(curve)) throw std::invalid_argument("unknown curve " + curve_label(curve));
    if (curve == kS1) return separating.front().cls;
    return chain[curve - 1].cls;
}

std::optional<FreeWord> SurfaceModel::base_word(int curve) const
{
    if (!valid_curve(curve)) throw std::invalid_argument("unknown curve " + curve_label(curve));
    if (curve == kS1) return separating.front().word;
    return chain[curve - 1].word;
}

IntMatrix intersection_form(int g)
{
    IntMatrix j(2 * g, 2 * g);
    for (int i = 0; i < g; ++i) {
        j(2 * i, 2 * i + 1) = -1;
        j(2 * i + 1, 2 * i) = 1;
    }
    return j;
}

std::int64_t algebraic_intersection(const HomologyClass& x, const HomologyClass& y)
{
    if (x.size() != y.size() || x.size() % 2) throw std::invalid_argument("algebraic_intersection: dimension mismatch");
    std::int64_t r = 0;
    for (std::size_t i = 0; i < x.size(); i += 2) {
        r = checked_sub(r, checked_mul(x[i], y[i + 1]));
        r = checked_add(r, checked_mul(x[i + 1], y[i]));
    }
    return r;
}

FreeWord surface_relator(int g)
{
    FreeWord w;
    for (int i = 1; i <= g; ++i) {
        int a = 2 * i - 1, b = 2 * i;
        w.insert(w.end(), {a, b, -a, -b});
    }
    return w;
}

HomologyClass abelianize(const FreeWord& w, int rank)
{
    HomologyClass h(rank, 0);
    for (Letter x : w) {
        int k = std::abs(x);
        if (k < 1 || k > rank) throw std::invalid_argument("letter out of range in abelianize");
        h[k - 1] += x > 0 ? 1 : -1;
    }
    return h;
}

SurfaceModel standard_surface(int g)
{
    if (g < 1) throw std::invalid_argument("standard_surface: genus must be at least 1");
    SurfaceModel s;
    s.genus = g;
    for (int i = 1; i <= g; ++i) {
        s.basis_labels.push_back("a" + std::to_string(i));
        s.basis_labels.push_back("b" + std::to_string(i));
    }
    s.J = intersection_form(g);

    const int n = 2 * g, len = 2 * g + 1;
    auto unit = [n](int k) {
        HomologyClass h(n, 0);
        h[k] = 1;
        return h;
    };
    // c1 = a1, c_{2i} = b_i, c_{2i+1} = a_i + a_{i+1}, c_{2g+1} = a_g
    for (int k = 1; k <= len; ++k) {
        ChainCurve c;
        c.index = k;
        if (k == 1) {
            c.cls = unit(0);
        } else if (k % 2 == 0) {
            c.cls = unit(k - 1);
        } else if (k == len) {
            c.cls = unit(n - 2);
        } else {
            int i = (k - 1) / 2;
            c.cls = unit(2 * (i - 1));
            c.cls[2 * i] = 1;
        }
        s.chain.push_back(c);
    }
    if (g <= 2) {
        s.chain[0].word = FreeWord{1};
        s.chain[1].word = FreeWord{2};
        if (g == 1) {
            s.chain[2].word = FreeWord{1};
        } else {
            // b1 a1 B1 · b2 a2 B2, a simple representative of a1 + a2
            s.chain[2].word = FreeWord{2, 1, -2, 4, 3, -4};
            s.chain[3].word = FreeWord{4};
            s.chain[4].word = FreeWord{3};
        }
    }

    s.chain_geometric = IntMatrix(len, len);
    for (int i = 0; i + 1 < len; ++i) s.chain_geometric(i, i + 1) = s.chain_geometric(i + 1, i) = 1;

    if (g >= 2) {
        SeparatingCurve sep;
        sep.label = "s1";
        sep.cls = HomologyClass(n, 0);
        sep.word = surface_relator(1);
        if (g > 2) sep.word.reset();
        s.separating.push_back(sep);
    }
    return s;
}

const SurfaceModel& surface(int g)
{
    static std::mutex mu;
    static std::map<int, std::unique_ptr<SurfaceModel>> cache;
    std::lock_guard lock(mu);
    auto& slot = cache[g];
    if (!slot) slot = std::make_unique<SurfaceModel>(standard_surface(g));
    return *slot;
}

}  // namespace lf
