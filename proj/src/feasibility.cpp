#include "lf/feasibility.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace lf {

std::string to_string(CatalogStatus s)
{
    switch (s) {
        case CatalogStatus::Known: return "known";
        case CatalogStatus::Open: return "open";
        case CatalogStatus::Inadmissible: return "inadmissible";
    }
    return "?";
}

const std::set<std::pair<int, int>>& transcribed_known_types()
{
    static const std::set<std::pair<int, int>> known{
        {4, 3},   {6, 2},   {8, 6},   {10, 5},  {10, 10}, {12, 4},  {12, 9},  {14, 3},  {14, 8},  {14, 13},
        {16, 2},  {16, 7},  {16, 12}, {18, 1},  {18, 6},  {18, 11}, {20, 0},  {20, 5},  {20, 10}, {20, 15}};
    return known;
}

int b1_lower_bound(int n, int s)
{
    int need = 20 - 2 * (2 * n - s);  // 5·b1 ≥ need
    if (need <= 0) return 0;
    return std::min(2, (need + 4) / 5);
}

NSReport admissible(int n, int s)
{
    if (n < 0 || s < 0 || (n == 0 && s == 0)) throw std::invalid_argument("admissible: need n, s >= 0, not both zero");
    NSReport r;
    r.n = n;
    r.s = s;
    r.mod10_ok = (n + 12 * s) % 10 == 0;
    r.bk_ok = n + 7 * s >= 20;
    r.sharp_ok = 2 * n - s >= 5;
    if (r.admissible()) {
        r.status = transcribed_known_types().count({n, s}) ? CatalogStatus::Known : CatalogStatus::Open;
        if (b1_lower_bound(n, s) == 2) {
            r.b1_forced = 2;
            r.b2_plus = b2plus(n, s, 2);
        }
    }
    return r;
}

std::int64_t b2plus(int n, int s, int b1)
{
    if ((n + 2 * s) % 5 != 0)
        throw std::invalid_argument("b2plus: n + 2s = " + std::to_string(n + 2 * s) + " is not divisible by 5");
    return (n + 2 * s) / 5 + b1 - 3;
}

std::vector<B2PlusOneType> b2plus_one_types()
{
    // b2+ = 1 ⟺ (n+2s)/5 + b1 = 4. Writing n/2 + s = 5k gives b1 = 4 − 2k, so k ∈ {1, 2}.
    std::vector<B2PlusOneType> out;
    for (int k = 1; k <= 2; ++k) {
        const int b1 = 4 - 2 * k;
        for (int s = 0; 2 * s <= 10 * k; ++s) {
            int n = 10 * k - 2 * s;
            if (n == 0 && s == 0) continue;
            NSReport r = admissible(n, s);
            if (!r.admissible() || b1 < b1_lower_bound(n, s)) continue;
            if (b2plus(n, s, b1) != 1) throw std::logic_error("b2plus_one_types: inconsistent line");
            out.push_back({n, s, b1});
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.n < y.n; });
    return out;
}

FamilyReport family_invariants(int k)
{
    if (k < 2) throw std::invalid_argument("family_invariants: k must be at least 2");
    FamilyReport r;
    r.k = k;
    r.n = 2 * k;
    r.s = 4 * k - 5;
    r.b1 = 2;
    r.euler = r.n + r.s - 4;
    r.signature = -(3 * r.n + r.s) / 5;
    r.b2 = r.euler - 2 + 2 * r.b1;
    r.b2_plus = b2plus(r.n, r.s, r.b1);
    r.b2_minus = r.b2_plus - r.signature;
    r.on_sharp_line = 2 * r.n - r.s == 5;
    r.constraints_ok = admissible(r.n, r.s).admissible();
    return r;
}

IndecomposabilityReport indecomposability_check(int n, int s)
{
    IndecomposabilityReport r;
    if (2 * n - s == 5) {
        r.certified = true;
        r.reason = "2n-s = 5, while any two nontrivial summands each have 2n_i-s_i >= 5, summing to >= 10";
        return r;
    }
    for (int n1 = 0; n1 <= n; ++n1)
        for (int s1 = 0; s1 <= s; ++s1) {
            int n2 = n - n1, s2 = s - s1;
            if (std::make_pair(n1, s1) > std::make_pair(n2, s2)) continue;
            if ((n1 == 0 && s1 == 0) || (n2 == 0 && s2 == 0)) continue;
            if (admissible(n1, s1).admissible() && admissible(n2, s2).admissible())
                r.splits.push_back({{n1, s1}, {n2, s2}});
        }
    r.reason = r.splits.empty() ? "no admissible split exists" : "admissible splits exist; no verdict";
    r.certified = r.splits.empty();
    return r;
}

std::vector<NSReport> enumerate_types(int n_max, int s_max, const std::set<std::pair<int, int>>& extra_known)
{
    if (n_max < 0 || s_max < 0 || n_max > 100 || s_max > 100) throw std::invalid_argument("enumerate_types: bounds must be in 0..100");
    std::vector<NSReport> out;
    for (int n = 0; n <= n_max; ++n)
        for (int s = 0; s <= s_max; ++s) {
            if (n == 0 && s == 0) continue;
            NSReport r = admissible(n, s);
            if (!r.admissible()) continue;
            if (extra_known.count({n, s})) r.status = CatalogStatus::Known;
            out.push_back(r);
        }
    return out;
}

std::string figure_csv(const std::vector<NSReport>& reports)
{
    std::ostringstream os;
    os << "n,s,status,b1_forced,b2_plus\n";
    for (const auto& r : reports) {
        os << r.n << ',' << r.s << ',' << to_string(r.status) << ',';
        if (r.b1_forced) os << *r.b1_forced;
        os << ',';
        if (r.b2_plus) os << *r.b2_plus;
        os << '\n';
    }
    return os.str();
}

std::string figure_svg(const std::vector<NSReport>& reports, int n_max, int s_max)
{
    const int scale = 24, margin = 40;
    const int w = n_max * scale + 2 * margin, h = s_max * scale + 2 * margin;
    auto px = [&](double n) { return margin + n * scale; };
    auto py = [&](double s) { return h - margin - s * scale; };
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\">\n";
    os << "<line x1=\"" << px(0) << "\" y1=\"" << py(0) << "\" x2=\"" << px(n_max) << "\" y2=\"" << py(0)
       << "\" stroke=\"black\"/>\n";
    os << "<line x1=\"" << px(0) << "\" y1=\"" << py(0) << "\" x2=\"" << px(0) << "\" y2=\"" << py(s_max)
       << "\" stroke=\"black\"/>\n";
    // reference lines s = 2n − c, clipped to the window
    for (auto [c, colour] : {std::pair{3, "red"}, std::pair{5, "blue"}}) {
        double n0 = c / 2.0, n1 = std::min<double>(n_max, (s_max + c) / 2.0);
        os << "<line class=\"ref\" data-line=\"2n-s=" << c << "\" x1=\"" << px(n0) << "\" y1=\"" << py(0)
           << "\" x2=\"" << px(n1) << "\" y2=\"" << py(2 * n1 - c) << "\" stroke=\"" << colour << "\"/>\n";
    }
    for (const auto& r : reports) {
        bool filled = r.status == CatalogStatus::Known;
        os << "<circle cx=\"" << px(r.n) << "\" cy=\"" << py(r.s) << "\" r=\"4\" fill=\"" << (filled ? "black" : "white")
           << "\" stroke=\"black\"><title>(" << r.n << "," << r.s << ") " << to_string(r.status)
           << "</title></circle>\n";
    }
    os << "</svg>\n";
    return os.str();
}

void emit_figure(const std::vector<NSReport>& reports, const std::string& format, const std::string& path, int n_max,
                 int s_max)
{
    std::string text;
    if (format == "csv")
        text = figure_csv(reports);
    else if (format == "svg")
        text = figure_svg(reports, n_max, s_max);
    else
        throw std::invalid_argument("emit_figure: format must be csv or svg");
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
    if (!out) throw std::runtime_error("write failed for " + path);
}

}  // namespace lf
