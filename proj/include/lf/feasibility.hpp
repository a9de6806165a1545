#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace lf {

enum class CatalogStatus { Known, Open, Inadmissible };
std::string to_string(CatalogStatus s);

struct NSReport {
    int n = 0, s = 0;
    bool mod10_ok = false;  // n + 12s ≡ 0 (mod 10)
    bool bk_ok = false;     // n + 7s ≥ 20
    bool sharp_ok = false;  // 2n − s ≥ 5
    std::optional<int> b1_forced;
    std::optional<std::int64_t> b2_plus;
    CatalogStatus status = CatalogStatus::Inadmissible;

    bool admissible() const { return mod10_ok && bk_ok && sharp_ok; }
    friend bool operator==(const NSReport&, const NSReport&) = default;
};

// Types whose monodromy is explicitly known, transcribed from the published
// lattice plot; merged with the catalog's own entries.
const std::set<std::pair<int, int>>& transcribed_known_types();

NSReport admissible(int n, int s);

// Smallest b1 compatible with b2⁻ ≥ s + 1, i.e. 4n − 2s + 5·b1 ≥ 20, clamped to [0, 2].
int b1_lower_bound(int n, int s);

// n/5 + 2s/5 + b1 − 3; throws unless n + 2s ≡ 0 (mod 5).
std::int64_t b2plus(int n, int s, int b1);

struct B2PlusOneType {
    int n = 0, s = 0, b1 = 0;
    friend bool operator==(const B2PlusOneType&, const B2PlusOneType&) = default;
};

std::vector<B2PlusOneType> b2plus_one_types();

struct FamilyReport {
    int k = 0, n = 0, s = 0;
    int b1 = 2;
    std::int64_t euler = 0, signature = 0, b2 = 0, b2_plus = 0, b2_minus = 0;
    bool on_sharp_line = false;
    bool constraints_ok = false;
};

FamilyReport family_invariants(int k);

struct IndecomposabilityReport {
    bool certified = false;
    std::string reason;
    std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> splits;
};

IndecomposabilityReport indecomposability_check(int n, int s);

std::vector<NSReport> enumerate_types(int n_max, int s_max,
                                      const std::set<std::pair<int, int>>& extra_known = {});

std::string figure_csv(const std::vector<NSReport>& reports);
std::string figure_svg(const std::vector<NSReport>& reports, int n_max, int s_max);

// Writes CSV or SVG to path; throws on an unwritable path.
void emit_figure(const std::vector<NSReport>& reports, const std::string& format, const std::string& path,
                 int n_max = 20, int s_max = 15);

}  // namespace lf
