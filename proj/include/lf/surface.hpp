#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lf/intlinalg.hpp"

namespace lf {

using HomologyClass = std::vector<std::int64_t>;

// Free-group letter: +k is generator k (1-based), -k its inverse.
using Letter = int;
using FreeWord = std::vector<Letter>;

// Curve labels shared by every module: 1..2g+1 are the chain curves, kS1 the
// standard separating curve.
inline constexpr int kS1 = 0;

std::string curve_label(int curve);   // "c3", "s1"
std::string twist_token(int curve, int sign);  // "t3", "T3", "s1", "S1"

struct ChainCurve {
    int index = 0;  // 1-based
    HomologyClass cls;
    std::optional<FreeWord> word;  // populated for g <= 2
};

struct SeparatingCurve {
    std::string label;
    HomologyClass cls;
    std::optional<FreeWord> word;
};

struct SurfaceModel {
    int genus = 0;
    std::vector<std::string> basis_labels;  // a1,b1,...,ag,bg
    IntMatrix J;
    std::vector<ChainCurve> chain;
    IntMatrix chain_geometric;  // |c_i ∩ c_j| for the standard chain
    std::vector<SeparatingCurve> separating;

    int chain_length() const { return 2 * genus + 1; }
    bool valid_curve(int curve) const;
    HomologyClass base_class(int curve) const;
    std::optional<FreeWord> base_word(int curve) const;
};

// g >= 1. Basis order (a1,b1,...,ag,bg) with î(a_i,b_i) = -1.
SurfaceModel standard_surface(int g);

// Shared immutable instance of standard_surface(g).
const SurfaceModel& surface(int g);

IntMatrix intersection_form(int g);

// xᵀ·J·y for the standard form of matching dimension.
std::int64_t algebraic_intersection(const HomologyClass& x, const HomologyClass& y);

// [a1,b1]...[ag,bg] over generators a_i = 2i-1, b_i = 2i.
FreeWord surface_relator(int g);

HomologyClass abelianize(const FreeWord& w, int rank);

}  // namespace lf
