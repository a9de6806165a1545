#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lf/surface.hpp"

namespace lf {

// One signed Dehn twist about a standard curve (1..2g+1 or kS1).
struct Twist {
    int curve = 1;
    int sign = 1;
    Twist inverse() const { return {curve, -sign}; }
    friend bool operator==(const Twist&, const Twist&) = default;
};

// A mapping-class word read as a composition: the last twist acts first.
using TwistWord = std::vector<Twist>;

TwistWord inverse(const TwistWord& w);
TwistWord free_reduce(TwistWord w);
std::string to_string(const TwistWord& w);

FreeWord reduce(FreeWord w);
FreeWord inverse(const FreeWord& w);
FreeWord concat(std::initializer_list<const FreeWord*> parts);
std::string to_string(const FreeWord& w, int genus_labels = 2);

// Endomorphism of the free group of the given rank, stored by generator images.
struct Automorphism {
    int rank = 4;
    std::vector<FreeWord> images;
    std::string label;

    static Automorphism identity(int rank);
    std::size_t total_length() const;
    friend bool operator==(const Automorphism& x, const Automorphism& y)
    {
        return x.rank == y.rank && x.images == y.images;
    }
};

FreeWord apply(const Automorphism& aut, const FreeWord& w);
// (f∘g)(x) = f(g(x))
Automorphism compose(const Automorphism& f, const Automorphism& g);
Automorphism conjugation(const FreeWord& w, int rank);  // x ↦ w·x·w⁻¹

// Genus-2 engine on F⟨a1,b1,a2,b2⟩ = π1 of the one-boundary surface.
Automorphism twist_automorphism(int curve, int sign);
Automorphism compose(const TwistWord& word);
// Twist about φ(base) where φ = compose(conj): φ∘t_base^sign∘φ⁻¹.
Automorphism curve_twist(int base, const TwistWord& conj, int sign = 1);
// Free-group representative of φ(base).
FreeWord curve_word(int base, const TwistWord& conj);

FreeWord boundary_word();  // δ = [a1,b1][a2,b2]

// w with aut(x) = w·x·w⁻¹ for every generator, when one exists.
std::optional<FreeWord> is_inner(const Automorphism& aut);

// Image of a genus-2 twist word in the mapping class group of the sphere with
// six marked points (t_{c_i} ↦ half twist σ_i), acting on
// π1(S² minus six points) = F⟨x1..x5⟩. Its kernel on Mod(Σ2) is {1, ι}.
Automorphism sphere_quotient(const TwistWord& word);
Automorphism sphere_curve_twist(int base, const TwistWord& conj, int sign = 1);

}  // namespace lf
