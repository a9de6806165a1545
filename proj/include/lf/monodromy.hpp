#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lf/homrep.hpp"
#include "lf/pi1.hpp"
#include "lf/surface.hpp"

namespace lf {

// The image φ(base) of a standard curve under φ = compose(conj).
struct Curve {
    int base = 1;
    TwistWord conj;

    TwistWord twist_word(int sign = 1) const;  // conj · t_base^sign · conj⁻¹
    Curve reduced() const { return {base, free_reduce(conj)}; }
    friend bool operator==(const Curve&, const Curve&) = default;
};

struct Factorization {
    int fiber_genus = 2;
    int base_genus = 0;
    std::vector<Curve> cycles;  // application order: cycles[0] acts first

    // Composition word t_{η_k}···t_{η_1}.
    TwistWord composition_word() const;
    friend bool operator==(const Factorization&, const Factorization&) = default;
};

enum class CurveKind { Separating, Nonseparating };

struct NSType {
    int n = 0;
    int s = 0;
    bool caveat = false;  // genus > 2: s lumps every separating type together
    friend bool operator==(const NSType& x, const NSType& y) { return x.n == y.n && x.s == y.s; }
};

HomologyClass curve_class(const SurfaceModel& s, const Curve& c);
CurveKind classify_curve(const SurfaceModel& s, const Curve& c);
NSType ns_type(const Factorization& f);

// Ψ(t_{η_k})···Ψ(t_{η_1}).
SpMatrix evaluate(const Factorization& f);

enum class Direction { Left, Right };

// Right at i: (x, y) ↦ (y, t_y(x)). Left at i: (x, y) ↦ (t_x⁻¹(y), x).
Factorization hurwitz_move(const Factorization& f, std::size_t i, Direction dir);
Factorization global_conjugate(const Factorization& f, const TwistWord& w);
Factorization fiber_sum(const Factorization& f1, const Factorization& f2);

struct LanternInstance {
    std::string name;
    int genus = 2;
    std::vector<Curve> boundary;  // ∂1..∂4, pairwise disjoint
    Curve a, b, c;                // t_∂1 t_∂2 t_∂3 t_∂4 = t_A t_B t_C

    // Replacement cycles in application order: C, B, A.
    std::vector<Curve> replacement() const { return {c, b, a}; }
};

struct PatternError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The four consecutive cycles starting at `position` must equal the boundary
// curves in some order (their twists commute).
Factorization lantern_substitute(const Factorization& f, std::size_t position, const LanternInstance& inst);

enum class ChainDirection { Expand, Contract };
Factorization chain_substitute(const Factorization& f, std::size_t position, ChainDirection dir);

enum class IdentityLevel { Homology, ModP, Exact, Closed };
std::string to_string(IdentityLevel level);

struct IdentityReport {
    IdentityLevel level = IdentityLevel::Homology;
    bool passed = false;
    std::string detail;
    std::optional<FreeWord> conjugator;  // exact level
};

// Homology: Ψ = I. ModP: Ψ ≡ I mod 2, 3, 5. Exact: the product is inner on
// π1 of the one-boundary surface. Closed: trivial in Mod(Σ2), decided by the
// six-point sphere quotient together with Ψ = I.
IdentityReport identity_check(const Factorization& f, IdentityLevel level);

// Strongest level that passes: exact, closed, homology, then mod p.
std::optional<IdentityLevel> strongest_identity(const Factorization& f);

}  // namespace lf
