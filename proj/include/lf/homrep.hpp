#pragma once

#include <cstdint>
#include <vector>

#include "lf/intlinalg.hpp"
#include "lf/pi1.hpp"
#include "lf/surface.hpp"

namespace lf {

struct SpMatrix {
    IntMatrix m;
    friend bool operator==(const SpMatrix&, const SpMatrix&) = default;
};

// x ↦ x + k·î(x,c)·c
SpMatrix transvection(const HomologyClass& c, std::int64_t k = 1);

// Ψ of a composition word: Ψ(w0)·Ψ(w1)···
SpMatrix evaluate(const SurfaceModel& s, const TwistWord& word);

// Homology class Ψ(conj)·[base].
HomologyClass curve_class(const SurfaceModel& s, int base, const TwistWord& conj);

struct PrimeClosure {
    int p = 0;
    std::uint64_t order = 0;
    std::uint64_t target = 0;  // |Sp(4, p)|
    bool surjective = false;
};

struct TransitivityCertificate {
    std::vector<PrimeClosure> primes;
    // "consistent with transitive" or "not transitive"
    bool consistent_with_transitive() const;
};

std::uint64_t sp_order(int g, int p);

// Order of the subgroup of Sp(4, Z/p) generated by the reductions; p ∈ {2,3,5}.
PrimeClosure mod_p_closure(const std::vector<SpMatrix>& generators, int p);

TransitivityCertificate transitivity_certificate(const std::vector<SpMatrix>& generators,
                                                 const std::vector<int>& primes);

}  // namespace lf
