#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lf/intlinalg.hpp"
#include "lf/monodromy.hpp"

namespace lf {

struct InvariantError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvariantReport {
    std::int64_t euler = 0;
    std::optional<std::int64_t> signature;  // genus 2 only
    AbelianGroupReport h1;
    std::array<std::int64_t, 5> betti{};
    std::optional<std::int64_t> b2_plus, b2_minus;
    bool section_assumed = true;
    std::string identity_level;  // strongest level verified, or "unchecked"

    // flat key=value lines
    std::string to_text() const;
};

struct Presentation {
    int genus = 2;
    std::vector<std::string> generators;
    std::vector<FreeWord> relators;
    bool section_assumed = true;
    std::string to_text() const;
};

std::int64_t euler_characteristic(const Factorization& f);

// −(3n+s)/5; throws when 3n+s is not divisible by 5.
std::int64_t signature_g2(const Factorization& f);
std::int64_t signature_g2(std::int64_t n, std::int64_t s);

// Z^{2g} modulo the vanishing-cycle classes, plus Z^{2h} from the base.
AbelianGroupReport first_homology(const Factorization& f, bool assume_section = true);

// Requires the homology-level identity check for base genus 0.
InvariantReport betti_numbers(const Factorization& f, bool assume_section = true);

// Relators are the cycle words, plus the surface relator over a closed base.
Presentation pi1_presentation(const Factorization& f, bool closed_base = true, bool assume_section = true);

// Cokernel of the abelianized relator matrix.
AbelianGroupReport abelianization(const Presentation& p);

struct BettiBoundReport {
    std::int64_t b1 = 0;
    std::int64_t bound = 0;  // 2g + 2h - 2
    bool bound_ok = false;
    bool witness_ok = false;  // two nonhomologous nonseparating cycles
    std::optional<std::pair<std::size_t, std::size_t>> witness;
    bool identity_ok = false;
    bool ok() const { return bound_ok && witness_ok && identity_ok; }
};

BettiBoundReport betti_bound_check(const Factorization& f);

// Pairs (i, j), i < j, whose classes extend to an integral basis of Z^4.
std::vector<std::pair<std::size_t, std::size_t>> basis_pair_search(const Factorization& f);

}  // namespace lf
