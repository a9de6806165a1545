#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lf/monodromy.hpp"

namespace lf {

struct CatalogEntry {
    std::string name;
    Factorization factorization;
    NSType expected_type;
    std::optional<int> expected_b1;
    std::string provenance;
    IdentityLevel verification_level = IdentityLevel::Homology;
    bool external_data = false;
};

struct CatalogListing {
    std::string name;
    std::string kind;  // "factorization" or "relation"
    std::string provenance;
};

std::vector<CatalogListing> catalog_list();
bool catalog_has(const std::string& name);
// Throws std::out_of_range for unknown names and for relation-only entries.
const CatalogEntry& catalog_get(const std::string& name);
const LanternInstance& lantern_instance(const std::string& name);

// (n, s) types realized by catalog factorizations.
std::set<std::pair<int, int>> catalog_types();

struct VerifyCheck {
    std::string what;
    bool passed = false;
    std::string detail;
};

struct VerifyReport {
    std::string name;
    std::vector<VerifyCheck> checks;
    bool passed() const;
    std::string to_text() const;
};

VerifyReport catalog_verify(const std::string& name);

// Hurwitz moves that bring one (t5 t4 t3 t2 t1 t1 t2 t3 t4 t5) block at
// `offset` to the form (*, *, *, c5, c1, c1, c5, *, *, *).
Factorization normalize_for_lantern(const Factorization& f, std::size_t offset);

}  // namespace lf
