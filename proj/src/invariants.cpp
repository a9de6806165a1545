#include "lf/invariants.hpp"

#include <algorithm>
#include <sstream>

namespace lf {

std::int64_t euler_characteristic(const Factorization& f)
{
    // each singular fiber raises χ of the product Σg × base by one
    const std::int64_t g = f.fiber_genus, h = f.base_genus;
    return checked_add(checked_mul(2 - 2 * g, 2 - 2 * h), static_cast<std::int64_t>(f.cycles.size()));
}

std::int64_t signature_g2(std::int64_t n, std::int64_t s)
{
    std::int64_t num = checked_add(checked_mul(3, n), s);
    if (num % 5 != 0)
        throw InvariantError("signature: 3n+s = " + std::to_string(num) +
                             " is not divisible by 5, so (n,s) cannot be a genus-2 fibration (n+12s must be 0 mod 10)");
    return -num / 5;
}

std::int64_t signature_g2(const Factorization& f)
{
    if (f.fiber_genus != 2) throw InvariantError("signature formula applies to genus 2 only");
    NSType t = ns_type(f);
    return signature_g2(t.n, t.s);
}

AbelianGroupReport first_homology(const Factorization& f, bool /*assume_section*/)
{
    // Without a section the gluing may add one more relation; the caller records that.
    const SurfaceModel& s = surface(f.fiber_genus);
    std::vector<std::vector<std::int64_t>> rows;
    for (const auto& c : f.cycles) rows.push_back(curve_class(s, c));
    AbelianGroupReport r = cokernel(IntMatrix::from_rows(rows, 2 * f.fiber_genus));
    r.free_rank += 2 * f.base_genus;
    return r;
}

InvariantReport betti_numbers(const Factorization& f, bool assume_section)
{
    InvariantReport r;
    r.section_assumed = assume_section;
    if (f.base_genus == 0) {
        auto level = strongest_identity(f);
        if (!level || *level == IdentityLevel::ModP)
            throw InvariantError("the monodromy is not the identity in Sp(2g,Z); closed-manifold invariants are undefined");
        r.identity_level = to_string(*level);
    } else {
        r.identity_level = "unchecked";
    }

    r.euler = euler_characteristic(f);
    r.h1 = first_homology(f, assume_section);
    const std::int64_t b1 = static_cast<std::int64_t>(r.h1.free_rank);
    const std::int64_t b2 = r.euler - 2 + 2 * b1;
    r.betti = {1, b1, b2, b1, 1};
    if (f.fiber_genus == 2) {
        r.signature = signature_g2(f);
        if ((b2 + *r.signature) % 2 != 0) throw InvariantError("b2 and signature have different parity");
        r.b2_plus = (b2 + *r.signature) / 2;
        r.b2_minus = (b2 - *r.signature) / 2;
    }
    return r;
}

std::string InvariantReport::to_text() const
{
    std::ostringstream os;
    os << "euler=" << euler << '\n';
    if (signature) os << "signature=" << *signature << '\n';
    os << "h1=" << h1.to_string() << '\n';
    for (int i = 0; i < 5; ++i) os << 'b' << i << '=' << betti[i] << '\n';
    if (b2_plus) os << "b2_plus=" << *b2_plus << '\n';
    if (b2_minus) os << "b2_minus=" << *b2_minus << '\n';
    os << "section_assumed=" << (section_assumed ? "true" : "false") << '\n';
    os << "identity_level=" << identity_level << '\n';
    return os.str();
}

Presentation pi1_presentation(const Factorization& f, bool closed_base, bool assume_section)
{
    if (f.fiber_genus > 2) throw InvariantError("presentations need free-group words, available for genus <= 2");
    if (f.base_genus != 0) throw InvariantError("presentations are implemented over a sphere or disk base");
    const SurfaceModel& s = surface(f.fiber_genus);
    Presentation p;
    p.genus = f.fiber_genus;
    p.generators = s.basis_labels;
    p.section_assumed = assume_section;
    for (const auto& c : f.cycles) {
        if (f.fiber_genus == 2) {
            p.relators.push_back(curve_word(c.base, c.conj));
        } else {
            if (!c.conj.empty()) throw InvariantError("genus-1 presentations accept only unconjugated curves");
            p.relators.push_back(*s.base_word(c.base));
        }
    }
    if (closed_base) p.relators.push_back(surface_relator(f.fiber_genus));
    return p;
}

std::string Presentation::to_text() const
{
    std::ostringstream os;
    os << "< ";
    for (std::size_t i = 0; i < generators.size(); ++i) os << (i ? ", " : "") << generators[i];
    os << " | ";
    for (std::size_t i = 0; i < relators.size(); ++i) os << (i ? ", " : "") << to_string(relators[i]);
    os << " >";
    if (section_assumed) os << "  (assuming a section)";
    return os.str();
}

AbelianGroupReport abelianization(const Presentation& p)
{
    const int rank = 2 * p.genus;
    std::vector<std::vector<std::int64_t>> rows;
    for (const auto& r : p.relators) rows.push_back(abelianize(r, rank));
    return cokernel(IntMatrix::from_rows(rows, rank));
}

namespace {

bool same_up_to_sign(const HomologyClass& x, const HomologyClass& y)
{
    if (x == y) return true;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] != -y[i]) return false;
    return true;
}

}  // namespace

BettiBoundReport betti_bound_check(const Factorization& f)
{
    if (f.cycles.empty()) throw InvariantError("the Betti bound applies to nontrivial fibrations only");
    BettiBoundReport r;
    r.identity_ok = f.base_genus != 0 || identity_check(f, IdentityLevel::Homology).passed;
    r.b1 = static_cast<std::int64_t>(first_homology(f).free_rank);
    r.bound = 2 * f.fiber_genus + 2 * f.base_genus - 2;
    r.bound_ok = r.b1 <= r.bound;

    const SurfaceModel& s = surface(f.fiber_genus);
    std::vector<HomologyClass> cls;
    for (const auto& c : f.cycles) cls.push_back(curve_class(s, c));
    auto nonzero = [](const HomologyClass& h) { return std::any_of(h.begin(), h.end(), [](auto x) { return x != 0; }); };
    for (std::size_t i = 0; i < cls.size() && !r.witness; ++i) {
        if (!nonzero(cls[i])) continue;
        for (std::size_t j = i + 1; j < cls.size(); ++j)
            if (nonzero(cls[j]) && !same_up_to_sign(cls[i], cls[j])) {
                r.witness = std::make_pair(i, j);
                break;
            }
    }
    r.witness_ok = r.witness.has_value();
    return r;
}

std::vector<std::pair<std::size_t, std::size_t>> basis_pair_search(const Factorization& f)
{
    if (f.fiber_genus != 2) throw InvariantError("basis pair search is implemented for genus 2");
    const SurfaceModel& s = surface(2);
    std::vector<HomologyClass> cls;
    for (const auto& c : f.cycles) cls.push_back(curve_class(s, c));
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < cls.size(); ++i)
        for (std::size_t j = i + 1; j < cls.size(); ++j) {
            auto snf = smith_normal_form(IntMatrix::from_rows({cls[i], cls[j]}, 4));
            if (snf.d == std::vector<std::int64_t>{1, 1}) out.emplace_back(i, j);
        }
    return out;
}

}  // namespace lf
