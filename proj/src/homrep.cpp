#include "lf/homrep.hpp"

#include <array>
#include <stdexcept>

namespace lf {

SpMatrix transvection(const HomologyClass& c, std::int64_t k)
{
    if (c.empty() || c.size() % 2) throw std::invalid_argument("transvection: bad class dimension");
    const std::size_t n = c.size();
    // î(x,c) = Σ_j x_j (J c)_j, so M = I + k·c·(Jc)ᵀ
    IntMatrix j = intersection_form(static_cast<int>(n / 2));
    std::vector<std::int64_t> jc = j.apply(c);
    IntMatrix m = IntMatrix::identity(n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t col = 0; col < n; ++col)
            m(r, col) = checked_add(m(r, col), checked_mul(k, checked_mul(c[r], jc[col])));
    return {m};
}

SpMatrix evaluate(const SurfaceModel& s, const TwistWord& word)
{
    const std::size_t n = 2 * s.genus;
    IntMatrix m = IntMatrix::identity(n);
    for (const auto& t : word) m = m * transvection(s.base_class(t.curve), t.sign).m;
    return {m};
}

HomologyClass curve_class(const SurfaceModel& s, int base, const TwistWord& conj)
{
    return evaluate(s, conj).m.apply(s.base_class(base));
}

std::uint64_t sp_order(int g, int p)
{
    std::uint64_t r = 1;
    for (int i = 0; i < g * g; ++i) r *= p;
    std::uint64_t q = 1;
    for (int i = 1; i <= g; ++i) {
        q *= static_cast<std::uint64_t>(p) * p;
        r *= q - 1;
    }
    return r;
}

namespace {

using Mat4 = std::array<int, 16>;

std::uint64_t encode(const Mat4& a, int p)
{
    std::uint64_t code = 0;
    for (int x : a) code = code * p + x;
    return code;
}

Mat4 decode(std::uint64_t code, int p)
{
    Mat4 a{};
    for (int i = 15; i >= 0; --i) {
        a[i] = static_cast<int>(code % p);
        code /= p;
    }
    return a;
}

Mat4 mul(const Mat4& x, const Mat4& y, int p)
{
    Mat4 r{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            int s = 0;
            for (int k = 0; k < 4; ++k) s += x[4 * i + k] * y[4 * k + j];
            r[4 * i + j] = s % p;
        }
    return r;
}

// Open-addressing set of matrix codes; codes are < 5^16 so ~0 marks empty.
class CodeSet {
public:
    explicit CodeSet(std::size_t cap = 1 << 12) : slots_(cap, kEmpty) {}

    bool insert(std::uint64_t code)
    {
        if (2 * (size_ + 1) > slots_.size()) grow();
        return place(slots_, code);
    }
    std::size_t size() const { return size_; }

private:
    static constexpr std::uint64_t kEmpty = ~std::uint64_t{0};

    bool place(std::vector<std::uint64_t>& t, std::uint64_t code)
    {
        std::size_t mask = t.size() - 1;
        std::size_t i = (code * 0x9E3779B97F4A7C15ull) >> 17 & mask;
        while (t[i] != kEmpty) {
            if (t[i] == code) return false;
            i = (i + 1) & mask;
        }
        t[i] = code;
        if (&t == &slots_) ++size_;
        return true;
    }
    void grow()
    {
        std::vector<std::uint64_t> bigger(slots_.size() * 2, kEmpty);
        for (auto c : slots_)
            if (c != kEmpty) place(bigger, c);
        slots_.swap(bigger);
    }

    std::vector<std::uint64_t> slots_;
    std::size_t size_ = 0;
};

}  // namespace

PrimeClosure mod_p_closure(const std::vector<SpMatrix>& generators, int p)
{
    if (p != 2 && p != 3 && p != 5) throw std::invalid_argument("mod_p_closure: p must be 2, 3 or 5");
    std::vector<Mat4> gens;
    for (const auto& g : generators) {
        if (g.m.rows() != 4 || g.m.cols() != 4) throw std::invalid_argument("mod_p_closure: genus 2 only");
        Mat4 a{};
        for (int i = 0; i < 16; ++i) a[i] = static_cast<int>(((g.m(i / 4, i % 4) % p) + p) % p);
        gens.push_back(a);
    }

    Mat4 id{};
    for (int i = 0; i < 4; ++i) id[5 * i] = 1;
    CodeSet seen;
    std::vector<std::uint64_t> queue{encode(id, p)};
    seen.insert(queue[0]);
    // Finite group: closure under right multiplication by generators is the subgroup.
    for (std::size_t head = 0; head < queue.size(); ++head) {
        Mat4 x = decode(queue[head], p);
        for (const auto& g : gens) {
            std::uint64_t c = encode(mul(x, g, p), p);
            if (seen.insert(c)) queue.push_back(c);
        }
    }

    PrimeClosure r;
    r.p = p;
    r.order = queue.size();
    r.target = sp_order(2, p);
    r.surjective = r.order == r.target;
    return r;
}

bool TransitivityCertificate::consistent_with_transitive() const
{
    for (const auto& q : primes)
        if (!q.surjective) return false;
    return true;
}

TransitivityCertificate transitivity_certificate(const std::vector<SpMatrix>& generators,
                                                 const std::vector<int>& primes)
{
    TransitivityCertificate c;
    for (int p : primes) c.primes.push_back(mod_p_closure(generators, p));
    return c;
}

}  // namespace lf
