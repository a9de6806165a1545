#pragma once

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace lf {

// Thrown whenever checked int64 arithmetic would wrap.
struct OverflowError : std::overflow_error {
    using std::overflow_error::overflow_error;
};

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_sub(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols, std::int64_t fill = 0);
    IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    std::int64_t& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    std::int64_t operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    IntMatrix transpose() const;
    std::vector<std::int64_t> row(std::size_t i) const;
    std::vector<std::int64_t> apply(const std::vector<std::int64_t>& x) const;  // M·x
    bool is_identity() const;

    const std::vector<std::int64_t>& data() const { return a_; }

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<std::int64_t> a_;
};

IntMatrix operator*(const IntMatrix& x, const IntMatrix& y);
std::string to_string(const IntMatrix& m);

// Bareiss fraction-free elimination; square input only.
std::int64_t determinant(const IntMatrix& m);

struct SNFResult {
    std::vector<std::int64_t> d;  // nonzero invariant factors, d[i] | d[i+1]
    IntMatrix u, v;               // u·M·v = diag(d) padded with zeros
    IntMatrix u_inv, v_inv;
    std::size_t rank() const { return d.size(); }
};

SNFResult smith_normal_form(const IntMatrix& m);

// m×n matrix carrying d on its diagonal.
IntMatrix diagonal(const std::vector<std::int64_t>& d, std::size_t rows, std::size_t cols);

struct AbelianGroupReport {
    std::size_t free_rank = 0;
    std::vector<std::int64_t> torsion;  // factors > 1, divisibility chain

    bool trivial() const { return free_rank == 0 && torsion.empty(); }
    std::string to_string() const;  // "Z^2 + Z/2", "0"
    friend bool operator==(const AbelianGroupReport&, const AbelianGroupReport&) = default;
};

// Z^cols / rowspan(m).
AbelianGroupReport cokernel(const IntMatrix& m);

bool preserves_form(const IntMatrix& m, const IntMatrix& j);

}  // namespace lf
