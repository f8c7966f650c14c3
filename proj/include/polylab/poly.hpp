#pragma once

#include "polylab/integer.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>

namespace polylab {

/**
 * Dense univariate polynomial with integer coefficients in ascending degree.
 *
 * Kept in canonical form (no trailing zero coefficients), so equality is
 * coefficient-list equality and the zero polynomial has an empty list.
 */
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(IntVector coeffs);
    IntPoly(std::initializer_list<long> coeffs);

    static IntPoly monomial(const Int& c, std::size_t degree);
    /// (1 - t)^n
    static IntPoly one_minus_t_pow(std::size_t n);

    const IntVector& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    /// Coefficient of t^i; zero past the degree.
    Int coeff(std::size_t i) const;

    /// Coefficients 0..len-1, zero padded. Throws if the degree does not fit.
    IntVector window(std::size_t len) const;

    Int eval(const Int& t) const;

    IntPoly operator+(const IntPoly& rhs) const;
    IntPoly operator-(const IntPoly& rhs) const;
    IntPoly operator*(const IntPoly& rhs) const;
    IntPoly operator*(const Int& c) const;
    IntPoly& operator+=(const IntPoly& rhs);
    IntPoly shifted(std::size_t k) const;  // t^k * p

    bool operator==(const IntPoly&) const = default;
    auto operator<=>(const IntPoly& rhs) const { return coeffs_ <=> rhs.coeffs_; }

    std::string to_string() const;

private:
    void trim();
    IntVector coeffs_;
};

IntPoly poly_mul(const IntPoly& p, const IntPoly& q);

/// t^n * p(1/t): coefficient reversal within the window 0..n. Requires deg p <= n.
IntPoly poly_mirror(const IntPoly& p, long n);

}  // namespace polylab
