#include "polylab/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace polylab {

IntPoly::IntPoly(IntVector coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs)
{
    for (long c : coeffs)
        coeffs_.emplace_back(c);
    trim();
}

IntPoly IntPoly::monomial(const Int& c, std::size_t degree)
{
    IntVector v(degree + 1, Int(0));
    v[degree] = c;
    return IntPoly(std::move(v));
}

IntPoly IntPoly::one_minus_t_pow(std::size_t n)
{
    IntVector v(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        v[k] = binomial(static_cast<long>(n), static_cast<long>(k));
        if (k % 2 == 1)
            v[k] = -v[k];
    }
    return IntPoly(std::move(v));
}

void IntPoly::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

Int IntPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Int(0); }

IntVector IntPoly::window(std::size_t len) const
{
    if (coeffs_.size() > len)
        throw std::invalid_argument("IntPoly::window: degree " + std::to_string(degree()) +
                                    " does not fit a window of length " + std::to_string(len));
    IntVector out(len, Int(0));
    std::copy(coeffs_.begin(), coeffs_.end(), out.begin());
    return out;
}

Int IntPoly::eval(const Int& t) const
{
    Int acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * t + *it;
    return acc;
}

IntPoly IntPoly::operator+(const IntPoly& rhs) const
{
    IntPoly out = *this;
    out += rhs;
    return out;
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs)
{
    if (rhs.coeffs_.size() > coeffs_.size())
        coeffs_.resize(rhs.coeffs_.size(), Int(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
        coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

IntPoly IntPoly::operator-(const IntPoly& rhs) const { return *this + rhs * Int(-1); }

IntPoly IntPoly::operator*(const IntPoly& rhs) const
{
    if (is_zero() || rhs.is_zero())
        return {};
    IntVector out(coeffs_.size() + rhs.coeffs_.size() - 1, Int(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0)
            continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
            out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
    return IntPoly(std::move(out));
}

IntPoly IntPoly::operator*(const Int& c) const
{
    IntVector out = coeffs_;
    for (auto& x : out)
        x *= c;
    return IntPoly(std::move(out));
}

IntPoly IntPoly::shifted(std::size_t k) const
{
    if (is_zero())
        return {};
    IntVector out(k, Int(0));
    out.insert(out.end(), coeffs_.begin(), coeffs_.end());
    return IntPoly(std::move(out));
}

std::string IntPoly::to_string() const
{
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Int& c = coeffs_[i];
        if (c == 0)
            continue;
        if (!first)
            os << (c < 0 ? " - " : " + ");
        else if (c < 0)
            os << "-";
        Int a = abs(c);
        if (i == 0 || a != 1)
            os << a.get_str();
        if (i >= 1)
            os << "t";
        if (i >= 2)
            os << "^" << i;
        first = false;
    }
    return os.str();
}

IntPoly poly_mul(const IntPoly& p, const IntPoly& q) { return p * q; }

IntPoly poly_mirror(const IntPoly& p, long n)
{
    if (n < 0 || p.degree() > n)
        throw std::invalid_argument("poly_mirror: degree " + std::to_string(p.degree()) +
                                    " exceeds window " + std::to_string(n));
    IntVector w = p.window(static_cast<std::size_t>(n) + 1);
    std::reverse(w.begin(), w.end());
    return IntPoly(std::move(w));
}

}  // namespace polylab
