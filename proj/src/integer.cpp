#include "polylab/integer.hpp"

#include <stdexcept>

namespace polylab {

Int binomial(long n, long k)
{
    if (n < 0)
        throw std::invalid_argument("binomial: negative n");
    if (k < 0 || k > n)
        return Int(0);
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Int power(const Int& base, unsigned long exp)
{
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

Int floor_div(const Int& a, const Int& b)
{
    if (b == 0)
        throw std::domain_error("floor_div: division by zero");
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Int ceil_div(const Int& a, const Int& b)
{
    if (b == 0)
        throw std::domain_error("ceil_div: division by zero");
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Int gcd_of(std::span<const Int> values)
{
    Int g = 0;
    for (const auto& v : values) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1)
            break;
    }
    return g;
}

void make_primitive(IntVector& v)
{
    Int g = gcd_of(v);
    if (g == 0 || g == 1)
        return;
    for (auto& x : v)
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

Rat make_rat(const Int& num, const Int& den)
{
    if (den == 0)
        throw std::domain_error("make_rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

Rat fractional_part(const Rat& x)
{
    Int q = floor_div(x.get_num(), x.get_den());
    return x - Rat(q);
}

RatVector to_rational(std::span<const Int> v)
{
    RatVector out;
    out.reserve(v.size());
    for (const auto& x : v)
        out.emplace_back(x);
    return out;
}

bool fits_int64(const Int& v)
{
    static_assert(sizeof(long) == 8, "polylab expects LP64");
    return mpz_fits_slong_p(v.get_mpz_t()) != 0;
}

long long to_int64(const Int& v)
{
    if (!fits_int64(v))
        throw std::overflow_error("integer does not fit in 64 bits: " + v.get_str());
    return mpz_get_si(v.get_mpz_t());
}

std::string to_string(const Int& v) { return v.get_str(); }
std::string to_string(const Rat& v) { return v.get_str(); }

}  // namespace polylab
