#include "polylab/parallelepiped.hpp"

#include "polylab/matrix.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace polylab {

ParallelepipedSpec::ParallelepipedSpec(std::vector<IntVector> generators)
    : generators_(std::move(generators))
{
    if (generators_.empty())
        throw std::invalid_argument("parallelepiped needs at least one generator");
    if (generators_.size() > 20)
        throw std::invalid_argument("parallelepiped: at most 20 generators are supported");
    for (const auto& g : generators_)
        if (g.size() != generators_.front().size())
            throw std::invalid_argument("parallelepiped generators have different lengths");
    const std::size_t rk = rank(IntMatrix::from_rows(generators_));
    if (rk != generators_.size())
        throw std::invalid_argument("generators are linearly dependent: rank " + std::to_string(rk) +
                                    " < " + std::to_string(generators_.size()) + " generators");
}

std::vector<LatticePoint> ParallelepipedSpec::vertex_sums() const
{
    const Subset count = Subset{1} << generators_.size();
    std::vector<LatticePoint> out(count, LatticePoint(ambient_dim(), Int(0)));
    for (Subset g = 1; g < count; ++g) {
        const unsigned low = static_cast<unsigned>(std::countr_zero(g));
        const Subset rest = g & (g - 1);
        for (std::size_t c = 0; c < ambient_dim(); ++c)
            out[g][c] = out[rest][c] + generators_[low][c];
    }
    return out;
}

LatticePolytope ParallelepipedSpec::polytope() const
{
    return LatticePolytope::from_points(vertex_sums());
}

std::vector<BoxPoint> box_points(std::span<const IntVector> vectors, BoxMode mode)
{
    if (vectors.empty())
        return mode == BoxMode::HalfOpen ? std::vector<BoxPoint>{BoxPoint{}} : std::vector<BoxPoint>{};
    const std::size_t k = vectors.size();
    const std::size_t m = vectors.front().size();
    const IntMatrix gens = IntMatrix::from_rows(vectors);
    const SmithForm s = snf(gens);
    const IntVector d = s.invariant_factors();
    if (d.size() != k)
        throw std::invalid_argument("box_points: vectors are linearly dependent");

    Int total = 1;
    for (const auto& x : d)
        total *= abs(x);
    if (total > scan_budget())
        throw ScaleGuardError("box enumeration needs " + to_string(total) +
                              " cosets, above the scale guard " + to_string(scan_budget()));

    // x = y M is integral iff z = y U^{-1} has z_i d_i integral; y = z U.
    std::vector<BoxPoint> out;
    IntVector c(k, Int(0));
    for (;;) {
        RatVector lambda(k, Rat(0));
        for (std::size_t i = 0; i < k; ++i) {
            if (c[i] == 0)
                continue;
            const Rat zi = make_rat(c[i], abs(d[i]));
            for (std::size_t j = 0; j < k; ++j)
                if (s.U(i, j) != 0)
                    lambda[j] += zi * s.U(i, j);
        }
        bool keep = true;
        for (auto& l : lambda) {
            l = fractional_part(l);
            if (mode == BoxMode::Open && l == 0)
                keep = false;
        }
        if (keep) {
            RatVector x(m, Rat(0));
            for (std::size_t j = 0; j < k; ++j)
                if (lambda[j] != 0)
                    for (std::size_t t = 0; t < m; ++t)
                        x[t] += lambda[j] * vectors[j][t];
            LatticePoint p(m);
            for (std::size_t t = 0; t < m; ++t) {
                if (x[t].get_den() != 1)
                    throw std::logic_error("box_points: coset representative is not integral");
                p[t] = x[t].get_num();
            }
            out.push_back(BoxPoint{std::move(p), std::move(lambda)});
        }
        std::size_t i = 0;
        while (i < k) {
            ++c[i];
            if (c[i] < abs(d[i]))
                break;
            c[i] = 0;
            ++i;
        }
        if (i == k)
            break;
    }
    std::sort(out.begin(), out.end(),
              [](const BoxPoint& a, const BoxPoint& b) { return a.point < b.point; });
    return out;
}

BoxCensus box_census(const ParallelepipedSpec& spec)
{
    BoxCensus census;
    census.generators = spec.size();
    const std::size_t subsets = std::size_t{1} << spec.size();
    census.b.assign(subsets, Int(0));
    census.open_points.assign(subsets, {});
    for (auto& bp : box_points(spec.generators(), BoxMode::HalfOpen)) {
        Subset support = 0;
        for (std::size_t i = 0; i < bp.coeffs.size(); ++i)
            if (bp.coeffs[i] != 0)
                support |= Subset{1} << i;
        census.b[support] += 1;
        census.open_points[support].push_back(std::move(bp.point));
    }
    census.half_open = census.b;
    for (std::size_t i = 0; i < spec.size(); ++i)
        for (std::size_t g = 0; g < subsets; ++g)
            if (g & (std::size_t{1} << i))
                census.half_open[g] += census.half_open[g ^ (std::size_t{1} << i)];
    return census;
}

Int closed_count(const BoxCensus& census, unsigned long n)
{
    Int total = 0;
    const Int base(n);
    for (std::size_t g = 0; g < census.half_open.size(); ++g)
        total += power(base, static_cast<unsigned long>(std::popcount(g))) * census.half_open[g];
    return total;
}

Int closed_count(const ParallelepipedSpec& spec, unsigned long n)
{
    return closed_count(box_census(spec), n);
}

DeltaReport parallelepiped_delta(const BoxCensus& census)
{
    const long r = static_cast<long>(census.generators) - 1;
    std::vector<IntPoly> a;
    for (long j = -1; j <= r; ++j)
        a.push_back(a_poly(r, j).poly);
    IntPoly total;
    for (std::size_t g = 0; g < census.b.size(); ++g)
        if (census.b[g] != 0)
            total += a[static_cast<std::size_t>(std::popcount(g))] * census.b[g];
    return make_report(total.window(static_cast<std::size_t>(r + 2)));
}

DeltaReport parallelepiped_delta(const ParallelepipedSpec& spec)
{
    return parallelepiped_delta(box_census(spec));
}

bool parallelepiped_is_reflexive_translate(const BoxCensus& census)
{
    if (census.b[census.full()] != 1)
        return false;
    return std::all_of(census.b.begin(), census.b.end(), [](const Int& x) { return x <= 1; });
}

bool parallelepiped_is_reflexive_translate(const ParallelepipedSpec& spec)
{
    return parallelepiped_is_reflexive_translate(box_census(spec));
}

}  // namespace polylab
