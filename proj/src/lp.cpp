#include "polylab/lp.hpp"

#include <stdexcept>

namespace polylab {

namespace {

struct Tableau {
    std::vector<RatVector> rows;   // each row: coefficients..., rhs
    std::vector<std::size_t> basis;
    RatVector objective;           // reduced-cost row (maximization), last entry = -value
    std::size_t columns = 0;       // excluding rhs
    std::vector<bool> allowed;     // columns eligible to enter

    void pivot(std::size_t r, std::size_t c)
    {
        RatVector& pr = rows[r];
        const Rat inv = 1 / pr[c];
        for (auto& x : pr)
            if (x != 0)
                x *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0)
                continue;
            const Rat f = rows[i][c];
            RatVector& row = rows[i];
            for (std::size_t j = 0; j <= columns; ++j)
                if (pr[j] != 0)
                    row[j] -= f * pr[j];
        }
        if (objective[c] != 0) {
            const Rat f = objective[c];
            for (std::size_t j = 0; j <= columns; ++j)
                if (pr[j] != 0)
                    objective[j] -= f * pr[j];
        }
        basis[r] = c;
    }

    void set_objective(const RatVector& cost)
    {
        objective.assign(columns + 1, Rat(0));
        for (std::size_t j = 0; j < columns; ++j)
            objective[j] = cost[j];
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const Rat& cb = cost[basis[i]];
            if (cb == 0)
                continue;
            for (std::size_t j = 0; j <= columns; ++j)
                if (rows[i][j] != 0)
                    objective[j] -= cb * rows[i][j];
        }
    }

    // Bland's rule: lowest eligible entering column, lowest-index leaving
    // variable among ratio ties. Returns false when unbounded.
    bool run()
    {
        for (;;) {
            std::size_t enter = columns;
            for (std::size_t j = 0; j < columns; ++j)
                if (allowed[j] && objective[j] > 0) {
                    enter = j;
                    break;
                }
            if (enter == columns)
                return true;
            std::size_t leave = rows.size();
            Rat best;
            for (std::size_t i = 0; i < rows.size(); ++i) {
                const Rat& a = rows[i][enter];
                if (a <= 0)
                    continue;
                Rat ratio = rows[i][columns] / a;
                if (leave == rows.size() || ratio < best ||
                    (ratio == best && basis[i] < basis[leave])) {
                    leave = i;
                    best = std::move(ratio);
                }
            }
            if (leave == rows.size())
                return false;
            pivot(leave, enter);
        }
    }
};

}  // namespace

LpResult solve_lp(const LinearProgram& lp)
{
    const std::size_t n = lp.variables;
    if (lp.objective.size() != n)
        throw std::invalid_argument("solve_lp: objective has wrong length");

    // Normalize to nonnegative right-hand sides.
    std::vector<LinearConstraint> cons = lp.constraints;
    for (auto& c : cons) {
        if (c.coeffs.size() != n)
            throw std::invalid_argument("solve_lp: constraint has wrong length");
        if (c.rhs < 0) {
            for (auto& a : c.coeffs)
                a = -a;
            c.rhs = -c.rhs;
            if (c.sense == Sense::LessEqual)
                c.sense = Sense::GreaterEqual;
            else if (c.sense == Sense::GreaterEqual)
                c.sense = Sense::LessEqual;
        }
    }

    std::size_t slack_count = 0, artificial_count = 0;
    for (const auto& c : cons) {
        if (c.sense != Sense::Equal)
            ++slack_count;
        if (c.sense != Sense::LessEqual)
            ++artificial_count;
    }
    const std::size_t first_slack = n;
    const std::size_t first_art = n + slack_count;

    Tableau tab;
    tab.columns = n + slack_count + artificial_count;
    tab.rows.assign(cons.size(), RatVector(tab.columns + 1, Rat(0)));
    tab.basis.resize(cons.size());
    std::size_t s = first_slack, a = first_art;
    for (std::size_t i = 0; i < cons.size(); ++i) {
        auto& row = tab.rows[i];
        for (std::size_t j = 0; j < n; ++j)
            row[j] = cons[i].coeffs[j];
        row[tab.columns] = cons[i].rhs;
        switch (cons[i].sense) {
        case Sense::LessEqual:
            row[s] = 1;
            tab.basis[i] = s++;
            break;
        case Sense::GreaterEqual:
            row[s++] = -1;
            row[a] = 1;
            tab.basis[i] = a++;
            break;
        case Sense::Equal:
            row[a] = 1;
            tab.basis[i] = a++;
            break;
        }
    }
    tab.allowed.assign(tab.columns, true);

    if (artificial_count > 0) {
        RatVector phase1(tab.columns, Rat(0));
        for (std::size_t j = first_art; j < tab.columns; ++j)
            phase1[j] = -1;
        tab.set_objective(phase1);
        tab.run();
        // objective[rhs] holds -(phase-one value).
        if (tab.objective[tab.columns] != 0)
            return {LpStatus::Infeasible, Rat(0), {}};
        // Drive zero-level artificials out of the basis; drop redundant rows.
        for (std::size_t i = 0; i < tab.rows.size();) {
            if (tab.basis[i] < first_art) {
                ++i;
                continue;
            }
            std::size_t col = first_art;
            for (std::size_t j = 0; j < first_art; ++j)
                if (tab.rows[i][j] != 0) {
                    col = j;
                    break;
                }
            if (col == first_art) {
                tab.rows.erase(tab.rows.begin() + static_cast<long>(i));
                tab.basis.erase(tab.basis.begin() + static_cast<long>(i));
                continue;
            }
            tab.pivot(i, col);
            ++i;
        }
        for (std::size_t j = first_art; j < tab.columns; ++j)
            tab.allowed[j] = false;
    }

    RatVector cost(tab.columns, Rat(0));
    for (std::size_t j = 0; j < n; ++j)
        cost[j] = lp.objective[j];
    tab.set_objective(cost);
    if (!tab.run())
        return {LpStatus::Unbounded, Rat(0), {}};

    LpResult res;
    res.status = LpStatus::Optimal;
    res.x.assign(n, Rat(0));
    for (std::size_t i = 0; i < tab.rows.size(); ++i)
        if (tab.basis[i] < n)
            res.x[tab.basis[i]] = tab.rows[i][tab.columns];
    res.value = 0;
    for (std::size_t j = 0; j < n; ++j)
        res.value += lp.objective[j] * res.x[j];
    return res;
}

}  // namespace polylab
