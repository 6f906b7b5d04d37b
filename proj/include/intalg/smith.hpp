#pragma once

// Smith normal form over Z.

#include <utility>
#include <vector>

#include "intalg/rational.hpp"

namespace intalg {

using IntMatrix = std::vector<std::vector<Integer>>;

struct SmithForm {
    /// Nonzero diagonal entries d_1 | d_2 | ... | d_r, all positive.
    std::vector<Integer> invariant_factors;
    std::size_t rows = 0;
    std::size_t cols = 0;

    std::size_t rank() const { return invariant_factors.size(); }
};

inline SmithForm smith_normal_form(IntMatrix m) {
    SmithForm out;
    out.rows = m.size();
    out.cols = m.empty() ? 0 : m.front().size();
    const std::size_t R = out.rows, C = out.cols;

    for (std::size_t t = 0; t < std::min(R, C); ++t) {
        for (;;) {
            // smallest nonzero entry of the trailing block goes to (t, t)
            std::size_t pr = R, pc = C;
            for (std::size_t i = t; i < R; ++i)
                for (std::size_t j = t; j < C; ++j)
                    if (m[i][j] != 0 && (pr == R || abs(m[i][j]) < abs(m[pr][pc]))) {
                        pr = i;
                        pc = j;
                    }
            if (pr == R) {
                std::sort(out.invariant_factors.begin(), out.invariant_factors.end());
                return out;
            }
            std::swap(m[t], m[pr]);
            for (auto& row : m) std::swap(row[t], row[pc]);

            bool clean = true;
            for (std::size_t i = t + 1; i < R; ++i) {
                if (m[i][t] == 0) continue;
                const Integer q = m[i][t] / m[t][t];
                for (std::size_t j = t; j < C; ++j) m[i][j] -= q * m[t][j];
                if (m[i][t] != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < C; ++j) {
                if (m[t][j] == 0) continue;
                const Integer q = m[t][j] / m[t][t];
                for (std::size_t i = t; i < R; ++i) m[i][j] -= q * m[i][t];
                if (m[t][j] != 0) clean = false;
            }
            if (!clean) continue;

            // the pivot must divide the whole trailing block
            bool divides = true;
            for (std::size_t i = t + 1; i < R && divides; ++i) {
                for (std::size_t j = t + 1; j < C; ++j) {
                    if (m[i][j] % m[t][t] != 0) {
                        for (std::size_t k = t; k < C; ++k) m[t][k] += m[i][k];
                        divides = false;
                        break;
                    }
                }
            }
            if (divides) break;
        }
        out.invariant_factors.push_back(abs(m[t][t]));
    }
    std::sort(out.invariant_factors.begin(), out.invariant_factors.end());
    return out;
}

struct Cokernel {
    std::size_t free_rank = 0;
    /// Invariant factors greater than one.
    std::vector<Integer> torsion;
};

/// Z^rows / im(M).
inline Cokernel cokernel(const SmithForm& snf) {
    Cokernel c;
    c.free_rank = snf.rows - snf.rank();
    for (const auto& d : snf.invariant_factors)
        if (d > 1) c.torsion.push_back(d);
    return c;
}

}  // namespace intalg
