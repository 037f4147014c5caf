#include "nec/linalg.hpp"

#include <algorithm>
#include <cstddef>

namespace nec {

namespace {

// In-place forward elimination; returns the rank. Rows keep their length.
int eliminate(const Field& f, std::vector<Vec>& rows) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows[0].size();
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < cols && pivot_row < rows.size(); ++col) {
        std::size_t sel = pivot_row;
        while (sel < rows.size() && rows[sel][col] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[pivot_row], rows[sel]);
        const Scalar inv = f.inv(rows[pivot_row][col]);
        for (std::size_t c = col; c < cols; ++c)
            rows[pivot_row][c] = f.mul(rows[pivot_row][c], inv);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == pivot_row || rows[r][col] == 0) continue;
            const Scalar factor = rows[r][col];
            for (std::size_t c = col; c < cols; ++c)
                rows[r][c] = f.sub(rows[r][c], f.mul(factor, rows[pivot_row][c]));
        }
        ++pivot_row;
    }
    return static_cast<int>(pivot_row);
}

} // namespace

int rank_of(const Field& f, const std::vector<Vec>& vectors) {
    std::vector<Vec> rows = vectors;
    return eliminate(f, rows);
}

Subspace::Subspace(const Field& f, int ambient_dim) : field_(f), ambient_(ambient_dim) {}

Subspace Subspace::span(const Field& f, const std::vector<Vec>& generators, int ambient_dim) {
    Subspace s(f, ambient_dim);
    s.reduce(generators);
    return s;
}

void Subspace::reduce(std::vector<Vec> generators) {
    const int rank = eliminate(field_, generators);
    generators.resize(static_cast<std::size_t>(rank));
    basis_ = std::move(generators);
}

bool Subspace::contains(const Vec& v) const {
    Vec r = v;
    for (const Vec& b : basis_) {
        std::size_t pivot = 0;
        while (pivot < b.size() && b[pivot] == 0) ++pivot;
        if (pivot < r.size() && r[pivot] != 0) {
            const Scalar factor = r[pivot];
            for (std::size_t c = pivot; c < r.size(); ++c)
                r[c] = field_.sub(r[c], field_.mul(factor, b[c]));
        }
    }
    return std::all_of(r.begin(), r.end(), [](Scalar s) { return s == 0; });
}

bool Subspace::contains(const Subspace& other) const {
    return std::all_of(other.basis_.begin(), other.basis_.end(),
                       [this](const Vec& v) { return contains(v); });
}

Subspace Subspace::sum(const Subspace& other) const {
    std::vector<Vec> gens = basis_;
    gens.insert(gens.end(), other.basis_.begin(), other.basis_.end());
    return span(field_, gens, ambient_);
}

namespace {

// Basis of { x : row . x = 0 for every row }.
std::vector<Vec> null_space(const Field& f, std::vector<Vec> rows, std::size_t n) {
    eliminate(f, rows);
    std::vector<int> pivot_col;
    std::vector<char> is_pivot(n, 0);
    for (const Vec& r : rows) {
        std::size_t c = 0;
        while (c < n && r[c] == 0) ++c;
        if (c == n) break;
        pivot_col.push_back(static_cast<int>(c));
        is_pivot[c] = 1;
    }
    std::vector<Vec> basis;
    for (std::size_t free_col = 0; free_col < n; ++free_col) {
        if (is_pivot[free_col]) continue;
        Vec x(n, 0);
        x[free_col] = 1;
        for (std::size_t r = 0; r < pivot_col.size(); ++r)
            x[static_cast<std::size_t>(pivot_col[r])] = f.neg(rows[r][free_col]);
        basis.push_back(std::move(x));
    }
    return basis;
}

} // namespace

CombinationChoice pick_avoiding_combination(const Field& f, const std::vector<Vec>& generators,
                                            const std::vector<Subspace>& forbidden) {
    if (generators.empty()) fail(errc::exhausted, "empty generator list");
    const std::size_t len = generators[0].size();
    const std::size_t m = generators.size();
    const std::uint64_t q = f.size();

    // Membership in a subspace is equivalent to annihilating its null-space
    // functionals. Those dot products are linear in the coefficients, so
    // they update incrementally as the prefix digits step, and the last
    // digit solves in closed form: per subspace the rejected values of the
    // last digit are the intersection of one linear equation per
    // functional, which is empty, a single point, or everything.
    struct Checker {
        std::vector<std::vector<Scalar>> gen_dots; // per generator, dot with each functional
        std::vector<Scalar> prefix;                // dots of the running prefix combination
    };
    std::vector<Checker> checkers;
    for (const Subspace& sub : forbidden) {
        Checker ch;
        const std::vector<Vec> functionals = null_space(f, sub.basis(), len);
        ch.gen_dots.resize(m);
        for (std::size_t i = 0; i < m; ++i) {
            for (const Vec& y : functionals) {
                Scalar dot = 0;
                for (std::size_t c = 0; c < len; ++c)
                    dot = f.add(dot, f.mul(y[c], generators[i][c]));
                ch.gen_dots[i].push_back(dot);
            }
        }
        ch.prefix.assign(functionals.size(), 0);
        checkers.push_back(std::move(ch));
    }

    std::vector<Scalar> coeffs(m, 0); // first m-1 entries form the prefix
    Vec prefix_vec(len, 0);
    auto add_prefix_generator = [&](std::size_t i) {
        for (std::size_t c = 0; c < len; ++c)
            prefix_vec[c] = f.add(prefix_vec[c], generators[i][c]);
        for (Checker& ch : checkers)
            for (std::size_t l = 0; l < ch.prefix.size(); ++l)
                ch.prefix[l] = f.add(ch.prefix[l], ch.gen_dots[i][l]);
    };

    const std::size_t last = m - 1;
    std::vector<char> rejected(static_cast<std::size_t>(q), 0);
    bool first_prefix = true;
    while (true) {
        // admissible values of the last digit for the current prefix
        std::fill(rejected.begin(), rejected.end(), 0);
        bool prefix_dead = false;
        for (const Checker& ch : checkers) {
            // solve: for all functionals l, prefix_l + delta * gen_l == 0
            bool any_delta = true;   // solution set is everything so far
            bool no_delta = false;   // solution set is empty
            Scalar delta = 0;
            for (std::size_t l = 0; l < ch.prefix.size() && !no_delta; ++l) {
                const Scalar g = ch.gen_dots[last][l];
                if (g == 0) {
                    if (ch.prefix[l] != 0) no_delta = true;
                    continue;
                }
                const Scalar solution = f.div(f.neg(ch.prefix[l]), g);
                if (any_delta) {
                    any_delta = false;
                    delta = solution;
                } else if (delta != solution) {
                    no_delta = true;
                }
            }
            if (no_delta) continue;
            if (any_delta) { // the whole line lies inside this subspace
                prefix_dead = true;
                break;
            }
            rejected[static_cast<std::size_t>(delta)] = 1;
        }
        if (!prefix_dead) {
            for (std::uint64_t delta = first_prefix ? 1 : 0; delta < q; ++delta) {
                if (rejected[static_cast<std::size_t>(delta)]) continue;
                coeffs[last] = delta;
                Vec candidate = prefix_vec;
                for (std::size_t c = 0; c < len; ++c)
                    candidate[c] = f.add(candidate[c], f.mul(delta, generators[last][c]));
                return {std::move(candidate), coeffs};
            }
        }

        // advance the prefix odometer (digits 0..m-2, last varies fastest);
        // a wrap from q-1 to 0 is one more single-copy addition mod q
        first_prefix = false;
        bool advanced = false;
        std::size_t i = last;
        while (i-- > 0) {
            coeffs[i] = f.add(coeffs[i], 1);
            add_prefix_generator(i);
            if (coeffs[i] != 0) {
                advanced = true;
                break;
            }
        }
        if (!advanced) break; // every prefix exhausted (or m == 1)
    }
    fail(errc::exhausted, "every combination lies in a forbidden subspace");
}

Vec pick_avoiding(const Field& f, const Subspace& ambient,
                  const std::vector<Subspace>& forbidden) {
    return pick_avoiding_combination(f, ambient.basis(), forbidden).vector;
}

LinearSolution solve_row_system(const Field& f, const std::vector<Vec>& rows, const Vec& rhs) {
    const std::size_t m = rows.size();
    for (const Vec& r : rows)
        if (r.size() != rhs.size()) fail(errc::dimension_mismatch, "row/rhs length mismatch");

    // Transpose y*A = b into the column system A^T y^T = b^T and eliminate
    // the augmented matrix.
    const std::size_t eqs = rhs.size();
    std::vector<Vec> aug(eqs, Vec(m + 1, 0));
    for (std::size_t j = 0; j < eqs; ++j) {
        for (std::size_t i = 0; i < m; ++i) aug[j][i] = rows[i][j];
        aug[j][m] = rhs[j];
    }
    eliminate(f, aug);

    LinearSolution sol;
    std::vector<int> pivot_of_col(m, -1);
    for (std::size_t r = 0; r < aug.size(); ++r) {
        std::size_t c = 0;
        while (c < m + 1 && aug[r][c] == 0) ++c;
        if (c == m + 1) continue;          // zero row
        if (c == m) return sol;            // 0 = nonzero, inconsistent
        pivot_of_col[c] = static_cast<int>(r);
    }

    sol.consistent = true;
    sol.particular.assign(m, 0);
    for (std::size_t c = 0; c < m; ++c)
        if (pivot_of_col[c] >= 0) sol.particular[c] = aug[static_cast<std::size_t>(pivot_of_col[c])][m];

    for (std::size_t free_col = 0; free_col < m; ++free_col) {
        if (pivot_of_col[free_col] >= 0) continue;
        Vec basis(m, 0);
        basis[free_col] = 1;
        for (std::size_t c = 0; c < m; ++c) {
            if (pivot_of_col[c] < 0) continue;
            const Vec& prow = aug[static_cast<std::size_t>(pivot_of_col[c])];
            basis[c] = f.neg(prow[free_col]);
        }
        sol.null_basis.push_back(std::move(basis));
    }
    return sol;
}

} // namespace nec
