#pragma once

#include <vector>

#include "nec/field.hpp"

namespace nec {

using Vec = std::vector<Scalar>;

/// Dimension of the span of `vectors` (all of equal length), by Gaussian
/// elimination over `f`.
int rank_of(const Field& f, const std::vector<Vec>& vectors);

/// A linear subspace of F^n stored as a reduced row-echelon basis, so equal
/// subspaces compare equal representation-wise.
class Subspace {
public:
    Subspace(const Field& f, int ambient_dim);
    static Subspace span(const Field& f, const std::vector<Vec>& generators, int ambient_dim);

    int dim() const { return static_cast<int>(basis_.size()); }
    int ambient_dim() const { return ambient_; }
    const std::vector<Vec>& basis() const { return basis_; }
    const Field& field() const { return field_; }

    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const;
    Subspace sum(const Subspace& other) const;

    bool operator==(const Subspace& other) const {
        return ambient_ == other.ambient_ && basis_ == other.basis_;
    }

private:
    Field field_;
    int ambient_;
    std::vector<Vec> basis_; // reduced echelon rows, pivot columns increasing

    void reduce(std::vector<Vec> generators);
};

/// First vector of `ambient` lying outside every subspace in `forbidden`.
/// Candidates are formed as coefficient combinations of the ambient basis,
/// enumerated in ascending lexicographic order from (0,...,0,1). Throws
/// Exhausted when the ambient space is covered by the forbidden union.
Vec pick_avoiding(const Field& f, const Subspace& ambient,
                  const std::vector<Subspace>& forbidden);

/// Like pick_avoiding but over an explicit (possibly dependent) generator
/// list; returns the chosen vector together with the coefficient tuple that
/// produced it.
struct CombinationChoice {
    Vec vector;
    std::vector<Scalar> coefficients; // one per generator
};
CombinationChoice pick_avoiding_combination(const Field& f, const std::vector<Vec>& generators,
                                            const std::vector<Subspace>& forbidden);

/// Solution set of the row system y * A = b, with A given by rows.
struct LinearSolution {
    bool consistent = false;
    Vec particular;              // one solution y, when consistent
    std::vector<Vec> null_basis; // basis of { y : y * A = 0 }
};
LinearSolution solve_row_system(const Field& f, const std::vector<Vec>& rows, const Vec& rhs);

} // namespace nec
