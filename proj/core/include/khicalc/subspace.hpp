#pragma once

#include "khicalc/matrix.hpp"

namespace khicalc {

// Linear subspace of k^n, stored as a basis in reduced column echelon form
// with lowest-index pivots. The canonical form makes subspace equality a
// literal matrix comparison.
class Subspace {
  public:
    static Subspace zero(Field f, std::size_t ambient);
    static Subspace full(Field f, std::size_t ambient);
    static Subspace span(const Matrix& columns);

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.cols(); }
    Field field() const { return basis_.field(); }
    const Matrix& basis() const { return basis_; }

    bool contains(const Matrix& vectors) const;
    bool contains(const Subspace& other) const;
    bool operator==(const Subspace& o) const;

    Subspace sum(const Subspace& o) const;
    Subspace intersect(const Subspace& o) const;

    // Complement of *this inside `within` w.r.t. the standard dot product in
    // the ambient basis. Throws NotContained when *this is not a subspace of
    // `within`, and DegeneratePairing if the pairing is degenerate on
    // `within` (possible over a prime field, never over the rationals).
    Subspace orthogonal_complement_in(const Subspace& within) const;

    // Some complement of *this inside `within`: the orthogonal one over the
    // rationals, a greedy echelon extension over a prime field.
    Subspace complement_in(const Subspace& within) const;

    // {v : m v in target}.
    static Subspace preimage(const Matrix& m, const Subspace& target);

    // Coordinates of contained vectors in this basis.
    Matrix coords(const Matrix& vectors) const;

  private:
    Subspace(std::size_t ambient, Matrix basis) : ambient_(ambient), basis_(std::move(basis)) {}
    std::size_t ambient_;
    Matrix basis_;
};

// Presentation of the quotient V/W for W <= V <= k^n: a chosen complement of
// W inside V whose columns represent the quotient classes.
class QuotientPres {
  public:
    QuotientPres(const Subspace& sub, const Subspace& space);

    std::size_t dim() const { return reps_.cols(); }
    const Matrix& reps() const { return reps_; }
    const Subspace& sub() const { return sub_; }
    const Subspace& space() const { return space_; }

    // Coordinates of [v] in the representative basis; v must lie in V.
    Matrix reduce(const Matrix& vectors) const;

  private:
    Subspace sub_, space_;
    Matrix reps_;
};

} // namespace khicalc
