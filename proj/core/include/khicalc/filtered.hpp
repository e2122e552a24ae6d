#pragma once

#include <vector>

#include "khicalc/graded.hpp"

namespace khicalc {

// Chain complex with a bounded descending filtration F^s: each basis vector
// carries an integer level, F^s is spanned by the vectors of level >= s, and
// the differential may only raise (or keep) levels.
class FilteredComplex {
  public:
    FilteredComplex(Matrix differential, std::vector<int> levels);

    std::size_t dim() const { return levels_.size(); }
    const Matrix& differential() const { return d_; }
    Field field() const { return d_.field(); }
    int level(std::size_t i) const { return levels_[i]; }
    const std::vector<int>& levels() const { return levels_; }
    int min_level() const;
    int max_level() const;

    // indices with level >= s, ascending
    std::vector<std::size_t> filtration_indices(int s) const;

    // dim ker - dim im of the total differential: the brute-force oracle the
    // spectral-sequence machinery is checked against.
    std::size_t homology_dim() const;

  private:
    Matrix d_;
    std::vector<int> levels_;
};

} // namespace khicalc
