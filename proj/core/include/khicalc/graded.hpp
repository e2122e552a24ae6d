#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "khicalc/subspace.hpp"

namespace khicalc {

struct PieceKey {
    int z;
    int parity; // 0 or 1
    auto operator<=>(const PieceKey&) const = default;
};

// Finite direct sum of pieces indexed by (Z-grading, Z/2-parity). Flat
// coordinates are the pieces concatenated in increasing key order.
//
// The absolute parity is a stored convention: synthesized knot profiles put
// parity 0 on the generator in the top nonzero Z-grading. The curly-brace
// shift {1} of a space switches the two parities.
class GradedSpace {
  public:
    struct Piece {
        std::size_t dim = 0;
        std::vector<std::string> labels;
    };

    GradedSpace() = default;
    void add_piece(int z, int parity, std::size_t dim, std::vector<std::string> labels = {});

    std::size_t total_dim() const;
    std::size_t piece_dim(int z, int parity) const;
    std::size_t dim_at_z(int z) const;
    const std::map<PieceKey, Piece>& pieces() const { return pieces_; }
    bool operator==(const GradedSpace& o) const;

    // Flat offset of a piece in the concatenated coordinates.
    std::size_t offset(PieceKey k) const;
    std::vector<std::pair<PieceKey, std::size_t>> flat_layout() const;

    GradedSpace shifted(int j) const;      // piece at i of output = piece at i - j of input
    GradedSpace parity_flipped() const;    // the {1} operation
    int min_z() const;
    int max_z() const;

  private:
    std::map<PieceKey, Piece> pieces_;
};

GradedSpace shift(const GradedSpace& s, int j);

// Homogeneous map of graded spaces: every block sends piece (z, p) to piece
// (z + z_shift, p + parity_shift). Missing blocks are zero; a nonzero block
// whose target piece does not exist is a shape error.
class GradedMap {
  public:
    GradedMap(GradedSpace source, GradedSpace target, int z_shift, int parity_shift, Field field);

    void set_block(PieceKey from, Matrix block);
    Matrix block(PieceKey from) const; // zero matrix when absent

    const GradedSpace& source() const { return source_; }
    const GradedSpace& target() const { return target_; }
    int z_shift() const { return z_shift_; }
    int parity_shift() const { return parity_shift_; }
    Field field() const { return field_; }

    // Flattened matrix, target flat coords x source flat coords.
    Matrix total() const;

  private:
    GradedSpace source_, target_;
    int z_shift_, parity_shift_;
    Field field_;
    std::map<PieceKey, Matrix> blocks_;
};

// Non-homogeneous differentials are finite sums of homogeneous maps.
using MapSum = std::vector<GradedMap>;

// True iff the composite of the summed map with itself vanishes. All
// summands must be endomorphisms of one space.
bool verify_square_zero(const MapSum& d);

Matrix total_matrix(const MapSum& d);

// Chain complex: graded space plus a differential that squares to zero
// (checked at construction). The differential is kept flattened; the set of
// (z, parity) shifts realized by its nonzero blocks is recorded so homology
// can report graded refinements when they exist.
class Complex {
  public:
    Complex(GradedSpace space, const MapSum& differential);
    Complex(GradedSpace space, Matrix flat_differential);

    const GradedSpace& space() const { return space_; }
    const Matrix& differential() const { return d_; }
    Field field() const { return d_.field(); }

    struct Homology {
        std::size_t total = 0;
        // Per-piece dimensions, present when the differential is homogeneous.
        std::optional<GradedSpace> graded;
        // (even, odd) split, present when every block flips parity.
        std::optional<std::pair<std::size_t, std::size_t>> parity_split;
    };
    Homology homology() const;

  private:
    GradedSpace space_;
    Matrix d_;
    std::vector<std::pair<int, int>> shifts_; // distinct (dz, dp) with nonzero blocks
    void detect_shifts();
};

// Mapping cone of a chain map f between complexes. The underlying space is
// target ⊕ source{1}; flat coordinates are [target | source].
Complex mapping_cone(const Complex& source, const Complex& target, const GradedMap& f);
// Cone of a map of graded spaces viewed as complexes with zero differentials.
Complex mapping_cone(const GradedMap& f);

// a == unit * b for some nonzero scalar. Maps between projectively
// transitive systems are only pinned up to a unit; this is the comparison
// that ignores that ambiguity.
bool equal_up_to_unit(const Matrix& a, const Matrix& b);

} // namespace khicalc
