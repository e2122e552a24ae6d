#pragma once

#include <array>
#include <map>

#include "khicalc/graded.hpp"

namespace khicalc {

// Dimensions, parities and the two filtered differentials of an instanton
// knot homology group, graded by a Seifert surface. d_plus strictly raises
// the Z-grading, d_minus strictly lowers it, both flip the Z/2-parity and
// both square to zero. When the meridian class q exceeds 1, all blocks move
// within a single residue class mod q.
class KhiProfile {
  public:
    struct Piece {
        std::size_t dim = 0;
        int parity = 0;
        std::vector<std::string> labels;
    };

    KhiProfile(Field field, int genus, std::uint32_t q = 1);

    void set_piece(int z, std::size_t dim, int parity, std::vector<std::string> labels = {});
    void set_dplus_block(int from_z, int to_z, Matrix block);  // to_z > from_z
    void set_dminus_block(int from_z, int to_z, Matrix block); // to_z < from_z
    // Full invariant check; throws InvalidProfile. Called by consumers, and
    // idempotent, so profiles can be assembled freely first.
    void validate() const;

    Field field() const { return field_; }
    int genus() const { return genus_; }
    std::uint32_t q() const { return q_; }
    const std::map<int, Piece>& pieces() const { return pieces_; }
    std::size_t dim_at(int z) const;
    int parity_at(int z) const; // piece must exist
    std::size_t total_dim() const;
    int top_z() const;
    int bottom_z() const;
    const std::map<std::pair<int, int>, Matrix>& dplus_blocks() const { return dplus_; }
    const std::map<std::pair<int, int>, Matrix>& dminus_blocks() const { return dminus_; }

    // Whole-space flattened differentials (pieces ascending by grading).
    Matrix dplus_total() const;
    Matrix dminus_total() const;
    GradedSpace graded_space() const;

    // Gradings negated, blocks transposed and relocated accordingly.
    KhiProfile mirror() const;

  private:
    Matrix flatten(const std::map<std::pair<int, int>, Matrix>& blocks) const;
    Field field_;
    int genus_;
    std::uint32_t q_;
    std::map<int, Piece> pieces_;
    std::map<std::pair<int, int>, Matrix> dplus_, dminus_; // (from, to) -> block
};

enum class BentVariant { bent, dual_bent, half_plus, half_minus };

// Complex on the residue class of s: the pieces at gradings s + kq with a
// differential assembled from d_plus and d_minus blocks.
//
//  bent       A_s:   d_plus blocks leaving gradings >= s, d_minus blocks
//                    leaving gradings <= s (everything flows away from s);
//  dual bent  A_s^v: d_plus blocks landing at gradings <= s, d_minus blocks
//                    landing at gradings >= s (everything flows toward s);
//  half       B_s^+/-: all of d_plus resp. d_minus.
//
// Each rule yields a square-zero differential for any valid profile. The
// dual rule is pinned by duality: A_s^v is the dual complex of A_{-s} of the
// mirror profile, which duality_check verifies by an independent route.
struct BentComplex {
    int s = 0;
    BentVariant variant = BentVariant::bent;
    std::vector<int> gradings;        // class members, ascending
    std::vector<std::size_t> dims;    // per grading
    std::vector<std::size_t> offsets; // per grading, into flat coordinates
    Matrix d;

    std::size_t total_dim() const;
    std::size_t homology_dim() const { return total_dim() - 2 * d.rank(); }
};

BentComplex build_bent(const KhiProfile& p, int s);
BentComplex build_dual_bent(const KhiProfile& p, int s);
BentComplex build_half(const KhiProfile& p, int s, int sign); // sign = +1 or -1

// Projection A_s -> B_s^+ (keeps gradings >= s) or A_s -> B_s^- (keeps
// gradings <= s); the unique grading-wise 0/1 projections that are chain
// maps for the bent differential.
GradedMap projection(const KhiProfile& p, int s, int sign);

// Per-class dimensions of the large-surgery invariant: for |n| >= 2g+1 the
// class [s - s_min] has dimension dim H(A_{-s}) when n > 0 and
// dim H(A_{-s}^v) when n < 0, for s in [s_min, s_max]. The redundant values
// of s hitting one class must agree; disagreement is reported as
// ClassInconsistency. Requires q = 1.
struct SurgeryDimReport {
    long n = 0;
    int s_min = 0, s_max = 0;
    std::vector<std::size_t> class_dims; // index = class [s - s_min], |n| entries
    std::size_t total = 0;
};

SurgeryDimReport large_surgery_dims(const KhiProfile& p, long n);

// Zig-zag recognition on the residue class of s: a positive chain is
// generated by x_1..x_l, y_1..y_{l-1} in strictly decreasing single
// gradings, alternating x, y from the top, with d_plus(y_i) = unit * x_i,
// d_minus(y_i) = unit * x_{i+1} and every other block zero. A negative
// chain reverses the arrows.
bool is_positive_chain(const KhiProfile& p, int s_class);
bool is_negative_chain(const KhiProfile& p, int s_class);

// Every class simultaneously a positive and a negative chain; equivalently
// every class has total dimension one. Both characterizations are computed
// and must agree.
bool floer_simple_check(const KhiProfile& p);

struct DualityReport {
    struct Row {
        int s;
        std::size_t dual_dim;   // dim H(A_s^v) of p
        std::size_t mirror_dim; // dim H(A_{-s}) of mirror(p)
        bool equal;
    };
    std::vector<Row> rows;
    bool all_equal = true;
};

// dim H(A_s^v of p) = dim H(A_{-s} of mirror(p)) for every s in range.
DualityReport duality_check(const KhiProfile& p);

} // namespace khicalc
