#pragma once

#include <map>

#include "khicalc/filtered.hpp"
#include "khicalc/subspace.hpp"

namespace khicalc {

// One page of the spectral sequence of an unrolled exact couple: per-s
// quotient presentations E_r^s = Z_r^s / B_r^s together with the page
// differential d_r^s : E_r^s -> E_r^{s+r}.
struct Page {
    int r = 1;
    std::map<int, QuotientPres> components; // s -> Z_r^s / B_r^s
    std::map<int, Matrix> d;                // s -> matrix of d_r^s

    std::size_t dim(int s) const
    {
        auto it = components.find(s);
        return it == components.end() ? 0 : it->second.dim();
    }
    std::size_t total_dim() const
    {
        std::size_t n = 0;
        for (const auto& [s, c] : components)
            n += c.dim();
        return n;
    }
};

struct ConvergenceReport {
    enum class Direction { upper, lower };
    Direction direction; // upper: limit at the top end, filtered by iterated kernels;
                         // lower: limit at the bottom end, filtered by iterated images
    std::map<int, std::size_t> graded_dims; // s -> dim F^s G / F^{s+1} G
    std::size_t total = 0;
};

// Unrolled exact couple bounded by [s1, s2]: spaces A^s and E^s with maps
//   i(s): A^{s+1} -> A^s,  j(s): A^s -> E^s,  k(s): E^s -> A^{s+1},
// each triangle exact (checked at construction). E^s vanishes outside
// [s1, s2]; A is stored on [s1-1, s2+1] and the constant tails beyond are
// represented by those boundary values.
class UnrolledCouple {
  public:
    struct unchecked_t {};
    static constexpr unchecked_t unchecked{};

    UnrolledCouple(int s1, int s2, Field field,
                   std::vector<std::size_t> a_dims, // A(s1-1) .. A(s2+1)
                   std::vector<std::size_t> e_dims, // E(s1) .. E(s2)
                   std::vector<Matrix> i_maps,      // i(s), s = s1-1 .. s2
                   std::vector<Matrix> j_maps,      // j(s), s = s1 .. s2
                   std::vector<Matrix> k_maps);     // k(s), s = s1 .. s2
    UnrolledCouple(unchecked_t, int s1, int s2, Field field, std::vector<std::size_t> a_dims,
                   std::vector<std::size_t> e_dims, std::vector<Matrix> i_maps,
                   std::vector<Matrix> j_maps, std::vector<Matrix> k_maps);

    // A^s = homology of F^s, E^s = homology of F^s/F^{s+1}, maps induced by
    // inclusion, projection and the connecting homomorphism.
    static UnrolledCouple from_filtered(const FilteredComplex& fc);

    int s1() const { return s1_; }
    int s2() const { return s2_; }
    Field field() const { return field_; }
    std::size_t a_dim(int s) const; // clamped to the stored boundary values
    std::size_t e_dim(int s) const; // zero outside [s1, s2]
    Matrix i_map(int s) const;      // identity beyond the stored range
    Matrix j_map(int s) const;
    Matrix k_map(int s) const;

    // iterated structure maps: i^{(r)}: A^s -> A^{s-r} (identity factors
    // beyond the boundary are skipped)
    Matrix iter_i(int r, int s) const;
    Subspace iter_kernel(int r, int s) const; // ker^r A^s
    Subspace iter_image(int r, int s) const;  // im^r A^s

    Subspace boundary_subgroup(int r, int s) const; // B_r^s = j(ker^{r-1} A^s)
    Subspace cycle_subgroup(int r, int s) const;    // Z_r^s = k^{-1}(im^{r-1} A^{s+1})

    // Page r >= 1 with differentials induced by j ∘ (i^{(r-1)})^{-1} ∘ k.
    // Well-definedness is asserted; a failing lift throws LiftFailure.
    Page page(int r) const;

    // Boardman convergence for the bounded couple; requires one vanishing
    // end (A^{s1} = 0 or A^{s2+1} = 0), else NotConvergentCase.
    ConvergenceReport converge() const;

  private:
    void validate() const;
    int s1_, s2_;
    Field field_;
    std::vector<std::size_t> a_dims_, e_dims_;
    std::vector<Matrix> i_, j_, k_;
};

} // namespace khicalc
