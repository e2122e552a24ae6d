#pragma once

#include "khicalc/exact_couple.hpp"

namespace khicalc {

// A bounded spectral sequence lifted back to a filtered chain complex on
// E = ⊕_s E^s: the page differentials d_r are lifted to endomorphisms
// d_r' = I ∘ d_r ∘ P of E through a splitting of E by iterated complements,
// and d = Σ_r d_r' is a differential whose induced spectral sequence is the
// original one. The splitting, hence the lift, depends on the chosen basis.
struct LiftedComplex {
    FilteredComplex complex;            // underlying (E, d) with level s on the E^s block
    std::vector<Matrix> lifted;         // d_r' for r = 1 .. s2-s1
    std::map<int, std::size_t> blocks;  // s -> dim E^s
    std::size_t homology_dim() const { return complex.homology_dim(); }
};

LiftedComplex lift(const UnrolledCouple& couple);

struct RoundtripReport {
    bool ok = true;
    std::vector<std::string> mismatches; // human-readable (r, s) discrepancies
};

// Lift the couple, re-derive the spectral sequence from the filtration on
// the lifted complex, and compare every page's per-s dimensions.
RoundtripReport roundtrip_check(const UnrolledCouple& couple);

} // namespace khicalc
