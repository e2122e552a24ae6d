#pragma once

#include <optional>

#include "khicalc/bent.hpp"
#include "khicalc/exact_couple.hpp"

namespace khicalc {

// Chain-complex fixture schema shared by the command-line tools:
//   {
//     "field":  "rational" | "prime:<p>",          (optional)
//     "q":      1,                                  (optional, default 1)
//     "genus":  1,                                  (optional)
//     "gradings": [ {"z": 1, "parity": 0, "dim": 1,
//                    "labels": ["x1"], "level": 1}, ... ],
//     "maps": [ {"name": "d_plus", "z_shift": 1, "parity_shift": 1,
//                "blocks": {"<from-z>": [["1", "0"], ...], ...}}, ... ]
//   }
// Matrix entries are rational strings ("p/q" or "n"; bare numbers are
// accepted on input). A block key is the source z, or "z:parity" when both
// parities occur at that z. "level" defaults to z and is the filtration
// level of every basis vector of the piece.
struct NamedGradedMap {
    std::string name;
    GradedMap map;
};

struct LoadedComplex {
    Field field = Field::rationals();
    GradedSpace space;
    std::vector<NamedGradedMap> maps;
    std::map<PieceKey, int> levels;
    std::uint32_t q = 1;
    std::optional<int> genus;
};

LoadedComplex load_complex_json(const std::string& text,
                                std::optional<Field> field_override = std::nullopt);

// Requires maps named d_plus and d_minus; genus defaults to the largest
// |z| carrying a nonzero piece.
KhiProfile profile_from_loaded(const LoadedComplex& lc);

// Total differential = sum of all maps; filtration levels per piece.
FilteredComplex filtered_from_loaded(const LoadedComplex& lc);

std::string profile_to_json(const KhiProfile& p, bool pretty = false);

// Couple fixture: {"field", "s1", "s2", "a_dims", "e_dims", "i", "j", "k"}
// with matrix lists indexed as in the UnrolledCouple constructor.
UnrolledCouple couple_from_json(const std::string& text,
                                std::optional<Field> field_override = std::nullopt);

} // namespace khicalc
