#pragma once

#include <stdexcept>
#include <string>

namespace khicalc {

// Machine-readable failure conditions surfaced by the library. Anything not
// listed here (field mismatches, malformed internal state) is a logic_error.
enum class Errc {
    not_contained,
    dimension_mismatch,
    shape_mismatch,
    not_chain_map,
    not_subcomplex,
    lift_failure,
    not_convergent_case,
    invalid_profile,
    not_large_surgery,
    class_inconsistency,
    not_symmetrizable,
    unit_value_violation,
    not_genus_one,
    precondition_violated,
    invalid_case,
    bad_slope,
    unknown_knot,
    not_applicable,
    io_error,
    schema_error,
    degenerate_pairing,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code)
    {
    }
    Errc code() const { return code_; }

  private:
    Errc code_;
};

} // namespace khicalc
