#pragma once

#include <stdexcept>
#include <string>

namespace paulimc {

// Every failure the library can signal. CLI maps these to exit code 2
// (malformed input) or 1 (verification failure); see tools/paulimc_main.cpp.
enum class Errc {
  invalid_character,
  empty_string,
  length_mismatch,
  non_hermitian_product,
  overflow,
  too_large,
  index_out_of_range,
  unsupported_index_pattern,
  not_commuting,
  not_diagonalized,
  rank_deficiency,
  qubit_count_mismatch,
  insufficient_shots,
  non_positive_epsilon,
  not_a_refinement,
  too_many_qubits,
  parse_error,
  io_error,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& message);

}  // namespace paulimc
