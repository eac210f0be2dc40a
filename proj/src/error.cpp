#include "paulimc/error.hpp"

namespace paulimc {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::invalid_character: return "InvalidCharacter";
    case Errc::empty_string: return "EmptyString";
    case Errc::length_mismatch: return "LengthMismatch";
    case Errc::non_hermitian_product: return "NonHermitianProduct";
    case Errc::overflow: return "Overflow";
    case Errc::too_large: return "TooLarge";
    case Errc::index_out_of_range: return "IndexOutOfRange";
    case Errc::unsupported_index_pattern: return "UnsupportedIndexPattern";
    case Errc::not_commuting: return "NotCommuting";
    case Errc::not_diagonalized: return "NotDiagonalized";
    case Errc::rank_deficiency: return "RankDeficiency";
    case Errc::qubit_count_mismatch: return "QubitCountMismatch";
    case Errc::insufficient_shots: return "InsufficientShots";
    case Errc::non_positive_epsilon: return "NonPositiveEpsilon";
    case Errc::not_a_refinement: return "NotARefinement";
    case Errc::too_many_qubits: return "TooManyQubits";
    case Errc::parse_error: return "ParseError";
    case Errc::io_error: return "IoError";
  }
  return "UnknownError";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message),
      code_(code) {}

void fail(Errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace paulimc
