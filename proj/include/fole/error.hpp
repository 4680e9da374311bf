#pragma once

#include <stdexcept>
#include <string>

namespace fole {

enum class Errc {
  unknown_type,
  partial_map,
  domain_mismatch,
  invalid_infomorphism,
  endpoint_mismatch,
  carrier_mismatch,
  invalid_structure,
  invalid_morphism,
  invalid_endpoint,
  ill_typed_tuple,
  cardinality_limit,
  inconsistent_quads,
  not_unified_model,
  referential_violation,
  invalid_input,
  parse_error,
  validation_error,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& message);

}  // namespace fole
