#include "fole/error.hpp"

namespace fole {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::unknown_type: return "UnknownType";
    case Errc::partial_map: return "PartialMap";
    case Errc::domain_mismatch: return "DomainMismatch";
    case Errc::invalid_infomorphism: return "InvalidInfomorphism";
    case Errc::endpoint_mismatch: return "EndpointMismatch";
    case Errc::carrier_mismatch: return "CarrierMismatch";
    case Errc::invalid_structure: return "InvalidStructure";
    case Errc::invalid_morphism: return "InvalidMorphism";
    case Errc::invalid_endpoint: return "InvalidEndpoint";
    case Errc::ill_typed_tuple: return "IllTypedTuple";
    case Errc::cardinality_limit: return "CardinalityLimit";
    case Errc::inconsistent_quads: return "InconsistentQuads";
    case Errc::not_unified_model: return "NotUnifiedModel";
    case Errc::referential_violation: return "ReferentialViolation";
    case Errc::invalid_input: return "InvalidInput";
    case Errc::parse_error: return "ParseError";
    case Errc::validation_error: return "ValidationError";
  }
  return "Error";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

void fail(Errc code, const std::string& message) { throw Error(code, message); }

}  // namespace fole
