#pragma once

#include "wittsupport/ghw.hpp"
#include "wittsupport/matrix.hpp"
#include "wittsupport/supports.hpp"
#include "wittsupport/witt.hpp"

#include <json.hpp>

namespace witt {

using Json = nlohmann::ordered_json;

Json to_json(const LatticeVector& x);
LatticeVector lattice_from_json(const Json& j);
Json to_json(const RationalVector& v);
RationalVector rational_vector_from_json(const Json& j);
/// Entries may be strings (parsed as Scalar expressions) or integers.
Scalar scalar_from_json(const Json& j);
Json to_json(const ScalarVector& v);
ScalarVector scalar_vector_from_json(const Json& j);
Json to_json(const WittElement& x);
WittElement witt_from_json(const Json& j, std::size_t n);
Json to_json(const Matrix& m);
Json to_json(const Box& b);
Box box_from_json(const Json& j);
Json to_json(const UnimodularBasis& m);
UnimodularBasis basis_from_json(const Json& j);
Json to_json(const HalfSpaceSpec& h);
HalfSpaceSpec halfspace_from_json(const Json& j);
Json to_json(const CheckResult& c);
CheckResult check_from_json(const Json& j);

/// Box, coset, zero weight, sparse nonzero dims and boundary offsets. The domain is the full box.
Json window_to_json(const SupportWindow& w);
SupportWindow window_from_json(const Json& j);

}  // namespace witt
