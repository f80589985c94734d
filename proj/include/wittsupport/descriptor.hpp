#pragma once

#include "wittsupport/serialize.hpp"
#include "wittsupport/supports.hpp"
#include "wittsupport/verma.hpp"

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>

namespace witt {

struct DescriptorError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Parsed module descriptor: {family, n, lambda, b, variant, box} for tensor families,
/// {family, n, G, beta, X, K, B, box} for truncated Verma modules.
struct FamilyDescriptor {
  std::string family;  // "tensor" or "verma"
  std::size_t n = 2;
  std::string name;
  TensorFamily tensor;
  VermaParams verma;
  std::optional<std::int64_t> box;  // cube radius of the scan window
};

/// Throws DescriptorError with a readable diagnostic.
FamilyDescriptor parse_descriptor(const Json& j);
/// Canonical form: every field explicit, scalars as strings.
Json to_json(const FamilyDescriptor& d);

std::shared_ptr<WeightModule> build_module(const FamilyDescriptor& d);
/// Scan window: the explicit cube when given, else the module's default window.
Box scan_window(const FamilyDescriptor& d, const WeightModule& m);
/// Rebuilds the family at another truncation radius (tensor families ignore it).
ModuleAtRadius radius_builder(const FamilyDescriptor& d);

MixedSupport mixed_refine(const FamilyDescriptor& d, std::int64_t r1, std::int64_t r2,
                          const std::optional<Box>& box = std::nullopt);

}  // namespace witt
