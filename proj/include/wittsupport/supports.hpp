#pragma once

#include "wittsupport/wmod.hpp"

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace witt {

/// Finite snapshot of a support. The domain is the key set of `dims`; `box` bounds it.
struct SupportWindow {
  Box box;
  std::map<LatticeVector, std::size_t> dims;
  std::set<LatticeVector> boundary;  // dimension may be understated here
  ScalarVector coset;
  std::optional<LatticeVector> zero_weight_offset;
  std::optional<HalfSpaceSpec> analytic_cut;

  std::size_t dim() const { return box.dim(); }
  bool contains(const LatticeVector& x) const { return dims.count(x) != 0; }
  bool supported(const LatticeVector& x) const;
  /// Unsupported offsets off the truncation boundary.
  std::vector<LatticeVector> complement() const;
  std::vector<LatticeVector> support() const;
};

/// Throws std::out_of_range when the box leaves the module's valid region.
SupportWindow support_window(const WeightModule& v, const std::optional<Box>& box = std::nullopt);

/// Offsets rewritten in the basis M (y with x = sum y_i rows[i]); cut data transformed along.
SupportWindow transform_window(const SupportWindow& w, const UnimodularBasis& m);
/// Offsets measured from `origin`.
SupportWindow rebase(const SupportWindow& w, const LatticeVector& origin);

enum class Verdict { Dense, Punctured, Cut, Unknown };
enum class Scope { Window, Analytic };
std::string to_string(Verdict v);
std::string to_string(Scope s);
Verdict parse_verdict(const std::string& s);
Scope parse_scope(const std::string& s);

struct Classification {
  Verdict verdict = Verdict::Unknown;
  std::optional<HalfSpaceSpec> cut;
  Scope scope = Scope::Window;
};

/// ceil(|domain| / 4).
std::size_t cut_margin(const SupportWindow& w);
/// All supported x satisfy a.(x - b) <= 0; with require_margin, at least cut_margin(w)
/// unsupported offsets have a.(x - b) > 0.
bool verify_cut(const SupportWindow& w, const HalfSpaceSpec& cut, bool require_margin);

std::optional<HalfSpaceSpec> cut_certificate(const SupportWindow& w);
Classification classify_support(const SupportWindow& w);

struct CheckResult {
  std::string name;
  bool pass = true;
  std::vector<LatticeVector> violations;
  std::size_t checked = 0;
};

CheckResult complement_convexity_check(const SupportWindow& w);
CheckResult upset_complement_check(const SupportWindow& w);

enum class RayKind { UpBounded, AllWindow, Irregular };
std::string to_string(RayKind k);

struct RayProfile {
  RayKind kind = RayKind::Irregular;
  std::int64_t m = 0;               // UpBounded only
  std::vector<std::int64_t> xs;     // window points mu + x alpha
  std::vector<bool> supported;
};

/// Throws std::invalid_argument when mu is unsupported, alpha is not in N^n \ {0}, or the ray
/// meets the window in fewer than 5 points.
RayProfile ray_profile(const SupportWindow& w, const LatticeVector& mu, const LatticeVector& alpha);

enum class MixedTag { Fin, Inf, BoundaryUndetermined };
std::string to_string(MixedTag t);

struct MixedSupport {
  Box box;
  std::int64_t radius_small = 0, radius_large = 0;
  std::map<LatticeVector, MixedTag> tags;
  std::map<LatticeVector, std::pair<std::size_t, std::size_t>> dims;  // at both radii
  std::optional<LatticeVector> zero_weight_offset;

  std::vector<LatticeVector> with_tag(MixedTag t) const;
};

using ModuleAtRadius = std::function<std::shared_ptr<WeightModule>(std::int64_t radius)>;

/// Offsets of `box` (default: the small-radius window) tagged by comparing two truncation radii.
MixedSupport mixed_refine(const ModuleAtRadius& build, std::int64_t r1, std::int64_t r2,
                          const std::optional<Box>& box = std::nullopt);

/// No inf-tagged offset lies in the convex hull of the finite-dimensional support, except the
/// zero weight.
CheckResult finsupp_convexity_check(const MixedSupport& m, const SupportWindow& w);

}  // namespace witt
