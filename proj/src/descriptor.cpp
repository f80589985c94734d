#include "wittsupport/descriptor.hpp"

namespace witt {

namespace {

const Json* field(const Json& j, std::initializer_list<const char*> names) {
  for (const char* k : names)
    if (j.contains(k)) return &j.at(k);
  return nullptr;
}

std::int64_t int_field(const Json& j, const char* name, std::int64_t fallback) {
  if (!j.contains(name)) return fallback;
  if (!j.at(name).is_number_integer()) throw DescriptorError(std::string("'") + name + "' must be an integer");
  return j.at(name).get<std::int64_t>();
}

/// lambda as a list, a broadcast scalar, or the formal shorthand "gamma".
ScalarVector lambda_from(const Json* j, std::size_t n) {
  if (!j) return ScalarVector(n);
  if (j->is_array()) {
    ScalarVector v = scalar_vector_from_json(*j);
    if (v.size() != n) throw DescriptorError("lambda has " + std::to_string(v.size()) + " entries, expected " + std::to_string(n));
    return v;
  }
  if (j->is_string()) {
    std::string s = j->get<std::string>();
    if (s == "γ" || s == "gamma") return formal_vector("γ", n);
  }
  return ScalarVector(n, scalar_from_json(*j));
}

std::size_t infer_rank(const Json& j) {
  if (j.contains("n")) {
    if (!j.at("n").is_number_integer() || j.at("n").get<std::int64_t>() < 1)
      throw DescriptorError("'n' must be a positive integer");
    return j.at("n").get<std::size_t>();
  }
  if (j.contains("beta") && j.at("beta").is_array()) return j.at("beta").size();
  if (const Json* l = field(j, {"lambda", "λ"}); l && l->is_array()) return l->size();
  return 2;
}

}  // namespace

FamilyDescriptor parse_descriptor(const Json& j) {
  if (!j.is_object()) throw DescriptorError("descriptor must be a JSON object");
  FamilyDescriptor d;
  try {
    if (!j.contains("family") || !j.at("family").is_string()) throw DescriptorError("descriptor needs a 'family' string");
    d.family = j.at("family").get<std::string>();
    d.n = infer_rank(j);
    d.name = j.value("name", std::string());
    if (j.contains("box")) {
      d.box = int_field(j, "box", 0);
      if (*d.box < 0) throw DescriptorError("'box' must be nonnegative");
    }
    if (d.family == "tensor") {
      d.tensor.lambda = lambda_from(field(j, {"lambda", "λ"}), d.n);
      d.tensor.b = j.contains("b") ? scalar_from_json(j.at("b")) : Scalar(0);
      d.tensor.variant = parse_tensor_variant(j.value("variant", std::string("full")));
      TensorModule check(d.tensor, d.box.value_or(6));
      d.tensor = check.params();
    } else if (d.family == "verma") {
      if (!j.contains("beta")) throw DescriptorError("verma descriptor needs 'beta'");
      d.verma.beta = lattice_from_json(j.at("beta"));
      if (d.verma.beta.size() != d.n) throw DescriptorError("'beta' must have n entries");
      if (j.contains("G"))
        for (const auto& g : j.at("G")) {
          LatticeVector v = lattice_from_json(g);
          if (!v.is_zero()) d.verma.G.push_back(v);
        }
      d.verma.K = int_field(j, "K", 4);
      d.verma.B = int_field(j, "B", d.n == 1 ? 0 : 4);
      const Json* x = field(j, {"X"});
      std::string kind = "trivial";
      const Json* xl = field(j, {"lambda", "λ"});
      Scalar b(0);
      if (x && x->is_string()) {
        kind = x->get<std::string>();
      } else if (x && x->is_object()) {
        kind = x->value("type", std::string("trivial"));
        if (const Json* l = field(*x, {"lambda", "λ"})) xl = l;
        if (x->contains("b")) b = scalar_from_json(x->at("b"));
      } else if (x) {
        throw DescriptorError("'X' must be \"trivial\", \"tensor\" or an object");
      }
      if (kind == "trivial") d.verma.X.kind = VermaXKind::Trivial;
      else if (kind == "tensor") d.verma.X.kind = VermaXKind::CosetTensor;
      else throw DescriptorError("unknown level module type '" + kind + "'");
      d.verma.X.lambda = lambda_from(xl, d.n);
      d.verma.X.b = b;
      TruncatedVerma check(d.verma);
      if (d.box) {
        Box cube = Box::cube(d.n, *d.box);
        for (const auto& x2 : cube.points())
          if (!check.valid_offset(x2))
            throw DescriptorError("box " + std::to_string(*d.box) + " exceeds the truncation at " + x2.to_string());
      }
    } else {
      throw DescriptorError("unknown family '" + d.family + "' (expected tensor or verma)");
    }
  } catch (const DescriptorError&) {
    throw;
  } catch (const std::exception& e) {
    throw DescriptorError(std::string("invalid descriptor: ") + e.what());
  }
  return d;
}

Json to_json(const FamilyDescriptor& d) {
  Json j;
  j["family"] = d.family;
  if (!d.name.empty()) j["name"] = d.name;
  j["n"] = d.n;
  if (d.family == "tensor") {
    j["lambda"] = to_json(d.tensor.lambda);
    j["b"] = d.tensor.b.to_string();
    j["variant"] = to_string(d.tensor.variant);
  } else {
    Json g = Json::array();
    for (const auto& v : d.verma.G) g.push_back(to_json(v));
    j["G"] = g;
    j["beta"] = to_json(d.verma.beta);
    Json x{{"type", d.verma.X.kind == VermaXKind::Trivial ? "trivial" : "tensor"},
           {"lambda", to_json(d.verma.X.lambda)}};
    if (d.verma.X.kind == VermaXKind::CosetTensor) x["b"] = d.verma.X.b.to_string();
    j["X"] = x;
    j["K"] = d.verma.K;
    j["B"] = d.verma.B;
  }
  if (d.box) j["box"] = *d.box;
  return j;
}

std::shared_ptr<WeightModule> build_module(const FamilyDescriptor& d) {
  if (d.family == "tensor") return build_tensor_module(d.tensor, d.box.value_or(6));
  return build_truncated_verma(d.verma);
}

Box scan_window(const FamilyDescriptor& d, const WeightModule& m) {
  if (d.box) return Box::cube(d.n, *d.box);
  return m.default_window();
}

ModuleAtRadius radius_builder(const FamilyDescriptor& d) {
  return [d](std::int64_t r) -> std::shared_ptr<WeightModule> {
    if (d.family == "tensor") return build_module(d);
    FamilyDescriptor e = d;
    e.verma.B = r;
    return build_module(e);
  };
}

MixedSupport mixed_refine(const FamilyDescriptor& d, std::int64_t r1, std::int64_t r2, const std::optional<Box>& box) {
  auto b = box;
  if (!b) {
    FamilyDescriptor small = d;
    if (d.family == "verma") small.verma.B = r1;
    auto m = build_module(small);
    b = scan_window(small, *m);
  }
  return mixed_refine(radius_builder(d), r1, r2, b);
}

}  // namespace witt
