#include "wittsupport/serialize.hpp"

#include <stdexcept>

namespace witt {

Json to_json(const LatticeVector& x) {
  Json j = Json::array();
  for (auto c : x) j.push_back(c);
  return j;
}

LatticeVector lattice_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected an integer array, got " + j.dump());
  LatticeVector x(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number_integer()) throw std::invalid_argument("expected an integer, got " + j[i].dump());
    x[i] = j[i].get<std::int64_t>();
  }
  return x;
}

Json to_json(const RationalVector& v) {
  Json j = Json::array();
  for (const auto& q : v) j.push_back(to_string(q));
  return j;
}

RationalVector rational_vector_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected a rational array, got " + j.dump());
  RationalVector v;
  for (const auto& e : j) {
    if (e.is_number_integer()) v.emplace_back(static_cast<long>(e.get<std::int64_t>()));
    else if (e.is_string()) v.push_back(parse_rational(e.get<std::string>()));
    else throw std::invalid_argument("expected a rational, got " + e.dump());
  }
  return v;
}

Scalar scalar_from_json(const Json& j) {
  if (j.is_number_integer()) return Scalar(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) return Scalar::parse(j.get<std::string>());
  throw std::invalid_argument("expected a scalar string or integer, got " + j.dump());
}

Json to_json(const ScalarVector& v) {
  Json j = Json::array();
  for (const auto& s : v) j.push_back(s.to_string());
  return j;
}

ScalarVector scalar_vector_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected a scalar array, got " + j.dump());
  ScalarVector v;
  for (const auto& e : j) v.push_back(scalar_from_json(e));
  return v;
}

Json to_json(const WittElement& x) {
  Json j = Json::array();
  for (const auto& [a, u] : x.terms()) j.push_back(Json{{"alpha", to_json(a)}, {"u", to_json(u)}});
  return j;
}

WittElement witt_from_json(const Json& j, std::size_t n) {
  if (!j.is_array()) throw std::invalid_argument("Witt element must be a list of terms");
  WittElement x(n);
  for (const auto& t : j) x.add_term(lattice_from_json(t.at("alpha")), scalar_vector_from_json(t.at("u")));
  return x;
}

Json to_json(const Matrix& m) {
  Json j = Json::array();
  for (const auto& row : m.to_strings()) j.push_back(row);
  return j;
}

Json to_json(const Box& b) { return Json{{"lo", to_json(b.lo)}, {"hi", to_json(b.hi)}}; }

Box box_from_json(const Json& j) {
  Box b{lattice_from_json(j.at("lo")), lattice_from_json(j.at("hi"))};
  require_same_dim(b.lo.size(), b.hi.size(), "box");
  return b;
}

Json to_json(const UnimodularBasis& m) {
  Json j = Json::array();
  for (const auto& r : m.rows()) j.push_back(to_json(r));
  return j;
}

UnimodularBasis basis_from_json(const Json& j) {
  std::vector<LatticeVector> rows;
  for (const auto& r : j) rows.push_back(lattice_from_json(r));
  return UnimodularBasis(std::move(rows));
}

Json to_json(const HalfSpaceSpec& h) { return Json{{"a", to_json(h.a)}, {"b", to_json(h.b)}}; }

HalfSpaceSpec halfspace_from_json(const Json& j) {
  return {rational_vector_from_json(j.at("a")), lattice_from_json(j.at("b"))};
}

Json to_json(const CheckResult& c) {
  Json v = Json::array();
  for (const auto& x : c.violations) v.push_back(to_json(x));
  return Json{{"name", c.name}, {"pass", c.pass}, {"checked", c.checked}, {"violations", v}};
}

CheckResult check_from_json(const Json& j) {
  CheckResult c;
  c.name = j.at("name").get<std::string>();
  c.pass = j.at("pass").get<bool>();
  c.checked = j.value("checked", std::size_t{0});
  for (const auto& v : j.at("violations")) c.violations.push_back(lattice_from_json(v));
  return c;
}

Json window_to_json(const SupportWindow& w) {
  Json dims = Json::array();
  for (const auto& [x, d] : w.dims)
    if (d > 0) dims.push_back(Json{{"offset", to_json(x)}, {"dim", d}});
  Json boundary = Json::array();
  for (const auto& x : w.boundary) boundary.push_back(to_json(x));
  Json j{{"box", to_json(w.box)},
         {"coset", to_json(w.coset)},
         {"zero_weight_offset", w.zero_weight_offset ? to_json(*w.zero_weight_offset) : Json(nullptr)},
         {"dims", dims},
         {"boundary", boundary}};
  return j;
}

SupportWindow window_from_json(const Json& j) {
  SupportWindow w;
  w.box = box_from_json(j.at("box"));
  for (const auto& x : w.box.points()) w.dims.emplace(x, 0);
  for (const auto& e : j.at("dims")) {
    LatticeVector x = lattice_from_json(e.at("offset"));
    auto it = w.dims.find(x);
    if (it == w.dims.end()) throw std::invalid_argument("window dims entry " + x.to_string() + " lies outside the box");
    it->second = e.at("dim").get<std::size_t>();
  }
  for (const auto& e : j.at("boundary")) w.boundary.insert(lattice_from_json(e));
  w.coset = scalar_vector_from_json(j.at("coset"));
  if (!j.at("zero_weight_offset").is_null()) w.zero_weight_offset = lattice_from_json(j.at("zero_weight_offset"));
  return w;
}

}  // namespace witt
