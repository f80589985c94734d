#include "wittsupport/catalog.hpp"

namespace witt {

const std::vector<CatalogEntry>& family_catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    auto tensor = [](const char* name, Json lambda, const char* b, const char* variant) {
      return Json{{"family", "tensor"}, {"name", name}, {"n", 2}, {"lambda", lambda},
                  {"b", b},            {"variant", variant},     {"box", 5}};
    };
    auto verma = [](const char* name, Json G, Json beta, Json X, int K, int B) {
      return Json{{"family", "verma"}, {"name", name}, {"n", 2}, {"G", G},
                  {"beta", beta},      {"X", X},       {"K", K}, {"B", B}};
    };
    Json coset_x{{"type", "tensor"}, {"lambda", {"1/2", "1/3"}}, {"b", "1/2"}};
    Json formal_x{{"type", "tensor"}, {"lambda", "gamma"}, {"b", "0"}};
    return std::vector<CatalogEntry>{
        {tensor("dense-rational", {"1/2", "1/3"}, "2", "full"), "Dense"},
        {tensor("dense-formal", "gamma", "1/2", "full"), "Dense"},
        {tensor("dense-half-integral", {"1/3", "0"}, "0", "full"), "Dense"},
        {tensor("dense-integral", {"0", "0"}, "1/2", "full"), "Dense"},
        {tensor("dense-formal-b1", "gamma", "1", "full"), "Dense"},
        {tensor("punctured-quotient", {"0", "0"}, "0", "quotient_by_trivial"), "Punctured"},
        {tensor("punctured-quotient-shifted", {"2", "-1"}, "0", "quotient_by_trivial"), "Punctured"},
        {tensor("punctured-submodule", {"0", "0"}, "1", "punctured_submodule"), "Punctured"},
        {tensor("punctured-submodule-shifted", {"1", "1"}, "1", "punctured_submodule"), "Punctured"},
        {verma("verma-e2-e1", {{0, 1}}, {1, 0}, "trivial", 4, 4), "Cut"},
        {verma("verma-e1-e2", {{1, 0}}, {0, 1}, "trivial", 4, 4), "Cut"},
        {verma("verma-diagonal", {{1, 1}}, {1, 0}, "trivial", 5, 5), "Cut"},
        {verma("verma-e2-minus-e1", {{0, 1}}, {-1, 0}, "trivial", 4, 4), "Cut"},
        {verma("verma-coset-tensor", {{0, 1}}, {1, 0}, coset_x, 3, 3), "Cut"},
        {verma("verma-formal-level", {{1, 2}}, {0, 1}, formal_x, 3, 3), "Cut"},
    };
  }();
  return entries;
}

}  // namespace witt
