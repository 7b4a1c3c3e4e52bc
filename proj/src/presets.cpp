#include "spectral/presets.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace spectral {

namespace {

std::string lowered(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

QPoly zpoly(const std::vector<long>& ascending) {
  std::vector<Rational> c(ascending.begin(), ascending.end());
  return QPoly(std::move(c));
}

std::string canonical_component(const std::string& ref) {
  const std::string r = lowered(ref);
  if (r == "4_1" || r == "41" || r == "fig8" || r == "15a8") return "4_1";
  if (r == "l2r" || r == "14a4") return "l2r";
  return "";
}

}  // namespace

const std::vector<std::string>& component_preset_names() {
  static const std::vector<std::string> names = {"4_1", "l2r"};
  return names;
}

bool has_component_preset(const std::string& ref) {
  return !canonical_component(ref).empty();
}

APolyComponent component_preset(const std::string& ref) {
  const std::string name = canonical_component(ref);
  APolyComponent comp;
  comp.torsion = 1;  // {m, l} is 2-torsion on both geometric components
  if (name == "4_1") {
    comp.a = zpoly({0, 0, 1});
    comp.b = zpoly({-1, 1, 2, 1, -1});
    comp.c = zpoly({0, 0, 1});
    comp.label = "4_1";
    return comp;
  }
  if (name == "l2r") {
    comp.a = zpoly({0, 0, 1});
    comp.b = zpoly({-1, 2, 2, -1});
    comp.c = zpoly({0, 1});
    comp.label = "l2r";
    return comp;
  }
  throw std::out_of_range("component_preset: unknown preset \"" + ref + "\"");
}

const std::vector<JacobianPreset>& jacobian_presets() {
  static const std::vector<JacobianPreset> table = [] {
    std::vector<JacobianPreset> t;
    t.push_back({"15a8", "4_1", Rational(-1, 12), Rational(161, 216),
                 std::nullopt});
    t.push_back({"14a4", "l2r", Rational(-25, 12), Rational(253, 216),
                 std::nullopt});
    t.push_back({"19a3", "9_35", Rational(8, 3), Rational(-1, 27),
                 ImaginaryCubicSurd{2, 6, 1, 257, 3, 57, 4}});
    t.push_back({"11a3", "9_48", Rational(-4, 3), Rational(19, 27),
                 ImaginaryCubicSurd{1, 3, -1, 329, 57, 33, 2}});
    t.push_back({"43a1", "10_139", Rational(-4, 3), Rational(35, 27),
                 ImaginaryCubicSurd{1, 3, -1, 1193, 105, 129, 2}});
    return t;
  }();
  return table;
}

const JacobianPreset* find_jacobian_preset(const std::string& label) {
  const std::string key = lowered(label);
  for (const JacobianPreset& p : jacobian_presets())
    if (p.label == key) return &p;
  return nullptr;
}

}  // namespace spectral
