#include "marf/moduli.hpp"

#include "marf/error.hpp"

namespace marf {

int teich_dimension(const Signature& sig) { return 6 * sig.genus - 6 + 2 * sig.r(); }

ComponentReport components(const Signature& sig, int m, bool brute_force, std::uint64_t budget) {
  validate(sig);
  validate_level(m);
  if (!is_hyperbolic(sig)) throw Error(ErrorCode::NotHyperbolic, sig.to_string());

  ComponentReport report{m, sig, {}};
  const auto types = admissible_types(sig, m);
  for (const auto& t : types) {
    Component c;
    c.delta = t.delta;
    c.teich_dimension = teich_dimension(sig);
    c.normal_form = normal_form_tuple(sig, m, t.delta);
    c.representative = c.normal_form;
    report.components.push_back(std::move(c));
  }
  if (!brute_force || types.empty()) return report;

  const auto orbits = classify_orbits(sig, m, budget);
  if (orbits.size() != report.components.size()) {
    throw Error(ErrorCode::ClassificationMismatch, "orbit count differs from admissible type count");
  }
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    auto& c = report.components[i];
    if (orbits[i].type.delta != c.delta) {
      throw Error(ErrorCode::ClassificationMismatch, "orbit and type lists disagree");
    }
    c.orbit_size = orbits[i].size;
    c.representative = orbits[i].representative;
    total += orbits[i].size;
  }
  if (total != count_arf_functions(sig, m)) {
    throw Error(ErrorCode::ClassificationMismatch, "orbit sizes do not sum to m^{2g}");
  }
  return report;
}

}  // namespace marf
