#pragma once

#include <string>

#include "torsionlab/ideal.hpp"
#include "torsionlab/ring.hpp"

namespace torsionlab {

/// Script text declaring `ring`, e.g. `ring R = vars X[0..2] rules { X0^2 -> 0 }`.
inline std::string ring_declaration(const std::string& name, const Ring& ring) {
  const auto& v = ring->var_name();
  std::string s = "ring " + name + " = vars " + v + "[0.." + std::to_string(ring->num_vars() - 1) + "]";
  if (ring->rules().empty()) return s;
  s += " rules { ";
  bool first = true;
  for (auto& r : ring->rules()) {
    if (!first) s += "; ";
    first = false;
    s += r.lhs.to_string(v) + " -> ";
    if (!r.rhs) {
      s += "0";
    } else {
      const auto& [c, m] = *r.rhs;
      if (m.is_one())
        s += rational_to_string(c);
      else if (c == 1)
        s += m.to_string(v);
      else
        s += rational_to_string(c) + "*" + m.to_string(v);
    }
  }
  return s + " }";
}

/// Script literal for the generators of `I`, e.g. `< X0*X1, X2 >`.
inline std::string ideal_literal(const IdealHandle& I) {
  auto gens = I.generators();
  if (gens.empty()) return "< >";
  std::string s = "< ";
  for (std::size_t k = 0; k < gens.size(); ++k) {
    if (k) s += ", ";
    s += gens[k].to_string();
  }
  return s + " >";
}

}  // namespace torsionlab
