#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "torsionlab/torsionlab.hpp"

namespace support {

using namespace torsionlab;

inline oracle::Ideal to_oracle(const IdealHandle& I) {
  return oracle::make(I.ring()->num_vars(), I.monomial_generators(), I.ring()->rule_lhs());
}

inline oracle::MonoSet lifted(const IdealHandle& I) {
  return oracle::MonoSet(I.lifted_generators().begin(), I.lifted_generators().end());
}

inline oracle::PrimeSet to_oracle(const PrimeSet& s) {
  oracle::PrimeSet out;
  for (auto& p : s) out.insert(p.vars);
  return out;
}

inline IdealHandle monomial_ideal(const Ring& R, std::vector<std::vector<Exponent>> dense) {
  std::vector<Monomial> gens;
  for (auto& d : dense) gens.push_back(Monomial::from_dense(d));
  return IdealHandle::from_monomials(R, gens);
}

/// Total degree of the lcm of the lifted generators.
inline std::size_t lcm_degree(const IdealHandle& I) {
  Monomial l;
  for (auto& g : I.lifted_generators()) l = lcm(l, g);
  return static_cast<std::size_t>(l.degree());
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline std::string script_path(const std::string& name) { return std::string(TORSIONLAB_SCRIPT_DIR) + "/" + name; }

inline std::vector<std::string> shipped_scripts() {
  return {"fairness.tl", "harness.tl", "idem50C.tl", "nil40A.tl", "nil40D.tl"};
}

}  // namespace support
