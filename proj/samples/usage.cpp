// Certifies the quaternionic Heisenberg subspace and prints the predicted filling exponents.

#include <iostream>

#include "carnot/carnot.hpp"

int main() {
  const auto entry = carnot::build_heisenberg_h(2);
  const auto& s = *entry.designated_subspace;

  const auto iso = carnot::is_isotropic(s);
  const auto reg = carnot::is_regular(s);
  std::cout << entry.id() << ": isotropic " << iso.isotropic << ", regular " << reg.regular << " (rank " << reg.rank
            << "/" << reg.required_rank << ")\n";

  const auto bundle = carnot::make_bundle(entry);
  for (const auto& b : carnot::predict_filling(bundle)) {
    if (!b.exponent) continue;
    std::cout << "F^" << b.m << ' ' << carnot::relation_symbol(b.relation) << " l^" << carnot::to_string(*b.exponent)
              << "  (" << b.source << ")\n";
  }
}
