#include <iostream>

#include "qq/quantum.hpp"

int main() {
  using namespace qq::quantum;
  const auto s = apply_gate(StateVector::basis(1, 0), Gate::single(GateKind::X));
  std::cout << bloch_coordinates(s).z << "\n";
  return bloch_coordinates(s).z < -0.5 ? 0 : 1;
}
