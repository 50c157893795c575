#include "qq/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace qq::quantum {
namespace {

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void require_wire(int wire) {
  if (wire != 0 && wire != 1) throw QuantumError("wire " + std::to_string(wire) + " out of range");
}

void require_qubits(int num_qubits) {
  if (num_qubits != 1 && num_qubits != 2)
    throw QuantumError("unsupported qubit count " + std::to_string(num_qubits));
}

}  // namespace

StateVector::StateVector(std::vector<Complex> amplitudes) : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() != 2 && amplitudes_.size() != 4)
    throw QuantumError("state must have 2 or 4 amplitudes, got " + std::to_string(amplitudes_.size()));
  if (!std::all_of(amplitudes_.begin(), amplitudes_.end(), finite))
    throw QuantumError("state has a non-finite amplitude");
  double sum = 0;
  for (const auto& a : amplitudes_) sum += std::norm(a);
  if (std::abs(sum - 1.0) > kInternalTolerance) {
    std::ostringstream msg;
    msg << "state is not normalized (sum |a|^2 = " << sum << ")";
    throw QuantumError(msg.str());
  }
}

StateVector StateVector::basis(int num_qubits, std::size_t index) {
  require_qubits(num_qubits);
  std::vector<Complex> amps(std::size_t{1} << num_qubits);
  if (index >= amps.size()) throw QuantumError("basis index out of range");
  amps[index] = 1.0;
  return StateVector(Unchecked{}, std::move(amps));
}

double StateVector::norm() const noexcept {
  double sum = 0;
  for (const auto& a : amplitudes_) sum += std::norm(a);
  return std::sqrt(sum);
}

StateVector StateVector::scaled(Complex phase) const {
  if (std::abs(std::abs(phase) - 1.0) > kInternalTolerance) throw QuantumError("phase must have unit modulus");
  std::vector<Complex> out(amplitudes_);
  for (auto& a : out) a *= phase;
  return StateVector(Unchecked{}, std::move(out));
}

UnitaryMatrix::UnitaryMatrix(int dim, std::vector<Complex> entries) : dim_(dim), entries_(std::move(entries)) {
  if (dim_ != 2 && dim_ != 4) throw QuantumError("matrix dimension must be 2 or 4");
  if (entries_.size() != static_cast<std::size_t>(dim_ * dim_))
    throw QuantumError("matrix needs " + std::to_string(dim_ * dim_) + " entries");
  if (!std::all_of(entries_.begin(), entries_.end(), finite)) throw QuantumError("matrix has a non-finite entry");
  if (unitarity_deviation() > kInternalTolerance) throw QuantumError("matrix is not unitary");
}

UnitaryMatrix UnitaryMatrix::identity(int dim) {
  if (dim != 2 && dim != 4) throw QuantumError("matrix dimension must be 2 or 4");
  std::vector<Complex> e(static_cast<std::size_t>(dim * dim));
  for (int i = 0; i < dim; ++i) e[static_cast<std::size_t>(i * dim + i)] = 1.0;
  return UnitaryMatrix(Unchecked{}, dim, std::move(e));
}

UnitaryMatrix UnitaryMatrix::adjoint() const {
  std::vector<Complex> e(entries_.size());
  for (int r = 0; r < dim_; ++r)
    for (int c = 0; c < dim_; ++c) e[static_cast<std::size_t>(c * dim_ + r)] = std::conj((*this)(r, c));
  return UnitaryMatrix(Unchecked{}, dim_, std::move(e));
}

UnitaryMatrix UnitaryMatrix::operator*(const UnitaryMatrix& rhs) const {
  if (dim_ != rhs.dim_) throw QuantumError("matrix dimension mismatch");
  std::vector<Complex> e(entries_.size());
  for (int r = 0; r < dim_; ++r)
    for (int c = 0; c < dim_; ++c) {
      Complex acc = 0;
      for (int k = 0; k < dim_; ++k) acc += (*this)(r, k) * rhs(k, c);
      e[static_cast<std::size_t>(r * dim_ + c)] = acc;
    }
  return UnitaryMatrix(Unchecked{}, dim_, std::move(e));
}

StateVector UnitaryMatrix::apply(const StateVector& state) const {
  if (static_cast<std::size_t>(dim_) != state.dim()) throw QuantumError("matrix/state dimension mismatch");
  std::vector<Complex> out(state.dim());
  for (int r = 0; r < dim_; ++r) {
    Complex acc = 0;
    for (int k = 0; k < dim_; ++k) acc += (*this)(r, k) * state.amplitudes_[static_cast<std::size_t>(k)];
    out[static_cast<std::size_t>(r)] = acc;
  }
  return StateVector(StateVector::Unchecked{}, std::move(out));
}

double UnitaryMatrix::unitarity_deviation() const {
  double worst = 0;
  for (int r = 0; r < dim_; ++r)
    for (int c = 0; c < dim_; ++c) {
      Complex acc = 0;
      for (int k = 0; k < dim_; ++k) acc += std::conj((*this)(k, r)) * (*this)(k, c);
      if (r == c) acc -= 1.0;
      worst = std::max(worst, std::abs(acc));
    }
  return worst;
}

UnitaryMatrix kron(const UnitaryMatrix& a, const UnitaryMatrix& b) {
  if (a.dim() != 2 || b.dim() != 2) throw QuantumError("kron supports 2x2 factors only");
  std::vector<Complex> e(16);
  for (int ar = 0; ar < 2; ++ar)
    for (int ac = 0; ac < 2; ++ac)
      for (int br = 0; br < 2; ++br)
        for (int bc = 0; bc < 2; ++bc)
          e[static_cast<std::size_t>((ar * 2 + br) * 4 + ac * 2 + bc)] = a(ar, ac) * b(br, bc);
  return UnitaryMatrix(UnitaryMatrix::Unchecked{}, 4, std::move(e));
}

double max_entry_diff(const UnitaryMatrix& a, const UnitaryMatrix& b) {
  if (a.dim() != b.dim()) throw QuantumError("matrix dimension mismatch");
  double worst = 0;
  for (std::size_t i = 0; i < a.entries().size(); ++i) worst = std::max(worst, std::abs(a.entries()[i] - b.entries()[i]));
  return worst;
}

double max_entry_diff(const StateVector& a, const StateVector& b) {
  if (a.dim() != b.dim()) throw QuantumError("state dimension mismatch");
  double worst = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

std::string_view gate_name(GateKind kind) noexcept {
  switch (kind) {
    case GateKind::X: return "X";
    case GateKind::Y: return "Y";
    case GateKind::Z: return "Z";
    case GateKind::H: return "H";
    case GateKind::S: return "S";
    case GateKind::CNOT: return "CNOT";
  }
  return "?";
}

std::optional<GateKind> parse_gate_kind(std::string_view name) noexcept {
  for (auto k : {GateKind::X, GateKind::Y, GateKind::Z, GateKind::H, GateKind::S, GateKind::CNOT})
    if (gate_name(k) == name) return k;
  return std::nullopt;
}

std::string Gate::to_string() const {
  if (kind == GateKind::CNOT) return "CNOT(" + std::to_string(control) + "->" + std::to_string(target) + ")";
  return std::string(gate_name(kind));
}

std::string Placement::to_string() const {
  if (gate.is_single_qubit() && wire) return gate.to_string() + "@" + std::to_string(*wire);
  return gate.to_string();
}

UnitaryMatrix gate_matrix(const Gate& gate, int num_qubits) {
  require_qubits(num_qubits);
  const Complex i{0, 1};
  const double r = 1.0 / std::numbers::sqrt2;
  switch (gate.kind) {
    case GateKind::X: return UnitaryMatrix(2, {0, 1, 1, 0});
    case GateKind::Y: return UnitaryMatrix(2, {0, -i, i, 0});
    case GateKind::Z: return UnitaryMatrix(2, {1, 0, 0, -1});
    case GateKind::H: return UnitaryMatrix(2, {r, r, r, -r});
    case GateKind::S: return UnitaryMatrix(2, {1, 0, 0, i});
    case GateKind::CNOT: {
      if (num_qubits != 2) throw QuantumError("CNOT requires two qubits");
      if (gate.control == gate.target || (gate.control != 0 && gate.control != 1) ||
          (gate.target != 0 && gate.target != 1))
        throw QuantumError("CNOT needs distinct control and target in {0,1}");
      std::vector<Complex> e(16);
      for (std::size_t col = 0; col < 4; ++col) {
        const std::size_t bits[2] = {col >> 1, col & 1};
        std::size_t out[2] = {bits[0], bits[1]};
        if (bits[gate.control]) out[gate.target] ^= 1;
        e[(out[0] * 2 + out[1]) * 4 + col] = 1.0;
      }
      return UnitaryMatrix(4, std::move(e));
    }
  }
  throw QuantumError("unknown gate");
}

UnitaryMatrix lift_single_qubit_gate(const Gate& gate, int wire) {
  if (!gate.is_single_qubit()) throw QuantumError("CNOT cannot be lifted");
  require_wire(wire);
  const auto g = gate_matrix(gate, 1);
  const auto id = UnitaryMatrix::identity(2);
  return wire == 0 ? kron(g, id) : kron(id, g);
}

UnitaryMatrix placement_matrix(const Placement& p, int num_qubits) {
  require_qubits(num_qubits);
  if (!p.gate.is_single_qubit()) {
    if (p.wire) throw QuantumError("CNOT does not take a wire");
    return gate_matrix(p.gate, num_qubits);
  }
  if (num_qubits == 1) {
    if (p.wire && *p.wire != 0) throw QuantumError("wire " + std::to_string(*p.wire) + " out of range");
    return gate_matrix(p.gate, 1);
  }
  if (!p.wire) throw QuantumError(std::string(gate_name(p.gate.kind)) + " on two qubits needs a wire");
  return lift_single_qubit_gate(p.gate, *p.wire);
}

StateVector apply_gate(const StateVector& state, const Gate& gate, std::optional<int> wire) {
  const int n = state.num_qubits();
  std::vector<Complex> amps(state.amplitudes().begin(), state.amplitudes().end());

  if (!gate.is_single_qubit()) {
    if (wire) throw QuantumError("CNOT does not take a wire");
    (void)gate_matrix(gate, n);  // validates qubit count and wiring
    const std::size_t control_bit = gate.control == 0 ? 2 : 1;
    const std::size_t target_bit = gate.target == 0 ? 2 : 1;
    for (std::size_t idx = 0; idx < 4; ++idx)
      if ((idx & control_bit) && !(idx & target_bit)) std::swap(amps[idx], amps[idx | target_bit]);
    return StateVector(std::move(amps));
  }

  int w = 0;
  if (n == 2) {
    if (!wire) throw QuantumError(std::string(gate_name(gate.kind)) + " on two qubits needs a wire");
    require_wire(*wire);
    w = *wire;
  } else if (wire && *wire != 0) {
    throw QuantumError("wire " + std::to_string(*wire) + " out of range");
  }

  const auto g = gate_matrix(gate, 1);
  const std::size_t bit = n == 1 ? 1 : (w == 0 ? 2 : 1);
  for (std::size_t idx = 0; idx < amps.size(); ++idx) {
    if (idx & bit) continue;
    const Complex a0 = amps[idx];
    const Complex a1 = amps[idx | bit];
    amps[idx] = g(0, 0) * a0 + g(0, 1) * a1;
    amps[idx | bit] = g(1, 0) * a0 + g(1, 1) * a1;
  }
  return StateVector(std::move(amps));
}

UnitaryMatrix compose_circuit(std::span<const Placement> gates, int num_qubits) {
  require_qubits(num_qubits);
  auto total = UnitaryMatrix::identity(1 << num_qubits);
  for (std::size_t i = 0; i < gates.size(); ++i) {
    try {
      total = placement_matrix(gates[i], num_qubits) * total;
    } catch (const QuantumError& e) {
      throw CircuitError(i, e.what());
    }
  }
  return total;
}

BlochPoint bloch_coordinates(const StateVector& state) {
  if (state.num_qubits() != 1) throw QuantumError("Bloch coordinates need a single-qubit state");
  const Complex a = state[0];
  const Complex b = state[1];
  const Complex cross = std::conj(a) * b;
  return {2 * cross.real(), 2 * cross.imag(), std::norm(a) - std::norm(b)};
}

std::vector<double> measurement_probabilities(const StateVector& state) {
  std::vector<double> p;
  p.reserve(state.dim());
  for (const auto& a : state.amplitudes()) p.push_back(std::norm(a));
  return p;
}

bool equal_up_to_global_phase(const StateVector& a, const StateVector& b, double tol) {
  if (a.dim() != b.dim()) throw QuantumError("state dimension mismatch");
  std::size_t k = 0;
  for (std::size_t i = 1; i < b.dim(); ++i)
    if (std::abs(b[i]) > std::abs(b[k])) k = i;
  const Complex overlap = std::conj(b[k]) * a[k];
  const Complex phase = std::abs(overlap) > 0 ? overlap / std::abs(overlap) : Complex{1, 0};
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (std::abs(a[i] - phase * b[i]) > tol) return false;
  return true;
}

std::string_view color_name(ColorTag tag) noexcept {
  switch (tag) {
    case ColorTag::Pink: return "pink";
    case ColorTag::Yellow: return "yellow";
    case ColorTag::Blue: return "blue";
    case ColorTag::Orange: return "orange";
    case ColorTag::Zero: return "zero";
  }
  return "?";
}

ColorClass classify_entry(Complex z, double tol) {
  const double re = z.real();
  const double im = z.imag();
  const auto real_tag = re > 0 ? ColorTag::Pink : ColorTag::Yellow;
  const auto imag_tag = im > 0 ? ColorTag::Blue : ColorTag::Orange;
  if (std::abs(z) <= tol) return {ColorTag::Zero, std::nullopt};
  const bool re_small = std::abs(re) <= tol;
  const bool im_small = std::abs(im) <= tol;
  if (re_small && im_small) return {std::abs(re) >= std::abs(im) ? real_tag : imag_tag, std::nullopt};
  if (im_small) return {real_tag, std::nullopt};
  if (re_small) return {imag_tag, std::nullopt};
  return {real_tag, imag_tag};
}

}  // namespace qq::quantum
