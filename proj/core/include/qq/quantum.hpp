#pragma once

// Complex linear algebra for one- and two-qubit systems.
//
// Basis order: for two qubits the left symbol is qubit 0, so amplitude
// index = 2*q0 + q1 and the amplitudes run |00>, |01>, |10>, |11>.

#include <array>
#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qq::quantum {

using Complex = std::complex<double>;

inline constexpr double kInternalTolerance = 1e-9;
inline constexpr double kPlayerTolerance = 1e-6;

class QuantumError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class StateVector {
 public:
  /// Throws QuantumError unless the amplitudes are finite, of length 2 or 4,
  /// and normalized within kInternalTolerance.
  explicit StateVector(std::vector<Complex> amplitudes);

  static StateVector basis(int num_qubits, std::size_t index);

  int num_qubits() const noexcept { return amplitudes_.size() == 2 ? 1 : 2; }
  std::size_t dim() const noexcept { return amplitudes_.size(); }
  std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }
  const Complex& operator[](std::size_t i) const { return amplitudes_.at(i); }

  double norm() const noexcept;
  StateVector scaled(Complex phase) const;

 private:
  struct Unchecked {};
  StateVector(Unchecked, std::vector<Complex> amplitudes) : amplitudes_(std::move(amplitudes)) {}

  std::vector<Complex> amplitudes_;

  friend class UnitaryMatrix;
};

class UnitaryMatrix {
 public:
  /// Row-major entries. Throws QuantumError unless dim is 2 or 4, entries are
  /// finite, and U^dagger U = I within kInternalTolerance.
  UnitaryMatrix(int dim, std::vector<Complex> entries);

  static UnitaryMatrix identity(int dim);

  int dim() const noexcept { return dim_; }
  const Complex& operator()(int row, int col) const { return entries_[static_cast<std::size_t>(row * dim_ + col)]; }
  std::span<const Complex> entries() const noexcept { return entries_; }

  UnitaryMatrix adjoint() const;
  UnitaryMatrix operator*(const UnitaryMatrix& rhs) const;
  StateVector apply(const StateVector& state) const;

  /// max |(U^dagger U - I)_ij|
  double unitarity_deviation() const;

  friend UnitaryMatrix kron(const UnitaryMatrix& a, const UnitaryMatrix& b);

 private:
  struct Unchecked {};
  UnitaryMatrix(Unchecked, int dim, std::vector<Complex> entries) : dim_(dim), entries_(std::move(entries)) {}

  int dim_;
  std::vector<Complex> entries_;
};

UnitaryMatrix kron(const UnitaryMatrix& a, const UnitaryMatrix& b);

/// max_ij |a_ij - b_ij|; throws on dimension mismatch.
double max_entry_diff(const UnitaryMatrix& a, const UnitaryMatrix& b);
/// max_k |a_k - b_k|; throws on dimension mismatch.
double max_entry_diff(const StateVector& a, const StateVector& b);

enum class GateKind { X, Y, Z, H, S, CNOT };

inline constexpr std::array<GateKind, 5> kSingleQubitGates{GateKind::X, GateKind::Y, GateKind::Z, GateKind::H,
                                                            GateKind::S};

std::string_view gate_name(GateKind kind) noexcept;
/// Accepts the upper-case gate names; returns nullopt otherwise.
std::optional<GateKind> parse_gate_kind(std::string_view name) noexcept;

struct Gate {
  GateKind kind = GateKind::X;
  int control = 0;  // CNOT only
  int target = 1;   // CNOT only

  static Gate single(GateKind kind) { return Gate{kind, 0, 1}; }
  static Gate cnot(int control, int target) { return Gate{GateKind::CNOT, control, target}; }

  bool is_single_qubit() const noexcept { return kind != GateKind::CNOT; }
  std::string to_string() const;

  friend bool operator==(const Gate&, const Gate&) = default;
};

/// One gate of a circuit plus the wire a single-qubit gate acts on.
/// On one qubit the wire may be omitted; CNOT never takes a wire.
struct Placement {
  Gate gate;
  std::optional<int> wire;

  std::string to_string() const;
  friend bool operator==(const Placement&, const Placement&) = default;
};

/// 2x2 for single-qubit kinds, 4x4 for CNOT.
UnitaryMatrix gate_matrix(const Gate& gate, int num_qubits);

/// G (x) I for wire 0, I (x) G for wire 1.
UnitaryMatrix lift_single_qubit_gate(const Gate& gate, int wire);

/// The full-width matrix of one placement on a num_qubits register.
UnitaryMatrix placement_matrix(const Placement& placement, int num_qubits);

/// Amplitude-level gate application; the input is left untouched.
StateVector apply_gate(const StateVector& state, const Gate& gate, std::optional<int> wire = std::nullopt);

class CircuitError : public QuantumError {
 public:
  CircuitError(std::size_t index, const std::string& what)
      : QuantumError("gate " + std::to_string(index) + ": " + what), index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

/// Product of the placements in application order; the first placement is
/// the rightmost factor. Empty circuit gives the identity.
UnitaryMatrix compose_circuit(std::span<const Placement> gates, int num_qubits);

struct BlochPoint {
  double x = 0;
  double y = 0;
  double z = 0;
};

BlochPoint bloch_coordinates(const StateVector& state);

std::vector<double> measurement_probabilities(const StateVector& state);

/// True iff some unit-modulus c gives max_k |a_k - c b_k| <= tol.
bool equal_up_to_global_phase(const StateVector& a, const StateVector& b, double tol);

enum class ColorTag { Pink, Yellow, Blue, Orange, Zero };

std::string_view color_name(ColorTag tag) noexcept;

struct ColorClass {
  ColorTag primary = ColorTag::Zero;
  std::optional<ColorTag> secondary;

  friend bool operator==(const ColorClass&, const ColorClass&) = default;
};

/// Pink = positive real, Yellow = negative real, Blue = positive imaginary,
/// Orange = negative imaginary. Mixed entries carry the real-part class as
/// primary and the imaginary-part class as secondary.
ColorClass classify_entry(Complex z, double tol = kInternalTolerance);

}  // namespace qq::quantum
