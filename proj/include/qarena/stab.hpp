#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qarena/circuit.hpp"
#include "qarena/witness.hpp"

namespace qarena {

/// Z-only Pauli string with its sign: sign * prod_{i in z_mask} Z_i.
struct PauliZString {
  std::uint32_t z_mask = 0;
  int sign = +1;
  friend bool operator==(const PauliZString&, const PauliZString&) = default;
};

/// Hermitian Pauli as sign * tensor of {I, X, Y, Z}; qubit q is Y when both
/// x and z bits are set.
struct PauliRow {
  std::uint32_t x = 0;
  std::uint32_t z = 0;
  int sign = +1;
  friend bool operator==(const PauliRow&, const PauliRow&) = default;
};

/// Conjugates the row by a named Clifford gate (H, S, CNOT, X, Z).
void conjugate_row(PauliRow& row, const Gate& g);

/// Product a * b for commuting Pauli rows; phases are accumulated mod 4 and
/// must come out real.
PauliRow multiply_rows(const PauliRow& a, const PauliRow& b);

bool rows_commute(const PauliRow& a, const PauliRow& b);

/// Generator matrix of the stabilizer group of C|0...0> for a Clifford C.
class StabTableau {
 public:
  explicit StabTableau(int width);  // rows +Z_i

  int width() const { return width_; }
  const std::vector<PauliRow>& rows() const { return rows_; }

  void apply(const Gate& g);

  /// Generators pairwise commute and are independent over F2.
  bool check_invariants() const;

 private:
  int width_;
  std::vector<PauliRow> rows_;
};

/// Tableau of C|0...0> for a named-Clifford gate sequence.
StabTableau tableau_from_clifford(const std::vector<Gate>& gates, int width);

enum class CliffordSampling {
  kUniformSweep,  // exactly uniform over the Clifford group
  kRandomWalk,    // long random {H, S, CNOT} word (fallback ensemble)
};

/// Gate sequence of a random n-qubit Clifford, deterministic in the seed.
///
/// The uniform sampler draws, block by block, a uniformly random pair of
/// anticommuting signed Paulis on the remaining qubits and emits the gates
/// that sweep the pair onto (+X_i, +Z_i); the composite word is exactly
/// uniformly distributed.
std::vector<Gate> random_clifford(int n, std::uint64_t seed,
                                  CliffordSampling method = CliffordSampling::kUniformSweep);

/// Nonzero Z-only element of the stabilizer group with its sign, when one
/// exists. Kernel vectors of the generators' X-block (found by F2 Gaussian
/// elimination) give the generator combinations with vanishing X part; among
/// the spanned Z-strings the one with the smallest z_mask is returned so the
/// output is deterministic.
std::optional<PauliZString> find_z_string(const StabTableau& t);

/// Binary witness f = (I + sign * P)/2, i.e.
/// f(x) = (1 + sign * (-1)^<z_mask, x>) / 2. When P stabilizes the output
/// state the witness separates it from uniform by exactly 1/2.
Witness z_string_witness(int width, const PauliZString& p);

}  // namespace qarena
