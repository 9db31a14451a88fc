#pragma once

#include <array>
#include <optional>
#include <string>

#include "eprsim/pauli.hpp"

namespace eprsim {

/// The 3x3 two-qubit operator square
///
///     X1      X2      X1X2
///     Y2      Y1      Y1Y2
///     X1Y2    X2Y1    Z1Z2
///
/// (digit = particle slot of the tensor product; the identity fills the
/// other slot). Every row and every column is a mutually commuting context
/// and every entry is Hermitian with square I.
struct MerminSquare {
  std::array<std::array<OperatorMatrix, 3>, 3> ops;
  std::array<std::array<std::string, 3>, 3> labels;
};

MerminSquare build_square();

/// Result of checking all pairwise commutators inside the 6 contexts
/// (3 rows, 3 columns; 18 pairs total). Arithmetic is exact, so commuting
/// means bitwise-zero commutator matrices.
struct ContextReport {
  int pairs_checked = 0;
  bool all_commute = false;
};

/// Throws StructuralError naming the offending pair if any in-context
/// commutator is nonzero (that would indicate a construction bug).
ContextReport verify_contexts(const MerminSquare& sq);

/// Scalar s of each context's entry product (product == s * I, s = +-1),
/// multiplied in display order, plus the nine-fold totals: the three row
/// products multiply to +I and the three column products to -I.
struct ParityReport {
  std::array<int, 3> row_scalars{};
  std::array<int, 3> col_scalars{};
  int row_total = 0;
  int col_total = 0;

  /// Context order used everywhere: 0-2 rows, 3-5 columns.
  std::array<int, 6> context_scalars() const {
    return {row_scalars[0], row_scalars[1], row_scalars[2],
            col_scalars[0], col_scalars[1], col_scalars[2]};
  }
};

/// Throws StructuralError if any nine-fold product is not +-I.
ParityReport product_parity(const MerminSquare& sq);

/// The six single-particle observables a value assignment ranges over.
enum class Observable { x1, y1, z1, x2, y2, z2 };

/// values indexed by Observable, each +1 or -1.
struct Assignment {
  std::array<int, 6> values{};
};

/// Count assignments of +-1 to the six factors under the given per-context
/// scalars: a grid entry's value is the product of its factors' values, and
/// an assignment is consistent iff every context's three entry values
/// multiply to that context's scalar. 64 cases.
int count_consistent_factor_assignments(const std::array<int, 6>& context_scalars);

/// Entry-level variant: +-1 assigned to the nine entries directly,
/// consistency as above. 512 cases; cross-validates the factor search.
int count_consistent_entry_assignments(const std::array<int, 6>& context_scalars);

struct ContradictionCertificate {
  ParityReport parity;
  int assignments_enumerated = 0;  ///< 64
  int consistent_count = 0;        ///< 0: the contradiction
  int context_scalar_product = 0;  ///< product of the six context scalars: -1
  /// Each factor occurs an even number of times over the six contexts, so
  /// every assignment's six context value-products multiply to +1; the
  /// context scalars multiply to -1, so no assignment can match all six.
  bool parity_contradiction = false;
  std::optional<int> entry_level_consistent;  ///< 512-case search, if requested
};

/// Build the square, verify contexts, compute the parity scalars, and run
/// the exhaustive factor-assignment search (optionally also entry-level).
ContradictionCertificate exhaustive_assignment_search(bool include_entry_level = false);

}  // namespace eprsim
