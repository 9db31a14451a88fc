#include "eprsim/mermin_square.hpp"

#include <string>
#include <utility>
#include <vector>

#include "eprsim/errors.hpp"

namespace eprsim {

namespace {

// Factor decomposition of each grid entry over the six single-particle
// observables, indexed by Observable.
constexpr int kX1 = 0, kY1 = 1, kZ1 = 2, kX2 = 3, kY2 = 4, kZ2 = 5;

const std::array<std::array<std::vector<int>, 3>, 3>& entry_factors() {
  static const std::array<std::array<std::vector<int>, 3>, 3> table{{
      {{{kX1}, {kX2}, {kX1, kX2}}},
      {{{kY2}, {kY1}, {kY1, kY2}}},
      {{{kX1, kY2}, {kX2, kY1}, {kZ1, kZ2}}},
  }};
  return table;
}

// Contexts 0-2 are rows, 3-5 are columns; each lists its three entries.
std::array<std::array<std::pair<int, int>, 3>, 6> context_entries() {
  std::array<std::array<std::pair<int, int>, 3>, 6> out{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      out[i][j] = {i, j};      // row i
      out[3 + j][i] = {i, j};  // column j
    }
  return out;
}

int entry_value(const Assignment& asg, int r, int c) {
  int v = 1;
  for (int factor : entry_factors()[r][c]) v *= asg.values[factor];
  return v;
}

int scalar_of_product(const OperatorMatrix& product, const std::string& what) {
  const auto s = identity_scalar(product);
  if (!s || s->im != 0 || (s->re != 1 && s->re != -1))
    throw StructuralError(what + ": product is not +-identity");
  return static_cast<int>(s->re);
}

}  // namespace

MerminSquare build_square() {
  const Mat2 i2 = Mat2::identity();
  const Mat2 x = pauli_x(), y = pauli_y(), z = pauli_z();
  MerminSquare sq;
  sq.ops = {{
      {kron(x, i2), kron(i2, x), kron(x, x)},
      {kron(i2, y), kron(y, i2), kron(y, y)},
      {kron(x, y), kron(y, x), kron(z, z)},
  }};
  sq.labels = {{
      {"X1", "X2", "X1X2"},
      {"Y2", "Y1", "Y1Y2"},
      {"X1Y2", "X2Y1", "Z1Z2"},
  }};
  return sq;
}

ContextReport verify_contexts(const MerminSquare& sq) {
  ContextReport report;
  const auto contexts = context_entries();
  for (int ctx = 0; ctx < 6; ++ctx) {
    const auto& entries = contexts[ctx];
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) {
        const auto& [r1, c1] = entries[i];
        const auto& [r2, c2] = entries[j];
        if (!commutator(sq.ops[r1][c1], sq.ops[r2][c2]).is_zero())
          throw StructuralError("context " + std::to_string(ctx) + ": " +
                                sq.labels[r1][c1] + " and " + sq.labels[r2][c2] +
                                " do not commute");
        ++report.pairs_checked;
      }
  }
  report.all_commute = true;
  return report;
}

ParityReport product_parity(const MerminSquare& sq) {
  ParityReport report;
  OperatorMatrix row_total = OperatorMatrix::identity();
  OperatorMatrix col_total = OperatorMatrix::identity();
  for (int i = 0; i < 3; ++i) {
    const OperatorMatrix row = sq.ops[i][0] * sq.ops[i][1] * sq.ops[i][2];
    const OperatorMatrix col = sq.ops[0][i] * sq.ops[1][i] * sq.ops[2][i];
    report.row_scalars[i] = scalar_of_product(row, "row " + std::to_string(i));
    report.col_scalars[i] = scalar_of_product(col, "column " + std::to_string(i));
    row_total = row_total * row;
    col_total = col_total * col;
  }
  report.row_total = scalar_of_product(row_total, "row-wise total");
  report.col_total = scalar_of_product(col_total, "column-wise total");
  return report;
}

int count_consistent_factor_assignments(const std::array<int, 6>& context_scalars) {
  const auto contexts = context_entries();
  int consistent = 0;
  for (int mask = 0; mask < 64; ++mask) {
    Assignment asg;
    for (int i = 0; i < 6; ++i) asg.values[i] = (mask >> i) & 1 ? -1 : +1;
    bool ok = true;
    for (int ctx = 0; ctx < 6 && ok; ++ctx) {
      int prod = 1;
      for (const auto& [r, c] : contexts[ctx]) prod *= entry_value(asg, r, c);
      ok = prod == context_scalars[ctx];
    }
    if (ok) ++consistent;
  }
  return consistent;
}

int count_consistent_entry_assignments(const std::array<int, 6>& context_scalars) {
  const auto contexts = context_entries();
  int consistent = 0;
  for (int mask = 0; mask < 512; ++mask) {
    int values[3][3];
    for (int k = 0; k < 9; ++k) values[k / 3][k % 3] = (mask >> k) & 1 ? -1 : +1;
    bool ok = true;
    for (int ctx = 0; ctx < 6 && ok; ++ctx) {
      int prod = 1;
      for (const auto& [r, c] : contexts[ctx]) prod *= values[r][c];
      ok = prod == context_scalars[ctx];
    }
    if (ok) ++consistent;
  }
  return consistent;
}

ContradictionCertificate exhaustive_assignment_search(bool include_entry_level) {
  const MerminSquare sq = build_square();
  verify_contexts(sq);

  ContradictionCertificate cert;
  cert.parity = product_parity(sq);
  const auto scalars = cert.parity.context_scalars();
  cert.assignments_enumerated = 64;
  cert.consistent_count = count_consistent_factor_assignments(scalars);
  cert.context_scalar_product = 1;
  for (int s : scalars) cert.context_scalar_product *= s;
  // Each entry sits in exactly one row and one column context, so any
  // assignment's six context products multiply to +1 (every entry value
  // squared); a -1 scalar product therefore rules all of them out.
  cert.parity_contradiction = cert.context_scalar_product == -1;
  if (include_entry_level)
    cert.entry_level_consistent = count_consistent_entry_assignments(scalars);
  return cert;
}

}  // namespace eprsim
