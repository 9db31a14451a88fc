#include <doctest.h>

#include <algorithm>
#include <array>
#include <complex>
#include <set>

#include "eprsim/mermin_square.hpp"
#include "eprsim/pauli.hpp"

using namespace eprsim;

namespace {

// Independent floating-point oracle for the exact integer arithmetic: the
// same products computed with std::complex matrices.
using CMat = std::array<std::array<std::complex<double>, 4>, 4>;

CMat to_complex(const OperatorMatrix& m) {
  CMat out{};
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      out[r][c] = {static_cast<double>(m.at(r, c).re), static_cast<double>(m.at(r, c).im)};
  return out;
}

CMat mul(const CMat& a, const CMat& b) {
  CMat out{};
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      for (int k = 0; k < 4; ++k) out[r][c] += a[r][k] * b[k][c];
  return out;
}

double identity_distance(const CMat& m, double scalar) {
  double worst = 0.0;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      worst = std::max(worst, std::abs(m[r][c] - (r == c ? scalar : 0.0)));
  return worst;
}

}  // namespace

TEST_CASE("operator square construction") {
  const MerminSquare sq = build_square();

  SUBCASE("corner entries are the expected tensor products") {
    CHECK(sq.ops[0][0] == kron(pauli_x(), Mat2::identity()));
    CHECK(sq.ops[2][2] == kron(pauli_z(), pauli_z()));
    CHECK(sq.ops[1][0] == kron(Mat2::identity(), pauli_y()));
    CHECK(sq.labels[0][0] == "X1");
    CHECK(sq.labels[2][2] == "Z1Z2");
  }

  SUBCASE("every entry is Hermitian and squares to the identity") {
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) {
        CHECK(is_hermitian(sq.ops[r][c]));
        CHECK(sq.ops[r][c] * sq.ops[r][c] == OperatorMatrix::identity());
      }
  }
}

TEST_CASE("context commutation") {
  const MerminSquare sq = build_square();

  SUBCASE("all 18 in-context pairs commute exactly") {
    const ContextReport report = verify_contexts(sq);
    CHECK(report.all_commute);
    CHECK(report.pairs_checked == 18);
  }

  SUBCASE("the commutator is not blind: a cross-context pair fails") {
    const OperatorMatrix x1 = kron(pauli_x(), Mat2::identity());
    const OperatorMatrix y1 = kron(pauli_y(), Mat2::identity());
    CHECK_FALSE(commutator(x1, y1).is_zero());
  }

  SUBCASE("in-context products are order independent") {
    for (int i = 0; i < 3; ++i) {
      const auto row = sq.ops[i];
      std::array<int, 3> idx{0, 1, 2};
      const OperatorMatrix reference = row[0] * row[1] * row[2];
      do {
        CHECK(row[idx[0]] * row[idx[1]] * row[idx[2]] == reference);
      } while (std::next_permutation(idx.begin(), idx.end()));
    }
  }
}

TEST_CASE("row and column parity") {
  const MerminSquare sq = build_square();
  const ParityReport parity = product_parity(sq);

  SUBCASE("row-wise nine-fold product is +I, column-wise is -I") {
    CHECK(parity.row_total == +1);
    CHECK(parity.col_total == -1);
  }

  SUBCASE("per-context scalars multiply to the totals") {
    CHECK(parity.row_scalars[0] * parity.row_scalars[1] * parity.row_scalars[2] ==
          parity.row_total);
    CHECK(parity.col_scalars[0] * parity.col_scalars[1] * parity.col_scalars[2] ==
          parity.col_total);
    for (int s : parity.row_scalars) CHECK(std::abs(s) == 1);
    for (int s : parity.col_scalars) CHECK(std::abs(s) == 1);
  }

  SUBCASE("computed scalars: rows all +1, columns +1 +1 -1") {
    CHECK(parity.row_scalars == std::array<int, 3>{1, 1, 1});
    CHECK(parity.col_scalars == std::array<int, 3>{1, 1, -1});
  }

  SUBCASE("a floating-point matrix oracle reproduces every context scalar") {
    for (int i = 0; i < 3; ++i) {
      const CMat row =
          mul(mul(to_complex(sq.ops[i][0]), to_complex(sq.ops[i][1])), to_complex(sq.ops[i][2]));
      CHECK(identity_distance(row, parity.row_scalars[i]) < 1e-12);
      const CMat col =
          mul(mul(to_complex(sq.ops[0][i]), to_complex(sq.ops[1][i])), to_complex(sq.ops[2][i]));
      CHECK(identity_distance(col, parity.col_scalars[i]) < 1e-12);
    }
  }
}

TEST_CASE("exhaustive value-assignment search") {
  const ContradictionCertificate cert = exhaustive_assignment_search(true);

  SUBCASE("no consistent assignment exists") {
    CHECK(cert.assignments_enumerated == 64);
    CHECK(cert.consistent_count == 0);
    REQUIRE(cert.entry_level_consistent.has_value());
    CHECK(*cert.entry_level_consistent == 0);
  }

  SUBCASE("the parity identity certifies the contradiction") {
    CHECK(cert.context_scalar_product == -1);
    CHECK(cert.parity_contradiction);
  }

  SUBCASE("the search enumerates 64 distinct assignments") {
    // replicate the enumeration and count distinct sign vectors
    std::set<std::array<int, 6>> seen;
    for (int mask = 0; mask < 64; ++mask) {
      std::array<int, 6> v;
      for (int i = 0; i < 6; ++i) v[i] = (mask >> i) & 1 ? -1 : +1;
      seen.insert(v);
    }
    CHECK(seen.size() == 64);
  }

  SUBCASE("flipping the third column's sign opens up solutions") {
    auto flipped = cert.parity.context_scalars();
    flipped[5] = -flipped[5];
    CHECK(count_consistent_factor_assignments(flipped) == 32);
    CHECK(count_consistent_entry_assignments(flipped) == 16);
  }

  SUBCASE("factor-level structure of the mutations") {
    // Rows 0-1 and columns 0-1 have every factor appearing twice, so their
    // value products are identically +1: flipping one of those contexts
    // leaves nothing to satisfy it. The third row and third column each
    // contain all six factors once, so flipping either one works.
    auto scalars = cert.parity.context_scalars();
    for (int ctx : {0, 1, 3, 4}) {
      auto mutated = scalars;
      mutated[ctx] = -mutated[ctx];
      CHECK(count_consistent_factor_assignments(mutated) == 0);
    }
    auto row2 = scalars;
    row2[2] = -row2[2];
    CHECK(count_consistent_factor_assignments(row2) == 32);
  }

  SUBCASE("entry values are context independent") {
    // An entry's value is a function of the factor assignment alone, so a
    // row-major and a column-major evaluation of the grid must agree for
    // every one of the 64 assignments.
    const std::array<std::array<std::array<int, 2>, 3>, 3> factors{{
        {{{0, -1}, {3, -1}, {0, 3}}},    // X1, X2, X1X2
        {{{4, -1}, {1, -1}, {1, 4}}},    // Y2, Y1, Y1Y2
        {{{0, 4}, {3, 1}, {2, 5}}},      // X1Y2, X2Y1, Z1Z2
    }};
    const auto value_of = [&](const std::array<int, 6>& v, int r, int c) {
      int prod = 1;
      for (int f : factors[r][c])
        if (f >= 0) prod *= v[f];
      return prod;
    };
    for (int mask = 0; mask < 64; ++mask) {
      std::array<int, 6> v;
      for (int i = 0; i < 6; ++i) v[i] = (mask >> i) & 1 ? -1 : +1;
      int row_major[3][3], col_major[3][3];
      for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) row_major[r][c] = value_of(v, r, c);
      for (int c = 0; c < 3; ++c)
        for (int r = 0; r < 3; ++r) col_major[r][c] = value_of(v, r, c);
      for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) CHECK(row_major[r][c] == col_major[r][c]);
    }
  }
}
