#pragma once

#include <array>
#include <cstdint>
#include <optional>

namespace eprsim {

/// Exact complex integer re + im*i. All operator-square arithmetic stays in
/// this ring, so commutator and identity checks are exact equalities, never
/// tolerance comparisons.
struct GaussInt {
  std::int64_t re = 0;
  std::int64_t im = 0;

  friend constexpr GaussInt operator+(GaussInt a, GaussInt b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend constexpr GaussInt operator-(GaussInt a, GaussInt b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend constexpr GaussInt operator*(GaussInt a, GaussInt b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  constexpr bool operator==(const GaussInt&) const = default;
  constexpr GaussInt conj() const { return {re, -im}; }
};

/// Dense N x N matrix over GaussInt.
template <int N>
struct GaussMat {
  std::array<GaussInt, N * N> a{};

  constexpr GaussInt& at(int r, int c) { return a[r * N + c]; }
  constexpr const GaussInt& at(int r, int c) const { return a[r * N + c]; }
  constexpr bool operator==(const GaussMat&) const = default;

  friend constexpr GaussMat operator*(const GaussMat& x, const GaussMat& y) {
    GaussMat out;
    for (int r = 0; r < N; ++r)
      for (int c = 0; c < N; ++c) {
        GaussInt s{};
        for (int k = 0; k < N; ++k) s = s + x.at(r, k) * y.at(k, c);
        out.at(r, c) = s;
      }
    return out;
  }
  friend constexpr GaussMat operator-(const GaussMat& x, const GaussMat& y) {
    GaussMat out;
    for (int i = 0; i < N * N; ++i) out.a[i] = x.a[i] - y.a[i];
    return out;
  }

  constexpr GaussMat adjoint() const {
    GaussMat out;
    for (int r = 0; r < N; ++r)
      for (int c = 0; c < N; ++c) out.at(r, c) = at(c, r).conj();
    return out;
  }

  constexpr bool is_zero() const {
    for (const auto& e : a)
      if (!(e == GaussInt{})) return false;
    return true;
  }

  static constexpr GaussMat identity() {
    GaussMat out;
    for (int i = 0; i < N; ++i) out.at(i, i) = {1, 0};
    return out;
  }
};

using Mat2 = GaussMat<2>;
using OperatorMatrix = GaussMat<4>;

constexpr Mat2 pauli_x() { return Mat2{{GaussInt{0, 0}, {1, 0}, {1, 0}, {0, 0}}}; }
constexpr Mat2 pauli_y() { return Mat2{{GaussInt{0, 0}, {0, -1}, {0, 1}, {0, 0}}}; }
constexpr Mat2 pauli_z() { return Mat2{{GaussInt{1, 0}, {0, 0}, {0, 0}, {-1, 0}}}; }

constexpr OperatorMatrix kron(const Mat2& x, const Mat2& y) {
  OperatorMatrix out;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      out.at(r, c) = x.at(r / 2, c / 2) * y.at(r % 2, c % 2);
  return out;
}

constexpr OperatorMatrix commutator(const OperatorMatrix& x, const OperatorMatrix& y) {
  return x * y - y * x;
}

constexpr bool is_hermitian(const OperatorMatrix& m) { return m == m.adjoint(); }

/// If m equals s * I for a Gaussian-integer scalar s, returns s.
constexpr std::optional<GaussInt> identity_scalar(const OperatorMatrix& m) {
  const GaussInt s = m.at(0, 0);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      if (!(m.at(r, c) == (r == c ? s : GaussInt{}))) return std::nullopt;
  return s;
}

}  // namespace eprsim
