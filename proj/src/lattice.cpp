#include "pin2fill/lattice.hpp"

#include <cstdlib>

#include "pin2fill/errors.hpp"

namespace pin2fill {

Gram gram_hyperbolic() { return {{0, 1}, {1, 0}}; }

Gram gram_e8(int sign) {
  if (sign != 1 && sign != -1) throw DomainError("gram_e8: sign must be +1 or -1");
  // Nodes 0..7; node 1 is the branch node attached to node 3 of the chain
  // 0-2-3-4-5-6-7.
  static const int edges[][2] = {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {1, 3}};
  Gram g(8, std::vector<Int>(8, 0));
  for (int i = 0; i < 8; i++) g[i][i] = 2 * sign;
  for (const auto& e : edges) {
    g[e[0]][e[1]] = sign;
    g[e[1]][e[0]] = sign;
  }
  return g;
}

Gram direct_sum(const Gram& a, const Gram& b) {
  size_t n = a.size(), m = b.size();
  Gram out(n + m, std::vector<Int>(n + m, 0));
  for (size_t i = 0; i < n; i++)
    for (size_t j = 0; j < n; j++) out[i][j] = a[i][j];
  for (size_t i = 0; i < m; i++)
    for (size_t j = 0; j < m; j++) out[n + i][n + j] = b[i][j];
  return out;
}

namespace {

void require_symmetric(const Gram& g) {
  size_t n = g.size();
  for (size_t i = 0; i < n; i++) {
    if (g[i].size() != n) throw StructuralError("invariants: Gram matrix is not square");
    for (size_t j = 0; j <= i; j++)
      if (g[i][j] != g[j][i]) throw StructuralError("invariants: Gram matrix is not symmetric");
  }
}

// Signature by congruence diagonalization over the rationals. Symmetric row
// and column operations preserve the inertia indices exactly.
int signature_by_diagonalization(const Gram& gram) {
  size_t n = gram.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (size_t i = 0; i < n; i++)
    for (size_t j = 0; j < n; j++) a[i][j] = Rational(gram[i][j]);

  int sig = 0;
  for (size_t i = 0; i < n; i++) {
    if (a[i][i] == 0) {
      // Prefer swapping a nonzero diagonal entry into place.
      for (size_t j = i + 1; j < n; j++)
        if (a[j][j] != 0) {
          for (size_t c = 0; c < n; c++) std::swap(a[i][c], a[j][c]);
          for (size_t r = 0; r < n; r++) std::swap(a[r][i], a[r][j]);
          break;
        }
    }
    if (a[i][i] == 0) {
      // Every remaining diagonal entry is zero, so adding row+column j to i
      // turns the pivot into 2*a[i][j] exactly.
      size_t j = i + 1;
      for (; j < n; j++)
        if (a[i][j] != 0) break;
      if (j == n) continue;  // entire row is zero: contributes nothing
      for (size_t c = 0; c < n; c++) a[i][c] += a[j][c];
      for (size_t r = 0; r < n; r++) a[r][i] += a[r][j];
    }
    for (size_t j = i + 1; j < n; j++) {
      if (a[i][j] == 0) continue;
      Rational f = a[i][j] / a[i][i];
      for (size_t c = 0; c < n; c++) a[j][c] -= f * a[i][c];
      for (size_t r = 0; r < n; r++) a[r][j] -= f * a[r][i];
    }
    if (a[i][i] > 0)
      sig++;
    else if (a[i][i] < 0)
      sig--;
  }
  return sig;
}

// Fraction-free (Bareiss) determinant over the integers.
Int determinant_bareiss(const Gram& gram) {
  size_t n = gram.size();
  if (n == 0) return 1;
  Gram a = gram;
  Int denom = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; k++) {
    if (a[k][k] == 0) {
      size_t p = k + 1;
      for (; p < n; p++)
        if (a[p][k] != 0) break;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; i++)
      for (size_t j = k + 1; j < n; j++)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / denom;
    denom = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

}  // namespace

LatticeInvariants invariants(const Gram& gram) {
  require_symmetric(gram);
  LatticeInvariants out;
  out.rank = static_cast<int>(gram.size());
  out.signature = signature_by_diagonalization(gram);
  out.determinant = determinant_bareiss(gram);
  out.even = true;
  for (size_t i = 0; i < gram.size(); i++)
    if (gram[i][i] % 2 != 0) out.even = false;
  out.unimodular = out.determinant == 1 || out.determinant == -1;
  return out;
}

std::string LatticeForm::name() const {
  std::string parts;
  if (p > 0) parts = (p == 1 ? "" : std::to_string(p)) + "H";
  if (q > 0) {
    if (!parts.empty()) parts += " + ";
    parts += (q == 1 ? "" : std::to_string(q)) + std::string("E8(") +
             (eps > 0 ? "1" : "-1") + ")";
  }
  return parts.empty() ? "0" : parts;
}

Gram LatticeForm::gram() const {
  Gram g;
  for (int i = 0; i < p; i++) g = direct_sum(g, gram_hyperbolic());
  for (int i = 0; i < q; i++) g = direct_sum(g, gram_e8(eps));
  return g;
}

LatticeForm classify_even_indefinite(int b2plus, int b2minus) {
  if (b2plus < 1 || b2minus < 1)
    throw ClassificationError(
        "classify_even_indefinite: form is not indefinite (needs b2+ >= 1 and b2- >= 1)");
  int sigma = b2plus - b2minus;
  if (sigma % 8 != 0)
    throw ClassificationError("classify_even_indefinite: signature " + std::to_string(sigma) +
                              " of an even unimodular form must be divisible by 8");
  LatticeForm f;
  f.p = b2plus < b2minus ? b2plus : b2minus;
  f.q = std::abs(sigma) / 8;
  f.eps = sigma >= 0 ? 1 : -1;
  return f;
}

}  // namespace pin2fill
