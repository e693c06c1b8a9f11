#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "detgb/monomial.hpp"
#include "detgb/ring.hpp"

namespace detgb {

/// Graded ranks beta_{i,j}: homological index i, internal degree j.
class GradedBettiTable {
 public:
  GradedBettiTable() = default;

  std::int64_t rank(int i, int j) const;
  void add(int i, int j, std::int64_t rank);

  const std::map<std::pair<int, int>, std::int64_t>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  /// Total rank per homological index 0..projdim.
  std::vector<std::int64_t> totals() const;
  /// Largest homological index with a nonzero entry (-1 when empty).
  int projdim() const;

  /// Degrees x homological index grid, Macaulay2-style rows by j - i.
  std::string to_string() const;

  friend bool operator==(const GradedBettiTable&, const GradedBettiTable&) = default;

 private:
  std::map<std::pair<int, int>, std::int64_t> entries_;
};

/// Integer numerator N(t) of the Hilbert series N(t) / (1 - t)^numvars.
struct HilbertNumerator {
  std::vector<std::int64_t> coeffs;  // index = degree, no trailing zeros
  std::size_t numvars = 0;

  std::int64_t at_one() const;
  std::string to_string() const;
  friend bool operator==(const HilbertNumerator&, const HilbertNumerator&) = default;
};

/// Koszul complex on g forms of degree d: beta_{i, d*i} = C(g, i).
GradedBettiTable koszul_table(int g, int d);

/// Mapping cone of a map source -> target: cone_i = target_i ⊕ source_{i-1}(twist),
/// so source entry (i, j) lands at (i + 1, j - twist). Each (i, j) in `cancel`
/// removes one rank from target(i, j) and one from the source summand at
/// cone position (i + 1, j).
GradedBettiTable mapping_cone(const GradedBettiTable& target, const GradedBettiTable& source, int twist,
                              std::span<const std::pair<int, int>> cancel = {});

/// Minimal resolution of <g_1..g_n, det X>: cone of the Koszul complex on y
/// (twisted by -n) into the Koszul complex on g, with one (n, 2n) cancellation.
GradedBettiTable northcott_table(int n);

/// Closed-form total Betti numbers of I_1(X^ Y) for the (n+1) x n matrix.
std::vector<std::int64_t> betti_J_totals(int n);

/// Cone of northcott_table(n) twisted by -2 into koszul_table(n, 2).
GradedBettiTable betti_J_graded(int n);

/// K-polynomial of R / <monomials> by pivot recursion on a most frequent variable.
HilbertNumerator hilbert_numerator(std::span<const Monomial> monomials, std::size_t numvars);

/// sum_{i,j} (-1)^i beta_{i,j} t^j.
HilbertNumerator table_numerator(const GradedBettiTable& table, std::size_t numvars);

/// numvars minus the multiplicity of t = 1 as a root of N. -1 for N == 0.
int dimension(const HilbertNumerator& n);

struct CmReport {
  int projdim = 0;
  int depth = 0;
  int dim = 0;
  std::size_t numvars = 0;
  bool is_cm = false;
  bool hilbert_consistent = false;
};

/// Projective dimension from the predicted resolution of R/I_1(XY), depth by
/// Auslander-Buchsbaum, Krull dimension from the Hilbert series of the
/// computed initial ideal.
CmReport cm_report(const MatrixShape& shape);

/// Predicted graded table of R/I_1(XY) for a shape: Koszul for square and
/// symmetric, the J cone for wide.
GradedBettiTable predicted_table(const MatrixShape& shape);

std::int64_t binomial(int n, int k);

}  // namespace detgb
