#pragma once

// Matrix measures (logarithmic norms) for the standard induced norms, and
// composite measures built from per-block local norms aggregated through a
// monotone network norm. The composite aggregation value upper-bounds the
// measure of the assembled block matrix in the corresponding global norm.

#include <Eigen/Dense>
#include <string>
#include <string_view>
#include <vector>

namespace swent {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

enum class NormKind { One, Two, Infinity };

const char* norm_kind_name(NormKind k);
NormKind norm_kind_from_name(std::string_view name);  // "one" | "two" | "inf"

// Which measure to use: a single induced norm over the whole space, or a
// composite with a block partition, per-block local norms, and a network norm
// applied to the m x m matrix of block measures/norms.
struct MeasureSpec {
  static MeasureSpec basic(NormKind k);
  static MeasureSpec composite(std::vector<int> partition,
                               std::vector<NormKind> local_kinds,
                               NormKind network_kind);

  bool is_composite = false;
  NormKind kind = NormKind::Infinity;  // basic only
  std::vector<int> partition;          // composite only; block sizes
  std::vector<NormKind> local_kinds;   // one per block
  NormKind network_kind = NormKind::Infinity;

  int total_dim() const;
  void validate_for(Eigen::Index n) const;
  std::string describe() const;
};

// Induced norm of a square matrix.
double induced_norm(const Matrix& A, NormKind kind);

// Induced norm of a rectangular block as a map (domain norm) -> (range norm).
// Closed forms for inf->inf (max row abs sum) and 1->1 (max column abs sum);
// largest singular value for the mixed and 2-norm cases.
double block_norm(const Matrix& A, NormKind range_kind, NormKind domain_kind);

double matrix_measure(const Matrix& A, NormKind kind);
double matrix_measure(const Matrix& A, const MeasureSpec& spec);  // basic only

// The m x m Metzler matrix of local measures (diagonal) and cross-block norms
// (off-diagonal) for a composite spec.
Matrix network_matrix_of(const Matrix& A, const MeasureSpec& spec);

// Network measure of the network matrix; upper-bounds the global measure.
double composite_measure_bound(const Matrix& A, const MeasureSpec& spec);

bool is_metzler(const Matrix& A, double tol = 0.0);

// Largest (real) eigenvalue of a Metzler matrix. Rejects non-Metzler input.
double metzler_eigen_max(const Matrix& A);

}  // namespace swent
