#include "swent/matrix_measure.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace swent {

namespace {

void require_square_finite(const Matrix& A) {
  if (A.rows() != A.cols())
    throw std::invalid_argument("matrix must be square, got " +
                                std::to_string(A.rows()) + "x" +
                                std::to_string(A.cols()));
  if (!A.allFinite())
    throw std::invalid_argument("matrix has non-finite entries");
}

double sym_eig_max(const Matrix& S) {
  Matrix sym = 0.5 * (S + S.transpose());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(sym,
                                               Eigen::EigenvaluesOnly);
  return solver.eigenvalues().maxCoeff();
}

}  // namespace

const char* norm_kind_name(NormKind k) {
  switch (k) {
    case NormKind::One: return "one";
    case NormKind::Two: return "two";
    case NormKind::Infinity: return "inf";
  }
  return "?";
}

NormKind norm_kind_from_name(std::string_view name) {
  if (name == "one" || name == "1") return NormKind::One;
  if (name == "two" || name == "2") return NormKind::Two;
  if (name == "inf" || name == "infinity") return NormKind::Infinity;
  throw std::invalid_argument("unknown norm kind: " + std::string(name));
}

MeasureSpec MeasureSpec::basic(NormKind k) {
  MeasureSpec s;
  s.kind = k;
  return s;
}

MeasureSpec MeasureSpec::composite(std::vector<int> partition,
                                   std::vector<NormKind> local_kinds,
                                   NormKind network_kind) {
  if (partition.empty())
    throw std::invalid_argument("composite spec needs at least one block");
  for (int b : partition)
    if (b <= 0) throw std::invalid_argument("partition entries must be positive");
  if (local_kinds.size() == 1 && partition.size() > 1)
    local_kinds.assign(partition.size(), local_kinds[0]);
  if (local_kinds.size() != partition.size())
    throw std::invalid_argument("one local norm kind per block required");
  MeasureSpec s;
  s.is_composite = true;
  s.partition = std::move(partition);
  s.local_kinds = std::move(local_kinds);
  s.network_kind = network_kind;
  return s;
}

int MeasureSpec::total_dim() const {
  if (!is_composite) return -1;
  return std::accumulate(partition.begin(), partition.end(), 0);
}

void MeasureSpec::validate_for(Eigen::Index n) const {
  if (is_composite && total_dim() != n)
    throw std::invalid_argument("partition sums to " +
                                std::to_string(total_dim()) +
                                " but matrix dimension is " + std::to_string(n));
}

std::string MeasureSpec::describe() const {
  if (!is_composite) return norm_kind_name(kind);
  std::string out = "composite(local:";
  for (std::size_t i = 0; i < local_kinds.size(); ++i)
    out += std::string(i ? "," : " ") + norm_kind_name(local_kinds[i]);
  out += std::string("; network: ") + norm_kind_name(network_kind) + ")";
  return out;
}

double induced_norm(const Matrix& A, NormKind kind) {
  require_square_finite(A);
  switch (kind) {
    case NormKind::One:
      return A.cwiseAbs().colwise().sum().maxCoeff();
    case NormKind::Infinity:
      return A.cwiseAbs().rowwise().sum().maxCoeff();
    case NormKind::Two: {
      Eigen::JacobiSVD<Matrix> svd(A);
      return svd.singularValues()(0);
    }
  }
  throw std::logic_error("unreachable");
}

double block_norm(const Matrix& A, NormKind range_kind, NormKind domain_kind) {
  if (!A.allFinite())
    throw std::invalid_argument("matrix has non-finite entries");
  if (A.size() == 0) return 0.0;
  if (range_kind == NormKind::Infinity && domain_kind == NormKind::Infinity)
    return A.cwiseAbs().rowwise().sum().maxCoeff();
  if (range_kind == NormKind::One && domain_kind == NormKind::One)
    return A.cwiseAbs().colwise().sum().maxCoeff();
  Eigen::JacobiSVD<Matrix> svd(A);
  return svd.singularValues()(0);
}

double matrix_measure(const Matrix& A, NormKind kind) {
  require_square_finite(A);
  switch (kind) {
    case NormKind::Infinity: {
      // mu(A) = max_i ( a_ii + sum_{j != i} |a_ij| )
      double best = -std::numeric_limits<double>::infinity();
      for (Eigen::Index i = 0; i < A.rows(); ++i) {
        double row = A(i, i);
        for (Eigen::Index j = 0; j < A.cols(); ++j)
          if (j != i) row += std::abs(A(i, j));
        best = std::max(best, row);
      }
      return best;
    }
    case NormKind::One: {
      double best = -std::numeric_limits<double>::infinity();
      for (Eigen::Index j = 0; j < A.cols(); ++j) {
        double col = A(j, j);
        for (Eigen::Index i = 0; i < A.rows(); ++i)
          if (i != j) col += std::abs(A(i, j));
        best = std::max(best, col);
      }
      return best;
    }
    case NormKind::Two:
      return sym_eig_max(A);
  }
  throw std::logic_error("unreachable");
}

double matrix_measure(const Matrix& A, const MeasureSpec& spec) {
  if (spec.is_composite)
    throw std::invalid_argument(
        "matrix_measure takes a basic spec; use composite_measure_bound for "
        "composite specs");
  return matrix_measure(A, spec.kind);
}

Matrix network_matrix_of(const Matrix& A, const MeasureSpec& spec) {
  require_square_finite(A);
  if (!spec.is_composite)
    throw std::invalid_argument("network_matrix_of needs a composite spec");
  spec.validate_for(A.rows());
  const auto m = static_cast<Eigen::Index>(spec.partition.size());
  std::vector<Eigen::Index> offset(m + 1, 0);
  for (Eigen::Index i = 0; i < m; ++i)
    offset[i + 1] = offset[i] + spec.partition[i];
  Matrix N(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) {
      Matrix blk = A.block(offset[i], offset[j], spec.partition[i],
                           spec.partition[j]);
      if (i == j)
        N(i, j) = matrix_measure(blk, spec.local_kinds[i]);
      else
        N(i, j) = block_norm(blk, spec.local_kinds[i], spec.local_kinds[j]);
    }
  }
  return N;
}

double composite_measure_bound(const Matrix& A, const MeasureSpec& spec) {
  return matrix_measure(network_matrix_of(A, spec), spec.network_kind);
}

bool is_metzler(const Matrix& A, double tol) {
  if (A.rows() != A.cols()) return false;
  for (Eigen::Index i = 0; i < A.rows(); ++i)
    for (Eigen::Index j = 0; j < A.cols(); ++j)
      if (i != j && A(i, j) < -tol) return false;
  return true;
}

double metzler_eigen_max(const Matrix& A) {
  require_square_finite(A);
  if (!is_metzler(A))
    throw std::invalid_argument(
        "metzler_eigen_max requires nonnegative off-diagonal entries");
  Eigen::EigenSolver<Matrix> solver(A, /*computeEigenvectors=*/false);
  return solver.eigenvalues().real().maxCoeff();
}

}  // namespace swent
