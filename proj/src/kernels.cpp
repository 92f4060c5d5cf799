#include "cayley/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace cayley {
namespace {

Eigen::MatrixXd constraintMatrix(const ConstraintSet& c) {
  const int m = SymmetricFunctional::packedSize(c.dim());
  Eigen::MatrixXd out(static_cast<Eigen::Index>(c.size()), m);
  for (std::size_t r = 0; r < c.size(); ++r) {
    const auto& row = c.functionals()[r].packed();
    for (int k = 0; k < m; ++k) out(static_cast<Eigen::Index>(r), k) = row[static_cast<std::size_t>(k)];
  }
  return out;
}

// Packed weights: sum_ij a_ij^2 = sum_k w_k v_k^2.
Eigen::VectorXd numeratorWeights(int n) {
  Eigen::VectorXd w(SymmetricFunctional::packedSize(n));
  for (int i = 0, k = 0; i < n; ++i) {
    for (int j = i; j < n; ++j, ++k) w(k) = i == j ? 1.0 : 2.0;
  }
  return w;
}

Eigen::VectorXd denominatorWeights(int n, int d) {
  Eigen::VectorXd w = Eigen::VectorXd::Zero(SymmetricFunctional::packedSize(n));
  for (int j = 0; j < n; ++j) w(SymmetricFunctional::packedIndex(n, d, j)) = 1.0;
  return w;
}

// Diagonal-only support with equal coefficients; returns the slots.
std::optional<std::vector<int>> diagonalBlock(const SymmetricFunctional& f) {
  const int n = f.dim();
  std::vector<int> slots;
  double value = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      const double c = f.coeff(i, j);
      if (c == 0.0) continue;
      if (i != j) return std::nullopt;
      if (slots.empty()) value = c;
      if (c != value) return std::nullopt;
      slots.push_back(i);
    }
  }
  return slots;
}

}  // namespace

RatioProblem RatioProblem::kahler(int complexDim) {
  const auto spec = ParallelFormSpec::kahler(complexDim);
  const auto anchors = anchorMonomials(spec);
  return {spec.dimension(), extractConstraints(buildForm(spec), &anchors), 0};
}

RatioProblem RatioProblem::quaternionic(int quaternionicDim) {
  const auto spec = ParallelFormSpec::quaternionic(quaternionicDim);
  const auto anchors = anchorMonomials(spec);
  return {spec.dimension(), extractConstraints(buildForm(spec), &anchors), 0};
}

RatioProblem RatioProblem::spin9() {
  // Only the v-top functional sum_{i<=8} a_ii enters; the w-top one follows
  // from it and the trace.
  const Form omega = buildForm(ParallelFormSpec::spin9());
  const std::vector<MultiIndex> targets{vTop()};
  return {16, extractConstraints(omega, &targets), 0};
}

ConstraintSet RatioProblem::withTrace() const { return constraints.with(SymmetricFunctional::trace(n)); }

double bochnerObjective(const Eigen::MatrixXd& a, int distinguished) {
  const double row = a.row(distinguished).squaredNorm();
  if (row == 0.0) throw std::invalid_argument("bochnerObjective: distinguished row vanishes");
  return a.squaredNorm() / row;
}

Eigen::VectorXd packSymmetric(const Eigen::MatrixXd& a) {
  const auto n = static_cast<int>(a.rows());
  Eigen::VectorXd v(SymmetricFunctional::packedSize(n));
  for (int i = 0, k = 0; i < n; ++i) {
    for (int j = i; j < n; ++j, ++k) v(k) = a(i, j);
  }
  return v;
}

Eigen::MatrixXd unpackSymmetric(int n, const Eigen::VectorXd& v) {
  Eigen::MatrixXd a(n, n);
  for (int i = 0, k = 0; i < n; ++i) {
    for (int j = i; j < n; ++j, ++k) a(i, j) = a(j, i) = v(k);
  }
  return a;
}

Eigen::MatrixXd feasibleBasis(const RatioProblem& p) {
  const ConstraintSet c = p.withTrace();
  const int m = SymmetricFunctional::packedSize(p.n);
  const Eigen::MatrixXd cm = constraintMatrix(c);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(cm, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  const double cutoff = 1e-10 * std::max(1.0, s.size() > 0 ? s(0) : 0.0);
  int rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s(i) > cutoff) ++rank;
  }
  return svd.matrixV().rightCols(m - rank);
}

std::optional<int> diagonalBlockSize(const RatioProblem& p) {
  const ConstraintSet c = p.withTrace();
  std::vector<bool> used(static_cast<std::size_t>(p.n), false);
  std::optional<int> size;
  for (const auto& f : c.functionals()) {
    const auto block = diagonalBlock(f);
    if (!block) return std::nullopt;
    for (int s : *block) {
      if (used[static_cast<std::size_t>(s)]) return std::nullopt;
      used[static_cast<std::size_t>(s)] = true;
    }
    if (std::find(block->begin(), block->end(), p.distinguished) != block->end()) {
      size = static_cast<int>(block->size());
    }
  }
  return size;
}

KernelResult minBochnerRatio(const RatioProblem& p) {
  if (p.n < 2 || p.distinguished < 0 || p.distinguished >= p.n) {
    throw std::invalid_argument("minBochnerRatio: bad dimension or distinguished slot");
  }
  const Eigen::MatrixXd z = feasibleBasis(p);
  if (z.cols() == 0) throw std::invalid_argument("minBochnerRatio: constraints leave only a = 0");

  const Eigen::MatrixXd nz = z.transpose() * numeratorWeights(p.n).asDiagonal() * z;
  const Eigen::MatrixXd dz = z.transpose() * denominatorWeights(p.n, p.distinguished).asDiagonal() * z;
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> ges(dz, nz);
  if (ges.info() != Eigen::Success) throw std::runtime_error("minBochnerRatio: eigensolve failed");
  const Eigen::VectorXd& mu = ges.eigenvalues();
  const double top = mu(mu.size() - 1);
  if (top <= 1e-12) throw std::invalid_argument("minBochnerRatio: every feasible matrix has a vanishing distinguished row");

  KernelResult r;
  r.numericRatio = 1.0 / top;
  r.ratio = r.numericRatio;
  const auto block = diagonalBlockSize(p);
  if (block) {
    const int s = *block;
    r.blockSize = s;
    r.closedFormRatio = s >= 2 ? std::min(2.0, static_cast<double>(s) / (s - 1)) : 2.0;
    if (std::fabs(*r.closedFormRatio - r.numericRatio) > 1e-8) {
      throw std::runtime_error("minBochnerRatio: closed form " + std::to_string(*r.closedFormRatio) +
                               " disagrees with eigensolve " + std::to_string(r.numericRatio));
    }
    r.ratio = *r.closedFormRatio;
  }
  r.rational = recoverRational(r.ratio, 64, 1e-9);
  r.katoB = r.ratio - 1.0;
  r.exponent = 1.0 - r.katoB;

  // Project the seed E_dd onto the top eigenspace in the numerator inner product.
  Eigen::VectorXd seed = Eigen::VectorXd::Zero(SymmetricFunctional::packedSize(p.n));
  seed(SymmetricFunctional::packedIndex(p.n, p.distinguished, p.distinguished)) = 1.0;
  const Eigen::VectorXd seedZ = z.transpose() * seed;
  const Eigen::MatrixXd& vecs = ges.eigenvectors();
  Eigen::VectorXd x = Eigen::VectorXd::Zero(z.cols());
  for (Eigen::Index k = mu.size() - 1; k >= 0 && mu(k) >= top * (1.0 - 1e-9); --k) {
    x += (vecs.col(k).dot(nz * seedZ)) * vecs.col(k);
    ++r.topMultiplicity;
  }
  if (x.norm() < 1e-12) x = vecs.col(mu.size() - 1);
  r.minimizer = unpackSymmetric(p.n, z * x);

  // Canonical form: a_dd <= 0, remaining slots sorted by descending diagonal.
  Eigen::MatrixXd a = r.minimizer;
  if (a(p.distinguished, p.distinguished) > 0) a = -a;
  std::vector<int> order;
  for (int i = 0; i < p.n; ++i) {
    if (i != p.distinguished) order.push_back(i);
  }
  std::stable_sort(order.begin(), order.end(), [&](int i, int j) { return a(i, i) > a(j, j) + 1e-12; });
  order.insert(order.begin(), p.distinguished);
  Eigen::MatrixXd perm(p.n, p.n);
  for (int i = 0; i < p.n; ++i) {
    for (int j = 0; j < p.n; ++j) perm(i, j) = a(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)]);
  }
  const double lead = p.n > 1 ? perm(1, 1) : 0.0;
  r.mu = lead > 1e-12 ? lead : perm.row(0).norm();
  r.canonicalMinimizer = (perm / r.mu).unaryExpr([](double v) { return v == 0.0 ? 0.0 : v; });
  return r;
}

nlohmann::json KernelResult::toJson() const {
  nlohmann::json j;
  j["ratio"] = ratio;
  j["rational"] = rational ? nlohmann::json(rational->str()) : nlohmann::json(nullptr);
  j["numeric_ratio"] = numericRatio;
  j["closed_form_ratio"] = closedFormRatio ? nlohmann::json(*closedFormRatio) : nlohmann::json(nullptr);
  j["block_size"] = blockSize;
  j["kato_b"] = katoB;
  j["exponent"] = exponent;
  j["mu"] = mu;
  j["top_multiplicity"] = topMultiplicity;
  std::vector<double> diag;
  for (Eigen::Index i = 0; i < canonicalMinimizer.rows(); ++i) diag.push_back(canonicalMinimizer(i, i));
  j["canonical_diagonal"] = diag;
  return j;
}

double vanishingThreshold(double b, double lambda1) {
  if (!(b > -1.0)) throw std::invalid_argument("vanishingThreshold: need b > -1");
  if (!(lambda1 > 0.0)) throw std::invalid_argument("vanishingThreshold: need lambda1 > 0");
  return -(b + 1.0) * lambda1;
}

Spin9Bound spin9SpectralBound() {
  Spin9Bound s;
  const Rational ric(36);
  const Rational b(1, 7);
  s.katoDrift = ric * (Rational(1) - b);
  s.corollaryRoute = ric / (Rational(1) + b);
  s.consistent = s.katoDrift == s.stated;
  return s;
}

KatoTransform katoTransform(double ratio, double ricci) {
  const auto r = recoverRational(ratio, 64, 1e-9);
  const auto ric = recoverRational(ricci, 64, 1e-9);
  if (!r || !ric) throw std::invalid_argument("katoTransform: inputs must be small rationals");
  if (!(*r > Rational(1)) || *r > Rational(2)) throw std::invalid_argument("katoTransform: ratio must lie in (1, 2]");
  if (!(*ric < Rational(0))) throw std::invalid_argument("katoTransform: ricci must be negative");

  KatoTransform t;
  t.ratio = *r;
  t.b = *r - Rational(1);
  t.exponent = Rational(1) - t.b;
  const Rational c = -*ric;
  t.drift = c * t.exponent;
  t.degenerate = t.exponent == Rational(0);
  // Delta h^k = k h^{k-1} Delta h + k(k-1) h^{k-2} |grad h|^2, then
  // Delta h >= b |grad h|^2 / h - c h.
  const Rational& k = t.exponent;
  t.gradientCoefficient = k * (t.b + k - Rational(1));
  t.potentialCoefficient = -(c * k);
  t.identityHolds = !t.degenerate && t.gradientCoefficient == Rational(0) && t.potentialCoefficient == -t.drift;
  return t;
}

nlohmann::json KatoTransform::toJson() const {
  return {{"ratio", ratio.str()},
          {"b", b.str()},
          {"exponent", exponent.str()},
          {"drift", drift.str()},
          {"gradient_coefficient", gradientCoefficient.str()},
          {"potential_coefficient", potentialCoefficient.str()},
          {"degenerate", degenerate},
          {"identity_holds", identityHolds}};
}

EqualityReport equalityDiagnostics(const KernelResult& r, const std::vector<double>& pattern, double tol) {
  EqualityReport e;
  const Eigen::MatrixXd& a = r.canonicalMinimizer;
  e.mu = r.mu;
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    e.diagonal.push_back(a(i, i));
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (i != j) e.maxOffDiagonal = std::max(e.maxOffDiagonal, std::fabs(a(i, j)));
    }
  }
  if (!pattern.empty()) {
    if (pattern.size() != e.diagonal.size()) throw std::invalid_argument("equalityDiagnostics: pattern size mismatch");
    for (std::size_t i = 0; i < pattern.size(); ++i) {
      e.patternResidual = std::max(e.patternResidual, std::fabs(e.diagonal[i] - pattern[i]));
    }
  }
  e.pass = e.maxOffDiagonal <= tol && e.patternResidual <= tol;
  return e;
}

}  // namespace cayley
