#include "cavityfield/fock.hpp"

#include <cmath>
#include <iostream>
#include <stdexcept>
#include <string>

namespace cavityfield {

namespace {

constexpr Complex kI{0.0, 1.0};

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

void FockContext::validate() const {
  require(dim >= 2, "Fock truncation dimension must be >= 2, got " + std::to_string(dim));
  require(nu > 0.0, "mode frequency nu must be > 0");
  require(mass > 0.0, "oscillator mass must be > 0");
  require(hbar > 0.0, "hbar must be > 0");
  require(families == 1 || families == 2, "families must be 1 or 2");
}

FockContext FockContext::for_mode(const CavityConfig& cfg, ModeIndex alpha,
                                  int dim, int families) {
  const ModeConstants mc = mode_constants(cfg, alpha);
  FockContext ctx{dim, mc.nu, cfg.mass(alpha), cfg.hbar, families};
  ctx.validate();
  return ctx;
}

QuantumState::QuantumState(Eigen::VectorXcd amps) : amplitudes(std::move(amps)) {
  require(amplitudes.size() > 0, "state vector must be non-empty");
  const double norm = amplitudes.norm();
  require(norm > 0.0, "state vector must be nonzero");
  amplitudes /= norm;
}

LadderPair ladder_ops(const FockContext& ctx) {
  ctx.validate();
  OperatorMatrix a = OperatorMatrix::Zero(ctx.dim, ctx.dim);
  for (int n = 1; n < ctx.dim; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return {a, a.adjoint()};
}

LadderPair time_evolve_ladder(const FockContext& ctx, double t) {
  LadderPair pair = ladder_ops(ctx);
  const Complex phase = std::exp(-kI * ctx.nu * t);
  pair.a *= phase;
  pair.a_dagger *= std::conj(phase);
  return pair;
}

OperatorMatrix commutator(const OperatorMatrix& A, const OperatorMatrix& B) {
  require(A.rows() == A.cols() && B.rows() == B.cols() && A.rows() == B.rows(),
          "commutator requires square operators of equal dimension");
  return A * B - B * A;
}

CanonicalOps canonical_ops(const FockContext& ctx) {
  const auto [a, ad] = ladder_ops(ctx);
  const double q_scale = std::sqrt(ctx.hbar / (2.0 * ctx.mass * ctx.nu));
  const double p_scale = std::sqrt(ctx.hbar * ctx.mass * ctx.nu / 2.0);
  return {q_scale * (ad + a), kI * p_scale * (ad - a)};
}

OperatorMatrix hamiltonian_op(const FockContext& ctx) {
  const auto [q, p] = canonical_ops(ctx);
  return 0.5 * (ctx.mass * ctx.nu * ctx.nu * q * q + p * p / ctx.mass);
}

double coherent_tail_mass(Complex alpha, int dim) {
  require(dim >= 1, "dimension must be >= 1");
  // Kept mass = e^{-|alpha|^2} sum_{n<dim} |alpha|^{2n}/n!, accumulated in
  // log-free form via the recurrence term_{n+1} = term_n |alpha|^2/(n+1).
  const double a2 = std::norm(alpha);
  double term = std::exp(-a2);
  double kept = term;
  for (int n = 1; n < dim; ++n) {
    term *= a2 / n;
    kept += term;
  }
  return 1.0 - kept;
}

QuantumState coherent_state(Complex alpha, const FockContext& ctx) {
  ctx.validate();
  require(std::norm(alpha) <= ctx.dim / 4.0,
          "coherent amplitude too large for the truncation: |alpha|^2 > dim/4");
  const double tail = coherent_tail_mass(alpha, ctx.dim);
  if (tail > 1e-8)
    std::cerr << "warning: coherent state discards tail mass " << tail
              << " before renormalization\n";
  Eigen::VectorXcd amps(ctx.dim);
  Complex c{1.0, 0.0};
  amps(0) = c;
  for (int n = 1; n < ctx.dim; ++n) {
    c *= alpha / std::sqrt(static_cast<double>(n));
    amps(n) = c;
  }
  return QuantumState(std::move(amps));
}

namespace {

struct ModeFieldScales {
  double k;
  double E0;
};

ModeFieldScales field_scales(const FockContext& ctx, const CavityConfig& cfg,
                             ModeIndex alpha, double z) {
  cfg.validate();
  ctx.validate();
  require(z >= 0.0 && z <= cfg.L * (1.0 + 1e-12), "z outside the cavity [0, L]");
  const ModeConstants mc = mode_constants(cfg, alpha);
  return {mc.k, std::sqrt(ctx.hbar * ctx.nu / (cfg.V * cfg.epsilon0))};
}

}  // namespace

FieldOps field_operators(Family family, const FockContext& ctx,
                         const CavityConfig& cfg, ModeIndex alpha, double z,
                         double t) {
  const auto [k, E0] = field_scales(ctx, cfg, alpha, z);
  const auto [a, ad] = time_evolve_ladder(ctx, t);
  const double c = cfg.c();
  if (family == Family::first) {
    return {E0 * std::sin(k * z) * (ad + a),
            kI * c * cfg.epsilon0 * E0 * std::cos(k * z) * (ad - a)};
  }
  return {kI * E0 * std::sin(k * z) * (ad - a),
          E0 / (cfg.mu0 * c) * std::cos(k * z) * (ad + a)};
}

FieldOps combined_field_ops(const FockContext& ctx, const CavityConfig& cfg,
                            ModeIndex alpha, double z, double t,
                            double C_const) {
  require(ctx.families == 2,
          "combined field operators need a two-family (tensor product) context");
  const auto [k, E0] = field_scales(ctx, cfg, alpha, z);
  const auto [a, ad] = time_evolve_ladder(ctx, t);
  const OperatorMatrix id = OperatorMatrix::Identity(ctx.dim, ctx.dim);
  const double c = cfg.c();
  // Family 1 acts on the left tensor factor, family 2 on the right; the two
  // single-mode algebras are identical, so one evolved pair serves both.
  const OperatorMatrix E =
      E0 * std::sin(k * z) * (tensor(ad + a, id) + tensor(id, a - ad));
  const OperatorMatrix H =
      E0 * std::cos(k * z) *
          (tensor(id, a + ad) / (cfg.mu0 * c) + c * cfg.epsilon0 * tensor(a - ad, id)) +
      C_const * OperatorMatrix::Identity(ctx.total_dim(), ctx.total_dim());
  return {E, H};
}

OperatorMatrix tensor(const OperatorMatrix& A, const OperatorMatrix& B) {
  OperatorMatrix out(A.rows() * B.rows(), A.cols() * B.cols());
  for (Eigen::Index i = 0; i < A.rows(); ++i)
    for (Eigen::Index j = 0; j < A.cols(); ++j)
      out.block(i * B.rows(), j * B.cols(), B.rows(), B.cols()) = A(i, j) * B;
  return out;
}

Eigen::VectorXcd tensor_vector(const Eigen::VectorXcd& x, const Eigen::VectorXcd& y) {
  Eigen::VectorXcd out(x.size() * y.size());
  for (Eigen::Index i = 0; i < x.size(); ++i)
    out.segment(i * y.size(), y.size()) = x(i) * y;
  return out;
}

OperatorMatrix hermitian_part(const OperatorMatrix& M) {
  return 0.5 * (M + M.adjoint());
}

OperatorMatrix anti_hermitian_part(const OperatorMatrix& M) {
  return 0.5 * (M - M.adjoint());
}

bool is_hermitian(const OperatorMatrix& M, double tol) {
  if (M.rows() != M.cols()) return false;
  return (M - M.adjoint().eval()).cwiseAbs().maxCoeff() <= tol;
}

Complex expectation(const OperatorMatrix& op, const QuantumState& psi) {
  require(op.rows() == op.cols() && op.rows() == psi.amplitudes.size(),
          "operator and state dimensions do not match");
  return psi.amplitudes.dot(op * psi.amplitudes);
}

}  // namespace cavityfield
