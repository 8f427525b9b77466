#ifndef CAVITYFIELD_FOCK_HPP
#define CAVITYFIELD_FOCK_HPP

#include <Eigen/Dense>

#include "cavityfield/cavity.hpp"

namespace cavityfield {

/// Dense complex matrix acting on a truncated number basis (or on the
/// tensor product of two such bases).
using OperatorMatrix = Eigen::MatrixXcd;

enum class Family : int { first = 1, second = 2 };

/// Truncation and oscillator data for operator construction. families == 2
/// means both solution families live on a tensor product of two identical
/// truncated oscillators, total dimension dim^2.
struct FockContext {
  int dim = 32;
  double nu = 1.0;
  double mass = 1.0;
  double hbar = 1.0;
  int families = 1;

  int total_dim() const { return families == 2 ? dim * dim : dim; }
  void validate() const;

  static FockContext for_mode(const CavityConfig& cfg, ModeIndex alpha, int dim,
                              int families = 1);
};

/// Normalized state vector on a truncated basis.
struct QuantumState {
  explicit QuantumState(Eigen::VectorXcd amps);
  int dim() const { return static_cast<int>(amplitudes.size()); }
  Eigen::VectorXcd amplitudes;  // unit L2 norm after construction
};

struct LadderPair {
  OperatorMatrix a;
  OperatorMatrix a_dagger;
};

struct CanonicalOps {
  OperatorMatrix q;
  OperatorMatrix p;
};

struct FieldOps {
  OperatorMatrix E;
  OperatorMatrix H;
};

/// Annihilation/creation matrices with a[n-1, n] = sqrt(n). Truncation makes
/// [a, a+] = diag(1, ..., 1, -(dim-1)); the corner value is exact.
LadderPair ladder_ops(const FockContext& ctx);

/// Ladder matrices under number-Hamiltonian evolution:
/// a(t) = e^{-i nu t} a, a+(t) = e^{+i nu t} a+.
LadderPair time_evolve_ladder(const FockContext& ctx, double t);

OperatorMatrix commutator(const OperatorMatrix& A, const OperatorMatrix& B);

/// q = sqrt(hbar/(2 m nu)) (a+ + a),  p = i sqrt(hbar m nu / 2) (a+ - a).
CanonicalOps canonical_ops(const FockContext& ctx);

/// (1/2)(m nu^2 q^2 + p^2/m); diagonal hbar*nu*(n + 1/2) away from the
/// truncation edge.
OperatorMatrix hamiltonian_op(const FockContext& ctx);

/// Truncated coherent state, amplitudes proportional to alpha^n/sqrt(n!),
/// renormalized. Rejects |alpha|^2 > dim/4; warns on stderr when the
/// discarded tail mass exceeds 1e-8.
QuantumState coherent_state(Complex alpha, const FockContext& ctx);

/// Probability mass of the discarded tail, 1 - sum_{n<dim} |c_n|^2, for the
/// untruncated normalization.
double coherent_tail_mass(Complex alpha, int dim);

/// Field operators of one solution family at (z, t), with
/// E0 = sqrt(hbar nu / (V eps0)):
///   family 1:  E = E0 (a+(t) + a(t)) sin(kz),
///              H = i c eps0 E0 (a+(t) - a(t)) cos(kz)
///   family 2:  E = i E0 (a+(t) - a(t)) sin(kz),
///              H = (1/(mu0 c)) E0 (a+(t) + a(t)) cos(kz)
/// All four are Hermitian.
FieldOps field_operators(Family family, const FockContext& ctx,
                         const CavityConfig& cfg, ModeIndex alpha, double z,
                         double t);

/// Complexified operators on the two-family tensor product:
///   E = E_1 + i E_2,  H = H_2 + i H_1 + C_const * Id
/// where family 1 acts as X (x) I and family 2 as I (x) Y. The Hermitian
/// part of E is exactly the embedded family-1 operator; the anti-Hermitian
/// part is i times the embedded family-2 operator.
FieldOps combined_field_ops(const FockContext& ctx, const CavityConfig& cfg,
                            ModeIndex alpha, double z, double t,
                            double C_const = 0.0);

OperatorMatrix tensor(const OperatorMatrix& A, const OperatorMatrix& B);
Eigen::VectorXcd tensor_vector(const Eigen::VectorXcd& x, const Eigen::VectorXcd& y);
OperatorMatrix hermitian_part(const OperatorMatrix& M);
OperatorMatrix anti_hermitian_part(const OperatorMatrix& M);
bool is_hermitian(const OperatorMatrix& M, double tol);

Complex expectation(const OperatorMatrix& op, const QuantumState& psi);

}  // namespace cavityfield

#endif
