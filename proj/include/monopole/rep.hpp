#pragma once

#include <array>
#include <complex>
#include <vector>

#include "monopole/config.hpp"
#include "monopole/geometry.hpp"
#include "monopole/jet.hpp"
#include "monopole/quaternion.hpp"
#include "monopole/sampling.hpp"

namespace monopole {

struct PolyTerm {
  std::array<int, 3> exponents;
  std::complex<double> coeff;
};

/// Psi(x) = P(x) exp(-|x - c|^2 / sigma^2), values read in the chart's gauge.
class TestSection {
 public:
  TestSection(std::vector<PolyTerm> poly, const Vec3& center, double sigma, Chart chart = Chart::Plus);
  static TestSection gaussian(const Vec3& center, double sigma, Chart chart = Chart::Plus);
  /// Random complex (or real) polynomial of the given degree times a Gaussian.
  static TestSection random(Rng& rng, const Vec3& center, double sigma, int degree, Chart chart = Chart::Plus,
                            bool real = false);

  Chart chart() const { return chart_; }
  Jet jet(const Vec3& x0, int order) const;
  std::complex<double> value(const Vec3& x) const;
  TestSection operator+(const TestSection& o) const;

 private:
  std::vector<PolyTerm> poly_;
  Vec3 center_;
  double sigma_;
  Chart chart_;
};

/// Quaternion-valued section sum_mu psi_mu(x) q_mu with real components
/// psi_0 + psi_1 e1 + psi_2 e2 + psi_3 e3.
struct QTestSection {
  std::array<TestSection, 4> parts;

  static QTestSection random(Rng& rng, const Vec3& center, double sigma, int degree);
  Quaternion value(const Vec3& x) const;
};

/// (-i hbar d_j - eA_j) Psi at x.
std::complex<double> covariant_derivative(Chart chart, const TestSection& psi, const Vec3& x, int j,
                                          const MonopoleConfig& cfg);

/// (V(a) Psi)(x) = exp{-(i/hbar) int_[x, x+a] eA} Psi(x + a).
std::complex<double> translate_V(Chart chart, const TestSection& psi, const Vec3& a, const Vec3& x,
                                 const MonopoleConfig& cfg, int nodes);

/// |V(a) V(b) Psi(x) - m(x; a, b) V(a + b) Psi(x)|.
double projective_residual(Chart chart, const TestSection& psi, const Vec3& a, const Vec3& b, const Vec3& x,
                           const MonopoleConfig& cfg, int nodes);

/// ([P_i, P_j] - i hbar beta_ij(x)) Psi(x).
std::complex<double> commutator_PP(Chart chart, const TestSection& psi, const Vec3& x, int i, int j,
                                   const MonopoleConfig& cfg);
/// ([Q^i, P_j] - i hbar delta^i_j) Psi(x).
std::complex<double> commutator_QP(Chart chart, const TestSection& psi, const Vec3& x, int i, int j,
                                   const MonopoleConfig& cfg);

/// d_k Psi + (g/2) eps_ijk (x^i/|x|^2) e_j Psi, quaternions acting from the left.
Quaternion q_covariant_derivative(double g, const QTestSection& psi, const Vec3& x, int k,
                                  const Exclusion& excl = {});

struct QCommutatorResiduals {
  double vs_g_scaled;  // against -(g/2) eps_ijk x^k/|x|^3 j(x) Psi
  double vs_target;    // against the g = 1 form -(1/2) eps_ijk x^k/|x|^3 j(x) Psi
  double vs_zero;      // |[nabla_i, nabla_j] Psi|
};
QCommutatorResiduals q_commutator_residual(double g, const QTestSection& psi, const Vec3& x, int i, int j,
                                           const Exclusion& excl = {});

/// |(J nabla_i - nabla_i J) Psi(x)| with J the left multiplication by j(x).
double j_commutation_residual(double g, const QTestSection& psi, const Vec3& x, int i, const Exclusion& excl = {});

/// (V(a) Psi)(x) = T(x, a) Psi(x + a), T the midpoint transport with `steps` pieces.
Quaternion q_translate(const QTestSection& psi, const Vec3& a, const Vec3& x, int steps, const Exclusion& excl = {});

struct QProjectiveResiduals {
  double residual;  // |V(a)V(b)Psi - M(a,b) V(a+b) Psi|
  double swapped;   // same with the multiplier placed after the transport
};
QProjectiveResiduals q_projective_residual(const QTestSection& psi, const Vec3& a, const Vec3& b, const Vec3& x,
                                           double hbar, int steps, const Exclusion& excl = {});

}  // namespace monopole
