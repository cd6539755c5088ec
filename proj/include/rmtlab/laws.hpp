#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rmtlab/sample.hpp"

namespace rmtlab::laws {

// ---------------------------------------------------------------------------
// Closed-form building blocks (unit-scale spacing distributions).
// ---------------------------------------------------------------------------

/// W(s) = 1 - exp(-pi s^2 / 4), s >= 0.
double wigner_cdf(double s);

/// w(s) = (pi/2) s exp(-pi s^2 / 4), s >= 0.
double wigner_pdf(double s);

enum class Bound { Lower, Upper };

/// Bounds on the cumulative spacing distribution of the orthogonal ensemble:
/// lower 1 - exp(-pi^2 s^2/16), upper 1 - exp(-pi^2 s^2/16)(1 - pi^2 s^2/48).
double goe_bound_cdf(double s, Bound which);

/// The bound densities in their literal closed form:
///   l(s) = (pi s / 2) exp(-pi s^2 / 4)
///   u(s) = pi^2 s (64 - pi^2 s^2)/384 * exp(-pi^2 s^2 / 16)
/// u is the exact derivative of the upper-bound cdf and goes negative for
/// s > 8/pi. l is NOT the derivative of the lower-bound cdf (it coincides
/// with wigner_pdf); SpacingLaw{GoeLowerBound} uses the exact derivative
/// instead so that its pdf and cdf stay consistent.
double goe_bound_pdf(double s, Bound which);

/// Gamma density f(s; nu, kappa) = nu^kappa s^{kappa-1} e^{-s nu}/Gamma(kappa),
/// evaluated in log space. s = 0 is allowed for kappa >= 1 (limit value).
double gamma_pdf(double s, double nu, double kappa);

/// P(kappa, nu s).
double gamma_cdf(double s, double nu, double kappa);

/// Coefficients (a, b) of the unit-mean generalized gamma density
/// g(s; beta, omega) = a s^beta exp(-b s^omega):
///   a = omega * Gamma((2+beta)/omega)^{beta+1} / Gamma((1+beta)/omega)^{beta+2}
///   b = [Gamma((2+beta)/omega) / Gamma((1+beta)/omega)]^omega
/// computed in log space. Requires beta >= 0, omega > 0.
std::pair<double, double> gen_gamma_coeffs(double beta, double omega);

double gen_gamma_pdf(double s, double beta, double omega);

/// P((1+beta)/omega, b s^omega).
double gen_gamma_cdf(double s, double beta, double omega);

// ---------------------------------------------------------------------------
// SpacingLaw: a tagged closed-form spacing distribution.
// ---------------------------------------------------------------------------

enum class LawKind {
    Exponential,
    WignerSurmise,
    GoeLowerBound,
    GoeUpperBound,
    Gamma,
    UnitMeanGamma,
    GeneralizedGamma,
};

struct Moments {
    std::vector<double> raw;  // raw[k] = E[s^k], k = 0..max_order
    double mean() const { return raw.at(1); }
    double variance() const { return raw.at(2) - raw.at(1) * raw.at(1); }
    double cv() const;
};

class SpacingLaw {
  public:
    static SpacingLaw exponential();
    static SpacingLaw wigner();
    static SpacingLaw goe_lower();
    static SpacingLaw goe_upper();
    static SpacingLaw gamma(double nu, double kappa);
    static SpacingLaw unit_mean_gamma(double kappa);
    static SpacingLaw generalized_gamma(double beta, double omega);

    LawKind kind() const { return kind_; }
    std::string name() const;
    double param_a() const { return a_; }  // nu / kappa / beta, by kind
    double param_b() const { return b_; }  // kappa / omega, by kind

    double pdf(double s) const;
    double cdf(double s) const;

    /// Raw moments E[s^k], k = 0..max_order (max_order <= 4), by adaptive
    /// quadrature on [0, s_max] with the truncated tail below 1e-12.
    Moments moments(int max_order = 2) const;

    /// True for every kind except GoeUpperBound (signed density).
    bool sampleable() const;

    /// n i.i.d. draws, reproducible from the seed. Inverse-transform for the
    /// closed-form kinds; gamma kinds via Marsaglia-Tsang on stream draws.
    SpacingSample sample(std::size_t n, std::uint64_t seed) const;

  private:
    SpacingLaw(LawKind kind, double a, double b);
    LawKind kind_;
    double a_ = 0.0;
    double b_ = 0.0;
    // cached generalized-gamma coefficients
    double gg_a_ = 0.0;
    double gg_b_ = 0.0;
};

/// Construct from a CLI-style name: exponential|poisson, wigner, goe-lower,
/// goe-upper, gamma (nu kappa), unit-gamma (kappa), gen-gamma (beta omega),
/// caer-goe, caer-gue, caer-gse. Parameter count is validated.
SpacingLaw law_from_name(const std::string& name, std::span<const double> params = {});

// ---------------------------------------------------------------------------
// Ensemble classes and their published generalized-gamma fit parameters.
// ---------------------------------------------------------------------------

enum class EnsembleName { Poisson, Goe, Gue, Gse };

std::string to_string(EnsembleName name);
EnsembleName ensemble_from_string(const std::string& name);

/// Per-ensemble best-fit constants of the generalized-gamma proxy laws,
/// carried verbatim from the published fit table (the variance column is
/// reference data, not a computed property of the law; see caer_law()).
struct EnsembleClass {
    EnsembleName name;
    double caer_beta;
    double caer_omega;
    double caer_variance;
};

const EnsembleClass& ensemble_class(EnsembleName name);

/// GeneralizedGamma(caer_beta, caer_omega) for the given ensemble
/// (Exponential for Poisson).
SpacingLaw caer_law(EnsembleName name);

// ---------------------------------------------------------------------------
// Kolmogorov-Smirnov distances.
// ---------------------------------------------------------------------------

/// sup |A(s) - B(s)| over an explicit sorted grid.
double ks_distance(const SpacingLaw& a, const SpacingLaw& b, std::span<const double> grid);

/// Same on the default grid [0, 6] with step 1e-3.
double ks_distance(const SpacingLaw& a, const SpacingLaw& b);

/// One-sample KS statistic of a sample against a law.
double empirical_ks(std::span<const double> sample, const SpacingLaw& law);

/// Two-sample KS statistic.
double two_sample_ks(std::span<const double> a, std::span<const double> b);

std::vector<double> default_ks_grid();

}  // namespace rmtlab::laws
