#include "rmtlab/laws.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rmtlab/quadrature.hpp"
#include "rmtlab/rng.hpp"
#include "rmtlab/specfun.hpp"

namespace rmtlab::laws {

namespace {

constexpr double kPi = 3.14159265358979323846;

void require_nonnegative_s(double s, const char* fn) {
    if (!std::isfinite(s) || s < 0.0) {
        throw std::domain_error(std::string(fn) + ": s must be finite and >= 0");
    }
}

void require_positive(double v, const char* fn, const char* what) {
    if (!std::isfinite(v) || v <= 0.0) {
        throw std::domain_error(std::string(fn) + ": " + what + " must be finite and > 0");
    }
}

// Marsaglia-Tsang gamma deviate, shape kappa, unit rate.
double gamma_deviate(rng::Stream& stream, double kappa) {
    if (kappa < 1.0) {
        const double g = gamma_deviate(stream, kappa + 1.0);
        return g * std::pow(stream.next_unit(), 1.0 / kappa);
    }
    const double d = kappa - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x, v;
        do {
            x = stream.next_gaussian();
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = stream.next_unit();
        if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
        if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
    }
}

}  // namespace

// ---------------------------------------------------------------------------
// Closed forms.
// ---------------------------------------------------------------------------

double wigner_cdf(double s) {
    require_nonnegative_s(s, "wigner_cdf");
    return -std::expm1(-kPi * s * s / 4.0);
}

double wigner_pdf(double s) {
    require_nonnegative_s(s, "wigner_pdf");
    return (kPi / 2.0) * s * std::exp(-kPi * s * s / 4.0);
}

double goe_bound_cdf(double s, Bound which) {
    require_nonnegative_s(s, "goe_bound_cdf");
    const double q = kPi * kPi * s * s / 16.0;
    if (which == Bound::Lower) return -std::expm1(-q);
    // May exceed 1 where the subtracted factor is negative; returned verbatim.
    return 1.0 - std::exp(-q) * (1.0 - kPi * kPi * s * s / 48.0);
}

double goe_bound_pdf(double s, Bound which) {
    require_nonnegative_s(s, "goe_bound_pdf");
    if (which == Bound::Lower) return (kPi * s / 2.0) * std::exp(-kPi * s * s / 4.0);
    const double p2s2 = kPi * kPi * s * s;
    return kPi * kPi * s * (64.0 - p2s2) / 384.0 * std::exp(-p2s2 / 16.0);
}

double gamma_pdf(double s, double nu, double kappa) {
    require_positive(nu, "gamma_pdf", "nu");
    require_positive(kappa, "gamma_pdf", "kappa");
    if (!std::isfinite(s) || s < 0.0 || (s == 0.0 && kappa < 1.0)) {
        throw std::domain_error("gamma_pdf: s must be > 0 (s = 0 allowed only for kappa >= 1)");
    }
    if (s == 0.0) return kappa == 1.0 ? nu : 0.0;
    return std::exp(kappa * std::log(nu) + (kappa - 1.0) * std::log(s) -
                    specfun::log_gamma(kappa) - s * nu);
}

double gamma_cdf(double s, double nu, double kappa) {
    require_positive(nu, "gamma_cdf", "nu");
    require_positive(kappa, "gamma_cdf", "kappa");
    require_nonnegative_s(s, "gamma_cdf");
    return specfun::reg_lower_gamma(kappa, nu * s);
}

std::pair<double, double> gen_gamma_coeffs(double beta, double omega) {
    if (!std::isfinite(beta) || beta < 0.0) {
        throw std::domain_error("gen_gamma_coeffs: beta must be finite and >= 0");
    }
    require_positive(omega, "gen_gamma_coeffs", "omega");
    const double lg1 = specfun::log_gamma((1.0 + beta) / omega);
    const double lg2 = specfun::log_gamma((2.0 + beta) / omega);
    const double log_a = std::log(omega) + (beta + 1.0) * lg2 - (beta + 2.0) * lg1;
    const double log_b = omega * (lg2 - lg1);
    return {std::exp(log_a), std::exp(log_b)};
}

double gen_gamma_pdf(double s, double beta, double omega) {
    require_nonnegative_s(s, "gen_gamma_pdf");
    const auto [a, b] = gen_gamma_coeffs(beta, omega);
    if (s == 0.0) return beta == 0.0 ? a : 0.0;
    return std::exp(std::log(a) + beta * std::log(s) - b * std::pow(s, omega));
}

double gen_gamma_cdf(double s, double beta, double omega) {
    require_nonnegative_s(s, "gen_gamma_cdf");
    const auto [a, b] = gen_gamma_coeffs(beta, omega);
    (void)a;
    return specfun::reg_lower_gamma((1.0 + beta) / omega, b * std::pow(s, omega));
}

// ---------------------------------------------------------------------------
// SpacingLaw.
// ---------------------------------------------------------------------------

SpacingLaw::SpacingLaw(LawKind kind, double a, double b) : kind_(kind), a_(a), b_(b) {
    if (kind_ == LawKind::GeneralizedGamma) {
        std::tie(gg_a_, gg_b_) = gen_gamma_coeffs(a_, b_);
    }
}

SpacingLaw SpacingLaw::exponential() { return {LawKind::Exponential, 0.0, 0.0}; }
SpacingLaw SpacingLaw::wigner() { return {LawKind::WignerSurmise, 0.0, 0.0}; }
SpacingLaw SpacingLaw::goe_lower() { return {LawKind::GoeLowerBound, 0.0, 0.0}; }
SpacingLaw SpacingLaw::goe_upper() { return {LawKind::GoeUpperBound, 0.0, 0.0}; }

SpacingLaw SpacingLaw::gamma(double nu, double kappa) {
    require_positive(nu, "SpacingLaw::gamma", "nu");
    require_positive(kappa, "SpacingLaw::gamma", "kappa");
    return {LawKind::Gamma, nu, kappa};
}

SpacingLaw SpacingLaw::unit_mean_gamma(double kappa) {
    require_positive(kappa, "SpacingLaw::unit_mean_gamma", "kappa");
    return {LawKind::UnitMeanGamma, kappa, kappa};
}

SpacingLaw SpacingLaw::generalized_gamma(double beta, double omega) {
    return {LawKind::GeneralizedGamma, beta, omega};
}

std::string SpacingLaw::name() const {
    auto fmt = [](double v) {
        std::string s = std::to_string(v);
        s.erase(s.find_last_not_of('0') + 1);
        if (!s.empty() && s.back() == '.') s.pop_back();
        return s;
    };
    switch (kind_) {
        case LawKind::Exponential: return "exponential";
        case LawKind::WignerSurmise: return "wigner";
        case LawKind::GoeLowerBound: return "goe-lower";
        case LawKind::GoeUpperBound: return "goe-upper";
        case LawKind::Gamma: return "gamma(" + fmt(a_) + "," + fmt(b_) + ")";
        case LawKind::UnitMeanGamma: return "unit-gamma(" + fmt(b_) + ")";
        case LawKind::GeneralizedGamma: return "gen-gamma(" + fmt(a_) + "," + fmt(b_) + ")";
    }
    return "?";
}

double SpacingLaw::pdf(double s) const {
    switch (kind_) {
        case LawKind::Exponential:
            require_nonnegative_s(s, "pdf");
            return std::exp(-s);
        case LawKind::WignerSurmise: return wigner_pdf(s);
        case LawKind::GoeLowerBound: {
            // exact derivative of the lower-bound cdf
            require_nonnegative_s(s, "pdf");
            const double q = kPi * kPi * s * s / 16.0;
            return kPi * kPi * s / 8.0 * std::exp(-q);
        }
        case LawKind::GoeUpperBound: return goe_bound_pdf(s, Bound::Upper);
        case LawKind::Gamma:
        case LawKind::UnitMeanGamma: return gamma_pdf(s, a_, b_);
        case LawKind::GeneralizedGamma: {
            require_nonnegative_s(s, "pdf");
            if (s == 0.0) return a_ == 0.0 ? gg_a_ : 0.0;
            return std::exp(std::log(gg_a_) + a_ * std::log(s) - gg_b_ * std::pow(s, b_));
        }
    }
    throw std::logic_error("pdf: bad kind");
}

double SpacingLaw::cdf(double s) const {
    switch (kind_) {
        case LawKind::Exponential:
            require_nonnegative_s(s, "cdf");
            return -std::expm1(-s);
        case LawKind::WignerSurmise: return wigner_cdf(s);
        case LawKind::GoeLowerBound: return goe_bound_cdf(s, Bound::Lower);
        case LawKind::GoeUpperBound: return goe_bound_cdf(s, Bound::Upper);
        case LawKind::Gamma:
        case LawKind::UnitMeanGamma: return gamma_cdf(s, a_, b_);
        case LawKind::GeneralizedGamma: {
            require_nonnegative_s(s, "cdf");
            return specfun::reg_lower_gamma((1.0 + a_) / b_, gg_b_ * std::pow(s, b_));
        }
    }
    throw std::logic_error("cdf: bad kind");
}

double Moments::cv() const { return std::sqrt(variance()) / mean(); }

Moments SpacingLaw::moments(int max_order) const {
    if (max_order < 0 || max_order > 4) {
        throw std::domain_error("moments: max_order must be in [0, 4]");
    }
    // Scale of the law, to seed the truncation search.
    double scale = 1.0;
    if (kind_ == LawKind::Gamma || kind_ == LawKind::UnitMeanGamma) scale = b_ / a_;

    // Truncation point: the analytic tail beyond s_max must be negligible
    // even when weighted by s^k.
    double s_max = scale;
    for (int j = 0; j < 60; ++j) {
        s_max *= 2.0;
        const double tail = std::fabs(1.0 - cdf(s_max)) * std::pow(std::max(1.0, s_max), max_order);
        if (tail < 1e-13) break;
        if (j == 59) throw std::runtime_error("moments: no usable truncation point");
    }

    const bool singular =
        (kind_ == LawKind::Gamma || kind_ == LawKind::UnitMeanGamma) && b_ < 1.0;

    Moments result;
    result.raw.reserve(static_cast<std::size_t>(max_order) + 1);
    for (int k = 0; k <= max_order; ++k) {
        double value = 0.0;
        if (singular) {
            // Integrable s^{kappa-1} singularity at the origin: substitute
            // w = s^kappa on [0, c], which flattens it exactly.
            const double nu = a_, kappa = b_;
            const double c = std::min(scale, s_max);
            const double w_hi = std::pow(c, kappa);
            const double log_norm = kappa * std::log(nu) - specfun::log_gamma(kappa);
            auto head = [&](double w) {
                if (w <= 0.0) return 0.0;
                const double s = std::pow(w, 1.0 / kappa);
                return std::exp(log_norm + (static_cast<double>(k) / kappa) * std::log(w) -
                                nu * s) /
                       kappa;
            };
            value = quad::integrate(head, 0.0, w_hi, 1e-12, 1e-12);
            auto tail_f = [&](double s) { return std::pow(s, k) * pdf(s); };
            value += quad::integrate(tail_f, c, s_max, 1e-11, 1e-12);
        } else {
            auto f = [&](double s) { return std::pow(s, k) * pdf(s); };
            value = quad::integrate(f, 0.0, s_max, 1e-11, 1e-12);
        }
        result.raw.push_back(value);
    }
    return result;
}

bool SpacingLaw::sampleable() const { return kind_ != LawKind::GoeUpperBound; }

SpacingSample SpacingLaw::sample(std::size_t n, std::uint64_t seed) const {
    if (n < 1) throw std::domain_error("sample: n must be >= 1");
    if (!sampleable()) {
        throw std::invalid_argument(
            "sample: goe-upper is a signed density beyond s = 8/pi; sampling unsupported");
    }
    rng::Stream stream(seed, 0);
    SpacingSample out;
    out.spacings.resize(n);
    out.mode = ExtractionMode::Direct;
    out.provenance = "law=" + name() + " n=" + std::to_string(n) + " seed=" + std::to_string(seed);
    for (std::size_t i = 0; i < n; ++i) {
        double s = 0.0;
        switch (kind_) {
            case LawKind::Exponential: s = -std::log1p(-stream.next_unit()); break;
            case LawKind::WignerSurmise:
                s = std::sqrt(-(4.0 / kPi) * std::log1p(-stream.next_unit()));
                break;
            case LawKind::GoeLowerBound:
                s = (4.0 / kPi) * std::sqrt(-std::log1p(-stream.next_unit()));
                break;
            case LawKind::Gamma:
            case LawKind::UnitMeanGamma: s = gamma_deviate(stream, b_) / a_; break;
            case LawKind::GeneralizedGamma: {
                const double g = gamma_deviate(stream, (1.0 + a_) / b_);
                s = std::pow(g / gg_b_, 1.0 / b_);
                break;
            }
            case LawKind::GoeUpperBound: break;  // unreachable
        }
        out.spacings[i] = s;
    }
    return out;
}

SpacingLaw law_from_name(const std::string& name, std::span<const double> params) {
    auto want = [&](std::size_t k, const char* usage) {
        if (params.size() != k) {
            throw std::invalid_argument("law '" + name + "' expects " + std::to_string(k) +
                                        " parameter(s): " + usage);
        }
    };
    if (name == "exponential" || name == "poisson") {
        want(0, "");
        return SpacingLaw::exponential();
    }
    if (name == "wigner") {
        want(0, "");
        return SpacingLaw::wigner();
    }
    if (name == "goe-lower") {
        want(0, "");
        return SpacingLaw::goe_lower();
    }
    if (name == "goe-upper") {
        want(0, "");
        return SpacingLaw::goe_upper();
    }
    if (name == "gamma") {
        want(2, "nu kappa");
        return SpacingLaw::gamma(params[0], params[1]);
    }
    if (name == "unit-gamma") {
        want(1, "kappa");
        return SpacingLaw::unit_mean_gamma(params[0]);
    }
    if (name == "gen-gamma") {
        want(2, "beta omega");
        return SpacingLaw::generalized_gamma(params[0], params[1]);
    }
    if (name == "caer-goe" || name == "caer-gue" || name == "caer-gse") {
        want(0, "");
        return caer_law(ensemble_from_string(name.substr(5)));
    }
    throw std::invalid_argument("unknown law '" + name + "'");
}

// ---------------------------------------------------------------------------
// Ensemble classes.
// ---------------------------------------------------------------------------

std::string to_string(EnsembleName name) {
    switch (name) {
        case EnsembleName::Poisson: return "poisson";
        case EnsembleName::Goe: return "goe";
        case EnsembleName::Gue: return "gue";
        case EnsembleName::Gse: return "gse";
    }
    return "?";
}

EnsembleName ensemble_from_string(const std::string& name) {
    if (name == "poisson") return EnsembleName::Poisson;
    if (name == "goe") return EnsembleName::Goe;
    if (name == "gue") return EnsembleName::Gue;
    if (name == "gse") return EnsembleName::Gse;
    throw std::invalid_argument("unknown ensemble '" + name + "'");
}

const EnsembleClass& ensemble_class(EnsembleName name) {
    static const EnsembleClass table[4] = {
        {EnsembleName::Poisson, 0.0, 1.0, 1.0},
        {EnsembleName::Goe, 1.0, 1.886, 0.2856},
        {EnsembleName::Gue, 2.0, 1.973, 0.1868},
        {EnsembleName::Gse, 4.0, 2.007, 0.1100},
    };
    return table[static_cast<int>(name)];
}

SpacingLaw caer_law(EnsembleName name) {
    const EnsembleClass& c = ensemble_class(name);
    if (name == EnsembleName::Poisson) return SpacingLaw::exponential();
    return SpacingLaw::generalized_gamma(c.caer_beta, c.caer_omega);
}

// ---------------------------------------------------------------------------
// Kolmogorov-Smirnov distances.
// ---------------------------------------------------------------------------

std::vector<double> default_ks_grid() {
    std::vector<double> grid;
    grid.reserve(6001);
    for (int i = 0; i <= 6000; ++i) grid.push_back(static_cast<double>(i) * 1e-3);
    return grid;
}

double ks_distance(const SpacingLaw& a, const SpacingLaw& b, std::span<const double> grid) {
    if (grid.empty()) throw std::domain_error("ks_distance: empty grid");
    if (!std::is_sorted(grid.begin(), grid.end())) {
        throw std::domain_error("ks_distance: grid must be sorted");
    }
    double sup = 0.0;
    for (double s : grid) sup = std::max(sup, std::fabs(a.cdf(s) - b.cdf(s)));
    return sup;
}

double ks_distance(const SpacingLaw& a, const SpacingLaw& b) {
    const auto grid = default_ks_grid();
    return ks_distance(a, b, grid);
}

double empirical_ks(std::span<const double> sample, const SpacingLaw& law) {
    if (sample.empty()) throw std::domain_error("empirical_ks: empty sample");
    std::vector<double> sorted(sample.begin(), sample.end());
    std::sort(sorted.begin(), sorted.end());
    const double n = static_cast<double>(sorted.size());
    double sup = 0.0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const double f = law.cdf(sorted[i]);
        sup = std::max(sup, std::max((static_cast<double>(i) + 1.0) / n - f,
                                     f - static_cast<double>(i) / n));
    }
    return sup;
}

double two_sample_ks(std::span<const double> a, std::span<const double> b) {
    if (a.empty() || b.empty()) throw std::domain_error("two_sample_ks: empty sample");
    std::vector<double> sa(a.begin(), a.end()), sb(b.begin(), b.end());
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    const double na = static_cast<double>(sa.size()), nb = static_cast<double>(sb.size());
    std::size_t i = 0, j = 0;
    double sup = 0.0;
    while (i < sa.size() && j < sb.size()) {
        const double x = std::min(sa[i], sb[j]);
        while (i < sa.size() && sa[i] <= x) ++i;
        while (j < sb.size() && sb[j] <= x) ++j;
        sup = std::max(sup, std::fabs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
    }
    return sup;
}

}  // namespace rmtlab::laws
