#pragma once

// Singularity data for the two R series. Both satisfy an inversion relation
// through a hypergeometric series with positive coefficients whose terms at
// the radius decay like n^-2, which gives the logarithmic singular
// behaviour verified numerically here:
//   quartic: radius sqrt(3)/(12 pi), value of Omega at (1/27)(1-e) grows by
//            (sqrt(3)/(54 pi)) e log e + O(e)
//   general: radius 1/(4 pi), slope 1/(16 pi)
// and the coefficients obey r_n ~ -kappa' mu^n / (n^2 log^2 n) with
// kappa' = 1/6 resp. 1/4.

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "closedform.hpp"
#include "real.hpp"

namespace eo {

struct AsymConstants {
    Family family = Family::Quartic;
    Real rho;
    Real mu;
    Rational kappa;      // amplitude of the main generating function
    Real slope;          // coefficient of eps*log(eps) in Omega at the radius
    Rational omega_radius; // radius of the hypergeometric series
};

inline AsymConstants constants(Family f, long precision_bits) {
    if (precision_bits < 64) throw std::invalid_argument("constants: need >= 64 bits");
    Real pi = Real::pi(precision_bits);
    AsymConstants a{f, Real(precision_bits), Real(precision_bits), Rational(0),
                    Real(precision_bits), Rational(0)};
    if (f == Family::Quartic) {
        Real s3 = Real(3, precision_bits).sqrt();
        a.rho = s3 / (Real(12, precision_bits) * pi);
        a.mu = Real(4, precision_bits) * s3 * pi;
        a.kappa = Rational(1) / Rational(18);
        a.slope = s3 / (Real(54, precision_bits) * pi);
        a.omega_radius = Rational(1) / Rational(27);
    } else {
        a.rho = Real(1, precision_bits) / (Real(4, precision_bits) * pi);
        a.mu = Real(4, precision_bits) * pi;
        a.kappa = Rational(1) / Rational(16);
        a.slope = Real(1, precision_bits) / (Real(16, precision_bits) * pi);
        a.omega_radius = Rational(1) / Rational(16);
    }
    return a;
}

// the radius predicted for the six-vertex model at loop weight parameter
// lambda: (1/(8 lambda pi)) sin(lambda pi/4) / cos(lambda pi/4)^3; the
// quartic family sits at lambda = 2/3
inline Real six_vertex_radius_lambda(const Rational& lambda, long precision_bits) {
    Real pi = Real::pi(precision_bits);
    Real lam(lambda, precision_bits);
    Real x = lam * pi / Real(4, precision_bits);
    return x.sin() / (Real(8, precision_bits) * lam * pi * x.cos().pow_ui(3));
}

// the same radius in terms of the alternating-vertex weight w:
// (1/(4 arccos(w/2))) sqrt(2-w) / (2+w)^(3/2); the general family sits at
// w = 0
inline Real six_vertex_radius_weight(const Rational& w, long precision_bits) {
    Real ww(w, precision_bits);
    Real two(2, precision_bits);
    Real num = (two - ww).sqrt();
    Real den = (two + ww).pow_ui(3).sqrt();
    return num / (Real(4, precision_bits) * (ww / two).acos() * den);
}

// Omega evaluated at radius*(1-eps), summed with a rigorous stopping rule:
// the weight ratio stays below 1/radius (checked as the sum runs), so the
// term ratio stays below 1-eps and the tail after term n is below
// term_n * (1-eps)/eps. Weights advance by their one-step ratio
//   quartic: w_n/w_{n-1} = 3n(3n-1)(3n-2) / (n^2 (n+1))
//   general: w_n/w_{n-1} = 4(2n-1)^2 / (n (n+1))
// so no large integers ever materialize.
inline Real omega_at(Family f, const Rational& eps, long precision_bits) {
    if (!(Rational(0) < eps) || !(eps < Rational(1)))
        throw std::invalid_argument("omega_at: need 0 < eps < 1");
    FamilyParams fp = family_params(f);
    Rational radius = Rational(1) / Rational(fp.ode_m);
    Rational x = radius * (Rational(1) - eps);
    Real xr(x, precision_bits);
    Real term = xr; // n = 0 term: 1 * x^1
    Real sum = term;
    Real eps_r(eps, precision_bits);
    Real tail_factor = (Real(1, precision_bits) - eps_r) / eps_r;
    // threshold 2^-(precision/2)
    Real threshold = (Real(Rational(1) / Rational(2), precision_bits)).pow_ui(
        static_cast<unsigned long>(precision_bits / 2));
    // generous ceiling on the geometric decay horizon
    Rational inv_eps = Rational(1) / eps;
    long inv_eps_floor = inv_eps.numerator().to_long() / inv_eps.denominator().to_long();
    long max_terms = 100 + 2 * precision_bits * (inv_eps_floor + 1);
    for (long n = 1;; ++n) {
        Rational ratio =
            f == Family::Quartic
                ? Rational(Integer(3 * n) * Integer(3 * n - 1) * Integer(3 * n - 2),
                           Integer(n) * Integer(n) * Integer(n + 1))
                : Rational(Integer(4) * Integer(2 * n - 1) * Integer(2 * n - 1),
                           Integer(n) * Integer(n + 1));
        // the stopping rule needs weight ratios bounded by 1/radius
        if (Rational(fp.ode_m) < ratio)
            throw std::logic_error("omega_at: term ratio exceeded the assumed bound");
        term = term * Real(ratio, precision_bits) * xr;
        sum = sum + term;
        if (term * tail_factor < threshold) break;
        if (n > max_terms)
            throw std::domain_error("omega_at: tail bound unreachable at this precision");
    }
    return sum;
}

// two evaluations of Omega near the radius determine the eps*log(eps)
// coefficient once the O(eps) term is modelled as exactly linear
inline Real singular_slope_fit(Family f, const Rational& eps1, const Rational& eps2,
                               long precision_bits) {
    if (!(eps2 < eps1)) throw std::invalid_argument("singular_slope_fit: need eps2 < eps1");
    AsymConstants a = constants(f, precision_bits);
    Real w1 = omega_at(f, eps1, precision_bits) - a.rho;
    Real w2 = omega_at(f, eps2, precision_bits) - a.rho;
    Real e1(eps1, precision_bits), e2(eps2, precision_bits);
    // w_i / eps_i = s log(eps_i) + a
    return (w1 / e1 - w2 / e2) / (e1.log() - e2.log());
}

struct GrowthRow {
    long n = 0;
    Integer r_n;
    Real ratio;      // r_{n+1} / r_n
    Real normalized; // n^2 log^2(n) |r_n| / mu^n
};

inline std::vector<GrowthRow> growth_report(Family f, long n_max, long precision_bits = 256) {
    if (n_max < 1 || n_max > 2000) throw std::domain_error("growth_report: n_max out of range");
    USeries R = series_R(f, n_max + 1);
    AsymConstants a = constants(f, precision_bits);
    std::vector<GrowthRow> rows;
    rows.reserve(size_t(n_max));
    Real mu_pow = a.mu; // mu^n, starting at n = 1
    for (long n = 1; n <= n_max; ++n) {
        GrowthRow row;
        row.n = n;
        Rational rn = R.coeff(n);
        if (!rn.is_integer()) throw std::logic_error("growth_report: non-integral coefficient");
        row.r_n = rn.numerator();
        Rational rn1 = R.coeff(n + 1);
        row.ratio = Real(rn1 / rn, precision_bits);
        Real nn(n, precision_bits);
        Real logn = nn.log();
        row.normalized =
            nn * nn * logn * logn * Real(rn, precision_bits).abs() / mu_pow;
        rows.push_back(std::move(row));
        mu_pow = mu_pow * a.mu;
    }
    return rows;
}

inline std::string growth_csv(Family f, long n_max, long precision_bits = 256) {
    std::ostringstream os;
    os << "n,r_n,ratio,normalized\n";
    for (const auto& row : growth_report(f, n_max, precision_bits)) {
        os << row.n << "," << row.r_n.to_string() << "," << row.ratio.to_string(20) << ","
           << row.normalized.to_string(20) << "\n";
    }
    return os.str();
}

} // namespace eo
