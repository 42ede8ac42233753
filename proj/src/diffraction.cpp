#include "o2i/diffraction.hpp"

#include <cmath>
#include <complex>
#include <limits>

#include "o2i/constants.hpp"
#include "o2i/error.hpp"

namespace o2i {

namespace {

constexpr double kSeriesLimit = 1.5;
constexpr double kAsymptoticLimit = 50.0;
constexpr double kEps = 1e-16;
constexpr int kMaxIter = 200;

void require_positive(double value) {
    if (!std::isfinite(value) || value <= 0.0) throw DomainError("invalid geometry");
}

// Taylor series of int_0^x exp(j pi s^2 / 2) ds, term k carries (pi x^2/2)^k / k!.
FresnelValue fresnel_series(double x) {
    if (x == 0.0) return {};
    const double t = kPi * x * x / 2.0;
    double c = 0.0;
    double s = 0.0;
    double power = x; // x * t^k / k!
    for (int k = 0; k < kMaxIter; ++k) {
        const double term = power / (2 * k + 1);
        switch (k % 4) {
            case 0: c += term; break;
            case 1: s += term; break;
            case 2: c -= term; break;
            case 3: s -= term; break;
        }
        if (term < kEps * std::abs(k % 2 == 0 ? c : s)) break;
        power *= t / (k + 1);
    }
    return {c, s};
}

// C + jS = (1+j)/2 * [1 - exp(j pi x^2/2) * h] where h is the continued fraction
// for erfc along the diagonal, evaluated with the modified Lentz method.
FresnelValue fresnel_continued_fraction(double x) {
    using cplx = std::complex<double>;
    const double pix2 = kPi * x * x;
    constexpr double tiny = std::numeric_limits<double>::min() / kEps;

    cplx b(1.0, -pix2);
    cplx cc = 1.0 / tiny;
    cplx d = 1.0 / b;
    cplx h = d;
    double n = -1.0;
    for (int k = 2; k <= kMaxIter; ++k) {
        n += 2.0;
        const double a = -n * (n + 1.0);
        b += 4.0;
        d = 1.0 / (a * d + b);
        cc = b + a / cc;
        const cplx del = cc * d;
        h *= del;
        if (std::abs(del.real() - 1.0) + std::abs(del.imag()) < kEps) break;
    }
    h *= cplx(x, -x);
    const cplx phase(std::cos(0.5 * pix2), std::sin(0.5 * pix2));
    const cplx cs = cplx(0.5, 0.5) * (1.0 - phase * h);
    return {cs.real(), cs.imag()};
}

} // namespace

FresnelValue fresnel_integrals(double v) {
    if (!std::isfinite(v)) throw DomainError("invalid diffraction parameter");
    const double x = std::abs(v);
    FresnelValue out;
    if (x < kSeriesLimit) {
        out = fresnel_series(x);
    } else if (x <= kAsymptoticLimit) {
        out = fresnel_continued_fraction(x);
    } else {
        out = {0.5, 0.5};
    }
    if (v < 0.0) {
        out.c = -out.c;
        out.s = -out.s;
    }
    return out;
}

DiffractionParameter diffraction_parameter(double delta, double d1, double d2, double wavelength) {
    require_positive(d1);
    require_positive(d2);
    require_positive(wavelength);
    return {delta * std::sqrt(2.0 / wavelength * (1.0 / d1 + 1.0 / d2))};
}

double ked_excess_loss_db(DiffractionParameter v) {
    if (std::isnan(v.v)) throw DomainError("invalid diffraction parameter");
    if (v.v == std::numeric_limits<double>::infinity()) return 0.0;
    if (v.v == -std::numeric_limits<double>::infinity())
        return std::numeric_limits<double>::infinity();

    const FresnelValue f = fresnel_integrals(-v.v);
    const double re = 1.0 - f.c - f.s;
    const double im = f.c - f.s;
    return -20.0 * std::log10(std::sqrt(re * re + im * im) / 2.0);
}

double free_space_path_loss_db(double d, double wavelength) {
    require_positive(d);
    require_positive(wavelength);
    return 20.0 * std::log10(4.0 * kPi * d / wavelength);
}

double total_path_loss_db(double d1, double d2, double delta, double wavelength) {
    return free_space_path_loss_db(d1 + d2, wavelength) +
           ked_excess_loss_db(diffraction_parameter(delta, d1, d2, wavelength));
}

double fresnel_radius(double d1, double d2, double wavelength) {
    require_positive(d1);
    require_positive(d2);
    require_positive(wavelength);
    return std::sqrt(wavelength * d1 * d2 / (d1 + d2));
}

} // namespace o2i
