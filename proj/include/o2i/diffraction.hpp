#pragma once

namespace o2i {

struct FresnelValue {
    double c = 0.0; // C(v) = int_0^v cos(pi s^2 / 2) ds
    double s = 0.0; // S(v) = int_0^v sin(pi s^2 / 2) ds
};

// Knife-edge parameter. Positive means the edge clears the direct path.
struct DiffractionParameter {
    double v = 0.0;
};

/// Fresnel cosine and sine integrals.
///
/// Power series for |v| < 1.5, continued fraction for the complementary error
/// function beyond, asymptotic (+-0.5, +-0.5) for |v| > 50. Odd in v.
/// Throws DomainError("invalid diffraction parameter") for non-finite v.
FresnelValue fresnel_integrals(double v);

// v = delta * sqrt(2/lambda * (1/d1 + 1/d2)); throws DomainError("invalid geometry").
DiffractionParameter diffraction_parameter(double delta, double d1, double d2, double wavelength);

/// Excess loss of a single absorbing knife edge in dB (0 in free space, 6.02 at
/// grazing incidence, growing without bound into the shadow).
///
/// Takes the clearance-positive parameter and evaluates the classical
/// -20 log10(|1 - (1+j)F(u)| / 2) with u = -v.
double ked_excess_loss_db(DiffractionParameter v);

// 20 log10(4 pi d / lambda)
double free_space_path_loss_db(double d, double wavelength);

// FSPL over d1 + d2 plus the knife-edge excess loss at intrusion delta.
double total_path_loss_db(double d1, double d2, double delta, double wavelength);

// First Fresnel zone radius sqrt(lambda d1 d2 / (d1 + d2)).
double fresnel_radius(double d1, double d2, double wavelength);

} // namespace o2i
