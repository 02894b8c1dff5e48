#include "timeflip/qubit.hpp"

#include <cmath>
#include <stdexcept>

namespace timeflip {

EncodingAxis::EncodingAxis(double n1_, double n2_, double n3_)
    : n1(n1_), n2(n2_), n3(n3_) {
    const double len2 = n1 * n1 + n2 * n2 + n3 * n3;
    if (std::abs(len2 - 1.0) > 1e-9)
        throw std::invalid_argument("encoding axis must be unit length");
}

EncodingAxis EncodingAxis::normalized(double x, double y, double z) {
    const double len = std::sqrt(x * x + y * y + z * z);
    if (len < 1e-300) throw std::invalid_argument("cannot normalize zero axis");
    return {x / len, y / len, z / len};
}

CMat EncodingAxis::dot_pauli() const {
    return Cplx(n1) * pauli_x() + Cplx(n2) * pauli_y() + Cplx(n3) * pauli_z();
}

PureQubit::PureQubit(double p_, double phi_) : p(p_), phi(phi_) {
    if (p < 0.0 || p > 1.0) throw std::domain_error("probability outside [0,1]");
}

CVec PureQubit::ket() const {
    // Global phase fixed by a real nonnegative |0> amplitude.
    return {Cplx(std::sqrt(p)),
            std::exp(Cplx(0.0, phi)) * std::sqrt(1.0 - p)};
}

std::array<double, 3> PureQubit::bloch() const {
    const double t = 2.0 * std::sqrt(p * (1.0 - p));
    return {t * std::cos(phi), t * std::sin(phi), 2.0 * p - 1.0};
}

BlochVector::BlochVector(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {
    if (x * x + y * y + z * z > 1.0 + 1e-12)
        throw std::domain_error("Bloch vector longer than 1");
}

CMat BlochVector::density() const {
    CMat rho(2, 2);
    const Cplx i(0.0, 1.0);
    rho(0, 0) = 0.5 * (1.0 + z);
    rho(1, 1) = 0.5 * (1.0 - z);
    rho(0, 1) = 0.5 * (x - i * y);
    rho(1, 0) = 0.5 * (x + i * y);
    return rho;
}

}  // namespace timeflip
