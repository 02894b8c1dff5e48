#include "timeflip/su2.hpp"

#include <cmath>

namespace timeflip {

CMat su2_unitary(double theta, const EncodingAxis& axis) {
    const Cplx i(0.0, 1.0);
    return Cplx(std::cos(theta / 2.0)) * identity2() -
           i * Cplx(std::sin(theta / 2.0)) * axis.dot_pauli();
}

CMat su2_derivative(double theta, const EncodingAxis& axis) {
    const Cplx i(0.0, 1.0);
    return (-i * 0.5) * (axis.dot_pauli() * su2_unitary(theta, axis));
}

EncodingAxis polar_axis(double phi, double xi) {
    return EncodingAxis(std::sin(phi) * std::cos(xi),
                        std::sin(phi) * std::sin(xi),
                        std::cos(phi));
}

CMat su2_axis_derivative(double theta, double phi, double xi, AxisParam which) {
    // Only the axis depends on phi/xi: dU = -i sin(theta/2) (dn . sigma).
    double d1, d2, d3;
    if (which == AxisParam::phi) {
        d1 = std::cos(phi) * std::cos(xi);
        d2 = std::cos(phi) * std::sin(xi);
        d3 = -std::sin(phi);
    } else {
        d1 = -std::sin(phi) * std::sin(xi);
        d2 = std::sin(phi) * std::cos(xi);
        d3 = 0.0;
    }
    const Cplx i(0.0, 1.0);
    const CMat dn_sigma =
        Cplx(d1) * pauli_x() + Cplx(d2) * pauli_y() + Cplx(d3) * pauli_z();
    return (-i * Cplx(std::sin(theta / 2.0))) * dn_sigma;
}

}  // namespace timeflip
