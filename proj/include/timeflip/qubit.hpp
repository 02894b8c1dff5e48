// Encoding axes, pure-qubit (p, phi) parameterizations and Bloch vectors.
#pragma once

#include <array>

#include "timeflip/linalg.hpp"

namespace timeflip {

/// Unit vector n = (n1, n2, n3) defining the rotation axis of the encoding
/// unitary.  Construction rejects non-unit input (tolerance 1e-9).
struct EncodingAxis {
    double n1, n2, n3;

    EncodingAxis(double n1_, double n2_, double n3_);

    /// Builds an axis from an arbitrary nonzero vector by normalizing it.
    static EncodingAxis normalized(double x, double y, double z);
    static EncodingAxis x_axis() { return {1.0, 0.0, 0.0}; }
    static EncodingAxis y_axis() { return {0.0, 1.0, 0.0}; }
    static EncodingAxis z_axis() { return {0.0, 0.0, 1.0}; }

    /// n1*sigma_x + n2*sigma_y + n3*sigma_z.
    CMat dot_pauli() const;
};

/// Pure qubit sqrt(p)|0> + e^{i phi} sqrt(1-p)|1>.  Used both for probe
/// qubits (p_s, theta_s) and the control qubit (p_c, theta_c).
struct PureQubit {
    double p;
    double phi;

    PureQubit(double p_, double phi_);

    CVec ket() const;
    std::array<double, 3> bloch() const;  // (s_x, s_y, s_z), unit length
};

/// Bloch vector of a possibly mixed single-qubit state, |s| <= 1.
struct BlochVector {
    double x, y, z;

    BlochVector(double x_, double y_, double z_);

    /// rho = (I + s . sigma)/2.
    CMat density() const;
};

}  // namespace timeflip
