// SU(2) rotations about a fixed axis and their analytic derivatives.
#pragma once

#include "timeflip/linalg.hpp"
#include "timeflip/qubit.hpp"

namespace timeflip {

/// U(theta) = exp(-i theta/2 n.sigma) = cos(theta/2) I - i sin(theta/2) n.sigma.
CMat su2_unitary(double theta, const EncodingAxis& axis);

/// dU/dtheta = -(i/2)(n.sigma) U(theta).
CMat su2_derivative(double theta, const EncodingAxis& axis);

/// Axis-angle family used for axis estimation:
/// n(phi, xi) = (sin phi cos xi, sin phi sin xi, cos phi).
EncodingAxis polar_axis(double phi, double xi);

/// Analytic derivative of su2_unitary(theta, polar_axis(phi, xi)) with
/// respect to phi or xi (theta held fixed).
enum class AxisParam { phi, xi };
CMat su2_axis_derivative(double theta, double phi, double xi, AxisParam which);

}  // namespace timeflip
