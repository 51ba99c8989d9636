#pragma once

#include <frobtor/fiber.hpp>

namespace frobtor {

// Operators on the flat frame {d/dp_1, ..., d/dp_n, t d/dt}.
using FrameOp = Eigen::MatrixXcd;

Eigen::VectorXcd to_vector(const TangentVec& v);
TangentVec to_tangent(const Eigen::VectorXcd& v);

double max_abs(const FrameOp& m);

// Matrix of multiplication by X at the base point (column j is X * frame_j).
FrameOp mult_operator(const FiberAlgebra& alg, const BasePoint& pt, const TangentVec& X);

// Connection form contracted with the direction X, assembled term by term
// from the dual one-form expansion rather than through the product.
FrameOp dual_form_operator(const FiberAlgebra& alg, const BasePoint& pt, const TangentVec& X);

// Directional derivative of the multiplication operator of Y along dir.
FrameOp iota_derivative(const FiberAlgebra& alg, const BasePoint& pt, const TangentVec& dir,
                        const TangentVec& Y);
FrameOp iota_derivative_fd(const FiberAlgebra& alg, const BasePoint& pt, const TangentVec& dir,
                           const TangentVec& Y, double step);

struct CurvaturePieces {
  FrameOp first_order;   // d_X iota_Y - d_Y iota_X
  FrameOp second_order;  // [iota_X, iota_Y]
  double scale = 0.0;    // magnitude of the constituent terms, floored
};
CurvaturePieces curvature_pieces(const FiberAlgebra& alg, const BasePoint& pt,
                                 const TangentVec& X, const TangentVec& Y);

// Curvature of the pencil connection at parameter mu.
FrameOp curvature(const FiberAlgebra& alg, const BasePoint& pt, cplx mu, const TangentVec& X,
                  const TangentVec& Y);

// The form contracted with the Euler direction must be the identity.
double dilatation_residual(const FiberAlgebra& alg, const BasePoint& pt);

// iota_X Y - iota_Y X through the operator path.
double torsion_residual(const FiberAlgebra& alg, const BasePoint& pt, const TangentVec& X,
                        const TangentVec& Y, double* scale_out = nullptr);

}  // namespace frobtor
