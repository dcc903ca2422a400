#pragma once
#include <array>
#include <vector>

#include "hcma/tensor.hpp"

namespace hcma {

// ---------------------------------------------------------------------------
// Elementwise (binary ops broadcast right-aligned; all differentiable).
// ---------------------------------------------------------------------------
Tensor add(const Tensor& a, const Tensor& b);
Tensor sub(const Tensor& a, const Tensor& b);
Tensor mul(const Tensor& a, const Tensor& b);
Tensor div(const Tensor& a, const Tensor& b);

Tensor neg(const Tensor& x);
Tensor exp(const Tensor& x);
Tensor log(const Tensor& x);
Tensor sqrt(const Tensor& x);
Tensor relu(const Tensor& x);      // gradient at exactly 0 is 0
Tensor sigmoid(const Tensor& x);
Tensor silu(const Tensor& x);
Tensor softplus(const Tensor& x);

inline Tensor operator+(const Tensor& a, const Tensor& b) { return add(a, b); }
inline Tensor operator-(const Tensor& a, const Tensor& b) { return sub(a, b); }
inline Tensor operator*(const Tensor& a, const Tensor& b) { return mul(a, b); }
inline Tensor operator/(const Tensor& a, const Tensor& b) { return div(a, b); }
inline Tensor operator+(const Tensor& a, double s) { return add(a, Tensor::scalar(s, a.dtype())); }
inline Tensor operator-(const Tensor& a, double s) { return sub(a, Tensor::scalar(s, a.dtype())); }
inline Tensor operator*(const Tensor& a, double s) { return mul(a, Tensor::scalar(s, a.dtype())); }
inline Tensor operator/(const Tensor& a, double s) { return div(a, Tensor::scalar(s, a.dtype())); }
inline Tensor operator-(double s, const Tensor& a) { return sub(Tensor::scalar(s, a.dtype()), a); }
inline Tensor operator*(double s, const Tensor& a) { return mul(Tensor::scalar(s, a.dtype()), a); }

// ---------------------------------------------------------------------------
// Contractions.
// ---------------------------------------------------------------------------
// a: [..., m, k] @ b: [..., k, n] -> [..., m, n]; leading extents broadcast.
Tensor matmul(const Tensor& a, const Tensor& b);

// ---------------------------------------------------------------------------
// Reductions.
// ---------------------------------------------------------------------------
Tensor reduce_sum(const Tensor& x, const std::vector<int>& axes, bool keepdim = false);
Tensor reduce_mean(const Tensor& x, const std::vector<int>& axes, bool keepdim = false);
Tensor reduce_sum(const Tensor& x);   // all axes -> [1]
Tensor reduce_mean(const Tensor& x);  // all axes -> [1]
// Max reduction; output does not track gradients (numerics helper only).
Tensor reduce_max(const Tensor& x, const std::vector<int>& axes, bool keepdim = false);

// Numerically stable softmax along one axis (max-subtraction).
Tensor softmax(const Tensor& x, int axis);

// ---------------------------------------------------------------------------
// Structural ops (all linear; gradients are the inverse scatter/gather).
// ---------------------------------------------------------------------------
Tensor reshape(const Tensor& x, Shape shape);
Tensor permute(const Tensor& x, const std::vector<int>& perm);
Tensor concat(const std::vector<Tensor>& parts, int axis);
std::vector<Tensor> split(const Tensor& x, int axis, const std::vector<int64_t>& sizes);
Tensor slice(const Tensor& x, int axis, int64_t start, int64_t length);
Tensor index_select(const Tensor& x, int axis, const std::vector<int64_t>& indices);

// ---------------------------------------------------------------------------
// Convolutions. x: [B, Cin, D, H, W]; weight: [Cout, Cin/groups, kd, kh, kw];
// bias: [Cout] or undefined. Output extent = floor((in + 2p - k)/s) + 1.
// ---------------------------------------------------------------------------
Tensor conv3d(const Tensor& x, const Tensor& weight, const Tensor& bias,
              std::array<int, 3> stride, std::array<int, 3> padding, int groups = 1);
Tensor conv3d(const Tensor& x, const Tensor& weight, const Tensor& bias,
              int stride = 1, int padding = 0, int groups = 1);

// Adjoint of a stride-s conv with the same kernel; weight: [Cin, Cout, k, k, k].
// Output extent = (in - 1) * s + k.
Tensor transpose_conv3d(const Tensor& x, const Tensor& weight, const Tensor& bias,
                        int stride = 2);

Tensor avg_pool3d(const Tensor& x, int kernel = 2, int stride = 2);

// ---------------------------------------------------------------------------
// Normalization (composed from the primitives above; pre-affine).
// ---------------------------------------------------------------------------
Tensor normalize_over_axes(const Tensor& x, const std::vector<int>& axes, double eps);
Tensor instance_norm(const Tensor& x, double eps = 1e-5);          // [B,C,...] per (b,c)
Tensor layer_norm(const Tensor& x, int n_trailing_axes, double eps = 1e-5);
Tensor channel_norm(const Tensor& x, double eps = 1e-5);           // over axis 1

// log(sum(exp(x))) along one axis, keepdim; max-shifted for stability.
Tensor logsumexp(const Tensor& x, int axis);

// ---------------------------------------------------------------------------
// Random fills (values consumed in row-major order, one draw per element).
// ---------------------------------------------------------------------------
Tensor normal_tensor(Rng& rng, Shape shape, DType dt, double mean = 0.0, double stddev = 1.0);
Tensor uniform_tensor(Rng& rng, Shape shape, DType dt, double lo = 0.0, double hi = 1.0);

}  // namespace hcma
