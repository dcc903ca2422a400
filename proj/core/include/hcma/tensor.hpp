#pragma once
#include <functional>
#include <initializer_list>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "hcma/dtype.hpp"
#include "hcma/error.hpp"
#include "hcma/shape.hpp"

namespace hcma {

class Rng;
struct TensorImpl;

// Dense row-major N-D array with optional reverse-mode gradient tracking.
// Value-semantic handle over a shared buffer; ops never mutate tracked
// tensors in place.
class Tensor {
public:
    Tensor() = default;

    static Tensor empty(Shape shape, DType dt);
    static Tensor zeros(Shape shape, DType dt);
    static Tensor full(Shape shape, double value, DType dt);
    static Tensor scalar(double value, DType dt);
    static Tensor from_values(Shape shape, const std::vector<double>& values, DType dt);

    bool defined() const { return impl_ != nullptr; }
    const Shape& shape() const;
    int ndim() const { return (int)shape().size(); }
    int64_t dim(int axis) const;
    int64_t numel() const;
    DType dtype() const;

    bool requires_grad() const;
    Tensor& set_requires_grad(bool v);

    template <class T> std::span<T> data();
    template <class T> std::span<const T> data() const;
    template <class T> std::span<T> grad_data();          // allocates zeros if absent
    bool has_grad() const;
    Tensor grad() const;                                  // copy of grad buffer (no tracking)
    void zero_grad();

    // Element access as double regardless of element type (test convenience).
    double value_at(int64_t linear_index) const;
    double item() const;                                  // single-element tensors
    std::vector<double> to_vector() const;

    Tensor clone() const;            // deep copy, drops graph linkage
    Tensor detach() const;           // shares the buffer, no graph linkage
    Tensor to(DType dt) const;       // element-type cast (not tracked)

    std::shared_ptr<TensorImpl>& impl() { return impl_; }
    const std::shared_ptr<TensorImpl>& impl() const { return impl_; }
    explicit Tensor(std::shared_ptr<TensorImpl> impl) : impl_(std::move(impl)) {}

private:
    std::shared_ptr<TensorImpl> impl_;
};

// A graph-op output records its parents (exactly once, at construction) and
// a closure that pulls grad from the output and accumulates into parents.
struct TensorImpl {
    Shape shape;
    DType dtype = DType::F32;
    std::vector<float> f32;
    std::vector<double> f64;
    bool requires_grad = false;

    std::vector<float> grad32;
    std::vector<double> grad64;
    bool has_grad = false;

    const char* op = nullptr;  // null for leaves
    std::vector<std::shared_ptr<TensorImpl>> parents;
    std::function<void(TensorImpl&)> backprop;

    template <class T> std::span<T> data() {
        if constexpr (std::is_same_v<T, float>) return {f32.data(), f32.size()};
        else return {f64.data(), f64.size()};
    }
    template <class T> std::span<const T> data() const {
        if constexpr (std::is_same_v<T, float>) return {f32.data(), f32.size()};
        else return {f64.data(), f64.size()};
    }
    template <class T> std::span<T> grad() {
        if constexpr (std::is_same_v<T, float>) return {grad32.data(), grad32.size()};
        else return {grad64.data(), grad64.size()};
    }
    void alloc_data();
    void alloc_grad();  // zeros, same shape as data
};

// Thread-local gradient recording switch (on by default).
bool grad_enabled();
struct NoGradGuard {
    NoGradGuard();
    ~NoGradGuard();
    NoGradGuard(const NoGradGuard&) = delete;
    NoGradGuard& operator=(const NoGradGuard&) = delete;
private:
    bool prev_;
};

// Topologically ordered view of the op nodes reachable from a root: parents
// always precede children, and a backward sweep visits each node exactly once
// in reverse order.
class Graph {
public:
    static Graph trace(const Tensor& root);
    std::size_t size() const { return order_.size(); }
    void run_backward();
private:
    std::vector<TensorImpl*> order_;
};

// Reverse-mode sweep from a scalar loss; accumulates dLoss/dLeaf into every
// requires_grad leaf. Repeated calls without zero_grad accumulate.
void backward(const Tensor& loss);

// Registers `out` as the product of a graph op. Call after filling out's
// data. No-op when grad recording is off or no input requires grad.
void attach_op(Tensor& out, const char* op, std::initializer_list<Tensor> inputs,
               std::function<void(TensorImpl&)> backprop);
void attach_op(Tensor& out, const char* op, const std::vector<Tensor>& inputs,
               std::function<void(TensorImpl&)> backprop);

// Grad accumulation helper used inside backprop closures.
template <class T>
std::span<T> ensure_grad(TensorImpl& t) {
    if (!t.has_grad) t.alloc_grad();
    return t.grad<T>();
}

}  // namespace hcma
