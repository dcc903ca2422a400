#include "hcma/tensor.hpp"

#include <algorithm>
#include <unordered_set>

namespace hcma {

namespace {
thread_local bool g_grad_enabled = true;
}

bool grad_enabled() { return g_grad_enabled; }

NoGradGuard::NoGradGuard() : prev_(g_grad_enabled) { g_grad_enabled = false; }
NoGradGuard::~NoGradGuard() { g_grad_enabled = prev_; }

void TensorImpl::alloc_data() {
    const auto n = static_cast<std::size_t>(hcma::numel(shape));
    if (dtype == DType::F32) f32.assign(n, 0.f);
    else f64.assign(n, 0.0);
}

void TensorImpl::alloc_grad() {
    const auto n = static_cast<std::size_t>(hcma::numel(shape));
    if (dtype == DType::F32) grad32.assign(n, 0.f);
    else grad64.assign(n, 0.0);
    has_grad = true;
}

Tensor Tensor::empty(Shape shape, DType dt) {
    auto impl = std::make_shared<TensorImpl>();
    impl->shape = std::move(shape);
    impl->dtype = dt;
    impl->alloc_data();
    return Tensor(std::move(impl));
}

Tensor Tensor::zeros(Shape shape, DType dt) { return empty(std::move(shape), dt); }

Tensor Tensor::full(Shape shape, double value, DType dt) {
    Tensor t = empty(std::move(shape), dt);
    dispatch(dt, [&]<class T>() {
        auto d = t.data<T>();
        std::fill(d.begin(), d.end(), static_cast<T>(value));
    });
    return t;
}

Tensor Tensor::scalar(double value, DType dt) { return full({1}, value, dt); }

Tensor Tensor::from_values(Shape shape, const std::vector<double>& values, DType dt) {
    if (hcma::numel(shape) != (int64_t)values.size())
        throw ShapeError("from_values: " + shape_str(shape) + " needs " +
                         std::to_string(hcma::numel(shape)) + " values, got " +
                         std::to_string(values.size()));
    Tensor t = empty(std::move(shape), dt);
    dispatch(dt, [&]<class T>() {
        auto d = t.data<T>();
        for (std::size_t i = 0; i < values.size(); ++i) d[i] = static_cast<T>(values[i]);
    });
    return t;
}

const Shape& Tensor::shape() const { return impl_->shape; }
int64_t Tensor::dim(int axis) const { return impl_->shape.at(axis); }
int64_t Tensor::numel() const { return hcma::numel(impl_->shape); }
DType Tensor::dtype() const { return impl_->dtype; }

bool Tensor::requires_grad() const { return impl_ && impl_->requires_grad; }
Tensor& Tensor::set_requires_grad(bool v) {
    impl_->requires_grad = v;
    return *this;
}

template <class T> std::span<T> Tensor::data() { return impl_->data<T>(); }
template <class T> std::span<const T> Tensor::data() const {
    return static_cast<const TensorImpl&>(*impl_).data<T>();
}
template <class T> std::span<T> Tensor::grad_data() { return ensure_grad<T>(*impl_); }

template std::span<float> Tensor::data<float>();
template std::span<double> Tensor::data<double>();
template std::span<const float> Tensor::data<float>() const;
template std::span<const double> Tensor::data<double>() const;
template std::span<float> Tensor::grad_data<float>();
template std::span<double> Tensor::grad_data<double>();

bool Tensor::has_grad() const { return impl_ && impl_->has_grad; }

Tensor Tensor::grad() const {
    Tensor g = Tensor::zeros(impl_->shape, impl_->dtype);
    if (impl_->has_grad) {
        dispatch(impl_->dtype, [&]<class T>() {
            auto src = impl_->grad<T>();
            auto dst = g.data<T>();
            std::copy(src.begin(), src.end(), dst.begin());
        });
    }
    return g;
}

void Tensor::zero_grad() {
    impl_->has_grad = false;
    impl_->grad32.clear();
    impl_->grad64.clear();
}

double Tensor::value_at(int64_t i) const {
    return impl_->dtype == DType::F32 ? (double)impl_->f32[(std::size_t)i]
                                      : impl_->f64[(std::size_t)i];
}

double Tensor::item() const {
    if (numel() != 1) throw ShapeError("item(): tensor has " + std::to_string(numel()) + " elements");
    return value_at(0);
}

std::vector<double> Tensor::to_vector() const {
    std::vector<double> out((std::size_t)numel());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = value_at((int64_t)i);
    return out;
}

Tensor Tensor::clone() const {
    Tensor t = Tensor::empty(impl_->shape, impl_->dtype);
    dispatch(impl_->dtype, [&]<class T>() {
        auto src = data<T>();
        auto dst = t.data<T>();
        std::copy(src.begin(), src.end(), dst.begin());
    });
    return t;
}

Tensor Tensor::detach() const {
    auto impl = std::make_shared<TensorImpl>();
    impl->shape = impl_->shape;
    impl->dtype = impl_->dtype;
    impl->f32 = impl_->f32;
    impl->f64 = impl_->f64;
    return Tensor(std::move(impl));
}

Tensor Tensor::to(DType dt) const {
    if (dt == dtype()) return detach();
    Tensor t = Tensor::empty(impl_->shape, dt);
    dispatch(dt, [&]<class T>() {
        auto dst = t.data<T>();
        for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = static_cast<T>(value_at((int64_t)i));
    });
    return t;
}

void attach_op(Tensor& out, const char* op, std::initializer_list<Tensor> inputs,
               std::function<void(TensorImpl&)> backprop) {
    attach_op(out, op, std::vector<Tensor>(inputs), std::move(backprop));
}

void attach_op(Tensor& out, const char* op, const std::vector<Tensor>& inputs,
               std::function<void(TensorImpl&)> backprop) {
    if (!grad_enabled()) return;
    bool any = false;
    for (const auto& in : inputs) any = any || in.requires_grad();
    if (!any) return;
    auto& impl = *out.impl();
    impl.requires_grad = true;
    impl.op = op;
    impl.parents.reserve(inputs.size());
    for (const auto& in : inputs) impl.parents.push_back(in.impl());
    impl.backprop = std::move(backprop);
}

Graph Graph::trace(const Tensor& root) {
    Graph g;
    if (!root.defined()) return g;
    // Iterative post-order DFS; emits parents before children.
    std::unordered_set<TensorImpl*> visited;
    std::vector<std::pair<TensorImpl*, std::size_t>> stack;
    stack.emplace_back(root.impl().get(), 0);
    visited.insert(root.impl().get());
    while (!stack.empty()) {
        auto& [node, next] = stack.back();
        if (next < node->parents.size()) {
            TensorImpl* p = node->parents[next++].get();
            if (!visited.count(p)) {
                visited.insert(p);
                stack.emplace_back(p, 0);
            }
        } else {
            g.order_.push_back(node);
            stack.pop_back();
        }
    }
    return g;
}

void Graph::run_backward() {
    for (auto it = order_.rbegin(); it != order_.rend(); ++it) {
        TensorImpl* node = *it;
        if (node->backprop && node->has_grad) node->backprop(*node);
    }
}

void backward(const Tensor& loss) {
    if (!loss.defined()) throw ShapeError("backward: undefined tensor");
    if (loss.numel() != 1)
        throw ShapeError("backward: root must be scalar, got " + shape_str(loss.shape()));
    Graph g = Graph::trace(loss);
    auto& impl = *loss.impl();
    dispatch(impl.dtype, [&]<class T>() {
        auto gr = ensure_grad<T>(impl);
        gr[0] += T(1);
    });
    g.run_backward();
}

}  // namespace hcma
