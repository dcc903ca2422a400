#pragma once
#include <cstddef>
#include <cstdint>
#include <string_view>
#include <utility>

namespace hcma {

// Element type of a tensor, chosen per run: f32 for training, f64 for
// oracle and gradient verification.
enum class DType : uint8_t { F32, F64 };

constexpr std::string_view dtype_name(DType dt) {
    return dt == DType::F32 ? "f32" : "f64";
}

constexpr std::size_t dtype_size(DType dt) {
    return dt == DType::F32 ? sizeof(float) : sizeof(double);
}

template <class T>
constexpr DType dtype_of() {
    static_assert(std::is_same_v<T, float> || std::is_same_v<T, double>);
    if constexpr (std::is_same_v<T, float>) return DType::F32;
    else return DType::F64;
}

// Calls f.template operator()<T>() with T = float or double.
template <class F>
decltype(auto) dispatch(DType dt, F&& f) {
    if (dt == DType::F64) return std::forward<F>(f).template operator()<double>();
    return std::forward<F>(f).template operator()<float>();
}

}  // namespace hcma
