#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace fcba {

// Dense row-major tensor of floats. product(shape) == values.size() always.
struct Tensor {
    std::vector<int> shape;
    std::vector<float> values;

    Tensor() = default;
    Tensor(std::vector<int> s, std::vector<float> v) : shape(std::move(s)), values(std::move(v)) {}

    static Tensor zeros(std::vector<int> shape) {
        std::size_t n = 1;
        for (int d : shape) n *= std::size_t(d);
        return Tensor(std::move(shape), std::vector<float>(n, 0.0f));
    }

    std::size_t size() const { return values.size(); }
    int dim(std::size_t i) const { return shape[i]; }

    float* data() { return values.data(); }
    const float* data() const { return values.data(); }
};

} // namespace fcba
