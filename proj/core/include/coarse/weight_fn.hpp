#pragma once

#include <vector>

#include "coarse/bits.hpp"
#include "coarse/errors.hpp"
#include "coarse/rational.hpp"

namespace coarse {

/// Nonnegative vertex weight function with cached total.
class WeightFn {
public:
    WeightFn() = default;

    explicit WeightFn(std::vector<Rat> weights) : w_(std::move(weights)) {
        for (const Rat& x : w_) {
            if (x.is_negative()) throw InputError("negative vertex weight");
            total_ += x;
        }
    }

    static WeightFn uniform(int n, Rat value = Rat(1)) {
        return WeightFn(std::vector<Rat>(static_cast<size_t>(n), value));
    }

    /// 1 on the listed vertices, 0 elsewhere.
    static WeightFn indicator(int n, const std::vector<int>& verts) {
        std::vector<Rat> w(static_cast<size_t>(n), Rat(0));
        for (int v : verts) {
            if (v < 0 || v >= n) throw InputError("indicator vertex out of range");
            w[static_cast<size_t>(v)] = Rat(1);
        }
        return WeightFn(std::move(w));
    }

    int size() const { return static_cast<int>(w_.size()); }
    const Rat& at(int v) const { return w_[static_cast<size_t>(v)]; }
    const Rat& total() const { return total_; }
    const std::vector<Rat>& values() const { return w_; }

    Rat sum_over(const std::vector<int>& verts) const {
        Rat s(0);
        for (int v : verts) s += at(v);
        return s;
    }

    Rat sum_over(const Bits& verts) const {
        Rat s(0);
        verts.for_each([&](int v) { s += at(v); });
        return s;
    }

private:
    std::vector<Rat> w_;
    Rat total_{0};
};

} // namespace coarse
