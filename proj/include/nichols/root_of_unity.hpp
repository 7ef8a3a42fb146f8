#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace nichols {

// exp(2*pi*i * num/den), stored reduced with 0 <= num < den.
class RootOfUnity {
public:
    RootOfUnity() = default;
    RootOfUnity(std::int64_t num, std::int64_t den);

    static RootOfUnity one() { return {}; }
    static RootOfUnity minus_one() { return {1, 2}; }
    static RootOfUnity from_sign(int sign);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    std::int64_t order() const { return den_; }

    bool is_one() const { return num_ == 0; }
    // +1 or -1 when the value is real, nothing otherwise.
    std::optional<int> sign() const;

    RootOfUnity inverse() const { return {-num_, den_}; }
    RootOfUnity pow(std::int64_t k) const { return {num_ * k, den_}; }

    friend RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b);
    friend bool operator==(const RootOfUnity& a, const RootOfUnity& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::string str() const;

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

}  // namespace nichols
