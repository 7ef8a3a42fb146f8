#include "nichols/root_of_unity.hpp"

#include <numeric>
#include <stdexcept>

namespace nichols {

RootOfUnity::RootOfUnity(std::int64_t num, std::int64_t den) {
    if (den <= 0) throw std::invalid_argument("root of unity needs a positive denominator");
    num %= den;
    if (num < 0) num += den;
    const std::int64_t g = std::gcd(num, den);
    num_ = num / g;
    den_ = den / g;
}

RootOfUnity RootOfUnity::from_sign(int sign) { return sign < 0 ? minus_one() : one(); }

std::optional<int> RootOfUnity::sign() const {
    if (den_ == 1) return 1;
    if (den_ == 2) return -1;
    return std::nullopt;
}

RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b) {
    const std::int64_t den = std::lcm(a.den_, b.den_);
    return {a.num_ * (den / a.den_) + b.num_ * (den / b.den_), den};
}

std::string RootOfUnity::str() const {
    if (den_ == 1) return "1";
    if (den_ == 2) return "-1";
    return "e(" + std::to_string(num_) + "/" + std::to_string(den_) + ")";
}

}  // namespace nichols
