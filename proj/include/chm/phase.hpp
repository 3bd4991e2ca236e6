// Copyright 2026 The CHM Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <variant>

namespace chm {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Least common multiple that refuses to overflow int64.
inline int64_t checked_lcm(int64_t a, int64_t b) {
    int64_t g = std::gcd(a, b);
    int64_t out = 0;
    if (__builtin_mul_overflow(a / g, b, &out)) {
        throw std::overflow_error("phase denominator overflow");
    }
    return out;
}

/// A unimodular complex number.
///
/// Two representations are kept side by side. `Exact` stores e^{2 pi i num/den}
/// as a reduced fraction of a full turn, which is how every root-of-unity
/// matrix in the catalog is held. `Float` stores an angle in radians and is
/// what sampled family members decay to. Exact op Exact stays Exact; anything
/// touching a Float becomes Float.
class Phase {
   public:
    struct Exact {
        int64_t num;
        int64_t den;
        friend bool operator==(const Exact &, const Exact &) = default;
    };
    struct Float {
        double theta;
        friend bool operator==(const Float &, const Float &) = default;
    };

    Phase() : rep_(Exact{0, 1}) {}

    static Phase one() { return Phase(); }

    /// e^{2 pi i num/den}; any integer num, den > 0.
    static Phase exact(int64_t num, int64_t den) {
        if (den <= 0) {
            throw std::invalid_argument("phase denominator must be positive");
        }
        num %= den;
        if (num < 0) {
            num += den;
        }
        if (num == 0) {
            return Phase(Exact{0, 1});
        }
        int64_t g = std::gcd(num, den);
        return Phase(Exact{num / g, den / g});
    }

    /// e^{i theta}; theta is wrapped into [0, 2 pi).
    static Phase radians(double theta) {
        if (!std::isfinite(theta)) {
            throw std::invalid_argument("phase angle must be finite");
        }
        double t = std::fmod(theta, kTwoPi);
        if (t < 0) {
            t += kTwoPi;
        }
        if (t >= kTwoPi) {
            t = 0.0;
        }
        return Phase(Float{t});
    }

    /// Sign +1 or -1 as an exact phase.
    static Phase sign(int s) { return s >= 0 ? one() : exact(1, 2); }

    bool is_exact() const { return std::holds_alternative<Exact>(rep_); }
    const Exact &as_exact() const { return std::get<Exact>(rep_); }
    int64_t num() const { return as_exact().num; }
    int64_t den() const { return as_exact().den; }

    /// Angle in [0, 2 pi).
    double angle() const {
        if (auto e = std::get_if<Exact>(&rep_)) {
            return kTwoPi * static_cast<double>(e->num) / static_cast<double>(e->den);
        }
        return std::get<Float>(rep_).theta;
    }

    std::complex<double> value() const {
        if (auto e = std::get_if<Exact>(&rep_)) {
            // Quarter turns are common enough to deserve exact cos/sin.
            if (e->den == 1) return {1.0, 0.0};
            if (e->den == 2) return {-1.0, 0.0};
            if (e->den == 4) return e->num == 1 ? std::complex<double>{0.0, 1.0} : std::complex<double>{0.0, -1.0};
        }
        return std::polar(1.0, angle());
    }

    Phase conj() const {
        if (auto e = std::get_if<Exact>(&rep_)) {
            return exact(-e->num, e->den);
        }
        return radians(-std::get<Float>(rep_).theta);
    }

    Phase pow(int64_t k) const {
        if (auto e = std::get_if<Exact>(&rep_)) {
            __int128 n = static_cast<__int128>(e->num) * k;
            n %= e->den;
            return exact(static_cast<int64_t>(n), e->den);
        }
        return radians(std::get<Float>(rep_).theta * static_cast<double>(k));
    }

    friend Phase operator*(const Phase &a, const Phase &b) {
        if (a.is_exact() && b.is_exact()) {
            const Exact &x = a.as_exact();
            const Exact &y = b.as_exact();
            int64_t l = checked_lcm(x.den, y.den);
            __int128 n = static_cast<__int128>(x.num) * (l / x.den) + static_cast<__int128>(y.num) * (l / y.den);
            return exact(static_cast<int64_t>(n % l), l);
        }
        return radians(a.angle() + b.angle());
    }
    Phase &operator*=(const Phase &o) { return *this = *this * o; }

    /// Structural equality: Exact(1,2) != Float(pi).
    friend bool operator==(const Phase &, const Phase &) = default;

    /// True for Exact(0,1) and Exact(1,2).
    bool is_exact_sign() const { return is_exact() && den() <= 2; }

    std::string str() const {
        if (auto e = std::get_if<Exact>(&rep_)) {
            if (e->num == 0) return "1";
            return "e(" + std::to_string(e->num) + "/" + std::to_string(e->den) + ")";
        }
        return "rad(" + std::to_string(std::get<Float>(rep_).theta) + ")";
    }

   private:
    explicit Phase(Exact e) : rep_(e) {}
    explicit Phase(Float f) : rep_(f) {}

    std::variant<Exact, Float> rep_;
};

inline std::ostream &operator<<(std::ostream &os, const Phase &p) { return os << p.str(); }

/// Distance between two angles on the circle, in [0, pi].
inline double angle_distance(double a, double b) {
    double t = std::fmod(std::fabs(a - b), kTwoPi);
    return t > std::numbers::pi ? kTwoPi - t : t;
}

}  // namespace chm
