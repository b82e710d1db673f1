#pragma once

#include <stdexcept>

namespace wlab {

// A real value extended by +infinity. The infinite state is an explicit tag,
// never a floating-point sentinel, so conventions like 1/0 = +inf stay
// visible at call sites (pole times, the tubular width constant).
class ExtendedReal {
public:
    ExtendedReal(double v) : value_(v), finite_(true) {}  // NOLINT(google-explicit-constructor)

    static ExtendedReal infinity() {
        ExtendedReal x(0.0);
        x.finite_ = false;
        return x;
    }

    [[nodiscard]] bool finite() const { return finite_; }
    [[nodiscard]] bool infinite() const { return !finite_; }

    [[nodiscard]] double value() const {
        if (!finite_) throw std::logic_error("ExtendedReal: value() on +infinity");
        return value_;
    }

    // 1/x with 1/(+inf) = 0.
    [[nodiscard]] double reciprocal() const { return finite_ ? 1.0 / value_ : 0.0; }

    [[nodiscard]] double value_or(double fallback) const { return finite_ ? value_ : fallback; }

    friend bool operator==(const ExtendedReal& a, const ExtendedReal& b) {
        if (a.finite_ != b.finite_) return false;
        return !a.finite_ || a.value_ == b.value_;
    }
    friend bool operator<(const ExtendedReal& a, const ExtendedReal& b) {
        if (!a.finite_) return false;           // inf < x never
        if (!b.finite_) return true;            // finite < inf
        return a.value_ < b.value_;
    }
    friend bool operator<=(const ExtendedReal& a, const ExtendedReal& b) { return a < b || a == b; }
    friend bool operator<(const ExtendedReal& a, double b) { return a.finite_ && a.value_ < b; }
    friend bool operator<=(double a, const ExtendedReal& b) { return !b.finite_ || a <= b.value_; }

private:
    double value_;
    bool finite_;
};

}  // namespace wlab
