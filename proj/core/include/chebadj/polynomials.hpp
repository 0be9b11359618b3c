#pragma once

#include <map>

#include "chebadj/rational.hpp"

namespace chebadj {

namespace detail {

// Sparse coefficient map shared by both bases; zero coefficients are never stored.
class CoeffMap {
public:
    using Terms = std::map<long, Rational>;

    bool empty() const { return c_.empty(); }
    std::size_t term_count() const { return c_.size(); }
    long degree() const { return c_.empty() ? -1 : c_.rbegin()->first; }
    const Terms& terms() const { return c_; }

    Rational coeff(long k) const {
        auto it = c_.find(k);
        return it == c_.end() ? Rational(0) : it->second;
    }

    void set(long k, const Rational& v) {
        if (k < 0) throw DomainError("polynomial index must be non-negative");
        if (v.is_zero())
            c_.erase(k);
        else
            c_[k] = v;
    }

    void add(long k, const Rational& v) {
        if (v.is_zero()) return;
        set(k, coeff(k) + v);
    }

    Rational l1_norm() const {
        Rational s;
        for (const auto& [k, v] : c_) s += abs(v);
        return s;
    }

protected:
    Terms c_;
};

} // namespace detail

// Sum of a_k cos(kx) over the stored frequencies k.
class TrigPoly : public detail::CoeffMap {
public:
    friend bool operator==(const TrigPoly& a, const TrigPoly& b) { return a.c_ == b.c_; }
};

// Sum of c_m cos^m(x), i.e. an algebraic polynomial in y = cos x.
class PowerPoly : public detail::CoeffMap {
public:
    friend bool operator==(const PowerPoly& a, const PowerPoly& b) { return a.c_ == b.c_; }
};

// Exact expansion over {cos^m x}: the coefficient of y^m is
// sum_k a_k * cheb_entry(m, k).
PowerPoly trig_to_power(const TrigPoly& p);

// Exact inverse expansion via the closed-form inverse coefficient matrix;
// round trips with trig_to_power in both orders.
TrigPoly power_to_trig(const PowerPoly& p);

// Termwise second derivative in the power basis:
// c y^q contributes q(q-1) c y^{q-2} - q^2 c y^q.
PowerPoly second_derivative(const PowerPoly& p);

} // namespace chebadj
