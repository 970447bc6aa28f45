#include "swcalc/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace swcalc::rings {

RatSeries::RatSeries(std::size_t order, std::vector<Rat> coeffs) {
    if (order == 0) throw std::invalid_argument("series order must be >= 1");
    if (coeffs.size() > order)
        throw std::invalid_argument("more coefficients than the stated order");
    coeffs.resize(order, Rat(0));
    for (Rat& c : coeffs) c.canonicalize();
    coeffs_ = std::move(coeffs);
}

RatSeries RatSeries::one(std::size_t order) {
    return RatSeries(order, {Rat(1)});
}

RatSeries RatSeries::zero(std::size_t order) {
    return RatSeries(order, {});
}

RatSeries RatSeries::truncate(std::size_t order) const {
    if (order == 0 || order > coeffs_.size())
        throw std::invalid_argument("truncation order out of range");
    return RatSeries(order,
                     std::vector<Rat>(coeffs_.begin(),
                                      coeffs_.begin() + static_cast<long>(order)));
}

RatSeries RatSeries::operator+(const RatSeries& rhs) const {
    const std::size_t n = std::min(order(), rhs.order());
    std::vector<Rat> c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = coeffs_[i] + rhs.coeffs_[i];
    return RatSeries(n, std::move(c));
}

RatSeries RatSeries::operator-(const RatSeries& rhs) const {
    const std::size_t n = std::min(order(), rhs.order());
    std::vector<Rat> c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = coeffs_[i] - rhs.coeffs_[i];
    return RatSeries(n, std::move(c));
}

RatSeries RatSeries::operator*(const RatSeries& rhs) const {
    const std::size_t n = std::min(order(), rhs.order());
    std::vector<Rat> c(n, Rat(0));
    for (std::size_t i = 0; i < n; ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; i + j < n; ++j)
            if (rhs.coeffs_[j] != 0) c[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
    return RatSeries(n, std::move(c));
}

RatSeries RatSeries::pow(unsigned long m) const {
    RatSeries result = RatSeries::one(order());
    RatSeries base = *this;
    while (m) {
        if (m & 1) result = result * base;
        m >>= 1;
        if (m) base = base * base;
    }
    return result;
}

std::string RatSeries::str() const {
    std::string out;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        Rat a = coeffs_[i];
        if (first) {
            if (a < 0) {
                out += "-";
                a = -a;
            }
        } else {
            out += a < 0 ? " - " : " + ";
            if (a < 0) a = -a;
        }
        first = false;
        if (i == 0) {
            out += swcalc::str(a);
        } else {
            if (a != 1) out += swcalc::str(a) + " ";
            out += "z";
            if (i != 1) out += "^" + std::to_string(i);
        }
    }
    if (first) out = "0";
    out += " + O(z^" + std::to_string(coeffs_.size()) + ")";
    return out;
}

RatSeries series_inverse(const RatSeries& s) {
    if (s.coeff(0) == 0)
        throw std::invalid_argument(
            "series has zero constant term, not invertible");
    const std::size_t n = s.order();
    std::vector<Rat> inv(n, Rat(0));
    inv[0] = Rat(1) / s.coeff(0);
    // Forward substitution on s * inv = 1.
    for (std::size_t i = 1; i < n; ++i) {
        Rat acc(0);
        for (std::size_t j = 1; j <= i; ++j)
            if (s.coeff(j) != 0) acc += s.coeff(j) * inv[i - j];
        inv[i] = -acc / s.coeff(0);
    }
    return RatSeries(n, std::move(inv));
}

RatSeries series_div(const RatSeries& num, const RatSeries& den) {
    if (den.coeff(0) == 0)
        throw std::invalid_argument("division by series with zero constant term");
    const std::size_t n = std::min(num.order(), den.order());
    const RatSeries a = num.truncate(n);
    const RatSeries b = den.truncate(n);
    const RatSeries q = a * series_inverse(b);
    if (q * b != a)
        throw std::logic_error("series division failed re-multiplication check");
    return q;
}

}  // namespace swcalc::rings
