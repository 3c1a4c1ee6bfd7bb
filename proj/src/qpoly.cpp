#include "satake/qpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace satake {

void QPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

QPolynomial QPolynomial::monomial(int deg, long long c) {
    if (c == 0) return QPolynomial();
    std::vector<long long> v(deg + 1, 0);
    v[deg] = c;
    return QPolynomial(std::move(v));
}

QPolynomial QPolynomial::operator+(const QPolynomial& o) const {
    std::vector<long long> v(std::max(coeffs_.size(), o.coeffs_.size()), 0);
    for (size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) v[i] += o.coeffs_[i];
    return QPolynomial(std::move(v));
}

QPolynomial QPolynomial::operator-(const QPolynomial& o) const {
    std::vector<long long> v(std::max(coeffs_.size(), o.coeffs_.size()), 0);
    for (size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) v[i] -= o.coeffs_[i];
    return QPolynomial(std::move(v));
}

QPolynomial QPolynomial::operator*(const QPolynomial& o) const {
    if (is_zero() || o.is_zero()) return QPolynomial();
    std::vector<long long> v(coeffs_.size() + o.coeffs_.size() - 1, 0);
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j)
            v[i + j] += coeffs_[i] * o.coeffs_[j];
    return QPolynomial(std::move(v));
}

QPolynomial QPolynomial::shifted(int k) const {
    if (is_zero()) return QPolynomial();
    if (k < 0) throw std::domain_error("QPolynomial::shifted: negative shift");
    std::vector<long long> v(coeffs_.size() + k, 0);
    std::copy(coeffs_.begin(), coeffs_.end(), v.begin() + k);
    return QPolynomial(std::move(v));
}

long long QPolynomial::eval_one() const {
    long long s = 0;
    for (long long c : coeffs_) s += c;
    return s;
}

std::string QPolynomial::str() const { return format_q_terms(coeffs_); }

QSeries::QSeries(std::vector<long long> c, int trunc) : coeffs_(std::move(c)), trunc_(trunc) {
    if (trunc_ < 0) throw std::domain_error("QSeries: negative truncation order");
    coeffs_.resize(trunc_ + 1, 0);
}

QSeries QSeries::one(int trunc) {
    std::vector<long long> v(trunc + 1, 0);
    v[0] = 1;
    return QSeries(std::move(v), trunc);
}

QSeries QSeries::from_poly(const QPolynomial& p, int trunc) {
    std::vector<long long> v(trunc + 1, 0);
    for (int k = 0; k <= trunc; ++k) v[k] = p.coeff(k);
    return QSeries(std::move(v), trunc);
}

QSeries QSeries::geometric_pow(int k, int trunc) {
    if (k < 0) throw std::domain_error("QSeries::geometric_pow: negative power");
    // coefficient of q^n in (1-q)^(-k) is C(n+k-1, n)
    std::vector<long long> v(trunc + 1, 0);
    v[0] = 1;
    if (k == 0) return QSeries(std::move(v), trunc);
    for (int n = 1; n <= trunc; ++n) v[n] = v[n - 1] * (n + k - 1) / n;
    return QSeries(std::move(v), trunc);
}

QSeries QSeries::operator+(const QSeries& o) const {
    int t = std::min(trunc_, o.trunc_);
    std::vector<long long> v(t + 1);
    for (int i = 0; i <= t; ++i) v[i] = coeffs_[i] + o.coeffs_[i];
    return QSeries(std::move(v), t);
}

QSeries QSeries::operator-(const QSeries& o) const {
    int t = std::min(trunc_, o.trunc_);
    std::vector<long long> v(t + 1);
    for (int i = 0; i <= t; ++i) v[i] = coeffs_[i] - o.coeffs_[i];
    return QSeries(std::move(v), t);
}

QSeries QSeries::operator*(const QSeries& o) const {
    int t = std::min(trunc_, o.trunc_);
    std::vector<long long> v(t + 1, 0);
    for (int i = 0; i <= t; ++i) {
        if (coeffs_[i] == 0) continue;
        for (int j = 0; i + j <= t; ++j) v[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    return QSeries(std::move(v), t);
}

QSeries QSeries::operator*(const QPolynomial& p) const {
    std::vector<long long> v(trunc_ + 1, 0);
    for (int i = 0; i <= std::min(trunc_, p.degree()); ++i) {
        if (p.coeff(i) == 0) continue;
        for (int j = 0; i + j <= trunc_; ++j) v[i + j] += p.coeff(i) * coeffs_[j];
    }
    return QSeries(std::move(v), trunc_);
}

std::optional<int> QSeries::first_mismatch(const QSeries& o) const {
    int t = std::min(trunc_, o.trunc_);
    for (int i = 0; i <= t; ++i)
        if (coeffs_[i] != o.coeffs_[i]) return i;
    return std::nullopt;
}

std::optional<int> QSeries::first_mismatch(const QPolynomial& p) const {
    for (int i = 0; i <= trunc_; ++i)
        if (coeffs_[i] != p.coeff(i)) return i;
    return std::nullopt;
}

std::string QSeries::str() const { return format_q_terms(coeffs_); }

std::string format_q_terms(const std::vector<long long>& coeffs, const char* var) {
    std::string out;
    for (size_t k = 0; k < coeffs.size(); ++k) {
        long long c = coeffs[k];
        if (c == 0) continue;
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        long long a = c < 0 ? -c : c;
        if (a != 1 || k == 0) out += std::to_string(a);
        if (k >= 1) {
            out += var;
            if (k >= 2) out += "^" + std::to_string(k);
        }
    }
    return out.empty() ? "0" : out;
}

} // namespace satake
