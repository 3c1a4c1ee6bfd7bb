#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace satake {

/// Polynomial in one grading variable q with exact 64-bit integer
/// coefficients. coeffs[k] is the coefficient of q^k; the vector carries no
/// trailing zeros (the zero polynomial has an empty vector).
class QPolynomial {
public:
    QPolynomial() = default;
    explicit QPolynomial(std::vector<long long> c) : coeffs_(std::move(c)) { trim(); }

    static QPolynomial zero() { return QPolynomial(); }
    static QPolynomial one() { return monomial(0, 1); }
    static QPolynomial monomial(int deg, long long c = 1);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; } // -1 for zero
    long long coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(coeffs_.size())) ? coeffs_[k] : 0;
    }
    const std::vector<long long>& coeffs() const { return coeffs_; }

    QPolynomial operator+(const QPolynomial& o) const;
    QPolynomial operator-(const QPolynomial& o) const;
    QPolynomial operator*(const QPolynomial& o) const;
    QPolynomial shifted(int k) const; // multiply by q^k
    QPolynomial& operator+=(const QPolynomial& o) { *this = *this + o; return *this; }

    long long eval_one() const; // value at q = 1
    bool operator==(const QPolynomial& o) const { return coeffs_ == o.coeffs_; }

    /// Human form, e.g. "q + q^2" or "1 + 2q^3"; "0" for the zero polynomial.
    std::string str() const;

private:
    void trim();
    std::vector<long long> coeffs_;
};

/// Truncated power series in q: coefficients of degree 0..trunc are known
/// exactly, higher ones are unknown (not zero). Arithmetic propagates the
/// minimum truncation order of its operands.
class QSeries {
public:
    QSeries() : coeffs_(1, 0), trunc_(0) {}
    QSeries(std::vector<long long> c, int trunc);

    static QSeries zero(int trunc) { return QSeries(std::vector<long long>(trunc + 1, 0), trunc); }
    static QSeries one(int trunc);
    static QSeries from_poly(const QPolynomial& p, int trunc);
    /// Expansion of (1-q)^(-k) up to the given order (k >= 0).
    static QSeries geometric_pow(int k, int trunc);

    int trunc() const { return trunc_; }
    long long coeff(int k) const { return coeffs_[k]; }
    const std::vector<long long>& coeffs() const { return coeffs_; }

    QSeries operator+(const QSeries& o) const;
    QSeries operator-(const QSeries& o) const;
    QSeries operator*(const QSeries& o) const;
    QSeries operator*(const QPolynomial& p) const;

    /// Equality up to the shared truncation order; returns the first degree
    /// where the coefficients differ, or nullopt on agreement.
    std::optional<int> first_mismatch(const QSeries& o) const;
    std::optional<int> first_mismatch(const QPolynomial& p) const;
    bool equal_up_to_order(const QSeries& o) const { return !first_mismatch(o).has_value(); }

    std::string str() const;

private:
    std::vector<long long> coeffs_; // size trunc_ + 1
    int trunc_;
};

/// Shared term formatter for QPolynomial/QSeries printing.
std::string format_q_terms(const std::vector<long long>& coeffs, const char* var = "q");

} // namespace satake
