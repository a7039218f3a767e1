#pragma once

#include <gmpxx.h>

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include "charval/errors.hpp"

namespace charval {

namespace cyclo_detail {

using Poly = std::vector<mpz_class>;  // dense, index = exponent

inline void poly_trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (b[j] != 0) r[i + j] += a[i] * b[j];
    }
    poly_trim(r);
    return r;
}

/// Exact division by a monic divisor; the remainder must vanish.
inline Poly poly_div_exact(Poly num, const Poly& den) {
    if (den.empty() || den.back() != 1) throw Error("poly_div_exact: divisor must be monic");
    if (num.size() < den.size()) throw Error("poly_div_exact: degree underflow");
    Poly q(num.size() - den.size() + 1, mpz_class(0));
    for (std::size_t k = q.size(); k-- > 0;) {
        mpz_class c = num[k + den.size() - 1];
        q[k] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j < den.size(); ++j) num[k + j] -= c * den[j];
    }
    for (const mpz_class& c : num)
        if (c != 0) throw Error("poly_div_exact: nonzero remainder");
    return q;
}

/// Per-conductor data: phi(e), the cyclotomic polynomial, and reduction rows
/// x^k mod Phi_e for phi(e) <= k <= max(e-1, 2 phi(e)-2).
struct ConductorData {
    long e = 1;
    long phi = 1;
    Poly cyclotomic_poly;                 // Phi_e, monic, degree phi
    std::vector<Poly> reduction;          // reduction[k - phi] has length phi
    long max_exponent = 0;

    const Poly& row(long k) const { return reduction[k - phi]; }
};

class ConductorRegistry {
public:
    static const ConductorData& get(long e) {
        static ConductorRegistry instance;
        return instance.lookup(e);
    }

private:
    const ConductorData& lookup(long e) {
        if (e < 1) throw Error("conductor must be >= 1");
        {
            std::shared_lock lock(mutex_);
            auto it = cache_.find(e);
            if (it != cache_.end()) return *it->second;
        }
        std::unique_lock lock(mutex_);
        auto it = cache_.find(e);
        if (it == cache_.end())
            it = cache_.emplace(e, std::make_unique<ConductorData>(build(e))).first;
        return *it->second;
    }

    Poly cyclotomic_poly(long e) {
        // Phi_e = (x^e - 1) / prod_{d | e, d < e} Phi_d
        auto it = poly_cache_.find(e);
        if (it != poly_cache_.end()) return it->second;
        Poly num(e + 1, mpz_class(0));
        num[0] = -1;
        num[e] = 1;
        Poly den{1};
        for (long d = 1; d < e; ++d)
            if (e % d == 0) den = poly_mul(den, cyclotomic_poly(d));
        Poly phi = poly_div_exact(std::move(num), den);
        poly_cache_.emplace(e, phi);
        return phi;
    }

    ConductorData build(long e) {
        ConductorData data;
        data.e = e;
        data.cyclotomic_poly = cyclotomic_poly(e);
        data.phi = static_cast<long>(data.cyclotomic_poly.size()) - 1;
        data.max_exponent = std::max(e - 1, 2 * data.phi - 2);
        // x^phi = -(low part of Phi); higher rows by multiply-by-x then fold.
        Poly cur(data.phi, mpz_class(0));
        for (long i = 0; i < data.phi; ++i) cur[i] = -data.cyclotomic_poly[i];
        for (long k = data.phi; k <= data.max_exponent; ++k) {
            data.reduction.push_back(cur);
            mpz_class lead = cur[data.phi - 1];
            for (long i = data.phi - 1; i > 0; --i) cur[i] = cur[i - 1];
            cur[0] = 0;
            if (lead != 0)
                for (long i = 0; i < data.phi; ++i)
                    cur[i] -= lead * data.cyclotomic_poly[i];
        }
        return data;
    }

    std::shared_mutex mutex_;
    std::map<long, std::unique_ptr<ConductorData>> cache_;
    std::map<long, Poly> poly_cache_;  // only touched under unique path in build
};

}  // namespace cyclo_detail

/// An element of Z[zeta_e] in canonical form: the unique representative in
/// the power basis 1, zeta, ..., zeta^(phi(e)-1) after reduction modulo the
/// e-th cyclotomic polynomial. Two values with equal conductor are equal iff
/// their coefficient vectors are equal.
class Cyclotomic {
public:
    Cyclotomic() : e_(1), coeffs_(1, mpz_class(0)) {}

    explicit Cyclotomic(long n) : e_(1), coeffs_(1, mpz_class(n)) {}
    explicit Cyclotomic(mpz_class n) : e_(1), coeffs_(1, std::move(n)) {}

    /// Canonicalize a raw exponent vector: value = sum raw[k] * zeta_e^k.
    static Cyclotomic from_exponent_vector(long e, const std::vector<mpz_class>& raw) {
        const auto& data = cyclo_detail::ConductorRegistry::get(e);
        if (static_cast<long>(raw.size()) > data.max_exponent + 1)
            throw Error("from_exponent_vector: exponent out of range");
        Cyclotomic x;
        x.e_ = e;
        x.coeffs_.assign(data.phi, mpz_class(0));
        for (long k = 0; k < static_cast<long>(raw.size()); ++k) {
            if (raw[k] == 0) continue;
            if (k < data.phi) {
                x.coeffs_[k] += raw[k];
            } else {
                const auto& row = data.row(k);
                for (long i = 0; i < data.phi; ++i)
                    if (row[i] != 0) x.coeffs_[i] += raw[k] * row[i];
            }
        }
        return x;
    }

    static Cyclotomic embed_int(const mpz_class& n, long e) {
        std::vector<mpz_class> raw(1, n);
        return from_exponent_vector(e, raw);
    }

    /// zeta_e^k
    static Cyclotomic root_of_unity(long e, long k) {
        if (e < 1) throw Error("root_of_unity: conductor must be >= 1");
        k %= e;
        if (k < 0) k += e;
        std::vector<mpz_class> raw(k + 1, mpz_class(0));
        raw[k] = 1;
        return from_exponent_vector(e, raw);
    }

    long conductor() const { return e_; }
    const std::vector<mpz_class>& coeffs() const { return coeffs_; }

    /// Lift to conductor e2 (requires e | e2): zeta_e = zeta_e2^(e2/e).
    Cyclotomic to_conductor(long e2) const {
        if (e2 == e_) return *this;
        if (e2 < 1 || e2 % e_ != 0)
            throw IncompatibleConductor("cannot lift conductor " + std::to_string(e_) +
                                        " to " + std::to_string(e2));
        long stride = e2 / e_;
        std::vector<mpz_class> raw(e2, mpz_class(0));
        for (long k = 0; k < static_cast<long>(coeffs_.size()); ++k)
            raw[k * stride] = coeffs_[k];
        return from_exponent_vector(e2, raw);
    }

    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
        auto [x, y] = lift_pair(a, b);
        for (std::size_t i = 0; i < x.coeffs_.size(); ++i) x.coeffs_[i] += y.coeffs_[i];
        return x;
    }

    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
        auto [x, y] = lift_pair(a, b);
        for (std::size_t i = 0; i < x.coeffs_.size(); ++i) x.coeffs_[i] -= y.coeffs_[i];
        return x;
    }

    Cyclotomic operator-() const {
        Cyclotomic x = *this;
        for (auto& c : x.coeffs_) c = -c;
        return x;
    }

    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
        auto [x, y] = lift_pair(a, b);
        const long phi = static_cast<long>(x.coeffs_.size());
        std::vector<mpz_class> conv(2 * phi - 1, mpz_class(0));
        for (long i = 0; i < phi; ++i) {
            if (x.coeffs_[i] == 0) continue;
            for (long j = 0; j < phi; ++j)
                if (y.coeffs_[j] != 0) conv[i + j] += x.coeffs_[i] * y.coeffs_[j];
        }
        return from_exponent_vector(x.e_, conv);
    }

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
        if (a.e_ == b.e_) return a.coeffs_ == b.coeffs_;
        long l = std::lcm(a.e_, b.e_);
        return a.to_conductor(l).coeffs_ == b.to_conductor(l).coeffs_;
    }
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

    /// Galois map zeta -> zeta^k; requires gcd(k, e) = 1.
    Cyclotomic galois(long k) const {
        k %= e_;
        if (k < 0) k += e_;
        if (std::gcd(k, e_) != 1)
            throw Error("galois: exponent " + std::to_string(k) + " not coprime to conductor " +
                        std::to_string(e_));
        std::vector<mpz_class> raw(e_, mpz_class(0));
        for (long i = 0; i < static_cast<long>(coeffs_.size()); ++i)
            raw[(i * k) % e_] += coeffs_[i];
        return from_exponent_vector(e_, raw);
    }

    /// Complex conjugation zeta -> zeta^(-1).
    Cyclotomic conjugate() const { return e_ == 1 ? *this : galois(e_ - 1); }

    /// x + conjugate(x), the doubled real part.
    Cyclotomic real_double_part() const { return *this + conjugate(); }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (c != 0) return false;
        return true;
    }

    std::optional<mpz_class> as_rational_integer() const {
        for (std::size_t i = 1; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0) return std::nullopt;
        return coeffs_[0];
    }

    /// Total order on values of equal conductor (coefficient-lexicographic).
    friend bool lex_less(const Cyclotomic& a, const Cyclotomic& b) {
        if (a.e_ != b.e_) {
            long l = std::lcm(a.e_, b.e_);
            return lex_less(a.to_conductor(l), b.to_conductor(l));
        }
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            int c = cmp(a.coeffs_[i], b.coeffs_[i]);
            if (c != 0) return c < 0;
        }
        return false;
    }

    /// Rendering: integers plain, otherwise terms like "z(9)^2 + 2*z(9)^4".
    std::string to_string() const {
        if (auto n = as_rational_integer()) return n->get_str();
        std::string out;
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            if (coeffs_[k] == 0) continue;
            mpz_class c = coeffs_[k];
            bool negative = c < 0;
            if (negative) c = -c;
            if (out.empty()) {
                if (negative) out += "-";
            } else {
                out += negative ? " - " : " + ";
            }
            std::string term;
            if (k == 0) {
                term = c.get_str();
            } else {
                if (c != 1) term = c.get_str() + "*";
                term += "z(" + std::to_string(e_) + ")";
                if (k > 1) term += "^" + std::to_string(k);
            }
            out += term;
        }
        return out.empty() ? "0" : out;
    }

    /// Display-only decimal approximation (never used in any decision).
    std::pair<double, double> approx() const {
        double re = 0, im = 0;
        const double tau = 6.283185307179586476925286766559;
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            if (coeffs_[k] == 0) continue;
            double c = coeffs_[k].get_d();
            re += c * std::cos(tau * static_cast<double>(k) / static_cast<double>(e_));
            im += c * std::sin(tau * static_cast<double>(k) / static_cast<double>(e_));
        }
        return {re, im};
    }

private:
    static std::pair<Cyclotomic, Cyclotomic> lift_pair(const Cyclotomic& a, const Cyclotomic& b) {
        if (a.e_ == b.e_) return {a, b};
        long l = std::lcm(a.e_, b.e_);
        return {a.to_conductor(l), b.to_conductor(l)};
    }

    long e_;
    std::vector<mpz_class> coeffs_;  // length phi(e_)
};

inline long euler_phi_of_conductor(long e) {
    return cyclo_detail::ConductorRegistry::get(e).phi;
}

}  // namespace charval
