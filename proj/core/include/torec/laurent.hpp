#pragma once

// One-variable Laurent series: finite polar part, truncated regular part,
// provable truncation order tracked through every operation. Products use
// trunc(a*b) = min(trunc_a + min_b, trunc_b + min_a); any attempt to read a
// coefficient past the truncation order throws instead of returning zero.

#include "torec/scalar.hpp"

#include <algorithm>
#include <limits>
#include <vector>

namespace torec {

template <class S>
class Laurent {
public:
    static constexpr int kExact = std::numeric_limits<int>::max() / 4;
    static constexpr int kAnyVar = -1;

    Laurent() : var_(kAnyVar), min_(0), trunc_(kExact) {}

    static Laurent zero(int var = kAnyVar, int trunc = kExact) {
        Laurent s;
        s.var_ = var;
        s.trunc_ = trunc;
        return s;
    }
    static Laurent constant(S c, int trunc = kExact) {
        Laurent s;
        s.trunc_ = trunc;
        if (!Field<S>::is_zero(c)) s.c_ = {std::move(c)};
        return s;
    }
    static Laurent monomial(int var, int exp, S c, int trunc = kExact) {
        Laurent s;
        s.var_ = var;
        s.min_ = exp;
        s.trunc_ = trunc;
        if (!Field<S>::is_zero(c)) s.c_ = {std::move(c)};
        if (s.c_.empty()) s.min_ = 0;
        return s;
    }
    static Laurent from_coeffs(int var, int min_exp, std::vector<S> coeffs,
                               int trunc = kExact) {
        Laurent s;
        s.var_ = var;
        s.min_ = min_exp;
        s.c_ = std::move(coeffs);
        s.trunc_ = trunc;
        s.normalize();
        return s;
    }

    int var() const { return var_; }
    int trunc() const { return trunc_; }
    bool is_exact() const { return trunc_ == kExact; }
    bool is_zero() const { return c_.empty(); }
    // Provable lower bound on the support.
    int min_exp() const { return c_.empty() ? 0 : min_; }
    int max_stored() const { return min_ + static_cast<int>(c_.size()) - 1; }

    const S& coeff(int e) const {
        if (e > trunc_)
            throw TruncationError("coefficient " + std::to_string(e) +
                                  " beyond truncation order " + std::to_string(trunc_));
        if (e < min_ || e > max_stored()) return zero_scalar();
        return c_[e - min_];
    }
    // Unknown coefficients read as zero; for diagnostics only.
    const S& coeff_or_zero(int e) const {
        if (e < min_ || e > max_stored()) return zero_scalar();
        return c_[e - min_];
    }

    // Lowest nonzero exponent; kExact when no nonzero coefficient is stored.
    int valuation() const { return c_.empty() ? kExact : min_; }

    Laurent add(const Laurent& o) const {
        int v = merged_var(o);
        int t = std::min(trunc_, o.trunc_);
        if (c_.empty() && o.c_.empty()) return zero(v, t);
        int lo = c_.empty() ? o.min_ : (o.c_.empty() ? min_ : std::min(min_, o.min_));
        int hi = std::min(std::max(max_stored(), o.max_stored()), t);
        Laurent r;
        r.var_ = v;
        r.trunc_ = t;
        r.min_ = lo;
        if (hi >= lo) {
            r.c_.assign(hi - lo + 1, S{});
            for (int e = lo; e <= hi; ++e) {
                if (e >= min_ && e <= max_stored()) r.c_[e - lo] += c_[e - min_];
                if (e >= o.min_ && e <= o.max_stored()) r.c_[e - lo] += o.c_[e - o.min_];
            }
        }
        r.normalize();
        return r;
    }

    Laurent sub(const Laurent& o) const { return add(o.neg()); }

    Laurent neg() const {
        Laurent r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }

    Laurent scale(const S& k) const {
        if (Field<S>::is_zero(k)) return zero(var_, trunc_);
        Laurent r = *this;
        for (auto& c : r.c_) c *= k;
        r.normalize();
        return r;
    }

    Laurent mul(const Laurent& o) const {
        int v = merged_var(o);
        long t = std::min(prod_trunc(trunc_, o.min_exp()), prod_trunc(o.trunc_, min_exp()));
        int tt = t >= kExact ? kExact : static_cast<int>(t);
        if (c_.empty() || o.c_.empty()) return zero(v, tt);
        int lo = min_ + o.min_;
        int hi = std::min(static_cast<long>(max_stored()) + o.max_stored(),
                          static_cast<long>(tt));
        Laurent r;
        r.var_ = v;
        r.trunc_ = tt;
        r.min_ = lo;
        if (hi >= lo) {
            r.c_.assign(hi - lo + 1, S{});
            for (size_t i = 0; i < c_.size(); ++i) {
                if (Field<S>::is_zero(c_[i])) continue;
                int ei = min_ + static_cast<int>(i);
                for (size_t j = 0; j < o.c_.size(); ++j) {
                    int e = ei + o.min_ + static_cast<int>(j);
                    if (e > hi) break;
                    if (Field<S>::is_zero(o.c_[j])) continue;
                    r.c_[e - lo] += c_[i] * o.c_[j];
                }
            }
        }
        r.normalize();
        return r;
    }

    // Multiplication by zeta^k.
    Laurent shift(int k) const {
        Laurent r = *this;
        r.min_ += k;
        if (r.trunc_ != kExact) r.trunc_ += k;
        return r;
    }

    // s(-zeta).
    Laurent substitute_neg() const {
        Laurent r = *this;
        for (size_t i = 0; i < r.c_.size(); ++i)
            if ((r.min_ + static_cast<int>(i)) % 2 != 0) r.c_[i] = -r.c_[i];
        return r;
    }

    // (s(z) - s(-z))/2 and (s(z) + s(-z))/2.
    Laurent odd_part() const { return parity_part(1); }
    Laurent even_part() const { return parity_part(0); }

    Laurent derivative() const {
        Laurent r;
        r.var_ = var_;
        r.trunc_ = trunc_ == kExact ? kExact : trunc_ - 1;
        r.min_ = min_ - 1;
        r.c_.reserve(c_.size());
        for (size_t i = 0; i < c_.size(); ++i)
            r.c_.push_back(c_[i] * Field<S>::from_int(min_ + static_cast<int>(i)));
        r.normalize();
        return r;
    }

    // Term-wise antiderivative with zero constant term; rejects zeta^{-1}.
    Laurent antiderivative() const {
        Laurent r;
        r.var_ = var_;
        r.trunc_ = trunc_ == kExact ? kExact : trunc_ + 1;
        r.min_ = min_ + 1;
        r.c_.reserve(c_.size());
        for (size_t i = 0; i < c_.size(); ++i) {
            int e = min_ + static_cast<int>(i);
            if (e == -1) {
                if (!Field<S>::is_zero(c_[i]))
                    throw DomainError("antiderivative of zeta^-1 term");
                r.c_.push_back(S{});
            } else {
                r.c_.push_back(c_[i] / Field<S>::from_int(e + 1));
            }
        }
        r.normalize();
        return r;
    }

    // Coefficient of zeta^{-1}. Unknowable only when the window cannot prove it.
    S residue() const {
        if (-1 > trunc_)
            throw TruncationError("residue lies beyond truncation order");
        if (-1 < min_ || c_.empty()) return S{};
        return coeff(-1);
    }

    Laurent truncated(int new_trunc) const {
        if (new_trunc > trunc_)
            throw TruncationError("cannot raise truncation order by fiat");
        Laurent r;
        r.var_ = var_;
        r.trunc_ = new_trunc;
        r.min_ = min_;
        for (int e = min_; e <= std::min(max_stored(), new_trunc); ++e)
            r.c_.push_back(c_[e - min_]);
        r.normalize();
        return r;
    }

    // t with s*t = 1 through zeta^order. min_exp(t) = -valuation(s).
    Laurent inverse(int order) const {
        int v = first_nonzero();
        if (v == kExact) throw DomainError("inverse of (effectively) zero series");
        long attainable = trunc_ == kExact ? kExact : static_cast<long>(trunc_) - 2L * v;
        if (order > attainable)
            throw TruncationError("requested inverse order " + std::to_string(order) +
                                  " beyond attainable " + std::to_string(attainable));
        // u = s / zeta^v is a unit; invert by the standard recurrence.
        int n = order + v;  // need w_0..w_n with t = zeta^{-v} w
        std::vector<S> w(static_cast<size_t>(std::max(n, 0)) + 1, S{});
        const S& u0 = c_[v - min_];
        w[0] = Field<S>::one() / u0;
        for (int k = 1; k <= n; ++k) {
            S acc{};
            for (int j = 1; j <= k; ++j) {
                int e = v + j;
                if (e > max_stored()) break;
                if (e >= min_ && !Field<S>::is_zero(c_[e - min_]))
                    acc += c_[e - min_] * w[k - j];
            }
            w[k] = -(acc / u0);
        }
        return from_coeffs(var_, -v, std::move(w), order);
    }

    // Square root of a series with even valuation whose leading coefficient
    // has a representable principal square root.
    Laurent sqrt() const {
        int v = first_nonzero();
        if (v == kExact) throw DomainError("sqrt of zero series");
        if (v % 2 != 0) throw DomainError("sqrt of series with odd valuation");
        int t = trunc_ == kExact ? kExact : trunc_ - v / 2;
        int n = (trunc_ == kExact ? static_cast<int>(c_.size()) + v / 2
                                  : t - v / 2);  // b indices 0..n
        S b0 = Field<S>::sqrt_principal(c_[v - min_]);
        std::vector<S> b(static_cast<size_t>(std::max(n, 0)) + 1, S{});
        b[0] = b0;
        S two = Field<S>::from_int(2);
        for (int k = 1; k <= n; ++k) {
            S acc{};
            for (int j = 1; j < k; ++j) acc += b[j] * b[k - j];
            int e = v + k;
            S sk = (e <= max_stored() && e >= min_) ? c_[e - min_] : S{};
            if (trunc_ != kExact && e > trunc_) break;
            b[k] = (sk - acc) / (two * b0);
        }
        return from_coeffs(var_, v / 2, std::move(b), t);
    }

    // f(g) for regular f (min_exp >= 0) and g with valuation >= 1.
    static Laurent compose(const Laurent& f, const Laurent& g) {
        if (f.min_exp() < 0) throw DomainError("compose: outer series has a pole");
        if (!g.is_zero() && g.first_nonzero() < 1)
            throw DomainError("compose: inner series must vanish at 0");
        Laurent acc = zero(g.var_, g.trunc_);
        for (int e = f.max_stored(); e >= f.min_exp(); --e) {
            acc = acc.mul(g);
            acc = acc.add(constant(f.coeff_or_zero(e)));
        }
        int t = std::min(acc.trunc_, f.trunc_ == kExact ? kExact : f.trunc_);
        // truncation of f limits knowledge at order trunc_f * val(g) >= trunc_f
        if (f.trunc_ != kExact) t = std::min(t, f.trunc_);
        acc.trunc_ = t;
        acc.normalize();
        return acc;
    }

    template <class C>
    C eval(const C& z) const {
        C acc{};
        for (size_t i = c_.size(); i-- > 0;) {
            acc = acc * z + convert_coeff<C>(c_[i]);
        }
        if (min_ >= 0) {
            for (int k = 0; k < min_; ++k) acc = acc * z;
        } else {
            C p = z;
            for (int k = 1; k < -min_; ++k) p = p * z;
            acc = acc / p;
        }
        return acc;
    }

    bool operator==(const Laurent& o) const {
        if (first_nonzero() != o.first_nonzero()) return false;
        int lo = std::min(min_exp(), o.min_exp());
        int hi = std::max(max_stored(), o.max_stored());
        for (int e = lo; e <= hi; ++e)
            if (!(coeff_or_zero(e) == o.coeff_or_zero(e))) return false;
        return true;
    }

    std::vector<std::pair<int, S>> terms() const {
        std::vector<std::pair<int, S>> out;
        for (size_t i = 0; i < c_.size(); ++i)
            if (!Field<S>::is_zero(c_[i])) out.emplace_back(min_ + static_cast<int>(i), c_[i]);
        return out;
    }

private:
    int var_;
    int min_;
    int trunc_;
    std::vector<S> c_;

    static const S& zero_scalar() {
        static const S z{};
        return z;
    }

    template <class C>
    static C convert_coeff(const S& c) {
        if constexpr (std::is_same_v<C, S>) {
            return c;
        } else if constexpr (std::is_same_v<C, CDouble>) {
            return to_cdouble(c);
        } else {
            return to_cbig(c);
        }
    }

    static long prod_trunc(int t, int other_min) {
        if (t == kExact) return kExact;
        return static_cast<long>(t) + other_min;
    }

    int merged_var(const Laurent& o) const {
        if (var_ == kAnyVar) return o.var_;
        if (o.var_ == kAnyVar) return var_;
        if (var_ != o.var_)
            throw DomainError("mismatched series variables " + std::to_string(var_) +
                              " vs " + std::to_string(o.var_));
        return var_;
    }

    int first_nonzero() const {
        for (size_t i = 0; i < c_.size(); ++i)
            if (!Field<S>::is_zero(c_[i])) return min_ + static_cast<int>(i);
        return kExact;
    }

    Laurent parity_part(int parity) const {
        Laurent r = *this;
        for (size_t i = 0; i < r.c_.size(); ++i)
            if (((r.min_ + static_cast<int>(i)) % 2 + 2) % 2 != parity) r.c_[i] = S{};
        r.normalize();
        return r;
    }

    void normalize() {
        if (trunc_ != kExact && max_stored() > trunc_)
            c_.resize(static_cast<size_t>(trunc_ - min_ + 1 > 0 ? trunc_ - min_ + 1 : 0));
        size_t lead = 0;
        while (lead < c_.size() && Field<S>::is_zero(c_[lead])) ++lead;
        if (lead > 0) {
            c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
            min_ += static_cast<int>(lead);
        }
        while (!c_.empty() && Field<S>::is_zero(c_.back())) c_.pop_back();
        if (c_.empty()) min_ = 0;
    }
};

}  // namespace torec
