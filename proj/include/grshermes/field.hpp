// field.hpp
//
// Exact arithmetic in the tower GF(p) < GF(q = p^m) < GF(q^2).
//
// Elements are encoded as integers in [0, q^2): an element a + b*y of
// GF(q^2) (a, b in GF(q), y a root of the top polynomial) encodes as
// enc(a) + q*enc(b), and an element of GF(q) encodes its polynomial
// coordinates as base-p digits, constant coefficient least significant.
// Consequently enc(0) = 0, enc(1) = 1, and x lies in GF(q) iff enc(x) < q.

#ifndef GRSHERMES_FIELD_HPP
#define GRSHERMES_FIELD_HPP

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace grshermes {

/// Integer encoding of a field element; valid values are < q^2.
using Felt = std::uint32_t;

/// Thrown when a desk-scale guard would be exceeded (CLI exit code 3).
struct GuardExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Polynomials over GF(p): coefficient vectors, constant term first.
using PPoly = std::vector<unsigned>;

inline PPoly ppoly_trim(PPoly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

inline PPoly ppoly_mul(const PPoly& a, const PPoly& b, unsigned p) {
    if (a.empty() || b.empty()) return {};
    PPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    return ppoly_trim(std::move(r));
}

// Remainder of a modulo monic m.
inline PPoly ppoly_mod(PPoly a, const PPoly& m, unsigned p) {
    a = ppoly_trim(std::move(a));
    const std::size_t dm = m.size() - 1;
    while (a.size() > dm) {
        const unsigned lead = a.back();
        const std::size_t shift = a.size() - 1 - dm;
        if (lead != 0)
            for (std::size_t i = 0; i <= dm; ++i) {
                unsigned& c = a[shift + i];
                c = (c + (p - 1) * lead % p * m[i]) % p;
            }
        a.pop_back();
        a = ppoly_trim(std::move(a));
        if (a.size() <= dm) break;
    }
    return a;
}

inline bool ppoly_divides(const PPoly& d, const PPoly& a, unsigned p) {
    return ppoly_mod(a, d, p).empty();
}

// Trial division by every monic polynomial of degree 1..deg(f)/2.
inline bool irreducible_over_prime(const PPoly& f, unsigned p) {
    const std::size_t deg = f.size() - 1;
    if (deg == 0) return false;
    if (deg == 1) return true;
    for (std::size_t d = 1; 2 * d <= deg; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            PPoly m(d + 1, 0);
            std::uint64_t t = idx;
            for (std::size_t i = 0; i < d; ++i) {
                m[i] = static_cast<unsigned>(t % p);
                t /= p;
            }
            m[d] = 1;
            if (ppoly_divides(m, f, p)) return false;
        }
    }
    return true;
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> fs;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    if (n > 1) fs.push_back(n);
    return fs;
}

}  // namespace detail

/// The chain GF(p) < GF(q) < GF(q^2) with fixed polynomial bases, integer
/// element encodings, and full log/antilog tables for GF(q^2)*.
///
/// Immutable after construction; all operations are pure and safe to call
/// concurrently.
class FieldTower {
public:
    /// Canonical tower: lexicographically smallest monic irreducible
    /// polynomials (coefficients compared constant-term-first) and the
    /// smallest-encoding primitive element of GF(q^2).
    FieldTower(unsigned p, unsigned m) { init(p, m, {}, {}, 0); }

    /// Tower from an explicit description (e.g. a JSON file). Polynomials
    /// and the generator are validated, not trusted.
    FieldTower(unsigned p, unsigned m, const std::vector<Felt>& base_poly,
               const std::vector<Felt>& top_poly, Felt generator) {
        init(p, m, base_poly, top_poly, generator);
    }

    unsigned characteristic() const { return p_; }
    unsigned extension_degree() const { return m_; }
    Felt q() const { return q_; }
    Felt q_squared() const { return q2_; }
    Felt generator() const { return generator_; }
    const std::vector<Felt>& base_poly() const { return base_poly_; }
    const std::vector<Felt>& top_poly() const { return top_poly_; }

    bool valid(Felt x) const { return x < q2_; }
    bool in_subfield(Felt x) const { return x < q_; }

    Felt add(Felt a, Felt b) const {
        assert(valid(a) && valid(b));
        return join(qadd(lo(a), lo(b)), qadd(hi(a), hi(b)));
    }

    Felt neg(Felt a) const {
        assert(valid(a));
        return join(qneg_[lo(a)], qneg_[hi(a)]);
    }

    Felt sub(Felt a, Felt b) const { return add(a, neg(b)); }

    Felt mul(Felt a, Felt b) const {
        assert(valid(a) && valid(b));
        if (a == 0 || b == 0) return 0;
        std::uint64_t e = log_[a] + log_[b];
        if (e >= group_order()) e -= group_order();
        return antilog_[e];
    }

    Felt inv(Felt a) const {
        assert(valid(a));
        if (a == 0) throw std::invalid_argument("inverse of zero");
        return antilog_[(group_order() - log_[a]) % group_order()];
    }

    Felt div(Felt a, Felt b) const { return mul(a, inv(b)); }

    Felt pow(Felt a, std::uint64_t e) const {
        assert(valid(a));
        if (a == 0) return e == 0 ? 1 : 0;
        return antilog_[static_cast<std::uint64_t>(log_[a]) * (e % group_order()) % group_order()];
    }

    /// Discrete log base the fixed generator; defined for nonzero x.
    std::uint32_t element_log(Felt x) const {
        assert(valid(x));
        if (x == 0) throw std::invalid_argument("log of zero");
        return log_[x];
    }

    Felt element_from_log(std::uint64_t e) const { return antilog_[e % group_order()]; }

    /// x -> x^q, the Frobenius of GF(q^2) over GF(q); fixes exactly GF(q).
    Felt frobenius(Felt x) const { return pow(x, q_); }

    /// x -> x^(q+1), the norm map GF(q^2) -> GF(q).
    Felt norm_to_base(Felt x) const { return pow(x, q_ + 1); }

    /// Smallest-encoding v with v^(q+1) = c, for nonzero c in GF(q).
    ///
    /// Writes c = g^((q+1)s) via the log table; the q+1 solutions are
    /// g^(s + j(q-1)) for j = 0..q and the minimum encoding is returned.
    Felt solve_norm_equation(Felt c) const {
        if (c == 0) throw std::invalid_argument("norm equation: c must be nonzero");
        if (!in_subfield(c)) throw std::invalid_argument("norm equation: c must lie in GF(q)");
        const std::uint64_t L = log_[c];
        assert(L % (q_ + 1) == 0);
        const std::uint64_t s = L / (q_ + 1);
        Felt best = 0;
        for (std::uint64_t j = 0; j <= q_; ++j) {
            const Felt v = antilog_[(s + j * (q_ - 1)) % group_order()];
            if (best == 0 || v < best) best = v;
        }
        return best;
    }

    bool same_tower(const FieldTower& o) const {
        return p_ == o.p_ && m_ == o.m_ && base_poly_ == o.base_poly_ &&
               top_poly_ == o.top_poly_ && generator_ == o.generator_;
    }

private:
    unsigned p_ = 0, m_ = 0;
    Felt q_ = 0, q2_ = 0;
    std::vector<Felt> base_poly_;  // degree m over GF(p), constant first
    std::vector<Felt> top_poly_;   // degree 2 over GF(q), constant first
    Felt generator_ = 0;

    std::vector<std::uint16_t> qadd_;   // q x q addition in GF(q)
    std::vector<std::uint16_t> qmul_;   // q x q multiplication in GF(q)
    std::vector<std::uint16_t> qneg_;   // additive inverse in GF(q)
    std::vector<std::uint32_t> log_;    // GF(q^2)* -> [0, q^2-1)
    std::vector<Felt> antilog_;         // inverse of log_

    std::uint64_t group_order() const { return q2_ - 1; }
    Felt lo(Felt x) const { return x % q_; }
    Felt hi(Felt x) const { return x / q_; }
    Felt join(Felt a, Felt b) const { return a + q_ * b; }
    std::uint16_t qadd(Felt a, Felt b) const { return qadd_[a * q_ + b]; }
    std::uint16_t qmul(Felt a, Felt b) const { return qmul_[a * q_ + b]; }

    // Component-formula product in GF(q^2), usable before the log tables
    // exist: with y^2 = -(t1*y + t0), (a+by)(c+dy) = (ac - t0*bd) + (ad + bc - t1*bd)y.
    Felt mul_direct(Felt x, Felt y) const {
        const Felt a = lo(x), b = hi(x), c = lo(y), d = hi(y);
        const Felt bd = qmul(b, d);
        const Felt e0 = qadd(qmul(a, c), qmul(bd, qneg_[top_poly_[0]]));
        const Felt e1 = qadd(qadd(qmul(a, d), qmul(b, c)), qmul(bd, qneg_[top_poly_[1]]));
        return join(e0, e1);
    }

    Felt pow_direct(Felt x, std::uint64_t e) const {
        Felt r = 1;
        while (e) {
            if (e & 1) r = mul_direct(r, x);
            x = mul_direct(x, x);
            e >>= 1;
        }
        return r;
    }

    bool is_primitive(Felt x, const std::vector<std::uint64_t>& factors) const {
        if (x == 0) return false;
        for (std::uint64_t f : factors)
            if (pow_direct(x, group_order() / f) == 1) return false;
        return true;
    }

    void init(unsigned p, unsigned m, std::vector<Felt> base_poly,
              std::vector<Felt> top_poly, Felt generator) {
        if (!detail::is_prime(p)) throw std::invalid_argument("p must be prime");
        if (m < 1) throw std::invalid_argument("m must be >= 1");
        std::uint64_t q = 1;
        for (unsigned i = 0; i < m; ++i) {
            q *= p;
            if (q * q > (1u << 20)) throw GuardExceeded("q^2 exceeds the 2^20 guard");
        }
        p_ = p;
        m_ = m;
        q_ = static_cast<Felt>(q);
        q2_ = q_ * q_;

        init_base_poly(std::move(base_poly));
        init_subfield_tables();
        init_top_poly(std::move(top_poly));
        init_log_tables(generator);
    }

    void init_base_poly(std::vector<Felt> given) {
        if (!given.empty()) {
            if (given.size() != m_ + 1 || given.back() != 1)
                throw std::invalid_argument("base_poly must be monic of degree m");
            detail::PPoly f(given.begin(), given.end());
            for (unsigned c : f)
                if (c >= p_) throw std::invalid_argument("base_poly coefficient out of range");
            if (!detail::irreducible_over_prime(f, p_))
                throw std::invalid_argument("base_poly is not irreducible over GF(p)");
            base_poly_ = std::move(given);
            return;
        }
        // Lexicographic scan, constant coefficient most significant.
        std::vector<unsigned> c(m_, 0);
        for (;;) {
            detail::PPoly f(c.begin(), c.end());
            f.push_back(1);
            if (detail::irreducible_over_prime(f, p_)) {
                base_poly_.assign(f.begin(), f.end());
                return;
            }
            int i = static_cast<int>(m_) - 1;
            while (i >= 0 && ++c[i] == p_) c[i--] = 0;
            if (i < 0) throw std::logic_error("no irreducible polynomial found");
        }
    }

    // GF(q) add/neg/mul tables. Multiplication is filled through a GF(q)
    // log table so the q x q fill is O(1) per entry.
    void init_subfield_tables() {
        qadd_.assign(static_cast<std::size_t>(q_) * q_, 0);
        qneg_.assign(q_, 0);
        for (Felt a = 0; a < q_; ++a) {
            for (Felt b = 0; b < q_; ++b) {
                Felt s = 0, pw = 1, x = a, y = b;
                for (unsigned i = 0; i < m_; ++i) {
                    s += ((x % p_) + (y % p_)) % p_ * pw;
                    x /= p_;
                    y /= p_;
                    pw *= p_;
                }
                qadd_[a * q_ + b] = static_cast<std::uint16_t>(s);
            }
            Felt n = 0, pw = 1, x = a;
            for (unsigned i = 0; i < m_; ++i) {
                n += (p_ - x % p_) % p_ * pw;
                x /= p_;
                pw *= p_;
            }
            qneg_[a] = static_cast<std::uint16_t>(n);
        }

        const auto poly_of = [&](Felt x) {
            detail::PPoly f(m_, 0);
            for (unsigned i = 0; i < m_; ++i) {
                f[i] = x % p_;
                x /= p_;
            }
            return detail::ppoly_trim(std::move(f));
        };
        const auto felt_of = [&](const detail::PPoly& f) {
            Felt x = 0, pw = 1;
            for (std::size_t i = 0; i < m_; ++i) {
                x += (i < f.size() ? f[i] : 0) * pw;
                pw *= p_;
            }
            return x;
        };
        const detail::PPoly modulus(base_poly_.begin(), base_poly_.end());
        const auto qmul_poly = [&](Felt a, Felt b) {
            return felt_of(detail::ppoly_mod(detail::ppoly_mul(poly_of(a), poly_of(b), p_), modulus, p_));
        };

        // Any primitive element of GF(q) will do; the tables it fills are
        // canonical regardless of the choice.
        std::vector<Felt> qexp(q_ > 1 ? q_ - 1 : 1, 1);
        std::vector<std::uint32_t> qlog(q_, 0);
        if (q_ > 2) {
            const auto qpow_poly = [&](Felt x, std::uint64_t e) {
                Felt r = 1;
                while (e) {
                    if (e & 1) r = qmul_poly(r, x);
                    x = qmul_poly(x, x);
                    e >>= 1;
                }
                return r;
            };
            const auto facs = detail::prime_factors(q_ - 1);
            Felt g = 0;
            for (Felt cand = 2; cand < q_; ++cand) {
                bool ok = true;
                for (std::uint64_t f : facs)
                    if (qpow_poly(cand, (q_ - 1) / f) == 1) {
                        ok = false;
                        break;
                    }
                if (ok) {
                    g = cand;
                    break;
                }
            }
            assert(g != 0);
            Felt x = 1;
            for (Felt e = 0; e < q_ - 1; ++e) {
                qexp[e] = x;
                qlog[x] = e;
                x = qmul_poly(x, g);
            }
        }
        qmul_.assign(static_cast<std::size_t>(q_) * q_, 0);
        for (Felt a = 1; a < q_; ++a)
            for (Felt b = 1; b < q_; ++b)
                qmul_[a * q_ + b] =
                    static_cast<std::uint16_t>(qexp[(qlog[a] + qlog[b]) % (q_ - 1)]);
    }

    void init_top_poly(std::vector<Felt> given) {
        const auto has_root = [&](Felt c0, Felt c1) {
            for (Felt a = 0; a < q_; ++a)
                if (qadd(qadd(qmul(a, a), qmul(c1, a)), c0) == 0) return true;
            return false;
        };
        if (!given.empty()) {
            if (given.size() != 3 || given[2] != 1 || given[0] >= q_ || given[1] >= q_)
                throw std::invalid_argument("top_poly must be monic quadratic over GF(q)");
            if (has_root(given[0], given[1]))
                throw std::invalid_argument("top_poly is not irreducible over GF(q)");
            top_poly_ = std::move(given);
            return;
        }
        for (Felt c0 = 0; c0 < q_; ++c0)
            for (Felt c1 = 0; c1 < q_; ++c1)
                if (!has_root(c0, c1)) {
                    top_poly_ = {c0, c1, 1};
                    return;
                }
        throw std::logic_error("no irreducible quadratic found");
    }

    void init_log_tables(Felt given_generator) {
        const auto facs = detail::prime_factors(group_order());
        if (given_generator != 0) {
            if (!valid(given_generator) || !is_primitive(given_generator, facs))
                throw std::invalid_argument("generator is not primitive in GF(q^2)");
            generator_ = given_generator;
        } else {
            generator_ = 0;
            for (Felt cand = 1; cand < q2_; ++cand)
                if (is_primitive(cand, facs)) {
                    generator_ = cand;
                    break;
                }
            assert(generator_ != 0);
        }
        log_.assign(q2_, 0);
        antilog_.assign(group_order(), 0);
        Felt x = 1;
        for (std::uint64_t e = 0; e < group_order(); ++e) {
            antilog_[e] = x;
            log_[x] = static_cast<std::uint32_t>(e);
            x = mul_direct(x, generator_);
        }
        assert(x == 1);
    }
};

/// build_tower with shared ownership, the form the code types consume.
inline std::shared_ptr<const FieldTower> make_tower(unsigned p, unsigned m) {
    return std::make_shared<const FieldTower>(p, m);
}

/// Factors a prime power q = p^m; throws if q is not a prime power.
inline std::pair<unsigned, unsigned> factor_prime_power(std::uint64_t q) {
    if (q < 2) throw std::invalid_argument("q must be a prime power >= 2");
    std::uint64_t p = q;
    for (std::uint64_t d = 2; d * d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    unsigned m = 0;
    std::uint64_t t = q;
    while (t % p == 0) {
        t /= p;
        ++m;
    }
    if (t != 1) throw std::invalid_argument("q is not a prime power");
    return {static_cast<unsigned>(p), m};
}

/// Tower for codes over GF(q^2) given the subfield size q.
inline std::shared_ptr<const FieldTower> make_tower_for_q(std::uint64_t q) {
    const auto [p, m] = factor_prime_power(q);
    return make_tower(p, m);
}

}  // namespace grshermes

#endif  // GRSHERMES_FIELD_HPP
