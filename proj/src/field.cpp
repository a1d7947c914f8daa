#include "ccgraph/field.hpp"

#include <algorithm>
#include <stdexcept>

namespace ccgraph {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    if (n % 3 == 0) return n == 3;
    for (std::uint64_t d = 5; d <= n / d; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0) return false;
    }
    return true;
}

std::optional<std::pair<std::uint64_t, std::uint32_t>>
prime_power_decompose(std::uint64_t q) {
    if (q < 2) return std::nullopt;
    std::uint64_t p = q;
    for (std::uint64_t d = 2; d <= p / d; ++d) {
        if (p % d == 0) {
            p = d;
            break;
        }
    }
    std::uint32_t k = 0;
    std::uint64_t rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++k;
    }
    if (rest != 1) return std::nullopt;
    return std::make_pair(p, k);
}

namespace {

constexpr std::uint64_t kTableLimit = 1024;

using Poly = std::vector<std::uint32_t>; // coefficients, constant term first

// Remainder of a modulo the monic polynomial m (degree = m.size() - 1, the
// leading 1 is implicit in `full` handling below). Here m carries all
// coefficients including the leading one.
Poly poly_mod(Poly a, const Poly& m, std::uint64_t p) {
    std::size_t deg_m = m.size() - 1;
    while (a.size() > deg_m) {
        std::uint64_t lead = a.back();
        std::size_t shift = a.size() - 1 - deg_m;
        if (lead != 0) {
            // m is monic, so the quotient digit is just `lead`.
            for (std::size_t i = 0; i <= deg_m; ++i) {
                std::uint64_t cur = a[shift + i];
                std::uint64_t sub = (lead * m[i]) % p;
                a[shift + i] =
                    static_cast<std::uint32_t>((cur + p * p - sub) % p);
            }
        }
        a.pop_back();
    }
    return a;
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint64_t p) {
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] = static_cast<std::uint32_t>(
                (out[i + j] + std::uint64_t(a[i]) * b[j]) % p);
        }
    }
    return out;
}

bool poly_is_zero(const Poly& a) {
    return std::all_of(a.begin(), a.end(), [](std::uint32_t c) { return c == 0; });
}

// Does the monic polynomial `m` (all coefficients present, leading 1 last)
// have a monic divisor of degree d? Enumerates all monic polynomials of
// degree d; fine for the tiny degrees used here.
bool has_monic_divisor(const Poly& m, std::uint32_t d, std::uint64_t p) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        Poly div(d + 1, 0);
        std::uint64_t rest = idx;
        for (std::uint32_t i = 0; i < d; ++i) {
            div[i] = static_cast<std::uint32_t>(rest % p);
            rest /= p;
        }
        div[d] = 1;
        if (poly_is_zero(poly_mod(m, div, p))) return true;
    }
    return false;
}

bool is_irreducible(const Poly& m, std::uint64_t p) {
    std::uint32_t deg = static_cast<std::uint32_t>(m.size() - 1);
    for (std::uint32_t d = 1; 2 * d <= deg; ++d) {
        if (has_monic_divisor(m, d, p)) return false;
    }
    return true;
}

} // namespace

FiniteField::FiniteField(std::uint64_t p, std::uint32_t k) : p_(p), k_(k) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
    if (k == 0) throw std::invalid_argument("field degree must be at least 1");
    q_ = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
        if (q_ > (std::uint64_t(1) << 40) / p) {
            throw std::invalid_argument("field too large");
        }
        q_ *= p;
    }

    // Smallest monic irreducible of degree k, coefficient vectors ordered
    // lexicographically from the constant term: the candidate index has c_0
    // as its most significant base-p digit, so index order is lex order.
    modulus_.assign(k, 0);
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < k; ++i) count *= p;
    bool found = false;
    for (std::uint64_t idx = 0; idx < count && !found; ++idx) {
        Poly cand(k + 1, 0);
        std::uint64_t rest = idx;
        for (std::uint32_t i = 0; i < k; ++i) {
            cand[k - 1 - i] = static_cast<std::uint32_t>(rest % p);
            rest /= p;
        }
        cand[k] = 1;
        if (is_irreducible(cand, p)) {
            for (std::uint32_t i = 0; i < k; ++i) modulus_[i] = cand[i];
            found = true;
        }
    }
    if (!found) throw std::logic_error("no irreducible polynomial found");

    if (q_ <= kTableLimit) {
        std::size_t q = static_cast<std::size_t>(q_);
        add_table_.resize(q * q);
        mul_table_.resize(q * q);
        neg_table_.resize(q);
        inv_table_.assign(q, 0);
        for (std::size_t a = 0; a < q; ++a) {
            for (std::size_t b = 0; b < q; ++b) {
                add_table_[a * q + b] = add_nocache(
                    static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b));
                mul_table_[a * q + b] = mul_nocache(
                    static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b));
            }
        }
        for (std::size_t a = 0; a < q; ++a) {
            // neg_table_ is already sized, so neg() would read the entry
            // being computed; go through the direct form instead.
            neg_table_[a] = neg_nocache(static_cast<std::uint32_t>(a));
            for (std::size_t b = 0; b < q; ++b) {
                if (mul_table_[a * q + b] == 1) inv_table_[a] = static_cast<std::uint32_t>(b);
            }
        }
    }
}

std::uint32_t FiniteField::add_nocache(std::uint32_t a, std::uint32_t b) const {
    if (k_ == 1) return static_cast<std::uint32_t>((std::uint64_t(a) + b) % p_);
    std::uint64_t out = 0;
    std::uint64_t scale = 1;
    for (std::uint32_t i = 0; i < k_; ++i) {
        std::uint64_t da = (a / scale) % p_;
        std::uint64_t db = (b / scale) % p_;
        out += ((da + db) % p_) * scale;
        scale *= p_;
    }
    return static_cast<std::uint32_t>(out);
}

std::uint32_t FiniteField::add(std::uint32_t a, std::uint32_t b) const {
    if (!add_table_.empty()) return add_table_[std::size_t(a) * q_ + b];
    return add_nocache(a, b);
}

std::uint32_t FiniteField::neg_nocache(std::uint32_t a) const {
    std::uint64_t out = 0;
    std::uint64_t scale = 1;
    for (std::uint32_t i = 0; i < k_; ++i) {
        std::uint64_t da = (a / scale) % p_;
        out += ((p_ - da) % p_) * scale;
        scale *= p_;
    }
    return static_cast<std::uint32_t>(out);
}

std::uint32_t FiniteField::neg(std::uint32_t a) const {
    if (!neg_table_.empty()) return neg_table_[a];
    return neg_nocache(a);
}

std::uint32_t FiniteField::sub(std::uint32_t a, std::uint32_t b) const {
    return add(a, neg(b));
}

std::uint32_t FiniteField::mul_nocache(std::uint32_t a, std::uint32_t b) const {
    if (k_ == 1) return static_cast<std::uint32_t>((std::uint64_t(a) * b) % p_);
    Poly pa(k_), pb(k_);
    std::uint64_t ra = a, rb = b;
    for (std::uint32_t i = 0; i < k_; ++i) {
        pa[i] = static_cast<std::uint32_t>(ra % p_);
        pb[i] = static_cast<std::uint32_t>(rb % p_);
        ra /= p_;
        rb /= p_;
    }
    Poly m(modulus_);
    m.push_back(1);
    Poly prod = poly_mod(poly_mul(pa, pb, p_), m, p_);
    std::uint64_t out = 0;
    std::uint64_t scale = 1;
    for (std::size_t i = 0; i < prod.size(); ++i) {
        out += std::uint64_t(prod[i]) * scale;
        scale *= p_;
    }
    return static_cast<std::uint32_t>(out);
}

std::uint32_t FiniteField::mul(std::uint32_t a, std::uint32_t b) const {
    if (!mul_table_.empty()) return mul_table_[std::size_t(a) * q_ + b];
    return mul_nocache(a, b);
}

std::uint32_t FiniteField::pow(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t out = 1;
    std::uint32_t base = a;
    while (e > 0) {
        if (e & 1) out = mul(out, base);
        base = mul(base, base);
        e >>= 1;
    }
    return out;
}

std::uint32_t FiniteField::inv(std::uint32_t a) const {
    if (a == 0) throw std::invalid_argument("zero has no inverse");
    if (!inv_table_.empty()) return inv_table_[a];
    return pow(a, q_ - 2);
}

std::string FiniteField::render(std::uint32_t a) const {
    if (k_ == 1) return std::to_string(a);
    if (a == 0) return "0";
    std::string out;
    std::vector<std::uint32_t> digits(k_);
    std::uint64_t rest = a;
    for (std::uint32_t i = 0; i < k_; ++i) {
        digits[i] = static_cast<std::uint32_t>(rest % p_);
        rest /= p_;
    }
    for (std::uint32_t i = k_; i-- > 0;) {
        std::uint32_t c = digits[i];
        if (c == 0) continue;
        if (!out.empty()) out += "+";
        if (i == 0) {
            out += std::to_string(c);
            continue;
        }
        if (c != 1) out += std::to_string(c);
        out += "t";
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

} // namespace ccgraph
