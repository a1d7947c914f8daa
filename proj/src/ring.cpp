#include "ccgraph/ring.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

#include "ccgraph/errors.hpp"

namespace ccgraph {

namespace {

constexpr std::uint64_t kDefaultGuard = std::uint64_t(1) << 20;
constexpr std::uint64_t kIdSpace = std::uint64_t(1) << 31;
constexpr std::uint64_t kMulTableLimit = 2048;

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    if (b != 0 && a > kIdSpace * 4 / b)
        throw SizeGuardError("ring element count overflows the id space");
    return a * b;
}

} // namespace

RingDescriptor RingDescriptor::modular(std::uint64_t n) {
    if (n < 2) throw std::invalid_argument("Z modulus must be at least 2");
    RingDescriptor d;
    d.kind_ = Kind::Modular;
    d.a_ = n;
    return d;
}

RingDescriptor RingDescriptor::galois(std::uint64_t p, std::uint32_t k) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
    if (k < 1) throw std::invalid_argument("field degree must be at least 1");
    RingDescriptor d;
    d.kind_ = Kind::Galois;
    d.a_ = p;
    d.b_ = k;
    return d;
}

RingDescriptor RingDescriptor::matrix(std::uint32_t size, RingDescriptor base) {
    if (size < 1) throw std::invalid_argument("matrix size must be at least 1");
    if (base.kind() != Kind::Galois)
        throw std::invalid_argument("matrix base must be a finite field");
    RingDescriptor d;
    d.kind_ = Kind::Matrix;
    d.a_ = size;
    d.first_ = std::make_shared<RingDescriptor>(std::move(base));
    return d;
}

RingDescriptor RingDescriptor::product(RingDescriptor left, RingDescriptor right) {
    // Keep products left-associated; the mixed-radix element encoding is
    // unchanged by reassociation, so this is purely a canonical form.
    if (right.kind_ == Kind::Product) {
        RingDescriptor inner = product(std::move(left), right.left());
        return product(std::move(inner), right.right());
    }
    RingDescriptor d;
    d.kind_ = Kind::Product;
    d.first_ = std::make_shared<RingDescriptor>(std::move(left));
    d.second_ = std::make_shared<RingDescriptor>(std::move(right));
    return d;
}

std::uint64_t RingDescriptor::modulus() const {
    if (kind_ != Kind::Modular) throw std::logic_error("not a modular ring");
    return a_;
}

std::uint64_t RingDescriptor::field_p() const {
    if (kind_ != Kind::Galois) throw std::logic_error("not a field");
    return a_;
}

std::uint32_t RingDescriptor::field_k() const {
    if (kind_ != Kind::Galois) throw std::logic_error("not a field");
    return b_;
}

std::uint32_t RingDescriptor::matrix_size() const {
    if (kind_ != Kind::Matrix) throw std::logic_error("not a matrix ring");
    return static_cast<std::uint32_t>(a_);
}

const RingDescriptor& RingDescriptor::base() const {
    if (kind_ != Kind::Matrix) throw std::logic_error("not a matrix ring");
    return *first_;
}

const RingDescriptor& RingDescriptor::left() const {
    if (kind_ != Kind::Product) throw std::logic_error("not a product ring");
    return *first_;
}

const RingDescriptor& RingDescriptor::right() const {
    if (kind_ != Kind::Product) throw std::logic_error("not a product ring");
    return *second_;
}

std::uint64_t RingDescriptor::element_count() const {
    switch (kind_) {
    case Kind::Modular:
        return a_;
    case Kind::Galois: {
        std::uint64_t q = 1;
        for (std::uint32_t i = 0; i < b_; ++i) q = checked_mul(q, a_);
        return q;
    }
    case Kind::Matrix: {
        std::uint64_t q = first_->element_count();
        std::uint64_t out = 1;
        for (std::uint64_t i = 0; i < a_ * a_; ++i) out = checked_mul(out, q);
        return out;
    }
    case Kind::Product:
        return checked_mul(first_->element_count(), second_->element_count());
    }
    throw std::logic_error("unreachable");
}

std::string RingDescriptor::render() const {
    switch (kind_) {
    case Kind::Modular:
        return "Z(" + std::to_string(a_) + ")";
    case Kind::Galois: {
        std::uint64_t q = 1;
        for (std::uint32_t i = 0; i < b_; ++i) q *= a_;
        return "GF(" + std::to_string(q) + ")";
    }
    case Kind::Matrix:
        return "M(" + std::to_string(a_) + "," + first_->render() + ")";
    case Kind::Product:
        return first_->render() + "x" + second_->render();
    }
    throw std::logic_error("unreachable");
}

bool RingDescriptor::operator==(const RingDescriptor& other) const {
    if (kind_ != other.kind_ || a_ != other.a_ || b_ != other.b_) return false;
    if (bool(first_) != bool(other.first_)) return false;
    if (first_ && !(*first_ == *other.first_)) return false;
    if (bool(second_) != bool(other.second_)) return false;
    if (second_ && !(*second_ == *other.second_)) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Spec parsing

namespace {

struct SpecParser {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() &&
               std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }

    void expect_char(char c) {
        skip_ws();
        if (pos >= text.size() || text[pos] != c)
            throw SpecError(std::string("expected '") + c + "'", pos);
        ++pos;
    }

    bool try_char(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    std::uint64_t parse_number() {
        skip_ws();
        std::size_t start = pos;
        if (pos >= text.size() ||
            !std::isdigit(static_cast<unsigned char>(text[pos])))
            throw SpecError("expected a number", pos);
        std::uint64_t v = 0;
        while (pos < text.size() &&
               std::isdigit(static_cast<unsigned char>(text[pos]))) {
            if (v > 1000000000000000000ULL)
                throw SpecError("number too large", start);
            v = v * 10 + static_cast<std::uint64_t>(text[pos] - '0');
            ++pos;
        }
        return v;
    }

    RingDescriptor parse_atom() {
        skip_ws();
        std::size_t name_pos = pos;
        std::size_t end = pos;
        while (end < text.size() && text[end] >= 'A' && text[end] <= 'Z') ++end;
        std::string name(text.substr(pos, end - pos));
        pos = end;
        if (name == "Z") {
            expect_char('(');
            skip_ws();
            std::size_t num_pos = pos;
            std::uint64_t n = parse_number();
            expect_char(')');
            if (n < 2) throw SpecError("Z modulus must be at least 2", num_pos);
            return RingDescriptor::modular(n);
        }
        if (name == "GF") {
            expect_char('(');
            skip_ws();
            std::size_t num_pos = pos;
            std::uint64_t base = parse_number();
            if (try_char('^')) {
                skip_ws();
                std::size_t exp_pos = pos;
                std::uint64_t k = parse_number();
                expect_char(')');
                if (!is_prime(base))
                    throw SpecError("GF base must be prime when an exponent is given",
                                    num_pos);
                if (k < 1 || k > 40)
                    throw SpecError("GF exponent out of range", exp_pos);
                return RingDescriptor::galois(base, static_cast<std::uint32_t>(k));
            }
            expect_char(')');
            auto pk = prime_power_decompose(base);
            if (!pk)
                throw SpecError(std::to_string(base) + " is not a prime power",
                                num_pos);
            return RingDescriptor::galois(pk->first, pk->second);
        }
        if (name == "M") {
            expect_char('(');
            skip_ws();
            std::size_t num_pos = pos;
            std::uint64_t n = parse_number();
            if (n < 1 || n > 64)
                throw SpecError("matrix size out of range", num_pos);
            expect_char(',');
            skip_ws();
            std::size_t base_pos = pos;
            RingDescriptor base = parse_atom();
            expect_char(')');
            if (base.kind() != RingDescriptor::Kind::Galois)
                throw SpecError("matrix base must be a finite field", base_pos);
            return RingDescriptor::matrix(static_cast<std::uint32_t>(n),
                                          std::move(base));
        }
        throw SpecError("expected a ring constructor (Z, GF, or M)", name_pos);
    }

    RingDescriptor parse_expr() {
        RingDescriptor out = parse_atom();
        for (;;) {
            skip_ws();
            if (pos < text.size() && text[pos] == 'x') {
                ++pos;
                out = RingDescriptor::product(std::move(out), parse_atom());
            } else {
                break;
            }
        }
        return out;
    }
};

} // namespace

RingDescriptor parse_ring_spec(std::string_view text) {
    SpecParser p{text};
    RingDescriptor d = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size())
        throw SpecError("unexpected trailing input", p.pos);
    return d;
}

// ---------------------------------------------------------------------------
// Kernels

namespace detail {

class RingKernel {
public:
    virtual ~RingKernel() = default;
    virtual ElementId add(ElementId a, ElementId b) const = 0;
    virtual ElementId neg(ElementId a) const = 0;
    virtual ElementId mul(ElementId a, ElementId b) const = 0;
    virtual ElementId one() const = 0;
    virtual std::string render(ElementId a) const = 0;
    virtual std::vector<ElementId> compute_units() const = 0;
    virtual std::optional<ElementId> inverse(ElementId a) const = 0;
    virtual bool left_zero_divisor(ElementId a) const = 0;
    virtual bool right_zero_divisor(ElementId a) const = 0;
    virtual const FiniteField* field() const { return nullptr; }
    virtual std::uint32_t mat_size() const { return 0; }
    virtual std::pair<RingPtr, RingPtr> children() const { return {nullptr, nullptr}; }
};

class ModularKernel final : public RingKernel {
public:
    explicit ModularKernel(std::uint64_t n) : n_(n) {}

    ElementId add(ElementId a, ElementId b) const override {
        return static_cast<ElementId>((std::uint64_t(a) + b) % n_);
    }
    ElementId neg(ElementId a) const override {
        return a == 0 ? 0 : static_cast<ElementId>(n_ - a);
    }
    ElementId mul(ElementId a, ElementId b) const override {
        return static_cast<ElementId>((std::uint64_t(a) * b) % n_);
    }
    ElementId one() const override { return 1; }
    std::string render(ElementId a) const override { return std::to_string(a); }

    std::vector<ElementId> compute_units() const override {
        std::vector<ElementId> out;
        for (std::uint64_t a = 1; a < n_; ++a)
            if (std::gcd(a, n_) == 1) out.push_back(static_cast<ElementId>(a));
        return out;
    }

    std::optional<ElementId> inverse(ElementId a) const override {
        std::int64_t old_r = a, r = static_cast<std::int64_t>(n_);
        std::int64_t old_s = 1, s = 0;
        while (r != 0) {
            std::int64_t q = old_r / r;
            std::int64_t tmp = old_r - q * r;
            old_r = r;
            r = tmp;
            tmp = old_s - q * s;
            old_s = s;
            s = tmp;
        }
        if (old_r != 1) return std::nullopt;
        std::int64_t inv = old_s % static_cast<std::int64_t>(n_);
        if (inv < 0) inv += static_cast<std::int64_t>(n_);
        return static_cast<ElementId>(inv);
    }

    bool left_zero_divisor(ElementId a) const override {
        return a == 0 || std::gcd(std::uint64_t(a), n_) != 1;
    }
    bool right_zero_divisor(ElementId a) const override {
        return left_zero_divisor(a);
    }

private:
    std::uint64_t n_;
};

class GaloisKernel final : public RingKernel {
public:
    GaloisKernel(std::uint64_t p, std::uint32_t k) : field_(p, k) {}

    ElementId add(ElementId a, ElementId b) const override { return field_.add(a, b); }
    ElementId neg(ElementId a) const override { return field_.neg(a); }
    ElementId mul(ElementId a, ElementId b) const override { return field_.mul(a, b); }
    ElementId one() const override { return 1; }
    std::string render(ElementId a) const override { return field_.render(a); }

    std::vector<ElementId> compute_units() const override {
        std::vector<ElementId> out;
        for (std::uint64_t a = 1; a < field_.q(); ++a)
            out.push_back(static_cast<ElementId>(a));
        return out;
    }

    std::optional<ElementId> inverse(ElementId a) const override {
        if (a == 0) return std::nullopt;
        return field_.inv(a);
    }

    bool left_zero_divisor(ElementId a) const override { return a == 0; }
    bool right_zero_divisor(ElementId a) const override { return a == 0; }

    const FiniteField* field() const override { return &field_; }

private:
    FiniteField field_;
};

class MatrixKernel final : public RingKernel {
public:
    MatrixKernel(std::uint64_t p, std::uint32_t k, std::uint32_t n,
                 std::uint64_t count)
        : field_(p, k), n_(n), nn_(std::size_t(n) * n), count_(count) {
        qpow_.resize(nn_ + 1);
        qpow_[0] = 1;
        for (std::size_t i = 0; i < nn_; ++i) qpow_[i + 1] = qpow_[i] * field_.q();
        // Decoded-entry cache; worth it whenever the ring is buildable and
        // the base field is byte-sized.
        if (field_.q() <= 256 && count_ * nn_ <= (std::uint64_t(1) << 26)) {
            cache_.resize(count_ * nn_);
            for (std::uint64_t id = 0; id < count_; ++id) {
                std::uint64_t rest = id;
                for (std::size_t i = 0; i < nn_; ++i) {
                    cache_[id * nn_ + i] = static_cast<std::uint8_t>(rest % field_.q());
                    rest /= field_.q();
                }
            }
        }
    }

    MatrixRep decode(ElementId a) const {
        MatrixRep m(n_);
        if (!cache_.empty()) {
            const std::uint8_t* e = &cache_[std::size_t(a) * nn_];
            for (std::size_t i = 0; i < nn_; ++i) m.entries[i] = e[i];
            return m;
        }
        std::uint64_t rest = a;
        for (std::size_t i = 0; i < nn_; ++i) {
            m.entries[i] = static_cast<std::uint32_t>(rest % field_.q());
            rest /= field_.q();
        }
        return m;
    }

    ElementId encode(const MatrixRep& m) const {
        std::uint64_t id = 0;
        for (std::size_t i = 0; i < nn_; ++i)
            id += std::uint64_t(m.entries[i]) * qpow_[i];
        return static_cast<ElementId>(id);
    }

    ElementId add(ElementId a, ElementId b) const override {
        if (!cache_.empty()) {
            const std::uint8_t* ea = &cache_[std::size_t(a) * nn_];
            const std::uint8_t* eb = &cache_[std::size_t(b) * nn_];
            std::uint64_t id = 0;
            for (std::size_t i = 0; i < nn_; ++i)
                id += std::uint64_t(field_.add(ea[i], eb[i])) * qpow_[i];
            return static_cast<ElementId>(id);
        }
        return encode(mat_add(field_, decode(a), decode(b)));
    }

    ElementId neg(ElementId a) const override {
        return encode(mat_neg(field_, decode(a)));
    }

    ElementId mul(ElementId a, ElementId b) const override {
        if (!cache_.empty()) {
            const std::uint8_t* ea = &cache_[std::size_t(a) * nn_];
            const std::uint8_t* eb = &cache_[std::size_t(b) * nn_];
            std::uint64_t id = 0;
            for (std::uint32_t i = 0; i < n_; ++i) {
                for (std::uint32_t j = 0; j < n_; ++j) {
                    std::uint32_t acc = 0;
                    for (std::uint32_t k2 = 0; k2 < n_; ++k2)
                        acc = field_.add(
                            acc, field_.mul(ea[std::size_t(i) * n_ + k2],
                                            eb[std::size_t(k2) * n_ + j]));
                    id += std::uint64_t(acc) * qpow_[std::size_t(i) * n_ + j];
                }
            }
            return static_cast<ElementId>(id);
        }
        return encode(mat_mul(field_, decode(a), decode(b)));
    }

    ElementId one() const override {
        return encode(identity_matrix(field_, n_));
    }

    std::string render(ElementId a) const override {
        return render_matrix(field_, decode(a));
    }

    std::vector<ElementId> compute_units() const override {
        std::vector<ElementId> out;
        for (std::uint64_t id = 0; id < count_; ++id)
            if (rank(field_, decode(static_cast<ElementId>(id))) == n_)
                out.push_back(static_cast<ElementId>(id));
        return out;
    }

    std::optional<ElementId> inverse(ElementId a) const override {
        auto inv = ccgraph::inverse(field_, decode(a));
        if (!inv) return std::nullopt;
        return encode(*inv);
    }

    // A nonzero singular matrix annihilates a nonzero matrix on either side,
    // so the zero divisors are exactly the singular matrices.
    bool left_zero_divisor(ElementId a) const override {
        return rank(field_, decode(a)) < n_;
    }
    bool right_zero_divisor(ElementId a) const override {
        return rank(field_, decode(a)) < n_;
    }

    const FiniteField* field() const override { return &field_; }
    std::uint32_t mat_size() const override { return n_; }

private:
    FiniteField field_;
    std::uint32_t n_;
    std::size_t nn_;
    std::uint64_t count_;
    std::vector<std::uint64_t> qpow_;
    std::vector<std::uint8_t> cache_;
};

class ProductKernel final : public RingKernel {
public:
    ProductKernel(RingPtr left, RingPtr right)
        : left_(std::move(left)), right_(std::move(right)),
          sl_(left_->size()) {}

    ElementId add(ElementId a, ElementId b) const override {
        ElementId x = left_->add_raw(static_cast<ElementId>(a % sl_),
                                     static_cast<ElementId>(b % sl_));
        ElementId y = right_->add_raw(static_cast<ElementId>(a / sl_),
                                      static_cast<ElementId>(b / sl_));
        return static_cast<ElementId>(x + sl_ * y);
    }

    ElementId neg(ElementId a) const override {
        ElementId x = left_->neg(static_cast<ElementId>(a % sl_));
        ElementId y = right_->neg(static_cast<ElementId>(a / sl_));
        return static_cast<ElementId>(x + sl_ * y);
    }

    ElementId mul(ElementId a, ElementId b) const override {
        ElementId x = left_->mul_raw(static_cast<ElementId>(a % sl_),
                                     static_cast<ElementId>(b % sl_));
        ElementId y = right_->mul_raw(static_cast<ElementId>(a / sl_),
                                      static_cast<ElementId>(b / sl_));
        return static_cast<ElementId>(x + sl_ * y);
    }

    ElementId one() const override {
        return static_cast<ElementId>(left_->one() + sl_ * right_->one());
    }

    std::string render(ElementId a) const override {
        return "(" + left_->render_element(static_cast<ElementId>(a % sl_)) +
               ", " + right_->render_element(static_cast<ElementId>(a / sl_)) +
               ")";
    }

    std::vector<ElementId> compute_units() const override {
        std::vector<ElementId> out;
        const auto& ul = left_->units();
        const auto& ur = right_->units();
        out.reserve(ul.size() * ur.size());
        for (ElementId y : ur)
            for (ElementId x : ul)
                out.push_back(static_cast<ElementId>(x + sl_ * y));
        return out;
    }

    std::optional<ElementId> inverse(ElementId a) const override {
        auto x = left_->try_inverse(static_cast<ElementId>(a % sl_));
        if (!x) return std::nullopt;
        auto y = right_->try_inverse(static_cast<ElementId>(a / sl_));
        if (!y) return std::nullopt;
        return static_cast<ElementId>(*x + sl_ * *y);
    }

    bool left_zero_divisor(ElementId a) const override {
        if (a == 0) return true;
        return left_->is_left_zero_divisor(static_cast<ElementId>(a % sl_)) ||
               right_->is_left_zero_divisor(static_cast<ElementId>(a / sl_));
    }
    bool right_zero_divisor(ElementId a) const override {
        if (a == 0) return true;
        return left_->is_right_zero_divisor(static_cast<ElementId>(a % sl_)) ||
               right_->is_right_zero_divisor(static_cast<ElementId>(a / sl_));
    }

    std::pair<RingPtr, RingPtr> children() const override {
        return {left_, right_};
    }

private:
    RingPtr left_;
    RingPtr right_;
    std::uint64_t sl_;
};

} // namespace detail

// ---------------------------------------------------------------------------
// RingHandle

RingHandle::~RingHandle() = default;

void RingHandle::check_id(ElementId a) const {
    if (a >= size_)
        throw std::out_of_range("element id " + std::to_string(a) +
                                " out of range for " + desc_.render());
}

ElementId RingHandle::kernel_mul(ElementId a, ElementId b) const {
    return kernel_->mul(a, b);
}

ElementId RingHandle::add(ElementId a, ElementId b) const {
    check_id(a);
    check_id(b);
    return kernel_->add(a, b);
}

ElementId RingHandle::add_raw(ElementId a, ElementId b) const {
    return kernel_->add(a, b);
}

ElementId RingHandle::sub(ElementId a, ElementId b) const {
    check_id(a);
    check_id(b);
    return kernel_->add(a, kernel_->neg(b));
}

ElementId RingHandle::neg(ElementId a) const {
    check_id(a);
    return kernel_->neg(a);
}

ElementId RingHandle::mul(ElementId a, ElementId b) const {
    check_id(a);
    check_id(b);
    return mul_raw(a, b);
}

ElementId RingHandle::pow(ElementId a, std::uint64_t e) const {
    check_id(a);
    ElementId out = one_;
    ElementId base = a;
    while (e > 0) {
        if (e & 1) out = mul_raw(out, base);
        base = mul_raw(base, base);
        e >>= 1;
    }
    return out;
}

std::string RingHandle::render_element(ElementId a) const {
    check_id(a);
    return kernel_->render(a);
}

const std::vector<ElementId>& RingHandle::units() const {
    std::call_once(units_once_, [this] { units_ = kernel_->compute_units(); });
    return units_;
}

std::optional<ElementId> RingHandle::try_inverse(ElementId a) const {
    check_id(a);
    return kernel_->inverse(a);
}

bool RingHandle::is_unit(ElementId a) const {
    check_id(a);
    return kernel_->inverse(a).has_value();
}

bool RingHandle::is_left_zero_divisor(ElementId a) const {
    check_id(a);
    return kernel_->left_zero_divisor(a);
}

bool RingHandle::is_right_zero_divisor(ElementId a) const {
    check_id(a);
    return kernel_->right_zero_divisor(a);
}

bool RingHandle::is_nilpotent(ElementId a) const {
    check_id(a);
    // a is nilpotent iff a^(2^m) = 0 for the first 2^m >= |R|, because the
    // nilpotency index never exceeds |R|.
    ElementId x = a;
    std::uint64_t covered = 1;
    for (;;) {
        if (x == 0) return true;
        if (covered >= size_) return false;
        x = mul_raw(x, x);
        covered *= 2;
    }
}

bool RingHandle::is_matrix_ring() const {
    return desc_.kind() == RingDescriptor::Kind::Matrix;
}

const FiniteField* RingHandle::base_field() const {
    return kernel_->field();
}

std::uint32_t RingHandle::matrix_size() const {
    if (!is_matrix_ring()) throw std::invalid_argument("not a matrix ring");
    return kernel_->mat_size();
}

ElementId RingHandle::encode_matrix(const MatrixRep& m) const {
    if (!is_matrix_ring()) throw std::invalid_argument("not a matrix ring");
    std::uint32_t n = kernel_->mat_size();
    if (m.size != n) throw std::invalid_argument("matrix shape mismatch");
    const FiniteField* f = kernel_->field();
    for (std::uint32_t e : m.entries)
        if (e >= f->q()) throw std::invalid_argument("matrix entry out of range");
    auto* mk = static_cast<const detail::MatrixKernel*>(kernel_.get());
    return mk->encode(m);
}

MatrixRep RingHandle::decode_matrix(ElementId a) const {
    if (!is_matrix_ring()) throw std::invalid_argument("not a matrix ring");
    check_id(a);
    auto* mk = static_cast<const detail::MatrixKernel*>(kernel_.get());
    return mk->decode(a);
}

bool RingHandle::is_product() const {
    return desc_.kind() == RingDescriptor::Kind::Product;
}

std::pair<RingPtr, RingPtr> RingHandle::factors() const {
    if (!is_product()) throw std::invalid_argument("not a product ring");
    return kernel_->children();
}

std::pair<ElementId, ElementId> RingHandle::split(ElementId a) const {
    if (!is_product()) throw std::invalid_argument("not a product ring");
    check_id(a);
    std::uint64_t sl = kernel_->children().first->size();
    return {static_cast<ElementId>(a % sl), static_cast<ElementId>(a / sl)};
}

ElementId RingHandle::combine(ElementId left, ElementId right) const {
    if (!is_product()) throw std::invalid_argument("not a product ring");
    auto kids = kernel_->children();
    if (left >= kids.first->size() || right >= kids.second->size())
        throw std::out_of_range("component id out of range");
    return static_cast<ElementId>(left + kids.first->size() * right);
}

// ---------------------------------------------------------------------------
// Construction

RingPtr build_ring(const RingDescriptor& desc, const BuildOptions& opts) {
    std::uint64_t count = desc.element_count();
    if (count > kIdSpace)
        throw SizeGuardError("ring with " + std::to_string(count) +
                             " elements does not fit the id space");
    if (count > kDefaultGuard && !opts.allow_large)
        throw SizeGuardError(
            "ring with " + std::to_string(count) +
            " elements is above the default guard of 1048576; enable the "
            "large-ring override to proceed");

    auto handle = std::shared_ptr<RingHandle>(new RingHandle());
    handle->desc_ = desc;
    handle->size_ = count;
    switch (desc.kind()) {
    case RingDescriptor::Kind::Modular:
        handle->kernel_ = std::make_unique<detail::ModularKernel>(desc.modulus());
        break;
    case RingDescriptor::Kind::Galois:
        handle->kernel_ = std::make_unique<detail::GaloisKernel>(desc.field_p(),
                                                                 desc.field_k());
        break;
    case RingDescriptor::Kind::Matrix:
        handle->kernel_ = std::make_unique<detail::MatrixKernel>(
            desc.base().field_p(), desc.base().field_k(), desc.matrix_size(),
            count);
        break;
    case RingDescriptor::Kind::Product: {
        RingPtr left = build_ring(desc.left(), opts);
        RingPtr right = build_ring(desc.right(), opts);
        handle->kernel_ = std::make_unique<detail::ProductKernel>(
            std::move(left), std::move(right));
        break;
    }
    }
    handle->one_ = handle->kernel_->one();

    if (count <= kMulTableLimit && !opts.no_mul_table) {
        std::size_t n = static_cast<std::size_t>(count);
        handle->mul_table_storage_.resize(n * n);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                handle->mul_table_storage_[a * n + b] = handle->kernel_->mul(
                    static_cast<ElementId>(a), static_cast<ElementId>(b));
        handle->mul_table_ = handle->mul_table_storage_.data();
    }
    return handle;
}

RingPtr build_ring(std::string_view spec, const BuildOptions& opts) {
    return build_ring(parse_ring_spec(spec), opts);
}

} // namespace ccgraph
