#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ccgraph/field.hpp"
#include "ccgraph/matrix.hpp"

namespace ccgraph {

/// Canonical integer name of a ring element; the zero element is always
/// id 0.
using ElementId = std::uint32_t;

/// Structural description of a supported finite ring: Z(n), GF(p^k),
/// M(n, field), or a product. Products are kept left-associated, so the
/// right factor of a product node is never itself a product.
class RingDescriptor {
public:
    enum class Kind { Modular, Galois, Matrix, Product };

    /// Placeholder state (zero-element modular ring) so descriptor-holding
    /// types stay default-constructible; the factories and the parser never
    /// produce it.
    RingDescriptor() = default;

    static RingDescriptor modular(std::uint64_t n);
    static RingDescriptor galois(std::uint64_t p, std::uint32_t k);
    static RingDescriptor matrix(std::uint32_t size, RingDescriptor base);
    static RingDescriptor product(RingDescriptor left, RingDescriptor right);

    Kind kind() const { return kind_; }
    std::uint64_t modulus() const;                  // Modular
    std::uint64_t field_p() const;                  // Galois
    std::uint32_t field_k() const;                  // Galois
    std::uint32_t matrix_size() const;              // Matrix
    const RingDescriptor& base() const;             // Matrix
    const RingDescriptor& left() const;             // Product
    const RingDescriptor& right() const;            // Product

    /// Number of elements; throws SizeGuardError when it does not fit the
    /// id space.
    std::uint64_t element_count() const;

    /// Canonical spec string: parse(render()) reproduces this descriptor
    /// and render() contains no whitespace.
    std::string render() const;

    bool operator==(const RingDescriptor& other) const;

private:
    Kind kind_ = Kind::Modular;
    std::uint64_t a_ = 0; // modulus / field p / matrix size
    std::uint32_t b_ = 0; // field k
    std::shared_ptr<const RingDescriptor> first_;  // matrix base / product left
    std::shared_ptr<const RingDescriptor> second_; // product right
};

/// Parse a ring spec: Z(n), GF(p), GF(p^k), M(n, field), products joined
/// with 'x' (left-associative). Whitespace is ignored. Throws SpecError
/// with a byte position on any syntax or semantic problem.
RingDescriptor parse_ring_spec(std::string_view text);

struct BuildOptions {
    /// Lift the default element-count guard of 2^20.
    bool allow_large = false;
    /// Skip the multiplication-table precompute (testing knob; results must
    /// not change).
    bool no_mul_table = false;
};

class RingHandle;
using RingPtr = std::shared_ptr<const RingHandle>;

RingPtr build_ring(const RingDescriptor& desc, const BuildOptions& opts = {});
RingPtr build_ring(std::string_view spec, const BuildOptions& opts = {});

namespace detail {
class RingKernel;
}

/// A fully constructed ring: element ids are 0..size()-1 with 0 the zero
/// element. Immutable after construction; all operations are safe to call
/// concurrently. Small rings carry a full multiplication table; the checked
/// entry points validate ids and the *_raw variants skip validation for hot
/// loops.
class RingHandle {
public:
    ~RingHandle();

    const RingDescriptor& descriptor() const { return desc_; }
    std::uint64_t size() const { return size_; }
    ElementId zero() const { return 0; }
    ElementId one() const { return one_; }

    ElementId add(ElementId a, ElementId b) const;
    ElementId sub(ElementId a, ElementId b) const;
    ElementId neg(ElementId a) const;
    ElementId mul(ElementId a, ElementId b) const;
    ElementId pow(ElementId a, std::uint64_t e) const;

    ElementId mul_raw(ElementId a, ElementId b) const {
        return mul_table_ ? mul_table_[std::size_t(a) * size_ + b]
                          : kernel_mul(a, b);
    }
    ElementId add_raw(ElementId a, ElementId b) const;

    /// True when every element has been precomputed into the mul table.
    bool has_mul_table() const { return mul_table_ != nullptr; }

    std::string render_element(ElementId a) const;

    /// Two-sided units, ascending.
    const std::vector<ElementId>& units() const;
    std::optional<ElementId> try_inverse(ElementId a) const;
    bool is_unit(ElementId a) const;

    /// Convention: in these rings (all nonzero) 0 counts as a zero divisor.
    bool is_left_zero_divisor(ElementId a) const;
    bool is_right_zero_divisor(ElementId a) const;

    bool is_nilpotent(ElementId a) const;

    bool is_matrix_ring() const;
    /// Base field of a matrix ring; also the field of a plain Galois ring.
    const FiniteField* base_field() const;
    std::uint32_t matrix_size() const;
    ElementId encode_matrix(const MatrixRep& m) const;
    MatrixRep decode_matrix(ElementId a) const;

    bool is_product() const;
    /// Factor handles of a product ring (left, right).
    std::pair<RingPtr, RingPtr> factors() const;
    std::pair<ElementId, ElementId> split(ElementId a) const;
    ElementId combine(ElementId left, ElementId right) const;

private:
    friend RingPtr build_ring(const RingDescriptor&, const BuildOptions&);
    RingHandle() = default;
    void check_id(ElementId a) const;
    ElementId kernel_mul(ElementId a, ElementId b) const;

    RingDescriptor desc_;
    std::uint64_t size_ = 0;
    ElementId one_ = 0;
    std::unique_ptr<const detail::RingKernel> kernel_;
    std::vector<ElementId> mul_table_storage_;
    const ElementId* mul_table_ = nullptr;
    mutable std::vector<ElementId> units_;
    mutable std::once_flag units_once_;
};

} // namespace ccgraph
