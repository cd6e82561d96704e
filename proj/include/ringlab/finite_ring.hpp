#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ringlab {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Requested construction exceeds a size cap.
struct CapError : Error {
    using Error::Error;
};

// Malformed input or violated structural requirement (bad tables, not an
// ideal, map fails to be a homomorphism, ...).
struct ValidationError : Error {
    using Error::Error;
};

struct ParseError : Error {
    std::size_t position;
    ParseError(const std::string& msg, std::size_t pos)
        : Error(msg), position(pos) {}
};

class FiniteRing;
class FiniteGroup;
using RingPtr = std::shared_ptr<const FiniteRing>;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// A finite unital ring given by dense n x n addition and multiplication
/// tables over element indices 0..n-1. Values are immutable after
/// construction; every operation on them is a pure function, so rings can be
/// shared freely across threads.
///
/// create() performs cheap structural checks only (shapes, entry ranges,
/// identities, existence of negatives). Full axiom checking is O(n^3) and
/// lives in validate_axioms().
class FiniteRing {
public:
    static RingPtr create(int order,
                          std::vector<int32_t> add,
                          std::vector<int32_t> mul,
                          int zero,
                          int one,
                          std::vector<std::string> labels = {},
                          std::string provenance = {});

    int order() const { return n_; }
    bool trivial() const { return n_ == 1; }

    int add(int a, int b) const { return add_[static_cast<std::size_t>(a) * n_ + b]; }
    int mul(int a, int b) const { return mul_[static_cast<std::size_t>(a) * n_ + b]; }
    int neg(int a) const { return neg_[a]; }
    int sub(int a, int b) const { return add(a, neg_[b]); }
    int zero() const { return zero_; }
    int one() const { return one_; }

    /// a^k with pow(a, 0) = 1.
    int pow(int a, int k) const;

    /// Smallest k >= 1 with k*a = 0.
    int additive_order(int a) const;

    /// Additive order of 1 (the characteristic).
    int characteristic() const { return additive_order(one_); }

    bool commutative() const { return commutative_; }

    const std::string& label(int a) const { return labels_[a]; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& provenance() const { return provenance_; }

    std::span<const int32_t> add_table() const { return add_; }
    std::span<const int32_t> mul_table() const { return mul_; }

    /// Equality of the algebraic data (order, tables, zero, one); labels and
    /// provenance are ignored.
    bool same_tables(const FiniteRing& other) const;

private:
    FiniteRing() = default;

    int n_ = 0;
    int zero_ = 0;
    int one_ = 0;
    bool commutative_ = false;
    std::vector<int32_t> add_;
    std::vector<int32_t> mul_;
    std::vector<int32_t> neg_;
    std::vector<std::string> labels_;
    std::string provenance_;
};

/// A finite group as a dense Cayley table. Associativity, identity and
/// inverses are verified on construction (group orders here are tiny).
class FiniteGroup {
public:
    static GroupPtr create(int order,
                           std::vector<int32_t> cayley,
                           int identity,
                           std::vector<std::string> labels = {},
                           std::string name = {});

    int order() const { return n_; }
    int op(int a, int b) const { return cayley_[static_cast<std::size_t>(a) * n_ + b]; }
    int identity() const { return identity_; }
    int inverse(int a) const { return inv_[a]; }
    const std::string& label(int a) const { return labels_[a]; }
    const std::string& name() const { return name_; }

private:
    FiniteGroup() = default;

    int n_ = 0;
    int identity_ = 0;
    std::vector<int32_t> cayley_;
    std::vector<int32_t> inv_;
    std::vector<std::string> labels_;
    std::string name_;
};

/// A verified ring homomorphism given by its value on every element.
/// Construction checks preservation of both tables and of 0 and 1; when
/// require_bijective is set the image must also be a permutation.
class RingMap {
public:
    static RingMap create(RingPtr source,
                          RingPtr target,
                          std::vector<int32_t> image,
                          bool require_bijective = false);

    int apply(int a) const { return image_[a]; }
    bool bijective() const { return bijective_; }
    const RingPtr& source() const { return source_; }
    const RingPtr& target() const { return target_; }
    const std::vector<int32_t>& image() const { return image_; }

private:
    RingMap() = default;

    RingPtr source_;
    RingPtr target_;
    std::vector<int32_t> image_;
    bool bijective_ = false;
};

}  // namespace ringlab
