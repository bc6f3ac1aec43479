#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sympow/bigint.hpp"

namespace sympow {

/**
 * A partition of a positive integer m: a non-increasing tuple of positive
 * parts summing to m. The sorted form is a stored invariant; any input order
 * is normalized at construction. A partition carries its total explicitly so
 * that mixing partitions of different integers is a checkable error instead
 * of silent corruption.
 */
class Partition {
public:
    /// Normalizes (sorts non-increasing) and validates. Throws
    /// std::invalid_argument on empty input or non-positive parts.
    explicit Partition(std::vector<int> parts);

    /// The one-part partition (m).
    static Partition single_block(int m);
    /// The all-ones partition (1,...,1) with m parts.
    static Partition all_ones(int m);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int total() const noexcept { return total_; }
    /// Number of parts |pi|.
    int part_count() const noexcept { return static_cast<int>(parts_.size()); }
    /// Bounds-checked access to the i-th largest part.
    int part(std::size_t i) const;

    bool is_all_ones() const noexcept;
    bool is_single_block() const noexcept { return parts_.size() == 1; }

    /// Display form "2+1+1".
    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
    int total_ = 0;
};

/// Enumeration order: partitions of equal total sort reverse-lexicographically
/// (coarsest (m) first, (1,...,1) last); smaller totals first otherwise.
bool enumeration_less(const Partition& a, const Partition& b);

/// Run-length encoding of a partition: distinct part values in strictly
/// decreasing order, each with its multiplicity.
struct MultiplicityClass {
    int value = 0;
    int multiplicity = 0;
    friend bool operator==(const MultiplicityClass&, const MultiplicityClass&) = default;
};

class MultiplicityForm {
public:
    /// Validates strictly decreasing values and positive multiplicities.
    explicit MultiplicityForm(std::vector<MultiplicityClass> classes);

    const std::vector<MultiplicityClass>& classes() const noexcept { return classes_; }
    int total() const noexcept { return total_; }
    /// Expands back to the partition; inverse of to_multiplicity_form.
    Partition expand() const;

    friend bool operator==(const MultiplicityForm&, const MultiplicityForm&) = default;

private:
    std::vector<MultiplicityClass> classes_;
    int total_ = 0;
};

/// All partitions of m in enumeration order (reverse-lexicographic,
/// coarsest first). Throws std::invalid_argument for m < 1.
std::vector<Partition> enumerate_partitions(int m);

/// Run-length encoding of the parts.
MultiplicityForm to_multiplicity_form(const Partition& p);

/// p(m) by the Euler pentagonal-number recurrence. Deliberately independent
/// of enumerate_partitions so the two can cross-check each other.
BigInt partition_count(int m);

}  // namespace sympow
