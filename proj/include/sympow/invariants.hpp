#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "sympow/partition.hpp"

namespace sympow {

/// Exact rational arithmetic; always reduced with positive denominator.
/// Half-integers like 1/2 are never represented in floating point.
using Rational = boost::rational<long long>;

/// "p/q", or just "p" for integers.
std::string fraction_string(const Rational& r);

/// A conjugacy class of the symmetric group on m letters, recorded as the
/// partition of m by cycle lengths.
class CycleType {
public:
    explicit CycleType(Partition cycles);

    const Partition& cycles() const noexcept { return cycles_; }
    /// m, the number of permuted letters.
    int degree() const noexcept { return cycles_.total(); }
    /// Number of cycles, fixed points included.
    int cycle_count() const noexcept { return cycles_.part_count(); }
    bool is_identity() const noexcept { return cycles_.is_all_ones(); }

    friend bool operator==(const CycleType&, const CycleType&) = default;

private:
    Partition cycles_;
};

/// Reid-Tai age of a permutation acting diagonally on m copies of affine
/// n-space: n * (m - cycle count) / 2, exact. Zero iff identity.
Rational age(int n, const CycleType& sigma);

/// Discrepancy of the m-th symmetric power of a smooth n-fold:
/// min{min nonidentity age - 1, 1}. Computed both by scanning every
/// nonidentity cycle type and by the closed form min{n/2 - 1, 1}; the two
/// routes must agree or this throws std::logic_error. Requires m, n >= 2.
Rational discrepancy(int m, int n);

struct SingularityClass {
    bool canonical = false;
    bool terminal = false;
    friend bool operator==(const SingularityClass&, const SingularityClass&) = default;
};

/// canonical iff discrepancy >= 0 (always here); terminal iff it is > 0,
/// which happens exactly for n >= 3.
SingularityClass singularity_class(int m, int n);

/// Whether the canonical class of the symmetric power is Cartier: true iff
/// n is even.
bool is_gorenstein(int n);

/// Closed vocabulary of symbolic group summands.
enum class GroupSummand { PicY, NSAlbY, Z2 };

std::string_view summand_name(GroupSummand s);

/// A formal direct sum of named summands, order fixed.
struct FormalGroup {
    std::vector<GroupSummand> summands;
    std::string to_string() const;  // "Pic(Y) + NS(Alb(Y)) + Z/2Z"
    friend bool operator==(const FormalGroup&, const FormalGroup&) = default;
};

/// The canonical class written in the Picard (+) Neron-Severi (+) torsion
/// decomposition of the class group.
struct DivisorClass {
    std::string pic_component;  // "K_Y" or "0"
    std::string ns_component;   // "0"
    int torsion_bit = 0;        // 0 or 1
    friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
};

struct ClassGroupReport {
    FormalGroup pic;
    FormalGroup cl;
    DivisorClass canonical_class;
    std::string hypotheses;
};

/// Symbolic Picard group, class group, and canonical class of the symmetric
/// power of a smooth projective n-fold. The torsion bit is n mod 2 and is 0
/// exactly in the Gorenstein case.
ClassGroupReport class_group_report(int n);

/// Aggregate of the numerical invariants for one (m, n), as rendered by the
/// CLI.
struct InvariantReport {
    int m = 0;
    int n = 0;
    Rational discrep;
    SingularityClass sclass;
    bool gorenstein = false;
    ClassGroupReport groups;
};

InvariantReport invariant_report(int m, int n);

}  // namespace sympow
