#include "sympow/invariants.hpp"

#include <algorithm>
#include <stdexcept>

namespace sympow {

namespace {

void check_mn(int m, int n, const char* op) {
    if (m < 2 || n < 2)
        throw std::invalid_argument(std::string(op) + ": requires m >= 2 and n >= 2 (" +
                                    "smooth or out-of-scope case for m=" +
                                    std::to_string(m) + ", n=" + std::to_string(n) + ")");
}

}  // namespace

std::string fraction_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

CycleType::CycleType(Partition cycles) : cycles_(std::move(cycles)) {}

Rational age(int n, const CycleType& sigma) {
    if (n < 2)
        throw std::invalid_argument("age: ambient dimension n must be >= 2, got " +
                                    std::to_string(n));
    return Rational(static_cast<long long>(n) *
                        (sigma.degree() - sigma.cycle_count()),
                    2);
}

Rational discrepancy(int m, int n) {
    check_mn(m, n, "discrepancy");

    // Scan route: minimum age over all nonidentity cycle types.
    bool seen = false;
    Rational min_age;
    for (const auto& p : enumerate_partitions(m)) {
        CycleType sigma(p);
        if (sigma.is_identity()) continue;
        const Rational a = age(n, sigma);
        if (!seen || a < min_age) {
            min_age = a;
            seen = true;
        }
    }
    const Rational scan = std::min(min_age - 1, Rational(1));

    // Closed form: the transposition attains the minimum age n/2.
    const Rational closed = std::min(Rational(n, 2) - 1, Rational(1));

    if (scan != closed)
        throw std::logic_error("discrepancy: cycle-type scan (" + fraction_string(scan) +
                               ") disagrees with closed form (" + fraction_string(closed) +
                               ") for m=" + std::to_string(m) + ", n=" + std::to_string(n));
    return scan;
}

SingularityClass singularity_class(int m, int n) {
    const Rational d = discrepancy(m, n);
    return {d >= Rational(0), d > Rational(0)};
}

bool is_gorenstein(int n) {
    if (n < 2)
        throw std::invalid_argument("is_gorenstein: n must be >= 2, got " +
                                    std::to_string(n));
    return n % 2 == 0;
}

std::string_view summand_name(GroupSummand s) {
    switch (s) {
        case GroupSummand::PicY: return "Pic(Y)";
        case GroupSummand::NSAlbY: return "NS(Alb(Y))";
        case GroupSummand::Z2: return "Z/2Z";
    }
    throw std::logic_error("summand_name: unknown summand");
}

std::string FormalGroup::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < summands.size(); ++i) {
        if (i) s += " + ";
        s += summand_name(summands[i]);
    }
    return s;
}

ClassGroupReport class_group_report(int n) {
    if (n < 2)
        throw std::invalid_argument("class_group_report: n must be >= 2, got " +
                                    std::to_string(n));
    ClassGroupReport r;
    r.pic = FormalGroup{{GroupSummand::PicY, GroupSummand::NSAlbY}};
    r.cl = FormalGroup{{GroupSummand::PicY, GroupSummand::NSAlbY, GroupSummand::Z2}};
    r.canonical_class = DivisorClass{"K_Y", "0", n % 2};
    r.hypotheses = "Y smooth projective, dim Y = n ≥ 2";
    return r;
}

InvariantReport invariant_report(int m, int n) {
    check_mn(m, n, "invariant_report");
    InvariantReport rep;
    rep.m = m;
    rep.n = n;
    rep.discrep = discrepancy(m, n);
    rep.sclass = singularity_class(m, n);
    rep.gorenstein = is_gorenstein(n);
    rep.groups = class_group_report(n);
    return rep;
}

}  // namespace sympow
