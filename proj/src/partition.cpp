#include "sympow/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace sympow {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty())
        throw std::invalid_argument("Partition: parts must be non-empty");
    for (int a : parts_) {
        if (a < 1)
            throw std::invalid_argument("Partition: parts must be positive, got " +
                                        std::to_string(a));
    }
    std::sort(parts_.begin(), parts_.end(), std::greater<int>());
    total_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::single_block(int m) {
    return Partition(std::vector<int>{m});
}

Partition Partition::all_ones(int m) {
    if (m < 1)
        throw std::invalid_argument("Partition::all_ones: m must be >= 1");
    return Partition(std::vector<int>(static_cast<std::size_t>(m), 1));
}

int Partition::part(std::size_t i) const {
    if (i >= parts_.size())
        throw std::out_of_range("Partition::part: index " + std::to_string(i) +
                                " out of range for " + std::to_string(parts_.size()) +
                                " parts");
    return parts_[i];
}

bool Partition::is_all_ones() const noexcept {
    return parts_.front() == 1;
}

std::string Partition::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += '+';
        s += std::to_string(parts_[i]);
    }
    return s;
}

bool enumeration_less(const Partition& a, const Partition& b) {
    if (a.total() != b.total()) return a.total() < b.total();
    // Reverse-lexicographic: larger leading parts first.
    return std::lexicographical_compare(b.parts().begin(), b.parts().end(),
                                        a.parts().begin(), a.parts().end());
}

MultiplicityForm::MultiplicityForm(std::vector<MultiplicityClass> classes)
    : classes_(std::move(classes)) {
    if (classes_.empty())
        throw std::invalid_argument("MultiplicityForm: classes must be non-empty");
    int prev = 0;
    for (std::size_t i = 0; i < classes_.size(); ++i) {
        const auto& c = classes_[i];
        if (c.value < 1 || c.multiplicity < 1)
            throw std::invalid_argument("MultiplicityForm: values and multiplicities must be positive");
        if (i > 0 && c.value >= prev)
            throw std::invalid_argument("MultiplicityForm: values must be strictly decreasing");
        prev = c.value;
        total_ += c.value * c.multiplicity;
    }
}

Partition MultiplicityForm::expand() const {
    std::vector<int> parts;
    for (const auto& c : classes_)
        parts.insert(parts.end(), static_cast<std::size_t>(c.multiplicity), c.value);
    return Partition(std::move(parts));
}

std::vector<Partition> enumerate_partitions(int m) {
    if (m < 1)
        throw std::invalid_argument("enumerate_partitions: m must be >= 1, got " +
                                    std::to_string(m));
    std::vector<Partition> out;
    std::vector<int> cur;
    // Descend largest-part-first; this emits reverse-lexicographic order.
    auto rec = [&](auto&& self, int rem, int cap) -> void {
        if (rem == 0) {
            out.push_back(Partition(cur));
            return;
        }
        for (int a = std::min(rem, cap); a >= 1; --a) {
            cur.push_back(a);
            self(self, rem - a, a);
            cur.pop_back();
        }
    };
    rec(rec, m, m);
    return out;
}

MultiplicityForm to_multiplicity_form(const Partition& p) {
    std::vector<MultiplicityClass> classes;
    for (int a : p.parts()) {
        if (!classes.empty() && classes.back().value == a)
            ++classes.back().multiplicity;
        else
            classes.push_back({a, 1});
    }
    return MultiplicityForm(std::move(classes));
}

BigInt partition_count(int m) {
    if (m < 1)
        throw std::invalid_argument("partition_count: m must be >= 1, got " +
                                    std::to_string(m));
    std::vector<BigInt> p(static_cast<std::size_t>(m) + 1);
    p[0] = 1;
    for (int i = 1; i <= m; ++i) {
        BigInt acc = 0;
        for (int k = 1;; ++k) {
            const long long g1 = static_cast<long long>(k) * (3 * k - 1) / 2;
            const long long g2 = static_cast<long long>(k) * (3 * k + 1) / 2;
            if (g1 > i && g2 > i) break;
            BigInt term = 0;
            if (g1 <= i) term += p[static_cast<std::size_t>(i - g1)];
            if (g2 <= i) term += p[static_cast<std::size_t>(i - g2)];
            if (k % 2)
                acc += term;
            else
                acc -= term;
        }
        p[static_cast<std::size_t>(i)] = acc;
    }
    return p[static_cast<std::size_t>(m)];
}

}  // namespace sympow
