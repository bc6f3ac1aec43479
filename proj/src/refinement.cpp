#include "sympow/refinement.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace sympow {

namespace {

void check_totals(const Partition& fine, const Partition& coarse, const char* op) {
    if (fine.total() != coarse.total())
        throw std::invalid_argument(std::string(op) + ": totals differ (" +
                                    std::to_string(fine.total()) + " vs " +
                                    std::to_string(coarse.total()) + ")");
}

// Backtracking feasibility over the multiset of residual block capacities.
// parts is fixed and non-increasing, so the sum of the residuals determines
// how many parts have been placed; the residual vector alone is a valid memo
// key. Equal residual capacities are interchangeable, which is the symmetry
// the multiset representation breaks.
bool refines_rec(const std::vector<int>& parts, std::size_t pos,
                 std::vector<int>& caps,
                 std::map<std::vector<int>, bool>& memo) {
    if (pos == parts.size()) return true;  // residuals are all zero here

    const int smallest_left = parts.back();
    int positive = 0;
    for (int c : caps) {
        if (c > 0) {
            ++positive;
            if (c < smallest_left) return false;  // capacity can never be filled
        }
    }
    if (positive > static_cast<int>(parts.size() - pos)) return false;

    auto it = memo.find(caps);
    if (it != memo.end()) return it->second;

    const int p = parts[pos];
    bool ok = false;
    for (std::size_t i = 0; i < caps.size() && !ok; ++i) {
        if (caps[i] < p) continue;              // caps sorted non-increasing
        if (i > 0 && caps[i] == caps[i - 1]) continue;  // one block per capacity value
        std::vector<int> next = caps;
        next[i] -= p;
        // restore non-increasing order by sliding the reduced entry down
        for (std::size_t j = i; j + 1 < next.size() && next[j] < next[j + 1]; ++j)
            std::swap(next[j], next[j + 1]);
        ok = refines_rec(parts, pos + 1, next, memo);
    }
    memo.emplace(caps, ok);
    return ok;
}

}  // namespace

RefinementClass::RefinementClass(Partition fine, Partition coarse,
                                 std::vector<Partition> blocks)
    : fine_(std::move(fine)), coarse_(std::move(coarse)), blocks_(std::move(blocks)) {
    if (blocks_.size() != static_cast<std::size_t>(coarse_.part_count()))
        throw std::invalid_argument("RefinementClass: need one block per coarse part");
    std::vector<int> merged;
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        if (blocks_[i].total() != coarse_.parts()[i])
            throw std::invalid_argument("RefinementClass: block " + std::to_string(i) +
                                        " sums to " + std::to_string(blocks_[i].total()) +
                                        ", expected " + std::to_string(coarse_.parts()[i]));
        merged.insert(merged.end(), blocks_[i].parts().begin(), blocks_[i].parts().end());
    }
    std::sort(merged.begin(), merged.end(), std::greater<int>());
    if (merged != fine_.parts())
        throw std::invalid_argument("RefinementClass: blocks do not partition the fine parts");
}

const Partition& RefinementClass::block(std::size_t i) const {
    if (i >= blocks_.size())
        throw std::out_of_range("RefinementClass::block: index " + std::to_string(i) +
                                " out of range for " + std::to_string(blocks_.size()) +
                                " blocks");
    return blocks_[i];
}

bool refines(const Partition& fine, const Partition& coarse) {
    check_totals(fine, coarse, "refines");
    if (fine.part_count() < coarse.part_count()) return false;  // blocks are non-empty
    if (fine.parts()[0] > coarse.parts()[0]) return false;      // largest part must fit
    std::vector<int> caps = coarse.parts();
    std::map<std::vector<int>, bool> memo;
    return refines_rec(fine.parts(), 0, caps, memo);
}

std::vector<RefinementClass> enumerate_refinements(const Partition& fine,
                                                   const Partition& coarse) {
    check_totals(fine, coarse, "enumerate_refinements");

    const std::vector<int>& parts = fine.parts();
    const std::size_t l = parts.size();
    const std::size_t k = static_cast<std::size_t>(coarse.part_count());

    std::vector<int> residual = coarse.parts();
    std::vector<std::vector<int>> blocks(k);
    std::vector<std::size_t> choice(l, 0);
    std::vector<std::vector<Partition>> found;

    // Assign parts (non-increasing) to indexed blocks. Within a run of equal
    // parts the block index is forced non-decreasing, so each per-index
    // block-multiset assignment is generated exactly once; that assignment is
    // precisely the equivalence class.
    auto rec = [&](auto&& self, std::size_t j) -> void {
        if (j == l) {
            std::vector<Partition> bs;
            bs.reserve(k);
            for (const auto& b : blocks) bs.push_back(Partition(b));
            found.push_back(std::move(bs));
            return;
        }
        std::size_t lo = 0;
        if (j > 0 && parts[j] == parts[j - 1]) lo = choice[j - 1];
        for (std::size_t i = lo; i < k; ++i) {
            if (residual[i] < parts[j]) continue;
            residual[i] -= parts[j];
            blocks[i].push_back(parts[j]);
            choice[j] = i;
            self(self, j + 1);
            blocks[i].pop_back();
            residual[i] += parts[j];
        }
    };
    rec(rec, 0);

    std::sort(found.begin(), found.end(),
              [](const std::vector<Partition>& a, const std::vector<Partition>& b) {
                  for (std::size_t i = 0; i < a.size(); ++i) {
                      if (a[i] == b[i]) continue;
                      return enumeration_less(a[i], b[i]);
                  }
                  return false;
              });

    std::vector<RefinementClass> out;
    out.reserve(found.size());
    for (auto& bs : found)
        out.push_back(RefinementClass(fine, coarse, std::move(bs)));
    return out;
}

}  // namespace sympow
