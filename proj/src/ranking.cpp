#include "kmap/ranking.hpp"

#include <algorithm>

#include "kmap/errors.hpp"

namespace kmap {

namespace {

// Counts inversions with a merge sort; O(n log n).
std::size_t count_inversions(std::vector<std::size_t>& v, std::vector<std::size_t>& scratch,
                             std::size_t lo, std::size_t hi) {
    if (hi - lo < 2)
        return 0;
    const std::size_t mid = lo + (hi - lo) / 2;
    std::size_t inv = count_inversions(v, scratch, lo, mid) + count_inversions(v, scratch, mid, hi);
    std::size_t i = lo, j = mid, out = lo;
    while (i < mid && j < hi) {
        if (v[j] < v[i]) {
            inv += mid - i;
            scratch[out++] = v[j++];
        } else {
            scratch[out++] = v[i++];
        }
    }
    while (i < mid)
        scratch[out++] = v[i++];
    while (j < hi)
        scratch[out++] = v[j++];
    std::copy(scratch.begin() + static_cast<long>(lo), scratch.begin() + static_cast<long>(hi),
              v.begin() + static_cast<long>(lo));
    return inv;
}

}  // namespace

double compare_rankings(std::span<const ConceptId> a, std::span<const ConceptId> b) {
    if (a.size() != b.size())
        throw RankingMismatch("rankings cover different numbers of concepts");
    const std::size_t n = a.size();

    std::size_t extent = 0;
    for (ConceptId id : a)
        extent = std::max(extent, id.value + 1);
    for (ConceptId id : b)
        extent = std::max(extent, id.value + 1);

    constexpr std::size_t absent = static_cast<std::size_t>(-1);
    std::vector<std::size_t> position_in_b(extent, absent);
    for (std::size_t i = 0; i < n; ++i) {
        if (position_in_b[b[i].value] != absent)
            throw RankingMismatch("concept " + std::to_string(b[i].external()) +
                                  " appears twice in a ranking");
        position_in_b[b[i].value] = i;
    }

    std::vector<std::size_t> sequence(n);
    std::vector<char> seen(extent, 0);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t p = position_in_b[a[i].value];
        if (p == absent || seen[a[i].value])
            throw RankingMismatch("rankings cover different concept sets");
        seen[a[i].value] = 1;
        sequence[i] = p;
    }
    if (n < 2)
        return 1.0;

    std::vector<std::size_t> scratch(n);
    const auto discordant = static_cast<double>(count_inversions(sequence, scratch, 0, n));
    const double pairs = static_cast<double>(n) * static_cast<double>(n - 1) / 2.0;
    return (pairs - 2.0 * discordant) / pairs;
}

std::vector<ConceptId> order_of(std::span<const RankEntry> ranked) {
    std::vector<ConceptId> ids;
    ids.reserve(ranked.size());
    for (const RankEntry& e : ranked)
        ids.push_back(e.id);
    return ids;
}

double compare_rankings(std::span<const RankEntry> a, std::span<const RankEntry> b) {
    const auto ia = order_of(a);
    const auto ib = order_of(b);
    return compare_rankings(std::span<const ConceptId>(ia), std::span<const ConceptId>(ib));
}

}  // namespace kmap
