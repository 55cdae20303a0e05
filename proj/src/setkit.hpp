#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "bigint.hpp"

namespace repfn {

enum class Provenance { Explicit, ComplementOf, Blocks, ThueMorse, RudinShapiro };

// Tag strings used in the JSON set file format.
const char* provenance_tag(Provenance p);
std::optional<Provenance> provenance_from_tag(std::string_view tag);

// Union-of-blocks construction: for each base N_j the block
// {N_j, 2*N_j, ..., (k-1)*N_j^{k-1}}. All block arithmetic is exact.
struct BlockSchedule {
    int k = 3;                              // tuple length, k >= 3
    std::vector<std::uint64_t> entries;     // N_1 < N_2 < ...
    bool require_even = false;              // reject odd bases (parity matters downstream)
};

// flags[j] = entries[j+1] > 100 * k^4 * entries[j]^(k-1); size entries-1.
std::vector<bool> schedule_growth_flags(const BlockSchedule& s);

// Largest element of block j: (k-1) * N_j^(k-1).
BigInt block_last_element(const BlockSchedule& s, std::size_t j);

// u_j = (k-1)*N_j^(k-1) + 100*(k-2)*(k-1)^3*N_j^(k-2), one per schedule entry.
std::vector<BigInt> block_u_points(const BlockSchedule& s);

// Candidate decrease point of R_{N\A,k}: u_j for odd k, u_j + 1 for even k.
std::vector<BigInt> block_candidate_points(const BlockSchedule& s);

// A finite set of nonnegative integers, materialized up to a declared
// horizon. Truncation is exact for everything downstream: any R value at
// n <= k*H depends only on A through A itself, and series values at
// n <= H depend only on A intersected with [0, H].
class SetSpec {
public:
    SetSpec() = default; // empty set, horizon 0

    // Sorts and deduplicates; every value must be <= horizon.
    static SetSpec explicit_set(std::vector<std::uint64_t> values, std::uint64_t horizon);

    // {0..H} \ a at the same horizon; an involution on contents.
    static SetSpec complement_prefix(const SetSpec& a);

    // Union of schedule blocks clipped to the horizon. With no horizon the
    // set covers every block in full (largest block element must fit in 64
    // bits in that case).
    static SetSpec block_set(const BlockSchedule& s, std::optional<std::uint64_t> horizon);

    // {n <= H : binary digit sum of n is even}.
    static SetSpec thue_morse(std::uint64_t horizon);

    // {n <= H : number of (possibly overlapping) "11" factors in binary n is even}.
    static SetSpec rudin_shapiro(std::uint64_t horizon);

    const std::vector<std::uint64_t>& elements() const { return elements_; }
    std::uint64_t horizon() const { return horizon_; }
    Provenance provenance() const { return provenance_; }
    const std::optional<BlockSchedule>& schedule() const { return schedule_; }
    std::size_t size() const { return elements_.size(); }
    bool empty() const { return elements_.empty(); }
    std::uint64_t max_element() const; // requires non-empty

    // Membership beyond the horizon is an error, never silently false.
    bool contains(std::uint64_t n) const;

    // A(n) = |A intersect [0, n]|; n must be within the horizon.
    std::uint64_t counting(std::uint64_t n) const;

    // Same count without the horizon guard, for pointwise queries where the
    // set is finite and fully materialized (n may exceed the horizon).
    std::uint64_t count_leq(std::uint64_t n) const;

    // Restriction to a smaller horizon (drops larger elements).
    SetSpec restricted(std::uint64_t to) const;

    // Equality is on contents (elements + horizon); provenance is metadata.
    friend bool operator==(const SetSpec& a, const SetSpec& b) {
        return a.horizon_ == b.horizon_ && a.elements_ == b.elements_;
    }

private:
    std::vector<std::uint64_t> elements_; // strictly increasing, all <= horizon_
    std::uint64_t horizon_ = 0;
    Provenance provenance_ = Provenance::Explicit;
    std::optional<BlockSchedule> schedule_; // populated for Blocks provenance
};

} // namespace repfn
