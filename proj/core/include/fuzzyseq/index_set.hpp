#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace fuzzyseq {

// A structured subset of {1, 2, 3, ...} with decidable membership and exact
// prefix counting |{k <= n : k in A}|. Counting is closed-form for the base
// variants (O(1) for multiples and perfect powers, O(log) for explicit lists)
// and inclusion-exclusion over base intersections for complements and unions.
// Immutable; cheap to copy.
class IndexSet {
public:
    static IndexSet all();
    static IndexSet empty();
    static IndexSet multiples(std::uint64_t m);                  // {m, 2m, ...}, m >= 1
    static IndexSet powers(unsigned q);                          // {1, 2^q, 3^q, ...}, q >= 2
    static IndexSet explicit_set(std::vector<std::uint64_t> members); // each >= 1
    static IndexSet complement(IndexSet inner);
    static IndexSet union_of(IndexSet a, IndexSet b);

    // k >= 1, else std::domain_error
    bool contains(std::uint64_t k) const;

    // |{k <= n : k in A}|, exact
    std::uint64_t prefix_count(std::uint64_t n) const;

    // Smallest member >= k, if any. Complements probe upward by membership
    // and give up (std::runtime_error) after an iteration cap; every other
    // variant answers in closed form.
    std::optional<std::uint64_t> next_member(std::uint64_t k) const;

    std::string describe() const;

    struct Node;
    const Node& node() const { return *node_; }

private:
    explicit IndexSet(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

// "all" | "empty" | "multiples:m=<int>" | "powers:q=<int>" |
// "explicit:1,2,3" | "complement:<spec>"
IndexSet parse_index_set(const std::string& spec);

} // namespace fuzzyseq
