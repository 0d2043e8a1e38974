#pragma once

#include <cstdint>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace kst {

// States are bitmasks over the item list (bit i = item i is mastered).
using StateMask = std::uint64_t;

// Canonical state order: by popcount, then numeric mask value.
bool state_less(StateMask a, StateMask b);

std::string mask_to_string(StateMask mask, const std::vector<std::string>& items);
std::vector<std::string> mask_to_names(StateMask mask, const std::vector<std::string>& items);

// A knowledge structure: a family of states over up to 64 named items that
// contains the empty state and the full item set.
class KnowledgeStructure {
public:
    KnowledgeStructure() = default;

    // Validates (unique non-empty names, <= 64 items, masks in range, empty
    // and full state present), sorts states canonically, drops duplicates.
    static KnowledgeStructure create(std::vector<std::string> items,
                                     std::vector<StateMask> states);

    std::size_t item_count() const { return items_.size(); }
    const std::vector<std::string>& items() const { return items_; }
    std::optional<std::size_t> item_index(const std::string& name) const;
    StateMask full_mask() const;

    std::size_t state_count() const { return states_.size(); }
    const std::vector<StateMask>& states() const { return states_; }
    bool contains(StateMask mask) const;

    // All states containing the given item, in canonical order.
    std::vector<StateMask> states_containing(std::size_t item) const;

    // Symmetric-difference distance between two states.
    static std::size_t distance(StateMask a, StateMask b);

    // Closure/classification probes. The *_failure functions return the
    // first counterexample in canonical order, or empty if the property holds.
    struct ClosureWitness {
        StateMask a = 0;
        StateMask b = 0;
        StateMask combo = 0; // the missing union (or intersection)
    };
    std::optional<ClosureWitness> union_closure_failure() const;
    std::optional<ClosureWitness> intersection_closure_failure() const;
    bool is_union_closed() const { return !union_closure_failure(); }
    bool is_intersection_closed() const { return !intersection_closure_failure(); }
    bool is_quasi_ordinal() const { return is_union_closed() && is_intersection_closed(); }

    // Well-gradedness: for every pair of states the geodesic distance in the
    // one-item-step graph equals the symmetric-difference distance.
    std::optional<std::pair<StateMask, StateMask>> wellgradedness_failure() const;
    bool is_well_graded() const { return !wellgradedness_failure(); }

    // Accessibility: every non-empty state loses some item and stays a state.
    std::optional<StateMask> accessibility_failure() const;
    bool is_accessible() const { return !accessibility_failure(); }

    bool is_learning_space() const { return is_union_closed() && is_well_graded(); }

    // Separation axioms, checked by scanning for splitting states: T0 wants
    // some state containing exactly one of each item pair, T1 wants one for
    // each direction of the pair. The failure probes return an offending
    // item index pair.
    std::optional<std::pair<std::size_t, std::size_t>> discrimination_failure() const;
    std::optional<std::pair<std::size_t, std::size_t>> bidiscrimination_failure() const;
    bool is_T0() const { return !discrimination_failure(); }
    bool is_T1() const { return !bidiscrimination_failure(); }

    // Discriminative / bi-discriminative, computed independently of the
    // T0/T1 scans by comparing the per-item state sets: discriminative means
    // states_containing(q) differs for distinct items, bi-discriminative
    // means neither contains the other. Both agree with the separation
    // axioms; keeping the two routes separate lets tests confirm that.
    bool is_discriminative() const;
    bool is_bidiscriminative() const;

    // The trace on a subset of the items: restrict every state and reindex
    // bits to the surviving items (declaration order preserved).
    KnowledgeStructure trace(StateMask keep) const;

    // Inner fringe: items removable from the state; outer fringe: items
    // addable to it. The state must belong to the structure.
    struct Fringes {
        StateMask inner = 0;
        StateMask outer = 0;
    };
    Fringes fringes(StateMask state) const;

    friend bool operator==(const KnowledgeStructure& a, const KnowledgeStructure& b) {
        return a.items_ == b.items_ && a.states_ == b.states_;
    }

private:
    std::vector<std::string> items_;
    std::vector<StateMask> states_; // sorted by state_less, unique
};

// Quotient by "same containing states": items are merged into classes whose
// members lie in exactly the same states; class labels join member names
// with '+'. The quotient structure is always discriminative.
struct QuotientResult {
    KnowledgeStructure quotient;
    std::vector<std::vector<std::string>> classes; // member names per class
    std::vector<std::size_t> item_class;           // original item -> class index
};
QuotientResult quotient(const KnowledgeStructure& ks);

} // namespace kst
