#include "kst/structure.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <unordered_set>

#include "kst/error.hpp"

namespace kst {

bool state_less(StateMask a, StateMask b) {
    int pa = std::popcount(a);
    int pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    return a < b;
}

std::string mask_to_string(StateMask mask, const std::vector<std::string>& items) {
    std::string out = "{";
    bool first = true;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (!(mask >> i & 1)) continue;
        if (!first) out += ", ";
        first = false;
        out += items[i];
    }
    out += "}";
    return out;
}

std::vector<std::string> mask_to_names(StateMask mask, const std::vector<std::string>& items) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (mask >> i & 1) out.push_back(items[i]);
    }
    return out;
}

KnowledgeStructure KnowledgeStructure::create(std::vector<std::string> items,
                                              std::vector<StateMask> states) {
    KnowledgeStructure ks;
    if (items.empty()) throw InputError("item set must be non-empty");
    if (items.size() > 64) {
        throw InputError("at most 64 items are supported (states are 64-bit masks)");
    }
    std::unordered_set<std::string> seen;
    for (const std::string& q : items) {
        if (q.empty()) throw InputError("item name must be non-empty");
        if (!seen.insert(q).second) throw InputError("duplicate item name: " + q);
    }
    const StateMask full =
        items.size() == 64 ? ~StateMask{0} : (StateMask{1} << items.size()) - 1;
    for (StateMask s : states) {
        if ((s & ~full) != 0) {
            throw InputError("state references an item outside the item set");
        }
    }
    std::sort(states.begin(), states.end(), state_less);
    states.erase(std::unique(states.begin(), states.end()), states.end());
    if (states.empty() || states.front() != 0) {
        throw InputError("a knowledge structure must contain the empty state");
    }
    if (states.back() != full) {
        throw InputError("a knowledge structure must contain the full item set");
    }
    ks.items_ = std::move(items);
    ks.states_ = std::move(states);
    return ks;
}

std::optional<std::size_t> KnowledgeStructure::item_index(const std::string& name) const {
    for (std::size_t i = 0; i < items_.size(); ++i) {
        if (items_[i] == name) return i;
    }
    return std::nullopt;
}

StateMask KnowledgeStructure::full_mask() const {
    return items_.size() == 64 ? ~StateMask{0} : (StateMask{1} << items_.size()) - 1;
}

bool KnowledgeStructure::contains(StateMask mask) const {
    return std::binary_search(states_.begin(), states_.end(), mask, state_less);
}

std::vector<StateMask> KnowledgeStructure::states_containing(std::size_t item) const {
    detail::require(item < items_.size(), "states_containing: item index out of range");
    std::vector<StateMask> out;
    for (StateMask s : states_) {
        if (s >> item & 1) out.push_back(s);
    }
    return out;
}

std::size_t KnowledgeStructure::distance(StateMask a, StateMask b) {
    return static_cast<std::size_t>(std::popcount(a ^ b));
}

bool KnowledgeStructure::is_discriminative() const {
    for (std::size_t q = 0; q < items_.size(); ++q) {
        const auto kq = states_containing(q);
        for (std::size_t r = q + 1; r < items_.size(); ++r) {
            if (kq == states_containing(r)) return false;
        }
    }
    return true;
}

bool KnowledgeStructure::is_bidiscriminative() const {
    // Neither per-item state set may contain the other. Both sets are in
    // canonical order, so inclusion is a linear merge.
    auto includes_sorted = [](const std::vector<StateMask>& big,
                              const std::vector<StateMask>& small) {
        return std::includes(big.begin(), big.end(), small.begin(), small.end(),
                             state_less);
    };
    std::vector<std::vector<StateMask>> per_item;
    per_item.reserve(items_.size());
    for (std::size_t q = 0; q < items_.size(); ++q) {
        per_item.push_back(states_containing(q));
    }
    for (std::size_t q = 0; q < items_.size(); ++q) {
        for (std::size_t r = q + 1; r < items_.size(); ++r) {
            if (includes_sorted(per_item[q], per_item[r]) ||
                includes_sorted(per_item[r], per_item[q])) {
                return false;
            }
        }
    }
    return true;
}

std::optional<KnowledgeStructure::ClosureWitness>
KnowledgeStructure::union_closure_failure() const {
    for (std::size_t i = 0; i < states_.size(); ++i) {
        for (std::size_t j = i + 1; j < states_.size(); ++j) {
            StateMask u = states_[i] | states_[j];
            if (!contains(u)) return ClosureWitness{states_[i], states_[j], u};
        }
    }
    return std::nullopt;
}

std::optional<KnowledgeStructure::ClosureWitness>
KnowledgeStructure::intersection_closure_failure() const {
    for (std::size_t i = 0; i < states_.size(); ++i) {
        for (std::size_t j = i + 1; j < states_.size(); ++j) {
            StateMask m = states_[i] & states_[j];
            if (!contains(m)) return ClosureWitness{states_[i], states_[j], m};
        }
    }
    return std::nullopt;
}

std::optional<std::pair<StateMask, StateMask>>
KnowledgeStructure::wellgradedness_failure() const {
    const std::size_t n = states_.size();
    // Adjacency: states whose symmetric difference is a single item.
    std::vector<std::vector<std::size_t>> adj(n);
    std::vector<std::pair<StateMask, std::size_t>> pos;
    pos.reserve(n);
    for (std::size_t i = 0; i < n; ++i) pos.emplace_back(states_[i], i);
    auto find_pos = [&](StateMask m) -> std::optional<std::size_t> {
        auto it = std::lower_bound(pos.begin(), pos.end(), m,
                                   [](const auto& p, StateMask v) {
                                       return state_less(p.first, v);
                                   });
        if (it != pos.end() && it->first == m) return it->second;
        return std::nullopt;
    };
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t b = 0; b < items_.size(); ++b) {
            StateMask nb = states_[i] ^ (StateMask{1} << b);
            if (auto j = find_pos(nb); j && *j > i) {
                adj[i].push_back(*j);
                adj[*j].push_back(i);
            }
        }
    }
    std::vector<int> dist(n);
    for (std::size_t src = 0; src < n; ++src) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[src] = 0;
        std::deque<std::size_t> queue{src};
        while (!queue.empty()) {
            std::size_t v = queue.front();
            queue.pop_front();
            for (std::size_t w : adj[v]) {
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        for (std::size_t j = 0; j < n; ++j) {
            int hamming = std::popcount(states_[src] ^ states_[j]);
            if (dist[j] != hamming) return std::make_pair(states_[src], states_[j]);
        }
    }
    return std::nullopt;
}

std::optional<StateMask> KnowledgeStructure::accessibility_failure() const {
    for (StateMask s : states_) {
        if (s == 0) continue;
        bool ok = false;
        for (std::size_t b = 0; b < items_.size() && !ok; ++b) {
            if ((s >> b & 1) && contains(s & ~(StateMask{1} << b))) ok = true;
        }
        if (!ok) return s;
    }
    return std::nullopt;
}

std::optional<std::pair<std::size_t, std::size_t>>
KnowledgeStructure::discrimination_failure() const {
    for (std::size_t q = 0; q < items_.size(); ++q) {
        for (std::size_t r = q + 1; r < items_.size(); ++r) {
            bool same = true;
            for (StateMask s : states_) {
                if ((s >> q & 1) != (s >> r & 1)) {
                    same = false;
                    break;
                }
            }
            if (same) return std::make_pair(q, r);
        }
    }
    return std::nullopt;
}

std::optional<std::pair<std::size_t, std::size_t>>
KnowledgeStructure::bidiscrimination_failure() const {
    for (std::size_t q = 0; q < items_.size(); ++q) {
        for (std::size_t r = 0; r < items_.size(); ++r) {
            if (q == r) continue;
            bool split = false;
            for (StateMask s : states_) {
                if ((s >> q & 1) && !(s >> r & 1)) {
                    split = true;
                    break;
                }
            }
            if (!split) return std::make_pair(q, r);
        }
    }
    return std::nullopt;
}

KnowledgeStructure KnowledgeStructure::trace(StateMask keep) const {
    detail::require((keep & ~full_mask()) == 0, "trace: mask out of range");
    if (keep == 0) throw InputError("trace item subset must be non-empty");
    std::vector<std::string> sub_items;
    std::vector<int> new_bit(items_.size(), -1);
    for (std::size_t b = 0; b < items_.size(); ++b) {
        if (keep >> b & 1) {
            new_bit[b] = static_cast<int>(sub_items.size());
            sub_items.push_back(items_[b]);
        }
    }
    std::vector<StateMask> sub_states;
    sub_states.reserve(states_.size());
    for (StateMask s : states_) {
        StateMask t = 0;
        for (std::size_t b = 0; b < items_.size(); ++b) {
            if ((s >> b & 1) && new_bit[b] >= 0) t |= StateMask{1} << new_bit[b];
        }
        sub_states.push_back(t);
    }
    return create(std::move(sub_items), std::move(sub_states));
}

KnowledgeStructure::Fringes KnowledgeStructure::fringes(StateMask state) const {
    if (!contains(state)) {
        throw InputError("fringes: " + mask_to_string(state, items_) +
                         " is not a state of the structure");
    }
    Fringes f;
    for (std::size_t b = 0; b < items_.size(); ++b) {
        StateMask bit = StateMask{1} << b;
        if (state & bit) {
            if (contains(state & ~bit)) f.inner |= bit;
        } else {
            if (contains(state | bit)) f.outer |= bit;
        }
    }
    return f;
}

QuotientResult quotient(const KnowledgeStructure& ks) {
    const auto& states = ks.states();
    const std::size_t nq = ks.item_count();
    // Signature of an item: the set of states containing it. Items with equal
    // signatures co-occur in every state and fold into one class.
    auto same_signature = [&](std::size_t q, std::size_t r) {
        for (StateMask s : states) {
            if ((s >> q & 1) != (s >> r & 1)) return false;
        }
        return true;
    };
    QuotientResult out;
    out.item_class.assign(nq, 0);
    std::vector<std::size_t> representative; // first item of each class
    for (std::size_t q = 0; q < nq; ++q) {
        bool placed = false;
        for (std::size_t c = 0; c < representative.size(); ++c) {
            if (same_signature(q, representative[c])) {
                out.item_class[q] = c;
                out.classes[c].push_back(ks.items()[q]);
                placed = true;
                break;
            }
        }
        if (!placed) {
            out.item_class[q] = representative.size();
            representative.push_back(q);
            out.classes.push_back({ks.items()[q]});
        }
    }
    std::vector<std::string> labels;
    labels.reserve(out.classes.size());
    for (const auto& members : out.classes) {
        std::string label = members[0];
        for (std::size_t i = 1; i < members.size(); ++i) label += "+" + members[i];
        labels.push_back(label);
    }
    std::vector<StateMask> qstates;
    qstates.reserve(states.size());
    for (StateMask s : states) {
        StateMask t = 0;
        for (std::size_t c = 0; c < representative.size(); ++c) {
            if (s >> representative[c] & 1) t |= StateMask{1} << c;
        }
        qstates.push_back(t);
    }
    out.quotient = KnowledgeStructure::create(std::move(labels), std::move(qstates));
    return out;
}

} // namespace kst
