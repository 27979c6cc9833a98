#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "synchro/dfa.hpp"
#include "synchro/error.hpp"

namespace synchro::detail {

// Breadth-first exploration of the images Q.w, w ranging over all words.
//
// Letters are expanded in ascending order from a FIFO queue and each image
// keeps the parent that discovered it first, so the word reconstructed for an
// image is the lexicographically least among the shortest words reaching it.
class ImageBfs {
public:
    ImageBfs(const Dfa& dfa, std::size_t max_states) : dfa_(dfa), n_(dfa.num_states()) {
        if (n_ > max_states) {
            throw GuardExceeded("subset search is limited to " + std::to_string(max_states) +
                                " states, automaton has " + std::to_string(n_));
        }
        if (n_ > StateSet::kMaxUniverse) {
            throw GuardExceeded("subset search supports at most " + std::to_string(StateSet::kMaxUniverse) +
                                " states");
        }
        dense_ = n_ <= kDenseLimit;
        if (dense_) dense_parent_.assign(std::size_t{1} << n_, Parent{});
        images_.resize(dfa.num_letters());
        for (Letter l = 0; l < dfa.num_letters(); ++l) {
            images_[l].resize(n_);
            for (State q = 0; q < n_; ++q) images_[l][q] = std::uint64_t{1} << dfa.next(q, l);
        }
    }

    std::uint64_t full_mask() const { return n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1; }

    // Calls visit(mask) on every reachable image in BFS order, starting with
    // Q itself. Stops as soon as visit returns true.
    template <typename Visit>
    void run(Visit&& visit) {
        std::vector<std::uint64_t> queue;
        const std::uint64_t start = full_mask();
        mark(start, Parent{start, kRoot, true});
        queue.push_back(start);
        if (visit(start)) return;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const std::uint64_t current = queue[head];
            for (Letter l = 0; l < images_.size(); ++l) {
                const std::uint64_t next = image(current, l);
                if (seen(next)) continue;
                mark(next, Parent{current, l, true});
                queue.push_back(next);
                if (visit(next)) return;
            }
        }
    }

    Word word_to(std::uint64_t mask) const {
        std::vector<Letter> reversed;
        for (Parent p = lookup(mask); p.letter != kRoot; p = lookup(p.parent)) reversed.push_back(p.letter);
        return Word(std::vector<Letter>(reversed.rbegin(), reversed.rend()));
    }

private:
    static constexpr std::size_t kDenseLimit = 20;
    static constexpr Letter kRoot = ~Letter{0};

    struct Parent {
        std::uint64_t parent = 0;
        Letter letter = kRoot;
        bool seen = false;
    };

    std::uint64_t image(std::uint64_t mask, Letter l) const {
        std::uint64_t out = 0;
        const auto& row = images_[l];
        for (; mask != 0; mask &= mask - 1) out |= row[std::countr_zero(mask)];
        return out;
    }

    bool seen(std::uint64_t mask) const {
        if (dense_) return dense_parent_[mask].seen;
        return sparse_parent_.count(mask) != 0;
    }

    void mark(std::uint64_t mask, Parent p) {
        if (dense_) {
            dense_parent_[mask] = p;
        } else {
            sparse_parent_.emplace(mask, p);
        }
    }

    Parent lookup(std::uint64_t mask) const {
        if (dense_) return dense_parent_[mask];
        return sparse_parent_.at(mask);
    }

    const Dfa& dfa_;
    std::size_t n_;
    bool dense_ = false;
    std::vector<Parent> dense_parent_;
    std::unordered_map<std::uint64_t, Parent> sparse_parent_;
    std::vector<std::vector<std::uint64_t>> images_;
};

}  // namespace synchro::detail
