#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lcsfinder {

/// Persistent ordered set of integers. Every insertion produces a new
/// immutable version; version v contains exactly the first v inserted keys
/// and stays queryable forever. Implemented as a path-copying
/// weight-balanced tree, so one insertion copies O(log n) nodes and total
/// storage over n insertions is O(n log n).
///
/// Balance parameters follow Adams' scheme as used in Haskell's Data.Set:
/// a subtree may be at most kDelta times heavier than its sibling, kRatio
/// picks between single and double rotations, giving height <= ~2.41 log2 n.
template <typename Key = std::int64_t>
class PersistentSet {
public:
    using VersionId = std::int32_t;

    PersistentSet() {
        arena_.push_back(Node{Key{}, kNil, kNil, 0});  // nil sentinel
        roots_.push_back(kNil);                        // version 0 is empty
    }

    /// Inserts a key not present in the latest version and returns the id of
    /// the new version. Duplicate keys throw std::invalid_argument.
    VersionId insert(Key key) {
        const std::int32_t new_root = insert_rec(roots_.back(), key);
        roots_.push_back(new_root);
        return static_cast<VersionId>(roots_.size()) - 1;
    }

    /// Largest key < z in version v, if any.
    std::optional<Key> pred_strict(VersionId v, Key z) const {
        std::optional<Key> best;
        for (std::int32_t t = root_of(v); t != kNil;) {
            const Node& n = arena_[t];
            if (n.key < z) {
                best = n.key;
                t = n.right;
            } else {
                t = n.left;
            }
        }
        return best;
    }

    /// Smallest key > z in version v, if any.
    std::optional<Key> succ_strict(VersionId v, Key z) const {
        std::optional<Key> best;
        for (std::int32_t t = root_of(v); t != kNil;) {
            const Node& n = arena_[t];
            if (n.key > z) {
                best = n.key;
                t = n.left;
            } else {
                t = n.right;
            }
        }
        return best;
    }

    /// Both strict neighbors of z in one traversal; equal to
    /// (pred_strict(v, z), succ_strict(v, z)).
    std::pair<std::optional<Key>, std::optional<Key>> neighbors_strict(VersionId v,
                                                                       Key z) const {
        std::optional<Key> lo, hi;
        std::int32_t t = root_of(v);
        while (t != kNil) {
            const Node& n = arena_[t];
            if (n.key < z) {
                lo = n.key;
                t = n.right;
            } else if (n.key > z) {
                hi = n.key;
                t = n.left;
            } else {
                // exact hit: the strict neighbors are the extremes of its subtrees
                for (std::int32_t u = n.left; u != kNil; u = arena_[u].right) lo = arena_[u].key;
                for (std::int32_t u = n.right; u != kNil; u = arena_[u].left) hi = arena_[u].key;
                break;
            }
        }
        return {lo, hi};
    }

    bool contains(VersionId v, Key key) const {
        for (std::int32_t t = root_of(v); t != kNil;) {
            const Node& n = arena_[t];
            if (key < n.key) {
                t = n.left;
            } else if (key > n.key) {
                t = n.right;
            } else {
                return true;
            }
        }
        return false;
    }

    /// Number of versions, i.e. insertions + 1.
    VersionId version_count() const { return static_cast<VersionId>(roots_.size()); }

    std::int64_t size(VersionId v) const { return arena_[root_of(v)].size; }

    /// Longest root-to-node path in version v; bounds every query's cost.
    std::int32_t height(VersionId v) const { return height_rec(root_of(v)); }

    /// Total nodes ever allocated, across all versions.
    std::int64_t node_count() const { return static_cast<std::int64_t>(arena_.size()) - 1; }

private:
    // Node 0 is the shared nil sentinel with size 0.
    struct Node {
        Key key;
        std::int32_t left;
        std::int32_t right;
        std::int32_t size;
    };
    static constexpr std::int32_t kNil = 0;
    static constexpr std::int32_t kDelta = 3;
    static constexpr std::int32_t kRatio = 2;

    std::int32_t root_of(VersionId v) const {
        if (v < 0 || v >= version_count()) {
            throw std::out_of_range("PersistentSet: invalid version id " + std::to_string(v));
        }
        return roots_[static_cast<std::size_t>(v)];
    }

    std::int32_t make_node(Key key, std::int32_t left, std::int32_t right) {
        const std::int32_t id = static_cast<std::int32_t>(arena_.size());
        arena_.push_back(Node{key, left, right, 1 + arena_[left].size + arena_[right].size});
        return id;
    }

    std::int32_t rebalance(Key key, std::int32_t left, std::int32_t right) {
        const std::int32_t sl = arena_[left].size;
        const std::int32_t sr = arena_[right].size;
        if (sl + sr <= 1) {
            return make_node(key, left, right);
        }
        if (sl > kDelta * sr) {
            const Node l = arena_[left];
            if (arena_[l.right].size < kRatio * arena_[l.left].size) {
                // single rotation right
                return make_node(l.key, l.left, make_node(key, l.right, right));
            }
            const Node lr = arena_[l.right];
            return make_node(lr.key, make_node(l.key, l.left, lr.left),
                             make_node(key, lr.right, right));
        }
        if (sr > kDelta * sl) {
            const Node r = arena_[right];
            if (arena_[r.left].size < kRatio * arena_[r.right].size) {
                // single rotation left
                return make_node(r.key, make_node(key, left, r.left), r.right);
            }
            const Node rl = arena_[r.left];
            return make_node(rl.key, make_node(key, left, rl.left),
                             make_node(r.key, rl.right, r.right));
        }
        return make_node(key, left, right);
    }

    std::int32_t insert_rec(std::int32_t node, Key key) {
        if (node == kNil) {
            return make_node(key, kNil, kNil);
        }
        const Node n = arena_[node];
        if (key < n.key) {
            return rebalance(n.key, insert_rec(n.left, key), n.right);
        }
        if (key > n.key) {
            return rebalance(n.key, n.left, insert_rec(n.right, key));
        }
        throw std::invalid_argument("PersistentSet::insert: duplicate key");
    }

    std::int32_t height_rec(std::int32_t t) const {
        if (t == kNil) {
            return 0;
        }
        return 1 + std::max(height_rec(arena_[t].left), height_rec(arena_[t].right));
    }

    std::vector<Node> arena_;
    std::vector<std::int32_t> roots_;
};

}  // namespace lcsfinder
