#ifndef MDT_BITSET_HPP
#define MDT_BITSET_HPP

#include <cstdint>
#include <span>
#include <vector>

namespace mdt {

/// Fixed-universe bitset over vertex indices 0..universe-1.
///
/// Distinguisher sets, landmark sets and exclusion masks are all subsets of
/// one vertex universe, so a flat word array beats std::set by a wide margin
/// in the hitting-set inner loops.
class VertexSet {
public:
    VertexSet() = default;

    explicit VertexSet(int universe)
        : n_(universe), w_((universe + 63) / 64, 0) {}

    static VertexSet of(int universe, std::span<const int> members) {
        VertexSet s(universe);
        for (int v : members) s.set(v);
        return s;
    }

    int universe() const { return n_; }

    bool test(int v) const { return (w_[v >> 6] >> (v & 63)) & 1u; }
    void set(int v) { w_[v >> 6] |= std::uint64_t{1} << (v & 63); }
    void reset(int v) { w_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
    void clear() { for (auto& w : w_) w = 0; }

    int count() const {
        int c = 0;
        for (auto w : w_) c += popcount64(w);
        return c;
    }

    bool any() const {
        for (auto w : w_) if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    bool intersects(const VertexSet& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    bool subset_of(const VertexSet& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    VertexSet& operator|=(const VertexSet& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }

    VertexSet& operator&=(const VertexSet& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }

    VertexSet& subtract(const VertexSet& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }

    /// *this |= (src \ minus).
    VertexSet& or_without(const VertexSet& src, const VertexSet& minus) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= src.w_[i] & ~minus.w_[i];
        return *this;
    }

    bool operator==(const VertexSet&) const = default;

    /// Number of elements in *this that are not in `minus`.
    int count_without(const VertexSet& minus) const {
        int c = 0;
        for (std::size_t i = 0; i < w_.size(); ++i)
            c += popcount64(w_[i] & ~minus.w_[i]);
        return c;
    }

    bool disjoint_from_both(const VertexSet& a, const VertexSet& b) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~b.w_[i] & a.w_[i]) return false;
        return true;
    }

    /// First set bit, or -1 when empty.
    int first() const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i]) return int(i * 64) + ctz64(w_[i]);
        return -1;
    }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < w_.size(); ++i) {
            std::uint64_t w = w_[i];
            while (w) {
                f(int(i * 64) + ctz64(w));
                w &= w - 1;
            }
        }
    }

    /// Visit members of *this that are not in `minus`, ascending.
    template <class F>
    void for_each_without(const VertexSet& minus, F&& f) const {
        for (std::size_t i = 0; i < w_.size(); ++i) {
            std::uint64_t w = w_[i] & ~minus.w_[i];
            while (w) {
                f(int(i * 64) + ctz64(w));
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

private:
    static int popcount64(std::uint64_t w) { return __builtin_popcountll(w); }
    static int ctz64(std::uint64_t w) { return __builtin_ctzll(w); }

    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

} // namespace mdt

#endif
