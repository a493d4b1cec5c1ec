#ifndef PATHIDEAL_VERTEX_SET_HPP
#define PATHIDEAL_VERTEX_SET_HPP

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace pathideal {

// Set of vertex ids drawn from 1..64, stored as a bit mask.  This is the
// common currency for facets, faces, vertex covers and generator supports;
// everything at desk scale fits in one word.
class VertexSet {
  public:
    static constexpr int kMaxVertexId = 64;

    VertexSet() = default;

    VertexSet(std::initializer_list<int> ids) {
        for (int v : ids) add(v);
    }

    static VertexSet single(int id) {
        VertexSet s;
        s.add(id);
        return s;
    }

    // {1, 2, ..., n}
    static VertexSet full(int n) {
        check_id(n == 0 ? 1 : n);
        VertexSet s;
        if (n > 0) s.bits_ = (n == 64) ? ~0ull : ((1ull << n) - 1);
        return s;
    }

    static VertexSet from_raw(std::uint64_t bits) {
        VertexSet s;
        s.bits_ = bits;
        return s;
    }

    void add(int id) {
        check_id(id);
        bits_ |= bit(id);
    }

    void remove(int id) {
        check_id(id);
        bits_ &= ~bit(id);
    }

    bool contains(int id) const { return id >= 1 && id <= kMaxVertexId && (bits_ & bit(id)); }

    bool empty() const { return bits_ == 0; }
    int size() const { return std::popcount(bits_); }

    bool subset_of(const VertexSet& other) const { return (bits_ & ~other.bits_) == 0; }
    bool proper_subset_of(const VertexSet& other) const {
        return subset_of(other) && bits_ != other.bits_;
    }
    bool intersects(const VertexSet& other) const { return (bits_ & other.bits_) != 0; }

    VertexSet operator|(const VertexSet& o) const { return from_raw(bits_ | o.bits_); }
    VertexSet operator&(const VertexSet& o) const { return from_raw(bits_ & o.bits_); }
    VertexSet operator-(const VertexSet& o) const { return from_raw(bits_ & ~o.bits_); }
    VertexSet& operator|=(const VertexSet& o) {
        bits_ |= o.bits_;
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) {
        bits_ &= o.bits_;
        return *this;
    }

    bool operator==(const VertexSet& o) const { return bits_ == o.bits_; }
    bool operator!=(const VertexSet& o) const { return bits_ != o.bits_; }

    // Smallest member, 0 when empty.
    int min_member() const { return bits_ == 0 ? 0 : std::countr_zero(bits_) + 1; }

    std::vector<int> members() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        std::uint64_t b = bits_;
        while (b) {
            out.push_back(std::countr_zero(b) + 1);
            b &= b - 1;
        }
        return out;
    }

    std::uint64_t raw() const { return bits_; }

    // Order by the sorted member sequences: {1,3} < {2,3}, {1} < {1,2}.
    // The first differing element is the low bit of the symmetric difference;
    // a proper prefix sorts before its extensions.
    static bool lex_less(const VertexSet& a, const VertexSet& b) {
        std::uint64_t diff = a.bits_ ^ b.bits_;
        if (diff == 0) return false;
        std::uint64_t low = diff & (~diff + 1);
        std::uint64_t above = ~(low | (low - 1));
        if (a.bits_ & low) return (b.bits_ & above) != 0;
        return (a.bits_ & above) == 0;
    }

    // Canonical facet order: by cardinality, then lexicographic.
    static bool size_lex_less(const VertexSet& a, const VertexSet& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return lex_less(a, b);
    }

    std::string to_string() const {
        std::string s = "{";
        bool first = true;
        for (int v : members()) {
            if (!first) s += ",";
            s += std::to_string(v);
            first = false;
        }
        return s + "}";
    }

  private:
    static std::uint64_t bit(int id) { return 1ull << (id - 1); }

    static void check_id(int id) {
        if (id < 1 || id > kMaxVertexId)
            throw std::invalid_argument("vertex id " + std::to_string(id) +
                                        " outside supported range 1.." +
                                        std::to_string(kMaxVertexId));
    }

    std::uint64_t bits_ = 0;
};

}  // namespace pathideal

#endif  // PATHIDEAL_VERTEX_SET_HPP
