#include "pqm/partition.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <sstream>

namespace pqm {

namespace {

std::vector<std::uint64_t> canonicalize_blocks(std::vector<std::uint64_t> blocks) {
    std::sort(blocks.begin(), blocks.end(),
              [](std::uint64_t a, std::uint64_t b) { return std::countr_zero(a) < std::countr_zero(b); });
    return blocks;
}

}  // namespace

Partition make_partition_masks(const Universe& universe, std::vector<std::uint64_t> blocks) {
    const std::uint64_t full = full_mask(universe.n);
    std::uint64_t seen = 0;
    for (std::uint64_t b : blocks) {
        require(b != 0, "EmptyBlock", "blocks must be non-empty");
        require((b & ~full) == 0, "IndexOutOfRange", "block index exceeds universe");
        require((seen & b) == 0, "OverlappingBlocks", "blocks must be disjoint");
        seen |= b;
    }
    require(seen == full, "NonExhaustive", "blocks must cover the universe");
    return Partition{universe, canonicalize_blocks(std::move(blocks))};
}

Partition make_partition(const Universe& universe, const std::vector<std::vector<int>>& blocks) {
    std::vector<std::uint64_t> masks;
    masks.reserve(blocks.size());
    for (const auto& block : blocks) {
        std::uint64_t m = 0;
        for (int i : block) {
            require(i >= 0 && i < universe.n, "IndexOutOfRange",
                    "element index " + std::to_string(i) + " out of range");
            m |= bit(i);
        }
        // duplicate indices within one block collapse in the mask; catch them explicitly
        require(std::popcount(m) == static_cast<int>(block.size()), "OverlappingBlocks",
                "repeated element inside a block");
        masks.push_back(m);
    }
    return make_partition_masks(universe, std::move(masks));
}

Partition discrete_partition(const Universe& universe) {
    std::vector<std::uint64_t> blocks;
    for (int i = 0; i < universe.n; ++i) blocks.push_back(bit(i));
    return Partition{universe, std::move(blocks)};
}

Partition indiscrete_partition(const Universe& universe) {
    return Partition{universe, {full_mask(universe.n)}};
}

Attribute make_attribute(const Universe& universe, std::vector<AttrValue> values) {
    require(static_cast<int>(values.size()) == universe.n, "BadAttribute",
            "attribute needs one value per element");
    return Attribute{universe, std::move(values)};
}

DitSet ditset(const Partition& p) {
    const int n = p.universe.n;
    std::vector<std::uint64_t> rows(static_cast<size_t>(n), 0);
    for (std::uint64_t b : p.blocks) {
        const std::uint64_t others = full_mask(n) & ~b;
        std::uint64_t m = b;
        while (m) {
            int i = std::countr_zero(m);
            rows[static_cast<size_t>(i)] = others;
            m &= m - 1;
        }
    }
    return DitSet{p.universe, std::move(rows)};
}

DitSet inditset(const Partition& p) {
    const int n = p.universe.n;
    std::vector<std::uint64_t> rows(static_cast<size_t>(n), 0);
    for (std::uint64_t b : p.blocks) {
        std::uint64_t m = b;
        while (m) {
            int i = std::countr_zero(m);
            rows[static_cast<size_t>(i)] = b;  // includes the diagonal pair (i,i)
            m &= m - 1;
        }
    }
    return DitSet{p.universe, std::move(rows)};
}

std::size_t dit_count(const DitSet& d) {
    std::size_t total = 0;
    for (std::uint64_t row : d.rows) total += static_cast<std::size_t>(std::popcount(row));
    return total;
}

DitSet dit_union(const DitSet& a, const DitSet& b) {
    check_same_universe(a.universe, b.universe);
    DitSet out = a;
    for (size_t i = 0; i < out.rows.size(); ++i) out.rows[i] |= b.rows[i];
    return out;
}

DitSet dit_intersect(const DitSet& a, const DitSet& b) {
    check_same_universe(a.universe, b.universe);
    DitSet out = a;
    for (size_t i = 0; i < out.rows.size(); ++i) out.rows[i] &= b.rows[i];
    return out;
}

DitSet dit_difference(const DitSet& a, const DitSet& b) {
    check_same_universe(a.universe, b.universe);
    DitSet out = a;
    for (size_t i = 0; i < out.rows.size(); ++i) out.rows[i] &= ~b.rows[i];
    return out;
}

bool dit_subset(const DitSet& inner, const DitSet& outer) {
    check_same_universe(inner.universe, outer.universe);
    for (size_t i = 0; i < inner.rows.size(); ++i)
        if (inner.rows[i] & ~outer.rows[i]) return false;
    return true;
}

std::vector<std::pair<int, int>> dit_pairs(const DitSet& d) {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < d.universe.n; ++i) {
        std::uint64_t m = d.rows[static_cast<size_t>(i)];
        while (m) {
            out.emplace_back(i, std::countr_zero(m));
            m &= m - 1;
        }
    }
    return out;
}

bool refines(const Partition& coarse, const Partition& fine) {
    check_same_universe(coarse.universe, fine.universe);
    for (std::uint64_t fb : fine.blocks) {
        bool inside = false;
        for (std::uint64_t cb : coarse.blocks) {
            if ((fb & ~cb) == 0) {
                inside = true;
                break;
            }
        }
        if (!inside) return false;
    }
    return true;
}

Partition join(const Partition& p, const Partition& q) {
    check_same_universe(p.universe, q.universe);
    std::vector<std::uint64_t> blocks;
    for (std::uint64_t b : p.blocks)
        for (std::uint64_t c : q.blocks)
            if (std::uint64_t m = b & c) blocks.push_back(m);
    return Partition{p.universe, canonicalize_blocks(std::move(blocks))};
}

Partition meet(const Partition& p, const Partition& q) {
    check_same_universe(p.universe, q.universe);
    const int n = p.universe.n;
    std::vector<int> parent(static_cast<size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    };
    auto unite = [&](int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); };
    // elements sharing a block in either partition end up in the same meet block
    for (const auto* part : {&p, &q}) {
        for (std::uint64_t b : part->blocks) {
            int first = std::countr_zero(b);
            std::uint64_t m = b & (b - 1);
            while (m) {
                unite(first, std::countr_zero(m));
                m &= m - 1;
            }
        }
    }
    std::map<int, std::uint64_t> comps;
    for (int i = 0; i < n; ++i) comps[find(i)] |= bit(i);
    std::vector<std::uint64_t> blocks;
    for (auto& [root, m] : comps) blocks.push_back(m);
    return Partition{p.universe, canonicalize_blocks(std::move(blocks))};
}

Partition partition_from_attribute(const Attribute& f) {
    std::vector<AttrValue> seen;
    std::vector<std::uint64_t> blocks;
    for (int i = 0; i < f.universe.n; ++i) {
        const AttrValue& v = f.values[static_cast<size_t>(i)];
        bool matched = false;
        for (size_t j = 0; j < seen.size(); ++j) {
            if (seen[j] == v) {
                blocks[j] |= bit(i);
                matched = true;
                break;
            }
        }
        if (!matched) {
            seen.push_back(v);
            blocks.push_back(bit(i));
        }
    }
    return Partition{f.universe, canonicalize_blocks(std::move(blocks))};
}

bool is_complete(const std::vector<Partition>& ps) {
    require(!ps.empty(), "EmptyList", "need at least one partition");
    Partition acc = ps.front();
    for (size_t i = 1; i < ps.size(); ++i) acc = join(acc, ps[i]);
    return acc == discrete_partition(acc.universe);
}

int block_of(const Partition& p, int i) {
    require(i >= 0 && i < p.universe.n, "IndexOutOfRange", "element index out of range");
    for (size_t j = 0; j < p.blocks.size(); ++j)
        if (p.blocks[j] & bit(i)) return static_cast<int>(j);
    return -1;  // unreachable for a valid partition
}

std::vector<Partition> all_partitions(const Universe& universe) {
    const int n = universe.n;
    require(n <= 12, "BadUniverse", "exhaustive enumeration limited to n <= 12");
    std::vector<Partition> out;
    std::vector<int> rgs(static_cast<size_t>(n), 0);  // restricted growth string
    while (true) {
        int m = *std::max_element(rgs.begin(), rgs.end());
        std::vector<std::uint64_t> blocks(static_cast<size_t>(m + 1), 0);
        for (int i = 0; i < n; ++i) blocks[static_cast<size_t>(rgs[static_cast<size_t>(i)])] |= bit(i);
        out.push_back(Partition{universe, canonicalize_blocks(std::move(blocks))});
        // next RGS: rightmost position that can still grow
        int i = n - 1;
        while (i > 0) {
            int cap = *std::max_element(rgs.begin(), rgs.begin() + i) + 1;
            if (rgs[static_cast<size_t>(i)] < cap) break;
            --i;
        }
        if (i == 0) break;
        ++rgs[static_cast<size_t>(i)];
        std::fill(rgs.begin() + i + 1, rgs.end(), 0);
    }
    return out;
}

namespace {

bool all_single_letter(const Universe& u) {
    for (const auto& s : u.labels)
        if (s.size() != 1) return false;
    return true;
}

}  // namespace

std::string partition_str(const Partition& p) {
    const bool compact = all_single_letter(p.universe);
    std::ostringstream out;
    bool first_block = true;
    for (std::uint64_t b : p.blocks) {
        if (!first_block) out << '|';
        first_block = false;
        bool first_el = true;
        std::uint64_t m = b;
        while (m) {
            int i = std::countr_zero(m);
            m &= m - 1;
            if (!compact && !first_el) out << ',';
            first_el = false;
            out << p.universe.labels[static_cast<size_t>(i)];
        }
    }
    return out.str();
}

Partition partition_parse(const Universe& universe, const std::string& text) {
    auto index_of = [&](const std::string& label) {
        for (int i = 0; i < universe.n; ++i)
            if (universe.labels[static_cast<size_t>(i)] == label) return i;
        fail("UnknownLabel", "no element labelled '" + label + "'");
    };
    std::vector<std::uint64_t> blocks;
    std::string block_text;
    std::istringstream stream(text);
    while (std::getline(stream, block_text, '|')) {
        std::uint64_t m = 0;
        int count = 0;
        if (block_text.find(',') != std::string::npos || !all_single_letter(universe)) {
            std::istringstream bs(block_text);
            std::string label;
            while (std::getline(bs, label, ',')) {
                if (label.empty()) continue;
                m |= bit(index_of(label));
                ++count;
            }
        } else {
            for (char c : block_text) {
                if (c == ' ') continue;
                m |= bit(index_of(std::string(1, c)));
                ++count;
            }
        }
        require(count == std::popcount(m), "OverlappingBlocks", "repeated element inside a block");
        require(m != 0, "EmptyBlock", "empty block in '" + text + "'");
        blocks.push_back(m);
    }
    return make_partition_masks(universe, std::move(blocks));
}

}  // namespace pqm
