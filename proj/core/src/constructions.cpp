#include "ghzcert/constructions.h"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace ghzcert::constructions {
namespace {

std::string indexed(const std::string& family, int a, int b) {
    return family + "[" + std::to_string(a) + "," + std::to_string(b) + "]";
}

GhzTuple pair(Ket first, Ket second, std::string label) {
    return GhzTuple{{first, second}, std::move(label)};
}

// The three "face" families shared by every weight-2 construction. `ranges`
// gives the extent of each family's (i, j) index pair and `far` the largest
// index of each party.
void add_face_families(StateSet& set, const std::array<std::array<int, 2>, 3>& ranges,
                       const std::array<int, 3>& far) {
    const auto [fa, fb, fc] = far;
    for (int i = 0; i < ranges[0][0]; ++i) {
        for (int j = 0; j < ranges[0][1]; ++j) {
            set.tuples.push_back(pair({0, i, j + 1}, {fa, i + 1, j}, indexed("S1", i, j)));
        }
    }
    for (int i = 0; i < ranges[1][0]; ++i) {
        for (int j = 0; j < ranges[1][1]; ++j) {
            set.tuples.push_back(pair({i + 1, 0, j}, {i, fb, j + 1}, indexed("S2", i, j)));
        }
    }
    for (int i = 0; i < ranges[2][0]; ++i) {
        for (int j = 0; j < ranges[2][1]; ++j) {
            set.tuples.push_back(pair({i, j + 1, 0}, {i + 1, j, fc}, indexed("S3", i, j)));
        }
    }
}

}  // namespace

StateSet c333() { return odd_d(3); }

StateSet c345() {
    StateSet set;
    set.dims = {3, 4, 5};
    add_face_families(set, {{{3, 4}, {2, 4}, {2, 3}}}, {2, 3, 4});
    set.tuples.push_back(pair({0, 0, 0}, {2, 3, 4}, "S4"));
    return set;
}

StateSet odd_d(int d) {
    if (d < 3 || d % 2 == 0) {
        throw std::invalid_argument("odd_d: d must be odd and at least 3, got " + std::to_string(d));
    }
    const int dh = d - 1;
    StateSet set;
    set.dims = {d, d, d};
    add_face_families(set, {{{dh, dh}, {dh, dh}, {dh, dh}}}, {dh, dh, dh});
    set.tuples.push_back(pair({0, 0, 0}, {dh, dh, dh}, "S4"));
    return set;
}

StateSet even_d(int d) {
    if (d < 4 || d % 2 != 0) {
        throw std::invalid_argument("even_d: d must be even and at least 4, got " + std::to_string(d));
    }
    const int dh = d - 1;
    StateSet set;
    set.dims = {d, d, d};
    add_face_families(set, {{{dh, dh}, {dh, dh}, {dh, dh}}}, {dh, dh, dh});
    set.tuples.push_back(pair({0, 0, 0}, {2, 3, 2}, "S4"));
    set.tuples.push_back(pair({dh, dh, dh}, {2, 3, 3}, "S5"));
    return set;
}

StateSet c444_weight4() {
    static constexpr std::array<std::array<std::array<int, 3>, 4>, 16> kRows{{
        {{{0, 0, 0}, {1, 2, 1}, {2, 1, 2}, {3, 3, 3}}},
        {{{0, 0, 3}, {1, 1, 1}, {2, 2, 2}, {3, 3, 0}}},
        {{{0, 3, 0}, {1, 1, 2}, {2, 2, 1}, {3, 0, 3}}},
        {{{0, 3, 3}, {1, 2, 2}, {2, 1, 1}, {3, 0, 0}}},
        {{{0, 0, 1}, {1, 1, 3}, {2, 3, 0}, {3, 2, 2}}},
        {{{0, 0, 2}, {1, 2, 3}, {2, 1, 0}, {3, 3, 1}}},
        {{{0, 1, 1}, {1, 0, 3}, {2, 2, 0}, {3, 3, 2}}},
        {{{0, 1, 2}, {1, 3, 0}, {2, 0, 3}, {3, 2, 1}}},
        {{{0, 1, 3}, {1, 3, 2}, {2, 0, 1}, {3, 2, 0}}},
        {{{0, 2, 1}, {1, 3, 3}, {2, 0, 0}, {3, 1, 2}}},
        {{{0, 2, 2}, {1, 0, 1}, {2, 3, 3}, {3, 1, 0}}},
        {{{0, 2, 3}, {1, 0, 0}, {2, 3, 2}, {3, 1, 1}}},
        {{{0, 1, 0}, {1, 3, 1}, {2, 2, 3}, {3, 0, 2}}},
        {{{0, 2, 0}, {1, 0, 2}, {2, 3, 1}, {3, 1, 3}}},
        {{{0, 3, 1}, {1, 1, 0}, {2, 0, 2}, {3, 2, 3}}},
        {{{0, 3, 2}, {1, 2, 0}, {2, 1, 3}, {3, 0, 1}}},
    }};
    StateSet set;
    set.dims = {4, 4, 4};
    for (std::size_t b = 0; b < kRows.size(); ++b) {
        GhzTuple t;
        for (const auto& [i, j, k] : kRows[b]) {
            t.kets.push_back({i, j, k});
        }
        t.label = "B" + std::to_string(b + 1);
        set.tuples.push_back(std::move(t));
    }
    return set;
}

std::string family_of(const GhzTuple& tuple) {
    if (!tuple.label) {
        return {};
    }
    const auto& label = *tuple.label;
    return label.substr(0, label.find('['));
}

StateSet drop_families(const StateSet& set, const std::vector<std::string>& families) {
    StateSet out;
    out.dims = set.dims;
    for (const auto& t : set.tuples) {
        if (std::find(families.begin(), families.end(), family_of(t)) == families.end()) {
            out.tuples.push_back(t);
        }
    }
    return out;
}

StateSet by_name(const std::string& name, int d) {
    if (name == "c333") return c333();
    if (name == "c345") return c345();
    if (name == "odd") return odd_d(d);
    if (name == "even") return even_d(d);
    if (name == "c444w4") return c444_weight4();
    throw std::invalid_argument("unknown construction '" + name + "' (expected c333, c345, odd, even, c444w4)");
}

}  // namespace ghzcert::constructions
