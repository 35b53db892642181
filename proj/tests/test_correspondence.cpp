#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "laby/correspondence.hpp"

using namespace laby;

namespace {

Correspondence make(std::vector<Elem> cod, std::vector<Elem> mid, std::vector<Elem> dom,
                    std::vector<std::pair<Elem, Elem>> l, std::vector<std::pair<Elem, Elem>> r) {
    Correspondence c{cod, mid, dom, {}, {}};
    for (auto& [u, y] : l) c.left[u] = y;
    for (auto& [u, x] : r) c.right[u] = x;
    return c;
}

// Canonical form by minimising over every relabelling of the middle set.
std::vector<std::pair<Elem, Elem>> brute_canonical(const std::vector<Elem>& ly, const std::vector<Elem>& rx) {
    std::vector<std::size_t> perm(ly.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::pair<Elem, Elem>> best;
    bool first = true;
    do {
        std::vector<std::pair<Elem, Elem>> cur;
        for (std::size_t i : perm) cur.emplace_back(ly[i], rx[i]);
        if (first || cur < best) best = cur;
        first = false;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

// Every function [k] -> s, as image lists.
std::vector<std::vector<Elem>> all_maps(std::size_t k, const std::vector<Elem>& s) {
    std::vector<std::vector<Elem>> out;
    if (s.empty()) {
        if (k == 0) out.push_back({});
        return out;
    }
    std::vector<std::size_t> idx(k, 0);
    while (true) {
        std::vector<Elem> img;
        for (auto i : idx) img.push_back(s[i]);
        out.push_back(img);
        std::size_t p = 0;
        while (p < k && ++idx[p] == s.size()) idx[p++] = 0;
        if (p == k) break;
    }
    return out;
}

bool surjective(const std::vector<Elem>& img, const std::vector<Elem>& s) {
    std::set<Elem> hit(img.begin(), img.end());
    return hit.size() == s.size();
}

}  // namespace

TEST(Xi, Examples) {
    auto id = make({"x"}, {"u"}, {"x"}, {{"u", "x"}}, {{"u", "x"}});
    EXPECT_EQ(xi_correspondence(id), identity_maze({"x"}));
    auto c = make({"y"}, {"u1", "u2"}, {"x"}, {{"u1", "y"}, {"u2", "y"}}, {{"u1", "x"}, {"u2", "x"}});
    EXPECT_EQ(xi_correspondence(c), make_maze({"x"}, {"y"}, {{"x", "y", 1}, {"x", "y", 1}}));
    auto fold = make({"y"}, {"u1", "u2"}, {"x1", "x2"}, {{"u1", "y"}, {"u2", "y"}}, {{"u1", "x1"}, {"u2", "x2"}});
    EXPECT_EQ(xi_correspondence(fold), make_maze({"x1", "x2"}, {"y"}, {{"x1", "y", 1}, {"x2", "y", 1}}));
    auto bad = make({"y", "z"}, {"u"}, {"x"}, {{"u", "y"}}, {{"u", "x"}});
    EXPECT_THROW(xi_correspondence(bad), DomainError);
}

TEST(Xi, InverseIsCanonical) {
    for (const auto& m : enumerate_pure_mazes({"1", "2"}, {"1", "2"}, 0, 3)) {
        auto c = xi_inverse(m);
        EXPECT_TRUE(validate_correspondence(c));
        EXPECT_EQ(xi_correspondence(c), m);
        EXPECT_EQ(canonical_correspondence(c), c);
    }
}

// Exhaustive: every span of surjections with |middle| <= 3 between sets of
// size <= 2 is sent to a pure maze, isomorphic spans to the same maze,
// non-isomorphic spans to different mazes, and every pure maze is reached.
TEST(Xi, BasisBijection) {
    const std::vector<std::vector<Elem>> sets = {{}, {"1"}, {"1", "2"}};
    for (const auto& x : sets)
        for (const auto& y : sets) {
            std::map<std::vector<std::pair<Elem, Elem>>, Maze> by_class;
            for (std::size_t k = 0; k <= 3; ++k) {
                std::vector<Elem> mid;
                for (std::size_t i = 0; i < k; ++i) mid.push_back("m" + std::to_string(i));
                for (const auto& ly : all_maps(k, y))
                    for (const auto& rx : all_maps(k, x)) {
                        if (!surjective(ly, y) || !surjective(rx, x)) continue;
                        Correspondence c{y, mid, x, {}, {}};
                        for (std::size_t i = 0; i < k; ++i) {
                            c.left[mid[i]] = ly[i];
                            c.right[mid[i]] = rx[i];
                        }
                        Maze m = xi_correspondence(c);
                        EXPECT_EQ(m.size(), static_cast<long>(k));
                        auto key = brute_canonical(ly, rx);
                        auto [it, fresh] = by_class.emplace(key, m);
                        if (!fresh) EXPECT_EQ(it->second, m);
                        auto canon = canonical_correspondence(c);
                        EXPECT_EQ(xi_inverse(m), canon);
                    }
            }
            std::set<Maze> images;
            for (const auto& [k, m] : by_class) images.insert(m);
            EXPECT_EQ(images.size(), by_class.size()) << "injectivity";
            auto pure = enumerate_pure_mazes(x, y, 0, 3);
            EXPECT_EQ(std::set<Maze>(pure.begin(), pure.end()), images) << "coverage";
        }
}

TEST(Xi, TransportedComposition) {
    auto mazes12 = enumerate_pure_mazes({"1"}, {"1", "2"}, 0, 2);
    auto mazes21 = enumerate_pure_mazes({"1", "2"}, {"1"}, 0, 2);
    for (const auto& a : mazes12)
        for (const auto& b : mazes21) {
            auto r = correspondence_compose(xi_inverse(b), xi_inverse(a), 2);
            MazeHom back({"1"}, {"1"});
            for (const auto& [c, corr] : r) {
                EXPECT_TRUE(c.is_integer());
                back.add(xi_correspondence(corr), c);
            }
            EXPECT_EQ(back, compose_in_laby_n(MazeHom(b), MazeHom(a), 2));
        }
}
