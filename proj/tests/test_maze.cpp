#include <gtest/gtest.h>

#include <random>

#include "laby/quotient.hpp"

using namespace laby;

namespace {

Passage pa(const char* f, const char* t, Scalar l = 1) { return {f, t, l}; }

Maze single(Scalar l = 1) { return make_maze({"x"}, {"y"}, {pa("x", "y", l)}); }

Maze random_maze(std::mt19937& rng, const std::vector<Elem>& dom, const std::vector<Elem>& cod, long max_p,
                 bool pure, int lo = -2, int hi = 3) {
    std::uniform_int_distribution<std::size_t> pd(0, dom.size() - 1), pc(0, cod.size() - 1);
    std::uniform_int_distribution<int> pl(lo, hi);
    while (true) {
        std::uniform_int_distribution<long> cnt(std::max(dom.size(), cod.size()), max_p);
        long k = cnt(rng);
        std::vector<Passage> ps;
        for (long i = 0; i < k; ++i) ps.push_back({dom[pd(rng)], cod[pc(rng)], pure ? Scalar(1) : Scalar(pl(rng))});
        Maze m{dom, cod, MultiSet<Passage>::from_elements(ps)};
        if (validate_maze(m)) return m;
    }
}

std::vector<Elem> random_set(std::mt19937& rng, const std::vector<Elem>& pool, std::size_t max) {
    std::uniform_int_distribution<std::size_t> sz(1, max);
    auto v = pool;
    std::shuffle(v.begin(), v.end(), rng);
    v.resize(sz(rng));
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

TEST(Maze, Validate) {
    EXPECT_TRUE(validate_maze(Maze{}));
    EXPECT_FALSE(validate_maze(Maze{{"x"}, {"y"}, {}}));
    EXPECT_TRUE(validate_maze(identity_maze({"1", "2"})));
    EXPECT_FALSE(validate_maze(Maze{{"x"}, {"y"}, MultiSet<Passage>{pa("x", "z")}}));
    EXPECT_THROW(make_maze({"x", "w"}, {"y"}, {pa("x", "y")}), DomainError);
    EXPECT_TRUE(laby2_C().is_pure());
    EXPECT_FALSE(laby2_C().is_simple());
    EXPECT_TRUE(laby2_S().is_simple());
    EXPECT_FALSE(single(2).is_pure());
}

TEST(Maze, BoxProduct) {
    Maze p = make_maze({"z"}, {"x", "y"}, {pa("z", "x", 2), pa("z", "y", 3)});
    Maze q = make_maze({"x", "y"}, {"z"}, {pa("x", "z", 5), pa("y", "z", 7)});
    EXPECT_EQ(box_product(p, q).size(), 4u);
    auto i3 = identity_maze({"1", "2", "3"});
    EXPECT_EQ(box_product(i3, i3).size(), 3u);
    EXPECT_EQ(box_product(laby2_C(), laby2_C()).size(), 4u);
    EXPECT_THROW(box_product(laby2_A(), laby2_A()), DomainError);
}

// The four composable pairs of the worked example, with distinct prime
// labels so every composed passage can be told apart.
TEST(Maze, WorkedComposition) {
    Maze p = make_maze({"z"}, {"x", "y"}, {pa("z", "x", 2), pa("z", "y", 3)});
    Maze q = make_maze({"x", "y"}, {"z"}, {pa("x", "z", 5), pa("y", "z", 7)});
    Passage ac = pa("x", "x", 10), bc = pa("x", "y", 15), ad = pa("y", "x", 14), bd = pa("y", "y", 21);
    std::vector<std::vector<Passage>> expect = {
        {ac, bc, ad, bd}, {ac, bd}, {bc, ad}, {bc, ad, bd}, {ac, ad, bd}, {ac, bc, bd}, {ac, bc, ad}};
    MazeHom e({"x", "y"}, {"x", "y"});
    for (const auto& ps : expect) e.add(make_maze({"x", "y"}, {"x", "y"}, ps), 1);
    auto r = maze_compose(p, q);
    EXPECT_EQ(r.terms.size(), 7u);
    EXPECT_EQ(r, e);
}

TEST(Maze, DoublePassageSquared) {
    auto r = maze_compose(laby2_C(), laby2_C());
    Maze triple = make_maze({"1"}, {"1"}, {pa("1", "1"), pa("1", "1"), pa("1", "1")});
    Maze quad = make_maze({"1"}, {"1"}, {pa("1", "1"), pa("1", "1"), pa("1", "1"), pa("1", "1")});
    MazeHom e({"1"}, {"1"});
    e.add(laby2_C(), 2);
    e.add(triple, 4);
    e.add(quad, 1);
    EXPECT_EQ(r, e);
}

TEST(Maze, EmptyMaze) {
    auto r = maze_compose(Maze{}, Maze{});
    EXPECT_EQ(r, MazeHom(Maze{}));
    EXPECT_EQ(normalize_numerical(Maze{}, 2), MazeHom(Maze{}));
    EXPECT_TRUE(normalize_homogeneous(Maze{}, 2).is_zero());
}

TEST(Maze, IdentityAndAssociativity) {
    std::mt19937 rng(3);
    const std::vector<Elem> pool{"1", "2", "3"};
    for (int t = 0; t < 60; ++t) {
        auto x = random_set(rng, pool, 2), y = random_set(rng, pool, 2), z = random_set(rng, pool, 2),
             w = random_set(rng, pool, 2);
        bool pure = t % 2 == 0;
        Maze r = random_maze(rng, x, y, 3, pure), q = random_maze(rng, y, z, 3, pure), p = random_maze(rng, z, w, 3, pure);
        EXPECT_EQ(maze_compose(identity_maze(w), p), MazeHom(p));
        EXPECT_EQ(maze_compose(p, identity_maze(z)), MazeHom(p));
        auto left = mazehom_compose(maze_compose(p, q), MazeHom(r));
        auto right = mazehom_compose(MazeHom(p), maze_compose(q, r));
        EXPECT_EQ(left, right);
    }
}

TEST(Maze, ExpandLabel) {
    Maze m = single(5);
    auto r = expand_label(m, pa("x", "y", 5), {2, 3});
    MazeHom e({"x"}, {"y"});
    e.add(single(2), 1);
    e.add(single(3), 1);
    e.add(make_maze({"x"}, {"y"}, {pa("x", "y", 2), pa("x", "y", 3)}), 1);
    EXPECT_EQ(r, e);
    EXPECT_EQ(expand_label(m, pa("x", "y", 5), {5}), MazeHom(m));
    EXPECT_THROW(expand_label(m, pa("x", "y", 5), {}), DomainError);
    EXPECT_THROW(expand_label(m, pa("x", "y", 5), {1, 1}), DomainError);
    auto z = expand_label(single(0), pa("x", "y", 0), {0});
    EXPECT_TRUE(apply_zero_axiom(z).is_zero());
    EXPECT_TRUE(normalize_numerical(z, 3).is_zero());
}

TEST(Maze, CollapseParallel) {
    Maze two = make_maze({"x"}, {"y"}, {pa("x", "y", 2), pa("x", "y", 3)});
    auto r = apply_zero_axiom(collapse_parallel(two, {pa("x", "y", 2), pa("x", "y", 3)}));
    MazeHom e({"x"}, {"y"});
    e.add(single(5), 1);
    e.add(single(2), -1);
    e.add(single(3), -1);
    EXPECT_EQ(r, e);
    EXPECT_EQ(apply_zero_axiom(collapse_parallel(single(4), {pa("x", "y", 4)})), MazeHom(single(4)));
    Maze np = make_maze({"x"}, {"y", "z"}, {pa("x", "y"), pa("x", "z")});
    EXPECT_THROW(collapse_parallel(np, {pa("x", "y"), pa("x", "z")}), DomainError);
}

// Expanding a label and collapsing the resulting pair returns the original
// maze up to terms killed by the zero-label axiom; both sides also agree
// after the binomial expansion.
TEST(Maze, ExpandCollapseRoundTrip) {
    for (int a = -2; a <= 3; ++a)
        for (int b = -2; b <= 3; ++b) {
            Maze base = make_maze({"x"}, {"y", "z"}, {pa("x", "y", a + b), pa("x", "z", 2)});
            auto ex = expand_label(base, pa("x", "y", a + b), {a, b});
            MazeHom back({"x"}, {"y", "z"});
            for (const auto& [m, c] : ex.terms) {
                if (m.passages.mult(pa("x", "y", a)) >= 1 && m.passages.mult(pa("x", "y", b)) >= 1 &&
                    m.size() == 3) {
                    std::vector<Passage> g{pa("x", "y", a), pa("x", "y", b)};
                    back.terms.add(collapse_parallel(m, g).terms, c);
                } else {
                    back.terms.add(m, c);
                }
            }
            EXPECT_EQ(apply_zero_axiom(back), apply_zero_axiom(MazeHom(base))) << a << " " << b;
            EXPECT_EQ(normalize_numerical(ex, 3), normalize_numerical(base, 3)) << a << " " << b;
        }
}

TEST(Maze, EnumeratePure) {
    auto all = enumerate_pure_mazes({"1"}, {"1", "2"}, 0, 2);
    ASSERT_EQ(all.size(), 1u);
    EXPECT_EQ(all[0], laby2_A());
    EXPECT_EQ(enumerate_pure_mazes({}, {}, 0, 3).size(), 1u);
    EXPECT_EQ(enumerate_pure_mazes({"1"}, {"1"}, 0, 3).size(), 3u);
    for (const auto& m : enumerate_pure_mazes({"1", "2"}, {"1", "2"}, 0, 3)) {
        EXPECT_TRUE(validate_maze(m));
        EXPECT_TRUE(m.is_pure());
        EXPECT_LE(m.size(), 3);
    }
}
