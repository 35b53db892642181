#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "laby/laby.hpp"

using namespace laby;

namespace {

std::string data(const std::string& name) { return std::string(LABY_DATA_DIR) + "/" + name; }

std::string file_text(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// parse then print, dispatching on the file's shape
json reprint(const json& j) {
    if (j.contains("kind")) {
        if (j["kind"] == "laby") return to_json(laby_presentation_from_json(j));
        return to_json(mset_presentation_from_json(j));
    }
    if (j.contains("middle")) return to_json(correspondence_from_json(j));
    if (j.contains("passages")) return to_json(maze_from_json(j));
    if (j.contains("pairs")) return to_json(multation_from_json(j));
    if (j.is_array()) return to_json(matrix_from_json(j));
    ADD_FAILURE() << "unrecognised fixture " << j.dump();
    return {};
}

}  // namespace

TEST(Io, FixturesRoundTripByteForByte) {
    std::size_t n = 0;
    for (const auto& e : std::filesystem::directory_iterator(LABY_DATA_DIR)) {
        if (e.path().extension() != ".json") continue;
        ++n;
        auto text = file_text(e.path().string());
        EXPECT_EQ(dump(reprint(json::parse(text))) + "\n", text) << e.path();
    }
    EXPECT_GE(n, 15u);
}

TEST(Io, FixturesHoldTheExpectedValues) {
    EXPECT_EQ(maze_from_json(read_json_file(data("maze_A.json"))), laby2_A());
    EXPECT_EQ(maze_from_json(read_json_file(data("maze_S.json"))), laby2_S());
    EXPECT_EQ(multation_from_json(read_json_file(data("mult_beta.json"))), mset2_beta());
    auto h = laby_presentation_from_json(read_json_file(data("laby_tensor_square.json")));
    EXPECT_TRUE(validate_presentation(h).ok);
    EXPECT_EQ(h.value(laby2_A()).m, IntMatrix::from_rows({{Integer(1)}, {Integer(1)}}));
    EXPECT_EQ(h.value(laby2_B()).m, IntMatrix::from_rows({{Integer(1), Integer(1)}}));
    auto j = mset_presentation_from_json(read_json_file(data("mset_frobenius.json")));
    EXPECT_TRUE(validate_presentation(j).ok);
}

TEST(Io, ScalarsAndIntegers) {
    EXPECT_EQ(scalar_from_json(json("-3/6")), Scalar(-1, 2));
    EXPECT_EQ(scalar_from_json(json(4)), Scalar(4));
    EXPECT_THROW(scalar_from_json(json("1/0")), ParseError);
    EXPECT_THROW(scalar_from_json(json("x")), ParseError);
    Integer big("123456789012345678901234567890");
    EXPECT_EQ(integer_from_json(to_json(big)), big);
    EXPECT_EQ(to_json(Integer(7)), json(7));
}

TEST(Io, HomsAcceptBareArrows) {
    auto m = laby2_C();
    EXPECT_EQ(mazehom_from_json(to_json(m)), MazeHom(m));
    MazeHom h(m.dom, m.cod);
    h.add(m, Scalar(2, 3));
    h.add(identity_maze(m.dom), -1);
    EXPECT_EQ(mazehom_from_json(to_json(h)), h);
    MultHom f = MultHom(mset2_alpha()) + MultHom(mset2_alpha(), 4);
    EXPECT_EQ(multhom_from_json(to_json(f)), f);
    EXPECT_EQ(multhom_from_json(to_json(mset2_sigma())), MultHom(mset2_sigma()));
}

TEST(Io, AriadneAndGroups) {
    auto a = ariadne_maze(laby2_A(), 2);
    auto j = to_json(a);
    EXPECT_EQ(j["rows"].size(), a.rows.size());
    auto g = FgAbGroup::invariant(2, {2, 6});
    EXPECT_EQ(group_from_json(to_json(g)), g);
    auto odd = FgAbGroup::from_orders({3, 0});
    EXPECT_EQ(group_from_json(to_json(odd)), odd);
    AbHom f(g, FgAbGroup::free(1), IntMatrix::from_rows({{Integer(1), Integer(2), Integer(0), Integer(3)}}));
    EXPECT_EQ(abhom_from_json(to_json(f)), f);
}

TEST(Io, MalformedInputIsAParseOrDomainError) {
    EXPECT_THROW(maze_from_json(json::parse(R"({"dom": ["a"], "cod": ["b"]})")), ParseError);
    EXPECT_THROW(maze_from_json(json::parse(R"({"dom": ["a"], "cod": ["b"], "passages": 3})")), ParseError);
    // dead end at b
    EXPECT_THROW(maze_from_json(json::parse(R"({"dom": ["a"], "cod": ["b", "c"], "passages": [[["a","c","1"],1]]})")),
                 DomainError);
    EXPECT_THROW(matrix_from_json(json::parse("[[1,2],[3]]")), ParseError);
    EXPECT_THROW(read_json_file(data("no_such_file.json")), ParseError);
    auto j = read_json_file(data("laby_frobenius.json"));
    j["groups"].erase(0);
    EXPECT_THROW(laby_presentation_from_json(j), DomainError);
}

TEST(Pretty, Mazes) {
    EXPECT_EQ(pretty(checks::worked_P()), "{z} -> {x,y}\n  z -(2)-> x\n  z -(3)-> y\n");
    EXPECT_EQ(pretty(MazeHom({"a"}, {"b"})), "0 : {a} -> {b}\n");
}

TEST(Pretty, TwoRowMultations) {
    EXPECT_EQ(pretty(mset2_alpha()), "[1 1]\n[1 2]\n");
    EXPECT_EQ(pretty(mset2_sigma()), "[1 2]\n[2 1]\n");
}

TEST(Pretty, TableCells) {
    auto t1 = render_laby2_table();
    EXPECT_NE(t1.find("A  --  I+S  2A  --"), std::string::npos) << t1;
    EXPECT_NE(t1.find("S  A   --   --  I"), std::string::npos) << t1;
    auto t2 = render_mset2_table();
    EXPECT_NE(t2.find("β  2ι  --   β"), std::string::npos) << t2;
    EXPECT_EQ(laby2_name(identity_maze({"1", "2"})), "I");
    EXPECT_EQ(mset2_name(identity_multation(MSet{"1", "1"})), "ι");
}

TEST(Pretty, Combinations) {
    MazeHom h(laby2_C(), 2);
    h.add(identity_maze({"1"}), -1);
    // sign handling only, coefficient 1 omitted
    EXPECT_EQ(detail::combination_text(h.terms, laby2_name), "-I+2C");
}
