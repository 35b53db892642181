#include <gtest/gtest.h>

#include <sstream>
#include <vector>

#include "laby/cli.hpp"

using namespace laby;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "laby");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(LABY_DATA_DIR) + "/" + name; }

}  // namespace

TEST(Cli, ComposeInLabyTwo) {
    auto r = run({"compose", data("maze_A.json"), data("maze_B.json"), "--category", "laby_n", "-n", "2"});
    ASSERT_EQ(r.code, 0) << r.err;
    MazeHom want = MazeHom(identity_maze({"1", "2"})) + MazeHom(laby2_S());
    EXPECT_EQ(mazehom_from_json(json::parse(r.out)), want);
}

TEST(Cli, ComposeMultations) {
    auto r = run({"compose", data("mult_alpha.json"), data("mult_beta.json"), "--category", "mset"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(multhom_from_json(json::parse(r.out)),
              MultHom(identity_multation(MSet{"1", "2"})) + MultHom(mset2_sigma()));
}

TEST(Cli, ComposeWorkedMazes) {
    auto r = run({"compose", data("maze_P.json"), data("maze_Q.json")});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(mazehom_from_json(json::parse(r.out)).terms.size(), 7u);
    auto p = run({"compose", data("maze_P.json"), data("maze_Q.json"), "--format", "pretty"});
    EXPECT_NE(p.out.find("x -(10)-> x"), std::string::npos) << p.out;
}

TEST(Cli, OutputIsDeterministic) {
    auto a = run({"compose", data("maze_P.json"), data("maze_Q.json")});
    auto b = run({"compose", data("maze_P.json"), data("maze_Q.json")});
    EXPECT_EQ(a.out, b.out);
}

TEST(Cli, Tables) {
    auto r = run({"tables", "-n", "2"});
    ASSERT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("A  --  I+S  2A  --"), std::string::npos) << r.out;
    auto j = run({"tables", "--format", "json"});
    auto t = json::parse(j.out);
    EXPECT_EQ(t["laby2"]["A"]["C"], "2A");
    EXPECT_EQ(t["laby2"]["A"]["A"], "--");
    EXPECT_EQ(t["mset2"]["beta"]["sigma"], "β");
    EXPECT_EQ(run({"tables", "-n", "3"}).code, 3);
}

TEST(Cli, Normalize) {
    auto r = run({"normalize", data("maze_P.json"), "--category", "laby_n", "-n", "2"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(mazehom_from_json(json::parse(r.out)), normalize_numerical(checks::worked_P(), 2));
    EXPECT_EQ(run({"normalize", data("maze_P.json")}).code, 3);  // degree missing
}

TEST(Cli, AriadneTheseusXi) {
    auto a = run({"ariadne", data("maze_C.json"), "-n", "2"});
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(json::parse(a.out), to_json(ariadne_maze(laby2_C(), 2)));
    auto t = run({"theseus", data("mult_alpha.json"), "-n", "2"});
    ASSERT_EQ(t.code, 0) << t.err;
    EXPECT_EQ(mazehom_from_json(json::parse(t.out)), theseus_multation(mset2_alpha(), 2));
    auto x = run({"xi", data("correspondence.json")});
    ASSERT_EQ(x.code, 0) << x.err;
    Maze m = maze_from_json(json::parse(x.out));
    EXPECT_EQ(m.size(), 3);
    EXPECT_EQ(run({"xi", data("maze_P.json")}).code, 3);  // labels 2, 3: not pure
    auto back = run({"xi", data("maze_S.json")});
    ASSERT_EQ(back.code, 0);
    EXPECT_EQ(xi_correspondence(correspondence_from_json(json::parse(back.out))), laby2_S());
}

TEST(Cli, EvalFrobenius) {
    auto r = run({"eval", data("laby_frobenius.json"), data("matrix_3.json"), "--kind", "laby"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = json::parse(r.out);
    AbHom f = abhom_from_json(j["hom"]);
    EXPECT_EQ(f, AbHom::identity(FgAbGroup::invariant(0, {2})));
    EXPECT_EQ(j["dom_blocks"].size(), 2u);
}

TEST(Cli, EvalTensorSquareModule) {
    auto r = run({"eval", data("mset_tensor_square.json"), data("matrix_3.json"), "--kind", "mset"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(abhom_from_json(json::parse(r.out)["hom"]).m, IntMatrix::from_rows({{Integer(9)}}));
    auto id = run({"eval", data("laby_identity.json"), data("matrix_2x2.json")});
    ASSERT_EQ(id.code, 0) << id.err;
    EXPECT_EQ(abhom_from_json(json::parse(id.out)["hom"]).m,
              IntMatrix::from_rows({{Integer(2), Integer(1)}, {Integer(-1), Integer(3)}}));
}

TEST(Cli, Verify) {
    auto r = run({"verify", "tables"});
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_NE(r.out.find("PASS  tables: Laby_2 table"), std::string::npos);
    EXPECT_NE(r.out.find("all checks passed"), std::string::npos);
    EXPECT_EQ(run({"verify", "lemmas", "--seed", "7", "--trials", "5"}).code, 0);
    EXPECT_EQ(run({"verify", "nonsense"}).code, 2);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"compose", data("maze_A.json")}).code, 2);
    EXPECT_EQ(run({"compose", data("maze_A.json"), data("no_such.json")}).code, 2);
    EXPECT_EQ(run({"compose", data("matrix_3.json"), data("maze_A.json")}).code, 2);
    // A o A does not compose
    EXPECT_EQ(run({"compose", data("maze_A.json"), data("maze_A.json")}).code, 3);
    EXPECT_EQ(run({"compose", data("maze_A.json"), data("maze_B.json"), "--category", "laby_n"}).code, 3);
    // Φ⁻¹ is only evaluated on small arguments
    EXPECT_EQ(run({"eval", data("laby_identity.json"), data("matrix_5x5.json")}).code, 4);
    EXPECT_EQ(run({"--help"}).code, 0);
}
