#include <filesystem>
#include <sstream>

#include <unistd.h>

#include "doctest.h"
#include "nst/cli.hpp"
#include "nst/io.hpp"

using namespace nst;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "nst");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() / ("nst_cli_test_" + std::to_string(::getpid()));
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string operator/(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

bool contains(const std::string& text, const std::string& part) {
  return text.find(part) != std::string::npos;
}

}  // namespace

TEST_CASE("build") {
  TempDir dir;
  auto r = cli({"build", "--graph", "path:5", "--cover", "singleton", "--out", dir / "p"});
  CHECK(r.code == kExitOk);
  CHECK(contains(r.out, "spanning"));
  CHECK(io::load_tree(dir / "p.tree.json").size() == 5);
  CHECK(fs::exists(dir / "p.events.jsonl"));

  r = cli({"build", "--graph", "komega", "--cover", "constant:0", "--avoid", "9", "--budget", "5000",
           "--out", dir / "k"});
  CHECK(r.code == kExitOk);
  CHECK(contains(r.out, "not spanning"));
  CHECK(contains(r.out, "reps: 9"));

  io::write_file(dir / "g.json", R"({"vertices":[0,1,2,3],"edges":[[0,1],[1,2],[2,3],[3,0],[0,2]]})");
  io::write_file(dir / "c.json", R"({"levels":{"0":1,"1":0,"2":2,"3":0}})");
  r = cli({"build", "--graph", "file:" + (dir / "g.json"), "--cover", "table:" + (dir / "c.json"),
           "--out", dir / "f", "--dot", dir / "f.dot"});
  CHECK(r.code == kExitOk);
  CHECK(contains(r.out, "spanning: normal tree on 4 vertices"));
  CHECK(contains(io::read_file(dir / "f.dot"), "graph"));

  CHECK(cli({"build", "--graph", "torus:3"}).code == kExitInput);
  CHECK(cli({"build", "--graph", "path:5", "--cover", "fancy"}).code == kExitInput);
  CHECK(cli({"build", "--graph", "path:5", "--budget", "x"}).code == kExitInput);
  CHECK(cli({"build"}).code == kExitInput);
  CHECK(cli({}).code == kExitInput);
  CHECK(cli({"--help"}).code == kExitOk);
}

TEST_CASE("verify") {
  TempDir dir;
  io::write_file(dir / "c4.json", R"({"vertices":[0,1,2,3],"edges":[[0,1],[1,2],[2,3],[3,0]]})");
  io::write_file(dir / "chorded.json",
                 R"({"vertices":[0,1,2,3],"edges":[[0,1],[1,2],[2,3],[3,0],[0,2]]})");
  io::write_file(dir / "dfs.json", R"({"root":0,"parents":{"1":0,"2":1,"3":2}})");
  io::write_file(dir / "star.json", R"({"root":0,"parents":{"1":0,"2":0,"3":0}})");

  auto r = cli({"verify", "--graph", dir / "c4.json", "--tree", dir / "dfs.json", "--dot", dir / "t.dot"});
  CHECK(r.code == kExitOk);
  CHECK(contains(io::read_file(dir / "t.dot"), "0 -- 3 [style=dashed]"));
  CHECK(contains(r.out, "normal"));

  r = cli({"verify", "--graph", dir / "chorded.json", "--tree", dir / "star.json"});
  CHECK(r.code == kExitViolation);
  CHECK(contains(r.out, "{1,2}"));

  r = cli({"verify", "--graph", dir / "c4.json", "--tree", dir / "star.json"});
  CHECK(r.code == kExitInput);
  CHECK(contains(r.err, "0"));

  io::write_file(dir / "broken.json", "{");
  CHECK(cli({"verify", "--graph", dir / "broken.json", "--tree", dir / "dfs.json"}).code == kExitInput);
  CHECK(cli({"verify", "--graph", dir / "missing.json", "--tree", dir / "dfs.json"}).code == kExitInput);
}

TEST_CASE("witness") {
  TempDir dir;
  auto r = cli({"witness", "--graph", "komega", "--cover", "constant:0", "--avoid", "9", "--budget",
                "20000", "-m", "4", "-k", "5", "--out", dir / "w.json", "--dot", dir / "w.dot"});
  CHECK(r.code == kExitOk);
  CHECK(contains(r.out, "verified"));
  auto bundle = io::parse_json(io::read_file(dir / "w.json"), "bundle");
  CHECK(bundle["verified"] == true);
  CHECK(bundle["probe"]["rep"] == 9);
  CHECK(fs::exists(dir / "w.dot"));

  r = cli({"witness", "--graph", "binary_tree", "--budget", "20000", "--out", dir / "b.json"});
  CHECK(r.code == kExitNothingToWitness);
  CHECK_FALSE(fs::exists(dir / "b.json"));

  r = cli({"witness", "--graph", "komega", "--cover", "constant:0", "--avoid", "9", "--budget", "100",
           "--out", dir / "t.json"});
  CHECK(r.code == kExitInsufficient);
  CHECK(contains(r.out, "insufficient"));

  CHECK(cli({"witness", "--graph", "komega", "-m", "1"}).code == kExitInput);
}

TEST_CASE("separate") {
  TempDir dir;
  io::write_file(dir / "c4.json", R"({"vertices":[0,1,2,3],"edges":[[0,1],[1,2],[2,3],[3,0]]})");
  auto r = cli({"separate", "--graph", dir / "c4.json", "--a", "0", "--b", "2", "--dot", dir / "s.dot"});
  CHECK(r.code == kExitOk);
  CHECK(contains(io::read_file(dir / "s.dot"), "1 [shape=box, color=red]"));
  auto j = io::parse_json(r.out, "separation");
  CHECK(j["count"] == 2);
  CHECK(j["separator"] == io::json::array({1, 3}));
  CHECK(cli({"separate", "--graph", dir / "c4.json", "--a", "0", "--b", "9"}).code == kExitInput);
}

TEST_CASE("repeated runs write identical files") {
  TempDir dir;
  for (const char* prefix : {"a", "b"}) {
    auto r = cli({"build", "--graph", "grid2d", "--budget", "3000", "--out", dir / prefix});
    REQUIRE(r.code == kExitOk);
  }
  CHECK(io::read_file(dir / "a.tree.json") == io::read_file(dir / "b.tree.json"));
  CHECK(io::read_file(dir / "a.events.jsonl") == io::read_file(dir / "b.events.jsonl"));
}
