// End-to-end runs of the CLI binary against the documented file formats and
// exit codes.

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

#include "treelab/json_io.hpp"

namespace fs = std::filesystem;
using namespace treelab;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("treelab-cli-" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
  std::string file(const char* name) const { return (path / name).string(); }
};

int run(const std::string& args) {
  std::string cmd = std::string(TREELAB_BIN) + " " + args + " > /dev/null 2>&1";
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

void write(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
}

} // namespace

TEST_CASE("cli: generate, transform, invert, leaves") {
  TempDir dir;
  REQUIRE(run("generate --name finite-random --seed 5 --nodes 12 --depth 4 --out " +
              dir.file("t.json")) == 0);
  REQUIRE(run("transform --op star --in " + dir.file("t.json") + " --out " +
              dir.file("star.json")) == 0);
  REQUIRE(run("transform --op star-invert --in " + dir.file("star.json") + " --out " +
              dir.file("back.json")) == 0);

  TreeWithLeaves t = twl_from_json(load_json_file(dir.file("t.json")));
  ExplicitTree back = tree_from_json(load_json_file(dir.file("back.json")));
  CHECK(back == t.tree);

  TreeWithLeaves star = twl_from_json(load_json_file(dir.file("star.json")));
  CHECK(star.tree.size() == 2 * t.tree.size());

  REQUIRE(run("leaves --brute --in " + dir.file("t.json") + " --out " + dir.file("l.json")) == 0);
  CHECK(seqset_from_json(load_json_file(dir.file("l.json"))) == t.leaves);
}

TEST_CASE("cli: gadget pipelines") {
  TempDir dir;
  write(dir.file("tri.json"), R"({"vertices": 3, "edges": [[0,1],[1,2],[0,2]]})");
  CHECK(run("color --in " + dir.file("tri.json") + " --k 2") == 0);
  CHECK(run("gadget hpc2wf --in " + dir.file("tri.json") + " --k 2 --out " +
            dir.file("ht.json")) == 0);
  TreeWithLeaves gadget = twl_from_json(load_json_file(dir.file("ht.json")));
  CHECK(gadget.frontier.empty()); // triangle is not 2-colorable: the search dies early

  write(dir.file("fam.json"), "[[[]], [[],[0],[1]]]");
  CHECK(run("gadget wf2pk --in " + dir.file("fam.json") + " --depth 4 --out " +
            dir.file("pk.json")) == 0);

  write(dir.file("t2.json"), "[[],[0]]");
  CHECK(run("gadget tree2lpo --in " + dir.file("t2.json") + " --out " + dir.file("lpo.json")) ==
        0);
  json lpo = load_json_file(dir.file("lpo.json"));
  CHECK(lpo.at("instance").size() == 2);
  CHECK(lpo.at("nodes").size() == 2);
  CHECK(run("gadget lpo2tree --in " + dir.file("lpo.json") + " --out " + dir.file("lt.json")) ==
        0);

  CHECK(run("gadget wf2hpc --in " + dir.file("t2.json") + " --k 3 --out " + dir.file("H.json")) ==
        0);
  Hypergraph h = hypergraph_from_json(load_json_file(dir.file("H.json")));
  CHECK(h.vertex_count == 10); // 5 shared + 2 per node + 1 clique vertex
  CHECK(h.anchors.at("u0") == 0);
}

TEST_CASE("cli: exit codes") {
  TempDir dir;
  write(dir.file("open.json"), "[[0,1]]");
  CHECK(run("transform --op plus --in " + dir.file("open.json")) == 2);
  CHECK(run("transform --op plus --close --in " + dir.file("open.json")) == 0);
  CHECK(run("verify bogus") == 2);
  CHECK(run("nonsense") == 2);
  CHECK(run("gadget tree2lpo --in " + dir.file("absent.json")) == 2);

  write(dir.file("tri.json"), R"({"vertices": 3, "edges": [[0,1],[1,2],[0,2]]})");
  CHECK(run("color --in " + dir.file("tri.json") + " --k 1") == 2);
  CHECK(run("color --in " + dir.file("tri.json") + " --k 2 --ceiling 2") == 3);

  CHECK(run("verify hat") == 0);
}
