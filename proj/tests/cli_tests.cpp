// End-to-end checks of the flatbst binary: flags, exit codes, formats.
#include <doctest.h>

#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

struct run_result {
    int exit_code = -1;
    std::string out;
};

// Runs the CLI through the shell, capturing stdout (stderr folded in when
// merge_stderr is set).
run_result run_cli(const std::string& args, bool merge_stderr = false,
                   const std::string& env_prefix = "") {
    const std::string cmd = env_prefix + std::string(FLATBST_CLI_PATH) + " " +
                            args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
    run_result res;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, got);
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

class temp_dir {
  public:
    temp_dir() {
        path_ = std::filesystem::temp_directory_path() /
                ("flatbst_cli_test_" + std::to_string(::getpid()));
        std::filesystem::create_directories(path_);
    }
    ~temp_dir() { std::filesystem::remove_all(path_); }

    std::string file(const std::string& name, const std::string& content) const {
        const auto p = path_ / name;
        std::ofstream out(p);
        out << content;
        return p.string();
    }

  private:
    std::filesystem::path path_;
};

}  // namespace

TEST_CASE("build --n emits the documented json") {
    const auto res = run_cli("build --n 5 --format json");
    CHECK(res.exit_code == 0);
    CHECK(res.out ==
          "{\"n\":5,\"root\":3,\"parent\":[1,3,1,null,3],\"left\":[null,0,null,1,null],"
          "\"right\":[null,2,null,4,null]}\n");
}

TEST_CASE("build --complete rotates the five-node tree") {
    const auto res = run_cli("build --n 5 --complete --format json");
    CHECK(res.exit_code == 0);
    CHECK(res.out ==
          "{\"n\":5,\"root\":1,\"parent\":[1,null,3,1,3],\"left\":[null,0,null,2,null],"
          "\"right\":[null,3,null,4,null]}\n");
}

TEST_CASE("build --no-parents drops the parent array") {
    const auto res = run_cli("build --n 3 --no-parents");
    CHECK(res.exit_code == 0);
    CHECK(res.out ==
          "{\"n\":3,\"root\":1,\"left\":[null,0,null],\"right\":[null,2,null]}\n");
}

TEST_CASE("single-node dot output has no edges") {
    const auto res = run_cli("build --n 1 --format dot");
    CHECK(res.exit_code == 0);
    CHECK(res.out == "digraph bst {\n  0 [label=\"0\"];\n}\n");
}

TEST_CASE("arrays format") {
    const auto res = run_cli("build --n 5 --format arrays");
    CHECK(res.exit_code == 0);
    CHECK(res.out == "n 5\nroot 3\nparent 1 3 1 - 3\nleft - 0 - 1 -\nright - 2 - 4 -\n");
}

TEST_CASE("flag validation exits 64") {
    CHECK(run_cli("build").exit_code == 64);
    CHECK(run_cli("build --n 5 --input somefile").exit_code == 64);
    CHECK(run_cli("build --n 5 --format yaml").exit_code == 64);
    CHECK(run_cli("build --n 5 --threads 0").exit_code == 64);
    CHECK(run_cli("").exit_code == 64);
    CHECK(run_cli("frobnicate").exit_code == 64);
    CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("key files drive build and dot labels") {
    temp_dir dir;
    const std::string sorted = dir.file("sorted.txt", "10\n20\n30\n");
    const auto dot = run_cli("build --input " + sorted + " --format dot");
    CHECK(dot.exit_code == 0);
    CHECK(dot.out.find("1 [label=\"1: 20\"]") != std::string::npos);

    const std::string crlf = dir.file("crlf.txt", "10\r\n20\r\n30\r\n");
    CHECK(run_cli("build --input " + crlf).out ==
          run_cli("build --input " + sorted).out);
}

TEST_CASE("unsorted input: exit 2 with the offending line, --sort repairs") {
    temp_dir dir;
    const std::string unsorted = dir.file("unsorted.txt", "10\n30\n20\n40\n");
    const auto bad = run_cli("build --input " + unsorted, true);
    CHECK(bad.exit_code == 2);
    CHECK(bad.out.find("line 3") != std::string::npos);

    const auto sorted = run_cli("build --input " + unsorted + " --sort");
    CHECK(sorted.exit_code == 0);
    CHECK(sorted.out == run_cli("build --n 4").out);
}

TEST_CASE("unreadable and malformed inputs exit 3") {
    temp_dir dir;
    CHECK(run_cli("build --input /nonexistent/keys.txt").exit_code == 3);
    const std::string junk = dir.file("junk.txt", "10\npotato\n30\n");
    CHECK(run_cli("build --input " + junk).exit_code == 3);
}

TEST_CASE("verify accepts fresh output and rejects tampering") {
    temp_dir dir;
    const std::string tree = dir.file("tree.json", "");
    CHECK(run_cli("build --n 100 --output " + tree).exit_code == 0);
    const auto ok = run_cli("verify --input " + tree);
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.find("violations 0") != std::string::npos);

    const std::string swapped = dir.file(
        "swapped.json",
        R"({"n":3,"root":1,"left":[null,2,null],"right":[null,0,null]})");
    const auto bad = run_cli("verify --input " + swapped);
    CHECK(bad.exit_code == 1);
    CHECK(bad.out.find("kind=order") != std::string::npos);

    const std::string empty = dir.file(
        "empty.json", R"({"n":0,"root":null,"left":[],"right":[]})");
    CHECK(run_cli("verify --input " + empty).exit_code == 0);

    const std::string broken = dir.file("broken.json", "{\"n\":");
    CHECK(run_cli("verify --input " + broken).exit_code == 3);
    CHECK(run_cli("verify --input /nonexistent.json").exit_code == 3);
}

TEST_CASE("search hits, misses and the empty file") {
    temp_dir dir;
    const std::string keys = dir.file("keys.txt", "10\n20\n30\n40\n50\n");
    const auto hit = run_cli("search --input " + keys + " --key 40");
    CHECK(hit.exit_code == 0);
    CHECK(hit.out == "found 3 comparisons 1\n");

    const auto miss = run_cli("search --input " + keys + " --key 5");
    CHECK(miss.exit_code == 1);
    CHECK(miss.out.rfind("absent comparisons ", 0) == 0);
    const int comparisons = std::stoi(miss.out.substr(19));
    CHECK(comparisons <= 3);

    const std::string empty = dir.file("empty.txt", "");
    const auto none = run_cli("search --input " + empty + " --key 1");
    CHECK(none.exit_code == 1);
    CHECK(none.out == "absent comparisons 0\n");

    const std::string unsorted = dir.file("unsorted.txt", "2\n1\n");
    CHECK(run_cli("search --input " + unsorted + " --key 1").exit_code == 2);
}

TEST_CASE("threads flag and environment variable do not change output") {
    const auto serial = run_cli("build --n 1000");
    CHECK(run_cli("build --n 1000 --threads 4").out == serial.out);
    CHECK(run_cli("build --n 1000", false, "FLATBST_THREADS=3 ").out == serial.out);
    // Flag wins over a broken environment value; bare broken value is an error.
    CHECK(run_cli("build --n 10 --threads 2", false, "FLATBST_THREADS=bogus ")
              .exit_code == 0);
    CHECK(run_cli("build --n 10", false, "FLATBST_THREADS=bogus ").exit_code == 64);
}

TEST_CASE("bench prints one csv row per algorithm") {
    const auto res = run_cli("bench --n 4096 --algo both --repeat 5 --threads 2");
    CHECK(res.exit_code == 0);
    REQUIRE(res.out.rfind("algo,n,threads,repeat,median_ns\n", 0) == 0);
    std::size_t rows = 0;
    for (const char c : res.out) rows += c == '\n';
    CHECK(rows == 3);  // header + new + halving
    CHECK(res.out.find("\nnew,4096,2,5,") != std::string::npos);
    CHECK(res.out.find("\nhalving,4096,1,5,") != std::string::npos);

    CHECK(run_cli("bench --algo new").exit_code == 64);   // --n required
    CHECK(run_cli("bench --n 0").exit_code == 64);
}
