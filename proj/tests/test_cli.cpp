// Integration checks against the built command-line binary. The binary path
// arrives as the first non-doctest argument (see CMakeLists).
#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

std::string g_binary;

struct RunResult {
    int status = -1;
    std::string output;  // stdout only
};

RunResult run(const std::string& args) {
    RunResult result;
    std::string command = g_binary + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buffer;
    size_t got;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        result.output.append(buffer.data(), got);
    int raw = pclose(pipe);
    result.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return result;
}

}  // namespace

TEST_CASE("show subcommand prints the documented formats") {
    RunResult r = run("show ideal --n 4 --t 2");
    CHECK(r.status == 0);
    CHECK(r.output == "[x1*x2, x2*x3, x3*x4]\n");
    r = run("show qpoly --n 3 --t 2 --s 1");
    CHECK(r.status == 0);
    CHECK(r.output == "1 + z - z^2\n");
    r = run("show covers --n 3 --t 2");
    CHECK(r.status == 0);
    CHECK(r.output == "[[2], [1,3]]\n");
    r = run("show betti --n 5 --t 2 --format json");
    CHECK(r.status == 0);
    CHECK(r.output.find("\"0,0\": 1") != std::string::npos);
}

TEST_CASE("verify exit status signals mismatches and caps") {
    RunResult r = run("verify covers --n 3..8");
    CHECK(r.status == 0);
    r = run("verify covers --n 3..15");
    CHECK(r.status == 2);
    r = run("verify bogus-scope");
    CHECK(r.status == 2);
}

TEST_CASE("verify all with defaults has no mismatches") {
    RunResult r = run("verify all --format csv");
    CHECK(r.status == 0);
    CHECK(r.output.find(",false,") == std::string::npos);
    // every scope contributed records
    for (const char* check :
         {"mult-power", "mult-poly-in-s", "ass-power", "ass-dual-power", "cover-minimal-primes",
          "height-konig", "minheight-multiplicity", "pd-dual-reg", "dual-maxdeg",
          "colon-identities", "q-recursion", "count-T", "count-X"})
        CHECK(r.output.find(check) != std::string::npos);
}

TEST_CASE("verify csv report has the documented columns") {
    RunResult r = run("verify counts --n 1..3 --t 1..3 --format csv");
    CHECK(r.status == 0);
    CHECK(r.output.rfind("check,n,t,s,engine,formula,oracle,match,ms", 0) == 0);
    CHECK(r.output.find("count-T,2,2,0,3,3,bijection,true") != std::string::npos);
}

TEST_CASE("table output is byte identical across runs and cache settings") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "pathideal_cli_cache";
    fs::remove_all(dir);
    std::string args = "table mult --n 3..5 --t 2..n --s 1..2 --format csv";
    RunResult first = run(args);
    RunResult second = run(args);
    CHECK(first.status == 0);
    CHECK(first.output == second.output);
    CHECK(first.output.find("4,2,2,9,9") != std::string::npos);

    setenv("PATHIDEAL_LAB_CACHE_DIR", dir.c_str(), 1);
    RunResult cached = run(args);       // populates the cache
    RunResult cached_again = run(args); // served from it
    unsetenv("PATHIDEAL_LAB_CACHE_DIR");
    CHECK(cached.output == first.output);
    CHECK(cached_again.output == first.output);
    CHECK(fs::exists(dir));

    // the flag wins over the environment: no cache directory appears
    fs::path fresh = fs::temp_directory_path() / "pathideal_cli_cache_flag";
    fs::remove_all(fresh);
    setenv("PATHIDEAL_LAB_CACHE_DIR", fresh.c_str(), 1);
    RunResult no_cache = run(args + " --no-cache");
    unsetenv("PATHIDEAL_LAB_CACHE_DIR");
    CHECK(no_cache.output == first.output);
    CHECK_FALSE(fs::exists(fresh));
    fs::remove_all(dir);
}

TEST_CASE("out flag writes the report to a file") {
    namespace fs = std::filesystem;
    fs::path path = fs::temp_directory_path() / "pathideal_cli_out.json";
    fs::remove(path);
    RunResult r = run("verify covers --n 2..4 --format json --out " + path.string());
    CHECK(r.status == 0);
    std::ifstream in(path);
    REQUIRE(in.good());
    std::string body((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(body.find("\"check\": \"cover-minimal-primes\"") != std::string::npos);
    fs::remove(path);
}

int main(int argc, char** argv) {
    doctest::Context context;
    context.applyCommandLine(argc, argv);
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        if (!arg.empty() && arg[0] != '-') g_binary = arg;
    }
    if (g_binary.empty()) {
        std::fprintf(stderr, "usage: cli_tests <path-to-binary>\n");
        return 1;
    }
    return context.run();
}
