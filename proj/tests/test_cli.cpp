#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

// PERFCODE_BIN is injected by the build: the path of the CLI under test.

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string("\"") + PERFCODE_BIN + "\" " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) result.out.append(buf, got);
    int status = pclose(pipe);
    result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::filesystem::path data_dir() {
    std::filesystem::path dir = std::filesystem::current_path() / "test_cli_data";
    std::filesystem::create_directories(dir);
    return dir;
}

std::string file_path(const std::string& name) { return (data_dir() / name).string(); }

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    REQUIRE(out.good());
    out << content;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

bool starts_with(const std::string& s, const std::string& prefix) {
    return s.rfind(prefix, 0) == 0;
}

}  // namespace

TEST_CASE("hamming dumps are deterministic with the pinned header") {
    RunResult first = run_cli("hamming --q 2 --m 4");
    CHECK(first.code == 0);
    CHECK(starts_with(first.out, "2 4 15\n"));
    CHECK(lines_of(first.out).size() == 16);

    RunResult second = run_cli("hamming --q 2 --m 4");
    CHECK(second.out == first.out);

    RunResult ternary = run_cli("hamming --q 3 --m 3");
    CHECK(ternary.code == 0);
    CHECK(starts_with(ternary.out, "3 3 13\n"));

    std::string out_path = file_path("H24.txt");
    RunResult to_file = run_cli("hamming --q 2 --m 4 --out " + out_path);
    CHECK(to_file.code == 0);
    CHECK(read_file(out_path) == first.out);
}

TEST_CASE("usage errors exit with code two") {
    CHECK(run_cli("hamming --q 6 --m 2").code == 2);
    CHECK(run_cli("hamming --m 4").code == 2);          // missing --q
    CHECK(run_cli("hamming --q 2 --m 4 --bogus").code == 2);
    CHECK(run_cli("").code == 2);                       // a subcommand is required
    CHECK(run_cli("--help").code == 0);
    CHECK(run_cli("component --q 2 --m 3 --i 8").code == 2);
    CHECK(run_cli("component --q 2 --m 3 --i 0").code == 2);
    CHECK(run_cli("verify perfect").code == 2);         // neither --family nor --q/--m
}

TEST_CASE("component output is stable and sized by the dimension") {
    RunResult first = run_cli("component --q 2 --m 3 --i 1");
    CHECK(first.code == 0);
    std::vector<std::string> lines = lines_of(first.out);
    REQUIRE(lines.size() == 4);  // dim line plus three basis rows
    CHECK(lines[0] == "dim 3");
    CHECK(run_cli("component --q 2 --m 3 --i 1").out == first.out);

    RunResult ternary = run_cli("component --q 3 --m 3 --i 9");
    CHECK(lines_of(ternary.out).size() == 9);
    CHECK(lines_of(ternary.out)[0] == "dim 8");
}

TEST_CASE("build, switch, and verify chain together") {
    std::string lam = file_path("pair.lam");
    write_file(lam, "3 3 2 ternary\n111\n222\n");
    std::string fam = file_path("pair.fam");

    RunResult build = run_cli("build --lambda " + lam + " --out " + fam);
    CHECK(build.code == 0);
    std::string fam_text = read_file(fam);
    std::vector<std::string> fam_lines = lines_of(fam_text);
    REQUIRE(fam_lines.size() == 3);
    CHECK(fam_lines[0] == "3 3 13 2 0");
    CHECK(starts_with(fam_lines[1], "9 1 "));
    CHECK(starts_with(fam_lines[2], "9 2 "));

    CHECK(run_cli("verify admissible --family " + fam).code == 0);
    CHECK(starts_with(run_cli("verify admissible --family " + fam).out, "admissible"));

    // enumerate the switched code twice; 59049 data lines, zero included
    std::string t1 = file_path("T1.txt");
    std::string t2 = file_path("T2.txt");
    CHECK(run_cli("switch --family " + fam + " --enumerate --out " + t1).code == 0);
    CHECK(run_cli("switch --family " + fam + " --enumerate --out " + t2).code == 0);
    std::string listing = read_file(t1);
    CHECK(listing == read_file(t2));
    std::vector<std::string> t_lines = lines_of(listing);
    REQUIRE(t_lines.size() == 59050);
    CHECK(t_lines[0] == "3 3 13");
    bool has_zero = false;
    for (size_t i = 1; i < t_lines.size(); ++i) has_zero = has_zero || t_lines[i] == "0000000000000";
    CHECK(has_zero);

    // without --enumerate the family itself is the oracle description
    RunResult descriptor = run_cli("switch --family " + fam);
    CHECK(descriptor.code == 0);
    CHECK(starts_with(descriptor.out, "#"));
    CHECK(descriptor.out.find("3 3 13 2 0\n") != std::string::npos);

    // the switched code is perfect, exhaustively over 3^13 vectors
    RunResult perfect = run_cli("verify perfect --family " + fam);
    CHECK(perfect.code == 0);
    CHECK(starts_with(perfect.out, "perfect exhaustive pass - 1594323 "));

    RunResult sampled = run_cli("verify perfect --family " + fam +
                                " --mode sampled --seed 11 --samples 5000");
    CHECK(sampled.code == 0);
    CHECK(starts_with(sampled.out, "perfect sampled pass 11 5000 "));

    RunResult mindist = run_cli("verify mindist --family " + fam);
    CHECK(mindist.code == 0);
    CHECK(starts_with(mindist.out, "mindist 3"));

    RunResult embed = run_cli("verify embed --family " + fam + " --lambda " + lam + " --strong");
    CHECK(embed.code == 0);
    std::vector<std::string> embed_lines = lines_of(embed.out);
    REQUIRE(embed_lines.size() == 2);
    CHECK(starts_with(embed_lines[0], "embed-weak exhaustive pass - 3 "));
    CHECK(starts_with(embed_lines[1], "embed-strong exhaustive pass - 27 "));
}

TEST_CASE("verify perfect on the plain code works from q and m") {
    RunResult rep = run_cli("verify perfect --q 2 --m 4");
    CHECK(rep.code == 0);
    CHECK(starts_with(rep.out, "perfect exhaustive pass - 32768 "));
    CHECK(starts_with(run_cli("verify mindist --q 2 --m 4").out, "mindist 3"));
}

TEST_CASE("the cap stops exhaustive scans with exit two") {
    CHECK(run_cli("verify perfect --q 2 --m 5 --cap 1000").code == 2);
}

TEST_CASE("short-code violations are property failures, not usage errors") {
    std::string lam = file_path("bad.lam");
    write_file(lam, "3 3 1 ternary\n110\n");
    RunResult build = run_cli("build --lambda " + lam);
    CHECK(build.code == 1);
    CHECK(build.out.find("110") != std::string::npos);

    // forcing past validation still trips the representative-span guard,
    // because this particular word lifts onto a line through its anchor
    RunResult forced = run_cli("build --lambda " + lam + " --force");
    CHECK(forced.code == 1);
    CHECK(forced.out.find("representative") != std::string::npos);
}

TEST_CASE("duplicated family entries are flagged as inadmissible") {
    std::string lam = file_path("pair2.lam");
    write_file(lam, "3 3 2 ternary\n111\n222\n");
    std::string fam = file_path("pair2.fam");
    REQUIRE(run_cli("build --lambda " + lam + " --out " + fam).code == 0);

    std::vector<std::string> fam_lines = lines_of(read_file(fam));
    REQUIRE(fam_lines.size() == 3);
    std::string dup = file_path("dup.fam");
    write_file(dup, "3 3 13 3 0\n" + fam_lines[1] + "\n" + fam_lines[1] + "\n" + fam_lines[2] + "\n");

    RunResult verdict = run_cli("verify admissible --family " + dup);
    CHECK(verdict.code == 1);
    CHECK(starts_with(verdict.out, "not admissible"));

    // switching such a family must refuse as well
    CHECK(run_cli("switch --family " + dup + " --enumerate").code == 1);
}

TEST_CASE("corrupt family files are usage errors") {
    std::string broken = file_path("broken.fam");
    write_file(broken, "3 3 13 1 0\n9 1 1000000000000\n");  // not a codeword
    CHECK(run_cli("verify admissible --family " + broken).code == 2);
    CHECK(run_cli("switch --family " + broken).code == 2);
    CHECK(run_cli("verify admissible --family " + file_path("missing.fam")).code == 2);
}

TEST_CASE("build writes the family to stdout when no output path is given") {
    std::string lam = file_path("solo.lam");
    write_file(lam, "2 4 1 general\n1111\n");
    RunResult build = run_cli("build --lambda " + lam);
    CHECK(build.code == 0);
    std::vector<std::string> lines = lines_of(build.out);
    REQUIRE(lines.size() == 2);
    CHECK(lines[0] == "2 4 15 1 0");
    CHECK(starts_with(lines[1], "15 1 "));
}
