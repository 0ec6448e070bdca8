#include <doctest.h>

#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace {

const std::string golden_dir = BNKIT_GOLDEN_DIR;

// Whitespace split with double-quoted groups.
std::vector<std::string> split_args(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    bool quoted = false, any = false;
    for (char c : line) {
        if (c == '"') {
            quoted = !quoted;
            any = true;
        } else if (!quoted && (c == ' ' || c == '\t')) {
            if (any) out.push_back(cur);
            cur.clear();
            any = false;
        } else {
            cur += c;
            any = true;
        }
    }
    if (any) out.push_back(cur);
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string trim_copy(const std::string& s) {
    const auto b = s.find_first_not_of(" \t");
    const auto e = s.find_last_not_of(" \t");
    return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run invoke(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = bnkit::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("golden outputs") {
    std::ifstream cases(golden_dir + "/cases.txt");
    REQUIRE(cases.good());
    std::string line;
    int n = 0;
    while (std::getline(cases, line)) {
        if (trim_copy(line).empty() || line[0] == '#') continue;
        const auto p1 = line.find('|');
        const auto p2 = line.find('|', p1 + 1);
        const std::string name = trim_copy(line.substr(0, p1));
        const int code = std::stoi(trim_copy(line.substr(p1 + 1, p2 - p1 - 1)));
        const Run r = invoke(split_args(trim_copy(line.substr(p2 + 1))));
        CAPTURE(name);
        CHECK(r.code == code);
        CHECK(r.out == read_file(golden_dir + "/" + name + ".out"));
        if (code != 0) {
            // one-line diagnostic
            CHECK_FALSE(r.err.empty());
            CHECK(r.err.find('\n') == r.err.size() - 1);
        }
        ++n;
    }
    CHECK(n >= 40);
}

TEST_CASE("search output is identical across thread counts") {
    const std::vector<std::string> base{"chain", "search", "-g", "4", "-r", "1", "-d", "3", "--format", "json"};
    auto threaded = base;
    threaded.insert(threaded.end(), {"--threads", "4"});
    const Run a = invoke(base);
    const Run b = invoke(threaded);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(invoke(base).out == a.out);
}

TEST_CASE("help exits cleanly") {
    const Run r = invoke({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("chain") != std::string::npos);
}

TEST_CASE("csv and table formats for every scalar command") {
    const Run csv = invoke({"rho", "-g", "8", "-r", "2", "-d", "7", "--format", "csv"});
    CHECK(csv.out == "result\n-1\n");
    const Run bad = invoke({"rho", "-g", "8", "-r", "2", "-d", "7", "--format", "xml"});
    CHECK(bad.code == 2);
}
