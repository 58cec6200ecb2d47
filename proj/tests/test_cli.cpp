// Black-box tests of the command-line binary: exit codes, stream
// separation, and byte-level stability of JSON output.
#include <array>
#include <cstdio>
#include <cstdlib>
#include <regex>
#include <string>

namespace {

int failures = 0;

#define EXPECT(cond)                                                        \
    do {                                                                    \
        if (!(cond)) {                                                      \
            std::fprintf(stderr, "FAIL %s:%d: %s\n", __FILE__, __LINE__,    \
                         #cond);                                            \
            ++failures;                                                     \
        }                                                                   \
    } while (0)

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    RunResult res;
    std::string cmd = std::string(NORMCERT_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return res;
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        res.out.append(buf.data(), got);
    int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

std::string strip_duration(const std::string& json) {
    static const std::regex duration("\"duration_ms\": [0-9]+");
    return std::regex_replace(json, duration, "\"duration_ms\": 0");
}

}  // namespace

int main() {
    // Exit codes: nondegenerate -> 0.
    EXPECT(run("check --group 4 --format json").exit_code == 0);
    EXPECT(run("check --group 2x2").exit_code == 0);
    EXPECT(run("check --group 5 --basis perm").exit_code == 0);

    // Degenerate -> 1, and the verdict is in the payload.
    auto deg = run("check --group 6 --format json");
    EXPECT(deg.exit_code == 1);
    EXPECT(deg.out.find("\"verdict\": \"degenerate\"") != std::string::npos);

    // Usage errors -> 2.
    EXPECT(run("check --group 0").exit_code == 2);
    EXPECT(run("check --group 6 --basis banana").exit_code == 2);
    EXPECT(run("check").exit_code == 2);
    EXPECT(run("frobnicate").exit_code == 2);
    EXPECT(run("").exit_code == 2);
    EXPECT(run("matrix --group 4 --format yaml").exit_code == 2);
    EXPECT(run("check --group 6 --format csv").exit_code == 2);
    EXPECT(run("lemma2 --dim 3 --v1 abc").exit_code == 2);
    EXPECT(run("certify-prime --p 10").exit_code == 2);

    // Failed witness verification -> 3, report still printed.
    auto wit = run("witness --group 9 --format json");
    EXPECT(wit.exit_code == 3);
    EXPECT(wit.out.find("\"verified_zero\": false") != std::string::npos);

    // Help exits 0.
    EXPECT(run("--help").exit_code == 0);
    EXPECT(run("check --help").exit_code == 0);

    // Successful informational commands -> 0.
    EXPECT(run("matrix --group 5 --format csv").exit_code == 0);
    EXPECT(run("certify-prime --p 5 --format json").exit_code == 0);
    EXPECT(run("lemma2 --dim 4 --v1 0001").exit_code == 0);
    EXPECT(run("sweep --max-order 5 --format json").exit_code == 0);

    // JSON output is byte-identical across runs apart from duration.
    for (const char* args :
         {"matrix --group 2x2 --format json", "check --group 6 --format json",
          "witness --group 8 --format json",
          "certify-prime --p 3 --format json",
          "lemma2 --dim 2 --v1 11 --format json",
          "sweep --max-order 6 --format json"}) {
        auto a = run(args);
        auto b = run(args);
        EXPECT(a.exit_code == b.exit_code);
        EXPECT(!a.out.empty());
        EXPECT(strip_duration(a.out) == strip_duration(b.out));
        EXPECT(a.out.find("duration_ms") != std::string::npos);
    }

    // Per-format agreement: the CSV matrix equals the JSON entries.
    auto csv = run("matrix --group 2 --format csv");
    EXPECT(csv.out == "0,1\n1,0\n");

    if (failures == 0) std::printf("cli: all checks passed\n");
    return failures == 0 ? 0 : 1;
}
