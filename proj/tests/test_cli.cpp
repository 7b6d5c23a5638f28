#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gksum/cli.hpp"
#include "test_util.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = gksum::cli::run(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct TempDir {
    fs::path path;
    TempDir() : path(fs::temp_directory_path() / "gksum-cli-test") {
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("cli eval prints fixed-precision values") {
    RunResult r = run_cli({"eval", "--m", "5", "--omega", "2", "--a", "1", "--b", "1"});
    CHECK(r.code == 0);
    CHECK(r.out == "0.381966011250, 0.000000000000\n");

    // Identical argv -> byte-identical stdout.
    RunResult r2 = run_cli({"eval", "--m", "5", "--omega", "2", "--a", "1", "--b", "1"});
    CHECK(r.out == r2.out);
}

TEST_CASE("cli usage errors exit 2") {
    CHECK(run_cli({"eval", "--m", "5"}).code == 2);
    CHECK(run_cli({"nonsense"}).code == 2);
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"verify", "no-such-suite"}).code == 2);
    CHECK(run_cli({"eval", "--m", "10", "--omega", "4", "--a", "0", "--b", "0"}).code == 2);
    CHECK(run_cli({"grid", "--m", "30000", "--omega", "7", "--out", "/tmp/x.csv"}).code == 2);
}

TEST_CASE("cli help exits 0") {
    RunResult r = run_cli({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("eval") != std::string::npos);
}

TEST_CASE("cli spider table") {
    RunResult r = run_cli({"spider", "--rows", "6"});
    CHECK(r.code == 0);
    CHECK(r.out.find("9349") != std::string::npos);
    CHECK(r.out.find("3571") != std::string::npos);
    int lines = 0;
    for (char c : r.out) lines += c == '\n';
    CHECK(lines == 7);  // header + six entries

    RunResult csv = run_cli({"spider", "--rows", "6", "--csv"});
    CHECK(csv.out.rfind("n,p,lucas,phi\n", 0) == 0);
    CHECK(csv.out.find("7,17,3571,3570\n") != std::string::npos);
}

TEST_CASE("cli decompose") {
    RunResult r = run_cli({"decompose", "--m1", "199", "--m2", "22", "--omega", "291", "--a",
                           "17", "--b", "5"});
    CHECK(r.code == 0);
    CHECK(r.out.find("left = ") != std::string::npos);
    CHECK(r.out.find("right = ") != std::string::npos);
    CHECK(r.out.find("product = ") != std::string::npos);

    // The printed product matches a direct evaluation to the identity tolerance.
    RunResult direct = run_cli({"eval", "--m", "4378", "--omega", "291", "--a", "17", "--b",
                                "5"});
    auto parse_pair = [](const std::string& line) {
        double re = 0.0, im = 0.0;
        std::sscanf(line.c_str(), "%lf, %lf", &re, &im);
        return std::complex<double>{re, im};
    };
    std::complex<double> product =
        parse_pair(r.out.substr(r.out.find("product = ") + 10));
    std::complex<double> expect = parse_pair(direct.out);
    CHECK(std::abs(product - expect) <= 1e-8);
}

TEST_CASE("cli grid and plot pipeline") {
    TempDir tmp;
    fs::path csv = tmp.path / "grid22.csv";
    fs::path svg = tmp.path / "grid22.svg";

    RunResult g = run_cli({"grid", "--m", "22", "--omega", "5", "--out", csv.string()});
    CHECK(g.code == 0);
    CHECK(g.out.empty());  // results never go to stdout
    std::string data = slurp(csv);
    CHECK(data.rfind("a,b,re,im,class\n", 0) == 0);

    RunResult p = run_cli({"plot", "--in", csv.string(), "--scheme", "sum-mod-k", "--k", "22",
                           "--out", svg.string()});
    CHECK(p.code == 0);
    std::string doc = slurp(svg);
    CHECK(testutil::xml_well_formed(doc));

    // Determinism: the same pipeline produces identical bytes.
    fs::path svg2 = tmp.path / "grid22-again.svg";
    run_cli({"plot", "--in", csv.string(), "--scheme", "sum-mod-k", "--k", "22", "--out",
             svg2.string()});
    CHECK(doc == slurp(svg2));

    // Column restriction.
    fs::path col = tmp.path / "col.csv";
    RunResult c = run_cli({"grid", "--m", "22", "--omega", "5", "--b", "3", "--out",
                           col.string()});
    CHECK(c.code == 0);
    int rows = -1;  // header
    std::string cdata = slurp(col);
    for (char ch : cdata) rows += ch == '\n';
    CHECK(rows == 22);

    // Overlay + order-selected subgroup.
    fs::path csv7 = tmp.path / "grid7.csv";
    fs::path svg7 = tmp.path / "grid7.svg";
    CHECK(run_cli({"grid", "--m", "7", "--order", "3", "--out", csv7.string()}).code == 0);
    CHECK(run_cli({"plot", "--in", csv7.string(), "--scheme", "constant",
                   "--overlay-hypocycloid", "3", "--out", svg7.string()})
              .code == 0);
    CHECK(testutil::xml_well_formed(slurp(svg7)));

    // Scheme parameter validation.
    CHECK(run_cli({"plot", "--in", csv7.string(), "--scheme", "sum-mod-k", "--out",
                   svg7.string()})
              .code == 2);
    CHECK(run_cli({"plot", "--in", csv7.string(), "--scheme", "bogus", "--out", svg7.string()})
              .code == 2);
}

TEST_CASE("cli grid determinism across thread counts") {
    TempDir tmp;
    std::string base;
    for (const char* threads : {"1", "2", "8"}) {
        fs::path out = tmp.path / (std::string("t") + threads + ".csv");
        RunResult r = run_cli({"grid", "--m", "199", "--order", "3", "--threads", threads,
                               "--out", out.string()});
        REQUIRE(r.code == 0);
        std::string data = slurp(out);
        if (base.empty())
            base = data;
        else
            CHECK(base == data);
    }
}

TEST_CASE("cli verify runs suites") {
    RunResult salie = run_cli({"verify", "salie"});
    CHECK(salie.code == 0);
    CHECK(salie.out.find("suite salie") != std::string::npos);
    CHECK(salie.out.find("FAIL") == std::string::npos);

    RunResult t3 = run_cli({"verify", "theorem3", "--p", "7"});
    CHECK(t3.code == 0);

    RunResult crt = run_cli({"verify", "crt"});
    CHECK(crt.code == 0);

    RunResult conj = run_cli({"verify", "conjecture-report", "--p", "13"});
    CHECK(conj.code == 0);
}
