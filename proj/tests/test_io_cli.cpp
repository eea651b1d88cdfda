#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

#include "cuntz/cli.hpp"
#include "cuntz/io.hpp"
#include "cuntz/parse.hpp"
#include "cuntz/sections.hpp"
#include "support/oracle.hpp"

using namespace cuntz;

namespace {

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("cuntz_test_" + std::to_string(std::random_device{}()));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

} // namespace

TEST_CASE("matrix CSV round trip is exact on integer sections") {
    TempDir tmp;
    const CMatrix m = element_matrix(parse_element("S0 S1^* + S1", 2), 16);
    write_matrix_csv(tmp.file("m.csv"), m);
    const CMatrix back = read_matrix_csv(tmp.file("m.csv"));
    REQUIRE(back.rows() == 16);
    CHECK(max_abs_diff(m, back) == 0.0);
}

TEST_CASE("matrix CSV round trip keeps complex doubles bit-exact") {
    TempDir tmp;
    std::mt19937_64 rng(81);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<Triplet> t;
    for (long long k = 0; k < 20; ++k)
        t.push_back({k % 7, (3 * k) % 7, Cx(dist(rng), dist(rng))});
    const CMatrix m = CMatrix::from_triplets(7, 7, std::move(t));
    write_matrix_csv(tmp.file("m.csv"), m);
    const CMatrix back = read_matrix_csv(tmp.file("m.csv"));
    CHECK(max_abs_diff(m, back) == 0.0);
}

TEST_CASE("compact blocks are read from triplet CSV with inferred size") {
    TempDir tmp;
    {
        std::ofstream out(tmp.file("k.csv"));
        out << "row,col,re,im\n0,0,-1,0\n2,1,0.5,0.25\n";
    }
    const CMatrix k = read_matrix_csv(tmp.file("k.csv"));
    CHECK(k.rows() == 3);
    CHECK(k(0, 0) == Cx(-1, 0));
    CHECK(k(2, 1) == Cx(0.5, 0.25));
    CHECK_THROWS_AS(read_matrix_csv(tmp.file("missing.csv")), InputError);
}

TEST_CASE("cli: matrix command writes the section triplets") {
    TempDir tmp;
    const int rc = cli::run({"matrix", "--N", "2", "S0", "--n", "4", "--out", tmp.file("")});
    CHECK(rc == 0);
    // the triplet format stores entries only; readers infer the dimension
    const CMatrix m = read_matrix_csv(tmp.file("matrix.csv"));
    CHECK(m.nnz() == 2);
    CHECK(m(0, 0) == Cx(1, 0));
    CHECK(m(2, 1) == Cx(1, 0));
}

TEST_CASE("cli: stability verdict on a damped perturbation of the identity") {
    TempDir tmp;
    const int rc = cli::run({"stability", "--N", "2", "I + 0.5*S0", "--max-power", "5", "--out",
                             tmp.file("")});
    CHECK(rc == 0);
    std::ifstream in(tmp.file("stability.json"));
    std::string body((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(body.find("\"verdict\": \"stable\"") != std::string::npos);
    CHECK(body.find("\"version\": 1") != std::string::npos);
    CHECK(body.find("\"sizes\"") != std::string::npos);
    CHECK(body.find("\"sigma_min\"") != std::string::npos);
}

TEST_CASE("cli: fredholm with a compact corner") {
    TempDir tmp;
    {
        std::ofstream out(tmp.file("k.csv"));
        out << "row,col,re,im\n0,0,-1,0\n";
    }
    const int rc = cli::run({"fredholm", "--N", "2", "I", "--compact", tmp.file("k.csv"),
                             "--max-power", "6", "--out", tmp.file("")});
    CHECK(rc == 0);
    std::ifstream in(tmp.file("fredholm.json"));
    std::string body((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(body.find("\"alpha\": 1") != std::string::npos);
}

TEST_CASE("cli: input failures exit with code 2") {
    TempDir tmp;
    CHECK(cli::run({"stability", "--N", "2", "S7", "--out", tmp.file("")}) == 2);
    CHECK(cli::run({"no-such-command"}) == 2);
    CHECK(cli::run({"matrix", "--N", "2", "S0", "--n", "99999", "--out", tmp.file("")}) == 2);
}

TEST_CASE("cli: pseudospec grid file has one row per point") {
    TempDir tmp;
    const int rc = cli::run({"pseudospec", "--N", "2", "S0", "--n", "4", "--grid", "11", "--eps",
                             "0.3", "--out", tmp.file("")});
    CHECK(rc == 0);
    std::ifstream in(tmp.file("pseudospec.csv"));
    std::string line;
    std::getline(in, line);
    CHECK(line == "re,im,sigma_min,in_set");
    int rows = 0;
    while (std::getline(in, line))
        if (!line.empty()) ++rows;
    CHECK(rows == 121);
}

TEST_CASE("cli: lifting-check reports exact windows") {
    TempDir tmp;
    const int rc = cli::run({"lifting-check", "--N", "2", "S0", "--imax", "1", "--jmax", "1",
                             "--power", "5", "--out", tmp.file("")});
    CHECK(rc == 0);
    std::ifstream in(tmp.file("lifting_check.json"));
    std::string body((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(body.find("\"exact\": true") != std::string::npos);
    CHECK(body.find("\"exact\": false") == std::string::npos);
}

TEST_CASE("cli: fractal-check confirms the witness pattern") {
    TempDir tmp;
    const int rc = cli::run({"fractal-check", "--N", "2", "--max-n", "12", "--out", tmp.file("")});
    CHECK(rc == 0);
    std::ifstream in(tmp.file("fractal_check.csv"));
    std::string line;
    std::getline(in, line);
    CHECK(line == "n,witness_short,expected_short,witness_long,expected_long");
    int n = 0;
    while (std::getline(in, line)) {
        ++n;
        const std::string want = n % 2 == 1 ? "1,1" : "0,0";
        CHECK(line == std::to_string(n) + "," + want + "," + want);
    }
    CHECK(n == 12);
}

TEST_CASE("cli: reports are deterministic and --full keeps the sigma lists") {
    TempDir tmp;
    auto read = [&](const std::string& name) {
        std::ifstream in(tmp.file(name));
        return std::string((std::istreambuf_iterator<char>(in)),
                           std::istreambuf_iterator<char>());
    };
    REQUIRE(cli::run({"stability", "--N", "2", "S0 + 0.25*S1^*", "--max-power", "4", "--full",
                      "--out", tmp.file("")}) == 0);
    const std::string first = read("stability.json");
    REQUIRE(cli::run({"stability", "--N", "2", "S0 + 0.25*S1^*", "--max-power", "4", "--full",
                      "--out", tmp.file("")}) == 0);
    CHECK(first == read("stability.json"));
    CHECK(first.find("\"sigma\"") != std::string::npos);
}

TEST_CASE("cli: symbol and spectra commands") {
    TempDir tmp;
    CHECK(cli::run({"symbol", "--N", "2", "S0", "--blocks", "3", "--inner", "4", "--out",
                    tmp.file("")}) == 0);
    const CMatrix sym = read_matrix_csv(tmp.file("symbol.csv"));
    CHECK(sym.nnz() == 4);

    CHECK(cli::run({"spectra", "--N", "2", "S0 S0^*", "--max-power", "4", "--out",
                    tmp.file("")}) == 0);
    std::ifstream in(tmp.file("spectra_hausdorff.csv"));
    std::string header;
    std::getline(in, header);
    CHECK(header == "size,d_sigma2");
}
