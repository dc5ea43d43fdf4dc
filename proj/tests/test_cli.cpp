#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <doctest.h>

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

std::string cli_path() {
    const char* p = std::getenv("MQROT_CLI");
    REQUIRE_MESSAGE(p != nullptr, "MQROT_CLI must point at the mqrot binary");
    return p;
}

RunResult run(const std::string& args) {
    const std::string cmd = cli_path() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

std::string second_line_field(const std::string& csv, int field) {
    std::istringstream in(csv);
    std::string line;
    int data_lines = 0;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (++data_lines == 2) break;  // header is line 1
    }
    std::istringstream row(line);
    std::string cell;
    for (int i = 0; i <= field; ++i) std::getline(row, cell, ',');
    return cell;
}

}  // namespace

TEST_CASE("spectrum closed-form row") {
    auto r = run("spectrum --m 1 --theta 1 --Omega 1 --n 1 --l 0");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("n,l,root_index,branch,xi_star,delta,omega,energy") != std::string::npos);
    // omega+ and E for the plus branch
    CHECK(std::stod(second_line_field(r.out, 6)) == doctest::Approx(2.4721359549995794));
    CHECK(std::stod(second_line_field(r.out, 7)) == doctest::Approx(4.0));
}

TEST_CASE("landau limit spectrum") {
    auto r = run("spectrum --theta 0 --omega 2 --Omega 0 --landau-limit --nr 0 --l 0");
    CHECK(r.exit_code == 0);
    CHECK(std::stod(second_line_field(r.out, 7)) == doctest::Approx(1.0));
}

TEST_CASE("roots output") {
    auto r = run("roots --n 1 --l 0");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("1.41421356237309") != std::string::npos);

    auto r3 = run("roots --n 3 --l 0");
    CHECK(r3.out.find("1.70645612") != std::string::npos);
    CHECK(r3.out.find("6.08999240") != std::string::npos);

    auto r2 = run("roots --n 1 --l 2");
    CHECK(r2.out.find("3.16227766") != std::string::npos);
}

TEST_CASE("wavefunction values") {
    auto r = run("wavefunction --theta 1 --Omega 1 --n 1 --l 0 --samples 11 --r-max 10");
    CHECK(r.exit_code == 0);
    // F(0) = 1 from c_0
    CHECK(std::stod(second_line_field(r.out, 1)) == doctest::Approx(1.0));

    auto r1 = run("wavefunction --theta 1 --Omega 1 --n 1 --l 1 --samples 11 --r-max 10");
    CHECK(std::stod(second_line_field(r1.out, 1)) == doctest::Approx(0.0));
}

TEST_CASE("exit codes") {
    CHECK(run("spectrum --m -1 --theta 1 --n 1 --l 0").exit_code == 2);
    CHECK(run("spectrum --theta 1 --n 0..0 --l 0").exit_code == 2);
    CHECK(run("badcommand").exit_code == 2);
    // theta = 0 without --landau-limit: the constraint is vacuous
    CHECK(run("spectrum --theta 0 --n 1 --l 0").exit_code == 2);
}

TEST_CASE("verify oscillator and detuning") {
    auto ok = run("verify --oscillator --l 0 --n-points 1000");
    CHECK(ok.exit_code == 0);
    auto bad = run("verify --theta 1 --Omega 1 --n 1 --l 0 --n-points 1000 --xi-override 1.05");
    CHECK(bad.exit_code == 4);
}

TEST_CASE("config file with flag override") {
    const std::string cfg = "/tmp/mqrot_test_cfg.txt";
    {
        std::ofstream f(cfg);
        f << "theta = 2\nOmega = 1\nn = 1\nl = 0\n";
    }
    auto from_cfg = run("spectrum --config " + cfg);
    CHECK(from_cfg.exit_code == 0);
    auto overridden = run("spectrum --config " + cfg + " --theta 1");
    auto direct = run("spectrum --theta 1 --Omega 1 --n 1 --l 0");
    CHECK(overridden.out == direct.out);
    CHECK(from_cfg.out != direct.out);
}

TEST_CASE("json round trip is bit-identical") {
    const std::string j1 = "/tmp/mqrot_rt1.json", j2 = "/tmp/mqrot_rt2.json";
    auto a = run("spectrum --theta 1 --Omega 1 --n 1..3 --l -2..2 --format json --out " + j1);
    CHECK(a.exit_code == 0);
    auto b = run("spectrum --from-json " + j1 + " --format json --out " + j2);
    CHECK(b.exit_code == 0);
    std::ifstream f1(j1), f2(j2);
    std::stringstream s1, s2;
    s1 << f1.rdbuf();
    s2 << f2.rdbuf();
    CHECK(s1.str() == s2.str());
}

TEST_CASE("sweep") {
    auto r = run("sweep --theta 1 --Omega 1 --n 1..2 --l -1..1 --jobs 4");
    CHECK(r.exit_code == 0);
    // 2 levels x 3 l values x 1 root x 2 branches
    int rows = 0;
    std::istringstream in(r.out);
    std::string line;
    while (std::getline(in, line))
        if (!line.empty() && line[0] != '#') ++rows;
    CHECK(rows == 1 + 12);

    auto det1 = run("sweep --theta 1 --Omega-list 0.1 --Omega-list 1 --Omega-list 10 --n 1 --l 1 --jobs 3");
    auto det2 = run("sweep --theta 1 --Omega-list 0.1 --Omega-list 1 --Omega-list 10 --n 1 --l 1 --jobs 1");
    CHECK(det1.out == det2.out);
}
