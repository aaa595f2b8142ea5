#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "bellforge/io.hpp"

using namespace bellforge;

namespace {

const std::string kCli = BELLFORGE_CLI_PATH;

int run(const std::string &args) {
    const int status = std::system((kCli + " " + args + " > /dev/null 2>&1").c_str());
    return WEXITSTATUS(status);
}

std::string slurp(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string tmp_path(const std::string &name) {
    return std::string("/tmp/bellforge_test_") + name;
}

void write(const std::string &path, const std::string &content) {
    std::ofstream out(path, std::ios::binary);
    out << content;
}

}  // namespace

TEST_CASE("state file round trip is exact") {
    Rng rng(11);
    for (int k = 0; k < 50; ++k) {
        StateFile sf;
        sf.state = random_pure(rng);
        sf.label = "roundtrip";
        const StateFile back = parse_state_file(serialize_state_file(sf));
        REQUIRE(back.is_pure());
        const auto &a = std::get<PureState2Q>(sf.state);
        const auto &b = std::get<PureState2Q>(back.state);
        for (int i = 0; i < 4; ++i) CHECK(a.c[static_cast<size_t>(i)] == b.c[static_cast<size_t>(i)]);
    }
    StateFile mixed;
    mixed.state = Density2Q{ginibre_density(rng)};
    const StateFile back = parse_state_file(serialize_state_file(mixed));
    REQUIRE(!back.is_pure());
    CHECK(max_abs_diff(std::get<Density2Q>(mixed.state).m, std::get<Density2Q>(back.state).m) == 0.0);
}

TEST_CASE("parse errors are distinguished from invalid states") {
    CHECK_THROWS_AS(parse_state_file("not json"), ParseError);
    CHECK_THROWS_AS(parse_state_file("{\"kind\":\"pure\"}"), ParseError);
    CHECK_THROWS_AS(
        parse_state_file("{\"kind\":\"pure\",\"amplitudes\":[[1,0],[1,0],[0,0],[0,0]]}"),
        InvalidStateError);
}

TEST_CASE("cli step reports success and failure with the right exit codes") {
    const std::string bell = tmp_path("bell.json");
    StateFile sf;
    sf.state = bell_state(BellState::PhiPlus);
    save_state_file(sf, bell);
    CHECK(run("step " + bell) == 0);

    const std::string zero = tmp_path("zero.json");
    sf.state = PureState2Q{1, 0, 0, 0};
    save_state_file(sf, zero);
    CHECK(run("step " + zero) == 4);

    const std::string garbage = tmp_path("garbage.json");
    write(garbage, "{broken");
    CHECK(run("step " + garbage) == 2);

    const std::string invalid = tmp_path("invalid.json");
    write(invalid, "{\"kind\":\"pure\",\"amplitudes\":[[2,0],[0,0],[0,0],[0,0]]}");
    CHECK(run("step " + invalid) == 3);
}

TEST_CASE("cli concentrate handles blind spots and scrambling") {
    const std::string blind = tmp_path("blind.json");
    StateFile sf;
    sf.state = PureState2Q{0.5, 0.5, 0.5, -0.5};
    save_state_file(sf, blind);
    CHECK(run("concentrate " + blind) == 4);
    CHECK(run("concentrate " + blind + " --scramble --seed 7") == 0);

    // Mixed input is rejected with exit 3.
    const std::string mixed = tmp_path("mixed.json");
    Rng rng(5);
    sf.state = Density2Q{ginibre_density(rng)};
    save_state_file(sf, mixed);
    CHECK(run("concentrate " + mixed) == 3);
}

TEST_CASE("cli distill runs on generated noisy Bell input") {
    CHECK(run("distill --generate bell --epsilon 0.05 --noise white --steps 2 --seed 3") == 0);
}

TEST_CASE("cli sample and sweep are byte-deterministic under a fixed seed") {
    const std::string out1 = tmp_path("sample1.csv"), out2 = tmp_path("sample2.csv");
    REQUIRE(run("sample --trials 500 --seed 99 --out " + out1) == 0);
    REQUIRE(run("sample --trials 500 --seed 99 --out " + out2) == 0);
    CHECK(slurp(out1) == slurp(out2));

    const std::string spec = tmp_path("sweep.json");
    write(spec,
          "{\"base_state\":\"haar-random\",\"noise\":\"ginibre\",\"epsilons\":[0.01,0.02,0.04],"
          "\"steps\":3,\"sign\":\"+\",\"trials\":30,\"seed\":1234}");
    const std::string s1 = tmp_path("sweep1.csv"), s2 = tmp_path("sweep2.csv");
    REQUIRE(run("sweep " + spec + " --out " + s1) == 0);
    REQUIRE(run("sweep " + spec + " --out " + s2) == 0);
    CHECK(slurp(s1) == slurp(s2));
}

TEST_CASE("BELLFORGE_SEED provides the default seed") {
    const std::string out1 = tmp_path("env1.csv"), out2 = tmp_path("env2.csv");
    const std::string cmd1 =
        "BELLFORGE_SEED=55 " + kCli + " sample --trials 100 --out " + out1 + " > /dev/null";
    const std::string cmd2 = kCli + " sample --trials 100 --seed 55 --out " + out2 + " > /dev/null";
    REQUIRE(WEXITSTATUS(std::system(cmd1.c_str())) == 0);
    REQUIRE(WEXITSTATUS(std::system(cmd2.c_str())) == 0);
    CHECK(slurp(out1) == slurp(out2));
}
