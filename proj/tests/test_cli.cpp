#include "trisim/cli.hpp"
#include "trisim/serialize.hpp"

#include <doctest.h>

#include <sstream>

using namespace trisim;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(TRISIM_FIXTURES) + "/" + name; }

}  // namespace

TEST_CASE("charpoly forms") {
    CHECK(run({"charpoly", "--n", "4", "--form", "product"}).out ==
          "{\"factors\":[{\"root\":\"3\",\"mult\":1},{\"root\":\"5\",\"mult\":2}]}\n");
    CHECK(run({"charpoly", "--n", "4", "--form", "expanded"}).out == "[\"-75\",\"55\",\"-13\",\"1\"]\n");
    CHECK(run({"charpoly", "--n", "4", "--form", "conjecture"}).out == "[\"-75\",\"55\",\"-13\",\"1\"]\n");
    CHECK(run({"charpoly", "--n", "4"}).out == run({"charpoly", "--n", "4", "--form", "product"}).out);

    const Run bad = run({"charpoly", "--n", "1"});
    CHECK(bad.code == kExitUsage);
    CHECK(bad.out.empty());
    CHECK(Json::parse(bad.err)["error"] == "input");
    CHECK(run({"charpoly", "--n", "4", "--form", "weird"}).code == kExitUsage);
}

TEST_CASE("verify") {
    const Run r = run({"verify", "--n-max", "5"});
    CHECK(r.code == kExitPass);
    std::istringstream lines(r.out);
    std::string line;
    long expected_n = 2;
    while (std::getline(lines, line)) {
        const Json j = Json::parse(line);
        CHECK(j["n"] == expected_n);
        CHECK(j["status"] == "pass");
        CHECK(j["triangular"]["status"] == "pass");
        ++expected_n;
    }
    CHECK(expected_n == 6);
    CHECK(r.err.find("4/4 passed") != std::string::npos);
    CHECK(run({"verify", "--n-max", "1"}).code == kExitUsage);
}

TEST_CASE("conjugate") {
    const Run r = run({"conjugate", "--file", fixture("ctilde4.json")});
    CHECK(r.code == kExitPass);
    const Json j = Json::parse(r.out);
    CHECK(j["lower_bidiagonal"] == true);
    CHECK(j["conjugate"]["entries"][1][0] == "-3");
    CHECK(j["conjugate"]["entries"][1][1] == "4");
    CHECK(run({"conjugate", "--file", fixture("c4_poly.json")}).code == kExitUsage);
    CHECK(run({"conjugate", "--file", fixture("missing.json")}).code == kExitUsage);
}

TEST_CASE("family actions") {
    const Run ok = run({"family", "--action", "check", "--file", fixture("ctilde_family4.json")});
    CHECK(ok.code == kExitPass);
    CHECK(ok.out == "{\"status\":\"pass\",\"lambda\":[\"3\",\"1\",\"-1\"]}\n");

    const Run bad = run({"family", "--action", "check", "--file", fixture("perturbed_family4.json")});
    CHECK(bad.code == kExitCheckFailed);
    const Json witness = Json::parse(bad.out)["not_constant"];
    CHECK(witness["k"] == 0);
    CHECK(Json::parse(bad.err)["error"] == "not_constant");

    const Run zero = run({"family", "--action", "conjugate", "--file", fixture("zero_family3.json")});
    CHECK(zero.code == kExitPass);
    const Json z = Json::parse(zero.out);
    CHECK(z["lambda"] == Json::parse(R"(["0","0"])"));
    CHECK(z["conjugate"]["entries"][0][0] == "5/2");
    CHECK(z["conjugate"]["kind"] == "rat");

    const Run elim = run({"family", "--action", "eliminate", "--file", fixture("ctilde_family4.json")});
    CHECK(elim.code == kExitPass);
    CHECK(Json::parse(elim.out)["B"] == Json::parse(R"(["0","0","-3"])"));

    CHECK(run({"family", "--action", "check", "--file", fixture("bad_b1_family.json")}).code == kExitUsage);
    CHECK(run({"family", "--action", "check"}).code == kExitUsage);
    CHECK(run({"family", "--file", fixture("ctilde_family4.json")}).code == kExitUsage);

    const Run gen = run({"family", "--action", "generate", "--n", "4", "--seed", "9"});
    CHECK(gen.code == kExitPass);
    CHECK(gen.out == run({"family", "--action", "generate", "--n", "4", "--seed", "9"}).out);
    CHECK(verify_family(family_from_json(Json::parse(gen.out))).pass);
}

TEST_CASE("oracle") {
    CHECK(run({"oracle", "--file", fixture("ctilde4.json")}).out ==
          "{\"charpoly\":[\"0\",\"-36\",\"33\",\"-10\",\"1\"]}\n");
    CHECK(run({"oracle", "--file", fixture("c4_poly.json")}).out == "{\"det\":[\"-75\",\"55\",\"-13\",\"1\"]}\n");
}

TEST_CASE("birkhoff") {
    CHECK(run({"birkhoff", "--n", "3", "--t", "2", "--method", "both"}).out ==
          "{\"n\":3,\"t\":2,\"count\":\"21\",\"agreement\":true}\n");
    CHECK(run({"birkhoff", "--n", "5", "--t", "1"}).out == "{\"n\":5,\"t\":1,\"count\":\"120\"}\n");
    CHECK(run({"birkhoff", "--n", "5", "--t", "1", "--method", "brute"}).code == kExitUsage);
    CHECK(run({"birkhoff", "--n", "0", "--t", "1"}).code == kExitUsage);
}

TEST_CASE("identities") {
    const Run r = run({"identities", "--n-max", "20"});
    CHECK(r.code == kExitPass);
    CHECK(Json::parse(r.out)["status"] == "pass");
    CHECK(run({"identities", "--n-max", "0"}).code == kExitUsage);
}

TEST_CASE("usage errors") {
    CHECK(run({}).code == kExitUsage);
    CHECK(run({"nonsense"}).code == kExitUsage);
    CHECK(run({"charpoly", "--n", "abc"}).code == kExitUsage);
    CHECK(run({"--help"}).code == kExitPass);
}

TEST_CASE("output is byte-identical across runs") {
    const std::vector<std::vector<std::string>> commands = {
        {"charpoly", "--n", "9", "--form", "expanded"},
        {"verify", "--n-max", "25"},
        {"family", "--action", "conjugate", "--file", fixture("ctilde_family4.json")},
        {"birkhoff", "--n", "4", "--t", "3", "--method", "both"},
    };
    for (const auto& c : commands) {
        const Run a = run(c);
        const Run b = run(c);
        CHECK(a.code == b.code);
        CHECK(a.out == b.out);
        CHECK(a.err == b.err);
    }
}
