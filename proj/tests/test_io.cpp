#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>

#include "skcf/classify.hpp"
#include "skcf/io.hpp"

namespace skcf {
namespace {

using io::json;

TEST(ScalarJson, Encoding) {
  EXPECT_EQ(io::to_json(Scalar::rational(-3, 4)).dump(), R"({"im":"0","re":"-3/4"})");
  EXPECT_EQ(io::to_json(ExtScalar::infinity()).dump(), R"("inf")");
  EXPECT_EQ(io::to_json(Scalar::approx(0.5, -1.0)).dump(), R"({"im":-1.0,"re":0.5})");
}

TEST(ScalarJson, Decoding) {
  EXPECT_EQ(io::scalar_from_json(json::parse(R"({"re": 2})")), Scalar(2));
  EXPECT_EQ(io::scalar_from_json(json::parse(R"({"re": "1/3", "im": -1})")),
            Scalar(GaussRational(mpq_class(1, 3), mpq_class(-1))));
  Scalar f = io::scalar_from_json(json::parse(R"({"re": 0.25})"));
  EXPECT_FALSE(f.is_exact());
  EXPECT_EQ(f.to_complex(), std::complex<double>(0.25, 0.0));
  EXPECT_TRUE(io::ext_from_json(json("inf")).is_inf());
  EXPECT_THROW(io::scalar_from_json(json::parse(R"({"re": "1/0"})")), InputError);
  EXPECT_THROW(io::scalar_from_json(json::parse(R"({"im": 1})")), InputError);
  EXPECT_THROW(io::scalar_from_json(json::parse(R"({"re": [1]})")), InputError);
}

TEST(StateJson, RoundTrip) {
  State s = State::from_ket("-2|001> + 1/2|100> + (1+2i)|112>", 2, 3);
  json j = io::to_json(s);
  EXPECT_EQ(j.at("dims"), json::parse("[2, 2, 3]"));
  EXPECT_EQ(io::state_from_json(j), s);
  EXPECT_EQ(io::state_from_json(json::parse(j.dump())), s);
}

TEST(StateJson, Errors) {
  EXPECT_THROW(io::state_from_json(json::parse(R"({"dims": [3, 2, 2], "amps": []})")), InputError);
  EXPECT_THROW(io::state_from_json(json::parse(R"({"dims": [2, 2], "amps": []})")), InputError);
  EXPECT_THROW(io::state_from_json(json::parse(R"({"dims": [2, 2, 2]})")), InputError);
  EXPECT_THROW(io::state_from_json(json::parse(R"({"dims": [2, 2, 2], "amps": [{"i": [0, 2, 0], "re": 1}]})")),
               InputError);
  EXPECT_THROW(io::state_from_json(json::parse(R"({"dims": [2, 2, 2], "amps": [{"i": [0, 0], "re": 1}]})")),
               InputError);
  EXPECT_THROW(io::state_from_json(json::parse(R"({"dims": [2, 0, 2], "amps": []})")), InputError);
}

TEST(FormJson, FieldsAndDeterminism) {
  CanonicalForm cf = find_registry("ABC-11")->form;
  json j = io::to_json(cf);
  EXPECT_EQ(j.at("eta"), json::parse(R"([{"sig": [1], "count": 1}, {"sig": [2], "count": 1}])"));
  EXPECT_EQ(j.at("xhat"), json::parse(R"([{"re": "0", "im": "0"}, {"re": "1", "im": "0"}])"));
  EXPECT_EQ(j.at("meta").at("mode"), "restricted");
  EXPECT_EQ(j.at("meta").at("snapped"), false);
  State s = state_of_pencil(parse_pencil_rows(find_registry("ABC-11")->pencil));
  EXPECT_EQ(io::to_json(canonicalize(s)).dump(), io::to_json(canonicalize(s)).dump());
}

TEST(StructureJson, Fields) {
  KroneckerStructure ks = kronecker_structure(parse_pencil_rows({"l m 0", "0 0 l"}));
  EXPECT_EQ(io::to_json(ks).dump(),
            R"({"eigs":[{"sizes":[1],"value":{"im":"0","re":"0"}}],"eps":[1],"g":0,"h":0,"nu":[]})");
  EXPECT_EQ(io::to_json(Lft(0, 1, 1, 0)).dump(),
            R"({"a":{"im":"0","re":"0"},"b":{"im":"0","re":"1"},"c":{"im":"0","re":"1"},"d":{"im":"0","re":"0"}})");
}

class Cli : public ::testing::Test {
 protected:
  static std::string write(const std::string& name, const std::string& body) {
    std::string path = ::testing::TempDir() + name;
    std::ofstream(path) << body;
    return path;
  }

  static int run(const std::string& args, std::string* out = nullptr) {
    std::string cmd = std::string(SKCF_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    std::string text;
    char buf[4096];
    for (std::size_t k; (k = fread(buf, 1, sizeof buf, pipe)) > 0;) text.append(buf, k);
    int status = pclose(pipe);
    if (out != nullptr) *out = text;
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }
};

const char* kGhz = R"({"dims":[2,2,2],"amps":[{"i":[0,1,1],"re":1},{"i":[1,1,1],"re":1},{"i":[1,0,0],"re":1}]})";
const char* kW = R"({"dims":[2,2,2],"amps":[{"i":[0,0,1],"re":1},{"i":[1,0,0],"re":1},{"i":[1,1,1],"re":1}]})";

TEST_F(Cli, CanonPrintsForm) {
  std::string out;
  EXPECT_EQ(run("canon " + write("ghz.json", kGhz), &out), 0);
  json j = json::parse(out);
  EXPECT_EQ(j.at("xhat").size(), 2u);
  EXPECT_EQ(j.at("eta"), json::parse(R"([{"sig": [1], "count": 2}])"));
  std::string again;
  run("canon " + write("ghz.json", kGhz), &again);
  EXPECT_EQ(out, again);
}

TEST_F(Cli, EquivExitCodes) {
  std::string ghz = write("ghz.json", kGhz), w = write("w.json", kW);
  EXPECT_EQ(run("equiv " + ghz + " " + ghz), 0);
  std::string out;
  EXPECT_EQ(run("equiv " + ghz + " " + w, &out), 1);
  EXPECT_EQ(out, "not equivalent\n");
  EXPECT_EQ(run("equiv " + ghz + " --mode all-triples " + ghz, &out), 0);
  EXPECT_EQ(out, "equivalent\n");
}

TEST_F(Cli, InputErrorsExitTwo) {
  EXPECT_EQ(run("canon " + write("bad.json", "{\"dims\": [2, 2]}")), 2);
  EXPECT_EQ(run("canon " + write("broken.json", "{not json")), 2);
  EXPECT_EQ(run("canon /nonexistent/state.json"), 2);
  EXPECT_EQ(run("canon " + write("ghz.json", kGhz) + " --tol -1"), 2);
  EXPECT_EQ(run("canon " + write("ghz.json", kGhz) + " --mode fastest"), 2);
  EXPECT_EQ(run("enumerate --m 4 --n 4"), 2);
  EXPECT_EQ(run("show ABC-99"), 2);
  EXPECT_EQ(run(""), 2);
}

TEST_F(Cli, EnumerateAndShow) {
  std::string out;
  EXPECT_EQ(run("enumerate --m 3 --n 6", &out), 0);
  json j = json::parse(out);
  ASSERT_EQ(j.size(), 1u);
  EXPECT_EQ(j[0].at("label"), "ABC-21");
  EXPECT_EQ(run("enumerate --m 2 --n 2 --all-ranks", &out), 0);
  EXPECT_EQ(json::parse(out).size(), 6u);
  EXPECT_EQ(run("show ABC-3 --format ket", &out), 0);
  EXPECT_EQ(out, "|001> + |100> + |112>\n");
  EXPECT_EQ(run("--format pencil show ABC-2", &out), 0);
  EXPECT_EQ(out, "[λ, μ]\n[·, λ]\n");
}

TEST_F(Cli, OrbitCheck) {
  std::string out;
  EXPECT_EQ(run("orbit-check " + write("w.json", kW) + " --trials 20 --seed 4", &out), 0);
  json j = json::parse(out);
  EXPECT_EQ(j.at("trials"), 20);
  EXPECT_EQ(j.at("failures"), 0);
  EXPECT_EQ(j.at("seed"), 4);
}

TEST_F(Cli, ToleranceFromEnvironment) {
  std::string out;
  EXPECT_EQ(run("canon " + write("ghz.json", kGhz), &out), 0);
  std::string cmd = "SKCF_TOL=1e-6 " + std::string(SKCF_CLI_PATH) + " canon " + write("ghz.json", kGhz) + " > " +
                    ::testing::TempDir() + "env.out";
  ASSERT_EQ(std::system(cmd.c_str()), 0);
  std::ifstream in(::testing::TempDir() + "env.out");
  json j = json::parse(in);
  EXPECT_DOUBLE_EQ(j.at("meta").at("tol").get<double>(), 1e-6);
  std::string bad = "SKCF_TOL=-1 " + std::string(SKCF_CLI_PATH) + " canon " + write("ghz.json", kGhz) + " 2>/dev/null";
  int status = std::system(bad.c_str());
  EXPECT_EQ(WEXITSTATUS(status), 2);
}

}  // namespace
}  // namespace skcf
