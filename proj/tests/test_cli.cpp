#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <dbell/cli.hpp>
#include <dbell/serialize.hpp>

using namespace dbell;

namespace {

struct Invocation {
    int code;
    std::string out;
    std::string err;
};

Invocation invoke(const std::vector<std::string>& args)
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

const MPoly lam = MPoly::var(Var::lambda);

} // namespace

TEST_CASE("table text output")
{
    const auto bell = invoke({"table", "--family", "bell", "--n-max", "3"});
    CHECK(bell.code == cli::kExitOk);
    CHECK(bell.out.find("Bel_3(x) = x^3 + 3x^2 + x") != std::string::npos);

    const auto s1 = invoke({"table", "--family", "stirling1", "--n-max", "0"});
    CHECK(s1.code == cli::kExitOk);
    CHECK(s1.out == "1\n");

    const auto s2 = invoke({"table", "--family", "stirling2", "--n-max", "3"});
    CHECK(s2.out == "1\n0 1\n0 1 1\n0 1 3 1\n");

    const auto dbell6 = invoke({"table", "--family", "bell", "--n-max", "6"});
    CHECK(dbell6.out.find("31x^2") != std::string::npos);
}

TEST_CASE("table json output")
{
    const auto r = invoke({"table", "--family", "dstirling", "--n-max", "2", "--format", "json"});
    REQUIRE(r.code == cli::kExitOk);
    const Json j = Json::parse(r.out);
    CHECK(j["family"] == "dstirling");
    bool found = false;
    for (const auto& e : j["entries"]) {
        if (e["n"] == 2 && e["m"] == 1) {
            found = true;
            CHECK(e["poly"] == to_json(1 - lam));
            CHECK(mpoly_from_json(e["poly"]) == 1 - lam);
        }
    }
    CHECK(found);
}

TEST_CASE("table csv output")
{
    const auto r = invoke({"table", "--family", "bell", "--n-max", "1", "--format", "csv"});
    CHECK(r.code == cli::kExitOk);
    CHECK(r.out == "n,coeff,lambda,L,x,y\n0,1/1,0,0,0,0\n1,1/1,0,0,1,0\n");
}

TEST_CASE("usage errors exit with 2")
{
    CHECK(invoke({}).code == cli::kExitUsage);
    CHECK(invoke({"table"}).code == cli::kExitUsage);
    CHECK(invoke({"table", "--family", "catalan"}).code == cli::kExitUsage);
    CHECK(invoke({"table", "--family", "bell", "--n-max", "-1"}).code == cli::kExitUsage);
    CHECK(invoke({"verify", "--terms", "0"}).code == cli::kExitUsage);
    CHECK(invoke({"verify", "--tol", "-1"}).code == cli::kExitUsage);
    CHECK(invoke({"verify", "--format", "xml"}).code == cli::kExitUsage);
    CHECK(invoke({"eval", "--n", "2", "--x", "1"}).code == cli::kExitUsage);
    CHECK(invoke({"eval", "--n", "2", "--lambda", "0", "--x", "1"}).code == cli::kExitUsage);
    CHECK(invoke({"eval", "--n", "2", "--lambda", "-1", "--x", "1"}).code == cli::kExitUsage);
    CHECK(invoke({"frobnicate"}).code == cli::kExitUsage);
    const auto bad = invoke({"table", "--family", "catalan"});
    CHECK_FALSE(bad.err.empty());
}

TEST_CASE("help exits with 0")
{
    const auto r = invoke({"--help"});
    CHECK(r.code == cli::kExitOk);
    CHECK(r.out.find("verify") != std::string::npos);
}

TEST_CASE("verify")
{
    const auto zero = invoke({"verify", "--n-max", "0"});
    CHECK(zero.code == cli::kExitOk);
    CHECK(zero.out.find("FAIL") == std::string::npos);

    const auto small = invoke({"verify", "--n-max", "4"});
    CHECK(small.code == cli::kExitOk);
    CHECK(small.out.find("checks passed") != std::string::npos);

    // three terms of the series cannot meet 1e-9
    const auto starved = invoke({"verify", "--n-max", "4", "--terms", "3"});
    CHECK(starved.code == cli::kExitVerificationFailed);
    CHECK(starved.out.find("FAIL") != std::string::npos);
}

TEST_CASE("verify json schema")
{
    const auto r = invoke({"verify", "--n-max", "3", "--format", "json"});
    REQUIRE(r.code == cli::kExitOk);
    const Json j = Json::parse(r.out);
    REQUIRE(j.is_array());
    std::size_t exact = 0;
    std::size_t numeric = 0;
    for (const auto& item : j) {
        CHECK(item["passed"] == true);
        if (item.contains("range")) {
            ++exact;
            CHECK(item["range"].size() == 2);
            CHECK(item["first_failure"].is_null());
        } else {
            ++numeric;
            const auto& p = item["params"];
            CHECK(p.contains("n"));
            CHECK(p.contains("lambda"));
            CHECK(p.contains("x"));
            CHECK(p.contains("terms"));
            CHECK(item["abs_error"].get<double>() <= item["tol"].get<double>());
        }
    }
    CHECK(exact > 0);
    CHECK(numeric > 0);
}

TEST_CASE("verify csv")
{
    const auto r = invoke({"verify", "--n-max", "2", "--format", "csv"});
    CHECK(r.code == cli::kExitOk);
    CHECK(r.out.rfind(numeric_csv_header() + "\n", 0) == 0);
}

TEST_CASE("eval")
{
    const auto r = invoke({"eval", "--n", "2", "--lambda", "0.5", "--x", "1"});
    CHECK(r.code == cli::kExitOk);
    CHECK(r.out == "Bel_{2,0.5}(1) = 1.063072923680826\n");

    const auto d = invoke({"eval", "--n", "2", "--lambda", "0.5", "--x", "1", "--dobinski"});
    CHECK(d.code == cli::kExitOk);
    CHECK(d.out.find("PASS") != std::string::npos);

    const auto loose = invoke({"eval", "--n", "6", "--lambda", "1", "--x", "2", "--dobinski", "--terms", "3"});
    CHECK(loose.code == cli::kExitVerificationFailed);

    const auto j = invoke({"eval", "--n", "1", "--lambda", "0.5", "--x", "1", "--format", "json"});
    REQUIRE(j.code == cli::kExitOk);
    CHECK(Json::parse(j.out)["value"].get<double>() == doctest::Approx(0.8109302162).epsilon(1e-10));
}

TEST_CASE("output is deterministic and JSON round-trips byte for byte")
{
    const std::vector<std::string> args{"table", "--family", "dbell", "--n-max", "5", "--format", "json"};
    const auto a = invoke(args);
    const auto b = invoke(args);
    CHECK(a.out == b.out);
    CHECK(Json::parse(a.out).dump(2) + "\n" == a.out);

    const Json j = Json::parse(a.out);
    for (const auto& e : j["entries"]) {
        CHECK(to_json(mpoly_from_json(e["poly"])) == e["poly"]);
    }

    const std::vector<std::string> verify_args{"verify", "--n-max", "3", "--format", "json"};
    CHECK(invoke(verify_args).out == invoke(verify_args).out);
}

TEST_CASE("--output writes to a file")
{
    const auto path = std::filesystem::temp_directory_path() / "dbell_cli_output_test.txt";
    std::filesystem::remove(path);
    const auto r = invoke({"table", "--family", "stirling2", "--n-max", "2", "-o", path.string()});
    CHECK(r.code == cli::kExitOk);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    CHECK(buffer.str() == "1\n0 1\n0 1 1\n");
    std::filesystem::remove(path);
}
