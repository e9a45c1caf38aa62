#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include <nlohmann/json.hpp>

namespace {

struct CommandResult {
    int exit_code = -1;
    std::string output;
};

CommandResult run(const std::string& args) {
    const std::string command = std::string(PRYM_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CommandResult result;
    std::array<char, 4096> buffer;
    size_t got;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        result.output.append(buffer.data(), got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

}  // namespace

TEST_CASE("divisor command emits the exact JSON class") {
    const CommandResult result = run("divisor --i 3 --format json");
    CHECK(result.exit_code == 0);
    const auto json = nlohmann::json::parse(result.output);
    CHECK(json["i"] == 3);
    CHECK(json["prefactor"] == "(6i-4)!*binom(2i-1,i)");
    CHECK(json["lambda"] == "1056/5");
    CHECK(json["d0p"] == "-138/5");
    CHECK(json["d1gm1"] == "-48");
}

TEST_CASE("divisor table output and usage errors") {
    const CommandResult table = run("divisor --i 2");
    CHECK(table.exit_code == 0);
    CHECK(table.output.find("180") != std::string::npos);
    CHECK(table.output.find("36") != std::string::npos);

    CHECK(run("divisor --i 1").exit_code == 2);
    CHECK(run("divisor").exit_code == 2);
    CHECK(run("bogus-command").exit_code == 2);
}

TEST_CASE("hurwitz command compares both backends") {
    const CommandResult result =
        run("hurwitz \"d=3; g=0; profiles=3|3|3\" --oracle --characters --format json");
    CHECK(result.exit_code == 0);
    const auto json = nlohmann::json::parse(result.output);
    CHECK(json["oracle"] == "2");
    CHECK(json["characters"] == "2");
    CHECK(json["match"] == true);
}

TEST_CASE("hurwitz weighted count and error exits") {
    const CommandResult weighted = run("hurwitz \"d=2; g=0; profiles=2|2\" --weighted --format json");
    CHECK(weighted.exit_code == 0);
    CHECK(nlohmann::json::parse(weighted.output)["weighted"] == "1/2");

    CHECK(run("hurwitz \"d=9; g=0; profiles=2,1,1,1,1,1,1,1\" --oracle").exit_code == 3);
    CHECK(run("hurwitz \"d=oops\" --oracle").exit_code == 2);
    CHECK(run("hurwitz \"d=3; g=0; profiles=2,2\" --oracle").exit_code == 2);
}

TEST_CASE("schubert command checks both integral routes") {
    const CommandResult result = run("schubert \"Gr(2,6); seed=3,1; times=1^4\" --format json");
    CHECK(result.exit_code == 0);
    const auto json = nlohmann::json::parse(result.output);
    CHECK(json["pieri"] == "3");
    CHECK(json["closed_form"] == "3");
    CHECK(json["match"] == true);
}

TEST_CASE("counts command surfaces named values") {
    const CommandResult result = run("counts --op prym-triple --i 2 --format json");
    CHECK(result.exit_code == 0);
    const auto json = nlohmann::json::parse(result.output);
    CHECK(json["value"] == "72");
    CHECK(run("counts --op nonsense --i 2").exit_code == 2);
    CHECK(run("counts --op identity --name id-9.9 --i 2").exit_code == 2);
}

TEST_CASE("verify genus6 passes and reports round-trip JSON") {
    const CommandResult result = run("verify genus6 --format json");
    CHECK(result.exit_code == 0);
    const auto json = nlohmann::json::parse(result.output);
    CHECK(json["pass"] == true);
    CHECK(json["checks"].is_array());
    bool found_skip = false;
    for (const auto& check : json["checks"]) {
        CHECK(check.contains("name"));
        CHECK(check.contains("expected"));
        CHECK(check.contains("actual"));
        CHECK(check.contains("pass"));
        if (check.value("skipped", false)) found_skip = true;
    }
    CHECK(found_skip);  // the bridge check is skipped without constants
    // schema stability: re-serialize and re-parse
    CHECK(nlohmann::json::parse(json.dump()) == json);
}

TEST_CASE("verify exit codes distinguish failures from usage errors") {
    CHECK(run("verify nonsense").exit_code == 2);
    // consistent external constants satisfy the bridge identity
    CHECK(run("verify genus6 --constants b33=40,N34=6").exit_code == 0);
    // inconsistent ones are a check failure, not a usage error
    CHECK(run("verify genus6 --constants b33=1,N34=1").exit_code == 1);
    CHECK(run("verify genus6 --constants b33=1,bogus=2").exit_code == 2);
}

TEST_CASE("verify divisor sweep") {
    const CommandResult result = run("verify divisor --i-max 12 --format json");
    CHECK(result.exit_code == 0);
    CHECK(nlohmann::json::parse(result.output)["pass"] == true);
}
