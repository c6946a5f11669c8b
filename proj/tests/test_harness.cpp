#include <doctest.h>

#include <cstdio>
#include <fstream>

#include <json.hpp>

#include "moddom/graph6.hpp"
#include "moddom/harness.hpp"

using namespace moddom;
using nlohmann::json;

namespace {

std::vector<json> parse_lines(const std::string& text) {
    std::vector<json> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const auto end = text.find('\n', pos);
        out.push_back(json::parse(text.substr(pos, end - pos)));
        pos = end + 1;
    }
    return out;
}

}  // namespace

TEST_CASE("input expansion") {
    const auto fam = expand_input("petersen");
    CHECK(fam.size() == 1);
    CHECK(fam[0].second.order() == 10);

    CHECK_THROWS_AS(expand_input("no-such-thing"), InputError);

    const std::string file = "tmp_inputs.g6";
    {
        std::ofstream out(file);
        out << "Bw\n\nDhc\n";
    }
    const auto graphs = expand_input(file);
    CHECK(graphs.size() == 2);
    CHECK(graphs[0].second.order() == 3);
    CHECK(graphs[1].second.order() == 5);
    std::remove(file.c_str());

    {
        std::ofstream out(file);
        out << "not graph6\n";
    }
    CHECK_THROWS_AS(expand_input(file), InputError);
    std::remove(file.c_str());
}

TEST_CASE("compute mode records") {
    RunConfig cfg;
    cfg.mode = RunConfig::Mode::Compute;
    cfg.inputs = {"petersen", "petersen"};
    const Report rep = run(cfg);
    CHECK(rep.failures == 0);
    const auto lines = parse_lines(rep.text);
    REQUIRE(lines.size() == 2);
    const json& r = lines[0];
    CHECK(r.at("exact") == 3);
    CHECK(r.at("gamma_g") == 3);
    CHECK(r.at("sdctd_g") == 4);
    CHECK(r.at("diam_g") == 2);
    CHECK(r.at("lower") == 3);
    CHECK(r.at("verdict") == "EQ3");
    CHECK(r.at("verified") == true);
    CHECK(lines[1].at("type") == "summary");
}

TEST_CASE("compute pairs tokens consecutively") {
    RunConfig cfg;
    cfg.mode = RunConfig::Mode::Compute;
    cfg.inputs = {"path:4", "complete:3", "complete:1", "cycle:5"};
    const Report rep = run(cfg);
    const auto lines = parse_lines(rep.text);
    REQUIRE(lines.size() == 3);
    CHECK(lines[0].at("g") == "path:4");
    CHECK(lines[0].at("h") == "complete:3");
    CHECK(lines[0].at("exact") == 2);
    CHECK(lines[1].at("g") == "complete:1");
    CHECK(lines[1].at("exact") == 2);  // K1 <> C5 is C5 itself

    cfg.inputs = {"petersen"};
    CHECK_THROWS_AS(run(cfg), InputError);
}

TEST_CASE("compute budget mode") {
    RunConfig cfg;
    cfg.mode = RunConfig::Mode::Compute;
    cfg.inputs = {"petersen", "petersen"};
    cfg.budget = 2;
    const auto lines = parse_lines(run(cfg).text);
    CHECK(lines[0].at("exact").is_null());
    CHECK(lines[0].at("exact_gt") == 2);
}

TEST_CASE("verify determinism and failure surfacing") {
    RunConfig cfg;
    cfg.mode = RunConfig::Mode::Verify;
    cfg.max_n = 3;
    cfg.seed = 7;
    cfg.threads = 4;
    const Report a = run(cfg);
    const Report b = run(cfg);
    CHECK(a.text == b.text);
    CHECK(a.failures == 0);
    CHECK(report_exit_code(a) == 0);

    cfg.selftest = true;
    const Report c = run(cfg);
    CHECK(c.failures == 1);
    CHECK(report_exit_code(c) == 1);
    CHECK(c.text.find("injected mismatch") != std::string::npos);

    cfg.selftest = false;
    cfg.max_n = 9;
    CHECK_THROWS_AS(run(cfg), InputError);
}

TEST_CASE("searches") {
    RunConfig cfg;
    cfg.threads = 4;

    cfg.mode = RunConfig::Mode::SearchP3;
    cfg.max_n = 4;
    const auto p3 = parse_lines(run(cfg).text);
    CHECK(p3.back().at("counterexamples") == 0);

    cfg.inputs = {"path:5"};
    const auto filtered = parse_lines(run(cfg).text);
    CHECK(filtered.back().at("graphs_scanned") == 0);  // diameter filter drops it
    cfg.diameter_filter = false;
    const auto unfiltered = parse_lines(run(cfg).text);
    CHECK(unfiltered.back().at("graphs_scanned") == 1);
    CHECK(unfiltered[0].at("counterexample") == false);
    cfg.diameter_filter = true;
    cfg.inputs.clear();

    cfg.mode = RunConfig::Mode::SearchP1;
    cfg.max_n = 4;
    const auto p1 = parse_lines(run(cfg).text);
    CHECK(p1.back().at("hits") == 0);

    cfg.mode = RunConfig::Mode::SearchP2;
    const auto p2 = parse_lines(run(cfg).text);
    CHECK(p2.back().at("max_excess") == 1);
}

TEST_CASE("csv rendering") {
    RunConfig cfg;
    cfg.mode = RunConfig::Mode::Compute;
    cfg.inputs = {"path:4", "path:4"};
    cfg.format = RunConfig::Format::Csv;
    const Report rep = run(cfg);
    CHECK(rep.text.find("gamma_g") != std::string::npos);
    // header plus pair row plus summary row
    CHECK(std::count(rep.text.begin(), rep.text.end(), '\n') == 3);
}
