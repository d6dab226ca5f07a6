#include <fstream>
#include <map>
#include <sstream>

#include "doctest.h"
#include "json.hpp"

#include "dp1/families.hpp"
#include "dp1/geometry.hpp"
#include "dp1/harness.hpp"

using namespace dp1;

namespace {

std::string fixture_path(std::string const& name) {
    return std::string(DP1_SOURCE_DIR) + "/fixtures/" + name;
}

}  // namespace

TEST_CASE("sample point fixtures load and verify end to end") {
    std::ifstream in(fixture_path("sample_points.json"));
    REQUIRE(in.good());
    nlohmann::json records;
    in >> records;
    REQUIRE(records.size() >= 3);
    for (auto const& rec : records) {
        Surface s{field_from_string(rec["surface"]["A"].get<std::string>()),
                  field_from_string(rec["surface"]["B"].get<std::string>())};
        CHECK(s.A == FieldElem(49));
        EPoint q{field_from_string(rec["epoint"][0].get<std::string>()),
                 field_from_string(rec["epoint"][1].get<std::string>()),
                 field_from_string(rec["epoint"][2].get<std::string>())};
        REQUIRE(on_parametrizing_cubic(q));
        WPoint p = section_point(q);
        CHECK(on_surface(p, s));
        CHECK(curve_point_smooth(q, p));
        CHECK(tangency_profile(branch_sextic(family_plane(q), s)).kind == Tangency::bitangent);
    }
}

TEST_CASE("component fixtures match the built-in equations") {
    std::ifstream in(fixture_path("components.txt"));
    REQUIRE(in.good());
    std::vector<std::string> const dual{"k", "l", "m", "n"};
    std::map<std::string, MPoly> parsed;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto colon = line.find(": ");
        REQUIRE(colon != std::string::npos);
        parsed.emplace(line.substr(0, colon), MPoly::parse(line.substr(colon + 2), dual));
    }
    REQUIRE(parsed.size() == 8);
    for (int i = 3; i <= 6; ++i) {
        DualComponent c = component_s(i);
        std::string key = "S" + std::to_string(i);
        CHECK(parsed.at(key + ".linear") == c.linear);
        CHECK(parsed.at(key + ".sextic") == c.sextic);
    }
}
