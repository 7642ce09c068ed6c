#include "doctest.h"

#include <sstream>

#include "dualphase/io.hpp"
#include "dualphase/path.hpp"

using namespace dualphase;

TEST_CASE("scientific formatting carries 9 significant digits") {
    CHECK(format_sci(92.80308743571081) == "9.28030874e+01");
    CHECK(format_sci(0.0) == "0.00000000e+00");
    CHECK(format_sci(-4.649652228865543) == "-4.64965223e+00");
}

TEST_CASE("grid parsing: linear spans, single points, bad input") {
    const auto g = parse_grid("0:200:5");
    REQUIRE(g.size() == 5);
    CHECK(g.front() == 0.0);
    CHECK(g[2] == 100.0);
    CHECK(g.back() == 200.0);

    CHECK(parse_grid("42").size() == 1);
    CHECK(parse_grid("42")[0] == 42.0);
    CHECK(parse_grid("7:7:1").size() == 1);

    CHECK_THROWS_AS(parse_grid("1:2"), ConfigError);
    CHECK_THROWS_AS(parse_grid("a:b:c"), ConfigError);
    CHECK_THROWS_AS(parse_grid("0:10:0"), ConfigError);
    CHECK_THROWS_AS(parse_grid("3.5x"), ConfigError);
}

TEST_CASE("path CSV round trip preserves samples and closure") {
    const ParamPath p = make_circle(1.2, 64);
    std::stringstream buf;
    save_path_csv(buf, p);
    const ParamPath q = load_path_csv(buf);
    REQUIRE(q.size() == p.size());
    CHECK(q.closed);
    for (std::size_t i = 0; i < p.size(); i += 7) {
        CHECK(q.points[i].x == doctest::Approx(p.points[i].x).epsilon(1e-8));
        CHECK(q.points[i].y == doctest::Approx(p.points[i].y).epsilon(1e-8));
        CHECK(q.times[i] == doctest::Approx(p.times[i]).epsilon(1e-8));
    }
    q.validate();
}

TEST_CASE("path CSV tolerates one header line and rejects junk rows") {
    std::stringstream ok("t,x,y,z\n0,1,0,0\n1,2,0,0\n2,3,0,0\n3,4,0,0\n"
                         "4,5,0,0\n5,6,0,0\n6,7,0,0\n7,8,0,0\n");
    const ParamPath p = load_path_csv(ok);
    CHECK(p.size() == 8);
    CHECK_FALSE(p.closed);

    std::stringstream bad("0,1,0,0\n1,2,zzz,0\n2,3,0,0\n3,4,0,0\n"
                          "4,5,0,0\n5,6,0,0\n6,7,0,0\n7,8,0,0\n");
    CHECK_THROWS_AS(load_path_csv(bad), ConfigError);

    std::stringstream small("0,1,0,0\n1,2,0,0\n");
    CHECK_THROWS_AS(load_path_csv(small), ConfigError);
}
