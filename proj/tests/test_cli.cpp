#include <doctest.h>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "bimclp/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = bimclp::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(BIMCLP_DATA_DIR) + "/" + name; }

std::size_t lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_CASE("count-models") {
  CHECK(run({"count-models", "--facts", data("rooms8.pl"), "--mode", "partial"}).out == "14\n");
  CHECK(run({"count-models", "--facts", data("rooms8.pl"), "--mode", "global"}).out == "64\n");
  CHECK(run({"count-models", "--facts", data("rooms16.pl")}).out == "30\n");
  CHECK(run({"count-models", "--facts", data("rooms16.pl"), "--mode", "global"}).out == "16384\n");
  const auto e = run({"count-models", "--facts", data("rooms8.pl"), "--mode", "global", "--enumerate"});
  CHECK(lines(e.out) == 65);
}

TEST_CASE("classify") {
  const auto r = run({"classify", "--facts", data("rooms8.pl"), "--room", "r3"});
  CHECK(r.out == "room_is(r3, small)\t{small(r3)?}\nroom_is(r3, big)\t{-small(r3)?}\n");
  CHECK(lines(run({"classify", "--facts", data("rooms8.pl")}).out) == 14);
  const auto j = run({"classify", "--facts", data("rooms8.pl"), "--room", "r1", "--justify"});
  CHECK(j.out.find("evidence: size(r1) = 25 > 20") != std::string::npos);
  CHECK(run({"classify", "--facts", data("rooms8.pl"), "--room", "r99"}).code == 2);
}

TEST_CASE("merge") {
  const auto r = run({"merge", "--scenario", data("ci_step2.pl")});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "{Pr=1, Data=ventilation(A), A\\=artificial}\n"
        "invalid {Pr=2, Data=boiler(gas)} canceled by {Pr=3, Data=ventilation(artificial)}\n"
        "{Pr=2, Data=ventilation(natural)}\n"
        "{Pr=3, Data=boiler(electrical)}\n"
        "{Pr=3, Data=ventilation(artificial)}\n");
  const auto s3 = run({"merge", "--scenario", data("ci_step3.pl")});
  CHECK(s3.out.find("invalid {Pr=3, Data=ventilation(artificial)} canceled by {Pr=4, Data=boiler(gas)}") !=
        std::string::npos);
}

TEST_CASE("select and stdin") {
  const auto r = run({"select", "--facts", data("office.pl"), "--label", "IfcBeam", "--tag", "arq"});
  CHECK(lines(r.out) == 4);
  const auto s = run({"select", "--facts", "-", "--tag", "arq"},
                     "object(ifcbeam, b1, point(0,0,0), point(4,0.3,0.3), arq).\n"
                     "object(x, y, point(0,0,0), point(0,1,1), arq).\n");
  CHECK(s.out == "object(ifcbeam, b1, point(0, 0, 0), point(4, 0.3, 0.3), arq).\n");
  CHECK(s.err.find("warning") != std::string::npos);
}

TEST_CASE("slice") {
  const auto r = run({"slice", "--facts", data("duplex.pl"), "--corner", "Ya<-4.002"});
  CHECK(r.code == 0);
  CHECK(r.out.find(" d1,") != std::string::npos);
  CHECK(r.out.find(" d3,") == std::string::npos);
  const auto e = run({"slice", "--facts", data("duplex.pl"), "--constraint", "Y>=0", "--constraint", "Y<0"});
  CHECK(e.code == 0);
  CHECK(e.out.empty());
  CHECK(e.err.find("infeasible") != std::string::npos);
  const auto x = run({"slice", "--facts", data("duplex.pl"), "--constraint", "Y>=-7", "--constraint", "Y<-4",
                      "--x3d", "-"});
  std::istringstream is(x.out.substr(x.out.find("<?xml")));
  boost::property_tree::ptree doc;
  CHECK_NOTHROW(boost::property_tree::read_xml(is, doc));
  CHECK(run({"slice", "--facts", data("duplex.pl"), "--constraint", "Q<1"}).code == 2);
}

TEST_CASE("coverage") {
  const auto r = run({"coverage", "--facts", data("office.pl"), "--target-label", "ifcbeam", "--target-tag", "arq",
                      "--cover-tag", "str"});
  CHECK(r.code == 0);
  CHECK(r.out == "b1\tcovered\t0\nb2\tcovered\t0\nb3\tuncovered\t1\nb4\tuncovered\t1\n");
  CHECK(r.err.find("uncovered 2") != std::string::npos);
  const auto p = run({"coverage", "--facts", data("office.pl"), "--target-tag", "arq", "--cover-tag", "str",
                      "--target-label", "ifcbeam", "--jobs", "2"});
  CHECK(p.out == r.out);

  const auto path = std::filesystem::temp_directory_path() / "bimclp_cov_test.x3d";
  const auto x = run({"coverage", "--facts", data("office.pl"), "--target-label", "ifcbeam", "--target-tag", "arq",
                      "--cover-tag", "str", "--x3d", path.string()});
  CHECK(x.code == 0);
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  CHECK(ss.str().find("diffuseColor=\"1 0 0\"") != std::string::npos);
  CHECK(ss.str().find("diffuseColor=\"0 0 1\"") != std::string::npos);
  std::filesystem::remove(path);
}

TEST_CASE("check") {
  const auto w = run({"check", "--facts", data("compliance.pl"), "--rule", "window-width"});
  CHECK(w.code == 1);
  CHECK(w.out ==
        "window-width r1 fail\n"
        "window-width r2 pass\n"
        "window-width r3 conditional [model: small(r3) -> pass] [model: -small(r3) -> fail]\n");
  CHECK(run({"check", "--facts", data("compliance.pl"), "--rule", "window-width", "--room", "r2"}).code == 0);
  CHECK(run({"check", "--facts", data("compliance.pl"), "--rule", "window-width", "--room", "r3"}).code == 0);
  const auto v = run({"check", "--facts", data("compliance.pl"), "--rule", "ventilation", "--room", "r2"});
  CHECK(v.out == "ventilation r2 pass\n");
  CHECK(v.code == 0);
}

TEST_CASE("export") {
  const auto r = run({"export", "--facts", data("duplex.pl"), "--x3d", "-"});
  CHECK(r.code == 0);
  std::istringstream is(r.out);
  boost::property_tree::ptree doc;
  boost::property_tree::read_xml(is, doc);
  CHECK(r.out.find("<Group DEF=\"doors\">") != std::string::npos);
  CHECK(r.out == run({"export", "--facts", data("duplex.pl"), "--x3d", "-"}).out);
}

TEST_CASE("usage and input errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"select", "--facts", data("office.pl"), "--bogus"}).code == 2);
  CHECK(run({"select", "--facts", "/nonexistent/file.pl"}).code == 2);
  CHECK(run({"select", "--facts", "-"}, "object(a, b, point(0,0,0)").code == 2);
  CHECK(run({"count-models", "--facts", data("rooms8.pl"), "--mode", "all"}).code == 2);
  const auto h = run({"--help"});
  CHECK(h.code == 0);
  CHECK(h.out.find("coverage") != std::string::npos);
}
