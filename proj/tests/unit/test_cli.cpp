#include <doctest.h>

#include <sstream>

#include "app.hpp"
#include "commands.hpp"
#include "format.hpp"

using namespace hdet;
using namespace hdet::cli;

namespace {

int run(std::vector<const char*> args, std::string* out_text = nullptr) {
  args.insert(args.begin(), "hdet");
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(args.size()), args.data(), out, err);
  if (out_text) *out_text = out.str();
  return code;
}

}  // namespace

TEST_CASE("number formatting is locale independent and precise") {
  CHECK(format_double(0.1) == "1.00000000000000e-01");
  CHECK(format_double(-7.2337962962963e-05) == "-7.23379629629630e-05");
  CHECK(format_complex({1.0, -2.0}) == "1.00000000000000e+00-2.00000000000000e+00i");
}

TEST_CASE("complex parsing") {
  CHECK(parse_complex("2i") == cplx(0, 2));
  CHECK(parse_complex("-i") == cplx(0, -1));
  CHECK(parse_complex("0.3+0.2i") == cplx(0.3, 0.2));
  CHECK(parse_complex("1e-3-4e-2i") == cplx(1e-3, -4e-2));
  CHECK_THROWS_AS(parse_complex("abc"), std::invalid_argument);
  CHECK(parse_double_list("0.5,1,2") == std::vector<double>{0.5, 1, 2});
}

TEST_CASE("state command") {
  std::string text;
  CHECK(run({"state", "GHZ"}, &text) == 0);
  CHECK(text.find("5.20833333333333e-03") != std::string::npos);
  CHECK(run({"state", "HD", "--json"}, &text) == 0);
  CHECK(text.find("\"abs_hdet\": 1.98458") != std::string::npos);
  CHECK(run({"state", "Nope"}) == 2);
  CHECK(run({"state", "Gabcd", "1", "2"}) == 2);
  CHECK(run({"state", "La2b2", "0.5", "1+i"}) == 0);
}

TEST_CASE("sweep rows") {
  std::string text;
  CHECK(run({"sweep", "xxz", "--start", "-1", "--stop", "1", "--steps", "3"}, &text) == 0);
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  CHECK(line == "param,level,energy,S_re,S_im,T_re,T_im,hdet_re,hdet_im,abs_hdet");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 3);
  CHECK(run({"sweep", "ising", "--start", "1", "--stop", "0"}) == 2);
  CHECK(run({"sweep", "ising", "--steps", "0"}) == 2);
  CHECK(run({"sweep", "ising", "--steps", "2", "--level", "all"}, &text) == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == 33);
}

TEST_CASE("randomized commands need a seed") {
  CHECK(run({"random", "haar", "-n", "5"}) == 2);
  std::string a, b;
  CHECK(run({"random", "haar", "-n", "10", "--seed", "7"}, &a) == 0);
  CHECK(run({"random", "haar", "-n", "10", "--seed", "7"}, &b) == 0);
  CHECK(a == b);
  CHECK(run({"thermal", "xxz", "--steps", "2"}) == 2);
  CHECK(run({"thermal", "xxz", "--steps", "2", "--mode", "weighted"}) == 0);
}

TEST_CASE("verify exit codes") {
  CHECK(run({"verify", "--only", "golden-states"}) == 0);
  CHECK(run({"verify", "--only", "no-such-suite"}) == 2);
  const InvariantFn corrupted = [](const Amplitudes4& a) {
    const InvariantTriple t = invariants_of_amplitudes(a);
    return InvariantTriple::from_st(t.S * (1.0 + 1e-6), t.T);
  };
  const char* args[] = {"hdet", "verify", "--only", "golden-states"};
  std::ostringstream out, err;
  CHECK(run_cli(4, args, out, err, corrupted) == 1);
  CHECK(run({"--help"}) == 0);
  CHECK(run({}) == 2);
}
