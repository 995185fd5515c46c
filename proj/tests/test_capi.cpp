#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <string>

#include "zda.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  zda_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("catalog round trip through the C surface") {
  std::string names = take(zda_catalog_names());
  CHECK(names.find("paper_example") != std::string::npos);
  CHECK(names.find("quaternion_q") != std::string::npos);

  zda_algebra* a = nullptr;
  char* err = nullptr;
  REQUIRE(zda_algebra_from_catalog("paper_example", &a, &err) == ZDA_OK);
  REQUIRE(a != nullptr);
  CHECK(zda_algebra_dim(a) == 3);
  CHECK(take(zda_algebra_name(a)) == "paper_example");

  zda_report* r = nullptr;
  REQUIRE(zda_analyze(a, &r, &err) == ZDA_OK);
  REQUIRE(r != nullptr);
  CHECK(std::string(zda_report_verdict(r)) == "tame");
  CHECK(std::string(zda_report_splits(r)) == "yes");
  CHECK(zda_report_proper(r) == 1);
  REQUIRE(zda_report_component_count(r) == 2);
  size_t d0 = zda_report_component_dim(r, 0), d1 = zda_report_component_dim(r, 1);
  CHECK(((d0 == 1 && d1 == 2) || (d0 == 2 && d1 == 1)));
  CHECK(zda_report_component_dim(r, 5) == static_cast<size_t>(-1));

  std::string text = take(zda_report_render(r, 0));
  CHECK(text.find("verdict: tame") != std::string::npos);
  std::string machine = take(zda_report_render(r, 1));
  CHECK(machine.find("tame.verdict = tame") != std::string::npos);

  zda_report_free(r);
  zda_algebra_free(a);
}

TEST_CASE("text parsing and definition round trip") {
  const char* text = "field Q\ndim 1\nbasis e\ne*e = e\n";
  zda_algebra* a = nullptr;
  char* err = nullptr;
  REQUIRE(zda_algebra_from_text(text, &a, &err) == ZDA_OK);
  std::string round = take(zda_algebra_text(a));
  zda_algebra* b = nullptr;
  REQUIRE(zda_algebra_from_text(round.c_str(), &b, &err) == ZDA_OK);
  CHECK(zda_algebra_dim(b) == 1);
  zda_algebra_free(a);
  zda_algebra_free(b);
}

TEST_CASE("error paths surface status codes and messages") {
  zda_algebra* a = nullptr;
  char* err = nullptr;
  CHECK(zda_algebra_from_text("field Q\ndim 2\nbasis e f\ne*f = sqrt(5) e\n", &a, &err) ==
        ZDA_ERR_PARSE);
  std::string msg = take(err);
  CHECK(msg.find("CoefficientNotInTower") != std::string::npos);
  CHECK(a == nullptr);

  err = nullptr;
  CHECK(zda_algebra_from_catalog("nonexistent", &a, &err) == ZDA_ERR_INVALID);
  take(err);

  err = nullptr;
  CHECK(zda_algebra_from_file("/nonexistent/path.alg", &a, &err) == ZDA_ERR_PARSE);
  take(err);

  // precondition: non-associative algebra cannot be analyzed
  err = nullptr;
  REQUIRE(zda_algebra_from_text("field Q\ndim 2\nbasis e f\ne*e = f\nf*e = e\n", &a, &err) ==
          ZDA_OK);
  zda_report* r = nullptr;
  CHECK(zda_analyze(a, &r, &err) == ZDA_ERR_PRECONDITION);
  std::string pmsg = take(err);
  CHECK(pmsg.find("NotAssociative") != std::string::npos);
  CHECK(r == nullptr);
  zda_algebra_free(a);

  // null arguments
  CHECK(zda_algebra_from_text(nullptr, &a, nullptr) == ZDA_ERR_INVALID);
  CHECK(zda_analyze(nullptr, &r, nullptr) == ZDA_ERR_INVALID);
}

TEST_CASE("embedded CLI") {
  const char* argv1[] = {"tame", "m2_real"};
  char* out = nullptr;
  char* err = nullptr;
  int code = zda_run_cli(2, argv1, &out, &err);
  CHECK(code == 0);
  std::string stdout_text = take(out);
  take(err);
  CHECK(stdout_text.find("not tame") != std::string::npos);

  const char* argv2[] = {"ideals", "zero_mult"};
  code = zda_run_cli(2, argv2, &out, &err);
  CHECK(code == 1);
  std::string stderr_text = take(err);
  take(out);
  CHECK(stderr_text.find("RequiresAAFull") != std::string::npos);

  const char* argv3[] = {"--format", "machine", "zdiv", "m2_real"};
  code = zda_run_cli(4, argv3, &out, &err);
  CHECK(code == 2);
  std::string machine = take(out);
  take(err);
  CHECK(machine.find("z.kind = undetermined") != std::string::npos);

  CHECK(std::strcmp(zda_version(), "0.1.0") == 0);
}

TEST_CASE("shipped file through the C API") {
  std::string path = std::string(ZDA_DATA_DIR) + "/quaternions.alg";
  zda_algebra* a = nullptr;
  char* err = nullptr;
  REQUIRE(zda_algebra_from_file(path.c_str(), &a, &err) == ZDA_OK);
  zda_report* r = nullptr;
  REQUIRE(zda_analyze(a, &r, &err) == ZDA_OK);
  CHECK(std::string(zda_report_verdict(r)) == "tame");
  CHECK(std::string(zda_report_splits(r)) == "no");
  REQUIRE(zda_report_component_count(r) == 1);
  CHECK(zda_report_component_dim(r, 0) == 0);
  zda_report_free(r);
  zda_algebra_free(a);
}
