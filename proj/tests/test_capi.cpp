#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <string>

#include "opbook.h"

namespace {

struct Seq {
  opbook_seq* ptr = nullptr;
  explicit Seq(const char* text) { REQUIRE(opbook_seq_parse(text, &ptr) == OPBOOK_OK); }
  ~Seq() { opbook_seq_free(ptr); }
};

std::string take(char* s) {
  REQUIRE(s != nullptr);
  std::string out(s);
  opbook_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("parse and length") {
  Seq s("6^2 5^4 4 3^2 2^6");
  CHECK(opbook_seq_len(s.ptr) == 15);
}

TEST_CASE("parse failures set the thread error") {
  opbook_seq* seq = nullptr;
  CHECK(opbook_seq_parse("3^0", &seq) == OPBOOK_EPARSE);
  CHECK(std::strlen(opbook_last_error()) > 0);
  CHECK(opbook_seq_parse("garbage", &seq) == OPBOOK_EPARSE);
  CHECK(opbook_seq_parse(nullptr, &seq) == OPBOOK_EPARSE);
}

TEST_CASE("classify json carries status and class") {
  Seq s("4^2 2^4");
  char* out = nullptr;
  REQUIRE(opbook_classify_json(s.ptr, &out) == OPBOOK_OK);
  std::string j = take(out);
  CHECK(j.find("\"status\": \"realized\"") != std::string::npos);
  CHECK(j.find("\"class\": \"OP+2\"") != std::string::npos);
  CHECK(j.find("\"spine\"") != std::string::npos);
}

TEST_CASE("classify and verify round trip") {
  for (const char* text : {"4^2 2^4", "2^6", "3^6", "4 4 2 2 2", "2 1"}) {
    Seq s(text);
    char* stored = nullptr;
    REQUIRE(opbook_classify_json(s.ptr, &stored) == OPBOOK_OK);
    std::string j = take(stored);
    char* report = nullptr;
    REQUIRE(opbook_verify_json(j.c_str(), &report) == OPBOOK_OK);
    std::string r = take(report);
    INFO(text, " -> ", r);
    CHECK(r.find("\"pass\": true") != std::string::npos);
  }
}

TEST_CASE("verify rejects malformed input") {
  char* report = nullptr;
  CHECK(opbook_verify_json("{not json", &report) == OPBOOK_EPARSE);
  CHECK(opbook_verify_json("{\"status\": \"realized\"}", &report) == OPBOOK_EPARSE);
}

TEST_CASE("dot export") {
  Seq s("2^6");
  char* dot = nullptr;
  REQUIRE(opbook_realize_dot(s.ptr, &dot) == OPBOOK_OK);
  std::string body = take(dot);
  CHECK(body.find("graph book") != std::string::npos);
  CHECK(body.find("--") != std::string::npos);

  Seq rejected("3^6");
  CHECK(opbook_realize_dot(rejected.ptr, &dot) == OPBOOK_EINVALID);
}

TEST_CASE("oracle json") {
  Seq s("2^6");
  char* out = nullptr;
  REQUIRE(opbook_oracle_json(s.ptr, 0, &out) == OPBOOK_OK);
  CHECK(take(out).find("\"outerplanaric\": true") != std::string::npos);

  Seq big("2^20");
  CHECK(opbook_oracle_json(big.ptr, 0, &out) == OPBOOK_ETOOLARGE);
}

TEST_CASE("sweep json over a small range") {
  char* out = nullptr;
  REQUIRE(opbook_sweep_json(5, 2, nullptr, nullptr, &out) == OPBOOK_OK);
  std::string j = take(out);
  CHECK(j.find("\"ok\": true") != std::string::npos);
  CHECK(j.find("\"violations\": []") != std::string::npos);
}

TEST_CASE("progress callback can abort the sweep") {
  char* out = nullptr;
  opbook_progress_fn abort_now = [](long long, long long, void*) { return 1; };
  CHECK(opbook_sweep_json(6, 1, abort_now, nullptr, &out) == OPBOOK_EINVALID);
}

TEST_CASE("status messages") {
  CHECK(std::string(opbook_status_message(OPBOOK_OK)) == "ok");
  CHECK(std::string(opbook_status_message(OPBOOK_EPARSE)) == "parse error");
}
