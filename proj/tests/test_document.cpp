#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "icds/document.hpp"
#include "icds/fixtures.hpp"
#include "icds/generate.hpp"

using namespace icds;

namespace {

const std::filesystem::path kFixtures = ICDS_FIXTURE_DIR;

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string error_of(const std::string& text) {
  try {
    parse_document(text);
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

const char* kIcDoc = R"({
  "kind": "ic",
  "propositions": ["g", "d"],
  "worlds": ["w1", "w2"],
  "measure": {"0": "1/2", "1": "1/2"},
  "psi_basis": ["~g & ~d", "g", "~g & d"],
  "incidence": {"g": ["w2"], "~g & ~d": ["w1"], "~g & d": []}
})";

std::string replace(std::string text, const std::string& from,
                    const std::string& to) {
  const auto pos = text.find(from);
  REQUIRE(pos != std::string::npos);
  return text.replace(pos, from.size(), to);
}

}  // namespace

TEST_CASE("fixture files load to the built-in coat structures") {
  CHECK(load(kFixtures / "coats-ds.json") == fixtures::coats_ds());
  CHECK(load(kFixtures / "coats-ic.json") == fixtures::coats_ic());
}

TEST_CASE("rendering canonical fixtures is byte-identical") {
  for (const char* name : {"coats-ds.json", "coats-ic.json", "nontotal-ds.json",
                           "coats-ds-skewed.json"}) {
    CAPTURE(name);
    const std::string text = read_file(kFixtures / name);
    CHECK(render_document(parse_document(text)) == text);
  }
}

TEST_CASE("non-canonical input is normalized") {
  const auto st = parse_document(kIcDoc);
  CHECK(st == fixtures::coats_ic());
  CHECK(render_document(st) == read_file(kFixtures / "coats-ic.json"));
}

TEST_CASE("parsing a rendered structure gives it back") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const GenParams p{1 + seed % 4, 1 + seed % 8, seed};
    for (const auto& st : {random_ic(p), random_total_ds(p)}) {
      const auto back = parse_document(render_document(st));
      CHECK(back == st);
      CHECK(render_document(back) == render_document(st));
    }
  }
}

TEST_CASE("save and load through the filesystem") {
  const auto path = std::filesystem::temp_directory_path() / "icds_doc_test.json";
  save(fixtures::coats_ds(), path);
  CHECK(load(path) == fixtures::coats_ds());
  std::filesystem::remove(path);
  CHECK_THROWS_AS(load(kFixtures / "does-not-exist.json"), DocumentError);
}

TEST_CASE("semantic errors surface as validation errors") {
  const std::string bad = replace(kIcDoc, R"("1": "1/2")", R"("1": "1/4")");
  CHECK_THROWS_AS(parse_document(bad), ValidationError);
  CHECK(error_of(bad).find("3/4") != std::string::npos);

  const std::string overlap =
      replace(kIcDoc, R"("~g & d": [])", R"("~g & d": ["w1"])");
  CHECK_THROWS_AS(parse_document(overlap), ValidationError);
}

TEST_CASE("malformed JSON reports line and column") {
  const std::string text = "{\n  \"kind\": \"ic\",\n  \"worlds\": [\"a\" \"b\"]\n}";
  try {
    parse_document(text);
    FAIL("expected DocumentError");
  } catch (const DocumentError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() == 20);  // last character of the unexpected "b"
  }
}

TEST_CASE("structural errors are rejected") {
  const std::string ic = kIcDoc;
  CHECK(error_of(replace(ic, R"("kind": "ic",)",
                         R"("kind": "ic", "chi_basis": [["w1"], ["w2"]],)"))
            .find("redundant field 'chi_basis'") != std::string::npos);
  CHECK(error_of(replace(ic, R"("kind": "ic",)", R"("kind": "ic", "extra": 1,)"))
            .find("unknown field") != std::string::npos);
  CHECK(error_of(replace(ic, R"("kind": "ic")", R"("kind": "xx")"))
            .find("kind") != std::string::npos);
  CHECK(error_of(replace(ic, R"("g": ["w2"])", R"("g": ["w3"])"))
            .find("unknown world 'w3'") != std::string::npos);
  CHECK(error_of(replace(ic, R"("g": ["w2"])", R"("d": ["w2"])"))
            .find("not a psi_basis block") != std::string::npos);
  CHECK(error_of(replace(ic, R"("g": ["w2"], )", ""))
            .find("incidence missing") != std::string::npos);
  CHECK(error_of(replace(ic, R"("1": "1/2")", R"("2": "1/2")"))
            .find("out of range") != std::string::npos);
  CHECK(error_of(replace(ic, R"("1": "1/2")", R"("1": "0.5")"))
            .find("measure value") != std::string::npos);
  CHECK(error_of(replace(ic, R"("1": "1/2")", R"("1": 0.5)"))
            .find("must be a string") != std::string::npos);
  CHECK(error_of(replace(ic, R"("~g & d"])", R"x("~g & (d"])x"))
            .find("psi_basis entry") != std::string::npos);
  CHECK(error_of(replace(ic, R"(["g", "d"])", R"(["g", "g"])"))
            .find("duplicate") != std::string::npos);
  CHECK(error_of("[1, 2]").find("must be an object") != std::string::npos);

  const std::string ds = read_file(kFixtures / "coats-ds.json");
  CHECK(error_of(replace(ds, R"("kind": "ds",)",
                         R"("kind": "ds", "psi_basis": ["true"],)"))
            .find("redundant field 'psi_basis'") != std::string::npos);
  CHECK(error_of(replace(ds, R"x("(g & d)": ["s4"])x", R"("g": ["s4"])"))
            .find("not a single atom") != std::string::npos);
  CHECK(error_of(replace(ds, R"x("(g & d)": ["s4"])x", R"x("(d & g)": ["s4"])x")) ==
        "");
  CHECK(error_of(replace(ds, R"(["s3", "s4"])", R"(["s3", "s3"])"))
            .find("twice") != std::string::npos);
}
