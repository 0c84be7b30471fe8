#include "spellbench/ocr.hpp"
#include "spellbench/ocr_http.hpp"

#include <cstdlib>
#include <filesystem>

#include "doctest.h"

using namespace spellbench;

namespace {

OcrBox box(std::string text, std::initializer_list<std::pair<double, double>> vertices) {
  OcrBox b;
  b.text = std::move(text);
  for (const auto& [x, y] : vertices) b.polygon.push_back(Vertex{x, y});
  return b;
}

}  // namespace

TEST_CASE("parse_ocr_json") {
  SUBCASE("empty boxes") {
    const OcrResult r = parse_ocr_json(R"({"image_id":"a","boxes":[]})");
    CHECK(r.image_id == "a");
    CHECK(r.boxes.empty());
  }
  SUBCASE("newlines survive parsing") {
    const OcrResult r = parse_ocr_json(
        R"({"image_id":"a","backend":"x","boxes":[{"text":"HI\nTHERE","polygon":[{"x":0,"y":0},{"x":5,"y":0},{"x":5,"y":2},{"x":0,"y":2}]}]})");
    REQUIRE(r.boxes.size() == 1);
    CHECK(r.boxes[0].text == "HI\nTHERE");
    CHECK(r.boxes[0].polygon.size() == 4);
  }
  SUBCASE("errors name the offending field") {
    try {
      parse_ocr_json(R"({"boxes":[]})");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(std::string(e.what()).find("image_id") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_ocr_json(R"({"image_id":"a"})"), ParseError);
    CHECK_THROWS_AS(parse_ocr_json(R"({"image_id":"a","boxes":[{"text":"x","polygon":[{"x":0,"y":0},{"x":1,"y":0}]}]})"),
                    ParseError);  // needs >= 3 vertices
    CHECK_THROWS_AS(parse_ocr_json(R"({"image_id":"a","boxes":[{"text":"x","polygon":[{"x":-1,"y":0},{"x":1,"y":0},{"x":1,"y":1}]}]})"),
                    ParseError);  // negative coordinate
    CHECK_THROWS_AS(parse_ocr_json("not json"), ParseError);
  }
  SUBCASE("serialize then parse is identity") {
    OcrResult r;
    r.image_id = "img/1.png";
    r.backend = "neutral";
    r.boxes.push_back(box("WORD\nWRAP", {{0, 10}, {40, 10}, {40, 20}, {0, 20}}));
    r.boxes.push_back(box("", {{1, 2}, {3, 2}, {3, 4}}));
    const OcrResult back = parse_ocr_json(ocr_result_to_json(r).dump());
    CHECK(back.image_id == r.image_id);
    CHECK(back.backend == r.backend);
    REQUIRE(back.boxes.size() == 2);
    CHECK(back.boxes[0].text == "WORD\nWRAP");
    CHECK(back.boxes[1].polygon.size() == 3);
    CHECK(ocr_result_to_json(back).dump() == ocr_result_to_json(r).dump());
  }
}

TEST_CASE("select_topmost") {
  OcrResult r;
  r.image_id = "x";
  SUBCASE("no boxes means none") { CHECK_FALSE(select_topmost_index(r).has_value()); }
  SUBCASE("smallest min-y wins") {
    r.boxes.push_back(box("low", {{0, 50}, {10, 50}, {10, 60}}));
    r.boxes.push_back(box("high", {{0, 10}, {10, 10}, {10, 20}}));
    CHECK(select_topmost_index(r) == std::size_t{1});
    CHECK(select_topmost(r)->text == "high");
  }
  SUBCASE("y tie broken by smallest min-x") {
    r.boxes.push_back(box("right", {{30, 10}, {40, 10}, {40, 20}}));
    r.boxes.push_back(box("left", {{5, 10}, {15, 10}, {15, 20}}));
    CHECK(select_topmost_index(r) == std::size_t{1});
  }
  SUBCASE("full tie keeps input order") {
    r.boxes.push_back(box("first", {{5, 10}, {15, 10}, {15, 20}}));
    r.boxes.push_back(box("second", {{5, 10}, {15, 10}, {15, 20}}));
    CHECK(select_topmost_index(r) == std::size_t{0});
  }
  SUBCASE("any vertex counts toward min, not just the first") {
    r.boxes.push_back(box("slanted", {{0, 30}, {10, 5}, {20, 30}}));
    r.boxes.push_back(box("flat", {{0, 10}, {10, 10}, {20, 10}}));
    CHECK(select_topmost_index(r) == std::size_t{0});
  }
  SUBCASE("permutation-stable for distinct keys") {
    std::vector<OcrBox> boxes;
    for (int i = 0; i < 6; ++i)
      boxes.push_back(box("t" + std::to_string(i), {{i * 3.0, 10.0 + i}, {i * 3.0 + 2, 12.0 + i}, {i * 3.0, 14.0 + i}}));
    OcrResult base;
    base.image_id = "x";
    base.boxes = boxes;
    const std::string expected = select_topmost(base)->text;
    std::vector<std::size_t> perm = {5, 3, 0, 4, 2, 1};
    OcrResult shuffled;
    shuffled.image_id = "x";
    for (std::size_t i : perm) shuffled.boxes.push_back(boxes[i]);
    CHECK(select_topmost(shuffled)->text == expected);
  }
}

TEST_CASE("normalize_reading") {
  SUBCASE("newline removal joins wrapped words") {
    const OcrBox b = box("KILOPAS\nCALS", {{0, 0}, {1, 0}, {1, 1}});
    const NormalizedReading n = normalize_reading(&b);
    CHECK(n.reading == std::string("KILOPASCALS"));
  }
  SUBCASE("trim") {
    const OcrBox b = box("  stop  ", {{0, 0}, {1, 0}, {1, 1}});
    CHECK(normalize_reading(&b).reading == std::string("stop"));
  }
  SUBCASE("none stays none") {
    const NormalizedReading n = normalize_reading(nullptr);
    CHECK_FALSE(n.reading.has_value());
  }
  SUBCASE("carriage returns and interior whitespace") {
    CHECK(normalize_text("A\r\nB") == "AB");
    CHECK(normalize_text("two words") == "two words");
    CHECK(normalize_text(" \n ") == "");
  }
  SUBCASE("idempotent and clean at the edges") {
    for (const char* s : {"a\nb", "  x\r", "\n\nweird  mix \r\n"}) {
      const std::string once = normalize_text(s);
      CHECK(normalize_text(once) == once);
      CHECK(once.find('\n') == std::string::npos);
      CHECK(once.find('\r') == std::string::npos);
      if (!once.empty()) {
        CHECK(once.front() != ' ');
        CHECK(once.back() != ' ');
      }
    }
  }
  SUBCASE("end to end over a result") {
    OcrResult r;
    r.image_id = "x";
    r.boxes.push_back(box("WRONG", {{0, 40}, {10, 40}, {10, 50}}));
    r.boxes.push_back(box(" KILOPAS\nCALS ", {{0, 5}, {10, 5}, {10, 15}}));
    const NormalizedReading n = normalized_reading_for(r);
    CHECK(n.reading == std::string("KILOPASCALS"));
    CHECK(n.source_box_index == std::size_t{1});
  }
}

TEST_CASE("cloud response conversion drops the aggregate annotation") {
  const char* cloud = R"({
    "responses": [{
      "textAnnotations": [
        {"description": "FULL TEXT\nAGGREGATE", "boundingPoly": {"vertices": [{"x":0,"y":0},{"x":100,"y":0},{"x":100,"y":100},{"y":100}]}},
        {"description": "FULL", "boundingPoly": {"vertices": [{"x":0,"y":40},{"x":30,"y":40},{"x":30,"y":60},{"x":0,"y":60}]}},
        {"description": "TEXT", "boundingPoly": {"vertices": [{"x":0,"y":5},{"x":30,"y":5},{"x":30,"y":25},{"x":0,"y":25}]}}
      ]
    }]
  })";
  const OcrResult r = convert_cloud_response(cloud, "img/0.png");
  CHECK(r.image_id == "img/0.png");
  REQUIRE(r.boxes.size() == 2);
  CHECK(r.boxes[0].text == "FULL");
  CHECK(normalized_reading_for(r).reading == std::string("TEXT"));
  SUBCASE("autodetection picks the converter") {
    const OcrResult a = parse_any_ocr_response(cloud, "img/0.png");
    CHECK(a.backend == "cloud-converted");
    REQUIRE(a.boxes.size() == 2);
  }
}

TEST_CASE("precomputed directory backend") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "sb_ocr_fixture";
  fs::remove_all(dir);
  fs::create_directories(dir / "images");
  auto write_fixture = [&](const std::string& id, const std::string& word) {
    OcrResult r;
    r.image_id = id;
    r.backend = "fixture";
    r.boxes.push_back(box(word, {{0, 0}, {10, 0}, {10, 10}, {0, 10}}));
    write_file(dir / (id + ".json"), ocr_result_to_json(r).dump());
  };
  write_fixture("images/a.png", "ALPHA");
  write_fixture("images/b.png", "BRAVO");
  write_fixture("images/c.png", "CHARLIE");

  PrecomputedDirBackend backend(dir);
  CHECK_FALSE(backend.needs_images());
  SUBCASE("three fixtures give three results, no network, sorted by id") {
    const auto outcomes = run_ocr({"images/c.png", "images/a.png", "images/b.png"}, backend, nullptr, 4);
    REQUIRE(outcomes.size() == 3);
    CHECK(outcomes[0].image_id == "images/a.png");
    CHECK(outcomes[1].image_id == "images/b.png");
    CHECK(outcomes[2].image_id == "images/c.png");
    for (const auto& o : outcomes) CHECK(o.result.has_value());
  }
  SUBCASE("missing response is a per-image failure, not a crash") {
    const auto outcomes = run_ocr({"images/a.png", "images/missing.png"}, backend, nullptr, 2);
    REQUIRE(outcomes.size() == 2);
    CHECK(outcomes[0].result.has_value());
    CHECK_FALSE(outcomes[1].result.has_value());
    CHECK_FALSE(outcomes[1].error.empty());
  }
  SUBCASE("worker count does not change the serialized output") {
    const std::vector<std::string> ids = {"images/a.png", "images/b.png", "images/c.png", "images/missing.png"};
    const std::string one = ocr_outcomes_to_jsonl(run_ocr(ids, backend, nullptr, 1));
    CHECK(ocr_outcomes_to_jsonl(run_ocr(ids, backend, nullptr, 2)) == one);
    CHECK(ocr_outcomes_to_jsonl(run_ocr(ids, backend, nullptr, 8)) == one);
  }
  SUBCASE("jsonl round trip distinguishes failures") {
    const auto outcomes = run_ocr({"images/a.png", "images/missing.png"}, backend, nullptr, 2);
    const auto records = parse_ocr_jsonl(ocr_outcomes_to_jsonl(outcomes));
    REQUIRE(records.size() == 2);
    CHECK(records.at("images/a.png").result.has_value());
    CHECK_FALSE(records.at("images/missing.png").result.has_value());
    CHECK_FALSE(records.at("images/missing.png").error.empty());
  }
  fs::remove_all(dir);
  SUBCASE("nonexistent directory rejected up front") {
    CHECK_THROWS_AS(PrecomputedDirBackend(dir / "nope"), ConfigError);
  }
}

TEST_CASE("http backend retries transient failures") {
  setenv("SB_TEST_OCR_CRED", "sekrit", 1);

  httplib::Server server;
  std::atomic<int> hits{0};
  server.Post("/ocr", [&](const httplib::Request& req, httplib::Response& res) {
    const int n = ++hits;
    CHECK(req.get_header_value("Authorization") == "Bearer sekrit");
    if (n <= 2) {
      res.status = 500;
      return;
    }
    nlohmann::json j;
    j["image_id"] = req.get_header_value("X-Image-Id");
    j["backend"] = "test-server";
    j["boxes"] = nlohmann::json::array();
    res.set_content(j.dump(), "application/json");
  });
  const int port = server.bind_to_any_port("127.0.0.1");
  REQUIRE(port > 0);
  std::thread server_thread([&] { server.listen_after_bind(); });
  server.wait_until_ready();

  HttpBackendConfig cfg;
  cfg.endpoint = "http://127.0.0.1:" + std::to_string(port) + "/ocr";
  cfg.credential_env = "SB_TEST_OCR_CRED";
  cfg.max_retries = 3;
  cfg.backoff_initial_ms = 1;
  HttpBackend backend(cfg);
  const OcrFetch f = backend.fetch("images/x.png", "fakebytes");
  CHECK(f.ok);
  CHECK(f.attempts == 3);
  const OcrResult r = parse_any_ocr_response(f.body, "images/x.png");
  CHECK(r.image_id == "images/x.png");

  SUBCASE("auth failure is a hard error") {
    server.Post("/auth", [](const httplib::Request&, httplib::Response& res) { res.status = 401; });
    HttpBackendConfig bad = cfg;
    bad.endpoint = "http://127.0.0.1:" + std::to_string(port) + "/auth";
    HttpBackend unauthorized(bad);
    CHECK_THROWS_AS(unauthorized.fetch("images/x.png", "b"), ConfigError);
  }

  server.stop();
  server_thread.join();

  SUBCASE("missing credential env var names the variable") {
    unsetenv("SB_TEST_MISSING_CRED");
    HttpBackendConfig missing = cfg;
    missing.credential_env = "SB_TEST_MISSING_CRED";
    try {
      HttpBackend b(missing);
      FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
      CHECK(std::string(e.what()).find("SB_TEST_MISSING_CRED") != std::string::npos);
    }
  }
}
