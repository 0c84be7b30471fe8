#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "spellbench/error.hpp"
#include "spellbench/io.hpp"
#include "spellbench/unicode.hpp"

#include "json.hpp"

namespace spellbench {

struct Vertex {
  double x = 0;
  double y = 0;  // grows downward
};

struct OcrBox {
  std::string text;  // may contain newlines
  std::vector<Vertex> polygon;

  double min_y() const {
    double m = polygon.front().y;
    for (const Vertex& v : polygon) m = std::min(m, v.y);
    return m;
  }
  double min_x() const {
    double m = polygon.front().x;
    for (const Vertex& v : polygon) m = std::min(m, v.x);
    return m;
  }
};

struct OcrResult {
  std::string image_id;
  std::vector<OcrBox> boxes;
  std::string backend;
  std::optional<std::string> raw_ref;  // path to the unmodified backend response
};

struct NormalizedReading {
  std::optional<std::string> reading;  // nullopt = no text detected
  std::optional<std::size_t> source_box_index;
};

// ---- neutral schema ---------------------------------------------------------

inline nlohmann::json ocr_result_to_json(const OcrResult& r) {
  nlohmann::json j;
  j["image_id"] = r.image_id;
  j["backend"] = r.backend;
  j["boxes"] = nlohmann::json::array();
  for (const OcrBox& box : r.boxes) {
    nlohmann::json jb;
    jb["text"] = box.text;
    jb["polygon"] = nlohmann::json::array();
    for (const Vertex& v : box.polygon) jb["polygon"].push_back({{"x", v.x}, {"y", v.y}});
    j["boxes"].push_back(std::move(jb));
  }
  return j;
}

inline OcrResult parse_ocr_json(std::string_view bytes) {
  nlohmann::json j = nlohmann::json::parse(bytes, nullptr, false);
  if (j.is_discarded() || !j.is_object()) throw ParseError("OCR record is not a JSON object");
  if (!j.contains("image_id")) throw ParseError("missing field image_id");
  if (!j["image_id"].is_string() || j["image_id"].get<std::string>().empty())
    throw ParseError("invalid field image_id");
  OcrResult r;
  r.image_id = j["image_id"].get<std::string>();
  if (j.contains("backend")) {
    if (!j["backend"].is_string()) throw ParseError("invalid field backend");
    r.backend = j["backend"].get<std::string>();
  }
  if (!j.contains("boxes")) throw ParseError("missing field boxes");
  if (!j["boxes"].is_array()) throw ParseError("invalid field boxes");
  for (const auto& jb : j["boxes"]) {
    if (!jb.is_object() || !jb.contains("text") || !jb["text"].is_string())
      throw ParseError("invalid field boxes[].text");
    if (!jb.contains("polygon") || !jb["polygon"].is_array() || jb["polygon"].size() < 3)
      throw ParseError("invalid field boxes[].polygon (need >= 3 vertices)");
    OcrBox box;
    box.text = jb["text"].get<std::string>();
    for (const auto& jv : jb["polygon"]) {
      if (!jv.is_object() || !jv.contains("x") || !jv.contains("y") || !jv["x"].is_number() ||
          !jv["y"].is_number())
        throw ParseError("invalid field boxes[].polygon[] (need numeric x and y)");
      const Vertex v{jv["x"].get<double>(), jv["y"].get<double>()};
      if (!std::isfinite(v.x) || !std::isfinite(v.y) || v.x < 0 || v.y < 0)
        throw ParseError("invalid field boxes[].polygon[] (vertices must be finite and non-negative)");
      box.polygon.push_back(v);
    }
    r.boxes.push_back(std::move(box));
  }
  return r;
}

// ---- post-processing --------------------------------------------------------

// The box with the smallest vertex y; ties broken by smallest vertex x,
// then by input order.
inline std::optional<std::size_t> select_topmost_index(const OcrResult& r) {
  if (r.boxes.empty()) return std::nullopt;
  std::size_t best = 0;
  for (std::size_t i = 1; i < r.boxes.size(); ++i) {
    const double y = r.boxes[i].min_y(), by = r.boxes[best].min_y();
    if (y < by || (y == by && r.boxes[i].min_x() < r.boxes[best].min_x())) best = i;
  }
  return best;
}

inline const OcrBox* select_topmost(const OcrResult& r) {
  const auto i = select_topmost_index(r);
  return i ? &r.boxes[*i] : nullptr;
}

// Deletes every newline (text wrapped mid-word re-joins seamlessly) and
// trims edge whitespace. Case is preserved; folding happens at match time.
inline std::string normalize_text(std::string_view text) {
  std::string joined;
  joined.reserve(text.size());
  for (char c : text)
    if (c != '\n' && c != '\r') joined.push_back(c);
  return uni::trim(joined);
}

inline NormalizedReading normalize_reading(const OcrBox* box) {
  NormalizedReading out;
  if (box) out.reading = normalize_text(box->text);
  return out;
}

inline NormalizedReading normalized_reading_for(const OcrResult& r) {
  NormalizedReading out;
  if (const auto i = select_topmost_index(r)) {
    out = normalize_reading(&r.boxes[*i]);
    out.source_box_index = i;
  }
  return out;
}

// ---- cloud response conversion ----------------------------------------------

// Converts the common cloud shape where textAnnotations[0] aggregates the
// full detected text and the rest are per-block boxes. The aggregate is
// dropped: the top-most rule presumes comparable boxes.
inline OcrResult convert_cloud_response(std::string_view bytes, std::string_view image_id) {
  nlohmann::json j = nlohmann::json::parse(bytes, nullptr, false);
  if (j.is_discarded()) throw ParseError("cloud OCR response is not valid JSON");
  if (j.is_object() && j.contains("responses") && j["responses"].is_array() && !j["responses"].empty())
    j = j["responses"][0];
  if (!j.is_object() || !j.contains("textAnnotations") || !j["textAnnotations"].is_array())
    throw ParseError("missing field textAnnotations");
  OcrResult r;
  r.image_id = std::string(image_id);
  r.backend = "cloud-converted";
  const auto& anns = j["textAnnotations"];
  for (std::size_t i = 1; i < anns.size(); ++i) {  // [0] is the aggregate
    const auto& a = anns[i];
    if (!a.is_object() || !a.contains("description")) throw ParseError("invalid field textAnnotations[].description");
    OcrBox box;
    box.text = a["description"].get<std::string>();
    if (a.contains("boundingPoly") && a["boundingPoly"].contains("vertices")) {
      for (const auto& jv : a["boundingPoly"]["vertices"]) {
        // Cloud responses omit zero-valued coordinates.
        Vertex v;
        if (jv.contains("x")) v.x = jv["x"].get<double>();
        if (jv.contains("y")) v.y = jv["y"].get<double>();
        box.polygon.push_back(v);
      }
    }
    if (box.polygon.size() < 3) throw ParseError("invalid field textAnnotations[].boundingPoly");
    r.boxes.push_back(std::move(box));
  }
  return r;
}

// Accepts either the neutral schema or a cloud-shaped response.
inline OcrResult parse_any_ocr_response(std::string_view bytes, std::string_view image_id) {
  nlohmann::json j = nlohmann::json::parse(bytes, nullptr, false);
  if (!j.is_discarded() && j.is_object() &&
      (j.contains("textAnnotations") || j.contains("responses")))
    return convert_cloud_response(bytes, image_id);
  OcrResult r = parse_ocr_json(bytes);
  if (!image_id.empty() && r.image_id != image_id)
    throw ParseError("OCR response image_id '" + r.image_id + "' does not match requested '" +
                     std::string(image_id) + "'");
  return r;
}

// ---- backends ---------------------------------------------------------------

struct OcrFetch {
  std::string body;     // raw response
  bool ok = false;
  std::string error;    // set when !ok
  int attempts = 1;
};

// A backend fetches the raw OCR response for one image.
class OcrBackend {
 public:
  virtual ~OcrBackend() = default;
  virtual OcrFetch fetch(const std::string& image_id, const std::string& image_bytes) = 0;
  // Precomputed backends replay stored responses and never read images.
  virtual bool needs_images() const { return true; }
};

// Replays responses from `<root>/<image_id>.json`.
class PrecomputedDirBackend : public OcrBackend {
 public:
  explicit PrecomputedDirBackend(std::filesystem::path root) : root_(std::move(root)) {
    if (!std::filesystem::is_directory(root_))
      throw ConfigError("precomputed OCR directory does not exist: " + root_.string());
  }

  OcrFetch fetch(const std::string& image_id, const std::string&) override {
    OcrFetch f;
    const std::filesystem::path path = root_ / (image_id + ".json");
    if (!std::filesystem::exists(path)) {
      f.error = "no precomputed response at " + path.string();
      return f;
    }
    f.body = read_file(path);
    f.ok = true;
    return f;
  }

  bool needs_images() const override { return false; }

 private:
  std::filesystem::path root_;
};

struct OcrOutcome {
  std::string image_id;
  std::optional<OcrResult> result;  // nullopt = pipeline error
  std::string error;
  int attempts = 1;
};

using ImageLoader = std::function<std::string(const std::string& image_path)>;

// Runs the backend over every manifest image with at most `workers`
// in-flight requests. Outcomes come back sorted by image_id, so output
// bytes do not depend on completion order. Raw responses are persisted
// under raw_dir when given.
inline std::vector<OcrOutcome> run_ocr(const std::vector<std::string>& image_ids, OcrBackend& backend,
                                       const ImageLoader& load_image, unsigned workers,
                                       const std::optional<std::filesystem::path>& raw_dir = std::nullopt) {
  if (workers == 0) workers = 1;
  std::vector<OcrOutcome> outcomes(image_ids.size());
  std::atomic<std::size_t> cursor{0};
  auto work = [&] {
    for (;;) {
      const std::size_t i = cursor.fetch_add(1);
      if (i >= image_ids.size()) return;
      const std::string& id = image_ids[i];
      OcrOutcome& out = outcomes[i];
      out.image_id = id;
      try {
        std::string bytes;
        if (backend.needs_images()) bytes = load_image(id);
        const OcrFetch f = backend.fetch(id, bytes);
        out.attempts = f.attempts;
        if (!f.ok) {
          out.error = f.error;
          continue;
        }
        if (raw_dir) write_file(*raw_dir / (id + ".json"), f.body);
        OcrResult r = parse_any_ocr_response(f.body, id);
        if (raw_dir) r.raw_ref = (*raw_dir / (id + ".json")).string();
        out.result = std::move(r);
      } catch (const ConfigError&) {
        throw;
      } catch (const std::exception& e) {
        out.error = e.what();
      }
    }
  };
  std::vector<std::thread> pool;
  const unsigned n = std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(1, image_ids.size())));
  for (unsigned t = 0; t < n; ++t) pool.emplace_back(work);
  for (auto& th : pool) th.join();
  std::sort(outcomes.begin(), outcomes.end(),
            [](const OcrOutcome& a, const OcrOutcome& b) { return a.image_id < b.image_id; });
  return outcomes;
}

inline std::string ocr_outcomes_to_jsonl(const std::vector<OcrOutcome>& outcomes) {
  std::string out;
  for (const OcrOutcome& o : outcomes) {
    if (o.result) {
      out += ocr_result_to_json(*o.result).dump();
    } else {
      nlohmann::json j;
      j["image_id"] = o.image_id;
      j["error"] = o.error;
      out += j.dump();
    }
    out += '\n';
  }
  return out;
}

struct OcrRecord {
  std::optional<OcrResult> result;
  std::string error;  // set when result is absent
};

inline std::map<std::string, OcrRecord> parse_ocr_jsonl(std::string_view text) {
  std::map<std::string, OcrRecord> by_id;
  std::size_t line_no = 0;
  for (const std::string& line : split_lines(text)) {
    ++line_no;
    if (line.empty()) continue;
    nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object())
      throw ParseError("OCR results line " + std::to_string(line_no) + " is not a JSON object");
    if (j.contains("error")) {
      if (!j.contains("image_id") || !j["image_id"].is_string())
        throw ParseError("OCR results line " + std::to_string(line_no) + ": missing field image_id");
      by_id[j["image_id"].get<std::string>()] = OcrRecord{std::nullopt, j["error"].get<std::string>()};
      continue;
    }
    OcrResult r = parse_ocr_json(line);
    std::string id = r.image_id;
    by_id[id] = OcrRecord{std::move(r), ""};
  }
  return by_id;
}

}  // namespace spellbench
