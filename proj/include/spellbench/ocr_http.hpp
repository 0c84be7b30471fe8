#pragma once

#include <chrono>
#include <cstdlib>
#include <string>
#include <thread>

#include "spellbench/error.hpp"
#include "spellbench/ocr.hpp"

#include "httplib.h"

namespace spellbench {

struct HttpBackendConfig {
  std::string endpoint;                        // e.g. http://host:port/ocr
  std::string credential_env = "OCR_CREDENTIAL";
  int timeout_seconds = 30;
  int max_retries = 3;                         // retries after the first attempt
  int backoff_initial_ms = 100;                // doubles per retry
};

// Posts preprocessed image bytes to an OCR endpoint and retries transient
// failures with exponential backoff. The credential is read from the
// configured environment variable at construction; a missing variable is
// a startup error, a 401/403 a hard error, exhausted retries a per-image
// failure record.
class HttpBackend : public OcrBackend {
 public:
  explicit HttpBackend(HttpBackendConfig config) : config_(std::move(config)) {
    const char* cred = std::getenv(config_.credential_env.c_str());
    if (cred == nullptr || *cred == '\0')
      throw ConfigError("OCR credential environment variable " + config_.credential_env + " is not set");
    credential_ = cred;

    const std::string& url = config_.endpoint;
    const std::size_t scheme = url.find("://");
    if (scheme == std::string::npos) throw ConfigError("OCR endpoint must be a full URL: " + url);
    const std::size_t path_start = url.find('/', scheme + 3);
    host_ = url.substr(0, path_start == std::string::npos ? url.size() : path_start);
    path_ = path_start == std::string::npos ? "/" : url.substr(path_start);
  }

  OcrFetch fetch(const std::string& image_id, const std::string& image_bytes) override {
    OcrFetch f;
    int backoff_ms = config_.backoff_initial_ms;
    for (int attempt = 0; attempt <= config_.max_retries; ++attempt) {
      f.attempts = attempt + 1;
      if (attempt > 0) {
        std::this_thread::sleep_for(std::chrono::milliseconds(backoff_ms));
        backoff_ms *= 2;
      }
      httplib::Client client(host_);
      client.set_connection_timeout(config_.timeout_seconds);
      client.set_read_timeout(config_.timeout_seconds);
      httplib::Headers headers{{"Authorization", "Bearer " + credential_},
                               {"X-Image-Id", image_id}};
      auto res = client.Post(path_, headers, image_bytes, "application/octet-stream");
      if (!res) {
        f.error = "transport error: " + httplib::to_string(res.error());
        continue;
      }
      if (res->status == 401 || res->status == 403)
        throw ConfigError("OCR endpoint rejected the credential (HTTP " + std::to_string(res->status) + ")");
      if (res->status >= 500 || res->status == 429) {
        f.error = "HTTP " + std::to_string(res->status);
        continue;
      }
      if (res->status != 200) {
        f.error = "HTTP " + std::to_string(res->status);
        return f;
      }
      f.body = res->body;
      f.ok = true;
      f.error.clear();
      return f;
    }
    f.error = "retries exhausted: " + f.error;
    return f;
  }

 private:
  HttpBackendConfig config_;
  std::string credential_;
  std::string host_;
  std::string path_;
};

}  // namespace spellbench
