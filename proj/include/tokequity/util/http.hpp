#pragma once

#include <chrono>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tokequity::util {

// "https://host:port/some/path?q" -> {"https://host:port", "/some/path?q"}.
// Throws a validation error for anything that is not http(s).
std::pair<std::string, std::string> split_url(std::string_view url);

struct RetryPolicy {
  int max_retries = 3;
  std::chrono::milliseconds initial_backoff{500};  // doubled after every retry
  std::chrono::seconds timeout{60};
};

struct HttpResult {
  int status = 0;
  std::string body;
  int attempts = 0;
};

using Headers = std::vector<std::pair<std::string, std::string>>;

// Connection failures, 429 and 5xx are retried; anything else is returned to
// the caller as-is. Throws a transport error when every attempt failed to get
// a response or the last one was still retryable.
HttpResult http_get(std::string_view url, const Headers& headers, const RetryPolicy& policy);
HttpResult http_post(std::string_view url, std::string_view body,
                     std::string_view content_type, const Headers& headers,
                     const RetryPolicy& policy);

}  // namespace tokequity::util
