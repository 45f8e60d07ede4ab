#include "tokequity/util/http.hpp"

#include <httplib.h>

#include <thread>

#include "tokequity/error.hpp"

namespace tokequity::util {

std::pair<std::string, std::string> split_url(std::string_view url) {
  auto scheme_end = url.find("://");
  if (scheme_end == std::string_view::npos) {
    throw ValidationError("not an absolute URL: " + std::string(url));
  }
  auto scheme = url.substr(0, scheme_end);
  if (scheme != "http" && scheme != "https") {
    throw ValidationError("unsupported URL scheme: " + std::string(url));
  }
  auto path_start = url.find('/', scheme_end + 3);
  if (path_start == std::string_view::npos) return {std::string(url), "/"};
  return {std::string(url.substr(0, path_start)), std::string(url.substr(path_start))};
}

namespace {

bool retryable(int status) { return status == 429 || status >= 500; }

template <typename Send>
HttpResult with_retries(std::string_view url, const RetryPolicy& policy, Send send) {
  auto [origin, path] = split_url(url);
  httplib::Client client(origin);
  client.set_connection_timeout(policy.timeout);
  client.set_read_timeout(policy.timeout);
  client.set_write_timeout(policy.timeout);
  client.set_follow_location(true);

  HttpResult result;
  std::string last_problem;
  auto backoff = policy.initial_backoff;
  for (int attempt = 0; attempt <= policy.max_retries; ++attempt) {
    if (attempt > 0) {
      std::this_thread::sleep_for(backoff);
      backoff *= 2;
    }
    result.attempts = attempt + 1;
    auto res = send(client, path);
    if (!res) {
      last_problem = httplib::to_string(res.error());
      continue;
    }
    result.status = res->status;
    result.body = res->body;
    if (!retryable(res->status)) return result;
    last_problem = "HTTP " + std::to_string(res->status);
  }
  throw TransportError(std::string(url) + ": giving up after " +
                       std::to_string(result.attempts) + " attempts (" + last_problem + ")");
}

httplib::Headers to_httplib(const Headers& headers) {
  httplib::Headers out;
  for (const auto& [k, v] : headers) out.emplace(k, v);
  return out;
}

}  // namespace

HttpResult http_get(std::string_view url, const Headers& headers, const RetryPolicy& policy) {
  auto h = to_httplib(headers);
  return with_retries(url, policy, [&](httplib::Client& c, const std::string& path) {
    return c.Get(path, h);
  });
}

HttpResult http_post(std::string_view url, std::string_view body,
                     std::string_view content_type, const Headers& headers,
                     const RetryPolicy& policy) {
  auto h = to_httplib(headers);
  std::string b(body);
  std::string ct(content_type);
  return with_retries(url, policy, [&](httplib::Client& c, const std::string& path) {
    return c.Post(path, h, b, ct);
  });
}

}  // namespace tokequity::util
