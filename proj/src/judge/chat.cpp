#include "tokequity/judge/chat.hpp"

#include <fmt/format.h>

#include <cstdlib>
#include <nlohmann/json.hpp>

#include "tokequity/util/text.hpp"

namespace tokequity::judge {

std::string canonical_request_json(const ChatRequest& request) {
  nlohmann::json body;
  body["model"] = request.model;
  body["temperature"] = request.temperature;
  body["messages"] = nlohmann::json::array({
      {{"role", "system"}, {"content", request.system_prompt}},
      {{"role", "user"}, {"content", request.user_content}},
  });
  // nlohmann::json objects are std::map-backed, so keys come out sorted.
  return body.dump();
}

std::string request_hash(const ChatRequest& request) {
  return util::sha256_hex(canonical_request_json(request));
}

HttpChatClient::HttpChatClient(HttpChatOptions options) : options_(std::move(options)) {
  if (options_.endpoint.empty()) throw ValidationError("chat endpoint is not configured");
  util::split_url(options_.endpoint);
  if (options_.api_key.empty()) {
    if (const char* key = std::getenv(std::string(kApiKeyVariable).c_str())) {
      options_.api_key = key;
    }
  }
}

std::string HttpChatClient::complete(const ChatRequest& request) {
  util::Headers headers;
  if (!options_.api_key.empty()) {
    headers.emplace_back("Authorization", "Bearer " + options_.api_key);
  }
  auto res = util::http_post(options_.endpoint, canonical_request_json(request),
                             "application/json", headers, options_.retry);
  if (res.status == 401 || res.status == 403) {
    throw AuthError(fmt::format("{}: authentication rejected (HTTP {}); check {}",
                                options_.endpoint, res.status, kApiKeyVariable));
  }
  if (res.status != 200) {
    throw TransportError(fmt::format("{}: HTTP {}: {}", options_.endpoint, res.status,
                                     res.body.substr(0, 200)));
  }
  try {
    auto doc = nlohmann::json::parse(res.body);
    return doc.at("choices").at(0).at("message").at("content").get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw TransportError(fmt::format("{}: malformed chat response ({})", options_.endpoint,
                                     e.what()));
  }
}

}  // namespace tokequity::judge
