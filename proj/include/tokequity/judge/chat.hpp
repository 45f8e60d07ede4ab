#pragma once

#include <string>
#include <string_view>

#include "tokequity/error.hpp"
#include "tokequity/util/http.hpp"

namespace tokequity::judge {

inline constexpr std::string_view kApiKeyVariable = "TOKEQUITY_API_KEY";

struct ChatRequest {
  std::string model;
  std::string system_prompt;
  std::string user_content;
  double temperature = 0.0;
};

// Chat-completions body with sorted keys and no whitespace:
// {"messages":[{"content":..,"role":"system"},{"content":..,"role":"user"}],
//  "model":..,"temperature":0.0}
std::string canonical_request_json(const ChatRequest& request);
// sha256 hex of canonical_request_json. Keys fixtures and the run log.
std::string request_hash(const ChatRequest& request);

// Rejected credentials. Not retried, and fatal for a whole run.
class AuthError : public Error {
 public:
  explicit AuthError(const std::string& message) : Error(ErrorKind::kTransport, message) {}
};

class ChatClient {
 public:
  virtual ~ChatClient() = default;
  // Assistant message text. Throws a transport Error (or AuthError) when no
  // usable response arrives. Must be safe to call from several threads.
  virtual std::string complete(const ChatRequest& request) = 0;
};

struct HttpChatOptions {
  // Full URL, e.g. https://api.openai.com/v1/chat/completions
  std::string endpoint;
  // Falls back to $TOKEQUITY_API_KEY; no Authorization header when both are empty.
  std::string api_key;
  util::RetryPolicy retry;
};

// OpenAI-compatible client over HTTP(S).
class HttpChatClient : public ChatClient {
 public:
  explicit HttpChatClient(HttpChatOptions options);
  std::string complete(const ChatRequest& request) override;

 private:
  HttpChatOptions options_;
};

}  // namespace tokequity::judge
