#include "tokequity/judge/mock_server.hpp"

#include <httplib.h>

#include <mutex>
#include <nlohmann/json.hpp>
#include <thread>

#include "tokequity/error.hpp"
#include "tokequity/judge/chat.hpp"
#include "tokequity/util/text.hpp"

namespace tokequity::judge {

std::map<std::string, std::string> load_mock_fixture(const std::filesystem::path& path) {
  try {
    auto doc = nlohmann::json::parse(util::read_file(path));
    return doc.get<std::map<std::string, std::string>>();
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(path.string() + ": not a hash -> response JSON object (" +
                          e.what() + ")");
  }
}

struct MockChatServer::Impl {
  std::map<std::string, std::string> responses;
  httplib::Server server;
  std::thread thread;
  int port = 0;

  mutable std::mutex mu;
  int fail_remaining = 0;
  int fail_status = 500;
  std::string api_key;
  int served = 0;
  std::vector<std::string> unknown;

  void handle(const httplib::Request& req, httplib::Response& res) {
    auto error = [&](int status, const std::string& message) {
      res.status = status;
      res.set_content(nlohmann::json{{"error", {{"message", message}}}}.dump(),
                      "application/json");
    };
    {
      std::lock_guard lock(mu);
      ++served;
      if (fail_remaining > 0) {
        --fail_remaining;
        return error(fail_status, "injected failure");
      }
      if (!api_key.empty() && req.get_header_value("Authorization") != "Bearer " + api_key) {
        return error(401, "invalid api key");
      }
    }

    ChatRequest chat;
    try {
      auto body = nlohmann::json::parse(req.body);
      chat.model = body.at("model").get<std::string>();
      chat.temperature = body.at("temperature").get<double>();
      const auto& messages = body.at("messages");
      if (messages.size() != 2 || messages[0].at("role") != "system" ||
          messages[1].at("role") != "user") {
        return error(400, "expected one system and one user message");
      }
      chat.system_prompt = messages[0].at("content").get<std::string>();
      chat.user_content = messages[1].at("content").get<std::string>();
    } catch (const nlohmann::json::exception& e) {
      return error(400, std::string("bad request body: ") + e.what());
    }
    if (chat.temperature != 0.0) return error(400, "temperature must be 0");

    auto hash = request_hash(chat);
    auto it = responses.find(hash);
    if (it == responses.end()) {
      std::lock_guard lock(mu);
      unknown.push_back(hash);
      return error(404, "no fixture for request " + hash);
    }
    nlohmann::json reply = {
        {"object", "chat.completion"},
        {"model", chat.model},
        {"choices",
         {{{"index", 0},
           {"finish_reason", "stop"},
           {"message", {{"role", "assistant"}, {"content", it->second}}}}}},
    };
    res.set_content(reply.dump(), "application/json");
  }
};

MockChatServer::MockChatServer(std::map<std::string, std::string> responses)
    : impl_(std::make_unique<Impl>()) {
  impl_->responses = std::move(responses);
  impl_->server.Post("/v1/chat/completions",
                     [this](const httplib::Request& req, httplib::Response& res) {
                       impl_->handle(req, res);
                     });
}

MockChatServer::~MockChatServer() { stop(); }

void MockChatServer::start() {
  if (impl_->thread.joinable()) return;
  impl_->port = impl_->server.bind_to_any_port("127.0.0.1");
  if (impl_->port <= 0) throw TransportError("mock server could not bind a port");
  impl_->thread = std::thread([this] { impl_->server.listen_after_bind(); });
  impl_->server.wait_until_ready();
}

void MockChatServer::stop() {
  if (!impl_->thread.joinable()) return;
  impl_->server.stop();
  impl_->thread.join();
}

int MockChatServer::port() const { return impl_->port; }

std::string MockChatServer::endpoint() const {
  return "http://127.0.0.1:" + std::to_string(impl_->port) + "/v1/chat/completions";
}

void MockChatServer::fail_next(int count, int status) {
  std::lock_guard lock(impl_->mu);
  impl_->fail_remaining = count;
  impl_->fail_status = status;
}

void MockChatServer::require_api_key(std::string key) {
  std::lock_guard lock(impl_->mu);
  impl_->api_key = std::move(key);
}

int MockChatServer::requests_served() const {
  std::lock_guard lock(impl_->mu);
  return impl_->served;
}

std::vector<std::string> MockChatServer::unknown_hashes() const {
  std::lock_guard lock(impl_->mu);
  return impl_->unknown;
}

}  // namespace tokequity::judge
