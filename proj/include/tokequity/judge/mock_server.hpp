#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace tokequity::judge {

// Fixture file: a JSON object mapping request_hash -> assistant message text.
std::map<std::string, std::string> load_mock_fixture(const std::filesystem::path& path);

// Local chat-completions stand-in for tests. Looks up the canonical request
// hash of each POST in the fixture; unknown requests get HTTP 404 and
// requests with a non-zero temperature get HTTP 400.
class MockChatServer {
 public:
  explicit MockChatServer(std::map<std::string, std::string> responses);
  ~MockChatServer();

  MockChatServer(const MockChatServer&) = delete;
  MockChatServer& operator=(const MockChatServer&) = delete;

  // Binds 127.0.0.1 on an ephemeral port and serves on a background thread.
  void start();
  void stop();

  int port() const;
  std::string endpoint() const;  // http://127.0.0.1:<port>/v1/chat/completions

  // The next `count` requests are answered with `status` and no content.
  void fail_next(int count, int status);
  // Requests must carry "Authorization: Bearer <key>", else HTTP 401.
  void require_api_key(std::string key);

  int requests_served() const;
  std::vector<std::string> unknown_hashes() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace tokequity::judge
