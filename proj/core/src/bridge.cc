#include "concise/bridge.h"

#include <poll.h>
#include <sys/socket.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <csignal>
#include <cstring>
#include <thread>

#include <json.hpp>

#include "concise/error.h"

namespace concise {
namespace {

using nlohmann::json;

[[noreturn]] void Fail(const std::string& what) { throw InputError("bridge: " + what); }

}  // namespace

std::unique_ptr<BridgeClient> BridgeClient::Launch(const std::string& command,
                                                   std::chrono::milliseconds timeout) {
  int fds[2];
  if (socketpair(AF_UNIX, SOCK_STREAM, 0, fds) != 0) {
    Fail(std::string("socketpair: ") + std::strerror(errno));
  }
  const pid_t pid = fork();
  if (pid < 0) {
    close(fds[0]);
    close(fds[1]);
    Fail(std::string("fork: ") + std::strerror(errno));
  }
  if (pid == 0) {
    setpgid(0, 0);  // lets the destructor kill the shell and its children
    close(fds[0]);
    dup2(fds[1], STDIN_FILENO);
    dup2(fds[1], STDOUT_FILENO);
    close(fds[1]);
    execl("/bin/sh", "sh", "-c", command.c_str(), static_cast<char*>(nullptr));
    _exit(127);
  }
  close(fds[1]);
  return std::unique_ptr<BridgeClient>(new BridgeClient(fds[0], pid, timeout));
}

BridgeClient::~BridgeClient() {
  shutdown(fd_, SHUT_WR);
  close(fd_);
  // Give the process a second to exit on EOF, then kill it.
  int status = 0;
  for (int i = 0; i < 50; ++i) {
    if (waitpid(pid_, &status, WNOHANG) != 0) return;
    std::this_thread::sleep_for(std::chrono::milliseconds(20));
  }
  kill(-pid_, SIGKILL);
  waitpid(pid_, &status, 0);
}

std::string BridgeClient::ReadLine() {
  while (true) {
    const auto nl = buffer_.find('\n');
    if (nl != std::string::npos) {
      std::string line = buffer_.substr(0, nl);
      buffer_.erase(0, nl + 1);
      return line;
    }
    pollfd p{fd_, POLLIN, 0};
    const int ready = poll(&p, 1, static_cast<int>(timeout_.count()));
    if (ready == 0) Fail("timed out waiting for a response");
    if (ready < 0) {
      if (errno == EINTR) continue;
      Fail(std::string("poll: ") + std::strerror(errno));
    }
    char chunk[4096];
    const ssize_t n = recv(fd_, chunk, sizeof chunk, 0);
    if (n < 0) {
      if (errno == EINTR) continue;
      Fail(std::string("read: ") + std::strerror(errno));
    }
    if (n == 0) Fail("process closed its output");
    buffer_.append(chunk, static_cast<std::size_t>(n));
  }
}

std::string BridgeClient::Exchange(const std::string& kind, const std::string& fields_json) {
  json req = json::parse(fields_json);
  const std::string id = std::to_string(next_id_++);
  req["kind"] = kind;
  req["id"] = id;
  const std::string line = req.dump() + "\n";
  for (std::size_t off = 0; off < line.size();) {
    const ssize_t n = send(fd_, line.data() + off, line.size() - off, MSG_NOSIGNAL);
    if (n < 0) {
      if (errno == EINTR) continue;
      Fail(std::string("write: ") + std::strerror(errno));
    }
    off += static_cast<std::size_t>(n);
  }
  while (true) {
    const std::string text = ReadLine();
    if (text.find_first_not_of(" \t\r") == std::string::npos) continue;
    json resp;
    try {
      resp = json::parse(text);
    } catch (const json::parse_error&) {
      Fail("malformed response line: " + text.substr(0, 80));
    }
    if (!resp.is_object()) Fail("response is not an object");
    if (!resp.contains("id")) {
      if (resp.contains("model") && resp["model"].is_string()) {
        model_ = resp["model"].get<std::string>();
        continue;
      }
      Fail("response without id");
    }
    const json& rid = resp["id"];
    const std::string got = rid.is_string() ? rid.get<std::string>() : rid.dump();
    if (got != id) Fail("response id " + got + " does not match request " + id);
    if (resp.contains("error")) {
      Fail("request " + id + " failed: " +
           (resp["error"].is_string() ? resp["error"].get<std::string>() : resp["error"].dump()));
    }
    return resp.dump();
  }
}

std::string BridgeClient::parse_conllu_text(const std::string& text) {
  const json resp = json::parse(Exchange("parse", json{{"text", text}}.dump()));
  if (!resp.contains("conllu") || !resp["conllu"].is_string()) Fail("parse response without conllu");
  return resp["conllu"].get<std::string>();
}

DepTree BridgeClient::parse(const std::string& text) {
  const auto trees = parse_conllu(parse_conllu_text(text));
  if (trees.size() != 1) {
    Fail("expected one sentence in parse response, got " + std::to_string(trees.size()));
  }
  return trees.front();
}

double BridgeClient::similarity(const std::string& a, const std::string& b) {
  const json resp = json::parse(Exchange("similarity", json{{"a", a}, {"b", b}}.dump()));
  if (!resp.contains("score") || !resp["score"].is_number()) Fail("similarity response without score");
  const double s = resp["score"].get<double>();
  if (!(s >= 0.0 && s <= 1.0)) Fail("similarity score outside [0, 1]");
  return s;
}

}  // namespace concise
