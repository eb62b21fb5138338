#ifndef CONCISE_BRIDGE_H_
#define CONCISE_BRIDGE_H_

#include <chrono>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "concise/conllu.h"

namespace concise {

class SimilarityScorer {
 public:
  virtual ~SimilarityScorer() = default;
  // Symmetric similarity in [0, 1].
  virtual double similarity(const std::string& a, const std::string& b) = 0;
};

class SentenceParser {
 public:
  virtual ~SentenceParser() = default;
  // Dependency parse of one sentence.
  virtual DepTree parse(const std::string& text) = 0;
};

// Client for an external bridge process speaking newline-delimited JSON over
// stdin/stdout:
//   -> {"kind": "parse", "id": "7", "text": "..."}
//   <- {"id": "7", "conllu": "..."}
//   -> {"kind": "similarity", "id": "8", "a": "...", "b": "..."}
//   <- {"id": "8", "score": 0.93}
// Any response may instead carry {"error": "..."}. The process may print one
// header line with a "model" key (and no "id") before its first response.
// Requests are sent one at a time. Failures throw InputError.
class BridgeClient : public SimilarityScorer, public SentenceParser {
 public:
  // Runs `command` through /bin/sh.
  static std::unique_ptr<BridgeClient> Launch(
      const std::string& command,
      std::chrono::milliseconds timeout = std::chrono::seconds(300));
  ~BridgeClient() override;

  BridgeClient(const BridgeClient&) = delete;
  BridgeClient& operator=(const BridgeClient&) = delete;

  std::string parse_conllu_text(const std::string& text);
  DepTree parse(const std::string& text) override;
  double similarity(const std::string& a, const std::string& b) override;

  // Model id from the header line, once one has been seen.
  const std::optional<std::string>& model() const { return model_; }

 private:
  BridgeClient(int fd, int pid, std::chrono::milliseconds timeout)
      : fd_(fd), pid_(pid), timeout_(timeout) {}

  // Sends one request object (serialized JSON, no id) and returns the
  // matching response object serialized.
  std::string Exchange(const std::string& kind, const std::string& fields_json);
  std::string ReadLine();

  int fd_;
  int pid_;
  std::chrono::milliseconds timeout_;
  std::string buffer_;
  std::optional<std::string> model_;
  unsigned long next_id_ = 1;
};

}  // namespace concise

#endif  // CONCISE_BRIDGE_H_
