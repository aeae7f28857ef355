#ifdef ARENA_HAVE_OPENSSL
#define CPPHTTPLIB_OPENSSL_SUPPORT
#endif

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <semaphore>
#include <stdexcept>
#include <thread>

#include "arena/agents.hpp"
#include "httplib.h"
#include "json.hpp"

namespace arena::agents {
namespace detail {

namespace {

struct Endpoint {
  std::string base;  // scheme://host[:port]
  std::string path;  // /v1/chat/completions
};

Endpoint split_endpoint(const std::string& url) {
  size_t scheme = url.find("://");
  if (scheme == std::string::npos)
    throw std::invalid_argument("endpoint must include a scheme: " + url);
#ifndef ARENA_HAVE_OPENSSL
  if (url.rfind("https://", 0) == 0)
    throw std::invalid_argument("built without TLS support; use an http endpoint");
#endif
  size_t slash = url.find('/', scheme + 3);
  if (slash == std::string::npos) return {url, "/"};
  return {url.substr(0, slash), url.substr(slash)};
}

std::string load_credential(const AgentSpec& spec) {
  if (spec.credential_env.empty())
    throw std::invalid_argument("remote agent needs credential_env");
  const char* value = std::getenv(spec.credential_env.c_str());
  if (!value || !*value)
    throw std::invalid_argument("credential environment variable " +
                                spec.credential_env + " is not set");
  return value;
}

// One POST to an OpenAI-style chat completions endpoint.  Throws
// AgentFailure on transport or server errors; retryable ones are marked
// so the caller can back off and try again.
struct RequestError : AgentFailure {
  RequestError(const std::string& what, bool retryable_)
      : AgentFailure(what), retryable(retryable_) {}
  bool retryable;
};

std::string post_once(const AgentSpec& spec, const std::string& credential,
                      const std::string& prompt) {
  Endpoint ep = split_endpoint(spec.endpoint);
  httplib::Client client(ep.base);
  time_t secs = static_cast<time_t>(spec.timeout_seconds);
  time_t usecs = static_cast<time_t>(
      (spec.timeout_seconds - std::floor(spec.timeout_seconds)) * 1e6);
  client.set_connection_timeout(secs, usecs);
  client.set_read_timeout(secs, usecs);
  client.set_write_timeout(secs, usecs);
  client.set_bearer_token_auth(credential);

  nlohmann::json body = {
      {"model", spec.model},
      {"messages",
       nlohmann::json::array({{{"role", "user"}, {"content", prompt}}})},
      {"max_tokens", spec.max_output_tokens},
  };
  httplib::Result res = client.Post(ep.path, body.dump(), "application/json");
  if (!res)
    throw RequestError("transport error: " + httplib::to_string(res.error()),
                       true);
  if (res->status == 429 || res->status >= 500)
    throw RequestError("server returned status " + std::to_string(res->status),
                       true);
  if (res->status != 200)
    throw RequestError("server returned status " + std::to_string(res->status),
                       false);
  nlohmann::json reply = nlohmann::json::parse(res->body, nullptr, false);
  if (reply.is_discarded())
    throw RequestError("response is not valid JSON", false);
  const nlohmann::json* content =
      reply.contains("choices") && reply["choices"].is_array() &&
              !reply["choices"].empty()
          ? &reply["choices"][0]
          : nullptr;
  if (!content || !content->contains("message") ||
      !(*content)["message"].contains("content") ||
      !(*content)["message"]["content"].is_string())
    throw RequestError("response lacks choices[0].message.content", false);
  return (*content)["message"]["content"].get<std::string>();
}

std::string post_with_retries(const AgentSpec& spec,
                              const std::string& credential,
                              const std::string& prompt) {
  int attempts = spec.retries + 1;
  for (int attempt = 1;; ++attempt) {
    try {
      return post_once(spec, credential, prompt);
    } catch (const RequestError& e) {
      if (!e.retryable || attempt >= attempts) throw;
      std::this_thread::sleep_for(std::chrono::milliseconds(100 * attempt));
    }
  }
}

std::ptrdiff_t checked_slots(int n) {
  if (n < 1) throw std::invalid_argument("max_in_flight must be at least 1");
  return n;
}

class RemoteLlmAgent final : public Agent {
 public:
  explicit RemoteLlmAgent(AgentSpec spec)
      : spec_(std::move(spec)),
        credential_(load_credential(spec_)),
        slots_(checked_slots(spec_.max_in_flight)) {
    if (spec_.retries < 0)
      throw std::invalid_argument("retries must be non-negative");
    split_endpoint(spec_.endpoint);  // validate eagerly
  }

  const std::string& id() const override { return spec_.id; }

  std::string reply(const TurnView& view, RngStream&) override {
    slots_.acquire();
    struct Release {
      std::counting_semaphore<>& s;
      ~Release() { s.release(); }
    } release{slots_};
    return post_with_retries(spec_, credential_, view.prompt);
  }

 private:
  AgentSpec spec_;
  std::string credential_;
  std::counting_semaphore<> slots_;
};

}  // namespace

std::unique_ptr<Agent> make_remote_llm_agent(const AgentSpec& spec) {
  return std::make_unique<RemoteLlmAgent>(spec);
}

}  // namespace detail

std::string remote_llm_reply(const AgentSpec& spec, const std::string& prompt) {
  return detail::post_with_retries(spec, detail::load_credential(spec), prompt);
}

}  // namespace arena::agents
