#include "qgm/app/report.hpp"

#include "qgm/error.hpp"

namespace qgm::app {

void RunConfig::validate() const {
  if (!(tol > 0.0)) throw Error(Errc::InvalidArgument, "tolerance must be positive");
  if (max_word_len && *max_word_len < 1) throw Error(Errc::InvalidArgument, "max word length must be at least 1");
  if (cap < 1) throw Error(Errc::InvalidArgument, "cap must be at least 1");
}

json RunConfig::to_json() const {
  return {{"mode", exact ? "exact" : "float"},
          {"tol", tol},
          {"max_word_len", max_word_len ? json(*max_word_len) : json("default")},
          {"cap", cap},
          {"seed", seed}};
}

const char* status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::NoFamily: return "no-family";
    case Status::Error: return "error";
  }
  return "error";
}

void Report::finalize() {
  if (status != Status::Pass && witnesses.empty()) witnesses.push_back({{"reason", summary}});
}

json Report::to_json(bool with_timing) const {
  json j = {{"command", command},
            {"config", config.to_json()},
            {"status", status_name(status)},
            {"witnesses", witnesses},
            {"result", result}};
  if (with_timing) j["timing_ms"] = timing_ms;
  return j;
}

int Report::exit_code() const {
  switch (status) {
    case Status::Pass: return 0;
    case Status::Fail:
    case Status::NoFamily: return 1;
    case Status::Error: return 2;
  }
  return 2;
}

Report error_report(const std::string& command, const RunConfig& cfg, const std::string& message) {
  Report r;
  r.command = command;
  r.config = cfg;
  r.status = Status::Error;
  r.summary = message;
  r.witnesses.push_back({{"error", message}});
  return r;
}

json strip_timing(json j) {
  if (j.is_object()) {
    j.erase("timing_ms");
  }
  if (j.is_structured()) {
    for (auto& v : j) v = strip_timing(v);
  }
  return j;
}

}  // namespace qgm::app
