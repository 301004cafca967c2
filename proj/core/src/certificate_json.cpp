#include "permcomm/decompose.hpp"
#include "permcomm/errors.hpp"

#include <json.hpp>

namespace permcomm {

using ojson = nlohmann::ordered_json;

// Field order is fixed so that equal certificates serialize to identical
// bytes: n, p, mu, sigma, tau_even, tau_odd, transposition, seed, checks,
// trace.
std::string certificate_to_json(const Certificate &cert) {
  ojson j;
  j["n"] = cert.n;
  j["p"] = cert.p;
  j["mu"] = format_cycles(cert.mu);
  j["sigma"] = format_cycles(cert.sigma);
  j["tau_even"] = format_cycles(cert.tau_even);
  j["tau_odd"] = format_cycles(cert.tau_odd);
  j["transposition"] = format_cycles(cert.transposition);
  j["seed"] = cert.seed;
  ojson checks = ojson::object();
  for (const auto &[name, ok] : cert.checks)
    checks[name] = ok;
  j["checks"] = std::move(checks);
  ojson trace = ojson::array();
  for (const TraceStep &step : cert.trace) {
    ojson rec;
    rec["step"] = step.step;
    rec["before"] = step.before;
    rec["after"] = step.after;
    trace.push_back(std::move(rec));
  }
  j["trace"] = std::move(trace);
  return j.dump(2);
}

Certificate certificate_from_json(const std::string &text) {
  ojson j;
  try {
    j = ojson::parse(text);
  } catch (const ojson::parse_error &e) {
    throw SyntaxError(std::string("certificate is not valid JSON: ") +
                      e.what());
  }
  try {
    Certificate cert;
    cert.n = j.at("n").get<int>();
    if (cert.n < 1)
      throw SyntaxError("certificate degree must be >= 1");
    cert.p = j.at("p").get<int>();
    cert.mu = parse_cycles(j.at("mu").get<std::string>(), cert.n);
    cert.sigma = parse_cycles(j.at("sigma").get<std::string>(), cert.n);
    cert.tau_even =
        parse_cycles(j.at("tau_even").get<std::string>(), cert.n);
    cert.tau_odd = parse_cycles(j.at("tau_odd").get<std::string>(), cert.n);
    cert.transposition =
        parse_cycles(j.at("transposition").get<std::string>(), cert.n);
    cert.seed = j.at("seed").get<uint64_t>();
    for (const auto &[name, value] : j.at("checks").items())
      cert.checks.emplace_back(name, value.get<bool>());
    for (const ojson &rec : j.at("trace")) {
      TraceStep step;
      step.step = rec.at("step").get<std::string>();
      step.before = rec.at("before").get<std::string>();
      step.after = rec.at("after").get<std::string>();
      cert.trace.push_back(std::move(step));
    }
    return cert;
  } catch (const Error &) {
    throw;
  } catch (const std::exception &e) {
    throw SyntaxError(std::string("malformed certificate: ") + e.what());
  }
}

} // namespace permcomm
