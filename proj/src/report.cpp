#include "loopforge/report.hpp"

#include <array>
#include <string_view>

namespace loopforge {

namespace {

constexpr std::array<std::string_view, 13> kCountKeys = {
    "order", "h",     "bs",    "sbs",  "ssym",       "aum",    "sa",
    "aut",   "omega", "theta", "n_mu", "n_mu_cap_h", "ker_phi"};

nlohmann::ordered_json check_json(const CheckResult& c) {
  return {{"status", to_string(c.status)}, {"detail", c.detail}};
}

}  // namespace

nlohmann::ordered_json to_json(const CardinalityReport& r) {
  nlohmann::ordered_json doc;
  doc["order"] = r.order;
  doc["h"] = r.h;
  doc["bs"] = r.bs;
  doc["sbs"] = r.sbs;
  doc["ssym"] = r.ssym;
  doc["aum"] = r.aum;
  doc["sa"] = r.sa;
  doc["aut"] = r.aut;
  doc["omega"] = r.omega;
  doc["theta"] = r.theta;
  doc["n_mu"] = r.n_mu;
  doc["n_mu_cap_h"] = r.n_mu_cap_h;
  doc["ker_phi"] = r.ker_phi;
  nlohmann::ordered_json checks = nlohmann::ordered_json::object();
  for (std::size_t i = 0; i < kCheckKeys.size(); ++i) {
    checks[std::string(kCheckKeys[i])] = check_json(r.checks[i]);
  }
  doc["checks"] = std::move(checks);
  return doc;
}

nlohmann::ordered_json to_json(const AggregateReport& a) {
  nlohmann::ordered_json doc;
  doc["order"] = a.order;
  doc["s_subgroups"] = a.s_subgroups;
  doc["bs"] = a.bs;
  doc["weighted_sum"] = a.weighted_sum;
  doc["t14"] = check_json(a.t14);
  return doc;
}

CardinalityReport report_from_json(const nlohmann::json& doc) {
  CardinalityReport r;
  r.order = doc.at("order").get<std::size_t>();
  r.h = doc.at("h").get<std::size_t>();
  r.bs = doc.at("bs").get<std::size_t>();
  r.sbs = doc.at("sbs").get<std::size_t>();
  r.ssym = doc.at("ssym").get<std::size_t>();
  r.aum = doc.at("aum").get<std::size_t>();
  r.sa = doc.at("sa").get<std::size_t>();
  r.aut = doc.at("aut").get<std::size_t>();
  r.omega = doc.at("omega").get<std::size_t>();
  r.theta = doc.at("theta").get<std::size_t>();
  r.n_mu = doc.at("n_mu").get<std::size_t>();
  r.n_mu_cap_h = doc.at("n_mu_cap_h").get<std::size_t>();
  r.ker_phi = doc.at("ker_phi").get<std::size_t>();
  for (std::size_t i = 0; i < kCheckKeys.size(); ++i) {
    const auto& c = doc.at("checks").at(std::string(kCheckKeys[i]));
    const auto status = c.at("status").get<std::string>();
    r.checks[i].status = status == "pass"   ? CheckStatus::Pass
                         : status == "fail" ? CheckStatus::Fail
                                            : CheckStatus::NotApplicable;
    r.checks[i].detail = c.at("detail").get<std::string>();
  }
  if (r.sbs != 0 && r.bs % r.sbs == 0) r.bs_sbs_index = r.bs / r.sbs;
  return r;
}

bool matches_report_schema(const nlohmann::json& doc, std::string* why) {
  const auto reject = [&](std::string reason) {
    if (why) *why = std::move(reason);
    return false;
  };
  if (!doc.is_object()) return reject("document is not an object");
  if (doc.size() != kCountKeys.size() + 1) return reject("unexpected number of keys");
  for (auto key : kCountKeys) {
    auto it = doc.find(std::string(key));
    if (it == doc.end()) return reject("missing key " + std::string(key));
    if (!it->is_number_unsigned() || it->get<std::size_t>() == 0) {
      return reject("key " + std::string(key) + " is not a positive integer");
    }
  }
  auto checks = doc.find("checks");
  if (checks == doc.end() || !checks->is_object()) return reject("missing checks object");
  if (checks->size() != kCheckKeys.size()) return reject("unexpected number of checks");
  for (auto key : kCheckKeys) {
    auto it = checks->find(std::string(key));
    if (it == checks->end()) return reject("missing check " + std::string(key));
    if (!it->is_object() || it->size() != 2) return reject("malformed check " + std::string(key));
    auto status = it->find("status");
    auto detail = it->find("detail");
    if (status == it->end() || !status->is_string()) return reject("check " + std::string(key) + " lacks status");
    if (detail == it->end() || !detail->is_string()) return reject("check " + std::string(key) + " lacks detail");
    const auto s = status->get<std::string>();
    if (s != "pass" && s != "fail" && s != "n/a") return reject("bad status " + s);
  }
  return true;
}

}  // namespace loopforge
