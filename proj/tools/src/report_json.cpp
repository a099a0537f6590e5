#include "distidx/cli/report_json.hpp"

#include <sstream>

#include "distidx/graph6.hpp"

namespace distidx::cli {

namespace {

nlohmann::ordered_json fields_json(const Fields& fields) {
  nlohmann::ordered_json out = nlohmann::ordered_json::object();
  for (const auto& [key, value] : fields) {
    std::visit([&](const auto& v) { out[key] = v; }, value);
  }
  return out;
}

nlohmann::ordered_json graph_list(const std::vector<CanonicalForm>& forms) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& f : forms) out.push_back(emit_graph6(f.graph()));
  return out;
}

}  // namespace

nlohmann::ordered_json to_json(const CheckReport& r) {
  nlohmann::ordered_json j;
  j["statement"] = r.statement;
  j["params"] = fields_json(r.params);
  j["size"] = r.size;
  j["optimum"] = r.optimum ? nlohmann::ordered_json(r.optimum->to_string())
                           : nlohmann::ordered_json(nullptr);
  j["optimizers"] = graph_list(r.optimizers);
  j["expected"] = graph_list(r.expected);
  j["mode"] = std::string(to_string(r.mode));
  j["unique"] = r.unique_claimed;
  j["margin"] = r.margin ? nlohmann::ordered_json(r.margin->to_string())
                         : nlohmann::ordered_json(nullptr);
  j["pass"] = r.pass;
  nlohmann::ordered_json audit;
  audit["graphs"] = r.audit.graphs();
  audit["violations"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.audit.violations()) audit["violations"][k] = v;
  audit["witnesses"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.audit.witnesses()) audit["witnesses"][k] = v;
  j["audit"] = std::move(audit);
  j["details"] = fields_json(r.details);
  return j;
}

std::string to_json_line(const CheckReport& report) {
  return to_json(report).dump();
}

std::string to_text_line(const CheckReport& r) {
  std::ostringstream os;
  os << (r.pass ? "PASS " : "FAIL ") << r.statement;
  for (const auto& [key, value] : r.params) {
    os << ' ' << key << '=';
    std::visit(
        [&](const auto& v) {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, std::vector<std::string>>) {
            for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
          } else {
            os << v;
          }
        },
        value);
  }
  os << " size=" << r.size;
  if (r.optimum) os << " optimum=" << r.optimum->to_string();
  if (!r.optimizers.empty()) {
    os << " optimizers=";
    for (std::size_t i = 0; i < r.optimizers.size(); ++i) {
      os << (i ? "," : "") << emit_graph6(r.optimizers[i].graph());
    }
  }
  if (r.margin) os << " margin=" << r.margin->to_string();
  if (!r.audit.clean()) {
    os << " audit-violations=";
    bool first = true;
    for (const auto& [k, v] : r.audit.violations()) {
      os << (first ? "" : ",") << k << ':' << v;
      first = false;
    }
  }
  return os.str();
}

}  // namespace distidx::cli
