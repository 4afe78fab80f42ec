// Copyright 2026 The dlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "dlab/config.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"

namespace dlab::cli {
namespace {

using nlohmann::json;

std::string summary_of(const std::string& command) {
  static const std::map<std::string, std::string> text{
      {"dla", "Lie closure dimension of a generator set"},
      {"bound eval", "evaluate the generalization-gap bound"},
      {"bound budget", "trainable-parameter budget for a norm p or epsilon"},
      {"bound curve", "N_t(p) curve as CSV and SVG"},
      {"data gen", "generate a synthetic regression dataset"},
      {"train", "train one model and report RMSEs"},
      {"sweep", "grid of training runs with summary statistics"},
      {"report", "render tables and figures from a sweep directory"},
  };
  auto it = text.find(command);
  return it == text.end() ? command : it->second;
}

// Placeholder default resolved from the environment on each parse.
constexpr const char* kEnvDefault = "$DLAB_OUT_DIR";

std::string default_out_dir() {
  const char* env = std::getenv(kOutDirEnv);
  if (env != nullptr && *env != '\0') return env;
  return "dlab_out";
}

KeySpec key(std::string k, std::string flag, ValueType t, json def,
            std::string help) {
  return KeySpec{std::move(k), std::move(flag), t, std::move(def),
                 std::move(help)};
}

std::vector<KeySpec> train_keys(bool sweep) {
  std::vector<KeySpec> keys = {
      key("model.layers", "--layers", ValueType::Int, 2, "layers L"),
      key("model.reps", "--reps", ValueType::Int, 10, "gates per layer K"),
      key("train.epochs", "--epochs", ValueType::Int, 200, "epochs"),
      key("data.m_train", "--m-train", ValueType::Int, 10, "training samples"),
      key("data.m_test", "--m-test", ValueType::Int, 100, "test samples"),
      key("train.a0", "--a0", ValueType::Real, 0.1, "SPSA step gain"),
      key("train.c0", "--c0", ValueType::Real, 0.1, "SPSA perturbation gain"),
      key("train.big_a", "--spsa-a", ValueType::Real, 20.0,
          "SPSA stability constant"),
      key("train.alpha", "--spsa-alpha", ValueType::Real, 0.602,
          "SPSA step decay"),
      key("train.gamma", "--spsa-gamma", ValueType::Real, 0.101,
          "SPSA perturbation decay"),
      key("train.init_low", "--init-low", ValueType::Real, -0.01,
          "SPS init lower bound"),
      key("train.init_high", "--init-high", ValueType::Real, 0.01,
          "SPS init upper bound"),
      key("train.ran_step", "--ran-step", ValueType::Real, 0.1,
          "RAN proposal scale"),
      key("train.theta_clip", "--theta-clip", ValueType::String, "off",
          "off, auto (ln2/||H||) or a positive bound"),
  };
  if (!sweep) {
    keys.insert(keys.begin(),
                {key("model.name", "--model", ValueType::String, "tfim",
                     "model family"),
                 key("model.n", "--n", ValueType::Int, nullptr, "qubits"),
                 key("model.boundary", "--boundary", ValueType::String, "open",
                     "open or closed"),
                 key("train.algo", "--algo", ValueType::String, "sps",
                     "sps or ran"),
                 key("run.seed", "--seed", ValueType::Int, 0, "training seed"),
                 key("data.path", "--data", ValueType::String, nullptr,
                     "dataset JSON; generated when absent"),
                 key("data.seed", "--data-seed", ValueType::Int, nullptr,
                     "seed for a generated dataset (default: --seed)"),
                 key("run.out", "--out", ValueType::String, nullptr,
                     "write the result JSON here instead of stdout")});
  }
  return keys;
}

std::map<std::string, std::vector<KeySpec>, std::less<>> build_registry() {
  std::map<std::string, std::vector<KeySpec>, std::less<>> r;
  r["dla"] = {
      key("dla.model", "--model", ValueType::String, "tfim", "model family"),
      key("dla.n", "--n", ValueType::Int, nullptr, "qubits"),
      key("dla.boundary", "--boundary", ValueType::String, "open",
          "open or closed"),
      key("dla.generators", "--generators", ValueType::String, nullptr,
          "generator file in Pauli text format"),
      key("dla.max_dim", "--max-dim", ValueType::Int, 0,
          "basis size cap, 0 for the default"),
      key("dla.oracle", "--oracle", ValueType::Bool, false,
          "cross-check against the dense closure"),
      key("dla.basis_out", "--basis-out", ValueType::String, nullptr,
          "write the basis here"),
  };
  r["bound eval"] = {
      key("bounds.m", "--m", ValueType::Int, nullptr, "training-set size"),
      key("bounds.nt", "--nt", ValueType::Int, nullptr, "trainable gates"),
      key("bounds.dimg", "--dimg", ValueType::Int, nullptr, "DLA dimension"),
      key("bounds.n_qubits", "--n-qubits", ValueType::Int, nullptr, "qubits"),
      key("bounds.o_norm", "--o-norm", ValueType::Real, 1.0,
          "observable operator norm"),
      key("bounds.c", "--c", ValueType::Real, 1.0, "loss-range constant"),
      key("bounds.delta", "--delta", ValueType::Real, 0.05, "confidence"),
      key("bounds.radius", "--radius", ValueType::Real, std::numbers::pi,
          "parameter radius"),
      key("output.json", "--json", ValueType::Bool, false, "print JSON"),
  };
  r["bound budget"] = {
      key("bounds.p", "--p", ValueType::Real, nullptr, "norm bound p"),
      key("bounds.eps", "--eps", ValueType::Real, nullptr,
          "approximation error"),
  };
  r["bound curve"] = {
      key("bounds.p_lo", "--p-lo", ValueType::Real, 0.1, "grid start"),
      key("bounds.p_hi", "--p-hi", ValueType::Real, 0.69, "grid end"),
      key("bounds.points", "--points", ValueType::Int, 60, "grid points"),
      key("run.out", "--out", ValueType::String, nullptr, "CSV path"),
  };
  r["data gen"] = {
      key("data.n", "--n", ValueType::Int, nullptr, "qubits"),
      key("run.seed", "--seed", ValueType::Int, 0, "dataset seed"),
      key("data.m_train", "--m-train", ValueType::Int, 10, "training samples"),
      key("data.m_test", "--m-test", ValueType::Int, 100, "test samples"),
      key("run.out", "--out", ValueType::String, nullptr, "JSON path"),
  };
  r["train"] = train_keys(false);
  auto sweep = train_keys(true);
  sweep.insert(
      sweep.begin(),
      {key("sweep.n", "--n", ValueType::IntList, json::array({2, 3, 4, 5, 6}),
           "qubit counts, e.g. 2..6 or 2,4"),
       key("sweep.boundaries", "--boundaries", ValueType::StringList,
           json::array({"open", "closed"}), "boundaries"),
       key("sweep.algos", "--algos", ValueType::StringList,
           json::array({"sps", "ran"}), "algorithms"),
       key("sweep.datasets", "--datasets", ValueType::Int, 20,
           "datasets per n"),
       key("sweep.threads", "--threads", ValueType::Int, 0,
           "worker threads, 0 for hardware concurrency"),
       key("sweep.welch", "--welch", ValueType::Bool, false,
           "Welch t-test instead of pooled"),
       key("sweep.allow_large", "--allow-large", ValueType::Bool, false,
           "permit n above 6"),
       key("run.seed", "--seed", ValueType::Int, 0, "master seed"),
       key("run.out", "--out", ValueType::String, kEnvDefault,
           "output directory")});
  r["sweep"] = std::move(sweep);
  r["report"] = {
      key("report.in", "--in", ValueType::String, nullptr,
          "sweep directory (default: --out)"),
      key("run.out", "--out", ValueType::String, kEnvDefault,
          "output directory"),
  };
  return r;
}

const std::map<std::string, std::vector<KeySpec>, std::less<>>& registry() {
  static const auto r = build_registry();
  return r;
}

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::optional<std::int64_t> parse_int(std::string_view s) {
  std::string t = trim(s);
  std::int64_t v = 0;
  auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || p != t.data() + t.size() || t.empty())
    return std::nullopt;
  return v;
}

std::optional<double> parse_real(std::string_view s) {
  std::string t = trim(s);
  double v = 0;
  auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || p != t.data() + t.size() || t.empty() ||
      !std::isfinite(v))
    return std::nullopt;
  return v;
}

std::vector<std::string> split_list(std::string_view s) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in{std::string(s)};
  while (std::getline(in, item, ',')) out.push_back(trim(item));
  return out;
}

// Flag text -> typed JSON value.
std::optional<json> from_text(const KeySpec& spec, std::string_view text) {
  switch (spec.type) {
    case ValueType::Int:
      if (auto v = parse_int(text)) return json(*v);
      return std::nullopt;
    case ValueType::Real:
      if (auto v = parse_real(text)) return json(*v);
      return std::nullopt;
    case ValueType::String:
      return json(std::string(text));
    case ValueType::Bool: {
      std::string t = trim(text);
      if (t == "true" || t == "1") return json(true);
      if (t == "false" || t == "0") return json(false);
      return std::nullopt;
    }
    case ValueType::IntList: {
      std::string t = trim(text);
      json arr = json::array();
      if (auto dots = t.find(".."); dots != std::string::npos) {
        auto lo = parse_int(std::string_view(t).substr(0, dots));
        auto hi = parse_int(std::string_view(t).substr(dots + 2));
        if (!lo || !hi || *lo > *hi || *hi - *lo > 64) return std::nullopt;
        for (auto v = *lo; v <= *hi; ++v) arr.push_back(v);
        return arr;
      }
      for (const auto& item : split_list(t)) {
        auto v = parse_int(item);
        if (!v) return std::nullopt;
        arr.push_back(*v);
      }
      if (arr.empty()) return std::nullopt;
      return arr;
    }
    case ValueType::StringList: {
      json arr = json::array();
      for (const auto& item : split_list(text)) {
        if (item.empty()) return std::nullopt;
        arr.push_back(item);
      }
      if (arr.empty()) return std::nullopt;
      return arr;
    }
  }
  return std::nullopt;
}

// File JSON -> typed JSON value. Strings are accepted for any type so that
// list shorthands like "2..6" work in files too.
std::optional<json> from_file_value(const KeySpec& spec, const json& v) {
  if (v.is_string() && spec.type != ValueType::String)
    return from_text(spec, v.get<std::string>());
  switch (spec.type) {
    case ValueType::Int:
      if (v.is_number_integer()) return json(v.get<std::int64_t>());
      return std::nullopt;
    case ValueType::Real:
      if (v.is_number()) return json(v.get<double>());
      return std::nullopt;
    case ValueType::String:
      if (v.is_string()) return v;
      return std::nullopt;
    case ValueType::Bool:
      if (v.is_boolean()) return v;
      return std::nullopt;
    case ValueType::IntList:
      if (!v.is_array() || v.empty()) return std::nullopt;
      for (const auto& e : v)
        if (!e.is_number_integer()) return std::nullopt;
      return v;
    case ValueType::StringList:
      if (!v.is_array() || v.empty()) return std::nullopt;
      for (const auto& e : v)
        if (!e.is_string()) return std::nullopt;
      return v;
  }
  return std::nullopt;
}

std::string type_name(ValueType t) {
  switch (t) {
    case ValueType::Int: return "integer";
    case ValueType::Real: return "real";
    case ValueType::String: return "string";
    case ValueType::Bool: return "boolean";
    case ValueType::IntList: return "integer list";
    case ValueType::StringList: return "string list";
  }
  return "value";
}

// Leaf subcommand name joined by spaces, e.g. "bound eval".
std::string leaf_name(const CLI::App& app) {
  std::string name;
  const CLI::App* cur = &app;
  while (true) {
    auto subs = cur->get_subcommands();
    if (subs.empty()) break;
    cur = subs.front();
    if (!name.empty()) name += ' ';
    name += cur->get_name();
  }
  return name;
}

struct Slot {
  const KeySpec* spec = nullptr;
  std::string text;
  bool flag_value = false;
  CLI::Option* option = nullptr;
};

bool is_set(const Slot& s) { return s.option != nullptr && s.option->count() > 0; }

}  // namespace

const std::vector<KeySpec>& keys_for(std::string_view command) {
  auto it = registry().find(command);
  if (it == registry().end())
    throw std::invalid_argument("unknown command: " + std::string(command));
  return it->second;
}

const std::vector<std::string>& known_commands() {
  static const std::vector<std::string> names = {
      "dla", "bound eval", "bound budget", "bound curve",
      "data gen", "train", "sweep", "report"};
  return names;
}

std::uint64_t RunConfig::seed() const {
  if (!params.contains("run.seed")) return 0;
  return static_cast<std::uint64_t>(params.at("run.seed").get<std::int64_t>());
}

std::string RunConfig::out_dir() const {
  if (params.contains("run.out") && params.at("run.out").is_string())
    return params.at("run.out").get<std::string>();
  return default_out_dir();
}

bool RunConfig::has(const std::string& k) const {
  return params.contains(k) && !params.at(k).is_null();
}

std::string RunConfig::to_json() const {
  // nlohmann::json objects are std::map backed, so keys come out sorted.
  json j = {{"command", command}, {"params", params}};
  return j.dump(2) + "\n";
}

RunConfig RunConfig::from_json(std::string_view text) {
  json j = json::parse(text);
  RunConfig c;
  c.command = j.at("command").get<std::string>();
  c.params = j.at("params");
  if (!c.params.is_object())
    throw std::invalid_argument("config params must be an object");
  return c;
}

std::string RunConfig::hash() const {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char ch : to_json()) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = kHex[h & 0xF];
    h >>= 4;
  }
  return out;
}

ParseOutcome parse_config(std::span<const std::string> args) {
  ParseOutcome outcome;
  CLI::App app{"dlab: DLA-based generalization bounds for quantum models",
               "dlab"};
  app.require_subcommand(1);
  app.set_version_flag("--version", DLAB_VERSION);

  // Leaf subcommands and their option storage.
  std::map<std::string, std::vector<Slot>> slots;
  std::map<std::string, std::string> config_files;
  std::map<std::string, CLI::App*> groups;
  for (const auto& name : known_commands()) {
    CLI::App* parent = &app;
    std::string leaf = name;
    if (auto sp = name.find(' '); sp != std::string::npos) {
      std::string group = name.substr(0, sp);
      leaf = name.substr(sp + 1);
      if (!groups.contains(group)) {
        groups[group] = app.add_subcommand(
            group, group == "bound" ? "bound calculators" : "dataset tools");
        groups[group]->require_subcommand(1);
      }
      parent = groups[group];
    }
    CLI::App* sub = parent->add_subcommand(leaf, summary_of(name));
    sub->add_option("--config", config_files[name],
                    "JSON file of namespaced keys");
    auto& vec = slots[name];
    const auto& keys = keys_for(name);
    vec.resize(keys.size());
    for (std::size_t i = 0; i < keys.size(); ++i) {
      Slot& s = vec[i];
      s.spec = &keys[i];
      std::string help = keys[i].help + " [" + keys[i].key + "]";
      if (keys[i].type == ValueType::Bool)
        s.option = sub->add_flag(keys[i].flag, s.flag_value, help);
      else
        s.option = sub->add_option(keys[i].flag, s.text, help);
    }
  }

  std::vector<std::string> argv;
  argv.reserve(args.size() + 1);
  argv.emplace_back("dlab");
  argv.insert(argv.end(), args.begin(), args.end());
  std::vector<const char*> cargv;
  for (const auto& a : argv) cargv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(cargv.size()), cargv.data());
  } catch (const CLI::CallForHelp&) {
    outcome.help = app.help();
    return outcome;
  } catch (const CLI::CallForVersion&) {
    outcome.help = std::string(DLAB_VERSION) + "\n";
    return outcome;
  } catch (const CLI::ParseError& e) {
    outcome.errors.push_back(e.what());
    outcome.exit_code = kExitUsage;
    return outcome;
  }

  RunConfig config;
  config.command = leaf_name(app);
  auto slot_it = slots.find(config.command);
  if (slot_it == slots.end()) {
    outcome.errors.push_back("no command given");
    outcome.exit_code = kExitUsage;
    return outcome;
  }
  auto& cmd_slots = slot_it->second;

  json file_params = json::object();
  if (const auto& path = config_files[config.command]; !path.empty()) {
    std::ifstream in(path);
    if (!in) {
      outcome.errors.push_back("cannot read config file: " + path);
    } else {
      try {
        json j = json::parse(in);
        // Accept both the flat form and the serialized RunConfig form.
        if (j.is_object() && j.contains("params") && j.contains("command")) {
          if (j.at("command") != config.command)
            outcome.errors.push_back("config file is for command '" +
                                     j.at("command").get<std::string>() +
                                     "'");
          j = j.at("params");
        }
        if (!j.is_object())
          outcome.errors.push_back("config file must hold a JSON object");
        else
          file_params = j;
      } catch (const json::exception& e) {
        outcome.errors.push_back("config file " + path + ": " + e.what());
      }
    }
  }

  std::map<std::string, const Slot*> by_key;
  for (const auto& s : cmd_slots) by_key[s.spec->key] = &s;
  for (const auto& [k, v] : file_params.items()) {
    if (!by_key.contains(k))
      outcome.errors.push_back("unknown config key: " + k);
  }

  for (const auto& s : cmd_slots) {
    const KeySpec& spec = *s.spec;
    std::optional<json> file_value;
    if (file_params.contains(spec.key) && !file_params.at(spec.key).is_null()) {
      file_value = from_file_value(spec, file_params.at(spec.key));
      if (!file_value)
        outcome.errors.push_back("config key " + spec.key + " expects " +
                                 type_name(spec.type));
    }
    std::optional<json> flag_value;
    if (is_set(s)) {
      if (spec.type == ValueType::Bool) {
        flag_value = json(s.flag_value);
      } else {
        flag_value = from_text(spec, s.text);
        if (!flag_value)
          outcome.errors.push_back(spec.flag + " expects " +
                                   type_name(spec.type) + ", got '" + s.text +
                                   "'");
      }
    }
    if (flag_value) {
      if (file_value && *file_value != *flag_value)
        config.provenance.push_back(spec.key + ": flag " + spec.flag + "=" +
                                    flag_value->dump() +
                                    " overrides config file value " +
                                    file_value->dump());
      config.params[spec.key] = *flag_value;
    } else if (file_value) {
      config.params[spec.key] = *file_value;
    } else if (spec.default_value == kEnvDefault) {
      // Read at parse time, not when the registry is first built.
      config.params[spec.key] = default_out_dir();
    } else if (!spec.default_value.is_null()) {
      config.params[spec.key] = spec.default_value;
    }
  }

  if (!outcome.errors.empty()) {
    outcome.exit_code = kExitUsage;
    return outcome;
  }
  auto domain = validate(config);
  if (!domain.empty()) {
    outcome.errors = std::move(domain);
    outcome.exit_code = kExitDomain;
    return outcome;
  }
  outcome.config = std::move(config);
  return outcome;
}

namespace {

class Checker {
 public:
  explicit Checker(const RunConfig& c) : c_(c) {}

  std::optional<std::int64_t> int_at(const std::string& k) const {
    if (!c_.has(k)) return std::nullopt;
    return c_.params.at(k).get<std::int64_t>();
  }
  std::optional<double> real_at(const std::string& k) const {
    if (!c_.has(k)) return std::nullopt;
    return c_.params.at(k).get<double>();
  }
  std::optional<std::string> str_at(const std::string& k) const {
    if (!c_.has(k)) return std::nullopt;
    return c_.params.at(k).get<std::string>();
  }

  void require(const std::string& k) {
    if (!c_.has(k)) errors.push_back(k + " is required");
  }
  void int_range(const std::string& k, std::int64_t lo, std::int64_t hi) {
    if (auto v = int_at(k); v && (*v < lo || *v > hi))
      errors.push_back(k + " must lie in [" + std::to_string(lo) + ", " +
                       std::to_string(hi) + "], got " + std::to_string(*v));
  }
  void positive(const std::string& k) {
    if (auto v = real_at(k); v && !(*v > 0))
      errors.push_back(k + " must be positive");
  }
  void open_interval(const std::string& k, double lo, double hi,
                     const std::string& label) {
    if (auto v = real_at(k); v && !(*v > lo && *v < hi))
      errors.push_back(k + " must lie in " + label + ", got " +
                       c_.params.at(k).dump());
  }
  void one_of(const std::string& k, std::initializer_list<std::string_view> ok) {
    auto v = str_at(k);
    if (!v) return;
    for (auto o : ok)
      if (*v == o) return;
    errors.push_back(k + " has unsupported value '" + *v + "'");
  }

  std::vector<std::string> errors;

 private:
  const RunConfig& c_;
};

void check_training(Checker& ck, const RunConfig& c) {
  ck.int_range("model.layers", 1, 100);
  ck.int_range("model.reps", 1, 1000);
  ck.int_range("train.epochs", 1, 1000000);
  ck.int_range("data.m_train", 1, 1000000);
  ck.int_range("data.m_test", 1, 1000000);
  for (const char* k : {"train.a0", "train.c0", "train.ran_step"})
    ck.positive(k);
  if (auto a = ck.real_at("train.big_a"); a && *a < 0)
    ck.errors.push_back("train.big_a must be nonnegative");
  for (const char* k : {"train.alpha", "train.gamma"})
    if (auto v = ck.real_at(k); v && !(*v > 0 && *v <= 1))
      ck.errors.push_back(std::string(k) + " must lie in (0, 1]");
  auto lo = ck.real_at("train.init_low");
  auto hi = ck.real_at("train.init_high");
  if (lo && hi && !(*lo <= *hi))
    ck.errors.push_back("train.init_low must not exceed train.init_high");
  if (auto clip = ck.str_at("train.theta_clip");
      clip && *clip != "off" && *clip != "auto") {
    auto v = parse_real(*clip);
    if (!v || !(*v > 0))
      ck.errors.push_back(
          "train.theta_clip must be off, auto or a positive number");
  }
  (void)c;
}

}  // namespace

std::vector<std::string> validate(const RunConfig& c) {
  Checker ck(c);
  const std::string& cmd = c.command;
  if (auto s = ck.int_at("run.seed"); s && *s < 0)
    ck.errors.push_back("run.seed must be nonnegative");
  if (cmd == "dla") {
    if (c.has("dla.generators")) {
      if (c.has("dla.n"))
        ck.errors.push_back("dla.generators and dla.n are mutually exclusive");
    } else {
      ck.one_of("dla.model", {"tfim"});
      ck.one_of("dla.boundary", {"open", "closed"});
      ck.require("dla.n");
      ck.int_range("dla.n", 2, 16);
    }
    ck.int_range("dla.max_dim", 0, 1 << 20);
  } else if (cmd == "bound eval") {
    for (const char* k : {"bounds.m", "bounds.nt", "bounds.dimg",
                          "bounds.n_qubits"})
      ck.require(k);
    ck.int_range("bounds.m", 1, std::int64_t{1} << 40);
    ck.int_range("bounds.nt", 1, std::int64_t{1} << 40);
    ck.int_range("bounds.dimg", 1, std::int64_t{1} << 40);
    ck.int_range("bounds.n_qubits", 1, 1000);
    ck.positive("bounds.o_norm");
    ck.positive("bounds.c");
    ck.positive("bounds.radius");
    ck.open_interval("bounds.delta", 0.0, 1.0, "(0, 1)");
  } else if (cmd == "bound budget") {
    bool p = c.has("bounds.p");
    bool e = c.has("bounds.eps");
    if (p == e) ck.errors.push_back("give exactly one of --p and --eps");
    ck.open_interval("bounds.p", 0.0, std::numbers::ln2, "(0, ln 2)");
    ck.positive("bounds.eps");
  } else if (cmd == "bound curve") {
    ck.open_interval("bounds.p_lo", 0.0, std::numbers::ln2, "(0, ln 2)");
    ck.open_interval("bounds.p_hi", 0.0, std::numbers::ln2, "(0, ln 2)");
    auto lo = ck.real_at("bounds.p_lo");
    auto hi = ck.real_at("bounds.p_hi");
    if (lo && hi && !(*lo < *hi))
      ck.errors.push_back("bounds.p_lo must be below bounds.p_hi");
    ck.int_range("bounds.points", 2, 100000);
  } else if (cmd == "data gen") {
    ck.require("data.n");
    ck.int_range("data.n", 1, 16);
    ck.int_range("data.m_train", 0, 1000000);
    ck.int_range("data.m_test", 0, 1000000);
  } else if (cmd == "train") {
    ck.one_of("model.name", {"tfim"});
    ck.one_of("model.boundary", {"open", "closed"});
    ck.one_of("train.algo", {"sps", "spsa", "ran"});
    if (!c.has("data.path")) ck.require("model.n");
    ck.int_range("model.n", 2, 12);
    if (auto s = ck.int_at("data.seed"); s && *s < 0)
      ck.errors.push_back("data.seed must be nonnegative");
    check_training(ck, c);
  } else if (cmd == "sweep") {
    bool large = c.has("sweep.allow_large") &&
                 c.params.at("sweep.allow_large").get<bool>();
    for (const auto& v : c.params.at("sweep.n")) {
      auto n = v.get<std::int64_t>();
      if (n < 2 || n > (large ? 10 : 6))
        ck.errors.push_back("sweep.n entry " + std::to_string(n) +
                            (large ? " outside [2, 10]"
                                   : " outside [2, 6] (use --allow-large)"));
    }
    for (const auto& v : c.params.at("sweep.boundaries")) {
      auto s = v.get<std::string>();
      if (s != "open" && s != "closed")
        ck.errors.push_back("unsupported boundary '" + s + "'");
    }
    for (const auto& v : c.params.at("sweep.algos")) {
      auto s = v.get<std::string>();
      if (s != "sps" && s != "spsa" && s != "ran")
        ck.errors.push_back("unsupported algorithm '" + s + "'");
    }
    ck.int_range("sweep.datasets", 1, 100000);
    ck.int_range("sweep.threads", 0, 1024);
    check_training(ck, c);
  } else if (cmd == "report") {
    // Paths are checked when the report runs.
  } else {
    ck.errors.push_back("unknown command '" + cmd + "'");
  }
  return ck.errors;
}

}  // namespace dlab::cli
