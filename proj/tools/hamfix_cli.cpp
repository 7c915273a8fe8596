// Command-line front end.  Talks to the library only through the C API.

#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hamfix/hamfix.h"

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string preset, input, format = "text";
  std::string cutoff, op, evaluator, a, b, g, cls, power;
  std::string k, n, m, p, dims, taus, tau;
  int search_limit = 0, max_len = 0;
  bool allow_nonfree = false;
  std::vector<std::string> params;
};

void print_error(const std::string& kind, const std::string& message) {
  Json e = {{"error", kind}, {"message", message}};
  std::cerr << e.dump() << "\n";
}

int exit_code(hf_status s) { return s == HF_E_HYPOTHESIS ? 2 : 1; }

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

/// Values stay strings; the library parses rationals and integers from text.
Json param_value(const std::string& text) {
  if (!text.empty() && (text[0] == '[' || text[0] == '{')) {
    Json v = Json::parse(text, nullptr, false);
    if (!v.is_discarded()) return v;
  }
  return text;
}

/// "1,2" becomes ["1","2"]; anything else goes through param_value.
Json list_value(const std::string& text) {
  if (text.find(',') == std::string::npos || text[0] == '[') return param_value(text);
  Json arr = Json::array();
  std::istringstream in(text);
  for (std::string item; std::getline(in, item, ',');) arr.push_back(item);
  return arr;
}

int run(const std::string& command, const Options& o) {
  Json req = Json::object();
  if (!o.preset.empty() && !o.input.empty()) {
    print_error("InvalidInput", "give either --preset or --input, not both");
    return 1;
  }
  if (!o.preset.empty()) req["preset"] = o.preset;
  if (!o.input.empty()) {
    std::string text;
    try {
      text = read_input(o.input);
    } catch (const std::exception& e) {
      print_error("InvalidInput", e.what());
      return 1;
    }
    Json doc;
    try {
      doc = Json::parse(text);
    } catch (const std::exception& e) {
      print_error("ParseError", e.what());
      return 1;
    }
    if (command == "bound") {
      if (!doc.is_object()) {
        print_error("InvalidInput", "bound input must be a JSON object");
        return 1;
      }
      for (const auto& [key, v] : doc.items()) req[key] = v;
    } else {
      req["input"] = doc;
    }
  }
  std::map<std::string, const std::string*> named = {
      {"op", &o.op},     {"evaluator", &o.evaluator}, {"a", &o.a},       {"b", &o.b},       {"g", &o.g},
      {"class", &o.cls}, {"power", &o.power},         {"k", &o.k},       {"n", &o.n},       {"m", &o.m},
      {"p", &o.p},       {"dims", &o.dims},           {"taus", &o.taus}, {"tau", &o.tau},   {"cutoff", &o.cutoff}};
  for (const auto& [key, value] : named)
    if (!value->empty())
      req[key] = (key == "dims" || key == "taus" || key == "tau") ? list_value(*value) : param_value(*value);
  if (o.search_limit > 0) req["search_limit"] = o.search_limit;
  if (o.max_len > 0) req["max_len"] = o.max_len;
  if (o.allow_nonfree) req["allow_nonfree"] = true;
  for (const auto& kv : o.params) {
    auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) {
      print_error("InvalidInput", "--param expects key=value, got '" + kv + "'");
      return 1;
    }
    req[kv.substr(0, eq)] = param_value(kv.substr(eq + 1));
  }

  hf_report* report = nullptr;
  hf_status s = hf_run(command.c_str(), req.dump().c_str(), &report);
  if (s != HF_OK) {
    print_error(hf_last_error_kind(), hf_last_error());
    return exit_code(s);
  }
  if (o.format == "json") std::cout << hf_report_json(report) << "\n";
  else std::cout << hf_report_text(report);
  int code = hf_report_ok(report) ? 0 : 1;
  hf_report_free(report);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fixed point lower bounds for Hamiltonian diffeomorphisms"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(hf_version()));
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--preset", o.preset, "built-in example");
    sub->add_option("--input", o.input, "JSON document ('-' for stdin)");
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--search-limit", o.search_limit, "cap on enumerated candidates");
    sub->add_option("--param", o.params, "extra request field key=value (repeatable)");
    for (auto [flag, target] : std::vector<std::pair<const char*, std::string*>>{
             {"--k", &o.k}, {"--n", &o.n}, {"--m", &o.m}, {"--p", &o.p}})
      sub->add_option(flag, *target);
  };

  auto* orbit = app.add_subcommand("orbit", "coadjoint orbit bound");
  common(orbit);
  orbit->add_option("--dims", o.dims, "partial flag dimensions, e.g. 1,2");

  auto* toric = app.add_subcommand("toric", "toric manifold: Fano test and bound");
  common(toric);
  toric->add_option("--tau", o.tau, "level (rational or JSON array)");
  toric->add_option("--dims", o.dims, "factor dimensions for the product preset");
  toric->add_option("--taus", o.taus, "factor levels for the product preset");
  toric->add_flag("--allow-nonfree", o.allow_nonfree, "continue on non-unimodular weight bases");

  auto* ring = app.add_subcommand("ring", "quantum homology ring operations");
  common(ring);
  ring->add_option("--op", o.op, "describe|product|power|pair|cuplength|pfqf|nonnilpotent|associativity");
  ring->add_option("--a", o.a, "class: basis label or JSON object");
  ring->add_option("--b", o.b, "class: basis label or JSON object");
  ring->add_option("--g", o.g, "exponent for cuplength");
  ring->add_option("--power", o.power, "exponent for power");
  ring->add_option("--max-len", o.max_len, "search length");

  auto* bound = app.add_subcommand("bound", "closed-form bound evaluators");
  common(bound);
  bound->add_option("--evaluator", o.evaluator, "main|arnold|bcl|schwarz|onepoint|pfqf|blowup|unitary|case");

  auto* ls = app.add_subcommand("ls", "minmax selector on a filtered complex");
  common(ls);
  ls->add_option("--class", o.cls, "cycle as a JSON object label -> coefficient");

  auto* nov = app.add_subcommand("novikov", "Novikov arithmetic");
  nov->add_option("--op", o.op, "parse|add|mul|exp|invert|valuation");
  nov->add_option("--a", o.a);
  nov->add_option("--b", o.b);
  nov->add_option("--cutoff", o.cutoff, "truncation order");
  nov->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));

  auto* self = app.add_subcommand("selfcheck", "regression table");
  self->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    print_error("InvalidInput", e.what());
    return 1;
  }

  for (auto* sub : app.get_subcommands()) {
    try {
      return run(sub->get_name(), o);
    } catch (const std::exception& e) {
      print_error("InvalidInput", e.what());
      return 1;
    }
  }
  return 1;
}
