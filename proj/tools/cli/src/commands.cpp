#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>

#include "valueset/charsum.hpp"
#include "valueset/poly_text.hpp"
#include "valueset/sat.hpp"
#include "valueset/ssp.hpp"
#include "valueset_cli/app.hpp"

namespace valueset::cli {

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const std::string& single_input(const RunConfig& cfg) {
  if (cfg.inputs.size() != 1) throw Error(ErrorKind::InvalidArgument, "expected exactly one input file");
  return cfg.inputs.front();
}

Json big_array(const std::vector<BigInt>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_decimal(x));
  return out;
}

PrimePolicy prime_policy(const RunConfig& cfg) {
  if (cfg.prime == "smallest") return {PrimePolicyKind::Smallest, cfg.seed};
  if (cfg.prime == "random") return {PrimePolicyKind::Random, cfg.seed};
  throw Error(ErrorKind::InvalidArgument, "unknown prime policy " + cfg.prime);
}

Json instance_json(const SubsetSumInstance& inst) {
  return Json{{"a", big_array(inst.a)}, {"b", to_decimal(inst.b)}};
}

void render_text(const Json& j, const std::string& prefix, std::ostream& out) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
    const Json& v = it.value();
    if (v.is_object()) {
      render_text(v, key, out);
    } else if (v.is_array() && !v.empty() && v.front().is_object()) {
      for (const auto& item : v) {
        out << key << ":";
        for (auto jt = item.begin(); jt != item.end(); ++jt) out << " " << jt.key() << "=" << jt.value().dump();
        out << "\n";
      }
    } else if (v.is_array()) {
      out << key << ":";
      for (const auto& item : v) out << " " << (item.is_string() ? item.get<std::string>() : item.dump());
      out << "\n";
    } else if (v.is_string() && v.get<std::string>().find('\n') != std::string::npos) {
      out << key << ":\n" << v.get<std::string>();
    } else {
      out << key << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
  }
}

}  // namespace

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::OrderTooLarge:
    case ErrorKind::DegreeCapExceeded:
    case ErrorKind::DeskScaleExceeded:
      return exit_code::kScale;
    case ErrorKind::NonIntegralResult:
    case ErrorKind::InternalError:
    case ErrorKind::SingularMatrix:
      return exit_code::kInternal;
    default:
      return exit_code::kInput;
  }
}

Json field_json(const Field& field) {
  Json j{{"p", field.p()}, {"m", field.m()}};
  if (field.m() > 1) {
    Json mod = Json::array();
    for (auto c : field.modulus()) mod.push_back(c);
    j["modulus"] = mod;
  }
  return j;
}

CommandResult cmd_count(const RunConfig& cfg) {
  const PolyInput f = parse_poly(read_input(single_input(cfg)));
  const ValueSetReport r = count_value_set(f, cfg.method, cfg.nk_source, cfg.workers);
  Json j;
  j["field"] = field_json(field_of(f));
  j["poly"] = serialize_poly(f);
  j["method"] = std::string(to_string(cfg.method));
  if (cfg.method == CountMethod::Symmetric) j["nk_source"] = std::string(to_string(cfg.nk_source));
  j["cardinality"] = to_decimal(r.cardinality);
  j["q"] = to_decimal(r.q);
  j["d"] = r.d ? Json(*r.d) : Json(nullptr);
  if (r.nk) j["Nk"] = big_array(r.nk->n);
  if (r.histogram)
    j["histogram_summary"] = {{"num_values", r.histogram->num_values()},
                              {"max_preimage", r.histogram->max_preimage()}};
  if (r.d && *r.d >= 1) j["within_trivial_bounds"] = within_trivial_bounds(r.cardinality, r.q, *r.d);
  return {exit_code::kOk, j};
}

CommandResult cmd_permtest(const RunConfig& cfg) {
  const PolyInput f = parse_poly(read_input(single_input(cfg)));
  const ValueSetReport r = count_value_set(f, cfg.method, cfg.nk_source, cfg.workers);
  Json j;
  j["field"] = field_json(field_of(f));
  j["poly"] = serialize_poly(f);
  j["method"] = std::string(to_string(cfg.method));
  j["cardinality"] = to_decimal(r.cardinality);
  j["q"] = to_decimal(r.q);
  j["permutation"] = r.cardinality == r.q;
  return {exit_code::kOk, j};
}

CommandResult cmd_char(const RunConfig& cfg) {
  Json j{{"p", cfg.p}, {"t", cfg.t}};
  if (cfg.mode == "onto") {
    j["onto"] = is_onto(cfg.p, cfg.t, cfg.workers);
    j["guaranteed"] = onto_guaranteed(cfg.p, cfg.t);
    return {exit_code::kOk, j};
  }
  if (cfg.mode != "coverage") throw Error(ErrorKind::InvalidArgument, "char mode must be coverage or onto");
  const PatternCoverage c = coverage(cfg.p, cfg.t, cfg.workers);
  j["counts"] = c.counts;
  j["weil_low"] = to_decimal(c.weil_low_outer);
  j["weil_high"] = to_decimal(c.weil_high_outer);
  j["weil_low_inner"] = to_decimal(c.weil_low_inner);
  j["weil_high_inner"] = to_decimal(c.weil_high_inner);
  j["onto"] = c.onto();
  j["guaranteed"] = onto_guaranteed(cfg.p, cfg.t);
  j["lower_bound_positive"] = c.lower_bound_positive();
  if (c.lower_bound_positive())
    j["strictly_inside"] = std::all_of(c.counts.begin(), c.counts.end(),
                                       [&](std::uint64_t v) { return c.strictly_inside(v); });
  return {exit_code::kOk, j};
}

CommandResult cmd_reduce(const RunConfig& cfg) {
  const std::string text = read_input(single_input(cfg));
  Json j{{"kind", cfg.mode}};
  bool agree = false;
  if (cfg.mode == "ssp-decide") {
    const SubsetSumInstance inst = parse_ssp(text);
    const RootDecision d = decide_ssp_via_root(inst, prime_policy(cfg), cfg.workers);
    const bool oracle = brute_subset_decision(inst, cfg.workers);
    agree = d.answer == oracle;
    j["instance"] = instance_json(inst);
    j["p"] = d.p ? Json(std::to_string(*d.p)) : Json(nullptr);
    j["beta"] = d.p ? Json(serialize_poly(build_beta(inst, *d.p))) : Json(nullptr);
    j["answer"] = d.answer;
    j["witness"] = d.witness ? Json(d.witness->index()) : Json(nullptr);
    j["short_circuit"] = d.short_circuit;
    j["oracle"] = oracle;
  } else if (cfg.mode == "ssp-count") {
    const SubsetSumInstance inst = parse_ssp(text);
    const SspCount c = count_ssp_via_valueset(inst, prime_policy(cfg), cfg.workers);
    const BigInt oracle = brute_subset_count(inst, cfg.workers);
    agree = c.count == oracle;
    j["instance"] = instance_json(inst);
    j["p"] = c.p ? Json(std::to_string(*c.p)) : Json(nullptr);
    if (c.p) {
      const CountingPoly f = build_counting_poly(inst, *c.p);
      j["beta"] = serialize_poly(f.beta());
      j["f_slp"] = serialize_poly(f.to_slp());
      j["value_set_size"] = *c.value_set_size;
      j["value_set"] = c.values;
    } else {
      j["beta"] = nullptr;
      j["f_slp"] = nullptr;
    }
    j["answer"] = to_decimal(c.count);
    j["short_circuit"] = c.short_circuit;
    j["oracle"] = to_decimal(oracle);
  } else if (cfg.mode == "sat3") {
    const Cnf3 cnf = parse_dimacs(text);
    const GammaConstruction g = build_gamma(build_circuit(cnf));
    const DurandReport r = gamma_vs_durand_check(cnf, cfg.workers);
    agree = r.agree && r.fidelity;
    j["n"] = cnf.n;
    j["m"] = cnf.m();
    j["padded_clauses"] = cnf.padded;
    j["field"] = field_json(*g.field);
    j["gamma_terms"] = g.gamma.terms().size();
    j["gamma"] = serialize_poly(g.gamma);
    j["sat"] = to_decimal(r.sat);
    j["triple"] = big_array({r.gamma_value_set, r.circuit_image, r.formula});
    j["fidelity"] = r.fidelity;
    j["answer"] = to_decimal(r.gamma_value_set);
    j["oracle"] = to_decimal(r.formula);
  } else {
    throw Error(ErrorKind::InvalidArgument, "reduce kind must be ssp-decide, ssp-count or sat3");
  }
  j["agree"] = agree;
  return {agree ? exit_code::kOk : exit_code::kInternal, j};
}

CommandResult cmd_verify(const RunConfig& cfg) {
  const auto results = verify_suite(cfg.mode, cfg.seed, cfg.workers);
  Json props = Json::array();
  bool all = true;
  for (const auto& r : results) {
    props.push_back({{"name", r.name}, {"checked", r.checked}, {"failed", r.failed}, {"pass", r.pass()}});
    all = all && r.pass();
  }
  Json j{{"suite", cfg.mode}, {"seed", std::to_string(cfg.seed)}, {"properties", props}, {"pass", all}};
  return {all ? exit_code::kOk : exit_code::kVerifyFailed, j};
}

std::string render(const Json& report, Format format) {
  if (format == Format::Json) return report.dump(2) + "\n";
  std::ostringstream out;
  render_text(report, "", out);
  return out.str();
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  CommandResult result;
  try {
    if (cfg.subcommand == "count") result = cmd_count(cfg);
    else if (cfg.subcommand == "permtest") result = cmd_permtest(cfg);
    else if (cfg.subcommand == "char") result = cmd_char(cfg);
    else if (cfg.subcommand == "reduce") result = cmd_reduce(cfg);
    else if (cfg.subcommand == "verify") result = cmd_verify(cfg);
    else throw Error(ErrorKind::InvalidArgument, "unknown subcommand " + cfg.subcommand);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return exit_code::kInternal;
  }

  const std::string text = render(result.report, cfg.format);
  if (cfg.output) {
    std::ofstream file(*cfg.output, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << *cfg.output << "\n";
      return exit_code::kInput;
    }
    file << text;
  } else {
    out << text;
  }
  if (result.code == exit_code::kInternal) err << "error: reduction disagrees with its oracle\n";
  if (result.code == exit_code::kVerifyFailed) err << "verify: one or more properties failed\n";
  return result.code;
}

}  // namespace valueset::cli
