#include "agdmm/serialization.hpp"

#include <fstream>
#include <initializer_list>
#include <sstream>

#include "agdmm/presets.hpp"

namespace agdmm::io {

namespace {

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorCode::ConfigInvalid, what); }

void expect_keys(const Json& j, std::string_view where, std::initializer_list<std::string_view> required,
                 std::initializer_list<std::string_view> optional = {}) {
  if (!j.is_object()) invalid(std::string(where) + ": expected an object");
  for (auto key : required)
    if (!j.contains(key)) invalid(std::string(where) + ": missing key \"" + std::string(key) + "\"");
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (auto k : required) known |= key == k;
    for (auto k : optional) known |= key == k;
    if (!known) invalid(std::string(where) + ": unknown key \"" + key + "\"");
  }
}

std::uint64_t get_uint(const Json& j, std::string_view key) {
  const Json& v = j.at(std::string(key));
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0)
    invalid("\"" + std::string(key) + "\" must be a non-negative integer");
  return v.get<std::uint64_t>();
}

std::vector<std::uint64_t> get_uint_list(const Json& j, std::string_view key) {
  const Json& v = j.at(std::string(key));
  if (!v.is_array()) invalid("\"" + std::string(key) + "\" must be an array");
  std::vector<std::uint64_t> out;
  for (const Json& x : v) {
    if (!x.is_number_integer() || x.get<std::int64_t>() < 0)
      invalid("\"" + std::string(key) + "\" must hold non-negative integers");
    out.push_back(x.get<std::uint64_t>());
  }
  return out;
}

std::vector<Element> elements_from(const Field& field, const std::vector<std::uint64_t>& codes) {
  std::vector<Element> out;
  for (auto c : codes) out.push_back(field.from_code(c));
  return out;
}

Json codes_of(const std::vector<Element>& v) {
  Json arr = Json::array();
  for (Element e : v) arr.push_back(e.code);
  return arr;
}

}  // namespace

Json to_json(const Field& field) {
  return Json{{"p", field.characteristic()}, {"e", field.degree()}, {"modulus", field.modulus()}};
}

Field field_from_json(const Json& j) {
  expect_keys(j, "field", {"p", "e"}, {"modulus"});
  std::optional<std::vector<std::uint32_t>> modulus;
  if (j.contains("modulus")) {
    modulus.emplace();
    for (auto c : get_uint_list(j, "modulus")) modulus->push_back(static_cast<std::uint32_t>(c));
  }
  return Field::make(static_cast<std::uint32_t>(get_uint(j, "p")), static_cast<std::uint32_t>(get_uint(j, "e")),
                     modulus);
}

Json to_json(const CurveSpec& spec) {
  return Json{{"kind", std::string(to_string(spec.kind))},
              {"field", to_json(spec.field)},
              {"m_or_u", spec.m_or_u},
              {"num_roots", codes_of(spec.num_roots)},
              {"den_roots", codes_of(spec.den_roots)}};
}

CurveSpec curve_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string()) invalid("curve: missing string key \"kind\"");
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "rational") {
    expect_keys(j, "curve", {"kind", "field"}, {"m_or_u", "num_roots", "den_roots"});
    CurveSpec spec = CurveSpec::rational(field_from_json(j.at("field")));
    if (j.contains("num_roots")) spec.num_roots = elements_from(spec.field, get_uint_list(j, "num_roots"));
    if (j.contains("den_roots")) spec.den_roots = elements_from(spec.field, get_uint_list(j, "den_roots"));
    return spec;
  }
  if (kind != "kummer" && kind != "trace") invalid("curve: unknown kind \"" + kind + "\"");
  expect_keys(j, "curve", {"kind", "field", "m_or_u", "num_roots", "den_roots"});
  const Field field = field_from_json(j.at("field"));
  const auto m_or_u = static_cast<std::uint32_t>(get_uint(j, "m_or_u"));
  auto num = elements_from(field, get_uint_list(j, "num_roots"));
  auto den = elements_from(field, get_uint_list(j, "den_roots"));
  return kind == "kummer" ? CurveSpec::kummer(field, m_or_u, std::move(num), std::move(den))
                          : CurveSpec::trace(field, m_or_u, std::move(num), std::move(den));
}

std::string places_to_csv(const std::vector<Place>& places) {
  std::ostringstream out;
  out << "id,class,x_code,y_code\n";
  for (const Place& p : places) {
    out << p.id << ',' << to_string(p.cls) << ',';
    if (p.x) out << p.x->code;
    out << ',';
    if (p.y) out << p.y->code;
    out << '\n';
  }
  return out.str();
}

Json matrix_codes(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Element e : m.row(i)) row.push_back(e.code);
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const Field& field, const Json& j) {
  if (!j.is_array()) invalid("matrix: expected an array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = rows ? j.at(0).size() : 0;
  std::vector<std::uint64_t> codes;
  for (const Json& row : j) {
    if (!row.is_array() || row.size() != cols) invalid("matrix: ragged rows");
    for (const Json& x : row) {
      if (!x.is_number_integer() || x.get<std::int64_t>() < 0) invalid("matrix: entries must be element codes");
      codes.push_back(x.get<std::uint64_t>());
    }
  }
  return Matrix::from_codes(field, rows, cols, codes);
}

Json to_json(const EncodedTask& task) {
  return Json{{"place", task.place}, {"f", matrix_codes(task.f_share)}, {"g", matrix_codes(task.g_share)}};
}

EncodedTask task_from_json(const Field& field, const Json& j) {
  expect_keys(j, "task", {"place", "f", "g"});
  return EncodedTask{get_uint(j, "place"), matrix_from_json(field, j.at("f")), matrix_from_json(field, j.at("g"))};
}

Json to_json(const WorkerResult& result) {
  return Json{{"place", result.place}, {"h", matrix_codes(result.h_value)}};
}

WorkerResult result_from_json(const Field& field, const Json& j) {
  expect_keys(j, "result", {"place", "h"});
  return WorkerResult{get_uint(j, "place"), matrix_from_json(field, j.at("h")), 0, 0};
}

ConfigFile config_from_json(const Json& j) {
  expect_keys(j, "config", {"scheme", "m", "curve", "dims", "seed"},
              {"n", "workers", "delay", "stragglers", "sweep"});
  if (!j.at("scheme").is_string()) invalid("\"scheme\" must be a string");
  const auto scheme = parse_scheme(j.at("scheme").get<std::string>());
  if (!scheme) invalid("unknown scheme \"" + j.at("scheme").get<std::string>() + "\"");

  const Json& cj = j.at("curve");
  CurveSpec curve = cj.is_string() ? presets::curve(cj.get<std::string>()) : curve_from_json(cj);

  const Json& dj = j.at("dims");
  expect_keys(dj, "dims", {"r", "s", "t"});
  const Dims dims{get_uint(dj, "r"), get_uint(dj, "s"), get_uint(dj, "t")};

  const auto m = static_cast<std::uint32_t>(get_uint(j, "m"));
  std::uint32_t n = 1;
  if (j.contains("n")) n = static_cast<std::uint32_t>(get_uint(j, "n"));
  else if (is_polynomial(*scheme)) invalid("config: missing key \"n\"");

  SchemeParams params{*scheme, m, n, std::move(curve), dims};
  validate_params(params);
  const std::uint64_t seed = get_uint(j, "seed");

  std::size_t workers = j.contains("workers") ? get_uint(j, "workers") : usable_places(params.curve, *scheme).size();

  DelayModel delay = DelayModel::shuffle(seed);
  if (j.contains("delay")) {
    const Json& d = j.at("delay");
    if (!d.is_object() || !d.contains("model") || !d.at("model").is_string()) invalid("delay: missing \"model\"");
    const std::string model = d.at("model").get<std::string>();
    if (model == "fixed") {
      expect_keys(d, "delay", {"model", "order"});
      std::vector<std::size_t> order;
      for (auto w : get_uint_list(d, "order")) order.push_back(w);
      delay = DelayModel::fixed(std::move(order));
    } else if (model == "uniform_shuffle") {
      expect_keys(d, "delay", {"model", "seed"});
      delay = DelayModel::shuffle(get_uint(d, "seed"));
    } else if (model == "geometric_tail") {
      expect_keys(d, "delay", {"model", "seed", "prob"});
      if (!d.at("prob").is_number()) invalid("delay: \"prob\" must be a number");
      delay = DelayModel::geometric_tail(get_uint(d, "seed"), d.at("prob").get<double>());
    } else {
      invalid("delay: unknown model \"" + model + "\"");
    }
  }

  std::vector<std::size_t> stragglers;
  if (j.contains("stragglers"))
    for (auto w : get_uint_list(j, "stragglers")) stragglers.push_back(w);

  ConfigFile out{SimConfig{std::move(params), workers, std::move(delay), std::move(stragglers), seed}, std::nullopt};
  if (j.contains("sweep")) {
    const Json& s = j.at("sweep");
    expect_keys(s, "sweep", {"k_min", "k_max"}, {"trials"});
    SweepSpec sweep{get_uint(s, "k_min"), get_uint(s, "k_max"), 10};
    if (s.contains("trials")) sweep.trials = get_uint(s, "trials");
    out.sweep = sweep;
  }
  return out;
}

Json to_json(const SimConfig& cfg) {
  Json j{{"scheme", std::string(to_string(cfg.params.scheme))}, {"m", cfg.params.m}};
  if (is_polynomial(cfg.params.scheme)) j["n"] = cfg.params.n;
  j["curve"] = to_json(cfg.params.curve);
  j["dims"] = Json{{"r", cfg.params.dims.r}, {"s", cfg.params.dims.s}, {"t", cfg.params.dims.t}};
  j["seed"] = cfg.seed;
  j["workers"] = cfg.workers;
  Json d{{"model", std::string(to_string(cfg.delay.kind))}};
  switch (cfg.delay.kind) {
    case DelayModel::Kind::FixedOrder: d["order"] = cfg.delay.order; break;
    case DelayModel::Kind::UniformShuffle: d["seed"] = cfg.delay.seed; break;
    case DelayModel::Kind::GeometricTail:
      d["seed"] = cfg.delay.seed;
      d["prob"] = cfg.delay.prob;
      break;
  }
  j["delay"] = d;
  j["stragglers"] = cfg.stragglers;
  return j;
}

Json to_json(const SimReport& report, bool include_timing) {
  Json j{{"scheme", std::string(to_string(report.scheme))},
         {"genus", report.genus},
         {"threshold", report.threshold},
         {"workers", report.workers},
         {"decode_success", report.decode_success},
         {"max_stragglers_tolerated", report.max_stragglers_tolerated},
         {"responses", report.response_order.size()},
         {"response_order", report.response_order},
         {"workers_used", report.workers_used},
         {"op_counts",
          {{"encode", report.op_counts.encode},
           {"worker_max", report.op_counts.worker_max},
           {"decode", report.op_counts.decode}}}};
  if (report.failure)
    j["failure"] = Json{{"code", std::string(to_string(report.failure->code))}, {"message", report.failure->message}};
  if (include_timing) j["elapsed_ms"] = report.elapsed_ms;
  return j;
}

std::string sim_report_csv_header() {
  return "scheme,genus,threshold,workers,responses,decode_success,max_stragglers_tolerated,encode_muls,"
         "worker_max_muls,decode_muls,failure\n";
}

std::string sim_report_csv_row(const SimReport& r) {
  std::ostringstream out;
  out << to_string(r.scheme) << ',' << r.genus << ',' << r.threshold << ',' << r.workers << ','
      << r.response_order.size() << ',' << (r.decode_success ? 1 : 0) << ',' << r.max_stragglers_tolerated << ','
      << r.op_counts.encode << ',' << r.op_counts.worker_max << ',' << r.op_counts.decode << ','
      << (r.failure ? to_string(r.failure->code) : "") << '\n';
  return out.str();
}

std::string sweep_to_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  out << "stragglers,trials,successes,success\n";
  for (const auto& r : rows) out << r.stragglers << ',' << r.trials << ',' << r.successes << ',' << r.success_rate() << '\n';
  return out.str();
}

Json to_json(const std::vector<SweepRow>& rows) {
  Json arr = Json::array();
  for (const auto& r : rows)
    arr.push_back(Json{{"stragglers", r.stragglers},
                       {"trials", r.trials},
                       {"successes", r.successes},
                       {"success_rate", r.success_rate()}});
  return arr;
}

CompareSpec compare_from_json(const Json& j) {
  expect_keys(j, "compare", {"curve", "codes", "m"}, {"n", "rational_m", "rational_n"});
  const Json& cj = j.at("curve");
  CompareSpec spec{cj.is_string() ? presets::curve(cj.get<std::string>()) : curve_from_json(cj), true, 1, 1, {}};
  if (!j.at("codes").is_string()) invalid("\"codes\" must be \"poly\" or \"matdot\"");
  const std::string codes = j.at("codes").get<std::string>();
  if (codes != "poly" && codes != "matdot") invalid("\"codes\" must be \"poly\" or \"matdot\"");
  spec.polynomial = codes == "poly";
  spec.m = static_cast<std::uint32_t>(get_uint(j, "m"));
  if (j.contains("n")) spec.n = static_cast<std::uint32_t>(get_uint(j, "n"));
  else if (spec.polynomial) invalid("compare: missing key \"n\"");
  if (j.contains("rational_m") != j.contains("rational_n") && spec.polynomial)
    invalid("compare: give both \"rational_m\" and \"rational_n\"");
  if (j.contains("rational_m"))
    spec.rational_mn = std::pair{static_cast<std::uint32_t>(get_uint(j, "rational_m")),
                                 j.contains("rational_n") ? static_cast<std::uint32_t>(get_uint(j, "rational_n")) : 1u};
  return spec;
}

Json to_json(const BaselineComparison& cmp) {
  auto row = [](const BaselineRow& r) {
    return Json{{"label", r.label},         {"scheme", std::string(to_string(r.scheme))},
                {"m", r.m},                 {"n", r.n},
                {"genus", r.genus},         {"max_workers", r.max_workers},
                {"threshold", r.threshold}, {"headroom", r.headroom}};
  };
  return Json{{"rational", row(cmp.rational)}, {"curve", row(cmp.curve)}};
}

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    invalid(std::string("malformed JSON: ") + e.what());
  }
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) invalid("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

}  // namespace agdmm::io
