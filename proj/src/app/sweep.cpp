#include "qpredict/app/sweep.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <thread>

#include "qpredict/app/state_io.hpp"
#include "qpredict/correlations.hpp"
#include "qpredict/errors.hpp"
#include "qpredict/noise_channels.hpp"
#include "qpredict/qkd.hpp"
#include "qpredict/ttbar.hpp"

namespace qpredict::app {

namespace {

using Quantity = std::function<double(const FanoState&, int quad_n)>;

const std::map<std::string, Quantity>& quantity_table() {
  static const std::map<std::string, Quantity> table = {
      {"bayes-avg", [](const FanoState& s, int n) { return avg_min_bayes_risk(s, n).value; }},
      {"variance-avg", [](const FanoState& s, int) { return avg_min_inference_variance(s).value; }},
      {"f2", [](const FanoState& s, int) { return f2_cjwr(s); }},
      {"f3", [](const FanoState& s, int) { return f3_cjwr(s); }},
      {"f-haar", [](const FanoState& s, int) { return f_haar(s); }},
      {"ppt", [](const FanoState& s, int) { return ppt_min_eigenvalue(s); }},
      {"horodecki", [](const FanoState& s, int) { return horodecki_m(s); }},
      {"k-bb84", [](const FanoState& s, int) { return k_bb84(s); }},
      {"k-star", [](const FanoState& s, int) { return k_star_opt(s).k_star; }},
  };
  return table;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) parts.push_back(item);
  return parts;
}

double parse_number(const std::string& text) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw ParseError("not a number: '" + text + "'");
  }
  if (used != text.size() || !std::isfinite(v)) throw ParseError("not a number: '" + text + "'");
  return v;
}

FanoState make_state(Family f, const std::vector<double>& x) {
  switch (f) {
    case Family::BellDiagonal: return bell_diagonal(x[0], x[1], x[2]);
    case Family::Adc: return adc_state(x[0], x[1]);
    case Family::Ttbar: return ttbar_state({x[0], x[1], x[2]});
    case Family::Integrated: return integrated_state(x[0], x[1]);
  }
  throw DomainError("unknown family");
}

std::vector<Axis> ordered_axes(Family f, std::map<std::string, Axis> given) {
  std::vector<Axis> axes;
  for (const auto& name : family_axes(f)) {
    auto it = given.find(name);
    if (it == given.end()) throw ParseError("grid is missing axis '" + name + "'");
    axes.push_back(it->second);
    given.erase(it);
  }
  if (!given.empty())
    throw ParseError("axis '" + given.begin()->first + "' does not belong to family " +
                     family_name(f));
  return axes;
}

}  // namespace

double Axis::value(int i) const {
  if (count == 1) return min;
  if (i == count - 1) return max;
  return min + (max - min) * i / (count - 1);
}

Family parse_family(const std::string& name) {
  if (name == "bell-diagonal") return Family::BellDiagonal;
  if (name == "adc") return Family::Adc;
  if (name == "ttbar") return Family::Ttbar;
  if (name == "integrated") return Family::Integrated;
  throw ParseError("unknown family '" + name + "'");
}

const char* family_name(Family f) {
  switch (f) {
    case Family::BellDiagonal: return "bell-diagonal";
    case Family::Adc: return "adc";
    case Family::Ttbar: return "ttbar";
    case Family::Integrated: return "integrated";
  }
  return "?";
}

const std::vector<std::string>& family_axes(Family f) {
  static const std::vector<std::string> bd{"c1", "c2", "c3"};
  static const std::vector<std::string> adc{"p_a", "p_b"};
  static const std::vector<std::string> tt{"beta", "theta", "w_gg"};
  static const std::vector<std::string> integ{"c_perp", "c_z"};
  switch (f) {
    case Family::BellDiagonal: return bd;
    case Family::Adc: return adc;
    case Family::Ttbar: return tt;
    case Family::Integrated: return integ;
  }
  return bd;
}

const std::vector<std::string>& known_quantities() {
  static const std::vector<std::string> keys = [] {
    std::vector<std::string> k;
    for (const auto& [name, fn] : quantity_table()) k.push_back(name);
    return k;
  }();
  return keys;
}

std::vector<Axis> parse_grid(Family f, const std::string& text) {
  std::map<std::string, Axis> given;
  for (const auto& item : split(text, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw ParseError("grid item '" + item + "' lacks '='");
    Axis axis;
    axis.name = item.substr(0, eq);
    const auto fields = split(item.substr(eq + 1), ':');
    if (fields.size() == 1) {
      axis.min = axis.max = parse_number(fields[0]);
      axis.count = 1;
    } else if (fields.size() == 3) {
      axis.min = parse_number(fields[0]);
      axis.max = parse_number(fields[1]);
      const double count = parse_number(fields[2]);
      if (count != std::floor(count) || count < 1 || count > 1e7)
        throw ParseError("axis count must be a positive integer");
      axis.count = static_cast<int>(count);
    } else {
      throw ParseError("grid item '" + item + "' must be name=v or name=min:max:count");
    }
    if (!given.emplace(axis.name, axis).second) throw ParseError("axis '" + axis.name + "' repeated");
  }
  return ordered_axes(f, std::move(given));
}

std::vector<std::string> parse_quantities(const std::string& text) {
  std::vector<std::string> q;
  for (const auto& item : split(text, ',')) {
    if (!item.empty()) q.push_back(item);
  }
  return q;
}

void check_spec(const SweepSpec& spec) {
  if (spec.axes.size() != family_axes(spec.family).size())
    throw ParseError("grid does not match the family axes");
  for (const auto& a : spec.axes) {
    if (a.count < 1) throw ParseError("axis '" + a.name + "' needs a positive count");
    if (a.count >= 2 && !(a.min < a.max))
      throw ParseError("axis '" + a.name + "' needs min < max");
  }
  if (spec.quantities.empty()) throw ParseError("no quantities requested");
  for (const auto& q : spec.quantities) {
    if (!quantity_table().contains(q)) throw ParseError("unknown quantity '" + q + "'");
  }
  if (spec.quad_n < 1000) throw ParseError("quad-n must be at least 1000");
}

SweepSpec sweep_spec_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("sweep spec must be a JSON object");
  SweepSpec spec;
  try {
    spec.family = parse_family(j.at("family").get<std::string>());
    const auto& grid = j.at("grid");
    if (grid.is_string()) {
      spec.axes = parse_grid(spec.family, grid.get<std::string>());
    } else if (grid.is_object()) {
      std::map<std::string, Axis> given;
      for (const auto& [name, v] : grid.items()) {
        Axis a;
        a.name = name;
        if (v.is_number()) {
          a.min = a.max = v.get<double>();
        } else if (v.is_array() && v.size() == 3) {
          a.min = v[0].get<double>();
          a.max = v[1].get<double>();
          a.count = v[2].get<int>();
        } else {
          throw ParseError("grid entry '" + name + "' must be a number or [min, max, count]");
        }
        given.emplace(name, a);
      }
      spec.axes = ordered_axes(spec.family, std::move(given));
    } else {
      throw ParseError("grid must be a string or an object");
    }
    const auto& q = j.at("quantities");
    spec.quantities = q.is_string() ? parse_quantities(q.get<std::string>())
                                    : q.get<std::vector<std::string>>();
    if (j.contains("out")) spec.out = j.at("out").get<std::string>();
    if (j.contains("quad_n")) spec.quad_n = j.at("quad_n").get<int>();
    if (j.contains("seed")) spec.seed = j.at("seed").get<std::uint64_t>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("sweep spec: ") + e.what());
  }
  check_spec(spec);
  return spec;
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string run_sweep(const SweepSpec& spec, unsigned threads) {
  check_spec(spec);
  std::size_t total = 1;
  for (const auto& a : spec.axes) total *= static_cast<std::size_t>(a.count);

  std::vector<const Quantity*> fns;
  for (const auto& q : spec.quantities) fns.push_back(&quantity_table().at(q));

  std::vector<std::string> rows(total);
  auto eval_row = [&](std::size_t idx) {
    std::vector<double> x(spec.axes.size());
    std::size_t rem = idx;
    for (std::size_t k = spec.axes.size(); k-- > 0;) {
      const auto cnt = static_cast<std::size_t>(spec.axes[k].count);
      x[k] = spec.axes[k].value(static_cast<int>(rem % cnt));
      rem /= cnt;
    }
    std::vector<double> vals(fns.size(), std::nan(""));
    const char* flag = "ok";
    try {
      const FanoState s = make_state(spec.family, x);
      for (std::size_t q = 0; q < fns.size(); ++q) vals[q] = (*fns[q])(s, spec.quad_n);
    } catch (const NonPhysical&) {
      flag = "nonphysical";
      std::fill(vals.begin(), vals.end(), std::nan(""));
    } catch (const Error&) {
      flag = "domain";
      std::fill(vals.begin(), vals.end(), std::nan(""));
    }
    std::string line;
    for (double v : x) line += format_double(v) + ",";
    for (double v : vals) line += format_double(v) + ",";
    line += flag;
    line += '\n';
    rows[idx] = std::move(line);
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(total, 1)));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < total; i = next++) eval_row(i);
  };
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();

  std::string out;
  for (const auto& a : spec.axes) out += a.name + ",";
  for (const auto& q : spec.quantities) out += q + ",";
  out += "flag\n";
  for (const auto& r : rows) out += r;
  return out;
}

void write_sweep(const SweepSpec& spec, unsigned threads) {
  const std::string csv = run_sweep(spec, threads);
  std::ofstream f(spec.out, std::ios::binary);
  if (!f) throw IoError("cannot write " + spec.out);
  f << csv;
  f.close();
  if (!f) throw IoError("failed writing " + spec.out);
}

}  // namespace qpredict::app
