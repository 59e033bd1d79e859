#include "fracwave/io.hpp"

#include <unistd.h>

#include <cmath>
#include <cstdio>
#include <fstream>

#include "fracwave/error.hpp"

#ifndef FRACWAVE_GIT_DESCRIBE
#define FRACWAVE_GIT_DESCRIBE "unknown"
#endif

namespace fracwave {
namespace {

std::string sci6(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.5e", v);
  return buf;
}

std::string full(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

}  // namespace

std::string convergence_csv(const std::vector<ConvergenceRow>& rows) {
  std::string out = "N,l2_error,l2_order,linf_error,linf_order\n";
  for (const auto& r : rows) {
    out += std::to_string(r.n);
    out += ',' + sci6(r.l2_error) + ',';
    if (r.l2_order) out += sci6(*r.l2_order);
    out += ',' + sci6(r.linf_error) + ',';
    if (r.linf_order) out += sci6(*r.linf_order);
    out += '\n';
  }
  return out;
}

std::string diagnostics_csv(const Diagnostics& d) {
  std::string out = "t,mass,energy,l2,linf\n";
  for (std::size_t i = 0; i < d.size(); ++i) {
    out += full(d.times[i]) + ',' + full(d.mass[i]) + ',' + full(d.energy[i]) + ',' +
           full(d.l2[i]) + ',' + full(d.linf[i]) + '\n';
  }
  return out;
}

std::string snapshot_csv(const Snapshot& s) {
  std::string out = "x,u\n";
  for (std::size_t j = 0; j < s.x.size(); ++j) out += full(s.x[j]) + ',' + full(s.u[j]) + '\n';
  return out;
}

std::string snapshot_filename(std::string_view experiment, double t, int nodes) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", t);
  return std::string(experiment) + "_t" + buf + "_N" + std::to_string(nodes) + ".csv";
}

void write_atomic(const std::filesystem::path& path, std::string_view contents) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::filesystem::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open " + tmp.string() + " for writing");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.flush();
    if (!out) throw Error("short write to " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

nlohmann::json to_json(const ModelParams& p) {
  return {{"kappa1", p.kappa1}, {"gamma", p.gamma}, {"kappa2", p.kappa2}, {"alpha", p.alpha}};
}

nlohmann::json to_json(const ExperimentSpec& s) {
  nlohmann::json j;
  j["name"] = s.name;
  j["description"] = s.description;
  j["params"] = to_json(s.params);
  j["domain"] = {{"x_left", s.x_left}, {"length", s.length}};
  nlohmann::json init{{"kind", std::string(to_string(s.initial))}};
  if (s.initial == InitialKind::PeakonTrain) {
    init["peakons"] = nlohmann::json::array();
    for (const auto& p : s.peakons) init["peakons"].push_back({{"c", p.c}, {"x", p.x}});
  } else {
    init["c"] = s.speed;
    init["x0"] = s.x0;
  }
  j["initial"] = init;
  j["has_oracle"] = s.has_oracle;
  j["t_end"] = s.t_end;
  j["N_list"] = s.n_list;
  j["N"] = s.nodes;
  j["dt"] = s.dt ? nlohmann::json(*s.dt) : nlohmann::json("auto");
  j["mask_half_width"] = s.mask_half_width ? nlohmann::json(*s.mask_half_width) : nlohmann::json();
  j["snapshot_times"] = s.snapshot_times;
  j["alpha_sweep"] = s.alpha_sweep;
  return j;
}

nlohmann::json to_json(const ConvergenceRow& r) {
  auto num = [](double v) { return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(); };
  auto opt = [&](const std::optional<double>& v) { return v ? num(*v) : nlohmann::json(); };
  nlohmann::json j{{"N", r.n},
                   {"l2_error", num(r.l2_error)},
                   {"l2_order", opt(r.l2_order)},
                   {"linf_error", num(r.linf_error)},
                   {"linf_order", opt(r.linf_order)},
                   {"dt", r.dt},
                   {"steps", r.steps},
                   {"failed", r.failed}};
  if (r.failed) j["failure"] = r.failure;
  if (r.unmasked) j["unmasked"] = {{"l2_error", r.unmasked->l2}, {"linf_error", r.unmasked->linf}};
  return j;
}

std::string_view build_describe() { return FRACWAVE_GIT_DESCRIBE; }

}  // namespace fracwave
