#include "qagent/json_io.hpp"

#include <cstdio>
#include <stdexcept>

namespace qagent {

namespace {

nlohmann::json layout_labels(const SystemLayout& layout) {
  nlohmann::json labels = nlohmann::json::array();
  for (const auto& f : layout.factors()) labels.push_back(to_string(f.label));
  return labels;
}

SystemLayout layout_from_json(const nlohmann::json& j) {
  const auto& dims = j.at("dims");
  const auto& labels = j.at("labels");
  if (dims.size() != labels.size()) {
    throw std::invalid_argument("state JSON: dims and labels differ in length");
  }
  std::vector<Factor> factors;
  factors.reserve(dims.size());
  for (std::size_t i = 0; i < dims.size(); ++i) {
    factors.push_back({label_from_string(labels[i].get<std::string>()), dims[i].get<int>()});
  }
  return SystemLayout(std::move(factors));
}

}  // namespace

nlohmann::json to_json(const DensityMatrix& rho) {
  nlohmann::json j;
  j["dims"] = rho.layout.dims();
  j["labels"] = layout_labels(rho.layout);
  std::vector<double> re, im;
  const auto n = rho.mat.rows();
  re.reserve(n * n);
  im.reserve(n * n);
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) {
      re.push_back(rho.mat(r, c).real());
      im.push_back(rho.mat(r, c).imag());
    }
  }
  j["re"] = std::move(re);
  j["im"] = std::move(im);
  return j;
}

nlohmann::json to_json(const PureState& psi) {
  nlohmann::json j;
  j["dims"] = psi.layout.dims();
  j["labels"] = layout_labels(psi.layout);
  std::vector<double> re, im;
  re.reserve(psi.vec.size());
  im.reserve(psi.vec.size());
  for (Eigen::Index k = 0; k < psi.vec.size(); ++k) {
    re.push_back(psi.vec(k).real());
    im.push_back(psi.vec(k).imag());
  }
  j["re"] = std::move(re);
  j["im"] = std::move(im);
  return j;
}

DensityMatrix density_from_json(const nlohmann::json& j) {
  auto layout = layout_from_json(j);
  const auto n = layout.total_dim();
  const auto& re = j.at("re");
  const auto& im = j.at("im");
  if (static_cast<Eigen::Index>(re.size()) != n * n || re.size() != im.size()) {
    throw std::invalid_argument("density JSON: entry count does not match dims");
  }
  Matrix mat(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) {
      const auto k = r * n + c;
      mat(r, c) = Complex(re[k].get<double>(), im[k].get<double>());
    }
  }
  return {std::move(layout), std::move(mat)};
}

PureState pure_from_json(const nlohmann::json& j) {
  auto layout = layout_from_json(j);
  const auto n = layout.total_dim();
  const auto& re = j.at("re");
  const auto& im = j.at("im");
  if (static_cast<Eigen::Index>(re.size()) != n || re.size() != im.size()) {
    throw std::invalid_argument("pure-state JSON: entry count does not match dims");
  }
  Vector vec(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    vec(k) = Complex(re[k].get<double>(), im[k].get<double>());
  }
  return {std::move(layout), std::move(vec)};
}

nlohmann::json to_json(const GadgetReport& report) {
  return {{"is_measurement", report.is_measurement},
          {"uncertainty_bits", report.uncertainty_bits},
          {"back_action_bits", report.back_action_bits},
          {"repeatable", report.repeatable},
          {"flags", report.flags}};
}

nlohmann::json to_json(const MetricResult& metric) {
  return {{"value_bits", metric.value_bits}, {"components", metric.components}};
}

nlohmann::json to_json(const SweepRecord& record) {
  return {{"t", record.t},
          {"uncertainty_bits", record.uncertainty_bits},
          {"info_gain_bits", record.info_gain_bits},
          {"back_action_bits", record.back_action_bits}};
}

std::string format_sig(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

std::string sweep_to_csv(const std::vector<SweepRecord>& records) {
  std::string out = "t,uncertainty_bits,info_gain_bits,back_action_bits\n";
  for (const auto& r : records) {
    out += format_sig(r.t);
    out += ',';
    out += format_sig(r.uncertainty_bits);
    out += ',';
    out += format_sig(r.info_gain_bits);
    out += ',';
    out += format_sig(r.back_action_bits);
    out += '\n';
  }
  return out;
}

}  // namespace qagent
