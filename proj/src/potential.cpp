#include "qgtile/potential.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "qgtile/error.hpp"

namespace qgtile {

namespace {

void require_length(double a) {
  if (!std::isfinite(a) || a <= 0.0) throw InputError("edge length must be finite and positive");
}

// Parses one CSV cell; returns false when the cell is not a number (header row).
bool parse_number(const std::string& cell, double& out) {
  std::size_t pos = 0;
  try {
    out = std::stod(cell, &pos);
  } catch (const std::exception&) {
    return false;
  }
  while (pos < cell.size() && std::isspace(static_cast<unsigned char>(cell[pos]))) ++pos;
  return pos == cell.size();
}

}  // namespace

Potential Potential::zero(double edge_length) {
  require_length(edge_length);
  Potential p;
  p.kind_ = Kind::Zero;
  p.a_ = edge_length;
  return p;
}

Potential Potential::graphene_sine(double edge_length, double depth, double scale) {
  require_length(edge_length);
  if (scale == 0.0) scale = edge_length;
  if (!std::isfinite(depth) || !std::isfinite(scale) || scale <= 0.0)
    throw InputError("graphene potential needs finite depth and positive scale");
  Potential p;
  p.kind_ = Kind::GrapheneSine;
  p.a_ = edge_length;
  p.depth_ = depth;
  p.scale_ = scale;
  return p;
}

Potential Potential::sampled(std::vector<double> abscissae, std::vector<double> values) {
  if (abscissae.size() != values.size()) throw InputError("table columns differ in length");
  if (abscissae.size() < 2) throw InputError("table needs at least two rows");
  for (std::size_t i = 0; i < abscissae.size(); ++i) {
    if (!std::isfinite(abscissae[i]) || !std::isfinite(values[i]))
      throw InputError("table contains non-finite entries");
    if (i > 0 && !(abscissae[i] > abscissae[i - 1]))
      throw InputError("table abscissae must be strictly increasing (row " + std::to_string(i + 1) + ")");
  }
  if (abscissae.front() != 0.0) throw InputError("table must start at x = 0");
  Potential p;
  p.kind_ = Kind::SampledTable;
  p.a_ = abscissae.back();
  p.xs_ = std::move(abscissae);
  p.qs_ = std::move(values);
  return p;
}

Potential Potential::from_csv(const std::filesystem::path& path, double edge_length) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open potential table " + path.string());
  std::vector<double> xs, qs;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw InputError("line " + std::to_string(line_no) + ": expected two columns");
    double x = 0.0, q = 0.0;
    const bool ok = parse_number(line.substr(0, comma), x) && parse_number(line.substr(comma + 1), q);
    if (!ok) {
      if (xs.empty() && line_no == 1) continue;  // header
      throw InputError("line " + std::to_string(line_no) + ": not a number");
    }
    xs.push_back(x);
    qs.push_back(q);
  }
  Potential p = sampled(std::move(xs), std::move(qs));
  if (edge_length > 0.0 && std::abs(p.a_ - edge_length) > 1e-12 * edge_length)
    throw InputError("table spans [0, " + std::to_string(p.a_) + "] but edge length is " + std::to_string(edge_length));
  return p;
}

double Potential::operator()(double x) const {
  switch (kind_) {
    case Kind::Zero:
      return 0.0;
    case Kind::GrapheneSine: {
      const double s = std::sin(std::numbers::pi * x / scale_);
      return depth_ + (scale_ / 1.34) * s * s;
    }
    case Kind::SampledTable: {
      if (x <= xs_.front()) return qs_.front();
      if (x >= xs_.back()) return qs_.back();
      const auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
      const std::size_t i = static_cast<std::size_t>(it - xs_.begin());
      const double t = (x - xs_[i - 1]) / (xs_[i] - xs_[i - 1]);
      return qs_[i - 1] + t * (qs_[i] - qs_[i - 1]);
    }
  }
  return 0.0;
}

double Potential::evenness_residual(std::size_t samples) const {
  if (kind_ == Kind::Zero) return 0.0;
  samples = std::max<std::size_t>(samples, 2);
  double worst = 0.0;
  for (std::size_t i = 0; i < samples; ++i) {
    const double x = a_ * static_cast<double>(i) / static_cast<double>(samples - 1);
    worst = std::max(worst, std::abs((*this)(x) - (*this)(a_ - x)));
  }
  for (double x : xs_) worst = std::max(worst, std::abs((*this)(x) - (*this)(a_ - x)));
  return worst;
}

double Potential::lower_bound() const {
  switch (kind_) {
    case Kind::Zero:
      return 0.0;
    case Kind::GrapheneSine:
      return std::min(depth_, depth_ + scale_ / 1.34);
    case Kind::SampledTable:
      return *std::min_element(qs_.begin(), qs_.end());
  }
  return 0.0;
}

double Potential::magnitude() const {
  switch (kind_) {
    case Kind::Zero:
      return 1.0;
    case Kind::GrapheneSine:
      return std::max({1.0, std::abs(depth_), std::abs(depth_ + scale_ / 1.34)});
    case Kind::SampledTable: {
      double m = 1.0;
      for (double q : qs_) m = std::max(m, std::abs(q));
      return m;
    }
  }
  return 1.0;
}

std::string Potential::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::Zero:
      os << "zero(a=" << a_ << ")";
      break;
    case Kind::GrapheneSine:
      os << "graphene(a=" << a_ << ", depth=" << depth_ << ", scale=" << scale_ << ")";
      break;
    case Kind::SampledTable:
      os << "table(a=" << a_ << ", rows=" << xs_.size() << ")";
      break;
  }
  return os.str();
}

}  // namespace qgtile
