#include "bose2d/radial_potential.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <json.hpp>

#include "bose2d/quadrature.hpp"

namespace bose2d {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

double interp_samples(const std::vector<std::pair<double, double>>& s,
                      double r) {
  if (s.empty()) return 0.0;
  if (r <= s.front().first) return s.front().second;
  if (r >= s.back().first) return s.back().second;
  auto it = std::upper_bound(
      s.begin(), s.end(), r,
      [](double x, const std::pair<double, double>& p) { return x < p.first; });
  const auto& hi = *it;
  const auto& lo = *(it - 1);
  const double t = (r - lo.first) / (hi.first - lo.first);
  return lo.second + t * (hi.second - lo.second);
}
}  // namespace

void RadialPotential::validate() const {
  double edge = 0.0;
  bool past_core = false;
  for (const auto& seg : segments) {
    if (std::abs(seg.r_lo - edge) > 1e-12 * std::max(1.0, edge)) {
      throw std::invalid_argument(
          "RadialPotential: segments must be contiguous from r = 0");
    }
    if (!(seg.r_hi > seg.r_lo)) {
      throw std::invalid_argument("RadialPotential: empty or reversed segment");
    }
    if (seg.kind == PotentialSegment::Kind::kHardcore) {
      if (past_core) {
        throw std::invalid_argument(
            "RadialPotential: hardcore allowed only as an innermost prefix");
      }
    } else {
      past_core = true;
      if (seg.kind == PotentialSegment::Kind::kConstant && seg.value < 0.0) {
        throw std::invalid_argument("RadialPotential: negative value");
      }
      if (seg.kind == PotentialSegment::Kind::kTabulated) {
        if (seg.samples.size() < 2) {
          throw std::invalid_argument(
              "RadialPotential: tabulated segment needs >= 2 samples");
        }
        for (size_t i = 0; i < seg.samples.size(); ++i) {
          if (seg.samples[i].second < 0.0) {
            throw std::invalid_argument("RadialPotential: negative sample");
          }
          if (i > 0 && seg.samples[i].first <= seg.samples[i - 1].first) {
            throw std::invalid_argument(
                "RadialPotential: samples must be strictly increasing in r");
          }
        }
      }
    }
    edge = seg.r_hi;
  }
}

double RadialPotential::range_R0() const {
  return segments.empty() ? 0.0 : segments.back().r_hi;
}

double RadialPotential::hardcore_radius() const {
  double rc = 0.0;
  for (const auto& seg : segments) {
    if (seg.kind != PotentialSegment::Kind::kHardcore) break;
    rc = seg.r_hi;
  }
  return rc;
}

double RadialPotential::value(double r) const {
  for (const auto& seg : segments) {
    if (r >= seg.r_lo && r < seg.r_hi) {
      switch (seg.kind) {
        case PotentialSegment::Kind::kHardcore:
          return kInf;
        case PotentialSegment::Kind::kConstant:
          return seg.value;
        case PotentialSegment::Kind::kTabulated:
          return interp_samples(seg.samples, r);
      }
    }
  }
  return 0.0;
}

bool RadialPotential::is_zero() const {
  for (const auto& seg : segments) {
    switch (seg.kind) {
      case PotentialSegment::Kind::kHardcore:
        return false;
      case PotentialSegment::Kind::kConstant:
        if (seg.value > 0.0) return false;
        break;
      case PotentialSegment::Kind::kTabulated:
        for (const auto& s : seg.samples) {
          if (s.second > 0.0) return false;
        }
        break;
    }
  }
  return true;
}

double RadialPotential::integrate_weighted(
    double lo, double hi, const std::function<double(double)>& w) const {
  if (!(hi > lo)) return 0.0;
  double total = 0.0;
  for (const auto& seg : segments) {
    const double a = std::max(lo, seg.r_lo);
    const double b = std::min(hi, seg.r_hi);
    if (!(b > a)) continue;
    switch (seg.kind) {
      case PotentialSegment::Kind::kHardcore:
        return kInf;
      case PotentialSegment::Kind::kConstant: {
        if (seg.value == 0.0) break;
        const double c = seg.value;
        total +=
            integrate([&w, c](double r) { return c * w(r); }, a, b, 1e-14, 1e-12)
                .value;
        break;
      }
      case PotentialSegment::Kind::kTabulated: {
        // integrate per linear piece so kinks never cross a panel
        const auto& s = seg.samples;
        for (size_t i = 0; i + 1 < s.size(); ++i) {
          const double pa = std::max(a, s[i].first);
          const double pb = std::min(b, s[i + 1].first);
          if (!(pb > pa)) continue;
          auto f = [&](double r) { return interp_samples(s, r) * w(r); };
          total += integrate(f, pa, pb, 1e-14, 1e-12).value;
        }
        break;
      }
    }
  }
  return total;
}

double RadialPotential::integral_rv(double lo, double hi) const {
  return integrate_weighted(lo, hi, [](double r) { return r; });
}

RadialPotential RadialPotential::from_json_text(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  RadialPotential v;
  if (!j.contains("segments") || !j["segments"].is_array()) {
    throw std::invalid_argument("potential JSON: missing \"segments\" array");
  }
  for (const auto& js : j["segments"]) {
    PotentialSegment seg;
    seg.r_lo = js.at("r_lo").get<double>();
    seg.r_hi = js.at("r_hi").get<double>();
    const std::string kind = js.at("kind").get<std::string>();
    if (kind == "hardcore") {
      seg.kind = PotentialSegment::Kind::kHardcore;
    } else if (kind == "const") {
      seg.kind = PotentialSegment::Kind::kConstant;
      seg.value = js.at("value").get<double>();
    } else if (kind == "tabulated") {
      seg.kind = PotentialSegment::Kind::kTabulated;
      for (const auto& p : js.at("samples")) {
        seg.samples.emplace_back(p.at(0).get<double>(), p.at(1).get<double>());
      }
    } else {
      throw std::invalid_argument("potential JSON: unknown kind \"" + kind +
                                  "\"");
    }
    v.segments.push_back(std::move(seg));
  }
  v.validate();
  return v;
}

std::string RadialPotential::to_json_text() const {
  nlohmann::json j;
  j["segments"] = nlohmann::json::array();
  for (const auto& seg : segments) {
    nlohmann::json js;
    js["r_lo"] = seg.r_lo;
    js["r_hi"] = seg.r_hi;
    switch (seg.kind) {
      case PotentialSegment::Kind::kHardcore:
        js["kind"] = "hardcore";
        break;
      case PotentialSegment::Kind::kConstant:
        js["kind"] = "const";
        js["value"] = seg.value;
        break;
      case PotentialSegment::Kind::kTabulated: {
        js["kind"] = "tabulated";
        auto arr = nlohmann::json::array();
        for (const auto& s : seg.samples) {
          arr.push_back({s.first, s.second});
        }
        js["samples"] = arr;
        break;
      }
    }
    j["segments"].push_back(js);
  }
  return j.dump(2);
}

RadialPotential RadialPotential::hard_disk(double radius) {
  RadialPotential v;
  v.segments.push_back(
      {0.0, radius, PotentialSegment::Kind::kHardcore, 0.0, {}});
  return v;
}

RadialPotential RadialPotential::soft_disk(double v0, double radius) {
  RadialPotential v;
  v.segments.push_back(
      {0.0, radius, PotentialSegment::Kind::kConstant, v0, {}});
  return v;
}

}  // namespace bose2d
