#include "tridesign/report.hpp"

#include "json.hpp"

#include <array>
#include <chrono>
#include <ctime>
#include <sstream>

namespace tridesign {

namespace {

using Json = nlohmann::ordered_json;

Json interval_json(const Rational& lo, const Rational& hi) {
  if (lo == hi) {
    return to_string(lo);
  }
  return Json::array({to_string(lo), to_string(hi)});
}

std::string interval_text(const Rational& lo, const Rational& hi) {
  if (lo == hi) {
    return to_string(lo);
  }
  return "[" + to_string(lo) + "," + to_string(hi) + "]";
}

Json rationals_json(const std::vector<Rational>& values) {
  Json out = Json::array();
  for (const auto& v : values) {
    out.push_back(to_string(v));
  }
  return out;
}

Json record_json(const CandidateReport& r, bool detailed) {
  Json j;
  j["n"] = r.parameters.n;
  j["M"] = r.parameters.M.str();
  j["T"] = r.parameters.T ? Json(r.parameters.T->str()) : Json(nullptr);
  j["status"] = to_string(r.status);
  if (detailed) {
    j["cubic"] = r.cubic ? Json(r.cubic->to_string()) : Json(nullptr);
  }
  Json products = Json::array();
  if (r.inner_products) {
    for (const auto& root : r.inner_products->roots) {
      products.push_back(interval_json(root.lo, root.hi));
    }
  }
  j["inner_products"] = products;
  Json distribution = Json::array();
  if (r.distribution) {
    for (const auto& c : r.distribution->counts) {
      distribution.push_back(interval_json(c.lo, c.hi));
    }
  }
  j["distribution"] = distribution;
  Json families = Json::array();
  for (const auto& f : r.families) {
    families.push_back(to_string(f));
  }
  j["families"] = families;
  Json derived = Json::array();
  for (const auto& d : r.derived) {
    Json dj;
    dj["which"] = to_string(d.which);
    dj["products"] = rationals_json(d.products);
    dj["values"] = rationals_json(d.values);
    dj["verdict"] = to_string(d.verdict);
    if (detailed && !d.reason.empty()) {
      dj["reason"] = d.reason;
    }
    derived.push_back(dj);
  }
  j["derived"] = derived;
  if (detailed && !r.note.empty()) {
    j["note"] = r.note;
  }
  return j;
}

std::string utc_now() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buffer[32];
  std::strftime(buffer, sizeof buffer, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buffer;
}

std::string joined(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t k = 0; k < items.size(); ++k) {
    out += (k != 0 ? ";" : "") + items[k];
  }
  return out;
}

}  // namespace

std::string version_string() { return "1.0.0"; }

std::string candidate_json(const CandidateReport& report, bool detailed) { return record_json(report, detailed).dump(); }

std::string scan_report_json(const ScanResult& result, const ReportMetadata& metadata) {
  Json meta;
  meta["tool"] = "tridesign";
  meta["version"] = version_string();
  meta["n_min"] = metadata.n_min;
  meta["n_max"] = metadata.n_max;
  if (metadata.include_timestamp) {
    meta["timestamp"] = metadata.timestamp.empty() ? utc_now() : metadata.timestamp;
  }
  meta["examined"] = result.examined;
  Json counts;
  for (const auto& [status, count] : result.counts) {
    counts[to_string(status)] = count;
  }
  meta["counts"] = counts;
  Json doc;
  doc["metadata"] = meta;
  Json records = Json::array();
  for (const auto& r : result.records) {
    records.push_back(record_json(r, false));
  }
  doc["records"] = records;
  return doc.dump(2) + "\n";
}

std::string scan_report_csv(const ScanResult& result) {
  std::ostringstream out;
  out << "n,M,T,status,inner_products,distribution,families,derived_a,derived_b,derived_c\n";
  for (const auto& r : result.records) {
    std::vector<std::string> products;
    if (r.inner_products) {
      for (const auto& root : r.inner_products->roots) {
        products.push_back(interval_text(root.lo, root.hi));
      }
    }
    std::vector<std::string> distribution;
    if (r.distribution) {
      for (const auto& c : r.distribution->counts) {
        distribution.push_back(interval_text(c.lo, c.hi));
      }
    }
    std::vector<std::string> families;
    for (const auto& f : r.families) {
      families.push_back(to_string(f));
    }
    out << r.parameters.n << ',' << r.parameters.M << ',' << (r.parameters.T ? r.parameters.T->str() : "") << ','
        << to_string(r.status) << ',' << joined(products) << ',' << joined(distribution) << ',' << joined(families);
    std::array<std::string, 3> derived;
    for (const auto& d : r.derived) {
      std::vector<std::string> values;
      for (const auto& v : d.values) {
        values.push_back(to_string(v));
      }
      values.push_back(to_string(d.verdict));
      derived[static_cast<std::size_t>(d.which)] = joined(values);
    }
    for (const auto& d : derived) {
      out << ',' << d;
    }
    out << '\n';
  }
  return out.str();
}

std::string analysis_text(const CandidateReport& r) {
  std::ostringstream out;
  out << "n = " << r.parameters.n << ", M = " << r.parameters.M;
  if (r.parameters.T) {
    out << ", T = " << *r.parameters.T;
  }
  out << "\n";
  if (r.cubic) {
    out << "cubic: " << r.cubic->to_string() << "\n";
  }
  if (r.inner_products) {
    const char* names[] = {"a", "b", "c"};
    for (std::size_t k = 0; k < 3; ++k) {
      const auto& root = r.inner_products->roots[k];
      out << names[k] << " = ";
      if (root.is_exact()) {
        out << to_string(root.lo);
      } else {
        out << "in [" << to_string(root.lo) << ", " << to_string(root.hi) << "] ~ " << root.approx();
      }
      out << "\n";
    }
  }
  if (r.distribution) {
    const char* names[] = {"X", "Y", "Z"};
    for (std::size_t k = 0; k < 3; ++k) {
      const auto& c = r.distribution->counts[k];
      out << names[k] << " = ";
      if (c.is_point()) {
        out << to_string(c.lo);
      } else {
        out << "in [" << to_string(c.lo) << ", " << to_string(c.hi) << "] ~ " << to_double(c.midpoint());
      }
      out << "\n";
    }
  }
  for (const auto& f : r.families) {
    out << "family: " << to_string(f) << "\n";
  }
  for (const auto& d : r.derived) {
    out << "derived " << to_string(d.which) << ": ";
    if (d.verdict == DerivedVerdict::Skipped) {
      out << "Skipped (" << d.reason << ")\n";
      continue;
    }
    out << "products (";
    for (std::size_t k = 0; k < d.products.size(); ++k) {
      out << (k != 0 ? ", " : "") << to_string(d.products[k]);
    }
    out << ") values (";
    for (std::size_t k = 0; k < d.values.size(); ++k) {
      out << (k != 0 ? ", " : "") << to_string(d.values[k]);
    }
    out << ") " << to_string(d.verdict) << "\n";
  }
  if (!r.note.empty()) {
    out << "note: " << r.note << "\n";
  }
  out << "status: " << to_string(r.status) << "\n";
  return out.str();
}

}  // namespace tridesign
