#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "gclust/bench.hpp"

namespace gclust {

namespace {

std::string quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  fields.push_back(std::move(cur));
  return fields;
}

std::string fmt(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

const char* kScoreColumns[] = {"mi",  "nmi", "ami",          "ri",          "ars",
                               "homogeneity", "completeness", "v_measure", "modularity"};

std::string status_name(BenchRecord::Status s) {
  switch (s) {
    case BenchRecord::Status::Ok: return "ok";
    case BenchRecord::Status::Timeout: return "timeout";
    case BenchRecord::Status::Crashed: return "crashed";
    default: return "gen_failed";
  }
}

BenchRecord::Status status_from(const std::string& s) {
  if (s == "ok") return BenchRecord::Status::Ok;
  if (s == "timeout") return BenchRecord::Status::Timeout;
  if (s == "crashed") return BenchRecord::Status::Crashed;
  if (s == "gen_failed") return BenchRecord::Status::GenFailed;
  throw std::runtime_error("unknown record status: " + s);
}

}  // namespace

void export_records_csv(const std::vector<BenchRecord>& records, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << "algorithm,spec,kind,seed,mu,cz,gamma,status,timed_out,runtime_ms";
  for (const char* c : kScoreColumns) out << ',' << c;
  out << ",error\n";
  for (const BenchRecord& r : records) {
    out << quote(r.algorithm) << ',' << quote(r.spec.name()) << ',' << r.spec.kind() << ','
        << r.seed << ',';
    if (auto mu = r.spec.mu()) out << fmt(*mu);
    out << ',';
    if (auto cz = r.spec.cz()) out << *cz;
    out << ',';
    if (auto gm = r.spec.gamma()) out << fmt(*gm);
    out << ',' << status_name(r.status) << ',' << (r.timed_out ? 1 : 0) << ','
        << fmt(r.runtime_ms);
    for (const char* c : kScoreColumns) {
      out << ',';
      auto it = r.scores.find(c);
      if (it != r.scores.end()) out << fmt(it->second);
    }
    out << ',' << quote(r.error) << '\n';
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::vector<BenchRecord> import_records_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error(path + ": missing header");
  std::vector<std::string> header = split_csv_line(line);

  std::vector<BenchRecord> records;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> f = split_csv_line(line);
    if (f.size() != header.size())
      throw std::runtime_error(path + ": field count mismatch");
    BenchRecord r;
    for (std::size_t i = 0; i < header.size(); ++i) {
      const std::string& h = header[i];
      const std::string& v = f[i];
      if (h == "algorithm") {
        r.algorithm = v;
      } else if (h == "spec") {
        r.spec = GeneratorSpec::from_name(v);
      } else if (h == "seed") {
        if (!v.empty()) r.seed = std::stoull(v);
      } else if (h == "status") {
        r.status = status_from(v);
        r.timed_out = r.status == BenchRecord::Status::Timeout;
      } else if (h == "runtime_ms") {
        if (!v.empty()) r.runtime_ms = std::stod(v);
      } else if (h == "error") {
        r.error = v;
      } else if (h == "kind" || h == "mu" || h == "cz" || h == "gamma" ||
                 h == "timed_out") {
        // derived from spec/status on import
      } else if (!v.empty()) {
        r.scores[h] = std::stod(v);
      }
    }
    records.push_back(std::move(r));
  }
  return records;
}

void export_rank_csv(const RankTable& table, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << "algorithm";
  for (const std::string& c : table.columns) out << ',' << quote(c);
  out << ",summary\n";
  for (std::size_t r = 0; r < table.algorithms.size(); ++r) {
    out << quote(table.algorithms[r]);
    for (std::uint32_t rank : table.ranks[r]) out << ',' << rank;
    out << ',' << fmt(table.summary[r]) << '\n';
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

void export_curve_csv(const SweepCurve& curve, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << "x,label,median,skipped,note,raw\n";
  for (const SweepPoint& p : curve.points) {
    std::string raw;
    for (std::size_t i = 0; i < p.values.size(); ++i) {
      if (i) raw += ';';
      raw += fmt(p.values[i]);
    }
    out << fmt(p.x) << ',' << quote(p.label) << ','
        << (p.values.empty() ? "" : fmt(p.median)) << ',' << (p.skipped ? 1 : 0) << ','
        << quote(p.note) << ',' << quote(raw) << '\n';
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

void export_plotdata(const std::vector<SweepCurve>& curves, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  for (std::size_t i = 0; i < curves.size(); ++i) {
    if (i) out << "\n\n";
    out << "# series " << curves[i].algorithm << '\n';
    for (const SweepPoint& p : curves[i].points) {
      if (p.skipped || p.values.empty()) continue;
      out << fmt(p.x) << ' ' << fmt(p.median) << '\n';
    }
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace gclust
