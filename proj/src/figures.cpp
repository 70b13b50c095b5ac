#include "qwalk/figures.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "qwalk/bounds.hpp"
#include "qwalk/classical.hpp"
#include "qwalk/ctqw.hpp"
#include "qwalk/errors.hpp"
#include "qwalk/spectral.hpp"

namespace qwalk {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

double parse_number(const std::string& text) {
  if (text.empty()) return kNaN;
  double x = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), x);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParameterError("not a number: '" + text + "'");
  }
  return x;
}

}  // namespace

int vertex_from_label(int n, int label) {
  if (label < 1 || label > 2 * n) {
    throw ParameterError("vertex label " + std::to_string(label) + " outside [1, 2n]");
  }
  return label - 1;
}

int vertex_label(int index) { return index + 1; }

int Dataset::column_index(const std::string& name) const {
  auto it = std::find(columns.begin(), columns.end(), name);
  if (it == columns.end()) throw ParameterError("no column named " + name);
  return static_cast<int>(it - columns.begin());
}

std::vector<double> Dataset::column(const std::string& name) const {
  const int c = column_index(name);
  std::vector<double> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(r[c]);
  return out;
}

std::string format_number(double x) {
  if (std::isnan(x)) return "";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

void write_csv(std::ostream& out, const Dataset& data) {
  if (!data.comment.empty()) out << "# " << data.comment << '\n';
  for (std::size_t c = 0; c < data.columns.size(); ++c) {
    out << (c ? "," : "") << data.columns[c];
  }
  out << '\n';
  for (const auto& row : data.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << format_number(row[c]);
    out << '\n';
  }
}

Dataset parse_csv(std::istream& in) {
  Dataset data;
  std::string line;
  bool header = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      if (!header && data.comment.empty()) data.comment = line.substr(line.size() > 1 ? 2 : 1);
      continue;
    }
    if (!header) {
      data.columns = split_fields(line);
      header = true;
      continue;
    }
    const auto fields = split_fields(line);
    if (fields.size() != data.columns.size()) {
      throw ParameterError("row has " + std::to_string(fields.size()) + " fields, expected " +
                           std::to_string(data.columns.size()));
    }
    std::vector<double> row;
    for (const auto& f : fields) row.push_back(parse_number(f));
    data.rows.push_back(std::move(row));
  }
  if (!header) throw ParameterError("CSV has no header row");
  return data;
}

void write_svg(std::ostream& out, const Dataset& data, const std::string& x,
               const std::vector<std::string>& ys, bool log_y) {
  const double width = 640, height = 420, margin = 50;
  const int xc = data.column_index(x);
  auto yval = [&](double v) { return log_y ? std::log10(v) : v; };

  double x0 = std::numeric_limits<double>::infinity(), x1 = -x0, y0 = x0, y1 = -x0;
  for (const auto& name : ys) {
    const int yc = data.column_index(name);
    for (const auto& row : data.rows) {
      if (!std::isfinite(row[xc]) || !std::isfinite(row[yc]) || (log_y && row[yc] <= 0)) continue;
      x0 = std::min(x0, row[xc]);
      x1 = std::max(x1, row[xc]);
      y0 = std::min(y0, yval(row[yc]));
      y1 = std::max(y1, yval(row[yc]));
    }
  }
  if (!(x1 > x0)) x1 = x0 + 1;
  if (!(y1 > y0)) y1 = y0 + 1;
  auto px = [&](double v) { return margin + (v - x0) / (x1 - x0) * (width - 2 * margin); };
  auto py = [&](double v) { return height - margin - (v - y0) / (y1 - y0) * (height - 2 * margin); };

  static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd"};
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\">\n";
  out << "<line x1=\"" << margin << "\" y1=\"" << height - margin << "\" x2=\"" << width - margin
      << "\" y2=\"" << height - margin << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << margin << "\" y1=\"" << margin << "\" x2=\"" << margin << "\" y2=\""
      << height - margin << "\" stroke=\"black\"/>\n";
  out << "<text x=\"" << width / 2 << "\" y=\"" << height - 10 << "\">" << x << "</text>\n";
  out << "<text x=\"5\" y=\"" << margin - 10 << "\">" << (log_y ? "log10 " : "") << format_number(y1)
      << "</text>\n";
  out << "<text x=\"5\" y=\"" << height - margin << "\">" << format_number(y0) << "</text>\n";
  for (std::size_t k = 0; k < ys.size(); ++k) {
    const int yc = data.column_index(ys[k]);
    const char* color = colors[k % 5];
    out << "<polyline fill=\"none\" stroke=\"" << color << "\" points=\"";
    for (const auto& row : data.rows) {
      if (!std::isfinite(row[xc]) || !std::isfinite(row[yc]) || (log_y && row[yc] <= 0)) continue;
      out << px(row[xc]) << ',' << py(yval(row[yc])) << ' ';
    }
    out << "\"/>\n";
    out << "<text x=\"" << width - margin - 150 << "\" y=\"" << margin + 15 * k << "\" fill=\""
        << color << "\">" << ys[k] << "</text>\n";
  }
  out << "</svg>\n";
}

Dataset run_figure_1b(int n, const std::vector<long long>& t_grid,
                      const std::vector<double>& T_grid) {
  require_odd_order(n);
  const int p = vertex_from_label(n, 1);
  const int q = vertex_from_label(n, 15);
  for (long long t : t_grid) {
    if (t < 0) throw ParameterError("classical times must be non-negative");
  }
  for (double T : T_grid) {
    if (!(T > 0.0)) throw ParameterError("averaging horizons must be positive");
  }
  const VertexIndex from(n, p), to(n, q);
  const int delta = ((to.residue() - from.residue()) % n + n) % n;
  const int eps = from.block() == to.block() ? 1 : -1;

  // Classical column by stepping one distribution vector: exact zeros before
  // the walk can reach q, and no powering per grid point.
  long long t_last = 0;
  for (long long t : t_grid) t_last = std::max(t_last, t);
  std::vector<double> classical(t_grid.empty() ? 0 : t_last + 1);
  Eigen::VectorXd v = Eigen::VectorXd::Unit(2 * n, p);
  for (std::size_t t = 0; t < classical.size(); ++t) {
    classical[t] = v[q];
    v = classical_step(n, v);
  }

  Dataset data;
  data.columns = {"T", "quantum_avg_P(1,15)", "t", "classical_P(1,15)", "reference"};
  const std::size_t rows = std::max(t_grid.size(), T_grid.size());
  for (std::size_t k = 0; k < rows; ++k) {
    std::vector<double> row(5, kNaN);
    if (k < T_grid.size()) {
      row[0] = T_grid[k];
      row[1] = averaged_entry(n, delta, eps, T_grid[k]);
    }
    if (k < t_grid.size()) {
      row[2] = static_cast<double>(t_grid[k]);
      row[3] = classical[t_grid[k]];
    }
    row[4] = 1.0 / (2.0 * n);
    data.rows.push_back(std::move(row));
  }
  return data;
}

Dataset run_conjecture_figures(int n_max, int residue, int su3_limit) {
  if (residue != 1 && residue != 3) throw ParameterError("residue must be 1 or 3");
  Dataset data;
  data.columns = {"n", "p", "Su3", "Su3_scaled", "f_n", "bound_100n2ln5", "bound_100n2ln", "pass"};
  for (int p = 1;; ++p) {
    const int n = 4 * p + residue;
    if (n > n_max) break;
    const double f = conjecture_f(n).total;
    const double b5 = conjecture_envelope(n, 5);
    double su3 = kNaN, su3_scaled = kNaN;
    bool pass = f <= b5;
    if (n <= su3_limit) {
      const SuSums su = su_sums(n);
      su3 = su.su3_unscaled();
      su3_scaled = su.su3;
      pass = pass && su3 <= f;
    }
    data.rows.push_back({double(n), double(p), su3, su3_scaled, f, b5,
                         conjecture_envelope(n, 1), pass ? 1.0 : 0.0});
  }
  return data;
}

Dataset run_speedup_table(const std::vector<int>& n_list, double epsilon) {
  Dataset data;
  data.columns = {"n", "classical_tau", "classical_lower", "quantum_T_star", "theorem2_cap", "ratio"};
  for (int n : n_list) {
    const MixingReport c = classical_mixing_time(n, epsilon);
    const MixingReport q = quantum_mixing_threshold(n);
    data.rows.push_back({double(n), c.threshold_time, classical_lower_bound(n, epsilon).exact,
                         q.threshold_time, theorem2_horizon(n),
                         c.threshold_time / q.threshold_time});
  }
  return data;
}

}  // namespace qwalk
