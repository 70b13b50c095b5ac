#pragma once

// Tabular datasets behind the figures and tables, with CSV round-tripping and
// a bare-bones SVG line plot.

#include <iosfwd>
#include <string>
#include <vector>

namespace qwalk {

// User-facing vertex labels are 1-based; everything internal is 0-based.
// These two functions are the only place the offset is applied.
int vertex_from_label(int n, int label);
int vertex_label(int index);

// Numeric table. Missing cells are NaN and written as empty fields.
struct Dataset {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  std::string comment;  // written as a leading "# ..." line

  int column_index(const std::string& name) const;  // throws ParameterError
  std::vector<double> column(const std::string& name) const;
};

// Shortest representation that reads back to the same double.
std::string format_number(double x);

void write_csv(std::ostream& out, const Dataset& data);
// Reads what write_csv writes: optional '#' comment lines, a header, rows.
Dataset parse_csv(std::istream& in);

// Polylines of each y column against x, axes and a legend. log_y plots log10(y).
void write_svg(std::ostream& out, const Dataset& data, const std::string& x,
               const std::vector<std::string>& ys, bool log_y = false);

// Columns: T, quantum_avg_P(1,15), t, classical_P(1,15), reference.
// The two grids fill their own columns; the shorter one is padded with NaN.
Dataset run_figure_1b(int n, const std::vector<long long>& t_grid,
                      const std::vector<double>& T_grid);

// One row per valid p with n = 4p + residue <= n_max (n >= 5). Columns:
// n, p, Su3, Su3_scaled, f_n, bound_100n2ln5, bound_100n2ln, pass. Su3 is the
// quadrant sum without the 3/2 prefactor and is only computed for
// n <= su3_limit (NaN beyond). pass requires f_n <= bound_100n2ln5 and, where
// computed, Su3 <= f_n.
Dataset run_conjecture_figures(int n_max, int residue, int su3_limit = 2001);

// Columns: n, classical_tau, classical_lower, quantum_T_star, theorem2_cap,
// ratio. The quantum threshold is 1/2e; epsilon applies to the classical walk.
Dataset run_speedup_table(const std::vector<int>& n_list, double epsilon);

}  // namespace qwalk
