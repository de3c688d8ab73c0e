#include "levelone/plot.hpp"

#include <stdexcept>
#include <string>

namespace levelone {

std::string emit_theta_plot(const Real& x_max, const PrimeTable& table) {
  if (x_max < 0) throw std::invalid_argument("emit_theta_plot: x_max must be nonnegative");
  if (2 * x_max > table.limit())
    throw std::out_of_range("emit_theta_plot: 2 * x_max beyond table limit " + std::to_string(table.limit()));

  std::string csv = "x,theta_2x,y_line\n";
  auto row = [&csv](const Real& x, const Real& y) {
    const std::string xs = format_decimal(x);
    csv += xs + ',' + format_decimal(y) + ',' + xs + '\n';
  };

  row(Real(0), Real(0));
  Real last(0);
  for (std::size_t k = 1; k <= table.count(); ++k) {
    const Real x = Real(table.prime(k)) / 2;
    if (x > x_max) break;
    row(x, table.theta_at_index(k - 1));
    row(x, table.theta_at_index(k));
    last = x;
  }
  if (x_max > last) row(x_max, table.theta(2 * x_max));
  return csv;
}

}  // namespace levelone
