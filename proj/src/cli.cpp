#include "disbessel/cli.hpp"

#include "disbessel/core.hpp"
#include "disbessel/io.hpp"
#include "disbessel/reference.hpp"
#include "disbessel/svg.hpp"
#include "disbessel/transform.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <iostream>
#include <sstream>

namespace disbessel::cli {

namespace {

using io::format_number;

/// Calls fn.template operator()<Scalar>() for the configured precision.
template <typename Fn>
decltype(auto) with_precision(Precision p, Fn&& fn) {
  if (p == Precision::extended) return fn.template operator()<Extended>();
  return fn.template operator()<double>();
}

void emit(const RunConfig& config, const std::string& contents, std::ostream& out) {
  if (config.output_path)
    io::write_atomically(*config.output_path, contents);
  else
    out << contents;
}

template <typename Scalar>
Scalar parse_scalar(const std::string& text);

template <>
double parse_scalar<double>(const std::string& text) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw UsageError("not a number: '" + text + "'");
  return v;
}

template <>
Extended parse_scalar<Extended>(const std::string& text) {
  // Validate with the double parser first; boost accepts some malformed text.
  (void)parse_scalar<double>(text);
  return Extended(text);
}

std::vector<int> figure_orders(int j) {
  std::vector<int> orders;
  for (int n : {0, 10, 30, 50})
    if (n <= 2 * j) orders.push_back(n);
  return orders;
}

}  // namespace

std::optional<Command> parse_command(const std::string& name) {
  if (name == "table") return Command::table;
  if (name == "verify") return Command::verify;
  if (name == "compare") return Command::compare;
  if (name == "transform") return Command::transform;
  if (name == "det") return Command::det;
  if (name == "plot") return Command::plot;
  return std::nullopt;
}

void validate(const RunConfig& config) {
  if (config.j < 0) throw UsageError("--j must be >= 0");
  if (config.format == Format::svg && config.command != Command::plot &&
      config.command != Command::compare)
    throw UsageError("--format svg is only valid for plot and compare");
  if (config.command == Command::transform && !config.input_path)
    throw UsageError("transform needs --input <signal.csv>");
}

int run(const RunConfig& config, std::ostream& out) {
  try {
    validate(config);
    switch (config.command) {
      case Command::table: return cmd_table(config, out);
      case Command::verify: return cmd_verify(config, out);
      case Command::compare: return cmd_compare(config, out);
      case Command::transform: return cmd_transform(config, out);
      case Command::det: return cmd_det(config, out);
      case Command::plot: return cmd_plot(config, out);
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const io::IoError& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

int cmd_table(const RunConfig& config, std::ostream& out) {
  const std::string csv = with_precision(config.precision, [&]<typename Scalar>() {
    const auto grid = make_grid<Scalar>(config.j);
    std::ostringstream s;
    s << "n,m,B,J,diff\n";
    const int j = config.j;
    std::vector<Vector<Scalar>> columns;
    for (int m = 0; m <= 4 * j; ++m) columns.push_back(discrete_bessel_row(grid, Scalar(m)));
    for (int n = 0; n <= 2 * j; ++n) {
      for (int m = 0; m <= 4 * j; ++m) {
        const double b = to_double(columns[static_cast<std::size_t>(m)](n));
        const double jn = j_bessel(n, m);
        s << n << ',' << m << ',' << format_number(b) << ',' << format_number(jn) << ','
          << format_number(jn - b) << '\n';
      }
    }
    return s.str();
  });
  emit(config, csv, out);
  return kOk;
}

int cmd_verify(const RunConfig& config, std::ostream& out) {
  std::ostringstream report;
  const int code = with_precision(config.precision, [&]<typename Scalar>() {
    const auto grid = make_grid<Scalar>(config.j);
    return run_verify(GridEvaluator<Scalar>(grid), config, report);
  });
  out << report.str();
  if (config.output_path) io::write_atomically(*config.output_path, report.str());
  return code;
}

int cmd_compare(const RunConfig& config, std::ostream& out) {
  const std::filesystem::path dir = config.output_path.value_or(".");
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (!std::filesystem::is_directory(dir))
    throw io::IoError("compare output " + dir.string() + " is not a directory");
  const int j = config.j;

  // Mean quadratic error per order, working precision.
  {
    const auto grid = make_grid<double>(j);
    const ErrorReport report = error_report(grid, 2 * j);
    std::ostringstream s;
    s << "n,delta\n";
    for (const OrderError& e : report.per_order) s << e.n << ',' << format_number(e.delta) << '\n';
    io::write_atomically(dir / "delta.csv", s.str());
  }

  struct Sweep {
    std::vector<std::int64_t> m;
    std::vector<double> approx;
    std::vector<double> target;
  };
  struct Sweeps {
    Sweep sin, cos, sinc, cosc, half_sinc, half_cosc;
  };

  const Sweeps sweeps = with_precision(config.precision, [&]<typename Scalar>() {
    using std::cos;
    using std::sin;
    const auto grid = make_grid<Scalar>(j);
    const GridEvaluator<Scalar> eval(grid);
    Sweeps out_sweeps;
    for (std::int64_t m = 0; m <= 2 * j; ++m) {
      const Scalar x(m);
      out_sweeps.sin.m.push_back(m);
      out_sweeps.sin.approx.push_back(to_double(approx_sin(eval, x)));
      out_sweeps.sin.target.push_back(to_double(Scalar(sin(x))));
      out_sweeps.cos.m.push_back(m);
      out_sweeps.cos.approx.push_back(to_double(approx_cos(eval, x)));
      out_sweeps.cos.target.push_back(to_double(Scalar(cos(x))));
    }
    for (std::int64_t m = -j; m <= j; ++m) {
      const Scalar x(m);
      for (Sweep* sw : {&out_sweeps.sinc, &out_sweeps.cosc, &out_sweeps.half_sinc,
                        &out_sweeps.half_cosc})
        sw->m.push_back(m);
      out_sweeps.sinc.approx.push_back(to_double(approx_sinc(eval, x)));
      out_sweeps.sinc.target.push_back(to_double(sinc(x)));
      out_sweeps.cosc.approx.push_back(to_double(approx_cosc(eval, x)));
      out_sweeps.cosc.target.push_back(to_double(cosc(x)));
      out_sweeps.half_sinc.approx.push_back(to_double(half_circle_sum_sinc(eval, x)));
      out_sweeps.half_sinc.target.push_back(to_double(sinc(x)));
      out_sweeps.half_cosc.approx.push_back(to_double(half_circle_sum_cosc(eval, x)));
      out_sweeps.half_cosc.target.push_back(to_double(cosc(x)));
    }
    return out_sweeps;
  });

  auto mse = [](const Sweep& s, bool skip_origin) {
    double sum = 0.0;
    std::size_t count = 0;
    for (std::size_t i = 0; i < s.m.size(); ++i) {
      if (skip_origin && s.m[i] == 0) continue;
      const double d = s.approx[i] - s.target[i];
      sum += d * d;
      ++count;
    }
    return count ? sum / count : 0.0;
  };

  {
    std::ostringstream s;
    s << "m,approx_sin,sin,approx_cos,cos\n";
    for (std::size_t i = 0; i < sweeps.sin.m.size(); ++i)
      s << sweeps.sin.m[i] << ',' << format_number(sweeps.sin.approx[i]) << ','
        << format_number(sweeps.sin.target[i]) << ',' << format_number(sweeps.cos.approx[i]) << ','
        << format_number(sweeps.cos.target[i]) << '\n';
    io::write_atomically(dir / "sincos.csv", s.str());
  }
  {
    std::ostringstream s;
    s << "m,approx_sinc,sinc,approx_cosc,cosc,half_circle_sinc,half_circle_cosc\n";
    for (std::size_t i = 0; i < sweeps.sinc.m.size(); ++i)
      s << sweeps.sinc.m[i] << ',' << format_number(sweeps.sinc.approx[i]) << ','
        << format_number(sweeps.sinc.target[i]) << ',' << format_number(sweeps.cosc.approx[i])
        << ',' << format_number(sweeps.cosc.target[i]) << ','
        << format_number(sweeps.half_sinc.approx[i]) << ','
        << format_number(sweeps.half_cosc.approx[i]) << '\n';
    io::write_atomically(dir / "sinc_cosc.csv", s.str());
  }
  {
    std::ostringstream s;
    s << "quantity,j,mse\n";
    const std::pair<const char*, double> rows[] = {
        {"approx_sin", mse(sweeps.sin, false)},
        {"approx_cos", mse(sweeps.cos, false)},
        {"approx_sinc", mse(sweeps.sinc, true)},
        {"approx_cosc", mse(sweeps.cosc, true)},
        {"half_circle_sinc", mse(sweeps.half_sinc, true)},
        {"half_circle_cosc", mse(sweeps.half_cosc, true)},
    };
    for (const auto& [name, value] : rows) {
      s << name << ',' << j << ',' << format_number(value) << '\n';
      out << name << " mse=" << format_number(value) << '\n';
    }
    io::write_atomically(dir / "summary.csv", s.str());
  }

  if (config.format == Format::svg) {
    auto panel = [](const std::string& title, const Sweep& sw, double x_min, double x_max,
                    double y_min, double y_max, auto&& continuous) {
      svg::Panel p;
      p.title = title;
      p.x_min = x_min;
      p.x_max = x_max;
      p.y_min = y_min;
      p.y_max = y_max;
      svg::Polyline line;
      line.stroke = "#777777";
      for (double x = x_min; x <= x_max; x += 0.05) line.points.push_back({x, continuous(x)});
      p.lines.push_back(std::move(line));
      for (std::size_t i = 0; i < sw.m.size(); ++i)
        p.circles.push_back({static_cast<double>(sw.m[i]), sw.approx[i]});
      return p;
    };
    const double top = 2.0 * j;
    io::write_atomically(
        dir / "sincos.svg",
        svg::render({panel("2 sum (-1)^n B_{2n+1}(m) vs sin m", sweeps.sin, 0, top, -1.2, 1.2,
                           [](double x) { return std::sin(x); }),
                     panel("sum eps_n (-1)^n B_{2n}(m) vs cos m", sweeps.cos, 0, top, -1.2, 1.2,
                           [](double x) { return std::cos(x); })},
                    "j=" + std::to_string(j) + ", N=" + std::to_string(2 * j + 1)));
    io::write_atomically(
        dir / "sinc_cosc.svg",
        svg::render({panel("quadrature of B_0 vs sinc m", sweeps.sinc, -j, j, -0.4, 1.1,
                           [](double x) { return sinc(x); }),
                     panel("quadrature of B_1 vs cosc m", sweeps.cosc, -j, j, -0.8, 0.8,
                           [](double x) { return cosc(x); })},
                    "j=" + std::to_string(j) + ", N=" + std::to_string(2 * j + 1)));
  }
  out << "wrote delta.csv sincos.csv sinc_cosc.csv summary.csv"
      << (config.format == Format::svg ? " sincos.svg sinc_cosc.svg" : "") << " to "
      << dir.string() << '\n';
  return kOk;
}

int cmd_transform(const RunConfig& config, std::ostream& out) {
  const std::vector<std::string> cells = io::read_column(*config.input_path);
  const int size = 2 * config.j + 1;
  if (static_cast<int>(cells.size()) != size)
    throw UsageError("signal has " + std::to_string(cells.size()) + " rows, expected N=" +
                     std::to_string(size));
  return with_precision(config.precision, [&]<typename Scalar>() {
    using std::abs;
    Signal<Scalar> f{Vector<Scalar>(size)};
    for (int m = 0; m < size; ++m) f.values(m) = parse_scalar<Scalar>(cells[static_cast<std::size_t>(m)]);
    const BesselMatrix<Scalar> b = build_matrix<Scalar>(config.j);
    Inversion<Scalar> inv;
    try {
      inv = invert(b);
    } catch (const SingularMatrixError& e) {
      out << "conditioning failure: " << e.what() << '\n' << format_report(e.report()) << '\n';
      return static_cast<int>(kFailure);
    }
    const ModeVector<Scalar> modes = forward(b, f);
    const Signal<Scalar> back = inverse(inv.inverse, modes);
    std::ostringstream s;
    s << "n,f_tilde\n";
    for (int n = 0; n < size; ++n) s << n << ',' << format_number(to_double(modes.values(n))) << '\n';
    s << "\nm,f,f_reconstructed,abs_err\n";
    for (int m = 0; m < size; ++m)
      s << m << ',' << format_number(to_double(f.values(m))) << ','
        << format_number(to_double(back.values(m))) << ','
        << format_number(to_double(Scalar(abs(back.values(m) - f.values(m))))) << '\n';
    emit(config, s.str(), out);
    out << format_report(inv.report) << '\n';
    return static_cast<int>(kOk);
  });
}

int cmd_det(const RunConfig& config, std::ostream& out) {
  return with_precision(config.precision, [&]<typename Scalar>() {
    BesselMatrix<Scalar> b = build_matrix<Scalar>(config.j);
    factorize(b);
    const LogDeterminant det = log_determinant(b);
    std::ostringstream s;
    s << "N=" << 2 * config.j + 1 << " log10|det|=" << format_number(det.log10_abs)
      << " sign=" << det.sign << " diag_product_log10=" << format_number(diag_product_estimate(config.j))
      << " precision=" << to_string(config.precision) << '\n';
    out << s.str();
    if (config.output_path) io::write_atomically(*config.output_path, s.str());
    return static_cast<int>(det.singular ? kFailure : kOk);
  });
}

int cmd_plot(const RunConfig& config, std::ostream& out) {
  const int j = config.j;
  const auto orders = figure_orders(j);
  const auto grid = make_grid<double>(j);
  std::vector<Vector<double>> columns;
  for (int m = 0; m <= 4 * j; ++m) columns.push_back(discrete_bessel_row(grid, double(m)));

  if (config.format == Format::csv) {
    std::ostringstream s;
    s << "n,m,B,J,diff\n";
    for (int n : orders)
      for (int m = 0; m <= 4 * j; ++m) {
        const double b = columns[static_cast<std::size_t>(m)](n);
        const double jn = j_bessel(n, m);
        s << n << ',' << m << ',' << format_number(b) << ',' << format_number(jn) << ','
          << format_number(jn - b) << '\n';
      }
    emit(config, s.str(), out);
    return kOk;
  }

  std::vector<svg::Panel> panels;
  const double x_max = std::max(4.0 * j, 1.0);
  for (int n : orders) {
    svg::Panel p;
    p.title = "n=" + std::to_string(n);
    p.x_min = 0.0;
    p.x_max = x_max;
    p.y_min = -0.5;
    p.y_max = 1.05;
    // Continuous curve, gray between integer points where both ends match to
    // 1e-16 and heavy black elsewhere.
    for (int m = 0; m < 4 * j; ++m) {
      const double d0 = std::abs(j_bessel(n, m) - columns[static_cast<std::size_t>(m)](n));
      const double d1 = std::abs(j_bessel(n, m + 1) - columns[static_cast<std::size_t>(m + 1)](n));
      const bool close = d0 < 1e-16 && d1 < 1e-16;
      svg::Polyline seg;
      seg.stroke = close ? "#999999" : "#000000";
      seg.width = close ? 1.0 : 2.2;
      for (int i = 0; i <= 8; ++i) {
        const double x = m + i / 8.0;
        seg.points.push_back({x, j_bessel(n, x)});
      }
      p.lines.push_back(std::move(seg));
    }
    for (int m = 0; m <= 4 * j; ++m)
      p.circles.push_back({static_cast<double>(m), columns[static_cast<std::size_t>(m)](n)});
    panels.push_back(std::move(p));
  }
  const std::string doc = svg::render(
      panels, "B_n(m) (circles) and J_n(m) (lines), j=" + std::to_string(j) +
                  ", N=" + std::to_string(2 * j + 1));
  emit(config, doc, out);
  return kOk;
}

}  // namespace disbessel::cli
