#include "qlt/grid.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "qlt/error.hpp"

namespace qlt {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (v == 0.0) return "0";  // fold the sign of zero out of data files
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

namespace {

struct GridRecord {
  double x = 0, y = 0;
  double re = 0, im = 0;
  const char* method = "error";
};

GridRecord eval_node(const GridJob& job, double x, double y) {
  GridRecord rec;
  rec.x = x;
  rec.y = y;
  Vec p;
  p.reserve(2 + job.slice.size());
  p.push_back(x);
  p.push_back(y);
  p.insert(p.end(), job.slice.begin(), job.slice.end());
  try {
    const QuotientValue q =
        quotient_eval(job.f, job.g, p, job.near_tol, job.quad_order);
    rec.re = q.value.real();
    rec.im = q.value.imag();
    rec.method = to_string(q.method);
  } catch (const NotComplexLinear&) {
    rec.re = rec.im = std::nan("");
    rec.method = "on_gamma_undefined";
  } catch (const Error&) {
    rec.re = rec.im = std::nan("");
    rec.method = "error";
  }
  return rec;
}

void write_csv(const GridRecord& r, std::string& out) {
  out += format_double(r.x);
  out += ',';
  out += format_double(r.y);
  out += ',';
  out += format_double(r.re);
  out += ',';
  out += format_double(r.im);
  out += ',';
  out += r.method;
  out += '\n';
}

void write_json(const GridRecord& r, bool first, std::string& out) {
  if (!first) out += ",\n";
  out += "  {\"x\": ";
  out += format_double(r.x);
  out += ", \"y\": ";
  out += format_double(r.y);
  out += ", \"re\": ";
  out += std::isnan(r.re) ? "null" : format_double(r.re);
  out += ", \"im\": ";
  out += std::isnan(r.im) ? "null" : format_double(r.im);
  out += ", \"method\": \"";
  out += r.method;
  out += "\"}";
}

}  // namespace

void emit_grid(const GridJob& job, std::ostream& out) {
  if (job.f.empty() || job.g.empty()) throw std::invalid_argument("emit_grid: missing pair");
  if (job.nx < 2 || job.ny < 2) throw std::invalid_argument("emit_grid: resolution must be >= 2");
  if (!(job.xmax > job.xmin) || !(job.ymax > job.ymin))
    throw std::invalid_argument("emit_grid: degenerate window");
  const int dim = job.f.dimension();
  if (static_cast<int>(job.slice.size()) != dim - 2)
    throw std::invalid_argument("emit_grid: slice must pin all coordinates beyond the first two");

  const auto node = [&](int ix, int iy) {
    const double x = job.xmin + ix * (job.xmax - job.xmin) / (job.nx - 1);
    const double y = job.ymin + iy * (job.ymax - job.ymin) / (job.ny - 1);
    return std::pair{x, y};
  };

  // Workers fill disjoint row ranges; serialization happens afterwards in
  // row order, so the byte stream does not depend on the worker count.
  const std::size_t total = static_cast<std::size_t>(job.nx) * static_cast<std::size_t>(job.ny);
  std::vector<GridRecord> records(total);
  int workers = job.threads > 0 ? job.threads
                                : static_cast<int>(std::thread::hardware_concurrency());
  workers = std::max(1, std::min(workers, job.ny));

  const auto run_rows = [&](int y_begin, int y_end) {
    for (int iy = y_begin; iy < y_end; ++iy)
      for (int ix = 0; ix < job.nx; ++ix) {
        const auto [x, y] = node(ix, iy);
        records[static_cast<std::size_t>(iy) * job.nx + ix] = eval_node(job, x, y);
      }
  };

  if (workers == 1) {
    run_rows(0, job.ny);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    const int chunk = (job.ny + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
      const int b = w * chunk;
      const int e = std::min(job.ny, b + chunk);
      if (b < e) pool.emplace_back(run_rows, b, e);
    }
    for (auto& th : pool) th.join();
  }

  std::string buffer;
  buffer.reserve(total * 48);
  if (job.format == GridFormat::Csv) {
    buffer += "x,y,re,im,method\n";
    for (const GridRecord& r : records) write_csv(r, buffer);
  } else {
    buffer += "[\n";
    for (std::size_t k = 0; k < records.size(); ++k) write_json(records[k], k == 0, buffer);
    buffer += "\n]\n";
  }
  out << buffer;
}

}  // namespace qlt
