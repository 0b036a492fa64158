#include "sgl/operator_handle.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "sgl/eigs.hpp"

namespace sgl {

namespace {

std::function<void(std::span<const cplx>, std::span<cplx>)> dense_apply(
    const Matrix& m) {
  return [m](std::span<const cplx> x, std::span<cplx> y) { matvec(m, x, y); };
}

void check_square_finite(const Matrix& m) {
  if (m.rows() == 0 || m.rows() != m.cols())
    throw std::invalid_argument("operator matrix must be square and nonempty");
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag()))
        throw std::invalid_argument("operator matrix has non-finite entries");
}

std::vector<cplx> gaussian_complex(std::size_t count, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<cplx> v(count);
  for (auto& z : v) {
    const double re = normal(rng);
    const double im = normal(rng);
    z = cplx{re, im};
  }
  return v;
}

}  // namespace

Matrix OperatorHandle::densified() const {
  if (dense_data) return *dense_data;
  if (dim > 512)
    std::fprintf(stderr,
                 "[sgl] densifying matrix_free operator '%s' of dim %zu\n",
                 label.c_str(), dim);
  Matrix m(dim, dim);
  std::vector<cplx> e(dim), col(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    std::fill(e.begin(), e.end(), cplx{});
    e[j] = 1.0;
    apply(e, col);
    for (std::size_t i = 0; i < dim; ++i) m(i, j) = col[i];
  }
  return m;
}

OperatorHandle operator_from_matrix(Matrix m, std::string label) {
  check_square_finite(m);
  OperatorHandle h;
  h.dim = m.rows();
  h.kind = OperatorKind::dense;
  h.label = std::move(label);
  h.apply_fn = dense_apply(m);
  h.dense_data = std::move(m);
  return h;
}

OperatorHandle op_zero(std::size_t n) {
  if (n == 0) throw std::invalid_argument("zero: n must be positive");
  return operator_from_matrix(Matrix::zero(n), "zero(" + std::to_string(n) + ")");
}

OperatorHandle op_identity(std::size_t n) {
  if (n == 0) throw std::invalid_argument("identity: n must be positive");
  return operator_from_matrix(Matrix::identity(n),
                              "identity(" + std::to_string(n) + ")");
}

OperatorHandle op_diag(const std::vector<cplx>& values) {
  if (values.empty()) throw std::invalid_argument("diag: empty value list");
  Matrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return operator_from_matrix(std::move(m), "diag");
}

OperatorHandle op_jordan(cplx lambda, std::size_t n) {
  if (n == 0) throw std::invalid_argument("jordan: n must be positive");
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = lambda;
    if (i + 1 < n) m(i, i + 1) = 1.0;
  }
  return operator_from_matrix(std::move(m), "jordan");
}

OperatorHandle op_nilpotent_shift(std::size_t n) {
  if (n == 0) throw std::invalid_argument("nilpotent_shift: n must be positive");
  Matrix m(n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) m(i, i + 1) = 1.0;
  return operator_from_matrix(std::move(m),
                              "nilpotent_shift(" + std::to_string(n) + ")");
}

OperatorHandle op_rotation2() {
  Matrix m(2, 2);
  m(0, 1) = 1.0;
  m(1, 0) = -1.0;
  return operator_from_matrix(std::move(m), "rotation2");
}

OperatorHandle op_laplacian1d(std::size_t n, double h) {
  if (n == 0) throw std::invalid_argument("laplacian1d: n must be positive");
  if (!(h > 0.0)) throw std::invalid_argument("laplacian1d: h must be positive");
  const double w = 1.0 / (h * h);
  OperatorHandle op;
  op.dim = n;
  op.kind = OperatorKind::matrix_free;
  {
    std::ostringstream label;
    label << "laplacian1d(" << n << "," << h << ")";
    op.label = label.str();
  }
  op.apply_fn = [n, w](std::span<const cplx> x, std::span<cplx> y) {
    for (std::size_t i = 0; i < n; ++i) {
      cplx acc = -2.0 * x[i];
      if (i > 0) acc += x[i - 1];
      if (i + 1 < n) acc += x[i + 1];
      y[i] = w * acc;
    }
  };
  op.apply_adjoint_fn = op.apply_fn;  // symmetric real stencil
  // Thomas solve of (lambda*I - A); the shifted matrix is tridiagonal with
  // diagonal lambda + 2/h^2 and off-diagonals -1/h^2.
  op.solve_shifted = [n, w](cplx lambda, std::span<const cplx> b,
                            std::span<cplx> y) {
    const cplx diag = lambda + 2.0 * w;
    const cplx off = -w;
    std::vector<cplx> c(n), d(n);
    cplx denom = diag;
    if (denom == cplx{}) throw std::runtime_error("laplacian1d solve: singular shift");
    c[0] = off / denom;
    d[0] = b[0] / denom;
    for (std::size_t i = 1; i < n; ++i) {
      denom = diag - off * c[i - 1];
      if (denom == cplx{})
        throw std::runtime_error("laplacian1d solve: singular shift");
      c[i] = off / denom;
      d[i] = (b[i] - off * d[i - 1]) / denom;
    }
    y[n - 1] = d[n - 1];
    for (std::size_t ii = n - 1; ii-- > 0;) y[ii] = d[ii] - c[ii] * y[ii + 1];
  };
  return op;
}

OperatorHandle op_advection1d(std::size_t n, double h) {
  if (n == 0) throw std::invalid_argument("advection1d: n must be positive");
  if (!(h > 0.0)) throw std::invalid_argument("advection1d: h must be positive");
  // Upwind transport with zero inflow: (Ax)_i = (x_{i-1} - x_i)/h.
  Matrix m(n, n);
  const double w = 1.0 / h;
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = -w;
    if (i > 0) m(i, i - 1) = w;
  }
  std::ostringstream label;
  label << "advection1d(" << n << "," << h << ")";
  return operator_from_matrix(std::move(m), label.str());
}

OperatorHandle op_random_dissipative(std::size_t n, unsigned seed) {
  if (n == 0) throw std::invalid_argument("random_dissipative: n must be positive");
  std::mt19937_64 rng(0x5347ull * 1000003ull + seed);
  const auto g = gaussian_complex(n * n, rng);
  const auto hmat = gaussian_complex(n * n, rng);
  Matrix G(n, n), H(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      G(i, j) = g[i * n + j];
      H(i, j) = hmat[i * n + j];
    }
  // skew-Hermitian part + strictly negative-definite Hermitian part
  Matrix skew = (G - G.adjoint()) * cplx{0.5, 0.0};
  Matrix neg = multiply(H, H.adjoint()) * cplx{1.0 / static_cast<double>(n), 0.0};
  Matrix a = skew - neg;
  for (std::size_t i = 0; i < n; ++i) a(i, i) -= 0.1;
  // keep norms desk-scale
  const double nrm = spectral_norm(a);
  if (nrm > 4.0) a *= cplx{4.0 / nrm, 0.0};
  std::ostringstream label;
  label << "random_dissipative(" << n << ",seed=" << seed << ")";
  return operator_from_matrix(std::move(a), label.str());
}

OperatorHandle op_random_bounded(std::size_t n, unsigned seed, double norm_cap) {
  if (n == 0) throw std::invalid_argument("random_bounded: n must be positive");
  if (!(norm_cap > 0.0))
    throw std::invalid_argument("random_bounded: norm_cap must be positive");
  std::mt19937_64 rng(0x5342ull * 1000003ull + seed);
  const auto g = gaussian_complex(n * n, rng);
  Matrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = g[i * n + j];
  const double nrm = spectral_norm(a);
  a *= cplx{norm_cap / nrm, 0.0};
  std::ostringstream label;
  label << "random_bounded(" << n << ",seed=" << seed << ",cap=" << norm_cap
        << ")";
  return operator_from_matrix(std::move(a), label.str());
}

namespace {

cplx parse_complex(const std::string& text) {
  // accepts "a", "a+bi", "a-bi", "bi"
  std::string s = text;
  if (s.empty()) throw std::invalid_argument("empty complex literal");
  if (s.back() == 'i' || s.back() == 'I') {
    s.pop_back();
    // split at the last +/- that is not an exponent sign or leading sign
    std::size_t split = std::string::npos;
    for (std::size_t k = s.size(); k-- > 1;) {
      if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
        split = k;
        break;
      }
    }
    if (split == std::string::npos) {
      if (s.empty() || s == "+") return cplx{0.0, 1.0};
      if (s == "-") return cplx{0.0, -1.0};
      return cplx{0.0, std::stod(s)};
    }
    const double re = std::stod(s.substr(0, split));
    std::string im_part = s.substr(split);
    if (im_part == "+") im_part = "1";
    if (im_part == "-") im_part = "-1";
    return cplx{re, std::stod(im_part)};
  }
  return cplx{std::stod(s), 0.0};
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

struct SpecArgs {
  std::map<std::string, std::string> kv;
  std::vector<std::string> positional;
};

SpecArgs parse_args(const std::string& body) {
  SpecArgs args;
  if (body.empty()) return args;
  for (const auto& piece : split(body, ',')) {
    const auto eq = piece.find('=');
    if (eq == std::string::npos)
      args.positional.push_back(piece);
    else
      args.kv[piece.substr(0, eq)] = piece.substr(eq + 1);
  }
  return args;
}

std::size_t require_n(const SpecArgs& args) {
  auto it = args.kv.find("n");
  if (it == args.kv.end())
    throw std::invalid_argument("generator spec needs n=<dim>");
  const long long n = std::stoll(it->second);
  if (n <= 0) throw std::invalid_argument("generator spec: n must be positive");
  return static_cast<std::size_t>(n);
}

}  // namespace

OperatorHandle make_operator(const std::string& source) {
  if (source.rfind("file:", 0) == 0)
    return operator_from_matrix(read_matrix_file(source.substr(5)), source);
  if (source.size() > 5 && (source.ends_with(".json") || source.ends_with(".csv")))
    return operator_from_matrix(read_matrix_file(source), source);

  const auto colon = source.find(':');
  const std::string name = source.substr(0, colon);
  const SpecArgs args =
      parse_args(colon == std::string::npos ? "" : source.substr(colon + 1));

  if (name == "zero") return op_zero(require_n(args));
  if (name == "identity") return op_identity(require_n(args));
  if (name == "diag") {
    std::vector<cplx> values;
    for (const auto& v : args.positional) values.push_back(parse_complex(v));
    return op_diag(values);
  }
  if (name == "jordan") {
    auto it = args.kv.find("lambda");
    if (it == args.kv.end())
      throw std::invalid_argument("jordan spec needs lambda=<value>");
    return op_jordan(parse_complex(it->second), require_n(args));
  }
  if (name == "nilpotent_shift" || name == "nilpotent")
    return op_nilpotent_shift(require_n(args));
  if (name == "rotation2") return op_rotation2();
  if (name == "laplacian1d")
    return op_laplacian1d(require_n(args), std::stod(args.kv.at("h")));
  if (name == "advection1d")
    return op_advection1d(require_n(args), std::stod(args.kv.at("h")));
  if (name == "random_dissipative")
    return op_random_dissipative(
        require_n(args), static_cast<unsigned>(std::stoul(args.kv.at("seed"))));
  if (name == "random_bounded")
    return op_random_bounded(require_n(args),
                             static_cast<unsigned>(std::stoul(args.kv.at("seed"))),
                             std::stod(args.kv.at("cap")));
  throw std::invalid_argument("unknown operator spec: " + source);
}

Matrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open matrix file: " + path);
  if (path.ends_with(".json")) {
    nlohmann::json j;
    in >> j;
    const std::size_t rows = j.at("rows").get<std::size_t>();
    const std::size_t cols = j.at("cols").get<std::size_t>();
    const auto& re = j.at("re");
    const auto& im = j.at("im");
    if (re.size() != rows * cols || im.size() != rows * cols)
      throw std::invalid_argument("matrix json: re/im length mismatch");
    Matrix m(rows, cols);
    for (std::size_t k = 0; k < rows * cols; ++k)
      m(k / cols, k % cols) = cplx{re[k].get<double>(), im[k].get<double>()};
    check_square_finite(m);
    return m;
  }
  // CSV of real entries
  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<double> row;
    for (const auto& cell : split(line, ',')) row.push_back(std::stod(cell));
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw std::invalid_argument("matrix csv: empty file");
  const std::size_t n = rows.size();
  Matrix m(n, rows.front().size());
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != m.cols())
      throw std::invalid_argument("matrix csv: ragged rows");
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
  }
  check_square_finite(m);
  return m;
}

void write_matrix_json(const Matrix& m, const std::string& path) {
  nlohmann::ordered_json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  std::vector<double> re, im;
  re.reserve(m.rows() * m.cols());
  im.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t jj = 0; jj < m.cols(); ++jj) {
      re.push_back(m(i, jj).real());
      im.push_back(m(i, jj).imag());
    }
  j["re"] = re;
  j["im"] = im;
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << "\n";
}

void write_matrix_csv(const Matrix& m, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  char buf[64];
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      std::snprintf(buf, sizeof buf, "%.11e", m(i, j).real());
      out << (j ? "," : "") << buf;
    }
    out << "\n";
  }
}

std::vector<std::vector<cplx>> probe_vectors(std::size_t dim,
                                             std::size_t count, unsigned seed) {
  std::mt19937_64 rng(0x9E3779B9ull ^ (seed * 2654435761ull));
  std::vector<std::vector<cplx>> probes(count);
  for (auto& p : probes) {
    p = gaussian_complex(dim, rng);
    const double nrm = norm2(p);
    for (auto& z : p) z /= nrm;
  }
  return probes;
}

std::vector<OperatorHandle> builtin_test_set() {
  return {
      op_diag({cplx{-1.0, 0.0}, cplx{-2.0, 0.0}}),
      op_rotation2(),
      op_nilpotent_shift(2),
      op_jordan(cplx{-1.0, 0.0}, 3),
      op_laplacian1d(8, 1.0),
      op_random_dissipative(5, 11),
  };
}

std::vector<OperatorHandle> builtin_dissipative_set() {
  return {
      op_zero(3),
      op_diag({cplx{-1.0, 0.0}, cplx{-2.0, 0.0}}),
      op_rotation2(),
      op_jordan(cplx{-1.0, 0.0}, 3),
      op_laplacian1d(8, 1.0),
      op_advection1d(6, 0.5),
      op_random_dissipative(5, 11),
      op_random_dissipative(8, 2),
  };
}

}  // namespace sgl
