#include "bloch/harness/config_file.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace bloch {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::istringstream in(s);
  std::string part;
  while (std::getline(in, part, sep)) parts.push_back(trim(part));
  return parts;
}

double parse_double(const std::string& s, const std::string& key) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw InvalidArgumentError("config: cannot parse number '" + s + "' for key " + key);
  }
}

long parse_int(const std::string& s, const std::string& key) {
  try {
    std::size_t used = 0;
    const long v = std::stol(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw InvalidArgumentError("config: cannot parse integer '" + s + "' for key " + key);
  }
}

Complex parse_complex(const std::string& s, const std::string& key) {
  if (!s.empty() && s.front() == '(') {
    std::istringstream in(s);
    Complex z;
    in >> z;
    if (in.fail()) {
      throw InvalidArgumentError("config: cannot parse complex entry '" + s + "' for key " + key);
    }
    return z;
  }
  return Complex(parse_double(s, key), 0.0);
}

std::vector<double> parse_real_vector(const std::string& s, const std::string& key) {
  std::vector<double> out;
  for (const std::string& part : split(s, ',')) {
    if (!part.empty()) out.push_back(parse_double(part, key));
  }
  return out;
}

// Rows separated by ';', entries by ','. Complex entries use the (re,im)
// form, which contains no separators that collide with the row syntax.
ComplexMatrix parse_matrix(const std::string& s, const std::string& key) {
  std::vector<std::vector<Complex>> rows;
  for (const std::string& row_text : split(s, ';')) {
    if (row_text.empty()) continue;
    std::vector<Complex> row;
    for (const std::string& cell : split(row_text, ',')) {
      if (!cell.empty()) row.push_back(parse_complex(cell, key));
    }
    rows.push_back(std::move(row));
  }
  const int n = static_cast<int>(rows.size());
  std::vector<Complex> entries;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n) {
      throw InvalidArgumentError("config: matrix for key " + key + " is not square");
    }
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return ComplexMatrix::from_data(n, std::move(entries));
}

std::vector<double> matrix_to_rates(const ComplexMatrix& m, const std::string& key) {
  std::vector<double> rates;
  rates.reserve(m.size());
  for (std::size_t k = 0; k < m.size(); ++k) {
    const Complex& z = m.data()[k];
    if (z.imag() != 0.0) {
      throw InvalidArgumentError("config: rate matrix " + key + " must be real");
    }
    rates.push_back(z.real());
  }
  return rates;
}

ExperimentKind parse_experiment_name(const std::string& name) {
  if (name == "three_level") return ExperimentKind::ThreeLevel;
  if (name == "degenerate") return ExperimentKind::Degenerate;
  if (name == "scaling") return ExperimentKind::Scaling;
  if (name == "convergence") return ExperimentKind::Convergence;
  if (name == "custom") return ExperimentKind::Custom;
  throw InvalidArgumentError("config: unknown experiment '" + name + "'");
}

}  // namespace

LiouvilleVariant parse_method_name(const std::string& name) {
  if (name == "exp") return LiouvilleVariant::Exponential;
  if (name == "cn") return LiouvilleVariant::CrankNicolson;
  if (name == "newton") return LiouvilleVariant::Newton;
  if (name == "canonical") return LiouvilleVariant::Canonical3;
  throw InvalidArgumentError("unknown method '" + name +
                             "'; valid methods are exp, cn, newton, canonical");
}

ExperimentConfig parse_config_text(const std::string& text) {
  ExperimentConfig cfg;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw InvalidArgumentError("config line " + std::to_string(line_no) +
                                 ": expected key = value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));

    if (key == "experiment") {
      cfg.experiment = parse_experiment_name(value);
    } else if (key == "method") {
      cfg.method = parse_method_name(value);
    } else if (key == "n_p") {
      cfg.n_p = static_cast<int>(parse_int(value, key));
    } else if (key == "periods") {
      cfg.periods = static_cast<int>(parse_int(value, key));
    } else if (key == "levels") {
      cfg.levels = static_cast<int>(parse_int(value, key));
    } else if (key == "omega") {
      cfg.omega = parse_real_vector(value, key);
    } else if (key == "p_matrix") {
      if (value == "three_level" || value == "degenerate") {
        cfg.p_preset = value;
        cfg.p_matrix.reset();
      } else {
        cfg.p_matrix = parse_matrix(value, key);
        cfg.levels = cfg.p_matrix->dim();
      }
    } else if (key == "relaxation") {
      if (value == "none") {
        cfg.relaxation_kind = RelaxationKind::None;
      } else if (value == "pauli") {
        cfg.relaxation_kind = RelaxationKind::Pauli;
      } else {
        throw InvalidArgumentError("config: unknown relaxation '" + value + "'");
      }
    } else if (key == "pauli_w") {
      cfg.pauli_pop_rates = matrix_to_rates(parse_matrix(value, key), key);
    } else if (key == "pauli_gamma") {
      cfg.pauli_coh_rates = matrix_to_rates(parse_matrix(value, key), key);
    } else if (key == "output_path") {
      cfg.output_path = value;
    } else if (key == "record_stride") {
      cfg.record_stride = static_cast<int>(parse_int(value, key));
    } else if (key == "seed") {
      cfg.seed = static_cast<std::uint64_t>(parse_int(value, key));
    } else if (key == "scaling_levels") {
      cfg.scaling_levels.clear();
      for (double v : parse_real_vector(value, key)) {
        cfg.scaling_levels.push_back(static_cast<int>(v));
      }
    } else {
      throw InvalidArgumentError("config: unknown key '" + key + "'");
    }
  }
  cfg.validate();
  return cfg;
}

ExperimentConfig parse_config_file(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw IoError("cannot open config file " + path);
  std::ostringstream buf;
  buf << file.rdbuf();
  return parse_config_text(buf.str());
}

}  // namespace bloch
