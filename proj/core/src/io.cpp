#include "pdmc/io.hpp"

#include <fstream>
#include <sstream>

namespace pdmc {

FieldPtr parse_field_spec(const std::string& spec) {
  std::uint32_t p = 0, m = 1;
  std::optional<std::vector<Label>> modulus;
  std::string head = spec;
  const auto slash = spec.find('/');
  if (slash != std::string::npos) {
    head = spec.substr(0, slash);
    std::vector<Label> coeffs;
    std::stringstream cs(spec.substr(slash + 1));
    std::string item;
    while (std::getline(cs, item, ','))
      coeffs.push_back(static_cast<Label>(std::stoul(item)));
    modulus = std::move(coeffs);
  }
  const auto caret = head.find('^');
  try {
    if (caret == std::string::npos) {
      p = static_cast<std::uint32_t>(std::stoul(head));
    } else {
      p = static_cast<std::uint32_t>(std::stoul(head.substr(0, caret)));
      m = static_cast<std::uint32_t>(std::stoul(head.substr(caret + 1)));
    }
  } catch (const std::exception&) {
    throw BadParamsError("unparsable field spec: " + spec);
  }
  return make_field(p, m, std::move(modulus));
}

MatrixFq read_matrix(std::istream& in) {
  std::size_t rows = 0, cols = 0;
  std::string fieldspec;
  if (!(in >> rows >> cols >> fieldspec))
    throw BadParamsError("bad matrix header");
  FieldPtr field = parse_field_spec(fieldspec);
  MatrixFq m(field, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      std::uint32_t v;
      if (!(in >> v)) throw BadParamsError("matrix entry missing");
      if (v >= field->order()) throw BadParamsError("matrix entry out of range");
      m.set(i, j, static_cast<Label>(v));
    }
  return m;
}

void write_matrix(std::ostream& out, const MatrixFq& m) {
  out << m.rows() << " " << m.cols() << " " << m.field()->spec_string() << "\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out << " ";
      out << m.at(i, j);
    }
    out << "\n";
  }
}

MatrixFq read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw BadParamsError("cannot open " + path);
  return read_matrix(in);
}

void write_matrix_file(const std::string& path, const MatrixFq& m) {
  std::ofstream out(path);
  if (!out) throw BadParamsError("cannot open " + path);
  write_matrix(out, m);
}

CodeDescription read_code(std::istream& in) {
  std::string tag;
  if (!(in >> tag)) throw BadParamsError("empty code description");
  if (tag == "generator") {
    MatrixFq g = read_matrix(in);
    return CodeDescription{code_from_generator(g, false), std::nullopt};
  }
  if (tag == "bch") {
    std::uint32_t p = 0, m = 0;
    std::size_t n = 0, b = 0, delta = 0;
    if (!(in >> p >> m >> n >> b >> delta))
      throw BadParamsError("bad bch description line");
    BchCode bch = bch_build(p, m, n, b, delta);
    return CodeDescription{bch.code, std::move(bch)};
  }
  throw BadParamsError("unknown code description tag: " + tag);
}

CodeDescription read_code_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw BadParamsError("cannot open " + path);
  return read_code(in);
}

void write_generator_code(std::ostream& out, const LinearCode& code) {
  out << "generator\n";
  write_matrix(out, code.G);
}

}  // namespace pdmc
