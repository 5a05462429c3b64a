#include "qel/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

namespace qel {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorKind::Parse, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) parse_error(std::string("missing field '") + key + "'");
  return j.at(key);
}

Index as_index(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 1)
    parse_error(std::string(what) + " must be a positive integer");
  return static_cast<Index>(j.get<long long>());
}

double as_double(const Json& j, const char* what) {
  if (!j.is_number()) parse_error(std::string(what) + " must be a number");
  return j.get<double>();
}

Dims dims_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) parse_error("dims must be a non-empty array");
  Dims d;
  for (const auto& x : j) d.push_back(as_index(x, "dims entry"));
  return d;
}

Json number(double x) {
  if (std::isfinite(x)) return x;
  return format_double(x);
}

}  // namespace

Json matrix_to_json(const Mat& m) {
  Json re = Json::array();
  Json im = Json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    Json rr = Json::array();
    Json ir = Json::array();
    for (Index c = 0; c < m.cols(); ++c) {
      rr.push_back(m(r, c).real());
      ir.push_back(m(r, c).imag());
    }
    re.push_back(std::move(rr));
    im.push_back(std::move(ir));
  }
  return Json{{"re", std::move(re)}, {"im", std::move(im)}};
}

Mat matrix_from_json(const Json& j) {
  const Json& re = field(j, "re");
  const Json& im = field(j, "im");
  if (!re.is_array() || !im.is_array() || re.empty() || re.size() != im.size())
    parse_error("re/im must be non-empty arrays of equal length");
  const auto rows = static_cast<Index>(re.size());
  if (!re[0].is_array() || re[0].empty()) parse_error("matrix rows must be non-empty arrays");
  const auto cols = static_cast<Index>(re[0].size());
  Mat m(rows, cols);
  for (Index r = 0; r < rows; ++r) {
    const Json& rr = re[static_cast<std::size_t>(r)];
    const Json& ir = im[static_cast<std::size_t>(r)];
    if (!rr.is_array() || !ir.is_array() || static_cast<Index>(rr.size()) != cols ||
        static_cast<Index>(ir.size()) != cols)
      parse_error("ragged matrix");
    for (Index c = 0; c < cols; ++c)
      m(r, c) = {as_double(rr[static_cast<std::size_t>(c)], "re entry"),
                 as_double(ir[static_cast<std::size_t>(c)], "im entry")};
  }
  return m;
}

Json state_to_json(const MultipartiteState& rho) {
  Json j{{"dims", rho.dims()}};
  const Json m = matrix_to_json(rho.mat());
  j["re"] = m["re"];
  j["im"] = m["im"];
  return j;
}

MultipartiteState state_from_json(const Json& j) {
  Dims dims = dims_from_json(field(j, "dims"));
  return MultipartiteState(DensityMatrix(matrix_from_json(j)), std::move(dims));
}

Json channel_to_json(const KrausChannel& phi) {
  Json kraus = Json::array();
  for (const auto& k : phi.kraus()) kraus.push_back(matrix_to_json(k));
  return Json{{"d_in", phi.d_in()}, {"d_out", phi.d_out()}, {"kraus", std::move(kraus)}};
}

KrausChannel channel_from_json(const Json& j) {
  const Index d_in = as_index(field(j, "d_in"), "d_in");
  const Index d_out = as_index(field(j, "d_out"), "d_out");
  const Json& list = field(j, "kraus");
  if (!list.is_array() || list.empty()) parse_error("kraus must be a non-empty array");
  std::vector<Mat> kraus;
  for (const auto& k : list) {
    Mat m = matrix_from_json(k);
    if (m.rows() != d_out || m.cols() != d_in) parse_error("Kraus operator shape disagrees with d_in/d_out");
    kraus.push_back(std::move(m));
  }
  return KrausChannel(std::move(kraus));
}

Json markov_spec_to_json(const MarkovSpec& spec) {
  Json blocks = Json::array();
  for (const auto& b : spec.blocks)
    blocks.push_back(Json{{"p", b.p},
                          {"d_bL", b.d_bl},
                          {"d_bR", b.d_br},
                          {"rho_AbL", matrix_to_json(b.rho_abl)},
                          {"rho_bRC", matrix_to_json(b.rho_brc)}});
  return Json{{"d_A", spec.d_a}, {"d_C", spec.d_c}, {"blocks", std::move(blocks)}};
}

MarkovSpec markov_spec_from_json(const Json& j) {
  MarkovSpec spec;
  spec.d_a = as_index(field(j, "d_A"), "d_A");
  spec.d_c = as_index(field(j, "d_C"), "d_C");
  const Json& blocks = field(j, "blocks");
  if (!blocks.is_array() || blocks.empty()) parse_error("blocks must be a non-empty array");
  for (const auto& b : blocks) {
    MarkovBlock block;
    block.p = as_double(field(b, "p"), "p");
    block.d_bl = as_index(field(b, "d_bL"), "d_bL");
    block.d_br = as_index(field(b, "d_bR"), "d_bR");
    block.rho_abl = matrix_from_json(field(b, "rho_AbL"));
    block.rho_brc = matrix_from_json(field(b, "rho_bRC"));
    spec.blocks.push_back(std::move(block));
  }
  return validated(std::move(spec));
}

Json entropy_to_json(const EntropyValue& v) {
  if (v.infinite) return Json{{"infinite", true}};
  return v.value;
}

Json result_to_json(const CheckResult& r) {
  Json q = Json::object();
  for (const auto& [k, v] : r.quantities) q[k] = number(v);
  return Json{{"checker", r.name},
              {"dims", r.meta.dims},
              {"seed", r.meta.seed},
              {"trial", r.meta.trial},
              {"quantities", std::move(q)},
              {"slack", number(r.slack)},
              {"tolerance", r.tolerance},
              {"pass", r.pass}};
}

std::string dims_label(const Dims& dims) {
  std::string s;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (i) s += 'x';
    s += std::to_string(dims[i]);
  }
  return s;
}

Dims parse_dims(const std::string& text) {
  Dims out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    long long v = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc() || ptr != item.data() + item.size() || v < 1)
      parse_error("bad dimension '" + item + "' in '" + text + "'");
    out.push_back(static_cast<Index>(v));
  }
  if (out.empty()) parse_error("empty dimension list");
  return out;
}

std::vector<double> parse_doubles(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    double v = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc() || ptr != item.data() + item.size() || !std::isfinite(v))
      parse_error("bad number '" + item + "' in '" + text + "'");
    out.push_back(v);
  }
  if (out.empty()) parse_error("empty number list");
  return out;
}

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

void write_csv(std::ostream& out, const std::vector<CheckResult>& results) {
  std::vector<std::string> names;
  std::map<std::string, std::size_t> column;
  for (const auto& r : results)
    for (const auto& [k, v] : r.quantities)
      if (column.emplace(k, names.size()).second) names.push_back(k);

  const auto quoted = [](const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
  };

  out << "checker,dims,seed,trial";
  for (const auto& n : names) out << ',' << quoted("quantity:" + n);
  out << ",slack,pass\n";
  for (const auto& r : results) {
    std::vector<std::string> cells(names.size());
    for (const auto& [k, v] : r.quantities) cells[column.at(k)] = format_double(v);
    out << quoted(r.name) << ',' << dims_label(r.meta.dims) << ',' << r.meta.seed << ','
        << r.meta.trial;
    for (const auto& c : cells) out << ',' << c;
    out << ',' << format_double(r.slack) << ',' << (r.pass ? "true" : "false") << '\n';
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) parse_error("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    parse_error("'" + path + "': " + e.what());
  }
}

}  // namespace qel
