#include "lcskit/report.hpp"

#include <json.hpp>

#include <iomanip>
#include <regex>
#include <sstream>
#include <stdexcept>

namespace lcs {

using json = nlohmann::ordered_json;

namespace {

json torsion_entry(const BigInt& t) {
  if (t.fits_int64()) return t.to_int64();
  return t.str();
}

BigInt read_torsion(const json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) return BigInt(j.get<std::string>());
  throw std::invalid_argument("torsion entry must be an integer");
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw std::invalid_argument(std::string("missing field: ") + key);
  return j.at(key);
}

}  // namespace

std::string render_json(const LcsReport& report, int indent) {
  json root;
  root["schema"] = 1;
  root["factors"] = json::array();
  for (const auto& f : report.factors) {
    json t = json::array();
    for (const auto& x : f.factor.torsion) t.push_back(torsion_entry(x));
    root["factors"].push_back({{"n", f.n}, {"torsion", t}, {"free_rank", f.factor.free_rank}});
  }
  root["diagnostics"] = json::array();
  for (const auto& d : report.diagnostics)
    root["diagnostics"].push_back({{"n", d.weight},
                                   {"generators", d.generators},
                                   {"r_basics", d.r_basics},
                                   {"kernel", d.kernel},
                                   {"max_word_length", d.max_word_length},
                                   {"collected_words", d.collected_words}});
  return root.dump(indent);
}

LcsReport parse_report_json(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("report json: ") + e.what());
  }
  if (field(root, "schema") != 1) throw std::invalid_argument("unsupported report schema");
  LcsReport r;
  try {
    for (const auto& f : field(root, "factors")) {
      FactorEntry e;
      e.n = field(f, "n").get<int>();
      for (const auto& t : field(f, "torsion")) e.factor.torsion.push_back(read_torsion(t));
      e.factor.free_rank = field(f, "free_rank").get<int>();
      r.factors.push_back(std::move(e));
    }
    if (root.contains("diagnostics"))
      for (const auto& d : root.at("diagnostics")) {
        StageDiagnostics s;
        s.weight = field(d, "n").get<int>();
        s.generators = field(d, "generators").get<std::size_t>();
        s.r_basics = field(d, "r_basics").get<std::size_t>();
        s.kernel = field(d, "kernel").get<std::size_t>();
        s.max_word_length = field(d, "max_word_length").get<std::int64_t>();
        s.collected_words = field(d, "collected_words").get<std::int64_t>();
        r.diagnostics.push_back(s);
      }
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("report json: ") + e.what());
  }
  return r;
}

std::string render_table(const LcsReport& report) {
  std::size_t width = 6;
  for (const auto& f : report.factors) width = std::max(width, to_string(f.factor).size());
  std::ostringstream os;
  os << std::left << std::setw(4) << "n" << std::setw(static_cast<int>(width) + 2) << "factor"
     << "generators  r_basics  kernel  max_word_length  collected_words\n";
  for (std::size_t i = 0; i < report.factors.size(); ++i) {
    const auto& f = report.factors[i];
    os << std::left << std::setw(4) << f.n << std::setw(static_cast<int>(width) + 2) << to_string(f.factor);
    if (i < report.diagnostics.size()) {
      const auto& d = report.diagnostics[i];
      os << std::setw(12) << d.generators << std::setw(10) << d.r_basics << std::setw(8) << d.kernel
         << std::setw(17) << d.max_word_length << d.collected_words;
    }
    os << '\n';
  }
  return os.str();
}

LcsReport parse_report_table(const std::string& text) {
  static const std::regex sep(R"(\s{2,})");
  LcsReport r;
  std::istringstream in(text);
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    if (header) {
      header = false;
      continue;
    }
    std::vector<std::string> cells(std::sregex_token_iterator(line.begin(), line.end(), sep, -1),
                                   std::sregex_token_iterator());
    while (!cells.empty() && cells.back().empty()) cells.pop_back();
    if (cells.size() < 2) throw std::invalid_argument("table row needs n and factor: " + line);
    FactorEntry e;
    e.n = std::stoi(cells[0]);
    e.factor = parse_abelian_invariants(cells[1]);
    r.factors.push_back(std::move(e));
    if (cells.size() == 7) {
      StageDiagnostics d;
      d.weight = r.factors.back().n;
      d.generators = std::stoull(cells[2]);
      d.r_basics = std::stoull(cells[3]);
      d.kernel = std::stoull(cells[4]);
      d.max_word_length = std::stoll(cells[5]);
      d.collected_words = std::stoll(cells[6]);
      r.diagnostics.push_back(d);
    }
  }
  return r;
}

std::string render_basics(std::span<const StageRecord> stages, const HallBasis& basis,
                          std::span<const std::string> names) {
  std::ostringstream os;
  for (const auto& s : stages) {
    os << "weight " << s.weight << "\n  basics:";
    for (int i : s.ambient_basis) os << ' ' << basis.render(i, names);
    os << "\n  r-basics:\n";
    for (const auto& y : s.y_full) {
      os << "    d=" << y.d << "  coords=(";
      for (Eigen::Index k = 0; k < y.coords.size(); ++k) os << (k ? "," : "") << y.coords[k];
      os << ")  ";
      if (y.element.length() <= 48)
        os << to_string(y.element, names) << '\n';
      else
        os << "<" << y.element.length() << " letters>\n";
    }
    os << "  kernel carried: " << s.y_kernel.size() << '\n';
  }
  return os.str();
}

}  // namespace lcs
