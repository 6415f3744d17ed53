#include "braidforge/io.hpp"

#include <cstdlib>
#include <istream>
#include <numbers>
#include <regex>
#include <sstream>
#include <utility>
#include <vector>

#include "json.hpp"

#include "braidforge/error.hpp"

namespace braidforge {

namespace {

int parse_int_token(const std::string& token, const char* what) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(token, &used);
  } catch (const std::exception&) {
    throw InputError(std::string("invalid ") + what + " '" + token + "'");
  }
  if (used != token.size()) {
    throw InputError(std::string("invalid ") + what + " '" + token + "'");
  }
  return value;
}

bool blank(const std::string& line) {
  return line.find_first_not_of(" \t\r\n") == std::string::npos;
}

long long json_integer(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer()) {
    throw InputError(std::string("geometry JSON needs integer field '") + key + "'");
  }
  return j.at(key).get<long long>();
}

}  // namespace

BraidWord parse_braid_word(const std::string& text, int strand_count) {
  if (strand_count < 1) throw InputError("strand count must be at least 1");
  std::istringstream is(text);
  std::vector<BraidLetter> letters;
  std::string token;
  while (is >> token) {
    const int value = parse_int_token(token, "braid letter");
    if (value == 0) throw InputError("braid letter 0 is not a generator");
    int index = std::abs(value);
    if (index >= strand_count) {
      throw InputError("generator index " + std::to_string(index) +
                       " out of range for " + std::to_string(strand_count) + " strands");
    }
    letters.push_back({index, value > 0 ? 1 : -1});
  }
  return BraidWord(strand_count, std::move(letters));
}

std::string format_braid_word(const BraidWord& w) {
  std::ostringstream os;
  bool first = true;
  for (const BraidLetter& l : w.letters()) {
    if (!first) os << ' ';
    os << l.sign * l.index;
    first = false;
  }
  return os.str();
}

GroupPresentation parse_presentation(std::istream& in) {
  std::string line;
  int generator_count = 0;
  bool have_header = false;
  std::vector<std::vector<int>> relators;
  while (std::getline(in, line)) {
    if (blank(line)) continue;
    std::istringstream is(line);
    if (!have_header) {
      std::string token;
      is >> token;
      generator_count = parse_int_token(token, "generator count");
      std::string extra;
      if (is >> extra) throw InputError("presentation header must be a single integer");
      have_header = true;
      continue;
    }
    std::vector<int> relator;
    std::string token;
    while (is >> token) relator.push_back(parse_int_token(token, "relator letter"));
    relators.push_back(std::move(relator));
  }
  if (!have_header) throw InputError("presentation file is empty");
  return GroupPresentation(generator_count, std::move(relators));
}

std::string format_presentation(const GroupPresentation& p) {
  std::ostringstream os;
  os << p.generator_count() << '\n';
  for (const std::vector<int>& relator : p.relators()) {
    bool first = true;
    for (int letter : relator) {
      if (!first) os << ' ';
      os << letter;
      first = false;
    }
    os << '\n';
  }
  return os.str();
}

BraidSystem parse_braid_system(std::istream& in) {
  std::string line;
  int degree = 0;
  bool have_header = false;
  std::vector<BandGenerator> entries;
  while (std::getline(in, line)) {
    if (blank(line)) continue;
    if (!have_header) {
      std::istringstream is(line);
      std::string keyword;
      is >> keyword;
      if (keyword != "degree") throw InputError("braid-system file must start with 'degree m'");
      std::string token;
      if (!(is >> token)) throw InputError("braid-system file must start with 'degree m'");
      degree = parse_int_token(token, "degree");
      std::string extra;
      if (is >> extra) throw InputError("braid-system header must be 'degree m'");
      have_header = true;
      continue;
    }
    const std::size_t bar = line.find('|');
    if (bar == std::string::npos) {
      throw InputError("band generator line needs 'conjugator | index sign'");
    }
    const BraidWord conjugator = parse_braid_word(line.substr(0, bar), degree);
    std::istringstream rest(line.substr(bar + 1));
    std::string index_token;
    std::string sign_token;
    std::string extra;
    if (!(rest >> index_token >> sign_token) || rest >> extra) {
      throw InputError("band generator line needs 'conjugator | index sign'");
    }
    const int index = parse_int_token(index_token, "band index");
    const int sign = parse_int_token(sign_token, "band sign");
    entries.push_back(BandGenerator{conjugator, index, sign});
  }
  if (!have_header) throw InputError("braid-system file is empty");
  return BraidSystem(degree, std::move(entries));
}

std::string format_braid_system(const BraidSystem& bs) {
  std::ostringstream os;
  os << "degree " << bs.degree() << '\n';
  for (const BandGenerator& band : bs.entries()) {
    const std::string conjugator = format_braid_word(band.conjugator);
    if (!conjugator.empty()) os << conjugator << ' ';
    os << "| " << band.index << ' ' << band.sign << '\n';
  }
  return os.str();
}

OrbifoldGeometry parse_geometry_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("geometry JSON does not parse: ") + e.what());
  }
  if (!j.is_object()) throw InputError("geometry JSON must be an object");
  OrbifoldGeometry g;
  g.euler_M = json_integer(j, "euler_M");
  g.signature_M = json_integer(j, "signature_M");
  g.euler_Sigma = json_integer(j, "euler_Sigma");
  g.self_intersection = json_integer(j, "self_intersection");
  const long long nu = json_integer(j, "cone_order");
  if (nu < 2 || nu > 1000000) throw InputError("cone_order out of range");
  g.cone_order = static_cast<int>(nu);
  if (!j.contains("sigma_orientable") || !j.at("sigma_orientable").is_boolean()) {
    throw InputError("geometry JSON needs boolean field 'sigma_orientable'");
  }
  g.sigma_orientable = j.at("sigma_orientable").get<bool>();
  return g;
}

Eigen::MatrixXcd parse_matrix_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("matrix JSON does not parse: ") + e.what());
  }
  if (!j.is_array() || j.empty()) throw InputError("matrix JSON must be an array of rows");
  const std::size_t rows = j.size();
  Eigen::MatrixXcd m(rows, rows);
  for (std::size_t r = 0; r < rows; ++r) {
    const nlohmann::json& row = j.at(r);
    if (!row.is_array() || row.size() != rows) {
      throw InputError("matrix JSON must be square");
    }
    for (std::size_t c = 0; c < rows; ++c) {
      const nlohmann::json& pair = row.at(c);
      if (!pair.is_array() || pair.size() != 2 || !pair.at(0).is_number() ||
          !pair.at(1).is_number()) {
        throw InputError("matrix entries must be [re, im] pairs");
      }
      m(r, c) = std::complex<double>(pair.at(0).get<double>(), pair.at(1).get<double>());
    }
  }
  return m;
}

double parse_angle(const std::string& text) {
  static const std::regex grammar(
      R"(^\s*([+-])?\s*([0-9]+\.?[0-9]*|\.[0-9]+)?\s*(pi)?\s*(?:/\s*([+-]?(?:[0-9]+\.?[0-9]*|\.[0-9]+)))?\s*$)");
  std::smatch m;
  if (!std::regex_match(text, m, grammar) || (!m[2].matched && !m[3].matched)) {
    throw InputError("cannot parse angle '" + text + "' (expected forms like 2pi/5)");
  }
  double value = m[2].matched ? std::stod(m[2].str()) : 1.0;
  if (m[1].matched && m[1].str() == "-") value = -value;
  if (m[3].matched) value *= std::numbers::pi;
  if (m[4].matched) {
    const double denominator = std::stod(m[4].str());
    if (denominator == 0.0) throw InputError("angle denominator must be nonzero");
    value /= denominator;
  }
  return value;
}

std::string format_rational(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace braidforge
