#pragma once

#include "perturbation.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace hpmodel {

struct ParseError : std::runtime_error {
  ParseError(const std::string& what, std::size_t pos)
      : std::runtime_error(what + " at position " + std::to_string(pos)), position(pos)
  {
  }
  std::size_t position;
};

namespace detail {

class ExpressionParser {
public:
  ExpressionParser(const std::string& src, const Presentation& p, std::vector<std::string>* warnings)
      : s_(src), p_(p), warnings_(warnings)
  {
  }

  AlgebraElement parse()
  {
    AlgebraElement r;
    skip();
    int sign = 1;
    if (peek('+') || peek('-')) sign = s_[pos_++] == '-' ? -1 : 1;
    r += term() * Integer(sign);
    skip();
    while (pos_ < s_.size()) {
      if (!peek('+') && !peek('-')) throw ParseError("expected '+' or '-'", pos_);
      sign = s_[pos_++] == '-' ? -1 : 1;
      r += term() * Integer(sign);
      skip();
    }
    return r;
  }

private:
  void skip()
  {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c)
  {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool peek_digit()
  {
    skip();
    return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
  }
  std::string digits()
  {
    std::size_t b = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (b == pos_) throw ParseError("expected digits", pos_);
    return s_.substr(b, pos_ - b);
  }

  AlgebraElement term()
  {
    skip();
    Integer coeff = 1;
    bool any = false;
    if (peek_digit()) {
      coeff = Integer(digits());
      any = true;
    }
    AlgebraElement acc(p_.unit(), coeff);
    for (;;) {
      std::size_t save = pos_;
      bool star = peek('*');
      if (star) ++pos_;
      if (!peek('x')) {
        if (star) throw ParseError("expected generator after '*'", pos_);
        pos_ = save;
        break;
      }
      std::size_t at = pos_;
      ++pos_;
      std::size_t index = 0;
      try {
        index = std::stoul(digits());
      } catch (const std::out_of_range&) {
        throw ParseError("generator index too large", at);
      }
      if (index == 0 || index > p_.size()) throw ParseError("unknown generator x" + std::to_string(index), at);
      std::uint64_t power = 1;
      if (peek('^')) {
        ++pos_;
        skip();
        std::size_t pat = pos_;
        power = std::stoull(digits());
        if (power == 0) throw ParseError("exponent must be positive", pat);
      }
      if (p_.exterior(index - 1) && power > 1) {
        warn("x" + std::to_string(index) + "^" + std::to_string(power) + " is zero (exterior generator)", at);
        acc = AlgebraElement();
      }
      AlgebraElement f(p_.generator(index, std::uint32_t(power)));
      bool was_nonzero = !acc.empty();
      acc = multiply(p_, acc, f);
      if (was_nonzero && acc.empty()) warn("product with x" + std::to_string(index) + " is zero (exterior square)", at);
      any = true;
    }
    if (!any) throw ParseError("expected a term", pos_);
    return acc;
  }

  void warn(const std::string& w, std::size_t at)
  {
    if (warnings_) warnings_->push_back(w + " at position " + std::to_string(at));
  }

  const std::string& s_;
  const Presentation& p_;
  std::vector<std::string>* warnings_;
  std::size_t pos_ = 0;
};

template <class Tag>
std::vector<std::pair<ExponentVector<Tag>, Integer>> display_order(const LinearCombination<ExponentVector<Tag>>& e,
                                                                  const std::vector<int>& weights)
{
  std::vector<std::pair<ExponentVector<Tag>, Integer>> terms(e.begin(), e.end());
  auto weight = [&](const ExponentVector<Tag>& m) {
    std::int64_t d = 0;
    for (std::size_t i = 0; i < m.size(); ++i) d += std::int64_t(m[i]) * weights[i];
    return d;
  };
  std::stable_sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) {
    auto da = weight(a.first), db = weight(b.first);
    if (da != db) return da < db;
    return a.first > b.first;
  });
  return terms;
}

template <class Tag>
std::string render_terms(const LinearCombination<ExponentVector<Tag>>& e, const std::vector<int>& weights, char letter)
{
  if (e.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : display_order(e, weights)) {
    Integer a = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    std::string mono;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (!m[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += letter + std::to_string(i + 1);
      if (m[i] > 1) mono += "^" + std::to_string(m[i]);
    }
    if (mono.empty()) out += a.str();
    else if (a == 1) out += mono;
    else out += a.str() + "*" + mono;
    first = false;
  }
  return out;
}

} // namespace detail

inline AlgebraElement parse_expression(const std::string& src, const Presentation& p,
                                       std::vector<std::string>* warnings = nullptr)
{
  return detail::ExpressionParser(src, p, warnings).parse();
}

inline std::string render(const Presentation& p, const AlgebraElement& a)
{
  return detail::render_terms(a, p.degrees(), 'x');
}

/// Xi^k is the divided power x̄_i^{(k)} on divided-power slots.
inline std::string render(const Presentation& p, const ModelElement& m)
{
  std::vector<int> w;
  for (int d : p.degrees()) w.push_back(d + 1);
  return detail::render_terms(m, w, 'X');
}

inline std::string render(const Presentation& p, const BarWord& w)
{
  std::string out = "[";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += "|";
    out += render(p, AlgebraElement(w[i]));
  }
  return out + "]";
}

inline std::string render(const Presentation& p, const BarElement& e)
{
  if (e.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : e) {
    if (!first) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    Integer a = abs(c);
    if (a != 1) out += a.str() + "*";
    out += render(p, w);
    first = false;
  }
  return out;
}

// ---------------------------------------------------------------------------
// documents

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// {"degrees":[...], "rho":{"x4":"x1-x2", ...}}; missing rho entries are 0.
inline Presentation presentation_from_json(const nlohmann::json& doc, std::vector<std::string>* warnings = nullptr)
{
  if (!doc.is_object() || !doc.contains("degrees") || !doc["degrees"].is_array())
    throw InputError("input must be an object with a \"degrees\" array");
  std::vector<int> degrees;
  for (const auto& d : doc["degrees"]) {
    if (!d.is_number_integer()) throw InputError("degrees must be integers");
    degrees.push_back(d.get<int>());
  }
  Presentation base(degrees);
  std::vector<AlgebraElement> rho(degrees.size());
  if (doc.contains("rho")) {
    const auto& r = doc["rho"];
    if (!r.is_object()) throw InputError("\"rho\" must be an object");
    for (const auto& [key, val] : r.items()) {
      std::size_t index = 0;
      if (key.size() < 2 || key[0] != 'x' || !std::all_of(key.begin() + 1, key.end(), ::isdigit))
        throw InputError("bad generator name \"" + key + "\"");
      index = std::stoul(key.substr(1));
      if (index == 0 || index > degrees.size()) throw InputError("unknown generator \"" + key + "\"");
      if (!val.is_string()) throw InputError("rho entry for " + key + " must be a string");
      try {
        rho[index - 1] = parse_expression(val.get<std::string>(), base, warnings);
      } catch (const ParseError& e) {
        throw InputError("rho(" + key + "): " + e.what());
      }
    }
  }
  return Presentation(degrees, std::move(rho));
}

inline Presentation load_presentation(const std::string& path, std::vector<std::string>* warnings = nullptr)
{
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
  return presentation_from_json(doc, warnings);
}

inline nlohmann::json presentation_to_json(const Presentation& p)
{
  nlohmann::json doc;
  doc["degrees"] = p.degrees();
  doc["rho"] = nlohmann::json::object();
  for (std::size_t i = 0; i < p.size(); ++i)
    if (!p.rho(i).empty()) doc["rho"]["x" + std::to_string(i + 1)] = render(p, p.rho(i));
  return doc;
}

enum class OutputFormat { Text, Json };

inline std::string render_model_text(const Presentation& p, const ModelResult& r)
{
  std::ostringstream os;
  os << "((";
  for (std::size_t i = 0; i < r.degrees.size(); ++i) os << (i ? "," : "") << r.degrees[i];
  os << "),(";
  for (std::size_t i = 0; i < r.differentials.size(); ++i) os << (i ? "," : "") << render(p, r.differentials[i]);
  os << "))";
  return os.str();
}

inline nlohmann::json telemetry_to_json(const SeriesTelemetry& t)
{
  nlohmann::json j;
  j["iterations"] = t.iterations;
  j["peak_terms"] = t.peak_terms;
  j["emitted_terms"] = t.emitted_terms;
  j["seconds"] = t.seconds;
  j["per_iteration"] = nlohmann::json::array();
  for (const auto& c : t.per_iteration)
    j["per_iteration"].push_back(
        {{"after_delta", c.after_delta}, {"after_prune", c.after_prune}, {"after_phi", c.after_phi}, {"emitted", c.emitted}});
  return j;
}

/// Telemetry lives under its own key so the rest is comparable across algorithms.
inline nlohmann::json model_to_json(const Presentation& p, const ModelResult& r, bool with_telemetry = true)
{
  nlohmann::json j;
  j["degrees"] = r.degrees;
  j["differentials"] = nlohmann::json::array();
  for (std::size_t i = 0; i < r.differentials.size(); ++i) {
    nlohmann::json g;
    g["generator"] = "X" + std::to_string(i + 1);
    g["text"] = render(p, r.differentials[i]);
    g["terms"] = nlohmann::json::array();
    for (const auto& [m, c] : r.differentials[i]) g["terms"].push_back({{"exponents", m.exponents()}, {"coefficient", c.str()}});
    j["differentials"].push_back(g);
  }
  if (with_telemetry) {
    j["telemetry"] = nlohmann::json::array();
    for (const auto& t : r.telemetry) j["telemetry"].push_back(telemetry_to_json(t));
  }
  return j;
}

inline std::string render_model(const Presentation& p, const ModelResult& r, OutputFormat f)
{
  if (f == OutputFormat::Text) return render_model_text(p, r);
  return model_to_json(p, r).dump(2);
}

// ---------------------------------------------------------------------------
// durations at 10^6 operations per second

struct Duration {
  std::string value; ///< truncated to the requested decimals
  std::string unit;
};

/// Picks sec./min/hours/days/years (365-day years) and truncates.
inline Duration format_duration(const Rational& seconds, unsigned decimals = 2)
{
  struct U {
    const char* name;
    long long size;
  };
  static const U units[] = {{"years", 365LL * 86400}, {"days", 86400}, {"hours", 3600}, {"min", 60}, {"sec", 1}};
  const U* pick = &units[4];
  for (const auto& u : units)
    if (seconds >= Rational(u.size)) {
      pick = &u;
      break;
    }
  Rational v = seconds / pick->size;
  Integer scale = 1;
  for (unsigned i = 0; i < decimals; ++i) scale *= 10;
  Rational scaled = v * scale;
  Integer t = numerator(scaled) / denominator(scaled);
  std::string digits = t.str();
  if (decimals > 0) {
    if (digits.size() <= decimals) digits.insert(0, decimals + 1 - digits.size(), '0');
    digits.insert(digits.size() - decimals, ".");
  }
  return {digits, pick->name};
}

} // namespace hpmodel
