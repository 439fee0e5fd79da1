#include "dfisher/cli/params.hpp"

#include <boost/algorithm/string.hpp>

#include "dfisher/errors.hpp"

namespace dfisher::cli {

Backend parse_backend(const std::string& name) {
  const std::string lower = boost::algorithm::to_lower_copy(name);
  if (lower == "exact" || lower == "rational") return Backend::Exact;
  if (lower == "float" || lower == "bigfloat") return Backend::Float;
  throw UsageError("unknown backend '" + name + "' (expected exact or float)");
}

std::string to_string(Backend b) { return b == Backend::Exact ? "exact" : "float"; }

const std::vector<std::string>& family_parameter_names(FamilyTag tag) {
  static const std::vector<std::string> charlier{"mu"};
  static const std::vector<std::string> meixner{"gamma", "mu"};
  static const std::vector<std::string> kravchuk{"p", "N"};
  static const std::vector<std::string> hahn{"alpha", "beta", "N"};
  switch (tag) {
    case FamilyTag::Charlier: return charlier;
    case FamilyTag::Meixner: return meixner;
    case FamilyTag::Kravchuk: return kravchuk;
    case FamilyTag::Hahn: return hahn;
  }
  return charlier;
}

long require_integer(const Rational& value, const std::string& what) {
  if (boost::multiprecision::denominator(value) != 1) {
    throw DomainError(what + " must be an integer, got " + format_exact(value));
  }
  return boost::multiprecision::numerator(value).convert_to<long>();
}

FamilySpec make_family(FamilyTag tag, const ParamMap& params) {
  auto get = [&](const std::string& key) -> const Rational& {
    const auto it = params.find(key);
    if (it == params.end()) {
      throw UsageError(std::string(to_string(tag)) + " needs --" + key);
    }
    return it->second;
  };
  switch (tag) {
    case FamilyTag::Charlier: return FamilySpec::charlier(get("mu"));
    case FamilyTag::Meixner: return FamilySpec::meixner(get("gamma"), get("mu"));
    case FamilyTag::Kravchuk: return FamilySpec::kravchuk(get("p"), require_integer(get("N"), "N"));
    case FamilyTag::Hahn:
      return FamilySpec::hahn(get("alpha"), get("beta"), require_integer(get("N"), "N"));
  }
  throw UsageError("unknown family");
}

std::string params_string(FamilyTag tag, const ParamMap& params) {
  std::string out;
  for (const auto& key : family_parameter_names(tag)) {
    const auto it = params.find(key);
    if (!out.empty()) out += ';';
    out += key + "=" + (it == params.end() ? std::string("?") : format_exact(it->second));
  }
  return out;
}

std::string format_grid_value(const Rational& x) {
  const Integer den = boost::multiprecision::denominator(x);
  Integer scaled_den = 1;
  for (int digits = 0; digits <= 12; ++digits) {
    if (scaled_den % den == 0) {
      if (digits == 0) return format_exact(x);
      const Integer scaled = boost::multiprecision::numerator(x) * (scaled_den / den);
      Integer mag = abs(scaled);
      std::string body = mag.str();
      if (body.size() <= static_cast<std::size_t>(digits)) {
        body.insert(0, static_cast<std::size_t>(digits) - body.size() + 1, '0');
      }
      body.insert(body.size() - static_cast<std::size_t>(digits), ".");
      return (scaled < 0 ? "-" : "") + body;
    }
    scaled_den *= 10;
  }
  return format_exact(x);
}

std::vector<Rational> parse_point_list(const std::string& text) {
  std::vector<Rational> points;
  const std::string trimmed = boost::algorithm::trim_copy(text);
  if (trimmed.empty()) return points;
  if (const auto colon = trimmed.find(':'); colon != std::string::npos) {
    try {
      const long lo = std::stol(trimmed.substr(0, colon));
      const long hi = std::stol(trimmed.substr(colon + 1));
      if (hi < lo) throw UsageError("empty range '" + text + "'");
      for (long x = lo; x <= hi; ++x) points.emplace_back(x);
    } catch (const std::logic_error&) {
      throw UsageError("bad range '" + text + "' (expected a:b)");
    }
    return points;
  }
  std::vector<std::string> parts;
  boost::algorithm::split(parts, trimmed, boost::algorithm::is_any_of(","));
  for (auto& part : parts) {
    boost::algorithm::trim(part);
    if (part.empty()) continue;
    try {
      points.push_back(parse_rational(part));
    } catch (const std::invalid_argument&) {
      throw UsageError("bad number '" + part + "'");
    }
  }
  return points;
}

}  // namespace dfisher::cli
