#include "ktweb/report.hpp"

#include <json.hpp>

#include "ktweb/format.hpp"

namespace ktweb {

namespace {

using nlohmann::json;

KTParams parse_alpha(const json& arr, const char* field) {
  if (!arr.is_array() || arr.size() != 6) {
    throw ParseError(std::string(field) + " must be an array of 6 entries");
  }
  std::array<Rat, 6> exact;
  std::array<double, 6> reals{};
  bool all_exact = true;
  for (size_t i = 0; i < 6; ++i) {
    const json& v = arr[i];
    if (v.is_string()) {
      const auto r = parse_rational(v.get<std::string>());
      if (!r) throw ParseError("bad rational in " + std::string(field));
      exact[i] = *r;
      reals[i] = to_double(*r);
    } else if (v.is_number_integer()) {
      exact[i] = Rat(v.get<long long>());
      reals[i] = v.get<double>();
    } else if (v.is_number()) {
      all_exact = false;
      reals[i] = v.get<double>();
    } else {
      throw ParseError(std::string(field) + " entries must be numbers or \"p/q\" strings");
    }
  }
  try {
    return all_exact ? KTParams::from_rationals(exact) : KTParams::from_doubles(reals);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

Poly2 parse_potential(const json& arr) {
  if (!arr.is_array()) throw ParseError("potential must be an array of [i, j, coeff] terms");
  Poly2 V;
  for (const json& term : arr) {
    if (!term.is_array() || term.size() != 3) {
      throw ParseError("potential terms must be [i, j, coeff]");
    }
    if (!term[0].is_number_integer() || !term[1].is_number_integer()) {
      throw ParseError("potential exponents must be integers");
    }
    const int i = term[0].get<int>();
    const int j = term[1].get<int>();
    if (i < 0 || j < 0) throw ParseError("potential exponents must be non-negative");
    Rat c;
    if (term[2].is_string()) {
      const auto r = parse_rational(term[2].get<std::string>());
      if (!r) throw ParseError("bad rational coefficient in potential");
      c = *r;
    } else if (term[2].is_number_integer()) {
      c = Rat(term[2].get<long long>());
    } else if (term[2].is_number()) {
      c = rational_from_double(term[2].get<double>());
    } else {
      throw ParseError("potential coefficients must be numbers or \"p/q\" strings");
    }
    try {
      V.add_term(i, j, c);
    } catch (const DegreeOverflow& e) {
      throw ParseError(e.what());
    }
  }
  return V;
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", ch);
          out += buf;
        } else {
          out += ch;
        }
    }
  }
  out += "\"";
  return out;
}

std::string doubles_array(const std::vector<double>& v) {
  std::string out = "[";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += fmt_double(v[i]);
  }
  return out + "]";
}

std::string rationals_array(const std::vector<Rat>& v) {
  std::string out = "[";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += quote(format_rational(v[i]));
  }
  return out + "]";
}

std::string params_array(const KTParams& p) {
  return doubles_array({p.a.begin(), p.a.end()});
}

std::string poly_array(const Poly2& poly) {
  std::string out = "[";
  bool first = true;
  for (const auto& [key, c] : poly.terms()) {
    if (!first) out += ",";
    first = false;
    out += "[" + std::to_string(key.first) + "," + std::to_string(key.second) + "," +
           quote(format_rational(c)) + "]";
  }
  return out + "]";
}

const char* angle_name(AngleKind k) {
  switch (k) {
    case AngleKind::Generic: return "generic";
    case AngleKind::Zero: return "zero";
    case AngleKind::HalfPi: return "half_pi";
    case AngleKind::Pi: return "pi";
    case AngleKind::NegHalfPi: return "neg_half_pi";
  }
  return "?";
}

std::string leaf_fields(const LeafLabel& label) {
  std::string out = "\"stratum\":" + quote(to_string(label.stratum.stratum)) +
                    ",\"leaf\":" + doubles_array(label.invariants);
  if (label.exact) out += ",\"leaf_exact\":" + rationals_array(*label.exact);
  return out;
}

std::string frame_fields(const FrameResult& fr) {
  std::string out = "\"chart\":" + quote(to_string(fr.chart)) +
                    ",\"frame\":{\"theta\":" + fmt_double(fr.frame.theta) +
                    ",\"a\":" + fmt_double(fr.frame.a) + ",\"b\":" + fmt_double(fr.frame.b) + "}";
  out += ",\"angle\":" + quote(angle_name(fr.angle_kind));
  if (fr.translation_exact) {
    out += ",\"frame_exact\":{\"a\":" + quote(format_rational(fr.translation_exact->first)) +
           ",\"b\":" + quote(format_rational(fr.translation_exact->second)) + "}";
  }
  out += ",\"canonical\":" + params_array(fr.canonical);
  if (fr.canonical.exact) {
    out += ",\"canonical_exact\":" +
           rationals_array({fr.canonical.exact->begin(), fr.canonical.exact->end()});
  }
  return out;
}

}  // namespace

InputDoc parse_input(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("input document must be a JSON object");
  if (!j.contains("alpha")) throw ParseError("missing field: alpha");

  InputDoc doc;
  doc.alpha = parse_alpha(j["alpha"], "alpha");
  if (j.contains("alpha2")) doc.alpha2 = parse_alpha(j["alpha2"], "alpha2");
  if (j.contains("potential")) doc.potential = parse_potential(j["potential"]);
  if (j.contains("tol")) {
    if (!j["tol"].is_number()) throw ParseError("tol must be a number");
    doc.tol = j["tol"].get<double>();
    if (!(*doc.tol >= 0.0)) throw ParseError("tol must be non-negative");
  }
  return doc;
}

std::string classify_json(const KTParams& p) {
  const LeafLabel label = leaf_label(p);
  std::string out = "{\"stratum\":" + quote(to_string(label.stratum.stratum)) +
                    ",\"web\":" + quote(to_string(web_type(label.stratum.stratum))) +
                    ",\"deltas\":" +
                    doubles_array({label.stratum.deltas.d1, label.stratum.deltas.d2,
                                   label.stratum.deltas.d3}) +
                    ",\"leaf\":" + doubles_array(label.invariants);
  if (label.exact) out += ",\"leaf_exact\":" + rationals_array(*label.exact);
  out += ",\"margin\":" + fmt_double(label.stratum.margin);
  out += ",\"degenerate\":" + std::string(label.stratum.degenerate ? "true" : "false");
  return out + "}";
}

std::string equivalent_json(const KTParams& p, const KTParams& q, double tol) {
  const bool eq = equivalent(p, q, tol);
  return std::string("{\"equivalent\":") + (eq ? "true" : "false") + ",\"first\":{" +
         leaf_fields(leaf_label(p)) + "},\"second\":{" + leaf_fields(leaf_label(q)) +
         "},\"tol\":" + fmt_double(tol) + "}";
}

std::string frame_json(const KTParams& p) {
  const FrameResult fr = moving_frame(p);
  return "{\"stratum\":" + quote(to_string(fr.stratum.stratum)) +
         ",\"web\":" + quote(to_string(web_type(fr.stratum.stratum))) + "," + frame_fields(fr) +
         "}";
}

std::string canonical_json(const KTParams& p) {
  const KTParams c = canonical_form(p);
  std::string out = "{\"stratum\":" + quote(to_string(stratum(p).stratum)) +
                    ",\"canonical\":" + params_array(c);
  if (c.exact) {
    out += ",\"canonical_exact\":" + rationals_array({c.exact->begin(), c.exact->end()});
  }
  return out + "}";
}

std::string separate_json(const KTParams& p, const Poly2& V) {
  const SeparationReport rep = separate(p, V);
  std::string out = "{\"web\":" + quote(to_string(rep.web)) +
                    ",\"stratum\":" + quote(to_string(rep.frame.stratum.stratum)) + "," +
                    frame_fields(rep.frame) +
                    ",\"transformed_potential\":" + poly_array(rep.transformed_potential) +
                    ",\"transformed_approximate\":" +
                    (rep.transformed_approximate ? "true" : "false") +
                    ",\"first_integral_potential\":" + poly_array(rep.first_integral);
  return out + "}";
}

std::string render_summary_json(const WebPlot& plot, const std::string& path) {
  std::string pts = "[";
  for (size_t i = 0; i < plot.singular_points.size(); ++i) {
    if (i) pts += ",";
    pts += "[" + fmt_double(plot.singular_points[i].x1) + "," +
           fmt_double(plot.singular_points[i].x2) + "]";
  }
  pts += "]";
  return "{\"path\":" + quote(path) +
         ",\"families\":[" + std::to_string(plot.families[0].size()) + "," +
         std::to_string(plot.families[1].size()) + "],\"singular_points\":" + pts + "}";
}

std::string error_json(const std::string& type, const std::string& message) {
  return "{\"error\":{\"type\":" + quote(type) + ",\"message\":" + quote(message) + "}}";
}

}  // namespace ktweb
