#include "json_out.hpp"

#include "isodist/approx.hpp"

#include <sstream>

namespace isodist::cli {

Json to_json(const Rational& r) { return r.to_string(); }
Json to_json(const ExactReal& x) { return x.to_string(); }
Json to_json(const RadicalSum& x) { return x.to_string(); }

Json approx_json(const RadicalSum& x, int digits) {
  Json j;
  j["digits"] = digits;
  j["value"] = approx(x, digits);
  return j;
}

Json to_json(const apex::ApexWitness& w) {
  Json j;
  j["p"] = to_json(w.p);
  j["q"] = to_json(w.q);
  j["s"] = std::string(1, to_char(w.s));
  return j;
}

Json to_json(const apex::Decision& d) {
  Json j;
  if (const auto* s = std::get_if<apex::Suitable>(&d)) {
    j["verdict"] = "suitable";
    j["route"] = apex::to_string(s->route);
    j["witness"] = to_json(s->witness);
    j["realizes"] = to_json(s->witness.realize());
    return j;
  }
  const auto& n = std::get<apex::NotSuitable>(d);
  j["verdict"] = "not-suitable";
  j["reason"] = apex::to_string(n.reason);
  j["trinomial"] = {{"linear", to_json(n.trinomial.linear)}, {"constant", to_json(n.trinomial.constant)}};
  Json roots = Json::array();
  for (const Rational& r : n.roots) roots.push_back(to_json(r));
  j["roots"] = roots;
  return j;
}

Json to_json(const apex::ApexCertificate& c, const apex::ApexTriangle& t, int digits) {
  Json j;
  j["R"] = to_json(c.R);
  j["S"] = to_json(c.S);
  j["T"] = to_json(c.T);
  j["u"] = to_json(c.u);
  j["v"] = to_json(c.v);
  j["x"] = to_json(c.coord_x);
  j["y"] = to_json(c.coord_y);
  j["yApprox"] = approx_json(c.coord_y, digits);
  j["onLineAB"] = c.on_line_ab;
  j["verified"] = apex::check_certificate(t, c);
  return j;
}

Json to_json(const apex::Line& l) {
  Json j;
  j["vertical"] = l.vertical;
  j["slope"] = l.vertical ? Json(nullptr) : to_json(l.slope);
  j["equation"] = l.to_string();
  return j;
}

Json to_json(const apex::LocusReport& r) {
  Json j;
  Json cands = Json::array();
  for (const auto& l : r.candidates) cands.push_back(to_json(l));
  j["candidates"] = cands;
  j["pair"] = Json::array({to_json(r.pair[0]), to_json(r.pair[1])});
  j["productZero"] = r.product_zero;
  j["pairing"] = r.pairing_reconstructed ? "mirror images across the apex bisector"
                                         : "direct";
  return j;
}

Json to_json(const base::BaseWitness& w) {
  Json j;
  j["p"] = to_json(w.p);
  j["q"] = to_json(w.q);
  j["r"] = to_json(w.r);
  j["eps"] = std::string(1, to_char(w.eps));
  j["epsPrime"] = std::string(1, to_char(w.eps_prime));
  j["altitude"] = to_json(w.altitude());
  return j;
}

Json to_json(const base::Decision& d) {
  Json j;
  if (const auto* r = std::get_if<base::RationalRoute>(&d)) {
    j["verdict"] = "suitable";
    j["route"] = "rational";
    j["n"] = r->n;
    j["witness"] = to_json(r->witness);
  } else if (const auto* f = std::get_if<base::Found>(&d)) {
    j["verdict"] = "found";
    j["route"] = "search";
    j["witness"] = to_json(f->witness);
    j["witnessCount"] = f->count;
  } else if (const auto* u = std::get_if<base::UnknownUpTo>(&d)) {
    j["verdict"] = "unknown";
    j["height"] = u->height;
    j["note"] = "no witness up to this height; no general decision procedure is known for this family";
  } else {
    j["verdict"] = "not-suitable";
    j["reason"] = std::get<base::NotSuitable>(d).reason;
  }
  return j;
}

Json to_json(const base::BasePoint& m, const base::BaseTriangle& t, int digits) {
  Json j;
  j["x0"] = to_json(m.x0);
  j["e"] = to_json(m.e);
  j["y0"] = to_json(m.y0);
  j["y0Approx"] = approx_json(m.y0, digits);
  j["distA"] = to_json(m.dist_a);
  j["distB"] = to_json(m.dist_b);
  j["distC"] = to_json(m.dist_c);
  j["verified"] = base::check_point(t, m);
  return j;
}

Json to_json(const omega::Representation& r) {
  Json j;
  j["p"] = to_json(r.p);
  j["q"] = to_json(r.q);
  j["value"] = to_json(r.value);
  return j;
}

Json to_json(const oracle::Hit& h) {
  Json j;
  j["distances"] = Json::array({to_json(h.distances[0]), to_json(h.distances[1]), to_json(h.distances[2])});
  j["source"] = Json::array({to_json(h.source[0]), to_json(h.source[1])});
  return j;
}

Json to_json(const oracle::CrossCheck& c) {
  Json j;
  j["constructed"] = c.constructed;
  j["missing"] = c.missing;
  j["unverified"] = c.unverified;
  j["mismatches"] = c.missing + c.unverified;
  j["problems"] = c.problems;
  return j;
}

namespace {

std::string scalar(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void render(const Json& v, int indent, std::ostringstream& os) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (v.is_object()) {
    for (const auto& [key, val] : v.items()) {
      if (val.is_structured() && !val.empty()) {
        os << pad << key << ":\n";
        render(val, indent + 2, os);
      } else {
        os << pad << key << ": " << (val.is_structured() ? std::string("(none)") : scalar(val)) << "\n";
      }
    }
  } else if (v.is_array()) {
    std::size_t i = 0;
    for (const auto& val : v) {
      if (val.is_structured()) {
        os << pad << "[" << i << "]\n";
        render(val, indent + 2, os);
      } else {
        os << pad << "- " << scalar(val) << "\n";
      }
      ++i;
    }
  } else {
    os << pad << scalar(v) << "\n";
  }
}

}  // namespace

std::string render_text(const Json& doc) {
  std::ostringstream os;
  render(doc, 0, os);
  return os.str();
}

}  // namespace isodist::cli
