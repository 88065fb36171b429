#include "hypmetrica/domain_json.hpp"

#include <cmath>

namespace hm {

using nlohmann::json;

static Point point_of(const json& j, const char* what) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw Error(ErrorCode::InvalidArgument, std::string(what) + " must be an [x,y] array");
  return {j[0].get<double>(), j[1].get<double>()};
}

static json point_json(Point p) { return json::array({p.x, p.y}); }

static std::vector<Point> points_of(const json& j, const char* what) {
  if (!j.is_array()) throw Error(ErrorCode::InvalidArgument, std::string(what) + " must be an array of points");
  std::vector<Point> v;
  for (auto& e : j) v.push_back(point_of(e, what));
  return v;
}

static double number_of(const json& j, const char* key, const char* what) {
  if (!j.contains(key) || !j[key].is_number())
    throw Error(ErrorCode::InvalidArgument, std::string(what) + " needs numeric \"" + key + "\"");
  return j[key].get<double>();
}

DomainSpec domain_spec_from_json(const json& j) {
  if (!j.is_object()) throw Error(ErrorCode::InvalidArgument, "domain spec must be a JSON object");
  if (!j.contains("base") || !j["base"].is_object())
    throw Error(ErrorCode::InvalidArgument, "domain spec needs a \"base\" object");
  DomainSpec s;
  const json& b = j["base"];
  std::string type = b.value("type", "");
  if (type == "disk") {
    s.base.kind = BaseKind::Disk;
    s.base.center = b.contains("center") ? point_of(b["center"], "disk center") : Point{};
    s.base.radius = number_of(b, "radius", "disk");
  } else if (type == "halfplane") {
    s.base.kind = BaseKind::HalfPlane;
    s.base.normal = b.contains("normal") ? point_of(b["normal"], "half-plane normal") : Point{0, 1};
    s.base.offset = b.value("offset", 0.0);
  } else if (type == "strip" || type == "halfstrip") {
    s.base.kind = type == "strip" ? BaseKind::Strip : BaseKind::HalfStrip;
    s.base.axis = b.contains("axis") ? point_of(b["axis"], "strip axis") : Point{1, 0};
    s.base.center = b.contains("center") ? point_of(b["center"], "strip center") : Point{};
    s.base.radius = number_of(b, "halfwidth", "strip");
  } else if (type == "polygon") {
    s.base.kind = BaseKind::Polygon;
    if (!b.contains("vertices")) throw Error(ErrorCode::InvalidArgument, "polygon needs \"vertices\"");
    s.base.vertices = points_of(b["vertices"], "polygon vertex");
  } else if (type == "plane") {
    s.base.kind = BaseKind::Plane;
  } else {
    throw Error(ErrorCode::InvalidArgument, "unknown base type \"" + type + "\"");
  }
  if (j.contains("holes")) {
    if (!j["holes"].is_array()) throw Error(ErrorCode::InvalidArgument, "\"holes\" must be an array");
    for (const json& h : j["holes"]) {
      HoleSpec hs;
      std::string ht = h.value("type", "");
      if (ht == "disk") {
        hs.kind = HoleKind::Disk;
        hs.center = h.contains("center") ? point_of(h["center"], "hole center") : Point{};
        hs.radius = number_of(h, "radius", "hole disk");
      } else if (ht == "polygon") {
        hs.kind = HoleKind::Polygon;
        if (!h.contains("vertices")) throw Error(ErrorCode::InvalidArgument, "hole polygon needs \"vertices\"");
        hs.vertices = points_of(h["vertices"], "hole vertex");
      } else if (ht == "puncture") {
        hs.kind = HoleKind::Puncture;
        if (!h.contains("point")) throw Error(ErrorCode::InvalidArgument, "puncture needs \"point\"");
        hs.center = point_of(h["point"], "puncture");
      } else if (ht == "segment") {
        hs.kind = HoleKind::Segment;
        if (!h.contains("a") || !h.contains("b")) throw Error(ErrorCode::InvalidArgument, "slit needs \"a\" and \"b\"");
        hs.a = point_of(h["a"], "slit a");
        hs.b = point_of(h["b"], "slit b");
      } else {
        throw Error(ErrorCode::InvalidArgument, "unknown hole type \"" + ht + "\"");
      }
      s.holes.push_back(hs);
    }
  }
  bool computed = !(s.base.kind == BaseKind::Disk || s.base.kind == BaseKind::Polygon);
  if (j.contains("unbounded")) {
    if (!j["unbounded"].is_boolean()) throw Error(ErrorCode::InvalidArgument, "\"unbounded\" must be boolean");
    if (j["unbounded"].get<bool>() != computed)
      throw Error(ErrorCode::InvalidArgument, "\"unbounded\" disagrees with the base type");
  }
  s.unbounded = computed;
  s.contains_infinity = j.value("contains_infinity", false);
  s.window = j.value("window", 64.0);
  s.name = j.value("name", "");
  return s;
}

json domain_spec_to_json(const DomainSpec& s) {
  json j;
  json b;
  switch (s.base.kind) {
    case BaseKind::Disk:
      b = {{"type", "disk"}, {"center", point_json(s.base.center)}, {"radius", s.base.radius}};
      break;
    case BaseKind::HalfPlane:
      b = {{"type", "halfplane"}, {"normal", point_json(s.base.normal)}, {"offset", s.base.offset}};
      break;
    case BaseKind::Strip:
    case BaseKind::HalfStrip:
      b = {{"type", s.base.kind == BaseKind::Strip ? "strip" : "halfstrip"},
           {"axis", point_json(s.base.axis)},
           {"center", point_json(s.base.center)},
           {"halfwidth", s.base.radius}};
      break;
    case BaseKind::Polygon: {
      json v = json::array();
      for (auto p : s.base.vertices) v.push_back(point_json(p));
      b = {{"type", "polygon"}, {"vertices", v}};
      break;
    }
    case BaseKind::Plane: b = {{"type", "plane"}}; break;
  }
  j["base"] = b;
  json holes = json::array();
  for (const auto& h : s.holes) {
    switch (h.kind) {
      case HoleKind::Disk:
        holes.push_back({{"type", "disk"}, {"center", point_json(h.center)}, {"radius", h.radius}});
        break;
      case HoleKind::Polygon: {
        json v = json::array();
        for (auto p : h.vertices) v.push_back(point_json(p));
        holes.push_back({{"type", "polygon"}, {"vertices", v}});
        break;
      }
      case HoleKind::Puncture: holes.push_back({{"type", "puncture"}, {"point", point_json(h.center)}}); break;
      case HoleKind::Segment:
        holes.push_back({{"type", "segment"}, {"a", point_json(h.a)}, {"b", point_json(h.b)}});
        break;
    }
  }
  j["holes"] = holes;
  j["unbounded"] = s.unbounded;
  if (s.contains_infinity) j["contains_infinity"] = true;
  j["window"] = s.window;
  if (!s.name.empty()) j["name"] = s.name;
  return j;
}

DomainSpec domain_spec_from_string(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidArgument, std::string("domain JSON does not parse: ") + e.what());
  }
  return domain_spec_from_json(j);
}

static json square(double x0, double y0, double x1, double y1) {
  return json::array({json::array({x0, y0}), json::array({x1, y0}), json::array({x1, y1}), json::array({x0, y1})});
}

DomainSpec named_domain(const std::string& name) {
  json j;
  if (name == "disk") {
    j = {{"base", {{"type", "disk"}, {"center", {0, 0}}, {"radius", 1}}}};
  } else if (name == "halfplane") {
    j = {{"base", {{"type", "halfplane"}, {"normal", {0, 1}}, {"offset", 0}}}};
  } else if (name == "strip") {
    j = {{"base", {{"type", "strip"}, {"axis", {1, 0}}, {"halfwidth", 1}}}};
  } else if (name == "square") {
    j = {{"base", {{"type", "polygon"}, {"vertices", square(-1, -1, 1, 1)}}}};
  } else if (name == "punctured_disk") {
    j = {{"base", {{"type", "disk"}, {"center", {0, 0}}, {"radius", 1}}},
         {"holes", json::array({{{"type", "puncture"}, {"point", {0, 0}}}})}};
  } else if (name == "punctured_plane") {
    j = {{"base", {{"type", "plane"}}}, {"holes", json::array({{{"type", "puncture"}, {"point", {0, 0}}}})}};
  } else if (name == "annulus") {
    j = {{"base", {{"type", "disk"}, {"center", {0, 0}}, {"radius", 4}}},
         {"holes", json::array({{{"type", "disk"}, {"center", {0, 0}}, {"radius", 1}}})}};
  } else if (name == "lollipop") {
    j = {{"base", {{"type", "disk"}, {"center", {0, 0}}, {"radius", 4}}},
         {"holes", json::array({{{"type", "polygon"}, {"vertices", square(-0.5, -0.5, 0.5, 0.5)}},
                                {{"type", "segment"}, {"a", {0.5, 0}}, {"b", {4, 0}}}})}};
  } else if (name == "slit_halfplane") {
    j = {{"base", {{"type", "halfplane"}, {"normal", {0, 1}}, {"offset", 0}}},
         {"holes", json::array({{{"type", "segment"}, {"a", {0, 0}}, {"b", {0, 1}}}})}};
  } else if (name == "square_exterior") {
    j = {{"base", {{"type", "plane"}}},
         {"holes", json::array({{{"type", "polygon"}, {"vertices", square(-0.5, -0.5, 0.5, 0.5)}}})}};
  } else if (name == "halfstrip") {
    j = {{"base", {{"type", "halfstrip"}, {"axis", {1, 0}}, {"center", {0, 0}}, {"halfwidth", 1}}}};
  } else if (name == "halfstrip_minus_rectangle") {
    double t = std::tan(3.14159265358979323846 / 36);
    double r = 2 * t / (1 + 2 * t);
    j = {{"base", {{"type", "halfstrip"}, {"axis", {1, 0}}, {"center", {0, 0}}, {"halfwidth", 1}}},
         {"holes", json::array({{{"type", "polygon"}, {"vertices", square(r, -(1 - r), 2 - r, 1 - r)}}})}};
  } else if (name == "square_minus_disk") {
    j = {{"base", {{"type", "polygon"}, {"vertices", square(-1, -1, 0, 0)}}},
         {"holes", json::array({{{"type", "disk"}, {"center", {0, 0}}, {"radius", 1}}})}};
  } else if (name == "disk_exterior") {
    j = {{"base", {{"type", "plane"}}},
         {"holes", json::array({{{"type", "disk"}, {"center", {0, 0}}, {"radius", 1}}})}};
  } else {
    throw Error(ErrorCode::InvalidArgument, "unknown named domain \"" + name + "\"");
  }
  j["name"] = name;
  return domain_spec_from_json(j);
}

}  // namespace hm
