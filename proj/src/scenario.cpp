#include "ldc/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace ldc {

namespace {

[[noreturn]] void parse_fail(const std::string& name, int line_no, const std::string& what) {
  throw std::runtime_error("scenario " + name + " line " + std::to_string(line_no) + ": " + what);
}

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

// Numeric literal, optionally a multiple of pi ("pi", "-pi", "0.5pi").
double parse_value(const std::string& token) {
  std::string t = trim(token);
  double scale = 1.0;
  if (t.size() >= 2 && t.substr(t.size() - 2) == "pi") {
    scale = std::numbers::pi;
    t = t.substr(0, t.size() - 2);
    if (t.empty()) return scale;
    if (t == "-") return -scale;
  }
  std::size_t used = 0;
  const double v = std::stod(t, &used);
  if (used != t.size()) throw std::invalid_argument("bad numeric value: " + token);
  return v * scale;
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string token;
  while (in >> token) out.push_back(token);
  return out;
}

struct RawEntry {
  std::string section;
  std::string key;    // empty for bare lines ([post]/[outputs] entries)
  std::string value;
  int line_no;
};

std::vector<RawEntry> tokenize(const std::string& text, const std::string& name) {
  std::vector<RawEntry> entries;
  std::istringstream in(text);
  std::string line, section;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto comment = line.find('#');
    if (comment != std::string::npos) line = line.substr(0, comment);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') parse_fail(name, line_no, "unterminated section header");
      section = line.substr(1, line.size() - 2);
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      entries.push_back({section, "", line, line_no});
    } else {
      entries.push_back({section, trim(line.substr(0, eq)), trim(line.substr(eq + 1)), line_no});
    }
  }
  return entries;
}

std::variant<FlowModel, MapModel> make_model(const std::string& kind) {
  if (kind == "pendulum") return FlowModel::pendulum();
  if (kind == "modulated-pendulum") return FlowModel::modulated_pendulum(0.0);
  if (kind == "chirikov-overlap") return FlowModel::chirikov_overlap(0.0, 0.0);
  if (kind == "fgl") return FlowModel::fgl(0.0);
  if (kind == "henon-heiles") return FlowModel::henon_heiles();
  if (kind == "standard-map") return MapModel::standard_map(0.0);
  if (kind == "froeschle-4d") return MapModel::froeschle_4d(0.0);
  if (kind == "generalized-froeschle") return MapModel::generalized_froeschle(0.0, 0.0, 0.0, 0.0);
  throw std::invalid_argument("unknown model kind: " + kind);
}

int resolve_coord(const Scenario& sc, const std::string& coord_name) {
  if (coord_name == "E") return kEnergyAxis;
  const auto names = sc.is_flow() ? coordinate_names(sc.flow()) : coordinate_names(sc.map());
  const auto it = std::find(names.begin(), names.end(), coord_name);
  if (it == names.end()) throw std::invalid_argument("unknown coordinate: " + coord_name);
  return static_cast<int>(it - names.begin());
}

SectionAxis parse_axis(const Scenario& sc, const std::string& value) {
  const auto parts = split_ws(value);
  if (parts.size() != 3) throw std::invalid_argument("axis needs: <coord> <lo> <hi>");
  SectionAxis axis;
  axis.name = parts[0];
  axis.coord = resolve_coord(sc, parts[0]);
  axis.lo = parse_value(parts[1]);
  axis.hi = parse_value(parts[2]);
  return axis;
}

}  // namespace

std::string PostStep::describe() const {
  switch (kind) {
    case Kind::SecondDiff: return "second-diff";
    case Kind::GradientNorm: return "gradient-norm";
    case Kind::Log10: {
      std::ostringstream out;
      out << "log10(" << floor_value << ")";
      return out.str();
    }
  }
  return "?";
}

std::string Scenario::model_kind_name() const {
  if (is_flow()) {
    switch (flow().kind) {
      case FlowKind::Pendulum: return "pendulum";
      case FlowKind::ModulatedPendulum: return "modulated-pendulum";
      case FlowKind::ChirikovOverlap: return "chirikov-overlap";
      case FlowKind::Fgl: return "fgl";
      case FlowKind::HenonHeiles: return "henon-heiles";
    }
  } else {
    switch (map().kind) {
      case MapKind::StandardMap: return "standard-map";
      case MapKind::Froeschle4d: return "froeschle-4d";
      case MapKind::GeneralizedFroeschle: return "generalized-froeschle";
    }
  }
  return "?";
}

std::string Scenario::window_description() const {
  std::ostringstream out;
  if (is_flow())
    out << "t=" << ld.final_time << " step=" << ld.integrator.step;
  else
    out << "n=" << ld.iterates;
  return out.str();
}

std::string Scenario::section_description() const {
  std::ostringstream out;
  out << section.axis1.name << " in [" << section.axis1.lo << ", " << section.axis1.hi << "]";
  if (section.line_mode) {
    out << " (line)";
  } else {
    out << " x " << section.axis2.name << " in [" << section.axis2.lo << ", " << section.axis2.hi
        << "]";
  }
  out << " N=" << section.resolution;
  return out.str();
}

const ProbeBox* Scenario::probe(const std::string& probe_name) const {
  for (const auto& p : probes)
    if (p.name == probe_name) return &p;
  return nullptr;
}

Scenario parse_scenario(const std::string& text, const std::string& fallback_name) {
  const auto entries = tokenize(text, fallback_name);

  Scenario sc;
  sc.name = fallback_name;

  // The model must exist before section axes can be resolved.
  for (const auto& e : entries) {
    if (e.section == "model" && e.key == "kind") {
      try {
        sc.model = make_model(e.value);
      } catch (const std::invalid_argument& err) {
        parse_fail(sc.name, e.line_no, err.what());
      }
    }
  }

  bool saw_model = false, saw_axis1 = false;
  for (const auto& e : entries) {
    try {
      if (e.section.empty()) {
        if (e.key == "name") sc.name = e.value;
        else if (e.key == "title") sc.title = e.value;
        else parse_fail(sc.name, e.line_no, "unknown top-level key: " + e.key);
      } else if (e.section == "model") {
        if (e.key == "kind") { saw_model = true; continue; }
        if (!saw_model) parse_fail(sc.name, e.line_no, "model kind must come first");
        if (sc.is_flow())
          set_param(std::get<FlowModel>(sc.model), e.key, parse_value(e.value));
        else
          set_param(std::get<MapModel>(sc.model), e.key, parse_value(e.value));
      } else if (e.section == "section") {
        if (e.key == "axis1") { sc.section.axis1 = parse_axis(sc, e.value); saw_axis1 = true; }
        else if (e.key == "axis2") sc.section.axis2 = parse_axis(sc, e.value);
        else if (e.key == "resolution") sc.section.resolution = std::stoi(e.value);
        else if (e.key == "line") sc.section.line_mode = (e.value == "true" || e.value == "1");
        else if (e.key == "lift") {
          const auto parts = split_ws(e.value);
          if (parts.size() != 2 || parts[0] != "iso-energetic")
            parse_fail(sc.name, e.line_no, "lift needs: iso-energetic <energy>");
          sc.section.lift = IsoEnergeticLift{parse_value(parts[1])};
        } else if (e.key == "fixed") {
          for (const auto& assign : split_ws(e.value)) {
            const auto eq = assign.find('=');
            if (eq == std::string::npos) parse_fail(sc.name, e.line_no, "fixed needs name=value");
            const int coord = resolve_coord(sc, assign.substr(0, eq));
            if (coord == kEnergyAxis) parse_fail(sc.name, e.line_no, "cannot fix the energy axis");
            const int dim = sc.is_flow() ? sc.flow().dim() : sc.map().dim();
            if (sc.section.fixed.empty()) sc.section.fixed.assign(dim, 0.0);
            sc.section.fixed[coord] = parse_value(assign.substr(eq + 1));
          }
        } else {
          parse_fail(sc.name, e.line_no, "unknown section key: " + e.key);
        }
      } else if (e.section == "ld") {
        if (e.key == "observable") {
          if (e.value == "arc-length") sc.ld.observable = Observable::ArcLength;
          else if (e.value == "p-norm") sc.ld.observable = Observable::PNorm;
          else if (e.value == "action-2t") sc.ld.observable = Observable::Action2T;
          else parse_fail(sc.name, e.line_no, "unknown observable: " + e.value);
        } else if (e.key == "direction") {
          if (e.value == "forward") sc.ld.direction = Direction::Forward;
          else if (e.value == "backward") sc.ld.direction = Direction::Backward;
          else if (e.value == "both") sc.ld.direction = Direction::Both;
          else parse_fail(sc.name, e.line_no, "unknown direction: " + e.value);
        } else if (e.key == "p") sc.ld.p = parse_value(e.value);
        else if (e.key == "final-time") sc.ld.final_time = parse_value(e.value);
        else if (e.key == "iterates") sc.ld.iterates = std::stoll(e.value);
        else if (e.key == "step") sc.ld.integrator.step = parse_value(e.value);
        else parse_fail(sc.name, e.line_no, "unknown ld key: " + e.key);
      } else if (e.section == "post") {
        const auto parts = split_ws(e.key.empty() ? e.value : e.key + " " + e.value);
        PostStep step;
        if (parts[0] == "second-diff") step.kind = PostStep::Kind::SecondDiff;
        else if (parts[0] == "gradient-norm") step.kind = PostStep::Kind::GradientNorm;
        else if (parts[0] == "log10") {
          step.kind = PostStep::Kind::Log10;
          if (parts.size() > 1) step.floor_value = parse_value(parts[1]);
        } else {
          parse_fail(sc.name, e.line_no, "unknown post step: " + parts[0]);
        }
        sc.post.push_back(step);
      } else if (e.section == "outputs") {
        const std::string& which = e.key.empty() ? e.value : e.key;
        if (which == "csv") sc.out_csv = true;
        else if (which == "pgm") sc.out_pgm = true;
        else if (which == "meta") sc.out_meta = true;
        else parse_fail(sc.name, e.line_no, "unknown output kind: " + which);
      } else if (e.section == "probes") {
        const auto parts = split_ws(e.value);
        if (parts.size() != 4) parse_fail(sc.name, e.line_no, "probe needs: lo1 hi1 lo2 hi2");
        ProbeBox box;
        box.name = e.key;
        box.lo1 = parse_value(parts[0]);
        box.hi1 = parse_value(parts[1]);
        box.lo2 = parse_value(parts[2]);
        box.hi2 = parse_value(parts[3]);
        sc.probes.push_back(box);
      } else {
        parse_fail(sc.name, e.line_no, "unknown section: " + e.section);
      }
    } catch (const std::invalid_argument& err) {
      parse_fail(sc.name, e.line_no, err.what());
    } catch (const std::out_of_range& err) {
      parse_fail(sc.name, e.line_no, err.what());
    }
  }

  if (!saw_model) throw std::runtime_error("scenario " + sc.name + ": missing model kind");
  if (!saw_axis1) throw std::runtime_error("scenario " + sc.name + ": missing section axis1");
  const int dim = sc.is_flow() ? sc.flow().dim() : sc.map().dim();
  if (sc.section.fixed.empty()) sc.section.fixed.assign(dim, 0.0);
  return sc;
}

void apply_override(Scenario& sc, const std::string& key, const std::string& value) {
  auto set_model_param = [&](const std::string& param) {
    if (sc.is_flow())
      set_param(std::get<FlowModel>(sc.model), param, parse_value(value));
    else
      set_param(std::get<MapModel>(sc.model), param, parse_value(value));
  };

  if (key == "resolution" || key == "section.resolution") {
    sc.section.resolution = std::stoi(value);
  } else if (key == "final_time" || key == "final-time" || key == "ld.final-time") {
    sc.ld.final_time = parse_value(value);
  } else if (key == "iterates" || key == "ld.iterates") {
    sc.ld.iterates = std::stoll(value);
  } else if (key == "step" || key == "ld.step") {
    sc.ld.integrator.step = parse_value(value);
  } else if (key == "p" || key == "ld.p") {
    sc.ld.p = parse_value(value);
  } else if (key == "energy" || key == "section.energy") {
    if (!sc.section.lift) throw std::invalid_argument("scenario has no iso-energetic lift");
    sc.section.lift->energy = parse_value(value);
  } else if (key == "floor" || key == "post.floor") {
    bool found = false;
    for (auto& step : sc.post) {
      if (step.kind == PostStep::Kind::Log10) {
        step.floor_value = parse_value(value);
        found = true;
      }
    }
    if (!found) throw std::invalid_argument("scenario has no log10 post step");
  } else if (key == "axis1.lo") {
    sc.section.axis1.lo = parse_value(value);
  } else if (key == "axis1.hi") {
    sc.section.axis1.hi = parse_value(value);
  } else if (key == "axis2.lo") {
    sc.section.axis2.lo = parse_value(value);
  } else if (key == "axis2.hi") {
    sc.section.axis2.hi = parse_value(value);
  } else if (key.rfind("model.", 0) == 0) {
    set_model_param(key.substr(6));
  } else {
    set_model_param(key);  // bare model parameter name
  }
}

}  // namespace ldc
