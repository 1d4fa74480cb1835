#include "hrpairs/serialize.hpp"

#include <sstream>

namespace hrp {

using nlohmann::json;

std::string provenance_str(const Provenance& provenance) {
  if (provenance.kind == Provenance::Kind::family) {
    return "family(u=" + rat_str(*provenance.u) + ")";
  }
  return "search";
}

json pair_record(const Pair& pair) {
  const Triangle& t = pair.triangle();
  const Rhombus& r = pair.rhombus();
  json record;
  record["triangle"] = {rat_str(t.a()), rat_str(t.b()), rat_str(t.c())};
  record["rhombus_side"] = rat_str(r.side());
  record["angle_param"] = rat_str(r.angle_param());
  record["sin_theta"] = rat_str(r.sin_theta());
  record["cos_theta"] = rat_str(r.cos_theta());
  record["perimeter"] = rat_str(pair.perimeter());
  record["area"] = rat_str(pair.area());
  record["heron"] = pair.integral();
  if (pair.provenance().kind == Provenance::Kind::family) {
    record["provenance"] = {{"kind", "family"}, {"u", rat_str(*pair.provenance().u)}};
  } else {
    record["provenance"] = {{"kind", "search"}};
  }
  return record;
}

void add_decimal_annex(json& record, const Pair& pair) {
  // Non-authoritative convenience values; the exact fields stay canonical.
  record["approx"] = {{"perimeter", pair.perimeter().get_d()},
                      {"area", pair.area().get_d()},
                      {"sin_theta", pair.rhombus().sin_theta().get_d()}};
}

namespace {

Rat field_rat(const json& record, const char* key) {
  return parse_rat(record.at(key).get<std::string>());
}

Provenance provenance_from_record(const json& record) {
  if (!record.contains("provenance")) return Provenance::from_search();
  const json& p = record.at("provenance");
  if (p.at("kind").get<std::string>() == "family") {
    return Provenance::from_family(parse_rat(p.at("u").get<std::string>()));
  }
  return Provenance::from_search();
}

}  // namespace

Pair pair_from_record(const json& record) {
  const json& sides = record.at("triangle");
  Triangle triangle(parse_rat(sides.at(0).get<std::string>()),
                    parse_rat(sides.at(1).get<std::string>()),
                    parse_rat(sides.at(2).get<std::string>()));
  Rhombus rhombus(field_rat(record, "rhombus_side"), field_rat(record, "angle_param"));
  return Pair(std::move(triangle), std::move(rhombus), provenance_from_record(record));
}

std::optional<std::string> verify_record(const json& record) {
  const json& sides = record.at("triangle");
  const Rat a = parse_rat(sides.at(0).get<std::string>());
  const Rat b = parse_rat(sides.at(1).get<std::string>());
  const Rat c = parse_rat(sides.at(2).get<std::string>());
  const Rat p = field_rat(record, "rhombus_side");
  const Rat t = field_rat(record, "angle_param");
  const Rat sin = field_rat(record, "sin_theta");
  const Rat cos = field_rat(record, "cos_theta");
  const Rat perimeter = field_rat(record, "perimeter");
  const Rat area = field_rat(record, "area");

  if (a <= 0 || b <= 0 || c <= 0 || a + b <= c || b + c <= a || c + a <= b) {
    return "triangle validity";
  }
  if (p <= 0 || t < 1) return "rhombus validity";
  const Rat t2p1 = t * t + 1;
  if (sin != 2 * t / t2p1 || cos != (t * t - 1) / t2p1 || sin * sin + cos * cos != 1) {
    return "angle identity";
  }
  if (perimeter != a + b + c || perimeter != 4 * p) return "perimeter equality";
  Triangle triangle(a, b, c);
  const auto triangle_area = triangle.area();
  if (!triangle_area || *triangle_area != area || area != p * p * sin) {
    return "area equality";
  }
  if (record.value("heron", false)) {
    if (!triangle.heron() || !is_integer(p)) return "heron claim";
  }
  return std::nullopt;
}

namespace {

constexpr const char* kBaseColumns[] = {"perimeter", "area", "a", "b", "c", "rhombus_side",
                                        "angle_param", "sin_theta", "cos_theta", "heron",
                                        "provenance"};
constexpr const char* kWitnessColumns[] = {"u", "t1", "s1", "v", "lambda"};
constexpr const char* kDecimalColumns[] = {"perimeter_approx", "area_approx",
                                           "sin_theta_approx"};

std::string witness_field(const json& record, const char* key) {
  if (!record.contains("witness")) return {};
  const json& witness = record.at("witness");
  return witness.contains(key) ? witness.at(key).get<std::string>() : std::string{};
}

}  // namespace

std::string csv_header(bool decimal) {
  std::ostringstream out;
  bool first = true;
  for (const char* column : kBaseColumns) {
    out << (first ? "" : ",") << column;
    first = false;
  }
  for (const char* column : kWitnessColumns) out << ',' << column;
  if (decimal) {
    for (const char* column : kDecimalColumns) out << ',' << column;
  }
  return out.str();
}

std::string csv_row(const json& record, bool decimal) {
  const json& sides = record.at("triangle");
  std::ostringstream out;
  out << record.at("perimeter").get<std::string>() << ','
      << record.at("area").get<std::string>() << ',' << sides.at(0).get<std::string>() << ','
      << sides.at(1).get<std::string>() << ',' << sides.at(2).get<std::string>() << ','
      << record.at("rhombus_side").get<std::string>() << ','
      << record.at("angle_param").get<std::string>() << ','
      << record.at("sin_theta").get<std::string>() << ','
      << record.at("cos_theta").get<std::string>() << ','
      << (record.value("heron", false) ? "true" : "false") << ',';
  if (record.contains("provenance")) {
    const json& p = record.at("provenance");
    if (p.at("kind").get<std::string>() == "family") {
      out << "family(u=" << p.at("u").get<std::string>() << ")";
    } else {
      out << "search";
    }
  }
  for (const char* key : kWitnessColumns) out << ',' << witness_field(record, key);
  if (decimal && record.contains("approx")) {
    const json& approx = record.at("approx");
    out << ',' << approx.at("perimeter").get<double>() << ',' << approx.at("area").get<double>()
        << ',' << approx.at("sin_theta").get<double>();
  } else if (decimal) {
    out << ",,,";
  }
  return out.str();
}

}  // namespace hrp
