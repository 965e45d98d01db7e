#include "orbit/problem.hpp"

#include <set>

namespace orbit {

using nlohmann::json;

namespace {

std::string index_path(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

std::string field_path(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

void reject_unknown(const json& obj, const std::set<std::string>& known,
                    const std::string& path) {
  for (const auto& item : obj.items()) {
    if (!known.count(item.key())) {
      throw SpecError(field_path(path, item.key()), "unknown field");
    }
  }
}

Rational parse_component(const json& value, const std::string& path) {
  if (value.is_string()) {
    try {
      return parse_rational(value.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw SpecError(path, e.what());
    }
  }
  if (value.is_number_integer()) {
    return value.is_number_unsigned() ? Rational(Integer(std::to_string(value.get<unsigned long>())))
                                      : Rational(value.get<long>());
  }
  if (value.is_number_float()) {
    throw SpecError(path, "floating-point literal in exact mode; write a rational string");
  }
  throw SpecError(path, "expected a rational string \"p/q\" or an integer");
}

double parse_float_component(const json& value, const std::string& path) {
  if (value.is_number()) return value.get<double>();
  return parse_component(value, path).get_d();
}

long parse_integer(const json& doc, const std::string& key, const std::string& path,
                   long fallback, long minimum) {
  if (!doc.contains(key)) return fallback;
  const json& value = doc.at(key);
  const std::string where = field_path(path, key);
  if (!value.is_number_integer()) throw SpecError(where, "expected an integer");
  long n = value.get<long>();
  if (n < minimum) throw SpecError(where, "must be >= " + std::to_string(minimum));
  return n;
}

Coords parse_coords(const json& value, ScalarMode mode, const std::string& path,
                    std::size_t length, bool allow_short) {
  if (!value.is_array()) throw SpecError(path, "expected a list of coordinates");
  if (value.size() > length || (!allow_short && value.size() != length)) {
    throw SpecError(path, "expected " + std::to_string(length) + " coordinates, got " +
                              std::to_string(value.size()));
  }
  Coords out;
  for (std::size_t q = 0; q < value.size(); ++q) {
    out.push_back(parse_scalar(value[q], mode, index_path(path, q)));
  }
  const Scalar zero = mode == ScalarMode::Exact ? Scalar(0) : Scalar(0).to_float();
  out.resize(length, zero);
  return out;
}

BlockVector parse_segments(const json& doc, const std::string& key, ScalarMode mode,
                           const std::vector<JordanBlock>& blocks) {
  BlockVector out;
  const Scalar zero = mode == ScalarMode::Exact ? Scalar(0) : Scalar(0).to_float();
  if (!doc.contains(key)) {
    for (const auto& block : blocks) out.push_back(Coords(block.size, zero));
    return out;
  }
  const json& list = doc.at(key);
  if (!list.is_array()) throw SpecError(key, "expected one coordinate list per block");
  if (list.size() != blocks.size()) {
    throw SpecError(key, "expected " + std::to_string(blocks.size()) +
                             " segments (one per block), got " + std::to_string(list.size()));
  }
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    out.push_back(parse_coords(list[b], mode, index_path(key, b), blocks[b].size, false));
  }
  return out;
}

PropertyPOperator parse_tail(const json& doc, ScalarMode mode, JordanSystem head) {
  const std::string path = "tail";
  if (!doc.is_object()) throw SpecError(path, "expected an object");
  reject_unknown(doc, {"r", "N", "kind", "truncation", "weights", "x", "c"}, path);

  TailOperator tail;
  if (doc.contains("r")) {
    const std::string where = field_path(path, "r");
    tail.r = parse_component(doc.at("r"), where);
    if (tail.r < 0 || tail.r >= 1) throw SpecError(where, "must lie in [0, 1)");
  }
  tail.n_start = parse_integer(doc, "N", path, 1, 1);
  tail.truncation = static_cast<std::size_t>(
      parse_integer(doc, "truncation", path, static_cast<long>(kDefaultTruncation), 1));
  if (doc.contains("kind")) {
    const json& kind = doc.at("kind");
    const std::string where = field_path(path, "kind");
    if (kind == "diagonal") {
      tail.kind = TailOperator::Kind::Diagonal;
    } else if (kind == "shift") {
      tail.kind = TailOperator::Kind::Shift;
    } else {
      throw SpecError(where, "expected \"diagonal\" or \"shift\"");
    }
  }
  if (doc.contains("weights")) {
    const json& weights = doc.at("weights");
    const std::string where = field_path(path, "weights");
    if (!weights.is_array() || weights.empty()) {
      throw SpecError(where, "expected a nonempty list of scalars");
    }
    tail.weights.clear();
    for (std::size_t i = 0; i < weights.size(); ++i) {
      tail.weights.push_back(parse_scalar(weights[i], mode, index_path(where, i)));
    }
  } else {
    tail.weights = {parse_scalar(json(to_string(tail.r)), mode, path)};
  }

  auto vector = [&](const char* key) {
    if (!doc.contains(key)) return parse_coords(json::array(), mode, path, tail.truncation, true);
    return parse_coords(doc.at(key), mode, field_path(path, key), tail.truncation, true);
  };
  PropertyPOperator op{std::move(head), tail, vector("x"), vector("c")};
  if (!tail.satisfies_contraction(tail.n_start + 64)) {
    throw SpecError(field_path(path, "weights"),
                    "weights violate |A^k v| <= r^k |v| for k >= N");
  }
  try {
    op.validate();
  } catch (const std::invalid_argument& e) {
    throw SpecError(path, e.what());
  }
  return op;
}

}  // namespace

Scalar parse_scalar(const json& value, ScalarMode mode, const std::string& path) {
  const bool exact = mode == ScalarMode::Exact;
  auto build = [&](const json& re, const json& im, const std::string& re_path,
                   const std::string& im_path) {
    if (exact) return Scalar(parse_component(re, re_path), parse_component(im, im_path));
    return Scalar::from_double(parse_float_component(re, re_path),
                               parse_float_component(im, im_path));
  };
  if (value.is_object()) {
    reject_unknown(value, {"re", "im"}, path);
    const json zero = 0;
    const json& re = value.contains("re") ? value.at("re") : zero;
    const json& im = value.contains("im") ? value.at("im") : zero;
    return build(re, im, field_path(path, "re"), field_path(path, "im"));
  }
  if (value.is_array()) {
    if (value.size() != 2) throw SpecError(path, "expected a pair [re, im]");
    return build(value[0], value[1], index_path(path, 0), index_path(path, 1));
  }
  return build(value, json(0), path, path);
}

ProblemSpec parse_problem(const json& doc) {
  if (!doc.is_object()) throw SpecError("", "problem spec must be a JSON object");
  reject_unknown(doc, {"scalar_mode", "blocks", "x", "c", "tail", "horizon"}, "");

  ProblemSpec spec;
  if (doc.contains("scalar_mode")) {
    const json& mode = doc.at("scalar_mode");
    if (mode == "exact") {
      spec.mode = ScalarMode::Exact;
    } else if (mode == "float") {
      spec.mode = ScalarMode::Float;
    } else {
      throw SpecError("scalar_mode", "expected \"exact\" or \"float\"");
    }
  }

  if (!doc.contains("blocks")) throw SpecError("blocks", "missing");
  const json& list = doc.at("blocks");
  if (!list.is_array()) throw SpecError("blocks", "expected a list of blocks");
  std::vector<JordanBlock> blocks;
  for (std::size_t b = 0; b < list.size(); ++b) {
    const std::string path = index_path("blocks", b);
    const json& entry = list[b];
    if (!entry.is_object()) throw SpecError(path, "expected {\"lambda\": ..., \"size\": n}");
    reject_unknown(entry, {"lambda", "size"}, path);
    if (!entry.contains("lambda")) throw SpecError(field_path(path, "lambda"), "missing");
    JordanBlock block;
    block.lambda = parse_scalar(entry.at("lambda"), spec.mode, field_path(path, "lambda"));
    block.size = static_cast<std::size_t>(parse_integer(entry, "size", path, 1, 1));
    blocks.push_back(block);
  }

  BlockVector x = parse_segments(doc, "x", spec.mode, blocks);
  BlockVector c = parse_segments(doc, "c", spec.mode, blocks);
  spec.system = JordanSystem(std::move(blocks), std::move(x), std::move(c));
  spec.horizon = parse_integer(doc, "horizon", "", kDefaultHorizon, 1);
  if (doc.contains("tail")) spec.property_p = parse_tail(doc.at("tail"), spec.mode, spec.system);
  return spec;
}

ProblemSpec parse_problem_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SpecError("", std::string("malformed JSON: ") + e.what());
  }
  return parse_problem(doc);
}

}  // namespace orbit
