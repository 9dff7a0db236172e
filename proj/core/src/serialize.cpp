#include "effdiag/serialize.hpp"

#include <json.hpp>

#include "effdiag/error.hpp"
#include "effdiag/lambda.hpp"

namespace effdiag {

namespace {

using Json = nlohmann::ordered_json;

Json carrierJson(const Carrier& c) {
  if (c.isIndex()) return Json(c.index());
  return Json(print(*c.term()));
}

Carrier carrierFrom(const Json& j) {
  if (j.is_number_integer()) return Carrier::index(j.get<std::int64_t>());
  if (j.is_string()) return Carrier::term(parse(j.get<std::string>()));
  throw ParseError("carrier must be an integer or a term string", 0, 1, 1);
}

std::string storeBits(Store s, std::size_t width) {
  std::string out;
  for (std::size_t k = 0; k < width; ++k) out += ((s >> k) & 1U) ? '1' : '0';
  return out;
}

Store storeFrom(const std::string& bits, std::size_t width) {
  if (bits.size() != width) throw InvalidValue("store '" + bits + "' has the wrong width");
  Store s = 0;
  for (std::size_t k = 0; k < width; ++k) {
    if (bits[k] == '1') {
      s |= Store{1} << k;
    } else if (bits[k] != '0') {
      throw InvalidValue("store '" + bits + "' is not a bit string");
    }
  }
  return s;
}

Json valueJson(const MonadValue& mu) {
  Json j;
  j["kind"] = std::string(tagName(mu.tag()));
  const MonadKind& kind = *mu.kind();
  switch (mu.tag()) {
    case MonadTag::Maybe: {
      const auto& v = mu.as<MaybeData>().value;
      if (v) {
        j["value"] = carrierJson(*v);
      } else {
        j["diverge"] = true;
      }
      break;
    }
    case MonadTag::Exception: {
      j["exceptions"] = kind.exceptions();
      const auto& r = mu.as<ExceptionData>().result;
      if (const auto* x = std::get_if<Carrier>(&r)) {
        j["value"] = carrierJson(*x);
      } else if (const auto* e = std::get_if<Raised>(&r)) {
        j["raised"] = e->label;
      } else {
        j["diverge"] = true;
      }
      break;
    }
    case MonadTag::Powerset: {
      Json elems = Json::array();
      for (const auto& x : mu.as<PowersetData>().elements) elems.push_back(carrierJson(x));
      j["elements"] = std::move(elems);
      break;
    }
    case MonadTag::Subdistribution: {
      Json entries = Json::array();
      for (const auto& [x, p] : mu.as<DistData>().weights) entries.push_back(Json::array({carrierJson(x), formatRational(p)}));
      j["entries"] = std::move(entries);
      break;
    }
    case MonadTag::GlobalState: {
      const std::size_t width = kind.locations().size();
      j["locations"] = kind.locations();
      Json stores = Json::array();
      const auto& d = mu.as<StateData>().byStore;
      for (std::size_t s = 0; s < d.size(); ++s) {
        Json e;
        e["store"] = storeBits(static_cast<Store>(s), width);
        if (d[s]) {
          e["value"] = carrierJson(d[s]->value);
          e["next"] = storeBits(d[s]->store, width);
        } else {
          e["diverge"] = true;
        }
        stores.push_back(std::move(e));
      }
      j["stores"] = std::move(stores);
      break;
    }
    case MonadTag::Output: {
      const auto& d = mu.as<OutputData>();
      j["alphabet"] = kind.alphabet();
      j["text"] = d.text;
      if (d.value) {
        j["value"] = carrierJson(*d.value);
      } else {
        j["diverge"] = true;
      }
      break;
    }
  }
  return j;
}

MonadValue valueFrom(const Json& j) {
  if (!j.is_object() || !j.contains("kind")) throw ParseError("monadic value must be an object with a kind", 0, 1, 1);
  auto tag = parseTag(j.at("kind").get<std::string>());
  if (!tag) throw ParseError("unknown monad kind '" + j.at("kind").get<std::string>() + "'", 0, 1, 1);
  switch (*tag) {
    case MonadTag::Maybe: {
      KindRef k = MonadKind::maybe();
      if (j.contains("value")) return maybeValue(k, carrierFrom(j.at("value")));
      return bottom(k);
    }
    case MonadTag::Exception: {
      KindRef k = MonadKind::exception(j.at("exceptions").get<std::vector<std::string>>());
      if (j.contains("value")) return MonadValue(k, ExceptionData{carrierFrom(j.at("value"))});
      if (j.contains("raised")) return raisedValue(k, j.at("raised").get<std::string>());
      return bottom(k);
    }
    case MonadTag::Powerset: {
      std::set<Carrier> elems;
      for (const auto& e : j.at("elements")) elems.insert(carrierFrom(e));
      return setValue(MonadKind::powerset(), std::move(elems));
    }
    case MonadTag::Subdistribution: {
      DistData d;
      for (const auto& e : j.at("entries")) {
        if (!e.is_array() || e.size() != 2) throw ParseError("distribution entry must be [value, \"p/q\"]", 0, 1, 1);
        Rational p = parseRational(e[1].get<std::string>());
        if (p <= 0) throw InvalidValue("distribution weights must be positive");
        auto [it, inserted] = d.weights.emplace(carrierFrom(e[0]), p);
        if (!inserted) throw InvalidValue("duplicate distribution entry " + it->first.display());
      }
      return MonadValue(MonadKind::subdistribution(), std::move(d));
    }
    case MonadTag::GlobalState: {
      KindRef k = MonadKind::globalState(j.at("locations").get<std::vector<std::string>>());
      const std::size_t width = k->locations().size();
      std::vector<std::optional<StateResult>> byStore(k->storeCount());
      std::vector<bool> seen(k->storeCount(), false);
      for (const auto& e : j.at("stores")) {
        Store s = storeFrom(e.at("store").get<std::string>(), width);
        if (seen[s]) throw InvalidValue("store listed twice");
        seen[s] = true;
        if (e.contains("value")) byStore[s] = StateResult{carrierFrom(e.at("value")), storeFrom(e.at("next").get<std::string>(), width)};
      }
      for (bool b : seen) {
        if (!b) throw InvalidValue("state map must list every store");
      }
      return stateValue(k, std::move(byStore));
    }
    case MonadTag::Output: {
      KindRef k = MonadKind::output(j.at("alphabet").get<std::string>());
      std::optional<Carrier> v;
      if (j.contains("value")) v = carrierFrom(j.at("value"));
      return outputValue(k, j.at("text").get<std::string>(), std::move(v));
    }
  }
  throw ParseError("unknown monad kind", 0, 1, 1);
}

Json parseJson(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what(), e.byte, 1, e.byte);
  }
}

template <typename F>
auto withJsonErrors(F&& f) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what(), 0, 1, 1);
  }
}

}  // namespace

std::string toJson(const MonadValue& mu) { return valueJson(mu).dump(); }

std::string toJson(const Presentation& xi) {
  Json j;
  j["effect"]["arity"] = xi.effect().arity();
  j["effect"]["body"] = valueJson(xi.effect().body());
  Json row = Json::array();
  for (const auto& x : xi.row()) row.push_back(carrierJson(x));
  j["row"] = std::move(row);
  return j.dump();
}

MonadValue monadValueFromJson(std::string_view text) {
  Json j = parseJson(text);
  return withJsonErrors([&] { return valueFrom(j); });
}

Presentation presentationFromJson(std::string_view text) {
  Json j = parseJson(text);
  return withJsonErrors([&] {
    const Json& eff = j.at("effect");
    std::size_t arity = eff.at("arity").get<std::size_t>();
    MonadValue body = valueFrom(eff.at("body"));
    std::vector<Carrier> row;
    for (const auto& x : j.at("row")) row.push_back(carrierFrom(x));
    return Presentation(GenericEffect(arity, std::move(body)), std::move(row));
  });
}

std::string renderValue(const MonadValue& mu) {
  switch (mu.tag()) {
    case MonadTag::Maybe: {
      const auto& v = mu.as<MaybeData>().value;
      return v ? v->display() : "↑";
    }
    case MonadTag::Exception: {
      const auto& r = mu.as<ExceptionData>().result;
      if (const auto* x = std::get_if<Carrier>(&r)) return x->display();
      if (const auto* e = std::get_if<Raised>(&r)) return "raise[" + e->label + "]";
      return "↑";
    }
    case MonadTag::Powerset: {
      std::string out = "{";
      bool first = true;
      for (const auto& x : mu.as<PowersetData>().elements) {
        if (!first) out += ", ";
        first = false;
        out += x.display();
      }
      return out + "}";
    }
    case MonadTag::Subdistribution: {
      std::string out = "{";
      bool first = true;
      for (const auto& [x, p] : mu.as<DistData>().weights) {
        if (!first) out += ", ";
        first = false;
        out += x.display() + ": " + formatRationalShort(p);
      }
      return out + "}";
    }
    case MonadTag::GlobalState: {
      const std::size_t width = mu.kind()->locations().size();
      const auto& d = mu.as<StateData>().byStore;
      std::string out = "{";
      for (std::size_t s = 0; s < d.size(); ++s) {
        if (s) out += ", ";
        out += storeBits(static_cast<Store>(s), width) + ": ";
        out += d[s] ? "(" + d[s]->value.display() + ", " + storeBits(d[s]->store, width) + ")" : "↑";
      }
      return out + "}";
    }
    case MonadTag::Output: {
      const auto& d = mu.as<OutputData>();
      return "(\"" + d.text + "\", " + (d.value ? d.value->display() : "↑") + ")";
    }
  }
  return "?";
}

}  // namespace effdiag
