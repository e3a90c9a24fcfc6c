#include "fairdiv/instance_json.h"

#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fairdiv/errors.h"

namespace fairdiv {
namespace {

using nlohmann::json;

const json& Field(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) {
    throw MalformedInstanceError(std::string("missing field '") + key + "'");
  }
  return *it;
}

int IntField(const json& j, const char* key) {
  const json& f = Field(j, key);
  if (!f.is_number_integer()) {
    throw MalformedInstanceError(std::string("field '") + key +
                                 "' must be an integer");
  }
  return f.get<int>();
}

// "1.5e-3" -> 15/10000. Exponent forms come from json's shortest dump.
Ratio ParseScientific(const std::string& text) {
  const auto e = text.find_first_of("eE");
  if (e == std::string::npos) return Ratio::Parse(text);
  Ratio mantissa = Ratio::Parse(text.substr(0, e));
  const int exponent = std::stoi(text.substr(e + 1));
  const Ratio scale = Ratio(10).Pow(exponent < 0 ? -exponent : exponent);
  return exponent < 0 ? mantissa / scale : mantissa * scale;
}

}  // namespace

json RatioToJson(const Ratio& r) {
  if (r.is_integer() && r.numerator().fits_slong_p()) {
    return static_cast<std::int64_t>(r.numerator().get_si());
  }
  return r.ToString();
}

Ratio RatioFromJson(const json& j) {
  try {
    if (j.is_number_integer()) {
      if (j.is_number_unsigned()) {
        return Ratio(mpq_class(mpz_class(std::to_string(
            j.get<std::uint64_t>()))));
      }
      return Ratio(j.get<std::int64_t>());
    }
    if (j.is_number_float()) return ParseScientific(j.dump());
    if (j.is_string()) return Ratio::Parse(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw MalformedInstanceError(e.what());
  }
  throw MalformedInstanceError("expected a number or \"p/q\" string, got " +
                               j.dump());
}

Instance InstanceFromJson(const json& j) {
  if (!j.is_object()) throw MalformedInstanceError("instance must be an object");
  const int n = IntField(j, "n");
  const int m = IntField(j, "m");
  if (n < 1) throw MalformedInstanceError("n must be at least 1");
  if (m < 0 || m > kMaxItems) {
    throw MalformedInstanceError("m must lie in [0, 64]");
  }
  const json& cls = Field(j, "class");
  if (!cls.is_string()) throw MalformedInstanceError("'class' must be a string");
  const ValuationClass declared = ParseClassName(cls.get<std::string>());

  const json& vals = Field(j, "valuations");
  if (!vals.is_array() || static_cast<int>(vals.size()) != n) {
    throw MalformedInstanceError("'valuations' must be an array of n entries");
  }
  std::vector<Valuation> valuations;
  for (int i = 0; i < n; ++i) {
    const json& v = vals[i];
    const std::string where = "valuation " + std::to_string(i) + ": ";
    if (v.contains("additive")) {
      const json& arr = v["additive"];
      if (!arr.is_array() || static_cast<int>(arr.size()) != m) {
        throw MalformedInstanceError(where + "'additive' needs m entries");
      }
      std::vector<Ratio> values;
      for (const json& x : arr) values.push_back(RatioFromJson(x));
      valuations.push_back(Valuation::Additive(std::move(values)));
    } else if (v.contains("table")) {
      const json& table = v["table"];
      if (!table.is_object()) {
        throw MalformedInstanceError(where + "'table' must be an object");
      }
      if (m >= 32) {
        throw MalformedInstanceError(where + "table valuations need m < 32");
      }
      const std::uint64_t size = std::uint64_t{1} << m;
      std::vector<Ratio> entries(size);
      std::vector<bool> present(size, false);
      for (const auto& [key, value] : table.items()) {
        std::size_t pos = 0;
        std::uint64_t mask = 0;
        try {
          mask = std::stoull(key, &pos);
        } catch (const std::exception&) {
          pos = 0;
        }
        if (pos == 0 || pos != key.size() || mask >= size) {
          throw MalformedInstanceError(where + "bad table key '" + key + "'");
        }
        entries[mask] = RatioFromJson(value);
        present[mask] = true;
      }
      for (std::uint64_t s = 0; s < size; ++s) {
        if (!present[s]) {
          throw MalformedInstanceError(where + "missing table entry for " +
                                       Bundle(s).ToString());
        }
      }
      valuations.push_back(Valuation::Explicit(m, std::move(entries)));
    } else {
      throw MalformedInstanceError(where + "needs 'additive' or 'table'");
    }
  }
  std::vector<std::string> names;
  if (auto it = j.find("items"); it != j.end()) {
    if (!it->is_array()) throw MalformedInstanceError("'items' must be an array");
    for (const json& name : *it) {
      if (!name.is_string()) {
        throw MalformedInstanceError("item names must be strings");
      }
      names.push_back(name.get<std::string>());
    }
  }
  Instance instance(m, std::move(valuations), declared, std::move(names));
  RequireClass(instance, declared);
  return instance;
}

json InstanceToJson(const Instance& instance) {
  json j;
  j["n"] = instance.n();
  j["m"] = instance.m();
  j["class"] = std::string(ClassName(instance.declared_class()));
  json vals = json::array();
  for (int i = 0; i < instance.n(); ++i) {
    const Valuation& v = instance.valuation(i);
    json entry;
    if (v.kind() == Valuation::Kind::kAdditive) {
      json arr = json::array();
      for (const Ratio& x : v.item_values()) arr.push_back(RatioToJson(x));
      entry["additive"] = std::move(arr);
    } else {
      json table = json::object();
      for (std::size_t s = 0; s < v.table().size(); ++s) {
        table[std::to_string(s)] = RatioToJson(v.table()[s]);
      }
      entry["table"] = std::move(table);
    }
    vals.push_back(std::move(entry));
  }
  j["valuations"] = std::move(vals);
  if (!instance.item_names().empty()) j["items"] = instance.item_names();
  return j;
}

Instance LoadInstanceFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MalformedInstanceError("cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw MalformedInstanceError("'" + path + "': " + e.what());
  }
  return InstanceFromJson(j);
}

void SaveInstanceFile(const Instance& instance, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << InstanceToJson(instance).dump(2) << "\n";
}

Allocation AllocationFromJson(const json& j, int m) {
  const json& bundles = Field(j, "bundles");
  if (!bundles.is_array()) {
    throw MalformedInstanceError("'bundles' must be an array");
  }
  std::vector<Bundle> out;
  for (const json& b : bundles) {
    if (!b.is_array()) throw MalformedInstanceError("a bundle must be an array");
    Bundle bundle;
    for (const json& g : b) {
      if (!g.is_number_integer() || g.get<int>() < 0 || g.get<int>() >= m) {
        throw MalformedInstanceError("bad item index " + g.dump());
      }
      if (bundle.Contains(g.get<int>())) {
        throw MalformedInstanceError("item " + g.dump() + " listed twice");
      }
      bundle = bundle.Plus(g.get<int>());
    }
    out.push_back(bundle);
  }
  try {
    return Allocation(m, std::move(out));
  } catch (const PreconditionError& e) {
    throw MalformedInstanceError(e.what());
  }
}

json AllocationToJson(const Allocation& allocation) {
  json bundles = json::array();
  for (const Bundle& b : allocation.bundles()) bundles.push_back(b.Items());
  return json{{"bundles", std::move(bundles)}};
}

}  // namespace fairdiv
