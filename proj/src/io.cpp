#include "qpart/io.hpp"

#include <sstream>
#include <stdexcept>

namespace qpart::io {

namespace {

std::vector<int> parse_int_list(const std::string& text) {
  std::string cleaned;
  for (char c : text) {
    if (c == '[' || c == ']' || c == '(' || c == ')') continue;
    cleaned += (c == ',' ? ' ' : c);
  }
  std::istringstream in(cleaned);
  std::vector<int> out;
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed integer list: '" + text + "'");
    }
    if (used != token.size()) throw std::invalid_argument("malformed integer list: '" + text + "'");
    out.push_back(v);
  }
  return out;
}

std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }

}  // namespace

Json to_json(const Rational& r) { return r.str(); }

Json to_json(const Interval& iv) {
  Json j;
  j["lo"] = iv.lo().str();
  j["hi"] = iv.hi().str();
  return j;
}

Json to_json(const Partition& p) { return Json(p.parts()); }

Json to_json(const Permutation& p) { return Json(p.word()); }

Partition partition_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("partition must be a JSON array");
  return Partition(j.get<std::vector<int>>());
}

Partition parse_partition(const std::string& text) { return Partition(parse_int_list(text)); }

Permutation parse_permutation(const std::string& text) { return Permutation(parse_int_list(text)); }

Json pmf_to_json(const Pmf& pmf) {
  Json j;
  j["n"] = pmf.n;
  j["q"] = pmf.q.str();
  j["measure"] = to_string(pmf.measure);
  Json entries = Json::array();
  for (const auto& [lambda, p] : pmf.entries) {
    Json e;
    e["partition"] = to_json(lambda);
    e["prob"] = p.str();
    entries.push_back(std::move(e));
  }
  j["entries"] = std::move(entries);
  return j;
}

Pmf pmf_from_json(const Json& j) {
  Pmf pmf;
  pmf.n = j.at("n").get<int>();
  pmf.q = Rational::parse(j.at("q").get<std::string>());
  const auto tag = j.at("measure").get<std::string>();
  if (tag != "P" && tag != "Q") throw std::invalid_argument("measure must be P or Q");
  pmf.measure = tag == "P" ? MeasureKind::P : MeasureKind::Q;
  for (const auto& e : j.at("entries")) {
    pmf.entries.emplace(partition_from_json(e.at("partition")),
                        Rational::parse(e.at("prob").get<std::string>()));
  }
  return pmf;
}

std::string pmf_to_csv(const Pmf& pmf) {
  std::string out = "partition,prob,prob_decimal\n";
  for (const auto& [lambda, p] : pmf.entries) {
    out += csv_quote(lambda.str()) + "," + p.str() + "," + p.to_decimal(12) + "\n";
  }
  return out;
}

std::string bounds_to_csv(const std::vector<BoundReport>& rows) {
  std::string out =
      "n,r_or_k,q,lower,exact,upper,slack_low,slack_high,"
      "lower_decimal,exact_decimal,upper_decimal,slack_low_decimal,slack_high_decimal\n";
  for (const auto& r : rows) {
    const Rational* values[] = {&r.lower, &r.exact, &r.upper, &r.slack_low, &r.slack_high};
    out += std::to_string(r.n) + "," + std::to_string(r.r_or_k) + "," + r.q.str();
    for (const auto* v : values) out += "," + v->str();
    for (const auto* v : values) out += "," + v->to_decimal(12);
    out += "\n";
  }
  return out;
}

Json bounds_to_json(const std::vector<BoundReport>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) {
    Json j;
    j["measure"] = to_string(r.measure);
    j["statistic"] = r.statistic == Statistic::Row ? "row" : "column";
    j["n"] = r.n;
    j["r_or_k"] = r.r_or_k;
    j["q"] = r.q.str();
    j["lower"] = r.lower.str();
    j["exact"] = r.exact.str();
    j["upper"] = r.upper.str();
    j["slack_low"] = r.slack_low.str();
    j["slack_high"] = r.slack_high.str();
    j["holds"] = r.holds();
    out.push_back(std::move(j));
  }
  return out;
}

Json z_table_to_json(const ZTable& table) {
  Json j;
  j["q"] = table.q.str();
  Json values = Json::array();
  for (const auto& v : table.values) values.push_back(v.str());
  j["z"] = std::move(values);
  return j;
}

std::string z_table_to_csv(const ZTable& table) {
  std::string out = "n,z,z_decimal\n";
  for (std::size_t n = 0; n < table.values.size(); ++n) {
    out += std::to_string(n) + "," + table.values[n].str() + "," + table.values[n].to_decimal(12) + "\n";
  }
  return out;
}

Json syt_to_json(const TableauPath& path) {
  Json chain = Json::array();
  for (const auto& p : path.chain) chain.push_back(to_json(p));
  return chain;
}

std::string batch_to_ndjson(const SampleBatch& batch) {
  Json header;
  header["measure"] = batch.measure;
  header["n"] = batch.n ? Json(*batch.n) : Json(nullptr);
  header["q"] = batch.q.str();
  header["seed"] = batch.seed;
  header["count"] = batch.draws.size();
  std::string out = header.dump() + "\n";
  for (const auto& lambda : batch.draws) {
    Json line;
    line["partition"] = to_json(lambda);
    out += line.dump() + "\n";
  }
  return out;
}

Json frequency_report_to_json(const std::vector<FrequencyRow>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) {
    Json j;
    j["partition"] = to_json(r.partition);
    j["count"] = r.count;
    j["frequency"] = r.frequency.str();
    j["exact"] = r.exact.lo() == r.exact.hi() ? to_json(r.exact.lo()) : to_json(r.exact);
    j["z"] = r.z_score;
    out.push_back(std::move(j));
  }
  return out;
}

Json mcmc_record(const Permutation& perm) {
  Json j;
  j["perm"] = to_json(perm);
  j["maj"] = maj(perm);
  j["maj_inv"] = maj(inverse(perm));
  j["shape"] = to_json(conjugate(rsk_shape(perm)));
  j["lis"] = lis(perm);
  j["lds"] = lds(perm);
  return j;
}

}  // namespace qpart::io
