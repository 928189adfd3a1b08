#include <doctest.h>

#include <sstream>
#include <stdexcept>

#include "qpart/io.hpp"

using qpart::Partition;
using qpart::Rational;
namespace io = qpart::io;

TEST_CASE("scalar serialization") {
  CHECK(io::to_json(Rational(21, 64)).dump() == "\"21/64\"");
  CHECK(io::to_json(Partition{4, 3, 3, 1}).dump() == "[4,3,3,1]");
  CHECK(io::to_json(Partition{}).dump() == "[]");
  CHECK(io::to_json(qpart::Permutation{3, 1, 2}).dump() == "[3,1,2]");
  CHECK(io::to_json(qpart::Interval(Rational(1, 4), Rational(1, 2))).dump() == R"({"lo":"1/4","hi":"1/2"})");
}

TEST_CASE("partition and permutation parsing") {
  CHECK(io::parse_partition("[4,3,3,1]") == Partition{4, 3, 3, 1});
  CHECK(io::parse_partition("4 3 3 1") == Partition{4, 3, 3, 1});
  CHECK(io::parse_partition("[]") == Partition{});
  CHECK(io::parse_permutation("3,1,2") == qpart::Permutation{3, 1, 2});
  CHECK_THROWS_AS(io::parse_partition("1,2"), std::invalid_argument);
  CHECK_THROWS_AS(io::parse_partition("4,x"), std::invalid_argument);
  CHECK_THROWS_AS(io::parse_permutation("1,1"), std::invalid_argument);
  CHECK(io::partition_from_json(io::Json::parse("[2,1]")) == Partition{2, 1});
  CHECK_THROWS_AS(io::partition_from_json(io::Json::parse("{}")), std::invalid_argument);
}

TEST_CASE("pmf json round trip") {
  const auto pmf = qpart::q_pmf(3, Rational(2));
  const auto j = io::pmf_to_json(pmf);
  CHECK(j.dump() ==
        R"({"n":3,"q":"2/1","measure":"Q","entries":[{"partition":[3],"prob":"64/101"},)"
        R"({"partition":[2,1],"prob":"36/101"},{"partition":[1,1,1],"prob":"1/101"}]})");
  const auto back = io::pmf_from_json(j);
  CHECK(back.n == 3);
  CHECK(back.q == Rational(2));
  CHECK(back.measure == qpart::MeasureKind::Q);
  CHECK(back.entries == pmf.entries);
  for (int n = 0; n <= 8; ++n) {
    const auto p = qpart::p_pmf(n, Rational(7, 3));
    CHECK(io::pmf_from_json(io::Json::parse(io::pmf_to_json(p).dump())).entries == p.entries);
  }
}

TEST_CASE("pmf csv") {
  const auto csv = io::pmf_to_csv(qpart::p_pmf(3, Rational(2)));
  CHECK(csv ==
        "partition,prob,prob_decimal\n"
        "\"[3]\",21/32,0.65625\n"
        "\"[2,1]\",21/64,0.328125\n"
        "\"[1,1,1]\",1/64,0.015625\n");
}

TEST_CASE("bounds csv and json") {
  const auto rows = qpart::bounds_report(5, 5, qpart::RPolicy::only(4), {Rational(2)});
  const auto csv = io::bounds_to_csv(rows);
  std::istringstream in(csv);
  std::string header, line;
  std::getline(in, header);
  CHECK(header ==
        "n,r_or_k,q,lower,exact,upper,slack_low,slack_high,"
        "lower_decimal,exact_decimal,upper_decimal,slack_low_decimal,slack_high_decimal");
  std::getline(in, line);
  CHECK(line.rfind("5,4,2/1,", 0) == 0);
  CHECK(line.find("2559/8188") != std::string::npos);
  const auto j = io::bounds_to_json(rows);
  CHECK(j.size() == 1);
  CHECK(j[0]["upper"] == "2559/8188");
  CHECK(j[0]["holds"] == true);
}

TEST_CASE("z table and syt output") {
  const auto z = qpart::z_table(3, Rational(2));
  CHECK(io::z_table_to_json(z).dump() == R"({"q":"2/1","z":["1/1","2/1","20/9","808/441"]})");
  CHECK(io::z_table_to_csv(z).rfind("n,z,z_decimal\n0,1/1,1\n", 0) == 0);
  const auto paths = qpart::syt_pmf(2, Rational(2));
  CHECK(io::syt_to_json(paths.front()).dump() == "[[],[1],[2]]");
}

TEST_CASE("sample stream and records") {
  const auto batch = qpart::sample_exact(qpart::p_pmf(1, Rational(2)), 8, 2);
  CHECK(io::batch_to_ndjson(batch) ==
        "{\"measure\":\"P\",\"n\":1,\"q\":\"2/1\",\"seed\":8,\"count\":2}\n"
        "{\"partition\":[1]}\n{\"partition\":[1]}\n");
  const auto rec = io::mcmc_record(qpart::Permutation{3, 1, 2});
  CHECK(rec.dump() == R"({"perm":[3,1,2],"maj":1,"maj_inv":2,"shape":[2,1],"lis":2,"lds":2})");
  const auto freq = io::frequency_report_to_json(qpart::frequency_report(batch));
  CHECK(freq[0]["exact"] == "1/1");
  CHECK(freq[0]["count"] == 2);
}
