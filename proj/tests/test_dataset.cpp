#include <doctest.h>

#include <sstream>

#include "oracles.hpp"
#include "regress_bench/dataset.hpp"
#include "regress_bench/error.hpp"

using namespace regress_bench;

namespace {

const std::string kHeader = "age,sex,bmi,children,smoker,region,charges\n";

ErrorKind kind_of(const std::string& text) {
  try {
    parse_csv_text(text);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::Io;
}

std::optional<std::size_t> row_of(const std::string& text) {
  try {
    parse_csv_text(text);
  } catch (const Error& e) {
    return e.row();
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("parse_csv reads the first row of the medical cost file") {
  auto d = parse_csv_text(kHeader + "19,female,27.9,0,yes,southwest,16884.924\n");
  REQUIRE(d.n_rows() == 1);
  CHECK(d.record(0) == Record{19, Sex::Female, 27.9, 0, Smoker::Yes, Region::Southwest, 16884.924});
}

TEST_CASE("header-only input gives an empty dataset") {
  CHECK(parse_csv_text(kHeader).n_rows() == 0);
  CHECK(parse_csv_text("age,sex,bmi,children,smoker,region,charges").n_rows() == 0);
}

TEST_CASE("short row is a RowArity error at that row") {
  const auto text = kHeader + "18,male,33.77,1,no,southeast,1725.5523\n19,female,27.9\n";
  CHECK(kind_of(text) == ErrorKind::RowArity);
  CHECK(row_of(text) == 2);
}

TEST_CASE("header problems are MissingHeader") {
  CHECK(kind_of("") == ErrorKind::MissingHeader);
  CHECK(kind_of("19,female,27.9,0,yes,southwest,16884.924\n") == ErrorKind::MissingHeader);
  CHECK(kind_of("sex,age,bmi,children,smoker,region,charges\n") == ErrorKind::MissingHeader);
  CHECK(kind_of("age,sex,bmi,children,smoker,region,charges,extra\n") == ErrorKind::MissingHeader);
}

TEST_CASE("field-level parse errors name the row") {
  CHECK(kind_of(kHeader + "abc,female,27.9,0,yes,southwest,1.0\n") == ErrorKind::ParseError);
  CHECK(kind_of(kHeader + "19.5,female,27.9,0,yes,southwest,1.0\n") == ErrorKind::ParseError);
  CHECK(kind_of(kHeader + "19,female,27.9,0,yes,nowhere,1.0\n") == ErrorKind::ParseError);
  CHECK(kind_of(kHeader + "19,other,27.9,0,yes,southwest,1.0\n") == ErrorKind::ParseError);
  CHECK(kind_of(kHeader + "19,female,27.9,0,yes,southwest,nan\n") == ErrorKind::ParseError);
  CHECK(kind_of(kHeader + "-1,female,27.9,0,yes,southwest,1.0\n") == ErrorKind::ParseError);
  CHECK(kind_of(kHeader + "19,female,0,0,yes,southwest,1.0\n") == ErrorKind::ParseError);
  CHECK(kind_of(kHeader + "19,female,27.9,0,yes,southwest,-5\n") == ErrorKind::ParseError);
  // Thousands separators split the field.
  CHECK(kind_of(kHeader + "19,female,27.9,0,yes,southwest,16,884.924\n") == ErrorKind::RowArity);
  CHECK(row_of(kHeader + "19,female,27.9,0,yes,southwest,1\n20,male,x,0,no,northeast,2\n") == 2);
}

TEST_CASE("categories are case-insensitive and trimmed; CRLF accepted") {
  auto d = parse_csv_text("age,sex,bmi,children,smoker,region,charges\r\n 40 , MALE ,30.5,2, Yes ,NorthWest,100.25\r\n");
  REQUIRE(d.n_rows() == 1);
  CHECK(d.record(0) == Record{40, Sex::Male, 30.5, 2, Smoker::Yes, Region::Northwest, 100.25});
  auto labels = d.labels("region");
  CHECK(labels[0] == "northwest");
}

TEST_CASE("records without charges parse when the target is not required") {
  auto d = parse_csv_text("age,sex,bmi,children,smoker,region\n30,female,22.1,0,no,northeast\n", {false});
  CHECK_FALSE(d.has_target());
  CHECK(d.n_rows() == 1);
  CHECK_THROWS_AS(d.numeric("charges"), Error);
}

TEST_CASE("column lookups") {
  auto d = parse_csv_text(kHeader + "19,female,27.9,0,yes,southwest,16884.924\n");
  CHECK(d.column_type("bmi") == ColumnType::Real);
  CHECK(d.column_type("children") == ColumnType::Integer);
  CHECK(d.numeric("age") == std::vector<double>{19.0});
  try {
    d.numeric("height");
    FAIL("expected UnknownColumn");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnknownColumn);
  }
  try {
    d.numeric("smoker");
    FAIL("expected TypeMismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::TypeMismatch);
  }
}

TEST_CASE("schema_report on the full file") {
  auto d = read_csv_file(REGRESS_BENCH_DATA);
  auto report = schema_report(d);
  CHECK(report.n_rows == 1338);
  REQUIRE(report.columns.size() == 7);
  CHECK(report.numeric_columns() == 4);
  CHECK(report.category_columns() == 3);
  std::size_t nulls = 0;
  for (const auto& c : report.columns) nulls += report.n_rows - c.non_null;
  CHECK(nulls == 0);
  CHECK(report.columns[1].distinct == 2);
  CHECK(report.columns[4].distinct == 2);
  CHECK(report.columns[5].distinct == 4);
}

TEST_CASE("schema_report on an empty dataset") {
  auto report = schema_report(parse_csv_text(kHeader));
  CHECK(report.n_rows == 0);
  for (const auto& c : report.columns) {
    CHECK(c.non_null == 0);
    CHECK(c.distinct == 0);
  }
}

TEST_CASE("write then parse is the identity") {
  SUBCASE("full file") {
    auto d = read_csv_file(REGRESS_BENCH_DATA);
    std::ostringstream os;
    write_csv(os, d);
    auto again = parse_csv_text(os.str());
    CHECK(again == d);
    std::ostringstream os2;
    write_csv(os2, again);
    CHECK(os2.str() == os.str());
  }
  SUBCASE("random records") {
    oracle::Rng rng(7);
    for (int trial = 0; trial < 50; ++trial) {
      Dataset d;
      const int n = rng.integer(0, 30);
      for (int i = 0; i < n; ++i) {
        d.push_back(Record{rng.integer(0, 100), static_cast<Sex>(rng.integer(0, 1)), rng.uniform(10, 60),
                           rng.integer(0, 6), static_cast<Smoker>(rng.integer(0, 1)),
                           static_cast<Region>(rng.integer(0, 3)), rng.uniform(0, 70000)});
      }
      std::ostringstream os;
      write_csv(os, d);
      CHECK(parse_csv_text(os.str()) == d);
    }
  }
}
