#include <filesystem>

#include <gtest/gtest.h>

#include "polignac/census_io.hpp"
#include "polignac/errors.hpp"

using namespace polignac;

TEST(CensusIo, ExactLayout) {
    EXPECT_EQ(serialize_census(gap_census(30)),
              "POLIGNAC-CENSUS v1\nx=30\nprimes=10\n1,1\n2,4\n4,3\n6,1\n");
    EXPECT_EQ(serialize_census(gap_census(2)), "POLIGNAC-CENSUS v1\nx=2\nprimes=1\n");
}

TEST(CensusIo, RoundTrip) {
    for (std::uint64_t x : {0u, 2u, 30u, 1000u, 123'457u}) {
        const auto c = gap_census(x);
        const auto text = serialize_census(c);
        EXPECT_EQ(parse_census(text), c);
        EXPECT_EQ(serialize_census(parse_census(text)), text);
    }
}

TEST(CensusIo, FileRoundTrip) {
    const auto path = std::filesystem::temp_directory_path() / "polignac_census_io_test.txt";
    const auto c = gap_census(10'000);
    write_census_file(path, c);
    EXPECT_EQ(read_census_file(path), c);
    std::filesystem::remove(path);
    EXPECT_THROW(read_census_file(path), std::runtime_error);
}

TEST(CensusIo, RejectsMalformed) {
    const std::string good = "POLIGNAC-CENSUS v1\nx=30\nprimes=10\n1,1\n2,4\n4,3\n6,1\n";
    EXPECT_NO_THROW(parse_census(good));
    const char* bad[] = {
        "",
        "POLIGNAC-CENSUS v1\nx=30\nprimes=10\n1,1\n2,4\n4,3\n6,1",        // no final LF
        "POLIGNAC-CENSUS v1\nx=30\nprimes=10\n1,1\n2,4\n4,3\n6,1\n\n",    // extra LF
        "POLIGNAC-CENSUS v2\nx=30\nprimes=10\n1,1\n2,4\n4,3\n6,1\n",
        "POLIGNAC-CENSUS v1\r\nx=30\nprimes=10\n1,1\n2,4\n4,3\n6,1\n",
        "POLIGNAC-CENSUS v1\nx=30 \nprimes=10\n1,1\n2,4\n4,3\n6,1\n",
        "POLIGNAC-CENSUS v1\nx=30\nprimes=10\n1,1\n4,3\n2,4\n6,1\n",      // order
        "POLIGNAC-CENSUS v1\nx=30\nprimes=10\n1,1\n2,4\n3,3\n6,1\n",      // odd gap
        "POLIGNAC-CENSUS v1\nx=30\nprimes=10\n1,1\n2,4\n4,3\n6,1\n8,0\n", // zero count
        "POLIGNAC-CENSUS v1\nx=30\nprimes=11\n1,1\n2,4\n4,3\n6,1\n",      // conservation
        "POLIGNAC-CENSUS v1\nx=30\nprimes=10\n1,1\n2,4\n4;3\n6,1\n",
        "POLIGNAC-CENSUS v1\nprimes=10\nx=30\n1,1\n2,4\n4,3\n6,1\n",
    };
    for (const char* text : bad) EXPECT_THROW(parse_census(text), FormatError) << text;
}
