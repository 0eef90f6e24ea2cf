#include <gtest/gtest.h>

#include "frobsesh/scan.hpp"

using namespace frobsesh;

namespace {

ScanOptions small_scan(int count, int dim, std::uint64_t seed) {
    ScanOptions opt;
    opt.count = count;
    opt.dim = dim;
    opt.seed = seed;
    return opt;
}

TEST(Scan, PinnedHexagonRow) {
    const ScanReport report = run_scan(small_scan(2, 2, 5));
    ASSERT_EQ(report.rows.size(), 3u);
    EXPECT_EQ(report.rows[0].fan_name, "Hexagon");
    EXPECT_EQ(report.rows[0].divisor, (std::vector<Int>{0, 0, 1, 2, 2, 1}));
    EXPECT_EQ(report.rows[0].eps, Rat(1));
    EXPECT_EQ(report.rows[0].eps_f, Rat(1));
    EXPECT_TRUE(report.rows[0].ok());
}

TEST(Scan, NoHardFailuresOnSmallCorpus) {
    const ScanReport report = run_scan(small_scan(10, 0, 42));
    EXPECT_EQ(report.hard_failures, 0) << report.table();
    for (const ScanRow& row : report.rows) EXPECT_TRUE(row.ok()) << row.note;
}

TEST(Scan, DeterministicAcrossRunsAndThreadCounts) {
    ScanOptions opt = small_scan(8, 0, 123);
    opt.threads = 1;
    const std::string serial = run_scan(opt).table();
    opt.threads = 3;
    const std::string pooled = run_scan(opt).table();
    EXPECT_EQ(serial, pooled);
    EXPECT_EQ(serial, run_scan(opt).table());
}

TEST(Scan, DimFilterRestrictsCatalog) {
    const ScanReport report = run_scan(small_scan(6, 3, 9));
    ASSERT_EQ(report.rows.size(), 6u); // no pinned row outside dim 2
    for (const ScanRow& row : report.rows)
        EXPECT_TRUE(row.fan_name.rfind("P1bundleP2", 0) == 0 || row.fan_name == "P1xP2" ||
                    row.fan_name == "P3")
            << row.fan_name;
}

TEST(Scan, SeedChangesCorpus) {
    const std::string a = run_scan(small_scan(5, 2, 1)).table();
    const std::string b = run_scan(small_scan(5, 2, 2)).table();
    EXPECT_NE(a, b);
}

TEST(Scan, EmptyCatalogGivesEmptyReport) {
    const ScanReport report = run_scan(small_scan(5, 9, 1));
    EXPECT_TRUE(report.rows.empty());
    EXPECT_EQ(report.hard_failures, 0);
}

} // namespace
