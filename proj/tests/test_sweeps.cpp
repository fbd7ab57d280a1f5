#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <unistd.h>

#include "birefsim/sweeps.hpp"

using namespace birefsim;

namespace {
constexpr double pi = std::numbers::pi;
const CrystalMedium medium{1.225, 1.375};

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}
} // namespace

TEST_CASE("axis and grid validation") {
    CHECK_THROWS_AS((AxisSpec{1.0, 0.0, 5}.validate()), domain_error);
    CHECK_THROWS_AS((AxisSpec{0.0, 1.0, 1}.validate()), domain_error);
    CHECK_THROWS_AS((AxisSpec{0.0, std::nan(""), 4}.validate()), domain_error);
    CHECK_NOTHROW((AxisSpec{0.0, 1.0, 2}.validate()));
    const AxisSpec ax{0.0, 1.0, 5};
    CHECK(ax.at(0) == 0.0);
    CHECK(ax.at(4) == 1.0);
    CHECK(ax.at(2) == doctest::Approx(0.5));
}

TEST_CASE("number rendering is fixed at 17 significant digits") {
    CHECK(format_double(1.0) == "1");
    CHECK(format_double(0.0) == "0");
    CHECK(format_double(0.1) == "0.10000000000000001");
    CHECK(format_double(0.5) == "0.5");
    CHECK(format_double(-2.25) == "-2.25");
    CHECK(format_double(0.30000000000000004) == "0.30000000000000004");
}

TEST_CASE("amplitude map flags the three zeros of the standard window") {
    const auto table = amplitude_phase_map(GridSpec::amplitude_window());
    REQUIRE(table.columns.size() == 5);
    CHECK(table.rows.size() == 201u * 201u);
    int singular = 0;
    for (const auto& row : table.rows) {
        CHECK(row[2] >= 0.0);
        CHECK(row[2] <= 1.0);
        if (row[4] == 1.0) ++singular;
    }
    CHECK(singular == 3);
}

TEST_CASE("degenerate two-by-two amplitude grid") {
    const auto table = amplitude_phase_map({{0.1, 0.2, 2}, {0.3, 0.4, 2}});
    CHECK(table.rows.size() == 4);
}

TEST_CASE("time-shift map") {
    SUBCASE("balanced row is constant") {
        const GridSpec grid{{0.25 * pi - 0.2, 0.25 * pi + 0.2, 5}, {0.4, 2.0, 7}};
        const auto table = timeshift_map(medium, grid);
        int hits = 0;
        for (const auto& row : table.rows) {
            if (std::abs(row[0] - 0.25 * pi) < 1e-10) {
                CHECK(std::abs(row[2] - (medium.mean_index() - 1.0)) <= 1e-12);
                ++hits;
            }
        }
        CHECK(hits == 7);
    }
    SUBCASE("reflected cells sum to twice the crystal delay on the half-waveplate line") {
        // grid chosen so no cell sits closer than ~0.06 to the vortex
        const GridSpec grid{{0.25 * pi - 0.55, 0.25 * pi + 0.55, 10}, {pi, pi, 2}};
        const auto table = timeshift_map(medium, grid);
        REQUIRE(table.rows.size() == 20);
        const double target = 2.0 * (medium.mean_index() - 1.0);
        for (int i = 0; i < 5; ++i) {
            const double tau_lo = table.rows[2 * i][2];      // dkd duplicated per beta
            const double tau_hi = table.rows[2 * (9 - i)][2];
            CHECK(std::abs(tau_lo + tau_hi - target) <= 1e-12);
        }
    }
    SUBCASE("singular cells are flagged and kept") {
        const GridSpec grid{{0.25 * pi - 0.1, 0.25 * pi + 0.1, 3}, {pi, pi, 2}};
        const auto table = timeshift_map(medium, grid);
        REQUIRE(table.rows.size() == 6);
        int flagged = 0;
        for (const auto& row : table.rows) {
            CHECK(std::isfinite(row[2]));
            if (row[4] == 1.0) {
                ++flagged;
                CHECK(row[2] == 0.0);
            }
        }
        CHECK(flagged == 2); // the beta = pi/4 column at dkd = pi, twice
    }
}

TEST_CASE("profile set") {
    const std::vector<double> mus{2.6, 1.6, 0.6};
    const AxisSpec xi_axis{-1.2, 1.2, 481};
    const auto table = profile_set(medium, 0.21 * pi, mus, xi_axis);
    REQUIRE(table.columns.size() == 5); // xi, three f columns, marker
    CHECK(table.columns[1] == "f_mu2.6000000000000001");
    REQUIRE(table.rows.size() == 481u + 2u);

    SUBCASE("peak heights order with packet narrowness") {
        double peak[3] = {0.0, 0.0, 0.0};
        for (const auto& row : table.rows)
            for (int c = 0; c < 3; ++c) peak[c] = std::max(peak[c], row[1 + c]);
        CHECK(peak[0] > peak[1]);
        CHECK(peak[1] > peak[2]);
    }
    SUBCASE("marker rows carry the reference positions") {
        const auto& row_xi0 = table.rows[481];
        const auto& row_xi1 = table.rows[482];
        CHECK(row_xi0[4] == 1.0);
        CHECK(row_xi0[0] == doctest::Approx(0.30).epsilon(1e-12));
        CHECK(row_xi1[4] == 2.0);
        CHECK(row_xi1[0] == doctest::Approx(0.5936861316229364).epsilon(1e-12));
    }
    SUBCASE("balanced filter profile is symmetric and keeps no xi1 marker") {
        const auto sym = profile_set(medium, 0.25 * pi, mus, xi_axis);
        CHECK(sym.rows.size() == 481u + 1u); // only the xi0 marker
        for (int i = 0; i < 481; ++i) {
            const auto& a = sym.rows[i];
            const auto& b = sym.rows[480 - i];
            for (int c = 1; c <= 3; ++c) CHECK(std::abs(a[c] - b[c]) <= 1e-14);
        }
    }
    SUBCASE("input validation") {
        CHECK_THROWS_AS(profile_set(medium, 0.2, std::vector<double>{}, xi_axis), domain_error);
        CHECK_THROWS_AS(profile_set(medium, 0.2, std::vector<double>{-1.0}, xi_axis),
                        domain_error);
    }
}

TEST_CASE("evolution frames") {
    const CrystalMedium strong{1.10, 1.60};
    const auto pulse = GaussianPulse::tuned(strong, 0, 4.0);
    const AxisSpec x_axis{-40.0, 60.0, 1001};

    SUBCASE("early frame coincides with free space") {
        // early enough that the leading tail at the crystal face is ~e^-50
        const std::vector<double> times{-20.0};
        const auto table = evolution_frames(strong, 0.21 * pi, pulse, times, x_axis);
        for (const auto& row : table.rows) CHECK(std::abs(row[2] - row[3]) <= 1e-12);
    }
    SUBCASE("late frame has the filtered peak ahead of the free-space peak") {
        const std::vector<double> times{40.0};
        const auto table = evolution_frames(strong, 0.21 * pi, pulse, times, x_axis);
        double x_filtered = 0.0, x_free = 0.0, best_f = -1.0, best_g = -1.0;
        for (const auto& row : table.rows) {
            if (row[2] > best_f) {
                best_f = row[2];
                x_filtered = row[1];
            }
            if (row[3] > best_g) {
                best_g = row[3];
                x_free = row[1];
            }
        }
        CHECK(x_filtered > x_free);
    }
    SUBCASE("in-crystal frame matches the two-component superposition") {
        const std::vector<double> times{0.7};
        const auto table = evolution_frames(strong, 0.21 * pi, pulse, times, x_axis);
        const double cb = std::cos(0.21 * pi), sb = std::sin(0.21 * pi);
        const double no = strong.n_ordinary(), ne = strong.n_extraordinary();
        int inside_cells = 0;
        for (const auto& row : table.rows) {
            const double x = row[1], t = row[0];
            if (x <= 0.0 || x > strong.width()) continue;
            ++inside_cells;
            const double so = x - t / no, se = x - t / ne;
            const std::complex<double> expected =
                (cb * std::exp(-no * no * so * so / pulse.sigma) *
                     std::polar(1.0, pulse.omega0 * no * so) +
                 sb * std::exp(-ne * ne * se * se / pulse.sigma) *
                     std::polar(1.0, pulse.omega0 * ne * se)) /
                std::numbers::sqrt2;
            CHECK(std::abs(row[2] - std::norm(expected)) <= 1e-13);
        }
        CHECK(inside_cells > 0);
    }
    SUBCASE("times must increase") {
        const std::vector<double> times{1.0, 0.5};
        CHECK_THROWS_AS(evolution_frames(strong, 0.2, pulse, times, x_axis), domain_error);
    }
}

TEST_CASE("csv rendering is byte-deterministic") {
    const GridSpec grid{{0.0, pi, 41}, {0.0, 2.0 * pi, 41}};
    CHECK(amplitude_phase_map(grid).to_csv() == amplitude_phase_map(grid).to_csv());
    CHECK(timeshift_map(medium, grid).to_csv() == timeshift_map(medium, grid).to_csv());

    const auto csv = amplitude_phase_map({{0.1, 0.2, 2}, {0.3, 0.4, 2}}).to_csv();
    CHECK(csv.find("beta,dkd,modulus,chi,is_singular\n") == 0);
    CHECK(csv.find('\r') == std::string::npos);
    CHECK(csv.back() == '\n');
}

TEST_CASE("hashed file emission with manifest") {
    const auto dir = std::filesystem::temp_directory_path() /
                     ("birefsim_sweeps_test_" + std::to_string(::getpid()));
    std::filesystem::remove_all(dir);

    const SweepParams params{{"beta_min", "0"}, {"beta_max", "1"}, {"count", "11"}};
    const auto table = amplitude_phase_map({{0.0, 1.0, 11}, {0.0, 1.0, 11}});

    const auto first = write_table(dir, "map_amplitude", params, table);
    CHECK(first.csv.filename().string().starts_with("map_amplitude_"));
    CHECK(first.csv.extension() == ".csv");
    CHECK(first.manifest.extension() == ".params");

    const std::string bytes = slurp(first.csv);
    const auto second = write_table(dir, "map_amplitude", params, table);
    CHECK(second.csv == first.csv); // same parameters, same name
    CHECK(slurp(second.csv) == bytes);

    const std::string manifest = slurp(first.manifest);
    CHECK(manifest.find("generator = map_amplitude\n") != std::string::npos);
    CHECK(manifest.find("beta_min = 0\n") != std::string::npos);

    const SweepParams other{{"beta_min", "0"}, {"beta_max", "2"}, {"count", "11"}};
    CHECK(write_table(dir, "map_amplitude", other, table).csv != first.csv);

    CHECK(params_hash(params) == params_hash(params));
    CHECK(params_hash(params) != params_hash(other));

    std::filesystem::remove_all(dir);
}
