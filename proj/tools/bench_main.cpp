#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "stegmatch/bitplane.hpp"
#include "stegmatch/codec_groupmatch.hpp"
#include "stegmatch/codec_lsb.hpp"
#include "stegmatch/codec_pairmatch.hpp"
#include "stegmatch/metrics.hpp"

using namespace stegmatch;

namespace {

double now_seconds() {
    return std::chrono::duration<double>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

template <typename Fn>
double time_best(int repeat, Fn&& fn) {
    double best = 1e300;
    for (int r = 0; r < repeat; ++r) {
        const double t0 = now_seconds();
        fn();
        const double t1 = now_seconds();
        if (t1 - t0 < best) best = t1 - t0;
    }
    return best;
}

void print_row(const std::string& name, double serial_s, double parallel_s, bool equal) {
    std::cout << std::left << std::setw(22) << name << std::right << std::fixed
              << std::setprecision(2) << std::setw(10) << serial_s * 1e3 << std::setw(10)
              << parallel_s * 1e3 << std::setw(9) << std::setprecision(2)
              << serial_s / parallel_s << "x   " << (equal ? "outputs equal" : "OUTPUTS DIFFER")
              << "\n";
}

RgbRaster random_raster(std::uint32_t w, std::uint32_t h, std::uint32_t seed) {
    RgbRaster r;
    r.width = w;
    r.height = h;
    r.components.resize(3 * r.pixel_count());
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> dist(0, 255);
    for (auto& c : r.components) c = static_cast<std::uint8_t>(dist(rng));
    return r;
}

// Message whose every group matches a window of the component that will
// carry it, so group3 embedding saturates the image.
BitSeq saturating_message(const RgbRaster& cover, std::uint32_t seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> pick(1, 3);
    BitSeq bits;
    bits.reserve(3 * (cover.component_count() - kHeaderComponents));
    for (std::size_t c = kHeaderComponents; c < cover.component_count(); ++c) {
        const int g = window_of_byte(cover.components[c], pick(rng));
        bits.push_back((g >> 2) & 1);
        bits.push_back((g >> 1) & 1);
        bits.push_back(g & 1);
    }
    return bits;
}

} // namespace

int main(int argc, char** argv) {
    std::uint32_t width = 2048, height = 2048, seed = 7;
    int repeat = 5;

    CLI::App app{"stegmatch-bench - serial vs OpenMP kernel comparison"};
    app.add_option("--width", width, "Cover width in pixels");
    app.add_option("--height", height, "Cover height in pixels");
    app.add_option("--repeat", repeat, "Timed repetitions per kernel (best run wins)");
    app.add_option("--seed", seed, "RNG seed");
    CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
    std::cout << "OpenMP threads: " << omp_get_max_threads() << "\n";
#else
    std::cout << "Built without OpenMP; parallel paths run serially.\n";
#endif

    const RgbRaster cover = random_raster(width, height, seed);
    const std::size_t payload_components = cover.component_count() - kHeaderComponents;
    std::cout << "cover " << width << "x" << height << " (" << cover.component_count()
              << " components), repeat " << repeat << "\n\n";
    std::cout << std::left << std::setw(22) << "kernel" << std::right << std::setw(10)
              << "serial ms" << std::setw(10) << "omp ms" << std::setw(10) << "speedup"
              << "\n";

    std::mt19937 rng(seed ^ 0x9e3779b9u);
    std::uniform_int_distribution<int> bit(0, 1);
    std::uniform_int_distribution<int> byte(0, 255);

    // bit/octet conversions on a payload-sized buffer
    std::vector<std::uint8_t> octets(payload_components / 8);
    for (auto& o : octets) o = static_cast<std::uint8_t>(byte(rng));
    {
        BitSeq out_p, out_s;
        const double ts = time_best(repeat, [&] { out_s = serial::bits_from_octets(octets); });
        const double tp = time_best(repeat, [&] { out_p = bits_from_octets(octets); });
        print_row("bits_from_octets", ts, tp, out_s == out_p);

        std::vector<std::uint8_t> oct_p, oct_s;
        const double ts2 = time_best(repeat, [&] { oct_s = serial::octets_from_bits(out_s); });
        const double tp2 = time_best(repeat, [&] { oct_p = octets_from_bits(out_s); });
        print_row("octets_from_bits", ts2, tp2, oct_s == oct_p);
    }

    // lsb1 at full capacity
    {
        BitSeq payload;
        payload.reserve(payload_components);
        for (std::size_t i = 0; i < payload_components; ++i) payload.push_back(bit(rng));

        EmbedResult res_s, res_p;
        const double ts = time_best(repeat, [&] { res_s = lsb1::serial::embed(cover, payload); });
        const double tp = time_best(repeat, [&] { res_p = lsb1::embed(cover, payload); });
        print_row("lsb1 embed", ts, tp, res_s.stego == res_p.stego);

        BitSeq bits_s, bits_p;
        const double ts2 = time_best(repeat, [&] { bits_s = lsb1::serial::extract(res_s.stego); });
        const double tp2 = time_best(repeat, [&] { bits_p = lsb1::extract(res_s.stego); });
        print_row("lsb1 extract", ts2, tp2, bits_s == bits_p);
    }

    // pair2 at full capacity
    {
        const std::size_t pairs = payload_components / 2;
        BitSeq payload;
        payload.reserve(2 * pairs);
        for (std::size_t i = 0; i < 2 * pairs; ++i) payload.push_back(bit(rng));

        EmbedResult res_s, res_p;
        const double ts = time_best(repeat, [&] { res_s = pair2::serial::embed(cover, payload); });
        const double tp = time_best(repeat, [&] { res_p = pair2::embed(cover, payload); });
        print_row("pair2 embed", ts, tp, res_s.stego == res_p.stego);

        BitSeq bits_s, bits_p;
        const double ts2 = time_best(repeat, [&] { bits_s = pair2::serial::extract(res_s.stego); });
        const double tp2 = time_best(repeat, [&] { bits_p = pair2::extract(res_s.stego); });
        print_row("pair2 extract", ts2, tp2, bits_s == bits_p);
    }

    // group3: embed is cursor-serial (single implementation); extraction has
    // the two-pass parallel path.
    {
        const BitSeq payload = saturating_message(cover, seed + 1);
        EmbedResult res;
        const double te = time_best(repeat, [&] { res = group3::embed(cover, payload); });
        std::cout << std::left << std::setw(22) << "group3 embed" << std::right << std::fixed
                  << std::setprecision(2) << std::setw(10) << te * 1e3 << std::setw(10) << "-"
                  << std::setw(10) << "-"
                  << "   (serial by design)\n";

        BitSeq bits_s, bits_p;
        const double ts = time_best(repeat, [&] { bits_s = group3::serial::extract(res.stego); });
        const double tp = time_best(repeat, [&] { bits_p = group3::extract(res.stego); });
        print_row("group3 extract", ts, tp, bits_s == bits_p);
    }

    // metrics between cover and a full lsb1 stego
    {
        BitSeq payload;
        payload.reserve(payload_components);
        for (std::size_t i = 0; i < payload_components; ++i) payload.push_back(bit(rng));
        const RgbRaster stego = lsb1::embed(cover, payload).stego;

        double mse_s = 0, mse_p = 0;
        const double ts = time_best(repeat, [&] { mse_s = serial::mse(cover, stego); });
        const double tp = time_best(repeat, [&] { mse_p = mse(cover, stego); });
        print_row("mse", ts, tp, mse_s == mse_p);

        QualityReport q_s, q_p;
        const double ts2 = time_best(repeat, [&] { q_s = serial::quality_report(cover, stego); });
        const double tp2 = time_best(repeat, [&] { q_p = quality_report(cover, stego); });
        print_row("quality_report", ts2, tp2,
                  q_s.mse == q_p.mse && q_s.psnr_db == q_p.psnr_db &&
                      q_s.max_component_delta == q_p.max_component_delta &&
                      q_s.components_changed == q_p.components_changed);
    }

    return 0;
}
