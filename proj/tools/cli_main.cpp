#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "stegmatch/bitplane.hpp"
#include "stegmatch/codec.hpp"
#include "stegmatch/codec_groupmatch.hpp"
#include "stegmatch/codec_lsb.hpp"
#include "stegmatch/codec_pairmatch.hpp"
#include "stegmatch/metrics.hpp"
#include "stegmatch/png_io.hpp"

namespace {

using namespace stegmatch;

// Non-zero process exit carrying its own diagnostic, used for failures that
// have a reserved exit code but no library error (e.g. --algo disagreeing
// with the stego header).
struct CliExit {
    int code;
    std::string message;
};

int exit_code_for(const StegoError& err) {
    switch (err.code()) {
        case ErrorCode::io_failure: return 1;
        case ErrorCode::capacity_exhausted: return 2;
        case ErrorCode::image_too_small: return 2;
        case ErrorCode::unsupported_image_format: return 3;
        case ErrorCode::not_a_stego_image: return 4;
        case ErrorCode::unsupported_algorithm: return 4;
        case ErrorCode::corrupt_payload: return 5;
        case ErrorCode::invalid_payload_length: return 5;
        case ErrorCode::dimension_mismatch: return 7;
        default: return 1;
    }
}

std::vector<std::uint8_t> read_binary_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw StegoError(ErrorCode::io_failure, "cannot open '" + path + "' for reading");
    return std::vector<std::uint8_t>(std::istreambuf_iterator<char>(in),
                                     std::istreambuf_iterator<char>());
}

void write_binary_file(const std::string& path, const std::vector<std::uint8_t>& data) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw StegoError(ErrorCode::io_failure, "cannot open '" + path + "' for writing");
    out.write(reinterpret_cast<const char*>(data.data()),
              static_cast<std::streamsize>(data.size()));
    if (!out) throw StegoError(ErrorCode::io_failure, "failed writing '" + path + "'");
}

EmbedResult run_codec_embed(Algorithm algo, const RgbRaster& cover, const BitSeq& secret) {
    switch (algo) {
        case Algorithm::lsb1: return lsb1::embed(cover, secret);
        case Algorithm::pair2: return pair2::embed(cover, secret);
        case Algorithm::group3: return group3::embed(cover, secret);
    }
    throw StegoError(ErrorCode::unsupported_algorithm, "unknown algorithm");
}

BitSeq run_codec_extract(Algorithm algo, const RgbRaster& stego) {
    switch (algo) {
        case Algorithm::lsb1: return lsb1::extract(stego);
        case Algorithm::pair2: return pair2::extract(stego);
        case Algorithm::group3: return group3::extract(stego);
    }
    throw StegoError(ErrorCode::unsupported_algorithm, "unknown algorithm");
}

std::string format_psnr(double psnr_db) {
    if (std::isinf(psnr_db)) return "inf";
    std::ostringstream os;
    os.precision(4);
    os << std::fixed << psnr_db;
    return os.str();
}

nlohmann::json psnr_json(double psnr_db) {
    if (std::isinf(psnr_db)) return "inf";
    return psnr_db;
}

struct EmbedOptions {
    std::string algo;
    std::string cover_path;
    std::string out_path;
    std::optional<std::string> message;
    std::optional<std::string> message_file;
    std::optional<std::string> stats_path;
};

std::vector<std::uint8_t> message_octets(const std::optional<std::string>& message,
                                         const std::optional<std::string>& message_file) {
    if (message)
        return std::vector<std::uint8_t>(message->begin(), message->end());
    return read_binary_file(*message_file);
}

int run_embed(const EmbedOptions& opt) {
    const Algorithm algo = *algorithm_from_name(opt.algo);
    const std::vector<std::uint8_t> octets = message_octets(opt.message, opt.message_file);
    const RgbRaster cover = load_png(opt.cover_path);

    const EmbedResult result = run_codec_embed(algo, cover, bits_from_octets(octets));
    save_png(result.stego, opt.out_path);

    const QualityReport quality = quality_report(cover, result.stego);
    if (opt.stats_path) {
        nlohmann::json j{
            {"mse", quality.mse},
            {"psnr_db", psnr_json(quality.psnr_db)},
            {"max_component_delta", quality.max_component_delta},
            {"components_changed", quality.components_changed},
            {"components_visited", result.stats.components_visited},
            {"matches", result.stats.matches},
            {"skips", result.stats.skips},
            {"payload_bits_embedded", result.stats.payload_bits_embedded},
        };
        std::ofstream out(*opt.stats_path);
        if (!out)
            throw StegoError(ErrorCode::io_failure,
                             "cannot open '" + *opt.stats_path + "' for writing");
        out << j.dump(2) << "\n";
    }

    std::cout << "embedded " << result.stats.payload_bits_embedded << " bits with "
              << opt.algo << " into " << result.stats.components_visited
              << " components; psnr " << format_psnr(quality.psnr_db) << " dB -> "
              << opt.out_path << "\n";
    return 0;
}

struct ExtractOptions {
    std::string stego_path;
    std::optional<std::string> algo;
    std::optional<std::string> out_path;
};

int run_extract(const ExtractOptions& opt) {
    const RgbRaster stego = load_png(opt.stego_path);
    const StegoHeader header = read_header(stego);
    const Algorithm algo = static_cast<Algorithm>(header.algorithm_id);
    if (opt.algo && *algorithm_from_name(*opt.algo) != algo)
        throw CliExit{6, std::string("--algo ") + *opt.algo + " conflicts with the header (" +
                             algorithm_name(algo) + ")"};

    const BitSeq bits = run_codec_extract(algo, stego);
    const std::vector<std::uint8_t> octets = octets_from_bits(bits);
    if (opt.out_path) {
        write_binary_file(*opt.out_path, octets);
    } else {
        std::cout.write(reinterpret_cast<const char*>(octets.data()),
                        static_cast<std::streamsize>(octets.size()));
    }
    return 0;
}

struct AnalyzeOptions {
    std::string cover_path;
    std::string stego_path;
    bool as_json = false;
};

int run_analyze(const AnalyzeOptions& opt) {
    const RgbRaster cover = load_png(opt.cover_path);
    const RgbRaster stego = load_png(opt.stego_path);
    const QualityReport quality = quality_report(cover, stego);

    if (opt.as_json) {
        nlohmann::json j{
            {"mse", quality.mse},
            {"psnr_db", psnr_json(quality.psnr_db)},
            {"max_component_delta", quality.max_component_delta},
            {"components_changed", quality.components_changed},
        };
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "mse                 : " << quality.mse << "\n"
                  << "psnr_db             : " << format_psnr(quality.psnr_db) << "\n"
                  << "max_component_delta : " << quality.max_component_delta << "\n"
                  << "components_changed  : " << quality.components_changed << "\n";
    }
    return 0;
}

struct CompareOptions {
    std::string cover_path;
    std::optional<std::string> message;
    std::optional<std::string> message_file;
    std::optional<std::string> csv_path;
};

struct CompareRow {
    std::string algorithm;
    std::string status = "ok";
    double psnr_db = 0.0;
    std::size_t bits_embedded = 0;
    std::size_t components_used = 0;
    double bits_per_component = 0.0;
};

int run_compare(const CompareOptions& opt) {
    const std::vector<std::uint8_t> octets = message_octets(opt.message, opt.message_file);
    const RgbRaster cover = load_png(opt.cover_path);
    const BitSeq secret = bits_from_octets(octets);

    std::vector<CompareRow> rows;
    for (Algorithm algo : {Algorithm::group3, Algorithm::pair2, Algorithm::lsb1}) {
        CompareRow row;
        row.algorithm = algorithm_name(algo);
        try {
            const EmbedResult result = run_codec_embed(algo, cover, secret);
            // A row only reports numbers for a payload that provably survives
            // the round trip.
            if (octets_from_bits(run_codec_extract(algo, result.stego)) != octets)
                throw StegoError(ErrorCode::corrupt_payload,
                                 "round-trip verification failed");
            row.psnr_db = psnr(cover, result.stego);
            row.bits_embedded = result.stats.payload_bits_embedded;
            row.components_used = result.stats.components_visited;
            row.bits_per_component = result.stats.bits_per_component();
        } catch (const StegoError& err) {
            row.status = error_code_name(err.code());
        }
        rows.push_back(row);
    }

    std::ostringstream csv;
    csv << "algorithm,psnr_db,bits_embedded,components_used,bits_per_component,status\n";
    for (const CompareRow& row : rows) {
        csv << row.algorithm << ",";
        if (row.status == "ok")
            csv << format_psnr(row.psnr_db) << "," << row.bits_embedded << ","
                << row.components_used << "," << row.bits_per_component;
        else
            csv << ",,,";
        csv << "," << row.status << "\n";
    }
    if (opt.csv_path) {
        std::ofstream out(*opt.csv_path);
        if (!out)
            throw StegoError(ErrorCode::io_failure,
                             "cannot open '" + *opt.csv_path + "' for writing");
        out << csv.str();
    }

    std::cout << "algorithm  psnr_db    bits  components  bits/component  status\n";
    for (const CompareRow& row : rows) {
        std::ostringstream line;
        line.setf(std::ios::left);
        line.width(11);
        line << row.algorithm;
        if (row.status == "ok") {
            std::ostringstream bpc;
            bpc.precision(4);
            bpc << row.bits_per_component;
            line << format_psnr(row.psnr_db) << "  " << row.bits_embedded << "  "
                 << row.components_used << "  " << bpc.str() << "  ok";
        } else {
            line << "-  -  -  -  " << row.status;
        }
        std::cout << line.str() << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"stegmatch - embed, extract and analyze LSB/match-coded payloads in PNG images"};
    app.require_subcommand(1);

    const std::vector<std::string> algo_names{"group3", "pair2", "lsb1"};

    EmbedOptions embed_opt;
    CLI::App* embed_cmd = app.add_subcommand("embed", "Embed a message into a cover PNG");
    embed_cmd->add_option("--algo", embed_opt.algo, "Codec to use")
        ->required()
        ->check(CLI::IsMember(algo_names));
    embed_cmd->add_option("--cover", embed_opt.cover_path, "Cover PNG path")->required();
    embed_cmd->add_option("--out", embed_opt.out_path, "Stego PNG output path")->required();
    auto* embed_msg = embed_cmd->add_option("--message", embed_opt.message, "UTF-8 message text");
    embed_cmd->add_option("--message-file", embed_opt.message_file, "File with arbitrary message octets")
        ->excludes(embed_msg);
    embed_cmd->add_option("--stats", embed_opt.stats_path, "Write embed stats + quality report JSON here");

    ExtractOptions extract_opt;
    CLI::App* extract_cmd = app.add_subcommand("extract", "Recover the message from a stego PNG");
    extract_cmd->add_option("--stego", extract_opt.stego_path, "Stego PNG path")->required();
    extract_cmd->add_option("--algo", extract_opt.algo, "Expected codec (default: auto-detect)")
        ->check(CLI::IsMember(algo_names));
    extract_cmd->add_option("--out", extract_opt.out_path, "Write message octets here (default: stdout)");

    AnalyzeOptions analyze_opt;
    CLI::App* analyze_cmd = app.add_subcommand("analyze", "Report MSE/PSNR between two PNGs");
    analyze_cmd->add_option("--cover", analyze_opt.cover_path, "Cover PNG path")->required();
    analyze_cmd->add_option("--stego", analyze_opt.stego_path, "Stego PNG path")->required();
    analyze_cmd->add_flag("--json", analyze_opt.as_json, "Emit JSON instead of the table");

    CompareOptions compare_opt;
    CLI::App* compare_cmd =
        app.add_subcommand("compare", "Run all three codecs on one cover/message and tabulate");
    compare_cmd->add_option("--cover", compare_opt.cover_path, "Cover PNG path")->required();
    auto* compare_msg = compare_cmd->add_option("--message", compare_opt.message, "UTF-8 message text");
    compare_cmd->add_option("--message-file", compare_opt.message_file, "File with arbitrary message octets")
        ->excludes(compare_msg);
    compare_cmd->add_option("--out", compare_opt.csv_path, "Write the comparison CSV here");

    try {
        app.parse(argc, argv);

        if (embed_cmd->parsed()) {
            if (!embed_opt.message && !embed_opt.message_file)
                throw CLI::RequiredError("--message or --message-file");
            return run_embed(embed_opt);
        }
        if (extract_cmd->parsed()) return run_extract(extract_opt);
        if (analyze_cmd->parsed()) return run_analyze(analyze_opt);
        if (compare_cmd->parsed()) {
            if (!compare_opt.message && !compare_opt.message_file)
                throw CLI::RequiredError("--message or --message-file");
            return run_compare(compare_opt);
        }
        return 0;
    } catch (const CLI::ParseError& err) {
        return app.exit(err);
    } catch (const CliExit& err) {
        std::cerr << "error: " << err.message << "\n";
        return err.code;
    } catch (const stegmatch::StegoError& err) {
        std::cerr << "error [" << stegmatch::error_code_name(err.code()) << "]: " << err.what()
                  << "\n";
        return exit_code_for(err);
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    }
}
