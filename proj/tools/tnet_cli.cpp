#include <cstdint>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tnet/bijection.hpp"
#include "tnet/core.hpp"
#include "tnet/debruijn.hpp"
#include "tnet/euler.hpp"
#include "tnet/harness.hpp"
#include "tnet/io.hpp"
#include "tnet/splitting.hpp"

namespace {

int run_verify(const tnet::core::TNet& net) {
    using tnet::harness::VerifyReport;
    bool ok = true;
    auto show = [&](const char* title, const VerifyReport& rep) {
        std::cout << "== " << title << " ==\n"
                  << tnet::harness::render_table(rep) << tnet::harness::render_machine(rep);
        ok = ok && rep.all_pass();
    };
    show("doubling", tnet::harness::verify_doubling(net));
    show("bound", tnet::harness::verify_bound(net));
    if (net.m <= 10) {
        show("cascade", tnet::harness::verify_cascade(net));
    } else {
        std::cout << "== cascade ==\nskipped: cascade suite runs for m <= 10 (2^m leaves)\n";
    }
    std::cout << (ok ? "VERIFY PASS\n" : "VERIFY FAIL\n");
    return ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"de Bruijn / T-net doubling toolkit"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "Generate a base-form de Bruijn sequence");
    int gen_n = 0;
    std::string gen_bits;
    bool gen_random = false;
    std::uint64_t gen_seed = 0;
    gen->add_option("-n", gen_n, "Sequence order")->required();
    gen->add_option("-s", gen_bits, "Selector bits (length 2^(n-1) - n)");
    gen->add_flag("--random", gen_random, "Draw the selector bits from a seeded generator");
    gen->add_option("--seed", gen_seed, "Seed for --random");

    // rank
    auto* rank = app.add_subcommand("rank", "Selector bits of a de Bruijn sequence");
    int rank_n = 0;
    std::string rank_seq;
    rank->add_option("-n", rank_n, "Sequence order")->required();
    rank->add_option("sequence", rank_seq, "de Bruijn sequence (any rotation)")->required();

    // count
    auto* count = app.add_subcommand("count", "Count the Eulerian cycles of a T-net");
    std::string count_file, count_method = "best";
    count->add_option("file", count_file, "T-net file")->required();
    count->add_option("--method", count_method, "best or enum")
        ->check(CLI::IsMember({"best", "enum"}));

    // double
    auto* dbl = app.add_subcommand("double", "Print the doubled T-net");
    std::string dbl_file;
    dbl->add_option("file", dbl_file, "T-net file")->required();

    // levels
    auto* levels = app.add_subcommand("levels", "Cycle counts across the splitting cascade");
    std::string levels_file;
    levels->add_option("file", levels_file, "T-net file")->required();

    // verify
    auto* verify = app.add_subcommand("verify", "Run the verification suites");
    std::string verify_file;
    int verify_n = 0;
    verify->add_option("file", verify_file, "T-net file");
    verify->add_option("--debruijn", verify_n, "Verify the de Bruijn graph of this order");

    // stanley codec
    auto* senc = app.add_subcommand("stanley-encode", "Encode a sequence pair as bits");
    int senc_n = 0;
    std::string senc_b1, senc_b2;
    senc->add_option("seq1", senc_b1, "First sequence (any rotation)")->required();
    senc->add_option("seq2", senc_b2, "Second sequence (any rotation)")->required();
    senc->add_option("-n", senc_n, "Sequence order")->required();

    auto* sdec = app.add_subcommand("stanley-decode", "Decode bits back to a sequence pair");
    int sdec_n = 0;
    std::string sdec_bits;
    sdec->add_option("bits", sdec_bits, "Bit string of length 2^n")->required();
    sdec->add_option("-n", sdec_n, "Sequence order")->required();

    // enumerate
    auto* enumerate = app.add_subcommand("enumerate", "List all Eulerian cycles");
    std::string enum_file;
    enumerate->add_option("file", enum_file, "T-net file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (gen->parsed()) {
            if (gen_n < 2 || gen_n > 12)
                throw std::invalid_argument("order must be between 2 and 12");
            if (gen_random) {
                const int want = (1 << (gen_n - 1)) - gen_n;
                std::mt19937_64 rng(gen_seed);
                gen_bits.clear();
                for (int j = 0; j < want; ++j)
                    gen_bits.push_back('0' + static_cast<char>(rng() & 1));
            }
            std::cout << tnet::debruijn::unrank(gen_n, gen_bits) << "\n";
        } else if (rank->parsed()) {
            auto [r, b0] = tnet::debruijn::rotate_to_base(rank_n, rank_seq);
            std::cerr << "rotation " << r << "\n";
            std::cout << tnet::debruijn::rank(rank_n, b0) << "\n";
        } else if (count->parsed()) {
            const tnet::core::TNet net = tnet::io::load_tnet(count_file);
            if (count_method == "best") {
                std::cout << tnet::euler::count_cycles_best(net).get_str() << "\n";
            } else {
                const auto cycles =
                    tnet::euler::enumerate_cycles(tnet::core::as_multigraph(net));
                std::cout << cycles.size() << "\n";
            }
        } else if (dbl->parsed()) {
            std::cout << tnet::io::format_tnet(
                tnet::core::double_net(tnet::io::load_tnet(dbl_file)));
        } else if (levels->parsed()) {
            const tnet::core::TNet net = tnet::io::load_tnet(levels_file);
            const auto lv = tnet::splitting::build_levels(net);
            for (std::size_t i = 0; i < lv.size(); ++i) {
                mpz_class sum = 0;
                std::vector<std::string> parts;
                for (const auto& w : lv[i]) {
                    const mpz_class c = tnet::euler::count_cycles_best_multi(
                        tnet::core::as_multigraph(w.graph));
                    sum += c;
                    parts.push_back(c.get_str());
                }
                std::cout << "level " << i << "  population " << lv[i].size() << "  sum "
                          << sum.get_str();
                if (parts.size() <= 32) {
                    std::cout << "  counts ";
                    for (std::size_t j = 0; j < parts.size(); ++j)
                        std::cout << (j ? "+" : "") << parts[j];
                }
                std::cout << "\n";
            }
        } else if (verify->parsed()) {
            const bool has_file = !verify_file.empty();
            const bool has_n = verify->count("--debruijn") > 0;
            if (has_file == has_n)
                throw std::invalid_argument("verify needs a T-net file or --debruijn n");
            const tnet::core::TNet net = has_file ? tnet::io::load_tnet(verify_file)
                                                  : tnet::core::debruijn_graph(verify_n);
            return run_verify(net);
        } else if (senc->parsed()) {
            std::cout << tnet::debruijn::stanley_encode(senc_n, senc_b1, senc_b2) << "\n";
        } else if (sdec->parsed()) {
            auto [b1, b2] = tnet::debruijn::stanley_decode(sdec_n, sdec_bits);
            std::cout << b1 << "\n" << b2 << "\n";
        } else if (enumerate->parsed()) {
            const tnet::core::TNet net = tnet::io::load_tnet(enum_file);
            for (const auto& c :
                 tnet::euler::enumerate_cycles(tnet::core::as_multigraph(net)))
                std::cout << tnet::io::format_cycle(c) << "\n";
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
