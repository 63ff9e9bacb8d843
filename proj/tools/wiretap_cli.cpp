// Command-line frontend for the bounds engines and the point-to-point code.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "wiretap/bounds.hpp"
#include "wiretap/error.hpp"
#include "wiretap/json_io.hpp"
#include "wiretap/network.hpp"
#include "wiretap/secure_code.hpp"

using namespace wiretap;

namespace {

enum Exit : int {
    kOk = 0,
    kCheckFailed = 1,
    kInvalid = 2,
    kDegenerate = 3,
    kTooLarge = 4,
    kDisagreement = 5,
};

struct Options
{
    std::string network_path;
    std::string code_path;
    std::string codewords_path;
    std::optional<std::uint64_t> q;
    std::string method;
    std::size_t cap_cuts = std::size_t{1} << 20;
    std::size_t cap_oracle = std::size_t{1} << 20;
    bool approx = false;
    std::string output;
    std::string message;
    std::string key;
    std::string wiretap;
};

int exit_code_for(ErrorCode code)
{
    switch (code) {
    case ErrorCode::DegenerateTau:
    case ErrorCode::NotPointToPoint: return kDegenerate;
    case ErrorCode::InstanceTooLarge: return kTooLarge;
    default: return kInvalid;
    }
}

std::string approx(const BigRational& r)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", r.convert_to<double>());
    return buf;
}

std::string approx(const ExtRational& r) { return r.is_infinite() ? "inf" : approx(r.value()); }

void emit(const Options& opt, const json& doc)
{
    const std::string text = doc.dump(2) + "\n";
    if (opt.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opt.output);
    if (!out) throw Error(ErrorCode::ParseError, "cannot write '" + opt.output + "'");
    out << text;
}

void warn(const std::string& text) { std::cerr << "warning: " << text << "\n"; }

WiretapNetwork load_network(const std::string& path)
{
    auto net = network_from_json(read_json_file(path));
    validate(net);
    return net;
}

std::vector<std::string> split_list(const std::string& text)
{
    std::vector<std::string> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

FieldVector parse_symbols(const std::string& text, std::size_t length, std::uint64_t q, const char* what)
{
    FieldVector v;
    for (const auto& item : split_list(text)) {
        std::size_t used = 0;
        unsigned long long x = 0;
        try {
            x = std::stoull(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != item.size() || x >= q)
            throw Error(ErrorCode::ParseError, std::string(what) + ": '" + item + "' is not an element of GF(" +
                                                   std::to_string(q) + ")");
        v.push_back(x);
    }
    if (v.size() != length)
        throw Error(ErrorCode::DimensionMismatch, std::string(what) + " needs " + std::to_string(length) +
                                                      " symbols, got " + std::to_string(v.size()));
    return v;
}

json symbols_to_json(const FieldVector& v)
{
    json out = json::array();
    for (auto x : v) out.push_back(x);
    return out;
}

int run_validate(const Options& opt)
{
    auto net = load_network(opt.network_path);
    emit(opt, {{"valid", true},
               {"nodes", net.nodes.size()},
               {"edges", net.edges.size()},
               {"users", net.users},
               {"wiretap_sets", net.wiretap_sets.size()}});
    return kOk;
}

int run_bound_message(const Options& opt)
{
    auto net = load_network(opt.network_path);
    auto report = message_upper_bound(net);
    if (report.bound_logq == 0) warn("message bound is 0: cannot send any message");
    emit(opt, to_json(net, report));
    return kOk;
}

int run_bound_key(const Options& opt)
{
    auto net = load_network(opt.network_path);
    BoundLimits limits;
    limits.max_cut_candidates = opt.cap_cuts;

    std::string method = opt.method;
    if (method.empty()) {
        // Cross-check with the brute-force engine only while cut enumeration stays cheap.
        const std::size_t free_nodes = net.nodes.size() - 1;
        const bool small = free_nodes < 63 && (std::size_t{1} << free_nodes) * net.users.size() <= opt.cap_cuts;
        method = small ? "both" : "algo1";
    }

    std::optional<KeyBoundReport> brute, algo;
    if (method == "brute" || method == "both") brute = tau_bruteforce(net, limits);
    if (method == "algo1" || method == "both") algo = tau_algorithm1(net, limits);

    const KeyBoundReport& primary = brute ? *brute : *algo;
    json doc = to_json(net, primary);
    int status = kOk;
    if (brute && algo) {
        const bool agree = brute->tau == algo->tau && brute->l_C == algo->l_C;
        doc["method"] = "both";
        doc["cross_check"] = {{"method", method_string(algo->method)},
                              {"tau", tau_string(algo->tau)},
                              {"l_C", to_string(algo->l_C)},
                              {"agree", agree}};
        if (!agree) status = kDisagreement;
    }
    if (opt.approx)
        doc["approx"] = {{"tau", approx(primary.tau)}, {"l_C", approx(primary.l_C)}, {"l_P", approx(primary.l_P)}};
    emit(opt, doc);

    if (status == kOk && primary.tau.is_infinite()) {
        warn("a wiretap set covers a cut: tau is unbounded and no message can be sent");
        status = kDegenerate;
    }
    return status;
}

int run_construct(const Options& opt)
{
    auto net = load_network(opt.network_path);
    require_point_to_point(net);
    auto rate = derive_rates(net);
    const std::uint64_t q = opt.q ? *opt.q : default_field_size(net);
    auto code = construct_code(net, rate, q);
    json doc = to_json(code);
    if (opt.approx) doc["approx"] = {{"key_per_message", approx(rate.key_ratio())}};
    emit(opt, doc);
    return kOk;
}

CodeSpec load_code(const Options& opt) { return code_from_json(read_json_file(opt.code_path)); }

int run_encode(const Options& opt)
{
    auto code = load_code(opt);
    auto m = parse_symbols(opt.message, code.w_total(), code.q, "message");
    auto k = parse_symbols(opt.key, code.g, code.q, "key");
    emit(opt, codewords_to_json(code, encode(code, m, k)));
    return kOk;
}

int run_decode(const Options& opt)
{
    auto code = load_code(opt);
    auto y = codewords_from_json(code, read_json_file(opt.codewords_path));
    emit(opt, {{"q", code.q}, {"message", symbols_to_json(decode(code, y))}});
    return kOk;
}

std::optional<BigRational> oracle_within_cap(const CodeSpec& code, const std::vector<EdgeId>& wiretap,
                                             std::size_t cap)
{
    try {
        return mutual_information_oracle(code, wiretap, cap);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::InstanceTooLarge) throw;
        return std::nullopt;
    }
}

int run_verify(const Options& opt)
{
    auto code = load_code(opt);
    auto net = load_network(opt.network_path);
    require_point_to_point(net);

    json rows = json::array();
    bool rank_ok = true, oracle_ok = true, oracle_ran = true;
    for (const auto& s : security_by_rank(code, net)) {
        auto ids = net.edge_ids(s.wiretap);
        json row = {{"wiretap_set", ids},
                    {"key_rank", s.key_rank},
                    {"observed_rows", s.observed_rows},
                    {"secure_by_rank", s.secure}};
        rank_ok = rank_ok && s.secure;
        if (auto d = oracle_within_cap(code, ids, opt.cap_oracle)) {
            row["oracle_distance"] = to_string(*d);
            if (opt.approx) row["oracle_distance_approx"] = approx(*d);
            oracle_ok = oracle_ok && *d == 0;
        } else {
            row["oracle_distance"] = nullptr;
            oracle_ran = false;
        }
        rows.push_back(row);
    }
    if (!oracle_ran) warn("some wiretap sets exceed --cap-oracle; the oracle was skipped for them");

    emit(opt, {{"q", code.q},
               {"per_wiretap", rows},
               {"rank_secure", rank_ok},
               {"oracle_secure", oracle_ok},
               {"oracle_complete", oracle_ran},
               {"secure", rank_ok && oracle_ok}});
    return rank_ok && oracle_ok ? kOk : kCheckFailed;
}

int run_oracle(const Options& opt)
{
    auto code = load_code(opt);
    auto ids = split_list(opt.wiretap);
    auto d = mutual_information_oracle(code, ids, opt.cap_oracle);
    json doc = {{"wiretap_set", ids}, {"distance", to_string(d)}, {"independent", d == 0}};
    if (opt.approx) doc["distance_approx"] = approx(d);
    emit(opt, doc);
    return kOk;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Secure network coding bounds and point-to-point code construction on wiretap networks"};
    app.require_subcommand(1);
    Options opt;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--output,-o", opt.output, "Write the JSON report here instead of stdout");
        sub->add_flag("--approx", opt.approx, "Also print labeled decimal approximations");
    };

    auto* validate_cmd = app.add_subcommand("validate", "Check a network file");
    validate_cmd->add_option("network", opt.network_path)->required()->check(CLI::ExistingFile);
    common(validate_cmd);

    auto* message_cmd = app.add_subcommand("bound-message", "Upper bound on H(M) in units of log q");
    message_cmd->add_option("network", opt.network_path)->required()->check(CLI::ExistingFile);
    common(message_cmd);

    auto* key_cmd = app.add_subcommand("bound-key", "Lower bound tau on H(K)/H(M)");
    key_cmd->add_option("network", opt.network_path)->required()->check(CLI::ExistingFile);
    key_cmd->add_option("--method", opt.method, "brute, algo1 or both (default: both when cuts are cheap)")
        ->check(CLI::IsMember({"brute", "algo1", "both"}));
    key_cmd->add_option("--cap-cuts", opt.cap_cuts, "Limit on cut candidates for the brute-force engine")
        ->check(CLI::PositiveNumber);
    common(key_cmd);

    auto* construct_cmd = app.add_subcommand("construct", "Build a secure code for a point-to-point network");
    construct_cmd->add_option("network", opt.network_path)->required()->check(CLI::ExistingFile);
    construct_cmd->add_option("--q", opt.q, "Prime field size (default: smallest prime above the wiretap count)");
    common(construct_cmd);

    auto* encode_cmd = app.add_subcommand("encode", "Encode a message and key with a constructed code");
    encode_cmd->add_option("code", opt.code_path)->required()->check(CLI::ExistingFile);
    encode_cmd->add_option("--message", opt.message, "Comma-separated field elements")->required();
    encode_cmd->add_option("--key", opt.key, "Comma-separated field elements")->required();
    common(encode_cmd);

    auto* decode_cmd = app.add_subcommand("decode", "Recover the message from all edge symbols");
    decode_cmd->add_option("code", opt.code_path)->required()->check(CLI::ExistingFile);
    decode_cmd->add_option("codewords", opt.codewords_path)->required()->check(CLI::ExistingFile);
    common(decode_cmd);

    auto* verify_cmd = app.add_subcommand("verify", "Check security by rank and by the exhaustive oracle");
    verify_cmd->add_option("code", opt.code_path)->required()->check(CLI::ExistingFile);
    verify_cmd->add_option("network", opt.network_path)->required()->check(CLI::ExistingFile);
    verify_cmd->add_option("--cap-oracle", opt.cap_oracle, "Limit on q^(g + message length) for the oracle")
        ->check(CLI::PositiveNumber);
    common(verify_cmd);

    auto* oracle_cmd = app.add_subcommand("oracle-mi", "Exhaustive independence test of M and one wiretap view");
    oracle_cmd->add_option("code", opt.code_path)->required()->check(CLI::ExistingFile);
    oracle_cmd->add_option("--wiretap", opt.wiretap, "Comma-separated edge ids")->required();
    oracle_cmd->add_option("--cap-oracle", opt.cap_oracle, "Limit on q^(g + message length)")
        ->check(CLI::PositiveNumber);
    common(oracle_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int status = app.exit(e);
        return status == 0 ? kOk : kInvalid;
    }

    try {
        if (*validate_cmd) return run_validate(opt);
        if (*message_cmd) return run_bound_message(opt);
        if (*key_cmd) return run_bound_key(opt);
        if (*construct_cmd) return run_construct(opt);
        if (*encode_cmd) return run_encode(opt);
        if (*decode_cmd) return run_decode(opt);
        if (*verify_cmd) return run_verify(opt);
        if (*oracle_cmd) return run_oracle(opt);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalid;
    }
    return kInvalid;
}
