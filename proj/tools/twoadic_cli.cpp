#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "twoadic/analysis.hpp"
#include "twoadic/error.hpp"
#include "twoadic/numtheory.hpp"
#include "twoadic/report.hpp"
#include "twoadic/sequence.hpp"
#include "twoadic/verify.hpp"

using namespace twoadic;

namespace {

// Exit codes.
constexpr int exit_ok = 0;
constexpr int exit_check_failed = 1;
constexpr int exit_ineligible_p = 2;
constexpr int exit_not_primitive = 3;
constexpr int exit_bad_sequence = 4;
constexpr int exit_usage = 5;

struct CliConfig
{
    std::optional<std::uint64_t> p;
    std::optional<std::uint64_t> limit;
    std::optional<std::uint64_t> g;
    std::string g_policy = "smallest";
    std::string w = "0101";
    std::string w_policy = "single";
    std::string sequence_file;
    std::string format = "plain";
    std::string out;
    std::string closed_form = "published";
    unsigned jobs = 1;
    bool allow_any_w = false;
};

struct UsageError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

struct SequenceFileError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

BinarySequence load_sequence(const std::string & path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw SequenceFileError("cannot read sequence file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw SequenceFileError("cannot read sequence file " + path);
    try
    {
        return BinarySequence::parse(buf.str());
    }
    catch (const Error & e)
    {
        throw SequenceFileError(path + ": " + e.what());
    }
}

WVector config_w(const CliConfig & c)
{
    const WVector w = parse_w(c.w);
    if (!c.allow_any_w && !is_admissible(w)) throw UsageError("--w " + c.w + " violates w0 = w2, w1 = w3 (see --allow-any-w)");
    return w;
}

std::uint64_t require_p(const CliConfig & c)
{
    if (!c.p) throw UsageError("--p is required");
    return *c.p;
}

std::uint64_t resolve_g(const CliConfig & c, std::uint64_t p)
{
    return c.g ? *c.g : smallest_primitive_root(p);
}

ClosedForm config_form(const CliConfig & c)
{
    return c.closed_form == "adjusted" ? ClosedForm::w_adjusted : ClosedForm::as_published;
}

GPolicy config_g_policy(const CliConfig & c)
{
    if (c.g) return {GPolicy::Kind::value, *c.g};
    return {c.g_policy == "all" ? GPolicy::Kind::all : GPolicy::Kind::smallest, 0};
}

WPolicy config_w_policy(const CliConfig & c)
{
    WPolicy w;
    w.kind = c.w_policy == "all" ? WPolicy::Kind::all : WPolicy::Kind::single;
    w.single = parse_w(c.w);
    if (!is_admissible(w.single)) throw UsageError("verify and survey only accept w with w0 = w2, w1 = w3");
    return w;
}

std::string histogram_string(const AutocorrSpectrum & spectrum)
{
    std::string out;
    for (const auto & [value, count] : spectrum.out_of_phase_histogram())
    {
        if (!out.empty()) out += ';';
        out += std::to_string(value) + ':' + std::to_string(count);
    }
    return out;
}

void emit_csv_row(std::ostream & out, const nlohmann::ordered_json & record, bool header)
{
    auto field = [](const nlohmann::ordered_json & v) {
        if (v.is_string()) return csv_escape(v.get<std::string>());
        return csv_escape(v.dump());
    };
    if (header)
    {
        bool first = true;
        for (const auto & [key, _] : record.items())
        {
            out << (first ? "" : ",") << csv_escape(key);
            first = false;
        }
        out << '\n';
    }
    bool first = true;
    for (const auto & [_, value] : record.items())
    {
        out << (first ? "" : ",") << field(value);
        first = false;
    }
    out << '\n';
}

void emit_record(std::ostream & out, const CliConfig & c, const nlohmann::ordered_json & record)
{
    if (c.format == "json")
    {
        out << nlohmann::ordered_json::array({record}).dump(2) << '\n';
    }
    else if (c.format == "csv")
    {
        emit_csv_row(out, record, true);
    }
    else
    {
        for (const auto & [key, value] : record.items())
            out << key << '=' << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
    }
}

int cmd_construct(const CliConfig & c, std::ostream & out)
{
    const std::uint64_t p = require_p(c);
    const std::uint64_t g = resolve_g(c, p);
    const WVector w = config_w(c);
    const QuarticParams q = quartic_decomposition(p, g);
    const std::uint64_t d = (3 * p + 1) / 4;
    const BinarySequence s = generalized_interleaved(p, g, {3, 2, 1, 1}, {0, d, 2 * d, 3 * d}, w, c.allow_any_w);

    if (c.format == "plain")
    {
        out << "# p=" << p << " g=" << g << " a=" << q.a << " b=" << q.b << " d=" << d << " w=" << format_w(w) << '\n';
        out << s.to_string() << '\n';
        return exit_ok;
    }
    nlohmann::ordered_json j;
    j["p"] = p;
    j["g"] = g;
    j["a"] = q.a;
    j["b"] = q.b;
    j["d"] = d;
    j["w"] = format_w(w);
    j["N"] = s.size();
    j["sequence"] = s.to_literal();
    emit_record(out, c, j);
    return exit_ok;
}

int cmd_analyze(const CliConfig & c, std::ostream & out)
{
    nlohmann::ordered_json j;
    BinarySequence s(1);
    if (!c.sequence_file.empty())
    {
        s = load_sequence(c.sequence_file);
    }
    else
    {
        const std::uint64_t p = c.p.value_or(13);
        const std::uint64_t g = resolve_g(c, p);
        const WVector w = config_w(c);
        const std::uint64_t d = (3 * p + 1) / 4;
        s = generalized_interleaved(p, g, {3, 2, 1, 1}, {0, d, 2 * d, 3 * d}, w, c.allow_any_w);
        j["p"] = p;
        j["g"] = g;
        j["w"] = format_w(w);
    }

    const AutocorrSpectrum spectrum = autocorrelation(s);
    const nlohmann::ordered_json complexity = to_json(two_adic_complexity(s));
    for (const auto & [key, value] : complexity.items()) j[key] = value;
    j["ac_histogram"] = histogram_string(spectrum);
    j["linear_complexity"] = linear_complexity(s);
    emit_record(out, c, j);
    return exit_ok;
}

void print_failure(const CheckReport & r)
{
    std::cerr << "first failure: " << r.check << " p=" << r.p;
    if (r.g != 0) std::cerr << " g=" << r.g;
    if (r.w) std::cerr << " w=" << format_w(*r.w);
    std::cerr << '\n';
    for (const auto & w : r.witnesses) std::cerr << "  " << w.key << " = " << w.value << '\n';
}

int cmd_verify(const CliConfig & c, std::ostream & out)
{
    RunOptions options;
    options.g_policy = config_g_policy(c);
    options.w_policy = config_w_policy(c);
    options.form = config_form(c);
    options.jobs = c.jobs;

    std::uint64_t limit = 0;
    if (c.p)
    {
        options.only_p = *c.p;
        limit = *c.p;
        if (!is_eligible_prime(*c.p)) throw IneligiblePrime(std::to_string(*c.p) + " is not a prime of the form a^2 + 4");
        if (c.g && !is_primitive_root(*c.g, *c.p))
            throw NotPrimitiveRoot(std::to_string(*c.g) + " is not a primitive root of " + std::to_string(*c.p));
    }
    else if (c.limit)
    {
        limit = *c.limit;
    }
    else
    {
        throw UsageError("verify needs --limit or --p");
    }

    if (!c.sequence_file.empty())
    {
        if (!c.p) throw UsageError("--sequence-file with verify needs --p");
        options.fixtures.emplace(GridPoint{*c.p, resolve_g(c, *c.p), options.w_policy.single}, load_sequence(c.sequence_file));
    }

    RunSummary summary;
    try
    {
        summary = run_all(limit, options);
    }
    catch (const SequenceError & e)
    {
        throw SequenceFileError(e.what());
    }

    if (c.format == "json")
    {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto & r : summary.reports) arr.push_back(to_json(r));
        out << arr.dump(2) << '\n';
    }
    else if (c.format == "csv")
    {
        write_csv(out, summary.reports);
    }
    else
    {
        for (const auto & r : summary.reports)
        {
            out << (r.pass ? "PASS " : "FAIL ") << r.check << " p=" << r.p;
            if (r.g != 0) out << " g=" << r.g;
            if (r.w) out << " w=" << format_w(*r.w);
            if (r.b != 0) out << " b=" << r.b;
            out << '\n';
        }
        out << summary.passed << " passed, " << summary.failed << " failed\n";
    }

    if (const CheckReport * f = summary.first_failure())
    {
        print_failure(*f);
        return exit_check_failed;
    }
    return exit_ok;
}

int cmd_survey(const CliConfig & c, std::ostream & out)
{
    if (!c.limit) throw UsageError("survey needs --limit");
    const auto rows = survey_conjecture(*c.limit, config_g_policy(c), config_w_policy(c), c.jobs);

    if (c.format == "json")
    {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto & r : rows) arr.push_back(to_json(r));
        out << arr.dump(2) << '\n';
    }
    else if (c.format == "csv")
    {
        write_csv(out, rows);
    }
    else
    {
        out << "p g w gcd_full gcd_minus gcd_plus phi lower upper\n";
        for (const auto & r : rows)
        {
            out << r.p << ' ' << r.g << ' ' << format_w(r.w) << ' ' << r.gcd_full.to_decimal() << ' '
                << r.gcd_minus.to_decimal() << ' ' << r.gcd_plus.to_decimal() << ' ' << r.phi << ' ' << r.lower_bound
                << ' ' << r.upper_bound << '\n';
        }
    }
    return exit_ok;
}

void add_common(CLI::App * cmd, CliConfig & c)
{
    cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "csv", "plain"}));
    cmd->add_option("--out", c.out, "Write output to this file instead of stdout");
}

void add_params(CLI::App * cmd, CliConfig & c)
{
    cmd->add_option("--p", c.p, "Prime p = a^2 + 4 with a odd");
    cmd->add_option("--g", c.g, "Primitive root (default: smallest)");
    cmd->add_option("--w", c.w, "w0w1w2w3 as a 4-character bit string")->capture_default_str();
    cmd->add_flag("--allow-any-w", c.allow_any_w, "Accept w that violates w0 = w2, w1 = w3");
}

void add_grid(CLI::App * cmd, CliConfig & c)
{
    cmd->add_option("--limit", c.limit, "Largest p in the grid");
    cmd->add_option("--g-policy", c.g_policy, "Primitive roots per p")
        ->check(CLI::IsMember({"smallest", "all"}))
        ->capture_default_str();
    cmd->add_option("--w-policy", c.w_policy, "single (--w) or all admissible w")
        ->check(CLI::IsMember({"single", "all"}))
        ->capture_default_str();
    cmd->add_option("--jobs", c.jobs, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
}

}  // namespace

int main(int argc, char ** argv)
{
    CLI::App app{"Interleaved sequence construction and 2-adic complexity checks"};
    app.require_subcommand(1);
    CliConfig c;

    auto * construct = app.add_subcommand("construct", "Print one constructed sequence");
    add_params(construct, c);
    add_common(construct, c);

    auto * analyze = app.add_subcommand("analyze", "Autocorrelation histogram, 2-adic and linear complexity");
    add_params(analyze, c);
    analyze->add_option("--sequence-file", c.sequence_file, "Analyze a sequence literal from this file");
    add_common(analyze, c);

    auto * verify = app.add_subcommand("verify", "Run every check over the grid; exit 1 on any failure");
    add_params(verify, c);
    add_grid(verify, c);
    verify->add_option("--sequence-file", c.sequence_file, "Replace the sequence at (--p, --g, --w) with this file");
    verify->add_option("--closed-form", c.closed_form, "Autocorrelation closed form to check against")
        ->check(CLI::IsMember({"published", "adjusted"}))
        ->capture_default_str();
    add_common(verify, c);

    auto * survey = app.add_subcommand("survey", "Tabulate gcd(S(2), 2^(2p) +- 1) over the grid");
    survey->add_option("--g", c.g, "Use this primitive root only");
    survey->add_option("--w", c.w, "w for --w-policy single")->capture_default_str();
    add_grid(survey, c);
    add_common(survey, c);

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e)
    {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    std::ostringstream buffer;
    int status = exit_ok;
    try
    {
        if (construct->parsed()) status = cmd_construct(c, buffer);
        else if (analyze->parsed()) status = cmd_analyze(c, buffer);
        else if (verify->parsed()) status = cmd_verify(c, buffer);
        else status = cmd_survey(c, buffer);
    }
    catch (const IneligiblePrime & e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return exit_ineligible_p;
    }
    catch (const NotPrimitiveRoot & e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return exit_not_primitive;
    }
    catch (const SequenceFileError & e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return exit_bad_sequence;
    }
    catch (const std::exception & e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }

    if (c.out.empty())
    {
        std::cout << buffer.str();
    }
    else
    {
        std::ofstream file(c.out, std::ios::binary);
        file << buffer.str();
        if (!file)
        {
            std::cerr << "error: cannot write " << c.out << '\n';
            return exit_usage;
        }
    }
    return status;
}
