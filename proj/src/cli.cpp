#include "hfold/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "hfold/corpus.hpp"
#include "hfold/counting.hpp"
#include "hfold/duality.hpp"
#include "hfold/io.hpp"
#include "hfold/structure.hpp"
#include "hfold/sweep.hpp"

namespace hfold::cli {

namespace {

using io::Json;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string set;
    std::uint32_t t = 1;
    Integer h = 1;
    Integer n = 0;
    std::string cap = "4294967295";
    std::string format = "text";
    std::string output;
    std::uint64_t seed = 42;
    std::size_t count = 50;
    std::size_t k_max = 4;
    Integer a_max = 10;
    std::uint32_t t_max = 3;
    Integer window = 4;
};

struct Input {
    NormalizationRecord record;
    std::size_t duplicates_removed;

    const NormalizedSet& set() const { return record.normalized; }
};

Input read_set(const std::string& literal, std::ostream& err)
{
    std::vector<Integer> values = parse_set_literal(literal);
    std::sort(values.begin(), values.end());
    const std::size_t before = values.size();
    values.erase(std::unique(values.begin(), values.end()), values.end());
    const std::size_t removed = before - values.size();
    if (removed > 0)
        err << "note: removed " << removed << " duplicate element(s) from the input set\n";
    return Input{normalize(RawSet(std::move(values))), removed};
}

void guard_extent(const NormalizedSet& set, Integer h)
{
    if (h < 1)
        throw UsageError("--h must be positive");
    Integer extent;
    if (__builtin_mul_overflow(h, set.a_max(), &extent) || extent > kMaxExtent)
        throw UsageError("h * a_max = " + std::to_string(h) + " * " + std::to_string(set.a_max()) +
                         " exceeds 2^31; dense tables would not be addressable");
}

Cap parse_cap(const std::string& text)
{
    if (text == "exact")
        return Cap::exact();
    std::uint32_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || value == 0)
        throw UsageError("--cap must be 'exact' or an integer in [1, 4294967295], got '" + text + "'");
    return Cap::at(value);
}

std::string describe_set(std::span<const Integer> values)
{
    return "{" + format_set_literal(values) + "}";
}

/// "0, 2..21" style listing; consecutive runs of three or more collapse to a..b.
std::string format_ranges(std::span<const Integer> values)
{
    if (values.empty())
        return "(empty)";
    std::string out;
    std::size_t i = 0;
    while (i < values.size()) {
        std::size_t j = i;
        while (j + 1 < values.size() && values[j + 1] == values[j] + 1)
            ++j;
        if (!out.empty())
            out += ", ";
        if (j >= i + 2) {
            out += std::to_string(values[i]) + ".." + std::to_string(values[j]);
        } else {
            out += std::to_string(values[i]);
            if (j == i + 1)
                out += ", " + std::to_string(values[j]);
        }
        i = j + 1;
    }
    return out;
}

void echo_normalization(const Input& in, std::ostream& out)
{
    out << "normalized set: " << describe_set(in.set().elements()) << " (offset " << in.record.offset
        << ", scale " << in.record.scale << ")\n";
}

void require_format(const Options& o, std::initializer_list<const char*> allowed, const char* command)
{
    for (const char* f : allowed)
        if (o.format == f)
            return;
    throw UsageError(std::string("--format ") + o.format + " is not supported by '" + command + "'");
}

Json count_to_json(const BigCount& c)
{
    if (c <= std::numeric_limits<std::uint64_t>::max())
        return Json(c.convert_to<std::uint64_t>());
    return Json(c.str());
}

int cmd_repr(const Options& o, std::ostream& out, std::ostream& err)
{
    const Input in = read_set(o.set, err);
    guard_extent(in.set(), o.h);
    const Cap cap = parse_cap(o.cap);
    const RepCountTable table = rep_count_table(in.set(), o.h, cap);

    if (o.format == "csv") {
        echo_normalization(in, err);
        out << "n,count\n";
        for (Integer n = 0; n <= table.extent(); ++n)
            out << n << ',' << table.count(n) << '\n';
    } else if (o.format == "json") {
        Json j;
        j["normalization"] = io::to_json(in.record);
        j["h"] = o.h;
        j["cap"] = cap.is_exact() ? Json("exact") : Json(cap.value());
        Json counts = Json::array();
        for (Integer n = 0; n <= table.extent(); ++n)
            counts.push_back(count_to_json(table.count(n)));
        j["counts"] = std::move(counts);
        out << j.dump(2) << '\n';
    } else {
        echo_normalization(in, out);
        out << "h = " << o.h << ", cap = " << (cap.is_exact() ? std::string("exact") : std::to_string(cap.value()))
            << '\n';
        out << "n count\n";
        for (Integer n = 0; n <= table.extent(); ++n)
            out << n << ' ' << table.count(n) << (table.saturated(n) ? "+" : "") << '\n';
    }
    return kExitOk;
}

int cmd_sumset(const Options& o, std::ostream& out, std::ostream& err)
{
    const Input in = read_set(o.set, err);
    guard_extent(in.set(), o.h);
    const ThresholdSumset s = threshold_sumset(in.set(), o.h, o.t);
    const std::vector<Integer> members = s.members.to_vector();
    const std::vector<Integer> original = denormalize_sumset(in.record, o.h, members);

    if (o.format == "csv") {
        echo_normalization(in, err);
        out << "n,original\n";
        for (std::size_t i = 0; i < members.size(); ++i)
            out << members[i] << ',' << original[i] << '\n';
    } else if (o.format == "json") {
        Json j;
        j["normalization"] = io::to_json(in.record);
        j["h"] = o.h;
        j["t"] = o.t;
        j["members"] = members;
        j["original"] = original;
        out << j.dump(2) << '\n';
    } else {
        echo_normalization(in, out);
        out << "(hA)^(t) for h = " << o.h << ", t = " << o.t << " (" << members.size()
            << " elements): " << format_ranges(members) << '\n';
        out << "in input coordinates: " << format_ranges(original) << '\n';
    }
    return kExitOk;
}

void render_fringe_text(const FringeStructure& f, std::ostream& out)
{
    out << "A = " << describe_set(f.set.elements()) << ", t = " << f.t << ", h_t = " << f.h_t
        << ", c'_t = " << f.c_prime_t << ", d'_t = " << f.d_prime_t << '\n';
    if (f.empty_for_all_h) {
        out << "(hA)^(t) is empty for every h\n";
        return;
    }
    out << "c_t = " << f.c_t << ", C_t = " << describe_set(f.C_t) << '\n';
    out << "d_t = " << f.d_t << ", D_t = " << describe_set(f.D_t) << '\n';
}

int report_mismatch(const StructureMismatch& m, const Options& o, std::ostream& out)
{
    if (o.format == "json") {
        Json j;
        j["mismatch"] = io::to_json(m);
        out << j.dump(2) << '\n';
    } else {
        out << "MISMATCH at h = " << m.h << ": missing " << format_ranges(m.missing) << "; unexpected "
            << format_ranges(m.unexpected) << '\n';
    }
    return kExitVerificationFailed;
}

int cmd_structure(const Options& o, std::ostream& out, std::ostream& err)
{
    require_format(o, {"text", "json"}, "structure");
    const Input in = read_set(o.set, err);
    if (o.window < 0)
        throw UsageError("--window must be nonnegative");
    const FringeStructure f = extract_fringes(in.set(), o.t);
    guard_extent(in.set(), f.h_t + o.window);

    const StructureVerdict verdict = verify_structure(in.set(), o.t, f.h_t, f.h_t + o.window);
    if (const auto* m = std::get_if<StructureMismatch>(&verdict))
        return report_mismatch(*m, o, out);
    const auto& cert = std::get<StructureCertificate>(verdict);

    if (o.format == "json") {
        Json j = io::to_json(cert);
        j["normalization"] = io::to_json(in.record);
        out << j.dump(2) << '\n';
    } else {
        echo_normalization(in, out);
        render_fringe_text(cert.fringe, out);
        out << "decomposition verified for h in [" << cert.verified_h_lo << ", " << cert.verified_h_hi << "]\n";
    }
    return kExitOk;
}

int cmd_frobenius(const Options& o, std::ostream& out, std::ostream& err)
{
    require_format(o, {"text", "json"}, "frobenius");
    const Input in = read_set(o.set, err);

    std::vector<std::optional<Integer>> values;
    for (std::uint32_t t = 1; t <= o.t; ++t) {
        const FringeStructure f = extract_fringes(in.set(), t);
        guard_extent(in.set(), f.h_t);
        values.push_back(f.empty_for_all_h ? std::nullopt : std::optional<Integer>(f.c_t - 1));
    }

    if (o.format == "json") {
        Json j;
        j["normalization"] = io::to_json(in.record);
        Json seq = Json::array();
        for (const auto& v : values)
            seq.push_back(v ? Json(*v) : Json(nullptr));
        j["frobenius"] = std::move(seq);
        out << j.dump(2) << '\n';
    } else {
        echo_normalization(in, out);
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (i)
                out << ", ";
            out << "FN_" << i + 1 << " = " << (values[i] ? std::to_string(*values[i]) : std::string("none"));
        }
        out << '\n';
        if (std::find(values.begin(), values.end(), std::nullopt) != values.end())
            out << "none: no integer reaches t representations for any h\n";
    }
    return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err)
{
    require_format(o, {"text", "json"}, "verify");
    if (o.window < 0)
        throw UsageError("--window must be nonnegative");
    if (o.t_max < 1)
        throw UsageError("--t-max must be positive");

    std::vector<NormalizedSet> corpus;
    if (!o.set.empty()) {
        corpus.push_back(read_set(o.set, err).record.normalized);
    } else {
        if (o.k_max < 2 || o.a_max < 3)
            throw UsageError("--k-max must be >= 2 and --a-max >= 3");
        corpus = generate_corpus(CorpusOptions{o.seed, o.count, o.k_max, o.a_max});
    }

    SweepLimits limits;
    limits.t_max = o.t_max;
    limits.structure_window = o.window;
    limits.inclusion_window = o.window;

    SetReport total;
    for (const NormalizedSet& set : corpus) {
        const FringeStructure worst = extract_fringes(set, o.t_max);
        guard_extent(set, std::max(worst.h_t + o.window + 1, std::min<Integer>(2 * worst.h_t, 2000)));
        total += check_set(set, limits);
    }

    const std::pair<const char*, const CheckTally*> rows[] = {
        {"fringe_decomposition", &total.structure}, {"inclusion", &total.inclusion},
        {"interval_containment", &total.interval},  {"duality", &total.duality},
        {"frobenius", &total.frobenius},
    };
    if (o.format == "json") {
        Json j;
        j["sets"] = corpus.size();
        j["seed"] = o.seed;
        j["t_max"] = o.t_max;
        for (const auto& [name, tally] : rows)
            j["checks"][name] = Json{{"checks", tally->checks}, {"failures", tally->failures}};
        j["failures"] = total.failures;
        j["pass"] = total.ok();
        out << j.dump(2) << '\n';
    } else {
        out << "sets: " << corpus.size() << " (seed " << o.seed << ", k <= " << o.k_max << ", a_max <= " << o.a_max
            << "), t <= " << o.t_max << '\n';
        for (const auto& [name, tally] : rows)
            out << name << ": " << tally->checks << " checks, " << tally->failures << " failures\n";
        for (const std::string& f : total.failures)
            out << "FAIL " << f << '\n';
        out << (total.ok() ? "PASS" : "FAIL") << '\n';
    }
    return total.ok() ? kExitOk : kExitVerificationFailed;
}

int cmd_dual(const Options& o, std::ostream& out, std::ostream& err)
{
    require_format(o, {"text", "json"}, "dual");
    const Input in = read_set(o.set, err);
    if (o.window < 0)
        throw UsageError("--window must be nonnegative");
    const NormalizedSet dual = dual_set(in.set());
    const FringeStructure f = extract_fringes(in.set(), o.t);
    guard_extent(in.set(), f.h_t + o.window);

    const StructureVerdict verdict = verify_structure(dual, o.t, f.h_t, f.h_t + o.window);
    if (const auto* m = std::get_if<StructureMismatch>(&verdict))
        return report_mismatch(*m, o, out);
    const auto& dual_cert = std::get<StructureCertificate>(verdict);
    const FringeStructure swapped = dual_fringes(f);
    const bool consistent = swapped == dual_cert.fringe;

    if (o.format == "json") {
        Json j;
        j["normalization"] = io::to_json(in.record);
        j["dual_set"] = dual.elements();
        j["fringe"] = io::to_json(StructureCertificate{f, f.h_t, f.h_t});
        j["dual_fringe"] = io::to_json(StructureCertificate{swapped, dual_cert.verified_h_lo, dual_cert.verified_h_hi});
        j["swap_matches_direct_extraction"] = consistent;
        out << j.dump(2) << '\n';
    } else {
        echo_normalization(in, out);
        out << "dual set: " << describe_set(dual.elements()) << '\n';
        render_fringe_text(swapped, out);
        out << "swapped fringe " << (consistent ? "matches" : "DOES NOT match")
            << " direct extraction; verified for h in [" << dual_cert.verified_h_lo << ", "
            << dual_cert.verified_h_hi << "]\n";
    }
    return consistent ? kExitOk : kExitVerificationFailed;
}

int cmd_witness(const Options& o, std::ostream& out, std::ostream& err)
{
    require_format(o, {"text", "json"}, "witness");
    const Input in = read_set(o.set, err);
    guard_extent(in.set(), o.h);
    if (in.set().k() < 2)
        throw UsageError("witness construction needs at least two nonzero elements after normalization");
    const WitnessSet w = [&] {
        try {
            return construct_witnesses(in.set(), o.t, o.h, o.n);
        } catch (const PreconditionError& e) {
            throw UsageError(e.what());
        }
    }();

    if (o.format == "json") {
        Json j = io::to_json(w);
        j["normalization"] = io::to_json(in.record);
        out << j.dump(2) << '\n';
    } else {
        echo_normalization(in, out);
        out << "n = " << w.n << ", h = " << w.h << ", t = " << w.t << '\n';
        const auto a = in.set().nonzero();
        for (std::size_t s = 0; s < w.witnesses.size(); ++s) {
            out << "witness " << s + 1 << ": " << w.n << " =";
            for (std::size_t j = 0; j < a.size(); ++j)
                out << (j ? " + " : " ") << w.witnesses[s][j] << '*' << a[j];
            out << " (+ " << w.zero_parts(s) << " zeros)\n";
        }
    }
    return kExitOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"h-fold sumsets, threshold sumsets and their fringe structure", "hfold"};
    app.set_help_flag("--help", "print help");
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--output", o.output, "write output to this file instead of stdout");

    using Handler = std::function<int(const Options&, std::ostream&, std::ostream&)>;
    std::vector<std::pair<CLI::App*, Handler>> commands;
    auto add = [&](const char* name, const char* help, Handler handler) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->set_help_flag("--help", "print help");
        commands.emplace_back(sub, std::move(handler));
        return sub;
    };
    auto set_flag = [&](CLI::App* sub, bool required) {
        auto* opt = sub->add_option("--set", o.set, "set literal, e.g. 0,2,3");
        if (required)
            opt->required();
    };

    auto* repr = add("repr", "representation counts r(n) for n in [0, h*a_max]", cmd_repr);
    set_flag(repr, true);
    repr->add_option("--h", o.h, "fold count")->required();
    repr->add_option("--cap", o.cap, "'exact' or a saturation cap")->capture_default_str();

    auto* sumset = add("sumset", "members of the threshold sumset (hA)^(t)", cmd_sumset);
    set_flag(sumset, true);
    sumset->add_option("--h", o.h, "fold count")->required();
    sumset->add_option("--t", o.t, "representation threshold")->capture_default_str();

    auto* structure = add("structure", "fringe decomposition at h_t, verified on a window", cmd_structure);
    set_flag(structure, true);
    structure->add_option("--t", o.t, "representation threshold")->capture_default_str();
    structure->add_option("--window", o.window, "verify folds h_t .. h_t + window")->capture_default_str();

    auto* frobenius = add("frobenius", "generalized Frobenius numbers FN_1 .. FN_t", cmd_frobenius);
    set_flag(frobenius, true);
    frobenius->add_option("--t", o.t, "largest threshold")->capture_default_str();

    auto* verify = add("verify", "randomized property sweep over a seeded corpus", cmd_verify);
    set_flag(verify, false);
    verify->add_option("--seed", o.seed, "corpus seed")->capture_default_str();
    verify->add_option("--count", o.count, "corpus size")->capture_default_str();
    verify->add_option("--k-max", o.k_max, "largest number of nonzero elements")->capture_default_str();
    verify->add_option("--a-max", o.a_max, "largest element")->capture_default_str();
    verify->add_option("--t-max", o.t_max, "largest threshold")->capture_default_str();
    verify->add_option("--window", o.window, "fold window above h_t")->capture_default_str();

    auto* dual = add("dual", "dual set and its fringe decomposition", cmd_dual);
    set_flag(dual, true);
    dual->add_option("--t", o.t, "representation threshold")->capture_default_str();
    dual->add_option("--window", o.window, "verify folds h_t .. h_t + window")->capture_default_str();

    auto* witness = add("witness", "t explicit representations of n as a sum of h elements", cmd_witness);
    set_flag(witness, true);
    witness->add_option("--t", o.t, "number of representations")->capture_default_str();
    witness->add_option("--h", o.h, "fold count")->required();
    witness->add_option("--n", o.n, "target integer")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    if (o.t < 1) {
        err << "error: --t must be positive\n";
        return kExitUsage;
    }

    std::ostringstream rendered;
    int status = kExitOk;
    try {
        for (const auto& [sub, handler] : commands)
            if (sub->parsed())
                status = handler(o, rendered, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const InvalidSetError& e) {
        err << "error: --set: " << e.what() << '\n';
        return kExitUsage;
    } catch (const OverflowError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitVerificationFailed;
    }

    if (o.output.empty()) {
        out << rendered.str();
    } else {
        std::ofstream file(o.output, std::ios::binary);
        if (!file) {
            err << "error: cannot open --output file '" << o.output << "'\n";
            return kExitUsage;
        }
        file << rendered.str();
    }
    return status;
}

} // namespace hfold::cli
