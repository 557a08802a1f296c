#include "commands.hpp"

#include "affine/afa.hpp"
#include "affine/afca.hpp"
#include "affine/machine_file.hpp"
#include "affine/zoo.hpp"

#include <fstream>
#include <ostream>
#include <stdexcept>

namespace affine::cli {

namespace {

void dump_vector(std::ostream &out, const AfaSpec &spec, const AffineVector &v)
{
    for (std::size_t i = 0; i < v.dimension(); ++i)
        out << spec.states[i] << ' ' << v[i] << '\n';
}

void print_triple(std::ostream &out, const OutcomeTriple &o, const char *third)
{
    out << "accept " << o.p_accept << "  reject " << o.p_reject << "  " << third << ' ' << o.p_neutral << '\n';
}

bool write_text(const std::filesystem::path &path, const std::string &text, std::ostream &out, std::ostream &err)
{
    if (path.empty()) {
        out << text;
        return true;
    }
    std::ofstream file(path, std::ios::binary);
    file << text;
    if (!file) {
        err << "error: cannot write '" << path.string() << "'\n";
        return false;
    }
    return true;
}

} // namespace

int cmd_validate(const std::filesystem::path &path, std::ostream &out, std::ostream &err)
{
    try {
        const Machine m = load_machine(path);
        out << "ok: " << type_name(m) << " machine is well-formed\n";
        return kExitOk;
    } catch (const ParseError &e) {
        err << path.string() << ": " << e.what() << '\n';
        return kExitFailure;
    }
}

int cmd_run(const std::filesystem::path &path, std::string_view word, bool show_state, std::ostream &out,
            std::ostream &err)
{
    Machine machine;
    try {
        machine = load_machine(path);
    } catch (const ParseError &e) {
        err << path.string() << ": " << e.what() << '\n';
        return kExitFailure;
    }

    try {
        std::visit(
            [&](const auto &spec) {
                using T = std::decay_t<decltype(spec)>;
                if constexpr (std::is_same_v<T, AfcaSpec>) {
                    const AfcaMachine m(spec);
                    const ConfigVector v = m.run(word);
                    out << "accept " << m.accept_prob(v) << '\n';
                    if (show_state)
                        out << "state\n" << to_string(v, spec.states);
                } else if constexpr (std::is_same_v<T, AfaSpec>) {
                    const AffineVector v = afa::run(spec, word);
                    out << "accept " << weigh(v, spec.accepting) << '\n';
                    if (show_state) {
                        out << "state\n";
                        dump_vector(out, spec, v);
                    }
                } else if constexpr (std::is_same_v<T, LasVegasAfaSpec>) {
                    print_triple(out, afa::lasvegas_outcome(spec, word), "neutral");
                    if (show_state) {
                        out << "state\n";
                        dump_vector(out, spec.base, afa::run(spec.base, word));
                    }
                } else {
                    const OutcomeTriple round = afa::round_outcome(spec, word);
                    print_triple(out, round, "restart");
                    const RestartAnalysis r = afa::restart_analysis(round, word.size());
                    out << "overall_accept " << r.overall_accept << '\n'
                        << "expected_rounds " << r.expected_rounds << '\n'
                        << "expected_steps " << r.expected_steps << '\n';
                    if (show_state) {
                        out << "state\n";
                        dump_vector(out, spec.base, afa::run(spec.base, word));
                    }
                }
            },
            machine);
    } catch (const InputError &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const NonterminationError &e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitOk;
}

std::string zoo_file(std::string_view name, std::optional<std::int64_t> k)
{
    auto need_k = [&]() {
        if (!k)
            throw std::invalid_argument("zoo machine '" + std::string(name) + "' needs --k");
        if (*k < 1)
            throw std::invalid_argument("--k must be at least 1");
        return *k;
    };
    std::string header = "# zoo " + std::string(name);
    Machine m;
    if (name == "end") {
        if (k)
            throw std::invalid_argument("zoo machine 'end' takes no --k");
        m = zoo::build_end();
    } else if (name == "pal-npal") {
        m = zoo::build_pal_npal(need_k());
    } else if (name == "pal-npal-restart") {
        m = zoo::build_pal_npal_restart(need_k());
    } else if (name == "manytwins") {
        m = zoo::build_manytwins(need_k());
    } else {
        throw std::invalid_argument("unknown zoo machine '" + std::string(name) +
                                    "' (expected end, pal-npal, pal-npal-restart or manytwins)");
    }
    if (k)
        header += " k=" + std::to_string(*k);
    return header + "\n" + serialize(m);
}

int cmd_zoo(std::string_view name, std::optional<std::int64_t> k, const std::filesystem::path &out_path,
            std::ostream &out, std::ostream &err)
{
    std::string text;
    try {
        text = zoo_file(name, k);
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return write_text(out_path, text, out, err) ? kExitOk : kExitFailure;
}

int cmd_sweep(const std::filesystem::path &path, const SweepOptions &options, const std::filesystem::path &out_path,
              std::ostream &out, std::ostream &err)
{
    Machine machine;
    try {
        machine = load_machine(path);
    } catch (const ParseError &e) {
        err << path.string() << ": " << e.what() << '\n';
        return kExitFailure;
    }

    SweepReport report;
    try {
        report = sweep(machine, options);
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    if (!write_text(out_path, report.tsv(), out, err))
        return kExitFailure;
    if (!out_path.empty())
        out << report.rows.size() << " words, " << report.failures << " failures, max error "
            << report.max_error << '\n';
    return report.failures == 0 ? kExitOk : kExitFailure;
}

} // namespace affine::cli
