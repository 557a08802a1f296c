#include "affine/machine_file.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace affine {

namespace {

struct Token {
    std::string text;
    std::size_t column; // 1-based
};

struct Line {
    std::size_t number;
    std::vector<Token> tokens;
};

std::vector<Line> tokenize(std::string_view text)
{
    std::vector<Line> lines;
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view raw = text.substr(pos, end - pos);
        ++number;
        if (auto hash = raw.find('#'); hash != std::string_view::npos)
            raw = raw.substr(0, hash);
        Line line{number, {}};
        std::size_t i = 0;
        while (i < raw.size()) {
            while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r'))
                ++i;
            std::size_t start = i;
            while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t' && raw[i] != '\r')
                ++i;
            if (i > start)
                line.tokens.push_back({std::string(raw.substr(start, i - start)), start + 1});
        }
        if (!line.tokens.empty())
            lines.push_back(std::move(line));
        if (end == text.size())
            break;
        pos = end + 1;
    }
    return lines;
}

enum class Kind { Afa, Afca, LasVegas, Restart };

class Parser {
public:
    explicit Parser(std::string_view text) : lines_(tokenize(text)) {}

    Machine parse();

private:
    [[noreturn]] void fail(const Line &line, const Token &tok, const std::string &what) const
    {
        throw ParseError(line.number, tok.column, what);
    }
    [[noreturn]] void fail(const Line &line, const std::string &what) const
    {
        throw ParseError(line.number, 1, what);
    }

    void expect_arity(const Line &line, std::size_t n) const;
    void once(const Line &line);
    void require_states(const Line &line) const;
    std::size_t state(const Line &line, const Token &tok) const;
    StateSet state_set(const Line &line) const;
    Symbol symbol(const Line &line, const Token &tok, bool markers) const;
    Rational rational(const Line &line, const Token &tok) const;

    void parse_matrix(std::size_t &index);
    void parse_transition(const Line &line);

    std::vector<Line> lines_;
    std::set<std::string> seen_;
    std::optional<Kind> kind_;
    std::vector<std::string> states_;
    std::optional<std::string> alphabet_;
    std::optional<std::size_t> initial_;
    StateSet accepting_, rejecting_, third_;
    std::size_t counters_ = 1;
    AcceptMode mode_ = AcceptMode::StateOnly;
    std::map<Symbol, AffineMatrix> matrices_;
    std::vector<AfcaTransition> transitions_;
    std::set<std::tuple<std::size_t, Symbol, std::vector<StatusPattern>, std::size_t, std::vector<int>>> records_;
};

void Parser::expect_arity(const Line &line, std::size_t n) const
{
    if (line.tokens.size() != n)
        fail(line, "'" + line.tokens[0].text + "' expects " + std::to_string(n - 1) + " argument(s)");
}

void Parser::once(const Line &line)
{
    if (!seen_.insert(line.tokens[0].text).second)
        fail(line, "duplicate '" + line.tokens[0].text + "' directive");
}

void Parser::require_states(const Line &line) const
{
    if (states_.empty())
        fail(line, "'" + line.tokens[0].text + "' must follow the 'states' directive");
}

std::size_t Parser::state(const Line &line, const Token &tok) const
{
    for (std::size_t i = 0; i < states_.size(); ++i)
        if (states_[i] == tok.text)
            return i;
    fail(line, tok, "unknown state '" + tok.text + "'");
}

StateSet Parser::state_set(const Line &line) const
{
    require_states(line);
    StateSet out;
    for (std::size_t i = 1; i < line.tokens.size(); ++i)
        if (!out.insert(state(line, line.tokens[i])).second)
            fail(line, line.tokens[i], "state '" + line.tokens[i].text + "' listed twice");
    return out;
}

Symbol Parser::symbol(const Line &line, const Token &tok, bool markers) const
{
    if (tok.text.size() == 1) {
        const Symbol s = tok.text[0];
        if (markers && (s == kLeftMarker || s == kRightMarker))
            return s;
        if (alphabet_ && alphabet_->find(s) != std::string::npos)
            return s;
    }
    fail(line, tok, "unknown symbol '" + tok.text + "'");
}

Rational Parser::rational(const Line &line, const Token &tok) const
{
    try {
        return Rational::parse(tok.text);
    } catch (const std::invalid_argument &e) {
        fail(line, tok, e.what());
    }
}

void Parser::parse_matrix(std::size_t &index)
{
    const Line &head = lines_[index];
    if (*kind_ == Kind::Afca)
        fail(head, "'matrix' is not allowed in an afca machine");
    require_states(head);
    if (!alphabet_)
        fail(head, "'matrix' must follow the 'alphabet' directive");
    expect_arity(head, 2);
    const Symbol s = symbol(head, head.tokens[1], true);
    if (matrices_.contains(s))
        fail(head, head.tokens[1], std::string("duplicate matrix for symbol '") + s + "'");

    const std::size_t n = states_.size();
    std::vector<std::vector<Rational>> rows;
    for (std::size_t r = 0; r < n; ++r) {
        if (++index >= lines_.size())
            throw ParseError(head.number, 1, "matrix for symbol '" + std::string(1, s) +
                                                 "' ends after " + std::to_string(r) + " of " +
                                                 std::to_string(n) + " rows");
        const Line &row = lines_[index];
        if (row.tokens.size() != n)
            fail(row, "matrix row has " + std::to_string(row.tokens.size()) + " entries, expected " +
                          std::to_string(n));
        std::vector<Rational> values;
        for (const Token &tok : row.tokens)
            values.push_back(rational(row, tok));
        rows.push_back(std::move(values));
    }
    matrices_.emplace(s, AffineMatrix::from_rows(rows));
}

void Parser::parse_transition(const Line &line)
{
    if (*kind_ != Kind::Afca)
        fail(line, "transition records are only allowed in an afca machine");
    require_states(line);
    if (!alphabet_)
        fail(line, "transition records must follow the 'alphabet' directive");
    const std::size_t k = counters_;
    expect_arity(line, 5 + 2 * k);

    AfcaTransition t;
    t.from = state(line, line.tokens[1]);
    t.symbol = symbol(line, line.tokens[2], true);
    for (std::size_t i = 0; i < k; ++i) {
        const Token &tok = line.tokens[3 + i];
        if (tok.text == "Z")
            t.status.push_back(StatusPattern::Zero);
        else if (tok.text == "N")
            t.status.push_back(StatusPattern::NonZero);
        else if (tok.text == "*")
            t.status.push_back(StatusPattern::Any);
        else
            fail(line, tok, "counter status must be Z, N or *, got '" + tok.text + "'");
    }
    t.to = state(line, line.tokens[3 + k]);
    for (std::size_t i = 0; i < k; ++i) {
        const Token &tok = line.tokens[4 + k + i];
        if (tok.text == "-1")
            t.moves.push_back(-1);
        else if (tok.text == "0")
            t.moves.push_back(0);
        else if (tok.text == "+1" || tok.text == "1")
            t.moves.push_back(1);
        else
            fail(line, tok, "counter move must be -1, 0 or +1, got '" + tok.text + "'");
    }
    t.value = rational(line, line.tokens[4 + 2 * k]);
    if (!records_.emplace(t.from, t.symbol, t.status, t.to, t.moves).second)
        fail(line, "duplicate transition record");
    transitions_.push_back(std::move(t));
}

Machine Parser::parse()
{
    if (lines_.empty())
        throw ParseError(1, 1, "empty machine file: expected a 'type' directive");

    for (std::size_t index = 0; index < lines_.size(); ++index) {
        const Line &line = lines_[index];
        const std::string &d = line.tokens[0].text;

        if (!kind_) {
            if (d != "type")
                fail(line, "the first directive must be 'type'");
            expect_arity(line, 2);
            once(line);
            const std::string &v = line.tokens[1].text;
            if (v == "afa")
                kind_ = Kind::Afa;
            else if (v == "afca")
                kind_ = Kind::Afca;
            else if (v == "lasvegas")
                kind_ = Kind::LasVegas;
            else if (v == "restart")
                kind_ = Kind::Restart;
            else
                fail(line, line.tokens[1], "unknown machine type '" + v + "'");
            continue;
        }

        if (d == "t") {
            parse_transition(line);
        } else if (d == "matrix") {
            parse_matrix(index);
        } else if (d == "type") {
            once(line);
        } else if (d == "states") {
            once(line);
            if (line.tokens.size() < 2)
                fail(line, "'states' needs at least one name");
            for (std::size_t i = 1; i < line.tokens.size(); ++i) {
                const std::string &name = line.tokens[i].text;
                for (const auto &prev : states_)
                    if (prev == name)
                        fail(line, line.tokens[i], "duplicate state '" + name + "'");
                states_.push_back(name);
            }
        } else if (d == "alphabet") {
            once(line);
            std::string alphabet;
            for (std::size_t i = 1; i < line.tokens.size(); ++i) {
                const Token &tok = line.tokens[i];
                if (tok.text.size() != 1 || !is_valid_input_symbol(tok.text[0]))
                    fail(line, tok, "invalid alphabet symbol '" + tok.text + "'");
                if (alphabet.find(tok.text[0]) != std::string::npos)
                    fail(line, tok, "duplicate alphabet symbol '" + tok.text + "'");
                alphabet += tok.text[0];
            }
            alphabet_ = alphabet;
        } else if (d == "initial") {
            once(line);
            require_states(line);
            expect_arity(line, 2);
            initial_ = state(line, line.tokens[1]);
        } else if (d == "accepting") {
            once(line);
            accepting_ = state_set(line);
        } else if (d == "rejecting") {
            once(line);
            if (*kind_ != Kind::LasVegas && *kind_ != Kind::Restart)
                fail(line, "'rejecting' is only allowed in lasvegas and restart machines");
            rejecting_ = state_set(line);
        } else if (d == "neutral" || d == "restarting") {
            once(line);
            const Kind wanted = d == "neutral" ? Kind::LasVegas : Kind::Restart;
            if (*kind_ != wanted)
                fail(line, "'" + d + "' is only allowed in " + (d == "neutral" ? "lasvegas" : "restart") +
                               " machines");
            third_ = state_set(line);
        } else if (d == "counters") {
            once(line);
            if (*kind_ != Kind::Afca)
                fail(line, "'counters' is only allowed in an afca machine");
            if (!transitions_.empty())
                fail(line, "'counters' must precede the transition records");
            expect_arity(line, 2);
            const std::string &v = line.tokens[1].text;
            if (v.empty() || v.size() > 2 || v.find_first_not_of("0123456789") != std::string::npos ||
                std::stoul(v) < 1 || std::stoul(v) > 16)
                fail(line, line.tokens[1], "counter count must be an integer between 1 and 16");
            counters_ = std::stoul(v);
        } else if (d == "accept-mode") {
            once(line);
            if (*kind_ != Kind::Afca)
                fail(line, "'accept-mode' is only allowed in an afca machine");
            expect_arity(line, 2);
            if (line.tokens[1].text == "states")
                mode_ = AcceptMode::StateOnly;
            else if (line.tokens[1].text == "blind")
                mode_ = AcceptMode::Blind;
            else
                fail(line, line.tokens[1], "accept-mode must be 'states' or 'blind'");
        } else {
            fail(line, "unknown directive '" + d + "'");
        }
    }

    const std::size_t last = lines_.back().number;
    if (states_.empty())
        throw ParseError(last, 1, "missing 'states' directive");
    if (!alphabet_)
        throw ParseError(last, 1, "missing 'alphabet' directive");
    if (!initial_)
        throw ParseError(last, 1, "missing 'initial' directive");

    Machine machine;
    if (*kind_ == Kind::Afca) {
        machine = AfcaSpec{states_, *alphabet_, counters_, transitions_, *initial_, accepting_, mode_};
    } else {
        AfaSpec base{states_, *alphabet_, matrices_, *initial_, accepting_};
        switch (*kind_) {
        case Kind::LasVegas:
            machine = LasVegasAfaSpec{std::move(base), rejecting_, third_};
            break;
        case Kind::Restart:
            machine = RestartAfaSpec{std::move(base), rejecting_, third_};
            break;
        default:
            machine = std::move(base);
        }
    }

    if (ValidationReport report = validate(machine); !report.ok())
        throw ParseError(0, 0, "machine is not well-formed:\n" + report.str());
    return machine;
}

std::string join_states(const std::vector<std::string> &names, const StateSet &set)
{
    std::string out;
    for (std::size_t i : set) {
        out += ' ';
        out += i < names.size() ? names[i] : std::to_string(i);
    }
    return out;
}

void write_afa_header(std::ostringstream &os, const char *type, const AfaSpec &spec)
{
    os << "type " << type << '\n';
    os << "states";
    for (const auto &s : spec.states)
        os << ' ' << s;
    os << "\nalphabet";
    for (Symbol s : spec.alphabet)
        os << ' ' << s;
    os << "\ninitial " << spec.states.at(spec.initial) << '\n';
    os << "accepting" << join_states(spec.states, spec.accepting) << '\n';
}

void write_matrices(std::ostringstream &os, const AfaSpec &spec)
{
    std::string order = std::string(1, kLeftMarker) + spec.alphabet + kRightMarker;
    for (const auto &[s, m] : spec.matrices)
        if (order.find(s) == std::string::npos)
            order += s;
    for (Symbol s : order) {
        auto it = spec.matrices.find(s);
        if (it == spec.matrices.end())
            continue;
        os << "matrix " << s << '\n';
        for (const auto &row : it->second.rows()) {
            for (std::size_t i = 0; i < row.size(); ++i)
                os << (i ? " " : "") << row[i].compact_str();
            os << '\n';
        }
    }
}

char status_token(StatusPattern p)
{
    switch (p) {
    case StatusPattern::Zero:
        return 'Z';
    case StatusPattern::NonZero:
        return 'N';
    case StatusPattern::Any:
        break;
    }
    return '*';
}

} // namespace

const char *type_name(const Machine &m) noexcept
{
    switch (m.index()) {
    case 0:
        return "afa";
    case 1:
        return "afca";
    case 2:
        return "lasvegas";
    default:
        return "restart";
    }
}

Machine parse_machine(std::string_view text)
{
    return Parser(text).parse();
}

Machine load_machine(const std::filesystem::path &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError(0, 0, "cannot read '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_machine(buf.str());
}

std::string serialize(const Machine &machine)
{
    std::ostringstream os;
    std::visit(
        [&](const auto &spec) {
            using T = std::decay_t<decltype(spec)>;
            if constexpr (std::is_same_v<T, AfaSpec>) {
                write_afa_header(os, "afa", spec);
                write_matrices(os, spec);
            } else if constexpr (std::is_same_v<T, LasVegasAfaSpec>) {
                write_afa_header(os, "lasvegas", spec.base);
                os << "rejecting" << join_states(spec.base.states, spec.rejecting) << '\n';
                os << "neutral" << join_states(spec.base.states, spec.neutral) << '\n';
                write_matrices(os, spec.base);
            } else if constexpr (std::is_same_v<T, RestartAfaSpec>) {
                write_afa_header(os, "restart", spec.base);
                os << "rejecting" << join_states(spec.base.states, spec.rejecting) << '\n';
                os << "restarting" << join_states(spec.base.states, spec.restarting) << '\n';
                write_matrices(os, spec.base);
            } else {
                os << "type afca\n";
                os << "counters " << spec.counters << '\n';
                os << "accept-mode " << (spec.accept_mode == AcceptMode::Blind ? "blind" : "states") << '\n';
                os << "states";
                for (const auto &s : spec.states)
                    os << ' ' << s;
                os << "\nalphabet";
                for (Symbol s : spec.alphabet)
                    os << ' ' << s;
                os << "\ninitial " << spec.states.at(spec.initial) << '\n';
                os << "accepting" << join_states(spec.states, spec.accepting) << '\n';
                for (const AfcaTransition &t : spec.transitions) {
                    os << "t " << spec.states.at(t.from) << ' ' << t.symbol;
                    for (StatusPattern p : t.status)
                        os << ' ' << status_token(p);
                    os << ' ' << spec.states.at(t.to);
                    for (int d : t.moves)
                        os << ' ' << (d > 0 ? "+1" : d < 0 ? "-1" : "0");
                    os << ' ' << t.value.compact_str() << '\n';
                }
            }
        },
        machine);
    return os.str();
}

ValidationReport validate(const Machine &m)
{
    return std::visit(
        [](const auto &spec) {
            using T = std::decay_t<decltype(spec)>;
            if constexpr (std::is_same_v<T, AfcaSpec>)
                return afca::validate(spec);
            else
                return afa::validate(spec);
        },
        m);
}

} // namespace affine
