#include "boxsum/opscript.hpp"

#include <charconv>

namespace boxsum {

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        if (i >= line.size()) break;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        tokens.push_back(line.substr(i, j - i));
        i = j;
    }
    return tokens;
}

std::int64_t parse_int(std::string_view token, std::size_t line, const char* what) {
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec == std::errc::result_out_of_range) {
        throw ScriptError(line, std::string(what) + " '" + std::string(token) + "' out of 64-bit range");
    }
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw ScriptError(line, std::string("malformed ") + what + " '" + std::string(token) + "'");
    }
    return value;
}

Box parse_box(const std::vector<std::string_view>& tokens, std::size_t first, int dim,
              std::int64_t side, std::size_t line) {
    Box b;
    b.lo.resize(dim);
    b.hi.resize(dim);
    for (int i = 0; i < dim; ++i) b.lo[i] = parse_int(tokens[first + i], line, "coordinate");
    for (int i = 0; i < dim; ++i) b.hi[i] = parse_int(tokens[first + dim + i], line, "coordinate");
    for (int i = 0; i < dim; ++i) {
        if (b.lo[i] < 1 || b.lo[i] > side || b.hi[i] < 1 || b.hi[i] > side) {
            throw ScriptError(line, "coordinate outside [1, " + std::to_string(side) + "]");
        }
        if (b.lo[i] > b.hi[i]) {
            throw ScriptError(line, "empty box: lo " + std::to_string(b.lo[i]) + " > hi " +
                                        std::to_string(b.hi[i]) + " in dimension " + std::to_string(i + 1));
        }
    }
    return b;
}

}  // namespace

OpScript parse_script(std::string_view text) {
    OpScript script;
    bool have_init = false;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
        ++line_no;
        pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;

        if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        const auto tokens = split_tokens(line);
        if (tokens.empty()) continue;

        if (!have_init) {
            if (tokens[0] != "init") throw ScriptError(line_no, "expected 'init <d> <n>'");
            if (tokens.size() != 3) throw ScriptError(line_no, "init takes exactly 2 arguments");
            const std::int64_t d = parse_int(tokens[1], line_no, "dimension");
            const std::int64_t n = parse_int(tokens[2], line_no, "side length");
            if (d < 1 || d > kMaxDim) throw ScriptError(line_no, "dimension must be in [1, 32]");
            if (n < 1) throw ScriptError(line_no, "side length must be >= 1");
            script.dim = static_cast<int>(d);
            script.side = n;
            have_init = true;
            continue;
        }

        const std::size_t box_tokens = 2 * static_cast<std::size_t>(script.dim);
        if (tokens[0] == "update") {
            if (tokens.size() != box_tokens + 2) {
                throw ScriptError(line_no, "update takes " + std::to_string(box_tokens + 1) +
                                               " arguments for dimension " + std::to_string(script.dim));
            }
            Operation op;
            op.kind = Operation::Kind::update;
            op.box = parse_box(tokens, 1, script.dim, script.side, line_no);
            op.constant = parse_int(tokens[box_tokens + 1], line_no, "constant");
            script.ops.push_back(std::move(op));
        } else if (tokens[0] == "query") {
            if (tokens.size() != box_tokens + 1) {
                throw ScriptError(line_no, "query takes " + std::to_string(box_tokens) +
                                               " arguments for dimension " + std::to_string(script.dim));
            }
            Operation op;
            op.kind = Operation::Kind::query;
            op.box = parse_box(tokens, 1, script.dim, script.side, line_no);
            script.ops.push_back(std::move(op));
        } else {
            throw ScriptError(line_no, "unknown operation '" + std::string(tokens[0]) + "'");
        }
    }

    if (!have_init) throw ScriptError(line_no, "script has no init line");
    return script;
}

std::string format_script(const OpScript& script) {
    std::string out = "init " + std::to_string(script.dim) + " " + std::to_string(script.side) + "\n";
    for (const Operation& op : script.ops) {
        out += op.kind == Operation::Kind::update ? "update" : "query";
        for (const std::int64_t v : op.box.lo) out += " " + std::to_string(v);
        for (const std::int64_t v : op.box.hi) out += " " + std::to_string(v);
        if (op.kind == Operation::Kind::update) out += " " + std::to_string(op.constant);
        out += "\n";
    }
    return out;
}

}  // namespace boxsum
