#include "commgraph/io.hpp"

#include <fstream>
#include <sstream>

namespace cg {

namespace {

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

std::vector<std::uint64_t> parse_modulus_brackets(const std::string& tok) {
    require(tok.size() >= 2 && tok.front() == '[' && tok.back() == ']', Err::ParseError,
            "modulus must look like [c0,c1,...,ck]: " + tok);
    std::vector<std::uint64_t> c;
    std::string body = tok.substr(1, tok.size() - 2);
    std::istringstream in(body);
    std::string part;
    while (std::getline(in, part, ',')) {
        try {
            c.push_back(std::stoull(part));
        } catch (...) {
            fail(Err::ParseError, "bad modulus coefficient: " + part);
        }
    }
    require(!c.empty(), Err::ParseError, "empty modulus list");
    return c;
}

} // namespace

Field field_from_line(const std::string& line) {
    auto tok = split_ws(line);
    require(!tok.empty() && tok[0] == "field", Err::ParseError,
            "field line must start with 'field': " + line);
    require(tok.size() >= 2, Err::ParseError, "field line too short: " + line);
    if (tok[1] == "Q" || tok[1] == "q") {
        require(tok.size() == 2, Err::ParseError, "trailing tokens after 'field Q'");
        return Field::rationals();
    }
    require(tok[1] == "gf", Err::ParseError, "unknown field kind: " + tok[1]);
    require(tok.size() >= 3, Err::ParseError, "field gf needs a characteristic");
    std::uint64_t p = 0;
    unsigned k = 1;
    try {
        p = std::stoull(tok[2]);
        if (tok.size() >= 4) k = (unsigned)std::stoul(tok[3]);
    } catch (...) {
        fail(Err::ParseError, "bad field parameters: " + line);
    }
    if (tok.size() >= 5) {
        auto c = parse_modulus_brackets(tok[4]);
        return Field::finite(p, k, c);
    }
    return Field::finite(p, k);
}

json field_to_json(const Field& f) {
    json j;
    if (f.is_rational()) {
        j["kind"] = "rational";
    } else {
        j["kind"] = "finite";
        j["p"] = f.p();
        j["k"] = f.k();
        if (f.k() > 1) j["modulus"] = f.modulus();
    }
    return j;
}

Field field_from_json(const json& j) {
    require(j.is_object() && j.contains("kind"), Err::ParseError, "field json needs a kind");
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "rational") return Field::rationals();
    require(kind == "finite", Err::ParseError, "unknown field kind: " + kind);
    std::uint64_t p = j.at("p").get<std::uint64_t>();
    unsigned k = j.value("k", 1u);
    if (j.contains("modulus")) {
        return Field::finite(p, k, j.at("modulus").get<std::vector<std::uint64_t>>());
    }
    return Field::finite(p, k);
}

std::string matrix_to_text(const Matrix& m) {
    std::ostringstream os;
    os << m.rows() << " " << m.cols() << "\n";
    const Field& f = m.field();
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            if (j) os << " ";
            os << f.to_string(m.at(i, j));
        }
        os << "\n";
    }
    return os.str();
}

Matrix matrix_from_text(const Field& f, const std::string& text) {
    std::istringstream in(text);
    int r = 0, c = 0;
    if (!(in >> r >> c)) fail(Err::ParseError, "matrix text must start with 'rows cols'");
    require(r >= 1 && c >= 1, Err::ParseError, "matrix dimensions must be positive");
    Matrix m(f, r, c);
    std::string tok;
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < c; ++j) {
            if (!(in >> tok)) fail(Err::ParseError, "matrix text ended early");
            m.set(i, j, f.parse(tok));
        }
    }
    if (in >> tok) fail(Err::ParseError, "trailing tokens after matrix entries: " + tok);
    return m;
}

json matrix_to_json(const Matrix& m) {
    json j;
    j["field"] = field_to_json(m.field());
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    json rows = json::array();
    const Field& f = m.field();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int k = 0; k < m.cols(); ++k) row.push_back(f.to_string(m.at(i, k)));
        rows.push_back(std::move(row));
    }
    j["entries"] = std::move(rows);
    return j;
}

Matrix matrix_from_json(const json& j) {
    require(j.is_object(), Err::ParseError, "matrix json must be an object");
    Field f = field_from_json(j.at("field"));
    int r = j.at("rows").get<int>();
    int c = j.at("cols").get<int>();
    require(r >= 1 && c >= 1, Err::ParseError, "matrix dimensions must be positive");
    const auto& rows = j.at("entries");
    require(rows.is_array() && (int)rows.size() == r, Err::ParseError, "entry row count mismatch");
    Matrix m(f, r, c);
    for (int i = 0; i < r; ++i) {
        const auto& row = rows.at((std::size_t)i);
        require(row.is_array() && (int)row.size() == c, Err::ParseError,
                "entry column count mismatch");
        for (int k = 0; k < c; ++k) m.set(i, k, f.parse(row.at((std::size_t)k).get<std::string>()));
    }
    return m;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    require(in.good(), Err::ParseError, "cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    require(out.good(), Err::ParseError, "cannot open file for writing: " + path);
    out << content;
    require(out.good(), Err::ParseError, "write failed: " + path);
}

Matrix read_matrix_file(const std::string& path, const std::optional<Field>& field_hint) {
    std::string text = read_text_file(path);
    // Skip comment/blank lines, honor a leading field line.
    std::istringstream in(text);
    std::string line;
    std::optional<Field> f = field_hint;
    std::ostringstream rest;
    bool header_done = false;
    while (std::getline(in, line)) {
        std::string trimmed = line;
        auto pos = trimmed.find_first_not_of(" \t\r");
        trimmed = pos == std::string::npos ? "" : trimmed.substr(pos);
        if (!header_done) {
            if (trimmed.empty() || trimmed[0] == '#') continue;
            if (trimmed.rfind("field", 0) == 0) {
                f = field_from_line(trimmed);
                header_done = true;
                continue;
            }
            header_done = true;
        }
        rest << line << "\n";
    }
    require(f.has_value(), Err::ParseError,
            "no field line in " + path + " and no field given on the command line");
    return matrix_from_text(*f, rest.str());
}

JordanSpec parse_jordan_spec(const Field& f, const std::string& text) {
    JordanSpec spec;
    std::istringstream in(text);
    std::string part;
    while (std::getline(in, part, ',')) {
        auto colon = part.find(':');
        require(colon != std::string::npos, Err::ParseError,
                "block must be size:eigenvalue, got " + part);
        int size = 0;
        try {
            size = std::stoi(part.substr(0, colon));
        } catch (...) {
            fail(Err::ParseError, "bad block size in " + part);
        }
        require(size >= 1, Err::ParseError, "block size must be >= 1");
        spec.blocks.push_back(JordanBlockSpec{f.parse(part.substr(colon + 1)), size});
    }
    require(!spec.blocks.empty(), Err::ParseError, "empty block spec");
    return spec;
}

std::string jordan_spec_to_string(const Field& f, const JordanSpec& spec) {
    std::ostringstream os;
    for (std::size_t i = 0; i < spec.blocks.size(); ++i) {
        if (i) os << ",";
        os << spec.blocks[i].size << ":" << f.to_string(spec.blocks[i].eigenvalue);
    }
    return os.str();
}

} // namespace cg
