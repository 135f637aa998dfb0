#include "runup/csv_io.hpp"
#include "runup/errors.hpp"

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace runup {

namespace {

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> data; // per column
};

std::vector<std::string> split_csv(const std::string& line)
{
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    out.push_back(cur);
    for (auto& s : out) {
        const auto b = s.find_first_not_of(" \t");
        const auto e = s.find_last_not_of(" \t");
        s = b == std::string::npos ? "" : s.substr(b, e - b + 1);
    }
    return out;
}

Table read_table(const std::string& path, std::string& units)
{
    std::ifstream in(path);
    if (!in)
        throw io_error("cannot open " + path);
    Table tb;
    std::string line;
    int lineno = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        if (line[0] == '#') {
            const auto pos = line.find("units:");
            if (pos != std::string::npos) {
                std::string u = line.substr(pos + 6);
                const auto b = u.find_first_not_of(" \t");
                const auto e = u.find_last_not_of(" \t\r,");
                if (b != std::string::npos)
                    units = u.substr(b, e - b + 1);
            }
            continue;
        }
        auto cells = split_csv(line);
        if (!header_seen) {
            tb.columns = cells;
            tb.data.resize(cells.size());
            header_seen = true;
            continue;
        }
        if (cells.size() != tb.columns.size()) {
            std::ostringstream os;
            os << path << ": line " << lineno << ": expected " << tb.columns.size()
               << " fields, got " << cells.size();
            throw io_error(os.str());
        }
        for (std::size_t c = 0; c < cells.size(); ++c) {
            // strtod instead of stod: values that underflow to subnormals
            // are legitimate data, not parse errors
            char* end = nullptr;
            const double v = std::strtod(cells[c].c_str(), &end);
            if (cells[c].empty() || end != cells[c].c_str() + cells[c].size()
                || !std::isfinite(v)) {
                std::ostringstream os;
                os << path << ": line " << lineno << ": bad number '" << cells[c] << "'";
                throw io_error(os.str());
            }
            tb.data[c].push_back(v);
        }
    }
    if (!header_seen)
        throw io_error(path + ": no header row found");
    return tb;
}

int find_column(const Table& tb, const std::string& name, const std::string& path,
                bool required = true)
{
    for (std::size_t c = 0; c < tb.columns.size(); ++c)
        if (tb.columns[c] == name)
            return int(c);
    if (required)
        throw io_error(path + ": missing required column '" + name + "'");
    return -1;
}

std::ofstream open_out(const std::string& path)
{
    std::ofstream out(path);
    if (!out)
        throw io_error("cannot write " + path);
    out << std::setprecision(17);
    return out;
}

void write_header(std::ofstream& out, const std::string& type, const std::string& units)
{
    out << "# runup-csv v1\n";
    out << "# type: " << type << ", units: " << units << "\n";
}

} // namespace

ProfileCsv read_profile_csv(const std::string& path)
{
    ProfileCsv p;
    Table tb = read_table(path, p.units);
    const int cx = find_column(tb, "x", path);
    const int ce = find_column(tb, "eta0", path);
    p.x = tb.data[cx];
    p.eta0 = tb.data[ce];
    if (p.x.size() < 2)
        throw io_error(path + ": profile needs at least 2 rows");
    return p;
}

RecordCsv read_record_csv(const std::string& path)
{
    RecordCsv r;
    Table tb = read_table(path, r.units);
    const int ct = find_column(tb, "t", path);
    const int cx = find_column(tb, "x0", path);
    const int cv = find_column(tb, "v0", path, /*required=*/false);
    r.record.t = tb.data[ct];
    r.record.x0 = tb.data[cx];
    if (cv >= 0)
        r.record.v0 = tb.data[cv];
    if (r.record.t.size() < 2)
        throw io_error(path + ": record needs at least 2 rows");
    return r;
}

void write_profile_csv(const std::string& path, const std::vector<double>& x,
                       const std::vector<double>& eta0, const std::string& units)
{
    auto out = open_out(path);
    write_header(out, "profile", units);
    out << "x,eta0\n";
    for (std::size_t i = 0; i < x.size(); ++i)
        out << x[i] << "," << eta0[i] << "\n";
}

void write_record_csv(const std::string& path, const ShorelineRecord& r,
                      const std::string& units)
{
    auto out = open_out(path);
    write_header(out, "record", units);
    const bool with_v0 = r.v0.size() == r.t.size();
    out << (with_v0 ? "t,x0,v0\n" : "t,x0\n");
    for (std::size_t i = 0; i < r.t.size(); ++i) {
        out << r.t[i] << "," << r.x0[i];
        if (with_v0)
            out << "," << r.v0[i];
        out << "\n";
    }
}

void write_trace_csv(const std::string& path, const ShorelineTrace& tr,
                     const std::string& units)
{
    auto out = open_out(path);
    write_header(out, "trace", units);
    const bool with_v = tr.V.size() == tr.tau.size();
    out << (with_v ? "tau,Psi,V\n" : "tau,Psi\n");
    for (std::size_t i = 0; i < tr.tau.size(); ++i) {
        out << tr.tau[i] << "," << tr.Psi[i];
        if (with_v)
            out << "," << tr.V[i];
        out << "\n";
    }
}

void write_field_csv(const std::string& path, const HodographField& f,
                     const std::string& units)
{
    auto out = open_out(path);
    write_header(out, "field", units);
    out << "sigma,tau,psi,phi\n";
    for (std::size_t n = 0; n < f.tau.size(); ++n)
        for (std::size_t i = 0; i < f.sigma.size(); ++i)
            out << f.sigma[i] << "," << f.tau[n] << ","
                << f.psi_at(n, i) << "," << f.phi_at(n, i) << "\n";
}

std::string file_digest(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw io_error("cannot open " + path);
    std::uint64_t h = 1469598103934665603ull;
    char c;
    while (in.get(c)) {
        h ^= std::uint8_t(c);
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

} // namespace runup
