#include "asq/io.hpp"

#include <cstdio>
#include <fstream>

#include <json.hpp>

namespace asq {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.15g", v);
    return buf;
}

std::string RunManifest::to_json() const {
    nlohmann::ordered_json j;
    j["command"] = command;
    j["parameters"] = parameters;
    j["seed"] = seed;
    j["rng_algorithm"] = rng_algorithm;
    j["version"] = version;
    j["timestamp"] = timestamp;
    return j.dump(2);
}

void write_csv(const std::vector<ScanRecord>& records, std::ostream& os) {
    if (records.empty()) {
        os << "experiment,index,as_lhs,classification,rank,prob_plus,skipped\n";
        return;
    }
    const ScanRecord& first = records.front();
    os << "experiment,index";
    for (const auto& [name, _] : first.params) os << ',' << name;
    for (std::size_t i = 0; i < first.eigenvalues.size(); ++i) os << ",eig" << i + 1;
    os << ",as_lhs,classification,rank,prob_plus,skipped\n";
    for (const ScanRecord& rec : records) {
        os << rec.experiment << ',' << rec.index;
        for (const auto& [_, value] : rec.params) os << ',' << format_double(value);
        for (double ev : rec.eigenvalues) os << ',' << format_double(ev);
        os << ',' << format_double(rec.as_lhs) << ',' << rec.classification << ',' << rec.rank
           << ',' << format_double(rec.prob_plus) << ',' << (rec.skipped ? 1 : 0) << '\n';
    }
}

void write_csv_file(const std::vector<ScanRecord>& records, const std::string& path) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open output file: " + path);
    write_csv(records, os);
}

void write_manifest_file(const RunManifest& manifest, const std::string& path) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open manifest file: " + path);
    os << manifest.to_json() << '\n';
}

ComplexMatrix load_matrix_json(const std::string& path, BipartiteDims& dims_out) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open matrix file: " + path);
    nlohmann::json j = nlohmann::json::parse(is);
    auto dims = j.at("dims").get<std::vector<Eigen::Index>>();
    if (dims.size() != 2 || dims[0] < 1 || dims[1] < 1)
        throw InvalidStateError("matrix JSON: dims must be [dA, dB]");
    dims_out = BipartiteDims{dims[0], dims[1]};
    const Eigen::Index n = dims_out.total();
    auto re = j.at("re").get<std::vector<double>>();
    auto im = j.at("im").get<std::vector<double>>();
    if (re.size() != static_cast<std::size_t>(n * n) || im.size() != re.size())
        throw InvalidStateError("matrix JSON: entry arrays do not match dims");
    ComplexMatrix m(n, n);
    for (Eigen::Index r = 0; r < n; ++r)
        for (Eigen::Index c = 0; c < n; ++c)
            m(r, c) = Complex(re[r * n + c], im[r * n + c]);
    return m;
}

void save_matrix_json(const ComplexMatrix& m, const BipartiteDims& dims, const std::string& path) {
    const Eigen::Index n = m.rows();
    nlohmann::ordered_json j;
    j["dims"] = {dims.dA, dims.dB};
    std::vector<double> re, im;
    re.reserve(n * n);
    im.reserve(n * n);
    for (Eigen::Index r = 0; r < n; ++r)
        for (Eigen::Index c = 0; c < n; ++c) {
            re.push_back(m(r, c).real());
            im.push_back(m(r, c).imag());
        }
    j["re"] = re;
    j["im"] = im;
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open matrix file: " + path);
    os << j.dump() << '\n';
}

DensityMatrix load_density_matrix(const std::string& path) {
    BipartiteDims dims;
    ComplexMatrix m = load_matrix_json(path, dims);
    if (hermiticity_defect(m) > 1e-8)
        throw InvalidStateError("matrix JSON: not Hermitian within 1e-8");
    if (std::abs(m.trace().real() - 1.0) > 1e-8 || std::abs(m.trace().imag()) > 1e-8)
        throw InvalidStateError("matrix JSON: trace deviates from 1 beyond 1e-8");
    return DensityMatrix(std::move(m), dims);
}

UnitaryMatrix load_unitary(const std::string& path) {
    BipartiteDims dims;
    return UnitaryMatrix(load_matrix_json(path, dims));
}

}  // namespace asq
