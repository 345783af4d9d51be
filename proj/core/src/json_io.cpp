#include "twf/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace twf {

using nlohmann::json;

std::string spec_to_json(const GroupSpec& spec) {
    json j;
    switch (spec.kind()) {
        case SystemKind::FiniteWeyl:
            j = {{"kind", "weyl"}, {"d", spec.d()}, {"modes", spec.modes()}};
            break;
        case SystemKind::Fermionic:
            j = {{"kind", "fermionic"}, {"modes", spec.modes()}};
            break;
        case SystemKind::MixedSpin:
            j = {{"kind", "mixed"}, {"eps", spec.eps().entries()}};
            break;
    }
    return j.dump();
}

GroupSpec spec_from_json(const std::string& text) {
    json j = json::parse(text);
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "weyl") return GroupSpec::finite_weyl(j.at("d").get<int>(), j.at("modes").get<int>());
    if (kind == "fermionic") return GroupSpec::fermionic(j.at("modes").get<int>());
    if (kind == "mixed")
        return GroupSpec::mixed_spin(SignTable(j.at("eps").get<std::vector<std::vector<int>>>()));
    throw std::invalid_argument("unknown system kind: " + kind);
}

std::string matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            row.push_back({m(i, j).real(), m(i, j).imag()});
        rows.push_back(row);
    }
    return rows.dump();
}

Matrix matrix_from_json(const std::string& text) {
    json j = json::parse(text);
    if (!j.is_array() || j.empty()) throw std::invalid_argument("expected a matrix");
    Eigen::Index rows = static_cast<Eigen::Index>(j.size());
    Eigen::Index cols = static_cast<Eigen::Index>(j[0].size());
    Matrix m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        if (static_cast<Eigen::Index>(j[i].size()) != cols)
            throw std::invalid_argument("ragged matrix");
        for (Eigen::Index k = 0; k < cols; ++k) {
            const auto& cell = j[i][k];
            if (cell.is_number()) {
                m(i, k) = cell.get<double>();
            } else if (cell.is_array() && cell.size() == 2) {
                m(i, k) = std::complex<double>(cell[0].get<double>(), cell[1].get<double>());
            } else {
                throw std::invalid_argument("matrix cell must be a number or [re, im]");
            }
        }
    }
    return m;
}

std::string real_matrix_to_json(const Eigen::MatrixXd& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(row);
    }
    return rows.dump();
}

Eigen::MatrixXd real_matrix_from_json(const std::string& text) {
    Matrix c = matrix_from_json(text);
    if (c.imag().cwiseAbs().maxCoeff() > 0)
        throw std::invalid_argument("expected a real matrix");
    return c.real();
}

std::string phase_function_to_csv(const GroupSpec& spec, const PhaseFunction& f) {
    if (f.values.size() != spec.order()) throw std::invalid_argument("length mismatch");
    std::ostringstream out;
    for (int j = 0; j < spec.dim(); ++j) out << "c" << j + 1 << ",";
    out << "re,im\n";
    out.precision(17);
    for (std::int64_t i = 0; i < spec.order(); ++i) {
        GroupElement x = element_at(spec, i);
        for (int j = 0; j < spec.dim(); ++j) out << x.c[j] << ",";
        out << f.values(i).real() << "," << f.values(i).imag() << "\n";
    }
    return out.str();
}

std::string phase_function_to_json(const GroupSpec& spec, const PhaseFunction& f) {
    if (f.values.size() != spec.order()) throw std::invalid_argument("length mismatch");
    json rows = json::array();
    for (std::int64_t i = 0; i < spec.order(); ++i) {
        GroupElement x = element_at(spec, i);
        rows.push_back({{"point", x.c}, {"value", {f.values(i).real(), f.values(i).imag()}}});
    }
    return rows.dump();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

}  // namespace twf
