#include "hawkes/model_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hawkes/errors.hpp"

namespace hawkes {

namespace {

Matrix matrix_from_json(const nlohmann::json& rows, const char* name) {
    if (!rows.is_array() || rows.empty()) {
        throw ConfigError(std::string("kernel.") + name + " must be a nonempty array of rows");
    }
    std::vector<std::vector<double>> data;
    data.reserve(rows.size());
    for (const auto& row : rows) {
        if (!row.is_array()) {
            throw ConfigError(std::string("kernel.") + name + " rows must be arrays");
        }
        data.push_back(row.get<std::vector<double>>());
    }
    try {
        return Matrix::from_rows(data);
    } catch (const DimensionMismatchError& err) {
        throw ConfigError(std::string("kernel.") + name + ": " + err.what());
    }
}

} // namespace

ModelParams model_from_json(const std::string& json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& err) {
        throw ConfigError(std::string("model config is not valid JSON: ") + err.what());
    }
    if (!doc.contains("lambda0") || !doc.contains("kernel")) {
        throw ConfigError("model config needs 'lambda0' and 'kernel'");
    }

    ModelParams params;
    try {
        params.lambda0 = doc["lambda0"].get<std::vector<double>>();
    } catch (const nlohmann::json::exception&) {
        throw ConfigError("'lambda0' must be an array of reals");
    }

    const auto& kernel = doc["kernel"];
    const std::string type = kernel.value("type", "");
    if (type != "exponential") {
        throw ConfigError("unsupported kernel type '" + type +
                          "'; this build ships the exponential family");
    }
    if (!kernel.contains("alpha") || !kernel.contains("beta")) {
        throw ConfigError("exponential kernel needs 'alpha' and 'beta' matrices");
    }
    Matrix alpha = matrix_from_json(kernel["alpha"], "alpha");
    Matrix beta = matrix_from_json(kernel["beta"], "beta");
    try {
        params.kernel = ExponentialKernel(std::move(alpha), std::move(beta));
        check_dimensions(params);
    } catch (const DimensionMismatchError& err) {
        throw ConfigError(std::string("model config: ") + err.what());
    }
    return params;
}

ModelParams load_model(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open model config '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return model_from_json(buffer.str());
}

std::string model_to_json(const ModelParams& params) {
    nlohmann::json doc;
    doc["lambda0"] = params.lambda0;
    doc["kernel"] = {{"type", "exponential"},
                     {"alpha", params.kernel.alpha().to_rows()},
                     {"beta", params.kernel.beta().to_rows()}};
    return doc.dump(2);
}

} // namespace hawkes
