#include "rp2/batch.hpp"

#include <atomic>
#include <cstdlib>
#include <istream>
#include <sstream>
#include <thread>
#include <vector>

namespace rp2 {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, ',')) {
        while (!field.empty() && (field.front() == ' ' || field.front() == '\t'))
            field.erase(field.begin());
        while (!field.empty() &&
               (field.back() == ' ' || field.back() == '\t' || field.back() == '\r'))
            field.pop_back();
        fields.push_back(field);
    }
    if (!line.empty() && line.back() == ',') fields.push_back("");
    return fields;
}

std::size_t thread_budget(std::size_t rows) {
    std::size_t n = std::thread::hardware_concurrency();
    if (n == 0) n = 1;
    if (const char* cap = std::getenv("RP2_TRIANGLE_THREADS")) {
        char* end = nullptr;
        long parsed = std::strtol(cap, &end, 10);
        if (end && *end == '\0' && parsed > 0) n = static_cast<std::size_t>(parsed);
    }
    return std::min(std::max<std::size_t>(n, 1), std::max<std::size_t>(rows, 1));
}

} // namespace

BatchSummary run_batch(std::istream& input, Json& output) {
    std::string header_line;
    if (!std::getline(input, header_line))
        throw DomainError("batch input is empty (a header row is required)");

    std::vector<std::string> header = split_csv_line(header_line);
    int col_mu[3] = {-1, -1, -1};
    int col_id = -1;
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == "mu1") col_mu[0] = static_cast<int>(i);
        else if (header[i] == "mu2") col_mu[1] = static_cast<int>(i);
        else if (header[i] == "mu3") col_mu[2] = static_cast<int>(i);
        else if (header[i] == "id") col_id = static_cast<int>(i);
    }
    if (col_mu[0] < 0 || col_mu[1] < 0 || col_mu[2] < 0)
        throw DomainError("batch header must name columns mu1,mu2,mu3");

    struct Row {
        std::string id;
        std::vector<std::string> fields;
    };
    std::vector<Row> rows;
    std::string line;
    while (std::getline(input, line)) {
        if (line.empty() || line == "\r") continue;
        Row row;
        row.fields = split_csv_line(line);
        if (col_id >= 0 && static_cast<std::size_t>(col_id) < row.fields.size())
            row.id = row.fields[static_cast<std::size_t>(col_id)];
        rows.push_back(std::move(row));
    }

    std::vector<Json> results(rows.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= rows.size()) return;
            const Row& row = rows[i];
            Json entry;
            if (!row.id.empty()) entry["id"] = row.id;
            try {
                std::array<Rat, 3> mu;
                for (int k = 0; k < 3; ++k) {
                    int col = col_mu[k];
                    if (col < 0 || static_cast<std::size_t>(col) >= row.fields.size())
                        throw DomainError("missing mu" + std::to_string(k + 1) + " value");
                    mu[static_cast<std::size_t>(k)] =
                        parse_rational(row.fields[static_cast<std::size_t>(col)]);
                }
                Json cert = certificate_to_json(admits_lagrangian_rp2(mu));
                entry.update(cert);
            } catch (const std::exception& err) {
                entry["error"] = err.what();
            }
            results[i] = std::move(entry);
        }
    };

    std::size_t n_threads = thread_budget(rows.size());
    if (n_threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < n_threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    BatchSummary summary;
    output = Json::array();
    for (auto& entry : results) {
        if (entry.contains("error")) ++summary.errors;
        else if (entry["verdict"] == "YES") ++summary.yes;
        else ++summary.no;
        output.push_back(std::move(entry));
    }
    return summary;
}

} // namespace rp2
