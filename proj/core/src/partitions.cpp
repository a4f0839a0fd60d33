#include "ppdt/partitions.hpp"

#include <algorithm>
#include <sstream>

namespace ppdt {

long PlanePartition::size() const {
    long total = 0;
    for (const auto& row : rows)
        for (int v : row) total += v;
    return total;
}

bool PlanePartition::valid() const {
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].empty()) return false;
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            if (rows[i][j] <= 0) return false;
            if (j > 0 && rows[i][j] > rows[i][j - 1]) return false;
            if (i > 0 && (j >= rows[i - 1].size() || rows[i][j] > rows[i - 1][j])) return false;
        }
    }
    return true;
}

namespace {

struct Enumerator {
    const std::function<void(const PlanePartition&)>& visit;
    std::vector<std::vector<int>> rows;

    // Extends the trailing (partial) row at position j, then closes it and
    // recurses into the next row. Entries are tried in descending order.
    // rows is re-indexed on every access: recursion appends to it and may
    // reallocate.
    void fill_row(int j, int remaining) {
        const std::size_t ri = rows.size() - 1;
        int bound = j > 0 ? rows[ri][static_cast<std::size_t>(j - 1)] : remaining;
        if (ri > 0) {
            const std::vector<int>& prev = rows[ri - 1];
            if (static_cast<std::size_t>(j) >= prev.size()) bound = 0;
            else bound = std::min(bound, prev[static_cast<std::size_t>(j)]);
        }
        bound = std::min(bound, remaining);
        for (int v = bound; v >= 1; --v) {
            rows[ri].push_back(v);
            fill_row(j + 1, remaining - v);
            rows[ri].pop_back();
        }
        if (j > 0) {
            if (remaining == 0) {
                visit(PlanePartition{rows});
            } else {
                rows.emplace_back();
                fill_row(0, remaining);
                rows.pop_back();
            }
        }
    }
};

}  // namespace

void enumerate(int n, const std::function<void(const PlanePartition&)>& visit, int cap) {
    if (n < 0) throw std::invalid_argument("partition size must be >= 0");
    if (n > cap) {
        std::ostringstream msg;
        msg << "enumeration of plane partitions of " << n << " refused: cap is " << cap
            << " (counts grow rapidly; raise the cap explicitly if you accept the cost)";
        throw cap_error(msg.str());
    }
    if (n == 0) {
        visit(PlanePartition{});
        return;
    }
    Enumerator e{visit, {}};
    e.rows.emplace_back();
    e.fill_row(0, n);
}

std::vector<PlanePartition> enumerate_all(int n, int cap) {
    std::vector<PlanePartition> out;
    enumerate(n, [&](const PlanePartition& p) { out.push_back(p); }, cap);
    return out;
}

StatTriple stats(const PlanePartition& p) {
    StatTriple t;
    for (std::size_t i = 0; i < p.rows.size(); ++i) {
        for (std::size_t j = 0; j < p.rows[i].size(); ++j) {
            if (i == j) t.w0 += p.rows[i][j];
            else if (i < j) t.w_plus += p.rows[i][j];
            else t.w_minus += p.rows[i][j];
        }
    }
    return t;
}

PlanePartition transpose(const PlanePartition& p) {
    PlanePartition out;
    if (p.rows.empty()) return out;
    out.rows.resize(p.rows[0].size());
    for (std::size_t j = 0; j < out.rows.size(); ++j) {
        for (const auto& row : p.rows) {
            if (j < row.size()) out.rows[j].push_back(row[j]);
            else break;
        }
    }
    return out;
}

LaurentPoly refined_poly_oracle(int n, long delta, int cap) {
    LaurentPoly poly;
    enumerate(n, [&](const PlanePartition& p) { poly.add_term(stats(p).statistic(delta), 1); }, cap);
    return poly;
}

mpz_class joint_moment_oracle(int n, unsigned i, unsigned j, int cap) {
    mpz_class total = 0, a, b;
    enumerate(n,
              [&](const PlanePartition& p) {
                  const StatTriple t = stats(p);
                  a = t.w0;
                  mpz_pow_ui(a.get_mpz_t(), a.get_mpz_t(), i);
                  b = t.w_plus - t.w_minus;
                  mpz_pow_ui(b.get_mpz_t(), b.get_mpz_t(), j);
                  a *= b;
                  total += a;
              },
              cap);
    return total;
}

std::string to_line(const PlanePartition& p) {
    std::ostringstream os;
    for (std::size_t i = 0; i < p.rows.size(); ++i) {
        if (i > 0) os << ';';
        for (std::size_t j = 0; j < p.rows[i].size(); ++j) {
            if (j > 0) os << ',';
            os << p.rows[i][j];
        }
    }
    return os.str();
}

PlanePartition from_line(const std::string& line) {
    PlanePartition p;
    if (line.empty()) return p;
    std::istringstream rows_in(line);
    std::string row_text;
    while (std::getline(rows_in, row_text, ';')) {
        std::vector<int> row;
        std::istringstream entries(row_text);
        std::string entry;
        while (std::getline(entries, entry, ',')) row.push_back(std::stoi(entry));
        p.rows.push_back(std::move(row));
    }
    return p;
}

}  // namespace ppdt
