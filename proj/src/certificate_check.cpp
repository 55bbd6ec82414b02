#include "cramer_lgv/certificate_check.hpp"

#include <charconv>
#include <optional>
#include <set>

#include "cramer_lgv/errors.hpp"
#include "cramer_lgv/io.hpp"
#include "cramer_lgv/linalg.hpp"

namespace cramer_lgv {

namespace {

struct CheckedSystem {
    std::vector<std::size_t> sigma;  // 0-based
    int sign = 1;
    std::vector<std::vector<std::string>> paths;
    Rational weight;
};

// (-1)^(n - number of cycles)
int cycle_sign(const std::vector<std::size_t>& sigma) {
    std::vector<bool> seen(sigma.size(), false);
    std::size_t cycles = 0;
    for (std::size_t start = 0; start < sigma.size(); ++start) {
        if (seen[start]) continue;
        ++cycles;
        for (std::size_t v = start; !seen[v]; v = sigma[v]) seen[v] = true;
    }
    return (sigma.size() - cycles) % 2 == 0 ? 1 : -1;
}

std::size_t factorial(std::size_t n) {
    std::size_t f = 1;
    for (std::size_t k = 2; k <= n; ++k) f *= k;
    return f;
}

// "A3" -> ('A', 2); nullopt for anything that is not <letter><1..n>.
std::optional<std::pair<char, std::size_t>> parse_label(const std::string& label, std::size_t n) {
    if (label == "X") return std::make_pair('X', std::size_t{0});
    if (label.size() < 2 || (label[0] != 'A' && label[0] != 'B')) return std::nullopt;
    std::size_t k = 0;
    const auto [ptr, ec] = std::from_chars(label.data() + 1, label.data() + label.size(), k);
    if (ec != std::errc() || ptr != label.data() + label.size() || k < 1 || k > n || label[1] == '0') {
        return std::nullopt;
    }
    return std::make_pair(label[0], k - 1);
}

class Checker {
public:
    explicit Checker(CertificateCheck& result) : result_(result) {}

    void run(const nlohmann::json& doc) {
        const LinearSystem sys = system_from_json(doc);
        a_ = sys.matrix;
        n_ = a_->size();
        const auto& index = doc.at("index");
        if (!index.is_number_integer() || index.get<long long>() < 1 ||
            index.get<long long>() > static_cast<long long>(n_)) {
            fail("index must be an integer in 1.." + std::to_string(n_));
            return;
        }
        column_ = index.get<std::size_t>() - 1;
        for (const auto& v : doc.at("solution")) x_.push_back(rational_from_json(v));
        if (x_.size() != n_) {
            fail("solution has wrong length");
            return;
        }
        if (multiply(*a_, x_) != sys.rhs) fail("A x != b");

        const Rational det_a = rational_from_json(doc.at("det_A"));
        const Rational det_ai = rational_from_json(doc.at("det_Ai"));
        if (det_a != det_bareiss(*a_)) fail("det_A does not match the matrix");
        if (det_a.is_zero()) fail("det_A is zero");
        if (det_ai != det_bareiss(replace_column(*a_, column_, sys.rhs))) fail("det_Ai does not match A_i");
        if (det_ai != x_[column_] * det_a) fail("det_Ai != x_i * det_A");

        const auto base = read_systems(doc.at("base_systems"), "base", false);
        const auto extended = read_systems(doc.at("extended_systems"), "extended", true);
        if (signed_total(base) != det_a) fail("base signed sum != det_A");
        if (signed_total(extended) != det_ai) fail("extended signed sum != det_Ai");
        check_pairing(doc.at("pairing"), base, extended);
    }

    void fail(std::string message) { result_.failures.push_back(std::move(message)); }

private:
    std::optional<Rational> edge_weight(const std::string& from, const std::string& to) const {
        const auto u = parse_label(from, n_);
        const auto v = parse_label(to, n_);
        if (!u || !v) return std::nullopt;
        if (u->first == 'A' && v->first == 'B') return (*a_)(u->second, v->second);
        if (u->first == 'B' && v->first == 'X') return x_[u->second];
        return std::nullopt;
    }

    std::string expected_sink(std::size_t column, bool extended) const {
        if (extended && column == column_) return "X";
        return "B" + std::to_string(column + 1);
    }

    std::vector<CheckedSystem> read_systems(const nlohmann::json& array, const std::string& role, bool extended) {
        std::vector<CheckedSystem> out;
        std::set<std::vector<std::size_t>> sigmas;
        for (std::size_t s = 0; s < array.size(); ++s) {
            const auto& sys = array.at(s);
            const std::string where = role + " system " + std::to_string(s);
            CheckedSystem cs;
            for (const auto& v : sys.at("sigma")) {
                const long long image = v.get<long long>();
                if (image < 1 || image > static_cast<long long>(n_)) {
                    fail(where + ": sigma image out of range");
                    return out;
                }
                cs.sigma.push_back(static_cast<std::size_t>(image - 1));
            }
            if (cs.sigma.size() != n_ || std::set<std::size_t>(cs.sigma.begin(), cs.sigma.end()).size() != n_) {
                fail(where + ": sigma is not a permutation");
                return out;
            }
            cs.sign = sys.at("sign").get<int>();
            if (cs.sign != cycle_sign(cs.sigma)) fail(where + ": sign does not match sigma");
            if (!sigmas.insert(cs.sigma).second) fail(where + ": repeated permutation");

            cs.weight = rational_from_json(sys.at("weight"));
            Rational product(1);
            std::set<std::string> used;
            const auto& paths = sys.at("paths");
            if (paths.size() != n_) {
                fail(where + ": wrong number of paths");
                return out;
            }
            for (std::size_t k = 0; k < n_; ++k) {
                const auto labels = paths.at(k).get<std::vector<std::string>>();
                if (labels.empty() || labels.front() != "A" + std::to_string(k + 1) ||
                    labels.back() != expected_sink(cs.sigma[k], extended)) {
                    fail(where + ": path " + std::to_string(k + 1) + " has wrong endpoints");
                }
                for (std::size_t e = 0; e + 1 < labels.size(); ++e) {
                    const auto w = edge_weight(labels[e], labels[e + 1]);
                    if (!w) {
                        fail(where + ": " + labels[e] + "->" + labels[e + 1] + " is not an edge");
                        continue;
                    }
                    product *= *w;
                }
                for (const auto& l : labels) {
                    if (!used.insert(l).second) fail(where + ": vertex " + l + " used twice");
                }
                cs.paths.push_back(labels);
            }
            if (product != cs.weight) fail(where + ": weight does not match its edges");
            out.push_back(std::move(cs));
        }
        if (out.size() != factorial(n_)) {
            fail(role + " systems: expected " + std::to_string(factorial(n_)) + ", found " +
                 std::to_string(out.size()));
        }
        return out;
    }

    static Rational signed_total(const std::vector<CheckedSystem>& systems) {
        Rational total;
        for (const auto& s : systems) total += s.sign > 0 ? s.weight : -s.weight;
        return total;
    }

    void check_pairing(const nlohmann::json& pairing, const std::vector<CheckedSystem>& base,
                       const std::vector<CheckedSystem>& extended) {
        if (pairing.size() != base.size() || base.size() != extended.size()) {
            fail("pairing size does not match system counts");
            return;
        }
        std::set<std::size_t> base_seen, ext_seen;
        const std::string bi = "B" + std::to_string(column_ + 1);
        for (const auto& pair : pairing) {
            const auto b = pair.at(0).get<std::size_t>();
            const auto e = pair.at(1).get<std::size_t>();
            if (b >= base.size() || e >= extended.size()) {
                fail("pairing index out of range");
                continue;
            }
            if (!base_seen.insert(b).second || !ext_seen.insert(e).second) fail("pairing is not a bijection");
            const auto& pb = base[b];
            const auto& pe = extended[e];
            const std::string where = "pair (" + std::to_string(b) + "," + std::to_string(e) + ")";
            if (pb.sigma != pe.sigma || pb.sign != pe.sign) fail(where + ": permutation or sign differs");
            if (pe.weight != x_[column_] * pb.weight) fail(where + ": weight not scaled by x_i");
            for (std::size_t k = 0; k < n_ && k < pb.paths.size() && k < pe.paths.size(); ++k) {
                auto expected = pb.paths[k];
                if (!expected.empty() && expected.back() == bi) expected.push_back("X");
                if (expected != pe.paths[k]) fail(where + ": path " + std::to_string(k + 1) + " is not extended correctly");
            }
        }
    }

    CertificateCheck& result_;
    std::optional<Matrix> a_;
    std::size_t n_ = 0;
    std::size_t column_ = 0;
    std::vector<Rational> x_;
};

}  // namespace

CertificateCheck check_certificate(const nlohmann::json& doc) {
    CertificateCheck result;
    Checker checker(result);
    try {
        checker.run(doc);
    } catch (const Error& e) {
        checker.fail(std::string("malformed certificate: ") + e.what());
    } catch (const nlohmann::json::exception& e) {
        checker.fail(std::string("malformed certificate: ") + e.what());
    }
    return result;
}

}  // namespace cramer_lgv
