#include "enskog/profile.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "enskog/lambert_w.hpp"

namespace enskog {
namespace {

// Fritsch-Butland slopes: monotone on each segment, zero at local extrema.
std::vector<double> limited_slopes(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t n = x.size();
    std::vector<double> m(n);
    if (n == 2) {
        m[0] = m[1] = (y[1] - y[0]) / (x[1] - x[0]);
        return m;
    }
    std::vector<double> h(n - 1), d(n - 1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        h[k] = x[k + 1] - x[k];
        d[k] = (y[k + 1] - y[k]) / h[k];
    }
    for (std::size_t k = 1; k + 1 < n; ++k) {
        const double prod = d[k - 1] * d[k];
        if (prod > 0.0) {
            const double a = (h[k - 1] + 2.0 * h[k]) / (3.0 * (h[k - 1] + h[k]));
            m[k] = prod / (a * d[k] + (1.0 - a) * d[k - 1]);
        } else {
            m[k] = 0.0;
        }
    }
    // One-sided parabolic end slopes, clipped into the monotone region.
    auto end_slope = [](double h0, double h1, double d0, double d1) {
        double s = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
        if (s * d0 <= 0.0) return 0.0;
        if (std::abs(s) > 3.0 * std::abs(d0)) return 3.0 * d0;
        return s;
    };
    m[0] = end_slope(h[0], h[1], d[0], d[1]);
    m[n - 1] = end_slope(h[n - 2], h[n - 3], d[n - 2], d[n - 3]);
    return m;
}

std::size_t locate(const std::vector<double>& x, double v) {
    // Index of the segment containing v; v within [x.front(), x.back()].
    auto it = std::upper_bound(x.begin(), x.end(), v);
    std::size_t k = static_cast<std::size_t>(it - x.begin());
    if (k == 0) return 0;
    if (k >= x.size()) return x.size() - 2;
    return k - 1;
}

void format17(char* buf, std::size_t len, double v) { std::snprintf(buf, len, "%.17g", v); }

}  // namespace

RadialProfile::RadialProfile(std::vector<double> nodes, std::vector<double> values,
                             Extension extension, double omega)
    : nodes_(std::move(nodes)), values_(std::move(values)), extension_(extension), omega_(omega),
      log_nsf_const_(0.0) {
    if (nodes_.size() != values_.size()) {
        throw std::invalid_argument("RadialProfile: node/value size mismatch");
    }
    if (nodes_.size() < 2) throw std::invalid_argument("RadialProfile: need at least 2 nodes");
    if (nodes_.front() != 0.0) throw std::invalid_argument("RadialProfile: first node must be 0");
    for (std::size_t i = 0; i + 1 < nodes_.size(); ++i) {
        if (!(nodes_[i] < nodes_[i + 1])) {
            throw std::invalid_argument("RadialProfile: nodes must be strictly increasing");
        }
    }
    for (double v : values_) {
        if (!(v > 0.0) || !std::isfinite(v)) {
            throw std::invalid_argument("RadialProfile: values must be strictly positive and finite");
        }
    }
    if (!(omega_ >= 0.0)) throw std::invalid_argument("RadialProfile: omega must be >= 0");
    slopes_ = limited_slopes(nodes_, values_);
    if (extension_ == Extension::NsfContinuation) {
        const double eta_r = values_.back();
        log_nsf_const_ = std::log(eta_r) + 8.0 * eta_r - omega_ * omega_ * r_max() * r_max();
    }
}

RadialProfile RadialProfile::from_function(const std::function<double(double)>& f,
                                           const std::vector<double>& grid, Extension extension,
                                           double omega) {
    std::vector<double> vals(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        vals[i] = f(grid[i]);
        if (!(vals[i] > 0.0)) {
            throw std::invalid_argument("RadialProfile::from_function: nonpositive sample at node " +
                                        std::to_string(i));
        }
    }
    return RadialProfile(grid, std::move(vals), extension, omega);
}

double RadialProfile::eval(double P) const {
    if (P < 0.0) {
        if (P < -1e-12) throw std::invalid_argument("RadialProfile::eval: negative radius");
        P = 0.0;
    }
    const double R = r_max();
    if (P > R) {
        switch (extension_) {
            case Extension::Bounded:
                if (P <= R + 1e-12) break;  // boundary rounding fuzz
                throw std::logic_error("RadialProfile::eval: query beyond R_max under Bounded policy");
            case Extension::Frozen:
                return values_.back();
            case Extension::NsfContinuation:
                return 0.125 * lambert_w0_exp(std::log(8.0) + log_nsf_const_ + omega_ * omega_ * P * P);
        }
        P = R;
    }
    const std::size_t k = locate(nodes_, P);
    const double h = nodes_[k + 1] - nodes_[k];
    const double t = (P - nodes_[k]) / h;
    const double t1 = 1.0 - t;
    // Hermite basis.
    const double h00 = (1.0 + 2.0 * t) * t1 * t1;
    const double h10 = t * t1 * t1;
    const double h01 = t * t * (3.0 - 2.0 * t);
    const double h11 = t * t * (t - 1.0);
    return values_[k] * h00 + h * slopes_[k] * h10 + values_[k + 1] * h01 + h * slopes_[k + 1] * h11;
}

double RadialProfile::max_value() const { return *std::max_element(values_.begin(), values_.end()); }

void RadialProfile::write_csv(std::ostream& out) const {
    char a[32], b[32];
    out << "P,eta\n";
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        format17(a, sizeof a, nodes_[i]);
        format17(b, sizeof b, values_[i]);
        out << a << ',' << b << '\n';
    }
}

RadialProfile RadialProfile::read_csv(std::istream& in, Extension extension, double omega) {
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("RadialProfile::read_csv: empty stream");
    std::vector<double> nodes, values;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos) {
            throw std::invalid_argument("RadialProfile::read_csv: malformed row: " + line);
        }
        nodes.push_back(std::stod(line.substr(0, comma)));
        values.push_back(std::stod(line.substr(comma + 1)));
    }
    return RadialProfile(std::move(nodes), std::move(values), extension, omega);
}

double simpson_uniform(const std::vector<double>& y, double h) {
    const std::size_t n = y.size() - 1;  // intervals
    if (y.size() < 3) throw std::invalid_argument("simpson_uniform: need at least 3 samples");
    std::size_t m = n;
    double tail = 0.0;
    if (n % 2 != 0) {
        // 3/8 rule over the last three intervals.
        if (n < 3) throw std::invalid_argument("simpson_uniform: odd interval count below 3");
        m = n - 3;
        tail = 3.0 * h / 8.0 * (y[m] + 3.0 * y[m + 1] + 3.0 * y[m + 2] + y[m + 3]);
    }
    double acc = 0.0;
    for (std::size_t k = 0; k + 2 <= m; k += 2) {
        acc += y[k] + 4.0 * y[k + 1] + y[k + 2];
    }
    return h / 3.0 * acc + tail;
}

double mean_volume_fraction(const RadialProfile& profile, const Domain& domain) {
    if (!domain.bounded()) {
        throw std::invalid_argument("mean_volume_fraction: unsupported for unbounded domains");
    }
    const auto& x = profile.nodes();
    const auto& v = profile.values();
    const double h = x[1] - x[0];
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
        if (std::abs((x[i + 1] - x[i]) - h) > 1e-9 * h) {
            throw std::invalid_argument("mean_volume_fraction: grid must be uniform");
        }
    }
    const double R = domain.radius();
    std::vector<double> integrand(x.size());
    if (domain.kind() == DomainKind::Cylinder) {
        for (std::size_t i = 0; i < x.size(); ++i) integrand[i] = v[i] * x[i];
        return 2.0 / (R * R) * simpson_uniform(integrand, h);
    }
    for (std::size_t i = 0; i < x.size(); ++i) integrand[i] = v[i] * x[i] * x[i];
    return 3.0 / (R * R * R) * simpson_uniform(integrand, h);
}

std::vector<double> uniform_grid(double r_max, double h) {
    if (!(r_max > 0.0) || !(h > 0.0)) throw std::invalid_argument("uniform_grid: r_max and h must be positive");
    const std::size_t n = std::max<std::size_t>(4, static_cast<std::size_t>(std::llround(r_max / h)));
    std::vector<double> grid(n + 1);
    for (std::size_t i = 0; i <= n; ++i) grid[i] = r_max * static_cast<double>(i) / static_cast<double>(n);
    grid[0] = 0.0;
    grid[n] = r_max;
    return grid;
}

}  // namespace enskog
