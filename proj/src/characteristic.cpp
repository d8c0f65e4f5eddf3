#include "rosenhain/characteristic.hpp"

#include <stdexcept>

namespace rosenhain {

namespace {

void require(bool cond, const char* msg)
{
    if (!cond) {
        throw std::invalid_argument(msg);
    }
}

} // namespace

Characteristic::Characteristic(std::vector<int> top, std::vector<int> bottom)
    : top_(std::move(top)), bottom_(std::move(bottom))
{
    require(!top_.empty() && top_.size() == bottom_.size(),
            "characteristic rows must be non-empty and of equal length");
    for (std::size_t i = 0; i < top_.size(); ++i) {
        require((top_[i] == 0 || top_[i] == 1) && (bottom_[i] == 0 || bottom_[i] == 1),
                "characteristic entries must be 0 or 1");
    }
}

Characteristic Characteristic::zero(int g)
{
    require(g >= 1, "genus must be positive");
    return Characteristic(std::vector<int>(static_cast<std::size_t>(g), 0),
                          std::vector<int>(static_cast<std::size_t>(g), 0));
}

Characteristic Characteristic::operator+(const Characteristic& rhs) const
{
    require(genus() == rhs.genus(), "characteristic genus mismatch");
    std::vector<int> t(top_.size()), b(top_.size());
    for (std::size_t i = 0; i < top_.size(); ++i) {
        t[i] = (top_[i] + rhs.top_[i]) % 2;
        b[i] = (bottom_[i] + rhs.bottom_[i]) % 2;
    }
    return Characteristic(std::move(t), std::move(b));
}

bool Characteristic::operator==(const Characteristic& rhs) const
{
    return top_ == rhs.top_ && bottom_ == rhs.bottom_;
}

int Characteristic::parity() const
{
    int s = 0;
    for (std::size_t i = 0; i < top_.size(); ++i) {
        s += top_[i] * bottom_[i];
    }
    return s % 2;
}

std::string Characteristic::str() const
{
    std::string out = "[";
    for (int v : top_) {
        out += static_cast<char>('0' + v);
    }
    out += ';';
    for (int v : bottom_) {
        out += static_cast<char>('0' + v);
    }
    out += ']';
    return out;
}

std::uint32_t Characteristic::packed() const
{
    std::uint32_t bits = 0;
    const int g = genus();
    for (int i = 0; i < g; ++i) {
        bits |= static_cast<std::uint32_t>(top_[static_cast<std::size_t>(i)]) << i;
        bits |= static_cast<std::uint32_t>(bottom_[static_cast<std::size_t>(i)]) << (g + i);
    }
    return bits;
}

Characteristic Characteristic::from_packed(int g, std::uint32_t bits)
{
    std::vector<int> t(static_cast<std::size_t>(g)), b(static_cast<std::size_t>(g));
    for (int i = 0; i < g; ++i) {
        t[static_cast<std::size_t>(i)] = static_cast<int>((bits >> i) & 1u);
        b[static_cast<std::size_t>(i)] = static_cast<int>((bits >> (g + i)) & 1u);
    }
    return Characteristic(std::move(t), std::move(b));
}

Characteristic Characteristic::parse(const std::string& text)
{
    std::string body;
    for (char c : text) {
        if (c == '[' || c == ']' || c == ' ') {
            continue;
        }
        body += c;
    }
    const std::size_t sep = body.find(';');
    require(sep != std::string::npos, "characteristic text needs a ';' separator");
    const std::string t = body.substr(0, sep), b = body.substr(sep + 1);
    require(!t.empty() && t.size() == b.size(), "characteristic rows must have equal length");
    std::vector<int> top, bottom;
    for (char c : t) {
        require(c == '0' || c == '1', "characteristic entries must be 0 or 1");
        top.push_back(c - '0');
    }
    for (char c : b) {
        require(c == '0' || c == '1', "characteristic entries must be 0 or 1");
        bottom.push_back(c - '0');
    }
    return Characteristic(std::move(top), std::move(bottom));
}

Characteristic branch_characteristic(int g, int j)
{
    require(g >= 1, "genus must be positive");
    require(j >= 1 && j <= 2 * g + 2, "branch index out of range");
    std::vector<int> top(static_cast<std::size_t>(g), 0);
    std::vector<int> bottom(static_cast<std::size_t>(g), 0);
    if (j == 2 * g + 2) {
        // base point at infinity
    } else if (j == 2 * g + 1) {
        for (int i = 0; i < g; ++i) {
            bottom[static_cast<std::size_t>(i)] = 1;
        }
    } else {
        const int k = (j + 1) / 2; // cut number, 1-based
        top[static_cast<std::size_t>(k - 1)] = 1;
        const int ones = (j % 2 == 1) ? k - 1 : k;
        for (int i = 0; i < ones; ++i) {
            bottom[static_cast<std::size_t>(i)] = 1;
        }
    }
    return Characteristic(std::move(top), std::move(bottom));
}

Characteristic riemann_constant(int g)
{
    Characteristic k = Characteristic::zero(g);
    for (int j = 1; j <= 2 * g + 2; ++j) {
        const Characteristic a = branch_characteristic(g, j);
        if (a.is_odd()) {
            k = k + a;
        }
    }
    return k;
}

Characteristic partition_characteristic(int g, const std::vector<int>& index_set)
{
    Characteristic c = riemann_constant(g);
    for (int j : index_set) {
        c = c + branch_characteristic(g, j);
    }
    return c;
}

bool is_azygetic(const Characteristic& c1, const Characteristic& c2, const Characteristic& c3)
{
    const int g = c1.genus();
    if (c2.genus() != g || c3.genus() != g) {
        throw std::invalid_argument("azygetic test needs a common genus");
    }
    int exponent = c1.parity() + c2.parity() + c3.parity();
    // (eps1'+eps2'+eps3').(eps1+eps2+eps3) over the integers
    for (int i = 0; i < g; ++i) {
        const int t = c1.top(i) + c2.top(i) + c3.top(i);
        const int b = c1.bottom(i) + c2.bottom(i) + c3.bottom(i);
        exponent += t * b;
    }
    return exponent % 2 == 1;
}

bool is_special_fundamental_system(const std::vector<Characteristic>& seq)
{
    if (seq.empty()) {
        throw std::invalid_argument("empty characteristic sequence");
    }
    const int g = seq.front().genus();
    if (seq.size() != static_cast<std::size_t>(2 * g + 2)) {
        throw std::invalid_argument("special fundamental system needs 2g+2 characteristics");
    }
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (seq[i].genus() != g) {
            throw std::invalid_argument("characteristic genus mismatch");
        }
        const bool want_odd = i < static_cast<std::size_t>(g);
        if (seq[i].is_odd() != want_odd) {
            return false;
        }
    }
    for (std::size_t a = 0; a < seq.size(); ++a) {
        for (std::size_t b = a + 1; b < seq.size(); ++b) {
            for (std::size_t c = b + 1; c < seq.size(); ++c) {
                if (!is_azygetic(seq[a], seq[b], seq[c])) {
                    return false;
                }
            }
        }
    }
    return true;
}

} // namespace rosenhain
