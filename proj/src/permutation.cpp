#include "ctn/permutation.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace ctn {

std::vector<int> PointSet::points() const
{
    std::vector<int> out;
    for (int i = 0; i < 16; ++i)
        if ((mask_ >> i) & 1u)
            out.push_back(i + 1);
    return out;
}

std::string PointSet::to_string() const
{
    std::string s = "{";
    bool first = true;
    for (int p : points()) {
        if (!first)
            s += ',';
        s += std::to_string(p);
        first = false;
    }
    return s + "}";
}

namespace {

void check_degree(int n)
{
    if (n < 1 || n > kMaxDegree)
        throw std::invalid_argument("permutation degree must lie in [1, 8], got " + std::to_string(n));
}

} // namespace

Permutation::Permutation(int n)
{
    check_degree(n);
    n_ = static_cast<std::uint8_t>(n);
    for (int i = 0; i < n; ++i)
        image_[i] = static_cast<std::uint8_t>(i);
}

Permutation Permutation::from_images(std::span<const int> image)
{
    const int n = static_cast<int>(image.size());
    check_degree(n);
    Permutation p(n);
    std::uint16_t seen = 0;
    for (int i = 0; i < n; ++i) {
        const int v = image[i];
        if (v < 1 || v > n || ((seen >> (v - 1)) & 1u))
            throw std::invalid_argument("image is not a bijection on {1.." + std::to_string(n) + "}");
        seen |= static_cast<std::uint16_t>(1u << (v - 1));
        p.image_[i] = static_cast<std::uint8_t>(v - 1);
    }
    return p;
}

Permutation Permutation::from_images(std::initializer_list<int> image)
{
    return from_images(std::span<const int>(image.begin(), image.size()));
}

Permutation Permutation::transposition(int n, int a, int b)
{
    Permutation p(n);
    if (a == b || a < 1 || b < 1 || a > n || b > n)
        throw std::invalid_argument("invalid transposition (" + std::to_string(a) + "," + std::to_string(b) + ")");
    std::swap(p.image_[a - 1], p.image_[b - 1]);
    return p;
}

Permutation Permutation::parse(std::string_view text, int n)
{
    // Trim.
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
        text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
        text.remove_suffix(1);

    if (text == "id" || text == "()")
        return Permutation(n);

    if (!text.empty() && text.front() == '(') {
        Permutation result(n);
        std::size_t pos = 0;
        while (pos < text.size()) {
            if (text[pos] != '(')
                throw std::invalid_argument("malformed cycle notation: " + std::string(text));
            const std::size_t close = text.find(')', pos);
            if (close == std::string_view::npos)
                throw std::invalid_argument("unterminated cycle: " + std::string(text));
            std::vector<int> cycle;
            std::string item;
            for (std::size_t k = pos + 1; k <= close; ++k) {
                const char c = text[k];
                if (c == ',' || c == ')' || c == ' ') {
                    if (!item.empty()) {
                        cycle.push_back(std::stoi(item));
                        item.clear();
                    }
                } else if (std::isdigit(static_cast<unsigned char>(c))) {
                    item += c;
                } else {
                    throw std::invalid_argument("unexpected character in cycle notation: " + std::string(text));
                }
            }
            Permutation c(n);
            std::uint16_t seen = 0;
            for (std::size_t k = 0; k < cycle.size(); ++k) {
                const int a = cycle[k];
                if (a < 1 || a > n || ((seen >> (a - 1)) & 1u))
                    throw std::invalid_argument("bad point in cycle: " + std::string(text));
                seen |= static_cast<std::uint16_t>(1u << (a - 1));
                const int b = cycle[(k + 1) % cycle.size()];
                c.image_[a - 1] = static_cast<std::uint8_t>(b - 1);
            }
            result = compose(result, c);
            pos = close + 1;
        }
        return result;
    }

    if (static_cast<int>(text.size()) != n)
        throw std::invalid_argument("one-line permutation '" + std::string(text) + "' does not have "
                                    + std::to_string(n) + " digits");
    std::vector<int> image;
    for (char c : text) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw std::invalid_argument("unexpected character in one-line permutation: " + std::string(text));
        image.push_back(c - '0');
    }
    return from_images(image);
}

bool Permutation::is_identity() const
{
    for (int i = 0; i < n_; ++i)
        if (image_[i] != i)
            return false;
    return true;
}

std::string Permutation::one_line() const
{
    std::string s;
    for (int i = 0; i < n_; ++i)
        s += static_cast<char>('1' + image_[i]);
    return s;
}

std::string Permutation::cycle_notation() const
{
    std::string s;
    std::uint16_t done = 0;
    for (int i = 0; i < n_; ++i) {
        if (((done >> i) & 1u) || image_[i] == i)
            continue;
        s += '(';
        int j = i;
        bool first = true;
        while (!((done >> j) & 1u)) {
            done |= static_cast<std::uint16_t>(1u << j);
            if (!first)
                s += ',';
            s += std::to_string(j + 1);
            first = false;
            j = image_[j];
        }
        s += ')';
    }
    return s.empty() ? "id" : s;
}

Permutation compose(const Permutation& f, const Permutation& g)
{
    if (f.n_ != g.n_)
        throw std::invalid_argument("degree mismatch in compose: " + std::to_string(f.n_) + " vs "
                                    + std::to_string(g.n_));
    Permutation r = f;
    for (int i = 0; i < f.n_; ++i)
        r.image_[i] = g.image_[f.image_[i]];
    return r;
}

Permutation inverse(const Permutation& f)
{
    Permutation r = f;
    for (int i = 0; i < f.n_; ++i)
        r.image_[f.image_[i]] = static_cast<std::uint8_t>(i);
    return r;
}

PointSet support(const Permutation& f)
{
    PointSet s;
    for (int i = 0; i < f.degree(); ++i)
        if (f[i] != i)
            s.insert(i + 1);
    return s;
}

Parity parity(const Permutation& f)
{
    // n minus the number of cycles.
    std::uint16_t done = 0;
    int cycles = 0;
    for (int i = 0; i < f.degree(); ++i) {
        if ((done >> i) & 1u)
            continue;
        ++cycles;
        for (int j = i; !((done >> j) & 1u); j = f[j])
            done |= static_cast<std::uint16_t>(1u << j);
    }
    return ((f.degree() - cycles) & 1) ? Parity::odd : Parity::even;
}

Transposition Transposition::make(int a, int b)
{
    if (a == b)
        throw std::invalid_argument("transposition needs two distinct points");
    return a < b ? Transposition{a, b} : Transposition{b, a};
}

std::string Transposition::to_string() const
{
    return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

bool as_transposition(const Permutation& f, Transposition* out)
{
    const PointSet s = support(f);
    if (s.size() != 2)
        return false;
    const auto pts = s.points();
    if (out)
        *out = Transposition{pts[0], pts[1]};
    return true;
}

std::uint64_t factorial(int n)
{
    std::uint64_t r = 1;
    for (int i = 2; i <= n; ++i)
        r *= static_cast<std::uint64_t>(i);
    return r;
}

std::uint32_t rank(const Permutation& p)
{
    const int n = p.degree();
    std::uint32_t r = 0;
    for (int i = 0; i < n; ++i) {
        int smaller = 0;
        for (int j = i + 1; j < n; ++j)
            if (p[j] < p[i])
                ++smaller;
        r = r * static_cast<std::uint32_t>(n - i) + static_cast<std::uint32_t>(smaller);
    }
    return r;
}

Permutation unrank(int n, std::uint64_t r)
{
    check_degree(n);
    if (r >= factorial(n))
        throw std::out_of_range("rank " + std::to_string(r) + " out of range for degree " + std::to_string(n));
    std::array<int, kMaxDegree> digits{};
    for (int i = n - 1; i >= 0; --i) {
        const auto base = static_cast<std::uint64_t>(n - i);
        digits[i] = static_cast<int>(r % base);
        r /= base;
    }
    std::vector<int> pool(n);
    for (int i = 0; i < n; ++i)
        pool[i] = i + 1;
    std::vector<int> image(n);
    for (int i = 0; i < n; ++i) {
        image[i] = pool[digits[i]];
        pool.erase(pool.begin() + digits[i]);
    }
    return Permutation::from_images(image);
}

} // namespace ctn
