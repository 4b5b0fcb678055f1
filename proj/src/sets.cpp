#include "hfold/sets.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

namespace hfold {

namespace {

void require_strictly_increasing(const std::vector<Integer>& elements, const char* what)
{
    if (elements.size() < 2)
        throw InvalidSetError(std::string(what) + " needs at least 2 elements, got " +
                              std::to_string(elements.size()));
    for (std::size_t i = 1; i < elements.size(); ++i) {
        if (elements[i] == elements[i - 1])
            throw InvalidSetError(std::string(what) + " has duplicate element " +
                                  std::to_string(elements[i]));
        if (elements[i] < elements[i - 1])
            throw InvalidSetError(std::string(what) + " is not sorted ascending at position " +
                                  std::to_string(i));
    }
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

} // namespace

RawSet::RawSet(std::vector<Integer> elements) : elements_(std::move(elements))
{
    require_strictly_increasing(elements_, "raw set");
}

NormalizedSet::NormalizedSet(std::vector<Integer> elements) : elements_(std::move(elements))
{
    require_strictly_increasing(elements_, "normalized set");
    if (elements_.front() != 0)
        throw InvalidSetError("normalized set must have minimum 0, got " +
                              std::to_string(elements_.front()));
    Integer g = 0;
    for (Integer a : elements_)
        g = std::gcd(g, a);
    if (g != 1)
        throw InvalidSetError("normalized set must have gcd 1, got " + std::to_string(g));
}

NormalizationRecord normalize(const RawSet& raw)
{
    const Integer offset = raw.min();
    std::vector<Integer> shifted;
    shifted.reserve(raw.size());
    Integer g = 0;
    for (Integer b : raw.elements()) {
        shifted.push_back(checked::sub(b, offset));
        g = std::gcd(g, shifted.back());
    }
    // g > 0 because the raw set has two distinct elements.
    for (Integer& x : shifted)
        x /= g;
    return NormalizationRecord{NormalizedSet(std::move(shifted)), offset, g};
}

std::vector<Integer> denormalize_sumset(const NormalizationRecord& record, Integer h,
                                        std::span<const Integer> sumset)
{
    if (h < 1)
        throw PreconditionError("fold count h must be positive, got " + std::to_string(h));
    const Integer base = checked::mul(h, record.offset);
    std::vector<Integer> out;
    out.reserve(sumset.size());
    for (Integer x : sumset)
        out.push_back(checked::add(base, checked::mul(record.scale, x)));
    return out;
}

std::vector<Integer> parse_set_literal(std::string_view text)
{
    std::vector<Integer> out;
    if (trim(text).empty())
        throw InvalidSetError("empty set literal");
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        if (comma == std::string_view::npos)
            comma = text.size();
        const std::string_view token = trim(text.substr(start, comma - start));
        if (token.empty())
            throw InvalidSetError("empty element in set literal '" + std::string(text) + "'");
        Integer value = 0;
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec == std::errc::result_out_of_range)
            throw InvalidSetError("element '" + std::string(token) + "' is out of 64-bit range");
        if (ec != std::errc() || ptr != token.data() + token.size())
            throw InvalidSetError("'" + std::string(token) + "' is not a decimal integer");
        out.push_back(value);
        start = comma + 1;
    }
    return out;
}

std::string format_set_literal(std::span<const Integer> elements)
{
    std::string out;
    for (std::size_t i = 0; i < elements.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(elements[i]);
    }
    return out;
}

} // namespace hfold
