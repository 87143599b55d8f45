#include "rrt/schedule.hpp"

#include <bit>
#include <limits>
#include <string>

#include "rrt/error.hpp"

namespace rrt {

namespace {

constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();

std::uint64_t checked_shift(std::uint64_t v, std::size_t shift) {
    if (v != 0 && (shift >= 64 || v > (kMax >> shift))) {
        throw PreconditionError("schedule value overflows 64 bits; depth too large");
    }
    return shift >= 64 ? 0 : v << shift;
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > kMax / a) return kMax;
    return a * b;
}

} // namespace

std::string_view to_string(ScheduleKind kind) {
    switch (kind) {
    case ScheduleKind::pairs_b: return "pairs-b";
    case ScheduleKind::quadruple_c: return "quadruple-c";
    case ScheduleKind::block_h: return "block-h";
    }
    return "?";
}

ScheduleKind parse_schedule_kind(std::string_view name) {
    if (name == "pairs-b") return ScheduleKind::pairs_b;
    if (name == "quadruple-c") return ScheduleKind::quadruple_c;
    if (name == "block-h") return ScheduleKind::block_h;
    throw PreconditionError("unknown schedule kind '" + std::string(name) + "'");
}

std::uint64_t pow2_ceil(std::uint64_t v) {
    if (v <= 1) return 1;
    if (v > (std::uint64_t{1} << 63)) throw PreconditionError("power of two overflows 64 bits");
    return std::bit_ceil(v);
}

BoundSchedule::BoundSchedule(ScheduleKind kind, std::size_t sigma_len, std::size_t depth)
    : kind_(kind), sigma_len_(sigma_len), depth_(depth) {
    switch (kind) {
    case ScheduleKind::pairs_b:
        values_.push_back(1);
        for (std::size_t l = 1; l <= depth + 1; ++l) {
            // 2^{l+3} is itself a power of two, so round only the factor.
            values_.push_back(checked_shift(pow2_ceil(sigma_len + l), l + 3));
        }
        break;
    case ScheduleKind::quadruple_c:
        for (std::size_t k = 0; k <= sigma_len + depth; ++k) {
            const std::uint64_t pairs = static_cast<std::uint64_t>(k) * (k > 0 ? k - 1 : 0) / 2;
            values_.push_back(pairs == 0 ? 1 : checked_shift(pow2_ceil(pairs), k + 3));
        }
        break;
    case ScheduleKind::block_h:
        for (std::size_t k = 0; k <= depth + 1; ++k) {
            if (k <= 2) {
                values_.push_back(k);
                continue;
            }
            const std::uint64_t pairs = static_cast<std::uint64_t>(k - 1) * (k - 2) / 2;
            const std::uint64_t block = checked_shift(pow2_ceil(pairs), k - 1);
            if (values_.back() > kMax - block) throw PreconditionError("block schedule overflows");
            values_.push_back(values_.back() + block);
        }
        break;
    }
}

std::uint64_t BoundSchedule::branching(std::size_t level) const {
    if (level > depth_) throw PreconditionError("level beyond schedule depth");
    switch (kind_) {
    case ScheduleKind::pairs_b: return values_[level + 1];
    case ScheduleKind::quadruple_c: return values_[sigma_len_ + level];
    case ScheduleKind::block_h: return values_[level + 1] - values_[level];
    }
    return 0;
}

std::uint64_t BoundSchedule::capacity(std::size_t level) const {
    std::uint64_t acc = 1;
    for (std::size_t i = 0; i < level; ++i) acc = saturating_mul(acc, branching(i));
    return acc;
}

std::uint64_t BoundSchedule::h(std::size_t k) const {
    if (kind_ != ScheduleKind::block_h) throw PreconditionError("h(k) needs a block-h schedule");
    if (k >= values_.size()) throw PreconditionError("h index beyond schedule depth");
    return values_[k];
}

} // namespace rrt
