#pragma once

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "cwlin/errors.hpp"

namespace cwlin {

// A polynomial ring context.  Variables are split into an x-block (the
// "base" variables) and a y-block (adjoined presentation variables); for a
// plain base ring the y-block is empty.  char 0 means exact rationals,
// otherwise a prime field.
class RingCtx {
public:
    RingCtx(std::vector<std::string> names, int x_count, unsigned long characteristic = 0);

    int nvars() const { return static_cast<int>(names_.size()); }
    int x_count() const { return x_count_; }
    int y_count() const { return nvars() - x_count_; }
    unsigned long characteristic() const { return char_; }

    const std::string& name(int i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }

    // Index of a declared variable, or -1.
    int index_of(const std::string& name) const;

    bool is_x_var(int i) const { return i < x_count_; }

private:
    std::vector<std::string> names_;
    int x_count_;
    unsigned long char_;
    std::unordered_map<std::string, int> index_;
};

using RingPtr = std::shared_ptr<const RingCtx>;

RingPtr make_ring(std::vector<std::string> names, int x_count, unsigned long characteristic = 0);

// Convenience: variables x1..xn, all in the x-block.
RingPtr make_ring_x(int n, unsigned long characteristic = 0);

// New context with extra trailing variables.  When `as_y` the new variables
// extend the y-block, otherwise the x-block is grown (only valid if the
// current y-block is empty).
RingPtr extend_ring(const RingPtr& ring, const std::vector<std::string>& extra, bool as_y);

// A variable name not declared in `ring`, derived from `stem`.
std::string fresh_var_name(const RingCtx& ring, const std::string& stem);

} // namespace cwlin
