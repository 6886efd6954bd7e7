#include "cwlin/ring.hpp"

#include <gmpxx.h>

#include <algorithm>

namespace cwlin {

namespace {

bool is_prime_ul(unsigned long p) {
    mpz_class z(p);
    return mpz_probab_prime_p(z.get_mpz_t(), 32) > 0;
}

} // namespace

RingCtx::RingCtx(std::vector<std::string> names, int x_count, unsigned long characteristic)
    : names_(std::move(names)), x_count_(x_count), char_(characteristic) {
    if (names_.empty()) throw input_error("ring needs at least one variable");
    if (x_count_ < 0 || x_count_ > nvars())
        throw input_error("x-block size out of range");
    if (char_ != 0 && !is_prime_ul(char_))
        throw input_error("characteristic must be 0 or a prime");
    for (int i = 0; i < nvars(); ++i) {
        if (names_[i].empty()) throw input_error("empty variable name");
        auto [it, fresh] = index_.emplace(names_[i], i);
        (void)it;
        if (!fresh) throw input_error("duplicate variable name: " + names_[i]);
    }
}

int RingCtx::index_of(const std::string& name) const {
    auto it = index_.find(name);
    return it == index_.end() ? -1 : it->second;
}

RingPtr make_ring(std::vector<std::string> names, int x_count, unsigned long characteristic) {
    return std::make_shared<const RingCtx>(std::move(names), x_count, characteristic);
}

RingPtr make_ring_x(int n, unsigned long characteristic) {
    std::vector<std::string> names;
    names.reserve(n);
    for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    return make_ring(std::move(names), n, characteristic);
}

RingPtr extend_ring(const RingPtr& ring, const std::vector<std::string>& extra, bool as_y) {
    if (!as_y && ring->y_count() != 0)
        throw input_error("cannot grow the x-block past an existing y-block");
    std::vector<std::string> names = ring->names();
    names.insert(names.end(), extra.begin(), extra.end());
    int xc = as_y ? ring->x_count() : ring->x_count() + static_cast<int>(extra.size());
    return make_ring(std::move(names), xc, ring->characteristic());
}

std::string fresh_var_name(const RingCtx& ring, const std::string& stem) {
    std::string name = stem;
    while (ring.index_of(name) >= 0) name += "_";
    return name;
}

} // namespace cwlin
