#include "modisom/pcpres.hpp"

#include <fstream>
#include <sstream>

#include "modisom/config.hpp"

namespace modisom {

PcPresentation PcPresentation::trivial_relations(uint32_t p, uint32_t num_gens) {
    PcPresentation pres;
    pres.p = p;
    pres.num_gens = num_gens;
    pres.power_words.assign(num_gens, ExpVec(num_gens, 0));
    pres.conj_words.assign(num_gens, {});
    for (uint32_t j = 0; j < num_gens; ++j) {
        pres.conj_words[j].assign(j, ExpVec());
        for (uint32_t i = 0; i < j; ++i) {
            ExpVec w(num_gens, 0);
            w[j] = 1;
            pres.conj_words[j][i] = std::move(w);
        }
    }
    return pres;
}

void PcPresentation::set_power(uint32_t i, ExpVec w) {
    if (i >= num_gens || w.size() != num_gens) throw error("set_power: bad index or word length");
    power_words[i] = std::move(w);
}

void PcPresentation::set_conj(uint32_t j, uint32_t i, ExpVec w) {
    if (j >= num_gens || i >= j || w.size() != num_gens)
        throw error("set_conj: requires j > i and a word of length L");
    conj_words[j][i] = std::move(w);
}

uint64_t PcPresentation::order() const {
    uint64_t n = 1;
    for (uint32_t i = 0; i < num_gens; ++i) n *= p;
    return n;
}

void PcPresentation::validate() const {
    for (uint32_t i = 0; i < num_gens; ++i) {
        const ExpVec& w = power_words[i];
        for (uint32_t t = 0; t < num_gens; ++t) {
            if (w[t] >= p) throw error("presentation: exponent out of range");
            if (t <= i && w[t] != 0) throw error("presentation: power word must live above its generator");
        }
        for (uint32_t k = 0; k < i; ++k) {
            const ExpVec& c = conj_words[i][k];
            for (uint32_t t = 0; t < num_gens; ++t) {
                if (c[t] >= p) throw error("presentation: exponent out of range");
                if (t < i && c[t] != 0)
                    throw error("presentation: conjugation word must live at or above its generator");
            }
        }
    }
}

Collector::Collector(PcPresentation pres) : pres_(std::move(pres)) {
    pres_.validate();
    if (pres_.order() > caps::group_order)
        throw cap_exceeded("Collector: group order over cap");
}

ExpVec Collector::generator(uint32_t i) const {
    if (i >= pres_.num_gens) throw error("invalid generator index");
    ExpVec v = identity();
    v[i] = 1;
    return v;
}

ExpVec Collector::multiply_by_gen(const ExpVec& x, uint32_t i) const {
    const uint32_t L = pres_.num_gens;
    const uint32_t p = pres_.p;
    if (i >= L) throw error("invalid generator index");
    // x g_i = (prefix on <= i) g_i^{e_i + 1} (tail conjugated by g_i);
    // the conjugated tail lives strictly above i, so prefix and suffix
    // concatenate into a normal form directly.
    ExpVec tail_conj = identity();
    for (uint32_t j = i + 1; j < L; ++j) {
        if (!x[j]) continue;
        const ExpVec& w = pres_.conj_words[j][i];
        for (uint32_t c = 0; c < x[j]; ++c) tail_conj = multiply(tail_conj, w);
    }
    uint32_t e = x[i] + 1u;
    ExpVec out(L, 0);
    for (uint32_t t = 0; t < i; ++t) out[t] = x[t];
    if (e < p) {
        out[i] = static_cast<uint8_t>(e);
        for (uint32_t t = i + 1; t < L; ++t) out[t] = tail_conj[t];
    } else {
        ExpVec suffix = multiply(pres_.power_words[i], tail_conj);
        for (uint32_t t = i + 1; t < L; ++t) out[t] = suffix[t];
    }
    return out;
}

ExpVec Collector::multiply(const ExpVec& a, const ExpVec& b) const {
    ExpVec out = a;
    for (uint32_t j = 0; j < pres_.num_gens; ++j)
        for (uint32_t c = 0; c < b[j]; ++c) out = multiply_by_gen(out, j);
    return out;
}

ExpVec Collector::power(const ExpVec& a, uint64_t e) const {
    ExpVec result = identity();
    ExpVec base = a;
    while (e) {
        if (e & 1) result = multiply(result, base);
        e >>= 1;
        if (e) base = multiply(base, base);
    }
    return result;
}

ExpVec Collector::inverse(const ExpVec& a) const {
    // Every element order divides p^L.
    return power(a, order() - 1);
}

ExpVec Collector::collect(const GenWord& word) const {
    ExpVec out = identity();
    for (const auto& [g, e] : word) {
        if (g >= pres_.num_gens) throw error("invalid generator index");
        ExpVec gen = generator(g);
        if (e >= 0)
            out = multiply(out, power(gen, static_cast<uint64_t>(e)));
        else
            out = multiply(out, inverse(power(gen, static_cast<uint64_t>(-e))));
    }
    return out;
}

uint64_t Collector::index_of(const ExpVec& v) const {
    uint64_t idx = 0;
    for (uint32_t i = 0; i < pres_.num_gens; ++i) idx = idx * pres_.p + v[i];
    return idx;
}

ExpVec Collector::element_at(uint64_t index) const {
    ExpVec v(pres_.num_gens, 0);
    for (uint32_t i = pres_.num_gens; i-- > 0;) {
        v[i] = static_cast<uint8_t>(index % pres_.p);
        index /= pres_.p;
    }
    return v;
}

ConsistencyReport check_consistency(const Collector& c, bool exhaustive_triples) {
    const uint32_t L = c.num_gens();
    const uint32_t p = c.prime();
    auto fail = [](uint32_t a, uint32_t b, uint32_t d, const std::string& what) {
        ConsistencyReport r;
        r.consistent = false;
        r.witness = {a + 1, b + 1, d + 1};
        r.detail = what;
        return r;
    };
    // Triple overlaps g_k (g_j g_i) = (g_k g_j) g_i for k > j > i.
    for (uint32_t i = 0; i < L; ++i)
        for (uint32_t j = i + 1; j < L; ++j)
            for (uint32_t k = j + 1; k < L; ++k) {
                ExpVec lhs = c.multiply(c.generator(k), c.multiply_by_gen(c.generator(j), i));
                ExpVec rhs = c.multiply_by_gen(c.multiply_by_gen(c.generator(k), j), i);
                if (lhs != rhs) return fail(k, j, i, "triple overlap");
            }
    // Power overlaps.
    for (uint32_t i = 0; i < L; ++i)
        for (uint32_t j = i + 1; j < L; ++j) {
            // g_j^p g_i vs g_j^{p-1} (g_j g_i)
            ExpVec lhs = c.multiply(c.presentation().power_words[j], c.generator(i));
            ExpVec rhs = c.multiply(c.power(c.generator(j), p - 1), c.multiply_by_gen(c.generator(j), i));
            if (lhs != rhs) return fail(j, j, i, "power overlap (left)");
            // g_j g_i^p vs (g_j g_i) g_i^{p-1}
            lhs = c.multiply(c.generator(j), c.presentation().power_words[i]);
            rhs = c.multiply(c.multiply_by_gen(c.generator(j), i), c.power(c.generator(i), p - 1));
            if (lhs != rhs) return fail(j, i, i, "power overlap (right)");
        }
    for (uint32_t i = 0; i < L; ++i) {
        ExpVec lhs = c.multiply(c.presentation().power_words[i], c.generator(i));
        ExpVec rhs = c.multiply(c.generator(i), c.presentation().power_words[i]);
        if (lhs != rhs) return fail(i, i, i, "power overlap (self)");
    }
    if (exhaustive_triples) {
        uint64_t n = c.order();
        if (n > (1u << 9)) throw cap_exceeded("check_consistency: exhaustive triples over cap");
        std::vector<ExpVec> elems(n);
        for (uint64_t t = 0; t < n; ++t) elems[t] = c.element_at(t);
        std::vector<uint32_t> table(n * n);
        for (uint64_t a = 0; a < n; ++a)
            for (uint64_t b = 0; b < n; ++b)
                table[a * n + b] = static_cast<uint32_t>(c.index_of(c.multiply(elems[a], elems[b])));
        for (uint64_t a = 0; a < n; ++a)
            for (uint64_t b = 0; b < n; ++b)
                for (uint64_t d = 0; d < n; ++d)
                    if (table[table[a * n + b] * n + d] != table[a * n + table[b * n + d]])
                        return fail(static_cast<uint32_t>(a), static_cast<uint32_t>(b),
                                    static_cast<uint32_t>(d), "associativity (exhaustive)");
    }
    return {};
}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::string clean;
    for (char ch : line) {
        if (ch == '#') break;
        clean += (ch == ':') ? ' ' : ch;
    }
    std::istringstream ss(clean);
    std::vector<std::string> tokens;
    std::string t;
    while (ss >> t) tokens.push_back(t);
    return tokens;
}

uint32_t to_u32(const std::string& s, const char* what) {
    try {
        size_t pos = 0;
        unsigned long v = std::stoul(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return static_cast<uint32_t>(v);
    } catch (const std::exception&) {
        throw parse_error(std::string("presentation: bad ") + what + " '" + s + "'");
    }
}

ExpVec read_word(const std::vector<std::string>& tokens, size_t from, uint32_t num_gens, uint32_t p) {
    if (tokens.size() - from != num_gens) throw parse_error("presentation: word length != gens");
    ExpVec w(num_gens, 0);
    for (uint32_t t = 0; t < num_gens; ++t) {
        uint32_t e = to_u32(tokens[from + t], "exponent");
        if (e >= p) throw parse_error("presentation: exponent out of range");
        w[t] = static_cast<uint8_t>(e);
    }
    return w;
}

} // namespace

PcPresentation parse_presentation(std::istream& in) {
    std::string line;
    uint32_t p = 0, num_gens = 0;
    bool have_p = false, have_gens = false;
    PcPresentation pres;
    while (std::getline(in, line)) {
        auto tokens = tokenize(line);
        if (tokens.empty()) continue;
        const std::string& kw = tokens[0];
        if (kw == "p") {
            if (tokens.size() != 2) throw parse_error("presentation: expected 'p <prime>'");
            p = to_u32(tokens[1], "prime");
            if (p < 2) throw parse_error("presentation: prime must be at least 2");
            have_p = true;
        } else if (kw == "gens") {
            if (!have_p) throw parse_error("presentation: 'p' line must come first");
            if (tokens.size() != 2) throw parse_error("presentation: expected 'gens <L>'");
            num_gens = to_u32(tokens[1], "generator count");
            pres = PcPresentation::trivial_relations(p, num_gens);
            have_gens = true;
        } else if (kw == "pow") {
            if (!have_gens) throw parse_error("presentation: 'gens' line must precede relations");
            if (tokens.size() < 2) throw parse_error("presentation: expected 'pow <i>: word'");
            uint32_t i = to_u32(tokens[1], "generator index");
            if (i < 1 || i > num_gens) throw parse_error("presentation: pow index out of range");
            pres.set_power(i - 1, read_word(tokens, 2, num_gens, p));
        } else if (kw == "conj") {
            if (!have_gens) throw parse_error("presentation: 'gens' line must precede relations");
            if (tokens.size() < 3) throw parse_error("presentation: expected 'conj <j> <i>: word'");
            uint32_t j = to_u32(tokens[1], "generator index");
            uint32_t i = to_u32(tokens[2], "generator index");
            if (j < 1 || j > num_gens || i < 1 || i >= j)
                throw parse_error("presentation: conj indices need num_gens >= j > i >= 1");
            pres.set_conj(j - 1, i - 1, read_word(tokens, 3, num_gens, p));
        } else {
            throw parse_error("presentation: unknown keyword '" + kw + "'");
        }
    }
    if (!have_p || !have_gens) throw parse_error("presentation: missing 'p' or 'gens' header");
    pres.validate();
    return pres;
}

PcPresentation parse_presentation_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open group file '" + path + "'");
    return parse_presentation(in);
}

} // namespace modisom
