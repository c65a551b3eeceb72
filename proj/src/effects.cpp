#include "potb/effects.hpp"

#include <algorithm>
#include <cctype>

namespace potb {

Pencil pencil_canonical(const FieldVector& a) {
    if (a.is_zero()) fail(Errc::ZeroVector, "the zero vector names no pencil");
    int lead = 0;
    while (a[lead] == 0) ++lead;
    int factor = a.field.inv(a[lead]);
    return Pencil{scale(a, factor)};
}

Pencil effect_parse(const std::string& name, int m, const Field& f) {
    if (name.empty()) fail(Errc::EmptyName, "empty effect name");
    if (m > 26) fail(Errc::TooLarge, "effect names support at most 26 factors");
    FieldVector a = FieldVector::zero(f, m);
    int last_pos = -1;
    size_t i = 0;
    while (i < name.size()) {
        char ch = name[i];
        if (ch < 'A' || ch > 'Z') {
            fail(Errc::UnknownFactor, std::string("expected factor letter, got '") + ch +
                                          "' in \"" + name + "\"");
        }
        int pos = ch - 'A';
        if (pos >= m) {
            fail(Errc::UnknownFactor, std::string("factor ") + ch + " beyond the " +
                                          std::to_string(m) + " factors of this plan");
        }
        if (pos <= last_pos) {
            fail(Errc::DuplicateFactor, std::string("factor letters must be distinct and ") +
                                            "strictly increasing in \"" + name + "\"");
        }
        last_pos = pos;
        ++i;
        int exponent = 1;
        if (i < name.size() && name[i] == '^') {
            ++i;
            if (i >= name.size() || !std::isdigit(static_cast<unsigned char>(name[i]))) {
                fail(Errc::BadExponent, "'^' must be followed by an exponent in \"" + name + "\"");
            }
            exponent = 0;
            while (i < name.size() && std::isdigit(static_cast<unsigned char>(name[i]))) {
                exponent = exponent * 10 + (name[i] - '0');
                if (exponent >= f.order() + 10) break;
                ++i;
            }
        }
        if (exponent < 1 || exponent > f.order() - 1) {
            fail(Errc::BadExponent, "exponent " + std::to_string(exponent) +
                                        " outside 1.." + std::to_string(f.order() - 1) +
                                        " in \"" + name + "\"");
        }
        a.coords[static_cast<size_t>(pos)] = exponent;
    }
    return pencil_canonical(a);
}

std::string effect_print(const Pencil& p) {
    std::string out;
    for (int i = 0; i < p.dim(); ++i) {
        int e = p.a[i];
        if (e == 0) continue;
        out.push_back(static_cast<char>('A' + i));
        if (e != 1) {
            out.push_back('^');
            out += std::to_string(e);
        }
    }
    return out;
}

int level_of(const Pencil& p, const FieldVector& run) { return dot(p.a, run); }

int EffectModel::index_of(const Pencil& p) const {
    for (size_t i = 0; i < pencils.size(); ++i) {
        if (pencils[i] == p) return static_cast<int>(i);
    }
    return -1;
}

EffectModel model_mains(int m, const Field& f) {
    EffectModel model{m, f, {}};
    for (int i = 0; i < m; ++i) {
        FieldVector a = FieldVector::zero(f, m);
        a.coords[static_cast<size_t>(i)] = 1;
        model.pencils.push_back(Pencil{std::move(a)});
    }
    return model;
}

EffectModel model_mains_and_2fi(int m, const Field& f) {
    EffectModel model = model_mains(m, f);
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            for (int e = 1; e < f.order(); ++e) {
                FieldVector a = FieldVector::zero(f, m);
                a.coords[static_cast<size_t>(i)] = 1;
                a.coords[static_cast<size_t>(j)] = e;
                model.pencils.push_back(Pencil{std::move(a)});
            }
        }
    }
    return model;
}

std::vector<Pencil> all_pencils(int m, const Field& f) {
    std::vector<Pencil> out;
    const int s = f.order();
    std::vector<int> coords(static_cast<size_t>(m), 0);
    while (true) {
        // Odometer over all vectors, last coordinate fastest.
        bool more = false;
        for (size_t c = coords.size(); c-- > 0;) {
            if (++coords[c] < s) {
                more = true;
                break;
            }
            coords[c] = 0;
        }
        if (!more) break;
        // Keep only canonical representatives (first nonzero coordinate 1).
        int lead = 0;
        while (coords[static_cast<size_t>(lead)] == 0) ++lead;
        if (coords[static_cast<size_t>(lead)] != 1) continue;
        out.push_back(Pencil{FieldVector{f, coords}});
    }
    return out;
}

} // namespace potb
