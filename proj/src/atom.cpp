#include "atom.hpp"

#include "errors.hpp"

namespace liesym {

namespace {
const char* fn_names[3] = {"xi", "tau", "phi"};
const char* rhs_names[4] = {"F1", "F2", "F3", "G"};
}  // namespace

Atom Atom::base(int which) {
    if (which < 0 || which > 2) throw KernelError("bad base variable index");
    Atom a;
    a.kind_ = Kind::base;
    a.sub_ = static_cast<int8_t>(which);
    return a;
}

Atom Atom::jet(int nx, int ny) {
    if (nx < 0 || ny < 0 || nx + ny < 1 || nx + ny > kMaxJetOrder)
        throw KernelError("jet order out of range");
    Atom a;
    a.kind_ = Kind::jet;
    a.cnt_ = {static_cast<int8_t>(nx), static_cast<int8_t>(ny), 0, 0};
    return a;
}

Atom Atom::fn(Fn f, int dx, int dy, int du) {
    if (dx < 0 || dy < 0 || du < 0 || dx + dy + du > kMaxFnOrder)
        throw KernelError("fn derivative order out of range");
    Atom a;
    a.kind_ = Kind::fn;
    a.sub_ = static_cast<int8_t>(f);
    a.cnt_ = {static_cast<int8_t>(dx), static_cast<int8_t>(dy), static_cast<int8_t>(du), 0};
    return a;
}

Atom Atom::rhs(Rhs f, int dx, int dy, int du, int du1) {
    if (dx < 0 || dy < 0 || du < 0 || du1 < 0 || dx + dy + du + du1 > kMaxFnOrder)
        throw KernelError("rhs derivative order out of range");
    if (du1 > 0 && (f == Rhs::F1 || f == Rhs::F2))
        throw KernelError("F1/F2 do not depend on u1");
    Atom a;
    a.kind_ = Kind::rhs;
    a.sub_ = static_cast<int8_t>(f);
    a.cnt_ = {static_cast<int8_t>(dx), static_cast<int8_t>(dy), static_cast<int8_t>(du),
              static_cast<int8_t>(du1)};
    return a;
}

Atom Atom::rhs_series(Rhs f, int index, int dx, int dy, int du) {
    if (f != Rhs::F3 && f != Rhs::G) throw KernelError("series index only applies to F3 and G");
    if (index < 0 || index > 1000) throw KernelError("series index out of range");
    Atom a = rhs(f, dx, dy, du, 0);
    a.series_ = static_cast<int16_t>(index);
    return a;
}

Atom Atom::derived(int v) const {
    if (v < 0 || v > 3) throw KernelError("bad derivative slot");
    Atom a = *this;
    switch (kind_) {
        case Kind::base:
            throw KernelError("base variables have no derivative symbol");
        case Kind::jet:
            if (v > 1) throw KernelError("jets extend only in x and y");
            if (order() >= kMaxJetOrder) throw KernelError("jet order budget exhausted");
            break;
        case Kind::fn:
            if (v == 3) throw KernelError("xi/tau/phi do not depend on u1");
            if (order() >= kMaxFnOrder) throw KernelError("fn derivative budget exhausted");
            break;
        case Kind::rhs:
            if (v == 3 && (rhs_name() == Rhs::F1 || rhs_name() == Rhs::F2 || has_series_index()))
                throw KernelError("symbol does not depend on u1");
            if (order() >= kMaxFnOrder) throw KernelError("rhs derivative budget exhausted");
            break;
    }
    a.cnt_[v] = static_cast<int8_t>(a.cnt_[v] + 1);
    return a;
}

Atom::Key Atom::key() const {
    switch (kind_) {
        case Kind::base:
            return {0, sub_, 0, 0, 0, 0, 0};
        case Kind::jet:
            return {1, order(), ny(), 0, 0, 0, 0};
        case Kind::fn:
            return {2, sub_, order(), -nx(), -ny(), 0, 0};
        case Kind::rhs:
            return {3, sub_, series_ >= 0 ? 1 : 0, series_, order(), -nx() * 8 - ny(), -nu()};
    }
    throw KernelError("unreachable");
}

std::string Atom::name() const {
    switch (kind_) {
        case Kind::base:
            return sub_ == 0 ? "x" : sub_ == 1 ? "y" : "u";
        case Kind::jet: {
            std::string s = "u";
            s.append(nx(), '1');
            s.append(ny(), '2');
            return s;
        }
        case Kind::fn:
        case Kind::rhs: {
            std::string s = kind_ == Kind::fn ? fn_names[sub_] : rhs_names[sub_];
            if (series_ >= 0) s += "[" + std::to_string(series_) + "]";
            if (order() > 0) {
                s += "_";
                s.append(nx(), 'x');
                s.append(ny(), 'y');
                s.append(nu(), 'u');
                for (int i = 0; i < nu1(); ++i) s += "u1";
            }
            return s;
        }
    }
    throw KernelError("unreachable");
}

}  // namespace liesym
