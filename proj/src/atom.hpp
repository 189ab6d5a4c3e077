#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <tuple>

namespace liesym {

// The three unknown functions of an infinitesimal generator.
enum class Fn : int8_t { xi = 0, tau = 1, phi = 2 };

// The right-hand-side functions of the system under study.
enum class Rhs : int8_t { F1 = 0, F2 = 1, F3 = 2, G = 3 };

constexpr int kMaxJetOrder = 4;       // transient order during prolongation
constexpr int kBoundaryJetOrder = 3;  // order admitted at module boundaries
constexpr int kMaxFnOrder = 4;

// A single indeterminate of the polynomial algebra. Four kinds:
//   base  independent variables x, y and the dependent variable u
//   jet   derivative coordinates u_J, J a sorted multi-index over {x,y}
//   fn    derivative symbols of xi/tau/phi, multiset over {x,y,u}
//   rhs   derivative symbols of F1/F2/F3/G, multiset over {x,y,u,u1};
//         F3 and G additionally admit an u1-power-series index, in which
//         case the symbol denotes the series coefficient (a function of
//         x,y,u only) and carries no u1 derivatives.
class Atom {
public:
    enum class Kind : int8_t { base = 0, jet = 1, fn = 2, rhs = 3 };

    static Atom x() { return base(0); }
    static Atom y() { return base(1); }
    static Atom u() { return base(2); }
    static Atom base(int which);
    static Atom jet(int nx, int ny);
    static Atom fn(Fn f, int dx = 0, int dy = 0, int du = 0);
    static Atom rhs(Rhs f, int dx = 0, int dy = 0, int du = 0, int du1 = 0);
    static Atom rhs_series(Rhs f, int index, int dx = 0, int dy = 0, int du = 0);

    Kind kind() const { return kind_; }
    bool is_base() const { return kind_ == Kind::base; }
    bool is_jet() const { return kind_ == Kind::jet; }
    bool is_fn() const { return kind_ == Kind::fn; }
    bool is_rhs() const { return kind_ == Kind::rhs; }

    int base_index() const { return sub_; }  // 0=x 1=y 2=u
    Fn fn_name() const { return static_cast<Fn>(sub_); }
    Rhs rhs_name() const { return static_cast<Rhs>(sub_); }
    bool has_series_index() const { return series_ >= 0; }
    int series_index() const { return series_; }

    // derivative counts; for jets nx()/ny() are the multi-index.
    int nx() const { return cnt_[0]; }
    int ny() const { return cnt_[1]; }
    int nu() const { return cnt_[2]; }
    int nu1() const { return cnt_[3]; }
    int order() const { return cnt_[0] + cnt_[1] + cnt_[2] + cnt_[3]; }

    // this atom with one more derivative in slot v (0=x 1=y 2=u 3=u1).
    Atom derived(int v) const;

    std::string name() const;

    bool operator==(const Atom& o) const { return key() == o.key(); }
    bool operator!=(const Atom& o) const { return !(*this == o); }
    bool operator<(const Atom& o) const { return key() < o.key(); }

private:
    Atom() = default;
    // Canonical ordering: base < jet < fn < rhs; jets by (order, y-count);
    // fn by (name, order, sorted-word); rhs by (name, plain-before-series,
    // series index, order, sorted-word).
    using Key = std::tuple<int, int, int, int, int, int, int>;
    Key key() const;

    Kind kind_ = Kind::base;
    int8_t sub_ = 0;
    int16_t series_ = -1;
    std::array<int8_t, 4> cnt_{0, 0, 0, 0};
};

}  // namespace liesym
