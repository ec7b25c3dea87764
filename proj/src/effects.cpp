#include "effa/effects.hpp"

#include "effa/error.hpp"
#include "effa/lp.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <set>
#include <sstream>

namespace effa {

// ---- carriers --------------------------------------------------------------

Carrier::Carrier(std::vector<std::string> names) : names_(std::move(names)) {
    for (Index i = 0; i < names_.size(); ++i) {
        if (!lookup_.emplace(names_[i], i).second) {
            throw InputError("duplicate element '" + names_[i] + "'");
        }
    }
}

Carrier Carrier::range(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) {
        names.push_back(std::to_string(i));
    }
    return Carrier(std::move(names));
}

Carrier Carrier::product(const Carrier& a, const Carrier& b) {
    std::vector<std::string> names;
    names.reserve(a.size() * b.size());
    for (const auto& x : a.names_) {
        for (const auto& y : b.names_) {
            names.push_back("(" + x + "," + y + ")");
        }
    }
    return Carrier(std::move(names));
}

Index Carrier::index(const std::string& name) const {
    auto it = lookup_.find(name);
    if (it == lookup_.end()) {
        throw InputError("unknown element '" + name + "'");
    }
    return it->second;
}

std::optional<Index> Carrier::find(const std::string& name) const {
    auto it = lookup_.find(name);
    if (it == lookup_.end()) {
        return std::nullopt;
    }
    return it->second;
}

FunctionSpace::FunctionSpace(std::size_t nx, std::size_t ny, bool partial)
    : nx_(nx), ny_(ny), partial_(partial), base_(partial ? ny + 1 : ny), size_(1) {
    for (std::size_t i = 0; i < nx; ++i) {
        if (base_ != 0 && size_ > std::numeric_limits<std::size_t>::max() / base_) {
            throw ResourceError("function space too large");
        }
        size_ *= base_;
    }
}

std::vector<Index> FunctionSpace::decode(Index f) const {
    std::vector<Index> img(nx_);
    for (std::size_t i = nx_; i-- > 0;) {
        const Index d = f % base_;
        f /= base_;
        img[i] = partial_ ? (d == 0 ? undefined : d - 1) : d;
    }
    return img;
}

Index FunctionSpace::encode(const std::vector<Index>& images) const {
    if (images.size() != nx_) {
        throw InterfaceError("function arity mismatch");
    }
    Index f = 0;
    for (Index y : images) {
        Index d;
        if (y == undefined) {
            if (!partial_) {
                throw InterfaceError("total function left undefined");
            }
            d = 0;
        } else {
            if (y >= ny_) {
                throw InterfaceError("function value out of range");
            }
            d = partial_ ? y + 1 : y;
        }
        f = f * base_ + d;
    }
    return f;
}

Index FunctionSpace::apply(Index f, Index x) const {
    Index div = 1;
    for (std::size_t i = x + 1; i < nx_; ++i) {
        div *= base_;
    }
    const Index d = (f / div) % base_;
    return partial_ ? (d == 0 ? undefined : d - 1) : d;
}

Carrier FunctionSpace::carrier(const Carrier& x, const Carrier& y) const {
    if (x.size() != nx_ || y.size() != ny_) {
        throw InterfaceError("carrier sizes do not match the function space");
    }
    std::vector<std::string> names;
    names.reserve(size_);
    for (Index f = 0; f < size_; ++f) {
        const auto img = decode(f);
        std::string s = "[";
        for (std::size_t i = 0; i < nx_; ++i) {
            s += (i ? "," : "") + x.name(i) + "->" + (img[i] == undefined ? "-" : y.name(img[i]));
        }
        names.push_back(s + "]");
    }
    return Carrier(std::move(names));
}

// ---- effect values ---------------------------------------------------------

Dist::Dist(Support weights) {
    Rational total;
    for (auto& [x, w] : weights) {
        if (w.sign() < 0) {
            throw InputError("negative probability " + w.str());
        }
        if (!w.is_zero()) {
            total += w;
            w_.emplace(x, std::move(w));
        }
    }
    if (total != Rational(1)) {
        throw InputError("distribution mass is " + total.str() + ", expected 1");
    }
}

Dist Dist::dirac(Index x) { return Dist(Support{{x, Rational(1)}}); }

Rational Dist::operator[](Index x) const {
    auto it = w_.find(x);
    return it == w_.end() ? Rational() : it->second;
}

Weight WeightedVec::operator[](Index x) const {
    auto it = w_.find(x);
    return it == w_.end() ? s_->zero : it->second;
}

void WeightedVec::add(Index x, const Weight& w) {
    if (s_->is_zero(w)) {
        return;
    }
    auto it = w_.find(x);
    if (it == w_.end()) {
        w_.emplace(x, w);
        return;
    }
    it->second = s_->plus(it->second, w);
    if (s_->is_zero(it->second)) {
        w_.erase(it);
    }
}

bool operator==(const WeightedVec& a, const WeightedVec& b) {
    if (!same_semiring(a.s_, b.s_) || a.w_.size() != b.w_.size()) {
        return false;
    }
    auto ib = b.w_.begin();
    for (auto ia = a.w_.begin(); ia != a.w_.end(); ++ia, ++ib) {
        if (ia->first != ib->first || !a.s_->eq(ia->second, ib->second)) {
            return false;
        }
    }
    return true;
}

ConvexSet::ConvexSet(std::vector<Dist> generators) {
    if (generators.empty()) {
        throw InputError("convex set needs at least one generator");
    }
    std::vector<Support> pts;
    pts.reserve(generators.size());
    for (auto& g : generators) {
        pts.push_back(g.weights());
    }
    for (auto& p : extreme_points(std::move(pts))) {
        gens_.emplace_back(std::move(p));
    }
}

std::string Monad::name() const {
    switch (kind) {
    case MonadKind::dist:
        return "dist";
    case MonadKind::weighted:
        return "weighted " + (semiring ? semiring->name : std::string("?"));
    case MonadKind::convex:
        return "convex";
    }
    return "?";
}

bool operator==(const Monad& a, const Monad& b) {
    if (a.kind != b.kind) {
        return false;
    }
    return a.kind != MonadKind::weighted || same_semiring(a.semiring, b.semiring);
}

namespace {

void check_support(const Support& s, std::size_t n) {
    if (!s.empty() && s.rbegin()->first >= n) {
        throw InterfaceError("effect support outside its carrier");
    }
}

const Dist& as_dist(const Effect& e) {
    if (const auto* d = std::get_if<Dist>(&e)) {
        return *d;
    }
    throw InterfaceError("expected a distribution");
}

const WeightedVec& as_weighted(const Effect& e) {
    if (const auto* w = std::get_if<WeightedVec>(&e)) {
        return *w;
    }
    throw InterfaceError("expected a weighted vector");
}

const ConvexSet& as_convex(const Effect& e) {
    if (const auto* c = std::get_if<ConvexSet>(&e)) {
        return *c;
    }
    throw InterfaceError("expected a convex set");
}

void add_scaled(Support& acc, const Rational& r, const Support& v) {
    for (const auto& [x, w] : v) {
        acc[x] += r * w;
    }
}

// Minkowski sum of the sets weights[y] * gens(y), pruned to extreme points as it grows.
std::vector<Support> mixture_points(const Support& weights,
                                    const std::function<const ConvexSet&(Index)>& gens) {
    std::vector<Support> cur{Support{}};
    for (const auto& [y, r] : weights) {
        const auto& gy = gens(y).generators();
        std::vector<Support> next;
        next.reserve(cur.size() * gy.size());
        for (const auto& p : cur) {
            for (const auto& e : gy) {
                Support q = p;
                add_scaled(q, r, e.weights());
                next.push_back(std::move(q));
            }
        }
        cur = gy.size() > 1 ? extreme_points(std::move(next)) : std::move(next);
    }
    return cur;
}

ConvexSet hull_of(std::vector<Support> pts) {
    std::vector<Dist> gens;
    for (auto& p : extreme_points(std::move(pts))) {
        gens.emplace_back(std::move(p));
    }
    return ConvexSet(std::move(gens));
}

} // namespace

Channel::Channel(Monad m, Carrier d, Carrier c, std::vector<Effect> r)
    : monad(std::move(m)), dom(std::move(d)), cod(std::move(c)), rows(std::move(r)) {
    if (rows.size() != dom.size()) {
        throw InterfaceError("channel is not total on its domain");
    }
    for (const auto& e : rows) {
        check_effect(monad, e, cod.size());
    }
}

void check_effect(const Monad& m, const Effect& e, std::size_t n) {
    switch (m.kind) {
    case MonadKind::dist:
        check_support(as_dist(e).weights(), n);
        return;
    case MonadKind::weighted: {
        const auto& w = as_weighted(e);
        if (!same_semiring(w.semiring(), m.semiring)) {
            throw InterfaceError("semiring mismatch");
        }
        if (!w.weights().empty() && w.weights().rbegin()->first >= n) {
            throw InterfaceError("effect support outside its carrier");
        }
        return;
    }
    case MonadKind::convex:
        for (const auto& g : as_convex(e).generators()) {
            check_support(g.weights(), n);
        }
        return;
    }
}

Effect unit(const Monad& m, Index x) {
    switch (m.kind) {
    case MonadKind::dist:
        return Dist::dirac(x);
    case MonadKind::weighted: {
        WeightedVec v(m.semiring);
        v.add(x, m.semiring->one);
        return v;
    }
    case MonadKind::convex:
        return ConvexSet({Dist::dirac(x)});
    }
    throw InterfaceError("unknown monad");
}

bool is_pure(const Effect& e) {
    if (const auto* d = std::get_if<Dist>(&e)) {
        return d->is_dirac();
    }
    if (const auto* w = std::get_if<WeightedVec>(&e)) {
        return w->weights().size() == 1 &&
               w->semiring()->eq(w->weights().begin()->second, w->semiring()->one);
    }
    const auto& c = std::get<ConvexSet>(e);
    return c.generators().size() == 1 && c.generators().front().is_dirac();
}

bool is_pure(const Channel& c) {
    return std::all_of(c.rows.begin(), c.rows.end(), [](const Effect& e) { return is_pure(e); });
}

Index pure_point(const Effect& e) {
    if (!is_pure(e)) {
        throw PreconditionError("effect value is not pure");
    }
    if (const auto* d = std::get_if<Dist>(&e)) {
        return d->weights().begin()->first;
    }
    if (const auto* w = std::get_if<WeightedVec>(&e)) {
        return w->weights().begin()->first;
    }
    return std::get<ConvexSet>(e).generators().front().weights().begin()->first;
}

Effect pushforward(const Monad& m, const Effect& t,
                   const std::function<std::optional<Index>(Index)>& f) {
    auto total = [&](Index x) {
        auto y = f(x);
        if (!y) {
            throw InterfaceError("pushforward along a partial map needs the weighted monad");
        }
        return *y;
    };
    auto push_dist = [&](const Dist& d) {
        Support out;
        for (const auto& [x, w] : d.weights()) {
            out[total(x)] += w;
        }
        return out;
    };
    switch (m.kind) {
    case MonadKind::dist:
        return Dist(push_dist(as_dist(t)));
    case MonadKind::weighted: {
        WeightedVec out(m.semiring);
        for (const auto& [x, w] : as_weighted(t).weights()) {
            if (auto y = f(x)) {
                out.add(*y, w);
            }
        }
        return out;
    }
    case MonadKind::convex: {
        std::vector<Support> pts;
        for (const auto& g : as_convex(t).generators()) {
            pts.push_back(push_dist(g));
        }
        return hull_of(std::move(pts));
    }
    }
    throw InterfaceError("unknown monad");
}

Effect bind(const Monad& m, const Effect& t, const std::function<const Effect&(Index)>& k) {
    switch (m.kind) {
    case MonadKind::dist: {
        Support out;
        for (const auto& [y, r] : as_dist(t).weights()) {
            add_scaled(out, r, as_dist(k(y)).weights());
        }
        return Dist(std::move(out));
    }
    case MonadKind::weighted: {
        const auto& s = *m.semiring;
        WeightedVec out(m.semiring);
        for (const auto& [y, r] : as_weighted(t).weights()) {
            for (const auto& [z, w] : as_weighted(k(y)).weights()) {
                out.add(z, s.times(r, w));
            }
        }
        return out;
    }
    case MonadKind::convex: {
        auto gens = [&](Index y) -> const ConvexSet& { return as_convex(k(y)); };
        std::vector<Support> pts;
        for (const auto& d : as_convex(t).generators()) {
            auto part = mixture_points(d.weights(), gens);
            pts.insert(pts.end(), std::make_move_iterator(part.begin()),
                       std::make_move_iterator(part.end()));
        }
        return hull_of(std::move(pts));
    }
    }
    throw InterfaceError("unknown monad");
}

Channel unit_channel(const Monad& m, const Carrier& x) {
    std::vector<Effect> rows;
    for (Index i = 0; i < x.size(); ++i) {
        rows.push_back(unit(m, i));
    }
    return Channel(m, x, x, std::move(rows));
}

Channel pure_channel(const Monad& m, const Carrier& dom, const Carrier& cod,
                     const std::function<Index(Index)>& f) {
    std::vector<Effect> rows;
    for (Index i = 0; i < dom.size(); ++i) {
        rows.push_back(unit(m, f(i)));
    }
    return Channel(m, dom, cod, std::move(rows));
}

Channel kleisli_compose(const Channel& f, const Channel& g) {
    if (!(f.monad == g.monad)) {
        throw InterfaceError("cannot compose channels of different monads");
    }
    if (!(f.cod == g.dom)) {
        throw InterfaceError("codomain of the first channel is not the domain of the second");
    }
    std::vector<Effect> rows;
    rows.reserve(f.dom.size());
    auto k = [&](Index y) -> const Effect& { return g.rows[y]; };
    for (const auto& e : f.rows) {
        rows.push_back(effa::bind(f.monad, e, k));
    }
    return Channel(f.monad, f.dom, g.cod, std::move(rows));
}

Effect strength(Side side, const Monad& m, Index pure, const Effect& t, std::size_t second_size) {
    if (side == Side::left) {
        return pushforward(m, t, [&](Index y) { return std::optional<Index>(pure * second_size + y); });
    }
    return pushforward(m, t, [&](Index x) { return std::optional<Index>(x * second_size + pure); });
}

Effect double_strength(const Monad& m, const Effect& t1, const Effect& t2, std::size_t ny) {
    switch (m.kind) {
    case MonadKind::dist: {
        Support out;
        for (const auto& [x, r] : as_dist(t1).weights()) {
            for (const auto& [y, s] : as_dist(t2).weights()) {
                out.emplace(x * ny + y, r * s);
            }
        }
        return Dist(std::move(out));
    }
    case MonadKind::weighted: {
        WeightedVec out(m.semiring);
        for (const auto& [x, r] : as_weighted(t1).weights()) {
            for (const auto& [y, s] : as_weighted(t2).weights()) {
                out.add(x * ny + y, m.semiring->times(r, s));
            }
        }
        return out;
    }
    case MonadKind::convex: {
        // for each generator d of t1, pick a generator of t2 independently per point of supp(d)
        const auto& c1 = as_convex(t1);
        std::set<Index> xs;
        for (const auto& d : c1.generators()) {
            for (const auto& kv : d.weights()) {
                xs.insert(kv.first);
            }
        }
        std::map<Index, ConvexSet> lifted;
        for (Index x : xs) {
            lifted.emplace(x, std::get<ConvexSet>(strength(Side::left, m, x, t2, ny)));
        }
        auto gens = [&](Index x) -> const ConvexSet& { return lifted.at(x); };
        std::vector<Support> pts;
        for (const auto& d : c1.generators()) {
            auto part = mixture_points(d.weights(), gens);
            pts.insert(pts.end(), part.begin(), part.end());
        }
        return hull_of(std::move(pts));
    }
    }
    throw InterfaceError("unknown monad");
}

Effect double_strength_swapped(const Monad& m, const Effect& t1, const Effect& t2, std::size_t ny) {
    if (m.kind != MonadKind::convex) {
        // D and S over a commutative semiring agree; keep the factor order for S
        if (m.kind == MonadKind::weighted && !m.semiring->mul_commutative) {
            WeightedVec out(m.semiring);
            for (const auto& [y, s] : as_weighted(t2).weights()) {
                for (const auto& [x, r] : as_weighted(t1).weights()) {
                    out.add(x * ny + y, m.semiring->times(s, r));
                }
            }
            return out;
        }
        return double_strength(m, t1, t2, ny);
    }
    const auto& c2 = as_convex(t2);
    std::set<Index> ys;
    for (const auto& e : c2.generators()) {
        for (const auto& kv : e.weights()) {
            ys.insert(kv.first);
        }
    }
    std::map<Index, ConvexSet> lifted;
    for (Index y : ys) {
        lifted.emplace(y, std::get<ConvexSet>(strength(Side::right, m, y, t1, ny)));
    }
    auto gens = [&](Index y) -> const ConvexSet& { return lifted.at(y); };
    std::vector<Support> pts;
    for (const auto& e : c2.generators()) {
        auto part = mixture_points(e.weights(), gens);
        pts.insert(pts.end(), part.begin(), part.end());
    }
    return hull_of(std::move(pts));
}

Channel kleisli_pair(const Channel& f1, const Channel& f2) {
    if (!(f1.monad == f2.monad)) {
        throw InterfaceError("cannot pair channels of different monads");
    }
    std::vector<Effect> rows;
    rows.reserve(f1.dom.size() * f2.dom.size());
    for (const auto& a : f1.rows) {
        for (const auto& b : f2.rows) {
            rows.push_back(double_strength(f1.monad, a, b, f2.cod.size()));
        }
    }
    return Channel(f1.monad, Carrier::product(f1.dom, f2.dom), Carrier::product(f1.cod, f2.cod),
                   std::move(rows));
}

Channel xi(const Monad& m, const Effect& t, const FunctionSpace& fs, const Carrier& x,
           const Carrier& y) {
    if (fs.domain_size() != x.size() || fs.codomain_size() != y.size()) {
        throw InterfaceError("function space does not match the carriers");
    }
    check_effect(m, t, fs.size());
    std::vector<Effect> rows;
    for (Index i = 0; i < x.size(); ++i) {
        rows.push_back(pushforward(m, t, [&](Index f) -> std::optional<Index> {
            const Index v = fs.apply(f, i);
            if (v == FunctionSpace::undefined) {
                return std::nullopt;
            }
            return v;
        }));
    }
    return Channel(m, x, y, std::move(rows));
}

Dist lambda(const Channel& g) {
    if (g.monad.kind != MonadKind::dist) {
        throw InterfaceError("lambda needs a distribution channel");
    }
    const FunctionSpace fs(g.dom.size(), g.cod.size(), false);
    Support out;
    std::vector<Index> img(g.dom.size());
    std::function<void(Index, const Rational&)> go = [&](Index x, const Rational& p) {
        if (x == g.dom.size()) {
            out.emplace(fs.encode(img), p);
            return;
        }
        for (const auto& [y, w] : as_dist(g.rows[x]).weights()) {
            img[x] = y;
            go(x + 1, p * w);
        }
    };
    go(0, Rational(1));
    return Dist(std::move(out));
}

// ---- convex geometry -------------------------------------------------------

namespace {

// dense coordinates over the union of supports
std::vector<RVec> densify(const std::vector<const Support*>& pts, std::vector<Index>& coords) {
    std::set<Index> idx;
    for (const auto* p : pts) {
        for (const auto& kv : *p) {
            idx.insert(kv.first);
        }
    }
    coords.assign(idx.begin(), idx.end());
    std::vector<RVec> out;
    out.reserve(pts.size());
    for (const auto* p : pts) {
        RVec v(coords.size());
        for (std::size_t i = 0; i < coords.size(); ++i) {
            auto it = p->find(coords[i]);
            if (it != p->end()) {
                v[i] = it->second;
            }
        }
        out.push_back(std::move(v));
    }
    return out;
}

bool in_hull(const Support& target, const std::vector<const Support*>& pts) {
    for (const auto& kv : target) {
        bool covered = false;
        for (const auto* p : pts) {
            if (p->count(kv.first)) {
                covered = true;
                break;
            }
        }
        if (!covered) {
            return false;
        }
    }
    std::vector<const Support*> all = pts;
    all.push_back(&target);
    std::vector<Index> coords;
    auto dense = densify(all, coords);
    RVec t = std::move(dense.back());
    dense.pop_back();
    return convex_coefficients(dense, t).has_value();
}

} // namespace

std::vector<Support> extreme_points(std::vector<Support> points) {
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    const std::size_t n = points.size();
    if (n <= 2) {
        return points;
    }
    std::set<Index> coord_set;
    for (const auto& p : points) {
        for (const auto& kv : p) {
            coord_set.insert(kv.first);
        }
    }
    const std::vector<Index> coords(coord_set.begin(), coord_set.end());

    // A unique maximizer of a linear functional is extreme. Coordinate
    // directions and a fixed pseudo-random family certify most vertices
    // without solving an LP.
    std::vector<bool> vertex(n, false);
    std::mt19937 rng(0x5eed);
    std::uniform_int_distribution<long> coef(-64, 64);
    const std::size_t extra = 16 + 2 * coords.size();
    std::vector<long> dir(coords.size());
    std::vector<Rational> score(n);
    for (std::size_t k = 0; k < 2 * coords.size() + extra; ++k) {
        for (std::size_t c = 0; c < coords.size(); ++c) {
            if (k < 2 * coords.size()) {
                dir[c] = c == k / 2 ? (k % 2 ? -1 : 1) : 0;
            } else {
                dir[c] = coef(rng);
            }
        }
        for (std::size_t i = 0; i < n; ++i) {
            Rational s;
            for (std::size_t c = 0; c < coords.size(); ++c) {
                if (dir[c] == 0) {
                    continue;
                }
                auto it = points[i].find(coords[c]);
                if (it != points[i].end()) {
                    s += it->second * Rational(dir[c]);
                }
            }
            score[i] = std::move(s);
        }
        std::size_t best = 0;
        bool unique = true;
        for (std::size_t i = 1; i < n; ++i) {
            if (score[best] < score[i]) {
                best = i;
                unique = true;
            } else if (score[i] == score[best]) {
                unique = false;
            }
        }
        if (unique) {
            vertex[best] = true;
        }
    }

    std::vector<bool> alive(n, true);
    std::vector<const Support*> certified;
    for (std::size_t i = 0; i < n; ++i) {
        if (vertex[i]) {
            certified.push_back(&points[i]);
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (!vertex[i] && !certified.empty() && in_hull(points[i], certified)) {
            alive[i] = false;
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (vertex[i] || !alive[i]) {
            continue;
        }
        std::vector<const Support*> others;
        for (std::size_t j = 0; j < n; ++j) {
            if (j != i && alive[j]) {
                others.push_back(&points[j]);
            }
        }
        if (in_hull(points[i], others)) {
            alive[i] = false;
        }
    }
    std::vector<Support> out;
    for (std::size_t i = 0; i < n; ++i) {
        if (alive[i]) {
            out.push_back(std::move(points[i]));
        }
    }
    return out;
}

bool hull_membership(const Dist& d, const std::vector<Dist>& generators) {
    std::vector<const Support*> pts;
    for (const auto& g : generators) {
        pts.push_back(&g.weights());
    }
    return in_hull(d.weights(), pts);
}

bool hull_membership(const Dist& d, const ConvexSet& s) { return hull_membership(d, s.generators()); }

ConvexSet convex_normalize(const std::vector<Dist>& generators) { return ConvexSet(generators); }

bool equivalent(const ConvexSet& a, const ConvexSet& b) {
    for (const auto& g : a.generators()) {
        if (!hull_membership(g, b)) {
            return false;
        }
    }
    for (const auto& g : b.generators()) {
        if (!hull_membership(g, a)) {
            return false;
        }
    }
    return true;
}

// ---- centrality and affinity -----------------------------------------------

std::string CentralityViolation::describe() const {
    std::ostringstream os;
    os << "probe " << probe << " at input (" << x << ", " << x2 << ")";
    return os.str();
}

std::vector<CentralityViolation> check_central(const Channel& f, const std::vector<Channel>& probes) {
    std::vector<CentralityViolation> out;
    for (std::size_t p = 0; p < probes.size(); ++p) {
        const auto& g = probes[p];
        if (!(g.monad == f.monad)) {
            throw InterfaceError("probe uses a different monad");
        }
        for (Index x = 0; x < f.dom.size(); ++x) {
            for (Index x2 = 0; x2 < g.dom.size(); ++x2) {
                const Effect upper = double_strength(f.monad, f.rows[x], g.rows[x2], g.cod.size());
                const Effect lower =
                    double_strength_swapped(f.monad, f.rows[x], g.rows[x2], g.cod.size());
                if (!(upper == lower)) {
                    out.push_back({p, x, x2});
                }
            }
        }
    }
    return out;
}

Effect marginal(const Monad& m, const Effect& t, std::size_t ny, Side side) {
    return pushforward(m, t, [&](Index xy) {
        return std::optional<Index>(side == Side::left ? xy / ny : xy % ny);
    });
}

namespace {

void dists_on(std::size_t n, unsigned denom, std::vector<Dist>& out) {
    std::vector<long> parts(n);
    std::function<void(std::size_t, long)> go = [&](std::size_t i, long left) {
        if (i + 1 == n) {
            parts[i] = left;
            Support s;
            for (std::size_t k = 0; k < n; ++k) {
                s.emplace(k, Rational(parts[k], static_cast<long>(denom)));
            }
            out.emplace_back(std::move(s));
            return;
        }
        for (long v = 0; v <= left; ++v) {
            parts[i] = v;
            go(i + 1, left - v);
        }
    };
    go(0, static_cast<long>(denom));
}

std::vector<Weight> weight_grid(const Semiring& s) {
    if (s.name == "rational") {
        std::vector<Weight> w;
        for (long k = 0; k <= 4; ++k) {
            w.emplace_back(Rational(k, 4));
        }
        return w;
    }
    if (s.name == "boolean") {
        return {0, 1};
    }
    return {s.zero, s.one, 1, 2};
}

} // namespace

bool check_affine(const Monad& m) {
    // (carrier size, value) samples
    std::vector<std::pair<std::size_t, Effect>> grid;
    const std::size_t max_n = m.kind == MonadKind::convex ? 2 : 3;
    for (std::size_t n = 1; n <= max_n; ++n) {
        switch (m.kind) {
        case MonadKind::dist: {
            std::vector<Dist> ds;
            dists_on(n, 4, ds);
            for (auto& d : ds) {
                grid.emplace_back(n, std::move(d));
            }
            break;
        }
        case MonadKind::weighted: {
            const auto vals = weight_grid(*m.semiring);
            std::vector<std::size_t> digit(n);
            for (;;) {
                WeightedVec v(m.semiring);
                for (std::size_t k = 0; k < n; ++k) {
                    v.add(k, vals[digit[k]]);
                }
                grid.emplace_back(n, std::move(v));
                std::size_t k = 0;
                while (k < n && ++digit[k] == vals.size()) {
                    digit[k++] = 0;
                }
                if (k == n) {
                    break;
                }
            }
            break;
        }
        case MonadKind::convex: {
            std::vector<Dist> ds;
            dists_on(n, 4, ds);
            for (std::size_t i = 0; i < ds.size(); ++i) {
                grid.emplace_back(n, ConvexSet({ds[i]}));
                for (std::size_t j = i + 1; j < ds.size(); ++j) {
                    grid.emplace_back(n, ConvexSet({ds[i], ds[j]}));
                }
            }
            break;
        }
        }
    }
    for (const auto& [n1, t1] : grid) {
        for (const auto& [n2, t2] : grid) {
            const Effect p = double_strength(m, t1, t2, n2);
            if (!(marginal(m, p, n2, Side::left) == t1) || !(marginal(m, p, n2, Side::right) == t2)) {
                return false;
            }
        }
    }
    return true;
}

// ---- printing --------------------------------------------------------------

namespace {

std::string support_str(const Support& s, const Carrier& c) {
    std::string out;
    for (const auto& [x, w] : s) {
        out += (out.empty() ? "" : " ") + c.name(x) + ":" + w.str();
    }
    return out;
}

} // namespace

std::string to_string(const Effect& e, const Carrier& c) {
    if (const auto* d = std::get_if<Dist>(&e)) {
        return support_str(d->weights(), c);
    }
    if (const auto* w = std::get_if<WeightedVec>(&e)) {
        std::string out;
        for (const auto& [x, v] : w->weights()) {
            out += (out.empty() ? "" : " ") + c.name(x) + ":" + v.str();
        }
        return out;
    }
    std::string out;
    for (const auto& g : std::get<ConvexSet>(e).generators()) {
        out += (out.empty() ? "" : " | ") + support_str(g.weights(), c);
    }
    return out;
}

std::string to_string(const Channel& ch) {
    std::string out;
    for (Index x = 0; x < ch.dom.size(); ++x) {
        out += ch.dom.name(x) + " -> " + to_string(ch.rows[x], ch.cod) + "\n";
    }
    return out;
}

} // namespace effa
