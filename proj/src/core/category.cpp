#include "indlift/core/category.hpp"

#include <algorithm>
#include <cmath>

#include "indlift/core/glue.hpp"

namespace indlift {

PullbackData KindOps::pullback(const StructObject&, const StructObject&,
                               const StructObject&, const std::vector<int16_t>&,
                               const std::vector<int16_t>&) const {
    throw capability_error(name() + ": pullback not supported");
}

std::vector<SpanCoconeInst> KindOps::multipushout(Category&, const Mor&, const Mor&,
                                                  int) const {
    throw capability_error(name() + ": multipushout not supported");
}

std::optional<GlueResult> KindOps::glue(
    const std::vector<StructObject>& objs,
    const std::vector<std::tuple<int, int, const std::vector<int16_t>*>>& arrows) const {
    switch (kind()) {
        case Kind::Set:
        case Kind::Graph:
        case Kind::BinFunc:
        case Kind::SigmaSet:
        case Kind::SigmaGraph: {
            int q = objs.empty() ? 2 : objs[0].q;
            return glue_setlike(kind(), q, objs, arrows);
        }
        case Kind::VecSpace:
        case Kind::Bilinear: {
            int q = objs.empty() ? 2 : objs[0].q;
            return glue_veclike(kind(), q, objs, arrows);
        }
        default:
            return std::nullopt;
    }
}

AmalgamResult KindOps::amalgamate(Category&, ClassId, const Square&, const Square&) const {
    return AmalgamResult{};
}

int KindOps::hom_budget(const StructObject& A, const StructObject& B) const {
    double est = std::pow(double(std::max<int>(B.n, 1)), double(A.n));
    return est > 2e9 ? 2'000'000'000 : int(est);
}

Category::Category(std::unique_ptr<KindOps> ops, long hom_cap)
    : ops_(std::move(ops)), hom_cap_(hom_cap) {
    name_ = ops_->name();
    class_defs_ = ops_->classes();
    class_member_cache_.resize(class_defs_.size());
    fs_defs_ = ops_->factorization_systems();
    for (auto& f : fs_defs_) fs_.push_back(FsInfo{f.name, class_id(f.e_class), class_id(f.m_class)});
}

ObjId Category::intern(const StructObject& o) {
    std::string key = o.encode();
    auto it = obj_index_.find(key);
    if (it != obj_index_.end()) return it->second;
    ObjId id = ObjId(objs_.size());
    objs_.push_back(o);
    obj_index_.emplace(std::move(key), id);
    return id;
}

const std::vector<ObjId>& Category::objects(int max_size) {
    auto it = obj_enum_cache_.find(max_size);
    if (it != obj_enum_cache_.end()) return it->second;
    std::vector<StructObject> raw = ops_->enumerate_objects(max_size);
    std::sort(raw.begin(), raw.end(), [](const StructObject& a, const StructObject& b) {
        if (a.size_measure() != b.size_measure()) return a.size_measure() < b.size_measure();
        return a.encode() < b.encode();
    });
    std::vector<ObjId> ids;
    for (auto& o : raw) ids.push_back(intern(o));
    return obj_enum_cache_.emplace(max_size, std::move(ids)).first->second;
}

std::string Category::mor_key(const Mor& m) const {
    std::string s;
    s.resize(8 + m.tab.size() * 2);
    auto put32 = [&](size_t at, int32_t v) {
        for (int i = 0; i < 4; ++i) s[at + i] = char((v >> (8 * i)) & 0xff);
    };
    put32(0, m.dom);
    put32(4, m.cod);
    for (size_t i = 0; i < m.tab.size(); ++i) {
        s[8 + 2 * i] = char(m.tab[i] & 0xff);
        s[9 + 2 * i] = char((m.tab[i] >> 8) & 0xff);
    }
    return s;
}

MorId Category::intern(Mor m) {
    std::string key = mor_key(m);
    auto it = mor_index_.find(key);
    if (it != mor_index_.end()) return it->second;
    MorId id = MorId(mors_.size());
    mors_.push_back(std::move(m));
    mor_index_.emplace(std::move(key), id);
    return id;
}

MorId Category::intern_checked(Mor m) {
    if (m.dom < 0 || m.cod < 0 || size_t(m.dom) >= objs_.size() ||
        size_t(m.cod) >= objs_.size())
        throw malformed_diagram("morphism endpoints not interned");
    if (int(m.tab.size()) != obj(m.dom).n)
        throw malformed_diagram("morphism table has wrong length");
    for (auto v : m.tab)
        if (v < 0 || v >= obj(m.cod).n) throw malformed_diagram("table value out of range");
    if (!ops_->valid_mor(obj(m.dom), obj(m.cod), m.tab))
        throw malformed_diagram("table does not preserve the structure");
    return intern(std::move(m));
}

MorId Category::identity(ObjId a) {
    auto it = id_cache_.find(a);
    if (it != id_cache_.end()) return it->second;
    MorId id = intern(Mor{a, a, identity_tab(obj(a).n)});
    id_cache_.emplace(a, id);
    return id;
}

Mor Category::compose_raw(const Mor& g, const Mor& f) const {
    if (f.cod != g.dom) throw malformed_diagram("composition endpoint mismatch");
    return Mor{f.dom, g.cod, compose_tabs(g.tab, f.tab)};
}

MorId Category::compose(MorId g, MorId f) {
    uint64_t key = (uint64_t(uint32_t(g)) << 32) | uint32_t(f);
    auto it = compose_cache_.find(key);
    if (it != compose_cache_.end()) return it->second;
    MorId r = intern(compose_raw(mor(g), mor(f)));
    compose_cache_.emplace(key, r);
    return r;
}

const std::vector<MorId>& Category::homs(ObjId A, ObjId B) {
    uint64_t key = (uint64_t(uint32_t(A)) << 32) | uint32_t(B);
    auto it = hom_cache_.find(key);
    if (it != hom_cache_.end()) return it->second;
    if (ops_->hom_budget(obj(A), obj(B)) > hom_cap_)
        throw scope_exceeded(name_ + ": hom-set enumeration beyond configured cap");
    std::vector<std::vector<int16_t>> tabs = ops_->enumerate_homs(obj(A), obj(B));
    std::sort(tabs.begin(), tabs.end());
    std::vector<MorId> ids;
    ids.reserve(tabs.size());
    for (auto& t : tabs) ids.push_back(intern(Mor{A, B, std::move(t)}));
    return hom_cache_.emplace(key, std::move(ids)).first->second;
}

const std::vector<MorId>& Category::homs_in(ClassId c, ObjId A, ObjId B) {
    uint64_t key = (uint64_t(uint32_t(A)) << 32) | uint32_t(B);
    key = key * 1000003u + uint64_t(uint32_t(c));
    auto it = hom_class_cache_.find(key);
    if (it != hom_class_cache_.end()) return it->second;
    std::vector<MorId> ids;
    for (MorId f : homs(A, B))
        if (in_class(c, f)) ids.push_back(f);
    return hom_class_cache_.emplace(key, std::move(ids)).first->second;
}

ClassId Category::class_id(const std::string& nm) const {
    for (size_t i = 0; i < class_defs_.size(); ++i)
        if (class_defs_[i].name == nm) return ClassId(i);
    throw contract_error(name_ + ": no morphism class named '" + nm + "'");
}

bool Category::in_class(ClassId c, MorId f) {
    auto& cache = class_member_cache_[size_t(c)];
    auto it = cache.find(f);
    if (it != cache.end()) return it->second;
    bool r = class_defs_[size_t(c)].member(*this, mor(f));
    cache.emplace(f, r);
    return r;
}

const std::vector<MorId>& Category::automorphisms(ObjId a) {
    auto it = aut_cache_.find(a);
    if (it != aut_cache_.end()) return it->second;
    std::vector<MorId> auts;
    for (MorId f : homs(a, a))
        if (is_iso(f)) auts.push_back(f);
    return aut_cache_.emplace(a, std::move(auts)).first->second;
}

bool Category::is_iso_raw(const Mor& m) const {
    const StructObject& A = obj(m.dom);
    const StructObject& B = obj(m.cod);
    if (A.n != B.n || !injective_tab(m.tab, B.n)) return false;
    std::vector<int16_t> inv(B.n);
    for (int i = 0; i < A.n; ++i) inv[m.tab[i]] = int16_t(i);
    return ops_->valid_mor(B, A, inv);
}

bool Category::is_iso(MorId f) { return is_iso_raw(mor(f)); }

Category::Pb Category::pullback(MorId a, MorId b) {
    if (!has_pullback()) throw capability_error(name_ + ": pullback not supported");
    const Mor& ma = mor(a);
    const Mor& mb = mor(b);
    if (ma.cod != mb.cod) throw malformed_diagram("cospan legs have different codomains");
    uint64_t key = (uint64_t(uint32_t(a)) << 32) | uint32_t(b);
    auto it = pb_cache_.find(key);
    if (it != pb_cache_.end()) return it->second;
    PullbackData pd = ops_->pullback(obj(ma.dom), obj(mb.dom), obj(ma.cod), ma.tab, mb.tab);
    ObjId apex = intern(pd.apex);
    Pb res{apex, intern(Mor{apex, ma.dom, std::move(pd.to_a)}),
           intern(Mor{apex, mb.dom, std::move(pd.to_b)})};
    if (pb_cache_.size() < 4'000'000) pb_cache_.emplace(key, res);
    return res;
}

std::vector<Category::MpoInst> Category::multipushout(MorId f, MorId g, int bound) {
    if (!has_multipushout()) throw capability_error(name_ + ": multipushout not supported");
    const Mor& mf = mor(f);
    const Mor& mg = mor(g);
    if (mf.dom != mg.dom) throw malformed_diagram("span legs have different domains");
    std::vector<SpanCoconeInst> insts = ops_->multipushout(*this, mf, mg, bound);
    std::vector<MpoInst> out;
    for (auto& inst : insts) {
        ObjId apex = intern(inst.apex);
        out.push_back(MpoInst{apex, intern(Mor{mf.cod, apex, std::move(inst.from_a)}),
                              intern(Mor{mg.cod, apex, std::move(inst.from_b)})});
    }
    return out;
}

int Category::fs_index(const std::string& nm) const {
    for (size_t i = 0; i < fs_.size(); ++i)
        if (fs_[i].name == nm) return int(i);
    throw capability_error(name_ + ": no factorization system named '" + nm + "'");
}

std::pair<MorId, MorId> Category::factorize(int fs_idx, MorId f) {
    const Mor& m = mor(f);
    FactorizeResult r = fs_defs_[size_t(fs_idx)].factorize(*this, m);
    ObjId mid = intern(r.mid);
    MorId e = intern(Mor{m.dom, mid, std::move(r.e_tab)});
    MorId mm = intern(Mor{mid, m.cod, std::move(r.m_tab)});
    return {e, mm};
}

std::optional<GlueResult> Category::glue(
    const std::vector<ObjId>& objs,
    const std::vector<std::tuple<int, int, MorId>>& arrows) {
    std::vector<StructObject> os;
    for (ObjId o : objs) os.push_back(obj(o));
    GlueArrows as;
    for (auto& [s, d, m] : arrows) as.emplace_back(s, d, &mor(m).tab);
    return ops_->glue(os, as);
}

AmalgamResult Category::amalgamate(ClassId cls, const Square& s1, const Square& s2) {
    if (s1.f != s2.f || s1.g != s2.g)
        throw malformed_diagram("squares do not share their base span");
    return ops_->amalgamate(*this, cls, s1, s2);
}

bool Category::square_commutes(const Square& s) {
    const Mor& f = mor(s.f);
    const Mor& g = mor(s.g);
    const Mor& a = mor(s.a);
    const Mor& b = mor(s.b);
    if (f.dom != g.dom || f.cod != a.dom || g.cod != b.dom || a.cod != b.cod) return false;
    return compose_tabs(a.tab, f.tab) == compose_tabs(b.tab, g.tab);
}

bool Category::square_in_class(ClassId c, const Square& s) {
    return in_class(c, s.f) && in_class(c, s.g) && in_class(c, s.a) && in_class(c, s.b);
}

bool is_mono(Category& cat, MorId f) {
    const Mor& m = cat.mor(f);
    return injective_tab(m.tab, cat.obj(m.cod).n);
}

bool is_mono_bruteforce(Category& cat, MorId f, int max_probe_size) {
    const Mor& m = cat.mor(f);
    for (ObjId X : cat.objects(max_probe_size))
        for (MorId u : cat.homs(X, m.dom))
            for (MorId v : cat.homs(X, m.dom)) {
                if (u == v) continue;
                if (cat.compose(f, u) == cat.compose(f, v)) return false;
            }
    return true;
}

bool class_is_composable(Category& cat, ClassId c, int max_size) {
    const auto& objs = cat.objects(max_size);
    for (ObjId a : objs) {
        for (MorId f : cat.homs(a, a))
            if (cat.is_iso(f) && !cat.in_class(c, f)) return false;
    }
    for (ObjId a : objs)
        for (ObjId b : objs)
            for (MorId f : cat.homs_in(c, a, b))
                for (ObjId d : objs)
                    for (MorId g : cat.homs_in(c, b, d))
                        if (!cat.in_class(c, cat.compose(g, f))) return false;
    return true;
}

bool class_is_left_cancellable(Category& cat, ClassId c, int max_size) {
    const auto& objs = cat.objects(max_size);
    for (ObjId a : objs)
        for (ObjId b : objs)
            for (MorId f : cat.homs(a, b)) {
                if (cat.in_class(c, f)) continue;
                for (ObjId d : objs)
                    for (MorId g : cat.homs(b, d))
                        if (cat.in_class(c, cat.compose(g, f))) return false;
            }
    return true;
}

} // namespace indlift
