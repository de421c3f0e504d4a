#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "indlift/core/morphism.hpp"
#include "indlift/core/object.hpp"

namespace indlift {

class Category;

struct capability_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct contract_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct scope_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct malformed_diagram : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct kind_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A commuting square: span f: C->A, g: C->B with cocone a: A->M, b: B->M.
struct Square {
    MorId f = kNoMor, g = kNoMor, a = kNoMor, b = kNoMor;
    bool operator==(const Square& o) const {
        return f == o.f && g == o.g && a == o.a && b == o.b;
    }
};

struct SquareHash {
    size_t operator()(const Square& s) const {
        uint64_t h = 1469598103934665603ull;
        for (uint64_t v : {uint64_t(uint32_t(s.f)), uint64_t(uint32_t(s.g)),
                           uint64_t(uint32_t(s.a)), uint64_t(uint32_t(s.b))}) {
            h ^= v;
            h *= 1099511628211ull;
        }
        return size_t(h);
    }
};

struct ClassDef {
    std::string name;
    std::function<bool(const Category&, const Mor&)> member;
};

struct PullbackData {
    StructObject apex;
    std::vector<int16_t> to_a, to_b;
};

struct SpanCoconeInst {
    StructObject apex;
    std::vector<int16_t> from_a, from_b;
};

struct GlueResult {
    StructObject obj;
    std::vector<std::vector<int16_t>> inj; // one table per diagram object
};

struct FactorizeResult {
    StructObject mid;
    std::vector<int16_t> e_tab, m_tab;
};

enum class AmalgamStatus { Found, Impossible, Unknown };

struct AmalgamResult {
    AmalgamStatus status = AmalgamStatus::Unknown;
    StructObject apex;                    // when Found
    std::vector<int16_t> from_n1, from_n2; // embeddings of the two apexes
    std::string certificate;              // when Impossible: short reason
};

struct FsDef {
    std::string name;
    std::string e_class, m_class;
    std::function<FactorizeResult(const Category&, const Mor&)> factorize;
};

// Per-instance strategy: validity, enumeration and the exact constructions a
// kind supports. The Category engine layers caching and bookkeeping on top.
class KindOps {
public:
    virtual ~KindOps() = default;
    virtual std::string name() const = 0;
    virtual Kind kind() const = 0;
    virtual bool valid_mor(const StructObject& A, const StructObject& B,
                           const std::vector<int16_t>& tab) const = 0;
    virtual std::vector<StructObject> enumerate_objects(int max_size) const = 0;
    virtual std::vector<std::vector<int16_t>> enumerate_homs(const StructObject& A,
                                                             const StructObject& B) const = 0;
    virtual std::vector<ClassDef> classes() const = 0;
    virtual std::vector<FsDef> factorization_systems() const { return {}; }

    virtual bool has_pullback() const { return false; }
    virtual PullbackData pullback(const StructObject& A, const StructObject& B,
                                  const StructObject& D, const std::vector<int16_t>& a,
                                  const std::vector<int16_t>& b) const;

    virtual bool has_multipushout() const { return false; }
    virtual std::vector<SpanCoconeInst> multipushout(Category& cat, const Mor& f,
                                                     const Mor& g, int bound) const;

    // Colimit-style gluing of a finite diagram of structures. Returns nullopt
    // when the glued structure cannot be assembled consistently.
    virtual std::optional<GlueResult> glue(
        const std::vector<StructObject>& objs,
        const std::vector<std::tuple<int, int, const std::vector<int16_t>*>>& arrows) const;

    // Exact decider for amalgamating two squares over a common span.
    virtual AmalgamResult amalgamate(Category& cat, ClassId cls, const Square& s1,
                                     const Square& s2) const;

    virtual int hom_budget(const StructObject& A, const StructObject& B) const;
};

struct FsInfo {
    std::string name;
    ClassId e_cls, m_cls;
};

class Category {
public:
    explicit Category(std::unique_ptr<KindOps> ops, long hom_cap = 4'000'000);

    const KindOps& ops() const { return *ops_; }
    const std::string& name() const { return name_; }
    Kind kind() const { return ops_->kind(); }

    // -- objects ---------------------------------------------------------
    ObjId intern(const StructObject& o);
    const StructObject& obj(ObjId i) const { return objs_[size_t(i)]; }
    const std::vector<ObjId>& objects(int max_size);

    // -- morphisms ---------------------------------------------------------
    MorId intern(Mor m);
    MorId intern_checked(Mor m); // validates the table against the kind
    const Mor& mor(MorId i) const { return mors_[size_t(i)]; }
    MorId identity(ObjId a);
    MorId compose(MorId g, MorId f);
    Mor compose_raw(const Mor& g, const Mor& f) const;

    const std::vector<MorId>& homs(ObjId A, ObjId B);
    const std::vector<MorId>& homs_in(ClassId c, ObjId A, ObjId B);

    // -- classes -----------------------------------------------------------
    ClassId class_id(const std::string& nm) const;
    const std::string& class_name(ClassId c) const { return class_defs_[size_t(c)].name; }
    int class_count() const { return int(class_defs_.size()); }
    bool in_class(ClassId c, MorId f);
    bool in_class_raw(ClassId c, const Mor& m) const { return class_defs_[size_t(c)].member(*this, m); }

    // -- isos --------------------------------------------------------------
    const std::vector<MorId>& automorphisms(ObjId a);
    bool is_iso(MorId f);
    bool is_iso_raw(const Mor& m) const;

    // -- capabilities --------------------------------------------------------
    bool has_pullback() const { return ops_->has_pullback(); }
    struct Pb {
        ObjId apex;
        MorId to_a, to_b;
    };
    Pb pullback(MorId a, MorId b); // cached per cospan

    bool has_multipushout() const { return ops_->has_multipushout(); }
    struct MpoInst {
        ObjId apex;
        MorId from_a, from_b;
    };
    std::vector<MpoInst> multipushout(MorId f, MorId g, int bound);

    int fs_count() const { return int(fs_.size()); }
    const FsInfo& fs(int i) const { return fs_[size_t(i)]; }
    int fs_index(const std::string& nm) const;
    std::pair<MorId, MorId> factorize(int fs_idx, MorId f);

    std::optional<GlueResult> glue(
        const std::vector<ObjId>& objs,
        const std::vector<std::tuple<int, int, MorId>>& arrows);

    AmalgamResult amalgamate(ClassId cls, const Square& s1, const Square& s2);

    // square helpers
    bool square_commutes(const Square& s);
    bool square_in_class(ClassId c, const Square& s);
    Square transpose(const Square& s) const { return Square{s.g, s.f, s.b, s.a}; }

    long interned_mor_count() const { return long(mors_.size()); }

private:
    std::unique_ptr<KindOps> ops_;
    std::string name_;
    long hom_cap_;

    std::vector<StructObject> objs_;
    std::unordered_map<std::string, ObjId> obj_index_;
    std::unordered_map<int, std::vector<ObjId>> obj_enum_cache_;

    std::vector<Mor> mors_;
    std::unordered_map<std::string, MorId> mor_index_;
    std::unordered_map<uint64_t, std::vector<MorId>> hom_cache_;
    std::unordered_map<uint64_t, std::vector<MorId>> hom_class_cache_;
    std::unordered_map<uint64_t, MorId> compose_cache_;
    std::unordered_map<ObjId, MorId> id_cache_;
    std::unordered_map<ObjId, std::vector<MorId>> aut_cache_;
    std::unordered_map<uint64_t, Pb> pb_cache_;
    std::vector<std::unordered_map<MorId, bool>> class_member_cache_;

    std::vector<ClassDef> class_defs_;
    std::vector<FsDef> fs_defs_;
    std::vector<FsInfo> fs_;

    std::string mor_key(const Mor& m) const;
};

// Left-cancellation probe against all enumerated parallel pairs; the shipped
// kinds coincide with carrier injectivity, which tests assert.
bool is_mono_bruteforce(Category& cat, MorId f, int max_probe_size);
bool is_mono(Category& cat, MorId f);

// Class sanity probes, checked on an enumerated scope.
bool class_is_composable(Category& cat, ClassId c, int max_size);
bool class_is_left_cancellable(Category& cat, ClassId c, int max_size);

} // namespace indlift
