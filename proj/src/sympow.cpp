#include "symres/sympow.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include <json.hpp>

#include "symres/betti.hpp"
#include "symres/errors.hpp"

namespace symres {

namespace {

void divided_rec(int slots, int degree, std::vector<int>& cur, std::vector<std::vector<int>>& out)
{
    if (slots == 1) {
        cur.push_back(degree);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int e = degree; e >= 0; --e) { // descending lex
        cur.push_back(e);
        divided_rec(slots - 1, degree - e, cur, out);
        cur.pop_back();
    }
}

void exterior_rec(int rank, int degree, int start, std::vector<int>& cur,
                  std::vector<std::vector<int>>& out)
{
    if (static_cast<int>(cur.size()) == degree) {
        out.push_back(cur);
        return;
    }
    int need = degree - static_cast<int>(cur.size());
    for (int i = start; i <= rank - need; ++i) {
        cur.push_back(i);
        exterior_rec(rank, degree, i + 1, cur, out);
        cur.pop_back();
    }
}

/* emissions of the two block-map kernels: replacement factor pair plus an
 * integer scalar and the phi entry feeding the coefficient */
struct Emission {
    std::vector<int> divided;
    std::vector<int> exterior;
    int scalar = 1;
    const Polynomial* entry = nullptr;
};

/* A: lower divided exponent l (a drop from exponent e carries the factor e),
 * wedge phi(f_l) into the exterior factor with the insertion sign.
 * u over the columns of phi, v over the rows. */
std::vector<Emission> kernel_A(const PolyMatrix& phi, const std::vector<int>& u,
                               const std::vector<int>& v)
{
    std::vector<Emission> out;
    for (std::size_t l = 0; l < u.size(); ++l) {
        if (u[l] == 0)
            continue;
        for (std::size_t g = 0; g < phi.rows(); ++g) {
            const Polynomial& e = phi.at(g, l);
            if (e.is_zero())
                continue;
            if (std::binary_search(v.begin(), v.end(), static_cast<int>(g)))
                continue; // wedge annihilation
            Emission em;
            em.divided = u;
            --em.divided[l];
            em.exterior = v;
            auto pos = std::lower_bound(em.exterior.begin(), em.exterior.end(),
                                        static_cast<int>(g));
            int before = static_cast<int>(pos - em.exterior.begin());
            em.exterior.insert(pos, static_cast<int>(g));
            em.scalar = (before % 2 == 0) ? u[l] : -u[l];
            em.entry = &e;
            out.push_back(std::move(em));
        }
    }
    return out;
}

/* B: delete the l-th wedge factor with sign (-1)^{l+1} and raise a divided
 * exponent by the cup rule (coefficient 1).
 * w over the columns of phi, u over the rows. */
std::vector<Emission> kernel_B(const PolyMatrix& phi, const std::vector<int>& w,
                               const std::vector<int>& u)
{
    std::vector<Emission> out;
    for (std::size_t pos = 0; pos < w.size(); ++pos) {
        int del_sign = (pos % 2 == 0) ? 1 : -1;
        std::size_t col = static_cast<std::size_t>(w[pos]);
        for (std::size_t g = 0; g < phi.rows(); ++g) {
            const Polynomial& e = phi.at(g, col);
            if (e.is_zero())
                continue;
            Emission em;
            em.exterior = w;
            em.exterior.erase(em.exterior.begin() + static_cast<long>(pos));
            em.divided = u;
            em.scalar = del_sign;
            ++em.divided[g];
            em.entry = &e;
            out.push_back(std::move(em));
        }
    }
    return out;
}

/* block sign: (-1)^(a_i + sum of a_k over even k < i), the gauge under which
 * d.d = 0 holds and S_1F. equals F. with identical matrices */
int block_sign(const std::vector<int>& a, int i)
{
    int s = a[static_cast<std::size_t>(i)];
    for (int k = 0; k < i; k += 2)
        s += a[static_cast<std::size_t>(k)];
    return (s % 2 == 0) ? 1 : -1;
}

long checked_rank_product(const std::vector<long>& factors)
{
    mpz_class prod = 1;
    for (long f : factors)
        prod *= f;
    if (!prod.fits_slong_p())
        throw GuardError("component block rank overflows: " + prod.get_str());
    return prod.get_si();
}

std::vector<std::vector<int>> factor_basis(int position, long module_rank, int degree)
{
    return position % 2 == 0 ? divided_basis(static_cast<int>(module_rank), degree)
                             : exterior_basis(static_cast<int>(module_rank), degree);
}

/* per-block iteration state: factor bases, index lookups, strides */
struct BlockBases {
    std::vector<std::vector<std::vector<int>>> bases; // per position
    std::vector<std::map<std::vector<int>, long>> index; // per position
    std::vector<long> strides;

    static BlockBases build(const FreeResolution& res, const Composition& comp)
    {
        const int p = res.pd();
        BlockBases bb;
        bb.bases.resize(static_cast<std::size_t>(p) + 1);
        bb.index.resize(static_cast<std::size_t>(p) + 1);
        for (int i = 0; i <= p; ++i) {
            bb.bases[static_cast<std::size_t>(i)] =
                factor_basis(i, res.betti[static_cast<std::size_t>(i)],
                             comp.a[static_cast<std::size_t>(i)]);
            auto& idx = bb.index[static_cast<std::size_t>(i)];
            const auto& list = bb.bases[static_cast<std::size_t>(i)];
            for (long k = 0; k < static_cast<long>(list.size()); ++k)
                idx.emplace(list[static_cast<std::size_t>(k)], k);
        }
        bb.strides.assign(static_cast<std::size_t>(p) + 1, 1);
        for (int i = p - 1; i >= 0; --i)
            bb.strides[static_cast<std::size_t>(i)] =
                bb.strides[static_cast<std::size_t>(i) + 1] *
                static_cast<long>(bb.bases[static_cast<std::size_t>(i) + 1].size());
        return bb;
    }

    long size() const
    {
        return strides[0] * static_cast<long>(bases[0].size());
    }
};

} // namespace

std::vector<std::vector<int>> divided_basis(int rank, int degree)
{
    if (rank < 0 || degree < 0)
        throw InputError("divided_basis: negative arguments");
    std::vector<std::vector<int>> out;
    if (rank == 0) {
        if (degree == 0)
            out.push_back({});
        return out;
    }
    std::vector<int> cur;
    divided_rec(rank, degree, cur, out);
    return out;
}

std::vector<std::vector<int>> exterior_basis(int rank, int degree)
{
    if (rank < 0 || degree < 0)
        throw InputError("exterior_basis: negative arguments");
    std::vector<std::vector<int>> out;
    if (degree > rank)
        return out;
    std::vector<int> cur;
    exterior_rec(rank, degree, 0, cur, out);
    return out;
}

const Block* ComponentSpec::find(const std::vector<int>& comp) const
{
    for (const auto& b : blocks)
        if (b.comp.a == comp)
            return &b;
    return nullptr;
}

const Block& ComponentSpec::block_of_index(long index) const
{
    for (const auto& b : blocks)
        if (index >= b.offset && index < b.offset + b.rank)
            return b;
    throw std::logic_error("component basis index out of range");
}

ComponentSpec component_spec(const FreeResolution& res, int j, int t)
{
    if (j < 0)
        throw InputError("component_spec: j must be >= 0");
    const int p = res.pd();
    ComponentSpec spec;
    spec.t = t;
    for (Composition& comp : enumerate_compositions(j, t, p)) {
        Block blk;
        blk.factor_ranks.reserve(static_cast<std::size_t>(p) + 1);
        for (int i = 0; i <= p; ++i) {
            long b = res.betti[static_cast<std::size_t>(i)];
            long a = comp.a[static_cast<std::size_t>(i)];
            mpz_class f = (i % 2 == 0) ? divided_power_rank(b, a) : binomial(b, a);
            if (!f.fits_slong_p())
                throw GuardError("factor rank overflows: " + f.get_str());
            blk.factor_ranks.push_back(f.get_si());
        }
        blk.rank = checked_rank_product(blk.factor_ranks);
        blk.offset = spec.total_rank;
        blk.comp = std::move(comp);
        spec.total_rank += blk.rank;
        spec.blocks.push_back(std::move(blk));
    }
    return spec;
}

long expected_length(const FreeResolution& res, int j)
{
    return expected_pd(res.betti, j);
}

namespace {

PolyMatrix pair_map_matrix(const PolyMatrix& phi, int a_src, int a_dst, bool a_kind)
{
    if (a_src < 1 || a_dst < 0)
        throw InputError("pair map: need a_src >= 1 and a_dst >= 0");
    const RingPtr& ring = phi.ring();
    const int f_rank = static_cast<int>(phi.cols());
    const int g_rank = static_cast<int>(phi.rows());

    if (a_kind) {
        auto src_div = divided_basis(f_rank, a_src);
        auto src_ext = exterior_basis(g_rank, a_dst);
        auto dst_div = divided_basis(f_rank, a_src - 1);
        auto dst_ext = exterior_basis(g_rank, a_dst + 1);
        std::map<std::vector<int>, long> div_idx, ext_idx;
        for (long k = 0; k < static_cast<long>(dst_div.size()); ++k)
            div_idx.emplace(dst_div[static_cast<std::size_t>(k)], k);
        for (long k = 0; k < static_cast<long>(dst_ext.size()); ++k)
            ext_idx.emplace(dst_ext[static_cast<std::size_t>(k)], k);
        PolyMatrix m(ring, dst_div.size() * dst_ext.size(), src_div.size() * src_ext.size());
        for (std::size_t ui = 0; ui < src_div.size(); ++ui)
            for (std::size_t vi = 0; vi < src_ext.size(); ++vi) {
                long col = static_cast<long>(ui * src_ext.size() + vi);
                for (const Emission& em : kernel_A(phi, src_div[ui], src_ext[vi])) {
                    long row = div_idx.at(em.divided) * static_cast<long>(dst_ext.size()) +
                               ext_idx.at(em.exterior);
                    m.at(static_cast<std::size_t>(row), static_cast<std::size_t>(col)) +=
                        em.entry->scale(Coeff::from_int(em.scalar, ring->characteristic()));
                }
            }
        return m;
    }

    auto src_ext = exterior_basis(f_rank, a_src);
    auto src_div = divided_basis(g_rank, a_dst);
    auto dst_ext = exterior_basis(f_rank, a_src - 1);
    auto dst_div = divided_basis(g_rank, a_dst + 1);
    std::map<std::vector<int>, long> div_idx, ext_idx;
    for (long k = 0; k < static_cast<long>(dst_div.size()); ++k)
        div_idx.emplace(dst_div[static_cast<std::size_t>(k)], k);
    for (long k = 0; k < static_cast<long>(dst_ext.size()); ++k)
        ext_idx.emplace(dst_ext[static_cast<std::size_t>(k)], k);
    PolyMatrix m(ring, dst_ext.size() * dst_div.size(), src_ext.size() * src_div.size());
    for (std::size_t wi = 0; wi < src_ext.size(); ++wi)
        for (std::size_t ui = 0; ui < src_div.size(); ++ui) {
            long col = static_cast<long>(wi * src_div.size() + ui);
            for (const Emission& em : kernel_B(phi, src_ext[wi], src_div[ui])) {
                long row = ext_idx.at(em.exterior) * static_cast<long>(dst_div.size()) +
                           div_idx.at(em.divided);
                m.at(static_cast<std::size_t>(row), static_cast<std::size_t>(col)) +=
                    em.entry->scale(Coeff::from_int(em.scalar, ring->characteristic()));
            }
        }
    return m;
}

} // namespace

PolyMatrix build_A_map(const PolyMatrix& phi, int a_src, int a_dst)
{
    return pair_map_matrix(phi, a_src, a_dst, true);
}

PolyMatrix build_B_map(const PolyMatrix& phi, int a_src, int a_dst)
{
    return pair_map_matrix(phi, a_src, a_dst, false);
}

SymPowerComplex assemble_complex(const FreeResolution& res, int j, const AssembleOptions& opts)
{
    if (j < 0)
        throw InputError("assemble_complex: j must be >= 0");
    const int p = res.pd();
    const std::uint32_t ch = res.ring->characteristic();
    bool gate_ok = (ch == 0) || (static_cast<long>(ch) > static_cast<long>(j) * p);
    if (!gate_ok && !opts.force_characteristic)
        throw InputError("characteristic " + std::to_string(ch) + " does not exceed j*p = " +
                         std::to_string(static_cast<long>(j) * p) +
                         "; the construction needs 2..j*p invertible (use the force flag to "
                         "assemble anyway)");

    SymPowerComplex cx;
    cx.ring = res.ring;
    cx.j = j;
    cx.char_forced = !gate_ok;

    const long len = (j == 0) ? 0 : expected_length(res, j);
    long total = 0;
    for (long t = 0; t <= len; ++t) {
        cx.components.push_back(component_spec(res, j, static_cast<int>(t)));
        total += cx.components.back().total_rank;
        if (total > opts.rank_cap)
            throw GuardError("total complex rank exceeds the cap of " +
                             std::to_string(opts.rank_cap));
    }

    for (long t = 1; t <= len; ++t) {
        const ComponentSpec& src = cx.components[static_cast<std::size_t>(t)];
        const ComponentSpec& dst = cx.components[static_cast<std::size_t>(t) - 1];
        PolyMatrix d(res.ring, static_cast<std::size_t>(dst.total_rank),
                     static_cast<std::size_t>(src.total_rank));

        for (const Block& blk : src.blocks) {
            if (blk.rank == 0)
                continue;
            BlockBases src_bases = BlockBases::build(res, blk.comp);
            for (int i = 0; i < p; ++i) {
                if (blk.comp.a[static_cast<std::size_t>(i) + 1] < 1)
                    continue;
                std::vector<int> target = blk.comp.a;
                ++target[static_cast<std::size_t>(i)];
                --target[static_cast<std::size_t>(i) + 1];
                const Block* tblk = dst.find(target);
                if (!tblk)
                    throw std::logic_error("target composition missing from component");
                if (tblk->rank == 0)
                    continue;
                Composition tcomp;
                tcomp.a = target;
                tcomp.j = j;
                tcomp.t = static_cast<int>(t) - 1;
                BlockBases dst_bases = BlockBases::build(res, tcomp);
                const PolyMatrix& phi = res.maps[static_cast<std::size_t>(i)];
                const int sgn = block_sign(blk.comp.a, i);
                const bool use_A = (i % 2 == 1);

                /* odometer over the source tuple */
                std::vector<long> tuple(static_cast<std::size_t>(p) + 1, 0);
                const long src_size = src_bases.size();
                for (long col_local = 0; col_local < src_size; ++col_local) {
                    /* decode indices of the two touched positions */
                    long idx_i = tuple[static_cast<std::size_t>(i)];
                    long idx_i1 = tuple[static_cast<std::size_t>(i) + 1];
                    const auto& fac_i =
                        src_bases.bases[static_cast<std::size_t>(i)][static_cast<std::size_t>(idx_i)];
                    const auto& fac_i1 = src_bases.bases[static_cast<std::size_t>(i) + 1]
                                                        [static_cast<std::size_t>(idx_i1)];
                    std::vector<Emission> emissions =
                        use_A ? kernel_A(phi, fac_i1, fac_i) : kernel_B(phi, fac_i1, fac_i);
                    if (!emissions.empty()) {
                        /* base row index with the two touched slots zeroed */
                        long row_base = 0;
                        for (int k = 0; k <= p; ++k)
                            if (k != i && k != i + 1)
                                row_base += tuple[static_cast<std::size_t>(k)] *
                                            dst_bases.strides[static_cast<std::size_t>(k)];
                        for (const Emission& em : emissions) {
                            const std::vector<int>& new_i = use_A ? em.exterior : em.divided;
                            const std::vector<int>& new_i1 = use_A ? em.divided : em.exterior;
                            long row = row_base +
                                       dst_bases.index[static_cast<std::size_t>(i)].at(new_i) *
                                           dst_bases.strides[static_cast<std::size_t>(i)] +
                                       dst_bases.index[static_cast<std::size_t>(i) + 1].at(new_i1) *
                                           dst_bases.strides[static_cast<std::size_t>(i) + 1];
                            d.at(static_cast<std::size_t>(tblk->offset + row),
                                 static_cast<std::size_t>(blk.offset + col_local)) +=
                                em.entry->scale(Coeff::from_int(sgn * em.scalar, ch));
                        }
                    }
                    /* advance the odometer, rightmost fastest */
                    for (int k = p; k >= 0; --k) {
                        if (++tuple[static_cast<std::size_t>(k)] <
                            static_cast<long>(src_bases.bases[static_cast<std::size_t>(k)].size()))
                            break;
                        tuple[static_cast<std::size_t>(k)] = 0;
                    }
                }
            }
        }
        cx.differentials.push_back(std::move(d));
    }
    return cx;
}

std::vector<long> SymPowerComplex::component_ranks() const
{
    std::vector<long> r;
    r.reserve(components.size());
    for (const auto& c : components)
        r.push_back(c.total_rank);
    return r;
}

namespace {

std::string comp_str(const std::vector<int>& a)
{
    std::string s = "(";
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(a[i]);
    }
    return s + ")";
}

} // namespace

VerifyReport verify_dd_zero(const SymPowerComplex& c)
{
    VerifyReport rep;
    for (std::size_t k = 0; k + 1 < c.differentials.size(); ++k) {
        PolyMatrix prod = c.differentials[k] * c.differentials[k + 1];
        for (std::size_t r = 0; r < prod.rows(); ++r)
            for (std::size_t cc = 0; cc < prod.cols(); ++cc)
                if (!prod.at(r, cc).is_zero()) {
                    rep.pass = false;
                    Violation v;
                    v.t = static_cast<int>(k) + 1; // the product d_{k+1} . d_{k+2}
                    v.row = static_cast<long>(r);
                    v.col = static_cast<long>(cc);
                    v.value = prod.at(r, cc).str();
                    v.provenance =
                        "row block " +
                        comp_str(c.components[k].block_of_index(static_cast<long>(r)).comp.a) +
                        ", col block " +
                        comp_str(c.components[k + 2].block_of_index(static_cast<long>(cc)).comp.a);
                    rep.violations.push_back(std::move(v));
                }
    }
    return rep;
}

VerifyReport verify_minimal(const SymPowerComplex& c)
{
    VerifyReport rep;
    for (std::size_t k = 0; k < c.differentials.size(); ++k) {
        const PolyMatrix& d = c.differentials[k];
        for (std::size_t r = 0; r < d.rows(); ++r)
            for (std::size_t cc = 0; cc < d.cols(); ++cc)
                if (!d.at(r, cc).constant_term().is_zero()) {
                    rep.pass = false;
                    Violation v;
                    v.t = static_cast<int>(k) + 1;
                    v.row = static_cast<long>(r);
                    v.col = static_cast<long>(cc);
                    v.value = d.at(r, cc).str();
                    v.provenance = "constant term " + d.at(r, cc).constant_term().str();
                    rep.violations.push_back(std::move(v));
                }
    }
    return rep;
}

std::string save_complex(const SymPowerComplex& c)
{
    nlohmann::ordered_json doc;
    doc["ring"] = {{"variables", c.ring->variables()},
                   {"characteristic", c.ring->characteristic()}};
    doc["j"] = c.j;
    doc["components"] = nlohmann::ordered_json::array();
    for (const auto& comp : c.components) {
        nlohmann::ordered_json jc;
        jc["t"] = comp.t;
        jc["total_rank"] = comp.total_rank;
        jc["blocks"] = nlohmann::ordered_json::array();
        for (const auto& b : comp.blocks)
            jc["blocks"].push_back({{"composition", b.comp.a}, {"rank", b.rank}});
        doc["components"].push_back(std::move(jc));
    }
    doc["differentials"] = nlohmann::ordered_json::array();
    for (std::size_t k = 0; k < c.differentials.size(); ++k) {
        const PolyMatrix& d = c.differentials[k];
        nlohmann::ordered_json jd;
        jd["t"] = k + 1;
        jd["rows"] = d.rows();
        jd["cols"] = d.cols();
        nlohmann::ordered_json grid = nlohmann::ordered_json::array();
        for (std::size_t r = 0; r < d.rows(); ++r) {
            nlohmann::ordered_json row = nlohmann::ordered_json::array();
            for (std::size_t cc = 0; cc < d.cols(); ++cc)
                row.push_back(d.at(r, cc).str());
            grid.push_back(std::move(row));
        }
        jd["entries"] = std::move(grid);
        doc["differentials"].push_back(std::move(jd));
    }
    return doc.dump(2) + "\n";
}

BettiTable betti_table_ranks(const SymPowerComplex& c, const std::string& label)
{
    BettiTable tbl;
    tbl.label = label;
    tbl.j = c.j;
    tbl.pd = static_cast<int>(c.length());
    tbl.source = "complex-ranks";
    for (long r : c.component_ranks())
        tbl.values.push_back(r);
    return tbl;
}

} // namespace symres
