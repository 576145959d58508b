#include "stackhom/simplicial.hpp"

#include <fmt/core.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace stackhom {

namespace {

// Sorts the vertex list; returns the permutation sign, or 0 on duplicates.
int sort_with_sign(Simplex& s) {
    int sign = 1;
    for (size_t i = 1; i < s.size(); ++i)
        for (size_t j = i; j > 0 && s[j] < s[j - 1]; --j) {
            std::swap(s[j], s[j - 1]);
            sign = -sign;
        }
    for (size_t i = 1; i < s.size(); ++i)
        if (s[i] == s[i - 1]) return 0;
    return sign;
}

} // namespace

SimplicialComplex::SimplicialComplex(std::vector<std::string> vertex_names,
                                     const std::vector<Simplex>& facets)
    : vertex_names_(std::move(vertex_names)) {
    const long nv = num_vertices();
    std::set<Simplex> closure;
    for (Simplex f : facets) {
        if (f.empty()) throw Error("malformed facet list: empty facet");
        std::sort(f.begin(), f.end());
        for (size_t i = 0; i < f.size(); ++i) {
            if (f[i] < 0 || f[i] >= nv) throw Error("malformed facet list: vertex out of range");
            if (i > 0 && f[i] == f[i - 1]) throw Error("malformed facet list: repeated vertex");
        }
        if (f.size() > 24) throw Error("facet dimension too large");
        const size_t n = f.size();
        for (size_t mask = 1; mask < (size_t(1) << n); ++mask) {
            Simplex sub;
            for (size_t i = 0; i < n; ++i)
                if (mask & (size_t(1) << i)) sub.push_back(f[i]);
            closure.insert(std::move(sub));
        }
    }
    int maxdim = -1;
    for (const auto& s : closure) maxdim = std::max(maxdim, static_cast<int>(s.size()) - 1);
    faces_.assign(static_cast<size_t>(maxdim + 1), {});
    for (const auto& s : closure) faces_[s.size() - 1].push_back(s);
    for (auto& level : faces_) std::sort(level.begin(), level.end());
}

SimplicialComplex SimplicialComplex::from_named_facets(
    std::vector<std::string> vertex_names, const std::vector<std::vector<std::string>>& facets) {
    std::map<std::string, int> index;
    for (size_t i = 0; i < vertex_names.size(); ++i) {
        if (index.count(vertex_names[i])) throw Error("duplicate vertex name");
        index[vertex_names[i]] = static_cast<int>(i);
    }
    std::vector<Simplex> fs;
    for (const auto& f : facets) {
        Simplex s;
        for (const auto& name : f) {
            auto it = index.find(name);
            if (it == index.end()) throw Error(fmt::format("undeclared vertex '{}'", name));
            s.push_back(it->second);
        }
        fs.push_back(std::move(s));
    }
    return SimplicialComplex(std::move(vertex_names), fs);
}

int SimplicialComplex::vertex_index(const std::string& name) const {
    for (size_t i = 0; i < vertex_names_.size(); ++i)
        if (vertex_names_[i] == name) return static_cast<int>(i);
    throw Error(fmt::format("undeclared vertex '{}'", name));
}

long SimplicialComplex::num_faces(int k) const {
    if (k < 0 || k > dim()) return 0;
    return static_cast<long>(faces_[static_cast<size_t>(k)].size());
}

const Simplex& SimplicialComplex::face(int k, long i) const {
    return faces_[static_cast<size_t>(k)][static_cast<size_t>(i)];
}

long SimplicialComplex::face_index(int k, const Simplex& s) const {
    if (k < 0 || k > dim()) return -1;
    const auto& level = faces_[static_cast<size_t>(k)];
    auto it = std::lower_bound(level.begin(), level.end(), s);
    if (it == level.end() || *it != s) return -1;
    return static_cast<long>(it - level.begin());
}

bool SimplicialComplex::has_face(const Simplex& s) const {
    return face_index(static_cast<int>(s.size()) - 1, s) >= 0;
}

std::vector<Simplex> SimplicialComplex::facets() const {
    std::vector<Simplex> out;
    for (int k = 0; k <= dim(); ++k) {
        for (long i = 0; i < num_faces(k); ++i) {
            const Simplex& s = face(k, i);
            bool maximal = true;
            // maximal iff no coface one dimension up contains it
            for (long j = 0; j < num_faces(k + 1) && maximal; ++j) {
                const Simplex& t = face(k + 1, j);
                if (std::includes(t.begin(), t.end(), s.begin(), s.end())) maximal = false;
            }
            if (maximal) out.push_back(s);
        }
    }
    return out;
}

long SimplicialComplex::total_faces() const {
    long t = 0;
    for (int k = 0; k <= dim(); ++k) t += num_faces(k);
    return t;
}

long SimplicialComplex::euler_characteristic() const {
    long chi = 0;
    for (int k = 0; k <= dim(); ++k) chi += (k % 2 == 0) ? num_faces(k) : -num_faces(k);
    return chi;
}

ChainComplex SimplicialComplex::boundary_complex(const Coefficients& c) const {
    ChainComplex cx(c);
    for (int k = 0; k <= dim(); ++k) cx.set_dim(k, num_faces(k));
    for (int k = 1; k <= dim(); ++k) {
        ExactMat d(num_faces(k - 1), num_faces(k));
        for (long j = 0; j < num_faces(k); ++j) {
            const Simplex& s = face(k, j);
            int sign = 1;
            for (size_t drop = 0; drop < s.size(); ++drop) {
                Simplex sub;
                for (size_t i = 0; i < s.size(); ++i)
                    if (i != drop) sub.push_back(s[i]);
                d.at(face_index(k - 1, sub), j) = sign;
                sign = -sign;
            }
        }
        cx.set_differential(k, std::move(d));
    }
    return cx;
}

SimplicialPair::SimplicialPair(SimplicialComplex ambient) : ambient_(std::move(ambient)) {
    infty_.assign(static_cast<size_t>(ambient_.dim() + 1), {});
    for (int k = 0; k <= ambient_.dim(); ++k)
        infty_[static_cast<size_t>(k)].assign(static_cast<size_t>(ambient_.num_faces(k)), 0);
}

SimplicialPair::SimplicialPair(SimplicialComplex ambient,
                               const std::vector<Simplex>& at_infinity_faces)
    : SimplicialPair(std::move(ambient)) {
    for (Simplex f : at_infinity_faces) {
        std::sort(f.begin(), f.end());
        if (!ambient_.has_face(f)) throw Error("at_infinity face not in the ambient complex");
        // close under subsets
        const size_t n = f.size();
        for (size_t mask = 1; mask < (size_t(1) << n); ++mask) {
            Simplex sub;
            for (size_t i = 0; i < n; ++i)
                if (mask & (size_t(1) << i)) sub.push_back(f[i]);
            int k = static_cast<int>(sub.size()) - 1;
            infty_[static_cast<size_t>(k)][static_cast<size_t>(ambient_.face_index(k, sub))] = 1;
        }
    }
}

bool SimplicialPair::at_infinity(int k, long face) const {
    if (k < 0 || k > ambient_.dim()) return false;
    return infty_[static_cast<size_t>(k)][static_cast<size_t>(face)] != 0;
}

bool SimplicialPair::boundary_empty() const {
    for (const auto& level : infty_)
        for (char b : level)
            if (b) return false;
    return true;
}

std::vector<Simplex> SimplicialPair::infinity_faces() const {
    std::vector<Simplex> out;
    for (int k = 0; k <= ambient_.dim(); ++k)
        for (long i = 0; i < ambient_.num_faces(k); ++i)
            if (at_infinity(k, i)) out.push_back(ambient_.face(k, i));
    return out;
}

std::vector<long> SimplicialPair::relative_face_ids(int k) const {
    std::vector<long> ids;
    for (long i = 0; i < ambient_.num_faces(k); ++i)
        if (!at_infinity(k, i)) ids.push_back(i);
    return ids;
}

ChainComplex relative_complex(const SimplicialPair& p, const Coefficients& c) {
    const SimplicialComplex& x = p.ambient();
    ChainComplex full = x.boundary_complex(c);
    ChainComplex cx(c);
    std::vector<std::vector<long>> ids(static_cast<size_t>(x.dim() + 1));
    std::vector<std::map<long, long>> pos(static_cast<size_t>(x.dim() + 1));
    for (int k = 0; k <= x.dim(); ++k) {
        ids[static_cast<size_t>(k)] = p.relative_face_ids(k);
        for (size_t t = 0; t < ids[static_cast<size_t>(k)].size(); ++t)
            pos[static_cast<size_t>(k)][ids[static_cast<size_t>(k)][t]] = static_cast<long>(t);
        cx.set_dim(k, static_cast<long>(ids[static_cast<size_t>(k)].size()));
    }
    for (int k = 1; k <= x.dim(); ++k) {
        ExactMat d(cx.dim(k - 1), cx.dim(k));
        ExactMat ambient_d = full.differential(k);
        const auto& cols = ids[static_cast<size_t>(k)];
        const auto& rowpos = pos[static_cast<size_t>(k - 1)];
        for (size_t j = 0; j < cols.size(); ++j)
            for (long i = 0; i < ambient_d.rows(); ++i) {
                const Rat& v = ambient_d.at(i, cols[j]);
                if (v.is_zero()) continue;
                auto it = rowpos.find(i);
                if (it != rowpos.end()) d.at(it->second, static_cast<long>(j)) = v;
            }
        cx.set_differential(k, std::move(d));
    }
    cx.check();
    return cx;
}

std::vector<ExactMat> simplicial_map_chain(const SimplicialComplex& from,
                                           const SimplicialComplex& to,
                                           const std::vector<int>& vertex_map) {
    if (static_cast<long>(vertex_map.size()) != from.num_vertices())
        throw Error("vertex map size mismatch");
    std::vector<ExactMat> maps;
    for (int k = 0; k <= from.dim(); ++k) {
        ExactMat m(to.num_faces(k), from.num_faces(k));
        for (long j = 0; j < from.num_faces(k); ++j) {
            Simplex image;
            for (int v : from.face(k, j)) image.push_back(vertex_map[static_cast<size_t>(v)]);
            int sign = sort_with_sign(image);
            if (sign == 0) continue;
            long t = to.face_index(k, image);
            if (t < 0) throw Error("simplicial map image is not a face");
            m.at(t, j) = sign;
        }
        maps.push_back(std::move(m));
    }
    return maps;
}

SubdivisionResult barycentric_subdivision(const SimplicialComplex& x) {
    SubdivisionResult r;
    const int d = x.dim();

    // one sd-vertex per face, dimension-major so flags are ascending
    std::vector<std::string> names;
    r.barycenter.assign(static_cast<size_t>(d + 1), {});
    for (int k = 0; k <= d; ++k) {
        r.barycenter[static_cast<size_t>(k)].assign(static_cast<size_t>(x.num_faces(k)), -1);
        for (long i = 0; i < x.num_faces(k); ++i) {
            r.barycenter[static_cast<size_t>(k)][static_cast<size_t>(i)] =
                static_cast<long>(names.size());
            r.source_face.emplace_back(k, i);
            std::string n = "b(";
            const Simplex& s = x.face(k, i);
            for (size_t t = 0; t < s.size(); ++t) {
                if (t) n += ".";
                n += x.vertex_names()[static_cast<size_t>(s[t])];
            }
            n += ")";
            names.push_back(std::move(n));
        }
    }

    // facets: one flag per permutation of each facet
    std::vector<Simplex> sd_facets;
    for (const Simplex& f : x.facets()) {
        Simplex perm = f;
        std::sort(perm.begin(), perm.end());
        do {
            Simplex flag;
            Simplex prefix;
            for (int v : perm) {
                prefix.push_back(v);
                Simplex sorted = prefix;
                std::sort(sorted.begin(), sorted.end());
                int k = static_cast<int>(sorted.size()) - 1;
                flag.push_back(r.barycenter[static_cast<size_t>(k)]
                                           [static_cast<size_t>(x.face_index(k, sorted))]);
            }
            sd_facets.push_back(std::move(flag));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    r.sd = SimplicialComplex(std::move(names), sd_facets);

    // subdivision chain map, recursively: sd(s) = cone at the barycenter
    // over sd(boundary of s)
    std::vector<std::vector<std::map<long, Rat>>> memo(static_cast<size_t>(d + 1));
    for (int k = 0; k <= d; ++k)
        memo[static_cast<size_t>(k)].assign(static_cast<size_t>(x.num_faces(k)), {});
    for (int k = 0; k <= d; ++k) {
        for (long i = 0; i < x.num_faces(k); ++i) {
            std::map<long, Rat>& out = memo[static_cast<size_t>(k)][static_cast<size_t>(i)];
            if (k == 0) {
                out[r.barycenter[0][static_cast<size_t>(i)]] = 1;
                continue;
            }
            const Simplex& s = x.face(k, i);
            const long b = r.barycenter[static_cast<size_t>(k)][static_cast<size_t>(i)];
            const Rat cone_sign = (k % 2 == 0) ? 1 : -1; // [b,w_1..w_k] = (-1)^k [w_1..w_k,b]
            int sign = 1;
            for (size_t drop = 0; drop < s.size(); ++drop) {
                Simplex sub;
                for (size_t t = 0; t < s.size(); ++t)
                    if (t != drop) sub.push_back(s[t]);
                long si = x.face_index(k - 1, sub);
                for (const auto& [sd_id, coeff] :
                     memo[static_cast<size_t>(k - 1)][static_cast<size_t>(si)]) {
                    // append the barycenter: ids are dimension-major so b is last
                    const Simplex& tau = r.sd.face(k - 1, sd_id);
                    Simplex coned = tau;
                    coned.push_back(b);
                    long ci = r.sd.face_index(k, coned);
                    if (ci < 0) throw Error("subdivision: coned flag missing");
                    out[ci] += Rat(sign) * coeff * cone_sign;
                }
                sign = -sign;
            }
        }
    }
    for (int k = 0; k <= d; ++k) {
        ExactMat m(r.sd.num_faces(k), x.num_faces(k));
        for (long i = 0; i < x.num_faces(k); ++i)
            for (const auto& [sd_id, coeff] : memo[static_cast<size_t>(k)][static_cast<size_t>(i)])
                m.at(sd_id, i) = coeff;
        r.subdivide.push_back(std::move(m));
    }

    // aggregation: send each barycenter to the last vertex of its face
    std::vector<int> vmap;
    for (const auto& [k, i] : r.source_face) vmap.push_back(x.face(k, i).back());
    r.aggregate = simplicial_map_chain(r.sd, x, vmap);
    return r;
}

SimplicialPair subdivide_pair(const SimplicialPair& p, const SubdivisionResult& s) {
    std::vector<Simplex> infty;
    for (int k = 0; k <= s.sd.dim(); ++k)
        for (long i = 0; i < s.sd.num_faces(k); ++i) {
            bool inside = true;
            for (int v : s.sd.face(k, i)) {
                auto [fk, fi] = s.source_face[static_cast<size_t>(v)];
                if (!p.at_infinity(fk, fi)) inside = false;
            }
            if (inside) infty.push_back(s.sd.face(k, i));
        }
    return SimplicialPair(s.sd, infty);
}

long ProductResult::block_offset(int n, int p) const {
    if (n < 0 || n >= static_cast<int>(offsets.size())) return -1;
    auto it = offsets[static_cast<size_t>(n)].find(p);
    return it == offsets[static_cast<size_t>(n)].end() ? -1 : it->second;
}

namespace {

// Enumerate monotone staircase paths from (0,0) to (p,q); each path is the
// sequence of its lattice points.
void staircases(int p, int q, std::vector<std::pair<int, int>>& path,
                std::vector<std::vector<std::pair<int, int>>>& out) {
    auto [a, b] = path.back();
    if (a == p && b == q) {
        out.push_back(path);
        return;
    }
    if (a < p) {
        path.emplace_back(a + 1, b);
        staircases(p, q, path, out);
        path.pop_back();
    }
    if (b < q) {
        path.emplace_back(a, b + 1);
        staircases(p, q, path, out);
        path.pop_back();
    }
}

int shuffle_sign(const std::vector<std::pair<int, int>>& path) {
    // parity of inversions between x-moves and preceding y-moves
    int ys = 0, inv = 0;
    for (size_t t = 1; t < path.size(); ++t) {
        if (path[t].first > path[t - 1].first)
            inv += ys;
        else
            ++ys;
    }
    return inv % 2 == 0 ? 1 : -1;
}

} // namespace

ProductResult ez_aw(const SimplicialComplex& x, const SimplicialComplex& y,
                    const Coefficients& c) {
    ProductResult r(c);
    const long ny = y.num_vertices();
    auto pair_id = [ny](int u, int v) { return static_cast<int>(u * ny + v); };

    std::vector<std::string> names;
    for (long u = 0; u < x.num_vertices(); ++u)
        for (long v = 0; v < ny; ++v)
            names.push_back("(" + x.vertex_names()[static_cast<size_t>(u)] + "," +
                            y.vertex_names()[static_cast<size_t>(v)] + ")");

    std::vector<Simplex> facets;
    for (const Simplex& sx : x.facets())
        for (const Simplex& sy : y.facets()) {
            int p = static_cast<int>(sx.size()) - 1, q = static_cast<int>(sy.size()) - 1;
            std::vector<std::pair<int, int>> path{{0, 0}};
            std::vector<std::vector<std::pair<int, int>>> paths;
            staircases(p, q, path, paths);
            for (const auto& pth : paths) {
                Simplex f;
                for (auto [a, b] : pth)
                    f.push_back(pair_id(sx[static_cast<size_t>(a)], sy[static_cast<size_t>(b)]));
                facets.push_back(std::move(f));
            }
        }
    r.product = SimplicialComplex(std::move(names), facets);

    // tensor complex with blocks (p, q = n-p), ascending p
    const int dx = x.dim(), dy = y.dim();
    const int dn = dx + dy;
    // tensor dims per degree
    r.offsets.assign(static_cast<size_t>(dn + 1), {});
    for (int n = 0; n <= dn; ++n) {
        long total = 0;
        for (int p = std::max(0, n - dy); p <= std::min(n, dx); ++p) {
            r.offsets[static_cast<size_t>(n)][p] = total;
            total += x.num_faces(p) * y.num_faces(n - p);
        }
        r.tensor.set_dim(n, total);
    }
    ChainComplex cxx = x.boundary_complex(c), cyy = y.boundary_complex(c);
    for (int n = 1; n <= dn; ++n) {
        ExactMat d(r.tensor.dim(n - 1), r.tensor.dim(n));
        for (int p = std::max(0, n - dy); p <= std::min(n, dx); ++p) {
            const int q = n - p;
            const long off = r.block_offset(n, p);
            const long nyq = y.num_faces(q);
            ExactMat dxp = cxx.differential(p);
            if (p >= 1 && r.block_offset(n - 1, p - 1) >= 0) {
                const long roff = r.block_offset(n - 1, p - 1);
                for (long j = 0; j < x.num_faces(p); ++j)
                    for (long i = 0; i < dxp.rows(); ++i) {
                        const Rat& v = dxp.at(i, j);
                        if (v.is_zero()) continue;
                        for (long t = 0; t < nyq; ++t)
                            d.at(roff + i * nyq + t, off + j * nyq + t) = v;
                    }
            }
            ExactMat dyq = cyy.differential(q);
            if (q >= 1 && r.block_offset(n - 1, p) >= 0) {
                const long roff = r.block_offset(n - 1, p);
                const Rat sign = (p % 2 == 0) ? 1 : -1;
                const long nyq1 = y.num_faces(q - 1);
                for (long j = 0; j < x.num_faces(p); ++j)
                    for (long a = 0; a < nyq; ++a)
                        for (long i = 0; i < nyq1; ++i) {
                            const Rat& v = dyq.at(i, a);
                            if (v.is_zero()) continue;
                            d.at(roff + j * nyq1 + i, off + j * nyq + a) = sign * v;
                        }
            }
        }
        r.tensor.set_differential(n, std::move(d));
    }
    r.tensor.check();

    // shuffle (EZ) and front/back (AW) maps, degreewise
    for (int n = 0; n <= dn; ++n) {
        ExactMat ez(r.product.num_faces(n), r.tensor.dim(n));
        for (int p = std::max(0, n - dy); p <= std::min(n, dx); ++p) {
            const int q = n - p;
            const long off = r.block_offset(n, p);
            const long nyq = y.num_faces(q);
            for (long i = 0; i < x.num_faces(p); ++i) {
                const Simplex& sx = x.face(p, i);
                for (long j = 0; j < nyq; ++j) {
                    const Simplex& sy = y.face(q, j);
                    std::vector<std::pair<int, int>> path{{0, 0}};
                    std::vector<std::vector<std::pair<int, int>>> paths;
                    staircases(p, q, path, paths);
                    for (const auto& pth : paths) {
                        Simplex f;
                        for (auto [a, b] : pth)
                            f.push_back(
                                pair_id(sx[static_cast<size_t>(a)], sy[static_cast<size_t>(b)]));
                        long fi = r.product.face_index(n, f);
                        if (fi < 0) throw Error("shuffle image missing from product");
                        ez.at(fi, off + i * nyq + j) += shuffle_sign(pth);
                    }
                }
            }
        }
        r.ez.push_back(std::move(ez));

        ExactMat aw(r.tensor.dim(n), r.product.num_faces(n));
        for (long fi = 0; fi < r.product.num_faces(n); ++fi) {
            const Simplex& f = r.product.face(n, fi);
            std::vector<int> us, vs;
            for (int w : f) {
                us.push_back(static_cast<int>(w / ny));
                vs.push_back(static_cast<int>(w % ny));
            }
            for (int p = 0; p <= n; ++p) {
                bool ok = true;
                for (int t = 1; t <= p && ok; ++t)
                    if (us[static_cast<size_t>(t)] <= us[static_cast<size_t>(t - 1)]) ok = false;
                for (int t = p + 1; t <= n && ok; ++t)
                    if (vs[static_cast<size_t>(t)] <= vs[static_cast<size_t>(t - 1)]) ok = false;
                if (!ok) continue;
                Simplex front(us.begin(), us.begin() + p + 1);
                Simplex back(vs.begin() + p, vs.end());
                long ix = x.face_index(p, front);
                long iy = y.face_index(n - p, back);
                if (ix < 0 || iy < 0) continue;
                long off = r.block_offset(n, p);
                if (off < 0) continue;
                aw.at(off + ix * y.num_faces(n - p) + iy, fi) += 1;
            }
        }
        r.aw.push_back(std::move(aw));
    }
    return r;
}

SimplicialPair pair_product(const SimplicialPair& a, const SimplicialPair& b) {
    ProductResult pr = ez_aw(a.ambient(), b.ambient(), Coefficients::integers());
    return pair_product_marked(pr, a, b);
}

SimplicialPair pair_product_marked(const ProductResult& pr, const SimplicialPair& a,
                                   const SimplicialPair& b) {
    const long ny = b.ambient().num_vertices();
    std::vector<Simplex> infty;
    for (int n = 0; n <= pr.product.dim(); ++n)
        for (long i = 0; i < pr.product.num_faces(n); ++i) {
            const Simplex& f = pr.product.face(n, i);
            Simplex us, vs;
            for (int w : f) {
                us.push_back(static_cast<int>(w / ny));
                vs.push_back(static_cast<int>(w % ny));
            }
            std::sort(us.begin(), us.end());
            us.erase(std::unique(us.begin(), us.end()), us.end());
            std::sort(vs.begin(), vs.end());
            vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
            long ia = a.ambient().face_index(static_cast<int>(us.size()) - 1, us);
            long ib = b.ambient().face_index(static_cast<int>(vs.size()) - 1, vs);
            if (a.at_infinity(static_cast<int>(us.size()) - 1, ia) ||
                b.at_infinity(static_cast<int>(vs.size()) - 1, ib))
                infty.push_back(f);
        }
    return SimplicialPair(pr.product, infty);
}

std::vector<Rat> fundamental_chain(const SimplicialComplex& x, const std::optional<Orientation>& o,
                                   const Coefficients& c) {
    const int d = x.dim();
    if (d < 0) throw Error("empty complex has no fundamental chain");
    for (const Simplex& f : x.facets())
        if (static_cast<int>(f.size()) - 1 != d) throw Error("complex is not pure-dimensional");

    const bool mod2 = c.kind() == CoeffKind::PrimeField && c.prime() == 2;
    std::vector<Rat> chain(static_cast<size_t>(x.num_faces(d)));
    if (o) {
        if (static_cast<long>(o->sign.size()) != x.num_faces(d))
            throw Error("orientation: one sign per top simplex required");
        for (size_t i = 0; i < chain.size(); ++i) {
            if (o->sign[i] != 1 && o->sign[i] != -1) throw Error("orientation signs must be +-1");
            chain[i] = o->sign[i];
        }
    } else if (mod2) {
        for (auto& v : chain) v = 1;
    } else {
        throw Error("orientation required over this coefficient ring");
    }

    ChainComplex cx = x.boundary_complex(c);
    std::vector<Rat> bd = mat_vec(cx.differential(d), chain);
    for (const Rat& v : bd) {
        bool zero = c.kind() == CoeffKind::PrimeField
                        ? (numerator(v) % Int(c.prime())) == 0
                        : v.is_zero();
        if (!zero) throw Error("not a closed oriented manifold model");
    }
    return chain;
}

std::optional<Orientation> coherent_orientation(const SimplicialComplex& x) {
    const int d = x.dim();
    if (d < 0) return std::nullopt;
    const long top = x.num_faces(d);
    // ridge -> its two cofacets with incidence signs
    std::map<long, std::vector<std::pair<long, int>>> cofacets;
    for (long j = 0; j < top; ++j) {
        const Simplex& s = x.face(d, j);
        int sign = 1;
        for (size_t drop = 0; drop < s.size(); ++drop) {
            Simplex sub;
            for (size_t t = 0; t < s.size(); ++t)
                if (t != drop) sub.push_back(s[t]);
            cofacets[x.face_index(d - 1, sub)].emplace_back(j, sign);
            sign = -sign;
        }
    }
    for (const auto& [ridge, inc] : cofacets)
        if (inc.size() != 2) return std::nullopt;

    Orientation o;
    o.sign.assign(static_cast<size_t>(top), 0);
    for (long start = 0; start < top; ++start) {
        if (o.sign[static_cast<size_t>(start)] != 0) continue;
        o.sign[static_cast<size_t>(start)] = 1;
        std::vector<long> stack{start};
        while (!stack.empty()) {
            long cur = stack.back();
            stack.pop_back();
            const Simplex& s = x.face(d, cur);
            int sign = 1;
            for (size_t drop = 0; drop < s.size(); ++drop) {
                Simplex sub;
                for (size_t t = 0; t < s.size(); ++t)
                    if (t != drop) sub.push_back(s[t]);
                const auto& inc = cofacets[x.face_index(d - 1, sub)];
                for (const auto& [other, osign] : inc) {
                    if (other == cur) continue;
                    int need = -o.sign[static_cast<size_t>(cur)] * sign * osign;
                    int& have = o.sign[static_cast<size_t>(other)];
                    if (have == 0) {
                        have = need;
                        stack.push_back(other);
                    } else if (have != need) {
                        return std::nullopt;
                    }
                }
                sign = -sign;
            }
        }
    }
    return o;
}

GroupAction::GroupAction(FiniteGroup g, std::vector<std::vector<int>> vertex_perm,
                         const SimplicialComplex& x)
    : g_(std::move(g)), perm_(std::move(vertex_perm)) {
    const long nv = x.num_vertices();
    if (static_cast<int>(perm_.size()) != g_.order())
        throw Error("group action: one permutation per element required");
    for (const auto& p : perm_) {
        if (static_cast<long>(p.size()) != nv) throw Error("group action: permutation size mismatch");
        std::vector<char> seen(static_cast<size_t>(nv), 0);
        for (int v : p) {
            if (v < 0 || v >= nv || seen[static_cast<size_t>(v)])
                throw Error("group action: not a permutation");
            seen[static_cast<size_t>(v)] = 1;
        }
    }
    for (long v = 0; v < nv; ++v)
        if (perm_[static_cast<size_t>(g_.identity())][static_cast<size_t>(v)] != v)
            throw Error("group action: identity must act trivially");
    for (int a = 0; a < g_.order(); ++a)
        for (int b = 0; b < g_.order(); ++b)
            for (long v = 0; v < nv; ++v) {
                int lhs = perm_[static_cast<size_t>(a)][static_cast<size_t>(
                    perm_[static_cast<size_t>(b)][static_cast<size_t>(v)])];
                int rhs = perm_[static_cast<size_t>(g_.mul(a, b))][static_cast<size_t>(v)];
                if (lhs != rhs) throw Error("group action: permutations violate the group law");
            }
    for (int e = 0; e < g_.order(); ++e)
        for (int k = 0; k <= x.dim(); ++k)
            for (long i = 0; i < x.num_faces(k); ++i) {
                Simplex img;
                for (int v : x.face(k, i)) img.push_back(perm_[static_cast<size_t>(e)][static_cast<size_t>(v)]);
                std::sort(img.begin(), img.end());
                if (!x.has_face(img)) throw Error("action does not preserve the complex");
            }
}

std::vector<ExactMat> GroupAction::chain_matrices(const SimplicialComplex& x, int elem) const {
    return simplicial_map_chain(x, x, perm_[static_cast<size_t>(elem)]);
}

bool GroupAction::is_regular(const SimplicialComplex& x) const {
    for (int e = 0; e < g_.order(); ++e) {
        if (e == g_.identity()) continue;
        const auto& p = perm_[static_cast<size_t>(e)];
        for (int k = 0; k <= x.dim(); ++k)
            for (long i = 0; i < x.num_faces(k); ++i) {
                const Simplex& s = x.face(k, i);
                Simplex img;
                for (int v : s) img.push_back(p[static_cast<size_t>(v)]);
                Simplex sorted = img;
                std::sort(sorted.begin(), sorted.end());
                if (sorted != s) continue;
                for (size_t t = 0; t < s.size(); ++t)
                    if (img[t] != s[t]) return false; // setwise fixed but not pointwise
            }
    }
    return true;
}

std::vector<std::vector<long>> GroupAction::stabilizer_orders(const SimplicialComplex& x) const {
    std::vector<std::vector<long>> orders(static_cast<size_t>(x.dim() + 1));
    for (int k = 0; k <= x.dim(); ++k) {
        orders[static_cast<size_t>(k)].assign(static_cast<size_t>(x.num_faces(k)), 0);
        for (long i = 0; i < x.num_faces(k); ++i) {
            const Simplex& s = x.face(k, i);
            long count = 0;
            for (int e = 0; e < g_.order(); ++e) {
                Simplex img;
                for (int v : s) img.push_back(perm_[static_cast<size_t>(e)][static_cast<size_t>(v)]);
                std::sort(img.begin(), img.end());
                if (img == s) ++count;
            }
            orders[static_cast<size_t>(k)][static_cast<size_t>(i)] = count;
        }
    }
    return orders;
}

bool GroupAction::is_free(const SimplicialComplex& x) const {
    for (const auto& level : stabilizer_orders(x))
        for (long c : level)
            if (c != 1) return false;
    return true;
}

GroupAction GroupAction::on_subdivision(const SimplicialComplex& x,
                                        const SubdivisionResult& s) const {
    std::vector<std::vector<int>> perms;
    for (int e = 0; e < g_.order(); ++e) {
        std::vector<int> p;
        for (const auto& [k, i] : s.source_face) {
            Simplex img;
            for (int v : x.face(k, i))
                img.push_back(perm_[static_cast<size_t>(e)][static_cast<size_t>(v)]);
            std::sort(img.begin(), img.end());
            long idx = x.face_index(k, img);
            p.push_back(static_cast<int>(s.barycenter[static_cast<size_t>(k)][static_cast<size_t>(idx)]));
        }
        perms.push_back(std::move(p));
    }
    return GroupAction(g_, std::move(perms), s.sd);
}

bool GroupAction::preserves(const SimplicialPair& p) const {
    const SimplicialComplex& x = p.ambient();
    for (int e = 0; e < g_.order(); ++e)
        for (int k = 0; k <= x.dim(); ++k)
            for (long i = 0; i < x.num_faces(k); ++i) {
                if (!p.at_infinity(k, i)) continue;
                Simplex img;
                for (int v : x.face(k, i))
                    img.push_back(perm_[static_cast<size_t>(e)][static_cast<size_t>(v)]);
                std::sort(img.begin(), img.end());
                if (!p.at_infinity(k, x.face_index(k, img))) return false;
            }
    return true;
}

} // namespace stackhom
