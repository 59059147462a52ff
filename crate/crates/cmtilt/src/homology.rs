//! Minimal projective resolutions, Ext, injective dimensions, and the
//! derived invariants built on them.

use crate::algebra::GradedAlgebra;
use crate::linalg::{vec_is_zero, Matrix, Subspace, Vector};
use crate::module::{
    direct_sum, dual, hom0, iso_shift, kernel, projective, regular, simple, strip_projectives,
    top_slots, GradedMap, GradedModule, TopSlot,
};
use crate::scalar::Scalar;
use crate::{Error, Result};
use std::collections::BTreeMap;
use std::sync::Arc;

/// One indecomposable projective summand `e_v A(-gen_deg)` of a cover.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjSlot {
    pub vertex: usize,
    pub gen_deg: i64,
}

/// A finite direct sum of shifted indecomposable projectives with full
/// bookkeeping: `decode[k][pos]` says which (slot, algebra basis element)
/// the `pos`-th basis vector of slice `k` is.
pub struct FreeModule {
    pub module: GradedModule,
    pub slots: Vec<ProjSlot>,
    pub decode: Vec<Vec<(usize, usize)>>,
    /// (slice, position) of each slot's generator `e_v`.
    pub gen_pos: Vec<(usize, usize)>,
}

pub fn free_module(algebra: &Arc<GradedAlgebra>, slots: Vec<ProjSlot>) -> FreeModule {
    if slots.is_empty() {
        return FreeModule {
            module: GradedModule::zero(algebra.clone()),
            slots,
            decode: Vec::new(),
            gen_pos: Vec::new(),
        };
    }
    // Build via direct sums of single projectives, then reconstruct the
    // decode table in the same slice-concatenation order direct_sum uses.
    let parts: Vec<GradedModule> = slots
        .iter()
        .map(|s| projective(algebra, s.vertex, s.gen_deg))
        .collect();
    let refs: Vec<&GradedModule> = parts.iter().collect();
    let module = direct_sum(&refs);
    // items per slot, grouped by degree, in algebra basis order (this is the
    // order module_on_basis emits rows in)
    let min = module.min_deg;
    let nslice = module.slices();
    let mut decode: Vec<Vec<(usize, usize)>> = vec![Vec::new(); nslice];
    let mut gen_pos = vec![(0usize, 0usize); slots.len()];
    for k in 0..nslice {
        let d = min + k as i64;
        for (s, slot) in slots.iter().enumerate() {
            for i in 0..algebra.dim() {
                let be = &algebra.basis[i];
                if be.src == slot.vertex && be.degree + slot.gen_deg == d {
                    if be.idempotent {
                        gen_pos[s] = (k, decode[k].len());
                    }
                    decode[k].push((s, i));
                }
            }
        }
        assert_eq!(decode[k].len(), module.dims[k], "decode table mismatch");
    }
    FreeModule { module, slots, decode, gen_pos }
}

/// A surjection from a free module onto `m`.
pub struct Cover {
    pub free: FreeModule,
    pub map: GradedMap,
}

impl Cover {
    pub fn gen_degs(&self) -> Vec<i64> {
        self.free.slots.iter().map(|s| s.gen_deg).collect()
    }
}

/// Cover of `m` generated by the given slots-with-lifts (each lift must
/// satisfy `lift · e_v = lift`). The lifts must generate `m`.
pub fn cover_from_slots(m: &GradedModule, tops: &[TopSlot]) -> Cover {
    let algebra = m.algebra.clone();
    let slots: Vec<ProjSlot> = tops
        .iter()
        .map(|t| ProjSlot { vertex: t.vertex, gen_deg: t.degree })
        .collect();
    let free = free_module(&algebra, slots);
    let f = m.field();
    let p = &free.module;
    let mut mats: Vec<Matrix> = (0..p.slices())
        .map(|k| Matrix::zero(f, p.dims[k], m.dim_at(p.min_deg + k as i64)))
        .collect();
    for k in 0..p.slices() {
        let d = p.min_deg + k as i64;
        for (pos, &(s, i)) in free.decode[k].iter().enumerate() {
            let t = &tops[s];
            let Some(mk) = m.slice_of(t.degree) else { continue };
            let img = m.apply_elem(mk, &t.lift, &algebra.unit_vector(i));
            for (tk, v) in img {
                assert_eq!(m.min_deg + tk as i64, d, "cover degree bookkeeping");
                for (j, c) in v.iter().enumerate() {
                    mats[k].set(pos, j, c.clone());
                }
            }
        }
    }
    let map = GradedMap { source: p.clone(), target: m.clone(), mats };
    debug_assert!(map.verify().is_ok());
    Cover { free, map }
}

/// Minimal projective cover, from the graded top.
pub fn projective_cover(m: &GradedModule) -> Cover {
    let tops = top_slots(m);
    let c = cover_from_slots(m, &tops);
    debug_assert!(m.is_zero() || c.map.is_surjective(), "cover not surjective");
    c
}

/// A (non-minimal) cover hitting every basis vector; used as an independent
/// oracle, since Ext does not depend on the choice of resolution.
pub fn fat_cover(m: &GradedModule) -> Cover {
    let mut tops = Vec::new();
    for k in 0..m.slices() {
        for i in 0..m.dims[k] {
            let mut unit = vec![m.field().zero(); m.dims[k]];
            unit[i] = m.field().one();
            for v in 0..m.algebra.num_vertices {
                let lift = m.act(m.algebra.vertex_idem[v], k).apply(&unit);
                if !vec_is_zero(&lift) {
                    tops.push(TopSlot { vertex: v, degree: m.min_deg + k as i64, lift });
                }
            }
        }
    }
    cover_from_slots(m, &tops)
}

/// First syzygy (kernel of the minimal cover).
pub fn syzygy(m: &GradedModule) -> GradedModule {
    if m.is_zero() {
        return GradedModule::zero(m.algebra.clone());
    }
    let c = projective_cover(m);
    kernel(&c.map).0.normalized()
}

pub struct Resolution {
    /// covers[n] covers the (n-1)-st syzygy (covers[0] covers M itself).
    pub covers: Vec<Cover>,
    /// syzygies[n] = kernel of covers[n].map (so syzygies[n] = Ω^{n+1} M).
    pub syzygies: Vec<GradedModule>,
    /// inclusions syzygies[n] -> covers[n].free.module
    pub incls: Vec<GradedMap>,
    /// true when the last syzygy is zero
    pub complete: bool,
}

impl Resolution {
    /// Differential `d^n: P^n -> P^{n-1}` for `n >= 1`.
    pub fn diff(&self, n: usize) -> GradedMap {
        assert!(n >= 1 && n < self.covers.len());
        self.covers[n].map.then(&self.incls[n - 1])
    }

    pub fn pdim(&self) -> Option<usize> {
        self.complete.then(|| {
            // last cover may cover the zero module only when M itself is 0
            self.covers.len().saturating_sub(1)
        })
    }

    /// Largest generator degree appearing in any cover so far.
    pub fn max_gen_deg(&self) -> Option<i64> {
        self.covers
            .iter()
            .flat_map(|c| c.free.slots.iter().map(|s| s.gen_deg))
            .max()
    }
}

/// Resolve `m` by minimal (or fat) covers, up to `steps` covers past the
/// zeroth, stopping early when a syzygy vanishes.
pub fn resolve_with(m: &GradedModule, steps: usize, fat: bool) -> Resolution {
    let mut covers = Vec::new();
    let mut syzygies = Vec::new();
    let mut incls = Vec::new();
    let mut complete = false;
    let mut current = m.normalized();
    if current.is_zero() {
        return Resolution { covers, syzygies, incls, complete: true };
    }
    for _ in 0..=steps {
        let c = if fat { fat_cover(&current) } else { projective_cover(&current) };
        let (ker, incl) = kernel(&c.map);
        let ker = ker.normalized();
        covers.push(c);
        incls.push(incl);
        syzygies.push(ker.clone());
        if ker.is_zero() {
            complete = true;
            break;
        }
        current = ker;
    }
    Resolution { covers, syzygies, incls, complete }
}

pub fn resolve(m: &GradedModule, steps: usize) -> Resolution {
    resolve_with(m, steps, false)
}

/// Projective dimension, or None if it exceeds `cap`.
pub fn pdim(m: &GradedModule, cap: usize) -> Option<usize> {
    let res = resolve(m, cap);
    res.pdim()
}

pub fn is_projective_module(m: &GradedModule) -> bool {
    syzygy(m).is_zero()
}

// ---------------------------------------------------------------------------
// Ext
// ---------------------------------------------------------------------------

/// dim Ext^n(M, N(j))_0 for every internal degree j in the finite window
/// where it can be nonzero. Requires `res` to have covers through n+1 or be
/// complete earlier.
pub fn ext_table(res: &Resolution, n: usize, nmod: &GradedModule) -> BTreeMap<i64, usize> {
    let mut out = BTreeMap::new();
    if nmod.is_zero() {
        return out;
    }
    if n >= res.covers.len() {
        assert!(res.complete, "resolution too short for Ext^{n}");
        return out;
    }
    assert!(
        n + 1 < res.covers.len() || res.complete,
        "resolution too short for Ext^{n}"
    );
    let _f = nmod.field();
    // internal degree window
    let mut degs: Vec<i64> = Vec::new();
    for k in n.saturating_sub(1)..=(n + 1).min(res.covers.len() - 1) {
        degs.extend(res.covers[k].free.slots.iter().map(|s| s.gen_deg));
    }
    let (dmin, dmax) = (*degs.iter().min().unwrap(), *degs.iter().max().unwrap());
    let jlo = nmod.min_deg - dmax;
    let jhi = nmod.max_deg() - dmin;
    for j in jlo..=jhi {
        let rank_prev = if n == 0 { 0 } else { delta_matrix(res, n - 1, nmod, j).rank() };
        let delta_n = delta_matrix(res, n, nmod, j);
        let ker_n = delta_n.rows - delta_n.rank();
        let dim = ker_n - rank_prev;
        if dim > 0 {
            out.insert(j, dim);
        }
    }
    out
}

/// Total dimension of Ext^n(M, N) over all internal degrees.
pub fn ext_total(res: &Resolution, n: usize, nmod: &GradedModule) -> usize {
    ext_table(res, n, nmod).values().sum()
}

/// Basis data for the cochain space C^k_j = ⊕_slots (N e_v)_{d_s + j}:
/// one coordinate subspace per slot, embedded in the N-slice ambient.
fn cochain_spaces(cover: &Cover, nmod: &GradedModule, j: i64) -> Vec<Subspace> {
    let f = nmod.field();
    cover
        .free
        .slots
        .iter()
        .map(|s| {
            let d = s.gen_deg + j;
            match nmod.slice_of(d) {
                Some(k) if nmod.dims[k] > 0 => {
                    let ev = nmod.algebra.vertex_idem[s.vertex];
                    let mat = nmod.act(ev, k);
                    let mut sp = Subspace::new(f, nmod.dims[k]);
                    for i in 0..mat.rows {
                        sp.insert(&mat.row(i));
                    }
                    sp
                }
                _ => Subspace::new(f, 0),
            }
        })
        .collect()
}

/// Matrix of δ^k: C^k_j -> C^{k+1}_j (rows = domain basis).
fn delta_matrix(res: &Resolution, k: usize, nmod: &GradedModule, j: i64) -> Matrix {
    let f = nmod.field();
    let dom = cochain_spaces(&res.covers[k], nmod, j);
    let dom_dim: usize = dom.iter().map(|s| s.dim()).sum();
    if k + 1 >= res.covers.len() {
        // complete resolution: next cochain space is zero
        return Matrix::zero(f, dom_dim, 0);
    }
    let cod = cochain_spaces(&res.covers[k + 1], nmod, j);
    let cod_dim: usize = cod.iter().map(|s| s.dim()).sum();
    let mut mat = Matrix::zero(f, dom_dim, cod_dim);
    if dom_dim == 0 || cod_dim == 0 {
        return mat;
    }
    let diff = res.diff(k + 1);
    let pk = &res.covers[k].free;
    let pk1 = &res.covers[k + 1].free;
    // For each codomain slot t: decode d(gen_t) in P^k as algebra
    // coefficients per domain slot s. coeff[t][s] is a dense algebra vector.
    let nalg = nmod.algebra.dim();
    let mut coeff: Vec<Vec<Vector>> =
        vec![vec![vec![f.zero(); nalg]; pk.slots.len()]; pk1.slots.len()];
    for (t, &(gk, gpos)) in pk1.gen_pos.iter().enumerate() {
        let src_dim = pk1.module.dims[gk];
        let mut unit = vec![f.zero(); src_dim];
        unit[gpos] = f.one();
        let y = diff.apply(gk, &unit);
        let d_abs = pk1.module.min_deg + gk as i64;
        if let Some(tk) = pk.module.slice_of(d_abs) {
            for (pos, c) in y.iter().enumerate() {
                if !c.is_zero() {
                    let (s, i) = pk.decode[tk][pos];
                    coeff[t][s][i] = coeff[t][s][i].add(c);
                }
            }
        } else {
            assert!(vec_is_zero(&y));
        }
    }
    // offsets
    let dom_off: Vec<usize> = dom
        .iter()
        .scan(0usize, |acc, s| {
            let o = *acc;
            *acc += s.dim();
            Some(o)
        })
        .collect();
    let cod_off: Vec<usize> = cod
        .iter()
        .scan(0usize, |acc, s| {
            let o = *acc;
            *acc += s.dim();
            Some(o)
        })
        .collect();
    for (s, sp) in dom.iter().enumerate() {
        let d_s = pk.slots[s].gen_deg + j;
        let Some(nk) = nmod.slice_of(d_s) else { continue };
        for (r, u) in sp.basis().iter().enumerate() {
            for (t, tsp) in cod.iter().enumerate() {
                if tsp.dim() == 0 {
                    continue;
                }
                let a = &coeff[t][s];
                if a.iter().all(Scalar::is_zero) {
                    continue;
                }
                // w = u · a lives in degree d_t + j
                let img = nmod.apply_elem(nk, u, a);
                let d_t = pk1.slots[t].gen_deg + j;
                for (wk, w) in img {
                    assert_eq!(nmod.min_deg + wk as i64, d_t, "ext degree bookkeeping");
                    let coords = tsp.coords(&w).expect("image inside e_v component");
                    for (c, val) in coords.iter().enumerate() {
                        let cur = mat.get(dom_off[s] + r, cod_off[t] + c).add(val);
                        mat.set(dom_off[s] + r, cod_off[t] + c, cur);
                    }
                }
            }
        }
    }
    mat
}

// ---------------------------------------------------------------------------
// Injective dimension, IG test, gldim, CM test
// ---------------------------------------------------------------------------

/// Graded injective dimension of the right regular module: pdim over A^op
/// of D(A_A).
pub fn idim_right(a: &Arc<GradedAlgebra>, op: &Arc<GradedAlgebra>, cap: usize) -> Option<usize> {
    let d = dual(&regular(a), op);
    pdim(&d, cap)
}

/// Graded injective dimension of the left regular module: pdim over A of
/// D(_AA) = D(A_{A^op}).
pub fn idim_left(a: &Arc<GradedAlgebra>, op: &Arc<GradedAlgebra>, cap: usize) -> Option<usize> {
    let d = dual(&regular(op), a);
    pdim(&d, cap)
}

#[derive(Clone, Debug)]
pub struct IgReport {
    pub right: Option<usize>,
    pub left: Option<usize>,
    pub cap: usize,
}

impl IgReport {
    /// Some(d) when both sides are finite (then they agree and A is d-IG);
    /// None when either exceeded the cap.
    pub fn ig_dimension(&self) -> Option<usize> {
        match (self.right, self.left) {
            (Some(r), Some(l)) => Some(r.max(l)),
            _ => None,
        }
    }
}

pub fn ig_report(a: &Arc<GradedAlgebra>, cap: usize) -> IgReport {
    let op = Arc::new(a.opposite());
    IgReport {
        right: idim_right(a, &op, cap),
        left: idim_left(a, &op, cap),
        cap,
    }
}

/// Graded global dimension: max pdim of the degree-zero simples, or None if
/// any exceeds the cap.
pub fn gldim(a: &Arc<GradedAlgebra>, cap: usize) -> Option<usize> {
    let mut max = 0usize;
    for v in 0..a.num_vertices {
        let s = simple(a, v, 0);
        match pdim(&s, cap) {
            Some(d) => max = max.max(d),
            None => return None,
        }
    }
    Some(max)
}

/// Cohen-Macaulay test over a d-IG algebra: Ext^i(M, A) = 0 for 1 <= i <= d
/// (higher Ext vanish because idim A = d).
pub fn is_cm(m: &GradedModule, d: usize, a_reg: &GradedModule) -> bool {
    if m.is_zero() {
        return true;
    }
    let res = resolve(m, d + 1);
    (1..=d).all(|i| i >= res.covers.len() && res.complete || ext_total(&res, i, a_reg) == 0)
}

// ---------------------------------------------------------------------------
// The invariant g
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GValue {
    pub value: i64,
    /// true when the resolution terminated or became periodic with
    /// non-negative shift, so the maximum is provably attained.
    pub exact: bool,
}

/// sup of generator degrees over a minimal projective resolution of
/// `dual_m` (a module over A^op). Periodicity up to a non-negative shift
/// certifies the supremum; hitting the cap reports a lower bound.
pub fn g_invariant(dual_m: &GradedModule, cap: usize, seed: u64) -> Result<GValue> {
    let m = dual_m.normalized();
    if m.is_zero() {
        return Err(Error::BadInput("g-invariant of the zero module".into()));
    }
    let mut best = i64::MIN;
    let mut current = m;
    let mut seen: Vec<GradedModule> = Vec::new();
    for _ in 0..=cap {
        let c = projective_cover(&current);
        for s in &c.free.slots {
            best = best.max(s.gen_deg);
        }
        let (ker, _) = kernel(&c.map);
        let ker = ker.normalized();
        if ker.is_zero() {
            return Ok(GValue { value: best, exact: true });
        }
        for old in &seen {
            if let Some(j) = iso_shift(&ker, old, seed) {
                // ker ≅ old(j): future covers repeat the cycle, with
                // generator degrees lowered by j each period
                if j >= 0 {
                    return Ok(GValue { value: best, exact: true });
                }
            }
        }
        seen.push(ker.clone());
        current = ker;
    }
    Ok(GValue { value: best, exact: false })
}

// ---------------------------------------------------------------------------
// Stable Hom
// ---------------------------------------------------------------------------

pub struct StableHom {
    pub dim: usize,
    /// Representatives of a basis of the stable quotient.
    pub reps: Vec<GradedMap>,
}

/// Hom(X, Y)_0 modulo maps factoring through a projective. A map factors
/// through a projective iff it factors through the projective cover of Y.
pub fn stable_hom0(x: &GradedModule, y: &GradedModule) -> StableHom {
    let homs = hom0(x, y);
    if homs.is_empty() {
        return StableHom { dim: 0, reps: Vec::new() };
    }
    let cover = projective_cover(y);
    let through: Vec<GradedMap> = hom0(x, &cover.free.module)
        .iter()
        .map(|psi| psi.then(&cover.map))
        .collect();
    let f = x.field();
    let ambient = homs[0].flatten().len();
    let mut span = Subspace::new(f, ambient);
    for t in &through {
        span.insert(&t.flatten());
    }
    let mut reps = Vec::new();
    for h in homs {
        if span.insert(&h.flatten()) {
            reps.push(h);
        }
    }
    StableHom { dim: reps.len(), reps }
}

// ---------------------------------------------------------------------------
// Cosyzygies, g of an algebra, asid numbers, criteria for g <= 0
// ---------------------------------------------------------------------------

/// Cosyzygy Ω^{-1}(M) = D(Ω_{A^op}(D(M))): the cokernel of a minimal
/// injective envelope, computed through the duality with A^op.
pub fn cosyzygy(m: &GradedModule, op: &Arc<GradedAlgebra>) -> GradedModule {
    let a = m.algebra.clone();
    let d = dual(m, op);
    let s = syzygy(&d);
    dual(&s, &a).normalized()
}

/// Terms of the minimal graded injective resolution of M, computed as the
/// dual of the minimal projective resolution of D(M) over A^op: entry n
/// lists (vertex, shift) pairs with I^n = ⊕ I_v(shift). The second return
/// value reports whether the resolution terminated within the cap.
pub fn injective_resolution_terms(
    m: &GradedModule,
    op: &Arc<GradedAlgebra>,
    cap: usize,
) -> (Vec<Vec<(usize, i64)>>, bool) {
    let d = dual(m, op);
    let res = resolve(&d, cap);
    let terms = res
        .covers
        .iter()
        .map(|c| c.free.slots.iter().map(|s| (s.vertex, s.gen_deg)).collect())
        .collect();
    (terms, res.complete)
}

/// g(A): sup of generator degrees along the minimal projective resolution of
/// D(A_A) over A^op, which equals sup{ i : soc(I^n)_{-i} != 0 } over the
/// minimal injective resolution of A_A.
pub fn g_of_algebra(
    a: &Arc<GradedAlgebra>,
    op: &Arc<GradedAlgebra>,
    cap: usize,
    seed: u64,
) -> Result<GValue> {
    g_invariant(&dual(&regular(a), op), cap, seed)
}

/// The asid numbers (α_r, α_ℓ) = (g(A)+1, g(A^op)+1) of the bimodule C in a
/// decomposition A = Λ ⊕ C. Requires A to be IG, otherwise C is not asid.
pub fn asid_numbers(a: &Arc<GradedAlgebra>, cap: usize, seed: u64) -> Result<(i64, i64)> {
    let op = Arc::new(a.opposite());
    let ig = ig_report(a, cap);
    if ig.ig_dimension().is_none() {
        return Err(Error::BadInput("asid numbers require an IG algebra".into()));
    }
    let gr = g_of_algebra(a, &op, cap, seed)?;
    let gl = g_invariant(&dual(&regular(&op), a), cap, seed)?;
    if !gr.exact || !gl.exact {
        return Err(Error::Inconclusive("g value is only a lower bound at the cap".into()));
    }
    Ok((gr.value + 1, gl.value + 1))
}

#[derive(Clone, Debug)]
pub struct GLeZeroReport {
    pub gldim_a0: Option<usize>,
    /// Hom_{A_0^op}(A_{>0}, A_0) = 0 (maps of left A_0-modules).
    pub hom_op_vanishes: bool,
    /// Hom_{A_0}(A_{>0}, A_0) = 0 (maps of right A_0-modules).
    pub hom_vanishes: bool,
    /// A_{>0} has no projective direct summand as a left A_0-module.
    pub no_projective_summand: bool,
    pub criterion_a: bool,
    pub criterion_b: bool,
    pub criterion_c: bool,
}

impl GLeZeroReport {
    pub fn any(&self) -> bool {
        self.criterion_a || self.criterion_b || self.criterion_c
    }
}

/// A_{>0} as a one-slice module over `owner`, which must be A_0 (`left =
/// false`, right action) or A_0^op (`left = true`, encoding the left
/// action). `deg0[i]` is the A-basis index of owner basis element i.
fn positive_part_module(
    a: &GradedAlgebra,
    owner: &Arc<GradedAlgebra>,
    deg0: &[usize],
    left: bool,
) -> GradedModule {
    let pos: Vec<usize> = (0..a.dim()).filter(|&i| a.basis[i].degree > 0).collect();
    if pos.is_empty() {
        return GradedModule::zero(owner.clone());
    }
    let back: BTreeMap<usize, usize> = pos.iter().enumerate().map(|(n, &i)| (i, n)).collect();
    let f = a.field;
    let n = pos.len();
    let mut action = Vec::with_capacity(owner.dim());
    for &g in deg0 {
        let mut mat = Matrix::zero(f, n, n);
        for (r, &x) in pos.iter().enumerate() {
            let prod = if left { a.mul_basis(g, x) } else { a.mul_basis(x, g) };
            for (k, c) in prod {
                mat.set(r, back[k], c.clone());
            }
        }
        action.push(vec![mat]);
    }
    GradedModule { algebra: owner.clone(), min_deg: 0, dims: vec![n], action }
}

/// Sufficient criteria for g(A) <= 0 on a 1-IG algebra:
/// (a) Hom_{A_0^op}(A_{>0}, A_0) = 0;
/// (b) Hom_{A_0}(A_{>0}, A_0) = 0 and gldim A_0 < infinity;
/// (c) gldim A_0 = 1 and A_{>0} has no projective summand as a left
///     A_0-module.
pub fn g_le_zero_criteria(a: &Arc<GradedAlgebra>, cap: usize, seed: u64) -> Result<GLeZeroReport> {
    let ig = ig_report(a, cap);
    match ig.ig_dimension() {
        Some(1) => {}
        Some(d) => {
            return Err(Error::BadInput(format!(
                "the g <= 0 criteria require a 1-IG algebra; this one is {d}-IG"
            )))
        }
        None => return Err(Error::Inconclusive("IG verdict exceeded the cap".into())),
    }
    let deg0 = a.basis_in_degree(0);
    let a0 = Arc::new(a.degree_zero_part());
    let op0 = Arc::new(a0.opposite());
    let gldim_a0 = gldim(&a0, cap);
    let pos_left = positive_part_module(a, &op0, &deg0, true);
    let pos_right = positive_part_module(a, &a0, &deg0, false);
    let hom_op_vanishes = pos_left.is_zero() || hom0(&pos_left, &regular(&op0)).is_empty();
    let hom_vanishes = pos_right.is_zero() || hom0(&pos_right, &regular(&a0)).is_empty();
    let no_projective_summand =
        pos_left.is_zero() || strip_projectives(&pos_left, seed).1.is_empty();
    Ok(GLeZeroReport {
        gldim_a0,
        hom_op_vanishes,
        hom_vanishes,
        no_projective_summand,
        criterion_a: hom_op_vanishes,
        criterion_b: hom_vanishes && gldim_a0.is_some(),
        criterion_c: gldim_a0 == Some(1) && no_projective_summand,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{algebra_from_relations, Relation};
    use crate::quiver::{Arrow, Quiver};
    use crate::scalar::Field;

    fn arrow(name: &str, from: usize, to: usize, degree: i64) -> Arrow {
        Arrow { name: name.into(), from, to, degree }
    }

    fn dual_numbers(field: Field) -> Arc<GradedAlgebra> {
        let q = Quiver::new(1, vec![arrow("x", 0, 0, 1)]).unwrap();
        let rel = Relation { terms: vec![(field.one(), vec![0, 0])] };
        algebra_from_relations(field, &q, vec![rel], 10).unwrap()
    }

    fn a2(field: Field) -> Arc<GradedAlgebra> {
        let q = Quiver::new(2, vec![arrow("a", 0, 1, 0)]).unwrap();
        algebra_from_relations(field, &q, vec![], 10).unwrap()
    }

    /// K[x]/(x^3) with x in degree 1; self-injective, highest degree 2.
    fn truncated_poly3(field: Field) -> Arc<GradedAlgebra> {
        let q = Quiver::new(1, vec![arrow("x", 0, 0, 1)]).unwrap();
        let rel = Relation { terms: vec![(field.one(), vec![0, 0, 0])] };
        algebra_from_relations(field, &q, vec![rel], 10).unwrap()
    }

    #[test]
    fn syzygies_over_dual_numbers() {
        let f = Field::Rationals;
        let a = dual_numbers(f);
        let s = simple(&a, 0, 0);
        // Ω S = S(-1), forever: pdim infinite
        assert_eq!(pdim(&s, 6), None);
        let res = resolve(&s, 3);
        assert!(!res.complete);
        for (n, syz) in res.syzygies.iter().enumerate() {
            assert_eq!(syz.total_dim(), 1);
            assert_eq!(syz.min_deg, n as i64 + 1);
        }
        // gen degrees climb by one each step
        let degs: Vec<i64> = res.covers.iter().map(|c| c.free.slots[0].gen_deg).collect();
        assert_eq!(degs, vec![0, 1, 2, 3]);
    }

    #[test]
    fn hereditary_pdims() {
        let f = Field::Fp(3);
        let alg = a2(f);
        assert_eq!(pdim(&simple(&alg, 0, 0), 5), Some(1));
        assert_eq!(pdim(&simple(&alg, 1, 0), 5), Some(0));
        assert_eq!(gldim(&alg, 5), Some(1));
        assert!(is_projective_module(&regular(&alg)));
    }

    #[test]
    fn self_injective_ig() {
        for f in [Field::Rationals, Field::Fp(2)] {
            let a = dual_numbers(f);
            let rep = ig_report(&a, 5);
            assert_eq!(rep.ig_dimension(), Some(0));
            assert_eq!(gldim(&a, 6), None);
        }
    }

    #[test]
    fn a2_is_ig_dim_le_1() {
        let alg = a2(Field::Rationals);
        let rep = ig_report(&alg, 5);
        assert!(rep.ig_dimension().unwrap() <= 1);
        assert_eq!(gldim(&alg, 5), Some(1));
    }

    #[test]
    fn ext_self_extensions_of_simple() {
        // over K[x]/(x^2): Ext^n(S, S) is 1-dimensional for every n
        let f = Field::Rationals;
        let a = dual_numbers(f);
        let s = simple(&a, 0, 0);
        let res = resolve(&s, 4);
        for n in 0..=3 {
            assert_eq!(ext_total(&res, n, &s), 1, "Ext^{n}(S,S)");
        }
        // and the internal degree is -n (syzygy sits in degree n)
        let t = ext_table(&res, 2, &s);
        assert_eq!(t.get(&(-2)), Some(&1));
    }

    #[test]
    fn ext_agrees_with_fat_resolution() {
        let f = Field::Fp(5);
        let a = truncated_poly3(f);
        let s = simple(&a, 0, 0);
        let reg = regular(&a);
        let res_min = resolve(&s, 4);
        let res_fat = resolve_with(&s, 4, true);
        for n in 0..=3 {
            assert_eq!(
                ext_total(&res_min, n, &s),
                ext_total(&res_fat, n, &s),
                "Ext^{n}(S,S) minimal vs fat"
            );
            assert_eq!(
                ext_total(&res_min, n, &reg),
                ext_total(&res_fat, n, &reg),
                "Ext^{n}(S,A) minimal vs fat"
            );
        }
    }

    #[test]
    fn cm_modules_over_self_injective() {
        // over a self-injective algebra every module is CM (d = 0: nothing
        // to check); over A2 (hereditary, 1-IG) the simple S_1 has
        // Ext^1(S_1, A) != 0 computed honestly
        let alg = a2(Field::Rationals);
        let reg = regular(&alg);
        let s1 = simple(&alg, 0, 0);
        let res = resolve(&s1, 3);
        assert_eq!(ext_total(&res, 1, &reg), 1);
        assert!(!is_cm(&s1, 1, &reg));
        assert!(is_cm(&reg, 1, &reg));
    }

    #[test]
    fn g_of_self_injective_dual_numbers() {
        // D(A) ≅ A(1) is free with generator degree -1, so g(A) = -1
        let f = Field::Rationals;
        let a = dual_numbers(f);
        let op = Arc::new(a.opposite());
        let d = dual(&regular(&a), &op);
        let g = g_invariant(&d, 10, 99).unwrap();
        assert_eq!(g, GValue { value: -1, exact: true });
        // and for K[x]/(x^3): D(A) ≅ A(2), so g(A) = -2
        let a3 = truncated_poly3(f);
        let op3 = Arc::new(a3.opposite());
        let d3 = dual(&regular(&a3), &op3);
        let g3 = g_invariant(&d3, 10, 99).unwrap();
        assert_eq!(g3, GValue { value: -2, exact: true });
    }

    #[test]
    fn g_detects_periodicity() {
        // resolving the simple over K[x]/(x^2) never terminates, but the
        // syzygy is S(-1) ≅ S shifted by -1... shifts are negative, so the
        // generator degrees grow: the cap applies and exact = false
        let f = Field::Rationals;
        let a = dual_numbers(f);
        let s = simple(&a, 0, 0);
        let g = g_invariant(&s, 4, 7).unwrap();
        assert!(!g.exact);
        assert!(g.value >= 4);
    }

    #[test]
    fn stable_hom_basics() {
        let f = Field::Rationals;
        let a = dual_numbers(f);
        let s = simple(&a, 0, 0);
        let p = regular(&a);
        // Hom(S, S) = K and nothing factors through a projective
        assert_eq!(stable_hom0(&s, &s).dim, 1);
        // the identity of P factors through its own cover
        assert_eq!(stable_hom0(&p, &p).dim, 0);
        // Hom(P, S): the cover projection is stably zero
        assert_eq!(stable_hom0(&p, &s).dim, 0);
    }
}
