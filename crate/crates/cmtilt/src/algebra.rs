//! Finite-dimensional graded algebras with a distinguished complete set of
//! primitive orthogonal idempotents.
//!
//! Every `GradedAlgebra` keeps the invariant that its basis splits into the
//! vertex idempotents plus a basis of the Jacobson radical; construction
//! verifies unit/associativity laws, degree additivity, radical closure and
//! nilpotency, so downstream homological routines can trust the structure
//! constants blindly.

use crate::linalg::{vec_is_zero, Matrix, Subspace, Vector};
use crate::quiver::Quiver;
use crate::scalar::{Field, Scalar};
use crate::{Error, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

/// Sparse linear combination of basis elements.
pub type LinComb = Vec<(usize, Scalar)>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisElem {
    pub src: usize,
    pub tgt: usize,
    pub degree: i64,
    pub label: String,
    pub idempotent: bool,
}

#[derive(Clone, PartialEq)]
pub struct GradedAlgebra {
    pub field: Field,
    pub num_vertices: usize,
    /// Basis index of each vertex idempotent.
    pub vertex_idem: Vec<usize>,
    pub basis: Vec<BasisElem>,
    /// `mult[i * dim + j]` = expansion of `basis[i] * basis[j]`.
    mult: Vec<LinComb>,
    /// Indices of a multiplicative generating set (idempotents included).
    pub generators: Vec<usize>,
    /// Top nonzero degree.
    pub ell: i64,
}

impl fmt::Debug for GradedAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "GradedAlgebra(dim {}, {} vertices, top degree {}, field {})",
            self.dim(),
            self.num_vertices,
            self.ell,
            self.field
        )
    }
}

impl GradedAlgebra {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> &LinComb {
        &self.mult[i * self.dim() + j]
    }

    /// Product of two dense coefficient vectors.
    pub fn mul_vec(&self, a: &[Scalar], b: &[Scalar]) -> Vector {
        let mut out = vec![self.field.zero(); self.dim()];
        for (i, ca) in a.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            for (j, cb) in b.iter().enumerate() {
                if cb.is_zero() {
                    continue;
                }
                let c = ca.mul(cb);
                for (k, s) in self.mul_basis(i, j) {
                    out[*k] = out[*k].add(&c.mul(s));
                }
            }
        }
        out
    }

    pub fn unit_vector(&self, idx: usize) -> Vector {
        let mut v = vec![self.field.zero(); self.dim()];
        v[idx] = self.field.one();
        v
    }

    pub fn dim_in_degree(&self, d: i64) -> usize {
        self.basis.iter().filter(|b| b.degree == d).count()
    }

    pub fn basis_in_degree(&self, d: i64) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.basis[i].degree == d).collect()
    }

    pub fn dims_by_degree(&self) -> Vec<(i64, usize)> {
        (0..=self.ell)
            .map(|d| (d, self.dim_in_degree(d)))
            .filter(|&(_, n)| n > 0)
            .collect()
    }

    pub fn radical_indices(&self) -> Vec<usize> {
        (0..self.dim()).filter(|&i| !self.basis[i].idempotent).collect()
    }

    pub fn comb_to_string(&self, comb: &LinComb) -> String {
        if comb.is_empty() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (idx, c) in comb {
            let lbl = &self.basis[*idx].label;
            if c.is_one() {
                parts.push(lbl.clone());
            } else {
                parts.push(format!("{c}·{lbl}"));
            }
        }
        parts.join(" + ")
    }

    /// Build and fully validate an algebra from raw structure constants.
    pub fn from_parts(
        field: Field,
        num_vertices: usize,
        vertex_idem: Vec<usize>,
        basis: Vec<BasisElem>,
        mult: Vec<LinComb>,
        generators: Vec<usize>,
    ) -> Result<Self> {
        let dim = basis.len();
        if mult.len() != dim * dim {
            return Err(Error::Internal("multiplication table has wrong size".into()));
        }
        let ell = basis.iter().map(|b| b.degree).max().unwrap_or(0);
        let alg = GradedAlgebra { field, num_vertices, vertex_idem, basis, mult, generators, ell };
        alg.validate()?;
        Ok(alg)
    }

    fn validate(&self) -> Result<()> {
        let dim = self.dim();
        let fail = |msg: String| Err(Error::Internal(format!("algebra law violated: {msg}")));
        if self.vertex_idem.len() != self.num_vertices {
            return fail("idempotent count".into());
        }
        for b in &self.basis {
            if b.degree < 0 {
                return fail(format!("negatively graded element {}", b.label));
            }
            if b.src >= self.num_vertices || b.tgt >= self.num_vertices {
                return fail(format!("bad vertex on {}", b.label));
            }
        }
        for (v, &i) in self.vertex_idem.iter().enumerate() {
            let b = &self.basis[i];
            if !b.idempotent || b.src != v || b.tgt != v || b.degree != 0 {
                return fail(format!("vertex idempotent {v} malformed"));
            }
        }
        // unit laws, degree additivity, vertex compatibility, radical closure
        for i in 0..dim {
            for j in 0..dim {
                let prod = self.mul_basis(i, j);
                let (bi, bj) = (&self.basis[i], &self.basis[j]);
                if bi.tgt != bj.src && !prod.is_empty() {
                    return fail(format!("{} * {} nonzero across vertices", bi.label, bj.label));
                }
                for (k, c) in prod {
                    if c.is_zero() {
                        return fail("zero coefficient stored in table".into());
                    }
                    let bk = &self.basis[*k];
                    if bk.degree != bi.degree + bj.degree {
                        return fail(format!("degree drift in {} * {}", bi.label, bj.label));
                    }
                    if bk.src != bi.src || bk.tgt != bj.tgt {
                        return fail(format!("vertex drift in {} * {}", bi.label, bj.label));
                    }
                    if bk.idempotent && !(bi.idempotent && bj.idempotent) {
                        return fail(format!(
                            "radical not closed: {} * {} hits an idempotent",
                            bi.label, bj.label
                        ));
                    }
                }
            }
        }
        for (v, &i) in self.vertex_idem.iter().enumerate() {
            for (w, &j) in self.vertex_idem.iter().enumerate() {
                let prod = self.mul_basis(i, j);
                let expected: LinComb = if v == w { vec![(i, self.field.one())] } else { vec![] };
                if *prod != expected {
                    return fail(format!("idempotents {v},{w} not orthogonal"));
                }
            }
        }
        for j in 0..dim {
            let b = &self.basis[j];
            let left = self.mul_basis(self.vertex_idem[b.src], j);
            let right = self.mul_basis(j, self.vertex_idem[b.tgt]);
            let expected: LinComb = vec![(j, self.field.one())];
            if *left != expected || *right != expected {
                return fail(format!("unit law fails on {}", b.label));
            }
        }
        self.check_associativity()?;
        self.check_radical_nilpotent()?;
        Ok(())
    }

    fn check_associativity(&self) -> Result<()> {
        let dim = self.dim();
        let check = |i: usize, j: usize, k: usize| -> bool {
            let mut lhs = vec![self.field.zero(); dim];
            for (m, c) in self.mul_basis(i, j) {
                for (n, d) in self.mul_basis(*m, k) {
                    lhs[*n] = lhs[*n].add(&c.mul(d));
                }
            }
            for (m, c) in self.mul_basis(j, k) {
                for (n, d) in self.mul_basis(i, *m) {
                    lhs[*n] = lhs[*n].sub(&c.mul(d));
                }
            }
            vec_is_zero(&lhs)
        };
        if dim <= 64 {
            for i in 0..dim {
                for j in 0..dim {
                    if self.basis[i].tgt != self.basis[j].src {
                        continue;
                    }
                    for k in 0..dim {
                        if !check(i, j, k) {
                            return Err(Error::Internal(format!(
                                "associativity fails at ({i},{j},{k})"
                            )));
                        }
                    }
                }
            }
        } else {
            // deterministic spot check on large algebras
            let mut rng = ChaCha8Rng::seed_from_u64(0xC0FFEE);
            for _ in 0..4000 {
                let (i, j, k) =
                    (rng.gen_range(0..dim), rng.gen_range(0..dim), rng.gen_range(0..dim));
                if !check(i, j, k) {
                    return Err(Error::Internal(format!("associativity fails at ({i},{j},{k})")));
                }
            }
        }
        Ok(())
    }

    fn check_radical_nilpotent(&self) -> Result<()> {
        let dim = self.dim();
        let rad = self.radical_indices();
        let mut current: Vec<Vector> = rad.iter().map(|&i| self.unit_vector(i)).collect();
        for _ in 0..=dim {
            if current.is_empty() {
                return Ok(());
            }
            let mut next = Subspace::new(self.field, dim);
            for v in &current {
                for &r in &rad {
                    let prod = self.mul_vec(v, &self.unit_vector(r));
                    if !vec_is_zero(&prod) {
                        next.insert(&prod);
                    }
                }
            }
            current = next.basis().to_vec();
        }
        Err(Error::Internal("radical candidate is not nilpotent".into()))
    }

    /// The opposite algebra (same basis, reversed multiplication and arrows).
    pub fn opposite(&self) -> GradedAlgebra {
        let dim = self.dim();
        let basis = self
            .basis
            .iter()
            .map(|b| BasisElem {
                src: b.tgt,
                tgt: b.src,
                degree: b.degree,
                label: b.label.clone(),
                idempotent: b.idempotent,
            })
            .collect();
        let mut mult = vec![Vec::new(); dim * dim];
        for i in 0..dim {
            for j in 0..dim {
                mult[i * dim + j] = self.mult[j * dim + i].clone();
            }
        }
        GradedAlgebra {
            field: self.field,
            num_vertices: self.num_vertices,
            vertex_idem: self.vertex_idem.clone(),
            basis,
            mult,
            generators: self.generators.clone(),
            ell: self.ell,
        }
    }

    /// Degree-zero part as an algebra in its own right (top degree zero).
    pub fn degree_zero_part(&self) -> GradedAlgebra {
        let keep = self.basis_in_degree(0);
        self.sub_algebra_on(&keep)
    }

    fn sub_algebra_on(&self, keep: &[usize]) -> GradedAlgebra {
        let pos: HashMap<usize, usize> = keep.iter().enumerate().map(|(n, &i)| (i, n)).collect();
        let dim = keep.len();
        let basis: Vec<BasisElem> = keep.iter().map(|&i| self.basis[i].clone()).collect();
        let mut mult = vec![Vec::new(); dim * dim];
        for (ni, &i) in keep.iter().enumerate() {
            for (nj, &j) in keep.iter().enumerate() {
                let comb: LinComb = self
                    .mul_basis(i, j)
                    .iter()
                    .map(|(k, c)| (*pos.get(k).expect("sub-algebra not closed"), c.clone()))
                    .collect();
                mult[ni * dim + nj] = comb;
            }
        }
        let vertex_idem = self.vertex_idem.iter().map(|i| pos[i]).collect();
        GradedAlgebra {
            field: self.field,
            num_vertices: self.num_vertices,
            vertex_idem,
            basis,
            mult,
            generators: (0..dim).collect(),
            ell: keep.iter().map(|&i| self.basis[i].degree).max().unwrap_or(0),
        }
    }

    /// Minimal generators of the radical: basis elements whose classes span
    /// J/J^2 (greedy, deterministic).
    pub fn radical_generators(&self) -> Vec<usize> {
        let dim = self.dim();
        let rad = self.radical_indices();
        let mut jsq = Subspace::new(self.field, dim);
        for &i in &rad {
            for &j in &rad {
                let prod = self.mul_basis(i, j);
                if !prod.is_empty() {
                    let mut v = vec![self.field.zero(); dim];
                    for (k, c) in prod {
                        v[*k] = v[*k].add(c);
                    }
                    jsq.insert(&v);
                }
            }
        }
        let mut acc = jsq.clone();
        let mut gens = Vec::new();
        for &i in &rad {
            if acc.insert(&self.unit_vector(i)) {
                gens.push(i);
            }
        }
        gens
    }
}

// ---------------------------------------------------------------------------
// Relations and the length-stratified quotient builder
// ---------------------------------------------------------------------------

/// One relation: a linear combination of composable arrow paths. All terms
/// must share path length, source, target and internal degree.
#[derive(Clone, Debug)]
pub struct Relation {
    /// (coefficient, arrow indices of the path, read left to right).
    pub terms: Vec<(Scalar, Vec<usize>)>,
}

impl Relation {
    pub fn validate(&self, q: &Quiver) -> Result<(usize, usize, usize, i64)> {
        if self.terms.is_empty() {
            return Err(Error::BadInput("empty relation".into()));
        }
        let mut sig: Option<(usize, usize, usize, i64)> = None;
        for (c, path) in &self.terms {
            if c.is_zero() {
                return Err(Error::BadInput("zero coefficient in relation".into()));
            }
            if path.len() < 2 {
                return Err(Error::BadInput(
                    "relation paths must have length at least two".into(),
                ));
            }
            let mut deg = 0i64;
            for w in path.windows(2) {
                if q.arrows[w[0]].to != q.arrows[w[1]].from {
                    return Err(Error::BadInput(format!(
                        "path {}{} is not composable",
                        q.arrows[w[0]].name, q.arrows[w[1]].name
                    )));
                }
            }
            for &a in path {
                deg += q.arrows[a].degree;
            }
            let s = (path.len(), q.arrows[path[0]].from, q.arrows[*path.last().unwrap()].to, deg);
            match &sig {
                None => sig = Some(s),
                Some(prev) if *prev != s => {
                    return Err(Error::BadInput(
                        "relation terms differ in length, endpoints or degree; \
                         only homogeneous relations are supported"
                            .into(),
                    ))
                }
                _ => {}
            }
        }
        Ok(sig.unwrap())
    }
}

#[derive(Clone, Debug)]
pub struct StratumElem {
    pub src: usize,
    pub tgt: usize,
    pub degree: i64,
    /// A representative path (arrow indices) for this basis class.
    pub path: Vec<usize>,
    pub label: String,
}

#[derive(Clone, Debug, Default)]
pub struct Stratum {
    pub elems: Vec<StratumElem>,
}

/// Incremental model of `KQ / <relations>` stratified by path length. The
/// ideal generated by length-homogeneous relations is length-graded, so each
/// stratum of the quotient is computed exactly from the previous ones; the
/// builder also works for infinite-dimensional quotients (grow on demand).
pub struct LengthGradedBuilder {
    pub field: Field,
    pub quiver: Quiver,
    relations: Vec<(Relation, usize)>, // (relation, common path length)
    pub strata: Vec<Stratum>,
    /// `action[k][e][a]`: expansion of (stratum-k elem e) * (arrow a) in the
    /// stratum k+1 basis; None when the path is not composable.
    action: Vec<Vec<Vec<Option<Vector>>>>,
}

impl LengthGradedBuilder {
    pub fn new(field: Field, quiver: Quiver, relations: Vec<Relation>) -> Result<Self> {
        quiver.validate()?;
        field.validate()?;
        for a in &quiver.arrows {
            if a.degree < 0 {
                return Err(Error::BadInput(format!(
                    "arrow {} has negative degree; gradings must be non-negative",
                    a.name
                )));
            }
        }
        let mut rels = Vec::new();
        for r in relations {
            let (len, _, _, _) = r.validate(&quiver)?;
            rels.push((r, len));
        }
        let stratum0 = Stratum {
            elems: (0..quiver.vertices)
                .map(|v| StratumElem {
                    src: v,
                    tgt: v,
                    degree: 0,
                    path: Vec::new(),
                    label: format!("e{}", v + 1),
                })
                .collect(),
        };
        Ok(LengthGradedBuilder {
            field,
            quiver,
            relations: rels,
            strata: vec![stratum0],
            action: Vec::new(),
        })
    }

    pub fn top_length(&self) -> usize {
        self.strata.len() - 1
    }

    pub fn stratum_dim(&self, k: usize) -> usize {
        self.strata.get(k).map_or(0, |s| s.elems.len())
    }

    /// Multiply a dense vector over stratum `k` by one arrow. Strata that
    /// were never built count as zero.
    pub fn act_arrow(&self, k: usize, v: &[Scalar], arrow: usize) -> Vector {
        let next = self.stratum_dim(k + 1);
        let mut out = vec![self.field.zero(); next];
        if next == 0 || k >= self.action.len() {
            return out;
        }
        for (e, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if let Some(img) = &self.action[k][e][arrow] {
                for (j, s) in img.iter().enumerate() {
                    if !s.is_zero() {
                        out[j] = out[j].add(&c.mul(s));
                    }
                }
            }
        }
        out
    }

    /// Multiply a dense stratum-`k` vector by a path of arrows.
    pub fn act_path(&self, k: usize, v: &[Scalar], path: &[usize]) -> Vector {
        let mut cur = v.to_vec();
        let mut at = k;
        for &a in path {
            cur = self.act_arrow(at, &cur, a);
            at += 1;
        }
        cur
    }

    pub fn unit(&self, k: usize, e: usize) -> Vector {
        let mut v = vec![self.field.zero(); self.stratum_dim(k)];
        v[e] = self.field.one();
        v
    }

    /// Build the next stratum; returns its dimension. Requires that all
    /// strata so far are already built (they are, by construction).
    pub fn grow(&mut self) -> usize {
        let k = self.strata.len(); // the stratum being built
        let prev = &self.strata[k - 1];
        // candidates: (prev elem, arrow) with matching endpoints
        let mut cand = Vec::new();
        let mut cand_pos: HashMap<(usize, usize), usize> = HashMap::new();
        for (e, el) in prev.elems.iter().enumerate() {
            for (a, ar) in self.quiver.arrows.iter().enumerate() {
                if el.tgt == ar.from {
                    cand_pos.insert((e, a), cand.len());
                    cand.push((e, a));
                }
            }
        }
        let ncand = cand.len();
        // span of relation consequences inside the candidate space
        let mut rel_span = Subspace::new(self.field, ncand);
        for (rel, len) in self.relations.clone() {
            if len > k {
                continue;
            }
            let base = k - len;
            for b0 in 0..self.stratum_dim(base) {
                let mut vec = vec![self.field.zero(); ncand];
                let mut nontrivial = false;
                for (c, path) in &rel.terms {
                    // walk the first len-1 arrows through existing strata,
                    // then land in candidate coordinates with the last arrow
                    let head = &path[..path.len() - 1];
                    let last = *path.last().unwrap();
                    let mid = self.act_path(base, &self.unit(base, b0), head);
                    for (e, s) in mid.iter().enumerate() {
                        if s.is_zero() {
                            continue;
                        }
                        if let Some(&pos) = cand_pos.get(&(e, last)) {
                            vec[pos] = vec[pos].add(&c.mul(s));
                            nontrivial = true;
                        }
                    }
                }
                if nontrivial {
                    rel_span.insert(&vec);
                }
            }
        }
        // surviving candidates: non-pivot coordinates
        let pivots: Vec<usize> = rel_span.pivots().to_vec();
        let mut survivors = Vec::new();
        for (pos, &(e, a)) in cand.iter().enumerate() {
            if !pivots.contains(&pos) {
                survivors.push((pos, e, a));
            }
        }
        let new_dim = survivors.len();
        let slot: HashMap<usize, usize> =
            survivors.iter().enumerate().map(|(n, &(pos, _, _))| (pos, n)).collect();
        let reduce_to_basis = |vec: &[Scalar]| -> Vector {
            let red = rel_span.reduce(vec);
            let mut out = vec![self.field.zero(); new_dim];
            for (pos, s) in red.iter().enumerate() {
                if !s.is_zero() {
                    out[*slot.get(&pos).expect("nonpivot survives")] = s.clone();
                }
            }
            out
        };
        // metadata for new elements
        let mut elems = Vec::with_capacity(new_dim);
        for &(_, e, a) in &survivors {
            let el = &self.strata[k - 1].elems[e];
            let ar = &self.quiver.arrows[a];
            let mut path = el.path.clone();
            path.push(a);
            elems.push(StratumElem {
                src: el.src,
                tgt: ar.to,
                degree: el.degree + ar.degree,
                path,
                label: if el.path.is_empty() {
                    ar.name.clone()
                } else {
                    format!("{}{}", el.label, ar.name)
                },
            });
        }
        // action of arrows out of stratum k-1
        let prev_dim = self.stratum_dim(k - 1);
        let narrows = self.quiver.arrows.len();
        let mut act = vec![vec![None; narrows]; prev_dim];
        for e in 0..prev_dim {
            for a in 0..narrows {
                if let Some(&pos) = cand_pos.get(&(e, a)) {
                    let mut unit = vec![self.field.zero(); ncand];
                    unit[pos] = self.field.one();
                    act[e][a] = Some(reduce_to_basis(&unit));
                }
            }
        }
        self.action.push(act);
        self.strata.push(Stratum { elems });
        new_dim
    }

    /// Add a relation after construction (used by presentation extraction,
    /// which discovers relations stratum by stratum).
    pub fn push_relation(&mut self, r: Relation) -> Result<()> {
        let (len, _, _, _) = r.validate(&self.quiver)?;
        self.relations.push((r, len));
        Ok(())
    }

    /// Discard the top stratum so it can be regrown with more relations.
    pub fn pop_stratum(&mut self) {
        assert!(self.strata.len() > 1, "cannot pop stratum 0");
        self.strata.pop();
        self.action.pop();
    }

    /// Grow until a stratum vanishes (finite-dimensional certificate: the
    /// ideal is length-graded, so one empty stratum forces all higher ones
    /// to vanish) or the cap is hit.
    pub fn grow_until_zero(&mut self, cap: usize) -> Result<()> {
        while self.stratum_dim(self.top_length()) > 0 {
            if self.top_length() >= cap {
                return Err(Error::NotFiniteDimensional(cap));
            }
            self.grow();
        }
        Ok(())
    }

    /// Assemble a finite-dimensional algebra; the final stratum must be zero.
    pub fn assemble(&self) -> Result<GradedAlgebra> {
        assert_eq!(self.stratum_dim(self.top_length()), 0, "assemble needs a vanished stratum");
        // global index = (stratum offset) + position
        let mut offsets = Vec::new();
        let mut dim = 0usize;
        for s in &self.strata {
            offsets.push(dim);
            dim += s.elems.len();
        }
        let mut basis = Vec::with_capacity(dim);
        for (k, s) in self.strata.iter().enumerate() {
            for el in &s.elems {
                basis.push(BasisElem {
                    src: el.src,
                    tgt: el.tgt,
                    degree: el.degree,
                    label: el.label.clone(),
                    idempotent: k == 0,
                });
            }
        }
        let vertex_idem: Vec<usize> = (0..self.quiver.vertices).collect();
        let mut mult = vec![Vec::new(); dim * dim];
        for (ki, si) in self.strata.iter().enumerate() {
            for (ei, eli) in si.elems.iter().enumerate() {
                let gi = offsets[ki] + ei;
                for (kj, sj) in self.strata.iter().enumerate() {
                    for (ej, elj) in sj.elems.iter().enumerate() {
                        let gj = offsets[kj] + ej;
                        if eli.tgt != elj.src {
                            continue;
                        }
                        let comb: LinComb = if kj == 0 {
                            vec![(gi, self.field.one())]
                        } else if ki == 0 {
                            vec![(gj, self.field.one())]
                        } else {
                            let prod = self.act_path(ki, &self.unit(ki, ei), &elj.path);
                            prod.iter()
                                .enumerate()
                                .filter(|(_, s)| !s.is_zero())
                                .map(|(p, s)| (offsets[ki + kj] + p, s.clone()))
                                .collect()
                        };
                        mult[gi * dim + gj] = comb;
                    }
                }
            }
        }
        let mut generators: Vec<usize> = (0..self.quiver.vertices).collect();
        generators.extend(offsets.get(1).into_iter().flat_map(|&o| {
            (0..self.stratum_dim(1)).map(move |i| o + i)
        }));
        GradedAlgebra::from_parts(
            self.field,
            self.quiver.vertices,
            vertex_idem,
            basis,
            mult,
            generators,
        )
    }
}

/// Finite-dimensional graded algebra presented by a quiver with homogeneous
/// relations. `len_cap` bounds the path length explored before giving up.
pub fn algebra_from_relations(
    field: Field,
    quiver: &Quiver,
    relations: Vec<Relation>,
    len_cap: usize,
) -> Result<Arc<GradedAlgebra>> {
    let mut b = LengthGradedBuilder::new(field, quiver.clone(), relations)?;
    b.grow_until_zero(len_cap)?;
    Ok(Arc::new(b.assemble()?))
}

// ---------------------------------------------------------------------------
// Bimodules, trivial extensions, Beilinson algebra, quasi-Veronese
// ---------------------------------------------------------------------------

/// A bimodule over a single algebra, with a basis adapted to the idempotents
/// on both sides. Row convention throughout: `coords(b·c) = coords(c) * left[b]`
/// and `coords(c·b) = coords(c) * right[b]`.
#[derive(Clone)]
pub struct Bimodule {
    pub algebra: Arc<GradedAlgebra>,
    pub dim: usize,
    pub src: Vec<usize>,
    pub tgt: Vec<usize>,
    pub labels: Vec<String>,
    pub left: Vec<Matrix>,
    pub right: Vec<Matrix>,
}

/// The trivial extension Λ ⊕ C with C placed in degree `ext_degree` above
/// the degrees of Λ and C·C = 0.
pub fn trivial_extension(
    lambda: &Arc<GradedAlgebra>,
    c: &Bimodule,
    ext_degree: i64,
) -> Result<Arc<GradedAlgebra>> {
    assert!(Arc::ptr_eq(lambda, &c.algebra) || **lambda == *c.algebra);
    let f = lambda.field;
    let ld = lambda.dim();
    let dim = ld + c.dim;
    let mut basis: Vec<BasisElem> = lambda.basis.clone();
    for i in 0..c.dim {
        basis.push(BasisElem {
            src: c.src[i],
            tgt: c.tgt[i],
            degree: ext_degree,
            label: c.labels[i].clone(),
            idempotent: false,
        });
    }
    let mut mult = vec![Vec::new(); dim * dim];
    for i in 0..ld {
        for j in 0..ld {
            mult[i * dim + j] = lambda.mul_basis(i, j).clone();
        }
    }
    for b in 0..ld {
        // λ · c  (left action): column extraction of left[b]
        for i in 0..c.dim {
            let mut comb = LinComb::new();
            for j in 0..c.dim {
                let s = c.left[b].get(i, j);
                if !s.is_zero() {
                    comb.push((ld + j, s.clone()));
                }
            }
            mult[b * dim + (ld + i)] = comb;
        }
        // c · λ  (right action)
        for i in 0..c.dim {
            let mut comb = LinComb::new();
            for j in 0..c.dim {
                let s = c.right[b].get(i, j);
                if !s.is_zero() {
                    comb.push((ld + j, s.clone()));
                }
            }
            mult[(ld + i) * dim + b] = comb;
        }
    }
    // C · C = 0: already empty
    Ok(Arc::new(GradedAlgebra::from_parts(
        f,
        lambda.num_vertices,
        lambda.vertex_idem.clone(),
        basis,
        mult,
        (0..dim).collect(),
    )?))
}

/// The Beilinson algebra ∇A: an ℓ×ℓ upper-triangular matrix algebra with
/// (i,j) entry A_{j-i}, concentrated in degree zero. Requires ell ≥ 1.
pub fn beilinson_algebra(a: &GradedAlgebra) -> Result<Arc<GradedAlgebra>> {
    let ell = a.ell;
    if ell < 1 {
        return Err(Error::BadInput("Beilinson algebra needs top degree >= 1".into()));
    }
    let ell = ell as usize;
    let nv = a.num_vertices * ell;
    // basis: (i, j, b) with 0 <= i <= j < ell, deg b = j - i
    let mut basis = Vec::new();
    let mut pos: HashMap<(usize, usize, usize), usize> = HashMap::new();
    for i in 0..ell {
        for j in i..ell {
            for bidx in a.basis_in_degree((j - i) as i64) {
                let b = &a.basis[bidx];
                pos.insert((i, j, bidx), basis.len());
                basis.push(BasisElem {
                    src: i * a.num_vertices + b.src,
                    tgt: j * a.num_vertices + b.tgt,
                    degree: 0,
                    label: format!("[{i}{j}]{}", b.label),
                    idempotent: i == j && b.idempotent,
                });
            }
        }
    }
    let dim = basis.len();
    let mut vertex_idem = vec![usize::MAX; nv];
    for i in 0..ell {
        for (v, &iv) in a.vertex_idem.iter().enumerate() {
            vertex_idem[i * a.num_vertices + v] = pos[&(i, i, iv)];
        }
    }
    let entries: Vec<(usize, usize, usize)> = {
        let mut e: Vec<(usize, usize, usize)> = pos.keys().cloned().collect();
        e.sort();
        e
    };
    let mut mult = vec![Vec::new(); dim * dim];
    for &(i, j, b1) in &entries {
        for &(j2, k, b2) in &entries {
            if j != j2 {
                continue;
            }
            let gi = pos[&(i, j, b1)];
            let gj = pos[&(j2, k, b2)];
            let comb: LinComb = a
                .mul_basis(b1, b2)
                .iter()
                .map(|(m, c)| (pos[&(i, k, *m)], c.clone()))
                .collect();
            mult[gi * dim + gj] = comb;
        }
    }
    Ok(Arc::new(GradedAlgebra::from_parts(
        a.field,
        nv,
        vertex_idem,
        basis,
        mult,
        (0..dim).collect(),
    )?))
}

/// The (∇A,∇A)-bimodule ΔA: lower-triangular slots (i,j), i >= j, with entry
/// A_{ell-i+j}, multiplied against ∇A by matrix composition.
pub fn beilinson_bimodule(a: &GradedAlgebra, nabla: &Arc<GradedAlgebra>) -> Result<Bimodule> {
    let ell = a.ell as usize;
    let mut src = Vec::new();
    let mut tgt = Vec::new();
    let mut labels = Vec::new();
    let mut pos: HashMap<(usize, usize, usize), usize> = HashMap::new();
    for i in 0..ell {
        for j in 0..=i {
            let d = a.ell - i as i64 + j as i64;
            for bidx in a.basis_in_degree(d) {
                let b = &a.basis[bidx];
                pos.insert((i, j, bidx), labels.len());
                src.push(i * a.num_vertices + b.src);
                tgt.push(j * a.num_vertices + b.tgt);
                labels.push(format!("Δ[{i}{j}]{}", b.label));
            }
        }
    }
    let dim = labels.len();
    // decode the nabla basis back into (i, j, b) triples by label order:
    // rebuild the same position map used in beilinson_algebra.
    let mut nabla_triples: Vec<(usize, usize, usize)> = Vec::with_capacity(nabla.dim());
    {
        let mut by_label: HashMap<&str, Vec<usize>> = HashMap::new();
        for (idx, b) in a.basis.iter().enumerate() {
            by_label.entry(b.label.as_str()).or_default().push(idx);
        }
        for nb in &nabla.basis {
            // label format "[ij]rest"
            let bytes = nb.label.as_bytes();
            let i = (bytes[1] - b'0') as usize;
            let j = (bytes[2] - b'0') as usize;
            let rest = &nb.label[4..];
            let cands = by_label.get(rest).expect("nabla label decodes");
            let bidx = *cands
                .iter()
                .find(|&&c| a.basis[c].degree == (j - i) as i64)
                .expect("degree-matched label");
            nabla_triples.push((i, j, bidx));
        }
    }
    let f = a.field;
    let mut left = Vec::with_capacity(nabla.dim());
    let mut right = Vec::with_capacity(nabla.dim());
    for &(r, s, b) in &nabla_triples {
        // left: (r,s,b) · (i,j,c) = δ_{s,i} (r, j, bc); zero if degree > ell
        let mut lm = Matrix::zero(f, dim, dim);
        let mut rm = Matrix::zero(f, dim, dim);
        for (&(i, j, c), &row) in &pos {
            if s == i {
                for (m, coef) in a.mul_basis(b, c) {
                    if let Some(&col) = pos.get(&(r, j, *m)) {
                        lm.set(row, col, lm.get(row, col).add(coef));
                    }
                }
            }
            // right: (i,j,c) · (r,s,b) = δ_{j,r} (i, s, cb)
            if j == r {
                for (m, coef) in a.mul_basis(c, b) {
                    if let Some(&col) = pos.get(&(i, s, *m)) {
                        rm.set(row, col, rm.get(row, col).add(coef));
                    }
                }
            }
        }
        left.push(lm);
        right.push(rm);
    }
    Ok(Bimodule { algebra: nabla.clone(), dim, src, tgt, labels, left, right })
}

/// The ℓ-th quasi-Veronese algebra A^[ℓ] = ∇A ⋉ ΔA with ΔA in degree 1.
/// Its dimension is ℓ · dim A (checked).
pub fn quasi_veronese(a: &Arc<GradedAlgebra>) -> Result<Arc<GradedAlgebra>> {
    let nabla = beilinson_algebra(a)?;
    let delta = beilinson_bimodule(a, &nabla)?;
    let qv = trivial_extension(&nabla, &delta, 1)?;
    let expected = a.ell as usize * a.dim();
    if qv.dim() != expected {
        return Err(Error::Internal(format!(
            "quasi-Veronese dimension {} != ell * dim A = {}",
            qv.dim(),
            expected
        )));
    }
    Ok(qv)
}

// ---------------------------------------------------------------------------
// Presentation extraction (quiver with relations from structure constants)
// ---------------------------------------------------------------------------

#[derive(Clone, Debug)]
pub struct Presentation {
    pub quiver: Quiver,
    pub relations: Vec<Relation>,
    /// Pretty-printed relations like "ab - 2cd".
    pub relation_strings: Vec<String>,
}

/// Recover a quiver-with-relations presentation of a (basic, split) graded
/// algebra: arrows are a deterministic lift of J/J²; relations are found
/// stratum by stratum as the kernel of the evaluation map from the partial
/// quotient model into the algebra, then imposed before growing further, so
/// consequences of earlier relations are never re-reported.
pub fn presentation(a: &GradedAlgebra) -> Result<Presentation> {
    let f = a.field;
    let dim = a.dim();
    let gens = a.radical_generators();
    let arrows: Vec<crate::quiver::Arrow> = gens
        .iter()
        .map(|&g| crate::quiver::Arrow {
            name: a.basis[g].label.clone(),
            from: a.basis[g].src,
            to: a.basis[g].tgt,
            degree: a.basis[g].degree,
        })
        .collect();
    let quiver = Quiver { vertices: a.num_vertices, arrows };
    let eval_path = |path: &[usize]| -> Vector {
        let mut cur: Option<Vector> = None;
        for &ai in path {
            let g = a.unit_vector(gens[ai]);
            cur = Some(match cur {
                None => g,
                Some(v) => a.mul_vec(&v, &g),
            });
        }
        cur.expect("nonempty path")
    };
    let mut builder = LengthGradedBuilder::new(f, quiver.clone(), Vec::new())?;
    let mut total = Subspace::new(f, dim);
    for &iv in &a.vertex_idem {
        total.insert(&a.unit_vector(iv));
    }
    let mut relations: Vec<Relation> = Vec::new();
    let mut relation_strings = Vec::new();
    for _k in 1..=dim + 1 {
        builder.grow();
        // find the kernel of evaluation on the new stratum, grouped by
        // (src, tgt, degree) so each relation is homogeneous
        for _pass in 0..=dim {
            let k = builder.top_length();
            let n = builder.stratum_dim(k);
            if n == 0 {
                break;
            }
            let elems = builder.strata[k].elems.clone();
            let mut groups: HashMap<(usize, usize, i64), Vec<usize>> = HashMap::new();
            for (e, el) in elems.iter().enumerate() {
                groups.entry((el.src, el.tgt, el.degree)).or_default().push(e);
            }
            let mut keys: Vec<_> = groups.keys().cloned().collect();
            keys.sort();
            let mut new_rels = Vec::new();
            for key in keys {
                let idxs = &groups[&key];
                let rows: Vec<Vector> = idxs.iter().map(|&e| eval_path(&elems[e].path)).collect();
                let m = Matrix::from_rows(f, dim, &rows);
                for kv in m.left_kernel() {
                    let mut terms = Vec::new();
                    let mut parts = Vec::new();
                    for (pos, c) in kv.iter().enumerate() {
                        if !c.is_zero() {
                            let path = elems[idxs[pos]].path.clone();
                            let s = path_string(&quiver, &path);
                            parts.push(if c.is_one() { s } else { format!("{c}·{s}") });
                            terms.push((c.clone(), path));
                        }
                    }
                    relation_strings.push(parts.join(" + "));
                    new_rels.push(Relation { terms });
                }
            }
            if new_rels.is_empty() {
                break;
            }
            for r in new_rels {
                builder.push_relation(r.clone())?;
                relations.push(r);
            }
            builder.pop_stratum();
            builder.grow();
        }
        let k = builder.top_length();
        if builder.stratum_dim(k) == 0 {
            break;
        }
        for el in &builder.strata[k].elems {
            total.insert(&eval_path(&el.path));
        }
    }
    if builder.stratum_dim(builder.top_length()) != 0 {
        return Err(Error::Internal("presentation extraction did not terminate".into()));
    }
    if total.dim() != dim {
        return Err(Error::Internal("presentation extraction did not span the algebra".into()));
    }
    Ok(Presentation { quiver, relations, relation_strings })
}

fn path_string(q: &Quiver, path: &[usize]) -> String {
    if path.is_empty() {
        return "1".into();
    }
    path.iter().map(|&a| q.arrows[a].name.clone()).collect::<Vec<_>>().join("")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::Arrow;

    fn arrow(name: &str, from: usize, to: usize, degree: i64) -> Arrow {
        Arrow { name: name.into(), from, to, degree }
    }

    /// K[x]/(x^2) with x in degree 1.
    fn dual_numbers(field: Field) -> Arc<GradedAlgebra> {
        let q = Quiver::new(1, vec![arrow("x", 0, 0, 1)]).unwrap();
        let rel = Relation { terms: vec![(field.one(), vec![0, 0])] };
        algebra_from_relations(field, &q, vec![rel], 10).unwrap()
    }

    #[test]
    fn dual_numbers_structure() {
        let a = dual_numbers(Field::Rationals);
        assert_eq!(a.dim(), 2);
        assert_eq!(a.ell, 1);
        assert_eq!(a.dims_by_degree(), vec![(0, 1), (1, 1)]);
    }

    /// Path algebra of 1 -> 2 (no relations).
    #[test]
    fn a2_path_algebra() {
        let q = Quiver::new(2, vec![arrow("a", 0, 1, 0)]).unwrap();
        let a = algebra_from_relations(Field::Rationals, &q, vec![], 10).unwrap();
        assert_eq!(a.dim(), 3);
        let op = a.opposite();
        assert_eq!(op.basis[2].src, 1);
        assert_eq!(op.basis[2].tgt, 0);
    }

    #[test]
    fn loop_without_relations_is_infinite() {
        let q = Quiver::new(1, vec![arrow("x", 0, 0, 1)]).unwrap();
        let r = algebra_from_relations(Field::Rationals, &q, vec![], 8);
        assert!(matches!(r, Err(Error::NotFiniteDimensional(_))));
    }

    #[test]
    fn commuting_square_dims() {
        // K[x,y]/(x^2, y^2, xy - yx): dim 4, degrees (1,2,1) for (x, xy, y)... as one-vertex quiver
        let f = Field::Rationals;
        let q = Quiver::new(1, vec![arrow("x", 0, 0, 1), arrow("y", 0, 0, 1)]).unwrap();
        let rels = vec![
            Relation { terms: vec![(f.one(), vec![0, 0])] },
            Relation { terms: vec![(f.one(), vec![1, 1])] },
            Relation { terms: vec![(f.one(), vec![0, 1]), (f.from_i64(-1), vec![1, 0])] },
        ];
        let a = algebra_from_relations(f, &q, rels, 10).unwrap();
        assert_eq!(a.dim(), 4);
        assert_eq!(a.dims_by_degree(), vec![(0, 1), (1, 2), (2, 1)]);
        assert_eq!(a.ell, 2);
    }

    #[test]
    fn rejects_inhomogeneous_relation() {
        let f = Field::Rationals;
        let q = Quiver::new(1, vec![arrow("x", 0, 0, 1)]).unwrap();
        let rel = Relation { terms: vec![(f.one(), vec![0, 0]), (f.one(), vec![0, 0, 0])] };
        assert!(algebra_from_relations(f, &q, vec![rel], 10).is_err());
    }

    #[test]
    fn quasi_veronese_of_dual_numbers() {
        // A = K[x]/(x^2), ell = 1: A^[1] is the trivial extension of A_0 = K
        // by A_1 = K, i.e. the dual numbers again (in degree 1).
        let a = dual_numbers(Field::Rationals);
        let qv = quasi_veronese(&a).unwrap();
        assert_eq!(qv.dim(), 2);
        assert_eq!(qv.ell, 1);
    }

    #[test]
    fn quasi_veronese_dimension_formula() {
        // K[x]/(x^3), ell = 2: dim A^[2] = 2 * 3 = 6 on 2 vertices.
        let f = Field::Rationals;
        let q = Quiver::new(1, vec![arrow("x", 0, 0, 1)]).unwrap();
        let rel = Relation { terms: vec![(f.one(), vec![0, 0, 0])] };
        let a = algebra_from_relations(f, &q, vec![rel], 10).unwrap();
        let qv = quasi_veronese(&a).unwrap();
        assert_eq!(qv.dim(), 6);
        assert_eq!(qv.num_vertices, 2);
        assert_eq!(qv.ell, 1);
    }

    #[test]
    fn degree_zero_part_and_radical_gens() {
        let f = Field::Fp(2);
        let a = dual_numbers(f);
        let a0 = a.degree_zero_part();
        assert_eq!(a0.dim(), 1);
        assert_eq!(a.radical_generators(), vec![1]);
    }

    #[test]
    fn presentation_roundtrip_dual_numbers() {
        let a = dual_numbers(Field::Rationals);
        let p = presentation(&a).unwrap();
        assert_eq!(p.quiver.arrows.len(), 1);
        assert_eq!(p.relations.len(), 1);
        assert_eq!(p.relations[0].terms[0].1.len(), 2); // x·x
    }

    #[test]
    fn presentation_of_commuting_square() {
        let f = Field::Rationals;
        let q = Quiver::new(1, vec![arrow("x", 0, 0, 1), arrow("y", 0, 0, 1)]).unwrap();
        let rels = vec![
            Relation { terms: vec![(f.one(), vec![0, 0])] },
            Relation { terms: vec![(f.one(), vec![1, 1])] },
            Relation { terms: vec![(f.one(), vec![0, 1]), (f.from_i64(-1), vec![1, 0])] },
        ];
        let a = algebra_from_relations(f, &q, rels, 10).unwrap();
        let p = presentation(&a).unwrap();
        assert_eq!(p.quiver.arrows.len(), 2);
        assert_eq!(p.relations.len(), 3);
    }
}
