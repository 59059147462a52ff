//! Deterministic analysis reports: typed sections, JSON and fixed text
//! renderings, and the drivers behind the two CLI commands.

use crate::algebra::GradedAlgebra;
use crate::coxeter::{truncated_pp, word_on};
use crate::homology::{
    asid_numbers, g_le_zero_criteria, g_of_algebra, ig_report, injective_resolution_terms,
    is_projective_module,
};
use crate::module::{decompose, iso_test, loewy_layers, projective, GradedModule};
use crate::quiver::Quiver;
use crate::scalar::Field;
use crate::tilting::{
    check_exact_sequence, is_tilting, module_u, module_v, stable_endomorphism_presentation,
    tilting_pipeline, verify_theorem_finite_gldim, TerminationTag, TiltingVerdict, VerdictPart,
};
use crate::Result;
use serde::Serialize;
use std::sync::Arc;

// ---------------------------------------------------------------------------
// Sections
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, Serialize)]
pub struct AlgebraSection {
    pub dim: usize,
    pub vertices: usize,
    pub ell: i64,
    pub dims_by_degree: Vec<(i64, usize)>,
    pub dims_by_vertex: Vec<usize>,
    /// Loewy layers of each indecomposable projective e_v A; entries are
    /// "S{vertex}({degree})^mult" keyed by (degree, vertex).
    pub loewy: Vec<Vec<String>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct IgSection {
    pub idim_right: Option<usize>,
    pub idim_left: Option<usize>,
    pub d: Option<usize>,
    pub cap: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct GSection {
    pub g: i64,
    pub g_exact: bool,
    pub g_op: i64,
    pub g_op_exact: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct CriteriaSection {
    pub gldim_a0: Option<usize>,
    pub hom_op_vanishes: bool,
    pub hom_vanishes: bool,
    pub no_projective_summand: bool,
    pub criterion_a: bool,
    pub criterion_b: bool,
    pub criterion_c: bool,
    pub any: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ModulesSection {
    pub u_shape: String,
    pub u_dim: usize,
    pub v_shape: String,
    pub v_dim: usize,
    pub exact_sequence: bool,
    pub exact_detail: String,
    /// (shape, multiplicity, projective) per iso-class of summand of V.
    pub v_summands: Vec<(String, usize, bool)>,
    pub v_decomposition_certified: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerdictSection {
    pub presilting: Option<bool>,
    pub presilting_proof: String,
    pub negative_vanishing: Option<bool>,
    pub negative_proof: String,
    pub gldim_a0: Option<usize>,
    pub silting: Option<bool>,
    pub tilting: Option<bool>,
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct GammaSection {
    pub vertices: usize,
    pub dim: usize,
    pub arrows: Vec<String>,
    pub relations: Vec<String>,
    pub gldim: Option<usize>,
    pub summand_shapes: Vec<String>,
    pub multiplicities: Vec<usize>,
    pub dropped_projectives: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct AnalysisReport {
    pub field: String,
    pub cap: usize,
    pub seed: u64,
    pub algebra: AlgebraSection,
    pub ig: IgSection,
    /// Minimal injective resolution terms of each e_v A ("I{v}({d})"),
    /// present when every resolution terminated within the cap.
    pub injective_resolutions: Option<Vec<Vec<Vec<String>>>>,
    pub g: Option<GSection>,
    pub asid: Option<(i64, i64)>,
    pub criteria: Option<CriteriaSection>,
    pub modules: ModulesSection,
    pub verdict: VerdictSection,
    pub gamma: Option<GammaSection>,
    /// Every sub-verdict that could not be decided within the caps.
    pub inconclusive: Vec<String>,
}

fn layer_strings(layers: &[std::collections::BTreeMap<(i64, usize), usize>]) -> Vec<String> {
    layers
        .iter()
        .map(|layer| {
            layer
                .iter()
                .map(|(&(d, v), &m)| {
                    if m == 1 {
                        format!("S{}({})", v + 1, d)
                    } else {
                        format!("S{}({})^{}", v + 1, d, m)
                    }
                })
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect()
}

fn injective_term_strings(terms: &[(usize, i64)]) -> Vec<String> {
    terms
        .iter()
        .map(|&(v, d)| {
            if d == 0 {
                format!("I{}", v + 1)
            } else {
                format!("I{}({})", v + 1, d)
            }
        })
        .collect()
}

pub fn tag_string(tag: &TerminationTag) -> String {
    match tag {
        TerminationTag::SyzygyVanished { at } => format!("syzygy vanished at step {at}"),
        TerminationTag::DegreeGap { at } => {
            format!("degree gap at step {at}: the support of the syzygy escaped the window of V")
        }
        TerminationTag::Periodicity { from, to } => {
            format!("periodicity: syzygy {to} is isomorphic to syzygy {from}")
        }
        TerminationTag::Cap => "cap reached".into(),
        TerminationTag::Failure { at } => format!("nonzero stable map found at shift {at}"),
    }
}

fn verdict_section(verdict: &TiltingVerdict) -> VerdictSection {
    let witness = |part: &VerdictPart, pos: bool| {
        part.witness.as_ref().map(|w| {
            let space = if pos {
                format!("stable Hom(Ω^{}V, V)_0", w.n)
            } else {
                format!("stable Hom(V, Ω^{}V)_0", w.n)
            };
            format!(
                "{} has dimension {}; representative map recomputed as {}",
                space,
                w.dim,
                if w.verified { "nonzero in the stable quotient" } else { "UNVERIFIED" }
            )
        })
    };
    VerdictSection {
        presilting: verdict.presilting.holds,
        presilting_proof: tag_string(&verdict.presilting.tag),
        negative_vanishing: verdict.negative.holds,
        negative_proof: tag_string(&verdict.negative.tag),
        gldim_a0: verdict.gldim_a0,
        silting: verdict.silting,
        tilting: verdict.tilting,
        witness: witness(&verdict.presilting, true).or(witness(&verdict.negative, false)),
    }
}

// ---------------------------------------------------------------------------
// The algebra-analyze driver
// ---------------------------------------------------------------------------

pub fn analyze_algebra(
    a: &Arc<GradedAlgebra>,
    field: Field,
    cap: usize,
    seed: u64,
) -> AnalysisReport {
    let mut inconclusive = Vec::new();
    let op = Arc::new(a.opposite());

    let dims_by_vertex: Vec<usize> = (0..a.num_vertices)
        .map(|v| (0..a.dim()).filter(|&i| a.basis[i].src == v).count())
        .collect();
    let loewy: Vec<Vec<String>> = (0..a.num_vertices)
        .map(|v| layer_strings(&loewy_layers(&projective(a, v, 0))))
        .collect();
    let algebra = AlgebraSection {
        dim: a.dim(),
        vertices: a.num_vertices,
        ell: a.ell,
        dims_by_degree: a.dims_by_degree(),
        dims_by_vertex,
        loewy,
    };

    let igr = ig_report(a, cap);
    let ig = IgSection { idim_right: igr.right, idim_left: igr.left, d: igr.ig_dimension(), cap };
    if ig.d.is_none() {
        inconclusive.push("IG verdict exceeded the cap".into());
    }

    let injective_resolutions = if ig.d.is_some() {
        let mut all = Vec::new();
        let mut ok = true;
        for v in 0..a.num_vertices {
            let (terms, complete) = injective_resolution_terms(&projective(a, v, 0), &op, cap);
            ok &= complete;
            all.push(terms.iter().map(|t| injective_term_strings(t)).collect());
        }
        if ok {
            Some(all)
        } else {
            None
        }
    } else {
        None
    };

    let g = {
        let gr = g_of_algebra(a, &op, cap, seed);
        let gl = g_of_algebra(&op, a, cap, seed);
        match (gr, gl) {
            (Ok(r), Ok(l)) => {
                if !r.exact || !l.exact {
                    inconclusive.push("g value is a lower bound at the cap".into());
                }
                Some(GSection { g: r.value, g_exact: r.exact, g_op: l.value, g_op_exact: l.exact })
            }
            _ => {
                inconclusive.push("g invariant could not be computed".into());
                None
            }
        }
    };

    let asid = asid_numbers(a, cap, seed).ok();
    let criteria = g_le_zero_criteria(a, cap, seed).ok().map(|c| CriteriaSection {
        gldim_a0: c.gldim_a0,
        hom_op_vanishes: c.hom_op_vanishes,
        hom_vanishes: c.hom_vanishes,
        no_projective_summand: c.no_projective_summand,
        criterion_a: c.criterion_a,
        criterion_b: c.criterion_b,
        criterion_c: c.criterion_c,
        any: c.any(),
    });

    let u = module_u(a);
    let v = module_v(a);
    let exact = check_exact_sequence(a, seed);
    let dec = decompose(&v, seed);
    let mut summands: Vec<(GradedModule, usize, bool)> = Vec::new();
    for (piece, _) in &dec.pieces {
        match summands.iter_mut().find(|(r, _, _)| iso_test(piece, r, seed)) {
            Some(entry) => entry.1 += 1,
            None => summands.push((piece.clone(), 1, is_projective_module(piece))),
        }
    }
    let modules = ModulesSection {
        u_shape: u.shape_string(),
        u_dim: u.total_dim(),
        v_shape: v.shape_string(),
        v_dim: v.total_dim(),
        exact_sequence: exact.holds,
        exact_detail: exact.detail,
        v_summands: summands.iter().map(|(m, k, p)| (m.shape_string(), *k, *p)).collect(),
        v_decomposition_certified: dec.all_certified(),
    };
    if !dec.all_certified() {
        inconclusive.push("decomposition of V not certified".into());
    }

    let tv = is_tilting(&v, a, cap.max(40), seed);
    if tv.presilting.holds.is_none() {
        inconclusive.push("presilting check hit the cap".into());
    }
    if tv.negative.holds.is_none() {
        inconclusive.push("negative shift check hit the cap".into());
    }
    if tv.silting.is_none() && tv.presilting.holds == Some(true) {
        inconclusive.push("gldim A_0 not certified finite: silting downgraded".into());
    }
    let verdict = verdict_section(&tv);

    let gamma = if tv.tilting == Some(true) {
        match stable_endomorphism_presentation(&v, seed) {
            Ok(e) => {
                let gd = verify_theorem_finite_gldim(&e, cap.max(20));
                if gd.is_none() {
                    inconclusive.push("gldim of Γ exceeded the cap".into());
                }
                Some(GammaSection {
                    vertices: e.algebra.num_vertices,
                    dim: e.algebra.dim(),
                    arrows: e
                        .presentation
                        .quiver
                        .arrows
                        .iter()
                        .map(|ar| format!("{}: {} -> {}", ar.name, ar.from + 1, ar.to + 1))
                        .collect(),
                    relations: e.presentation.relation_strings.clone(),
                    gldim: gd,
                    summand_shapes: e.shapes.clone(),
                    multiplicities: e.multiplicities.clone(),
                    dropped_projectives: e.dropped_projectives.clone(),
                })
            }
            Err(_) => {
                inconclusive.push("stable endomorphism algebra not extracted".into());
                None
            }
        }
    } else {
        None
    };

    AnalysisReport {
        field: match field {
            Field::Rationals => "Q".to_string(),
            Field::Fp(p) => format!("F{p}"),
        },
        cap,
        seed,
        algebra,
        ig,
        injective_resolutions,
        g,
        asid,
        criteria,
        modules,
        verdict,
        gamma,
        inconclusive,
    }
}

impl AnalysisReport {
    pub fn exit_code(&self) -> i32 {
        if self.inconclusive.is_empty() {
            0
        } else {
            2
        }
    }

    pub fn render_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let opt = |o: Option<usize>| o.map_or("exceeds cap".to_string(), |n| n.to_string());
        let tri = |o: Option<bool>| match o {
            Some(true) => "yes",
            Some(false) => "no",
            None => "inconclusive",
        };
        out += &format!("field: {}   cap: {}   seed: {}\n", self.field, self.cap, self.seed);
        out += &format!(
            "algebra: dim {}, vertices {}, ell {}\n",
            self.algebra.dim, self.algebra.vertices, self.algebra.ell
        );
        out += &format!(
            "dims by degree: {}\n",
            self.algebra
                .dims_by_degree
                .iter()
                .map(|(d, n)| format!("{d}:{n}"))
                .collect::<Vec<_>>()
                .join(" ")
        );
        out += &format!(
            "dims by vertex: {}\n",
            self.algebra
                .dims_by_vertex
                .iter()
                .map(|n| n.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        );
        for (v, layers) in self.algebra.loewy.iter().enumerate() {
            out += &format!("loewy e{}A: {}\n", v + 1, layers.join(" | "));
        }
        out += &format!(
            "IG: idim right {} / left {} -> {}\n",
            opt(self.ig.idim_right),
            opt(self.ig.idim_left),
            self.ig.d.map_or("not certified".to_string(), |d| format!("{d}-IG"))
        );
        if let Some(res) = &self.injective_resolutions {
            for (v, terms) in res.iter().enumerate() {
                let chain: Vec<String> = terms
                    .iter()
                    .map(|t| if t.is_empty() { "0".into() } else { t.join(" + ") })
                    .collect();
                out += &format!("inj res e{}A: 0 -> e{}A -> {} -> 0\n", v + 1, v + 1, chain.join(" -> "));
            }
        }
        if let Some(g) = &self.g {
            out += &format!(
                "g(A) {} {}   g(A^op) {} {}\n",
                if g.g_exact { "=" } else { ">=" },
                g.g,
                if g.g_op_exact { "=" } else { ">=" },
                g.g_op
            );
        }
        if let Some((r, l)) = self.asid {
            out += &format!("asid numbers: alpha_r = {r}, alpha_l = {l}\n");
        }
        if let Some(c) = &self.criteria {
            out += &format!(
                "g<=0 criteria: (a) {} (b) {} (c) {}   [gldim A_0: {}, Hom_op = 0: {}, Hom = 0: {}, no proj summand: {}]\n",
                c.criterion_a,
                c.criterion_b,
                c.criterion_c,
                opt(c.gldim_a0),
                c.hom_op_vanishes,
                c.hom_vanishes,
                c.no_projective_summand
            );
        }
        out += &format!("U: dim {} {}\n", self.modules.u_dim, self.modules.u_shape);
        out += &format!("V: dim {} {}\n", self.modules.v_dim, self.modules.v_shape);
        out += &format!(
            "exact 0 -> V -> (+)A(i) -> U -> 0: {} ({})\n",
            self.modules.exact_sequence, self.modules.exact_detail
        );
        for (shape, mult, proj) in &self.modules.v_summands {
            out += &format!(
                "V summand: {}^{}{}\n",
                shape,
                mult,
                if *proj { " (projective)" } else { "" }
            );
        }
        out += &format!(
            "presilting: {} ({})\n",
            tri(self.verdict.presilting),
            self.verdict.presilting_proof
        );
        out += &format!(
            "negative shifts vanish: {} ({})\n",
            tri(self.verdict.negative_vanishing),
            self.verdict.negative_proof
        );
        out += &format!(
            "gldim A_0: {}   silting: {}   tilting: {}\n",
            opt(self.verdict.gldim_a0),
            tri(self.verdict.silting),
            tri(self.verdict.tilting)
        );
        if let Some(w) = &self.verdict.witness {
            out += &format!("witness: {w}\n");
        }
        if let Some(g) = &self.gamma {
            out += &format!(
                "Gamma: {} vertices, dim {}, gldim {}\n",
                g.vertices,
                g.dim,
                opt(g.gldim)
            );
            for a in &g.arrows {
                out += &format!("Gamma arrow: {a}\n");
            }
            for r in &g.relations {
                out += &format!("Gamma relation: {r}\n");
            }
        }
        for n in &self.inconclusive {
            out += &format!("inconclusive: {n}\n");
        }
        out
    }
}

// ---------------------------------------------------------------------------
// The ppalg driver
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, Serialize)]
pub struct WordSection {
    /// 1-based letters.
    pub letters: Vec<usize>,
    pub reduced: bool,
    /// 1-based support.
    pub support: Vec<usize>,
    pub root_height_total: Option<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct PipelineSection {
    /// Arrows of the reflected orientation, "name: from -> to".
    pub target_arrows: Vec<String>,
    /// 1-based vertices reflected at, in order.
    pub reflections: Vec<usize>,
    pub stabilized_at: usize,
    pub total_dim: usize,
    pub certificate_agrees: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct PpReport {
    pub word: WordSection,
    /// Analysis of Π(Q̃)_w on the restricted quiver as given.
    pub direct: AnalysisReport,
    pub pipeline: PipelineSection,
    /// Analysis of Π(Q′)_w on the reflected orientation.
    pub reflected: AnalysisReport,
}

fn quiver_arrow_strings(q: &Quiver) -> Vec<String> {
    q.arrows
        .iter()
        .map(|a| format!("{}: {} -> {}", a.name, a.from + 1, a.to + 1))
        .collect()
}

pub fn analyze_ppalg(
    field: Field,
    q: &Quiver,
    letters: &[usize],
    cap: usize,
    seed: u64,
) -> Result<PpReport> {
    let word = word_on(q, letters)?;
    if !word.reduced {
        let bad = word.roots.iter().position(|b| b.iter().any(|&c| c < 0)).unwrap();
        return Err(crate::Error::BadInput(format!(
            "word is not reduced: root {} is negative",
            bad + 1
        )));
    }
    let word_section = WordSection {
        letters: letters.iter().map(|&i| i + 1).collect(),
        reduced: true,
        support: word.support().iter().map(|&i| i + 1).collect(),
        root_height_total: word.root_height_total(),
    };
    let report = tilting_pipeline(field, q, letters, cap, seed)?;
    let direct_tp = truncated_pp(field, &report.restricted, &report.letters, 64)?;
    let direct = analyze_algebra(&direct_tp.algebra, field, cap, seed);
    let reflected = analyze_algebra(&report.algebra, field, cap, seed);
    Ok(PpReport {
        word: word_section,
        direct,
        pipeline: PipelineSection {
            target_arrows: quiver_arrow_strings(&report.target),
            reflections: report.reflections.iter().map(|&i| i + 1).collect(),
            stabilized_at: report.certificate.stabilized_at,
            total_dim: report.certificate.total_dim,
            certificate_agrees: report.certificate.agreement,
        },
        reflected,
    })
}

impl PpReport {
    pub fn exit_code(&self) -> i32 {
        self.direct.exit_code().max(self.reflected.exit_code())
    }

    pub fn render_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out += &format!(
            "word: {}   reduced: {}   support: {}   sum of root heights: {}\n",
            self.word.letters.iter().map(|i| format!("s{i}")).collect::<Vec<_>>().join(""),
            self.word.reduced,
            self.word.support.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(","),
            self.word.root_height_total.map_or("-".into(), |n| n.to_string()),
        );
        out += "== direct orientation ==\n";
        out += &self.direct.render_text();
        out += "== reflection pipeline ==\n";
        out += &format!(
            "reflections at: {}\n",
            if self.pipeline.reflections.is_empty() {
                "none".to_string()
            } else {
                self.pipeline
                    .reflections
                    .iter()
                    .map(|i| i.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            }
        );
        for a in &self.pipeline.target_arrows {
            out += &format!("target arrow: {a}\n");
        }
        out += &format!(
            "truncation: stabilized at length {}, total dim {}, certificate agrees: {}\n",
            self.pipeline.stabilized_at, self.pipeline.total_dim, self.pipeline.certificate_agrees
        );
        out += &self.reflected.render_text();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{algebra_from_relations, Relation};
    use crate::quiver::Arrow;

    fn dual_numbers() -> Arc<GradedAlgebra> {
        let q = Quiver::new(1, vec![Arrow { name: "x".into(), from: 0, to: 0, degree: 1 }])
            .unwrap();
        let rel = Relation { terms: vec![(Field::Rationals.one(), vec![0, 0])] };
        algebra_from_relations(Field::Rationals, &q, vec![rel], 10).unwrap()
    }

    #[test]
    fn dual_numbers_report_is_definitive_and_stable() {
        let a = dual_numbers();
        let r1 = analyze_algebra(&a, Field::Rationals, 20, 7);
        let r2 = analyze_algebra(&a, Field::Rationals, 20, 7);
        assert_eq!(r1.exit_code(), 0);
        assert_eq!(r1.render_text(), r2.render_text());
        assert_eq!(r1.render_json(), r2.render_json());
        assert_eq!(r1.ig.d, Some(0));
        assert_eq!(r1.g.as_ref().unwrap().g, -1);
        assert_eq!(r1.asid, Some((0, 0)));
        assert_eq!(r1.verdict.tilting, Some(true));
        let gamma = r1.gamma.as_ref().unwrap();
        assert_eq!(gamma.dim, 1);
        assert_eq!(gamma.gldim, Some(0));
    }

    #[test]
    fn ppalg_report_on_a2() {
        let q = Quiver::new(2, vec![Arrow { name: "a".into(), from: 0, to: 1, degree: 0 }])
            .unwrap();
        let r = analyze_ppalg(Field::Rationals, &q, &[1, 0], 20, 7).unwrap();
        assert!(r.word.reduced);
        assert_eq!(r.word.root_height_total, Some(3));
        assert_eq!(r.reflected.verdict.tilting, Some(true));
        assert_eq!(r.exit_code(), 0);
        assert!(r.render_text().contains("tilting: yes"));
    }

    #[test]
    fn non_reduced_word_is_an_error() {
        let q = Quiver::new(2, vec![Arrow { name: "a".into(), from: 0, to: 1, degree: 0 }])
            .unwrap();
        let err = analyze_ppalg(Field::Rationals, &q, &[0, 0], 20, 7).unwrap_err();
        assert!(err.to_string().contains("not reduced"));
    }
}
