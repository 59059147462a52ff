//! Iwanaga-Gorenstein certification and the graded invariants attached to
//! it: the injective dimension on both sides, the invariant g(A), asid
//! numbers, and the three checkable criteria for g(A) ≤ 0 on 1-IG algebras.
//!
//! ```bash
//! cargo run --example gorenstein_invariants
//! ```

use cmtilt::algebra::{algebra_from_relations, Relation};
use cmtilt::homology::{asid_numbers, g_le_zero_criteria, g_of_algebra, ig_report};
use cmtilt::quiver::{Arrow, Quiver};
use cmtilt::{Field, Result};
use std::sync::Arc;

fn dual_numbers(f: Field) -> Result<Arc<cmtilt::algebra::GradedAlgebra>> {
    let q = Quiver::new(1, vec![Arrow { name: "x".into(), from: 0, to: 0, degree: 1 }])?;
    let relations = vec![Relation { terms: vec![(f.one(), vec![0, 0])] }];
    algebra_from_relations(f, &q, relations, 8)
}

fn main() -> Result<()> {
    let f = Field::Rationals;

    // k[x]/(x²) with x in degree 1: self-injective, so 0-IG
    let a = dual_numbers(f)?;
    let op = Arc::new(a.opposite());
    let ig = ig_report(&a, 20);
    println!("k[x]/(x²): idim right {:?}, left {:?}", ig.right, ig.left);
    println!("  certified {:?}-IG", ig.ig_dimension());
    let g = g_of_algebra(&a, &op, 20, 0)?;
    let gop = g_of_algebra(&op, &a, 20, 0)?;
    println!("  g(A) = {} (exact: {}), g(A^op) = {}", g.value, g.exact, gop.value);
    println!("  asid numbers (alpha_r, alpha_l) = {:?}", asid_numbers(&a, 20, 0)?);

    // a 1-IG example: A_2 path algebra with the arrow in degree 1
    let q = Quiver::new(2, vec![Arrow { name: "a".into(), from: 0, to: 1, degree: 1 }])?;
    let b = algebra_from_relations(f, &q, Vec::new(), 8)?;
    let bop = Arc::new(b.opposite());
    let ig = ig_report(&b, 20);
    println!("kA2 (arrow degree 1): certified {:?}-IG", ig.ig_dimension());
    let g = g_of_algebra(&b, &bop, 20, 0)?;
    println!("  g(A) = {} (exact: {})", g.value, g.exact);

    // the three sufficient tests for g(A) ≤ 0 on a 1-IG algebra:
    //  (a) Hom_{A0^op}(A_{>0}, A0) = 0
    //  (b) Hom_{A0}(A_{>0}, A0) = 0 and gldim A0 < ∞
    //  (c) gldim A0 = 1 and A_{>0} has no projective summand over A0
    let crit = g_le_zero_criteria(&b, 20, 0)?;
    println!(
        "  g <= 0 criteria: (a) {} (b) {} (c) {} -> any: {}",
        crit.criterion_a,
        crit.criterion_b,
        crit.criterion_c,
        crit.any()
    );
    Ok(())
}
