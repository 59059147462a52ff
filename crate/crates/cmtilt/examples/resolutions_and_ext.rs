//! Minimal graded projective resolutions, syzygies, Ext groups with their
//! internal-degree grading, injective resolutions through the duality with
//! A^op, and global dimension.
//!
//! ```bash
//! cargo run --example resolutions_and_ext
//! ```

use cmtilt::algebra::{algebra_from_relations, Relation};
use cmtilt::homology::{
    ext_table, gldim, injective_resolution_terms, resolve, syzygy,
};
use cmtilt::module::{regular, simple};
use cmtilt::quiver::{Arrow, Quiver};
use cmtilt::{Field, Result};
use std::sync::Arc;

fn main() -> Result<()> {
    let f = Field::Rationals;
    // A_3 with a zero relation: gldim 2
    let q = Quiver::new(
        3,
        vec![
            Arrow { name: "a".into(), from: 0, to: 1, degree: 0 },
            Arrow { name: "b".into(), from: 1, to: 2, degree: 0 },
        ],
    )?;
    let relations = vec![Relation { terms: vec![(f.one(), vec![0, 1])] }];
    let a = algebra_from_relations(f, &q, relations, 16)?;

    // resolve the simple at vertex 1: 0 <- S1 <- e1A <- e2A <- e3A <- 0
    let s1 = simple(&a, 0, 0);
    let res = resolve(&s1, 10);
    for (n, term) in res.covers.iter().enumerate() {
        let slots: Vec<String> = term
            .free
            .slots
            .iter()
            .map(|s| format!("e{}A({})", s.vertex + 1, -s.gen_deg))
            .collect();
        println!("P{n} = {}", slots.join(" ⊕ "));
    }
    println!("pdim S1 = {:?}", res.pdim());
    println!("gldim A = {:?}", gldim(&a, 10));

    // Ext^n(S1, S3) detects the zero relation in degree 0
    let s3 = simple(&a, 2, 0);
    for n in 0..=3 {
        let table = ext_table(&res, n, &s3);
        println!("Ext^{n}(S1, S3) dims by internal degree: {table:?}");
    }

    // syzygy of S1 is the radical of its projective cover
    println!("Ω(S1) shape: {}", syzygy(&s1).shape_string());

    // injective resolutions go through the duality with the opposite algebra
    let op = Arc::new(a.opposite());
    let (terms, complete) = injective_resolution_terms(&regular(&a), &op, 10);
    for (n, term) in terms.iter().enumerate() {
        let slots: Vec<String> =
            term.iter().map(|(v, d)| format!("I{}({})", v + 1, d)).collect();
        println!("I^{n} = {}", slots.join(" ⊕ "));
    }
    println!("injective resolution complete: {complete}");
    Ok(())
}
