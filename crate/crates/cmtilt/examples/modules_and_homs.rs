//! Graded modules: projectives, simples, shifts, graded duals, Hom spaces
//! in degree zero, and Krull-Schmidt decomposition with certified
//! indecomposability.
//!
//! ```bash
//! cargo run --example modules_and_homs
//! ```

use cmtilt::algebra::{algebra_from_relations, Relation};
use cmtilt::module::{
    decompose, direct_sum, dual, hom0, iso_test, projective, simple, IndecStatus,
};
use cmtilt::quiver::{Arrow, Quiver};
use cmtilt::{Field, Result};
use std::sync::Arc;

fn main() -> Result<()> {
    let f = Field::Fp(5);
    // commutative square with both paths identified, arrows in degree 1
    let q = Quiver::new(
        4,
        vec![
            Arrow { name: "a".into(), from: 0, to: 1, degree: 1 },
            Arrow { name: "b".into(), from: 0, to: 2, degree: 1 },
            Arrow { name: "c".into(), from: 1, to: 3, degree: 1 },
            Arrow { name: "d".into(), from: 2, to: 3, degree: 1 },
        ],
    )?;
    let relations =
        vec![Relation { terms: vec![(f.one(), vec![0, 2]), (f.from_i64(-1), vec![1, 3])] }];
    let a = algebra_from_relations(f, &q, relations, 64)?;
    let op = Arc::new(a.opposite());

    let p1 = projective(&a, 0, 0);
    let s4 = simple(&a, 3, 2);
    println!("e1A shape: {}", p1.shape_string());
    println!("S4(2) shape: {}", s4.shape_string());

    // Hom(e1A, M)_0 always matches the degree-0, vertex-1 slice of M
    println!("dim Hom(e1A, e1A)_0 = {}", hom0(&p1, &p1).len());
    println!("dim Hom(e1A, S4(2))_0 = {}", hom0(&p1, &s4).len());

    // shifting: M(n)_i = M_{i+n}
    let shifted = p1.shift(2);
    println!("e1A(2) shape: {}", shifted.shape_string());

    // the graded dual is a module over the opposite algebra
    let d = dual(&p1, &op);
    println!("D(e1A) shape over A^op: {}", d.shape_string());

    // decompose a deliberately scrambled direct sum
    let m = direct_sum(&[&p1, &s4, &p1, &simple(&a, 1, 1)]).normalized();
    let dec = decompose(&m, 11);
    println!("decomposing a sum of dim {}:", m.total_dim());
    for (piece, status) in &dec.pieces {
        println!(
            "  summand {} ({})",
            piece.shape_string(),
            match status {
                IndecStatus::Certified => "indecomposable, certified",
                _ => "uncertified",
            }
        );
    }
    let p1_again = dec.pieces.iter().filter(|(m, _)| iso_test(m, &p1, 3)).count();
    println!("summands isomorphic to e1A: {p1_again}");
    Ok(())
}
