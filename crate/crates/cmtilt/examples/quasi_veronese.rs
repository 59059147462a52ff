//! The quasi-Veronese algebra A^[ℓ]: the trivial extension of the Beilinson
//! algebra ∇A by the bimodule ΔA, squashing the grading so that A^[ℓ] lives
//! in degrees 0 and 1. It is graded Morita equivalent to A, and g tracks
//! the squashing: (g(A^[ℓ]) − 1)ℓ < g(A) ≤ g(A^[ℓ])·ℓ.
//!
//! ```bash
//! cargo run --example quasi_veronese
//! ```

use cmtilt::algebra::{algebra_from_relations, beilinson_algebra, quasi_veronese, Relation};
use cmtilt::homology::{g_of_algebra, ig_report};
use cmtilt::quiver::{Arrow, Quiver};
use cmtilt::{Field, Result};
use std::sync::Arc;

fn main() -> Result<()> {
    let f = Field::Rationals;
    // k[x]/(x³) with x in degree 1: ℓ = 2
    let q = Quiver::new(1, vec![Arrow { name: "x".into(), from: 0, to: 0, degree: 1 }])?;
    let a = algebra_from_relations(f, &q, vec![Relation { terms: vec![(f.one(), vec![0, 0, 0])] }], 8)?;
    println!("A = k[x]/(x³), dim {}, ell {}", a.dim(), a.ell);

    let nabla = beilinson_algebra(&a)?;
    println!("Beilinson algebra ∇A: dim {}, {} vertices", nabla.dim(), nabla.num_vertices);

    let qv = quasi_veronese(&a)?;
    println!("quasi-Veronese A^[ℓ]: dim {} (= ℓ·dim A), ell {}", qv.dim(), qv.ell);
    print!("  dims by degree:");
    for (d, n) in qv.dims_by_degree() {
        print!(" {d}:{n}");
    }
    println!();

    // both sides are IG and the g-inequality is sharp here
    let ig_a = ig_report(&a, 20);
    let ig_qv = ig_report(&qv, 20);
    println!("A is {:?}-IG, A^[ℓ] is {:?}-IG", ig_a.ig_dimension(), ig_qv.ig_dimension());

    let op_a = Arc::new(a.opposite());
    let op_qv = Arc::new(qv.opposite());
    let ga = g_of_algebra(&a, &op_a, 20, 0)?;
    let gqv = g_of_algebra(&qv, &op_qv, 20, 0)?;
    let ell = a.ell;
    println!("g(A) = {}, g(A^[ℓ]) = {}", ga.value, gqv.value);
    println!(
        "inequality ({} - 1)·{} < {} <= {}·{}: {}",
        gqv.value,
        ell,
        ga.value,
        gqv.value,
        ell,
        (gqv.value - 1) * ell < ga.value && ga.value <= gqv.value * ell
    );
    Ok(())
}
