//! Build a finite-dimensional graded algebra from a quiver with relations
//! and inspect its basic structure: dimensions by degree and vertex, Loewy
//! series of the projectives, and a recovered presentation.
//!
//! The algebra here has a degree-1 loop at vertex 1 and a two-cycle between
//! vertices 1 and 2, with the loop squaring to the cycle.
//!
//! ```bash
//! cargo run --example algebra_from_quiver
//! ```

use cmtilt::algebra::{algebra_from_relations, presentation, Relation};
use cmtilt::module::{loewy_layers, projective};
use cmtilt::quiver::{Arrow, Quiver};
use cmtilt::{Field, Result};

fn main() -> Result<()> {
    let f = Field::Rationals;
    let q = Quiver::new(
        2,
        vec![
            Arrow { name: "a".into(), from: 0, to: 0, degree: 1 },
            Arrow { name: "b".into(), from: 0, to: 1, degree: 0 },
            Arrow { name: "c".into(), from: 1, to: 0, degree: 2 },
        ],
    )?;
    // a² = bc, ab = 0, cb = 0, ca = 0  (paths read left to right)
    let relations = vec![
        Relation { terms: vec![(f.one(), vec![0, 0]), (f.from_i64(-1), vec![1, 2])] },
        Relation { terms: vec![(f.one(), vec![0, 1])] },
        Relation { terms: vec![(f.one(), vec![2, 1])] },
        Relation { terms: vec![(f.one(), vec![2, 0])] },
    ];
    let a = algebra_from_relations(f, &q, relations, 64)?;

    println!("total dimension: {}", a.dim());
    print!("dims by degree:");
    for (d, n) in a.dims_by_degree() {
        print!(" {d}:{n}");
    }
    println!();
    println!("top degree (ell): {}", a.ell);

    for v in 0..a.num_vertices {
        let p = projective(&a, v, 0);
        println!("e{}A: dim {}, shape {}", v + 1, p.total_dim(), p.shape_string());
        for (level, layer) in loewy_layers(&p).iter().enumerate() {
            let factors: Vec<String> = layer
                .iter()
                .map(|(&(d, vx), &mult)| {
                    let s = format!("S{}({})", vx + 1, d);
                    if mult > 1 { format!("{s}^{mult}") } else { s }
                })
                .collect();
            println!("  loewy layer {level}: {}", factors.join(" "));
        }
    }

    // recover a quiver-with-relations presentation from the multiplication
    let pres = presentation(&a)?;
    println!("recovered arrows:");
    for arrow in &pres.quiver.arrows {
        println!(
            "  {}: {} -> {} (degree {})",
            arrow.name,
            arrow.from + 1,
            arrow.to + 1,
            arrow.degree
        );
    }
    println!("recovered relations: {}", pres.relation_strings.join(", "));
    Ok(())
}
