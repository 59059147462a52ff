//! The JSON document format shared by the library and the `cmtilt` CLI:
//! a field, a quiver, and either explicit `relations` or a `coxeter_word`.
//! Documents parse into the same algebras the other examples build by hand,
//! and drive the text/JSON analysis reports.
//!
//! ```bash
//! cargo run --example input_documents
//! ```

use cmtilt::input::InputDocument;
use cmtilt::report::analyze_algebra;
use cmtilt::Result;

const RELATIONS_DOC: &str = r#"{
  "field": "Q",
  "quiver": {
    "vertices": 1,
    "arrows": [ { "name": "x", "from": 1, "to": 1, "degree": 1 } ]
  },
  "relations": [
    [ { "coef": "1", "path": ["x", "x"] } ]
  ],
  "seed": 7
}"#;

const WORD_DOC: &str = r#"{
  "field": "F2",
  "quiver": {
    "vertices": 2,
    "arrows": [ { "name": "a", "from": 1, "to": 2 } ]
  },
  "coxeter_word": [2, 1]
}"#;

fn main() -> Result<()> {
    // a quiver-with-relations document: vertices and arrows are 1-based,
    // coefficients are strings parsed in the document's field
    let doc = InputDocument::from_str(RELATIONS_DOC)?;
    let field = doc.field(None)?;
    let a = doc.build_algebra(field, 64)?;
    println!("parsed algebra: dim {}, ell {}", a.dim(), a.ell);

    // the same full report the CLI emits (text or JSON)
    let report = analyze_algebra(&a, field, 40, 7);
    print!("{}", report.render_text());
    println!("exit code would be: {}", report.exit_code());

    // a Coxeter-word document instead carries `coxeter_word` (1-based)
    let doc = InputDocument::from_str(WORD_DOC)?;
    let q = doc.build_quiver()?;
    let letters = doc.word()?;
    println!(
        "word document: {} vertices, letters {:?} (0-based)",
        q.vertices, letters
    );
    Ok(())
}
